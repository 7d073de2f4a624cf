//! Statement-level structure of a method body and the path/decision/NCSS
//! counts derived from it.

use super::lexer::{matching_close, Token, TokenKind};

/// One statement of a method body.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Stmt {
    /// Expression, declaration, return, throw, break, ... with the number of
    /// `?`, `&&` and `||` operators it contains.
    Simple {
        decisions: u32,
    },
    /// A lone `;`.
    Empty,
    /// Local class declaration; opaque.
    LocalClass,
    Block(Vec<Stmt>),
    If {
        cond_decisions: u32,
        then: Box<Stmt>,
        otherwise: Option<Box<Stmt>>,
    },
    Loop {
        cond_decisions: u32,
        body: Box<Stmt>,
    },
    Switch {
        cond_decisions: u32,
        groups: Vec<SwitchGroup>,
    },
    Try {
        body: Vec<Stmt>,
        catches: Vec<Vec<Stmt>>,
        finally: Option<Vec<Stmt>>,
    },
    /// `synchronized (...) { }`
    Synchronized(Vec<Stmt>),
}

/// The statements following one `case` or `default` label.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SwitchGroup {
    pub is_default: bool,
    pub body: Vec<Stmt>,
}

/// Per-switch counts used by the switch-density rule.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct SwitchCounts {
    pub labels: u32,
    pub statements: u32,
}

/// Acyclic execution paths through a sequence of statements: sequential
/// composition multiplies.
pub fn compose_npath(body: &[Stmt]) -> u64 {
    body.iter().fold(1u64, |acc, s| acc.saturating_mul(s.npath()))
}

impl Stmt {
    pub fn npath(&self) -> u64 {
        match self {
            Stmt::Simple { .. } | Stmt::Empty | Stmt::LocalClass => 1,
            Stmt::Block(body) | Stmt::Synchronized(body) => compose_npath(body),
            Stmt::If { then, otherwise, .. } => {
                let alt = otherwise.as_ref().map_or(1, |s| s.npath());
                then.npath().saturating_add(alt)
            }
            Stmt::Loop { body, .. } => body.npath().saturating_add(1),
            Stmt::Switch { groups, .. } => {
                let has_default = groups.iter().any(|g| g.is_default);
                let sum = groups
                    .iter()
                    .fold(0u64, |acc, g| acc.saturating_add(compose_npath(&g.body)));
                sum.saturating_add(u64::from(!has_default))
            }
            Stmt::Try { body, catches, finally } => {
                let handled = catches
                    .iter()
                    .fold(compose_npath(body), |acc, c| acc.saturating_add(compose_npath(c)));
                handled.saturating_mul(finally.as_deref().map_or(1, compose_npath))
            }
        }
    }

    /// Decision points: `if`, loops, `case`, `catch`, plus `?`, `&&`, `||`.
    pub fn decisions(&self) -> u32 {
        self.branch_decisions() + self.operator_decisions()
    }

    /// Decision points contributed by branching statements only.
    pub fn branch_decisions(&self) -> u32 {
        match self {
            Stmt::Simple { .. } | Stmt::Empty | Stmt::LocalClass => 0,
            Stmt::Block(b) | Stmt::Synchronized(b) => b.iter().map(Stmt::branch_decisions).sum(),
            Stmt::If { then, otherwise, .. } => {
                1 + then.branch_decisions() + otherwise.as_ref().map_or(0, |s| s.branch_decisions())
            }
            Stmt::Loop { body, .. } => 1 + body.branch_decisions(),
            Stmt::Switch { groups, .. } => groups
                .iter()
                .map(|g| u32::from(!g.is_default) + g.body.iter().map(Stmt::branch_decisions).sum::<u32>())
                .sum(),
            Stmt::Try { body, catches, finally } => {
                let inner: u32 = body
                    .iter()
                    .chain(catches.iter().flatten())
                    .chain(finally.iter().flatten())
                    .map(Stmt::branch_decisions)
                    .sum();
                inner + catches.len() as u32
            }
        }
    }

    fn operator_decisions(&self) -> u32 {
        let sum = |b: &[Stmt]| b.iter().map(Stmt::operator_decisions).sum::<u32>();
        match self {
            Stmt::Simple { decisions } => *decisions,
            Stmt::Empty | Stmt::LocalClass => 0,
            Stmt::Block(b) | Stmt::Synchronized(b) => sum(b),
            Stmt::If {
                cond_decisions,
                then,
                otherwise,
            } => cond_decisions + then.operator_decisions() + otherwise.as_ref().map_or(0, |s| s.operator_decisions()),
            Stmt::Loop { cond_decisions, body } => cond_decisions + body.operator_decisions(),
            Stmt::Switch { cond_decisions, groups } => {
                cond_decisions + groups.iter().map(|g| sum(&g.body)).sum::<u32>()
            }
            Stmt::Try { body, catches, finally } => {
                sum(body) + catches.iter().map(|c| sum(c)).sum::<u32>() + finally.as_deref().map_or(0, sum)
            }
        }
    }

    /// Non-commenting source statements: one per simple statement and one
    /// per control header (`if`, `else`, loops, `switch`, `try`, `catch`,
    /// `finally`, `synchronized`). Labels and bare blocks count nothing.
    pub fn ncss(&self) -> u32 {
        let sum = |b: &[Stmt]| b.iter().map(Stmt::ncss).sum::<u32>();
        match self {
            Stmt::Simple { .. } | Stmt::LocalClass => 1,
            Stmt::Empty => 0,
            Stmt::Block(b) => sum(b),
            Stmt::Synchronized(b) => 1 + sum(b),
            Stmt::If { then, otherwise, .. } => 1 + then.ncss() + otherwise.as_ref().map_or(0, |s| 1 + s.ncss()),
            Stmt::Loop { body, .. } => 1 + body.ncss(),
            Stmt::Switch { groups, .. } => 1 + groups.iter().map(|g| sum(&g.body)).sum::<u32>(),
            Stmt::Try { body, catches, finally } => {
                1 + sum(body)
                    + catches.iter().map(|c| 1 + sum(c)).sum::<u32>()
                    + finally.as_deref().map_or(0, |f| 1 + sum(f))
            }
        }
    }

    /// Label and statement counts of every switch, outermost first.
    pub fn collect_switches(&self, out: &mut Vec<SwitchCounts>) {
        match self {
            Stmt::Simple { .. } | Stmt::Empty | Stmt::LocalClass => {}
            Stmt::Block(b) | Stmt::Synchronized(b) => b.iter().for_each(|s| s.collect_switches(out)),
            Stmt::If { then, otherwise, .. } => {
                then.collect_switches(out);
                if let Some(o) = otherwise {
                    o.collect_switches(out);
                }
            }
            Stmt::Loop { body, .. } => body.collect_switches(out),
            Stmt::Switch { groups, .. } => {
                out.push(SwitchCounts {
                    labels: groups.len() as u32,
                    statements: groups.iter().flat_map(|g| &g.body).map(Stmt::ncss).sum(),
                });
                groups
                    .iter()
                    .flat_map(|g| &g.body)
                    .for_each(|s| s.collect_switches(out));
            }
            Stmt::Try { body, catches, finally } => body
                .iter()
                .chain(catches.iter().flatten())
                .chain(finally.iter().flatten())
                .for_each(|s| s.collect_switches(out)),
        }
    }
}

/// Count `?`, `&&` and `||` in `tokens`, skipping brace groups (lambda and
/// anonymous-class bodies) and generic wildcards.
pub fn count_operator_decisions(tokens: &[Token<'_>]) -> u32 {
    let mut n = 0;
    let mut i = 0;
    while i < tokens.len() {
        let t = &tokens[i];
        if t.kind == TokenKind::Punct {
            match t.text {
                "{" => {
                    i = matching_close(tokens, i).map_or(tokens.len(), |c| c + 1);
                    continue;
                }
                "&&" | "||" => n += 1,
                "?" => {
                    let wildcard = tokens
                        .get(i + 1)
                        .is_some_and(|nx| matches!(nx.text, "extends" | "super" | ">" | ","));
                    if !wildcard {
                        n += 1;
                    }
                }
                _ => {}
            }
        }
        i += 1;
    }
    n
}

/// Recursive-descent reader turning a method body's tokens into [`Stmt`]s.
pub struct StmtParser<'t, 'a> {
    toks: &'t [Token<'a>],
    pos: usize,
}

impl<'t, 'a> StmtParser<'t, 'a> {
    pub fn new(toks: &'t [Token<'a>]) -> Self {
        Self { toks, pos: 0 }
    }

    /// Parse the whole slice as a statement sequence.
    pub fn parse_all(mut self) -> Vec<Stmt> {
        let mut out = Vec::new();
        while self.pos < self.toks.len() {
            let before = self.pos;
            out.push(self.statement());
            if self.pos == before {
                self.pos += 1;
            }
        }
        out
    }

    fn peek(&self) -> Option<&Token<'a>> {
        self.toks.get(self.pos)
    }

    fn peek_is(&self, text: &str) -> bool {
        self.peek().is_some_and(|t| t.is(text))
    }

    fn bump(&mut self) {
        self.pos += 1;
    }

    /// Skip a balanced group starting at the current token, returning the
    /// tokens strictly inside it.
    fn group(&mut self) -> &'t [Token<'a>] {
        if self.pos >= self.toks.len() {
            return &[];
        }
        let open = self.pos;
        let close = matching_close(self.toks, open).unwrap_or(self.toks.len());
        self.pos = (close + 1).min(self.toks.len());
        &self.toks[(open + 1).min(close)..close]
    }

    fn paren_decisions(&mut self) -> u32 {
        if self.peek_is("(") {
            count_operator_decisions(self.group())
        } else {
            0
        }
    }

    fn block_body(&mut self) -> Vec<Stmt> {
        if self.peek_is("{") {
            StmtParser::new(self.group()).parse_all()
        } else {
            vec![self.statement()]
        }
    }

    fn boxed_statement(&mut self) -> Box<Stmt> {
        if self.pos >= self.toks.len() {
            return Box::new(Stmt::Empty);
        }
        Box::new(self.statement())
    }

    fn statement(&mut self) -> Stmt {
        let Some(tok) = self.peek() else {
            return Stmt::Empty;
        };
        if tok.kind == TokenKind::Punct {
            match tok.text {
                "{" => return Stmt::Block(StmtParser::new(self.group()).parse_all()),
                ";" => {
                    self.bump();
                    return Stmt::Empty;
                }
                _ => return self.simple(),
            }
        }
        if tok.kind != TokenKind::Ident {
            return self.simple();
        }
        match tok.text {
            "if" => {
                self.bump();
                let cond_decisions = self.paren_decisions();
                let then = self.boxed_statement();
                let otherwise = if self.peek_is("else") {
                    self.bump();
                    Some(self.boxed_statement())
                } else {
                    None
                };
                Stmt::If {
                    cond_decisions,
                    then,
                    otherwise,
                }
            }
            "while" | "for" => {
                self.bump();
                let cond_decisions = self.paren_decisions();
                let body = self.boxed_statement();
                Stmt::Loop { cond_decisions, body }
            }
            "do" => {
                self.bump();
                let body = self.boxed_statement();
                let mut cond_decisions = 0;
                if self.peek_is("while") {
                    self.bump();
                    cond_decisions = self.paren_decisions();
                }
                if self.peek_is(";") {
                    self.bump();
                }
                Stmt::Loop { cond_decisions, body }
            }
            "switch" => {
                self.bump();
                let cond_decisions = self.paren_decisions();
                let groups = if self.peek_is("{") {
                    let inner = self.group();
                    parse_switch_groups(inner)
                } else {
                    Vec::new()
                };
                Stmt::Switch { cond_decisions, groups }
            }
            "try" => {
                self.bump();
                if self.peek_is("(") {
                    self.group();
                }
                let body = self.block_body();
                let mut catches = Vec::new();
                while self.peek_is("catch") {
                    self.bump();
                    if self.peek_is("(") {
                        self.group();
                    }
                    catches.push(self.block_body());
                }
                let finally = if self.peek_is("finally") {
                    self.bump();
                    Some(self.block_body())
                } else {
                    None
                };
                Stmt::Try { body, catches, finally }
            }
            "synchronized" if self.toks.get(self.pos + 1).is_some_and(|t| t.is("(")) => {
                self.bump();
                self.group();
                Stmt::Synchronized(self.block_body())
            }
            "class" | "interface" | "enum" => self.local_class(),
            "abstract" | "final" | "static" | "strictfp"
                if self.toks[self.pos..]
                    .iter()
                    .take_while(|t| t.is_ident())
                    .any(|t| matches!(t.text, "class" | "interface" | "enum")) =>
            {
                self.local_class()
            }
            "else" => {
                // stray else: treat its statement as a block
                self.bump();
                Stmt::Block(vec![self.statement()])
            }
            _ => {
                // labeled statement `name:`
                if self.toks.get(self.pos + 1).is_some_and(|t| t.is(":")) {
                    self.pos += 2;
                    return self.statement();
                }
                self.simple()
            }
        }
    }

    fn local_class(&mut self) -> Stmt {
        while let Some(t) = self.peek() {
            if t.is("{") {
                self.group();
                break;
            }
            if t.is(";") {
                self.bump();
                break;
            }
            self.bump();
        }
        Stmt::LocalClass
    }

    /// Tokens up to and including the terminating `;`, with brace groups
    /// (lambdas, anonymous classes, array initializers) skipped.
    fn simple(&mut self) -> Stmt {
        let start = self.pos;
        while let Some(t) = self.peek() {
            if t.kind == TokenKind::Punct {
                match t.text {
                    ";" => {
                        self.bump();
                        break;
                    }
                    "{" | "(" | "[" => {
                        self.group();
                        continue;
                    }
                    // a closing token here means we ran past our slice
                    "}" | ")" | "]" => {
                        self.bump();
                        break;
                    }
                    _ => {}
                }
            }
            self.bump();
        }
        Stmt::Simple {
            decisions: count_operator_decisions(&self.toks[start..self.pos]),
        }
    }
}

fn parse_switch_groups(toks: &[Token<'_>]) -> Vec<SwitchGroup> {
    let mut groups: Vec<SwitchGroup> = Vec::new();
    let mut i = 0;
    let mut pending: Option<(bool, usize)> = None; // (is_default, body start)

    let finish = |groups: &mut Vec<SwitchGroup>, pending: Option<(bool, usize)>, end: usize| {
        if let Some((is_default, start)) = pending {
            groups.push(SwitchGroup {
                is_default,
                body: StmtParser::new(&toks[start..end]).parse_all(),
            });
        }
    };

    while i < toks.len() {
        let t = &toks[i];
        if t.is("case") || t.is("default") {
            finish(&mut groups, pending.take(), i);
            let is_default = t.is("default");
            // label runs to `:` or `->` outside nested groups
            let mut j = i + 1;
            let mut arrow = false;
            while j < toks.len() {
                let tj = &toks[j];
                if tj.is("(") || tj.is("{") || tj.is("[") {
                    j = matching_close(toks, j).unwrap_or(toks.len());
                } else if tj.is(":") {
                    break;
                } else if tj.is("->") {
                    arrow = true;
                    break;
                }
                j += 1;
            }
            let body_start = (j + 1).min(toks.len());
            if arrow {
                // exactly one statement follows an arrow label
                let mut p = StmtParser::new(&toks[body_start..]);
                let stmt = p.statement();
                let consumed = p.pos.max(1);
                groups.push(SwitchGroup {
                    is_default,
                    body: vec![stmt],
                });
                i = body_start + consumed;
            } else {
                pending = Some((is_default, body_start));
                i = body_start;
                // advance over the body to the next label at this level
                while i < toks.len() && !(toks[i].is("case") || toks[i].is("default")) {
                    if toks[i].is("{") || toks[i].is("(") || toks[i].is("[") {
                        i = matching_close(toks, i).map_or(toks.len(), |c| c + 1);
                    } else {
                        i += 1;
                    }
                }
            }
            continue;
        }
        i += 1;
    }
    finish(&mut groups, pending, toks.len());
    groups
}
