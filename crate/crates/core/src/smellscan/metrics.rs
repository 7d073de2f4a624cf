//! Structural metrics for Java-like source: classes and methods are found by
//! keywords and brace matching, not by a full grammar.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use super::lexer::{self, is_keyword, matching_close, Token, TokenKind, MODIFIERS};
use super::npath::{compose_npath, Stmt, StmtParser, SwitchCounts};
use crate::Diagnostic;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MethodMetrics {
    pub name: String,
    pub is_constructor: bool,
    pub is_public: bool,
    pub param_count: u32,
    pub line_count: u32,
    /// Non-commenting source statements, including one for the declaration.
    pub ncss: u32,
    pub decision_points: u32,
    pub npath: u64,
    pub switch_statement_count: u32,
    pub switch_label_count: u32,
    /// Statements in the body (NCSS without the declaration).
    pub statement_count: u32,
    pub switches: Vec<SwitchCounts>,
    pub is_accessor: bool,
}

impl MethodMetrics {
    pub fn cyclomatic(&self) -> u32 {
        self.decision_points + 1
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ClassMetrics {
    pub name: String,
    pub is_abstract: bool,
    /// Methods, not counting constructors.
    pub method_count: u32,
    /// Declared fields, not counting `static final` constants.
    pub field_count: u32,
    /// Public methods, constructors and fields (constants included).
    pub public_member_count: u32,
    pub line_count: u32,
    pub ncss: u32,
    pub accessor_ratio: f64,
    pub unique_coupled_types: u32,
    pub methods: Vec<MethodMetrics>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FileMetrics {
    pub file_path: String,
    pub package_name: Option<String>,
    /// Distinct import statements.
    pub import_count: u32,
    pub imported_packages: BTreeSet<String>,
    pub classes: Vec<ClassMetrics>,
    #[serde(skip)]
    pub diagnostics: Vec<Diagnostic>,
}

/// Scan already stripped source (see
/// [`strip_comments_and_strings`](super::strip_comments_and_strings)).
pub fn scan_metrics(cleaned_source: &str, file_path: &str) -> FileMetrics {
    let toks = lexer::tokenize(cleaned_source);
    let mut scanner = Scanner {
        toks: &toks,
        classes: Vec::new(),
        diagnostics: Vec::new(),
        file_path,
    };

    let mut package_name = None;
    let mut imports = BTreeSet::new();
    let mut imported_packages = BTreeSet::new();
    let mut i = 0;
    while i < toks.len() {
        let t = &toks[i];
        if t.is("package") && package_name.is_none() && scanner.top_level_start(i) {
            let (name, end) = dotted_name(&toks, i + 1);
            package_name = Some(name);
            i = end;
            continue;
        }
        if t.is("import") && scanner.top_level_start(i) {
            let mut j = i + 1;
            if toks.get(j).is_some_and(|t| t.is("static")) {
                j += 1;
            }
            let (name, end) = dotted_name(&toks, j);
            if !name.is_empty() {
                let pkg = match name.rsplit_once('.') {
                    Some((pkg, _)) => pkg.to_string(),
                    None => name.clone(),
                };
                imported_packages.insert(pkg);
                imports.insert(name);
            }
            i = end;
            continue;
        }
        if is_type_keyword(&toks, i) {
            i = scanner.class(i);
            continue;
        }
        if t.is("{") {
            // stray block outside any type
            i = matching_close(&toks, i).map_or(toks.len(), |c| c + 1);
            continue;
        }
        i += 1;
    }

    if toks.iter().filter(|t| t.is("{")).count() != toks.iter().filter(|t| t.is("}")).count() {
        scanner.diagnostics.push(Diagnostic::new(
            file_path,
            "unbalanced braces; metrics cover the balanced prefix",
        ));
    }

    FileMetrics {
        file_path: file_path.to_string(),
        package_name,
        import_count: imports.len() as u32,
        imported_packages,
        classes: scanner.classes,
        diagnostics: scanner.diagnostics,
    }
}

fn dotted_name(toks: &[Token<'_>], start: usize) -> (String, usize) {
    let mut name = String::new();
    let mut j = start;
    while j < toks.len() && !toks[j].is(";") {
        if toks[j].is_ident() || toks[j].is(".") || toks[j].is("*") {
            name.push_str(toks[j].text);
        } else {
            break;
        }
        j += 1;
    }
    let name = name.trim_end_matches(".*").to_string();
    while j < toks.len() && !toks[j].is(";") {
        j += 1;
    }
    (name, j + 1)
}

/// `class`, `interface`, `enum`, `record` or `@interface` starting a type
/// declaration at `i`.
fn is_type_keyword(toks: &[Token<'_>], i: usize) -> bool {
    let t = &toks[i];
    let prev_dot = i > 0 && toks[i - 1].is(".");
    if prev_dot || !t.is_ident() {
        return false;
    }
    let next_ident = toks.get(i + 1).is_some_and(|n| n.is_ident() && !is_keyword(n.text));
    match t.text {
        "class" | "interface" | "enum" => next_ident,
        // contextual keyword: `record Name(`
        "record" => next_ident && toks.get(i + 2).is_some_and(|n| n.is("(") || n.is("<")),
        _ => false,
    }
}

/// One member of a class body, as a token range.
struct Member {
    /// Header tokens: modifiers, type, name, parameter list (annotations removed).
    header: Vec<usize>,
    terminator: Terminator,
    /// Index of the token that starts the member (for line counting).
    first: usize,
    /// Index of the last token of the member.
    last: usize,
}

enum Terminator {
    /// `;` right after the header.
    Semicolon,
    /// `=` initializer; member runs to the `;`.
    Initializer { from: usize },
    /// `{ ... }` body with open/close indices.
    Body { open: usize, close: usize },
}

struct Scanner<'t, 'a> {
    toks: &'t [Token<'a>],
    classes: Vec<ClassMetrics>,
    diagnostics: Vec<Diagnostic>,
    file_path: &'t str,
}

struct MethodDraft {
    metrics: MethodMetrics,
    params: Vec<String>,
    body: Option<(usize, usize)>,
}

impl<'t, 'a> Scanner<'t, 'a> {
    /// Whether `i` begins a statement at file level (previous token ends one).
    fn top_level_start(&self, i: usize) -> bool {
        i == 0 || matches!(self.toks[i - 1].text, ";" | "}" | "{")
    }

    fn line(&self, i: usize) -> usize {
        self.toks[i.min(self.toks.len() - 1)].line
    }

    /// Parse a type declaration whose keyword is at `kw`; returns the index
    /// after its closing brace. Nested types are pushed as separate entries.
    fn class(&mut self, kw: usize) -> usize {
        let toks = self.toks;
        let kind = toks[kw].text;
        let name = toks.get(kw + 1).map_or("", |t| t.text).to_string();

        // modifiers and annotations before the keyword
        let mut first = kw;
        let mut is_abstract = kind == "interface";
        while first > 0 {
            let p = &toks[first - 1];
            if p.is_ident() && (MODIFIERS.contains(&p.text) || p.text == "final") {
                if p.text == "abstract" {
                    is_abstract = true;
                }
                first -= 1;
            } else {
                break;
            }
        }

        // header up to the body
        let mut j = kw + 2;
        let mut record_components: Vec<(usize, usize)> = Vec::new();
        while j < toks.len() && !toks[j].is("{") && !toks[j].is(";") {
            if toks[j].is("(") {
                let close = matching_close(toks, j).unwrap_or(toks.len() - 1);
                if kind == "record" && record_components.is_empty() {
                    record_components.push((j, close));
                }
                j = close + 1;
                continue;
            }
            j += 1;
        }
        if j >= toks.len() || toks[j].is(";") {
            return j + 1;
        }
        let open = j;
        let close = match matching_close(toks, open) {
            Some(c) => c,
            None => {
                self.diagnostics.push(Diagnostic::new(
                    format!("{}:{}", self.file_path, toks[open].line),
                    format!("class {name} body is not closed"),
                ));
                toks.len()
            }
        };

        let mut coupled: BTreeSet<String> = BTreeSet::new();
        let mut field_names: BTreeSet<String> = BTreeSet::new();
        let mut field_count = 0u32;
        let mut public_count = 0u32;
        let mut ncss = 1u32;
        let mut drafts: Vec<MethodDraft> = Vec::new();

        for &(o, c) in &record_components {
            let params = split_params(&toks[o + 1..c]);
            for p in &params {
                if let Some(n) = p.iter().rev().find(|t| t.is_ident()) {
                    field_names.insert(n.text.to_string());
                }
                collect_types(p, &name, &mut coupled);
            }
            field_count += params.len() as u32;
        }

        let mut i = open + 1;
        if kind == "enum" {
            i = self.skip_enum_constants(i, close);
        }
        while i < close {
            if toks[i].is(";") {
                i += 1;
                continue;
            }
            if is_type_keyword(toks, i) {
                i = self.class(i);
                continue;
            }
            let Some(member) = self.member(i, close) else {
                break;
            };
            let next = member.last + 1;

            let header: Vec<&Token<'a>> = member.header.iter().map(|&k| &toks[k]).collect();
            if let Some(nested) = member.header.iter().copied().find(|&k| is_type_keyword(toks, k)) {
                i = self.class(nested);
                continue;
            }

            let has_params = header.iter().any(|t| t.is("("));
            let modifiers: Vec<&str> = header
                .iter()
                .take_while(|t| t.is_ident() && MODIFIERS.contains(&t.text))
                .map(|t| t.text)
                .collect();
            let is_public = modifiers.contains(&"public");
            let is_static = modifiers.contains(&"static");
            let is_final = modifiers.contains(&"final");

            match (&member.terminator, has_params) {
                (Terminator::Body { open: bo, close: bc }, false) => {
                    // initializer block, or something unrecognised
                    let body = StmtParser::new(&toks[bo + 1..*bc]).parse_all();
                    ncss += body.iter().map(Stmt::ncss).sum::<u32>();
                }
                (terminator, true) if !matches!(terminator, Terminator::Initializer { .. }) => {
                    let body = match terminator {
                        Terminator::Body { open, close } => Some((*open, *close)),
                        _ => None,
                    };
                    let draft = self.method(&member, &header, &name, body, is_public, &mut coupled);
                    ncss += draft.metrics.ncss;
                    if is_public {
                        public_count += 1;
                    }
                    drafts.push(draft);
                }
                _ => {
                    // field declaration
                    let names = declarator_names(toks, &member);
                    ncss += 1;
                    if !(is_static && is_final) {
                        field_count += names.len() as u32;
                    }
                    if is_public {
                        public_count += names.len() as u32;
                    }
                    field_names.extend(names.iter().cloned());
                    let type_end = header
                        .iter()
                        .position(|t| names.first().is_some_and(|n| t.text == n))
                        .unwrap_or(header.len());
                    let type_toks: Vec<Token<'a>> = header[..type_end].iter().map(|t| (*t).clone()).collect();
                    collect_types(&type_toks, &name, &mut coupled);
                    if let Terminator::Initializer { from } = member.terminator {
                        collect_body_types(&toks[from..=member.last], &name, &mut coupled);
                    }
                }
            }
            i = next;
        }

        let mut methods = Vec::with_capacity(drafts.len());
        for mut d in drafts {
            if let Some((o, c)) = d.body {
                d.metrics.is_accessor =
                    !d.metrics.is_constructor && is_accessor(&toks[o + 1..c], &field_names, &d.params);
                collect_body_types(&toks[o + 1..c], &name, &mut coupled);
            }
            methods.push(d.metrics);
        }
        let method_count = methods.iter().filter(|m| !m.is_constructor).count() as u32;
        let accessors = methods.iter().filter(|m| m.is_accessor).count() as u32;
        let accessor_ratio = if method_count == 0 {
            0.0
        } else {
            f64::from(accessors) / f64::from(method_count)
        };

        let end_line = if close < toks.len() {
            toks[close].line
        } else {
            self.line(toks.len() - 1)
        };
        self.classes.push(ClassMetrics {
            name,
            is_abstract,
            method_count,
            field_count,
            public_member_count: public_count,
            line_count: (end_line + 1 - toks[first].line) as u32,
            ncss,
            accessor_ratio,
            unique_coupled_types: coupled.len() as u32,
            methods,
        });
        close + 1
    }

    fn skip_enum_constants(&self, mut i: usize, close: usize) -> usize {
        while i < close {
            let t = &self.toks[i];
            if t.is(";") {
                return i + 1;
            }
            if t.is("(") || t.is("{") {
                i = matching_close(self.toks, i).map_or(close, |c| c + 1);
                continue;
            }
            i += 1;
        }
        close
    }

    /// Read one member starting at `i` (bounded by the class's closing brace).
    fn member(&self, mut i: usize, close: usize) -> Option<Member> {
        let toks = self.toks;
        let mut header = Vec::new();
        let mut first = None;
        while i < close {
            let t = &toks[i];
            if t.is("@") && toks.get(i + 1).is_some_and(|n| n.is_ident() && n.text != "interface") {
                // annotation: @Name(.Name)* [( ... )]
                i += 2;
                while i + 1 < close && toks[i].is(".") && toks[i + 1].is_ident() {
                    i += 2;
                }
                if i < close && toks[i].is("(") {
                    i = matching_close(toks, i).map_or(close, |c| c + 1);
                }
                continue;
            }
            if first.is_none() {
                first = Some(i);
            }
            if t.kind == TokenKind::Punct {
                match t.text {
                    ";" => {
                        return Some(Member {
                            header,
                            terminator: Terminator::Semicolon,
                            first: first.unwrap_or(i),
                            last: i,
                        })
                    }
                    "{" => {
                        let c = matching_close(toks, i).unwrap_or(close.saturating_sub(1)).min(close);
                        return Some(Member {
                            header,
                            terminator: Terminator::Body { open: i, close: c },
                            first: first.unwrap_or(i),
                            last: c,
                        });
                    }
                    "=" => {
                        let from = i;
                        let mut j = i + 1;
                        while j < close && !toks[j].is(";") {
                            if toks[j].is("(") || toks[j].is("{") || toks[j].is("[") {
                                j = matching_close(toks, j).map_or(close, |c| c + 1);
                                continue;
                            }
                            j += 1;
                        }
                        return Some(Member {
                            header,
                            terminator: Terminator::Initializer { from },
                            first: first.unwrap_or(from),
                            last: j.min(close.saturating_sub(1)).max(from),
                        });
                    }
                    "(" | "[" => {
                        let c = matching_close(toks, i).unwrap_or(close).min(close);
                        header.extend(i..=c.min(close - 1));
                        i = c + 1;
                        continue;
                    }
                    _ => {}
                }
            }
            header.push(i);
            i += 1;
        }
        None
    }

    fn method(
        &mut self,
        member: &Member,
        header: &[&Token<'a>],
        class_name: &str,
        body: Option<(usize, usize)>,
        is_public: bool,
        coupled: &mut BTreeSet<String>,
    ) -> MethodDraft {
        let toks = self.toks;
        let paren = header.iter().position(|t| t.is("(")).unwrap_or(0);
        let name = if paren > 0 { header[paren - 1].text } else { "" };
        let before: Vec<&Token<'a>> = header[..paren.saturating_sub(1)]
            .iter()
            .copied()
            .filter(|t| !(t.is_ident() && MODIFIERS.contains(&t.text)))
            .collect();
        // constructor: no return type (type parameters aside)
        let is_constructor = name == class_name && before.iter().all(|t| !t.is_ident() || t.text == name);
        let return_type: Vec<Token<'a>> = before.iter().map(|t| (*t).clone()).collect();
        collect_types(&return_type, class_name, coupled);

        let close_paren = header[paren..]
            .iter()
            .position(|t| t.is(")"))
            .map_or(header.len(), |p| {
                // the matching paren, not the first one
                let mut depth = 0i32;
                let mut found = paren + p;
                for (k, t) in header.iter().enumerate().skip(paren) {
                    if t.is("(") {
                        depth += 1;
                    } else if t.is(")") {
                        depth -= 1;
                        if depth == 0 {
                            found = k;
                            break;
                        }
                    }
                }
                found
            });
        let param_toks: Vec<Token<'a>> = header[(paren + 1).min(close_paren)..close_paren]
            .iter()
            .map(|t| (*t).clone())
            .collect();
        let params = split_params(&param_toks);
        let mut param_names = Vec::new();
        for p in &params {
            let ty_end = p.iter().rposition(|t| t.is_ident()).unwrap_or(0);
            param_names.push(p.get(ty_end).map_or(String::new(), |t| t.text.to_string()));
            collect_types(&p[..ty_end], class_name, coupled);
        }

        let start_line = toks[member.first].line;
        let end_line = toks[member.last.min(toks.len() - 1)].line;
        let mut metrics = MethodMetrics {
            name: name.to_string(),
            is_constructor,
            is_public,
            param_count: params.len() as u32,
            line_count: (end_line + 1 - start_line) as u32,
            ncss: 1,
            decision_points: 0,
            npath: 1,
            switch_statement_count: 0,
            switch_label_count: 0,
            statement_count: 0,
            switches: Vec::new(),
            is_accessor: false,
        };
        if let Some((o, c)) = body {
            let stmts = StmtParser::new(&toks[o + 1..c]).parse_all();
            metrics.statement_count = stmts.iter().map(Stmt::ncss).sum();
            metrics.ncss += metrics.statement_count;
            metrics.decision_points = stmts.iter().map(Stmt::decisions).sum();
            metrics.npath = compose_npath(&stmts);
            let mut switches = Vec::new();
            stmts.iter().for_each(|s| s.collect_switches(&mut switches));
            metrics.switch_statement_count = switches.len() as u32;
            metrics.switch_label_count = switches.iter().map(|s| s.labels).sum();
            metrics.switches = switches;
        }
        MethodDraft {
            metrics,
            params: param_names,
            body,
        }
    }
}

/// Split a parameter list on commas outside parentheses and angle brackets.
fn split_params<'a>(toks: &[Token<'a>]) -> Vec<Vec<Token<'a>>> {
    let mut params = Vec::new();
    let mut cur = Vec::new();
    let mut depth = 0i32;
    for t in toks {
        if t.kind == TokenKind::Punct {
            match t.text {
                "(" | "<" | "[" => depth += 1,
                ")" | ">" | "]" => depth -= 1,
                "," if depth == 0 => {
                    params.push(std::mem::take(&mut cur));
                    continue;
                }
                _ => {}
            }
        }
        cur.push(t.clone());
    }
    if !cur.is_empty() {
        params.push(cur);
    }
    params
}

/// Names declared by a field member: the identifier before the terminator or
/// initializer, plus one per further top-level `, name` declarator.
fn declarator_names(toks: &[Token<'_>], member: &Member) -> Vec<String> {
    let mut names = Vec::new();
    let header_names: Vec<&Token<'_>> = member
        .header
        .iter()
        .map(|&k| &toks[k])
        .filter(|t| !t.is("[") && !t.is("]"))
        .collect();
    // split header on top-level commas, outside angle brackets
    let mut depth = 0i32;
    let mut segment_last: Option<&Token<'_>> = None;
    for t in &header_names {
        match t.text {
            "<" => depth += 1,
            ">" => depth -= 1,
            "," if depth == 0 => {
                if let Some(n) = segment_last.take() {
                    names.push(n.text.to_string());
                }
                continue;
            }
            _ => {}
        }
        if t.is_ident() && depth == 0 {
            segment_last = Some(t);
        }
    }
    if let Some(n) = segment_last {
        names.push(n.text.to_string());
    }
    if let Terminator::Initializer { from } = member.terminator {
        // `a = 1, b = 2, c;`
        let mut depth = 0i32;
        let mut k = from + 1;
        while k < member.last {
            let t = &toks[k];
            match t.text {
                "(" | "{" | "[" => {
                    k = matching_close(toks, k).unwrap_or(member.last);
                }
                "<" if toks[k - 1].is_type_name() => depth += 1,
                ">" if depth > 0 => depth -= 1,
                "," if depth == 0 => {
                    if let (Some(n), Some(after)) = (toks.get(k + 1), toks.get(k + 2)) {
                        if n.is_ident() && matches!(after.text, "=" | "," | ";" | "[") {
                            names.push(n.text.to_string());
                        }
                    }
                }
                _ => {}
            }
            k += 1;
        }
    }
    names
}

fn collect_types(toks: &[Token<'_>], own: &str, out: &mut BTreeSet<String>) {
    for t in toks {
        if t.is_type_name() && t.text != own {
            out.insert(t.text.to_string());
        }
    }
}

/// Types used inside a body: `new T`, `T name` declarations and `T<...>`.
fn collect_body_types(toks: &[Token<'_>], own: &str, out: &mut BTreeSet<String>) {
    for (k, t) in toks.iter().enumerate() {
        if !t.is_type_name() || t.text == own {
            continue;
        }
        let after_new = k > 0 && toks[k - 1].is("new");
        let declares = toks
            .get(k + 1)
            .is_some_and(|n| (n.is_ident() && !is_keyword(n.text) && n.text != "instanceof") || n.is("<"));
        if after_new || declares {
            out.insert(t.text.to_string());
        }
    }
}

/// A getter returns a field; a setter assigns a parameter to a field.
fn is_accessor(body: &[Token<'_>], fields: &BTreeSet<String>, params: &[String]) -> bool {
    let texts: Vec<&str> = body.iter().map(|t| t.text).collect();
    let field = |s: &str| fields.contains(s);
    let param = |s: &str| params.iter().any(|p| p == s);
    match texts.as_slice() {
        ["return", f, ";"] => params.is_empty() && field(f),
        ["return", "this", ".", f, ";"] => params.is_empty() && field(f),
        [f, "=", p, ";"] => params.len() == 1 && field(f) && param(p),
        ["this", ".", f, "=", p, ";"] => params.len() == 1 && field(f) && param(p),
        _ => false,
    }
}
