//! Token stream over comment- and string-stripped Java source.

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TokenKind {
    Ident,
    Number,
    Literal,
    Punct,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Token<'a> {
    pub kind: TokenKind,
    pub text: &'a str,
    pub line: usize,
}

impl Token<'_> {
    pub fn is(&self, text: &str) -> bool {
        self.text == text && self.kind != TokenKind::Literal
    }

    pub fn is_ident(&self) -> bool {
        self.kind == TokenKind::Ident
    }

    /// Identifier that names a type by Java convention.
    pub fn is_type_name(&self) -> bool {
        self.kind == TokenKind::Ident
            && self.text.chars().next().is_some_and(|c| c.is_ascii_uppercase())
            && !is_keyword(self.text)
    }
}

const KEYWORDS: &[&str] = &[
    "abstract",
    "assert",
    "boolean",
    "break",
    "byte",
    "case",
    "catch",
    "char",
    "class",
    "const",
    "continue",
    "default",
    "do",
    "double",
    "else",
    "enum",
    "extends",
    "final",
    "finally",
    "float",
    "for",
    "goto",
    "if",
    "implements",
    "import",
    "instanceof",
    "int",
    "interface",
    "long",
    "native",
    "new",
    "package",
    "private",
    "protected",
    "public",
    "return",
    "short",
    "static",
    "strictfp",
    "super",
    "switch",
    "synchronized",
    "this",
    "throw",
    "throws",
    "transient",
    "try",
    "void",
    "volatile",
    "while",
    "true",
    "false",
    "null",
];

pub fn is_keyword(word: &str) -> bool {
    KEYWORDS.contains(&word)
}

pub const MODIFIERS: &[&str] = &[
    "public",
    "protected",
    "private",
    "static",
    "final",
    "abstract",
    "native",
    "synchronized",
    "transient",
    "volatile",
    "strictfp",
    "default",
    "sealed",
    "non-sealed",
];

const TWO_CHAR: &[&str] = &["&&", "||", "->", "::"];

pub fn tokenize(src: &str) -> Vec<Token<'_>> {
    let bytes = src.as_bytes();
    let mut tokens = Vec::new();
    let mut line = 1usize;
    let mut i = 0usize;
    while i < bytes.len() {
        let b = bytes[i];
        if b == b'\n' {
            line += 1;
            i += 1;
            continue;
        }
        if b.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        let start = i;
        let start_line = line;
        let kind = if b.is_ascii_alphabetic() || b == b'_' || b == b'$' || b >= 0x80 {
            while i < bytes.len()
                && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_' || bytes[i] == b'$' || bytes[i] >= 0x80)
            {
                i += 1;
            }
            TokenKind::Ident
        } else if b.is_ascii_digit() {
            while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_' || bytes[i] == b'.') {
                i += 1;
            }
            TokenKind::Number
        } else if b == b'"' || b == b'\'' {
            let close: &[u8] = if bytes[i..].starts_with(b"\"\"\"") {
                b"\"\"\""
            } else {
                &bytes[i..i + 1]
            };
            i += close.len();
            while i < bytes.len() && !bytes[i..].starts_with(close) {
                if bytes[i] == b'\n' {
                    line += 1;
                }
                i += 1;
            }
            i = (i + close.len()).min(bytes.len());
            TokenKind::Literal
        } else {
            let two = src.get(i..i + 2).unwrap_or("");
            if TWO_CHAR.contains(&two) {
                i += 2;
            } else if src[i..].starts_with("...") {
                i += 3;
            } else {
                i += src[i..].chars().next().map_or(1, char::len_utf8);
            }
            TokenKind::Punct
        };
        tokens.push(Token {
            kind,
            text: &src[start..i],
            line: start_line,
        });
    }
    tokens
}

/// Index of the token closing the group opened at `open`, or `None` when the
/// group runs off the end of the slice.
pub fn matching_close(tokens: &[Token<'_>], open: usize) -> Option<usize> {
    let (o, c) = match tokens[open].text {
        "(" => ("(", ")"),
        "{" => ("{", "}"),
        "[" => ("[", "]"),
        _ => return None,
    };
    let mut depth = 0usize;
    for (j, t) in tokens.iter().enumerate().skip(open) {
        if t.kind != TokenKind::Punct {
            continue;
        }
        if t.text == o {
            depth += 1;
        } else if t.text == c {
            depth -= 1;
            if depth == 0 {
                return Some(j);
            }
        }
    }
    None
}
