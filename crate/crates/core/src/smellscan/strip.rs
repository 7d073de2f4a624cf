use crate::Diagnostic;

#[derive(Clone, Copy, PartialEq, Eq)]
enum State {
    Code,
    LineComment,
    BlockComment,
    Str,
    TextBlock,
    Char,
}

/// Blank out comments and the interiors of string, text-block and character
/// literals. Every blanked byte except `\n` and `\r` becomes a space, so byte
/// offsets, columns and line numbers are unchanged. Comment delimiters are
/// blanked; literal quotes are kept.
pub fn strip_comments_and_strings(source: &str) -> (String, Vec<Diagnostic>) {
    let bytes = source.as_bytes();
    let mut out = bytes.to_vec();
    let mut diagnostics = Vec::new();
    let mut state = State::Code;
    let mut opened_at = 0usize;
    let mut i = 0usize;

    let blank = |out: &mut Vec<u8>, at: usize| {
        if out[at] != b'\n' && out[at] != b'\r' {
            out[at] = b' ';
        }
    };

    while i < bytes.len() {
        let b = bytes[i];
        let next = bytes.get(i + 1).copied();
        match state {
            State::Code => match (b, next) {
                (b'/', Some(b'/')) => {
                    state = State::LineComment;
                    opened_at = i;
                    blank(&mut out, i);
                    blank(&mut out, i + 1);
                    i += 2;
                    continue;
                }
                (b'/', Some(b'*')) => {
                    state = State::BlockComment;
                    opened_at = i;
                    blank(&mut out, i);
                    blank(&mut out, i + 1);
                    i += 2;
                    continue;
                }
                (b'"', _) if bytes[i..].starts_with(b"\"\"\"") => {
                    state = State::TextBlock;
                    opened_at = i;
                    i += 3;
                    continue;
                }
                (b'"', _) => {
                    state = State::Str;
                    opened_at = i;
                }
                (b'\'', _) => {
                    state = State::Char;
                    opened_at = i;
                }
                _ => {}
            },
            State::LineComment => {
                if b == b'\n' {
                    state = State::Code;
                } else {
                    blank(&mut out, i);
                }
            }
            State::BlockComment => {
                if b == b'*' && next == Some(b'/') {
                    blank(&mut out, i);
                    blank(&mut out, i + 1);
                    state = State::Code;
                    i += 2;
                    continue;
                }
                blank(&mut out, i);
            }
            State::Str | State::Char => {
                let quote = if state == State::Str { b'"' } else { b'\'' };
                if b == b'\\' {
                    blank(&mut out, i);
                    if i + 1 < bytes.len() {
                        blank(&mut out, i + 1);
                    }
                    i += 2;
                    continue;
                }
                if b == quote {
                    state = State::Code;
                } else {
                    blank(&mut out, i);
                }
            }
            State::TextBlock => {
                if b == b'\\' {
                    blank(&mut out, i);
                    if i + 1 < bytes.len() {
                        blank(&mut out, i + 1);
                    }
                    i += 2;
                    continue;
                }
                if bytes[i..].starts_with(b"\"\"\"") {
                    state = State::Code;
                    i += 3;
                    continue;
                }
                blank(&mut out, i);
            }
        }
        i += 1;
    }

    let what = match state {
        State::Code | State::LineComment => None,
        State::BlockComment => Some("unterminated block comment"),
        State::Str => Some("unterminated string literal"),
        State::TextBlock => Some("unterminated text block"),
        State::Char => Some("unterminated character literal"),
    };
    if let Some(what) = what {
        let line = source[..opened_at].matches('\n').count() + 1;
        diagnostics.push(Diagnostic::new(format!("line {line}"), what));
    }

    // Only whole characters were replaced (every byte of a multi-byte
    // sequence lies inside the same literal or comment).
    let text = String::from_utf8(out).expect("blanking preserves UTF-8");
    (text, diagnostics)
}
