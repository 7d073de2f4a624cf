//! Bug-report text to fixed-length unique-word index sequences.

mod dictionary;
mod porter;

use serde::{Deserialize, Serialize};

pub use dictionary::{Dictionary, DictionaryError, OOV_INDEX, PAD_INDEX};
pub use porter::stem;

/// Sequence length used when none is configured.
pub const DEFAULT_SEQUENCE_LENGTH: usize = 200;

const STOPWORDS: &[&str] = &[
    "a",
    "about",
    "above",
    "after",
    "again",
    "against",
    "all",
    "am",
    "an",
    "and",
    "any",
    "are",
    "as",
    "at",
    "be",
    "because",
    "been",
    "before",
    "being",
    "below",
    "between",
    "both",
    "but",
    "by",
    "can",
    "did",
    "do",
    "does",
    "doing",
    "down",
    "during",
    "each",
    "few",
    "for",
    "from",
    "further",
    "had",
    "has",
    "have",
    "having",
    "he",
    "her",
    "here",
    "hers",
    "herself",
    "him",
    "himself",
    "his",
    "how",
    "i",
    "if",
    "in",
    "into",
    "is",
    "it",
    "its",
    "itself",
    "just",
    "me",
    "more",
    "most",
    "my",
    "myself",
    "no",
    "nor",
    "not",
    "now",
    "of",
    "off",
    "on",
    "once",
    "only",
    "or",
    "other",
    "our",
    "ours",
    "ourselves",
    "out",
    "over",
    "own",
    "same",
    "she",
    "should",
    "so",
    "some",
    "such",
    "than",
    "that",
    "the",
    "their",
    "theirs",
    "them",
    "themselves",
    "then",
    "there",
    "these",
    "they",
    "this",
    "those",
    "through",
    "to",
    "too",
    "under",
    "until",
    "up",
    "very",
    "was",
    "we",
    "were",
    "what",
    "when",
    "where",
    "which",
    "while",
    "who",
    "whom",
    "why",
    "will",
    "with",
    "you",
    "your",
    "yours",
    "yourself",
    "yourselves",
];

pub fn is_stopword(token: &str) -> bool {
    STOPWORDS.binary_search(&token).is_ok()
}

/// Lowercase and split on every non-alphanumeric character.
pub fn tokenize(text: &str) -> Vec<String> {
    text.split(|c: char| !c.is_alphanumeric())
        .filter(|s| !s.is_empty())
        .map(str::to_lowercase)
        .collect()
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct TextOptions {
    pub remove_stopwords: bool,
}

/// Tokenize, optionally drop stop words, and stem.
pub fn stem_tokens(text: &str, opts: TextOptions) -> Vec<String> {
    tokenize(text)
        .into_iter()
        .filter(|t| !(opts.remove_stopwords && is_stopword(t)))
        .map(|t| stem(&t))
        .collect()
}

/// Stemmed form of `text` as space-separated tokens.
pub fn stem_text(text: &str, opts: TextOptions) -> String {
    stem_tokens(text, opts).join(" ")
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TokenDocument {
    pub issue_id: String,
    pub tokens: Vec<String>,
}

impl TokenDocument {
    /// Document from text that is already stemmed and space separated; it is
    /// re-tokenized so the token invariants hold.
    pub fn from_stemmed(issue_id: impl Into<String>, stemmed: &str) -> Self {
        TokenDocument {
            issue_id: issue_id.into(),
            tokens: tokenize(stemmed),
        }
    }

    pub fn from_raw(issue_id: impl Into<String>, raw: &str, opts: TextOptions) -> Self {
        TokenDocument {
            issue_id: issue_id.into(),
            tokens: stem_tokens(raw, opts),
        }
    }

    /// Tokens with later repeats removed.
    pub fn unique_tokens(&self) -> Vec<&str> {
        let mut seen = std::collections::HashSet::new();
        self.tokens
            .iter()
            .map(String::as_str)
            .filter(|t| seen.insert(*t))
            .collect()
    }
}

/// Fixed-length index vector: distinct word indices in first-occurrence
/// order followed by zero padding.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct IndexSequence(pub Vec<u32>);

impl IndexSequence {
    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Number of entries before the padding.
    pub fn content_len(&self) -> usize {
        self.0.iter().position(|&i| i == PAD_INDEX).unwrap_or(self.0.len())
    }
}

pub fn doc2indices(doc: &TokenDocument, dict: &Dictionary, len: usize) -> IndexSequence {
    assert!(len >= 1, "sequence length must be at least 1");
    let mut out: Vec<u32> = doc
        .unique_tokens()
        .into_iter()
        .take(len)
        .map(|t| dict.index_of(t))
        .collect();
    out.resize(len, PAD_INDEX);
    IndexSequence(out)
}

/// `issue_id<TAB>label<TAB>space-joined indices`.
pub fn format_processed_line(issue_id: &str, label: u8, seq: &IndexSequence) -> String {
    let idx: Vec<String> = seq.0.iter().map(u32::to_string).collect();
    format!("{issue_id}\t{label}\t{}", idx.join(" "))
}
