use std::collections::HashMap;
use std::fmt::Write as _;

use sha2::{Digest, Sha256};

use super::TokenDocument;

pub const PAD_INDEX: u32 = 0;
pub const OOV_INDEX: u32 = 1;
const PAD_WORD: &str = "<pad>";
const OOV_WORD: &str = "<oov>";

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum DictionaryError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("word {0:?} listed twice")]
    Duplicate(String),
}

/// Word to index map. Index 0 is padding, 1 is out-of-vocabulary, words
/// start at 2.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Dictionary {
    words: Vec<String>,
    index: HashMap<String, u32>,
}

impl Dictionary {
    /// Words ordered by descending corpus frequency, ties lexicographic.
    /// `max_words` keeps only the most frequent entries.
    pub fn build(docs: &[TokenDocument], max_words: Option<usize>) -> Self {
        let mut freq: HashMap<&str, u64> = HashMap::new();
        for doc in docs {
            for t in &doc.tokens {
                *freq.entry(t.as_str()).or_default() += 1;
            }
        }
        let mut ranked: Vec<(&str, u64)> = freq.into_iter().collect();
        ranked.sort_by(|a, b| b.1.cmp(&a.1).then_with(|| a.0.cmp(b.0)));
        if let Some(cap) = max_words {
            ranked.truncate(cap);
        }
        Self::from_words(ranked.into_iter().map(|(w, _)| w)).expect("ranked words are distinct")
    }

    /// Assign indices 2, 3, ... in the given order.
    pub fn from_words<I, S>(words: I) -> Result<Self, DictionaryError>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut d = Dictionary::default();
        for w in words {
            let w = w.into();
            if d.index.contains_key(&w) {
                return Err(DictionaryError::Duplicate(w));
            }
            d.index.insert(w.clone(), d.words.len() as u32 + 2);
            d.words.push(w);
        }
        Ok(d)
    }

    /// Vocabulary size V: highest index plus one.
    pub fn vocab_size(&self) -> usize {
        self.words.len() + 2
    }

    pub fn index_of(&self, word: &str) -> u32 {
        self.index.get(word).copied().unwrap_or(OOV_INDEX)
    }

    pub fn word(&self, index: u32) -> Option<&str> {
        match index {
            PAD_INDEX => Some(PAD_WORD),
            OOV_INDEX => Some(OOV_WORD),
            i => self.words.get(i as usize - 2).map(String::as_str),
        }
    }

    /// `word<TAB>index` lines sorted by index, reserved entries first.
    pub fn to_tsv(&self) -> String {
        let mut out = format!("{PAD_WORD}\t{PAD_INDEX}\n{OOV_WORD}\t{OOV_INDEX}\n");
        for (i, w) in self.words.iter().enumerate() {
            let _ = writeln!(out, "{w}\t{}", i + 2);
        }
        out
    }

    pub fn from_tsv(text: &str) -> Result<Self, DictionaryError> {
        let mut words = Vec::new();
        for (n, line) in text.lines().enumerate() {
            let line_no = n + 1;
            if line.trim().is_empty() {
                continue;
            }
            let (w, idx) = line.split_once('\t').ok_or_else(|| DictionaryError::Parse {
                line: line_no,
                message: "expected word<TAB>index".into(),
            })?;
            let idx: u32 = idx.trim().parse().map_err(|_| DictionaryError::Parse {
                line: line_no,
                message: format!("bad index {idx:?}"),
            })?;
            match idx {
                PAD_INDEX | OOV_INDEX => continue,
                i if i as usize != words.len() + 2 => {
                    return Err(DictionaryError::Parse {
                        line: line_no,
                        message: format!("index {i} out of sequence (expected {})", words.len() + 2),
                    })
                }
                _ => words.push(w.to_string()),
            }
        }
        Self::from_words(words)
    }

    /// Hex SHA-256 of the TSV export.
    pub fn content_hash(&self) -> String {
        let digest = Sha256::digest(self.to_tsv().as_bytes());
        digest.iter().fold(String::with_capacity(64), |mut s, b| {
            let _ = write!(s, "{b:02x}");
            s
        })
    }
}
