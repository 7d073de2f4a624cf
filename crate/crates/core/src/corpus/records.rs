//! The four relational record kinds and their line-level validation.

use chrono::{DateTime, NaiveDateTime, Utc};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Kind of an issue in the tracker.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum IssueType {
    Bug,
    NewFeature,
    Other,
}

impl IssueType {
    pub fn as_str(self) -> &'static str {
        match self {
            IssueType::Bug => "Bug",
            IssueType::NewFeature => "New feature",
            IssueType::Other => "Other",
        }
    }

    pub fn parse(s: &str) -> IssueType {
        let folded: String = s
            .chars()
            .filter(|c| c.is_ascii_alphanumeric())
            .collect::<String>()
            .to_ascii_lowercase();
        match folded.as_str() {
            "bug" => IssueType::Bug,
            "newfeature" => IssueType::NewFeature,
            _ => IssueType::Other,
        }
    }
}

impl Serialize for IssueType {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

impl<'de> Deserialize<'de> for IssueType {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        Ok(IssueType::parse(&s))
    }
}

/// `2010-07-29T21:02:29Z` timestamps.
pub mod timestamp {
    use super::*;

    pub const FORMAT: &str = "%Y-%m-%dT%H:%M:%SZ";

    pub fn parse(s: &str) -> Result<DateTime<Utc>, String> {
        if let Ok(dt) = DateTime::parse_from_rfc3339(s) {
            return Ok(dt.with_timezone(&Utc));
        }
        NaiveDateTime::parse_from_str(s, FORMAT)
            .map(|n| n.and_utc())
            .map_err(|e| format!("bad timestamp {s:?}: {e}"))
    }

    pub fn format(dt: &DateTime<Utc>) -> String {
        dt.format(FORMAT).to_string()
    }

    pub fn serialize<S: Serializer>(dt: &DateTime<Utc>, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&format(dt))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<DateTime<Utc>, D::Error> {
        let s = String::deserialize(d)?;
        parse(&s).map_err(serde::de::Error::custom)
    }

    pub mod option {
        use super::*;

        pub fn serialize<S: Serializer>(dt: &Option<DateTime<Utc>>, s: S) -> Result<S::Ok, S::Error> {
            match dt {
                Some(dt) => s.serialize_some(&format(dt)),
                None => s.serialize_none(),
            }
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<DateTime<Utc>>, D::Error> {
            match Option::<String>::deserialize(d)? {
                None => Ok(None),
                Some(s) if s.is_empty() => Ok(None),
                Some(s) => parse(&s).map(Some).map_err(serde::de::Error::custom),
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IssueRecord {
    #[serde(rename = "Issue_id")]
    pub issue_id: String,
    #[serde(rename = "Issue_type")]
    pub issue_type: IssueType,
    #[serde(rename = "Create_date", with = "timestamp")]
    pub create_date: DateTime<Utc>,
    #[serde(rename = "Fixed_date", with = "timestamp::option", default)]
    pub fixed_date: Option<DateTime<Utc>>,
    #[serde(rename = "Summary_raw", default)]
    pub summary_raw: String,
    #[serde(rename = "Description_raw", default)]
    pub description_raw: String,
    #[serde(rename = "Summary_stemmed", default)]
    pub summary_stemmed: Option<String>,
    #[serde(rename = "Description_stemmed", default)]
    pub description_stemmed: Option<String>,
}

impl IssueRecord {
    pub fn validate(&self) -> Result<(), String> {
        if self.issue_id.trim().is_empty() {
            return Err("empty issue id".into());
        }
        if let Some(fixed) = self.fixed_date {
            if fixed < self.create_date {
                return Err("fixed date precedes create date".into());
            }
        }
        if self.summary_raw.trim().is_empty() && self.description_raw.trim().is_empty() {
            let stemmed_empty = self.summary_stemmed.as_deref().unwrap_or("").trim().is_empty()
                && self.description_stemmed.as_deref().unwrap_or("").trim().is_empty();
            if stemmed_empty {
                return Err("summary and description both empty".into());
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CommitRecord {
    #[serde(rename = "Commit_Hash")]
    pub commit_hash: String,
    #[serde(rename = "Committed_Date", with = "timestamp")]
    pub committed_date: DateTime<Utc>,
}

impl CommitRecord {
    pub fn validate(&self) -> Result<(), String> {
        validate_hash(&self.commit_hash)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FileChange {
    #[serde(rename = "Commit_Hash")]
    pub commit_hash: String,
    #[serde(rename = "File_path")]
    pub file_path: String,
    #[serde(rename = "Sum_added_lines")]
    pub sum_added_lines: u64,
    #[serde(rename = "Sum_removed_lines")]
    pub sum_removed_lines: u64,
}

impl FileChange {
    pub fn validate(&self) -> Result<(), String> {
        validate_hash(&self.commit_hash)?;
        if self.file_path.trim().is_empty() {
            return Err("empty file path".into());
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ChangeLink {
    #[serde(rename = "Issue_id")]
    pub issue_id: String,
    #[serde(rename = "Commit_Hash")]
    pub commit_hash: String,
}

impl ChangeLink {
    pub fn validate(&self) -> Result<(), String> {
        if self.issue_id.trim().is_empty() {
            return Err("empty issue id".into());
        }
        validate_hash(&self.commit_hash)
    }
}

/// A commit hash is exactly 40 lowercase hexadecimal characters.
pub fn validate_hash(hash: &str) -> Result<(), String> {
    if hash.len() != 40 {
        return Err(format!("hash length {} (expected 40)", hash.len()));
    }
    if !hash.bytes().all(|b| b.is_ascii_digit() || (b'a'..=b'f').contains(&b)) {
        return Err("hash is not lowercase hexadecimal".into());
    }
    Ok(())
}
