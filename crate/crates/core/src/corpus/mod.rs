//! Issue, commit, file-change and link records, persisted as one JSON object
//! per line, plus extraction of changed files through git.

mod git;
mod records;

use std::collections::{HashMap, HashSet};
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use serde::de::DeserializeOwned;
use serde::Serialize;
use thiserror::Error;

pub use git::{ChangeStatus, ChangedFile, ChangedPath, GitRepo, ParentInfo};
pub use records::{timestamp, validate_hash, ChangeLink, CommitRecord, FileChange, IssueRecord, IssueType};

use crate::Diagnostic;

#[derive(Debug, Error)]
pub enum CorpusError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("unknown issue {0}")]
    UnknownIssue(String),
    #[error("unlinked issue {0}: no fix commit recorded")]
    UnlinkedIssue(String),
    #[error("dangling link: issue {issue_id} points at unknown commit {commit_hash}")]
    DanglingLink { issue_id: String, commit_hash: String },
    #[error("git executable {0:?} not found; install git or put it on PATH")]
    VcsMissing(String),
    #[error("unknown commit {0}")]
    UnknownCommit(String),
    #[error("git failed for {hash}: {message}")]
    Vcs { hash: String, message: String },
    #[error("no repository configured")]
    NoRepository,
}

/// Which of the four record files a path holds.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RecordKind {
    Issues,
    Commits,
    Changes,
    Links,
}

impl RecordKind {
    pub const ALL: [RecordKind; 4] = [
        RecordKind::Issues,
        RecordKind::Commits,
        RecordKind::Changes,
        RecordKind::Links,
    ];

    /// File name used by [`CorpusStore::export`].
    pub fn file_name(self) -> &'static str {
        match self {
            RecordKind::Issues => "issues.jsonl",
            RecordKind::Commits => "change_set.jsonl",
            RecordKind::Changes => "code_change.jsonl",
            RecordKind::Links => "change_set_link.jsonl",
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct IngestReport {
    pub accepted: usize,
    pub diagnostics: Vec<Diagnostic>,
}

/// In-memory store of the four record collections.
#[derive(Debug, Clone, Default)]
pub struct CorpusStore {
    issues: Vec<IssueRecord>,
    commits: Vec<CommitRecord>,
    changes: Vec<FileChange>,
    links: Vec<ChangeLink>,
    issue_index: HashMap<String, usize>,
    commit_index: HashMap<String, usize>,
    change_keys: HashSet<(String, String)>,
    link_keys: HashSet<ChangeLink>,
    pub repo_path: Option<PathBuf>,
}

impl PartialEq for CorpusStore {
    fn eq(&self, other: &Self) -> bool {
        self.issues == other.issues
            && self.commits == other.commits
            && self.changes == other.changes
            && self.links == other.links
    }
}

impl CorpusStore {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_repo(mut self, repo: impl Into<PathBuf>) -> Self {
        self.repo_path = Some(repo.into());
        self
    }

    pub fn issues(&self) -> &[IssueRecord] {
        &self.issues
    }

    pub fn commits(&self) -> &[CommitRecord] {
        &self.commits
    }

    pub fn changes(&self) -> &[FileChange] {
        &self.changes
    }

    pub fn links(&self) -> &[ChangeLink] {
        &self.links
    }

    pub fn issue(&self, issue_id: &str) -> Option<&IssueRecord> {
        self.issue_index.get(issue_id).map(|&i| &self.issues[i])
    }

    pub fn commit(&self, hash: &str) -> Option<&CommitRecord> {
        self.commit_index.get(hash).map(|&i| &self.commits[i])
    }

    /// File changes recorded for one commit, in insertion order.
    pub fn changes_for(&self, hash: &str) -> impl Iterator<Item = &FileChange> + '_ {
        let hash = hash.to_string();
        self.changes.iter().filter(move |c| c.commit_hash == hash)
    }

    /// The recorded commit immediately preceding `hash` by committed date.
    pub fn previous_commit(&self, hash: &str) -> Option<&CommitRecord> {
        let cur = self.commit(hash)?;
        self.commits
            .iter()
            .filter(|c| c.committed_date < cur.committed_date)
            .max_by(|a, b| {
                a.committed_date
                    .cmp(&b.committed_date)
                    .then_with(|| b.commit_hash.cmp(&a.commit_hash))
            })
    }

    pub fn add_issue(&mut self, issue: IssueRecord) -> Result<(), String> {
        issue.validate()?;
        if self.issue_index.contains_key(&issue.issue_id) {
            return Err(format!("duplicate issue id {}", issue.issue_id));
        }
        self.issue_index.insert(issue.issue_id.clone(), self.issues.len());
        self.issues.push(issue);
        Ok(())
    }

    pub fn add_commit(&mut self, commit: CommitRecord) -> Result<(), String> {
        commit.validate()?;
        if self.commit_index.contains_key(&commit.commit_hash) {
            return Err(format!("duplicate commit {}", commit.commit_hash));
        }
        self.commit_index.insert(commit.commit_hash.clone(), self.commits.len());
        self.commits.push(commit);
        Ok(())
    }

    pub fn add_change(&mut self, change: FileChange) -> Result<(), String> {
        change.validate()?;
        let key = (change.commit_hash.clone(), change.file_path.clone());
        if !self.change_keys.insert(key) {
            return Err(format!(
                "duplicate file change {} {}",
                change.commit_hash, change.file_path
            ));
        }
        self.changes.push(change);
        Ok(())
    }

    pub fn add_link(&mut self, link: ChangeLink) -> Result<(), String> {
        link.validate()?;
        if !self.link_keys.insert(link.clone()) {
            return Err(format!("duplicate link {} {}", link.issue_id, link.commit_hash));
        }
        self.links.push(link);
        Ok(())
    }

    /// Load one record file. Bad lines are reported and skipped; the first
    /// occurrence of a duplicate key wins.
    pub fn ingest_records(&mut self, path: &Path, kind: RecordKind) -> Result<IngestReport, CorpusError> {
        let text = fs::read_to_string(path).map_err(|source| CorpusError::Io {
            path: path.display().to_string(),
            source,
        })?;
        let mut report = IngestReport::default();
        for (n, line) in text.lines().enumerate() {
            if line.trim().is_empty() {
                continue;
            }
            let outcome = match kind {
                RecordKind::Issues => parse_line(line).and_then(|r| self.add_issue(r)),
                RecordKind::Commits => parse_line(line).and_then(|r| self.add_commit(r)),
                RecordKind::Changes => parse_line(line).and_then(|r| self.add_change(r)),
                RecordKind::Links => parse_line(line).and_then(|r| self.add_link(r)),
            };
            match outcome {
                Ok(()) => report.accepted += 1,
                Err(reason) => report
                    .diagnostics
                    .push(Diagnostic::new(format!("{}:{}", path.display(), n + 1), reason)),
            }
        }
        Ok(report)
    }

    /// Write the four record files into `dir` using [`RecordKind::file_name`].
    pub fn export(&self, dir: &Path) -> Result<(), CorpusError> {
        fs::create_dir_all(dir).map_err(|source| CorpusError::Io {
            path: dir.display().to_string(),
            source,
        })?;
        write_lines(&dir.join(RecordKind::Issues.file_name()), &self.issues)?;
        write_lines(&dir.join(RecordKind::Commits.file_name()), &self.commits)?;
        write_lines(&dir.join(RecordKind::Changes.file_name()), &self.changes)?;
        write_lines(&dir.join(RecordKind::Links.file_name()), &self.links)?;
        Ok(())
    }

    /// Links whose issue or commit is not in the store.
    pub fn dangling_links(&self) -> Vec<&ChangeLink> {
        self.links
            .iter()
            .filter(|l| !self.issue_index.contains_key(&l.issue_id) || !self.commit_index.contains_key(&l.commit_hash))
            .collect()
    }

    /// The fix commit of an issue. With several links the latest committed
    /// one wins.
    pub fn resolve_fix_commit(&self, issue_id: &str) -> Result<&str, CorpusError> {
        if !self.issue_index.contains_key(issue_id) {
            return Err(CorpusError::UnknownIssue(issue_id.to_string()));
        }
        let linked: Vec<&ChangeLink> = self.links.iter().filter(|l| l.issue_id == issue_id).collect();
        if linked.is_empty() {
            return Err(CorpusError::UnlinkedIssue(issue_id.to_string()));
        }
        linked
            .iter()
            .filter_map(|l| self.commit(&l.commit_hash))
            .max_by(|a, b| {
                a.committed_date
                    .cmp(&b.committed_date)
                    .then_with(|| b.commit_hash.cmp(&a.commit_hash))
            })
            .map(|c| c.commit_hash.as_str())
            .ok_or_else(|| CorpusError::DanglingLink {
                issue_id: issue_id.to_string(),
                commit_hash: linked[0].commit_hash.clone(),
            })
    }

    pub fn git(&self) -> Result<GitRepo, CorpusError> {
        self.repo_path
            .as_ref()
            .map(GitRepo::new)
            .ok_or(CorpusError::NoRepository)
    }

    pub fn changed_files_with_contents(&self, hash: &str) -> Result<Vec<ChangedFile>, CorpusError> {
        self.git()?.changed_files_with_contents(hash)
    }
}

fn parse_line<T: DeserializeOwned>(line: &str) -> Result<T, String> {
    serde_json::from_str(line).map_err(|e| format!("malformed record: {e}"))
}

fn write_lines<T: Serialize>(path: &Path, rows: &[T]) -> Result<(), CorpusError> {
    let io_err = |source| CorpusError::Io {
        path: path.display().to_string(),
        source,
    };
    let mut out = std::io::BufWriter::new(fs::File::create(path).map_err(io_err)?);
    for row in rows {
        let line = serde_json::to_string(row).expect("records serialize");
        writeln!(out, "{line}").map_err(|source| CorpusError::Io {
            path: path.display().to_string(),
            source,
        })?;
    }
    out.flush().map_err(|source| CorpusError::Io {
        path: path.display().to_string(),
        source,
    })
}
