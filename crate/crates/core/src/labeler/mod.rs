//! Per-bug refer-to-designer labels from smell deltas of the fix commit, and
//! assembly of the labeled text dataset.

use std::collections::HashMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::corpus::{CorpusError, CorpusStore, IssueRecord, IssueType};
use crate::smellscan::{scan_source, PmdReport, RuleThresholds, SmellRecord, SmellRule, SmellVector};
use crate::textprep::{stem_text, TextOptions};
use crate::Diagnostic;

/// Smells added to one file by one commit.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SmellDelta {
    pub commit_hash: String,
    pub file_path: String,
    /// `max(0, cur - prev)` per rule, in rule order.
    pub added_per_rule: [u8; SmellRule::COUNT],
    pub total_added: u32,
    /// Unclamped `Σ (cur - prev)`, kept for audit.
    pub raw_signed: i32,
}

pub fn smell_delta(commit_hash: &str, file_path: &str, cur: &SmellVector, prev: Option<&SmellVector>) -> SmellDelta {
    let mut added_per_rule = [0u8; SmellRule::COUNT];
    let mut raw_signed = 0i32;
    for rule in SmellRule::ALL {
        let c = i32::from(cur.get(rule));
        let p = prev.map_or(0, |v| i32::from(v.get(rule)));
        raw_signed += c - p;
        added_per_rule[rule.index()] = (c - p).max(0) as u8;
    }
    SmellDelta {
        commit_hash: commit_hash.to_string(),
        file_path: file_path.to_string(),
        added_per_rule,
        total_added: added_per_rule.iter().map(|&a| u32::from(a)).sum(),
        raw_signed,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommitLabel {
    pub label: u8,
    pub diagnostic: Option<Diagnostic>,
}

/// 1 when any changed file gained a smell.
pub fn label_commit(deltas: &[SmellDelta]) -> CommitLabel {
    if deltas.is_empty() {
        return CommitLabel {
            label: 0,
            diagnostic: Some(Diagnostic::new("commit", "no source files changed")),
        };
    }
    CommitLabel {
        label: u8::from(deltas.iter().any(|d| d.total_added > 0)),
        diagnostic: None,
    }
}

/// Smell vectors of one changed file at the fix commit and before it.
#[derive(Debug, Clone, PartialEq)]
pub struct FileSmells {
    pub file_path: String,
    /// `None` when the content could not be obtained.
    pub current: Option<SmellVector>,
    /// `None` when the file is new.
    pub previous: Option<SmellVector>,
}

/// Where smell vectors for a fix commit come from.
pub trait SmellSource {
    fn file_smells(
        &self,
        store: &CorpusStore,
        commit_hash: &str,
        diagnostics: &mut Vec<Diagnostic>,
    ) -> Result<Vec<FileSmells>, CorpusError>;
}

/// Scans file contents taken from the git repository of the store.
#[derive(Debug, Clone)]
pub struct RepoScanner {
    pub thresholds: RuleThresholds,
    /// Suffixes of files treated as source.
    pub extensions: Vec<String>,
}

impl Default for RepoScanner {
    fn default() -> Self {
        Self::new(RuleThresholds::default())
    }
}

impl RepoScanner {
    pub fn new(thresholds: RuleThresholds) -> Self {
        RepoScanner {
            thresholds,
            extensions: vec![".java".into()],
        }
    }

    fn scan(&self, source: &str, path: &str, diagnostics: &mut Vec<Diagnostic>) -> SmellVector {
        let result = scan_source(source, path, &self.thresholds);
        diagnostics.extend(result.diagnostics);
        result.vector
    }
}

impl SmellSource for RepoScanner {
    fn file_smells(
        &self,
        store: &CorpusStore,
        commit_hash: &str,
        diagnostics: &mut Vec<Diagnostic>,
    ) -> Result<Vec<FileSmells>, CorpusError> {
        let git = store.git()?.with_extensions(self.extensions.clone());
        if git.parent_of(commit_hash)?.is_merge {
            diagnostics.push(Diagnostic::new(
                commit_hash,
                "merge commit; compared against first parent only",
            ));
        }
        let files = git.changed_files_with_contents(commit_hash)?;
        Ok(files
            .into_iter()
            .map(|f| FileSmells {
                current: Some(self.scan(&f.content_at_commit, &f.file_path, diagnostics)),
                previous: f
                    .content_at_parent
                    .as_deref()
                    .map(|src| self.scan(src, &f.file_path, diagnostics)),
                file_path: f.file_path,
            })
            .collect())
    }
}

/// Smell vectors loaded ahead of time, keyed by commit and path. Changed
/// files come from the store's file-change records.
#[derive(Debug, Clone)]
pub struct PrecomputedSmells {
    by_commit: HashMap<String, HashMap<String, SmellVector>>,
    extensions: Vec<String>,
    /// PMD lists only files with violations, so an absent file is clean.
    missing_means_clean: bool,
}

impl Default for PrecomputedSmells {
    fn default() -> Self {
        PrecomputedSmells {
            by_commit: HashMap::new(),
            extensions: vec![".java".into()],
            missing_means_clean: false,
        }
    }
}

impl PrecomputedSmells {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_extensions(mut self, extensions: Vec<String>) -> Self {
        self.extensions = extensions;
        self
    }

    pub fn add_record(&mut self, record: SmellRecord) {
        self.by_commit
            .entry(record.commit_hash)
            .or_default()
            .insert(record.file_path, record.vector);
    }

    /// Register a PMD report taken on the snapshot at `commit_hash`.
    pub fn add_pmd_report(&mut self, commit_hash: &str, report: &PmdReport) {
        self.missing_means_clean = true;
        let entry = self.by_commit.entry(commit_hash.to_string()).or_default();
        for (path, v) in &report.files {
            entry.entry(path.clone()).or_default().merge(v);
        }
    }

    pub fn len(&self) -> usize {
        self.by_commit.values().map(HashMap::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Exact path match, else a recorded path ending in `/path` (PMD often
    /// reports absolute paths).
    fn lookup(&self, commit: &str, path: &str) -> Option<&SmellVector> {
        let files = self.by_commit.get(commit)?;
        files.get(path).or_else(|| {
            let suffix = format!("/{path}");
            files
                .iter()
                .filter(|(p, _)| p.ends_with(&suffix))
                .min_by(|a, b| a.0.cmp(b.0))
                .map(|(_, v)| v)
        })
    }

    /// Latest record for `path` at a commit dated strictly before `hash`.
    fn previous(&self, store: &CorpusStore, hash: &str, path: &str) -> Option<SmellVector> {
        let mut at = store.previous_commit(hash)?;
        loop {
            if let Some(v) = self.lookup(&at.commit_hash, path) {
                return Some(*v);
            }
            if self.missing_means_clean && self.by_commit.contains_key(&at.commit_hash) {
                return None;
            }
            at = store.previous_commit(&at.commit_hash)?;
        }
    }
}

impl SmellSource for PrecomputedSmells {
    fn file_smells(
        &self,
        store: &CorpusStore,
        commit_hash: &str,
        diagnostics: &mut Vec<Diagnostic>,
    ) -> Result<Vec<FileSmells>, CorpusError> {
        let mut paths: Vec<&str> = store
            .changes_for(commit_hash)
            .map(|c| c.file_path.as_str())
            .filter(|p| self.extensions.iter().any(|e| p.ends_with(e.as_str())))
            .collect();
        paths.sort_unstable();
        paths.dedup();
        let snapshot_known = self.by_commit.contains_key(commit_hash);
        Ok(paths
            .into_iter()
            .map(|path| {
                let current = match self.lookup(commit_hash, path) {
                    Some(v) => Some(*v),
                    None if self.missing_means_clean && snapshot_known => Some(SmellVector::default()),
                    None => {
                        diagnostics.push(Diagnostic::new(
                            format!("{commit_hash} {path}"),
                            "no smell data for changed file; counted as zero delta",
                        ));
                        None
                    }
                };
                FileSmells {
                    file_path: path.to_string(),
                    current,
                    previous: self.previous(store, commit_hash, path),
                }
            })
            .collect())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LabeledSample {
    pub issue_id: String,
    pub commit_hash: String,
    pub text: String,
    /// 1 = refer to designer.
    pub label: u8,
    pub total_added_smells: u32,
    pub raw_signed_sum: i32,
}

/// Class balance of a labeled dataset, one row of the statistics file.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DatasetStats {
    pub project: String,
    pub class1: usize,
    pub total: usize,
    pub class1_percent: f64,
}

impl DatasetStats {
    pub fn new(project: impl Into<String>, class1: usize, total: usize) -> Self {
        let class1_percent = if total == 0 {
            0.0
        } else {
            100.0 * class1 as f64 / total as f64
        };
        DatasetStats {
            project: project.into(),
            class1,
            total,
            class1_percent,
        }
    }

    pub fn of(project: impl Into<String>, samples: &[LabeledSample]) -> Self {
        Self::new(project, samples.iter().filter(|s| s.label == 1).count(), samples.len())
    }

    pub const TSV_HEADER: &'static str = "project\tclass1\ttotal\tclass1_percent";

    /// Percent rounded to a whole number.
    pub fn to_tsv_row(&self) -> String {
        format!(
            "{}\t{}\t{}\t{:.0}",
            self.project, self.class1, self.total, self.class1_percent
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SkippedIssue {
    pub issue_id: String,
    pub reason: String,
}

#[derive(Debug, Clone, Default)]
pub struct LabelOptions {
    pub project: String,
    pub text: TextOptions,
}

#[derive(Debug, Clone)]
pub struct LabeledDataset {
    pub samples: Vec<LabeledSample>,
    pub stats: DatasetStats,
    pub skipped: Vec<SkippedIssue>,
    pub diagnostics: Vec<Diagnostic>,
}

impl LabeledDataset {
    pub fn to_jsonl(&self) -> String {
        samples_to_jsonl(&self.samples)
    }
}

pub fn samples_to_jsonl(samples: &[LabeledSample]) -> String {
    samples.iter().fold(String::new(), |mut out, s| {
        let _ = writeln!(out, "{}", serde_json::to_string(s).expect("sample serializes"));
        out
    })
}

/// Parse a labeled dataset file; errors carry the 1-based line number.
pub fn samples_from_jsonl(text: &str) -> Result<Vec<LabeledSample>, String> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(n, l)| {
            let s: LabeledSample = serde_json::from_str(l).map_err(|e| format!("line {}: {e}", n + 1))?;
            if s.label > 1 {
                return Err(format!("line {}: label {} is not 0 or 1", n + 1, s.label));
            }
            Ok(s)
        })
        .collect()
}

/// Stemmed summary and description joined by a space. Stemmed fields from
/// the corpus are used when present, otherwise the raw text is stemmed.
pub fn issue_text(issue: &IssueRecord, opts: TextOptions) -> String {
    let summary = issue
        .summary_stemmed
        .clone()
        .unwrap_or_else(|| stem_text(&issue.summary_raw, opts));
    let description = issue
        .description_stemmed
        .clone()
        .unwrap_or_else(|| stem_text(&issue.description_raw, opts));
    [summary.trim(), description.trim()]
        .into_iter()
        .filter(|s| !s.is_empty())
        .collect::<Vec<_>>()
        .join(" ")
}

/// Label every bug of the store. Per-issue problems skip that issue; a
/// missing repository or git executable aborts.
pub fn build_labeled_dataset(
    store: &CorpusStore,
    source: &dyn SmellSource,
    opts: &LabelOptions,
) -> Result<LabeledDataset, CorpusError> {
    let mut bugs: Vec<&IssueRecord> = store
        .issues()
        .iter()
        .filter(|i| i.issue_type == IssueType::Bug)
        .collect();
    bugs.sort_by(|a, b| a.issue_id.cmp(&b.issue_id));

    let mut samples = Vec::new();
    let mut skipped = Vec::new();
    let mut diagnostics = Vec::new();
    let mut skip = |issue_id: &str, reason: String| {
        skipped.push(SkippedIssue {
            issue_id: issue_id.to_string(),
            reason,
        })
    };
    for issue in bugs {
        let id = issue.issue_id.as_str();
        let text = issue_text(issue, opts.text);
        if text.is_empty() {
            skip(id, "empty text".into());
            continue;
        }
        let hash = match store.resolve_fix_commit(id) {
            Ok(h) => h,
            Err(e) => {
                skip(id, e.to_string());
                continue;
            }
        };
        let files = match source.file_smells(store, hash, &mut diagnostics) {
            Ok(f) => f,
            Err(e @ (CorpusError::VcsMissing(_) | CorpusError::NoRepository)) => return Err(e),
            Err(e) => {
                skip(id, e.to_string());
                continue;
            }
        };
        let deltas: Vec<SmellDelta> = files
            .iter()
            .map(|f| match &f.current {
                Some(cur) => smell_delta(hash, &f.file_path, cur, f.previous.as_ref()),
                None => smell_delta(hash, &f.file_path, &SmellVector::default(), None),
            })
            .collect();
        let outcome = label_commit(&deltas);
        if let Some(d) = outcome.diagnostic {
            diagnostics.push(Diagnostic::new(format!("{id} {hash}"), d.message));
        }
        samples.push(LabeledSample {
            issue_id: id.to_string(),
            commit_hash: hash.to_string(),
            text,
            label: outcome.label,
            total_added_smells: deltas.iter().map(|d| d.total_added).sum(),
            raw_signed_sum: deltas.iter().map(|d| d.raw_signed).sum(),
        });
    }
    let stats = DatasetStats::of(opts.project.clone(), &samples);
    Ok(LabeledDataset {
        samples,
        stats,
        skipped,
        diagnostics,
    })
}
