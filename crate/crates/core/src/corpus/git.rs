//! Thin wrapper over the `git` executable.

use std::path::{Path, PathBuf};
use std::process::Command;

use super::CorpusError;

/// How a path changed between a commit and its first parent.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ChangeStatus {
    Added,
    Modified,
    Deleted,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChangedPath {
    pub path: String,
    pub status: ChangeStatus,
    pub added_lines: u64,
    pub removed_lines: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParentInfo {
    pub first_parent: Option<String>,
    pub is_merge: bool,
}

/// A changed source file with its content at the commit and at the parent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChangedFile {
    pub file_path: String,
    pub content_at_commit: String,
    /// `None` when the file was created by this commit.
    pub content_at_parent: Option<String>,
}

#[derive(Debug, Clone)]
pub struct GitRepo {
    root: PathBuf,
    git: PathBuf,
    extensions: Vec<String>,
}

impl GitRepo {
    pub fn new(root: impl Into<PathBuf>) -> Self {
        Self {
            root: root.into(),
            git: PathBuf::from("git"),
            extensions: vec![".java".to_string()],
        }
    }

    /// Use a specific git executable instead of the one on `PATH`.
    pub fn with_executable(mut self, git: impl Into<PathBuf>) -> Self {
        self.git = git.into();
        self
    }

    pub fn with_extensions(mut self, extensions: Vec<String>) -> Self {
        self.extensions = extensions;
        self
    }

    pub fn root(&self) -> &Path {
        &self.root
    }

    pub fn is_source_file(&self, path: &str) -> bool {
        self.extensions.iter().any(|ext| path.ends_with(ext.as_str()))
    }

    fn run(&self, args: &[&str]) -> Result<Result<Vec<u8>, String>, CorpusError> {
        let output = Command::new(&self.git)
            .arg("-C")
            .arg(&self.root)
            .args(args)
            .output()
            .map_err(|e| {
                if e.kind() == std::io::ErrorKind::NotFound {
                    CorpusError::VcsMissing(self.git.display().to_string())
                } else {
                    CorpusError::Io {
                        path: self.git.display().to_string(),
                        source: e,
                    }
                }
            })?;
        if output.status.success() {
            Ok(Ok(output.stdout))
        } else {
            Ok(Err(String::from_utf8_lossy(&output.stderr).trim().to_string()))
        }
    }

    fn ensure_commit(&self, hash: &str) -> Result<(), CorpusError> {
        let spec = format!("{hash}^{{commit}}");
        match self.run(&["cat-file", "-e", &spec])? {
            Ok(_) => Ok(()),
            Err(_) => Err(CorpusError::UnknownCommit(hash.to_string())),
        }
    }

    pub fn parent_of(&self, hash: &str) -> Result<ParentInfo, CorpusError> {
        self.ensure_commit(hash)?;
        let out = self
            .run(&["rev-list", "--parents", "-n", "1", hash])?
            .map_err(|msg| CorpusError::Vcs {
                hash: hash.to_string(),
                message: msg,
            })?;
        let text = String::from_utf8_lossy(&out);
        let mut fields = text.split_whitespace().skip(1);
        let first_parent = fields.next().map(str::to_string);
        let is_merge = fields.next().is_some();
        Ok(ParentInfo { first_parent, is_merge })
    }

    /// Every path changed relative to the first parent; renames are reported
    /// as a delete plus an add.
    pub fn list_changed_paths(&self, hash: &str) -> Result<Vec<ChangedPath>, CorpusError> {
        let parent = self.parent_of(hash)?;
        let range: Vec<&str> = match &parent.first_parent {
            Some(p) => vec![p.as_str(), hash],
            None => vec!["--root", hash],
        };
        let mut status_args = vec!["diff-tree", "-r", "--no-commit-id", "--no-renames", "--name-status"];
        status_args.extend(range.iter().copied());
        let mut numstat_args = vec!["diff-tree", "-r", "--no-commit-id", "--no-renames", "--numstat"];
        numstat_args.extend(range.iter().copied());

        let vcs_err = |msg| CorpusError::Vcs {
            hash: hash.to_string(),
            message: msg,
        };
        let status_out = self.run(&status_args)?.map_err(vcs_err)?;
        let numstat_out = self.run(&numstat_args)?.map_err(|msg| CorpusError::Vcs {
            hash: hash.to_string(),
            message: msg,
        })?;

        let mut counts = std::collections::HashMap::new();
        for line in String::from_utf8_lossy(&numstat_out).lines() {
            let mut parts = line.splitn(3, '\t');
            let (Some(a), Some(r), Some(path)) = (parts.next(), parts.next(), parts.next()) else {
                continue;
            };
            // binary files report "-"
            counts.insert(path.to_string(), (a.parse().unwrap_or(0), r.parse().unwrap_or(0)));
        }

        let mut changed = Vec::new();
        for line in String::from_utf8_lossy(&status_out).lines() {
            let mut parts = line.splitn(2, '\t');
            let (Some(code), Some(path)) = (parts.next(), parts.next()) else {
                continue;
            };
            let status = match code.chars().next() {
                Some('A') => ChangeStatus::Added,
                Some('D') => ChangeStatus::Deleted,
                _ => ChangeStatus::Modified,
            };
            let (added_lines, removed_lines) = counts.get(path).copied().unwrap_or((0, 0));
            changed.push(ChangedPath {
                path: path.to_string(),
                status,
                added_lines,
                removed_lines,
            });
        }
        changed.sort_by(|a, b| a.path.cmp(&b.path));
        Ok(changed)
    }

    pub fn show_file(&self, hash: &str, path: &str) -> Result<String, CorpusError> {
        let spec = format!("{hash}:{path}");
        let out = self.run(&["show", &spec])?.map_err(|msg| CorpusError::Vcs {
            hash: hash.to_string(),
            message: msg,
        })?;
        Ok(String::from_utf8_lossy(&out).into_owned())
    }

    /// Changed source files of `hash` with their content at the commit and at
    /// its first parent, ordered by path. Deleted files are omitted.
    pub fn changed_files_with_contents(&self, hash: &str) -> Result<Vec<ChangedFile>, CorpusError> {
        let parent = self.parent_of(hash)?;
        let mut files = Vec::new();
        for change in self.list_changed_paths(hash)? {
            if change.status == ChangeStatus::Deleted || !self.is_source_file(&change.path) {
                continue;
            }
            let content_at_commit = self.show_file(hash, &change.path)?;
            let content_at_parent = match (&parent.first_parent, change.status) {
                (Some(p), ChangeStatus::Modified) => Some(self.show_file(p, &change.path)?),
                _ => None,
            };
            files.push(ChangedFile {
                file_path: change.path,
                content_at_commit,
                content_at_parent,
            });
        }
        Ok(files)
    }
}
