#![allow(dead_code)]

pub mod smells;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::Command;

use tempfile::TempDir;

pub fn fixture(name: &str) -> String {
    let path = Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures/smells")
        .join(name);
    fs::read_to_string(path).unwrap()
}

/// A throwaway repository driven through the git executable.
pub struct GitFixture {
    pub dir: TempDir,
    count: u32,
}

impl GitFixture {
    pub fn new() -> Self {
        let dir = tempfile::tempdir().unwrap();
        let f = Self { dir, count: 0 };
        f.git(&["init", "-q"]);
        f.git(&["config", "user.name", "fixture"]);
        f.git(&["config", "user.email", "fixture@example.com"]);
        f.git(&["config", "commit.gpgsign", "false"]);
        f
    }

    pub fn root(&self) -> PathBuf {
        self.dir.path().to_path_buf()
    }

    pub fn git(&self, args: &[&str]) -> String {
        let out = Command::new("git")
            .args(args)
            .current_dir(self.dir.path())
            .env("GIT_AUTHOR_DATE", format!("2020-01-0{}T10:00:00Z", self.count + 1))
            .env("GIT_COMMITTER_DATE", format!("2020-01-0{}T10:00:00Z", self.count + 1))
            .output()
            .expect("git runs");
        assert!(
            out.status.success(),
            "git {args:?}: {}",
            String::from_utf8_lossy(&out.stderr)
        );
        String::from_utf8(out.stdout).unwrap().trim().to_string()
    }

    /// Write (or with `None`, delete) files and commit them; returns the hash.
    pub fn commit(&mut self, files: &[(&str, Option<&str>)], message: &str) -> String {
        for (path, content) in files {
            let full = self.dir.path().join(path);
            match content {
                Some(text) => {
                    fs::create_dir_all(full.parent().unwrap()).unwrap();
                    fs::write(&full, text).unwrap();
                }
                None => fs::remove_file(&full).unwrap(),
            }
        }
        self.git(&["add", "-A"]);
        self.git(&["commit", "-q", "--allow-empty", "-m", message]);
        self.count += 1;
        self.git(&["rev-parse", "HEAD"])
    }

    pub fn commit_date(&self, n: u32) -> String {
        format!("2020-01-0{n}T10:00:00Z")
    }
}

pub fn write_lines(path: &Path, lines: &[serde_json::Value]) {
    let text: String = lines.iter().map(|l| l.to_string() + "\n").collect();
    fs::write(path, text).unwrap();
}

/// The scripted five-commit project: three linked bugs, only the first of
/// which introduces a smell (a god class).
pub struct FiveCommitProject {
    pub repo: GitFixture,
    pub corpus: TempDir,
    pub hashes: Vec<String>,
}

pub const BUG_IDS: [&str; 3] = ["DEMO-1", "DEMO-2", "DEMO-3"];

pub fn five_commit_project() -> FiveCommitProject {
    let mut repo = GitFixture::new();
    let clean = fixture("Clean.java");
    let god = fixture("GodClass.java");
    let util = "package com.example.util;\n\npublic class Util {\n    public int twice(int v) {\n        return v * 2;\n    }\n}\n";
    let util2 = "package com.example.util;\n\npublic class Util {\n    public int twice(int v) {\n        return v + v;\n    }\n}\n";
    let clean2 = clean.replacen("public class Clean", "// touched\npublic class Clean", 1);
    let god2 = god.replacen("public class Manager", "// touched\npublic class Manager", 1);
    let hashes = vec![
        repo.commit(
            &[
                ("src/Clean.java", Some(&clean)),
                ("src/Util.java", Some(util)),
                ("README", Some("demo\n")),
            ],
            "initial import",
        ),
        repo.commit(&[("src/Manager.java", Some(&god))], "DEMO-1 add manager"),
        repo.commit(&[("src/Clean.java", Some(&clean2))], "DEMO-2 tidy"),
        repo.commit(&[("README", Some("demo project\n"))], "docs"),
        repo.commit(
            &[("src/Util.java", Some(util2)), ("src/Manager.java", Some(&god2))],
            "DEMO-3 fix doubling",
        ),
    ];

    let corpus = tempfile::tempdir().unwrap();
    let summaries = [
        (
            "Manager ignores ordering of requests",
            "Requests are handled out of order by the manager",
        ),
        (
            "Clean output has trailing spaces",
            "Printing a clean report leaves spaces",
        ),
        (
            "Doubling overflows for large input",
            "twice() overflows when the input is large",
        ),
    ];
    let issues: Vec<_> = BUG_IDS
        .iter()
        .zip(summaries)
        .map(|(id, (s, d))| {
            serde_json::json!({
                "Issue_id": id, "Issue_type": "Bug",
                "Create_date": "2019-12-01T09:00:00Z", "Fixed_date": "2020-01-10T09:00:00Z",
                "Summary_raw": s, "Description_raw": d,
            })
        })
        .collect();
    write_lines(&corpus.path().join("issues.jsonl"), &issues);
    let commits: Vec<_> = hashes
        .iter()
        .enumerate()
        .map(|(i, h)| serde_json::json!({"Commit_Hash": h, "Committed_Date": repo.commit_date(i as u32 + 1)}))
        .collect();
    write_lines(&corpus.path().join("change_set.jsonl"), &commits);
    let changes = [
        (0, "src/Clean.java"),
        (0, "src/Util.java"),
        (1, "src/Manager.java"),
        (2, "src/Clean.java"),
        (4, "src/Util.java"),
        (4, "src/Manager.java"),
    ];
    let changes: Vec<_> = changes
        .iter()
        .map(|(i, p)| {
            serde_json::json!({"Commit_Hash": hashes[*i], "File_path": p, "Sum_added_lines": 1, "Sum_removed_lines": 0})
        })
        .collect();
    write_lines(&corpus.path().join("code_change.jsonl"), &changes);
    let links: Vec<_> = [(0, 1), (1, 2), (2, 4)]
        .iter()
        .map(|(b, c)| serde_json::json!({"Issue_id": BUG_IDS[*b], "Commit_Hash": hashes[*c]}))
        .collect();
    write_lines(&corpus.path().join("change_set_link.jsonl"), &links);
    FiveCommitProject { repo, corpus, hashes }
}

impl FiveCommitProject {
    /// A config file pointing at the corpus, the repository and `out`.
    pub fn config(&self, out: &Path) -> PathBuf {
        let c = self.corpus.path();
        let text = format!(
            "project = \"demo\"\n\n[paths]\nissues = {:?}\ncommits = {:?}\nchanges = {:?}\nlinks = {:?}\nrepo = {:?}\nout = {:?}\n",
            c.join("issues.jsonl"),
            c.join("change_set.jsonl"),
            c.join("code_change.jsonl"),
            c.join("change_set_link.jsonl"),
            self.repo.root(),
            out
        );
        let path = c.join("run.toml");
        fs::write(&path, text).unwrap();
        path
    }
}
