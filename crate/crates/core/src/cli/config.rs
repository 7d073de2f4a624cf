use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::balance::SmoteScope;
use crate::eval::BalanceConfig;
use crate::nnet::{ModelConfig, TrainParams};
use crate::smellscan::RuleThresholds;
use crate::textprep::{TextOptions, DEFAULT_SEQUENCE_LENGTH};

/// Everything a run needs. Only the corpus paths lack defaults.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct RunConfig {
    pub project: String,
    pub seed: u64,
    pub verbose: bool,
    pub paths: PathsConfig,
    pub smells: RuleThresholds,
    pub text: TextConfig,
    pub model: ModelSection,
    pub balance: BalanceSection,
    pub eval: EvalSection,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            project: "project".into(),
            seed: 42,
            verbose: false,
            paths: PathsConfig::default(),
            smells: RuleThresholds::default(),
            text: TextConfig::default(),
            model: ModelSection::default(),
            balance: BalanceSection::default(),
            eval: EvalSection::default(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PmdInput {
    /// Commit whose snapshot the report was taken on.
    pub commit: String,
    pub report: PathBuf,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct PathsConfig {
    pub issues: Option<PathBuf>,
    pub commits: Option<PathBuf>,
    pub changes: Option<PathBuf>,
    pub links: Option<PathBuf>,
    pub repo: Option<PathBuf>,
    /// Smell-vector table written by `scan-smells`.
    pub smells: Option<PathBuf>,
    pub pmd: Vec<PmdInput>,
    pub extensions: Vec<String>,
    pub out: PathBuf,
    /// Defaults to `<out>/dataset.jsonl`.
    pub dataset: Option<PathBuf>,
    /// Defaults to `<out>/model.bin`.
    pub model: Option<PathBuf>,
    /// Defaults to `<out>/dictionary.tsv`.
    pub dictionary: Option<PathBuf>,
}

impl Default for PathsConfig {
    fn default() -> Self {
        PathsConfig {
            issues: None,
            commits: None,
            changes: None,
            links: None,
            repo: None,
            smells: None,
            pmd: Vec::new(),
            extensions: vec![".java".into()],
            out: PathBuf::from("out"),
            dataset: None,
            model: None,
            dictionary: None,
        }
    }
}

impl PathsConfig {
    fn or_out(&self, p: &Option<PathBuf>, name: &str) -> PathBuf {
        p.clone().unwrap_or_else(|| self.out.join(name))
    }

    pub fn dataset_path(&self) -> PathBuf {
        self.or_out(&self.dataset, "dataset.jsonl")
    }

    pub fn model_path(&self) -> PathBuf {
        self.or_out(&self.model, "model.bin")
    }

    pub fn dictionary_path(&self) -> PathBuf {
        self.or_out(&self.dictionary, "dictionary.tsv")
    }

    pub fn out_file(&self, name: &str) -> PathBuf {
        self.out.join(name)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct TextConfig {
    pub seq_len: usize,
    pub max_words: Option<usize>,
    pub remove_stopwords: bool,
}

impl Default for TextConfig {
    fn default() -> Self {
        TextConfig {
            seq_len: DEFAULT_SEQUENCE_LENGTH,
            max_words: None,
            remove_stopwords: false,
        }
    }
}

impl TextConfig {
    pub fn options(&self) -> TextOptions {
        TextOptions {
            remove_stopwords: self.remove_stopwords,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct ModelSection {
    pub embed_dim: usize,
    pub conv1_filters: usize,
    pub conv1_width: usize,
    pub conv2_filters: usize,
    pub conv2_width: usize,
    pub pool_size: usize,
    pub dropout: f64,
    pub learning_rate: f64,
    pub beta1: f64,
    pub beta2: f64,
    pub adam_eps: f64,
    pub batch_size: usize,
    pub epochs: usize,
}

impl Default for ModelSection {
    fn default() -> Self {
        let m = ModelConfig::default();
        let t = TrainParams::default();
        ModelSection {
            embed_dim: m.embed_dim,
            conv1_filters: m.conv1_filters,
            conv1_width: m.conv1_width,
            conv2_filters: m.conv2_filters,
            conv2_width: m.conv2_width,
            pool_size: m.pool_size,
            dropout: m.dropout,
            learning_rate: t.learning_rate,
            beta1: t.beta1,
            beta2: t.beta2,
            adam_eps: t.adam_eps,
            batch_size: t.batch_size,
            epochs: t.epochs,
        }
    }
}

impl ModelSection {
    pub fn model_config(&self, vocab_size: usize, seq_len: usize) -> ModelConfig {
        ModelConfig {
            vocab_size,
            seq_len,
            embed_dim: self.embed_dim,
            conv1_filters: self.conv1_filters,
            conv1_width: self.conv1_width,
            conv2_filters: self.conv2_filters,
            conv2_width: self.conv2_width,
            pool_size: self.pool_size,
            dropout: self.dropout,
        }
    }

    pub fn train_params(&self) -> TrainParams {
        TrainParams {
            learning_rate: self.learning_rate,
            beta1: self.beta1,
            beta2: self.beta2,
            adam_eps: self.adam_eps,
            batch_size: self.batch_size,
            epochs: self.epochs,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct BalanceSection {
    pub k_neighbors: usize,
    /// `train_only`, `all`, `none`, or `both` (evaluate runs the first two).
    pub scope: String,
    pub rounding: bool,
}

impl Default for BalanceSection {
    fn default() -> Self {
        BalanceSection {
            k_neighbors: 5,
            scope: "train_only".into(),
            rounding: true,
        }
    }
}

impl BalanceSection {
    pub fn scopes(&self) -> Result<Vec<SmoteScope>, String> {
        if self.scope == "both" {
            return Ok(vec![SmoteScope::TrainOnly, SmoteScope::All]);
        }
        Ok(vec![self.scope.parse()?])
    }

    pub fn config(&self, scope: SmoteScope) -> BalanceConfig {
        BalanceConfig {
            k_neighbors: self.k_neighbors,
            scope,
            rounding: self.rounding,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct EvalSection {
    pub folds: usize,
}

impl Default for EvalSection {
    fn default() -> Self {
        EvalSection { folds: 5 }
    }
}

/// Parse an override value as a TOML value, falling back to a bare string.
fn parse_value(raw: &str) -> toml::Value {
    format!("v = {raw}")
        .parse::<toml::Table>()
        .ok()
        .and_then(|mut t| t.remove("v"))
        .unwrap_or_else(|| toml::Value::String(raw.to_string()))
}

/// Set `dotted.key` in `table`, creating intermediate tables.
pub fn apply_override(table: &mut toml::Table, key: &str, raw: &str) -> Result<(), String> {
    let parts: Vec<&str> = key.split('.').collect();
    if parts.iter().any(|p| p.is_empty()) {
        return Err(format!("bad override key {key:?}"));
    }
    let (last, parents) = parts.split_last().expect("nonempty");
    let mut cur = table;
    for p in parents {
        let entry = cur
            .entry(p.to_string())
            .or_insert_with(|| toml::Value::Table(toml::Table::new()));
        cur = entry
            .as_table_mut()
            .ok_or_else(|| format!("override {key}: {p} is not a table"))?;
    }
    cur.insert(last.to_string(), parse_value(raw));
    Ok(())
}

/// Load the configuration file (if any) and apply `(key, value)` overrides.
pub fn load_config(path: Option<&Path>, overrides: &[(String, String)]) -> Result<RunConfig, String> {
    let mut table = match path {
        Some(p) => std::fs::read_to_string(p)
            .map_err(|e| format!("cannot read {}: {e}", p.display()))?
            .parse::<toml::Table>()
            .map_err(|e| format!("{}: {e}", p.display()))?,
        None => toml::Table::new(),
    };
    for (k, v) in overrides {
        apply_override(&mut table, k, v)?;
    }
    toml::Value::Table(table)
        .try_into::<RunConfig>()
        .map_err(|e| format!("configuration: {e}"))
}
