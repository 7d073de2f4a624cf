//! Stratified k-fold cross-validation and confusion-matrix metrics.

mod report;
pub mod synthetic;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::balance::{from_indices, smote, to_indices, BalanceError, Rounding, SmoteScope};
use crate::labeler::LabeledSample;
use crate::nnet::{init_model, predict, train, ModelConfig, NnetError, TrainParams};
use crate::textprep::{doc2indices, Dictionary, TokenDocument};
use crate::Diagnostic;

pub use report::{fold_rows_jsonl, report_tsv, TSV_COLUMNS};

#[derive(Debug, Error)]
pub enum EvalError {
    #[error("k must be at least 2, got {0}")]
    BadK(usize),
    #[error("class {class} has {count} sample(s), fewer than k={k}")]
    ClassTooSmall { class: u8, count: usize, k: usize },
    #[error("label {label} at position {index} is not 0 or 1")]
    BadLabel { index: usize, label: u8 },
    #[error("fold {fold}: {source}")]
    Train {
        fold: usize,
        #[source]
        source: NnetError,
    },
    #[error("fold {fold}: {source}")]
    Balance {
        fold: usize,
        #[source]
        source: BalanceError,
    },
    #[error("balancing before the split: {0}")]
    BalanceAll(#[source] BalanceError),
    #[error(transparent)]
    Model(#[from] NnetError),
}

/// Fold id of every sample.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FoldPlan {
    pub k: usize,
    pub assignments: Vec<usize>,
}

impl FoldPlan {
    pub fn test_indices(&self, fold: usize) -> Vec<usize> {
        (0..self.assignments.len())
            .filter(|&i| self.assignments[i] == fold)
            .collect()
    }

    pub fn train_indices(&self, fold: usize) -> Vec<usize> {
        (0..self.assignments.len())
            .filter(|&i| self.assignments[i] != fold)
            .collect()
    }
}

/// Shuffle each class with the seed and deal it round-robin into `k` folds.
/// The dealing position carries over from class 0 to class 1 so the
/// remainders land on different folds.
pub fn stratified_folds(labels: &[u8], k: usize, seed: u64) -> Result<FoldPlan, EvalError> {
    if k < 2 {
        return Err(EvalError::BadK(k));
    }
    if let Some(index) = labels.iter().position(|&l| l > 1) {
        return Err(EvalError::BadLabel {
            index,
            label: labels[index],
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut assignments = vec![0; labels.len()];
    let mut next = 0usize;
    for class in [0u8, 1] {
        let mut members: Vec<usize> = (0..labels.len()).filter(|&i| labels[i] == class).collect();
        if members.len() < k {
            return Err(EvalError::ClassTooSmall {
                class,
                count: members.len(),
                k,
            });
        }
        members.shuffle(&mut rng);
        for i in members {
            assignments[i] = next % k;
            next += 1;
        }
    }
    Ok(FoldPlan { k, assignments })
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConfusionMatrix {
    pub tp: usize,
    pub fp: usize,
    #[serde(rename = "fn")]
    pub fn_: usize,
    pub tn: usize,
}

impl ConfusionMatrix {
    pub fn from_predictions(truth: &[u8], predicted: &[u8]) -> Self {
        let mut cm = ConfusionMatrix::default();
        for (&t, &p) in truth.iter().zip(predicted) {
            match (t, p) {
                (1, 1) => cm.tp += 1,
                (0, 1) => cm.fp += 1,
                (1, 0) => cm.fn_ += 1,
                _ => cm.tn += 1,
            }
        }
        cm
    }

    pub fn total(&self) -> usize {
        self.tp + self.fp + self.fn_ + self.tn
    }
}

/// Percentages; a ratio with a zero denominator is 0 and flagged.
#[derive(Debug, Clone, Copy, Default, PartialEq, Serialize, Deserialize)]
pub struct Metrics {
    pub accuracy: f64,
    pub precision: f64,
    pub recall: f64,
    pub f1: f64,
    pub precision_undefined: bool,
    pub recall_undefined: bool,
    pub f1_undefined: bool,
}

fn ratio(num: usize, den: usize) -> (f64, bool) {
    if den == 0 {
        (0.0, true)
    } else {
        (100.0 * num as f64 / den as f64, false)
    }
}

pub fn compute_metrics(cm: &ConfusionMatrix) -> Metrics {
    let (accuracy, _) = ratio(cm.tp + cm.tn, cm.total());
    let (precision, precision_undefined) = ratio(cm.tp, cm.tp + cm.fp);
    let (recall, recall_undefined) = ratio(cm.tp, cm.tp + cm.fn_);
    let f1_undefined = precision_undefined || recall_undefined || precision + recall == 0.0;
    let f1 = if f1_undefined {
        0.0
    } else {
        2.0 * precision * recall / (precision + recall)
    };
    Metrics {
        accuracy,
        precision,
        recall,
        f1,
        precision_undefined,
        recall_undefined,
        f1_undefined,
    }
}

/// Balancing settings.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct BalanceConfig {
    pub k_neighbors: usize,
    pub scope: SmoteScope,
    pub rounding: bool,
}

impl Default for BalanceConfig {
    fn default() -> Self {
        BalanceConfig {
            k_neighbors: 5,
            scope: SmoteScope::TrainOnly,
            rounding: true,
        }
    }
}

/// Index sequences with labels, ready for training.
#[derive(Debug, Clone, PartialEq)]
pub struct Dataset {
    pub inputs: Vec<Vec<u32>>,
    pub labels: Vec<u8>,
    pub vocab_size: usize,
}

impl Dataset {
    fn subset(&self, idx: &[usize]) -> (Vec<Vec<u32>>, Vec<u8>) {
        (
            idx.iter().map(|&i| self.inputs[i].clone()).collect(),
            idx.iter().map(|&i| self.labels[i]).collect(),
        )
    }
}

/// Build the dictionary over all sample texts and map each to indices.
pub fn prepare_dataset(samples: &[LabeledSample], seq_len: usize, max_words: Option<usize>) -> (Dictionary, Dataset) {
    let docs: Vec<TokenDocument> = samples
        .iter()
        .map(|s| TokenDocument::from_stemmed(s.issue_id.clone(), &s.text))
        .collect();
    let dict = Dictionary::build(&docs, max_words);
    let inputs = docs.iter().map(|d| doc2indices(d, &dict, seq_len).0).collect();
    let dataset = Dataset {
        inputs,
        labels: samples.iter().map(|s| s.label).collect(),
        vocab_size: dict.vocab_size(),
    };
    (dict, dataset)
}

/// Run metadata carried into every report row.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunMeta {
    pub project: String,
    pub class1: usize,
    pub total: usize,
    pub class1_percent: f64,
    pub sampling: String,
    pub test_percent: f64,
    pub epochs: usize,
    pub seed: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MetricsRow {
    /// 1-based fold number; `None` for the mean row.
    pub fold: Option<usize>,
    pub train_accuracy: f64,
    pub train_loss: f64,
    #[serde(flatten)]
    pub metrics: Metrics,
    pub confusion: ConfusionMatrix,
    pub train_size: usize,
    pub synthetic_in_train: usize,
    pub synthetic_in_test: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExperimentReport {
    pub meta: RunMeta,
    pub folds: Vec<MetricsRow>,
    pub mean: MetricsRow,
    #[serde(skip)]
    pub diagnostics: Vec<Diagnostic>,
}

/// Unweighted mean of the fold rows. Confusion counts are summed.
pub fn mean_row(rows: &[MetricsRow]) -> MetricsRow {
    let n = rows.len().max(1) as f64;
    let avg = |f: &dyn Fn(&MetricsRow) -> f64| rows.iter().map(f).sum::<f64>() / n;
    let mut confusion = ConfusionMatrix::default();
    for r in rows {
        confusion.tp += r.confusion.tp;
        confusion.fp += r.confusion.fp;
        confusion.fn_ += r.confusion.fn_;
        confusion.tn += r.confusion.tn;
    }
    MetricsRow {
        fold: None,
        train_accuracy: avg(&|r| r.train_accuracy),
        train_loss: avg(&|r| r.train_loss),
        metrics: Metrics {
            accuracy: avg(&|r| r.metrics.accuracy),
            precision: avg(&|r| r.metrics.precision),
            recall: avg(&|r| r.metrics.recall),
            f1: avg(&|r| r.metrics.f1),
            precision_undefined: rows.iter().any(|r| r.metrics.precision_undefined),
            recall_undefined: rows.iter().any(|r| r.metrics.recall_undefined),
            f1_undefined: rows.iter().any(|r| r.metrics.f1_undefined),
        },
        confusion,
        train_size: rows.iter().map(|r| r.train_size).sum::<usize>() / rows.len().max(1),
        synthetic_in_train: rows.iter().map(|r| r.synthetic_in_train).sum(),
        synthetic_in_test: rows.iter().map(|r| r.synthetic_in_test).sum(),
    }
}

#[derive(Debug, Clone)]
pub struct ExperimentConfig {
    pub project: String,
    pub model: ModelConfig,
    pub train: TrainParams,
    pub balance: BalanceConfig,
    pub folds: usize,
    pub seed: u64,
}

/// Seeds for the three random consumers of one fold, derived from
/// `seed ^ fold`.
fn fold_seeds(seed: u64, fold: usize) -> (u64, u64, u64) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ fold as u64);
    (rng.random(), rng.random(), rng.random())
}

fn rounding(cfg: &BalanceConfig, vocab_size: usize) -> Rounding {
    if cfg.rounding {
        Rounding::ToIndex { vocab_size }
    } else {
        Rounding::Off
    }
}

/// Train and test a fresh model on each fold and average the results.
pub fn run_kfold_experiment(data: &Dataset, cfg: &ExperimentConfig) -> Result<ExperimentReport, EvalError> {
    let mut model_cfg = cfg.model.clone();
    model_cfg.vocab_size = data.vocab_size;
    model_cfg.shapes()?;
    let mut diagnostics = Vec::new();

    // With scope "all" the dataset is balanced before folds are drawn.
    let mut synthetic = vec![false; data.inputs.len()];
    let balanced;
    let data = if cfg.balance.scope == SmoteScope::All {
        let out = smote(
            &from_indices(&data.inputs, &data.labels),
            cfg.balance.k_neighbors,
            cfg.seed,
            rounding(&cfg.balance, data.vocab_size),
        )
        .map_err(EvalError::BalanceAll)?;
        diagnostics.extend(out.diagnostics);
        synthetic = out.samples.iter().map(|s| s.synthetic()).collect();
        balanced = Dataset {
            inputs: out.samples.iter().map(|s| to_indices(&s.values)).collect(),
            labels: out.samples.iter().map(|s| s.label).collect(),
            vocab_size: data.vocab_size,
        };
        &balanced
    } else {
        data
    };

    let plan = stratified_folds(&data.labels, cfg.folds, cfg.seed)?;
    let mut rows = Vec::with_capacity(cfg.folds);
    for fold in 0..cfg.folds {
        let started = std::time::Instant::now();
        let (init_seed, smote_seed, train_seed) = fold_seeds(cfg.seed, fold);
        let test_idx = plan.test_indices(fold);
        let train_idx = plan.train_indices(fold);
        let (mut xs, mut ys) = data.subset(&train_idx);
        let mut synthetic_in_train = train_idx.iter().filter(|&&i| synthetic[i]).count();
        if cfg.balance.scope == SmoteScope::TrainOnly {
            let out = smote(
                &from_indices(&xs, &ys),
                cfg.balance.k_neighbors,
                smote_seed,
                rounding(&cfg.balance, data.vocab_size),
            )
            .map_err(|source| EvalError::Balance { fold, source })?;
            diagnostics.extend(out.diagnostics);
            synthetic_in_train = out.samples.iter().filter(|s| s.synthetic()).count();
            xs = out.samples.iter().map(|s| to_indices(&s.values)).collect();
            ys = out.samples.iter().map(|s| s.label).collect();
        }
        let model = init_model(model_cfg.clone(), init_seed).map_err(|source| EvalError::Train { fold, source })?;
        let (trained, history) =
            train(&model, &xs, &ys, &cfg.train, train_seed).map_err(|source| EvalError::Train { fold, source })?;
        let (tx, ty) = data.subset(&test_idx);
        let predicted = tx
            .iter()
            .map(|x| predict(&trained, x).map(|(label, _)| label))
            .collect::<Result<Vec<u8>, _>>()
            .map_err(|source| EvalError::Train { fold, source })?;
        let confusion = ConfusionMatrix::from_predictions(&ty, &predicted);
        let last = history.last();
        let row = MetricsRow {
            fold: Some(fold + 1),
            train_accuracy: last.map_or(0.0, |e| e.accuracy),
            train_loss: last.map_or(0.0, |e| e.loss),
            metrics: compute_metrics(&confusion),
            confusion,
            train_size: xs.len(),
            synthetic_in_train,
            synthetic_in_test: test_idx.iter().filter(|&&i| synthetic[i]).count(),
        };
        log::info!(
            "fold {}/{}: accuracy {:.2}% precision {:.2}% recall {:.2}% ({:.1}s)",
            fold + 1,
            cfg.folds,
            row.metrics.accuracy,
            row.metrics.precision,
            row.metrics.recall,
            started.elapsed().as_secs_f64()
        );
        rows.push(row);
    }

    let original: Vec<usize> = (0..data.labels.len()).filter(|&i| !synthetic[i]).collect();
    let class1 = original.iter().filter(|&&i| data.labels[i] == 1).count();
    let meta = RunMeta {
        project: cfg.project.clone(),
        class1,
        total: original.len(),
        class1_percent: if original.is_empty() {
            0.0
        } else {
            100.0 * class1 as f64 / original.len() as f64
        },
        sampling: cfg.balance.scope.name().to_string(),
        test_percent: 100.0 / cfg.folds as f64,
        epochs: cfg.train.epochs,
        seed: cfg.seed,
    };
    Ok(ExperimentReport {
        meta,
        mean: mean_row(&rows),
        folds: rows,
        diagnostics,
    })
}
