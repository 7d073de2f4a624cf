//! SMOTE oversampling of the minority class.

use std::collections::hash_map::Entry;
use std::collections::HashMap;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::Diagnostic;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum BalanceError {
    #[error("minority class has {0} sample(s); SMOTE needs at least 2")]
    TooFewMinority(usize),
    #[error("only class {0} present; SMOTE needs both classes")]
    SingleClass(u8),
    #[error("sample {index} has dimension {got}, expected {expected}")]
    Dimension { index: usize, got: usize, expected: usize },
    #[error("sample {index} has label {label}, expected 0 or 1")]
    Label { index: usize, label: u8 },
}

/// Where SMOTE runs relative to the train/test split.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SmoteScope {
    /// Inside each training fold only.
    TrainOnly,
    /// Once over the whole dataset before splitting.
    All,
    None,
}

impl SmoteScope {
    pub fn name(self) -> &'static str {
        match self {
            SmoteScope::TrainOnly => "train_only",
            SmoteScope::All => "all",
            SmoteScope::None => "none",
        }
    }
}

impl std::str::FromStr for SmoteScope {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "train_only" | "train" => Ok(SmoteScope::TrainOnly),
            "all" => Ok(SmoteScope::All),
            "none" => Ok(SmoteScope::None),
            other => Err(format!("unknown SMOTE scope {other:?} (train_only, all, none)")),
        }
    }
}

/// Post-processing of synthetic coordinates.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Rounding {
    Off,
    /// Round to the nearest integer and clip to `[0, vocab_size - 1]`.
    ToIndex {
        vocab_size: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FeatureVector {
    pub values: Vec<f64>,
    pub label: u8,
}

/// How a synthetic sample was made: `pre_round = x + g·(n − x)`, with `x`
/// and `n` indices into the input list.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SyntheticOrigin {
    pub x: usize,
    pub n: usize,
    pub g: f64,
    pub pre_round: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AugmentedSample {
    pub values: Vec<f64>,
    pub label: u8,
    /// `None` for an original sample.
    pub origin: Option<SyntheticOrigin>,
}

impl AugmentedSample {
    pub fn synthetic(&self) -> bool {
        self.origin.is_some()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SmoteOutput {
    /// Originals in input order, then synthetic samples in draw order.
    pub samples: Vec<AugmentedSample>,
    pub diagnostics: Vec<Diagnostic>,
}

fn sq_dist(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y) * (x - y)).sum()
}

/// Indices (into `minority`) of the `k` nearest other samples to
/// `minority[index]`, nearest first, ties to the lower index. When `k` is
/// too large it shrinks to `len - 1` and a diagnostic is returned.
pub fn k_nearest_minority(
    minority: &[&[f64]],
    index: usize,
    k: usize,
) -> Result<(Vec<usize>, Option<Diagnostic>), BalanceError> {
    if minority.len() <= 1 {
        return Err(BalanceError::TooFewMinority(minority.len()));
    }
    let mut diag = None;
    let mut k = k.max(1);
    if minority.len() <= k {
        diag = Some(Diagnostic::new(
            "smote",
            format!(
                "k={k} but only {} minority samples; using k={}",
                minority.len(),
                minority.len() - 1
            ),
        ));
        k = minority.len() - 1;
    }
    let me = minority[index];
    let mut others: Vec<(f64, usize)> = minority
        .iter()
        .enumerate()
        .filter(|&(j, _)| j != index)
        .map(|(j, v)| (sq_dist(me, v), j))
        .collect();
    others.sort_by(|a, b| a.0.total_cmp(&b.0).then(a.1.cmp(&b.1)));
    Ok((others.into_iter().take(k).map(|(_, j)| j).collect(), diag))
}

/// Oversample the smaller class until both classes have equal counts.
pub fn smote(samples: &[FeatureVector], k: usize, seed: u64, rounding: Rounding) -> Result<SmoteOutput, BalanceError> {
    let dim = samples.first().map_or(0, |s| s.values.len());
    for (index, s) in samples.iter().enumerate() {
        if s.values.len() != dim {
            return Err(BalanceError::Dimension {
                index,
                got: s.values.len(),
                expected: dim,
            });
        }
        if s.label > 1 {
            return Err(BalanceError::Label { index, label: s.label });
        }
    }
    let ones = samples.iter().filter(|s| s.label == 1).count();
    let zeros = samples.len() - ones;
    if ones == 0 || zeros == 0 {
        return Err(BalanceError::SingleClass(u8::from(ones > 0)));
    }
    let mut out = SmoteOutput {
        samples: samples
            .iter()
            .map(|s| AugmentedSample {
                values: s.values.clone(),
                label: s.label,
                origin: None,
            })
            .collect(),
        diagnostics: Vec::new(),
    };
    if ones == zeros {
        return Ok(out);
    }
    let minority_label = u8::from(ones < zeros);
    let deficit = ones.abs_diff(zeros);
    let members: Vec<usize> = (0..samples.len())
        .filter(|&i| samples[i].label == minority_label)
        .collect();
    let rows: Vec<&[f64]> = members.iter().map(|&i| samples[i].values.as_slice()).collect();

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut order: Vec<usize> = (0..members.len()).collect();
    order.shuffle(&mut rng);
    let mut neighbours: HashMap<usize, Vec<usize>> = HashMap::new();
    for step in 0..deficit {
        let xi = order[step % order.len()];
        if let Entry::Vacant(slot) = neighbours.entry(xi) {
            let (nn, diag) = k_nearest_minority(&rows, xi, k)?;
            if let Some(d) = diag {
                if out.diagnostics.is_empty() {
                    out.diagnostics.push(d);
                }
            }
            slot.insert(nn);
        }
        let nn = &neighbours[&xi];
        let ni = nn[rng.random_range(0..nn.len())];
        let g: f64 = rng.random();
        let (x, n) = (rows[xi], rows[ni]);
        let pre_round: Vec<f64> = x.iter().zip(n).map(|(a, b)| a + g * (b - a)).collect();
        let values = match rounding {
            Rounding::Off => pre_round.clone(),
            Rounding::ToIndex { vocab_size } => {
                let hi = vocab_size.saturating_sub(1) as f64;
                pre_round.iter().map(|v| v.round().clamp(0.0, hi)).collect()
            }
        };
        out.samples.push(AugmentedSample {
            values,
            label: minority_label,
            origin: Some(SyntheticOrigin {
                x: members[xi],
                n: members[ni],
                g,
                pre_round,
            }),
        });
    }
    Ok(out)
}

/// Index sequences as feature vectors.
pub fn from_indices(inputs: &[Vec<u32>], labels: &[u8]) -> Vec<FeatureVector> {
    inputs
        .iter()
        .zip(labels)
        .map(|(seq, &label)| FeatureVector {
            values: seq.iter().map(|&i| f64::from(i)).collect(),
            label,
        })
        .collect()
}

/// Rounded coordinates back to indices.
pub fn to_indices(values: &[f64]) -> Vec<u32> {
    values.iter().map(|&v| v.round().max(0.0) as u32).collect()
}

/// `id<TAB>label<TAB>indices<TAB>synthetic` line of the augmented dataset.
pub fn format_augmented_line(id: &str, sample: &AugmentedSample) -> String {
    let idx: Vec<String> = to_indices(&sample.values).iter().map(u32::to_string).collect();
    format!(
        "{id}\t{}\t{}\t{}",
        sample.label,
        idx.join(" "),
        u8::from(sample.synthetic())
    )
}
