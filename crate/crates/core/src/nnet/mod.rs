//! Embedding + two convolution/max-pool stages + dropout + sigmoid, with
//! hand-written forward and backward passes.

mod forward;
mod io;
mod train;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Normal};
use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use forward::{backward, forward, forward_with_mask, Cache, Gradients};
pub use io::{load_model, load_model_bytes, save_model, save_model_bytes, MODEL_FORMAT_VERSION};
pub use train::{train, EpochStats, TrainHistory};

#[derive(Debug, Error)]
pub enum NnetError {
    #[error("invalid configuration at {stage}: {message}")]
    Config { stage: &'static str, message: String },
    #[error("input error at position {position}: {message}")]
    Input { position: usize, message: String },
    #[error("training set has a single class ({0}); both labels are required")]
    SingleClass(u8),
    #[error("model format error at byte {offset}: {message}")]
    Format { offset: u64, message: String },
    #[error("cannot access {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

/// Layer sizes. `vocab_size` comes from the dictionary.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct ModelConfig {
    pub vocab_size: usize,
    pub seq_len: usize,
    pub embed_dim: usize,
    pub conv1_filters: usize,
    pub conv1_width: usize,
    pub conv2_filters: usize,
    pub conv2_width: usize,
    pub pool_size: usize,
    pub dropout: f64,
}

impl Default for ModelConfig {
    fn default() -> Self {
        ModelConfig {
            vocab_size: 2,
            seq_len: 200,
            embed_dim: 128,
            conv1_filters: 64,
            conv1_width: 5,
            conv2_filters: 32,
            conv2_width: 5,
            pool_size: 2,
            dropout: 0.5,
        }
    }
}

/// Lengths along the sequence axis after each stage.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Shapes {
    pub conv1: usize,
    pub pool1: usize,
    pub conv2: usize,
    pub pool2: usize,
    /// `pool2 * conv2_filters`.
    pub flat: usize,
}

impl ModelConfig {
    pub fn shapes(&self) -> Result<Shapes, NnetError> {
        let err = |stage, message: String| Err(NnetError::Config { stage, message });
        if self.vocab_size < 2 {
            return err("embedding", format!("vocab_size {} < 2", self.vocab_size));
        }
        if self.embed_dim == 0 || self.conv1_filters == 0 || self.conv2_filters == 0 {
            return err("embedding", "dimensions and filter counts must be positive".into());
        }
        if self.conv1_width == 0 || self.conv2_width == 0 || self.pool_size == 0 {
            return err("conv1", "widths and pool size must be at least 1".into());
        }
        if !(0.0..1.0).contains(&self.dropout) {
            return err("dropout", format!("rate {} outside [0, 1)", self.dropout));
        }
        if self.conv1_width > self.seq_len {
            return err(
                "conv1",
                format!("width {} exceeds sequence length {}", self.conv1_width, self.seq_len),
            );
        }
        let conv1 = self.seq_len - self.conv1_width + 1;
        let pool1 = conv1 / self.pool_size;
        if pool1 == 0 {
            return err(
                "pool1",
                format!("pool size {} exceeds conv1 output length {conv1}", self.pool_size),
            );
        }
        if self.conv2_width > pool1 {
            return err(
                "conv2",
                format!("width {} exceeds pool1 output length {pool1}", self.conv2_width),
            );
        }
        let conv2 = pool1 - self.conv2_width + 1;
        let pool2 = conv2 / self.pool_size;
        if pool2 == 0 {
            return err(
                "pool2",
                format!("pool size {} exceeds conv2 output length {conv2}", self.pool_size),
            );
        }
        Ok(Shapes {
            conv1,
            pool1,
            conv2,
            pool2,
            flat: pool2 * self.conv2_filters,
        })
    }
}

/// Optimizer and schedule.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct TrainParams {
    pub learning_rate: f64,
    pub beta1: f64,
    pub beta2: f64,
    pub adam_eps: f64,
    pub batch_size: usize,
    pub epochs: usize,
}

impl Default for TrainParams {
    fn default() -> Self {
        TrainParams {
            learning_rate: 1e-3,
            beta1: 0.9,
            beta2: 0.999,
            adam_eps: 1e-8,
            batch_size: 32,
            epochs: 20,
        }
    }
}

/// Filters stored `[filter][offset][in_channel]`, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct ConvLayer {
    pub filters: usize,
    pub width: usize,
    pub in_channels: usize,
    pub weights: Vec<f64>,
    pub bias: Vec<f64>,
}

impl ConvLayer {
    fn zeros(filters: usize, width: usize, in_channels: usize) -> Self {
        ConvLayer {
            filters,
            width,
            in_channels,
            weights: vec![0.0; filters * width * in_channels],
            bias: vec![0.0; filters],
        }
    }

    /// Weights of filter `f` at offset `k`, one per input channel.
    #[inline]
    pub fn kernel(&self, f: usize, k: usize) -> &[f64] {
        let start = (f * self.width + k) * self.in_channels;
        &self.weights[start..start + self.in_channels]
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Model {
    pub config: ModelConfig,
    pub train_params: TrainParams,
    pub seed: u64,
    /// Content hash of the dictionary the model was trained with.
    pub dictionary_hash: Option<String>,
    /// `vocab_size × embed_dim`; row 0 stays zero.
    pub embedding: Vec<f64>,
    pub conv1: ConvLayer,
    pub conv2: ConvLayer,
    /// One weight per flattened unit, flattened position-major.
    pub dense_w: Vec<f64>,
    pub dense_b: f64,
}

impl Model {
    /// All parameters zero.
    pub fn zeros(config: ModelConfig) -> Result<Self, NnetError> {
        let s = config.shapes()?;
        Ok(Model {
            embedding: vec![0.0; config.vocab_size * config.embed_dim],
            conv1: ConvLayer::zeros(config.conv1_filters, config.conv1_width, config.embed_dim),
            conv2: ConvLayer::zeros(config.conv2_filters, config.conv2_width, config.conv1_filters),
            dense_w: vec![0.0; s.flat],
            dense_b: 0.0,
            train_params: TrainParams::default(),
            seed: 0,
            dictionary_hash: None,
            config,
        })
    }

    pub fn shapes(&self) -> Shapes {
        self.config.shapes().expect("model built from a validated config")
    }

    #[inline]
    pub fn embedding_row(&self, index: u32) -> &[f64] {
        let q = self.config.embed_dim;
        let start = index as usize * q;
        &self.embedding[start..start + q]
    }

    /// Parameter tensors in file order.
    pub fn tensors(&self) -> [(&'static str, &[f64]); 7] {
        [
            ("embedding", &self.embedding),
            ("conv1.weights", &self.conv1.weights),
            ("conv1.bias", &self.conv1.bias),
            ("conv2.weights", &self.conv2.weights),
            ("conv2.bias", &self.conv2.bias),
            ("dense.weights", &self.dense_w),
            ("dense.bias", std::slice::from_ref(&self.dense_b)),
        ]
    }

    pub fn tensors_mut(&mut self) -> [&mut [f64]; 7] {
        [
            &mut self.embedding,
            &mut self.conv1.weights,
            &mut self.conv1.bias,
            &mut self.conv2.weights,
            &mut self.conv2.bias,
            &mut self.dense_w,
            std::slice::from_mut(&mut self.dense_b),
        ]
    }

    pub fn parameter_count(&self) -> usize {
        self.tensors().iter().map(|(_, t)| t.len()).sum()
    }

    /// Check an input sequence against the configured length and vocabulary.
    pub fn check_input(&self, seq: &[u32]) -> Result<(), NnetError> {
        if seq.len() != self.config.seq_len {
            return Err(NnetError::Input {
                position: seq.len().min(self.config.seq_len),
                message: format!("sequence length {} != {}", seq.len(), self.config.seq_len),
            });
        }
        match seq.iter().position(|&i| i as usize >= self.config.vocab_size) {
            Some(p) => Err(NnetError::Input {
                position: p,
                message: format!("index {} >= vocabulary size {}", seq[p], self.config.vocab_size),
            }),
            None => Ok(()),
        }
    }
}

/// Embedding rows uniform in ±0.05 (row 0 zero), conv and dense weights
/// normal with variance 2/fan_in, biases zero.
pub fn init_model(config: ModelConfig, seed: u64) -> Result<Model, NnetError> {
    let mut model = Model::zeros(config)?;
    model.seed = seed;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let q = model.config.embed_dim;
    for v in &mut model.embedding[q..] {
        *v = rng.random_range(-0.05..0.05);
    }
    for conv in [&mut model.conv1, &mut model.conv2] {
        let std = (2.0 / (conv.width * conv.in_channels) as f64).sqrt();
        let normal = Normal::new(0.0, std).expect("finite std");
        conv.weights.iter_mut().for_each(|w| *w = normal.sample(&mut rng));
    }
    let normal = Normal::new(0.0, (2.0 / model.dense_w.len() as f64).sqrt()).expect("finite std");
    model.dense_w.iter_mut().for_each(|w| *w = normal.sample(&mut rng));
    Ok(model)
}

pub const LOSS_EPS: f64 = 1e-7;

/// Binary cross-entropy with the probability clipped to `[ε, 1−ε]`.
pub fn loss(prob: f64, label: u8) -> f64 {
    let p = prob.clamp(LOSS_EPS, 1.0 - LOSS_EPS);
    if label == 1 {
        -p.ln()
    } else {
        -(1.0 - p).ln()
    }
}

pub fn sigmoid(z: f64) -> f64 {
    if z >= 0.0 {
        1.0 / (1.0 + (-z).exp())
    } else {
        let e = z.exp();
        e / (1.0 + e)
    }
}

pub fn threshold(prob: f64) -> u8 {
    u8::from(prob >= 0.5)
}

/// Inference: label 1 iff the probability is at least 0.5.
pub fn predict(model: &Model, seq: &[u32]) -> Result<(u8, f64), NnetError> {
    model.check_input(seq)?;
    let prob = forward_with_mask(model, seq, None).prob;
    Ok((threshold(prob), prob))
}

#[cfg(test)]
mod tests;
