use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::forward::{backward, dropout_mask, forward_with_mask, Gradients};
use super::{loss, threshold, Model, NnetError, TrainParams};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EpochStats {
    pub epoch: usize,
    /// Mean loss over the epoch's training-mode passes.
    pub loss: f64,
    /// Percent correct at threshold 0.5, from the same passes.
    pub accuracy: f64,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct TrainHistory {
    pub epochs: Vec<EpochStats>,
}

impl TrainHistory {
    pub fn last(&self) -> Option<&EpochStats> {
        self.epochs.last()
    }
}

struct Adam {
    m: Vec<Vec<f64>>,
    v: Vec<Vec<f64>>,
    step: i32,
}

impl Adam {
    fn new(model: &Model) -> Self {
        let zeros = || model.tensors().iter().map(|(_, t)| vec![0.0; t.len()]).collect();
        Adam {
            m: zeros(),
            v: zeros(),
            step: 0,
        }
    }

    fn update(&mut self, model: &mut Model, grads: &Gradients, p: &TrainParams) {
        self.step += 1;
        let c1 = 1.0 - p.beta1.powi(self.step);
        let c2 = 1.0 - p.beta2.powi(self.step);
        for (i, (param, grad)) in model.tensors_mut().into_iter().zip(grads.tensors()).enumerate() {
            let (m, v) = (&mut self.m[i], &mut self.v[i]);
            for j in 0..param.len() {
                let g = grad[j];
                m[j] = p.beta1 * m[j] + (1.0 - p.beta1) * g;
                v[j] = p.beta2 * v[j] + (1.0 - p.beta2) * g * g;
                param[j] -= p.learning_rate * (m[j] / c1) / ((v[j] / c2).sqrt() + p.adam_eps);
            }
        }
        let q = model.config.embed_dim;
        model.embedding[..q].fill(0.0);
    }
}

/// Minibatch Adam on mean cross-entropy. Samples are reshuffled every epoch
/// and dropout masks drawn from the same seeded generator.
pub fn train(
    model: &Model,
    inputs: &[Vec<u32>],
    labels: &[u8],
    params: &TrainParams,
    seed: u64,
) -> Result<(Model, TrainHistory), NnetError> {
    if inputs.len() != labels.len() {
        return Err(NnetError::Input {
            position: inputs.len().min(labels.len()),
            message: format!("{} inputs but {} labels", inputs.len(), labels.len()),
        });
    }
    if let Some(p) = labels.iter().position(|&l| l > 1) {
        return Err(NnetError::Input {
            position: p,
            message: format!("label {} is not 0 or 1", labels[p]),
        });
    }
    let positives = labels.iter().filter(|&&l| l == 1).count();
    if positives == 0 || positives == labels.len() {
        return Err(NnetError::SingleClass(labels.first().copied().unwrap_or(0)));
    }
    for (i, seq) in inputs.iter().enumerate() {
        model.check_input(seq).map_err(|e| match e {
            NnetError::Input { position, message } => NnetError::Input {
                position,
                message: format!("sample {i}: {message}"),
            },
            other => other,
        })?;
    }
    if params.batch_size == 0 {
        return Err(NnetError::Config {
            stage: "training",
            message: "batch size must be at least 1".into(),
        });
    }
    let mut history = TrainHistory::default();
    if params.epochs == 0 {
        return Ok((model.clone(), history));
    }

    let mut model = model.clone();
    model.train_params = params.clone();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut adam = Adam::new(&model);
    let mut grads = Gradients::zeros_like(&model);
    let mut order: Vec<usize> = (0..inputs.len()).collect();
    for epoch in 1..=params.epochs {
        order.shuffle(&mut rng);
        let mut total_loss = 0.0;
        let mut correct = 0usize;
        for batch in order.chunks(params.batch_size) {
            grads.clear();
            for &i in batch {
                let mask = dropout_mask(&model, &mut rng);
                let cache = forward_with_mask(&model, &inputs[i], Some(mask));
                total_loss += loss(cache.prob, labels[i]);
                correct += usize::from(threshold(cache.prob) == labels[i]);
                backward(&model, &cache, labels[i], &mut grads);
            }
            let scale = 1.0 / batch.len() as f64;
            for t in grads.tensors_mut() {
                t.iter_mut().for_each(|g| *g *= scale);
            }
            adam.update(&mut model, &grads, params);
        }
        let n = inputs.len() as f64;
        let stats = EpochStats {
            epoch,
            loss: total_loss / n,
            accuracy: 100.0 * correct as f64 / n,
        };
        log::debug!("epoch {epoch}: loss {:.4} accuracy {:.2}%", stats.loss, stats.accuracy);
        history.epochs.push(stats);
    }
    Ok((model, history))
}
