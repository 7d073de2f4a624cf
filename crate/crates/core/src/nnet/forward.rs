use rand::Rng;

use super::{sigmoid, Model, NnetError, LOSS_EPS};

/// Activations kept from a forward pass for the backward pass.
#[derive(Debug, Clone)]
pub struct Cache {
    pub seq: Vec<u32>,
    /// Conv1 positions whose receptive field is all padding.
    pad1: Vec<bool>,
    /// `conv1 × F1`, after the rectifier.
    pub h1: Vec<f64>,
    /// `pool1 × F1`.
    pub p1: Vec<f64>,
    arg1: Vec<u32>,
    /// Conv2 positions whose window holds only constant pool1 rows.
    const2: Vec<bool>,
    /// `conv2 × F2`, after the rectifier.
    pub h2: Vec<f64>,
    /// `pool2 × F2`, the flattened layer before dropout.
    pub p2: Vec<f64>,
    arg2: Vec<u32>,
    /// Per-unit dropout scale, 0 or `1/(1-rate)`.
    pub mask: Option<Vec<f64>>,
    /// Flattened layer after dropout.
    pub dropped: Vec<f64>,
    pub logit: f64,
    pub prob: f64,
}

/// Parameter gradients, shaped like the model tensors.
#[derive(Debug, Clone, PartialEq)]
pub struct Gradients {
    pub embedding: Vec<f64>,
    pub conv1_w: Vec<f64>,
    pub conv1_b: Vec<f64>,
    pub conv2_w: Vec<f64>,
    pub conv2_b: Vec<f64>,
    pub dense_w: Vec<f64>,
    pub dense_b: f64,
}

impl Gradients {
    pub fn zeros_like(model: &Model) -> Self {
        Gradients {
            embedding: vec![0.0; model.embedding.len()],
            conv1_w: vec![0.0; model.conv1.weights.len()],
            conv1_b: vec![0.0; model.conv1.bias.len()],
            conv2_w: vec![0.0; model.conv2.weights.len()],
            conv2_b: vec![0.0; model.conv2.bias.len()],
            dense_w: vec![0.0; model.dense_w.len()],
            dense_b: 0.0,
        }
    }

    /// Same order as [`Model::tensors`].
    pub fn tensors(&self) -> [&[f64]; 7] {
        [
            &self.embedding,
            &self.conv1_w,
            &self.conv1_b,
            &self.conv2_w,
            &self.conv2_b,
            &self.dense_w,
            std::slice::from_ref(&self.dense_b),
        ]
    }

    pub fn tensors_mut(&mut self) -> [&mut [f64]; 7] {
        [
            &mut self.embedding,
            &mut self.conv1_w,
            &mut self.conv1_b,
            &mut self.conv2_w,
            &mut self.conv2_b,
            &mut self.dense_w,
            std::slice::from_mut(&mut self.dense_b),
        ]
    }

    pub fn clear(&mut self) {
        for t in self.tensors_mut() {
            t.fill(0.0);
        }
    }
}

#[inline]
fn dot(a: &[f64], b: &[f64]) -> f64 {
    let mut acc = [0.0f64; 4];
    let (ac, ar) = a.split_at(a.len() / 4 * 4);
    let (bc, br) = b.split_at(ac.len());
    for (x, y) in ac.chunks_exact(4).zip(bc.chunks_exact(4)) {
        acc[0] += x[0] * y[0];
        acc[1] += x[1] * y[1];
        acc[2] += x[2] * y[2];
        acc[3] += x[3] * y[3];
    }
    let mut s = (acc[0] + acc[1]) + (acc[2] + acc[3]);
    for (x, y) in ar.iter().zip(br) {
        s += x * y;
    }
    s
}

#[inline]
fn axpy(alpha: f64, x: &[f64], y: &mut [f64]) {
    for (yi, xi) in y.iter_mut().zip(x) {
        *yi += alpha * xi;
    }
}

/// Max over `width` consecutive rows of a `rows × channels` matrix; ties go
/// to the first row.
fn max_pool(input: &[f64], channels: usize, width: usize, out_len: usize) -> (Vec<f64>, Vec<u32>) {
    let mut out = vec![0.0; out_len * channels];
    let mut arg = vec![0u32; out_len * channels];
    for s in 0..out_len {
        for c in 0..channels {
            let mut best = s * width;
            for t in s * width + 1..s * width + width {
                if input[t * channels + c] > input[best * channels + c] {
                    best = t;
                }
            }
            out[s * channels + c] = input[best * channels + c];
            arg[s * channels + c] = best as u32;
        }
    }
    (out, arg)
}

/// Forward pass. With `training`, a fresh dropout mask is drawn from `rng`.
pub fn forward<R: Rng>(model: &Model, seq: &[u32], training: bool, rng: &mut R) -> Result<Cache, NnetError> {
    model.check_input(seq)?;
    let mask = training.then(|| dropout_mask(model, rng));
    Ok(forward_with_mask(model, seq, mask))
}

pub(crate) fn dropout_mask<R: Rng>(model: &Model, rng: &mut R) -> Vec<f64> {
    let rate = model.config.dropout;
    let keep = 1.0 / (1.0 - rate);
    (0..model.dense_w.len())
        .map(|_| if rng.random::<f64>() < rate { 0.0 } else { keep })
        .collect()
}

/// Forward pass with an explicit dropout mask (`None` = inference). The
/// sequence must already be valid for the model.
pub fn forward_with_mask(model: &Model, seq: &[u32], mask: Option<Vec<f64>>) -> Cache {
    let cfg = &model.config;
    let s = model.shapes();
    let (f1, w1, f2, w2, pool) = (
        cfg.conv1_filters,
        cfg.conv1_width,
        cfg.conv2_filters,
        cfg.conv2_width,
        cfg.pool_size,
    );

    // conv1: padding rows are zero vectors and contribute nothing
    let mut h1 = Vec::with_capacity(s.conv1 * f1);
    for _ in 0..s.conv1 {
        h1.extend_from_slice(&model.conv1.bias);
    }
    for (p, &idx) in seq.iter().enumerate() {
        if idx == 0 {
            continue;
        }
        let row = model.embedding_row(idx);
        for k in 0..w1.min(p + 1) {
            let t = p - k;
            if t >= s.conv1 {
                continue;
            }
            let out = &mut h1[t * f1..(t + 1) * f1];
            for (f, o) in out.iter_mut().enumerate() {
                *o += dot(row, model.conv1.kernel(f, k));
            }
        }
    }
    h1.iter_mut().for_each(|v| *v = v.max(0.0));
    let pad1: Vec<bool> = (0..s.conv1).map(|t| seq[t..t + w1].iter().all(|&i| i == 0)).collect();

    let (p1, arg1) = max_pool(&h1, f1, pool, s.pool1);
    // pool1 rows fed only by padding positions are all equal
    let const1: Vec<bool> = (0..s.pool1)
        .map(|u| pad1[u * pool..u * pool + pool].iter().all(|&b| b))
        .collect();
    let const2: Vec<bool> = (0..s.conv2).map(|u| const1[u..u + w2].iter().all(|&b| b)).collect();

    let mut h2 = vec![0.0; s.conv2 * f2];
    let mut const_row: Option<usize> = None;
    for u in 0..s.conv2 {
        if const2[u] {
            if let Some(first) = const_row {
                h2.copy_within(first * f2..(first + 1) * f2, u * f2);
                continue;
            }
            const_row = Some(u);
        }
        for f in 0..f2 {
            let mut acc = model.conv2.bias[f];
            for k in 0..w2 {
                acc += dot(&p1[(u + k) * f1..(u + k + 1) * f1], model.conv2.kernel(f, k));
            }
            h2[u * f2 + f] = acc.max(0.0);
        }
    }

    let (p2, arg2) = max_pool(&h2, f2, pool, s.pool2);
    let dropped: Vec<f64> = match &mask {
        Some(m) => p2.iter().zip(m).map(|(a, b)| a * b).collect(),
        None => p2.clone(),
    };
    let logit = model.dense_b + dot(&model.dense_w, &dropped);
    Cache {
        seq: seq.to_vec(),
        pad1,
        h1,
        p1,
        arg1,
        const2,
        h2,
        p2,
        arg2,
        mask,
        dropped,
        logit,
        prob: sigmoid(logit),
    }
}

/// Derivative of the clipped cross-entropy with respect to the logit.
pub(crate) fn logit_gradient(prob: f64, label: u8) -> f64 {
    if !(LOSS_EPS..=1.0 - LOSS_EPS).contains(&prob) {
        return 0.0;
    }
    prob - f64::from(label)
}

/// Add the loss gradient of one example to `grads`.
pub fn backward(model: &Model, cache: &Cache, label: u8, grads: &mut Gradients) {
    let dz = logit_gradient(cache.prob, label);
    if dz == 0.0 {
        return;
    }
    let cfg = &model.config;
    let s = model.shapes();
    let (f1, w1, f2, w2) = (cfg.conv1_filters, cfg.conv1_width, cfg.conv2_filters, cfg.conv2_width);

    grads.dense_b += dz;
    axpy(dz, &cache.dropped, &mut grads.dense_w);

    // dense -> pool2 -> conv2 pre-activation
    let mut d_h2 = vec![0.0; s.conv2 * f2];
    for (v, &a) in cache.arg2.iter().enumerate() {
        let scale = cache.mask.as_ref().map_or(1.0, |m| m[v]);
        let g = dz * model.dense_w[v] * scale;
        if g != 0.0 {
            let f = v % f2;
            d_h2[a as usize * f2 + f] += g;
        }
    }
    for (d, &h) in d_h2.iter_mut().zip(&cache.h2) {
        if h <= 0.0 {
            *d = 0.0;
        }
    }

    // conv2; constant positions are summed and applied once
    let mut d_p1 = vec![0.0; s.pool1 * f1];
    let mut const_sum = vec![0.0; f2];
    let mut const_at = None;
    for u in 0..s.conv2 {
        if cache.const2[u] {
            const_at.get_or_insert(u);
            axpy(1.0, &d_h2[u * f2..(u + 1) * f2], &mut const_sum);
            continue;
        }
        for f in 0..f2 {
            let d = d_h2[u * f2 + f];
            if d == 0.0 {
                continue;
            }
            grads.conv2_b[f] += d;
            for k in 0..w2 {
                let wk = (f * w2 + k) * f1;
                axpy(
                    d,
                    &cache.p1[(u + k) * f1..(u + k + 1) * f1],
                    &mut grads.conv2_w[wk..wk + f1],
                );
                axpy(d, model.conv2.kernel(f, k), &mut d_p1[(u + k) * f1..(u + k + 1) * f1]);
            }
        }
    }
    // gradient reaching padding-only conv1 positions through constant windows
    let mut d_pad = vec![0.0; f1];
    if let Some(u0) = const_at {
        for (f, &d) in const_sum.iter().enumerate() {
            if d == 0.0 {
                continue;
            }
            grads.conv2_b[f] += d;
            for k in 0..w2 {
                let wk = (f * w2 + k) * f1;
                axpy(
                    d,
                    &cache.p1[(u0 + k) * f1..(u0 + k + 1) * f1],
                    &mut grads.conv2_w[wk..wk + f1],
                );
                axpy(d, model.conv2.kernel(f, k), &mut d_pad);
            }
        }
    }

    // pool1 -> conv1 pre-activation
    let mut d_h1 = vec![0.0; s.conv1 * f1];
    for (i, &a) in cache.arg1.iter().enumerate() {
        if d_p1[i] != 0.0 {
            d_h1[a as usize * f1 + i % f1] += d_p1[i];
        }
    }
    for (d, &h) in d_h1.iter_mut().zip(&cache.h1) {
        if h <= 0.0 {
            *d = 0.0;
        }
    }
    if const_at.is_some() {
        // every padding-only position carries the same activation, relu(b1)
        let t0 = cache
            .pad1
            .iter()
            .position(|&p| p)
            .expect("constant window implies padding");
        for (f, d) in d_pad.iter().enumerate() {
            if cache.h1[t0 * f1 + f] > 0.0 {
                grads.conv1_b[f] += d;
            }
        }
    }

    // conv1 and embedding; padding rows are frozen
    let q = cfg.embed_dim;
    for t in 0..s.conv1 {
        for f in 0..f1 {
            let d = d_h1[t * f1 + f];
            if d == 0.0 {
                continue;
            }
            grads.conv1_b[f] += d;
            for k in 0..w1 {
                let idx = cache.seq[t + k];
                if idx == 0 {
                    continue;
                }
                let wk = (f * w1 + k) * q;
                let row = idx as usize * q;
                axpy(d, model.embedding_row(idx), &mut grads.conv1_w[wk..wk + q]);
                axpy(d, model.conv1.kernel(f, k), &mut grads.embedding[row..row + q]);
            }
        }
    }
}
