use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::*;

fn small_config(vocab: usize) -> ModelConfig {
    ModelConfig {
        vocab_size: vocab,
        seq_len: 12,
        embed_dim: 4,
        conv1_filters: 3,
        conv1_width: 3,
        conv2_filters: 2,
        conv2_width: 2,
        pool_size: 2,
        dropout: 0.5,
    }
}

#[test]
fn default_shapes() {
    let s = ModelConfig::default().shapes().unwrap();
    assert_eq!((s.conv1, s.pool1, s.conv2, s.pool2), (196, 98, 94, 47));
    assert_eq!(s.flat, 47 * 32);
}

#[test]
fn pool_larger_than_conv1_is_rejected() {
    let cfg = ModelConfig {
        seq_len: 6,
        conv1_width: 5,
        pool_size: 3,
        ..ModelConfig::default()
    };
    match cfg.shapes() {
        Err(NnetError::Config { stage, .. }) => assert_eq!(stage, "pool1"),
        other => panic!("{other:?}"),
    }
}

proptest! {
    #[test]
    fn shape_law(l in 1usize..300, w1 in 1usize..8, w2 in 1usize..8, pool in 1usize..5) {
        let cfg = ModelConfig { seq_len: l, conv1_width: w1, conv2_width: w2, pool_size: pool, ..ModelConfig::default() };
        let closed = || -> Option<usize> {
            let c1 = l.checked_sub(w1)? + 1;
            let p1 = c1 / pool;
            let c2 = p1.checked_sub(w2)? + 1;
            let p2 = c2 / pool;
            (p1 > 0 && p2 > 0).then_some(p2)
        };
        match (cfg.shapes(), closed()) {
            (Ok(s), Some(p2)) => prop_assert_eq!(s.flat, p2 * cfg.conv2_filters),
            (Err(_), None) => {}
            (got, want) => prop_assert!(false, "{:?} vs {:?}", got, want),
        }
    }
}

#[test]
fn init_is_deterministic_and_padding_row_zero() {
    let a = init_model(small_config(10), 7).unwrap();
    let b = init_model(small_config(10), 7).unwrap();
    let c = init_model(small_config(10), 8).unwrap();
    assert_eq!(a, b);
    assert_ne!(a.embedding, c.embedding);
    assert!(a.embedding[..4].iter().all(|&v| v == 0.0));
    assert!(a.embedding[4..].iter().all(|v| v.abs() <= 0.05));
    assert!(a.conv1.bias.iter().chain(&a.conv2.bias).all(|&b| b == 0.0));
}

#[test]
fn zero_network_gives_one_half() {
    let m = Model::zeros(small_config(5)).unwrap();
    let seq = vec![1, 2, 3, 4, 0, 0, 0, 0, 0, 0, 0, 0];
    assert_eq!(predict(&m, &seq).unwrap(), (1, 0.5));
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    assert_eq!(forward(&m, &seq, true, &mut rng).unwrap().prob, 0.5);
}

#[test]
fn threshold_rule() {
    assert_eq!(threshold(0.5), 1);
    assert_eq!(threshold(0.49), 0);
}

#[test]
fn bad_index_names_position() {
    let m = Model::zeros(small_config(5)).unwrap();
    let mut seq = vec![0; 12];
    seq[3] = 5;
    match predict(&m, &seq) {
        Err(NnetError::Input { position, .. }) => assert_eq!(position, 3),
        other => panic!("{other:?}"),
    }
}

#[test]
fn inference_is_repeatable() {
    let m = init_model(small_config(9), 3).unwrap();
    let seq = vec![3, 1, 8, 2, 0, 0, 0, 0, 0, 0, 0, 0];
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    let a = forward(&m, &seq, false, &mut rng).unwrap();
    let b = forward(&m, &seq, false, &mut rng).unwrap();
    assert_eq!(a.prob, b.prob);
    assert_eq!(a.dropped, a.p2);
}

#[test]
fn hand_computed_single_filter_net() {
    let cfg = ModelConfig {
        vocab_size: 4,
        seq_len: 6,
        embed_dim: 1,
        conv1_filters: 1,
        conv1_width: 2,
        conv2_filters: 1,
        conv2_width: 1,
        pool_size: 2,
        dropout: 0.0,
    };
    let mut m = Model::zeros(cfg).unwrap();
    m.embedding = vec![0.0, 1.0, 2.0, -1.0];
    m.conv1.weights = vec![0.5, -1.0];
    m.conv1.bias = vec![0.1];
    m.conv2.weights = vec![2.0];
    m.conv2.bias = vec![-0.5];
    m.dense_w = vec![0.5];
    m.dense_b = -1.0;
    // conv1 = relu(-1.4, 2.1, -0.4, 0.1, 0.1), pool1 = (2.1, 0.1),
    // conv2 = relu(3.7, -0.3), pool2 = 3.7, logit = 0.85
    let c = forward_with_mask(&m, &[1, 2, 3, 0, 0, 0], None);
    let close = |a: &[f64], b: &[f64]| a.iter().zip(b).all(|(x, y)| (x - y).abs() < 1e-12);
    assert!(close(&c.h1, &[0.0, 2.1, 0.0, 0.1, 0.1]));
    assert!(close(&c.p1, &[2.1, 0.1]));
    assert!(close(&c.h2, &[3.7, 0.0]));
    assert!((c.logit - 0.85).abs() < 1e-12);
    assert!((c.prob - 0.7005671424739729).abs() < 1e-12);
}

#[test]
fn loss_values() {
    assert!((loss(0.5, 1) - std::f64::consts::LN_2).abs() < 1e-12);
    assert!(loss(1.0 - LOSS_EPS, 1) < 2e-7);
    assert!((loss(0.9, 0) - std::f64::consts::LN_10).abs() < 1e-12);
    assert!(loss(0.0, 1).is_finite());
}

#[test]
fn saturated_prediction_has_zero_gradient() {
    let mut m = init_model(small_config(6), 2).unwrap();
    m.dense_b = 100.0;
    let c = forward_with_mask(&m, &[1, 2, 3, 4, 5, 0, 0, 0, 0, 0, 0, 0], None);
    let mut g = Gradients::zeros_like(&m);
    backward(&m, &c, 1, &mut g);
    assert!(g.tensors().iter().all(|t| t.iter().all(|&v| v == 0.0)));
}

#[test]
fn unused_embedding_rows_get_no_gradient() {
    let m = init_model(small_config(10), 4).unwrap();
    let seq = vec![2, 5, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0];
    let c = forward_with_mask(&m, &seq, None);
    let mut g = Gradients::zeros_like(&m);
    backward(&m, &c, 1, &mut g);
    for row in 0..10 {
        let touched = g.embedding[row * 4..row * 4 + 4].iter().any(|&v| v != 0.0);
        if row != 2 && row != 5 {
            assert!(!touched, "row {row}");
        }
    }
}

fn numeric_check(model: &Model, seq: &[u32], label: u8, mask: Option<Vec<f64>>) -> f64 {
    let c = forward_with_mask(model, seq, mask.clone());
    let mut g = Gradients::zeros_like(model);
    backward(model, &c, label, &mut g);
    let analytic: Vec<Vec<f64>> = g.tensors().iter().map(|t| t.to_vec()).collect();
    let h = 1e-4;
    let mut worst: f64 = 0.0;
    let mut probe = model.clone();
    for (ti, grad) in analytic.iter().enumerate() {
        for (j, &a) in grad.iter().enumerate() {
            let orig = probe.tensors_mut()[ti][j];
            probe.tensors_mut()[ti][j] = orig + h;
            let up = loss(forward_with_mask(&probe, seq, mask.clone()).prob, label);
            probe.tensors_mut()[ti][j] = orig - h;
            let down = loss(forward_with_mask(&probe, seq, mask.clone()).prob, label);
            probe.tensors_mut()[ti][j] = orig;
            let numeric = (up - down) / (2.0 * h);
            let rel = (a - numeric).abs() / a.abs().max(numeric.abs()).max(1e-7);
            worst = worst.max(rel);
        }
    }
    worst
}

#[test]
fn gradients_match_finite_differences() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut m = init_model(small_config(8), 5).unwrap();
    m.conv1.bias.iter_mut().for_each(|b| *b = rng.random_range(-0.2..0.2));
    m.conv2.bias.iter_mut().for_each(|b| *b = rng.random_range(-0.2..0.2));
    m.embedding
        .iter_mut()
        .skip(4)
        .for_each(|v| *v = rng.random_range(-1.0..1.0));
    let seq = vec![3, 1, 7, 2, 6, 0, 0, 0, 0, 0, 0, 0];
    let mask = super::forward::dropout_mask(&m, &mut rng);
    assert!(numeric_check(&m, &seq, 1, Some(mask)) < 1e-4);
    assert!(numeric_check(&m, &seq, 0, None) < 1e-4);
}

#[test]
fn dropout_is_unbiased() {
    let m = init_model(small_config(8), 9).unwrap();
    let seq = vec![3, 1, 7, 2, 6, 4, 5, 0, 0, 0, 0, 0];
    let base = forward_with_mask(&m, &seq, None).p2;
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let n = 20_000;
    let mut mean = vec![0.0; base.len()];
    for _ in 0..n {
        let c = forward(&m, &seq, true, &mut rng).unwrap();
        for (acc, v) in mean.iter_mut().zip(&c.dropped) {
            *acc += v / n as f64;
        }
    }
    for (got, want) in mean.iter().zip(&base) {
        // std of one draw is |want|, so 5 standard errors
        assert!((got - want).abs() <= 5.0 * want.abs() / (n as f64).sqrt() + 1e-12);
    }
}

#[test]
fn padding_only_changes_padding_fields() {
    let m = init_model(small_config(8), 1).unwrap();
    let full = vec![3, 1, 7, 2, 6, 4, 5, 0, 0, 0, 0, 0];
    let mut short = full.clone();
    short[5] = 0;
    short[6] = 0;
    let a = forward_with_mask(&m, &full, None).h1;
    let b = forward_with_mask(&m, &short, None).h1;
    let (f1, w1) = (3, 3);
    for t in 0..a.len() / f1 {
        let touches_change = (t..t + w1).any(|p| p == 5 || p == 6);
        if !touches_change {
            assert_eq!(a[t * f1..(t + 1) * f1], b[t * f1..(t + 1) * f1]);
        }
        if short[t..t + w1].iter().all(|&i| i == 0) {
            let relu_b: Vec<f64> = m.conv1.bias.iter().map(|v| v.max(0.0)).collect();
            assert_eq!(b[t * f1..(t + 1) * f1], relu_b[..]);
        }
    }
}

#[test]
fn save_load_round_trip() {
    let mut m = init_model(small_config(8), 21).unwrap();
    m.dictionary_hash = Some("abc".into());
    m.train_params.learning_rate = 0.1 + 0.2;
    let bytes = save_model_bytes(&m);
    let (back, diags) = load_model_bytes(&bytes, Some("abc")).unwrap();
    assert_eq!(back, m);
    assert!(diags.is_empty());
    let seq = vec![1, 2, 3, 0, 0, 0, 0, 0, 0, 0, 0, 0];
    assert_eq!(predict(&back, &seq).unwrap(), predict(&m, &seq).unwrap());

    let (_, diags) = load_model_bytes(&bytes, Some("other")).unwrap();
    assert_eq!(diags.len(), 1);
    assert!(diags[0].message.contains("mismatch"));
}

#[test]
fn corrupt_model_files() {
    assert!(matches!(
        load_model_bytes(&[], None),
        Err(NnetError::Format { offset: 0, .. })
    ));
    let bytes = save_model_bytes(&init_model(small_config(8), 21).unwrap());
    match load_model_bytes(&bytes[..bytes.len() - 3], None) {
        Err(NnetError::Format { offset, message }) => {
            assert!(offset > 16 && message.contains("truncated"), "{offset} {message}")
        }
        other => panic!("{other:?}"),
    }
    let mut wrong_version = bytes.clone();
    wrong_version[8] = 9;
    assert!(matches!(
        load_model_bytes(&wrong_version, None),
        Err(NnetError::Format { offset: 8, .. })
    ));
}

fn keyword_set() -> (Vec<Vec<u32>>, Vec<u8>) {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut xs = Vec::new();
    let mut ys = Vec::new();
    for i in 0..40 {
        let label = (i % 2) as u8;
        let mut seq: Vec<u32> = (0..4).map(|_| rng.random_range(4..20)).collect();
        seq.insert(rng.random_range(0..4), if label == 1 { 2 } else { 3 });
        seq.sort_unstable();
        seq.dedup();
        seq.resize(12, 0);
        xs.push(seq);
        ys.push(label);
    }
    (xs, ys)
}

#[test]
fn training_separates_keyword_clusters() {
    let (xs, ys) = keyword_set();
    let cfg = ModelConfig {
        embed_dim: 8,
        conv1_filters: 4,
        dropout: 0.2,
        ..small_config(20)
    };
    let m = init_model(cfg, 1).unwrap();
    let params = TrainParams {
        learning_rate: 0.01,
        batch_size: 8,
        ..TrainParams::default()
    };
    let (trained, hist) = train(&m, &xs, &ys, &params, 2).unwrap();
    assert_eq!(hist.epochs.len(), 20);
    let acc = xs
        .iter()
        .zip(&ys)
        .filter(|(x, &y)| predict(&trained, x).unwrap().0 == y)
        .count();
    assert_eq!(acc, xs.len());
    assert!(trained.embedding[..trained.config.embed_dim].iter().all(|&v| v == 0.0));

    let (again, hist2) = train(&m, &xs, &ys, &params, 2).unwrap();
    assert_eq!(hist, hist2);
    assert_eq!(save_model_bytes(&trained), save_model_bytes(&again));
}

#[test]
fn zero_epochs_and_single_class() {
    let (xs, ys) = keyword_set();
    let m = init_model(small_config(20), 1).unwrap();
    let params = TrainParams {
        epochs: 0,
        ..TrainParams::default()
    };
    let (same, hist) = train(&m, &xs, &ys, &params, 0).unwrap();
    assert_eq!(same, m);
    assert!(hist.epochs.is_empty());
    let ones = vec![1u8; xs.len()];
    assert!(matches!(
        train(&m, &xs, &ones, &params, 0),
        Err(NnetError::SingleClass(1))
    ));
}
