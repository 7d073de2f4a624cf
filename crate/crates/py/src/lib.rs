//! Python bindings: text preparation, smell scanning and labeling, the CNN,
//! SMOTE, folds and metrics, and the command line.

use std::path::PathBuf;

use pyo3::exceptions::{PyIOError, PyValueError};
use pyo3::prelude::*;

use bugrefer::balance::{self, FeatureVector, Rounding};
use bugrefer::eval::{self, ConfusionMatrix};
use bugrefer::labeler;
use bugrefer::nnet::{self, ModelConfig, TrainParams};
use bugrefer::smellscan::{self, RuleThresholds, SmellRule, SmellVector};
use bugrefer::textprep::{self, TextOptions, TokenDocument};

fn value_err(e: impl ToString) -> PyErr {
    PyValueError::new_err(e.to_string())
}

#[pyfunction]
fn stem(token: &str) -> String {
    textprep::stem(token)
}

#[pyfunction]
fn tokenize(text: &str) -> Vec<String> {
    textprep::tokenize(text)
}

#[pyfunction]
#[pyo3(signature = (text, remove_stopwords = false))]
fn stem_text(text: &str, remove_stopwords: bool) -> String {
    textprep::stem_text(text, TextOptions { remove_stopwords })
}

#[pyclass(name = "Dictionary", module = "bugrefer_py", skip_from_py_object)]
#[derive(Clone)]
struct PyDictionary {
    inner: textprep::Dictionary,
}

#[pymethods]
impl PyDictionary {
    /// Build from stemmed documents (space separated tokens).
    #[staticmethod]
    #[pyo3(signature = (documents, max_words = None))]
    fn build(documents: Vec<String>, max_words: Option<usize>) -> Self {
        let docs: Vec<TokenDocument> = documents
            .iter()
            .enumerate()
            .map(|(i, d)| TokenDocument::from_stemmed(i.to_string(), d))
            .collect();
        Self {
            inner: textprep::Dictionary::build(&docs, max_words),
        }
    }

    #[staticmethod]
    fn from_tsv(text: &str) -> PyResult<Self> {
        textprep::Dictionary::from_tsv(text)
            .map(|inner| Self { inner })
            .map_err(value_err)
    }

    fn to_tsv(&self) -> String {
        self.inner.to_tsv()
    }

    #[getter]
    fn vocab_size(&self) -> usize {
        self.inner.vocab_size()
    }

    fn index_of(&self, word: &str) -> u32 {
        self.inner.index_of(word)
    }

    fn content_hash(&self) -> String {
        self.inner.content_hash()
    }

    /// Index sequence of a stemmed document, padded or truncated to `length`.
    #[pyo3(signature = (stemmed, length = textprep::DEFAULT_SEQUENCE_LENGTH))]
    fn doc2indices(&self, stemmed: &str, length: usize) -> PyResult<Vec<u32>> {
        if length == 0 {
            return Err(value_err("length must be at least 1"));
        }
        let doc = TokenDocument::from_stemmed("doc", stemmed);
        Ok(textprep::doc2indices(&doc, &self.inner, length).0)
    }

    fn __len__(&self) -> usize {
        self.inner.vocab_size()
    }
}

/// Active rule names of one Java source file under default thresholds.
#[pyfunction]
#[pyo3(signature = (source, file_path = "input.java", allowed_packages = Vec::new()))]
fn scan_source(source: &str, file_path: &str, allowed_packages: Vec<String>) -> Vec<String> {
    let thresholds = RuleThresholds {
        allowed_packages,
        ..Default::default()
    };
    smellscan::scan_source(source, file_path, &thresholds)
        .vector
        .active()
        .iter()
        .map(|r| r.name().to_string())
        .collect()
}

fn vector_of(names: &[String]) -> PyResult<SmellVector> {
    let mut v = SmellVector::default();
    for name in names {
        v.set(name.parse::<SmellRule>().map_err(value_err)?, true);
    }
    Ok(v)
}

/// Label of one fix commit. Each file is `(current_rules, previous_rules)`;
/// `previous_rules` is `None` for a file the commit created.
#[pyfunction]
fn label_commit(files: Vec<(Vec<String>, Option<Vec<String>>)>) -> PyResult<u8> {
    let mut deltas = Vec::with_capacity(files.len());
    for (i, (cur, prev)) in files.iter().enumerate() {
        let cur = vector_of(cur)?;
        let prev = prev.as_deref().map(vector_of).transpose()?;
        deltas.push(labeler::smell_delta("commit", &i.to_string(), &cur, prev.as_ref()));
    }
    Ok(labeler::label_commit(&deltas).label)
}

#[pyclass(name = "Model", module = "bugrefer_py", skip_from_py_object)]
#[derive(Clone)]
struct PyModel {
    inner: nnet::Model,
}

#[pymethods]
impl PyModel {
    #[new]
    #[pyo3(signature = (vocab_size, seq_len = 200, embed_dim = 128, conv1_filters = 64, conv2_filters = 32, width = 5, pool_size = 2, dropout = 0.5, seed = 0))]
    #[allow(clippy::too_many_arguments)]
    fn new(
        vocab_size: usize,
        seq_len: usize,
        embed_dim: usize,
        conv1_filters: usize,
        conv2_filters: usize,
        width: usize,
        pool_size: usize,
        dropout: f64,
        seed: u64,
    ) -> PyResult<Self> {
        let config = ModelConfig {
            vocab_size,
            seq_len,
            embed_dim,
            conv1_filters,
            conv1_width: width,
            conv2_filters,
            conv2_width: width,
            pool_size,
            dropout,
        };
        nnet::init_model(config, seed)
            .map(|inner| Self { inner })
            .map_err(value_err)
    }

    #[staticmethod]
    #[pyo3(signature = (path, dictionary_hash = None))]
    fn load(path: PathBuf, dictionary_hash: Option<&str>) -> PyResult<Self> {
        nnet::load_model(&path, dictionary_hash)
            .map(|(inner, _)| Self { inner })
            .map_err(|e| PyIOError::new_err(e.to_string()))
    }

    fn save(&self, path: PathBuf) -> PyResult<()> {
        nnet::save_model(&self.inner, &path).map_err(|e| PyIOError::new_err(e.to_string()))
    }

    #[getter]
    fn seq_len(&self) -> usize {
        self.inner.config.seq_len
    }

    #[getter]
    fn parameter_count(&self) -> usize {
        self.inner.parameter_count()
    }

    /// `(label, probability)` for one index sequence.
    fn predict(&self, seq: Vec<u32>) -> PyResult<(u8, f64)> {
        nnet::predict(&self.inner, &seq).map_err(value_err)
    }

    /// Train a copy; returns the trained model and `(loss, accuracy)` per epoch.
    #[pyo3(signature = (inputs, labels, epochs = 20, learning_rate = 1e-3, batch_size = 32, seed = 0))]
    fn train(
        &self,
        inputs: Vec<Vec<u32>>,
        labels: Vec<u8>,
        epochs: usize,
        learning_rate: f64,
        batch_size: usize,
        seed: u64,
    ) -> PyResult<(PyModel, Vec<(f64, f64)>)> {
        let params = TrainParams {
            epochs,
            learning_rate,
            batch_size,
            ..Default::default()
        };
        let (inner, history) = nnet::train(&self.inner, &inputs, &labels, &params, seed).map_err(value_err)?;
        let epochs = history.epochs.iter().map(|e| (e.loss, e.accuracy)).collect();
        Ok((PyModel { inner }, epochs))
    }
}

/// Oversample class 1 (or whichever is smaller); returns all samples,
/// originals first. With `vocab_size`, synthetic values are rounded to indices.
#[pyfunction]
#[pyo3(signature = (values, labels, k = 5, seed = 0, vocab_size = None))]
fn smote(
    values: Vec<Vec<f64>>,
    labels: Vec<u8>,
    k: usize,
    seed: u64,
    vocab_size: Option<usize>,
) -> PyResult<(Vec<Vec<f64>>, Vec<u8>)> {
    if values.len() != labels.len() {
        return Err(value_err("values and labels differ in length"));
    }
    let samples: Vec<FeatureVector> = values
        .into_iter()
        .zip(labels)
        .map(|(values, label)| FeatureVector { values, label })
        .collect();
    let rounding = vocab_size.map_or(Rounding::Off, |vocab_size| Rounding::ToIndex { vocab_size });
    let out = balance::smote(&samples, k, seed, rounding).map_err(value_err)?;
    Ok(out.samples.into_iter().map(|s| (s.values, s.label)).unzip())
}

/// Fold id of every sample.
#[pyfunction]
#[pyo3(signature = (labels, k = 5, seed = 0))]
fn stratified_folds(labels: Vec<u8>, k: usize, seed: u64) -> PyResult<Vec<usize>> {
    eval::stratified_folds(&labels, k, seed)
        .map(|p| p.assignments)
        .map_err(value_err)
}

/// `(accuracy, precision, recall, f1)` in percent.
#[pyfunction]
fn compute_metrics(truth: Vec<u8>, predicted: Vec<u8>) -> PyResult<(f64, f64, f64, f64)> {
    if truth.len() != predicted.len() {
        return Err(value_err("truth and predictions differ in length"));
    }
    let m = eval::compute_metrics(&ConfusionMatrix::from_predictions(&truth, &predicted));
    Ok((m.accuracy, m.precision, m.recall, m.f1))
}

/// Run the command line with `args` (without the program name); returns the exit code.
#[pyfunction]
fn run_cli(args: Vec<String>) -> i32 {
    bugrefer::cli::run(std::iter::once("bugrefer".to_string()).chain(args))
}

#[pymodule]
fn bugrefer_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_function(wrap_pyfunction!(stem, m)?)?;
    m.add_function(wrap_pyfunction!(tokenize, m)?)?;
    m.add_function(wrap_pyfunction!(stem_text, m)?)?;
    m.add_function(wrap_pyfunction!(scan_source, m)?)?;
    m.add_function(wrap_pyfunction!(label_commit, m)?)?;
    m.add_function(wrap_pyfunction!(smote, m)?)?;
    m.add_function(wrap_pyfunction!(stratified_folds, m)?)?;
    m.add_function(wrap_pyfunction!(compute_metrics, m)?)?;
    m.add_function(wrap_pyfunction!(run_cli, m)?)?;
    m.add_class::<PyDictionary>()?;
    m.add_class::<PyModel>()?;
    m.add("RULES", SmellRule::ALL.iter().map(|r| r.name()).collect::<Vec<_>>())?;
    Ok(())
}
