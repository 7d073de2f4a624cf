//! Bug-report triage toward designers.
//!
//! The pipeline has two halves. The labeling half walks historical bug fixes,
//! scans every changed Java file at the fix commit and at its parent for the
//! sixteen structural smells in [`smellscan::SmellRule`], and marks a bug with
//! label 1 ("refer to designer") when its fix introduced at least one smell.
//! The learning half turns each bug's stemmed summary and description into a
//! padded sequence of unique-word indices and trains a small embedding + CNN
//! classifier to predict that label from text alone.
//!
//! Module map:
//!
//! - [`corpus`]: issue / commit / file-change / link records and git extraction
//! - [`smellscan`]: comment stripping, structural metrics, rule evaluation, PMD ingestion
//! - [`labeler`]: smell deltas, per-commit labels, dataset assembly
//! - [`textprep`]: tokenizer, Porter stemmer, dictionary, index sequences
//! - [`nnet`]: embedding + two conv/pool stages + dropout + sigmoid, trained with Adam
//! - [`balance`]: SMOTE oversampling of the minority class
//! - [`eval`]: stratified folds, confusion-matrix metrics, k-fold experiments
//! - [`cli`]: configuration file and subcommands

pub mod balance;
pub mod cli;
pub mod corpus;
pub mod eval;
pub mod labeler;
pub mod nnet;
pub mod smellscan;
pub mod textprep;

/// A non-fatal problem found while processing input.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct Diagnostic {
    /// Where the problem was found (file, line, issue id, ...).
    pub location: String,
    pub message: String,
}

impl Diagnostic {
    pub fn new(location: impl Into<String>, message: impl Into<String>) -> Self {
        Self {
            location: location.into(),
            message: message.into(),
        }
    }
}

impl std::fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}: {}", self.location, self.message)
    }
}
