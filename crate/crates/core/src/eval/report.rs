use std::fmt::Write as _;

use super::{ExperimentReport, MetricsRow};

pub const TSV_COLUMNS: [&str; 14] = [
    "fold",
    "Alg.",
    "Project",
    "class1",
    "total",
    "class1_percent",
    "sampling",
    "test_percent",
    "train_acc",
    "train_loss",
    "acc",
    "precision",
    "f1",
    "recall",
];

fn tsv_row(report: &ExperimentReport, row: &MetricsRow) -> String {
    let m = &report.meta;
    let fold = row.fold.map_or_else(|| "mean".to_string(), |f| f.to_string());
    format!(
        "{fold}\tCNN\t{}\t{}\t{}\t{:.0}\t{}\t{:.0}\t{:.2}\t{:.4}\t{:.2}\t{:.2}\t{:.2}\t{:.2}",
        m.project,
        m.class1,
        m.total,
        m.class1_percent,
        m.sampling,
        m.test_percent,
        row.train_accuracy,
        row.train_loss,
        row.metrics.accuracy,
        row.metrics.precision,
        row.metrics.f1,
        row.metrics.recall,
    )
}

/// Table with one row per fold and a final mean row, preceded by a comment
/// line recording the seed.
pub fn report_tsv(report: &ExperimentReport) -> String {
    let mut out = format!(
        "# seed={} epochs={}\n{}\n",
        report.meta.seed,
        report.meta.epochs,
        TSV_COLUMNS.join("\t")
    );
    for row in report.folds.iter().chain(std::iter::once(&report.mean)) {
        let _ = writeln!(out, "{}", tsv_row(report, row));
    }
    out
}

/// One JSON object per fold plus the mean, each carrying the run metadata.
pub fn fold_rows_jsonl(report: &ExperimentReport) -> String {
    let mut out = String::new();
    for row in report.folds.iter().chain(std::iter::once(&report.mean)) {
        let mut obj = serde_json::to_value(row).expect("row serializes");
        obj["meta"] = serde_json::to_value(&report.meta).expect("meta serializes");
        let _ = writeln!(out, "{obj}");
    }
    out
}
