//! Command-line entry point: one TOML configuration file, trailing
//! `--section.key value` overrides, six subcommands.

mod config;

use std::ffi::OsString;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub use config::{
    apply_override, load_config, BalanceSection, EvalSection, ModelSection, PathsConfig, PmdInput, RunConfig,
    TextConfig,
};

use crate::balance::{from_indices, smote, to_indices, Rounding, SmoteScope};
use crate::corpus::{CorpusStore, GitRepo, RecordKind};
use crate::eval::{fold_rows_jsonl, prepare_dataset, report_tsv, run_kfold_experiment, ExperimentConfig};
use crate::labeler::{
    build_labeled_dataset, samples_from_jsonl, DatasetStats, LabelOptions, LabeledDataset, LabeledSample,
    PrecomputedSmells, RepoScanner, SmellSource,
};
use crate::nnet::{init_model, load_model, predict, save_model, train};
use crate::smellscan::{ingest_pmd_report, scan_source, SmellRecord};
use crate::textprep::{doc2indices, Dictionary, TokenDocument, OOV_INDEX};
use crate::Diagnostic;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FATAL: i32 = 1;
pub const EXIT_DIAGNOSTICS: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "bugrefer",
    version,
    about = "Predict whether a bug report should be referred to a designer"
)]
struct Cli {
    /// TOML configuration file.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Top-level seed (same as `--seed` in the file).
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Output directory (`paths.out`).
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[arg(long, short, global = true)]
    verbose: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct Overrides {
    /// Configuration overrides as `--section.key value` pairs.
    #[arg(trailing_var_arg = true, allow_hyphen_values = true, value_name = "--KEY VALUE")]
    rest: Vec<String>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Scan fix commits in the repository and write the labeled dataset.
    BuildDataset(Overrides),
    /// Write smell vectors for the given files, or for every corpus commit.
    ScanSmells {
        /// Source file to scan instead of the repository (repeatable).
        #[arg(long = "file")]
        files: Vec<PathBuf>,
        #[command(flatten)]
        overrides: Overrides,
    },
    /// Label bugs from precomputed smell vectors or PMD reports.
    Label(Overrides),
    /// Train a model on the whole labeled dataset.
    Train(Overrides),
    /// Stratified k-fold evaluation.
    Evaluate(Overrides),
    /// Classify one bug report.
    Predict {
        #[arg(long)]
        model: Option<PathBuf>,
        #[arg(long)]
        dictionary: Option<PathBuf>,
        #[arg(long, default_value = "")]
        summary: String,
        #[arg(long, default_value = "")]
        description: String,
        #[command(flatten)]
        overrides: Overrides,
    },
}

enum Outcome {
    Clean,
    Diagnostics(Vec<Diagnostic>),
}

impl Outcome {
    fn from(diagnostics: Vec<Diagnostic>) -> Self {
        if diagnostics.is_empty() {
            Outcome::Clean
        } else {
            Outcome::Diagnostics(diagnostics)
        }
    }
}

/// Split trailing arguments into key/value overrides. The global flags are
/// also accepted here so they may follow the overrides.
fn parse_overrides(rest: &[String], cli: &mut Cli) -> Result<Vec<(String, String)>, String> {
    let mut out = Vec::new();
    let mut it = rest.iter();
    while let Some(arg) = it.next() {
        let Some(key) = arg.strip_prefix("--") else {
            return Err(format!(
                "unexpected argument {arg:?}; overrides look like --section.key value"
            ));
        };
        if key == "verbose" {
            cli.verbose = true;
            continue;
        }
        let (key, value) = match key.split_once('=') {
            Some((k, v)) => (k.to_string(), v.to_string()),
            None => (
                key.to_string(),
                it.next()
                    .ok_or_else(|| format!("override --{key} needs a value"))?
                    .clone(),
            ),
        };
        match key.as_str() {
            "config" => cli.config = Some(PathBuf::from(value)),
            "out" => out.push(("paths.out".into(), toml_string(&value))),
            _ => out.push((key, value)),
        }
    }
    Ok(out)
}

fn toml_string(s: &str) -> String {
    toml::Value::String(s.to_string()).to_string()
}

/// Run the command line and return the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let mut cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_FATAL } else { EXIT_OK };
        }
    };
    match execute(&mut cli) {
        Ok(Outcome::Clean) => EXIT_OK,
        Ok(Outcome::Diagnostics(diags)) => {
            for d in diags.iter().take(50) {
                eprintln!("warning: {d}");
            }
            if diags.len() > 50 {
                eprintln!("warning: ... {} more", diags.len() - 50);
            }
            EXIT_DIAGNOSTICS
        }
        Err(message) => {
            eprintln!("error: {message}");
            EXIT_FATAL
        }
    }
}

fn execute(cli: &mut Cli) -> Result<Outcome, String> {
    let rest = match &cli.command {
        Command::BuildDataset(o) | Command::Label(o) | Command::Train(o) | Command::Evaluate(o) => o.rest.clone(),
        Command::ScanSmells { overrides, .. } | Command::Predict { overrides, .. } => overrides.rest.clone(),
    };
    let mut overrides = parse_overrides(&rest, cli)?;
    if let Some(seed) = cli.seed {
        overrides.insert(0, ("seed".into(), seed.to_string()));
    }
    if let Some(out) = &cli.out {
        overrides.insert(0, ("paths.out".into(), toml_string(&out.display().to_string())));
    }
    let mut cfg = load_config(cli.config.as_deref(), &overrides)?;
    cfg.verbose |= cli.verbose;
    let level = if cfg.verbose {
        log::LevelFilter::Debug
    } else {
        log::LevelFilter::Info
    };
    let _ = env_logger::Builder::new().filter_level(level).try_init();
    cfg.smells.validate().map_err(|e| format!("smells: {e}"))?;

    match &cli.command {
        Command::BuildDataset(_) => cmd_build_dataset(&cfg),
        Command::ScanSmells { files, .. } => cmd_scan_smells(&cfg, files),
        Command::Label(_) => cmd_label(&cfg),
        Command::Train(_) => cmd_train(&cfg),
        Command::Evaluate(_) => cmd_evaluate(&cfg),
        Command::Predict {
            model,
            dictionary,
            summary,
            description,
            ..
        } => cmd_predict(&cfg, model.as_deref(), dictionary.as_deref(), summary, description),
    }
}

fn require<'a>(path: &'a Option<PathBuf>, key: &str) -> Result<&'a Path, String> {
    let p = path
        .as_deref()
        .ok_or_else(|| format!("missing input: {key} is not set"))?;
    if !p.exists() {
        return Err(format!("missing input: {}", p.display()));
    }
    Ok(p)
}

fn read(path: &Path) -> Result<String, String> {
    fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))
}

fn write(path: &Path, contents: &str) -> Result<(), String> {
    if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
        fs::create_dir_all(dir).map_err(|e| format!("cannot create {}: {e}", dir.display()))?;
    }
    fs::write(path, contents).map_err(|e| format!("cannot write {}: {e}", path.display()))
}

fn load_corpus(cfg: &RunConfig, kinds: &[RecordKind], diags: &mut Vec<Diagnostic>) -> Result<CorpusStore, String> {
    let p = &cfg.paths;
    let mut store = CorpusStore::new();
    for &kind in kinds {
        let (path, key) = match kind {
            RecordKind::Issues => (&p.issues, "paths.issues"),
            RecordKind::Commits => (&p.commits, "paths.commits"),
            RecordKind::Changes => (&p.changes, "paths.changes"),
            RecordKind::Links => (&p.links, "paths.links"),
        };
        let path = require(path, key)?;
        let report = store.ingest_records(path, kind).map_err(|e| e.to_string())?;
        log::info!("{}: {} records", path.display(), report.accepted);
        diags.extend(report.diagnostics);
    }
    if cfg.paths.repo.is_some() {
        store = store.with_repo(require(&cfg.paths.repo, "paths.repo")?);
    }
    Ok(store)
}

fn load_precomputed(cfg: &RunConfig, diags: &mut Vec<Diagnostic>) -> Result<Option<PrecomputedSmells>, String> {
    if cfg.paths.smells.is_none() && cfg.paths.pmd.is_empty() {
        return Ok(None);
    }
    let mut table = PrecomputedSmells::new().with_extensions(cfg.paths.extensions.clone());
    if cfg.paths.smells.is_some() {
        let path = require(&cfg.paths.smells, "paths.smells")?;
        for (n, line) in read(path)?.lines().enumerate() {
            if line.trim().is_empty() {
                continue;
            }
            let record = SmellRecord::from_json_line(line).map_err(|e| format!("{}:{}: {e}", path.display(), n + 1))?;
            table.add_record(record);
        }
    }
    for input in &cfg.paths.pmd {
        let xml = read(&input.report)?;
        let report = ingest_pmd_report(&xml, &cfg.smells).map_err(|e| format!("{}: {e}", input.report.display()))?;
        diags.extend(report.diagnostics.iter().cloned());
        table.add_pmd_report(&input.commit, &report);
    }
    Ok(Some(table))
}

fn label_options(cfg: &RunConfig) -> LabelOptions {
    LabelOptions {
        project: cfg.project.clone(),
        text: cfg.text.options(),
    }
}

fn write_dataset(cfg: &RunConfig, ds: &LabeledDataset, mut diags: Vec<Diagnostic>) -> Result<Outcome, String> {
    let path = cfg.paths.dataset_path();
    write(&path, &ds.to_jsonl())?;
    write(
        &cfg.paths.out_file("stats.tsv"),
        &format!("{}\n{}\n", DatasetStats::TSV_HEADER, ds.stats.to_tsv_row()),
    )?;
    let skipped: String = ds
        .skipped
        .iter()
        .map(|s| serde_json::to_string(s).expect("serializes") + "\n")
        .collect();
    write(&cfg.paths.out_file("skipped.jsonl"), &skipped)?;
    log::info!(
        "{} samples ({} labeled 1, {:.1}%), {} skipped -> {}",
        ds.stats.total,
        ds.stats.class1,
        ds.stats.class1_percent,
        ds.skipped.len(),
        path.display()
    );
    diags.extend(ds.diagnostics.iter().cloned());
    diags.extend(
        ds.skipped
            .iter()
            .map(|s| Diagnostic::new(s.issue_id.clone(), format!("skipped: {}", s.reason))),
    );
    Ok(Outcome::from(diags))
}

fn cmd_build_dataset(cfg: &RunConfig) -> Result<Outcome, String> {
    let mut diags = Vec::new();
    let store = load_corpus(cfg, &RecordKind::ALL, &mut diags)?;
    let scanner;
    let precomputed;
    let source: &dyn SmellSource = if cfg.paths.repo.is_some() {
        scanner = RepoScanner {
            thresholds: cfg.smells.clone(),
            extensions: cfg.paths.extensions.clone(),
        };
        &scanner
    } else if let Some(table) = load_precomputed(cfg, &mut diags)? {
        precomputed = table;
        &precomputed
    } else {
        return Err("missing input: paths.repo is not set (needed by the built-in scanner)".into());
    };
    let ds = build_labeled_dataset(&store, source, &label_options(cfg)).map_err(|e| e.to_string())?;
    write_dataset(cfg, &ds, diags)
}

fn cmd_label(cfg: &RunConfig) -> Result<Outcome, String> {
    let mut diags = Vec::new();
    let mut store = load_corpus(cfg, &RecordKind::ALL, &mut diags)?;
    store.repo_path = None;
    let table = load_precomputed(cfg, &mut diags)?
        .ok_or_else(|| "missing input: paths.smells or paths.pmd must be set".to_string())?;
    let ds = build_labeled_dataset(&store, &table, &label_options(cfg)).map_err(|e| e.to_string())?;
    write_dataset(cfg, &ds, diags)
}

fn cmd_scan_smells(cfg: &RunConfig, files: &[PathBuf]) -> Result<Outcome, String> {
    let mut diags = Vec::new();
    let mut lines = String::new();
    if !files.is_empty() {
        for f in files {
            let src = read(f)?;
            let name = f.display().to_string();
            let result = scan_source(&src, &name, &cfg.smells);
            diags.extend(result.diagnostics);
            let record = SmellRecord {
                commit_hash: String::new(),
                file_path: name,
                vector: result.vector,
            };
            println!("{}", record.to_json_line());
        }
        return Ok(Outcome::from(diags));
    }
    let store = load_corpus(cfg, &[RecordKind::Commits], &mut diags)?;
    let repo = cfg
        .paths
        .repo
        .as_ref()
        .ok_or("missing input: paths.repo is not set (or pass --file)")?;
    let git = GitRepo::new(repo).with_extensions(cfg.paths.extensions.clone());
    let mut count = 0usize;
    for commit in store.commits() {
        let files = match git.changed_files_with_contents(&commit.commit_hash) {
            Ok(f) => f,
            Err(e @ crate::corpus::CorpusError::VcsMissing(_)) => return Err(e.to_string()),
            Err(e) => {
                diags.push(Diagnostic::new(commit.commit_hash.clone(), e.to_string()));
                continue;
            }
        };
        for f in files {
            let result = scan_source(&f.content_at_commit, &f.file_path, &cfg.smells);
            diags.extend(result.diagnostics);
            let record = SmellRecord {
                commit_hash: commit.commit_hash.clone(),
                file_path: f.file_path,
                vector: result.vector,
            };
            lines.push_str(&record.to_json_line());
            lines.push('\n');
            count += 1;
        }
    }
    let path = cfg
        .paths
        .smells
        .clone()
        .unwrap_or_else(|| cfg.paths.out_file("smells.jsonl"));
    write(&path, &lines)?;
    log::info!("{count} smell records -> {}", path.display());
    Ok(Outcome::from(diags))
}

fn load_samples(cfg: &RunConfig) -> Result<Vec<LabeledSample>, String> {
    let path = cfg.paths.dataset_path();
    if !path.exists() {
        return Err(format!("missing input: {}", path.display()));
    }
    samples_from_jsonl(&read(&path)?).map_err(|e| format!("{}: {e}", path.display()))
}

fn cmd_train(cfg: &RunConfig) -> Result<Outcome, String> {
    let samples = load_samples(cfg)?;
    let (dict, data) = prepare_dataset(&samples, cfg.text.seq_len, cfg.text.max_words);
    let mut diags = Vec::new();
    let mut seeds = ChaCha8Rng::seed_from_u64(cfg.seed);
    let (init_seed, smote_seed, train_seed): (u64, u64, u64) = (seeds.random(), seeds.random(), seeds.random());

    let mut inputs = data.inputs.clone();
    let mut labels = data.labels.clone();
    let scopes = cfg.balance.scopes()?;
    let classes = (labels.contains(&0), labels.contains(&1));
    if !scopes.contains(&SmoteScope::None) && classes == (true, true) {
        let rounding = if cfg.balance.rounding {
            Rounding::ToIndex {
                vocab_size: data.vocab_size,
            }
        } else {
            Rounding::Off
        };
        let out = smote(
            &from_indices(&inputs, &labels),
            cfg.balance.k_neighbors,
            smote_seed,
            rounding,
        )
        .map_err(|e| e.to_string())?;
        diags.extend(out.diagnostics);
        inputs = out.samples.iter().map(|s| to_indices(&s.values)).collect();
        labels = out.samples.iter().map(|s| s.label).collect();
    }

    let model_cfg = cfg.model.model_config(data.vocab_size, cfg.text.seq_len);
    let mut model = init_model(model_cfg, init_seed).map_err(|e| e.to_string())?;
    model.seed = cfg.seed;
    model.dictionary_hash = Some(dict.content_hash());
    let (trained, history) =
        train(&model, &inputs, &labels, &cfg.model.train_params(), train_seed).map_err(|e| e.to_string())?;

    let model_path = cfg.paths.model_path();
    if let Some(dir) = model_path.parent().filter(|d| !d.as_os_str().is_empty()) {
        fs::create_dir_all(dir).map_err(|e| format!("cannot create {}: {e}", dir.display()))?;
    }
    save_model(&trained, &model_path).map_err(|e| e.to_string())?;
    write(&cfg.paths.dictionary_path(), &dict.to_tsv())?;
    let mut hist = format!("# seed={}\nepoch\tloss\taccuracy\n", cfg.seed);
    for e in &history.epochs {
        hist.push_str(&format!("{}\t{:.6}\t{:.4}\n", e.epoch, e.loss, e.accuracy));
    }
    write(&cfg.paths.out_file("history.tsv"), &hist)?;
    if let Some(last) = history.last() {
        log::info!(
            "final epoch: loss {:.4}, train accuracy {:.2}%",
            last.loss,
            last.accuracy
        );
    }
    log::info!("model -> {}", model_path.display());
    Ok(Outcome::from(diags))
}

fn cmd_evaluate(cfg: &RunConfig) -> Result<Outcome, String> {
    let samples = load_samples(cfg)?;
    let (_, data) = prepare_dataset(&samples, cfg.text.seq_len, cfg.text.max_words);
    let scopes = cfg.balance.scopes()?;
    let mut diags = Vec::new();
    for &scope in &scopes {
        let exp = ExperimentConfig {
            project: cfg.project.clone(),
            model: cfg.model.model_config(data.vocab_size, cfg.text.seq_len),
            train: cfg.model.train_params(),
            balance: cfg.balance.config(scope),
            folds: cfg.eval.folds,
            seed: cfg.seed,
        };
        let report = run_kfold_experiment(&data, &exp).map_err(|e| e.to_string())?;
        let suffix = if scopes.len() > 1 {
            format!("_{}", scope.name())
        } else {
            String::new()
        };
        let tsv = report_tsv(&report);
        write(&cfg.paths.out_file(&format!("report{suffix}.tsv")), &tsv)?;
        write(
            &cfg.paths.out_file(&format!("folds{suffix}.jsonl")),
            &fold_rows_jsonl(&report),
        )?;
        print!("{tsv}");
        diags.extend(report.diagnostics);
    }
    Ok(Outcome::from(diags))
}

fn cmd_predict(
    cfg: &RunConfig,
    model_path: Option<&Path>,
    dictionary_path: Option<&Path>,
    summary: &str,
    description: &str,
) -> Result<Outcome, String> {
    let model_path = model_path
        .map(Path::to_path_buf)
        .unwrap_or_else(|| cfg.paths.model_path());
    let dict_path = dictionary_path.map(Path::to_path_buf).unwrap_or_else(|| {
        let sibling = model_path.with_file_name("dictionary.tsv");
        if sibling.exists() {
            sibling
        } else {
            cfg.paths.dictionary_path()
        }
    });
    let mut diags = Vec::new();
    let dict = if dict_path.exists() {
        Dictionary::from_tsv(&read(&dict_path)?).map_err(|e| format!("{}: {e}", dict_path.display()))?
    } else {
        diags.push(Diagnostic::new(
            dict_path.display().to_string(),
            "dictionary not found; every word is out of vocabulary",
        ));
        Dictionary::default()
    };
    let (model, load_diags) = load_model(&model_path, Some(&dict.content_hash())).map_err(|e| e.to_string())?;
    diags.extend(load_diags);

    let doc = TokenDocument::from_raw("input", &format!("{summary} {description}"), cfg.text.options());
    let mut seq = doc2indices(&doc, &dict, model.config.seq_len).0;
    for i in seq.iter_mut().filter(|i| **i as usize >= model.config.vocab_size) {
        *i = OOV_INDEX;
    }
    let (label, prob) = predict(&model, &seq).map_err(|e| e.to_string())?;
    println!("label={label} probability={prob:.6}");
    println!(
        "{}",
        if label == 1 {
            "refer to designer"
        } else {
            "assign to programmer"
        }
    );
    Ok(Outcome::from(diags))
}
