//! Sixteen structural smell rules evaluated per source file, either from the
//! built-in scanner or from an external PMD XML report.

mod lexer;
mod metrics;
pub mod npath;
mod pmd;
mod strip;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};
use thiserror::Error;

pub use metrics::{scan_metrics, ClassMetrics, FileMetrics, MethodMetrics};
pub use npath::{compose_npath, Stmt, StmtParser, SwitchCounts, SwitchGroup};
pub use pmd::{ingest_pmd_report, PmdReport};
pub use strip::strip_comments_and_strings;

use crate::Diagnostic;

#[derive(Debug, Error)]
pub enum SmellError {
    #[error("malformed PMD report at byte {position}: {message}")]
    MalformedReport { position: u64, message: String },
    #[error("bad smell record: {0}")]
    BadRecord(String),
}

/// The sixteen smells, in storage-table order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum SmellRule {
    AbstractClassWithoutAnyMethod,
    CouplingBetweenObjects,
    CyclomaticComplexity,
    DataClass,
    ExcessiveClassLength,
    ExcessiveImports,
    ExcessiveMethodLength,
    ExcessiveParameterList,
    ExcessivePublicCount,
    GodClass,
    LoosePackageCoupling,
    NcssCount,
    NPathComplexity,
    SwitchDensity,
    TooManyFields,
    TooManyMethods,
}

impl SmellRule {
    pub const COUNT: usize = 16;

    pub const ALL: [SmellRule; 16] = [
        SmellRule::AbstractClassWithoutAnyMethod,
        SmellRule::CouplingBetweenObjects,
        SmellRule::CyclomaticComplexity,
        SmellRule::DataClass,
        SmellRule::ExcessiveClassLength,
        SmellRule::ExcessiveImports,
        SmellRule::ExcessiveMethodLength,
        SmellRule::ExcessiveParameterList,
        SmellRule::ExcessivePublicCount,
        SmellRule::GodClass,
        SmellRule::LoosePackageCoupling,
        SmellRule::NcssCount,
        SmellRule::NPathComplexity,
        SmellRule::SwitchDensity,
        SmellRule::TooManyFields,
        SmellRule::TooManyMethods,
    ];

    pub fn index(self) -> usize {
        self as usize
    }

    /// Row of the rule in the storage table (5..=20).
    pub fn table_row(self) -> usize {
        self.index() + 5
    }

    pub fn name(self) -> &'static str {
        match self {
            SmellRule::AbstractClassWithoutAnyMethod => "AbstractClassWithoutAnyMethod",
            SmellRule::CouplingBetweenObjects => "CouplingBetweenObjects",
            SmellRule::CyclomaticComplexity => "CyclomaticComplexity",
            SmellRule::DataClass => "DataClass",
            SmellRule::ExcessiveClassLength => "ExcessiveClassLength",
            SmellRule::ExcessiveImports => "ExcessiveImports",
            SmellRule::ExcessiveMethodLength => "ExcessiveMethodLength",
            SmellRule::ExcessiveParameterList => "ExcessiveParameterList",
            SmellRule::ExcessivePublicCount => "ExcessivePublicCount",
            SmellRule::GodClass => "GodClass",
            SmellRule::LoosePackageCoupling => "LoosePackageCoupling",
            SmellRule::NcssCount => "NcssCount",
            SmellRule::NPathComplexity => "NPathComplexity",
            SmellRule::SwitchDensity => "SwitchDensity",
            SmellRule::TooManyFields => "TooManyFields",
            SmellRule::TooManyMethods => "TooManyMethods",
        }
    }
}

impl fmt::Display for SmellRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SmellRule {
    type Err = String;

    /// Case-sensitive match on the rule name.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        SmellRule::ALL
            .into_iter()
            .find(|r| r.name() == s)
            .ok_or_else(|| format!("unknown smell rule {s:?}"))
    }
}

/// Thresholds for the parameterised rules. Every comparison is strict `>`,
/// except the data-class accessor ratio (`>=`) and its complexity cap (`<=`).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct RuleThresholds {
    pub cyclo_npath_threshold: u64,
    pub coupling: u32,
    pub data_class_accessor_ratio: f64,
    pub data_class_max_cyclomatic: u32,
    pub class_length: u32,
    pub imports: u32,
    pub method_length: u32,
    pub parameters: u32,
    pub public_count: u32,
    pub god_class_wmc: u32,
    pub god_class_members: u32,
    pub method_ncss: u32,
    pub class_ncss: u32,
    pub switch_density: f64,
    pub fields: u32,
    pub methods: u32,
    /// Allowed package prefixes; when empty the loose-coupling rule never fires.
    pub allowed_packages: Vec<String>,
}

impl Default for RuleThresholds {
    fn default() -> Self {
        Self {
            cyclo_npath_threshold: 40,
            coupling: 20,
            data_class_accessor_ratio: 0.8,
            data_class_max_cyclomatic: 2,
            class_length: 1000,
            imports: 30,
            method_length: 100,
            parameters: 10,
            public_count: 45,
            god_class_wmc: 47,
            god_class_members: 20,
            method_ncss: 60,
            class_ncss: 1500,
            switch_density: 10.0,
            fields: 15,
            methods: 10,
            allowed_packages: Vec::new(),
        }
    }
}

impl RuleThresholds {
    pub fn validate(&self) -> Result<(), String> {
        let ints = [
            ("cyclo_npath_threshold", self.cyclo_npath_threshold),
            ("coupling", u64::from(self.coupling)),
            ("data_class_max_cyclomatic", u64::from(self.data_class_max_cyclomatic)),
            ("class_length", u64::from(self.class_length)),
            ("imports", u64::from(self.imports)),
            ("method_length", u64::from(self.method_length)),
            ("parameters", u64::from(self.parameters)),
            ("public_count", u64::from(self.public_count)),
            ("god_class_wmc", u64::from(self.god_class_wmc)),
            ("god_class_members", u64::from(self.god_class_members)),
            ("method_ncss", u64::from(self.method_ncss)),
            ("class_ncss", u64::from(self.class_ncss)),
            ("fields", u64::from(self.fields)),
            ("methods", u64::from(self.methods)),
        ];
        if let Some((name, _)) = ints.iter().find(|(_, v)| *v == 0) {
            return Err(format!("threshold {name} must be > 0"));
        }
        if !(self.data_class_accessor_ratio > 0.0 && self.switch_density > 0.0) {
            return Err("ratio thresholds must be > 0".into());
        }
        Ok(())
    }

    fn package_allowed(&self, pkg: &str) -> bool {
        self.allowed_packages
            .iter()
            .any(|p| pkg == p || pkg.strip_prefix(p.as_str()).is_some_and(|rest| rest.starts_with('.')))
    }
}

/// Per-file smell flags plus the raw complexity maxima behind two of them.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct SmellVector {
    pub flags: [bool; SmellRule::COUNT],
    pub raw_cyclomatic_max: u64,
    pub raw_npath_max: u64,
}

impl SmellVector {
    pub fn get(&self, rule: SmellRule) -> bool {
        self.flags[rule.index()]
    }

    pub fn set(&mut self, rule: SmellRule, on: bool) {
        self.flags[rule.index()] = on;
    }

    pub fn count(&self) -> usize {
        self.flags.iter().filter(|&&f| f).count()
    }

    pub fn active(&self) -> Vec<SmellRule> {
        SmellRule::ALL.into_iter().filter(|r| self.get(*r)).collect()
    }

    /// Union of two vectors; raw maxima take the larger value.
    pub fn merge(&mut self, other: &SmellVector) {
        for (a, b) in self.flags.iter_mut().zip(other.flags) {
            *a |= b;
        }
        self.raw_cyclomatic_max = self.raw_cyclomatic_max.max(other.raw_cyclomatic_max);
        self.raw_npath_max = self.raw_npath_max.max(other.raw_npath_max);
    }
}

/// Apply every rule predicate; a file flag is the OR over its classes and
/// methods.
pub fn evaluate_rules(metrics: &FileMetrics, t: &RuleThresholds) -> SmellVector {
    use SmellRule::*;
    let mut v = SmellVector::default();
    let methods = || metrics.classes.iter().flat_map(|c| c.methods.iter());

    v.raw_cyclomatic_max = methods().map(|m| u64::from(m.cyclomatic())).max().unwrap_or(0);
    v.raw_npath_max = methods().map(|m| m.npath).max().unwrap_or(0);
    v.set(CyclomaticComplexity, v.raw_cyclomatic_max > t.cyclo_npath_threshold);
    v.set(NPathComplexity, v.raw_npath_max > t.cyclo_npath_threshold);
    v.set(ExcessiveImports, metrics.import_count > t.imports);
    v.set(
        LoosePackageCoupling,
        !t.allowed_packages.is_empty() && metrics.imported_packages.iter().any(|p| !t.package_allowed(p)),
    );

    for c in &metrics.classes {
        let max_cyclo = c.methods.iter().map(MethodMetrics::cyclomatic).max().unwrap_or(1);
        let wmc: u32 = c.methods.iter().map(MethodMetrics::cyclomatic).sum();
        let mut flag = |rule: SmellRule, on: bool| {
            if on {
                v.set(rule, true);
            }
        };
        flag(
            AbstractClassWithoutAnyMethod,
            c.is_abstract && c.method_count == 0 && c.field_count > 0,
        );
        flag(CouplingBetweenObjects, c.unique_coupled_types > t.coupling);
        flag(
            DataClass,
            c.method_count > 0
                && c.accessor_ratio >= t.data_class_accessor_ratio
                && max_cyclo <= t.data_class_max_cyclomatic,
        );
        flag(ExcessiveClassLength, c.line_count > t.class_length);
        flag(ExcessivePublicCount, c.public_member_count > t.public_count);
        flag(
            GodClass,
            wmc > t.god_class_wmc && c.field_count + c.method_count > t.god_class_members,
        );
        flag(TooManyFields, c.field_count > t.fields);
        flag(TooManyMethods, c.method_count > t.methods);
        flag(NcssCount, c.ncss > t.class_ncss);
        for m in &c.methods {
            flag(ExcessiveMethodLength, m.line_count > t.method_length);
            flag(ExcessiveParameterList, m.param_count > t.parameters);
            flag(NcssCount, m.ncss > t.method_ncss);
            flag(
                SwitchDensity,
                m.switches
                    .iter()
                    .any(|s| s.labels > 0 && f64::from(s.statements) / f64::from(s.labels) > t.switch_density),
            );
        }
    }
    v
}

/// Result of scanning one source file end to end.
#[derive(Debug, Clone)]
pub struct ScanResult {
    pub metrics: FileMetrics,
    pub vector: SmellVector,
    pub diagnostics: Vec<Diagnostic>,
}

/// Strip, scan and evaluate raw source text.
pub fn scan_source(source: &str, file_path: &str, thresholds: &RuleThresholds) -> ScanResult {
    let (clean, strip_diags) = strip_comments_and_strings(source);
    let metrics = scan_metrics(&clean, file_path);
    let vector = evaluate_rules(&metrics, thresholds);
    let mut diagnostics: Vec<Diagnostic> = strip_diags
        .into_iter()
        .map(|d| Diagnostic::new(format!("{file_path} {}", d.location), d.message))
        .collect();
    diagnostics.extend(metrics.diagnostics.iter().cloned());
    ScanResult {
        metrics,
        vector,
        diagnostics,
    }
}

/// One line of the smell table: a vector keyed by commit and file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmellRecord {
    pub commit_hash: String,
    pub file_path: String,
    pub vector: SmellVector,
}

impl SmellRecord {
    /// JSON object with `Commit_Hash`, `File_path`, one 0/1 field per rule
    /// named exactly as [`SmellRule::name`], and the two raw maxima.
    pub fn to_json_line(&self) -> String {
        let mut obj = Map::new();
        obj.insert("Commit_Hash".into(), Value::from(self.commit_hash.clone()));
        obj.insert("File_path".into(), Value::from(self.file_path.clone()));
        for rule in SmellRule::ALL {
            obj.insert(rule.name().into(), Value::from(u8::from(self.vector.get(rule))));
        }
        obj.insert("raw_cyclomatic_max".into(), Value::from(self.vector.raw_cyclomatic_max));
        obj.insert("raw_npath_max".into(), Value::from(self.vector.raw_npath_max));
        Value::Object(obj).to_string()
    }

    pub fn from_json_line(line: &str) -> Result<Self, SmellError> {
        let value: Value = serde_json::from_str(line).map_err(|e| SmellError::BadRecord(e.to_string()))?;
        let obj = value
            .as_object()
            .ok_or_else(|| SmellError::BadRecord("expected an object".into()))?;
        let text = |key: &str| {
            obj.get(key)
                .and_then(Value::as_str)
                .map(str::to_string)
                .ok_or_else(|| SmellError::BadRecord(format!("missing {key}")))
        };
        let num = |key: &str| {
            obj.get(key)
                .and_then(Value::as_u64)
                .ok_or_else(|| SmellError::BadRecord(format!("missing or non-integer {key}")))
        };
        let mut vector = SmellVector::default();
        for rule in SmellRule::ALL {
            match num(rule.name())? {
                0 => {}
                1 => vector.set(rule, true),
                other => return Err(SmellError::BadRecord(format!("{rule} = {other}, expected 0 or 1"))),
            }
        }
        vector.raw_cyclomatic_max = num("raw_cyclomatic_max")?;
        vector.raw_npath_max = num("raw_npath_max")?;
        Ok(SmellRecord {
            commit_hash: text("Commit_Hash")?,
            file_path: text("File_path")?,
            vector,
        })
    }
}
