use std::path::PathBuf;

use bugrefer::smellscan::{scan_source, RuleThresholds, SmellRule};
use serde::Deserialize;

#[derive(Deserialize)]
struct Manifest {
    allowed_packages: Vec<String>,
    fixture: Vec<Fixture>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct Fixture {
    file: String,
    expect: Vec<String>,
    class: String,
    field_count: Option<u32>,
    method_count: Option<u32>,
    max_cyclomatic: Option<u32>,
    sum_cyclomatic: Option<u32>,
    max_npath: Option<u64>,
    coupled_types: Option<u32>,
    max_method_ncss: Option<u32>,
    max_method_lines: Option<u32>,
    max_params: Option<u32>,
    accessor_ratio: Option<f64>,
    class_lines: Option<u32>,
    import_count: Option<u32>,
    public_count: Option<u32>,
    switch_labels: Option<u32>,
    switch_statements: Option<u32>,
}

fn fixture_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures/smells")
}

fn check<T: PartialEq + std::fmt::Debug>(errors: &mut Vec<String>, file: &str, what: &str, want: Option<T>, got: T) {
    if let Some(want) = want {
        if want != got {
            errors.push(format!("{file}: {what} expected {want:?}, got {got:?}"));
        }
    }
}

/// Scan every fixture in the manifest; returns the fixture count and every
/// mismatch found.
pub fn check_smell_fixtures() -> (usize, Vec<String>) {
    let mut errors = Vec::new();
    let dir = fixture_dir();
    let manifest: Manifest = toml::from_str(&std::fs::read_to_string(dir.join("manifest.toml")).unwrap()).unwrap();
    let thresholds = RuleThresholds {
        allowed_packages: manifest.allowed_packages.clone(),
        ..Default::default()
    };
    if manifest.fixture.len() != SmellRule::COUNT + 1 {
        errors.push(format!(
            "expected {} fixtures, found {}",
            SmellRule::COUNT + 1,
            manifest.fixture.len()
        ));
    }

    for fx in &manifest.fixture {
        let src = std::fs::read_to_string(dir.join(&fx.file)).unwrap();
        let result = scan_source(&src, &fx.file, &thresholds);
        let active: Vec<String> = result.vector.active().iter().map(|r| r.name().to_string()).collect();
        if active != fx.expect {
            errors.push(format!("{}: rules expected {:?}, got {:?}", fx.file, fx.expect, active));
        }
        let m = &result.metrics;
        let Some(class) = m.classes.iter().find(|c| c.name == fx.class) else {
            errors.push(format!("{}: class {} not found", fx.file, fx.class));
            continue;
        };
        let f = fx.file.as_str();
        let cyclos = class.methods.iter().map(|x| x.cyclomatic());
        check(&mut errors, f, "field_count", fx.field_count, class.field_count);
        check(&mut errors, f, "method_count", fx.method_count, class.method_count);
        check(
            &mut errors,
            f,
            "max_cyclomatic",
            fx.max_cyclomatic,
            cyclos.clone().max().unwrap_or(0),
        );
        check(&mut errors, f, "sum_cyclomatic", fx.sum_cyclomatic, cyclos.sum());
        check(
            &mut errors,
            f,
            "max_npath",
            fx.max_npath,
            class.methods.iter().map(|x| x.npath).max().unwrap_or(0),
        );
        check(
            &mut errors,
            f,
            "coupled_types",
            fx.coupled_types,
            class.unique_coupled_types,
        );
        check(
            &mut errors,
            f,
            "max_method_ncss",
            fx.max_method_ncss,
            class.methods.iter().map(|x| x.ncss).max().unwrap_or(0),
        );
        check(
            &mut errors,
            f,
            "max_method_lines",
            fx.max_method_lines,
            class.methods.iter().map(|x| x.line_count).max().unwrap_or(0),
        );
        check(
            &mut errors,
            f,
            "max_params",
            fx.max_params,
            class.methods.iter().map(|x| x.param_count).max().unwrap_or(0),
        );
        check(
            &mut errors,
            f,
            "accessor_ratio",
            fx.accessor_ratio,
            class.accessor_ratio,
        );
        check(&mut errors, f, "class_lines", fx.class_lines, class.line_count);
        check(&mut errors, f, "import_count", fx.import_count, m.import_count);
        check(
            &mut errors,
            f,
            "public_count",
            fx.public_count,
            class.public_member_count,
        );
        check(
            &mut errors,
            f,
            "switch_labels",
            fx.switch_labels,
            class
                .methods
                .iter()
                .flat_map(|x| &x.switches)
                .map(|s| s.labels)
                .sum::<u32>(),
        );
        check(
            &mut errors,
            f,
            "switch_statements",
            fx.switch_statements,
            class
                .methods
                .iter()
                .flat_map(|x| &x.switches)
                .map(|s| s.statements)
                .sum::<u32>(),
        );
        if !result.diagnostics.is_empty() {
            errors.push(format!("{}: unexpected diagnostics {:?}", fx.file, result.diagnostics));
        }
    }
    let mut singles: Vec<&str> = manifest
        .fixture
        .iter()
        .filter(|f| f.expect.len() == 1)
        .map(|f| f.expect[0].as_str())
        .collect();
    singles.sort_unstable();
    singles.dedup();
    let clean = manifest.fixture.iter().filter(|f| f.expect.is_empty()).count();
    if singles.len() != SmellRule::COUNT || clean != 1 {
        errors.push(format!(
            "manifest covers {} rules with {clean} clean files",
            singles.len()
        ));
    }
    (manifest.fixture.len(), errors)
}
