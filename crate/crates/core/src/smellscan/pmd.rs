use std::collections::BTreeMap;

use quick_xml::events::{BytesStart, Event};
use quick_xml::Reader;

use super::{RuleThresholds, SmellError, SmellRule, SmellVector};
use crate::Diagnostic;

/// Smell vectors recovered from a PMD XML report.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct PmdReport {
    /// Files with at least one violation, ordered by path.
    pub files: Vec<(String, SmellVector)>,
    /// Violations whose rule is not one of the sixteen.
    pub unmatched_rules: usize,
    pub diagnostics: Vec<Diagnostic>,
}

/// Read a PMD XML report (`<file name=…><violation rule=…>`).
///
/// PMD has already applied its own thresholds, so complexity violations set
/// the flag directly and the raw maxima are recorded as `threshold + 1`.
pub fn ingest_pmd_report(xml: &str, thresholds: &RuleThresholds) -> Result<PmdReport, SmellError> {
    let mut reader = Reader::from_str(xml);
    let mut files: BTreeMap<String, SmellVector> = BTreeMap::new();
    let mut report = PmdReport::default();
    let mut current: Option<String> = None;
    let sentinel = thresholds.cyclo_npath_threshold + 1;

    loop {
        let pos = reader.buffer_position();
        let event = reader.read_event().map_err(|e| SmellError::MalformedReport {
            position: pos,
            message: e.to_string(),
        })?;
        match event {
            Event::Start(ref e) | Event::Empty(ref e) if local_name(e) == "file" => {
                let name = attr(e, "name", pos)?;
                if name.is_none() {
                    report.diagnostics.push(Diagnostic::new(
                        format!("byte {pos}"),
                        "file element without name skipped",
                    ));
                }
                current = if matches!(event, Event::Start(_)) { name } else { None };
            }
            Event::End(ref e) if e.local_name().as_ref() == b"file" => current = None,
            Event::Start(ref e) | Event::Empty(ref e) if local_name(e) == "violation" => {
                let Some(file) = current.clone() else {
                    continue;
                };
                let rule = attr(e, "rule", pos)?.unwrap_or_default();
                let vector = files.entry(file).or_default();
                match rule.parse::<SmellRule>() {
                    Ok(rule) => {
                        vector.set(rule, true);
                        match rule {
                            SmellRule::CyclomaticComplexity => vector.raw_cyclomatic_max = sentinel,
                            SmellRule::NPathComplexity => vector.raw_npath_max = sentinel,
                            _ => {}
                        }
                    }
                    Err(_) => report.unmatched_rules += 1,
                }
            }
            Event::Eof => break,
            _ => {}
        }
    }
    if current.is_some() {
        return Err(SmellError::MalformedReport {
            position: reader.buffer_position(),
            message: "unclosed file element".into(),
        });
    }
    report.files = files.into_iter().collect();
    Ok(report)
}

fn local_name(e: &BytesStart<'_>) -> String {
    String::from_utf8_lossy(e.local_name().as_ref()).into_owned()
}

fn attr(e: &BytesStart<'_>, key: &str, pos: u64) -> Result<Option<String>, SmellError> {
    for a in e.attributes() {
        let a = a.map_err(|err| SmellError::MalformedReport {
            position: pos,
            message: err.to_string(),
        })?;
        if a.key.local_name().as_ref() == key.as_bytes() {
            let value = a.unescape_value().map_err(|err| SmellError::MalformedReport {
                position: pos,
                message: err.to_string(),
            })?;
            return Ok(Some(value.into_owned()));
        }
    }
    Ok(None)
}
