//! The line-oriented scenario file.
//!
//! ```text
//! # Example #1
//! version = 1
//! base_rate = 0.4
//! hit_rate = 80%
//! false_alarm_rate = 1/10
//! population = 100
//! threshold = 0.5
//! hypothesis_label = runs on Main Street
//! evidence_label = is blue
//! ```
//!
//! Lines whose first non-blank character is `#` are comments; there are no
//! trailing comments, so labels may contain `#`. Rates accept decimals,
//! percentages and fractions and are kept exact. `version` defaults to 1.

use std::fmt::Write as _;

use num_rational::BigRational;
use num_traits::{One, Signed};

use crate::bayes::{Scenario, DEFAULT_EVIDENCE_LABEL, DEFAULT_HYPOTHESIS_LABEL};
use crate::error::{Error, Result};
use crate::probability::{parse_rational, Probability};

pub const FORMAT_VERSION: u32 = 1;

const KEYS: [&str; 8] = [
    "version",
    "base_rate",
    "hit_rate",
    "false_alarm_rate",
    "population",
    "threshold",
    "hypothesis_label",
    "evidence_label",
];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScenarioDocument {
    pub format_version: u32,
    pub scenario: Scenario,
    pub population: Option<u64>,
    pub threshold: Option<Probability>,
}

impl ScenarioDocument {
    pub fn new(scenario: Scenario) -> Self {
        ScenarioDocument {
            format_version: FORMAT_VERSION,
            scenario,
            population: None,
            threshold: None,
        }
    }

    /// Canonical text form. Rates are written as terminating decimals where
    /// possible and as fractions otherwise, so re-parsing is lossless.
    pub fn to_text(&self) -> String {
        let s = &self.scenario;
        let mut out = String::new();
        let _ = writeln!(out, "version = {}", self.format_version);
        let _ = writeln!(out, "base_rate = {}", s.base_rate);
        let _ = writeln!(out, "hit_rate = {}", s.hit_rate);
        let _ = writeln!(out, "false_alarm_rate = {}", s.false_alarm_rate);
        if let Some(population) = self.population {
            let _ = writeln!(out, "population = {population}");
        }
        if let Some(threshold) = &self.threshold {
            let _ = writeln!(out, "threshold = {threshold}");
        }
        let _ = writeln!(out, "hypothesis_label = {}", s.hypothesis_label);
        let _ = writeln!(out, "evidence_label = {}", s.evidence_label);
        out
    }
}

fn rate(key: &str, value: &str, line: usize) -> Result<Probability> {
    let parsed = parse_rational(value).ok_or_else(|| Error::SyntaxError {
        line,
        message: format!("`{value}` is not a decimal, percentage or fraction"),
    })?;
    if parsed.is_negative() || parsed > BigRational::one() {
        return Err(Error::RangeError {
            line,
            message: format!("{key} = {value} is outside [0, 1]"),
        });
    }
    Probability::new(parsed).map_err(|e| Error::RangeError { line, message: e.to_string() })
}

fn integer(key: &str, value: &str, line: usize) -> Result<i128> {
    value.parse::<i128>().map_err(|_| Error::SyntaxError {
        line,
        message: format!("{key} must be a whole number, got `{value}`"),
    })
}

/// Parses and validates a scenario file.
pub fn parse_scenario(text: &str) -> Result<ScenarioDocument> {
    let mut seen: [Option<(usize, String)>; KEYS.len()] = Default::default();

    for (index, raw) in text.lines().enumerate() {
        let line = index + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let (key, value) = trimmed.split_once('=').ok_or_else(|| Error::SyntaxError {
            line,
            message: format!("expected `key = value`, got `{trimmed}`"),
        })?;
        let (key, value) = (key.trim(), value.trim());
        let slot = KEYS.iter().position(|k| *k == key).ok_or_else(|| Error::SyntaxError {
            line,
            message: format!("unknown key `{key}`"),
        })?;
        if value.is_empty() {
            return Err(Error::SyntaxError {
                line,
                message: format!("`{key}` has no value"),
            });
        }
        if seen[slot].is_some() {
            return Err(Error::DuplicateKey { key: key.to_string(), line });
        }
        seen[slot] = Some((line, value.to_string()));
    }

    let get = |key: &str| -> Option<&(usize, String)> {
        let slot = KEYS.iter().position(|k| *k == key).expect("known key");
        seen[slot].as_ref()
    };
    let required = |key: &str| -> Result<Probability> {
        let (line, value) = get(key).ok_or_else(|| Error::MissingKey { key: key.to_string() })?;
        rate(key, value, *line)
    };

    let format_version = match get("version") {
        None => FORMAT_VERSION,
        Some((line, value)) => {
            let v = integer("version", value, *line)?;
            if v != i128::from(FORMAT_VERSION) {
                return Err(Error::RangeError {
                    line: *line,
                    message: format!("unsupported format version {v} (expected {FORMAT_VERSION})"),
                });
            }
            FORMAT_VERSION
        }
    };

    let base_rate = required("base_rate")?;
    let hit_rate = required("hit_rate")?;
    let false_alarm_rate = required("false_alarm_rate")?;

    let population = match get("population") {
        None => None,
        Some((line, value)) => {
            let n = integer("population", value, *line)?;
            if n < 1 || n > i128::from(u64::MAX) {
                return Err(Error::RangeError {
                    line: *line,
                    message: format!("population = {value} must be at least 1"),
                });
            }
            Some(n as u64)
        }
    };
    let threshold = get("threshold").map(|(line, value)| rate("threshold", value, *line)).transpose()?;

    let label = |key: &str, default: &str| get(key).map(|(_, v)| v.clone()).unwrap_or_else(|| default.to_string());
    let scenario = Scenario {
        base_rate,
        hit_rate,
        false_alarm_rate,
        hypothesis_label: label("hypothesis_label", DEFAULT_HYPOTHESIS_LABEL),
        evidence_label: label("evidence_label", DEFAULT_EVIDENCE_LABEL),
    };
    Ok(ScenarioDocument {
        format_version,
        scenario,
        population,
        threshold,
    })
}
