//! One-parameter sensitivity sweeps.

use std::fmt;
use std::str::FromStr;

use num_rational::BigRational;

use crate::bayes::{compute_posterior, decide, preponderance, Outcome, Scenario};
use crate::error::{Error, Result};
use crate::probability::Probability;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Parameter {
    BaseRate,
    HitRate,
    FalseAlarmRate,
}

impl Parameter {
    pub fn as_str(self) -> &'static str {
        match self {
            Parameter::BaseRate => "base_rate",
            Parameter::HitRate => "hit_rate",
            Parameter::FalseAlarmRate => "false_alarm_rate",
        }
    }

    /// `scenario` with this parameter replaced by `value`.
    pub fn substitute(self, scenario: &Scenario, value: Probability) -> Scenario {
        let mut out = scenario.clone();
        match self {
            Parameter::BaseRate => out.base_rate = value,
            Parameter::HitRate => out.hit_rate = value,
            Parameter::FalseAlarmRate => out.false_alarm_rate = value,
        }
        out
    }
}

impl fmt::Display for Parameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Parameter {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.replace('-', "_").as_str() {
            "base_rate" => Ok(Parameter::BaseRate),
            "hit_rate" => Ok(Parameter::HitRate),
            "false_alarm_rate" => Ok(Parameter::FalseAlarmRate),
            _ => Err(Error::Invalid(format!(
                "unknown parameter `{s}` (expected base_rate, hit_rate or false_alarm_rate)"
            ))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepRow {
    pub value: Probability,
    /// `None` where the evidence is impossible at this grid point.
    pub posterior: Option<Probability>,
    pub verdict: Option<Outcome>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepTable {
    pub parameter: Parameter,
    pub threshold: Probability,
    pub rows: Vec<SweepRow>,
}

pub const CSV_HEADER: &str = "param,value,posterior,verdict";
pub const DEGENERATE_MARKER: &str = "degenerate";
pub const UNDEFINED_VERDICT: &str = "undefined";

impl SweepTable {
    /// CSV with header `param,value,posterior,verdict`.
    ///
    /// Values are written exactly (decimal or fraction); posteriors with six
    /// significant digits.
    pub fn to_csv(&self) -> String {
        let mut out = String::from(CSV_HEADER);
        out.push('\n');
        for row in &self.rows {
            let posterior = row
                .posterior
                .as_ref()
                .map_or_else(|| DEGENERATE_MARKER.to_string(), |p| p.to_significant(6));
            let verdict = row.verdict.map_or(UNDEFINED_VERDICT, Outcome::as_str);
            out.push_str(&format!("{},{},{},{}\n", self.parameter, row.value, posterior, verdict));
        }
        out
    }
}

/// Sweep at the preponderance threshold.
pub fn sweep(scenario: &Scenario, parameter: Parameter, grid: &[Probability]) -> Result<SweepTable> {
    sweep_at(scenario, parameter, grid, &preponderance())
}

pub fn sweep_at(
    scenario: &Scenario,
    parameter: Parameter,
    grid: &[Probability],
    threshold: &Probability,
) -> Result<SweepTable> {
    if grid.is_empty() {
        return Err(Error::EmptyGrid);
    }
    if let Some(index) = grid.windows(2).position(|w| w[0] >= w[1]) {
        return Err(Error::UnorderedGrid { index: index + 1 });
    }
    let rows = grid
        .iter()
        .map(|value| {
            let point = parameter.substitute(scenario, value.clone());
            match compute_posterior(&point) {
                Ok(breakdown) => Ok(SweepRow {
                    value: value.clone(),
                    verdict: Some(decide(&breakdown, threshold).outcome),
                    posterior: Some(breakdown.posterior),
                }),
                Err(Error::DegenerateEvidence) => Ok(SweepRow {
                    value: value.clone(),
                    posterior: None,
                    verdict: None,
                }),
                Err(other) => Err(other),
            }
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SweepTable {
        parameter,
        threshold: threshold.clone(),
        rows,
    })
}

/// `steps` evenly spaced exact values from `from` to `to` inclusive.
pub fn linear_grid(from: &Probability, to: &Probability, steps: usize) -> Result<Vec<Probability>> {
    match steps {
        0 => Err(Error::EmptyGrid),
        1 => Ok(vec![from.clone()]),
        _ => {
            let gap = (to.value() - from.value()) / BigRational::from_integer((steps - 1).into());
            (0..steps)
                .map(|i| Probability::new(from.value() + &gap * BigRational::from_integer(i.into())))
                .collect()
        }
    }
}
