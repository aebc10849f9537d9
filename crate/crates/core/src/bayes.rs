//! The three-parameter evidence model: a base rate for the hypothesis and the
//! probability of observing the evidence with and without it.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::probability::Probability;

pub const DEFAULT_HYPOTHESIS_LABEL: &str = "runs on Main Street";
pub const DEFAULT_EVIDENCE_LABEL: &str = "is blue";

/// Prior `p(H)` with the two conditional rates `p(E|H)` and `p(E|not H)`.
///
/// Any combination of rates is a valid scenario. The labels are only used
/// when rendering.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Scenario {
    pub base_rate: Probability,
    pub hit_rate: Probability,
    pub false_alarm_rate: Probability,
    pub hypothesis_label: String,
    pub evidence_label: String,
}

impl Scenario {
    pub fn new(base_rate: Probability, hit_rate: Probability, false_alarm_rate: Probability) -> Self {
        Scenario {
            base_rate,
            hit_rate,
            false_alarm_rate,
            hypothesis_label: DEFAULT_HYPOTHESIS_LABEL.to_string(),
            evidence_label: DEFAULT_EVIDENCE_LABEL.to_string(),
        }
    }

    /// Builds a scenario from three decimal/percent/fraction literals.
    pub fn parse(base_rate: &str, hit_rate: &str, false_alarm_rate: &str) -> Result<Self> {
        Ok(Scenario::new(base_rate.parse()?, hit_rate.parse()?, false_alarm_rate.parse()?))
    }

    pub fn with_labels(mut self, hypothesis: impl Into<String>, evidence: impl Into<String>) -> Self {
        self.hypothesis_label = hypothesis.into();
        self.evidence_label = evidence.into();
        self
    }

    /// The same model with the roles of the hypothesis and its complement swapped.
    pub fn swapped(&self) -> Scenario {
        Scenario {
            base_rate: self.base_rate.complement(),
            hit_rate: self.false_alarm_rate.clone(),
            false_alarm_rate: self.hit_rate.clone(),
            hypothesis_label: format!("not {}", self.hypothesis_label),
            evidence_label: self.evidence_label.clone(),
        }
    }

    /// `p(E and H)`.
    pub fn joint_hit(&self) -> Probability {
        self.base_rate.and(&self.hit_rate)
    }

    /// `p(E and not H)`.
    pub fn joint_false_alarm(&self) -> Probability {
        self.base_rate.complement().and(&self.false_alarm_rate)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PosteriorBreakdown {
    pub joint_hit: Probability,
    pub joint_false_alarm: Probability,
    pub evidence_marginal: Probability,
    pub posterior: Probability,
}

/// Bayes' rule in four steps: the two joint masses, their sum, and the share
/// of the sum that belongs to the hypothesis.
pub fn compute_posterior(scenario: &Scenario) -> Result<PosteriorBreakdown> {
    let joint_hit = scenario.joint_hit();
    let joint_false_alarm = scenario.joint_false_alarm();
    let marginal = joint_hit.value() + joint_false_alarm.value();
    if marginal.is_zero() {
        return Err(Error::DegenerateEvidence);
    }
    let posterior = Probability::new(joint_hit.value() / &marginal)?;
    Ok(PosteriorBreakdown {
        evidence_marginal: Probability::new(marginal)?,
        joint_hit,
        joint_false_alarm,
        posterior,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Outcome {
    ForMovingParty,
    ForDefendant,
}

impl Outcome {
    pub fn as_str(self) -> &'static str {
        match self {
            Outcome::ForMovingParty => "for_moving_party",
            Outcome::ForDefendant => "for_defendant",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub outcome: Outcome,
    pub threshold: Probability,
    pub posterior: Probability,
}

/// The civil standard: the claim must be more likely than not.
pub fn preponderance() -> Probability {
    Probability::half()
}

/// The moving party wins only if the posterior strictly exceeds the threshold.
pub fn decide(breakdown: &PosteriorBreakdown, threshold: &Probability) -> Verdict {
    let outcome = if breakdown.posterior > *threshold {
        Outcome::ForMovingParty
    } else {
        Outcome::ForDefendant
    };
    Verdict {
        outcome,
        threshold: threshold.clone(),
        posterior: breakdown.posterior.clone(),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ErrorKind {
    /// Found for the moving party although the hypothesis is false.
    FalseAlarmVerdict,
    /// Found for the defendant although the hypothesis is true.
    MissVerdict,
}

impl ErrorKind {
    pub fn as_str(self) -> &'static str {
        match self {
            ErrorKind::FalseAlarmVerdict => "false_alarm_verdict",
            ErrorKind::MissVerdict => "miss_verdict",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ErrorProfile {
    pub verdict: Verdict,
    pub wrong_verdict_probability: Probability,
    pub error_kind: ErrorKind,
}

/// Probability, given the evidence, that the threshold verdict is wrong.
pub fn verdict_error_profile(breakdown: &PosteriorBreakdown, threshold: &Probability) -> ErrorProfile {
    let verdict = decide(breakdown, threshold);
    let (wrong_verdict_probability, error_kind) = match verdict.outcome {
        Outcome::ForMovingParty => (breakdown.posterior.complement(), ErrorKind::FalseAlarmVerdict),
        Outcome::ForDefendant => (breakdown.posterior.clone(), ErrorKind::MissVerdict),
    };
    ErrorProfile {
        verdict,
        wrong_verdict_probability,
        error_kind,
    }
}
