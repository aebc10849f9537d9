//! Two independent checks of the analytic posterior: counting over an explicit
//! population, and seeded Monte Carlo sampling.
//!
//! The sampler uses ChaCha8 (`rand_chacha`) seeded with `seed_from_u64`, and
//! draws each Bernoulli(p) as `next_u64() < floor(p * 2^64)`. Both the stream
//! and the comparison are platform independent, so a seed pins the result.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use crate::bayes::Scenario;
use crate::error::{Error, Result};
use crate::probability::Probability;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Individual {
    hypothesis: bool,
    evidence: bool,
}

/// Whole-number count `population * share`, or `None` if it is fractional.
fn whole(population: u64, share: &BigRational) -> Option<u64> {
    let count = BigRational::from_integer(population.into()) * share;
    if count.is_integer() {
        count.to_integer().to_u64()
    } else {
        None
    }
}

/// Lists every individual of the population with its two attributes and
/// returns the share of those showing the evidence for which the hypothesis
/// holds.
pub fn enumerate_posterior(scenario: &Scenario, population: u64) -> Result<Probability> {
    let b = scenario.base_rate.value();
    let h = scenario.hit_rate.value();
    let f = scenario.false_alarm_rate.value();
    let non_integral = || Error::NonIntegralCounts { population };

    let with_h = whole(population, b).ok_or_else(non_integral)?;
    let without_h = population - with_h;
    let hits = whole(with_h, h).ok_or_else(non_integral)?;
    let false_alarms = whole(without_h, f).ok_or_else(non_integral)?;

    let mut people = Vec::with_capacity(population as usize);
    people.extend((0..with_h).map(|i| Individual { hypothesis: true, evidence: i < hits }));
    people.extend((0..without_h).map(|i| Individual { hypothesis: false, evidence: i < false_alarms }));

    let showing: Vec<&Individual> = people.iter().filter(|p| p.evidence).collect();
    if showing.is_empty() {
        return Err(Error::DegenerateEvidence);
    }
    let matching = showing.iter().filter(|p| p.hypothesis).count();
    Probability::new(BigRational::new(matching.into(), showing.len().into()))
}

#[derive(Debug, Clone, PartialEq)]
pub struct SimResult {
    /// Conditioned hypothesis frequency, exact.
    pub estimate: Probability,
    /// Binomial standard error `sqrt(p (1 - p) / n)` of the estimate.
    pub standard_error: f64,
    pub samples_total: u64,
    pub samples_conditioned: u64,
    pub seed: u64,
}

impl SimResult {
    /// Distance to `exact` in units of the standard error. Zero distance is
    /// zero; any distance with zero error is infinite.
    pub fn deviation_in_se(&self, exact: &Probability) -> f64 {
        let gap = (self.estimate.to_f64() - exact.to_f64()).abs();
        if gap == 0.0 {
            0.0
        } else {
            gap / self.standard_error
        }
    }
}

/// `floor(p * 2^64)`; 2^64 itself for p = 1.
fn threshold(p: &Probability) -> u128 {
    let scaled = p.value() * BigRational::from_integer(BigInt::from(1u128 << 64));
    scaled.floor().to_integer().to_u128().unwrap_or(0)
}

pub fn monte_carlo_posterior(scenario: &Scenario, samples: u64, seed: u64) -> Result<SimResult> {
    if samples == 0 {
        return Err(Error::Invalid("at least one sample is required".into()));
    }
    let base = threshold(&scenario.base_rate);
    let hit = threshold(&scenario.hit_rate);
    let false_alarm = threshold(&scenario.false_alarm_rate);

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut conditioned = 0u64;
    let mut conditioned_hypothesis = 0u64;
    for _ in 0..samples {
        let hypothesis = u128::from(rng.next_u64()) < base;
        let rate = if hypothesis { hit } else { false_alarm };
        if u128::from(rng.next_u64()) < rate {
            conditioned += 1;
            conditioned_hypothesis += u64::from(hypothesis);
        }
    }
    if conditioned == 0 {
        return Err(Error::NoConditionedSamples { samples });
    }

    let estimate = Probability::new(BigRational::new(conditioned_hypothesis.into(), conditioned.into()))?;
    let p = estimate.to_f64();
    let standard_error = (p * (1.0 - p) / conditioned as f64).sqrt();
    Ok(SimResult {
        estimate,
        standard_error,
        samples_total: samples,
        samples_conditioned: conditioned,
        seed,
    })
}
