//! Natural-frequency trees: a reference population split first by the
//! hypothesis and then by the evidence.
//!
//! ```text
//!                 population
//!          hypothesis     complement
//!   hits  quiet_hyp   false_alarms  quiet_comp
//! ```
//!
//! Leaves are always listed in that branch order.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::bayes::Scenario;
use crate::error::{Error, Result};
use crate::probability::Probability;

pub const DEFAULT_POPULATION: u64 = 100;

/// How expected counts that are not whole numbers are turned into tree counts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Hash)]
pub enum RoundingPolicy {
    /// Largest-remainder apportionment inside each parent node; ties go to the
    /// child listed first.
    #[default]
    LargestRemainder,
    /// Keep the expected counts as exact fractions.
    ExactRational,
}

impl RoundingPolicy {
    pub fn as_str(self) -> &'static str {
        match self {
            RoundingPolicy::LargestRemainder => "largest-remainder",
            RoundingPolicy::ExactRational => "exact-rational",
        }
    }
}

impl fmt::Display for RoundingPolicy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for RoundingPolicy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "largest-remainder" | "largest_remainder" => Ok(RoundingPolicy::LargestRemainder),
            "exact-rational" | "exact_rational" => Ok(RoundingPolicy::ExactRational),
            other => Err(Error::Invalid(format!(
                "unknown rounding policy `{other}` (expected largest-remainder or exact-rational)"
            ))),
        }
    }
}

/// Three-row frequency tree.
///
/// Counts are exact rationals. Under [`RoundingPolicy::LargestRemainder`] they
/// are always whole numbers; under [`RoundingPolicy::ExactRational`] they are
/// the expected counts themselves.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FrequencyTree {
    pub population: u64,
    pub hypothesis_count: BigRational,
    pub complement_count: BigRational,
    pub hits: BigRational,
    pub quiet_hypothesis: BigRational,
    pub false_alarms: BigRational,
    pub quiet_complement: BigRational,
    /// All six counts equal their expectations and are whole numbers.
    pub counts_exact: bool,
    /// `count - expected` per leaf, in branch order. All zero unless rounding happened.
    pub rounding_residuals: [BigRational; 4],
    pub rounding: RoundingPolicy,
    pub hypothesis_label: String,
    pub evidence_label: String,
}

impl FrequencyTree {
    /// Leaves in branch order.
    pub fn leaves(&self) -> [&BigRational; 4] {
        [&self.hits, &self.quiet_hypothesis, &self.false_alarms, &self.quiet_complement]
    }

    /// Leaves as integers, if every leaf is whole.
    pub fn leaf_counts(&self) -> Option<[u64; 4]> {
        let mut out = [0u64; 4];
        for (slot, leaf) in out.iter_mut().zip(self.leaves()) {
            if !leaf.is_integer() {
                return None;
            }
            *slot = leaf.to_integer().to_u64()?;
        }
        Some(out)
    }

    pub fn is_rounded(&self) -> bool {
        self.rounding_residuals.iter().any(|r| !r.is_zero())
    }
}

/// Expected leaf counts `population * p(leaf)` in branch order.
fn expected_leaves(scenario: &Scenario, population: &BigRational) -> [BigRational; 4] {
    let b = scenario.base_rate.value();
    let not_b = scenario.base_rate.complement().into_inner();
    let h = scenario.hit_rate.value();
    let f = scenario.false_alarm_rate.value();
    let one = BigRational::one();
    [
        population * b * h,
        population * b * (&one - h),
        population * &not_b * f,
        population * &not_b * (&one - f),
    ]
}

pub fn build_tree(scenario: &Scenario, population: u64, rounding: RoundingPolicy) -> Result<FrequencyTree> {
    if population == 0 {
        return Err(Error::Invalid("population must be at least 1".into()));
    }
    let total = BigRational::from_integer(population.into());
    let expected_hyp = &total * scenario.base_rate.value();
    let expected_comp = &total - &expected_hyp;
    let expected = expected_leaves(scenario, &total);
    let counts_exact = expected_hyp.is_integer() && expected.iter().all(BigRational::is_integer);

    let (hypothesis_count, complement_count, leaves) = match rounding {
        RoundingPolicy::ExactRational => (expected_hyp, expected_comp, expected.clone()),
        RoundingPolicy::LargestRemainder => {
            let row2 = apportion(&[expected_hyp, expected_comp]);
            let hyp = BigRational::from_integer(row2[0].clone());
            let comp = BigRational::from_integer(row2[1].clone());
            let one = BigRational::one();
            let h = scenario.hit_rate.value();
            let f = scenario.false_alarm_rate.value();
            let left = apportion(&[&hyp * h, &hyp * (&one - h)]);
            let right = apportion(&[&comp * f, &comp * (&one - f)]);
            let leaves = [&left[0], &left[1], &right[0], &right[1]].map(|c| BigRational::from_integer(c.clone()));
            (hyp, comp, leaves)
        }
    };

    let [hits, quiet_hypothesis, false_alarms, quiet_complement] = leaves;
    let rounding_residuals = [
        &hits - &expected[0],
        &quiet_hypothesis - &expected[1],
        &false_alarms - &expected[2],
        &quiet_complement - &expected[3],
    ];
    Ok(FrequencyTree {
        population,
        hypothesis_count,
        complement_count,
        hits,
        quiet_hypothesis,
        false_alarms,
        quiet_complement,
        counts_exact,
        rounding_residuals,
        rounding,
        hypothesis_label: scenario.hypothesis_label.clone(),
        evidence_label: scenario.evidence_label.clone(),
    })
}

/// Largest-remainder apportionment of `quotas`, whose sum must be a whole
/// number. Leftover units go to the largest fractional parts; ties go to the
/// earlier quota.
pub fn apportion(quotas: &[BigRational]) -> Vec<BigInt> {
    let total: BigRational = quotas.iter().sum();
    debug_assert!(total.is_integer(), "quotas must sum to a whole number");
    let mut counts: Vec<BigInt> = quotas.iter().map(|q| q.floor().to_integer()).collect();
    let assigned: BigInt = counts.iter().sum();
    let mut leftover = (total.to_integer() - assigned).to_usize().unwrap_or(0);

    let mut order: Vec<usize> = (0..quotas.len()).collect();
    // stable sort keeps the earlier index first on equal remainders
    order.sort_by(|&a, &b| quotas[b].fract().cmp(&quotas[a].fract()));
    for idx in order {
        if leftover == 0 {
            break;
        }
        counts[idx] += 1;
        leftover -= 1;
    }
    counts
}

/// The shortcut: hits divided by everything that shows the evidence.
pub fn posterior_from_tree(tree: &FrequencyTree) -> Result<Probability> {
    let evidence = &tree.hits + &tree.false_alarms;
    if evidence.is_zero() {
        return Err(Error::DegenerateEvidence);
    }
    Probability::new(&tree.hits / evidence)
}

/// Smallest population `N <= cap` for which every count in the tree is a whole
/// number.
pub fn minimal_integral_population(scenario: &Scenario, cap: u64) -> Result<u64> {
    let one = BigRational::one();
    let expected = expected_leaves(scenario, &one);
    let lcm = expected
        .iter()
        .chain(std::iter::once(scenario.base_rate.value()))
        .fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
    match lcm.to_u64() {
        Some(n) if n <= cap => Ok(n),
        _ => Err(Error::NotFound { cap }),
    }
}
