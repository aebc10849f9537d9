#![allow(dead_code)]

use legal_bayes::{Outcome, Probability, Scenario};

/// One of the seven bus scenarios with the numbers the worked text reports.
pub struct BusExample {
    pub name: &'static str,
    pub rates: (&'static str, &'static str, &'static str),
    /// Unreduced hits / (hits + false alarms) at population 100.
    pub posterior: (i64, i64),
    /// Rounded value quoted in the text.
    pub quoted: f64,
    pub leaves: [u64; 4],
    pub verdict: Outcome,
}

impl BusExample {
    pub fn scenario(&self) -> Scenario {
        Scenario::parse(self.rates.0, self.rates.1, self.rates.2).unwrap()
    }

    pub fn exact_posterior(&self) -> Probability {
        Probability::from_ratio(self.posterior.0, self.posterior.1).unwrap()
    }
}

// Misprints in the worked text, kept out of the fixtures:
// - example 2 adds "0.06 + 0.09 = 0.17"; the hit mass is 0.08
// - example 6 says "42%" next to the correct [0.6 * 0.6 = 0.36]
// - example 1's tree shortcut prints "32/(32 + 6) = 32/48"; the denominator is 38
pub const EXAMPLES: [BusExample; 7] = [
    BusExample {
        name: "example1",
        rates: ("0.4", "0.8", "0.1"),
        posterior: (32, 38),
        quoted: 0.842,
        leaves: [32, 8, 6, 54],
        verdict: Outcome::ForMovingParty,
    },
    BusExample {
        name: "example2",
        rates: ("0.1", "0.8", "0.1"),
        posterior: (8, 17),
        quoted: 0.47,
        leaves: [8, 2, 9, 81],
        verdict: Outcome::ForDefendant,
    },
    BusExample {
        name: "example3",
        rates: ("0.8", "0.8", "0.1"),
        posterior: (64, 66),
        quoted: 0.96,
        leaves: [64, 16, 2, 18],
        verdict: Outcome::ForMovingParty,
    },
    BusExample {
        name: "example4",
        rates: ("0.4", "0.95", "0.1"),
        posterior: (38, 44),
        quoted: 0.86,
        leaves: [38, 2, 6, 54],
        verdict: Outcome::ForMovingParty,
    },
    BusExample {
        name: "example5",
        rates: ("0.4", "0.95", "0.8"),
        posterior: (38, 86),
        quoted: 0.44,
        leaves: [38, 2, 48, 12],
        verdict: Outcome::ForDefendant,
    },
    BusExample {
        name: "example6",
        rates: ("0.4", "0.3", "0.6"),
        posterior: (12, 48),
        quoted: 0.25,
        leaves: [12, 28, 36, 24],
        verdict: Outcome::ForDefendant,
    },
    BusExample {
        name: "example7",
        rates: ("0.4", "0.8", "0.8"),
        posterior: (32, 80),
        quoted: 0.40,
        leaves: [32, 8, 48, 12],
        verdict: Outcome::ForDefendant,
    },
];

/// Rates for the proportion-bar walkthrough: a 33% prior updated to about 59.6%.
pub const BARS_EXAMPLE: (&str, &str, &str) = ("0.33", "0.6", "0.2");

pub fn percent(n: i64) -> Probability {
    Probability::from_ratio(n, 100).unwrap()
}

pub fn percent_scenario(b: i64, h: i64, f: i64) -> Scenario {
    Scenario::new(percent(b), percent(h), percent(f))
}
