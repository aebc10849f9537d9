//! Bayesian evidence arithmetic for standards of proof.
//!
//! A [`Scenario`] holds a base rate `p(H)`, a hit rate `p(E|H)` and a
//! false-alarm rate `p(E|not H)`. From it the crate computes the exact
//! posterior `p(H|E)`, builds natural-frequency trees, applies a decision
//! threshold, renders text and SVG diagrams, and cross-checks the posterior by
//! enumeration and by seeded Monte Carlo sampling.
//!
//! ```
//! use legal_bayes::{compute_posterior, decide, preponderance, Outcome, Scenario};
//!
//! let bus = Scenario::parse("0.4", "80%", "1/10").unwrap();
//! let breakdown = compute_posterior(&bus).unwrap();
//! assert_eq!(breakdown.posterior.to_fraction_string(), "16/19");
//! assert_eq!(decide(&breakdown, &preponderance()).outcome, Outcome::ForMovingParty);
//! ```
//!
//! Runnable walkthroughs live in `examples/`.

pub mod bayes;
pub mod cli;
pub mod document;
pub mod error;
pub mod oracle;
pub mod probability;
pub mod render;
pub mod sweep;
pub mod tree;

pub use bayes::{
    compute_posterior, decide, preponderance, verdict_error_profile, ErrorKind, ErrorProfile, Outcome,
    PosteriorBreakdown, Scenario, Verdict,
};
pub use document::{parse_scenario, ScenarioDocument};
pub use error::{Error, Result};
pub use oracle::{enumerate_posterior, monte_carlo_posterior, SimResult};
pub use probability::Probability;
pub use render::{render_proportion_bars_svg, render_tree_svg, render_tree_text, HexColor, RenderStyle};
pub use sweep::{sweep, sweep_at, Parameter, SweepTable};
pub use tree::{build_tree, minimal_integral_population, posterior_from_tree, FrequencyTree, RoundingPolicy};
