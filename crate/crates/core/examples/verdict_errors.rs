//! The chance that a threshold verdict is wrong, and which way, under
//! different proof thresholds.

use legal_bayes::{compute_posterior, decide, verdict_error_profile, Probability, Scenario};

fn main() -> legal_bayes::Result<()> {
    let thresholds = [("preponderance", "1/2"), ("clear and convincing", "0.75"), ("beyond doubt", "0.95")];
    for (b, h, f) in [("0.8", "0.8", "0.1"), ("0.4", "0.8", "0.1"), ("0.4", "0.3", "0.6")] {
        let breakdown = compute_posterior(&Scenario::parse(b, h, f)?)?;
        println!("p(H) = {b}, p(E|H) = {h}, p(E|~H) = {f}: p(H|E) = {}", breakdown.posterior.to_significant(4));
        for (name, t) in thresholds {
            let threshold: Probability = t.parse()?;
            let verdict = decide(&breakdown, &threshold);
            let profile = verdict_error_profile(&breakdown, &threshold);
            println!(
                "  {name:<21} {:<17} wrong with p = {} ({})",
                verdict.outcome.as_str(),
                profile.wrong_verdict_probability.to_significant(3),
                profile.error_kind.as_str()
            );
        }
    }
    Ok(())
}
