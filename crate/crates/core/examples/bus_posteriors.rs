//! Posterior and preponderance verdict for a family of bus-identification
//! scenarios: a witness says the bus was blue; was it Main Street's?

use legal_bayes::{compute_posterior, decide, preponderance, Scenario};

fn main() -> legal_bayes::Result<()> {
    let cases = [
        ("baseline", "0.4", "0.8", "0.1"),
        ("rare blue buses", "0.1", "0.8", "0.1"),
        ("common blue buses", "0.8", "0.8", "0.1"),
        ("sharper witness", "0.4", "0.95", "0.1"),
        ("color-blind witness", "0.4", "0.95", "0.8"),
        ("contrarian witness", "0.4", "0.3", "0.6"),
        ("uninformative witness", "0.4", "0.8", "0.8"),
    ];
    let threshold = preponderance();
    println!("{:<22} {:>6} {:>6} {:>6}  {:>9} {:>8}  verdict", "case", "p(H)", "p(E|H)", "p(E|~H)", "p(H|E)", "exact");
    for (name, b, h, f) in cases {
        let scenario = Scenario::parse(b, h, f)?;
        let breakdown = compute_posterior(&scenario)?;
        let verdict = decide(&breakdown, &threshold);
        println!(
            "{name:<22} {b:>6} {h:>6} {f:>7}  {:>9} {:>8}  {}",
            breakdown.posterior.to_significant(4),
            breakdown.posterior.to_fraction_string(),
            verdict.outcome.as_str()
        );
    }
    Ok(())
}
