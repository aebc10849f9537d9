//! Cross-checks the closed-form posterior by counting an explicit population
//! and by seeded Monte Carlo sampling.

use legal_bayes::{compute_posterior, enumerate_posterior, minimal_integral_population, monte_carlo_posterior, Scenario};

fn main() -> legal_bayes::Result<()> {
    let scenario = Scenario::parse("0.33", "0.6", "0.2")?;
    let exact = compute_posterior(&scenario)?.posterior;
    println!("formula:     {exact}");

    let population = minimal_integral_population(&scenario, 100_000)?;
    println!("enumeration: {} over {population} individuals", enumerate_posterior(&scenario, population)?);

    for seed in 0..5 {
        let sim = monte_carlo_posterior(&scenario, 200_000, seed)?;
        println!(
            "seed {seed}: estimate {} +/- {:.4} ({:.2} SE from exact)",
            sim.estimate.to_significant(5),
            sim.standard_error,
            sim.deviation_in_se(&exact)
        );
    }
    Ok(())
}
