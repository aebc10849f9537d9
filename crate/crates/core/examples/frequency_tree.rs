//! Natural-frequency trees: exact at a population that makes every count
//! whole, rounded by largest remainder otherwise.

use legal_bayes::{build_tree, minimal_integral_population, render_tree_text, RoundingPolicy, Scenario};

fn main() -> legal_bayes::Result<()> {
    let scenario = Scenario::parse("0.4", "0.8", "0.1")?;
    println!("{}", render_tree_text(&build_tree(&scenario, 100, RoundingPolicy::default())?));

    let awkward = Scenario::parse("33%", "0.6", "0.2")?;
    let smallest = minimal_integral_population(&awkward, 100_000)?;
    println!("smallest population with whole counts: {smallest}\n");
    println!("{}", render_tree_text(&build_tree(&awkward, 7, RoundingPolicy::LargestRemainder)?));
    println!("{}", render_tree_text(&build_tree(&awkward, 7, RoundingPolicy::ExactRational)?));
    Ok(())
}
