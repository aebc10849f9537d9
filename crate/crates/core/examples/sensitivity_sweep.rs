//! How the posterior and verdict move as one rate varies, as CSV.

use legal_bayes::sweep::linear_grid;
use legal_bayes::{sweep, Parameter, Probability, Scenario};

fn main() -> legal_bayes::Result<()> {
    let scenario = Scenario::parse("0.4", "0.8", "0.1")?;
    let grid = linear_grid(&Probability::zero(), &Probability::one(), 21)?;
    for parameter in [Parameter::BaseRate, Parameter::FalseAlarmRate] {
        print!("{}", sweep(&scenario, parameter, &grid)?.to_csv());
        println!();
    }
    Ok(())
}
