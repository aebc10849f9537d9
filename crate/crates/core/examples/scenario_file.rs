//! Reading and writing the `key = value` scenario format.

use legal_bayes::{compute_posterior, parse_scenario, ScenarioDocument};

const TEXT: &str = "\
# a cab was involved in a hit-and-run at night
version = 1
base_rate = 15%
hit_rate = 0.8
false_alarm_rate = 1/5
population = 100
hypothesis_label = the cab was blue
evidence_label = the witness says blue
";

fn main() -> legal_bayes::Result<()> {
    let doc = parse_scenario(TEXT)?;
    println!("posterior: {}", compute_posterior(&doc.scenario)?.posterior.to_significant(6));

    let round_tripped: ScenarioDocument = parse_scenario(&doc.to_text())?;
    assert_eq!(round_tripped, doc);
    print!("canonical form:\n{}", doc.to_text());

    match parse_scenario("base_rate = 0.4\nhit_rate = 120%\nfalse_alarm_rate = 0.1\n") {
        Err(e) => println!("rejected: {e}"),
        Ok(_) => unreachable!(),
    }
    Ok(())
}
