//! Acceptance criteria, one test per criterion. Each test prints a PASS/FAIL
//! line per check and a final line for the criterion.
//!
//! Golden files live in `tests/golden`; regenerate them with
//! `UPDATE_GOLDEN=1 cargo test --test acceptance`.

mod common;

use std::path::{Path, PathBuf};
use std::process::Command;
use std::time::{Duration, Instant};

use common::{BARS_EXAMPLE, EXAMPLES};
use legal_bayes::document::ScenarioDocument;
use legal_bayes::{
    build_tree, compute_posterior, decide, enumerate_posterior, minimal_integral_population, monte_carlo_posterior,
    parse_scenario, posterior_from_tree, preponderance, render_proportion_bars_svg, render_tree_svg,
    render_tree_text, Error, FrequencyTree, Probability, RenderStyle, RoundingPolicy, Scenario,
};
use num_rational::BigRational;
use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

struct Report {
    criterion: &'static str,
    failures: Vec<String>,
    checks: usize,
}

impl Report {
    fn new(criterion: &'static str) -> Self {
        Report { criterion, failures: Vec::new(), checks: 0 }
    }

    fn check(&mut self, ok: bool, what: impl Into<String>) {
        let what = what.into();
        self.checks += 1;
        println!("  [{}] {} {}", self.criterion, if ok { "PASS" } else { "FAIL" }, what);
        if !ok {
            self.failures.push(what);
        }
    }

    fn finish(self) {
        let status = if self.failures.is_empty() { "PASS" } else { "FAIL" };
        println!("{} {} ({} checks, {} failed)", self.criterion, status, self.checks, self.failures.len());
        assert!(self.failures.is_empty(), "{} failed: {:#?}", self.criterion, self.failures);
    }
}

fn ratio(n: i64, d: i64) -> Probability {
    Probability::from_ratio(n, d).unwrap()
}

fn bars_scenario() -> Scenario {
    Scenario::parse(BARS_EXAMPLE.0, BARS_EXAMPLE.1, BARS_EXAMPLE.2).unwrap()
}

/// Small deterministic scenario generator for the property criteria.
struct Gen(ChaCha8Rng);

impl Gen {
    fn new(seed: u64) -> Self {
        Gen(ChaCha8Rng::seed_from_u64(seed))
    }

    fn below(&mut self, n: u64) -> u64 {
        self.0.next_u64() % n
    }

    /// k / denom with k uniform in [lo, hi].
    fn rate(&mut self, lo: u64, hi: u64, denom: i64) -> Probability {
        let k = lo + self.below(hi - lo + 1);
        ratio(k as i64, denom)
    }

    fn scenario(&mut self, denom: i64) -> Scenario {
        let d = denom as u64;
        Scenario::new(self.rate(0, d, denom), self.rate(0, d, denom), self.rate(0, d, denom))
    }
}

#[test]
fn ac1_worked_example_posteriors() {
    let mut r = Report::new("AC1");
    for ex in &EXAMPLES {
        let bd = compute_posterior(&ex.scenario()).unwrap();
        r.check(
            bd.posterior == ex.exact_posterior(),
            format!("{}: posterior = {}/{} exactly (got {})", ex.name, ex.posterior.0, ex.posterior.1, bd.posterior.to_fraction_string()),
        );
        let decimal = bd.posterior.to_f64();
        r.check(
            (decimal - ex.quoted).abs() <= 0.005,
            format!("{}: {:.4} within 0.005 of quoted {}", ex.name, decimal, ex.quoted),
        );
    }
    r.finish();
}

#[test]
fn ac2_frequency_trees_at_population_100() {
    let mut r = Report::new("AC2");
    for ex in &EXAMPLES {
        let s = ex.scenario();
        let tree = build_tree(&s, 100, RoundingPolicy::default()).unwrap();
        r.check(tree.leaf_counts() == Some(ex.leaves), format!("{}: leaves {:?}", ex.name, ex.leaves));
        r.check(tree.counts_exact, format!("{}: counts_exact", ex.name));
        r.check(
            posterior_from_tree(&tree).unwrap() == compute_posterior(&s).unwrap().posterior,
            format!("{}: hits / (hits + false alarms) equals the formula", ex.name),
        );
    }
    r.finish();
}

#[test]
fn ac3_preponderance_verdicts() {
    let mut r = Report::new("AC3");
    for ex in &EXAMPLES {
        let verdict = decide(&compute_posterior(&ex.scenario()).unwrap(), &preponderance());
        r.check(verdict.outcome == ex.verdict, format!("{}: {}", ex.name, ex.verdict.as_str()));
    }
    r.finish();
}

#[test]
fn ac4_proportion_bar_split() {
    let mut r = Report::new("AC4");
    let svg = String::from_utf8(render_proportion_bars_svg(&bars_scenario(), &RenderStyle::default()).unwrap()).unwrap();
    let doc = roxmltree::Document::parse(&svg).unwrap();
    let get = |id: &str, name: &str| -> f64 {
        doc.descendants()
            .find(|n| n.attribute("id") == Some(id))
            .and_then(|n| n.attribute(name))
            .and_then(|v| v.parse().ok())
            .unwrap()
    };
    let hit = get("bottom-hit", "width");
    let false_alarm = get("bottom-false-alarm", "width");
    let split = hit / (hit + false_alarm);
    r.check((split - 0.5964).abs() <= 0.002, format!("bottom split at {split:.5} of the bar (target 0.5964 +/- 0.002)"));
    r.finish();
}

fn tree_formula_equivalence(gen: &mut Gen, r: &mut Report, want: usize) {
    let mut done = 0;
    let mut mismatches = 0;
    while done < want {
        let s = gen.scenario(100);
        let Ok(bd) = compute_posterior(&s) else { continue };
        let n = minimal_integral_population(&s, 10_000).unwrap() * (1 + gen.below(5));
        let tree = build_tree(&s, n, RoundingPolicy::default()).unwrap();
        if !tree.counts_exact || posterior_from_tree(&tree).unwrap() != bd.posterior {
            mismatches += 1;
        }
        done += 1;
    }
    r.check(mismatches == 0, format!("tree = formula on {done} exact-count scenarios ({mismatches} mismatches)"));
}

fn conserved(tree: &FrequencyTree) -> bool {
    let zero = BigRational::from_integer(0.into());
    &tree.hypothesis_count + &tree.complement_count == BigRational::from_integer(tree.population.into())
        && &tree.hits + &tree.quiet_hypothesis == tree.hypothesis_count
        && &tree.false_alarms + &tree.quiet_complement == tree.complement_count
        && tree.leaves().iter().all(|c| **c >= zero)
        && tree.leaf_counts().is_some()
}

#[test]
fn ac5_property_suites() {
    let started = Instant::now();
    let mut r = Report::new("AC5");
    let mut gen = Gen::new(5);
    const CASES: usize = 1000;

    let mut bad = 0;
    for _ in 0..CASES {
        let base = gen.rate(1, 999, 1000);
        let rate = gen.rate(1, 1000, 1000);
        let s = Scenario::new(base.clone(), rate.clone(), rate);
        if compute_posterior(&s).unwrap().posterior != base {
            bad += 1;
        }
    }
    r.check(bad == 0, format!("no-information fixed point on {CASES} scenarios ({bad} violations)"));

    let mut bad = [0usize; 3];
    let mut compared = [0usize; 3];
    for _ in 0..CASES {
        let s = gen.scenario(100);
        for slot in 0..3 {
            let mut higher = s.clone();
            let field = match slot {
                0 => &mut higher.base_rate,
                1 => &mut higher.hit_rate,
                _ => &mut higher.false_alarm_rate,
            };
            let raised = field.value() + BigRational::new((1 + gen.below(30)).into(), 100.into());
            let Ok(raised) = Probability::new(raised) else { continue };
            *field = raised;
            let (Ok(lo), Ok(hi)) = (compute_posterior(&s), compute_posterior(&higher)) else { continue };
            compared[slot] += 1;
            let b_inner = !s.base_rate.is_zero() && !s.base_rate.is_one();
            let ok = match slot {
                0 if !s.hit_rate.is_zero() && !s.false_alarm_rate.is_zero() => lo.posterior < hi.posterior,
                0 => lo.posterior <= hi.posterior,
                1 if b_inner && !s.false_alarm_rate.is_zero() => lo.posterior < hi.posterior,
                1 => lo.posterior <= hi.posterior,
                _ if b_inner && !s.hit_rate.is_zero() => lo.posterior > hi.posterior,
                _ => lo.posterior >= hi.posterior,
            };
            if !ok {
                bad[slot] += 1;
            }
        }
    }
    for (slot, name) in ["base_rate", "hit_rate", "false_alarm_rate"].iter().enumerate() {
        r.check(
            bad[slot] == 0 && compared[slot] >= CASES / 2,
            format!("monotone in {name} over {} pairs ({} violations)", compared[slot], bad[slot]),
        );
    }

    let mut bad = 0;
    let mut defined = 0;
    for _ in 0..CASES {
        let s = gen.scenario(1000);
        match (compute_posterior(&s), compute_posterior(&s.swapped())) {
            (Ok(a), Ok(b)) => {
                defined += 1;
                if b.posterior != a.posterior.complement() {
                    bad += 1;
                }
            }
            (Err(Error::DegenerateEvidence), Err(Error::DegenerateEvidence)) => {}
            _ => bad += 1,
        }
    }
    r.check(bad == 0, format!("complement swap-symmetry on {defined} scenarios ({bad} violations)"));

    tree_formula_equivalence(&mut gen, &mut r, CASES);

    let mut bad = 0;
    let mut non_exact = 0;
    while non_exact < CASES {
        // gcd(k, 1000) = 1 and n < 1000 make n * k / 1000 fractional
        let k = loop {
            let k = 1 + gen.below(999);
            if k % 2 != 0 && k % 5 != 0 {
                break k;
            }
        };
        let s = Scenario::new(ratio(k as i64, 1000), gen.rate(0, 997, 997), gen.rate(0, 991, 991));
        let n = 1 + gen.below(999);
        let tree = build_tree(&s, n, RoundingPolicy::LargestRemainder).unwrap();
        if tree.counts_exact {
            continue;
        }
        non_exact += 1;
        if !conserved(&tree) {
            bad += 1;
        }
    }
    r.check(bad == 0, format!("rounding conservation on {non_exact} non-exact trees ({bad} violations)"));

    let elapsed = started.elapsed();
    r.check(elapsed < Duration::from_secs(30), format!("runtime {:.2?} < 30 s", elapsed));
    r.finish();
}

#[test]
fn ac6_oracle_agreement() {
    let started = Instant::now();
    let mut r = Report::new("AC6");

    for ex in &EXAMPLES {
        let s = ex.scenario();
        r.check(
            enumerate_posterior(&s, 100).unwrap() == compute_posterior(&s).unwrap().posterior,
            format!("{}: enumeration over 100 equals the formula", ex.name),
        );
    }
    let bars = bars_scenario();
    let n = minimal_integral_population(&bars, 10_000).unwrap();
    r.check(
        enumerate_posterior(&bars, n).unwrap() == compute_posterior(&bars).unwrap().posterior,
        format!("33% prior: enumeration over {n} equals the formula"),
    );

    const SEEDS: u64 = 100;
    const SAMPLES: u64 = 1_000_000;
    let exact: Vec<Probability> = EXAMPLES.iter().map(|ex| compute_posterior(&ex.scenario()).unwrap().posterior).collect();
    let mut misses_per_fixture = [0u32; 7];
    let mut seeds_all_within = 0;
    for seed in 0..SEEDS {
        let mut all = true;
        for (i, ex) in EXAMPLES.iter().enumerate() {
            let sim = monte_carlo_posterior(&ex.scenario(), SAMPLES, seed).unwrap();
            if sim.deviation_in_se(&exact[i]) > 3.0 {
                misses_per_fixture[i] += 1;
                all = false;
                println!("  [AC6] note: seed {seed} {} off by {:.2} SE", ex.name, sim.deviation_in_se(&exact[i]));
            }
        }
        seeds_all_within += u64::from(all);
    }
    for (ex, misses) in EXAMPLES.iter().zip(misses_per_fixture) {
        println!("  [AC6] {}: {} of {SEEDS} seeds within 3 SE", ex.name, SEEDS - u64::from(misses));
    }
    r.check(
        seeds_all_within >= 99,
        format!("Monte Carlo (10^6 samples) within 3 SE on all seven fixtures for {seeds_all_within} of {SEEDS} seeds (need >= 99)"),
    );

    let elapsed = started.elapsed();
    r.check(elapsed < Duration::from_secs(60), format!("runtime {:.2?} < 60 s", elapsed));
    r.finish();
}

fn golden_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden")
}

fn fixture(name: &str) -> String {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name)
        .to_str()
        .unwrap()
        .to_string()
}

/// Produces the bytes twice, compares the runs with each other and with the
/// golden file.
fn golden(r: &mut Report, name: &str, produce: impl Fn() -> Vec<u8>) {
    let first = produce();
    let second = produce();
    let path = golden_dir().join(name);
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        std::fs::create_dir_all(golden_dir()).unwrap();
        std::fs::write(&path, &first).unwrap();
    }
    let stored = std::fs::read(&path).unwrap_or_default();
    r.check(first == second && first == stored, format!("{name}: two runs byte-identical to golden"));
}

fn cli_stdout(args: &[&str]) -> Vec<u8> {
    let output = Command::new(env!("CARGO_BIN_EXE_legal-bayes")).args(args).output().unwrap();
    assert_eq!(output.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&output.stderr));
    output.stdout
}

#[test]
fn ac7_determinism_golden_files() {
    let mut r = Report::new("AC7");
    let style = RenderStyle::default();
    for ex in &EXAMPLES {
        let s = ex.scenario();
        let tree = build_tree(&s, 100, RoundingPolicy::default()).unwrap();
        golden(&mut r, &format!("{}.tree.txt", ex.name), || render_tree_text(&tree).into_bytes());
        golden(&mut r, &format!("{}.tree.svg", ex.name), || render_tree_svg(&tree, &style).unwrap());
        golden(&mut r, &format!("{}.bars.svg", ex.name), || render_proportion_bars_svg(&s, &style).unwrap());
    }
    let bars = bars_scenario();
    golden(&mut r, "bars33.bars.svg", || render_proportion_bars_svg(&bars, &style).unwrap());
    let rounded = build_tree(&bars, 7, RoundingPolicy::LargestRemainder).unwrap();
    golden(&mut r, "bars33.rounded7.tree.txt", || render_tree_text(&rounded).into_bytes());
    golden(&mut r, "bars33.rounded7.tree.svg", || render_tree_svg(&rounded, &style).unwrap());

    let names: Vec<&str> = EXAMPLES.iter().map(|ex| ex.name).chain(["bars33"]).collect();
    for name in names {
        let path = fixture(&format!("{name}.scenario"));
        for (cmd, extra) in [
            ("posterior", vec![]),
            ("verdict", vec![]),
            ("tree", vec![]),
            ("simulate", vec!["--samples", "100000", "--seed", "2024"]),
            ("sweep", vec!["--param", "base_rate", "--from", "0.05", "--to", "0.95", "--steps", "7"]),
        ] {
            let mut args = vec![cmd, "--scenario", path.as_str()];
            args.extend(extra);
            golden(&mut r, &format!("{name}.cli.{cmd}.txt"), || cli_stdout(&args));
        }
    }
    r.finish();
}

#[test]
fn ac8_parser_contract() {
    let mut r = Report::new("AC8");

    let mut gen = Gen::new(8);
    let mut mismatches = 0;
    const DOCS: usize = 1000;
    for i in 0..DOCS {
        let denom = 1 + gen.below(1000) as i64;
        let mut doc = ScenarioDocument::new(gen.scenario(denom).with_labels(format!("hypothesis #{i}"), "evidence & more"));
        doc.population = (i % 2 == 0).then(|| 1 + gen.below(1_000_000));
        doc.threshold = (i % 3 == 0).then(|| gen.rate(0, 100, 100));
        if parse_scenario(&doc.to_text()).as_ref() != Ok(&doc) {
            mismatches += 1;
        }
    }
    r.check(mismatches == 0, format!("serialize then parse is the identity on {DOCS} documents ({mismatches} mismatches)"));

    let parsed = parse_scenario("base_rate = 0.4\nhit_rate = 80%\nfalse_alarm_rate = 1/10\n");
    r.check(
        parsed.map(|d| d.scenario) == Ok(Scenario::new(ratio(2, 5), ratio(4, 5), ratio(1, 10))),
        "decimal, percent and fraction rates parse to (0.4, 0.8, 0.1)",
    );
    r.check(
        parse_scenario("base_rate = 0.4\nfalse_alarm_rate = 0.1\n") == Err(Error::MissingKey { key: "hit_rate".into() }),
        "missing hit_rate is MissingKey(hit_rate)",
    );
    r.check(
        matches!(
            parse_scenario("base_rate = 1.5\nhit_rate = 0.8\nfalse_alarm_rate = 0.1\n"),
            Err(Error::RangeError { line: 1, .. })
        ),
        "base_rate = 1.5 is RangeError at line 1",
    );
    r.check(
        matches!(parse_scenario("base_rate: 0.4\n"), Err(Error::SyntaxError { line: 1, .. })),
        "malformed line is SyntaxError at line 1",
    );

    let exit = |args: &[&str]| {
        Command::new(env!("CARGO_BIN_EXE_legal-bayes")).args(args).output().unwrap().status.code()
    };
    let ok = fixture("example1.scenario");
    let missing = fixture("missing_hit_rate.scenario");
    let range = fixture("out_of_range.scenario");
    let degenerate = fixture("degenerate.scenario");
    r.check(exit(&["posterior", "--scenario", &ok]) == Some(0), "valid file exits 0");
    r.check(exit(&["posterior", "--scenario", &missing]) == Some(2), "missing key exits 2");
    r.check(exit(&["posterior", "--scenario", &range]) == Some(2), "out-of-range rate exits 2");
    r.check(exit(&["posterior", "--scenario", &degenerate]) == Some(3), "degenerate evidence exits 3");
    r.finish();
}
