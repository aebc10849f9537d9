//! Command-line front end. The binary only forwards to [`run`], which keeps the
//! whole surface testable in-process.
//!
//! Exit codes: 0 success, 2 input or parse error, 3 degenerate evidence.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use crate::bayes::{compute_posterior, preponderance, verdict_error_profile, Scenario};
use crate::document::{parse_scenario, ScenarioDocument};
use crate::error::{Error, Result};
use crate::oracle::monte_carlo_posterior;
use crate::probability::{parse_rational, Probability};
use crate::render::{render_proportion_bars_svg, render_tree_svg, render_tree_text, RenderStyle, SvgKind};
use crate::sweep::{linear_grid, sweep_at, Parameter};
use crate::tree::{build_tree, RoundingPolicy, DEFAULT_POPULATION};

#[derive(Debug, Args)]
struct ScenarioArgs {
    /// Scenario file (`key = value` lines).
    #[arg(long, global = true)]
    scenario: Option<PathBuf>,
    /// p(H); overrides the file.
    #[arg(long, global = true)]
    base_rate: Option<String>,
    /// p(E | H); overrides the file.
    #[arg(long, global = true)]
    hit_rate: Option<String>,
    /// p(E | not H); overrides the file.
    #[arg(long, global = true)]
    false_alarm_rate: Option<String>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the joint masses, the evidence marginal and the posterior.
    Posterior,
    /// Apply a decision threshold and report the chance the verdict is wrong.
    Verdict {
        #[arg(long)]
        threshold: Option<String>,
    },
    /// Print the natural-frequency tree.
    Tree {
        #[arg(long)]
        population: Option<u64>,
        #[arg(long, default_value = "largest-remainder")]
        rounding: String,
    },
    /// Write an SVG frequency tree or proportion-bar diagram.
    Render {
        /// svg-tree or svg-bars
        #[arg(long)]
        format: String,
        /// Output file; standard output when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        population: Option<u64>,
        #[arg(long, default_value = "largest-remainder")]
        rounding: String,
        #[arg(long)]
        width: Option<u32>,
        #[arg(long)]
        height: Option<u32>,
    },
    /// Sweep one parameter over an evenly spaced grid and write CSV.
    Sweep {
        #[arg(long)]
        param: String,
        #[arg(long)]
        from: String,
        #[arg(long)]
        to: String,
        #[arg(long)]
        steps: usize,
        #[arg(long)]
        threshold: Option<String>,
        /// Output file; standard output when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Estimate the posterior by seeded Monte Carlo sampling.
    Simulate {
        #[arg(long, default_value_t = 1_000_000)]
        samples: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let parsed = match Cli::try_parse_from(args) {
        Ok(parsed) => parsed,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            let _ = if code == 0 { out.write_all(rendered.as_bytes()) } else { err.write_all(rendered.as_bytes()) };
            return code;
        }
    };
    match execute(parsed, out) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "legal-bayes", version, about = "Posterior probabilities, frequency trees and proof-threshold verdicts")]
struct Cli {
    #[command(flatten)]
    scenario: ScenarioArgs,
    #[command(subcommand)]
    command: Command,
}

fn inline_rate(name: &str, value: &str) -> Result<Probability> {
    let parsed = parse_rational(value)
        .ok_or_else(|| Error::Invalid(format!("--{name}: `{value}` is not a decimal, percentage or fraction")))?;
    Probability::new(parsed).map_err(|_| Error::Invalid(format!("--{name}: {value} is outside [0, 1]")))
}

fn load_document(args: &ScenarioArgs) -> Result<ScenarioDocument> {
    let mut doc = match &args.scenario {
        Some(path) => {
            let text = fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
            parse_scenario(&text)?
        }
        None => {
            let missing = [
                ("base_rate", &args.base_rate),
                ("hit_rate", &args.hit_rate),
                ("false_alarm_rate", &args.false_alarm_rate),
            ]
            .into_iter()
            .find(|(_, v)| v.is_none());
            if let Some((key, _)) = missing {
                return Err(Error::MissingKey { key: key.to_string() });
            }
            ScenarioDocument::new(Scenario::new(Probability::zero(), Probability::zero(), Probability::zero()))
        }
    };
    if let Some(v) = &args.base_rate {
        doc.scenario.base_rate = inline_rate("base-rate", v)?;
    }
    if let Some(v) = &args.hit_rate {
        doc.scenario.hit_rate = inline_rate("hit-rate", v)?;
    }
    if let Some(v) = &args.false_alarm_rate {
        doc.scenario.false_alarm_rate = inline_rate("false-alarm-rate", v)?;
    }
    Ok(doc)
}

fn threshold_for(flag: &Option<String>, doc: &ScenarioDocument) -> Result<Probability> {
    match flag {
        Some(v) => inline_rate("threshold", v),
        None => Ok(doc.threshold.clone().unwrap_or_else(preponderance)),
    }
}

fn emit(out: &mut dyn Write, path: &Option<PathBuf>, bytes: &[u8], what: &str) -> Result<()> {
    match path {
        Some(path) => {
            fs::write(path, bytes).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
            writeln!(out, "wrote {what} to {} ({} bytes)", path.display(), bytes.len())?;
        }
        None => out.write_all(bytes)?,
    }
    Ok(())
}

fn table(out: &mut dyn Write, rows: &[[String; 3]]) -> Result<()> {
    let widths: Vec<usize> = (0..3).map(|c| rows.iter().map(|r| r[c].len()).max().unwrap_or(0)).collect();
    for row in rows {
        let line = format!("{:<w0$}  {:<w1$}  {}", row[0], row[1], row[2], w0 = widths[0], w1 = widths[1]);
        writeln!(out, "{}", line.trim_end())?;
    }
    Ok(())
}

fn scenario_line(s: &Scenario) -> String {
    format!(
        "scenario: base_rate = {}, hit_rate = {}, false_alarm_rate = {}",
        s.base_rate, s.hit_rate, s.false_alarm_rate
    )
}

fn execute(cli: Cli, out: &mut dyn Write) -> Result<()> {
    let doc = load_document(&cli.scenario)?;
    let scenario = &doc.scenario;
    match cli.command {
        Command::Posterior => {
            let bd = compute_posterior(scenario)?;
            writeln!(out, "{}", scenario_line(scenario))?;
            let row = |name: &str, p: &Probability| [name.to_string(), p.to_significant(6), p.to_fraction_string()];
            table(
                out,
                &[
                    ["quantity".into(), "decimal".into(), "fraction".into()],
                    row("joint_hit", &bd.joint_hit),
                    row("joint_false_alarm", &bd.joint_false_alarm),
                    row("evidence_marginal", &bd.evidence_marginal),
                    row("posterior", &bd.posterior),
                ],
            )?;
        }
        Command::Verdict { threshold } => {
            let threshold = threshold_for(&threshold, &doc)?;
            let bd = compute_posterior(scenario)?;
            let profile = verdict_error_profile(&bd, &threshold);
            writeln!(out, "{}", scenario_line(scenario))?;
            let row = |name: &str, p: &Probability| [name.to_string(), p.to_significant(6), p.to_fraction_string()];
            table(
                out,
                &[
                    row("posterior", &bd.posterior),
                    row("threshold", &threshold),
                    row("wrong_verdict_probability", &profile.wrong_verdict_probability),
                ],
            )?;
            writeln!(out, "verdict: {}", profile.verdict.outcome.as_str())?;
            writeln!(out, "error_kind: {}", profile.error_kind.as_str())?;
        }
        Command::Tree { population, rounding } => {
            let rounding: RoundingPolicy = rounding.parse()?;
            let population = population.or(doc.population).unwrap_or(DEFAULT_POPULATION);
            let tree = build_tree(scenario, population, rounding)?;
            out.write_all(render_tree_text(&tree).as_bytes())?;
        }
        Command::Render { format, out: path, population, rounding, width, height } => {
            let kind: SvgKind = format.parse()?;
            let mut style = RenderStyle::default();
            style.width = width.unwrap_or(style.width);
            style.height = height.unwrap_or(style.height);
            let bytes = match kind {
                SvgKind::Tree => {
                    let rounding: RoundingPolicy = rounding.parse()?;
                    let population = population.or(doc.population).unwrap_or(DEFAULT_POPULATION);
                    render_tree_svg(&build_tree(scenario, population, rounding)?, &style)?
                }
                SvgKind::Bars => render_proportion_bars_svg(scenario, &style)?,
            };
            emit(out, &path, &bytes, &format)?;
        }
        Command::Sweep { param, from, to, steps, threshold, out: path } => {
            let parameter: Parameter = param.parse()?;
            let grid = linear_grid(&inline_rate("from", &from)?, &inline_rate("to", &to)?, steps)?;
            let threshold = threshold_for(&threshold, &doc)?;
            let table = sweep_at(scenario, parameter, &grid, &threshold)?;
            emit(out, &path, table.to_csv().as_bytes(), &format!("{} rows", table.rows.len()))?;
        }
        Command::Simulate { samples, seed } => {
            let exact = compute_posterior(scenario)?.posterior;
            let sim = monte_carlo_posterior(scenario, samples, seed)?;
            writeln!(out, "{}", scenario_line(scenario))?;
            writeln!(out, "seed: {}", sim.seed)?;
            writeln!(out, "samples: {}", sim.samples_total)?;
            writeln!(out, "conditioned: {}", sim.samples_conditioned)?;
            writeln!(out, "estimate: {}", sim.estimate.to_significant(6))?;
            writeln!(out, "standard_error: {:.6}", sim.standard_error)?;
            writeln!(out, "exact: {} ({})", exact.to_significant(6), exact.to_fraction_string())?;
            writeln!(out, "deviation_in_se: {:.3}", sim.deviation_in_se(&exact))?;
        }
    }
    Ok(())
}
