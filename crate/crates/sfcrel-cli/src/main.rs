//! `sfcrel`: evaluate service-chain reliability scenarios.
//!
//! Subcommands: `analyze` (closed form), `exact` (exhaustive oracle),
//! `simulate` (Monte-Carlo), `verify` (all three plus agreement flags),
//! and `sweep` (regenerate the published tables as CSV).
//!
//! Exit codes: 0 on success, 2 on any input or validation error, 3 when
//! the term budget aborts an evaluation.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use sfcrel::analytic::{reliability_general, EvalError, EvalOptions};
use sfcrel::experiments::{
    format_significant, run_table2, run_table3, run_table4, table2_csv, table3_csv, table4_csv,
    verify, ReliabilityCase,
};
use sfcrel::model::Scenario;
use sfcrel::oracle::{
    exhaustive_reliability, instantiate_tree, monte_carlo_estimate, OracleError,
    DEFAULT_EXHAUSTIVE_CAP,
};
use sfcrel::report::ReliabilityReport;
use sfcrel::scenario_io::scenario_from_json;

const DEFAULT_TRIALS: u64 = 1_000_000;
/// Default RNG seed; fixed so repeated runs are reproducible.
const DEFAULT_SEED: u64 = 42;
const BUDGET_ENV: &str = "SFCREL_BUDGET";

#[derive(Parser)]
#[command(name = "sfcrel", version, about = "Service-chain reliability over hierarchical data-center components")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate the closed-form reliability of a scenario file.
    Analyze {
        scenario: PathBuf,
        /// Leaf-term budget; falls back to $SFCREL_BUDGET, then 10^9.
        #[arg(long)]
        budget: Option<u64>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Enumerate every component failure state of a scenario exactly.
    Exact {
        scenario: PathBuf,
        /// Maximum component count admitted to enumeration.
        #[arg(long, default_value_t = DEFAULT_EXHAUSTIVE_CAP)]
        cap: usize,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Estimate reliability by seeded Monte-Carlo simulation.
    Simulate {
        scenario: PathBuf,
        #[arg(long, default_value_t = DEFAULT_TRIALS)]
        trials: u64,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Run all three engines and check they agree.
    Verify {
        scenario: PathBuf,
        #[arg(long, default_value_t = DEFAULT_TRIALS)]
        trials: u64,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long)]
        budget: Option<u64>,
        #[arg(long, default_value_t = DEFAULT_EXHAUSTIVE_CAP)]
        cap: usize,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Regenerate a published table as CSV.
    Sweep {
        /// Table number: 2, 3, or 4.
        #[arg(long)]
        table: u8,
        /// Reliability profile: 1 (practical) or 2 (idealized).
        #[arg(long, default_value_t = 1)]
        case: u8,
        #[arg(long)]
        budget: Option<u64>,
        /// Output path; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Output path; stdout when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

enum CliError {
    /// Unreadable file, malformed JSON, or an invalid scenario.
    Input(String),
    /// Evaluation aborted by the term budget.
    Budget(String),
}

impl From<EvalError> for CliError {
    fn from(err: EvalError) -> Self {
        match err {
            EvalError::TermBudgetExceeded { .. } => CliError::Budget(err.to_string()),
            other => CliError::Input(other.to_string()),
        }
    }
}

impl From<OracleError> for CliError {
    fn from(err: OracleError) -> Self {
        CliError::Input(err.to_string())
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Input(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
        Err(CliError::Budget(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(3)
        }
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Analyze { scenario, budget, output } => {
            let scenario = load_scenario(&scenario)?;
            let options = eval_options(budget);
            let result = reliability_general(&scenario, &options)?;
            let mut text = String::new();
            let _ = writeln!(text, "analytic reliability: {}", format_significant(result.value, 12));
            let _ = writeln!(
                text,
                "terms evaluated: {} in {:.3} ms",
                result.term_count,
                result.eval_time.as_secs_f64() * 1e3
            );
            let report = ReliabilityReport::new(&scenario).with_analytic(result);
            emit(&output, text, report.to_json())
        }
        Command::Exact { scenario, cap, output } => {
            let scenario = load_scenario(&scenario)?;
            let tree = instantiate_tree(&scenario)?;
            let value = exhaustive_reliability(&tree, &scenario.demand, cap)?;
            let text = format!(
                "exhaustive reliability: {} over {} components\n",
                format_significant(value, 12),
                tree.node_count()
            );
            let report = ReliabilityReport::new(&scenario).with_exhaustive(value, tree.node_count());
            emit(&output, text, report.to_json())
        }
        Command::Simulate { scenario, trials, seed, output } => {
            let scenario = load_scenario(&scenario)?;
            let tree = instantiate_tree(&scenario)?;
            let estimate = monte_carlo_estimate(&tree, &scenario.demand, trials, seed);
            let text = format!(
                "monte-carlo reliability: {} +/- {} (95% CI, {} trials, seed {})\n",
                format_significant(estimate.mean, 12),
                format_significant(estimate.ci_half_width, 4),
                estimate.trials,
                estimate.seed
            );
            let report = ReliabilityReport::new(&scenario).with_monte_carlo(estimate);
            emit(&output, text, report.to_json())
        }
        Command::Verify { scenario, trials, seed, budget, cap, output } => {
            let scenario = load_scenario(&scenario)?;
            let options = eval_options(budget);
            let report = verify(&scenario, trials, seed, cap, &options)?;
            let mut text = String::new();
            let _ = writeln!(
                text,
                "analytic:    {}",
                format_significant(report.analytic.value, 12)
            );
            match report.exhaustive {
                Some(value) => {
                    let _ = writeln!(text, "exhaustive:  {}", format_significant(value, 12));
                }
                None => {
                    let _ = writeln!(
                        text,
                        "exhaustive:  skipped ({} components over cap {cap})",
                        report.node_count
                    );
                }
            }
            let _ = writeln!(
                text,
                "monte-carlo: {} +/- {}",
                format_significant(report.monte_carlo.mean, 12),
                format_significant(report.monte_carlo.ci_half_width, 4)
            );
            let _ = writeln!(text, "verdict:     {}", if report.pass { "pass" } else { "FAIL" });
            let json = ReliabilityReport::new(&scenario)
                .with_analytic(report.analytic.clone())
                .with_monte_carlo(report.monte_carlo)
                .with_verification(report.exhaustive_ok, report.mc_ok, report.pass);
            let json = match report.exhaustive {
                Some(value) => json.with_exhaustive(value, report.node_count),
                None => json,
            };
            let pass = report.pass;
            emit(&output, text, json.to_json())?;
            if !pass {
                return Err(CliError::Input("engines disagree; see report".into()));
            }
            Ok(())
        }
        Command::Sweep { table, case, budget, out } => {
            let case = ReliabilityCase::from_number(case)
                .ok_or_else(|| CliError::Input(format!("case {case} is not 1 or 2")))?;
            let options = eval_options(budget);
            let csv = match table {
                2 => table2_csv(&run_table2(case, &[4, 8], &[0, 1, 100], &options)?),
                3 => table3_csv(&run_table3(case, &[1, 4, 8], &[4, 8], &options)?),
                4 => table4_csv(&run_table4(case, &options)?),
                other => {
                    return Err(CliError::Input(format!("table {other} is not 2, 3, or 4")))
                }
            };
            write_output(out.as_deref(), &csv)
        }
    }
}

fn eval_options(budget: Option<u64>) -> EvalOptions {
    let from_env = std::env::var(BUDGET_ENV).ok().and_then(|v| v.parse().ok());
    let mut options = EvalOptions::default();
    if let Some(budget) = budget.or(from_env) {
        options.term_budget = budget;
    }
    options
}

fn load_scenario(path: &Path) -> Result<Scenario, CliError> {
    let json = std::fs::read_to_string(path)
        .map_err(|err| CliError::Input(format!("cannot read {}: {err}", path.display())))?;
    let scenario = scenario_from_json(&json).map_err(|err| CliError::Input(err.to_string()))?;
    let violations = scenario.validate();
    if !violations.is_empty() {
        let mut message = format!("invalid scenario {}:", path.display());
        for violation in &violations {
            let _ = write!(message, "\n  {violation}");
        }
        return Err(CliError::Input(message));
    }
    Ok(scenario)
}

fn emit(output: &OutputArgs, text: String, json: String) -> Result<(), CliError> {
    let body = match output.format {
        Format::Text => text,
        Format::Json => json,
    };
    write_output(output.out.as_deref(), &body)
}

fn write_output(path: Option<&Path>, body: &str) -> Result<(), CliError> {
    match path {
        Some(path) => std::fs::write(path, body)
            .map_err(|err| CliError::Input(format!("cannot write {}: {err}", path.display()))),
        None => {
            print!("{body}");
            Ok(())
        }
    }
}
