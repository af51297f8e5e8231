use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;
use oclab::harness::{emit_report, run_scenario, Format, Scenario, ScenarioConfig};
use oclab::Error;

/// Run a construction and certification scenario and emit its report.
///
/// Exit codes: 0 success, 2 config error, 3 construction error,
/// 4 certification failure, 5 I/O error.
#[derive(Parser)]
#[command(name = "oclab", version)]
struct Cli {
    /// klee, fd-dense, separated, incomplete, geometric-variant,
    /// sliding-hump, free-set, cover or probe
    scenario: String,
    /// `key = value` lines or a JSON object
    #[arg(long)]
    config: PathBuf,
    #[arg(long)]
    seed: Option<u64>,
    /// Report path; stdout if absent
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, default_value = "json")]
    format: String,
    /// Overrides the scenario's `tol` parameter
    #[arg(long)]
    tol: Option<f64>,
}

fn run(cli: Cli) -> Result<(), Error> {
    let scenario: Scenario = cli.scenario.parse()?;
    let format: Format = cli.format.parse()?;
    let mut cfg = ScenarioConfig::load(scenario, &cli.config).map_err(|e| match e {
        Error::Io(io) => Error::Config(format!("cannot read {}: {io}", cli.config.display())),
        other => other,
    })?;
    if let Some(seed) = cli.seed {
        cfg.seed = seed;
    }
    if let Some(tol) = cli.tol {
        if scenario.param("tol").is_none() {
            return Err(Error::Config(format!("scenario {scenario} has no tol parameter")));
        }
        cfg.set("tol", &tol.to_string())?;
    }
    if let Some(out) = cli.out {
        cfg.out = Some(out);
    }
    let report = run_scenario(&cfg)?;
    emit_report(&report, format, cfg.out.as_deref())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("oclab: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
