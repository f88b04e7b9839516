use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, ValueEnum};
use superjet::checks::{run, RunConfig, CHECKS};
use superjet::config::load_model;
use superjet::gauge::{FieldModel, LieAlgebraData, MetricMode};
use superjet::Error;

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Metric {
    Constant,
    Formal,
}

/// Runs exact identity checks for the graded Fock algebra, the jet-bundle
/// variational calculus and the Yang–Mills/BRST model.
#[derive(Parser, Debug)]
#[command(name = "superjet", version)]
struct Cli {
    /// Model JSON file, or one of `u1`, `su2`, `su3` for the built-in
    /// four-dimensional model with that group.
    #[arg(long, default_value = "su2")]
    model: String,
    /// Checks to run (repeatable or comma separated); `all` runs everything.
    #[arg(long = "check", value_delimiter = ',')]
    checks: Vec<String>,
    /// Seed for the random corpora.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    report: Format,
    /// Overrides the model's metric mode.
    #[arg(long, value_enum)]
    metric: Option<Metric>,
    /// Worker threads (0 = one per core).
    #[arg(long, default_value_t = 0)]
    jobs: usize,
    /// Prints the available checks and exits.
    #[arg(long)]
    list_checks: bool,
    /// Adds wall-clock times to the report (the output is then no longer
    /// reproducible byte for byte).
    #[arg(long)]
    timings: bool,
}

fn model(spec: &str) -> Result<FieldModel, Error> {
    let path = PathBuf::from(spec);
    if !path.exists() {
        if let Some(algebra) = LieAlgebraData::builtin(spec) {
            return Ok(FieldModel::new(4, MetricMode::Constant, algebra));
        }
    }
    load_model(&path)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.list_checks {
        let mut out = std::io::stdout().lock();
        for (name, description) in CHECKS {
            if writeln!(out, "{name:<24} {description}").is_err() {
                break;
            }
        }
        return ExitCode::SUCCESS;
    }
    let mut m = match model(&cli.model) {
        Ok(m) => m,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    if let Some(metric) = cli.metric {
        m.metric_mode = match metric {
            Metric::Constant => MetricMode::Constant,
            Metric::Formal => MetricMode::Formal,
        };
    }
    let mut cfg = RunConfig::new(m);
    cfg.checks = cli.checks;
    cfg.seed = cli.seed;
    cfg.jobs = cli.jobs;
    cfg.timings = cli.timings;
    match run(&cfg) {
        Ok(report) => {
            let text = match cli.report {
                Format::Text => report.to_text(),
                Format::Json => report.to_json() + "\n",
            };
            // a closed pipe is not a check failure
            let _ = std::io::stdout().lock().write_all(text.as_bytes());
            if report.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
