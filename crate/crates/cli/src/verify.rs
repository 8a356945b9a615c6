use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Context;
use serde::Serialize;
use subsym::theorems::{run_corpus, CorpusConfig, Summary};
use subsym::CheckOutcome;

use crate::files;

#[derive(clap::Args)]
pub struct Args {
    /// Corpus config (`key = value` lines); the built-in default if omitted.
    #[arg(long)]
    config: Option<PathBuf>,
    /// Overrides the config's seed.
    #[arg(long)]
    seed: Option<u64>,
    /// Include instances that take minutes (the Hoffman-Singleton rows).
    #[arg(long)]
    heavy: bool,
    /// Wall-clock budget in seconds; tasks not started in time are skipped.
    #[arg(long)]
    budget: Option<f64>,
    /// Report file (stdout if omitted).
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Serialize)]
struct Report<'a> {
    config: String,
    summary: Summary,
    outcomes: &'a [CheckOutcome],
}

pub fn run(args: &Args) -> anyhow::Result<ExitCode> {
    let mut config = match &args.config {
        Some(path) => CorpusConfig::parse(&files::read(path)?)
            .with_context(|| format!("{}", path.display()))?,
        None => CorpusConfig::default(),
    };
    if let Some(seed) = args.seed {
        config.seed = seed;
    }
    if args.heavy {
        config.heavy = true;
    }
    if let Some(secs) = args.budget {
        config.set(0, "budget", &secs.to_string())?;
    }

    let mut line = String::from("subsym verify");
    if let Some(path) = &args.config {
        line += &format!(" --config {}", path.display());
    }
    line += &format!(" --seed {}", config.seed);
    if config.heavy {
        line += " --heavy";
    }
    if let Some(b) = config.budget {
        line += &format!(" --budget {}", b.as_secs_f64());
    }
    line += &files::out_flag(args.out.as_deref());
    eprintln!("{line}");
    eprintln!("effective config: {config}");

    let outcomes = run_corpus(&config);
    let summary = Summary::of(&outcomes);
    for o in outcomes.iter().filter(|o| o.status.is_refuted()) {
        eprintln!("{o}");
    }
    eprintln!("{summary}");
    let report = Report {
        config: config.to_string(),
        summary,
        outcomes: &outcomes,
    };
    files::emit(
        args.out.as_deref(),
        &(serde_json::to_string_pretty(&report)? + "\n"),
    )?;
    Ok(if summary.refuted == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    })
}
