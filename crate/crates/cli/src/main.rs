//! `subsym`: build graphs, apply transforms, analyze symmetry and run the
//! check corpus from the command line.

mod analyze;
mod files;
mod transform;
mod verify;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use subsym::graph::{complete, complete_bipartite, cycle, hoffman_singleton, petersen};

#[derive(Parser)]
#[command(
    name = "subsym",
    version,
    about = "Subdivision graphs and their symmetry"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a named graph as an edge list.
    Build {
        family: Family,
        /// Size parameters: `n` for complete and cycle, `m [n]` for
        /// complete-bipartite (n defaults to m), none otherwise.
        params: Vec<usize>,
        /// Output file (stdout if omitted).
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Subdivide, take the line or distance-2 graph, or reconstruct.
    Transform {
        op: transform::Op,
        #[arg(long)]
        graph: PathBuf,
        /// Output file. `dist2` writes one file per component, numbered
        /// `<stem>.<i>.<ext>`.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Evaluate a transitivity property for a graph and group.
    Analyze(analyze::Args),
    /// Run the check corpus; exits 0 iff nothing is refuted.
    Verify(verify::Args),
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Complete,
    CompleteBipartite,
    Cycle,
    Petersen,
    HoffmanSingleton,
}

fn main() -> ExitCode {
    match run(Cli::parse().command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> anyhow::Result<ExitCode> {
    match command {
        Command::Build {
            family,
            params,
            out,
        } => {
            let (graph, line) = build(family, &params)?;
            eprintln!("{line}{}", files::out_flag(out.as_deref()));
            files::emit(out.as_deref(), &subsym::graph::io::write_edge_list(&graph))?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Transform { op, graph, out } => {
            transform::run(op, &graph, out.as_deref())?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Analyze(args) => {
            analyze::run(&args)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify(args) => verify::run(&args),
    }
}

fn build(family: Family, params: &[usize]) -> anyhow::Result<(subsym::Graph, String)> {
    let arity = |expected: &[usize]| -> anyhow::Result<()> {
        if expected.contains(&params.len()) {
            Ok(())
        } else {
            anyhow::bail!(
                "{} takes {} size parameter(s), got {}",
                family.name(),
                expected
                    .iter()
                    .map(usize::to_string)
                    .collect::<Vec<_>>()
                    .join(" or "),
                params.len()
            )
        }
    };
    let graph = match family {
        Family::Complete => {
            arity(&[1])?;
            complete(params[0])?
        }
        Family::CompleteBipartite => {
            arity(&[1, 2])?;
            complete_bipartite(params[0], *params.get(1).unwrap_or(&params[0]))?
        }
        Family::Cycle => {
            arity(&[1])?;
            cycle(params[0])?
        }
        Family::Petersen => {
            arity(&[0])?;
            petersen()
        }
        Family::HoffmanSingleton => {
            arity(&[0])?;
            hoffman_singleton()
        }
    };
    let sizes: String = params.iter().map(|p| format!(" {p}")).collect();
    Ok((graph, format!("subsym build {}{sizes}", family.name())))
}

impl Family {
    fn name(self) -> &'static str {
        match self {
            Family::Complete => "complete",
            Family::CompleteBipartite => "complete-bipartite",
            Family::Cycle => "cycle",
            Family::Petersen => "petersen",
            Family::HoffmanSingleton => "hoffman-singleton",
        }
    }
}
