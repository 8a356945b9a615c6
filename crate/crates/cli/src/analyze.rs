use std::ops::RangeInclusive;
use std::path::{Path, PathBuf};

use anyhow::Context;
use serde::Serialize;
use subsym::group::induced_subdivision_action;
use subsym::symmetry::{parse_property_name, Property};
use subsym::transforms::subdivide;
use subsym::{Graph, PermGroup, PropertyKind, SymmetryContext, TransitivityReport};

use crate::files;

#[derive(clap::Args)]
pub struct Args {
    /// Edge-list file.
    #[arg(long)]
    graph: PathBuf,
    /// Generator file, or `aut` for the full automorphism group (cached
    /// beside the graph file).
    #[arg(long, default_value = "aut")]
    group: String,
    /// arc, s-arc, s-distance or distance, optionally prefixed `local-`.
    #[arg(long, default_value = "local-s-distance")]
    property: String,
    /// `A..B` or a single value; only for s-arc and s-distance. Defaults
    /// to `1..diameter`.
    #[arg(long, value_parser = parse_range)]
    s: Option<RangeInclusive<usize>>,
    /// Analyze the subdivision graph. A group acting on the input graph is
    /// lifted; a group of degree `n + m` is taken to act on `S(g)` directly.
    #[arg(long)]
    subdivide: bool,
    /// Report file (stdout if omitted).
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Serialize)]
struct Report {
    graph: GraphSummary,
    group: GroupSummary,
    property: String,
    results: Vec<TransitivityReport>,
}

#[derive(Serialize)]
struct GraphSummary {
    file: String,
    vertices: usize,
    edges: usize,
    subdivided: bool,
    diameter: usize,
}

#[derive(Serialize)]
struct GroupSummary {
    source: String,
    degree: usize,
    order: u128,
    generators: usize,
}

fn parse_range(text: &str) -> Result<RangeInclusive<usize>, String> {
    let number = |t: &str| {
        t.trim()
            .parse::<usize>()
            .map_err(|_| format!("{t:?} is not a non-negative integer"))
    };
    let (lo, hi) = match text.split_once("..") {
        Some((a, b)) => (number(a)?, number(b.trim_start_matches('='))?),
        None => (number(text)?, number(text)?),
    };
    if lo == 0 || lo > hi {
        return Err(format!("range {text:?} must satisfy 1 <= A <= B"));
    }
    Ok(lo..=hi)
}

pub fn run(args: &Args) -> anyhow::Result<()> {
    let (property, local) = parse_property_name(&args.property)?;
    let has_parameter = matches!(property, Property::SArc | Property::SDistance);
    if args.s.is_some() && !has_parameter {
        anyhow::bail!("--s applies only to s-arc and s-distance properties");
    }

    let base = files::read_graph(&args.graph)?;
    let group = if args.group == "aut" {
        files::cached_automorphisms(&args.graph, &base)?
    } else {
        files::read_group(Path::new(&args.group))?
    };
    let (graph, group) = target(&base, group, args.subdivide)?;
    let ctx = SymmetryContext::new(&graph, &group)
        .with_context(|| format!("group {} on {}", args.group, args.graph.display()))?;

    let range = match (&args.s, has_parameter) {
        (Some(r), _) => r.clone(),
        (None, true) => 1..=ctx.diameter().max(1),
        (None, false) => 1..=1,
    };
    eprintln!(
        "subsym analyze --graph {} --group {} --property {} --s {}..{}{}{}",
        args.graph.display(),
        args.group,
        args.property,
        range.start(),
        range.end(),
        if args.subdivide { " --subdivide" } else { "" },
        files::out_flag(args.out.as_deref())
    );

    let mut results = Vec::new();
    for s in range {
        let report = ctx.evaluate(PropertyKind::new(property, local, s))?;
        eprintln!("{}: {}", report.kind, report.verdict);
        results.push(report);
        if !has_parameter {
            break;
        }
    }
    let report = Report {
        graph: GraphSummary {
            file: args.graph.display().to_string(),
            vertices: graph.vertex_count(),
            edges: graph.edge_count(),
            subdivided: args.subdivide,
            diameter: ctx.diameter(),
        },
        group: GroupSummary {
            source: args.group.clone(),
            degree: group.degree(),
            order: group.order(),
            generators: group.generators().len(),
        },
        property: args.property.clone(),
        results,
    };
    files::emit(
        args.out.as_deref(),
        &(serde_json::to_string_pretty(&report)? + "\n"),
    )
}

/// The graph to analyze and the group acting on it.
fn target(base: &Graph, group: PermGroup, subdivided: bool) -> anyhow::Result<(Graph, PermGroup)> {
    if !subdivided {
        return Ok((base.clone(), group));
    }
    let sg = subdivide(base);
    if group.degree() == sg.graph().vertex_count() {
        Ok((sg.graph().clone(), group))
    } else {
        let lifted = induced_subdivision_action(&group, &sg)?;
        Ok((sg.graph().clone(), lifted))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges() {
        assert_eq!(parse_range("1..6"), Ok(1..=6));
        assert_eq!(parse_range("1..=6"), Ok(1..=6));
        assert_eq!(parse_range("4"), Ok(4..=4));
        assert!(parse_range("0..3").is_err());
        assert!(parse_range("5..2").is_err());
        assert!(parse_range("a").is_err());
    }
}
