use std::path::{Path, PathBuf};

use anyhow::Context;
use clap::ValueEnum;
use subsym::graph::io::{parse_edge_list, write_edge_list};
use subsym::transforms::{
    distance_two_graph, line_graph, reconstruct, reconstruct_unlabelled, subdivide,
};
use subsym::SubdivisionGraph;

use crate::files;

#[derive(Clone, Copy, ValueEnum)]
pub enum Op {
    /// `S(g)`, with a part-tag line.
    Subdivide,
    /// The line graph.
    Line,
    /// The distance-2 graph, one file per component.
    Dist2,
    /// The graph a subdivision came from. Uses the part-tag line when
    /// present and the ambient graph alone otherwise.
    Reconstruct,
}

impl Op {
    fn name(self) -> &'static str {
        match self {
            Op::Subdivide => "subdivide",
            Op::Line => "line",
            Op::Dist2 => "dist2",
            Op::Reconstruct => "reconstruct",
        }
    }
}

pub fn run(op: Op, graph: &Path, out: Option<&Path>) -> anyhow::Result<()> {
    eprintln!(
        "subsym transform {} --graph {}{}",
        op.name(),
        graph.display(),
        files::out_flag(out)
    );
    let text = files::read(graph)?;
    let context = || graph.display().to_string();
    match op {
        Op::Subdivide => {
            let g = parse_edge_list(&text).with_context(context)?;
            files::emit(out, &subdivide(&g).to_edge_list())
        }
        Op::Line => {
            let g = parse_edge_list(&text).with_context(context)?;
            files::emit(out, &write_edge_list(&line_graph(&g)))
        }
        Op::Dist2 => {
            let g = parse_edge_list(&text).with_context(context)?;
            let components = distance_two_graph(&g)?;
            for (i, c) in components.iter().enumerate() {
                let ids: Vec<String> = c.vertices.iter().map(usize::to_string).collect();
                let body = format!(
                    "# component {i} of the distance-2 graph; vertex j is input vertex ids[j]\n\
                     # ids: {}\n{}",
                    ids.join(" "),
                    write_edge_list(&c.graph)
                );
                match out {
                    Some(path) => {
                        let target = numbered(path, i);
                        files::emit(Some(&target), &body)?;
                        eprintln!("wrote {}", target.display());
                    }
                    None => files::emit(None, &body)?,
                }
            }
            Ok(())
        }
        Op::Reconstruct => {
            let base = if has_part_tag(&text) {
                let sg = SubdivisionGraph::from_edge_list(&text).with_context(context)?;
                reconstruct(&sg, false)?
            } else {
                let g = parse_edge_list(&text).with_context(context)?;
                reconstruct_unlabelled(&g)?
            };
            files::emit(out, &write_edge_list(&base))
        }
    }
}

fn has_part_tag(text: &str) -> bool {
    text.lines().any(|l| {
        l.trim()
            .strip_prefix('#')
            .is_some_and(|rest| rest.trim_start().starts_with("parts:"))
    })
}

/// `dir/name.txt` becomes `dir/name.<i>.txt`.
fn numbered(path: &Path, i: usize) -> PathBuf {
    let stem = path.file_stem().unwrap_or_default().to_string_lossy();
    let name = match path.extension() {
        Some(ext) => format!("{stem}.{i}.{}", ext.to_string_lossy()),
        None => format!("{stem}.{i}"),
    };
    path.with_file_name(name)
}
