//! Reading inputs, writing outputs and the automorphism-group cache.

use std::fs;
use std::path::{Path, PathBuf};

use anyhow::Context;
use sha2::{Digest, Sha256};
use subsym::graph::io::{parse_edge_list, write_edge_list};
use subsym::group::automorphism_group;
use subsym::group::io::{parse_generators, write_generators};
use subsym::{Graph, PermGroup};

pub fn read(path: &Path) -> anyhow::Result<String> {
    fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

pub fn read_graph(path: &Path) -> anyhow::Result<Graph> {
    parse_edge_list(&read(path)?).with_context(|| format!("{}", path.display()))
}

pub fn read_group(path: &Path) -> anyhow::Result<PermGroup> {
    parse_generators(&read(path)?).with_context(|| format!("{}", path.display()))
}

/// Writes `text` to `out`, or to stdout when `out` is `None`.
pub fn emit(out: Option<&Path>, text: &str) -> anyhow::Result<()> {
    match out {
        Some(path) => {
            fs::write(path, text).with_context(|| format!("cannot write {}", path.display()))
        }
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

/// ` --out PATH`, or nothing for stdout.
pub fn out_flag(out: Option<&Path>) -> String {
    out.map(|p| format!(" --out {}", p.display()))
        .unwrap_or_default()
}

/// First 16 hex digits of the SHA-256 of the graph's canonical edge list.
pub fn graph_hash(g: &Graph) -> String {
    Sha256::digest(write_edge_list(g).as_bytes())[..8]
        .iter()
        .map(|b| format!("{b:02x}"))
        .collect()
}

/// `Aut(g)`, read from `<graph>.aut-<hash>.gens` beside the graph file when
/// present and computed and written there otherwise.
pub fn cached_automorphisms(graph_path: &Path, g: &Graph) -> anyhow::Result<PermGroup> {
    let cache = cache_path(graph_path, g);
    if cache.exists() {
        let group = read_group(&cache)?;
        anyhow::ensure!(
            group.degree() == g.vertex_count(),
            "{}: degree {} does not match the graph",
            cache.display(),
            group.degree()
        );
        return Ok(group);
    }
    let group = automorphism_group(g)?;
    let text = format!(
        "# automorphism group of {} (order {})\n{}",
        graph_path.display(),
        group.order(),
        write_generators(&group)
    );
    fs::write(&cache, text).with_context(|| format!("cannot write {}", cache.display()))?;
    Ok(group)
}

pub fn cache_path(graph_path: &Path, g: &Graph) -> PathBuf {
    let mut name = graph_path.file_name().unwrap_or_default().to_os_string();
    name.push(format!(".aut-{}.gens", graph_hash(g)));
    graph_path.with_file_name(name)
}
