//! Subdivision, line and distance-2 graphs, and reconstruction of a graph
//! from its subdivision.

use std::fmt::Write;

use serde::Serialize;

use crate::graph::io::parse_edge_list;
use crate::graph::{all_distances, bfs_distances, cycle, diameter, Graph, GraphError, UNREACHABLE};
use crate::parse::ParseError;

/// Which side of the subdivision a vertex lies on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Part {
    /// An original vertex of the base graph.
    V,
    /// The midpoint of an edge of the base graph.
    E,
}

/// `S(Σ)` together with the part labels. Vertices `0..n` are the base
/// vertices; `n + k` is the midpoint of the `k`-th edge of the base graph
/// in sorted edge order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubdivisionGraph {
    graph: Graph,
    base: Graph,
}

impl SubdivisionGraph {
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    /// The graph that was subdivided.
    pub fn base(&self) -> &Graph {
        &self.base
    }

    pub fn base_vertex_count(&self) -> usize {
        self.base.vertex_count()
    }

    pub fn part(&self, v: usize) -> Part {
        if v < self.base.vertex_count() {
            Part::V
        } else {
            Part::E
        }
    }

    /// The base edge `{u, v}` behind an E-vertex.
    pub fn edge_of(&self, v: usize) -> Option<(usize, usize)> {
        let n = self.base.vertex_count();
        (v >= n)
            .then(|| self.base.edges().get(v - n).copied())
            .flatten()
    }

    /// The E-vertex subdividing base edge number `k`.
    pub fn edge_vertex(&self, k: usize) -> usize {
        self.base.vertex_count() + k
    }

    /// Edge list followed by the advisory part-tag comment
    /// `# parts: V=0..n-1 E=n..n+m-1`.
    pub fn to_edge_list(&self) -> String {
        let mut out = crate::graph::io::write_edge_list(&self.graph);
        let n = self.base.vertex_count();
        let total = self.graph.vertex_count();
        writeln!(
            out,
            "# parts: V=0..{} E={}..{}",
            n as isize - 1,
            n,
            total as isize - 1
        )
        .unwrap();
        out
    }

    /// Reads an edge list carrying a part-tag line and checks that it really
    /// is the subdivision of the graph its tags describe.
    pub fn from_edge_list(text: &str) -> Result<Self, ParseError> {
        let graph = parse_edge_list(text)?;
        let (line, n) = parse_part_tag(text)?;
        let total = graph.vertex_count();
        let bad = |msg: String| ParseError::new(line, msg);
        if n > total {
            return Err(bad(format!("V part 0..{n} exceeds {total} vertices")));
        }
        let mut base_edges = Vec::new();
        for e in n..total {
            match graph.neighbors(e) {
                &[a, b] if a < n && b < n => base_edges.push((a, b)),
                _ => return Err(bad(format!("E-vertex {e} must have two V-neighbours"))),
            }
        }
        if (0..n).any(|v| graph.neighbors(v).iter().any(|&w| w < n)) {
            return Err(bad("two V-vertices are adjacent".into()));
        }
        let base = Graph::from_edges(n, base_edges).map_err(|e| bad(e.to_string()))?;
        let sg = subdivide(&base);
        if sg.graph != graph {
            return Err(bad(
                "E-vertices are not numbered in sorted edge order".into()
            ));
        }
        Ok(sg)
    }
}

fn parse_part_tag(text: &str) -> Result<(usize, usize), ParseError> {
    for (i, raw) in text.lines().enumerate() {
        let Some(rest) = raw.trim().strip_prefix('#') else {
            continue;
        };
        let Some(tag) = rest.trim().strip_prefix("parts:") else {
            continue;
        };
        let bad = || ParseError::new(i + 1, format!("malformed part tag {:?}", raw.trim()));
        let mut fields = tag.split_whitespace();
        let v = fields
            .next()
            .and_then(|f| f.strip_prefix("V="))
            .ok_or_else(bad)?;
        let (lo, hi) = v.split_once("..").ok_or_else(bad)?;
        if lo != "0" {
            return Err(bad());
        }
        let hi: isize = hi.parse().map_err(|_| bad())?;
        return Ok((i + 1, (hi + 1).max(0) as usize));
    }
    Err(ParseError::new(0, "missing \"# parts: V=.. E=..\" line"))
}

/// `S(Σ)`: base vertices keep their ids, E-vertices follow in sorted edge
/// order, and `{u, n + k}` is an edge iff `u` lies on base edge `k`.
pub fn subdivide(g: &Graph) -> SubdivisionGraph {
    let n = g.vertex_count();
    let edges = g
        .edges()
        .iter()
        .enumerate()
        .flat_map(|(k, &(u, v))| [(u, n + k), (v, n + k)]);
    let graph = Graph::from_edges(n + g.edge_count(), edges).expect("subdivision is simple");
    SubdivisionGraph {
        graph,
        base: g.clone(),
    }
}

/// `L(Σ)` on the edge indices of `g`.
pub fn line_graph(g: &Graph) -> Graph {
    let mut incident = vec![Vec::new(); g.vertex_count()];
    for (k, &(u, v)) in g.edges().iter().enumerate() {
        incident[u].push(k);
        incident[v].push(k);
    }
    let mut edges = Vec::new();
    for list in &incident {
        for (i, &a) in list.iter().enumerate() {
            for &b in &list[i + 1..] {
                edges.push((a, b));
            }
        }
    }
    Graph::from_edges(g.edge_count(), edges).expect("line graph of a simple graph is simple")
}

/// One connected component of a derived graph, relabelled `0..k` in the
/// order of `vertices` (the original ids, ascending).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Component {
    pub vertices: Vec<usize>,
    pub graph: Graph,
}

/// The distance-2 graph `Σ^[2]` split into connected components (isolated
/// vertices are singleton components).
pub fn distance_two_graph(g: &Graph) -> Result<Vec<Component>, GraphError> {
    if !g.is_connected() {
        return Err(GraphError::Disconnected);
    }
    let dist = all_distances(g);
    let n = g.vertex_count();
    let edges = (0..n).flat_map(|u| {
        let row = &dist[u];
        (u + 1..n)
            .filter(move |&v| row[v] == 2)
            .map(move |v| (u, v))
    });
    let square = Graph::from_edges(n, edges.collect::<Vec<_>>())?;
    Ok(square
        .components()
        .into_iter()
        .map(|vertices| Component {
            graph: square.induced_subgraph(&vertices),
            vertices,
        })
        .collect())
}

/// Recovers the base graph. With `forget_labels` only the ambient graph is
/// used: `Σ` is the component of `S(Σ)^[2]` containing a vertex whose
/// valency is not 2, and a cycle `C_{2n}` yields `C_n`.
pub fn reconstruct(sg: &SubdivisionGraph, forget_labels: bool) -> Result<Graph, GraphError> {
    if forget_labels {
        reconstruct_unlabelled(sg.graph())
    } else {
        Ok(sg.base.clone())
    }
}

/// Label-free reconstruction from any graph claimed to be a subdivision of
/// a connected graph on at least two vertices.
pub fn reconstruct_unlabelled(ambient: &Graph) -> Result<Graph, GraphError> {
    let malformed = |msg: &str| GraphError::MalformedSubdivision(msg.into());
    if ambient.vertex_count() < 3 || !ambient.is_connected() {
        return Err(malformed(
            "expected a connected graph on at least 3 vertices",
        ));
    }
    if ambient.regular_degree() == Some(2) {
        let len = ambient.vertex_count();
        if len % 2 == 1 || len < 6 {
            return Err(malformed("a cycle subdivision has even length at least 6"));
        }
        return cycle(len / 2);
    }
    let components = distance_two_graph(ambient)?;
    if components.len() != 2 {
        return Err(malformed("the distance-2 graph must have two components"));
    }
    let not_two = |c: &Component| c.vertices.iter().any(|&v| ambient.degree(v) != 2);
    let (base, mids) = match (not_two(&components[0]), not_two(&components[1])) {
        (true, false) => (&components[0], &components[1]),
        (false, true) => (&components[1], &components[0]),
        _ => {
            return Err(malformed(
                "exactly one component may contain vertices of valency other than 2",
            ))
        }
    };
    let mut local = vec![usize::MAX; ambient.vertex_count()];
    for (i, &v) in base.vertices.iter().enumerate() {
        local[v] = i;
    }
    let mut edges = Vec::with_capacity(mids.vertices.len());
    for &e in &mids.vertices {
        match ambient.neighbors(e) {
            &[a, b] if local[a] != usize::MAX && local[b] != usize::MAX => {
                edges.push((local[a], local[b]))
            }
            _ => return Err(malformed("a midpoint must join two base vertices")),
        }
    }
    Graph::from_edges(base.vertices.len(), edges)
        .map_err(|e| GraphError::MalformedSubdivision(e.to_string()))
}

/// Distances in `S(Σ)` from base distances: `2d(α,β)` between base
/// vertices, `2 min{d(α,u), d(α,v)} + 1` from a base vertex to the
/// midpoint of `{u,v}`, and `2 min{d(x,y), d(x,v), d(u,y), d(u,v)} + 2`
/// between midpoints of `{x,u}` and `{y,v}`.
pub struct SubdivisionMetric<'a> {
    sg: &'a SubdivisionGraph,
    base_distances: Vec<Vec<usize>>,
}

impl<'a> SubdivisionMetric<'a> {
    pub fn new(sg: &'a SubdivisionGraph) -> Self {
        SubdivisionMetric {
            sg,
            base_distances: all_distances(sg.base()),
        }
    }

    pub fn distance(&self, a: usize, b: usize) -> Result<usize, GraphError> {
        self.sg.graph.check_vertex(a)?;
        self.sg.graph.check_vertex(b)?;
        Ok(closed_form(self.sg, a, b, |x, y| self.base_distances[x][y]))
    }
}

fn closed_form(
    sg: &SubdivisionGraph,
    a: usize,
    b: usize,
    d: impl Fn(usize, usize) -> usize,
) -> usize {
    if a == b {
        return 0;
    }
    let double = |x: usize| if x == UNREACHABLE { UNREACHABLE } else { 2 * x };
    let plus = |x: usize, k: usize| if x == UNREACHABLE { UNREACHABLE } else { x + k };
    match (sg.edge_of(a), sg.edge_of(b)) {
        (None, None) => double(d(a, b)),
        (None, Some((u, v))) => plus(double(d(a, u).min(d(a, v))), 1),
        (Some((u, v)), None) => plus(double(d(b, u).min(d(b, v))), 1),
        (Some((x, u)), Some((y, v))) => {
            let best = d(x, y).min(d(x, v)).min(d(u, y)).min(d(u, v));
            plus(double(best), 2)
        }
    }
}

/// Closed-form distance between two vertices of `S(Σ)`; runs at most two
/// BFS passes in the base graph. Use [`SubdivisionMetric`] for many pairs.
pub fn subdivision_distance(
    sg: &SubdivisionGraph,
    a: usize,
    b: usize,
) -> Result<usize, GraphError> {
    sg.graph.check_vertex(a)?;
    sg.graph.check_vertex(b)?;
    let sources: Vec<usize> = match sg.edge_of(a) {
        Some((x, u)) => vec![x, u],
        None => vec![a],
    };
    let rows: Vec<(usize, Vec<usize>)> = sources
        .iter()
        .map(|&s| Ok((s, bfs_distances(sg.base(), s)?)))
        .collect::<Result<_, GraphError>>()?;
    let lookup = |x: usize, y: usize| -> usize {
        if let Some((_, row)) = rows.iter().find(|(s, _)| *s == x) {
            row[y]
        } else {
            let (_, row) = rows
                .iter()
                .find(|(s, _)| *s == y)
                .expect("one endpoint is a source");
            row[x]
        }
    };
    Ok(closed_form(sg, a, b, lookup))
}

/// `diam S(Σ) = 2 diam Σ + δ`, with the pair of edges at full cross
/// distance that certifies `δ = 2` when one exists.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DeltaReport {
    pub d: usize,
    pub diam_s: usize,
    pub delta: usize,
    pub witness: Option<((usize, usize), (usize, usize))>,
}

/// Measures `diam S(Σ)` by BFS and searches independently for two edges
/// whose four cross distances all equal `diam Σ`.
pub fn delta_of(g: &Graph) -> Result<DeltaReport, GraphError> {
    if g.vertex_count() < 2 {
        return Err(GraphError::InvalidParameter("delta needs n >= 2".into()));
    }
    let d = diameter(g)?;
    let diam_s = diameter(subdivide(g).graph())?;
    let dist = all_distances(g);
    let edges = g.edges();
    let mut witness = None;
    'search: for (i, &(x, y)) in edges.iter().enumerate() {
        for &(u, v) in &edges[i..] {
            if [dist[x][u], dist[x][v], dist[y][u], dist[y][v]]
                .iter()
                .all(|&t| t == d)
            {
                witness = Some(((x, y), (u, v)));
                break 'search;
            }
        }
    }
    Ok(DeltaReport {
        d,
        diam_s,
        delta: diam_s - 2 * d,
        witness,
    })
}
