use super::{Graph, GraphError};

/// A walk `(v_0, ..., v_s)` along edges that never immediately backtracks.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SArc(Vec<usize>);

impl SArc {
    /// Validates adjacency of consecutive entries and `v_{j-1} != v_{j+1}`.
    pub fn new(g: &Graph, vertices: Vec<usize>) -> Result<Self, GraphError> {
        if vertices.len() < 2 {
            return Err(GraphError::InvalidArc("an s-arc needs s >= 1".into()));
        }
        for &v in &vertices {
            g.check_vertex(v)?;
        }
        if let Some(w) = vertices.windows(2).find(|w| !g.has_edge(w[0], w[1])) {
            return Err(GraphError::InvalidArc(format!(
                "{} and {} are not adjacent",
                w[0], w[1]
            )));
        }
        if let Some(w) = vertices.windows(3).find(|w| w[0] == w[2]) {
            return Err(GraphError::InvalidArc(format!(
                "backtracks at {} -> {} -> {}",
                w[0], w[1], w[2]
            )));
        }
        Ok(SArc(vertices))
    }

    /// The length `s`.
    pub fn len(&self) -> usize {
        self.0.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    pub fn into_vertices(self) -> Vec<usize> {
        self.0
    }
}

/// All s-arcs starting at `v`, in lexicographic order.
pub fn s_arcs_from(g: &Graph, v: usize, s: usize) -> Result<Vec<SArc>, GraphError> {
    g.check_vertex(v)?;
    if s == 0 {
        return Err(GraphError::InvalidParameter("s must be >= 1".into()));
    }
    let mut out = Vec::new();
    let mut walk = Vec::with_capacity(s + 1);
    walk.push(v);
    extend(g, s, &mut walk, &mut out);
    Ok(out)
}

fn extend(g: &Graph, s: usize, walk: &mut Vec<usize>, out: &mut Vec<SArc>) {
    if walk.len() == s + 1 {
        out.push(SArc(walk.clone()));
        return;
    }
    let last = walk[walk.len() - 1];
    let back = (walk.len() >= 2).then(|| walk[walk.len() - 2]);
    for &w in g.neighbors(last) {
        if Some(w) == back {
            continue;
        }
        walk.push(w);
        extend(g, s, walk, out);
        walk.pop();
    }
}

/// All s-arcs of the graph, in lexicographic order.
pub fn enumerate_s_arcs(g: &Graph, s: usize) -> Result<Vec<SArc>, GraphError> {
    let mut out = Vec::new();
    for v in 0..g.vertex_count() {
        out.extend(s_arcs_from(g, v, s)?);
    }
    Ok(out)
}
