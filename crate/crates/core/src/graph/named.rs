//! Named graph families with fixed vertex numbering.

use super::{diameter, girth, Girth, Graph, GraphError};

/// `K_n` on `0..n`.
pub fn complete(n: usize) -> Result<Graph, GraphError> {
    if n == 0 {
        return Err(GraphError::InvalidParameter("K_n needs n >= 1".into()));
    }
    let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
    Graph::from_edges(n, edges)
}

/// `K_{m,n}` with biparts `0..m` and `m..m+n`.
pub fn complete_bipartite(m: usize, n: usize) -> Result<Graph, GraphError> {
    if m == 0 || n == 0 {
        return Err(GraphError::InvalidParameter(
            "K_{m,n} needs m, n >= 1".into(),
        ));
    }
    let edges = (0..m).flat_map(|u| (m..m + n).map(move |v| (u, v)));
    Graph::from_edges(m + n, edges)
}

/// `C_n`: `0 - 1 - ... - (n-1) - 0`.
pub fn cycle(n: usize) -> Result<Graph, GraphError> {
    if n < 3 {
        return Err(GraphError::InvalidParameter("C_n needs n >= 3".into()));
    }
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
}

/// The path `0 - 1 - ... - (n-1)`.
pub fn path(n: usize) -> Result<Graph, GraphError> {
    if n == 0 {
        return Err(GraphError::InvalidParameter("path needs n >= 1".into()));
    }
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))
}

/// `K_{1,k}` with centre 0.
pub fn star(k: usize) -> Result<Graph, GraphError> {
    complete_bipartite(1, k)
}

/// Kneser graph on the 2-subsets of `{0,..,4}`, numbered in lexicographic
/// order (`{0,1}` is 0, `{0,2}` is 1, ..., `{3,4}` is 9); two subsets are
/// adjacent when disjoint.
pub fn petersen() -> Graph {
    let pairs: Vec<(usize, usize)> = (0..5)
        .flat_map(|a| (a + 1..5).map(move |b| (a, b)))
        .collect();
    let mut edges = Vec::new();
    for (i, &(a, b)) in pairs.iter().enumerate() {
        for (j, &(c, d)) in pairs.iter().enumerate().skip(i + 1) {
            if a != c && a != d && b != c && b != d {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edges(10, edges).expect("Petersen construction")
}

/// Vertex id of pentagon vertex `P_{h,j}` in [`hoffman_singleton`].
pub fn hoffman_singleton_p(h: usize, j: usize) -> usize {
    5 * (h % 5) + j % 5
}

/// Vertex id of pentagram vertex `Q_{k,j}` in [`hoffman_singleton`].
pub fn hoffman_singleton_q(k: usize, j: usize) -> usize {
    25 + 5 * (k % 5) + j % 5
}

/// Robertson's pentagons-and-pentagrams construction. `P_{h,j}` is
/// `5h + j` and `Q_{k,j}` is `25 + 5k + j`; `P_{h,j} ~ P_{h,j±1}`,
/// `Q_{k,j} ~ Q_{k,j±2}` and `P_{h,j} ~ Q_{k,hk+j}` (indices mod 5).
///
/// Panics if the result is not 7-regular on 50 vertices with girth 5 and
/// diameter 2.
pub fn hoffman_singleton() -> Graph {
    let (p, q) = (hoffman_singleton_p, hoffman_singleton_q);
    let mut edges = Vec::with_capacity(175);
    for h in 0..5 {
        for j in 0..5 {
            edges.push((p(h, j), p(h, j + 1)));
            edges.push((q(h, j), q(h, j + 2)));
            for k in 0..5 {
                edges.push((p(h, j), q(k, h * k + j)));
            }
        }
    }
    let g = Graph::from_edges(50, edges).expect("Hoffman-Singleton construction");
    assert_eq!(g.regular_degree(), Some(7), "Hoffman-Singleton valency");
    assert_eq!(g.edge_count(), 175);
    assert_eq!(girth(&g), Girth::Finite(5), "Hoffman-Singleton girth");
    assert_eq!(diameter(&g), Ok(2), "Hoffman-Singleton diameter");
    g
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::metrics;

    #[test]
    fn complete_graphs() {
        let k2 = complete(2).unwrap();
        assert_eq!(k2.edges(), &[(0, 1)]);
        let k4 = complete(4).unwrap();
        assert_eq!(k4.edge_count(), 6);
        assert_eq!(k4.regular_degree(), Some(3));
        assert_eq!(diameter(&k4), Ok(1));
        let k9 = complete(9).unwrap();
        assert_eq!(k9.edge_count(), 36);
        assert_eq!(girth(&k9), Girth::Finite(3));
        assert!(complete(0).is_err());
    }

    #[test]
    fn complete_bipartite_graphs() {
        assert_eq!(complete_bipartite(1, 1).unwrap(), complete(2).unwrap());
        let k22 = complete_bipartite(2, 2).unwrap();
        assert_eq!((k22.vertex_count(), k22.edge_count()), (4, 4));
        assert_eq!(girth(&k22), Girth::Finite(4));
        let k33 = metrics(&complete_bipartite(3, 3).unwrap()).unwrap();
        assert_eq!((k33.diameter, k33.girth), (2, Girth::Finite(4)));
    }

    #[test]
    fn cycles() {
        assert_eq!(cycle(3).unwrap(), complete(3).unwrap());
        let c5 = metrics(&cycle(5).unwrap()).unwrap();
        assert_eq!((c5.diameter, c5.girth), (2, Girth::Finite(5)));
        assert_eq!(diameter(&cycle(6).unwrap()), Ok(3));
        assert!(cycle(2).is_err());
    }

    #[test]
    fn petersen_graph() {
        let p = petersen();
        assert_eq!((p.vertex_count(), p.edge_count()), (10, 15));
        assert_eq!(p.regular_degree(), Some(3));
        assert_eq!(girth(&p), Girth::Finite(5));
        assert_eq!(diameter(&p), Ok(2));
    }

    #[test]
    fn hoffman_singleton_graph() {
        let g = hoffman_singleton();
        assert_eq!(g.vertex_count(), 50);
        assert!(g.has_edge(hoffman_singleton_p(2, 4), hoffman_singleton_q(3, 0)));
    }
}
