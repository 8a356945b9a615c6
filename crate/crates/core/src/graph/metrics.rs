use std::collections::VecDeque;

use serde::Serialize;

use super::{Graph, GraphError};

/// Distance reported for vertices outside the source's component.
pub const UNREACHABLE: usize = usize::MAX;

/// Length of a shortest cycle, or `Acyclic` for forests.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Girth {
    Finite(usize),
    Acyclic,
}

impl Girth {
    pub fn finite(self) -> Option<usize> {
        match self {
            Girth::Finite(g) => Some(g),
            Girth::Acyclic => None,
        }
    }

    /// `girth >= bound`, with a forest counting as infinite girth.
    pub fn at_least(self, bound: usize) -> bool {
        match self {
            Girth::Finite(g) => g >= bound,
            Girth::Acyclic => true,
        }
    }
}

impl std::fmt::Display for Girth {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Girth::Finite(g) => write!(f, "{g}"),
            Girth::Acyclic => f.write_str("acyclic"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Metrics {
    pub diameter: usize,
    pub girth: Girth,
    /// The two biparts, present iff the graph is bipartite (and has at
    /// least two vertices).
    pub bipartition: Option<(Vec<usize>, Vec<usize>)>,
}

pub fn bfs_distances(g: &Graph, v: usize) -> Result<Vec<usize>, GraphError> {
    g.check_vertex(v)?;
    Ok(bfs(g, v))
}

fn bfs(g: &Graph, v: usize) -> Vec<usize> {
    let mut dist = vec![UNREACHABLE; g.vertex_count()];
    dist[v] = 0;
    let mut queue = VecDeque::from([v]);
    while let Some(x) = queue.pop_front() {
        for &y in g.neighbors(x) {
            if dist[y] == UNREACHABLE {
                dist[y] = dist[x] + 1;
                queue.push_back(y);
            }
        }
    }
    dist
}

/// All-pairs hop distances, one BFS per vertex.
pub fn all_distances(g: &Graph) -> Vec<Vec<usize>> {
    (0..g.vertex_count()).map(|v| bfs(g, v)).collect()
}

pub fn diameter(g: &Graph) -> Result<usize, GraphError> {
    let mut diam = 0;
    for v in 0..g.vertex_count() {
        let ecc = bfs(g, v).into_iter().max().unwrap_or(0);
        if ecc == UNREACHABLE {
            return Err(GraphError::Disconnected);
        }
        diam = diam.max(ecc);
    }
    Ok(diam)
}

/// Exact girth: from every root, a BFS closes the shortest cycle through
/// the root at the first non-tree edge.
pub fn girth(g: &Graph) -> Girth {
    let n = g.vertex_count();
    let mut best = usize::MAX;
    let mut dist = vec![UNREACHABLE; n];
    let mut parent = vec![usize::MAX; n];
    for root in 0..n {
        dist.fill(UNREACHABLE);
        dist[root] = 0;
        parent[root] = usize::MAX;
        let mut queue = VecDeque::from([root]);
        'bfs: while let Some(x) = queue.pop_front() {
            if 2 * dist[x] + 1 >= best {
                break;
            }
            for &y in g.neighbors(x) {
                if dist[y] == UNREACHABLE {
                    dist[y] = dist[x] + 1;
                    parent[y] = x;
                    queue.push_back(y);
                } else if parent[x] != y {
                    best = best.min(dist[x] + dist[y] + 1);
                    if best == 3 {
                        break 'bfs;
                    }
                }
            }
        }
    }
    if best == usize::MAX {
        Girth::Acyclic
    } else {
        Girth::Finite(best)
    }
}

/// Proper 2-colouring of the vertices, if one exists. Graphs on fewer than
/// two vertices have no bipartition.
pub fn bipartition(g: &Graph) -> Option<(Vec<usize>, Vec<usize>)> {
    let n = g.vertex_count();
    if n < 2 {
        return None;
    }
    let mut colour = vec![u8::MAX; n];
    for root in 0..n {
        if colour[root] != u8::MAX {
            continue;
        }
        colour[root] = 0;
        let mut queue = VecDeque::from([root]);
        while let Some(x) = queue.pop_front() {
            for &y in g.neighbors(x) {
                if colour[y] == u8::MAX {
                    colour[y] = 1 - colour[x];
                    queue.push_back(y);
                } else if colour[y] == colour[x] {
                    return None;
                }
            }
        }
    }
    let (left, right): (Vec<usize>, Vec<usize>) = (0..n).partition(|&v| colour[v] == 0);
    Some((left, right))
}

/// Diameter, girth and bipartition. Disconnected graphs are rejected.
pub fn metrics(g: &Graph) -> Result<Metrics, GraphError> {
    Ok(Metrics {
        diameter: diameter(g)?,
        girth: girth(g),
        bipartition: bipartition(g),
    })
}

/// The sphere `{w : d(v, w) = i}`, sorted.
pub fn distance_sphere(g: &Graph, v: usize, i: usize) -> Result<Vec<usize>, GraphError> {
    let dist = bfs_distances(g, v)?;
    Ok((0..g.vertex_count()).filter(|&w| dist[w] == i).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, complete_bipartite, cycle, path, petersen};

    #[test]
    fn bfs_on_small_graphs() {
        assert_eq!(
            bfs_distances(&complete(4).unwrap(), 0).unwrap(),
            vec![0, 1, 1, 1]
        );
        assert_eq!(
            bfs_distances(&cycle(6).unwrap(), 0).unwrap(),
            vec![0, 1, 2, 3, 2, 1]
        );
        let p = petersen();
        for v in 0..10 {
            let d = bfs_distances(&p, v).unwrap();
            assert_eq!(d.iter().filter(|&&x| x == 1).count(), 3);
            assert_eq!(d.iter().filter(|&&x| x == 2).count(), 6);
        }
        assert!(bfs_distances(&p, 10).is_err());
    }

    #[test]
    fn unreachable_sentinel() {
        let g = Graph::from_edges(3, [(0, 1)]).unwrap();
        assert_eq!(bfs_distances(&g, 0).unwrap()[2], UNREACHABLE);
        assert_eq!(metrics(&g), Err(GraphError::Disconnected));
    }

    #[test]
    fn metrics_of_named_graphs() {
        let k = metrics(&complete(9).unwrap()).unwrap();
        assert_eq!((k.diameter, k.girth), (1, Girth::Finite(3)));
        assert!(k.bipartition.is_none());

        for n in 3..12 {
            let c = metrics(&cycle(n).unwrap()).unwrap();
            assert_eq!(c.diameter, n / 2);
            assert_eq!(c.girth, Girth::Finite(n));
            assert_eq!(c.bipartition.is_some(), n % 2 == 0);
        }

        let k33 = metrics(&complete_bipartite(3, 3).unwrap()).unwrap();
        assert_eq!(k33.diameter, 2);
        assert_eq!(k33.girth, Girth::Finite(4));
        let (a, b) = k33.bipartition.unwrap();
        assert_eq!((a.len(), b.len()), (3, 3));

        assert_eq!(girth(&path(4).unwrap()), Girth::Acyclic);
        assert_eq!(girth(&petersen()), Girth::Finite(5));
    }

    #[test]
    fn spheres() {
        let p = petersen();
        assert_eq!(distance_sphere(&p, 3, 0).unwrap(), vec![3]);
        assert!(distance_sphere(&p, 3, 3).unwrap().is_empty());
    }
}
