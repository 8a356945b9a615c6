//! Graph automorphisms and isomorphisms by equitable partition refinement
//! and individualization, with orbit pruning at the levels of the first
//! path.

use std::collections::VecDeque;

use super::chain::StabChain;
use super::{orbit_under, GroupError, OnPoints, PermGroup, Permutation};
use crate::graph::{bfs_distances, Graph, UNREACHABLE};

/// Default limit on search-tree nodes.
pub const DEFAULT_NODE_BUDGET: u64 = 2_000_000;

/// Ordered partition of `0..n`. A cell is identified by its start position
/// in `elems`.
#[derive(Clone, Debug)]
struct Partition {
    elems: Vec<usize>,
    pos: Vec<usize>,
    cell_of: Vec<usize>,
    /// End (exclusive) of the cell starting at each position.
    cell_end: Vec<usize>,
    cells: usize,
}

impl Partition {
    /// Cells of equal key, ordered by key.
    fn from_keys<K: Ord + Clone>(keys: &[K]) -> (Self, Vec<K>) {
        let n = keys.len();
        let mut elems: Vec<usize> = (0..n).collect();
        elems.sort_by(|&a, &b| keys[a].cmp(&keys[b]).then(a.cmp(&b)));
        let mut p = Partition {
            pos: vec![0; n],
            cell_of: vec![0; n],
            cell_end: vec![0; n],
            cells: 0,
            elems,
        };
        let mut cell_keys = Vec::new();
        let mut start = 0;
        for i in 1..=n {
            if i == n || keys[p.elems[i]] != keys[p.elems[start]] {
                p.set_cell(start, i);
                cell_keys.push(keys[p.elems[start]].clone());
                start = i;
            }
        }
        (p, cell_keys)
    }

    fn set_cell(&mut self, start: usize, end: usize) {
        for i in start..end {
            self.pos[self.elems[i]] = i;
            self.cell_of[self.elems[i]] = start;
        }
        self.cell_end[start] = end;
        self.cells += 1;
    }

    fn len(&self) -> usize {
        self.elems.len()
    }

    fn is_discrete(&self) -> bool {
        self.cells == self.len()
    }

    fn cell_starts(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.cells);
        let mut s = 0;
        while s < self.len() {
            out.push(s);
            s = self.cell_end[s];
        }
        out
    }

    /// First smallest non-singleton cell.
    fn target_cell(&self) -> Option<usize> {
        let mut best: Option<(usize, usize)> = None;
        let mut s = 0;
        while s < self.len() {
            let size = self.cell_end[s] - s;
            if size > 1 && best.is_none_or(|(_, b)| size < b) {
                best = Some((s, size));
            }
            s = self.cell_end[s];
        }
        best.map(|(s, _)| s)
    }

    fn cell(&self, start: usize) -> &[usize] {
        &self.elems[start..self.cell_end[start]]
    }

    /// Splits `v` off the front of its cell; returns the singleton's start.
    fn individualize(&mut self, v: usize) -> usize {
        let start = self.cell_of[v];
        let end = self.cell_end[start];
        let (a, b) = (self.pos[v], start);
        self.elems.swap(a, b);
        self.pos[self.elems[a]] = a;
        self.pos[self.elems[b]] = b;
        self.cells -= 1;
        self.set_cell(start, start + 1);
        self.set_cell(start + 1, end);
        start
    }

    /// Refines to the coarsest equitable partition finer than the current
    /// one, splitting by neighbour counts into the queued cells. Returns a
    /// trace of the splits, which is invariant under isomorphism.
    fn refine(&mut self, g: &Graph, initial: &[usize]) -> Vec<usize> {
        let n = self.len();
        let mut trace = Vec::new();
        let mut queued = vec![false; n];
        let mut queue: VecDeque<usize> = VecDeque::new();
        for &s in initial {
            queued[s] = true;
            queue.push_back(s);
        }
        let mut count = vec![0usize; n];
        let mut touched = Vec::new();
        while let Some(splitter) = queue.pop_front() {
            queued[splitter] = false;
            if self.is_discrete() {
                break;
            }
            for i in splitter..self.cell_end[splitter] {
                for &x in g.neighbors(self.elems[i]) {
                    if count[x] == 0 {
                        touched.push(x);
                    }
                    count[x] += 1;
                }
            }
            let mut cells: Vec<usize> = touched.iter().map(|&x| self.cell_of[x]).collect();
            cells.sort_unstable();
            cells.dedup();
            for start in cells {
                let end = self.cell_end[start];
                if end - start == 1 {
                    continue;
                }
                self.elems[start..end].sort_by_key(|&x| (count[x], x));
                let first = count[self.elems[start]];
                if first == count[self.elems[end - 1]] {
                    continue;
                }
                trace.extend([usize::MAX, splitter, start]);
                self.cells -= 1;
                let mut piece = start;
                for i in start + 1..=end {
                    if i == end || count[self.elems[i]] != count[self.elems[i - 1]] {
                        trace.extend([count[self.elems[piece]], i - piece]);
                        self.set_cell(piece, i);
                        if !queued[piece] {
                            queued[piece] = true;
                            queue.push_back(piece);
                        }
                        piece = i;
                    }
                }
            }
            for x in touched.drain(..) {
                count[x] = 0;
            }
        }
        trace.push(self.cells);
        trace
    }
}

/// Isomorphism-invariant vertex key: valency, then the sizes of the
/// distance spheres around the vertex.
fn vertex_keys(g: &Graph) -> Vec<(usize, Vec<usize>)> {
    (0..g.vertex_count())
        .map(|v| {
            let dist = bfs_distances(g, v).expect("vertex in range");
            let mut spheres = Vec::new();
            for d in dist.into_iter().filter(|&d| d != UNREACHABLE) {
                if spheres.len() <= d {
                    spheres.resize(d + 1, 0);
                }
                spheres[d] += 1;
            }
            (g.degree(v), spheres)
        })
        .collect()
}

fn initial_partition(g: &Graph) -> (Partition, Vec<(usize, Vec<usize>)>, Vec<usize>) {
    let (mut p, keys) = Partition::from_keys(&vertex_keys(g));
    let cells = p.cell_starts();
    let trace = p.refine(g, &cells);
    (p, keys, trace)
}

/// One node on the first path: the partition before individualizing, the
/// target cell, the chosen vertex and the trace after refining.
struct PathNode {
    partition: Partition,
    cell: usize,
    vertex: usize,
    trace: Vec<usize>,
}

struct Search<'a> {
    source: &'a Graph,
    target: &'a Graph,
    path: Vec<PathNode>,
    leaf: Vec<usize>,
    nodes: u64,
    budget: u64,
}

impl<'a> Search<'a> {
    fn tick(&mut self) -> Result<(), GroupError> {
        self.nodes += 1;
        if self.nodes > self.budget {
            Err(GroupError::BudgetExceeded { nodes: self.budget })
        } else {
            Ok(())
        }
    }

    fn first_path(
        source: &'a Graph,
        target: &'a Graph,
        mut p: Partition,
        budget: u64,
    ) -> Result<Self, GroupError> {
        let mut search = Search {
            source,
            target,
            path: Vec::new(),
            leaf: Vec::new(),
            nodes: 0,
            budget,
        };
        while let Some(cell) = p.target_cell() {
            search.tick()?;
            let vertex = *p.cell(cell).iter().min().unwrap();
            let before = p.clone();
            let single = p.individualize(vertex);
            let trace = p.refine(source, &[single]);
            search.path.push(PathNode {
                partition: before,
                cell,
                vertex,
                trace,
            });
        }
        search.leaf = p.elems;
        Ok(search)
    }

    /// Maps the first leaf onto a discrete partition of the target graph,
    /// if that is an isomorphism.
    fn leaf_map(&self, p: &Partition) -> Option<Permutation> {
        let mut images = vec![0; p.len()];
        for (&a, &b) in self.leaf.iter().zip(&p.elems) {
            images[a] = b;
        }
        self.source
            .edges()
            .iter()
            .all(|&(u, v)| self.target.has_edge(images[u], images[v]))
            .then(|| Permutation::from_images_unchecked(images))
    }

    /// Individualizes `v` in `p` at `depth` and searches below it for a leaf
    /// giving an isomorphism.
    fn descend(
        &mut self,
        p: &Partition,
        depth: usize,
        v: usize,
    ) -> Result<Option<Permutation>, GroupError> {
        self.tick()?;
        let mut q = p.clone();
        let single = q.individualize(v);
        if q.refine(self.target, &[single]) != self.path[depth].trace {
            return Ok(None);
        }
        if depth + 1 == self.path.len() {
            return Ok(self.leaf_map(&q));
        }
        let cell = self.path[depth + 1].cell;
        let mut candidates = q.cell(cell).to_vec();
        candidates.sort_unstable();
        for w in candidates {
            if let Some(found) = self.descend(&q, depth + 1, w)? {
                return Ok(Some(found));
            }
        }
        Ok(None)
    }
}

/// `Aut(g)` with the default node budget.
pub fn automorphism_group(g: &Graph) -> Result<PermGroup, GroupError> {
    automorphism_group_with_budget(g, DEFAULT_NODE_BUDGET)
}

pub fn automorphism_group_with_budget(g: &Graph, budget: u64) -> Result<PermGroup, GroupError> {
    let n = g.vertex_count();
    let (root, _, _) = initial_partition(g);
    let mut search = Search::first_path(g, g, root, budget)?;
    let mut gens: Vec<Permutation> = Vec::new();
    let mut order: u128 = 1;
    for depth in (0..search.path.len()).rev() {
        let base = search.path[depth].vertex;
        let partition = search.path[depth].partition.clone();
        let mut candidates = partition.cell(search.path[depth].cell).to_vec();
        candidates.sort_unstable();
        let mut orbit = vec![base];
        for c in candidates {
            if orbit.contains(&c) {
                continue;
            }
            if let Some(aut) = search.descend(&partition, depth, c)? {
                debug_assert_eq!(aut.apply(base), c);
                gens.push(aut);
                orbit = orbit_under(&gens, base, &OnPoints);
            }
        }
        order *= orbit.len() as u128;
    }
    let base: Vec<usize> = search.path.iter().map(|node| node.vertex).collect();
    let chain = StabChain::build(n, &gens, &base, Some(order));
    debug_assert_eq!(chain.order(), order);
    Ok(PermGroup::with_chain(n, gens, chain))
}

/// A vertex bijection mapping every edge of `a` to an edge of `b`.
pub fn find_isomorphism(a: &Graph, b: &Graph) -> Result<Option<Permutation>, GroupError> {
    if a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count() {
        return Ok(None);
    }
    let (pa, keys_a, trace_a) = initial_partition(a);
    let (pb, keys_b, trace_b) = initial_partition(b);
    if keys_a != keys_b || trace_a != trace_b || pa.cell_starts() != pb.cell_starts() {
        return Ok(None);
    }
    let mut search = Search::first_path(a, b, pa, DEFAULT_NODE_BUDGET)?;
    if search.path.is_empty() {
        return Ok(search.leaf_map(&pb));
    }
    let mut candidates = pb.cell(search.path[0].cell).to_vec();
    candidates.sort_unstable();
    for v in candidates {
        if let Some(iso) = search.descend(&pb, 0, v)? {
            return Ok(Some(iso));
        }
    }
    Ok(None)
}

pub fn are_isomorphic(a: &Graph, b: &Graph) -> Result<bool, GroupError> {
    Ok(find_isomorphism(a, b)?.is_some())
}
