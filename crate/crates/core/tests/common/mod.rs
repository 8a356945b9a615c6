//! Brute-force oracles written without the library's algorithms: group
//! closure by repeated multiplication, BFS on hand-built subdivisions, and
//! transitivity decided by enumerating every group element.
#![allow(dead_code)]

use std::collections::{HashSet, VecDeque};

pub type Perm = Vec<usize>;

/// Every element of the group generated by `gens`, by breadth-first
/// multiplication from the identity. Panics past `limit` elements.
pub fn closure(degree: usize, gens: &[Perm], limit: usize) -> Vec<Perm> {
    let identity: Perm = (0..degree).collect();
    let mut seen: HashSet<Perm> = HashSet::from([identity.clone()]);
    let mut queue = VecDeque::from([identity]);
    let mut out = Vec::new();
    while let Some(p) = queue.pop_front() {
        for g in gens {
            let q: Perm = p.iter().map(|&x| g[x]).collect();
            if seen.insert(q.clone()) {
                assert!(seen.len() <= limit, "closure exceeds {limit} elements");
                queue.push_back(q);
            }
        }
        out.push(p);
    }
    out
}

pub fn adjacency(n: usize, edges: &[(usize, usize)]) -> Vec<Vec<usize>> {
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in edges {
        adj[u].push(v);
        adj[v].push(u);
    }
    adj
}

/// Subdivision as adjacency lists: base vertices keep their ids and the
/// midpoint of edge `k` is `n + k`.
pub fn subdivision(n: usize, edges: &[(usize, usize)]) -> Vec<Vec<usize>> {
    let mut sub_edges = Vec::new();
    for (k, &(u, v)) in edges.iter().enumerate() {
        sub_edges.push((u, n + k));
        sub_edges.push((v, n + k));
    }
    adjacency(n + edges.len(), &sub_edges)
}

/// Extends a permutation of base vertices to the subdivision.
pub fn lift(perm: &[usize], edges: &[(usize, usize)]) -> Perm {
    let n = perm.len();
    let mut out = perm.to_vec();
    for &(u, v) in edges {
        let (a, b) = (perm[u].min(perm[v]), perm[u].max(perm[v]));
        let k = edges
            .iter()
            .position(|&e| e == (a, b) || e == (b, a))
            .expect("automorphism");
        out.push(n + k);
    }
    out
}

pub fn bfs(adj: &[Vec<usize>], source: usize) -> Vec<usize> {
    let mut dist = vec![usize::MAX; adj.len()];
    dist[source] = 0;
    let mut queue = VecDeque::from([source]);
    while let Some(u) = queue.pop_front() {
        for &w in &adj[u] {
            if dist[w] == usize::MAX {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    dist
}

pub fn all_pairs(adj: &[Vec<usize>]) -> Vec<Vec<usize>> {
    (0..adj.len()).map(|v| bfs(adj, v)).collect()
}

pub fn shortest_cycle(adj: &[Vec<usize>]) -> Option<usize> {
    let mut best: Option<usize> = None;
    for s in 0..adj.len() {
        let mut dist = vec![usize::MAX; adj.len()];
        let mut parent = vec![usize::MAX; adj.len()];
        dist[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &w in &adj[u] {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if parent[u] != w {
                    let len = dist[u] + dist[w] + 1;
                    best = Some(best.map_or(len, |b| b.min(len)));
                }
            }
        }
    }
    best
}

/// Walks `(v_0, ..., v_len)` with no immediate reversal, starting at `v`.
pub fn arcs_from(adj: &[Vec<usize>], v: usize, len: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![v]];
    for _ in 0..len {
        let mut next = Vec::new();
        for arc in &out {
            let last = arc[arc.len() - 1];
            let prev = (arc.len() >= 2).then(|| arc[arc.len() - 2]);
            for &w in &adj[last] {
                if Some(w) != prev {
                    let mut a = arc.clone();
                    a.push(w);
                    next.push(a);
                }
            }
        }
        out = next;
    }
    out
}

fn transitive_on<T: Clone + Eq + std::hash::Hash>(
    elements: &[&Perm],
    set: &[T],
    apply: impl Fn(&Perm, &T) -> T,
) -> bool {
    match set.first() {
        None => true,
        Some(x) => {
            let orbit: HashSet<T> = elements.iter().map(|g| apply(g, x)).collect();
            orbit.len() == set.len()
        }
    }
}

fn stabilizer(elements: &[Perm], v: usize) -> Vec<&Perm> {
    elements.iter().filter(|g| g[v] == v).collect()
}

/// Local `s`-distance transitivity: each `G_v` transitive on every sphere
/// of radius `1..=s` around `v`, with the radius-`s` sphere non-empty for
/// some `v`.
pub fn locally_s_distance_transitive(adj: &[Vec<usize>], elements: &[Perm], s: usize) -> bool {
    let mut top_nonempty = false;
    for v in 0..adj.len() {
        let dist = bfs(adj, v);
        let stab = stabilizer(elements, v);
        for i in 1..=s {
            let sphere: Vec<usize> = (0..adj.len()).filter(|&x| dist[x] == i).collect();
            if i == s && !sphere.is_empty() {
                top_nonempty = true;
            }
            if !transitive_on(&stab, &sphere, |g, &x| g[x]) {
                return false;
            }
        }
    }
    top_nonempty
}

/// Local `s`-arc transitivity: each `G_v` transitive on the `i`-arcs from
/// `v` for `i <= s`, with an `s`-arc from some `v`.
pub fn locally_s_arc_transitive(adj: &[Vec<usize>], elements: &[Perm], s: usize) -> bool {
    let mut top_nonempty = false;
    for v in 0..adj.len() {
        let stab = stabilizer(elements, v);
        for i in 1..=s {
            let arcs = arcs_from(adj, v, i);
            if i == s && !arcs.is_empty() {
                top_nonempty = true;
            }
            if !transitive_on(&stab, &arcs, |g, a| a.iter().map(|&x| g[x]).collect()) {
                return false;
            }
        }
    }
    top_nonempty
}

/// `(G,s)`-arc transitivity: `G` transitive on the `i`-arcs for `i <= s`,
/// with at least one `s`-arc.
pub fn s_arc_transitive(adj: &[Vec<usize>], elements: &[Perm], s: usize) -> bool {
    let all: Vec<&Perm> = elements.iter().collect();
    for i in 0..=s {
        let arcs: Vec<Vec<usize>> = (0..adj.len()).flat_map(|v| arcs_from(adj, v, i)).collect();
        if i == s && arcs.is_empty() {
            return false;
        }
        if !transitive_on(&all, &arcs, |g, a| a.iter().map(|&x| g[x]).collect()) {
            return false;
        }
    }
    true
}

/// Number of automorphisms of a connected graph, counted by extending
/// partial maps along a BFS order. Gives up (returns `None`) after
/// `limit` partial maps.
pub fn count_automorphisms(adj: &[Vec<usize>], limit: u64) -> Option<u64> {
    let n = adj.len();
    let mut order = vec![0];
    let mut parent = vec![usize::MAX; n];
    let mut seen = vec![false; n];
    seen[0] = true;
    let mut head = 0;
    while head < order.len() {
        let u = order[head];
        head += 1;
        for &w in &adj[u] {
            if !seen[w] {
                seen[w] = true;
                parent[w] = u;
                order.push(w);
            }
        }
    }
    assert_eq!(order.len(), n, "graph must be connected");

    struct Search<'a> {
        adj: &'a [Vec<usize>],
        order: Vec<usize>,
        parent: Vec<usize>,
        image: Vec<usize>,
        used: Vec<bool>,
        count: u64,
        visited: u64,
        limit: u64,
    }
    impl Search<'_> {
        fn extend(&mut self, i: usize) -> bool {
            self.visited += 1;
            if self.visited > self.limit {
                return false;
            }
            if i == self.order.len() {
                self.count += 1;
                return true;
            }
            let v = self.order[i];
            let candidates: Vec<usize> = if i == 0 {
                (0..self.adj.len()).collect()
            } else {
                self.adj[self.image[self.parent[v]]].clone()
            };
            for t in candidates {
                if self.used[t] || self.adj[t].len() != self.adj[v].len() {
                    continue;
                }
                // With an injective partial map, matching the mapped
                // neighbourhoods in both directions preserves adjacency.
                let mapped: Vec<usize> = self.adj[v]
                    .iter()
                    .filter(|&&u| self.image[u] != usize::MAX)
                    .map(|&u| self.image[u])
                    .collect();
                let used_around_t = self.adj[t].iter().filter(|&&w| self.used[w]).count();
                let consistent =
                    used_around_t == mapped.len() && mapped.iter().all(|w| self.adj[t].contains(w));
                if consistent {
                    self.image[v] = t;
                    self.used[t] = true;
                    let go_on = self.extend(i + 1);
                    self.used[t] = false;
                    self.image[v] = usize::MAX;
                    if !go_on {
                        return false;
                    }
                }
            }
            true
        }
    }
    let mut search = Search {
        adj,
        order,
        parent,
        image: vec![usize::MAX; n],
        used: vec![false; n],
        count: 0,
        visited: 0,
        limit,
    };
    search.extend(0).then_some(search.count)
}

pub fn cycle_edges(n: usize) -> Vec<(usize, usize)> {
    (0..n)
        .map(|i| (i.min((i + 1) % n), i.max((i + 1) % n)))
        .collect()
}

pub fn cycle_edges_subdivision(n: usize) -> Vec<Vec<usize>> {
    subdivision(n, &cycle_edges(n))
}
