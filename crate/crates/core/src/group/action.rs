use std::hash::Hash;

use indexmap::{IndexMap, IndexSet};

use super::{GroupError, PermGroup, Permutation};
use crate::graph::Graph;
use crate::transforms::SubdivisionGraph;

/// A right action of permutations on some set of points.
pub trait Action {
    type Point: Clone + Eq + Hash;

    fn act(&self, g: &Permutation, x: &Self::Point) -> Self::Point;
}

/// The natural action on `0..degree`.
#[derive(Clone, Copy, Debug, Default)]
pub struct OnPoints;

impl Action for OnPoints {
    type Point = usize;

    fn act(&self, g: &Permutation, x: &usize) -> usize {
        g.apply(*x)
    }
}

/// Coordinatewise action on sequences (tuples, arcs, ordered pairs).
#[derive(Clone, Copy, Debug, Default)]
pub struct OnTuples;

impl Action for OnTuples {
    type Point = Vec<usize>;

    fn act(&self, g: &Permutation, x: &Vec<usize>) -> Vec<usize> {
        x.iter().map(|&p| g.apply(p)).collect()
    }
}

/// Action on sets, represented as sorted vectors.
#[derive(Clone, Copy, Debug, Default)]
pub struct OnSets;

impl Action for OnSets {
    type Point = Vec<usize>;

    fn act(&self, g: &Permutation, x: &Vec<usize>) -> Vec<usize> {
        let mut image: Vec<usize> = x.iter().map(|&p| g.apply(p)).collect();
        image.sort_unstable();
        image
    }
}

/// Action of vertex permutations on the edge indices of a graph.
#[derive(Clone, Copy, Debug)]
pub struct OnEdges<'g> {
    graph: &'g Graph,
}

impl Action for OnEdges<'_> {
    type Point = usize;

    fn act(&self, g: &Permutation, e: &usize) -> usize {
        let (u, v) = self.graph.edges()[*e];
        self.graph
            .edge_index(g.apply(u), g.apply(v))
            .expect("permutation is an automorphism")
    }
}

fn check_automorphisms(group: &PermGroup, graph: &Graph) -> Result<(), GroupError> {
    if group.degree() != graph.vertex_count() {
        return Err(GroupError::DegreeMismatch {
            expected: graph.vertex_count(),
            found: group.degree(),
        });
    }
    match group
        .generators()
        .iter()
        .position(|g| !graph.is_automorphism(g.images()))
    {
        Some(index) => Err(GroupError::NotAutomorphism { index }),
        None => Ok(()),
    }
}

/// The action of `group` on the edges of `graph`, after checking that every
/// generator is an automorphism.
pub fn induced_edge_action<'g>(
    group: &PermGroup,
    graph: &'g Graph,
) -> Result<OnEdges<'g>, GroupError> {
    check_automorphisms(group, graph)?;
    Ok(OnEdges { graph })
}

/// The image of `group` in `Aut(S(graph))`: vertices act as before and the
/// edge vertex `n + k` follows edge `k`.
pub fn induced_subdivision_action(
    group: &PermGroup,
    sg: &SubdivisionGraph,
) -> Result<PermGroup, GroupError> {
    let base = sg.base();
    let edges = induced_edge_action(group, base)?;
    let n = base.vertex_count();
    let degree = n + base.edge_count();
    let gens = group
        .generators()
        .iter()
        .map(|g| {
            let mut images = g.images().to_vec();
            images.extend((0..base.edge_count()).map(|e| n + edges.act(g, &e)));
            Permutation::from_images_unchecked(images)
        })
        .collect();
    PermGroup::new(degree, gens)
}

/// Orbit of `x` under `<gens>`, in breadth-first discovery order.
pub fn orbit_under<A: Action>(gens: &[Permutation], x: A::Point, action: &A) -> Vec<A::Point> {
    let mut orbit = IndexSet::new();
    orbit.insert(x);
    let mut i = 0;
    while i < orbit.len() {
        for g in gens {
            let y = action.act(g, &orbit[i]);
            orbit.insert(y);
        }
        i += 1;
    }
    orbit.into_iter().collect()
}

/// Orbit of `x` with, for each point, an element mapping `x` to it.
pub(crate) fn orbit_transversal<A: Action>(
    gens: &[Permutation],
    degree: usize,
    x: A::Point,
    action: &A,
) -> IndexMap<A::Point, Permutation> {
    let mut map = IndexMap::new();
    map.insert(x, Permutation::identity(degree));
    let mut i = 0;
    while i < map.len() {
        let (p, rep) = map.get_index(i).unwrap();
        let images: Vec<_> = gens
            .iter()
            .map(|g| (action.act(g, p), rep.then(g)))
            .collect();
        for (q, r) in images {
            map.entry(q).or_insert(r);
        }
        i += 1;
    }
    map
}
