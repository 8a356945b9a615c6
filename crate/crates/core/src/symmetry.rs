//! Global and local arc and distance transitivity of a graph under a group
//! of automorphisms.
//!
//! Global properties ask `G` to be transitive on each level set `Δ_i`
//! (`i`-arcs, or ordered pairs at distance `i`) for `1 <= i <= s`, with
//! `Δ_s` non-empty. Local properties ask each vertex stabilizer `G_v` to be
//! transitive on the level sets `Δ_i(v)` of objects starting at `v` (an
//! empty set counts as transitive), with `Δ_s(v)` non-empty for some `v`.
//!
//! Each level is decided by comparing the orbit of its least element with
//! the whole set. Local checks only visit one vertex per `G`-orbit, since
//! conjugation carries the check at `v` to every vertex in its orbit.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::graph::{all_distances, diameter, enumerate_s_arcs, s_arcs_from, Graph, GraphError};
use crate::group::{orbit_under, Action, GroupError, OnPoints, OnTuples, PermGroup, Permutation};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SymmetryError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error("s = {s} is out of range: {reason}")]
    InvalidS { s: usize, reason: String },
    #[error("unknown property {0:?}")]
    UnknownProperty(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Property {
    Arc,
    SArc,
    SDistance,
    Distance,
}

/// A transitivity property together with its parameter. For `Arc` the
/// parameter is 1; for `Distance` it is the diameter.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PropertyKind {
    pub property: Property,
    pub local: bool,
    pub s: usize,
}

impl PropertyKind {
    pub fn new(property: Property, local: bool, s: usize) -> Self {
        PropertyKind { property, local, s }
    }

    pub fn s_arc(s: usize, local: bool) -> Self {
        PropertyKind::new(Property::SArc, local, s)
    }

    pub fn s_distance(s: usize, local: bool) -> Self {
        PropertyKind::new(Property::SDistance, local, s)
    }

    pub fn name(&self) -> &'static str {
        match (self.local, self.property) {
            (false, Property::Arc) => "arc",
            (false, Property::SArc) => "s-arc",
            (false, Property::SDistance) => "s-distance",
            (false, Property::Distance) => "distance",
            (true, Property::Arc) => "local-arc",
            (true, Property::SArc) => "local-s-arc",
            (true, Property::SDistance) => "local-s-distance",
            (true, Property::Distance) => "local-distance",
        }
    }

    /// Whether the level sets are arcs (rather than distance spheres).
    fn uses_arcs(&self) -> bool {
        matches!(self.property, Property::Arc | Property::SArc)
    }
}

impl fmt::Display for PropertyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (s = {})", self.name(), self.s)
    }
}

impl Serialize for PropertyKind {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("PropertyKind", 2)?;
        st.serialize_field("kind", self.name())?;
        st.serialize_field("s", &self.s)?;
        st.end()
    }
}

/// Parses `arc`, `s-arc`, `s-distance` or `distance`.
impl FromStr for Property {
    type Err = SymmetryError;

    fn from_str(name: &str) -> Result<Self, Self::Err> {
        match name {
            "arc" => Ok(Property::Arc),
            "s-arc" => Ok(Property::SArc),
            "s-distance" => Ok(Property::SDistance),
            "distance" => Ok(Property::Distance),
            _ => Err(SymmetryError::UnknownProperty(name.to_string())),
        }
    }
}

/// Splits `local-s-arc` style names into the property and the local flag.
pub fn parse_property_name(name: &str) -> Result<(Property, bool), SymmetryError> {
    match name.strip_prefix("local-") {
        Some(rest) => Ok((rest.parse()?, true)),
        None => Ok((name.parse()?, false)),
    }
}

/// Why a property fails.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "type", rename_all = "kebab-case")]
pub enum Witness {
    /// Two level-`level` objects in different `G`-orbits.
    Orbits {
        level: usize,
        first: Vec<usize>,
        second: Vec<usize>,
    },
    /// Two objects at `vertex` in different `G_vertex`-orbits.
    LocalOrbits {
        vertex: usize,
        level: usize,
        first: Vec<usize>,
        second: Vec<usize>,
    },
    /// The top level set is empty (at every vertex, for local properties).
    Empty { level: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TransitivityReport {
    #[serde(flatten)]
    pub kind: PropertyKind,
    pub verdict: bool,
    pub witness: Option<Witness>,
    /// Number of orbits on each level set checked, from level 1. For local
    /// properties this is the largest count over the vertices (0 when the
    /// level set is empty everywhere).
    pub orbit_counts: Vec<usize>,
}

/// A connected graph with a group of automorphisms, caching the distance
/// matrix, vertex orbits and point stabilizers across predicate calls.
pub struct SymmetryContext {
    graph: Graph,
    group: PermGroup,
    diameter: usize,
    distances: OnceLock<Vec<Vec<usize>>>,
    vertex_orbits: OnceLock<Vec<Vec<usize>>>,
    stabilizers: Vec<OnceLock<PermGroup>>,
}

impl SymmetryContext {
    /// Checks that the graph is connected and every generator is an
    /// automorphism.
    pub fn new(graph: &Graph, group: &PermGroup) -> Result<Self, SymmetryError> {
        let n = graph.vertex_count();
        if group.degree() != n {
            return Err(GroupError::DegreeMismatch {
                expected: n,
                found: group.degree(),
            }
            .into());
        }
        if let Some(index) = group
            .generators()
            .iter()
            .position(|g| !graph.is_automorphism(g.images()))
        {
            return Err(GroupError::NotAutomorphism { index }.into());
        }
        let diameter = diameter(graph)?;
        Ok(SymmetryContext {
            graph: graph.clone(),
            group: group.clone(),
            diameter,
            distances: OnceLock::new(),
            vertex_orbits: OnceLock::new(),
            stabilizers: (0..n).map(|_| OnceLock::new()).collect(),
        })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn group(&self) -> &PermGroup {
        &self.group
    }

    pub fn diameter(&self) -> usize {
        self.diameter
    }

    pub fn distances(&self) -> &[Vec<usize>] {
        self.distances.get_or_init(|| all_distances(&self.graph))
    }

    /// `G`-orbits on vertices, ordered by least vertex.
    pub fn vertex_orbits(&self) -> &[Vec<usize>] {
        self.vertex_orbits.get_or_init(|| {
            let mut orbits = self.group.orbits();
            for orbit in &mut orbits {
                orbit.sort_unstable();
            }
            orbits
        })
    }

    /// Least vertex of each `G`-orbit.
    pub fn vertex_representatives(&self) -> Vec<usize> {
        self.vertex_orbits().iter().map(|o| o[0]).collect()
    }

    pub fn is_vertex_transitive(&self) -> bool {
        self.vertex_orbits().len() <= 1
    }

    pub fn stabilizer(&self, v: usize) -> &PermGroup {
        self.stabilizers[v].get_or_init(|| self.group.stabilizer_point(v).expect("vertex in range"))
    }

    /// Vertices at distance exactly `i` from `v`, ascending.
    pub fn sphere(&self, v: usize, i: usize) -> Vec<usize> {
        self.distances()[v]
            .iter()
            .enumerate()
            .filter(|&(_, &d)| d == i)
            .map(|(w, _)| w)
            .collect()
    }

    fn resolve(&self, kind: PropertyKind) -> Result<PropertyKind, SymmetryError> {
        let s = match kind.property {
            Property::Arc => 1,
            Property::Distance => self.diameter,
            _ => kind.s,
        };
        if s == 0 {
            return Err(SymmetryError::InvalidS {
                s,
                reason: "s must be at least 1".into(),
            });
        }
        if !kind.uses_arcs() && s > self.diameter {
            return Err(SymmetryError::InvalidS {
                s,
                reason: format!("exceeds the diameter {}", self.diameter),
            });
        }
        Ok(PropertyKind { s, ..kind })
    }

    /// Level-`i` objects (arcs or ordered pairs), in lexicographic order.
    fn global_level(&self, arcs: bool, i: usize) -> Vec<Vec<usize>> {
        if arcs {
            enumerate_s_arcs(&self.graph, i)
                .expect("level >= 1")
                .into_iter()
                .map(|a| a.into_vertices())
                .collect()
        } else {
            let n = self.graph.vertex_count();
            (0..n)
                .flat_map(|v| self.sphere(v, i).into_iter().map(move |w| vec![v, w]))
                .collect()
        }
    }

    /// Level-`i` objects at `v`, in lexicographic order: arcs starting at
    /// `v`, or the single vertices at distance `i`.
    fn local_level(&self, arcs: bool, v: usize, i: usize) -> Vec<Vec<usize>> {
        if arcs {
            s_arcs_from(&self.graph, v, i)
                .expect("level >= 1")
                .into_iter()
                .map(|a| a.into_vertices())
                .collect()
        } else {
            self.sphere(v, i).into_iter().map(|w| vec![w]).collect()
        }
    }

    pub fn evaluate(&self, kind: PropertyKind) -> Result<TransitivityReport, SymmetryError> {
        let kind = self.resolve(kind)?;
        Ok(if kind.local {
            self.evaluate_local(kind)
        } else {
            self.evaluate_global(kind)
        })
    }

    fn evaluate_global(&self, kind: PropertyKind) -> TransitivityReport {
        let gens = self.group.generators();
        let mut orbit_counts = Vec::new();
        for level in 1..=kind.s {
            let objects = self.global_level(kind.uses_arcs(), level);
            let Some(first) = objects.first() else {
                return report(kind, Some(Witness::Empty { level }), orbit_counts);
            };
            let orbit = orbit_under(gens, first.clone(), &OnTuples);
            if orbit.len() == objects.len() {
                orbit_counts.push(1);
                continue;
            }
            let (count, second) = split_orbits(gens, &objects, &orbit);
            orbit_counts.push(count);
            let witness = Witness::Orbits {
                level,
                first: first.clone(),
                second,
            };
            return report(kind, Some(witness), orbit_counts);
        }
        report(kind, None, orbit_counts)
    }

    fn evaluate_local(&self, kind: PropertyKind) -> TransitivityReport {
        let reps = self.vertex_representatives();
        let mut orbit_counts = Vec::new();
        let mut top_nonempty = false;
        for level in 1..=kind.s {
            let mut worst = 0;
            for &v in &reps {
                let objects = self.local_level(kind.uses_arcs(), v, level);
                let Some(first) = objects.first() else {
                    continue;
                };
                if level == kind.s {
                    top_nonempty = true;
                }
                let gens = self.stabilizer(v).generators();
                let orbit = orbit_under(gens, first.clone(), &OnTuples);
                if orbit.len() == objects.len() {
                    worst = worst.max(1);
                    continue;
                }
                let (count, second) = split_orbits(gens, &objects, &orbit);
                orbit_counts.push(worst.max(count));
                let witness = Witness::LocalOrbits {
                    vertex: v,
                    level,
                    first: first.clone(),
                    second,
                };
                return report(kind, Some(witness), orbit_counts);
            }
            orbit_counts.push(worst);
        }
        let witness = (!top_nonempty).then_some(Witness::Empty { level: kind.s });
        report(kind, witness, orbit_counts)
    }

    pub fn s_arc_transitive(&self, s: usize) -> Result<TransitivityReport, SymmetryError> {
        self.evaluate(PropertyKind::s_arc(s, false))
    }

    pub fn locally_s_arc_transitive(&self, s: usize) -> Result<TransitivityReport, SymmetryError> {
        self.evaluate(PropertyKind::s_arc(s, true))
    }

    pub fn s_distance_transitive(&self, s: usize) -> Result<TransitivityReport, SymmetryError> {
        self.evaluate(PropertyKind::s_distance(s, false))
    }

    pub fn locally_s_distance_transitive(
        &self,
        s: usize,
    ) -> Result<TransitivityReport, SymmetryError> {
        self.evaluate(PropertyKind::s_distance(s, true))
    }

    pub fn arc_transitive(&self, local: bool) -> TransitivityReport {
        self.evaluate(PropertyKind::new(Property::Arc, local, 1))
            .expect("s = 1 is always valid")
    }

    /// Fails only for the one-vertex graph, whose diameter is 0.
    pub fn distance_transitive(&self, local: bool) -> Result<TransitivityReport, SymmetryError> {
        self.evaluate(PropertyKind::new(Property::Distance, local, self.diameter))
    }

    /// Whether every `G_v` is transitive on ordered pairs of distinct
    /// neighbours of `v` (vacuously so below valency 2).
    pub fn neighborhood_two_transitive(&self) -> bool {
        self.vertex_representatives().into_iter().all(|v| {
            let nbrs = self.graph.neighbors(v);
            if nbrs.len() < 2 {
                return true;
            }
            let pairs = nbrs.len() * (nbrs.len() - 1);
            let orbit = orbit_under(
                self.stabilizer(v).generators(),
                vec![nbrs[0], nbrs[1]],
                &OnTuples,
            );
            orbit.len() == pairs
        })
    }

    /// Checks a witness from a false report independently: both objects
    /// belong to the same level set and lie in different orbits.
    pub fn confirms_witness(&self, kind: PropertyKind, witness: &Witness) -> bool {
        let Ok(kind) = self.resolve(kind) else {
            return false;
        };
        match witness {
            Witness::Empty { level } => {
                if kind.local {
                    (0..self.graph.vertex_count())
                        .all(|v| self.local_level(kind.uses_arcs(), v, *level).is_empty())
                } else {
                    self.global_level(kind.uses_arcs(), *level).is_empty()
                }
            }
            Witness::Orbits {
                level,
                first,
                second,
            } => {
                let set = self.global_level(kind.uses_arcs(), *level);
                set.contains(first)
                    && set.contains(second)
                    && !orbit_under(self.group.generators(), first.clone(), &OnTuples)
                        .contains(second)
            }
            Witness::LocalOrbits {
                vertex,
                level,
                first,
                second,
            } => {
                let set = self.local_level(kind.uses_arcs(), *vertex, *level);
                let stab = self.stabilizer(*vertex);
                set.contains(first)
                    && set.contains(second)
                    && !orbit_under(stab.generators(), first.clone(), &OnTuples).contains(second)
            }
        }
    }
}

fn report(
    kind: PropertyKind,
    witness: Option<Witness>,
    orbit_counts: Vec<usize>,
) -> TransitivityReport {
    TransitivityReport {
        kind,
        verdict: witness.is_none(),
        witness,
        orbit_counts,
    }
}

/// Number of orbits of `<gens>` on `objects` (a union of orbits), and the
/// least object outside `first_orbit`.
fn split_orbits(
    gens: &[Permutation],
    objects: &[Vec<usize>],
    first_orbit: &[Vec<usize>],
) -> (usize, Vec<usize>) {
    let mut seen: HashSet<Vec<usize>> = first_orbit.iter().cloned().collect();
    let mut count = 1;
    let mut second = None;
    for x in objects {
        if seen.contains(x) {
            continue;
        }
        second.get_or_insert_with(|| x.clone());
        count += 1;
        seen.extend(orbit_under(gens, x.clone(), &OnTuples));
    }
    (count, second.expect("first orbit is not everything"))
}

/// `G`-orbits of `points` under the point action, for callers that need a
/// full partition.
pub fn point_orbits(group: &PermGroup, points: &[usize]) -> Vec<Vec<usize>> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for &p in points {
        if seen.insert(p) {
            let orbit = orbit_under(group.generators(), p, &OnPoints);
            seen.extend(orbit.iter().copied());
            out.push(orbit);
        }
    }
    out
}

/// Whether `<gens>` is transitive on `set` (which must be invariant).
pub fn is_transitive_on<A: Action>(gens: &[Permutation], set: &[A::Point], action: &A) -> bool {
    match set.first() {
        None => true,
        Some(x) => orbit_under(gens, x.clone(), action).len() == set.len(),
    }
}

pub fn is_s_arc_transitive(
    g: &Graph,
    group: &PermGroup,
    s: usize,
) -> Result<TransitivityReport, SymmetryError> {
    SymmetryContext::new(g, group)?.s_arc_transitive(s)
}

pub fn is_locally_s_arc_transitive(
    g: &Graph,
    group: &PermGroup,
    s: usize,
) -> Result<TransitivityReport, SymmetryError> {
    SymmetryContext::new(g, group)?.locally_s_arc_transitive(s)
}

pub fn is_s_distance_transitive(
    g: &Graph,
    group: &PermGroup,
    s: usize,
) -> Result<TransitivityReport, SymmetryError> {
    SymmetryContext::new(g, group)?.s_distance_transitive(s)
}

pub fn is_locally_s_distance_transitive(
    g: &Graph,
    group: &PermGroup,
    s: usize,
) -> Result<TransitivityReport, SymmetryError> {
    SymmetryContext::new(g, group)?.locally_s_distance_transitive(s)
}

pub fn is_distance_transitive(
    g: &Graph,
    group: &PermGroup,
) -> Result<TransitivityReport, SymmetryError> {
    SymmetryContext::new(g, group)?.distance_transitive(false)
}

pub fn is_locally_distance_transitive(
    g: &Graph,
    group: &PermGroup,
) -> Result<TransitivityReport, SymmetryError> {
    SymmetryContext::new(g, group)?.distance_transitive(true)
}

pub fn neighborhood_two_transitive(g: &Graph, group: &PermGroup) -> Result<bool, SymmetryError> {
    Ok(SymmetryContext::new(g, group)?.neighborhood_two_transitive())
}
