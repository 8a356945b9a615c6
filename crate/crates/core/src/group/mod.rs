//! Permutation groups: stabilizer chains, orbits, stabilizers, induced
//! actions, graph automorphisms and a few named groups.

mod action;
mod automorphism;
mod chain;
pub mod io;
mod named;
mod perm;

use std::fmt;
use std::sync::{Arc, OnceLock};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

pub use action::{
    induced_edge_action, induced_subdivision_action, orbit_under, Action, OnEdges, OnPoints,
    OnSets, OnTuples,
};
pub use automorphism::{
    are_isomorphic, automorphism_group, automorphism_group_with_budget, find_isomorphism,
    DEFAULT_NODE_BUDGET,
};
pub use chain::StabChain;
pub use named::{
    alternating_group, cyclic_group, dihedral_group, direct_product_symmetric, half_dihedral_group,
    pgammal_2_8, pgl_2_8, symmetric_group, wreath_symmetric_2,
};
pub use perm::Permutation;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("not a bijection: {0}")]
    NotBijection(String),
    #[error("generator {index} is not an automorphism of the graph")]
    NotAutomorphism { index: usize },
    #[error("point {point} out of range for degree {degree}")]
    InvalidPoint { point: usize, degree: usize },
    #[error("search budget of {nodes} nodes exceeded")]
    BudgetExceeded { nodes: u64 },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

/// A permutation group given by generators. The stabilizer chain is built
/// on first use and shared between clones.
#[derive(Clone)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    chain: OnceLock<Arc<StabChain>>,
}

impl PermGroup {
    pub fn new(degree: usize, generators: Vec<Permutation>) -> Result<Self, GroupError> {
        for g in &generators {
            if g.degree() != degree {
                return Err(GroupError::DegreeMismatch {
                    expected: degree,
                    found: g.degree(),
                });
            }
        }
        Ok(PermGroup {
            degree,
            generators,
            chain: OnceLock::new(),
        })
    }

    /// Group generated by a non-empty list; the degree is taken from the
    /// first generator.
    pub fn from_generators(generators: Vec<Permutation>) -> Result<Self, GroupError> {
        let degree = generators
            .first()
            .map(Permutation::degree)
            .ok_or_else(|| GroupError::InvalidParameter("no generators and no degree".into()))?;
        PermGroup::new(degree, generators)
    }

    pub fn trivial(degree: usize) -> Self {
        PermGroup {
            degree,
            generators: Vec::new(),
            chain: OnceLock::new(),
        }
    }

    fn with_chain(degree: usize, generators: Vec<Permutation>, chain: StabChain) -> Self {
        let group = PermGroup {
            degree,
            generators,
            chain: OnceLock::new(),
        };
        let _ = group.chain.set(Arc::new(chain));
        group
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn chain(&self) -> &StabChain {
        self.chain
            .get_or_init(|| Arc::new(StabChain::build(self.degree, &self.generators, &[], None)))
    }

    /// A chain whose base begins with `prefix`.
    pub fn chain_with_base(&self, prefix: &[usize]) -> StabChain {
        let order = self.order();
        let gens = self.chain().strong_generators();
        StabChain::build(self.degree, gens, prefix, Some(order))
    }

    pub fn order(&self) -> u128 {
        self.chain().order()
    }

    pub fn is_trivial(&self) -> bool {
        self.generators.iter().all(Permutation::is_identity)
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        self.chain().contains(g)
    }

    pub fn base(&self) -> Vec<usize> {
        self.chain().base()
    }

    pub fn strong_generators(&self) -> &[Permutation] {
        self.chain().strong_generators()
    }

    fn check_point(&self, point: usize) -> Result<(), GroupError> {
        if point < self.degree {
            Ok(())
        } else {
            Err(GroupError::InvalidPoint {
                point,
                degree: self.degree,
            })
        }
    }

    pub fn orbit_of_point(&self, point: usize) -> Vec<usize> {
        orbit_under(&self.generators, point, &OnPoints)
    }

    pub fn orbit<A: Action>(&self, x: A::Point, action: &A) -> Vec<A::Point> {
        orbit_under(&self.generators, x, action)
    }

    /// Orbits on points, each in discovery order, ordered by least point.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree];
        let mut out = Vec::new();
        for p in 0..self.degree {
            if !seen[p] {
                let orbit = self.orbit_of_point(p);
                for &q in &orbit {
                    seen[q] = true;
                }
                out.push(orbit);
            }
        }
        out
    }

    pub fn is_transitive(&self) -> bool {
        self.degree <= 1 || self.orbit_of_point(0).len() == self.degree
    }

    /// Transitive on ordered `k`-tuples of distinct points.
    pub fn is_k_transitive(&self, k: usize) -> bool {
        if k > self.degree {
            return false;
        }
        let prefix: Vec<usize> = (0..k).collect();
        let chain = self.chain_with_base(&prefix);
        chain
            .basic_orbit_lengths()
            .iter()
            .take(k)
            .enumerate()
            .all(|(i, &len)| len == self.degree - i)
    }

    /// The subgroup fixing each of `points`.
    pub fn pointwise_stabilizer(&self, points: &[usize]) -> Result<PermGroup, GroupError> {
        for &p in points {
            self.check_point(p)?;
        }
        let chain = self.chain_with_base(points);
        let tail = chain.tail(points.len());
        let gens = tail.strong_generators().to_vec();
        Ok(PermGroup::with_chain(self.degree, gens, tail))
    }

    pub fn stabilizer_point(&self, v: usize) -> Result<PermGroup, GroupError> {
        self.pointwise_stabilizer(&[v])
    }

    /// Setwise stabilizer of `{u, v}`: the pointwise stabilizer of both,
    /// plus an element swapping them if one exists.
    pub fn stabilizer_edge(&self, u: usize, v: usize) -> Result<PermGroup, GroupError> {
        self.check_point(u)?;
        self.check_point(v)?;
        if u == v {
            return self.stabilizer_point(u);
        }
        let chain = self.chain_with_base(&[u, v]);
        let levels = chain.levels();
        let tail = chain.tail(2);
        let mut gens = tail.strong_generators().to_vec();
        let swap = levels[0].representative(v).and_then(|t| {
            // t maps u to v; x in G_u taking v to u^(t^-1) makes x*t a swap.
            let w = t.inverse().apply(u);
            levels[1].representative(w).map(|x| x.then(t))
        });
        match swap {
            Some(g) => {
                debug_assert!(g.apply(u) == v && g.apply(v) == u);
                gens.push(g);
                Ok(PermGroup::new(self.degree, gens)?)
            }
            None => Ok(PermGroup::with_chain(self.degree, gens, tail)),
        }
    }

    /// Stabilizer of `x` under an arbitrary action, by Schreier's lemma.
    /// Generators are kept only while they enlarge the group.
    pub fn stabilizer_under<A: Action>(&self, x: A::Point, action: &A) -> PermGroup {
        let transversal = action::orbit_transversal(&self.generators, self.degree, x, action);
        let target = self.order() / transversal.len() as u128;
        let mut group = PermGroup::trivial(self.degree);
        if target == 1 {
            return group;
        }
        for (point, rep) in transversal.iter() {
            for g in &self.generators {
                let image = action.act(g, point);
                let back = transversal[&image].inverse();
                let s = rep.then(g).then(&back);
                if !group.contains(&s) {
                    let mut gens = group.generators.clone();
                    gens.push(s);
                    group = PermGroup::new(self.degree, gens).expect("same degree");
                    if group.order() == target {
                        return group;
                    }
                }
            }
        }
        group
    }

    /// A uniformly random element, as a product of random coset
    /// representatives down the chain.
    pub fn random_element<R: Rng + ?Sized>(&self, rng: &mut R) -> Permutation {
        let mut g = Permutation::identity(self.degree);
        for level in self.chain().levels().iter().rev() {
            let p = level.orbit[rng.gen_range(0..level.orbit.len())];
            g = g.then(level.representative(p).unwrap());
        }
        g
    }

    /// The trivial group, `self`, then `count` subgroups each generated by
    /// one to three random elements. Deterministic in `seed`.
    pub fn random_subgroups(&self, count: usize, seed: u64) -> Vec<PermGroup> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut out = vec![PermGroup::trivial(self.degree), self.clone()];
        for _ in 0..count {
            let k = rng.gen_range(1..=3);
            let gens = (0..k).map(|_| self.random_element(&mut rng)).collect();
            out.push(PermGroup::new(self.degree, gens).expect("same degree"));
        }
        out
    }

    pub fn is_subgroup_of(&self, other: &PermGroup) -> bool {
        self.degree == other.degree && self.generators.iter().all(|g| other.contains(g))
    }

    pub fn same_group(&self, other: &PermGroup) -> bool {
        self.is_subgroup_of(other) && self.order() == other.order()
    }

    /// The commutator subgroup: the normal closure of the commutators of
    /// generator pairs.
    pub fn derived_subgroup(&self) -> PermGroup {
        let mut gens = Vec::new();
        for (i, a) in self.generators.iter().enumerate() {
            for b in &self.generators[i + 1..] {
                let c = a.commutator(b);
                if !c.is_identity() && !gens.contains(&c) {
                    gens.push(c);
                }
            }
        }
        let mut group = PermGroup::new(self.degree, gens).expect("same degree");
        let mut i = 0;
        while i < group.generators.len() {
            let h = group.generators[i].clone();
            for g in &self.generators {
                let c = h.conjugate_by(g);
                if !group.contains(&c) {
                    let mut gens = group.generators.clone();
                    gens.push(c);
                    group = PermGroup::new(self.degree, gens).expect("same degree");
                }
            }
            i += 1;
        }
        group
    }

    /// All elements, for small groups. Panics above `limit` elements.
    pub fn elements(&self, limit: usize) -> Vec<Permutation> {
        let order = self.order();
        assert!(
            order <= limit as u128,
            "group of order {order} exceeds {limit}"
        );
        let mut out = vec![Permutation::identity(self.degree)];
        for level in self.chain().levels().iter().rev() {
            let mut next = Vec::with_capacity(out.len() * level.orbit.len());
            for g in &out {
                for &p in &level.orbit {
                    next.push(g.then(level.representative(p).unwrap()));
                }
            }
            out = next;
        }
        out
    }
}

impl fmt::Debug for PermGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PermGroup")
            .field("degree", &self.degree)
            .field("generators", &self.generators)
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use std::collections::{HashSet, VecDeque};

    use proptest::prelude::*;

    use super::*;

    /// Every element by breadth-first closure under the generators.
    fn closure(degree: usize, gens: &[Permutation]) -> HashSet<Permutation> {
        let id = Permutation::identity(degree);
        let mut seen = HashSet::from([id.clone()]);
        let mut queue = VecDeque::from([id]);
        while let Some(x) = queue.pop_front() {
            for g in gens {
                let y = x.then(g);
                if seen.insert(y.clone()) {
                    queue.push_back(y);
                }
            }
        }
        seen
    }

    fn perm(images: &[usize]) -> Permutation {
        Permutation::from_images(images.to_vec()).unwrap()
    }

    #[test]
    fn trivial_and_dihedral() {
        assert_eq!(PermGroup::new(5, vec![]).unwrap().order(), 1);
        let d10 = PermGroup::new(5, vec![perm(&[1, 2, 3, 4, 0]), perm(&[0, 4, 3, 2, 1])]).unwrap();
        assert_eq!(d10.order(), 10);
        assert!(d10.is_transitive());
        assert_eq!(d10.orbit_of_point(0).len(), 5);
    }

    #[test]
    fn degree_mismatch() {
        let err = PermGroup::new(3, vec![Permutation::identity(4)]).unwrap_err();
        assert_eq!(
            err,
            GroupError::DegreeMismatch {
                expected: 3,
                found: 4
            }
        );
    }

    #[test]
    fn membership_matches_closure() {
        let gens = vec![perm(&[1, 0, 2, 3, 4, 5]), perm(&[0, 2, 3, 1, 5, 4])];
        let g = PermGroup::new(6, gens.clone()).unwrap();
        let elements = closure(6, &gens);
        assert_eq!(g.order(), elements.len() as u128);
        let s6 = symmetric_group(6).unwrap();
        for x in s6.elements(720) {
            assert_eq!(g.contains(&x), elements.contains(&x));
        }
    }

    #[test]
    fn stabilizers() {
        let s5 = symmetric_group(5).unwrap();
        assert_eq!(s5.stabilizer_point(0).unwrap().order(), 24);
        let e = s5.stabilizer_edge(1, 3).unwrap();
        assert_eq!(e.order(), 12);
        assert!(e.generators().iter().all(|g| {
            let (a, b) = (g.apply(1), g.apply(3));
            (a, b) == (1, 3) || (a, b) == (3, 1)
        }));
        let c5 = cyclic_group(5).unwrap();
        assert_eq!(c5.stabilizer_edge(0, 1).unwrap().order(), 1);
        let trivial = PermGroup::trivial(4);
        assert_eq!(trivial.stabilizer_edge(0, 1).unwrap().order(), 1);
        assert!(s5.stabilizer_point(5).is_err());
    }

    #[test]
    fn transitivity_degrees() {
        assert!(symmetric_group(6).unwrap().is_k_transitive(6));
        assert!(alternating_group(6).unwrap().is_k_transitive(4));
        assert!(!alternating_group(6).unwrap().is_k_transitive(5));
        assert!(!dihedral_group(6).unwrap().is_k_transitive(2));
    }

    #[test]
    fn random_subgroups_are_subgroups() {
        let g = pgammal_2_8();
        let subs = g.random_subgroups(6, 11);
        assert_eq!(subs.len(), 8);
        assert_eq!(subs[0].order(), 1);
        assert_eq!(subs[1].order(), 1512);
        for h in &subs {
            assert!(h.is_subgroup_of(&g));
            assert_eq!(1512 % h.order(), 0);
        }
        let again = g.random_subgroups(6, 11);
        for (a, b) in subs.iter().zip(&again) {
            assert_eq!(a.generators(), b.generators());
        }
        assert_eq!(g.random_subgroups(0, 1).len(), 2);
    }

    #[test]
    fn derived_subgroups() {
        assert_eq!(symmetric_group(5).unwrap().derived_subgroup().order(), 60);
        assert_eq!(dihedral_group(6).unwrap().derived_subgroup().order(), 3);
        assert_eq!(pgammal_2_8().derived_subgroup().order(), 504);
    }

    #[test]
    fn elements_enumerates_group() {
        let d = dihedral_group(7).unwrap();
        let elems: HashSet<_> = d.elements(100).into_iter().collect();
        assert_eq!(elems, closure(7, d.generators()));
    }

    fn arb_group() -> impl Strategy<Value = (usize, Vec<Permutation>)> {
        (2usize..8)
            .prop_flat_map(|n| {
                let p = Just((0..n).collect::<Vec<_>>()).prop_shuffle();
                (Just(n), prop::collection::vec(p, 0..3))
            })
            .prop_map(|(n, imgs)| (n, imgs.into_iter().map(|i| perm(&i)).collect()))
    }

    proptest! {
        #[test]
        fn chain_order_equals_closure((n, gens) in arb_group()) {
            let g = PermGroup::new(n, gens.clone()).unwrap();
            prop_assert_eq!(g.order(), closure(n, &gens).len() as u128);
        }

        #[test]
        fn orbit_stabilizer((n, gens) in arb_group(), x in 0usize..8) {
            let g = PermGroup::new(n, gens).unwrap();
            let x = x % n;
            let stab = g.stabilizer_point(x).unwrap();
            prop_assert_eq!(g.order(), g.orbit_of_point(x).len() as u128 * stab.order());
            prop_assert!(stab.generators().iter().all(|h| h.apply(x) == x));
        }

        #[test]
        fn edge_stabilizer_index((n, gens) in arb_group(), u in 0usize..8, v in 0usize..8) {
            let (u, v) = (u % n, v % n);
            prop_assume!(u != v);
            let g = PermGroup::new(n, gens).unwrap();
            let setwise = g.stabilizer_edge(u, v).unwrap();
            let pointwise = g.pointwise_stabilizer(&[u, v]).unwrap();
            prop_assert!(pointwise.is_subgroup_of(&setwise));
            let index = setwise.order() / pointwise.order();
            prop_assert!(index == 1 || index == 2);
            let swapper = g.elements(10_000).into_iter()
                .any(|h| h.apply(u) == v && h.apply(v) == u);
            prop_assert_eq!(index == 2, swapper);
        }
    }
}
