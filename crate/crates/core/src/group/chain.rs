//! Deterministic incremental Schreier–Sims.

use std::collections::HashSet;

use super::Permutation;

/// One level of a stabilizer chain: the base point, the strong generators
/// fixing all earlier base points, and a transversal of the basic orbit.
#[derive(Clone, Debug)]
pub(crate) struct Level {
    pub base: usize,
    pub gens: Vec<Permutation>,
    pub orbit: Vec<usize>,
    /// `transversal[p]` maps the base point to `p`.
    transversal: Vec<Option<Permutation>>,
    inverses: Vec<Option<Permutation>>,
    /// Schreier generators (orbit point, generator index) already sifted.
    checked: HashSet<(usize, usize)>,
}

impl Level {
    fn new(base: usize, degree: usize) -> Self {
        let mut transversal = vec![None; degree];
        transversal[base] = Some(Permutation::identity(degree));
        Level {
            base,
            gens: Vec::new(),
            orbit: vec![base],
            inverses: transversal.clone(),
            transversal,
            checked: HashSet::new(),
        }
    }

    fn add_generator(&mut self, g: Permutation) {
        self.gens.push(g);
        let mut i = 0;
        while i < self.orbit.len() {
            let p = self.orbit[i];
            for k in 0..self.gens.len() {
                let q = self.gens[k].apply(p);
                if self.transversal[q].is_none() {
                    let rep = self.transversal[p].as_ref().unwrap().then(&self.gens[k]);
                    self.inverses[q] = Some(rep.inverse());
                    self.transversal[q] = Some(rep);
                    self.orbit.push(q);
                }
            }
            i += 1;
        }
    }

    pub fn representative(&self, point: usize) -> Option<&Permutation> {
        self.transversal[point].as_ref()
    }
}

/// A base and strong generating set with explicit transversals.
#[derive(Clone, Debug)]
pub struct StabChain {
    degree: usize,
    levels: Vec<Level>,
}

impl StabChain {
    /// Builds a chain for `<gens>` whose base starts with `prefix`. When the
    /// group order is already known it is used to stop early: once the
    /// basic orbit lengths multiply to the order the chain is complete.
    pub(crate) fn build(
        degree: usize,
        gens: &[Permutation],
        prefix: &[usize],
        known_order: Option<u128>,
    ) -> Self {
        let mut unique: Vec<Permutation> = Vec::new();
        for g in gens {
            if !g.is_identity() && !unique.contains(g) {
                unique.push(g.clone());
            }
        }
        let mut chain = StabChain {
            degree,
            levels: prefix.iter().map(|&b| Level::new(b, degree)).collect(),
        };
        if chain.levels.is_empty() && !unique.is_empty() {
            let b = largest_orbit_point(degree, &unique);
            chain.levels.push(Level::new(b, degree));
        }
        for g in unique {
            let j = chain.first_moved_level(&g);
            chain.add_strong_generator(g, 0, j);
        }

        let mut i = chain.levels.len() as isize - 1;
        while i >= 0 {
            if known_order.is_some_and(|order| chain.checked_order() == Some(order)) {
                break;
            }
            let level = i as usize;
            match chain.failing_schreier_generator(level) {
                Some((y, j)) => {
                    chain.add_strong_generator(y, level + 1, j);
                    i = j as isize;
                }
                None => i -= 1,
            }
        }
        chain
    }

    /// Index of the first level whose base point `g` moves, or the number
    /// of levels if it fixes the whole base.
    fn first_moved_level(&self, g: &Permutation) -> usize {
        self.levels
            .iter()
            .position(|l| g.apply(l.base) != l.base)
            .unwrap_or(self.levels.len())
    }

    /// Adds `g` to levels `from..=to`, appending a new base point (the
    /// smallest point on a longest cycle of `g`) when `to` is past the end.
    fn add_strong_generator(&mut self, g: Permutation, from: usize, to: usize) {
        if to == self.levels.len() {
            let base = g
                .cycles()
                .into_iter()
                .max_by(|a, b| a.len().cmp(&b.len()).then(b[0].cmp(&a[0])))
                .map(|c| c[0])
                .expect("non-identity strong generator");
            self.levels.push(Level::new(base, self.degree));
        }
        for level in &mut self.levels[from..=to] {
            level.add_generator(g.clone());
        }
    }

    fn failing_schreier_generator(&mut self, i: usize) -> Option<(Permutation, usize)> {
        let mut k = 0;
        while k < self.levels[i].orbit.len() {
            let beta = self.levels[i].orbit[k];
            for gi in 0..self.levels[i].gens.len() {
                if !self.levels[i].checked.insert((beta, gi)) {
                    continue;
                }
                let level = &self.levels[i];
                let x = &level.gens[gi];
                let image = x.apply(beta);
                let h = level.transversal[beta]
                    .as_ref()
                    .unwrap()
                    .then(x)
                    .then(level.inverses[image].as_ref().unwrap());
                if h.is_identity() {
                    continue;
                }
                let (y, j) = self.strip(&h, i + 1);
                if j < self.levels.len() || !y.is_identity() {
                    return Some((y, j));
                }
            }
            k += 1;
        }
        None
    }

    /// Sifts `g` through levels `start..`; returns the residue and the level
    /// where sifting stopped (the number of levels if it went through).
    pub(crate) fn strip(&self, g: &Permutation, start: usize) -> (Permutation, usize) {
        let mut g = g.clone();
        for (l, level) in self.levels.iter().enumerate().skip(start) {
            let beta = g.apply(level.base);
            match &level.inverses[beta] {
                Some(inv) => g = g.then(inv),
                None => return (g, l),
            }
        }
        (g, self.levels.len())
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.base).collect()
    }

    pub(crate) fn levels(&self) -> &[Level] {
        &self.levels
    }

    pub fn basic_orbit_lengths(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.orbit.len()).collect()
    }

    fn checked_order(&self) -> Option<u128> {
        self.levels
            .iter()
            .try_fold(1u128, |acc, l| acc.checked_mul(l.orbit.len() as u128))
    }

    /// Product of basic orbit lengths. Panics if it does not fit in a u128.
    pub fn order(&self) -> u128 {
        self.checked_order().expect("group order exceeds u128")
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        if g.degree() != self.degree {
            return false;
        }
        let (residue, level) = self.strip(g, 0);
        level == self.levels.len() && residue.is_identity()
    }

    /// Strong generators of the whole group.
    pub fn strong_generators(&self) -> &[Permutation] {
        self.levels.first().map_or(&[], |l| &l.gens)
    }

    /// The chain of the pointwise stabilizer of the first `from` base
    /// points.
    pub(crate) fn tail(&self, from: usize) -> StabChain {
        StabChain {
            degree: self.degree,
            levels: self.levels[from.min(self.levels.len())..].to_vec(),
        }
    }
}

/// Smallest point of a largest orbit of `<gens>`.
fn largest_orbit_point(degree: usize, gens: &[Permutation]) -> usize {
    let mut seen = vec![false; degree];
    let mut best = (0, 0);
    for start in 0..degree {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut stack = vec![start];
        let mut size = 0;
        while let Some(p) = stack.pop() {
            size += 1;
            for g in gens {
                let q = g.apply(p);
                if !seen[q] {
                    seen[q] = true;
                    stack.push(q);
                }
            }
        }
        if size > best.0 {
            best = (size, start);
        }
    }
    best.1
}
