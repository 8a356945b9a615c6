//! Inputs shared by the benchmarks.

use subsym::group::{automorphism_group, induced_subdivision_action};
use subsym::transforms::subdivide;
use subsym::{Graph, PermGroup};

/// `S(g)` with the lift of `Aut(g)`.
pub fn subdivision_with_automorphisms(g: &Graph) -> (Graph, PermGroup) {
    let aut = automorphism_group(g).expect("within the default node budget");
    let sg = subdivide(g);
    let lifted = induced_subdivision_action(&aut, &sg).expect("Aut(g) acts on S(g)");
    (sg.graph().clone(), lifted)
}

/// A fresh group with the same generators, so the stabilizer chain is
/// rebuilt on first use.
pub fn unchained(group: &PermGroup) -> PermGroup {
    PermGroup::new(group.degree(), group.generators().to_vec()).expect("same degree")
}
