//! Individual checks. Each evaluates both sides of a claimed relation on
//! one instance and reports whether they agree.

use crate::graph::{all_distances, girth, Girth, Graph, GraphError};
use crate::group::{
    are_isomorphic, automorphism_group_with_budget, cyclic_group, dihedral_group,
    half_dihedral_group, induced_subdivision_action, GroupError, OnSets, PermGroup,
};
use crate::symmetry::{is_transitive_on, SymmetryContext, SymmetryError, TransitivityReport};
use crate::transforms::{
    delta_of, distance_two_graph, line_graph, reconstruct, subdivide, SubdivisionGraph,
    SubdivisionMetric,
};

use super::outcome::{CheckOutcome, Recorder};

/// `ceil((s + 1) / 2)`: the arc length in the base graph matching length
/// `s` in the subdivision.
pub fn half_length(s: usize) -> usize {
    (s + 2) / 2
}

/// A connected graph on at least two vertices with a group of
/// automorphisms, together with its subdivision and the induced action.
pub struct Subject {
    name: String,
    group_name: String,
    base: SymmetryContext,
    sub: SubdivisionGraph,
    lifted: SymmetryContext,
}

impl Subject {
    pub fn new(
        name: impl Into<String>,
        graph: &Graph,
        group_name: impl Into<String>,
        group: &PermGroup,
    ) -> Result<Self, SymmetryError> {
        if graph.vertex_count() < 2 {
            return Err(GraphError::InvalidParameter("need at least 2 vertices".into()).into());
        }
        let base = SymmetryContext::new(graph, group)?;
        let sub = subdivide(graph);
        let lifted_group = induced_subdivision_action(group, &sub)?;
        let lifted = SymmetryContext::new(sub.graph(), &lifted_group)?;
        Ok(Subject {
            name: name.into(),
            group_name: group_name.into(),
            base,
            sub,
            lifted,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn graph(&self) -> &Graph {
        self.base.graph()
    }

    pub fn group(&self) -> &PermGroup {
        self.base.group()
    }

    /// The base graph with `G`.
    pub fn base(&self) -> &SymmetryContext {
        &self.base
    }

    /// `S(g)` with the induced action of `G`.
    pub fn subdivision(&self) -> &SymmetryContext {
        &self.lifted
    }

    pub fn subdivision_graph(&self) -> &SubdivisionGraph {
        &self.sub
    }

    pub fn instance(&self, s: Option<usize>) -> String {
        let mut out = format!(
            "{} with {} (order {})",
            self.name,
            self.group_name,
            self.group().order()
        );
        if let Some(s) = s {
            out.push_str(&format!(", s = {s}"));
        }
        out
    }

    fn is_k2(&self) -> bool {
        self.graph().vertex_count() == 2
    }

    /// `2 diam(g) - 1`, the largest `s` covered by the distance lifting.
    fn lifting_limit(&self) -> usize {
        2 * self.base.diameter() - 1
    }
}

fn describe(label: &str, r: &TransitivityReport) -> String {
    let mut out = format!("{label} {} s={}: {}", r.kind.name(), r.kind.s, r.verdict);
    if let Some(w) = &r.witness {
        out.push_str(&format!(
            " witness {}",
            serde_json::to_string(w).expect("witness serializes")
        ));
    }
    out
}

fn mismatch(left: &TransitivityReport, right: &TransitivityReport) -> String {
    format!("{} but {}", describe("S(g)", left), describe("g", right))
}

/// Local `s`-arc transitivity of `S(g)` against `ceil((s+1)/2)`-arc
/// transitivity of `g`.
pub fn check_arc_lifting(subject: &Subject, s: usize) -> CheckOutcome {
    let mut rec = Recorder::new("arc-lifting", subject.instance(Some(s)));
    if s == 0 {
        return rec.skipped("s must be positive");
    }
    let left = subject.lifted.locally_s_arc_transitive(s).expect("s >= 1");
    let right = subject
        .base
        .s_arc_transitive(half_length(s))
        .expect("s >= 1");
    rec.note(describe("S(g)", &left));
    rec.note(describe("g", &right));
    rec.verdict(left.verdict == right.verdict, || mismatch(&left, &right))
}

/// Local `s`-distance transitivity of `S(g)` against
/// `ceil((s+1)/2)`-arc transitivity of `g`, for `s <= 2 diam(g) - 1`.
pub fn check_distance_lifting(subject: &Subject, s: usize) -> CheckOutcome {
    let mut rec = Recorder::new("distance-lifting", subject.instance(Some(s)));
    if s == 0 || s > subject.lifting_limit() {
        return rec.skipped(format!(
            "needs 1 <= s <= 2 diam(g) - 1 = {}",
            subject.lifting_limit()
        ));
    }
    let left = subject
        .lifted
        .locally_s_distance_transitive(s)
        .expect("s below the subdivision diameter");
    let right = subject
        .base
        .s_arc_transitive(half_length(s))
        .expect("s >= 1");
    rec.note(describe("S(g)", &left));
    rec.note(describe("g", &right));
    rec.verdict(left.verdict == right.verdict, || mismatch(&left, &right))
}

/// For `g != K_2`: local 2-distance, local 3-arc and local 3-distance
/// transitivity of `S(g)` and 2-arc transitivity of `g` all agree.
pub fn check_small_s_equivalence(subject: &Subject) -> CheckOutcome {
    let mut rec = Recorder::new("small-s-equivalence", subject.instance(None));
    if subject.is_k2() {
        return rec.skipped("g is K_2, which has no 2-arc");
    }
    let reports = [
        subject.lifted.locally_s_distance_transitive(2),
        subject.base.s_arc_transitive(2),
        subject.lifted.locally_s_arc_transitive(3),
        subject.lifted.locally_s_distance_transitive(3),
    ]
    .map(|r| r.expect("diam S(g) >= 3 when g != K_2"));
    let labels = ["S(g)", "g", "S(g)", "S(g)"];
    for (label, r) in labels.iter().zip(&reports) {
        rec.note(describe(label, r));
    }
    let first = reports[0].verdict;
    rec.verdict(reports.iter().all(|r| r.verdict == first), || {
        format!(
            "verdicts differ: {:?}",
            reports.iter().map(|r| r.verdict).collect::<Vec<_>>()
        )
    })
}

/// Edge stabilizers in the subdivision: if every `G_e` swaps the ends of
/// `e` then `G` is vertex-transitive; and for `g != K_2`, every `G_e` is
/// transitive on the vertices at distance 1 and 2 from `e` in `S(g)`
/// exactly when `g` is `(G,2)`-arc transitive or `g` is an even cycle with
/// `|G| = n` and two edge orbits.
pub fn check_edge_stabilizers(subject: &Subject) -> CheckOutcome {
    let mut rec = Recorder::new("edge-stabilizers", subject.instance(None));
    let g = subject.graph();
    let group = subject.group();
    let n = g.vertex_count();
    let edge_orbits: Vec<&Vec<usize>> = subject
        .lifted
        .vertex_orbits()
        .iter()
        .filter(|orbit| orbit[0] >= n)
        .collect();

    let mut all_swap = true;
    let mut all_one_and_two = true;
    for orbit in &edge_orbits {
        let (u, v) = subject.sub.edge_of(orbit[0]).expect("an edge vertex");
        let stab = group
            .stabilizer_edge(u, v)
            .expect("edge endpoints in range");
        let lifted_order = subject.lifted.stabilizer(orbit[0]).order();
        if stab.order() != lifted_order {
            return rec.refuted(format!(
                "stabilizer of edge {{{u}, {v}}} has order {} but the E-vertex stabilizer has order {lifted_order}",
                stab.order()
            ));
        }
        let swaps = stab.generators().iter().any(|h| h.apply(u) == v);
        let mut adjacent = Vec::new();
        for (a, b) in [(u, v), (v, u)] {
            for &w in g.neighbors(a) {
                if w != b {
                    adjacent.push(vec![a.min(w), a.max(w)]);
                }
            }
        }
        let second = is_transitive_on(stab.generators(), &adjacent, &OnSets);
        rec.note(format!(
            "edge {{{u}, {v}}}: |G_e| = {}, swaps ends {swaps}, transitive on adjacent edges {second}",
            stab.order()
        ));
        all_swap &= swaps;
        all_one_and_two &= swaps && second;
    }

    let vertex_transitive = subject.base.is_vertex_transitive();
    if all_swap && !vertex_transitive {
        return rec.refuted("every G_e swaps the ends of e, yet G is not vertex-transitive");
    }
    if subject.is_k2() {
        rec.note("second part skipped: g is K_2");
        return rec.confirmed();
    }
    let two_arc = subject.base.s_arc_transitive(2).expect("s >= 1").verdict;
    let exceptional =
        g.is_cycle() && n.is_multiple_of(2) && group.order() == n as u128 && edge_orbits.len() == 2;
    rec.note(format!(
        "(G,2)-arc transitive {two_arc}; even cycle with |G| = n and two edge orbits {exceptional}"
    ));
    rec.verdict(all_one_and_two == (two_arc || exceptional), || {
        format!(
            "edge stabilizers transitive on both spheres: {all_one_and_two}; \
             2-arc transitive or exceptional cycle: {}",
            two_arc || exceptional
        )
    })
}

/// For even `s <= 2 diam(g) - 1`: local `s`-distance transitivity of
/// `S(g)` forces `girth(g) >= s + 2`.
pub fn check_girth_bound(subject: &Subject, s: usize) -> CheckOutcome {
    let mut rec = Recorder::new("girth-bound", subject.instance(Some(s)));
    if s == 0 || s % 2 == 1 || s > subject.lifting_limit() {
        return rec.skipped(format!(
            "needs even s with 2 <= s <= 2 diam(g) - 1 = {}",
            subject.lifting_limit()
        ));
    }
    let premise = subject
        .lifted
        .locally_s_distance_transitive(s)
        .expect("s below the subdivision diameter");
    let gth = girth(subject.graph());
    rec.note(describe("S(g)", &premise));
    rec.note(format!("girth {gth}"));
    rec.verdict(!premise.verdict || gth.at_least(s + 2), || {
        format!("premise holds but girth {gth} < {}", s + 2)
    })
}

/// For girth at least 5: `diam S(g) >= 5`, and local 4-distance
/// transitivity of `S(g)` implies `g` is `(G,3)`-arc transitive.
pub fn check_girth5_three_arc(subject: &Subject) -> CheckOutcome {
    let mut rec = Recorder::new("girth5-three-arc", subject.instance(None));
    let gth = girth(subject.graph());
    match gth {
        Girth::Acyclic => return rec.skipped("g is acyclic, so its girth is undefined"),
        Girth::Finite(k) if k < 5 => return rec.skipped(format!("girth {k} < 5")),
        Girth::Finite(_) => {}
    }
    let diam_s = subject.lifted.diameter();
    rec.note(format!("girth {gth}, diam S(g) = {diam_s}"));
    if diam_s < 5 {
        return rec.refuted(format!("diam S(g) = {diam_s} < 5"));
    }
    let premise = subject
        .lifted
        .locally_s_distance_transitive(4)
        .expect("4 <= diam");
    let conclusion = subject.base.s_arc_transitive(3).expect("s >= 1");
    rec.note(describe("S(g)", &premise));
    rec.note(describe("g", &conclusion));
    rec.verdict(!premise.verdict || conclusion.verdict, || {
        mismatch(&premise, &conclusion)
    })
}

/// Closed-form subdivision distances against BFS over all vertex pairs,
/// plus the range of `δ = diam S(g) - 2 diam(g)` and its edge-pair
/// criterion for `δ = 2`.
pub fn check_distance_formula(name: &str, g: &Graph) -> CheckOutcome {
    let mut rec = Recorder::new("distance-formula", name);
    if g.vertex_count() < 2 || !g.is_connected() {
        return rec.skipped("needs a connected graph on at least 2 vertices");
    }
    let sg = subdivide(g);
    let bfs = all_distances(sg.graph());
    let metric = SubdivisionMetric::new(&sg);
    let total = sg.graph().vertex_count();
    let mut mismatches = Vec::new();
    for a in 0..total {
        for b in a..total {
            let formula = metric.distance(a, b).expect("vertices in range");
            if formula != bfs[a][b] {
                mismatches.push((a, b, formula, bfs[a][b]));
            }
        }
    }
    rec.note(format!(
        "{} pairs compared, {} mismatches",
        total * (total + 1) / 2,
        mismatches.len()
    ));
    if let Some(&(a, b, f, d)) = mismatches.first() {
        return rec.refuted(format!("pair ({a}, {b}): formula {f}, BFS {d}"));
    }
    let report = delta_of(g).expect("connected, n >= 2");
    rec.note(format!(
        "d = {}, diam S(g) = {}, delta = {}, witness {:?}",
        report.d, report.diam_s, report.delta, report.witness
    ));
    if report.delta > 2 || report.diam_s != 2 * report.d + report.delta {
        return rec.refuted(format!("delta = {} outside 0..=2", report.delta));
    }
    rec.verdict((report.delta == 2) == report.witness.is_some(), || {
        format!(
            "delta = {} but edge pair at full cross distance {:?}",
            report.delta, report.witness
        )
    })
}

/// `S(g)^[2]` has two components, isomorphic to `g` and `L(g)`, and the
/// label-free reconstruction returns a graph isomorphic to `g`.
pub fn check_reconstruction(name: &str, g: &Graph) -> CheckOutcome {
    let mut rec = Recorder::new("reconstruction", name);
    if g.vertex_count() < 2 || !g.is_connected() {
        return rec.skipped("needs a connected graph on at least 2 vertices");
    }
    let sg = subdivide(g);
    let components = distance_two_graph(sg.graph()).expect("S(g) is connected");
    let sizes: Vec<usize> = components.iter().map(|c| c.vertices.len()).collect();
    rec.note(format!("component sizes {sizes:?}"));
    if components.len() != 2 {
        return rec.refuted(format!("{} components", components.len()));
    }
    let n = g.vertex_count();
    let (base, mids) = if components[0].vertices[0] < n {
        (&components[0], &components[1])
    } else {
        (&components[1], &components[0])
    };
    if base.vertices != (0..n).collect::<Vec<_>>() {
        return rec.refuted("the component of the base vertices has other vertices too");
    }
    let iso = |a: &Graph, b: &Graph| are_isomorphic(a, b).expect("small graphs");
    if !iso(&base.graph, g) {
        return rec.refuted("the base component is not isomorphic to g");
    }
    if !iso(&mids.graph, &line_graph(g)) {
        return rec.refuted("the edge component is not isomorphic to L(g)");
    }
    if reconstruct(&sg, false).as_ref() != Ok(g) {
        return rec.refuted("labelled reconstruction differs from g");
    }
    match reconstruct(&sg, true) {
        Ok(h) => rec.verdict(iso(&h, g), || "label-free reconstruction differs".into()),
        Err(e) => rec.refuted(format!("label-free reconstruction failed: {e}")),
    }
}

/// `|Aut S(g)| = |Aut g|`, except `|Aut S(C_n)| = 4n`.
pub fn check_subdivision_automorphisms(name: &str, g: &Graph, node_budget: u64) -> CheckOutcome {
    let mut rec = Recorder::new("subdivision-automorphisms", name);
    if !g.is_connected() {
        return rec.skipped("g is disconnected");
    }
    let sg = subdivide(g);
    let orders = automorphism_group_with_budget(g, node_budget).and_then(|a| {
        automorphism_group_with_budget(sg.graph(), node_budget).map(|b| (a.order(), b.order()))
    });
    let (aut, aut_s) = match orders {
        Ok(o) => o,
        Err(e @ GroupError::BudgetExceeded { .. }) => return rec.skipped(e.to_string()),
        Err(e) => return rec.refuted(e.to_string()),
    };
    let expected = if g.is_cycle() {
        4 * g.vertex_count() as u128
    } else {
        aut
    };
    rec.note(format!("|Aut g| = {aut}, |Aut S(g)| = {aut_s}"));
    rec.verdict(aut_s == expected, || {
        format!("expected {expected}, found {aut_s}")
    })
}

/// Subgroups of `D_2n` used against the cycle regime: the rotations, the
/// half-dihedral group for even `n`, and up to `count` further distinct
/// proper subgroups sampled with `seed`.
pub fn proper_dihedral_subgroups(n: usize, count: usize, seed: u64) -> Vec<(String, PermGroup)> {
    let full = dihedral_group(n).expect("n >= 3");
    let mut out = vec![("rotations".to_string(), cyclic_group(n).expect("n >= 3"))];
    if n.is_multiple_of(2) {
        out.push((
            "half-dihedral".to_string(),
            half_dihedral_group(n).expect("n even"),
        ));
    }
    let mut sampled = 0;
    for (i, h) in full
        .random_subgroups(16 * count.max(1), seed)
        .into_iter()
        .enumerate()
    {
        if sampled == count {
            break;
        }
        if h.order() == full.order() || out.iter().any(|(_, k)| k.same_group(&h)) {
            continue;
        }
        sampled += 1;
        out.push((format!("sampled subgroup {i}"), h));
    }
    out
}

/// For `C_n` with `D_2n`: `S(C_n)` is locally `s`-distance transitive for
/// `s = n` and, when `n` is odd, the even value `s = n - 1`; both lie in
/// `2d..=2d+δ`. Proper subgroups fail at those `s`.
pub fn check_cycle_regime(n: usize, subgroups: usize, seed: u64) -> CheckOutcome {
    let mut rec = Recorder::new("cycle-regime", format!("C{n}"));
    if n < 3 {
        return rec.skipped("needs n >= 3");
    }
    let c = crate::graph::cycle(n).expect("n >= 3");
    let full = dihedral_group(n).expect("n >= 3");
    let subject =
        Subject::new(format!("C{n}"), &c, format!("D{}", 2 * n), &full).expect("D_2n acts on C_n");
    let d = subject.base.diameter();
    let diam_s = subject.lifted.diameter();
    let delta = diam_s - 2 * d;
    rec.note(format!("d = {d}, delta = {delta}"));
    let mut s_values = vec![n];
    if n % 2 == 1 {
        s_values.push(n - 1);
    }
    for &s in &s_values {
        if !(2 * d..=diam_s).contains(&s) {
            return rec.refuted(format!("s = {s} is outside 2d..=2d+delta"));
        }
        if n % 2 == 1 && s == n - 1 && s % 2 == 1 {
            return rec.refuted(format!("s = {s} = n - 1 is odd"));
        }
        let full_report = subject
            .lifted
            .locally_s_distance_transitive(s)
            .expect("s <= diam");
        rec.note(describe(&format!("S(C{n}) with D{}", 2 * n), &full_report));
        if !full_report.verdict {
            return rec.refuted(format!("D{} fails at s = {s}", 2 * n));
        }
    }
    for (label, h) in proper_dihedral_subgroups(n, subgroups, seed) {
        let sg = subject.subdivision_graph();
        let lifted = induced_subdivision_action(&h, sg).expect("subgroup of D_2n");
        let ctx = SymmetryContext::new(sg.graph(), &lifted).expect("automorphisms of S(C_n)");
        for &s in &s_values {
            let r = ctx.locally_s_distance_transitive(s).expect("s <= diam");
            rec.note(format!(
                "{label} (order {}): s={s} {}",
                h.order(),
                r.verdict
            ));
            if r.verdict {
                return rec.refuted(format!(
                    "proper subgroup {label} of order {} passes at s = {s}",
                    h.order()
                ));
            }
        }
    }
    rec.confirmed()
}
