//! The classification of locally `s`-distance transitive subdivisions with
//! `s` at the subdivision's diameter, row by row.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::graph::{complete, complete_bipartite, cycle, hoffman_singleton, petersen, Graph};
use crate::group::{
    automorphism_group, dihedral_group, symmetric_group, wreath_symmetric_2, OnSets, OnTuples,
    PermGroup,
};

use super::checks::{half_length, Subject};
use super::outcome::{CheckOutcome, Recorder};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ClassificationRow {
    K2,
    K3,
    /// `K_n` with `n >= 4`.
    Complete(usize),
    /// `K_{n,n}` with `n >= 2`.
    CompleteBipartite(usize),
    C5,
    Petersen,
    HoffmanSingleton,
}

impl ClassificationRow {
    pub fn graph(&self) -> Graph {
        match *self {
            ClassificationRow::K2 => complete(2),
            ClassificationRow::K3 => complete(3),
            ClassificationRow::Complete(n) => complete(n),
            ClassificationRow::CompleteBipartite(n) => complete_bipartite(n, n),
            ClassificationRow::C5 => cycle(5),
            ClassificationRow::Petersen => Ok(petersen()),
            ClassificationRow::HoffmanSingleton => Ok(hoffman_singleton()),
        }
        .expect("row parameters are validated on construction")
    }

    /// `(diam g, δ)` as listed for the row.
    pub fn listed_d_delta(&self) -> (usize, usize) {
        match self {
            ClassificationRow::K2 => (1, 0),
            ClassificationRow::K3 => (1, 1),
            ClassificationRow::Complete(_) => (1, 2),
            ClassificationRow::CompleteBipartite(_) => (2, 0),
            ClassificationRow::C5 => (2, 1),
            ClassificationRow::Petersen | ClassificationRow::HoffmanSingleton => (2, 2),
        }
    }

    /// The values of `s` the row is listed for.
    pub fn listed_s(&self) -> Vec<usize> {
        match self {
            ClassificationRow::K2 => vec![2],
            ClassificationRow::K3 => vec![2, 3],
            ClassificationRow::Complete(_) => vec![2, 3, 4],
            ClassificationRow::CompleteBipartite(_) => vec![4],
            _ => vec![4, 5],
        }
    }

    /// The full automorphism group, named as in the classification.
    pub fn default_group(&self) -> (String, PermGroup) {
        match *self {
            ClassificationRow::K2 => ("S2".into(), symmetric_group(2).expect("n = 2")),
            ClassificationRow::K3 => ("S3".into(), symmetric_group(3).expect("n = 3")),
            ClassificationRow::Complete(n) => {
                (format!("S{n}"), symmetric_group(n).expect("n >= 4"))
            }
            ClassificationRow::CompleteBipartite(n) => (
                format!("S{n} wr S2"),
                wreath_symmetric_2(n).expect("n >= 2"),
            ),
            ClassificationRow::C5 => ("D10".into(), dihedral_group(5).expect("n = 5")),
            ClassificationRow::Petersen => (
                "Aut(P)".into(),
                automorphism_group(&petersen()).expect("small"),
            ),
            ClassificationRow::HoffmanSingleton => (
                "Aut(HoSi)".into(),
                automorphism_group(&hoffman_singleton()).expect("within budget"),
            ),
        }
    }

    /// The verdict local `s`-distance transitivity of `S(g)` should have,
    /// with the reason.
    fn expected(&self, subject: &Subject, s: usize) -> (bool, String) {
        let group = subject.group();
        let d = subject.base().diameter();
        if s < 2 * d {
            let t = half_length(s);
            let r = subject.base().s_arc_transitive(t).expect("s >= 1");
            return (r.verdict, format!("(G,{t})-arc transitive on g"));
        }
        let order = group.order();
        match *self {
            ClassificationRow::K2 => (order == 2, "|G| = 2".into()),
            ClassificationRow::K3 => (order == 6, "|G| = 6".into()),
            ClassificationRow::Complete(_) if s < 4 => {
                (group.is_k_transitive(3), "3-transitive".into())
            }
            ClassificationRow::Complete(n) => (
                group.is_k_transitive(4) || (n == 9 && order == 1512 && group.is_k_transitive(3)),
                "4-transitive, or n = 9 with a 3-transitive group of order 1512".into(),
            ),
            ClassificationRow::CompleteBipartite(n) => {
                let c = KnnConditions::evaluate(n, group);
                (c.all(), format!("conditions {c}"))
            }
            ClassificationRow::C5 => (order == 10, "|G| = 10".into()),
            ClassificationRow::Petersen => (order == 120, "|G| = 120".into()),
            ClassificationRow::HoffmanSingleton => (
                order == 126_000 || order == 252_000,
                "|G| is 126000 or 252000".into(),
            ),
        }
    }
}

impl fmt::Display for ClassificationRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClassificationRow::K2 => f.write_str("K2"),
            ClassificationRow::K3 => f.write_str("K3"),
            ClassificationRow::Complete(n) => write!(f, "K{n}"),
            ClassificationRow::CompleteBipartite(n) => write!(f, "K{n},{n}"),
            ClassificationRow::C5 => f.write_str("C5"),
            ClassificationRow::Petersen => f.write_str("P"),
            ClassificationRow::HoffmanSingleton => f.write_str("HoSi"),
        }
    }
}

/// Parses `K2`, `K3`, `K<n>` (n >= 4), `K<n>,<n>` (n >= 2), `C5`, `P` or
/// `HoSi`.
impl FromStr for ClassificationRow {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let unknown = || format!("unknown row {s:?}");
        match s {
            "K2" => return Ok(ClassificationRow::K2),
            "K3" => return Ok(ClassificationRow::K3),
            "C5" => return Ok(ClassificationRow::C5),
            "P" => return Ok(ClassificationRow::Petersen),
            "HoSi" => return Ok(ClassificationRow::HoffmanSingleton),
            _ => {}
        }
        let rest = s.strip_prefix('K').ok_or_else(unknown)?;
        match rest.split_once(',') {
            None => match rest.parse::<usize>() {
                Ok(n) if n >= 4 => Ok(ClassificationRow::Complete(n)),
                _ => Err(unknown()),
            },
            Some((a, b)) => match (a.parse::<usize>(), b.parse::<usize>()) {
                (Ok(a), Ok(b)) if a == b && a >= 2 => Ok(ClassificationRow::CompleteBipartite(a)),
                _ => Err(unknown()),
            },
        }
    }
}

/// Checks one row with the group `group` acting on the row's graph: the
/// `d` and `δ` columns, then local `s`-distance transitivity of `S(g)` for
/// every `s` up to its diameter against the row's expected verdict.
pub fn check_classification_row(
    row: ClassificationRow,
    group_name: &str,
    group: &PermGroup,
) -> CheckOutcome {
    let g = row.graph();
    let instance = format!("{row} with {group_name} (order {})", group.order());
    let mut rec = Recorder::new("classification-row", instance);
    let subject = match Subject::new(row.to_string(), &g, group_name, group) {
        Ok(s) => s,
        Err(e) => return rec.skipped(e.to_string()),
    };
    let d = subject.base().diameter();
    let diam_s = subject.subdivision().diameter();
    let delta = diam_s - 2 * d;
    rec.note(format!("d = {d}, delta = {delta}"));
    if (d, delta) != row.listed_d_delta() {
        return rec.refuted(format!(
            "(d, delta) = ({d}, {delta}), listed {:?}",
            row.listed_d_delta()
        ));
    }
    for s in 1..=diam_s {
        let report = subject
            .subdivision()
            .locally_s_distance_transitive(s)
            .expect("s <= diam");
        let (expected, reason) = row.expected(&subject, s);
        rec.note(format!(
            "s={s}: {} (expected {expected}: {reason})",
            report.verdict
        ));
        if report.verdict != expected {
            return rec.refuted(format!(
                "s = {s}: local s-distance transitivity is {}, expected {expected} ({reason})",
                report.verdict
            ));
        }
    }
    rec.confirmed()
}

/// Conditions on `G <= Aut(K_{n,n})` with parts `0..n` and `n..2n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct KnnConditions {
    /// `G` is vertex-transitive.
    pub vertex_transitive: bool,
    /// The part stabilizer `H` is 2-transitive on both parts.
    pub parts_two_transitive: bool,
    /// `G_0` is transitive on `(part 0 minus 0) x part 1`.
    pub vertex_stabilizer_transitive: bool,
    /// The stabilizer of edge `{0, n}` swaps its ends.
    pub edge_swapped: bool,
    /// The stabilizer of edge `{0, n}` is transitive on edges disjoint
    /// from it.
    pub disjoint_edges_transitive: bool,
}

impl KnnConditions {
    pub fn evaluate(n: usize, group: &PermGroup) -> Self {
        assert_eq!(group.degree(), 2 * n, "group must act on K_{{n,n}}");
        let part: Vec<usize> = (0..n).collect();
        let h = group.stabilizer_under(part, &OnSets);
        let pairs_in = |a: usize| h.orbit(vec![a, a + 1], &OnTuples).len() == n * (n - 1);
        let stab = group.stabilizer_point(0).expect("n >= 1");
        let edge = group.stabilizer_edge(0, n).expect("an edge");
        KnnConditions {
            vertex_transitive: group.is_transitive(),
            parts_two_transitive: pairs_in(0) && pairs_in(n),
            vertex_stabilizer_transitive: stab.orbit(vec![1, n], &OnTuples).len() == (n - 1) * n,
            edge_swapped: edge.generators().iter().any(|g| g.apply(0) == n),
            disjoint_edges_transitive: edge.orbit(vec![1, n + 1], &OnSets).len()
                == (n - 1) * (n - 1),
        }
    }

    pub fn all(&self) -> bool {
        self.vertex_transitive
            && self.parts_two_transitive
            && self.vertex_stabilizer_transitive
            && self.edge_swapped
            && self.disjoint_edges_transitive
    }
}

impl fmt::Display for KnnConditions {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "(i) {} (ii) {} {} (iii) {} {}",
            self.vertex_transitive,
            self.parts_two_transitive,
            self.vertex_stabilizer_transitive,
            self.edge_swapped,
            self.disjoint_edges_transitive
        )
    }
}

/// The conditions on `G <= Aut(K_{n,n})` hold exactly when `S(K_{n,n})`
/// is locally `(G,4)`-distance transitive.
pub fn check_knn_conditions(n: usize, group_name: &str, group: &PermGroup) -> CheckOutcome {
    let mut rec = Recorder::new(
        "knn-conditions",
        format!("K{n},{n} with {group_name} (order {})", group.order()),
    );
    if n < 2 {
        return rec.skipped("needs n >= 2");
    }
    if group.degree() != 2 * n {
        return rec.skipped(format!(
            "group has degree {}, expected {}",
            group.degree(),
            2 * n
        ));
    }
    let g = complete_bipartite(n, n).expect("n >= 2");
    let subject = match Subject::new(format!("K{n},{n}"), &g, group_name, group) {
        Ok(s) => s,
        Err(e) => return rec.skipped(e.to_string()),
    };
    let conditions = KnnConditions::evaluate(n, group);
    let report = subject
        .subdivision()
        .locally_s_distance_transitive(4)
        .expect("diam S(K_{n,n}) = 4");
    rec.note(format!("conditions {conditions}"));
    rec.note(format!("local 4-distance transitive {}", report.verdict));
    rec.verdict(conditions.all() == report.verdict, || {
        format!(
            "conditions {conditions} but local 4-distance transitivity is {}",
            report.verdict
        )
    })
}
