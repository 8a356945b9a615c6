//! Executable checks relating symmetry of a graph to that of its
//! subdivision graph.

mod checks;
mod corpus;
mod outcome;
mod rows;

pub use checks::{
    check_arc_lifting, check_cycle_regime, check_distance_formula, check_distance_lifting,
    check_edge_stabilizers, check_girth5_three_arc, check_girth_bound, check_reconstruction,
    check_small_s_equivalence, check_subdivision_automorphisms, half_length,
    proper_dihedral_subgroups, Subject,
};
pub use corpus::{run_corpus, CorpusConfig, Family, DEFAULT_CONFIG};
pub use outcome::{CheckOutcome, CheckStatus, Summary};
pub use rows::{check_classification_row, check_knn_conditions, ClassificationRow, KnnConditions};
