//! Subdivision graphs, exact permutation groups, and the (local) arc and
//! distance transitivity properties that connect a graph with its
//! subdivision.
//!
//! The crate is organised bottom-up:
//!
//! * [`graph`]: immutable simple graphs, named constructions, BFS metrics
//!   and s-arc enumeration.
//! * [`transforms`]: subdivision, line and distance-2 graphs, closed-form
//!   subdivision distances and reconstruction of a graph from its
//!   subdivision.
//! * [`group`]: permutations, Schreier–Sims stabilizer chains, orbits and
//!   stabilizers, induced actions, automorphism search and named groups.
//! * [`symmetry`]: the eight global/local transitivity predicates.
//! * [`theorems`]: executable equivalence checks over a graph/group corpus.

pub mod graph;
pub mod group;
mod parse;
pub mod symmetry;
pub mod theorems;
pub mod transforms;

pub use graph::{Girth, Graph, GraphError, Metrics, SArc};
pub use group::{Action, GroupError, PermGroup, Permutation};
pub use parse::ParseError;
pub use symmetry::{PropertyKind, SymmetryContext, SymmetryError, TransitivityReport};
pub use theorems::{CheckOutcome, CheckStatus};
pub use transforms::{DeltaReport, Part, SubdivisionGraph};
