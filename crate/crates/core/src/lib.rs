//! Improper interval edge colorings.
//!
//! An edge coloring is an *interval* coloring when the colors at every
//! vertex form a run of consecutive integers, and *k-improper* when no
//! color appears more than `k` times at a vertex. This crate provides a
//! verifier, generators for the graph families of interest, explicit
//! colorers for each of them, and an exact solver for the smallest `k`.

pub mod certificate;
pub mod coloring;
pub mod constructions;
pub mod exact;
pub mod families;
pub mod graph;
pub mod table;

pub use certificate::{certificate, Certificate};
pub use coloring::{
    impropriety_of, normalize, verify, EdgeColoring, Impropriety, VerificationReport,
};
pub use graph::{make_graph, max_degree, EdgeId, Graph, GraphError};
