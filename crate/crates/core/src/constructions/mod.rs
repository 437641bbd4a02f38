//! Explicit colorers, one per graph family. Every public colorer verifies
//! its own output before returning it.

mod corona;
mod forest;
mod multipartite;
mod outerplanar;
mod triangulation;
mod two_tree;

use thiserror::Error;

use crate::coloring::{verify, EdgeColoring};
use crate::exact::SolveError;
use crate::families::FamilyError;
use crate::graph::Graph;

pub use corona::{color_corona, corona_bound, CoronaStrategy};
pub use forest::color_forest;
pub use multipartite::{
    color_multipartite_stst, pair_index_matrix, sequential_block, BlockKind, BlockPlan,
    MultipartiteColoring, ShiftBlock,
};
pub use outerplanar::{color_outerplanar, OuterplanarColoring};
pub use triangulation::color_iterated_triangulation;
pub use two_tree::{color_square_of_path, color_two_path, color_two_tree, TwoTreeColoring};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error(transparent)]
    Family(#[from] FamilyError),
    #[error("trace does not describe the input graph: {0}")]
    TraceMismatch(String),
    #[error("input is not outerplanar: {0}")]
    NotOuterplanar(String),
    #[error("base coloring is not an interval coloring of G")]
    UnverifiableBase,
    #[error("exact fallback failed: {0}")]
    Solver(#[from] SolveError),
    #[error("construction produced impropriety {got:?}, above the bound {bound}")]
    BoundViolated { got: Option<usize>, bound: usize },
}

fn precondition(msg: impl Into<String>) -> ConstructionError {
    ConstructionError::Precondition(msg.into())
}

/// Checks that `c` is an interval coloring of `g` with impropriety at most
/// `bound`.
fn ensure_within(g: &Graph, c: &EdgeColoring, bound: usize) -> Result<(), ConstructionError> {
    let report = verify(g, c).expect("colorers emit one color per edge");
    if report.within(bound) {
        Ok(())
    } else {
        Err(ConstructionError::BoundViolated {
            got: report.impropriety().value(),
            bound,
        })
    }
}

/// Per-vertex color multiset, used while extending partial colorings.
#[derive(Debug, Clone, Default)]
struct Palette {
    counts: std::collections::BTreeMap<i64, usize>,
}

impl Palette {
    fn count(&self, c: i64) -> usize {
        self.counts.get(&c).copied().unwrap_or(0)
    }

    fn add(&mut self, c: i64) {
        *self.counts.entry(c).or_insert(0) += 1;
    }

    fn bounds(&self) -> Option<(i64, i64)> {
        Some((
            *self.counts.keys().next()?,
            *self.counts.keys().next_back()?,
        ))
    }

    /// True when adding `c` keeps the colors an interval and the count of
    /// `c` at most `k`.
    fn accepts(&self, c: i64, k: usize) -> bool {
        let adjacent = self
            .bounds()
            .is_none_or(|(lo, hi)| lo - 1 <= c && c <= hi + 1);
        adjacent && self.count(c) < k
    }
}
