//! Exact interval coloring impropriety by exhaustive search.

mod naive;
mod scan;
mod search;

use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::coloring::{verify, EdgeColoring};
use crate::graph::Graph;

pub use naive::{naive_impropriety, naive_k_improper};
pub use scan::{conjecture_scan, Bound, ScanInstance, ScanReport, ScanRow};

/// Environment variable capping the number of search workers.
pub const THREADS_ENV: &str = "IMPROPRIETY_THREADS";

/// Limits for one decision search. `None` means unlimited.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchBudget {
    pub max_nodes: Option<u64>,
    pub time_limit: Option<Duration>,
    /// Colors are searched in `[-window, window]` after fixing the first
    /// edge to 0. Defaults to `Σ(d(v) - 1) + 1`.
    pub window: Option<i64>,
    /// Worker threads; defaults to `IMPROPRIETY_THREADS` or the number of
    /// available cores.
    pub threads: Option<usize>,
    /// Fix the first edge to 0 and the second to a nonnegative color.
    pub symmetry_breaking: bool,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget {
            max_nodes: None,
            time_limit: None,
            window: None,
            threads: None,
            symmetry_breaking: true,
        }
    }
}

impl SearchBudget {
    pub fn worker_count(&self) -> usize {
        self.threads
            .or_else(|| std::env::var(THREADS_ENV).ok()?.parse().ok())
            .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()))
            .max(1)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchResult {
    Found(EdgeColoring),
    Exhausted,
    BudgetExceeded,
}

impl SearchResult {
    pub fn label(&self) -> &'static str {
        match self {
            SearchResult::Found(_) => "found",
            SearchResult::Exhausted => "exhausted",
            SearchResult::BudgetExceeded => "budget-exceeded",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error("graph is disconnected; solve each component separately")]
    Disconnected,
    #[error("k must be at least 1")]
    ZeroK,
    #[error("search budget exceeded at k = {k} after {nodes} nodes")]
    BudgetExceeded { k: usize, nodes: u64 },
}

/// Outcome of one `(component, k)` decision inside [`exact_impropriety`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KAttempt {
    pub component: usize,
    pub k: usize,
    pub result: String,
    pub nodes: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolveStats {
    pub nodes: u64,
    pub elapsed: Duration,
    pub attempts: Vec<KAttempt>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolveOutcome {
    pub impropriety: usize,
    pub witness: EdgeColoring,
    pub stats: SolveStats,
}

/// Decides whether the connected graph `g` has a `k`-improper interval
/// coloring. Returns the result and the number of search nodes.
pub fn exists_k_improper(
    g: &Graph,
    k: usize,
    budget: &SearchBudget,
) -> Result<(SearchResult, u64), SolveError> {
    if k == 0 {
        return Err(SolveError::ZeroK);
    }
    if !g.is_connected() {
        return Err(SolveError::Disconnected);
    }
    let (result, nodes) = search::search_connected(g, k, budget);
    if let SearchResult::Found(c) = &result {
        let report = verify(g, c).expect("witness has one color per edge");
        assert!(report.within(k), "solver produced an invalid witness");
    }
    Ok((result, nodes))
}

/// `μ_int(g)`: the maximum over components of the smallest `k` admitting
/// a `k`-improper interval coloring. Each component tries `k = 1, 2, ...`
/// with a fresh search; `k = Δ` is settled by the monochromatic coloring.
/// The budget applies to each decision search separately.
pub fn exact_impropriety(g: &Graph, budget: &SearchBudget) -> Result<SolveOutcome, SolveError> {
    let start = Instant::now();
    let mut witness = EdgeColoring::new(vec![0; g.edge_count()]);
    let mut attempts = Vec::new();
    let mut total_nodes = 0;
    let mut best = 0;
    for (ci, comp) in g.components().iter().enumerate() {
        let (h, origin) = g.induced(comp);
        if h.edge_count() == 0 {
            continue;
        }
        let delta = h.max_degree();
        for k in 1..=delta {
            let (result, nodes) = if k == delta {
                (
                    SearchResult::Found(EdgeColoring::monochromatic(h.edge_count(), 0)),
                    0,
                )
            } else {
                exists_k_improper(&h, k, budget)?
            };
            total_nodes += nodes;
            attempts.push(KAttempt {
                component: ci,
                k,
                result: result.label().to_string(),
                nodes,
            });
            match result {
                SearchResult::Found(c) => {
                    for (local, &e) in origin.iter().enumerate() {
                        witness.colors[e.0] = c.colors[local];
                    }
                    best = best.max(k);
                    break;
                }
                SearchResult::Exhausted => {}
                SearchResult::BudgetExceeded => {
                    return Err(SolveError::BudgetExceeded { k, nodes });
                }
            }
        }
    }
    Ok(SolveOutcome {
        impropriety: best,
        witness,
        stats: SolveStats {
            nodes: total_nodes,
            elapsed: start.elapsed(),
            attempts,
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{complete, cycle, path, wheel};

    fn mu(g: &Graph) -> usize {
        exact_impropriety(g, &SearchBudget::default())
            .unwrap()
            .impropriety
    }

    #[test]
    fn triangle_needs_two() {
        let g = complete(3).unwrap();
        let b = SearchBudget::default();
        assert_eq!(
            exists_k_improper(&g, 1, &b).unwrap().0,
            SearchResult::Exhausted
        );
        assert!(matches!(
            exists_k_improper(&g, 2, &b).unwrap().0,
            SearchResult::Found(_)
        ));
    }

    #[test]
    fn small_known_values() {
        assert_eq!(mu(&complete(4).unwrap()), 1);
        assert_eq!(mu(&complete(5).unwrap()), 2);
        assert_eq!(mu(&cycle(4).unwrap()), 1);
        assert_eq!(mu(&cycle(5).unwrap()), 2);
        assert_eq!(mu(&path(7).unwrap()), 1);
        assert_eq!(mu(&wheel(7).unwrap()), 1);
        assert_eq!(mu(&wheel(6).unwrap()), 2);
    }

    #[test]
    fn components_take_the_maximum() {
        let g = Graph::new(7, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 6)]).unwrap();
        let out = exact_impropriety(&g, &SearchBudget::default()).unwrap();
        assert_eq!(out.impropriety, 2);
        assert!(verify(&g, &out.witness).unwrap().within(2));
        assert_eq!(mu(&Graph::empty(4)), 0);
    }

    #[test]
    fn errors() {
        let b = SearchBudget::default();
        let two_edges = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(
            exists_k_improper(&two_edges, 1, &b),
            Err(SolveError::Disconnected)
        );
        assert_eq!(
            exists_k_improper(&path(3).unwrap(), 0, &b),
            Err(SolveError::ZeroK)
        );
    }

    #[test]
    fn node_budget_is_reported() {
        let budget = SearchBudget {
            max_nodes: Some(10),
            threads: Some(1),
            ..SearchBudget::default()
        };
        let r = exact_impropriety(&wheel(9).unwrap(), &budget);
        assert!(matches!(r, Err(SolveError::BudgetExceeded { k: 1, .. })));
    }

    #[test]
    fn threads_do_not_change_answers() {
        for threads in [1, 3] {
            let b = SearchBudget {
                threads: Some(threads),
                ..SearchBudget::default()
            };
            assert_eq!(
                exact_impropriety(&wheel(8).unwrap(), &b)
                    .unwrap()
                    .impropriety,
                2
            );
            let (r1, _) = exists_k_improper(&complete(6).unwrap(), 1, &b).unwrap();
            assert!(matches!(r1, SearchResult::Found(_)));
        }
    }
}
