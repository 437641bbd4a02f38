//! Generators for the graph families the constructions color.

pub mod basic;
pub mod enumerate;
pub mod products;
pub mod traces;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::Graph;

pub use basic::{
    caterpillar, complete, complete_multipartite, cycle, path, random_maximal_outerplanar,
    random_tree, spider, square_of_path, star, wheel,
};
pub use enumerate::{
    enumerate_connected_by_edges, enumerate_connected_graphs, enumerate_maximal_outerplanar,
    enumerate_two_trees, polygon_triangulation_count,
};
pub use products::{corona, strong_product, CoronaLayout};
pub use traces::{TriangulationTrace, TwoPathSequence, TwoTreeTrace};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("invalid {family} parameters: {reason}")]
    Invalid { family: String, reason: String },
    #[error("{what} must be in {lo}..={hi}, got {got}")]
    OutOfRange {
        what: String,
        lo: usize,
        hi: usize,
        got: usize,
    },
}

impl FamilyError {
    pub(crate) fn invalid(family: &str, reason: impl Into<String>) -> Self {
        FamilyError::Invalid {
            family: family.to_string(),
            reason: reason.into(),
        }
    }
}

/// Declarative description of one generated graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum FamilyRecipe {
    Path {
        n: usize,
    },
    Cycle {
        n: usize,
    },
    Star {
        leaves: usize,
    },
    Spider {
        legs: Vec<usize>,
    },
    /// `leaves[i]` pendant vertices on spine vertex `i`.
    Caterpillar {
        leaves: Vec<usize>,
    },
    Wheel {
        n: usize,
    },
    Complete {
        n: usize,
    },
    CompleteMultipartite {
        parts: Vec<usize>,
    },
    SquareOfPath {
        n: usize,
    },
    TwoPath {
        #[serde(default)]
        triangles: usize,
        #[serde(default)]
        seed: u64,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        sequence: Option<TwoPathSequence>,
    },
    TwoTree {
        #[serde(default)]
        n: usize,
        #[serde(default)]
        seed: u64,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        trace: Option<TwoTreeTrace>,
    },
    IteratedTriangulation {
        n: usize,
    },
    Corona {
        base: Box<FamilyRecipe>,
        fiber: Box<FamilyRecipe>,
    },
    StrongProduct {
        left: Box<FamilyRecipe>,
        right: Box<FamilyRecipe>,
    },
    Tree {
        n: usize,
        seed: u64,
    },
    MaximalOuterplanar {
        n: usize,
        seed: u64,
    },
}

impl FamilyRecipe {
    /// `K_{s,t,s,t,...}` with `m` parts.
    pub fn alternating_multipartite(s: usize, t: usize, m: usize) -> FamilyRecipe {
        FamilyRecipe::CompleteMultipartite {
            parts: (0..m).map(|i| if i % 2 == 0 { s } else { t }).collect(),
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            FamilyRecipe::Path { .. } => "path",
            FamilyRecipe::Cycle { .. } => "cycle",
            FamilyRecipe::Star { .. } => "star",
            FamilyRecipe::Spider { .. } => "spider",
            FamilyRecipe::Caterpillar { .. } => "caterpillar",
            FamilyRecipe::Wheel { .. } => "wheel",
            FamilyRecipe::Complete { .. } => "complete",
            FamilyRecipe::CompleteMultipartite { .. } => "complete_multipartite",
            FamilyRecipe::SquareOfPath { .. } => "square_of_path",
            FamilyRecipe::TwoPath { .. } => "two_path",
            FamilyRecipe::TwoTree { .. } => "two_tree",
            FamilyRecipe::IteratedTriangulation { .. } => "iterated_triangulation",
            FamilyRecipe::Corona { .. } => "corona",
            FamilyRecipe::StrongProduct { .. } => "strong_product",
            FamilyRecipe::Tree { .. } => "tree",
            FamilyRecipe::MaximalOuterplanar { .. } => "maximal_outerplanar",
        }
    }
}

/// Parts `A_1, B_1, A_2, B_2, ...` of a complete multipartite graph, each a
/// list of vertex indices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MultipartiteLabels {
    pub parts: Vec<Vec<usize>>,
}

impl MultipartiteLabels {
    pub fn part_of(&self, v: usize) -> Option<usize> {
        self.parts.iter().position(|p| p.contains(&v))
    }

    /// 0-based index of the `(A_i, B_i)` pair holding `v`.
    pub fn pair_index(&self, v: usize) -> Option<usize> {
        self.part_of(v).map(|p| p / 2)
    }

    /// 1-based position of `v` inside its part.
    pub fn within_part_index(&self, v: usize) -> Option<usize> {
        let p = self.part_of(v)?;
        self.parts[p].iter().position(|&w| w == v).map(|i| i + 1)
    }

    /// `(s, t)` when the part sizes alternate `s, t, s, t, ...`.
    pub fn alternating_sizes(&self) -> Option<(usize, usize)> {
        let s = self.parts.first()?.len();
        let t = self.parts.get(1).map_or(0, Vec::len);
        self.parts
            .iter()
            .enumerate()
            .all(|(i, p)| p.len() == if i % 2 == 0 { s } else { t })
            .then_some((s, t))
    }

    /// Display name `x_{i,j}` / `y_{i,j}` for parts of an alternating
    /// graph, `p{part}_{j}` otherwise.
    pub fn vertex_name(&self, v: usize) -> Option<String> {
        let p = self.part_of(v)?;
        let j = self.within_part_index(v)?;
        Some(
            if self.parts.len().is_multiple_of(2) && self.alternating_sizes().is_some() {
                let letter = if p % 2 == 0 { 'x' } else { 'y' };
                format!("{letter}{},{j}", p / 2 + 1)
            } else {
                format!("p{}_{j}", p + 1)
            },
        )
    }
}

/// Construction metadata produced alongside a generated graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum FamilyMeta {
    None,
    Multipartite(MultipartiteLabels),
    TwoPath(TwoPathSequence),
    TwoTree(TwoTreeTrace),
    Triangulation(TriangulationTrace),
    Corona(CoronaLayout),
    Outerplanar { outer_cycle: Vec<usize> },
}

pub fn generate(recipe: &FamilyRecipe) -> Result<(Graph, FamilyMeta), FamilyError> {
    let plain = |g: Result<Graph, FamilyError>| g.map(|g| (g, FamilyMeta::None));
    match recipe {
        FamilyRecipe::Path { n } => plain(path(*n)),
        FamilyRecipe::Cycle { n } => plain(cycle(*n)),
        FamilyRecipe::Star { leaves } => plain(star(*leaves)),
        FamilyRecipe::Spider { legs } => plain(spider(legs)),
        FamilyRecipe::Caterpillar { leaves } => plain(caterpillar(leaves)),
        FamilyRecipe::Wheel { n } => plain(wheel(*n)),
        FamilyRecipe::Complete { n } => plain(complete(*n)),
        FamilyRecipe::CompleteMultipartite { parts } => {
            let (g, labels) = complete_multipartite(parts)?;
            Ok((g, FamilyMeta::Multipartite(labels)))
        }
        FamilyRecipe::SquareOfPath { n } => plain(square_of_path(*n)),
        FamilyRecipe::TwoPath {
            triangles,
            seed,
            sequence,
        } => {
            let seq = match sequence {
                Some(s) => s.clone(),
                None => TwoPathSequence::random(*triangles, &mut ChaCha8Rng::seed_from_u64(*seed)),
            };
            Ok((seq.to_graph()?, FamilyMeta::TwoPath(seq)))
        }
        FamilyRecipe::TwoTree { n, seed, trace } => {
            let trace = match trace {
                Some(t) => t.clone(),
                None => TwoTreeTrace::random(*n, &mut ChaCha8Rng::seed_from_u64(*seed))?,
            };
            Ok((trace.to_graph()?, FamilyMeta::TwoTree(trace)))
        }
        FamilyRecipe::IteratedTriangulation { n } => {
            let trace = TriangulationTrace::new(*n);
            Ok((trace.to_graph(), FamilyMeta::Triangulation(trace)))
        }
        FamilyRecipe::Corona { base, fiber } => {
            let (g, _) = generate(base)?;
            let (h, _) = generate(fiber)?;
            let (gh, layout) = corona(&g, &h)?;
            Ok((gh, FamilyMeta::Corona(layout)))
        }
        FamilyRecipe::StrongProduct { left, right } => {
            let (g, _) = generate(left)?;
            let (h, _) = generate(right)?;
            plain(strong_product(&g, &h))
        }
        FamilyRecipe::Tree { n, seed } => {
            plain(random_tree(*n, &mut ChaCha8Rng::seed_from_u64(*seed)))
        }
        FamilyRecipe::MaximalOuterplanar { n, seed } => {
            let (g, outer) = random_maximal_outerplanar(*n, &mut ChaCha8Rng::seed_from_u64(*seed))?;
            Ok((g, FamilyMeta::Outerplanar { outer_cycle: outer }))
        }
    }
}
