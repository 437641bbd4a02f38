//! Edge colorings and the interval/impropriety verifier.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{EdgeId, Graph};

/// A total map from edge ids to signed integer colors.
///
/// Colors are never shifted implicitly; call [`EdgeColoring::normalized`]
/// to move the minimum to 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct EdgeColoring {
    pub colors: Vec<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ColoringError {
    #[error("coloring has {got} colors but the graph has {expected} edges")]
    WrongLength { expected: usize, got: usize },
    #[error("cannot normalize an empty coloring")]
    Empty,
}

impl EdgeColoring {
    pub fn new(colors: Vec<i64>) -> Self {
        EdgeColoring { colors }
    }

    pub fn monochromatic(edges: usize, color: i64) -> Self {
        EdgeColoring {
            colors: vec![color; edges],
        }
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn get(&self, e: EdgeId) -> i64 {
        self.colors[e.0]
    }

    pub fn set(&mut self, e: EdgeId, c: i64) {
        self.colors[e.0] = c;
    }

    pub fn min_color(&self) -> Option<i64> {
        self.colors.iter().copied().min()
    }

    pub fn max_color(&self) -> Option<i64> {
        self.colors.iter().copied().max()
    }

    pub fn shifted(&self, by: i64) -> EdgeColoring {
        EdgeColoring {
            colors: self.colors.iter().map(|c| c + by).collect(),
        }
    }

    pub fn reflected(&self) -> EdgeColoring {
        EdgeColoring {
            colors: self.colors.iter().map(|c| -c).collect(),
        }
    }

    /// Shift so the smallest color is 1.
    pub fn normalized(&self) -> Result<EdgeColoring, ColoringError> {
        let min = self.min_color().ok_or(ColoringError::Empty)?;
        Ok(self.shifted(1 - min))
    }
}

pub fn normalize(c: &EdgeColoring) -> Result<EdgeColoring, ColoringError> {
    c.normalized()
}

/// Color statistics at one vertex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexProfile {
    pub vertex: usize,
    /// Incident colors, sorted ascending (a multiset).
    pub colors: Vec<i64>,
    pub min_color: Option<i64>,
    pub max_color: Option<i64>,
    pub distinct_count: usize,
    pub max_multiplicity: usize,
    pub is_interval: bool,
}

impl VertexProfile {
    fn build(vertex: usize, mut colors: Vec<i64>) -> Self {
        colors.sort_unstable();
        let mut distinct_count = 0;
        let mut max_multiplicity = 0;
        let mut run = 0;
        for (i, &c) in colors.iter().enumerate() {
            if i > 0 && colors[i - 1] == c {
                run += 1;
            } else {
                distinct_count += 1;
                run = 1;
            }
            max_multiplicity = max_multiplicity.max(run);
        }
        let min_color = colors.first().copied();
        let max_color = colors.last().copied();
        let is_interval = match (min_color, max_color) {
            (Some(lo), Some(hi)) => (hi - lo + 1) as usize == distinct_count,
            // isolated vertex: vacuously an interval
            _ => true,
        };
        VertexProfile {
            vertex,
            colors,
            min_color,
            max_color,
            distinct_count,
            max_multiplicity,
            is_interval,
        }
    }

    /// Integers strictly inside `[min, max]` that no incident edge uses.
    pub fn missing_colors(&self) -> Vec<i64> {
        match (self.min_color, self.max_color) {
            (Some(lo), Some(hi)) => (lo..=hi)
                .filter(|c| self.colors.binary_search(c).is_err())
                .collect(),
            _ => Vec::new(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub vertices: Vec<VertexProfile>,
    pub all_intervals: bool,
    /// Maximum multiplicity over all vertices. Only meaningful as an
    /// impropriety when `all_intervals` holds; 0 for edgeless graphs.
    pub max_multiplicity: usize,
}

/// Result of asking a report for its impropriety.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Impropriety {
    Value(usize),
    NotInterval,
}

impl Impropriety {
    pub fn value(self) -> Option<usize> {
        match self {
            Impropriety::Value(k) => Some(k),
            Impropriety::NotInterval => None,
        }
    }
}

impl fmt::Display for Impropriety {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Impropriety::Value(k) => write!(f, "{k}"),
            Impropriety::NotInterval => f.write_str("not an interval coloring"),
        }
    }
}

impl VerificationReport {
    pub fn impropriety(&self) -> Impropriety {
        if self.all_intervals {
            Impropriety::Value(self.max_multiplicity)
        } else {
            Impropriety::NotInterval
        }
    }

    /// Vertices whose incident colors do not form an interval.
    pub fn gap_vertices(&self) -> impl Iterator<Item = &VertexProfile> {
        self.vertices.iter().filter(|p| !p.is_interval)
    }

    /// True when the coloring is an interval coloring with impropriety at
    /// most `k`.
    pub fn within(&self, k: usize) -> bool {
        self.all_intervals && self.max_multiplicity <= k
    }
}

pub fn verify(g: &Graph, c: &EdgeColoring) -> Result<VerificationReport, ColoringError> {
    if c.len() != g.edge_count() {
        return Err(ColoringError::WrongLength {
            expected: g.edge_count(),
            got: c.len(),
        });
    }
    let vertices: Vec<VertexProfile> = (0..g.vertex_count())
        .map(|v| {
            let colors = g.incident(v).iter().map(|&(_, e)| c.get(e)).collect();
            VertexProfile::build(v, colors)
        })
        .collect();
    let all_intervals = vertices.iter().all(|p| p.is_interval);
    let max_multiplicity = vertices
        .iter()
        .map(|p| p.max_multiplicity)
        .max()
        .unwrap_or(0);
    Ok(VerificationReport {
        vertices,
        all_intervals,
        max_multiplicity,
    })
}

pub fn impropriety_of(report: &VerificationReport) -> Impropriety {
    report.impropriety()
}
