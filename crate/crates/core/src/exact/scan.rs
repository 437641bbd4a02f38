//! Exact values over a set of instances, checked against a bound in Δ.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use super::{exact_impropriety, SearchBudget, SolveError};
use crate::graph::Graph;

/// The bounds a scan can check, as functions of the maximum degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Bound {
    Two,
    CeilDeltaOver3,
    CeilDeltaOver4Plus1,
    CeilDeltaOver5,
    Delta,
}

impl Bound {
    pub const ALL: [Bound; 5] = [
        Bound::Two,
        Bound::CeilDeltaOver3,
        Bound::CeilDeltaOver4Plus1,
        Bound::CeilDeltaOver5,
        Bound::Delta,
    ];

    pub fn eval(self, delta: usize) -> usize {
        match self {
            Bound::Two => 2,
            Bound::CeilDeltaOver3 => delta.div_ceil(3),
            Bound::CeilDeltaOver4Plus1 => delta.div_ceil(4) + 1,
            Bound::CeilDeltaOver5 => delta.div_ceil(5),
            Bound::Delta => delta,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Bound::Two => "2",
            Bound::CeilDeltaOver3 => "ceil(delta/3)",
            Bound::CeilDeltaOver4Plus1 => "ceil(delta/4)+1",
            Bound::CeilDeltaOver5 => "ceil(delta/5)",
            Bound::Delta => "delta",
        }
    }
}

impl fmt::Display for Bound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Bound {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        Bound::ALL
            .into_iter()
            .find(|b| b.name() == compact)
            .ok_or_else(|| {
                let names: Vec<_> = Bound::ALL.iter().map(|b| b.name()).collect();
                format!("unknown bound {s:?}; expected one of {}", names.join(", "))
            })
    }
}

/// One graph to scan, tagged with its family and an instance id.
#[derive(Debug, Clone)]
pub struct ScanInstance {
    pub family: String,
    pub instance_id: String,
    pub graph: Graph,
}

/// One CSV row. `mu` is empty when the budget ran out.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanRow {
    pub family: String,
    pub instance_id: String,
    pub n: usize,
    pub m: usize,
    pub delta: usize,
    pub mu: Option<usize>,
    pub bound: usize,
    pub ok: bool,
    pub nodes: u64,
    pub ms: u128,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ScanReport {
    pub rows: Vec<ScanRow>,
}

impl ScanReport {
    /// Instances whose exact value exceeds the bound.
    pub fn violations(&self) -> impl Iterator<Item = &ScanRow> {
        self.rows.iter().filter(|r| r.mu.is_some() && !r.ok)
    }

    pub fn budget_exceeded(&self) -> impl Iterator<Item = &ScanRow> {
        self.rows.iter().filter(|r| r.mu.is_none())
    }

    pub fn max_mu(&self) -> Option<usize> {
        self.rows.iter().filter_map(|r| r.mu).max()
    }

    pub fn write_csv<W: std::io::Write>(&self, out: W) -> csv::Result<()> {
        let mut w = csv::Writer::from_writer(out);
        for row in &self.rows {
            w.serialize(row)?;
        }
        w.flush()?;
        Ok(())
    }

    pub fn to_csv(&self) -> String {
        let mut buf = Vec::new();
        self.write_csv(&mut buf).expect("writing to memory");
        String::from_utf8(buf).expect("csv is utf-8")
    }
}

pub fn conjecture_scan(
    instances: impl IntoIterator<Item = ScanInstance>,
    bound: Bound,
    budget: &SearchBudget,
) -> ScanReport {
    let mut rows = Vec::new();
    for inst in instances {
        let start = Instant::now();
        let g = &inst.graph;
        let delta = g.max_degree();
        let limit = bound.eval(delta);
        let (mu, nodes) = match exact_impropriety(g, budget) {
            Ok(out) => (Some(out.impropriety), out.stats.nodes),
            Err(SolveError::BudgetExceeded { nodes, .. }) => (None, nodes),
            Err(e) => unreachable!("component-wise solve cannot fail with {e}"),
        };
        rows.push(ScanRow {
            family: inst.family,
            instance_id: inst.instance_id,
            n: g.vertex_count(),
            m: g.edge_count(),
            delta,
            mu,
            bound: limit,
            ok: mu.is_some_and(|v| v <= limit),
            nodes,
            ms: start.elapsed().as_millis(),
        });
    }
    ScanReport { rows }
}
