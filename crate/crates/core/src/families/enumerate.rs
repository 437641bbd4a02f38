//! Exhaustive enumeration of small graph classes up to isomorphism.

use std::collections::HashSet;

use super::traces::TwoTreeTrace;
use super::FamilyError;
use crate::certificate::certificate;
use crate::graph::Graph;

fn out_of_range(what: &str, lo: usize, hi: usize, got: usize) -> FamilyError {
    FamilyError::OutOfRange {
        what: what.to_string(),
        lo,
        hi,
        got,
    }
}

/// All pairwise non-isomorphic 2-trees on `n` vertices, each with a trace
/// that rebuilds it. Supported for `3 <= n <= 10`.
pub fn enumerate_two_trees(n: usize) -> Result<Vec<(Graph, TwoTreeTrace)>, FamilyError> {
    if !(3..=10).contains(&n) {
        return Err(out_of_range("two-tree order", 3, 10, n));
    }
    let base = TwoTreeTrace {
        base: [0, 1, 2],
        additions: Vec::new(),
    };
    let mut level = vec![(base.to_graph()?, base)];
    for v in 3..n {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for (g, trace) in &level {
            for &(a, b) in g.edges() {
                let mut t = trace.clone();
                t.additions.push((v, (a, b)));
                let h = t.to_graph()?;
                if seen.insert(certificate(&h).expect("n <= 10")) {
                    next.push((h, t));
                }
            }
        }
        level = next;
    }
    Ok(level)
}

/// Triangulations of the convex polygon on `lo..=hi`, as diagonal lists.
fn polygon_triangulations(lo: usize, hi: usize) -> Vec<Vec<(usize, usize)>> {
    if hi - lo < 2 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for apex in lo + 1..hi {
        let left = polygon_triangulations(lo, apex);
        let right = polygon_triangulations(apex, hi);
        for l in &left {
            for r in &right {
                let mut d = Vec::with_capacity(l.len() + r.len() + 2);
                if apex > lo + 1 {
                    d.push((lo, apex));
                }
                if apex + 1 < hi {
                    d.push((apex, hi));
                }
                d.extend_from_slice(l);
                d.extend_from_slice(r);
                out.push(d);
            }
        }
    }
    out
}

/// Number of triangulations of a convex `n`-gon (before isomorphism
/// reduction); the Catalan number `C_{n-2}`.
pub fn polygon_triangulation_count(n: usize) -> usize {
    if n < 3 {
        return 0;
    }
    polygon_triangulations(0, n - 1).len()
}

/// All non-isomorphic maximal outerplanar graphs on `n` vertices
/// (`3 <= n <= 12`). In every graph the outer cycle is `0, 1, ..., n-1`
/// and its sides are the first `n` edges.
pub fn enumerate_maximal_outerplanar(n: usize) -> Result<Vec<(Graph, Vec<usize>)>, FamilyError> {
    if !(3..=12).contains(&n) {
        return Err(out_of_range("maximal outerplanar order", 3, 12, n));
    }
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for diagonals in polygon_triangulations(0, n - 1) {
        let mut edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        edges.push((n - 1, 0));
        edges.extend(diagonals);
        let g = Graph::new(n, edges).expect("triangulated polygon is simple");
        if seen.insert(certificate(&g).expect("n <= 12")) {
            out.push((g, (0..n).collect()));
        }
    }
    Ok(out)
}

/// All non-isomorphic connected graphs on exactly `n` vertices, `1 <= n <= 6`.
pub fn enumerate_connected_graphs(n: usize) -> Result<Vec<Graph>, FamilyError> {
    if !(1..=6).contains(&n) {
        return Err(out_of_range("connected graph order", 1, 6, n));
    }
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for mask in 0u32..(1 << pairs.len()) {
        if (mask.count_ones() as usize) + 1 < n {
            continue;
        }
        let edges = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask & (1 << i) != 0)
            .map(|(_, &p)| p);
        let g = Graph::new(n, edges).expect("distinct pairs");
        if g.is_connected() && seen.insert(certificate(&g).expect("n <= 6")) {
            out.push(g);
        }
    }
    Ok(out)
}

/// All non-isomorphic connected graphs with between 1 and `max_edges`
/// edges (`max_edges <= 11`), grown one edge at a time: every connected
/// graph with at least two edges loses either a non-bridge edge or a
/// pendant edge and stays connected.
pub fn enumerate_connected_by_edges(max_edges: usize) -> Result<Vec<Graph>, FamilyError> {
    if !(1..=11).contains(&max_edges) {
        return Err(out_of_range("edge count", 1, 11, max_edges));
    }
    let mut level = vec![Graph::new(2, [(0, 1)]).expect("single edge")];
    let mut out = level.clone();
    for _ in 1..max_edges {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for g in &level {
            let n = g.vertex_count();
            let mut candidates = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if !g.has_edge(u, v) {
                        candidates.push((n, (u, v)));
                    }
                }
                candidates.push((n + 1, (u, n)));
            }
            for (order, e) in candidates {
                let h = Graph::new(order, g.edges().iter().copied().chain([e])).expect("new pair");
                if seen.insert(certificate(&h).expect("at most 12 vertices")) {
                    next.push(h);
                }
            }
        }
        out.extend(next.iter().cloned());
        level = next;
    }
    Ok(out)
}
