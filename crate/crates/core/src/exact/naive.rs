//! Reference decision procedure with no search-specific pruning.
//!
//! Colors every edge, in edge-list order, with a value from
//! `[0, Σ(d(v) - 1)]` and rejects a partial coloring only when it already
//! violates the definition: a color used more than `k` times at a vertex,
//! or a vertex whose edges are all colored but do not form an interval.
//! Kept deliberately separate from the pruned solver so the two can be
//! compared.

use crate::coloring::EdgeColoring;
use crate::graph::Graph;

/// A `k`-improper interval coloring of a connected graph with minimum
/// color 0, if one exists.
pub fn naive_k_improper(g: &Graph, k: usize) -> Option<EdgeColoring> {
    let m = g.edge_count();
    if m == 0 {
        return Some(EdgeColoring::new(Vec::new()));
    }
    let span: i64 = g
        .degrees()
        .iter()
        .map(|&d| d.saturating_sub(1) as i64)
        .sum();
    // Vertex v is saturated once the edge at position last[v] is colored.
    let mut last = vec![0usize; g.vertex_count()];
    for (i, &(u, v)) in g.edges().iter().enumerate() {
        last[u] = i;
        last[v] = i;
    }
    let mut colors = vec![0i64; m];
    if assign(g, k, span, &last, &mut colors, 0) {
        Some(EdgeColoring::new(colors))
    } else {
        None
    }
}

fn multiplicity_ok(g: &Graph, colors: &[i64], pos: usize, v: usize, k: usize) -> bool {
    let c = colors[pos];
    let used = g
        .incident(v)
        .iter()
        .filter(|&&(_, e)| e.0 <= pos && colors[e.0] == c)
        .count();
    used <= k
}

fn is_interval(g: &Graph, colors: &[i64], v: usize) -> bool {
    let mut cs: Vec<i64> = g.incident(v).iter().map(|&(_, e)| colors[e.0]).collect();
    cs.sort_unstable();
    cs.dedup();
    cs.windows(2).all(|w| w[1] == w[0] + 1)
}

fn assign(g: &Graph, k: usize, span: i64, last: &[usize], colors: &mut [i64], pos: usize) -> bool {
    if pos == colors.len() {
        return colors.iter().min() == Some(&0);
    }
    let (u, v) = g.edges()[pos];
    for c in 0..=span {
        colors[pos] = c;
        let ok = [u, v].iter().all(|&x| {
            multiplicity_ok(g, colors, pos, x, k) && (last[x] != pos || is_interval(g, colors, x))
        });
        if ok && assign(g, k, span, last, colors, pos + 1) {
            return true;
        }
    }
    false
}

/// Smallest `k` for which [`naive_k_improper`] succeeds, taken over the
/// connected components; 0 for edgeless graphs.
pub fn naive_impropriety(g: &Graph) -> usize {
    g.components()
        .iter()
        .map(|comp| {
            let (h, _) = g.induced(comp);
            (1..=h.max_degree())
                .find(|&k| naive_k_improper(&h, k).is_some())
                .unwrap_or(0)
        })
        .max()
        .unwrap_or(0)
}
