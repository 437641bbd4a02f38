use serde::{Deserialize, Serialize};

use super::FamilyError;
use crate::graph::{EdgeId, Graph};

/// Where each copy of `H` sits inside `G ⊙ H`.
///
/// Base vertices keep `0..|V(G)|`; the copy `H_v` for base vertex `v`
/// occupies `copy_start[v] .. copy_start[v] + fiber_order`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoronaLayout {
    pub base_order: usize,
    pub fiber_order: usize,
    pub copy_start: Vec<usize>,
    /// `copy_edges[v][j]` is the edge of `H_v` that came from edge `j` of H.
    pub copy_edges: Vec<Vec<EdgeId>>,
    /// `attachments[v][x]` joins `v` to the `x`-th vertex of `H_v`.
    pub attachments: Vec<Vec<EdgeId>>,
}

impl CoronaLayout {
    pub fn base_vertices(&self) -> std::ops::Range<usize> {
        0..self.base_order
    }

    pub fn copy_vertex(&self, base: usize, x: usize) -> usize {
        self.copy_start[base] + x
    }
}

/// `G ⊙ H`. Edge order: the edges of G, then per base vertex the copy's
/// edges in H order followed by its attachment edges.
pub fn corona(g: &Graph, h: &Graph) -> Result<(Graph, CoronaLayout), FamilyError> {
    if g.vertex_count() == 0 {
        return Err(FamilyError::invalid(
            "corona",
            "base graph must be nonempty",
        ));
    }
    let base = g.vertex_count();
    let fiber = h.vertex_count();
    let mut edges: Vec<(usize, usize)> = g.edges().to_vec();
    let mut copy_start = Vec::with_capacity(base);
    let mut copy_edges = Vec::with_capacity(base);
    let mut attachments = Vec::with_capacity(base);
    for v in 0..base {
        let start = base + v * fiber;
        copy_start.push(start);
        let mut ids = Vec::with_capacity(h.edge_count());
        for &(a, b) in h.edges() {
            ids.push(EdgeId(edges.len()));
            edges.push((start + a, start + b));
        }
        copy_edges.push(ids);
        let mut att = Vec::with_capacity(fiber);
        for x in 0..fiber {
            att.push(EdgeId(edges.len()));
            edges.push((v, start + x));
        }
        attachments.push(att);
    }
    let graph = Graph::new(base * (1 + fiber), edges).expect("corona of simple graphs is simple");
    Ok((
        graph,
        CoronaLayout {
            base_order: base,
            fiber_order: fiber,
            copy_start,
            copy_edges,
            attachments,
        },
    ))
}

/// `G ⊠ H` on vertex pairs `(u, v) ↦ u * |V(H)| + v`.
pub fn strong_product(g: &Graph, h: &Graph) -> Result<Graph, FamilyError> {
    if g.vertex_count() == 0 || h.vertex_count() == 0 {
        return Err(FamilyError::invalid(
            "strong_product",
            "both factors must be nonempty",
        ));
    }
    let nh = h.vertex_count();
    let id = |u: usize, v: usize| u * nh + v;
    let mut edges = Vec::new();
    let n = g.vertex_count() * nh;
    for a in 0..n {
        let (u1, v1) = (a / nh, a % nh);
        for b in a + 1..n {
            let (u2, v2) = (b / nh, b % nh);
            let gu = u1 == u2;
            let hv = v1 == v2;
            let ga = g.has_edge(u1, u2);
            let ha = h.has_edge(v1, v2);
            if (gu && ha) || (hv && ga) || (ga && ha) {
                edges.push((id(u1, v1), id(u2, v2)));
            }
        }
    }
    Ok(Graph::new(n, edges).expect("strong product is simple"))
}
