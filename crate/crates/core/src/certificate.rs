//! Isomorphism certificates for small graphs.
//!
//! The certificate is the lexicographically smallest upper-triangular
//! adjacency string over all vertex orders that respect an
//! isomorphism-invariant colour refinement. The search prunes on the
//! string prefix and skips twins (vertices whose swap is an automorphism).

use serde::{Deserialize, Serialize};

use crate::graph::{Graph, GraphError};

/// Largest vertex count [`certificate`] accepts.
pub const MAX_CERTIFICATE_VERTICES: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Certificate(Vec<u8>);

impl Certificate {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }
}

pub fn certificate(g: &Graph) -> Result<Certificate, GraphError> {
    let n = g.vertex_count();
    if n > MAX_CERTIFICATE_VERTICES {
        return Err(GraphError::TooLarge {
            n,
            max: MAX_CERTIFICATE_VERTICES,
        });
    }
    let adj: Vec<u16> = (0..n)
        .map(|v| g.neighbors(v).fold(0u16, |m, w| m | (1 << w)))
        .collect();
    let colour = refine(g);

    // Positions are filled cell by cell, cells in colour order.
    let mut cell_of_position: Vec<usize> = colour.clone();
    cell_of_position.sort_unstable();

    let mut search = Search {
        n,
        adj: &adj,
        colour: &colour,
        cell_of_position: &cell_of_position,
        order: Vec::with_capacity(n),
        used: 0,
        current: vec![0; n],
        best: None,
    };
    search.descend(0);
    let best = search.best.expect("at least one ordering exists");

    let mut bytes = Vec::with_capacity(1 + 2 * n);
    bytes.push(n as u8);
    for col in best {
        bytes.extend_from_slice(&col.to_le_bytes());
    }
    Ok(Certificate(bytes))
}

/// Equitable colour refinement started from degrees. Colours are ranks of
/// sorted invariant keys, so they do not depend on vertex labels.
fn refine(g: &Graph) -> Vec<usize> {
    let n = g.vertex_count();
    let mut colour: Vec<usize> = g.degrees();
    let mut classes = distinct(&colour);
    loop {
        let keys: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut around: Vec<usize> = g.neighbors(v).map(|w| colour[w]).collect();
                around.sort_unstable();
                (colour[v], around)
            })
            .collect();
        let mut sorted = keys.clone();
        sorted.sort();
        sorted.dedup();
        colour = keys
            .iter()
            .map(|k| sorted.binary_search(k).expect("key present"))
            .collect();
        let next = distinct(&colour);
        if next == classes {
            return colour;
        }
        classes = next;
    }
}

fn distinct(colour: &[usize]) -> usize {
    let mut c = colour.to_vec();
    c.sort_unstable();
    c.dedup();
    c.len()
}

struct Search<'a> {
    n: usize,
    adj: &'a [u16],
    colour: &'a [usize],
    cell_of_position: &'a [usize],
    order: Vec<usize>,
    used: u16,
    current: Vec<u16>,
    best: Option<Vec<u16>>,
}

impl Search<'_> {
    fn descend(&mut self, pos: usize) {
        if pos == self.n {
            if self.best.as_ref().is_none_or(|b| self.current < *b) {
                self.best = Some(self.current.clone());
            }
            return;
        }
        let cell = self.cell_of_position[pos];
        let mut tried: u16 = 0;
        for v in 0..self.n {
            if self.used & (1 << v) != 0 || self.colour[v] != cell {
                continue;
            }
            if self.is_twin_of_tried(v, tried) {
                continue;
            }
            tried |= 1 << v;

            let mut column = 0u16;
            for (i, &u) in self.order.iter().enumerate() {
                if self.adj[v] & (1 << u) != 0 {
                    column |= 1 << i;
                }
            }
            self.current[pos] = column;
            if let Some(best) = &self.best {
                if self.current[..=pos] > best[..=pos] {
                    continue;
                }
            }
            self.order.push(v);
            self.used |= 1 << v;
            self.descend(pos + 1);
            self.used &= !(1 << v);
            self.order.pop();
        }
    }

    fn is_twin_of_tried(&self, v: usize, tried: u16) -> bool {
        (0..self.n).any(|u| {
            tried & (1 << u) != 0 && (self.adj[v] & !(1 << u)) == (self.adj[u] & !(1 << v))
        })
    }
}
