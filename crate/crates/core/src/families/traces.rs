//! Construction traces for 2-paths, 2-trees and iterated triangulations.

use std::collections::HashSet;

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::FamilyError;
use crate::graph::Graph;

fn key(u: usize, v: usize) -> (usize, usize) {
    (u.min(v), u.max(v))
}

/// `(e_0, t_1, e_1, ..., t_n, e_n)`: `edges` holds `e_0..e_n` and
/// `triangles` holds `t_1..t_n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwoPathSequence {
    pub edges: Vec<(usize, usize)>,
    pub triangles: Vec<[usize; 3]>,
}

impl TwoPathSequence {
    /// Number of triangles `n`.
    pub fn len(&self) -> usize {
        self.triangles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.triangles.is_empty()
    }

    /// For each triangle, the edge that is not one of the listed `e_i`.
    /// Fails if the sequence is not a 2-path.
    pub fn remaining_edges(&self) -> Result<Vec<(usize, usize)>, FamilyError> {
        let bad = |why: String| FamilyError::invalid("two_path", why);
        if self.edges.len() != self.triangles.len() + 1 {
            return Err(bad(format!(
                "{} edges for {} triangles",
                self.edges.len(),
                self.triangles.len()
            )));
        }
        let listed: HashSet<_> = self.edges.iter().map(|&(u, v)| key(u, v)).collect();
        if listed.len() != self.edges.len() || self.edges.iter().any(|&(u, v)| u == v) {
            return Err(bad("listed edges are not distinct".into()));
        }
        let mut rest = Vec::with_capacity(self.triangles.len());
        let mut seen_rest = HashSet::new();
        for (i, t) in self.triangles.iter().enumerate() {
            if t[0] == t[1] || t[1] == t[2] || t[0] == t[2] {
                return Err(bad(format!("t_{} repeats a vertex", i + 1)));
            }
            let sides = [key(t[0], t[1]), key(t[1], t[2]), key(t[0], t[2])];
            let on: Vec<_> = sides.iter().filter(|s| listed.contains(s)).collect();
            let prev = key(self.edges[i].0, self.edges[i].1);
            let next = key(self.edges[i + 1].0, self.edges[i + 1].1);
            if on.len() != 2 || !sides.contains(&prev) || !sides.contains(&next) {
                return Err(bad(format!(
                    "t_{} must contain exactly e_{} and e_{} among the listed edges",
                    i + 1,
                    i,
                    i + 1
                )));
            }
            let other = *sides
                .iter()
                .find(|s| **s != prev && **s != next)
                .expect("three sides, two listed");
            if !seen_rest.insert(other) {
                return Err(bad(format!(
                    "t_{} reuses a side of an earlier triangle",
                    i + 1
                )));
            }
            rest.push(other);
        }
        Ok(rest)
    }

    /// Graph with edges `e_0..e_n` followed by the remaining triangle sides
    /// `r_1..r_n`.
    pub fn to_graph(&self) -> Result<Graph, FamilyError> {
        let rest = self.remaining_edges()?;
        let n = self
            .edges
            .iter()
            .flat_map(|&(u, v)| [u, v])
            .chain(self.triangles.iter().flatten().copied())
            .max()
            .map_or(0, |m| m + 1);
        let edges = self.edges.iter().copied().chain(rest);
        Graph::new(n, edges).map_err(|e| FamilyError::invalid("two_path", e.to_string()))
    }

    /// Random 2-path with `triangles` triangles: each new vertex closes a
    /// triangle on the previous listed edge, and one of its two new sides
    /// becomes the next listed edge.
    pub fn random(triangles: usize, rng: &mut ChaCha8Rng) -> TwoPathSequence {
        let mut edges = vec![(0, 1)];
        let mut tris = Vec::with_capacity(triangles);
        for i in 1..=triangles {
            let w = i + 1;
            let (a, b) = edges[i - 1];
            tris.push([a, b, w]);
            let keep = if rng.gen_bool(0.5) { a } else { b };
            edges.push((keep, w));
        }
        TwoPathSequence {
            edges,
            triangles: tris,
        }
    }

    /// The 2-path with 12 triangles on vertices a..n (0..14) drawn in the
    /// reference example.
    pub fn reference_example() -> TwoPathSequence {
        let [a, b, c, d, e, f, g, h, i, j, k, l, m, n] =
            [0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13];
        TwoPathSequence {
            edges: vec![
                (a, c),
                (c, b),
                (d, b),
                (e, b),
                (f, b),
                (f, g),
                (h, f),
                (h, i),
                (i, j),
                (i, k),
                (i, l),
                (l, m),
                (n, m),
            ],
            triangles: vec![
                [a, c, b],
                [c, b, d],
                [d, b, e],
                [e, b, f],
                [f, b, g],
                [f, g, h],
                [h, f, i],
                [h, i, j],
                [i, j, k],
                [i, k, l],
                [i, l, m],
                [l, m, n],
            ],
        }
    }
}

/// Simplicial elimination record of a 2-tree: the base triangle, then each
/// added vertex with the edge it was attached to.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwoTreeTrace {
    pub base: [usize; 3],
    pub additions: Vec<(usize, (usize, usize))>,
}

impl TwoTreeTrace {
    pub fn vertex_count(&self) -> usize {
        3 + self.additions.len()
    }

    /// Replays the additions. Edge order: the base triangle
    /// `(b0,b1), (b1,b2), (b0,b2)`, then `(v,u), (v,w)` per addition.
    pub fn to_graph(&self) -> Result<Graph, FamilyError> {
        let bad = |why: String| FamilyError::invalid("two_tree", why);
        let n = self.vertex_count();
        let [b0, b1, b2] = self.base;
        let mut edges = vec![(b0, b1), (b1, b2), (b0, b2)];
        let mut present: HashSet<_> = edges.iter().map(|&(u, v)| key(u, v)).collect();
        let mut placed: HashSet<usize> = self.base.iter().copied().collect();
        if placed.len() != 3 || self.base.iter().any(|&v| v >= n) {
            return Err(bad("base must be three distinct vertices".into()));
        }
        for &(v, (u, w)) in &self.additions {
            if v >= n || !placed.insert(v) {
                return Err(bad(format!("vertex {v} added twice or out of range")));
            }
            if !present.contains(&key(u, w)) {
                return Err(bad(format!("({u}, {w}) is not an edge when {v} is added")));
            }
            edges.push((v, u));
            edges.push((v, w));
            present.insert(key(v, u));
            present.insert(key(v, w));
        }
        Graph::new(n, edges).map_err(|e| bad(e.to_string()))
    }

    /// Random 2-tree: base triangle `0,1,2`, vertex `v` attaches to a
    /// uniformly chosen existing edge.
    pub fn random(n: usize, rng: &mut ChaCha8Rng) -> Result<TwoTreeTrace, FamilyError> {
        if n < 3 {
            return Err(FamilyError::invalid(
                "two_tree",
                "needs at least 3 vertices",
            ));
        }
        let mut edges = vec![(0, 1), (1, 2), (0, 2)];
        let mut additions = Vec::with_capacity(n - 3);
        for v in 3..n {
            let (u, w) = edges[rng.gen_range(0..edges.len())];
            additions.push((v, (u, w)));
            edges.push((v, u));
            edges.push((v, w));
        }
        Ok(TwoTreeTrace {
            base: [0, 1, 2],
            additions,
        })
    }
}

/// Per-level record of an iterated triangulation. Level `i` (1-based in
/// `levels[i-1]`) lists each new vertex with the counterclockwise boundary
/// of the face it was placed in. The outer face is `(0, 1, 2)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TriangulationTrace {
    pub levels: Vec<Vec<(usize, [usize; 3])>>,
}

impl TriangulationTrace {
    pub fn new(n: usize) -> TriangulationTrace {
        let mut faces = vec![[0usize, 1, 2]];
        let mut next = 3;
        let mut levels = Vec::with_capacity(n);
        for _ in 0..n {
            let mut level = Vec::with_capacity(faces.len());
            let mut new_faces = Vec::with_capacity(3 * faces.len());
            for &[a, b, c] in &faces {
                let v = next;
                next += 1;
                level.push((v, [a, b, c]));
                new_faces.extend([[a, b, v], [b, c, v], [c, a, v]]);
            }
            levels.push(level);
            faces = new_faces;
        }
        TriangulationTrace { levels }
    }

    pub fn depth(&self) -> usize {
        self.levels.len()
    }

    pub fn vertex_count(&self) -> usize {
        3 + self.levels.iter().map(Vec::len).sum::<usize>()
    }

    /// Outer triangle `(0,1), (1,2), (2,0)`, then `(v,u1), (v,u2), (v,u3)`
    /// for each new vertex in trace order.
    pub fn to_graph(&self) -> Graph {
        let mut edges = vec![(0, 1), (1, 2), (2, 0)];
        for level in &self.levels {
            for &(v, [a, b, c]) in level {
                edges.extend([(v, a), (v, b), (v, c)]);
            }
        }
        Graph::new(self.vertex_count(), edges).expect("triangulation is simple")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    #[test]
    fn reference_two_path_is_valid() {
        let seq = TwoPathSequence::reference_example();
        let g = seq.to_graph().unwrap();
        assert_eq!(seq.len(), 12);
        assert_eq!(g.vertex_count(), 14);
        assert_eq!(g.edge_count(), 2 * 14 - 3);
    }

    #[test]
    fn malformed_two_path_is_rejected() {
        let seq = TwoPathSequence {
            edges: vec![(0, 1), (2, 3)],
            triangles: vec![[0, 1, 2]],
        };
        assert!(seq.to_graph().is_err());
        let repeated = TwoPathSequence {
            edges: vec![(0, 1), (0, 1)],
            triangles: vec![[0, 1, 2]],
        };
        assert!(repeated.to_graph().is_err());
    }

    #[test]
    fn trace_mismatch_is_rejected() {
        let trace = TwoTreeTrace {
            base: [0, 1, 2],
            additions: vec![(3, (0, 1)), (4, (3, 2))],
        };
        assert!(trace.to_graph().is_err());
    }

    #[test]
    fn random_two_tree_has_2n_minus_3_edges() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let g = TwoTreeTrace::random(15, &mut rng)
            .unwrap()
            .to_graph()
            .unwrap();
        assert_eq!(g.edge_count(), 27);
    }

    #[test]
    fn triangulation_sizes() {
        for n in 0..=5 {
            let g = TriangulationTrace::new(n).to_graph();
            let added: usize = (0..n).map(|i| 3usize.pow(i as u32)).sum();
            assert_eq!(g.vertex_count(), 3 + added);
            assert_eq!(g.edge_count(), 3 + 3 * added);
        }
        let tr2 = TriangulationTrace::new(2).to_graph();
        assert_eq!((tr2.vertex_count(), tr2.edge_count()), (7, 15));
        assert_eq!(tr2.max_degree(), 6);
    }
}
