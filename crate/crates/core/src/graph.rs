//! Simple undirected graphs with stable edge ids.

use std::collections::{HashSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Position of an edge in a [`Graph`]'s edge list.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct EdgeId(pub usize);

impl EdgeId {
    pub fn index(self) -> usize {
        self.0
    }
}

impl fmt::Display for EdgeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e{}", self.0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("edge {index} is a loop at vertex {vertex}")]
    SelfLoop { index: usize, vertex: usize },
    #[error("edge {index} ({u}, {v}) duplicates edge {first}")]
    DuplicateEdge {
        index: usize,
        first: usize,
        u: usize,
        v: usize,
    },
    #[error("edge {index} has endpoint {vertex} outside 0..{n}")]
    EndpointOutOfRange {
        index: usize,
        vertex: usize,
        n: usize,
    },
    #[error("graph has {n} vertices, at most {max} are supported here")]
    TooLarge { n: usize, max: usize },
}

/// A finite simple undirected graph on vertices `0..n`.
///
/// Edges keep the order (and orientation) they were given in; an edge's
/// position is its [`EdgeId`], which colorings index by.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "GraphJson", into = "GraphJson")]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<(usize, EdgeId)>>,
}

/// Wire form: `{"n": 3, "edges": [[0,1],[1,2]]}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GraphJson {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
}

impl TryFrom<GraphJson> for Graph {
    type Error = GraphError;

    fn try_from(raw: GraphJson) -> Result<Self, Self::Error> {
        Graph::new(raw.n, raw.edges.into_iter().map(|[u, v]| (u, v)))
    }
}

impl From<Graph> for GraphJson {
    fn from(g: Graph) -> Self {
        GraphJson {
            n: g.n,
            edges: g.edges.into_iter().map(|(u, v)| [u, v]).collect(),
        }
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges)
    }
}

impl Graph {
    /// Validates and builds a graph. Loops, duplicate pairs (in either
    /// orientation) and out-of-range endpoints are rejected.
    pub fn new<I>(n: usize, edges: I) -> Result<Graph, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let edges: Vec<(usize, usize)> = edges.into_iter().collect();
        let mut adj = vec![Vec::new(); n];
        let mut seen = std::collections::HashMap::with_capacity(edges.len());
        for (index, &(u, v)) in edges.iter().enumerate() {
            for vertex in [u, v] {
                if vertex >= n {
                    return Err(GraphError::EndpointOutOfRange { index, vertex, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop { index, vertex: u });
            }
            let key = (u.min(v), u.max(v));
            if let Some(&first) = seen.get(&key) {
                return Err(GraphError::DuplicateEdge { index, first, u, v });
            }
            seen.insert(key, index);
            adj[u].push((v, EdgeId(index)));
            adj[v].push((u, EdgeId(index)));
        }
        Ok(Graph { n, edges, adj })
    }

    pub fn empty(n: usize) -> Graph {
        Graph {
            n,
            edges: Vec::new(),
            adj: vec![Vec::new(); n],
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge_ids(&self) -> impl Iterator<Item = EdgeId> {
        (0..self.edges.len()).map(EdgeId)
    }

    pub fn endpoints(&self, e: EdgeId) -> (usize, usize) {
        self.edges[e.0]
    }

    /// `(neighbor, edge)` pairs at `v`, in edge-id order.
    pub fn incident(&self, v: usize) -> &[(usize, EdgeId)] {
        &self.adj[v]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].iter().map(|&(w, _)| w)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).collect()
    }

    /// Δ(G); 0 for an edgeless graph.
    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// δ(G); 0 for the graph on no vertices.
    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn edge_between(&self, u: usize, v: usize) -> Option<EdgeId> {
        let (a, b) = if self.adj[u].len() <= self.adj[v].len() {
            (u, v)
        } else {
            (v, u)
        };
        self.adj[a].iter().find(|&&(w, _)| w == b).map(|&(_, e)| e)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edge_between(u, v).is_some()
    }

    /// Vertex sets of the connected components, each sorted, ordered by
    /// smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut comp = vec![usize::MAX; self.n];
        let mut out = Vec::new();
        for start in 0..self.n {
            if comp[start] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut members = vec![start];
            comp[start] = id;
            let mut queue = VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                for w in self.neighbors(v) {
                    if comp[w] == usize::MAX {
                        comp[w] = id;
                        members.push(w);
                        queue.push_back(w);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    pub fn is_forest(&self) -> bool {
        self.edges.len() + self.components().len() == self.n
    }

    /// The subgraph induced by `vertices`, relabeled `0..vertices.len()` in
    /// the given order. Edges keep their relative order. Returns the graph
    /// and, for each new edge, the id of the edge it came from.
    pub fn induced(&self, vertices: &[usize]) -> (Graph, Vec<EdgeId>) {
        let mut local = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            local[v] = i;
        }
        let mut edges = Vec::new();
        let mut origin = Vec::new();
        for (i, &(u, v)) in self.edges.iter().enumerate() {
            if local[u] != usize::MAX && local[v] != usize::MAX {
                edges.push((local[u], local[v]));
                origin.push(EdgeId(i));
            }
        }
        let g = Graph::new(vertices.len(), edges).expect("induced subgraph of a valid graph");
        (g, origin)
    }

    /// Same graph with vertex `v` renamed to `perm[v]`; edge order kept.
    pub fn relabeled(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n, "permutation length");
        Graph::new(self.n, self.edges.iter().map(|&(u, v)| (perm[u], perm[v])))
            .expect("relabeling preserves simplicity")
    }

    /// Edge set as normalized `(min, max)` pairs.
    pub fn edge_set(&self) -> HashSet<(usize, usize)> {
        self.edges
            .iter()
            .map(|&(u, v)| (u.min(v), u.max(v)))
            .collect()
    }
}

pub fn make_graph(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
    Graph::new(n, edges.iter().copied())
}

pub fn max_degree(g: &Graph) -> usize {
    g.max_degree()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle_and_diamond() {
        let k3 = make_graph(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        assert_eq!(k3.degrees(), vec![2, 2, 2]);
        assert_eq!(k3.max_degree(), 2);

        let diamond = make_graph(4, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]).unwrap();
        assert_eq!(diamond.degrees(), vec![3, 2, 3, 2]);
        assert_eq!(diamond.max_degree(), 3);
    }

    #[test]
    fn validation_errors_are_distinct() {
        assert!(matches!(
            make_graph(2, &[(0, 1), (1, 0)]),
            Err(GraphError::DuplicateEdge {
                index: 1,
                first: 0,
                ..
            })
        ));
        assert!(matches!(
            make_graph(2, &[(1, 1)]),
            Err(GraphError::SelfLoop {
                index: 0,
                vertex: 1
            })
        ));
        assert!(matches!(
            make_graph(2, &[(0, 2)]),
            Err(GraphError::EndpointOutOfRange {
                vertex: 2,
                n: 2,
                ..
            })
        ));
    }

    #[test]
    fn star_and_empty() {
        let star = make_graph(6, &[(0, 1), (0, 2), (0, 3), (0, 4), (0, 5)]).unwrap();
        assert_eq!(max_degree(&star), 5);
        assert_eq!(Graph::empty(4).max_degree(), 0);
        assert_eq!(Graph::empty(0).min_degree(), 0);
    }

    #[test]
    fn json_round_trip_keeps_order_and_orientation() {
        let text = r#"{"n":4,"edges":[[2,1],[0,3],[1,0]]}"#;
        let g: Graph = serde_json::from_str(text).unwrap();
        assert_eq!(g.edges(), &[(2, 1), (0, 3), (1, 0)]);
        assert_eq!(serde_json::to_string(&g).unwrap(), text);
        let bad = r#"{"n":2,"edges":[[0,1],[1,0]]}"#;
        assert!(serde_json::from_str::<Graph>(bad).is_err());
    }

    #[test]
    fn components_and_induced() {
        let g = make_graph(5, &[(0, 1), (3, 4)]).unwrap();
        assert_eq!(g.components(), vec![vec![0, 1], vec![2], vec![3, 4]]);
        assert!(g.is_forest());
        let (h, origin) = g.induced(&[4, 3]);
        assert_eq!(h.edges(), &[(1, 0)]);
        assert_eq!(origin, vec![EdgeId(1)]);
    }
}
