//! `⌈Δ/5⌉`-improper interval colorings of outerplanar graphs by repeated
//! removal of degree-2 vertices.

use std::collections::BTreeMap;

use super::{ensure_within, precondition, ConstructionError, Palette};
use crate::coloring::EdgeColoring;
use crate::exact::{exists_k_improper, SearchBudget, SearchResult};
use crate::graph::Graph;

/// Subproblems at or below this many edges are solved exactly.
const BASE_EDGES: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OuterplanarColoring {
    pub coloring: EdgeColoring,
    /// `⌈Δ/5⌉`.
    pub budget: usize,
    /// Extensions that found no admissible pair and were re-solved exactly.
    pub fallbacks: usize,
    /// Subproblems solved exactly because they were small.
    pub base_cases: usize,
}

type Edge = (usize, usize);
type Colors = BTreeMap<Edge, i64>;

fn key(u: usize, v: usize) -> Edge {
    (u.min(v), u.max(v))
}

/// Working graph on a fixed vertex set; removed vertices just lose their
/// edges.
#[derive(Clone)]
struct Sub {
    n: usize,
    edges: Vec<Edge>,
}

impl Sub {
    fn graph(&self) -> Graph {
        Graph::new(self.n, self.edges.iter().copied()).expect("subgraph of a simple graph")
    }

    fn without_vertex(&self, v: usize) -> Sub {
        Sub {
            n: self.n,
            edges: self
                .edges
                .iter()
                .copied()
                .filter(|&(a, b)| a != v && b != v)
                .collect(),
        }
    }

    fn restricted(&self, keep: &[bool]) -> Sub {
        Sub {
            n: self.n,
            edges: self
                .edges
                .iter()
                .copied()
                .filter(|&(a, b)| keep[a] && keep[b])
                .collect(),
        }
    }
}

struct Reducer {
    k: usize,
    fallbacks: usize,
    base_cases: usize,
}

impl Reducer {
    fn solve(&mut self, sub: &Sub) -> Result<Colors, ConstructionError> {
        if sub.edges.is_empty() {
            return Ok(Colors::new());
        }
        let g = sub.graph();
        let comps: Vec<Vec<usize>> = g.components().into_iter().filter(|c| c.len() > 1).collect();
        if comps.len() > 1 {
            let mut out = Colors::new();
            for comp in comps {
                let mut keep = vec![false; sub.n];
                comp.iter().for_each(|&v| keep[v] = true);
                out.extend(self.solve(&sub.restricted(&keep))?);
            }
            return Ok(out);
        }
        if sub.edges.len() <= BASE_EDGES {
            self.base_cases += 1;
            return self.exact(&g);
        }
        if let Some(cut) = cut_vertex(&g) {
            return self.split_at(sub, &g, cut);
        }
        self.reduce_two_vertex(sub, &g)
    }

    /// Colors the connected graph `g` exactly with budget `k`.
    fn exact(&self, g: &Graph) -> Result<Colors, ConstructionError> {
        let verts: Vec<usize> = (0..g.vertex_count()).filter(|&v| g.degree(v) > 0).collect();
        let (h, origin) = g.induced(&verts);
        match exists_k_improper(&h, self.k, &SearchBudget::default())?.0 {
            SearchResult::Found(c) => Ok(origin
                .iter()
                .enumerate()
                .map(|(i, &e)| {
                    let (a, b) = g.endpoints(e);
                    (key(a, b), c.colors[i])
                })
                .collect()),
            _ => Err(ConstructionError::BoundViolated {
                got: None,
                bound: self.k,
            }),
        }
    }

    /// Colors both sides of a cut vertex and shifts the second side so its
    /// colors at `cut` start right after the first side's.
    fn split_at(&mut self, sub: &Sub, g: &Graph, cut: usize) -> Result<Colors, ConstructionError> {
        let rest = sub.without_vertex(cut).graph();
        let first = rest
            .components()
            .into_iter()
            .find(|c| c.iter().any(|&v| g.has_edge(v, cut)))
            .expect("cut vertex has a neighbor");
        let mut keep = vec![false; sub.n];
        first.iter().for_each(|&v| keep[v] = true);
        keep[cut] = true;
        let side1 = sub.restricted(&keep);
        let mut keep2: Vec<bool> = keep.iter().map(|&b| !b).collect();
        keep2[cut] = true;
        let side2 = sub.restricted(&keep2);

        let c1 = self.solve(&side1)?;
        let c2 = self.solve(&side2)?;
        let at_cut = |c: &Colors| {
            c.iter()
                .filter(|(&(a, b), _)| a == cut || b == cut)
                .map(|(_, &col)| col)
                .collect::<Vec<_>>()
        };
        let max1 = *at_cut(&c1)
            .iter()
            .max()
            .expect("cut vertex has edges on side 1");
        let min2 = *at_cut(&c2)
            .iter()
            .min()
            .expect("cut vertex has edges on side 2");
        let shift = max1 + 1 - min2;
        let mut out = c1;
        out.extend(c2.into_iter().map(|(e, c)| (e, c + shift)));
        Ok(out)
    }

    fn reduce_two_vertex(&mut self, sub: &Sub, g: &Graph) -> Result<Colors, ConstructionError> {
        let twos: Vec<usize> = (0..sub.n).filter(|&v| g.degree(v) == 2).collect();
        if twos.is_empty() {
            return Err(ConstructionError::NotOuterplanar(
                "2-connected piece without a degree-2 vertex".into(),
            ));
        }
        let ends = |v: usize| {
            let mut it = g.neighbors(v);
            (it.next().expect("degree 2"), it.next().expect("degree 2"))
        };

        // A 2-vertex whose neighbors are not adjacent: contract it into uw.
        if let Some(&v) = twos.iter().find(|&&v| {
            let (u, w) = ends(v);
            !g.has_edge(u, w)
        }) {
            let (u, w) = ends(v);
            let mut smaller = sub.without_vertex(v);
            smaller.edges.push(key(u, w));
            let mut colors = self.solve(&smaller)?;
            let x = colors.remove(&key(u, w)).expect("uw was colored");
            colors.insert(key(v, u), x);
            colors.insert(key(v, w), x);
            return Ok(colors);
        }

        // Otherwise every 2-vertex sits on a triangle; take one with a
        // neighbor of degree at most 4.
        let pick = twos.iter().find_map(|&v| {
            let (a, b) = ends(v);
            if g.degree(a) <= 4 {
                Some((v, a, b))
            } else if g.degree(b) <= 4 {
                Some((v, b, a))
            } else {
                None
            }
        });
        let Some((v, u, w)) = pick else {
            return Err(ConstructionError::NotOuterplanar(
                "no degree-2 vertex has a neighbor of degree at most 4".into(),
            ));
        };
        let mut colors = self.solve(&sub.without_vertex(v))?;
        let x = colors[&key(u, w)];
        let palette = |z: usize, colors: &Colors| {
            let mut p = Palette::default();
            for (&(a, b), &c) in colors {
                if a == z || b == z {
                    p.add(c);
                }
            }
            p
        };
        let (pu, pw) = (palette(u, &colors), palette(w, &colors));
        // (vw, vu) candidates around x
        let candidates = [
            (x, x),
            (x, x + 1),
            (x + 1, x),
            (x + 1, x + 1),
            (x + 2, x + 1),
            (x + 2, x + 2),
            (x - 1, x),
            (x - 1, x - 1),
            (x - 2, x - 1),
            (x - 2, x - 2),
        ];
        let fits = |(cw, cu): (i64, i64)| {
            pw.accepts(cw, self.k) && pu.accepts(cu, self.k) && (cw != cu || self.k >= 2)
        };
        match candidates.into_iter().find(|&p| fits(p)) {
            Some((cw, cu)) => {
                colors.insert(key(v, w), cw);
                colors.insert(key(v, u), cu);
                Ok(colors)
            }
            None => {
                self.fallbacks += 1;
                self.exact(g)
            }
        }
    }
}

/// Lowest-index vertex whose removal disconnects its component.
fn cut_vertex(g: &Graph) -> Option<usize> {
    let active: Vec<usize> = (0..g.vertex_count()).filter(|&v| g.degree(v) > 0).collect();
    active.iter().copied().find(|&c| {
        if g.degree(c) < 2 {
            return false;
        }
        let rest: Vec<usize> = active.iter().copied().filter(|&v| v != c).collect();
        let (h, _) = g.induced(&rest);
        !h.is_connected()
    })
}

/// Colors an outerplanar graph with `Δ ≥ 6` using at most `⌈Δ/5⌉` equal
/// colors per vertex. Outerplanarity is not checked beyond `m ≤ 2n - 3`;
/// a reduction step that finds no suitable degree-2 vertex reports the
/// input as non-outerplanar.
pub fn color_outerplanar(g: &Graph) -> Result<OuterplanarColoring, ConstructionError> {
    let delta = g.max_degree();
    if delta < 6 {
        return Err(precondition(
            "outerplanar colorer needs maximum degree at least 6",
        ));
    }
    let n = g.vertex_count();
    if g.edge_count() > 2 * n - 3 {
        return Err(ConstructionError::NotOuterplanar(format!(
            "{} edges exceed 2n - 3 = {}",
            g.edge_count(),
            2 * n - 3
        )));
    }
    let k = delta.div_ceil(5);
    let mut reducer = Reducer {
        k,
        fallbacks: 0,
        base_cases: 0,
    };
    let sub = Sub {
        n,
        edges: g.edges().iter().map(|&(a, b)| key(a, b)).collect(),
    };
    let colors = reducer.solve(&sub)?;
    let coloring = EdgeColoring::new(g.edges().iter().map(|&(a, b)| colors[&key(a, b)]).collect());
    ensure_within(g, &coloring, k)?;
    Ok(OuterplanarColoring {
        coloring,
        budget: k,
        fallbacks: reducer.fallbacks,
        base_cases: reducer.base_cases,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{cycle, random_maximal_outerplanar};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn fan(n: usize) -> Graph {
        // hub 0 joined to the path 1..n
        let mut edges: Vec<_> = (1..n).map(|i| (0, i)).collect();
        edges.extend((1..n - 1).map(|i| (i, i + 1)));
        Graph::new(n, edges).unwrap()
    }

    #[test]
    fn fan_on_nine_vertices() {
        let out = color_outerplanar(&fan(9)).unwrap();
        assert_eq!(out.budget, 2);
    }

    #[test]
    fn cycle_is_rejected() {
        assert!(matches!(
            color_outerplanar(&cycle(6).unwrap()),
            Err(ConstructionError::Precondition(_))
        ));
    }

    #[test]
    fn too_many_edges_is_rejected() {
        let mut edges: Vec<_> = (1..8).map(|i| (0, i)).collect();
        for u in 1..8 {
            for v in u + 1..8 {
                if edges.len() < 14 {
                    edges.push((u, v));
                }
            }
        }
        let g = Graph::new(8, edges).unwrap();
        assert!(matches!(
            color_outerplanar(&g),
            Err(ConstructionError::NotOuterplanar(_))
        ));
    }

    #[test]
    fn cut_vertices_and_pendant_blocks() {
        // two fans sharing the hub, plus a pendant path
        let mut edges: Vec<_> = (1..7).map(|i| (0, i)).collect();
        edges.extend((1..6).map(|i| (i, i + 1)));
        edges.extend((7..12).map(|i| (0, i)));
        edges.extend((7..11).map(|i| (i, i + 1)));
        edges.extend([(11, 12), (12, 13)]);
        let g = Graph::new(14, edges).unwrap();
        assert!(color_outerplanar(&g).is_ok());
    }

    #[test]
    fn random_maximal_outerplanar_graphs() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let mut tried = 0;
        while tried < 20 {
            let (g, _) = random_maximal_outerplanar(18, &mut rng).unwrap();
            if g.max_degree() < 6 {
                continue;
            }
            tried += 1;
            color_outerplanar(&g).unwrap();
        }
    }
}
