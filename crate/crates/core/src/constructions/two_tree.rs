//! 2-trees, squares of paths and 2-paths.

use super::{ensure_within, precondition, ConstructionError, Palette};
use crate::coloring::EdgeColoring;
use crate::exact::{exists_k_improper, SearchBudget, SearchResult};
use crate::families::{square_of_path, TwoPathSequence, TwoTreeTrace};
use crate::graph::{EdgeId, Graph};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoTreeColoring {
    pub coloring: EdgeColoring,
    /// `⌈Δ/3⌉`.
    pub budget: usize,
    /// Times the extension rule found no admissible color and the exact
    /// solver was used instead.
    pub fallbacks: usize,
}

fn edge(g: &Graph, u: usize, v: usize) -> Result<EdgeId, ConstructionError> {
    g.edge_between(u, v)
        .ok_or_else(|| ConstructionError::TraceMismatch(format!("({u}, {v}) is not an edge")))
}

/// Colors for `vu` and `vw` given `x = φ(uw)`, or `None` if no admissible
/// pair exists: `x_u` is a color of `{x, x-1, x+1}` used fewer than `k`
/// times at `u`; then `w` takes `x_u` if it can, otherwise a color from
/// the window on the side of `x_u`.
fn extend(pu: &Palette, pw: &Palette, x: i64, k: usize) -> Option<(i64, i64)> {
    let xu = [x, x - 1, x + 1].into_iter().find(|&c| pu.accepts(c, k))?;
    let window = match xu - x {
        0 => [x, x - 1, x + 1],
        -1 => [x - 1, x, x - 2],
        _ => [x + 1, x, x + 2],
    };
    let xw = window.into_iter().find(|&c| pw.accepts(c, k))?;
    Some((xu, xw))
}

/// The diamond coloring: the edge between the two degree-3 vertices gets
/// 3, and the 4-cycle around it alternates so each side sees `{1, 2}`.
fn color_diamond(g: &Graph) -> EdgeColoring {
    let hubs: Vec<usize> = (0..4).filter(|&v| g.degree(v) == 3).collect();
    let tips: Vec<usize> = (0..4).filter(|&v| g.degree(v) == 2).collect();
    let (y, x) = (hubs[0], hubs[1]);
    let (w, v) = (tips[0], tips[1]);
    let mut c = EdgeColoring::new(vec![0; 5]);
    for (a, b, color) in [(y, x, 3), (w, y, 1), (w, x, 2), (v, y, 2), (v, x, 1)] {
        c.set(g.edge_between(a, b).expect("diamond edge"), color);
    }
    c
}

/// `⌈Δ/3⌉`-improper interval coloring of a 2-tree with `Δ ≥ 3`, built by
/// replaying `trace`. The base triangle is monochromatic (the budget is at
/// least 2 once `Δ ≥ 4`); the diamond is colored directly.
pub fn color_two_tree(
    g: &Graph,
    trace: &TwoTreeTrace,
) -> Result<TwoTreeColoring, ConstructionError> {
    let replay = trace.to_graph()?;
    if replay.vertex_count() != g.vertex_count() || replay.edge_set() != g.edge_set() {
        return Err(ConstructionError::TraceMismatch(
            "replayed edges differ from the graph".into(),
        ));
    }
    let delta = g.max_degree();
    if delta < 3 {
        return Err(precondition(
            "2-tree colorer needs maximum degree at least 3",
        ));
    }
    let k = delta.div_ceil(3);
    if delta == 3 {
        let coloring = color_diamond(g);
        ensure_within(g, &coloring, 1)?;
        return Ok(TwoTreeColoring {
            coloring,
            budget: 1,
            fallbacks: 0,
        });
    }

    let mut colors = vec![0i64; g.edge_count()];
    let mut palettes = vec![Palette::default(); g.vertex_count()];
    let [a, b, c] = trace.base;
    for (u, v) in [(a, b), (b, c), (a, c)] {
        colors[edge(g, u, v)?.0] = 0;
        palettes[u].add(0);
        palettes[v].add(0);
    }
    for &(v, (u, w)) in &trace.additions {
        let x = colors[edge(g, u, w)?.0];
        let Some((xu, xw)) = extend(&palettes[u], &palettes[w], x, k) else {
            return fallback(g, k);
        };
        colors[edge(g, v, u)?.0] = xu;
        colors[edge(g, v, w)?.0] = xw;
        palettes[u].add(xu);
        palettes[w].add(xw);
        palettes[v].add(xu);
        palettes[v].add(xw);
    }
    let coloring = EdgeColoring::new(colors);
    ensure_within(g, &coloring, k)?;
    Ok(TwoTreeColoring {
        coloring,
        budget: k,
        fallbacks: 0,
    })
}

fn fallback(g: &Graph, k: usize) -> Result<TwoTreeColoring, ConstructionError> {
    match exists_k_improper(g, k, &SearchBudget::default())?.0 {
        SearchResult::Found(coloring) => Ok(TwoTreeColoring {
            coloring,
            budget: k,
            fallbacks: 1,
        }),
        _ => Err(ConstructionError::BoundViolated {
            got: None,
            bound: k,
        }),
    }
}

/// Proper interval coloring of the square of `P_n`, `n >= 4`. Starts from
/// the diamond on `0..4` and appends vertex `i` next to `x = i-1` and
/// `y = i-2`, reading `φ(vy), φ(vx)` off the colors around `a = φ(xy)`.
pub fn color_square_of_path(n: usize) -> Result<(Graph, EdgeColoring), ConstructionError> {
    if n < 4 {
        return Err(precondition("square of a path needs n >= 4"));
    }
    let g = square_of_path(n)?;
    let mut colors = vec![0i64; g.edge_count()];
    let set = |u: usize, v: usize, c: i64, colors: &mut [i64]| {
        colors[g.edge_between(u, v).expect("path-square edge").0] = c;
    };
    for (u, v, c) in [(0, 1, 1), (0, 2, 2), (3, 1, 2), (3, 2, 1), (1, 2, 3)] {
        set(u, v, c, &mut colors);
    }
    let get = |u: usize, v: usize, colors: &[i64]| {
        colors[g.edge_between(u, v).expect("path-square edge").0]
    };
    for v in 4..n {
        let (x, y) = (v - 1, v - 2);
        let a = get(x, y, &colors);
        let mut y_other = [get(y, v - 3, &colors) - a, get(y, v - 4, &colors) - a];
        y_other.sort_unstable();
        let x_other = get(x, v - 3, &colors) - a;
        let (vy, vx) = match (y_other, x_other) {
            ([1, 2], -1) => (-1, -2),
            ([1, 2], 1) => (3, 2),
            ([-1, 1], -1) => (2, 1),
            ([-1, 1], 1) => (-2, -1),
            ([-2, -1], -1) => (-3, -2),
            ([-2, -1], 1) => (1, 2),
            _ => unreachable!("an interval coloring leaves only six cases"),
        };
        set(v, y, a + vy, &mut colors);
        set(v, x, a + vx, &mut colors);
    }
    let coloring = EdgeColoring::new(colors);
    ensure_within(&g, &coloring, 1)?;
    Ok((g, coloring))
}

/// 2-improper interval coloring of a 2-path: `e_i` and the remaining side
/// of `t_i` both get color `i`.
pub fn color_two_path(seq: &TwoPathSequence) -> Result<(Graph, EdgeColoring), ConstructionError> {
    let g = seq.to_graph()?;
    let n = seq.len();
    // edge order: e_0..e_n, then the remaining side of t_1..t_n
    let colors = (0..=n as i64).chain(1..=n as i64).collect();
    let coloring = EdgeColoring::new(colors);
    ensure_within(&g, &coloring, 2)?;
    Ok((g, coloring))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{generate, FamilyMeta, FamilyRecipe};

    #[test]
    fn diamond_gets_the_reference_coloring() {
        let trace = TwoTreeTrace {
            base: [0, 1, 2],
            additions: vec![(3, (1, 2))],
        };
        let g = trace.to_graph().unwrap();
        let out = color_two_tree(&g, &trace).unwrap();
        assert_eq!(out.budget, 1);
        let mut sorted = out.coloring.colors.clone();
        sorted.sort_unstable();
        assert_eq!(sorted, vec![1, 1, 2, 2, 3]);
        assert_eq!(out.coloring.get(g.edge_between(1, 2).unwrap()), 3);
    }

    #[test]
    fn triangle_is_rejected() {
        let trace = TwoTreeTrace {
            base: [0, 1, 2],
            additions: vec![],
        };
        let g = trace.to_graph().unwrap();
        assert!(matches!(
            color_two_tree(&g, &trace),
            Err(ConstructionError::Precondition(_))
        ));
    }

    #[test]
    fn random_two_trees_meet_the_bound() {
        for seed in 0..40 {
            let (g, meta) = generate(&FamilyRecipe::TwoTree {
                n: 30,
                seed,
                trace: None,
            })
            .unwrap();
            let FamilyMeta::TwoTree(trace) = meta else {
                unreachable!()
            };
            let out = color_two_tree(&g, &trace).unwrap();
            assert_eq!(out.fallbacks, 0);
        }
    }

    #[test]
    fn square_of_path_small_cases() {
        let (_, c) = color_square_of_path(4).unwrap();
        assert_eq!(c.colors, vec![1, 2, 3, 2, 1]);
        for n in 5..=12 {
            assert!(color_square_of_path(n).is_ok());
        }
        assert!(color_square_of_path(3).is_err());
    }

    #[test]
    fn single_triangle_two_path() {
        let seq = TwoPathSequence {
            edges: vec![(0, 1), (1, 2)],
            triangles: vec![[0, 1, 2]],
        };
        let (_, c) = color_two_path(&seq).unwrap();
        assert_eq!(c.colors, vec![0, 1, 1]);
    }
}
