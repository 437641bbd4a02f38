use super::{ensure_within, precondition, ConstructionError};
use crate::coloring::EdgeColoring;
use crate::families::TriangulationTrace;
use crate::graph::Graph;

/// Colors `Tr(n)` with `{1, 2, 3}`. The outer triangle gets `01 = 1`,
/// `12 = 2`, `20 = 3`; a vertex placed in face `(u1, u2, u3)` copies onto
/// each spoke `v u_j` the color of the opposite face side, so every face
/// stays rainbow and each vertex sees the three colors in rotation.
pub fn color_iterated_triangulation(
    trace: &TriangulationTrace,
) -> Result<(Graph, EdgeColoring), ConstructionError> {
    if trace.depth() == 0 {
        return Err(precondition("Tr(0) is a triangle; the bound needs n >= 1"));
    }
    let g = trace.to_graph();
    let mut colors = vec![0i64; g.edge_count()];
    let id = |u: usize, v: usize| g.edge_between(u, v).expect("face side is an edge").0;
    colors[id(0, 1)] = 1;
    colors[id(1, 2)] = 2;
    colors[id(2, 0)] = 3;
    for level in &trace.levels {
        for &(v, [a, b, c]) in level {
            colors[id(v, a)] = colors[id(b, c)];
            colors[id(v, b)] = colors[id(c, a)];
            colors[id(v, c)] = colors[id(a, b)];
        }
    }
    let coloring = EdgeColoring::new(colors);
    ensure_within(&g, &coloring, g.max_degree().div_ceil(3))?;
    Ok((g, coloring))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::verify;

    #[test]
    fn tr1_is_a_proper_coloring_of_k4() {
        let (g, c) = color_iterated_triangulation(&TriangulationTrace::new(1)).unwrap();
        assert_eq!(g.edge_count(), 6);
        assert_eq!(verify(&g, &c).unwrap().max_multiplicity, 1);
    }

    #[test]
    fn tr0_is_rejected() {
        assert!(color_iterated_triangulation(&TriangulationTrace::new(0)).is_err());
    }

    #[test]
    fn colors_are_balanced_at_every_vertex() {
        for n in 1..=4 {
            let (g, c) = color_iterated_triangulation(&TriangulationTrace::new(n)).unwrap();
            for v in 0..g.vertex_count() {
                let mut counts = [0usize; 3];
                for &(_, e) in g.incident(v) {
                    counts[(c.get(e) - 1) as usize] += 1;
                }
                let hi = counts.iter().max().unwrap();
                let lo = counts.iter().min().unwrap();
                assert!(hi - lo <= 1, "Tr({n}) vertex {v}: {counts:?}");
            }
        }
    }
}
