use std::collections::VecDeque;

use super::{ensure_within, precondition, ConstructionError};
use crate::coloring::EdgeColoring;
use crate::graph::Graph;

/// Proper interval coloring of a forest. Each tree is rooted at its
/// smallest vertex; the root's edges get `1, 2, ...` and a vertex reached
/// by an edge of color `c` gives its child edges `c + 1, c + 2, ...`.
pub fn color_forest(g: &Graph) -> Result<EdgeColoring, ConstructionError> {
    if !g.is_forest() {
        return Err(precondition("graph has a cycle"));
    }
    let mut colors = vec![0i64; g.edge_count()];
    let mut seen = vec![false; g.vertex_count()];
    for root in 0..g.vertex_count() {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        let mut queue = VecDeque::from([(root, 0i64)]);
        while let Some((v, parent_color)) = queue.pop_front() {
            let mut next = parent_color;
            for &(w, e) in g.incident(v) {
                if seen[w] {
                    continue;
                }
                seen[w] = true;
                next += 1;
                colors[e.0] = next;
                queue.push_back((w, next));
            }
        }
    }
    let c = EdgeColoring::new(colors);
    ensure_within(g, &c, 1)?;
    Ok(c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{cycle, path, star};

    #[test]
    fn star_and_path() {
        assert_eq!(
            color_forest(&star(4).unwrap()).unwrap().colors,
            vec![1, 2, 3, 4]
        );
        assert_eq!(
            color_forest(&path(4).unwrap()).unwrap().colors,
            vec![1, 2, 3]
        );
    }

    #[test]
    fn forest_with_isolated_vertex() {
        let g = Graph::new(6, [(0, 1), (1, 2), (1, 3), (4, 3)]).unwrap();
        assert!(color_forest(&g).is_ok());
    }

    #[test]
    fn cycle_is_rejected() {
        assert!(color_forest(&cycle(5).unwrap()).is_err());
    }
}
