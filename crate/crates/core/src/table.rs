//! Plain-text coloring matrices.

use thiserror::Error;

use crate::coloring::{verify, EdgeColoring};
use crate::families::MultipartiteLabels;
use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TableError {
    #[error("coloring does not match the graph")]
    WrongLength,
    #[error("coloring is not an interval coloring")]
    NotInterval,
}

/// Vertex order and names for the matrix: parts in label order with names
/// like `x1,2`, or `v0, v1, ...` without labels.
fn headers(g: &Graph, labels: Option<&MultipartiteLabels>) -> Vec<(usize, String)> {
    match labels {
        Some(l) => l
            .parts
            .iter()
            .flatten()
            .map(|&v| (v, l.vertex_name(v).expect("labelled vertex")))
            .collect(),
        None => (0..g.vertex_count())
            .map(|v| (v, format!("v{v}")))
            .collect(),
    }
}

/// Symmetric vertex-by-vertex matrix of edge colors; non-adjacent pairs
/// are left blank. Columns are right-aligned to a common width.
pub fn emit_table(
    g: &Graph,
    c: &EdgeColoring,
    labels: Option<&MultipartiteLabels>,
) -> Result<String, TableError> {
    let report = verify(g, c).map_err(|_| TableError::WrongLength)?;
    if !report.all_intervals {
        return Err(TableError::NotInterval);
    }
    let order = headers(g, labels);
    let cell = |u: usize, v: usize| {
        g.edge_between(u, v)
            .map(|e| c.get(e).to_string())
            .unwrap_or_default()
    };
    let width = order
        .iter()
        .map(|(_, name)| name.len())
        .chain(c.colors.iter().map(|x| x.to_string().len()))
        .max()
        .unwrap_or(1);
    let mut out = String::new();
    let mut line = vec![format!("{:>width$}", "")];
    line.extend(order.iter().map(|(_, name)| format!("{name:>width$}")));
    out.push_str(line.join(" ").trim_end());
    out.push('\n');
    for (u, name) in &order {
        let mut line = vec![format!("{name:>width$}")];
        line.extend(
            order
                .iter()
                .map(|(v, _)| format!("{:>width$}", cell(*u, *v))),
        );
        out.push_str(line.join(" ").trim_end());
        out.push('\n');
    }
    Ok(out)
}

/// Reads a matrix written by [`emit_table`] back into rows of optional
/// cells (header row and column dropped).
pub fn parse_table(text: &str) -> Vec<Vec<Option<i64>>> {
    let mut lines = text.lines();
    let Some(header) = lines.next() else {
        return Vec::new();
    };
    let cols = header.split_whitespace().count();
    // fields are equally wide and separated by one space
    let stride = (header.len() + 1) / (cols + 1);
    lines
        .map(|line| {
            (1..=cols)
                .map(|i| {
                    let start = i * stride;
                    let end = (start + stride - 1).min(line.len());
                    line.get(start..end).and_then(|s| s.trim().parse().ok())
                })
                .collect()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::complete;

    #[test]
    fn single_edge() {
        let g = complete(2).unwrap();
        let t = emit_table(&g, &EdgeColoring::new(vec![1]), None).unwrap();
        assert_eq!(t, "   v0 v1\nv0     1\nv1  1\n");
        assert_eq!(
            parse_table(&t),
            vec![vec![None, Some(1)], vec![Some(1), None]]
        );
    }

    #[test]
    fn gaps_are_refused() {
        let g = Graph::new(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(
            emit_table(&g, &EdgeColoring::new(vec![1, 3]), None),
            Err(TableError::NotInterval)
        );
    }
}
