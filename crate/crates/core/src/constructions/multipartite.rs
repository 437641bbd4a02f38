use serde::{Deserialize, Serialize};

use super::{ensure_within, precondition, ConstructionError};
use crate::coloring::EdgeColoring;
use crate::families::{complete_multipartite, MultipartiteLabels};
use crate::graph::Graph;

/// Sequential coloring between parts `{x_1..x_s}` and `{y_1..y_t}`:
/// `x_i y_j` gets `shift + i + j - 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShiftBlock {
    pub rows: usize,
    pub cols: usize,
    pub shift: i64,
}

impl ShiftBlock {
    /// Entry for 1-based `i`, `j`.
    pub fn entry(&self, i: usize, j: usize) -> i64 {
        assert!((1..=self.rows).contains(&i) && (1..=self.cols).contains(&j));
        self.shift + i as i64 + j as i64 - 1
    }

    pub fn row(&self, i: usize) -> Vec<i64> {
        (1..=self.cols).map(|j| self.entry(i, j)).collect()
    }

    pub fn column(&self, j: usize) -> Vec<i64> {
        (1..=self.rows).map(|i| self.entry(i, j)).collect()
    }

    pub fn transposed(&self) -> ShiftBlock {
        ShiftBlock {
            rows: self.cols,
            cols: self.rows,
            shift: self.shift,
        }
    }
}

pub fn sequential_block(s: usize, t: usize, shift: i64) -> Result<ShiftBlock, ConstructionError> {
    if s == 0 || t == 0 {
        return Err(precondition("block dimensions must be positive"));
    }
    Ok(ShiftBlock {
        rows: s,
        cols: t,
        shift,
    })
}

/// Block families of the multipartite coloring. `Xs` joins two parts of
/// size s, `Xt` two of size t, `Ys` an s-part (rows) to a t-part, `Yt` a
/// t-part (rows) to an s-part.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum BlockKind {
    Xs,
    Xt,
    Ys,
    Yt,
}

impl BlockKind {
    pub fn shift(self, k: usize, s: usize, t: usize) -> i64 {
        let (k, s, t) = (k as i64, s as i64, t as i64);
        match self {
            BlockKind::Xs => (k - 1) * s + k * t,
            BlockKind::Xt => k * s + (k - 1) * t,
            BlockKind::Ys | BlockKind::Yt => k * s + k * t,
        }
    }
}

/// Which block colors the edges between each pair of parts.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockPlan {
    pub s: usize,
    pub t: usize,
    /// `pair_index[i][j]`: block index between pairs `(A_i, B_i)` and
    /// `(A_j, B_j)`, 0-based. The diagonal is 0 (the `A_i B_i` block).
    pub pair_index: Vec<Vec<usize>>,
}

impl BlockPlan {
    pub fn parts(&self) -> usize {
        2 * self.pair_index.len()
    }

    /// Block between parts `p` and `q` (0-based, order `A_1, B_1, A_2,
    /// ...`), with rows indexed by `p`. `None` on the diagonal.
    pub fn block(&self, p: usize, q: usize) -> Option<(BlockKind, usize)> {
        if p == q {
            return None;
        }
        let k = self.pair_index[p / 2][q / 2];
        let kind = match (p % 2, q % 2) {
            (0, 0) => BlockKind::Xs,
            (1, 1) => BlockKind::Xt,
            (0, 1) => BlockKind::Ys,
            _ => BlockKind::Yt,
        };
        Some((kind, k))
    }

    pub fn shift_block(&self, p: usize, q: usize) -> Option<ShiftBlock> {
        let size = |x: usize| if x.is_multiple_of(2) { self.s } else { self.t };
        let (kind, k) = self.block(p, q)?;
        Some(ShiftBlock {
            rows: size(p),
            cols: size(q),
            shift: kind.shift(k, self.s, self.t),
        })
    }
}

/// Block indices between the `pairs` pairs of parts, built by recursive
/// doubling: both halves reuse the smaller solution, the first row of the
/// off-diagonal quadrant is `Q, ..., 2Q - 1`, and each further band of
/// `b` rows repeats the rows above it with adjacent width-`b` column
/// groups swapped. The lower quadrant is the transpose.
pub fn pair_index_matrix(pairs: usize) -> Vec<Vec<usize>> {
    assert!(pairs.is_power_of_two(), "pair count must be a power of two");
    if pairs == 1 {
        return vec![vec![0]];
    }
    let q = pairs / 2;
    let half = pair_index_matrix(q);
    let mut quadrant = vec![vec![0; q]; q];
    quadrant[0] = (q..2 * q).collect();
    let mut b = 1;
    while b < q {
        for r in 0..b {
            for col in 0..q {
                // swap column groups [2gb, (2g+1)b) and [(2g+1)b, (2g+2)b)
                let src = if (col / b) % 2 == 0 { col + b } else { col - b };
                quadrant[b + r][col] = quadrant[r][src];
            }
        }
        b *= 2;
    }
    let mut m = vec![vec![0; pairs]; pairs];
    for i in 0..q {
        for j in 0..q {
            m[i][j] = half[i][j];
            m[q + i][q + j] = half[i][j];
            m[i][q + j] = quadrant[i][j];
            m[q + j][i] = quadrant[i][j];
        }
    }
    m
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultipartiteColoring {
    pub graph: Graph,
    pub coloring: EdgeColoring,
    pub plan: BlockPlan,
    pub labels: MultipartiteLabels,
}

/// Interval coloring of `K_{s,t,...,s,t}` with `2^ell` parts in the order
/// `A_1, B_1, A_2, B_2, ...`.
pub fn color_multipartite_stst(
    s: usize,
    t: usize,
    ell: u32,
) -> Result<MultipartiteColoring, ConstructionError> {
    if s == 0 || t == 0 {
        return Err(precondition("part sizes must be positive"));
    }
    if !(1..=5).contains(&ell) {
        return Err(precondition(format!("ell must be in 1..=5, got {ell}")));
    }
    let parts = 1usize << ell;
    let sizes: Vec<usize> = (0..parts).map(|p| if p % 2 == 0 { s } else { t }).collect();
    let (graph, labels) = complete_multipartite(&sizes)?;
    let plan = BlockPlan {
        s,
        t,
        pair_index: pair_index_matrix(parts / 2),
    };
    let mut colors = Vec::with_capacity(graph.edge_count());
    for &(u, v) in graph.edges() {
        let p = labels.part_of(u).expect("vertex in a part");
        let q = labels.part_of(v).expect("vertex in a part");
        let block = plan.shift_block(p, q).expect("edges join distinct parts");
        let i = labels.within_part_index(u).expect("vertex in a part");
        let j = labels.within_part_index(v).expect("vertex in a part");
        colors.push(block.entry(i, j));
    }
    let coloring = EdgeColoring::new(colors);
    ensure_within(&graph, &coloring, 1)?;
    Ok(MultipartiteColoring {
        graph,
        coloring,
        plan,
        labels,
    })
}
