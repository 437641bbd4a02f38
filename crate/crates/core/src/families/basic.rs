use rand::Rng;
use rand_chacha::ChaCha8Rng;

use super::{FamilyError, MultipartiteLabels};
use crate::graph::Graph;

fn build(n: usize, edges: Vec<(usize, usize)>) -> Graph {
    Graph::new(n, edges).expect("generator produced a simple graph")
}

/// P_n on vertices `0..n`, edges `(i, i+1)` in order.
pub fn path(n: usize) -> Result<Graph, FamilyError> {
    if n == 0 {
        return Err(FamilyError::invalid("path", "needs at least one vertex"));
    }
    Ok(build(n, (1..n).map(|i| (i - 1, i)).collect()))
}

/// C_n: the path plus the closing edge `(n-1, 0)`.
pub fn cycle(n: usize) -> Result<Graph, FamilyError> {
    if n < 3 {
        return Err(FamilyError::invalid("cycle", "needs at least 3 vertices"));
    }
    let mut edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    edges.push((n - 1, 0));
    Ok(build(n, edges))
}

/// S_k: center 0 and leaves `1..=k`.
pub fn star(leaves: usize) -> Result<Graph, FamilyError> {
    if leaves == 0 {
        return Err(FamilyError::invalid("star", "needs at least one leaf"));
    }
    Ok(build(leaves + 1, (1..=leaves).map(|i| (0, i)).collect()))
}

/// Spider with center 0; leg `j` occupies a contiguous block of vertices
/// listed from the center outwards.
pub fn spider(legs: &[usize]) -> Result<Graph, FamilyError> {
    if legs.len() < 3 {
        return Err(FamilyError::invalid("spider", "needs at least 3 legs"));
    }
    if legs.contains(&0) {
        return Err(FamilyError::invalid(
            "spider",
            "legs must have length at least 1",
        ));
    }
    let mut edges = Vec::new();
    let mut next = 1;
    for &len in legs {
        let mut prev = 0;
        for _ in 0..len {
            edges.push((prev, next));
            prev = next;
            next += 1;
        }
    }
    Ok(build(next, edges))
}

/// First vertex of every leg of [`spider`], in leg order.
pub fn spider_leg_starts(legs: &[usize]) -> Vec<usize> {
    let mut starts = Vec::with_capacity(legs.len());
    let mut next = 1;
    for &len in legs {
        starts.push(next);
        next += len;
    }
    starts
}

/// Caterpillar with spine `0..k` (k = `leaves.len()`) and `leaves[i]`
/// pendant vertices on spine vertex `i`, numbered after the spine in spine
/// order. Spine edges come first in the edge list.
pub fn caterpillar(leaves: &[usize]) -> Result<Graph, FamilyError> {
    if leaves.is_empty() {
        return Err(FamilyError::invalid(
            "caterpillar",
            "spine must be nonempty",
        ));
    }
    let k = leaves.len();
    let mut edges: Vec<_> = (1..k).map(|i| (i - 1, i)).collect();
    let mut next = k;
    for (i, &count) in leaves.iter().enumerate() {
        for _ in 0..count {
            edges.push((i, next));
            next += 1;
        }
    }
    Ok(build(next, edges))
}

/// W_n on `n` vertices: hub 0 joined to the rim cycle `1..n`.
pub fn wheel(n: usize) -> Result<Graph, FamilyError> {
    if n < 4 {
        return Err(FamilyError::invalid("wheel", "needs at least 4 vertices"));
    }
    let rim = n - 1;
    let mut edges: Vec<_> = (1..=rim).map(|i| (0, i)).collect();
    edges.extend((1..rim).map(|i| (i, i + 1)));
    edges.push((rim, 1));
    Ok(build(n, edges))
}

pub fn complete(n: usize) -> Result<Graph, FamilyError> {
    if n == 0 {
        return Err(FamilyError::invalid(
            "complete",
            "needs at least one vertex",
        ));
    }
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            edges.push((u, v));
        }
    }
    Ok(build(n, edges))
}

/// Complete multipartite graph; part `i` is a contiguous vertex block.
pub fn complete_multipartite(parts: &[usize]) -> Result<(Graph, MultipartiteLabels), FamilyError> {
    if parts.is_empty() || parts.contains(&0) {
        return Err(FamilyError::invalid(
            "complete_multipartite",
            "needs at least one part and every part of size at least 1",
        ));
    }
    let mut blocks = Vec::with_capacity(parts.len());
    let mut next = 0;
    for &size in parts {
        blocks.push((next..next + size).collect::<Vec<_>>());
        next += size;
    }
    let mut edges = Vec::new();
    for (i, a) in blocks.iter().enumerate() {
        for b in &blocks[i + 1..] {
            for &u in a {
                for &v in b {
                    edges.push((u, v));
                }
            }
        }
    }
    Ok((build(next, edges), MultipartiteLabels { parts: blocks }))
}

/// Square of P_n: vertices at distance at most 2 on the path are joined.
pub fn square_of_path(n: usize) -> Result<Graph, FamilyError> {
    if n == 0 {
        return Err(FamilyError::invalid(
            "square_of_path",
            "needs at least one vertex",
        ));
    }
    let mut edges = Vec::new();
    for i in 0..n {
        for j in [i + 1, i + 2] {
            if j < n {
                edges.push((i, j));
            }
        }
    }
    Ok(build(n, edges))
}

/// Uniform random recursive tree on `n` vertices (vertex `i` attaches to a
/// uniformly chosen earlier vertex).
pub fn random_tree(n: usize, rng: &mut ChaCha8Rng) -> Result<Graph, FamilyError> {
    if n == 0 {
        return Err(FamilyError::invalid("tree", "needs at least one vertex"));
    }
    let edges = (1..n).map(|v| (rng.gen_range(0..v), v)).collect();
    Ok(build(n, edges))
}

/// A random triangulation of the convex polygon `0..n`. Polygon sides come
/// first in the edge list, then diagonals. Returns the graph and the outer
/// cycle.
pub fn random_maximal_outerplanar(
    n: usize,
    rng: &mut ChaCha8Rng,
) -> Result<(Graph, Vec<usize>), FamilyError> {
    if n < 3 {
        return Err(FamilyError::invalid(
            "maximal_outerplanar",
            "needs at least 3 vertices",
        ));
    }
    let mut edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    edges.push((n - 1, 0));
    // Polygons still to triangulate, each a run of consecutive outer
    // vertices closed by the chord between its ends.
    let mut pending = vec![(0..n).collect::<Vec<_>>()];
    while let Some(poly) = pending.pop() {
        if poly.len() <= 3 {
            continue;
        }
        let last = poly.len() - 1;
        let apex = rng.gen_range(1..last);
        if apex > 1 {
            edges.push((poly[0], poly[apex]));
        }
        if apex < last - 1 {
            edges.push((poly[apex], poly[last]));
        }
        pending.push(poly[..=apex].to_vec());
        pending.push(poly[apex..].to_vec());
    }
    Ok((build(n, edges), (0..n).collect()))
}
