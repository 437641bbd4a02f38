//! Pruned depth-first search for a k-improper interval coloring of a
//! connected graph.

use std::collections::VecDeque;
use std::sync::atomic::{AtomicBool, AtomicU64, AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::Instant;

use super::{SearchBudget, SearchResult};
use crate::coloring::EdgeColoring;
use crate::graph::{EdgeId, Graph};

const CHECK_EVERY: u64 = 1024;

/// Edges in breadth-first order from a maximum-degree root (lowest index
/// among ties): each vertex, in discovery order, contributes its incident
/// edges not yet listed, sorted by the other endpoint.
pub(crate) fn bfs_edge_order(g: &Graph) -> Vec<EdgeId> {
    let n = g.vertex_count();
    if g.edge_count() == 0 {
        return Vec::new();
    }
    let root = (0..n)
        .max_by_key(|&v| (g.degree(v), std::cmp::Reverse(v)))
        .expect("nonempty");
    let mut seen_v = vec![false; n];
    let mut seen_e = vec![false; g.edge_count()];
    let mut order = Vec::with_capacity(g.edge_count());
    let mut queue = VecDeque::from([root]);
    seen_v[root] = true;
    while let Some(v) = queue.pop_front() {
        let mut inc: Vec<_> = g.incident(v).to_vec();
        inc.sort_unstable();
        for (w, e) in inc {
            if !seen_e[e.0] {
                seen_e[e.0] = true;
                order.push(e);
            }
            if !seen_v[w] {
                seen_v[w] = true;
                queue.push_back(w);
            }
        }
    }
    order
}

/// Largest color distance any normalized interval coloring of a connected
/// graph needs: walking between the edges carrying the extreme colors,
/// consecutive edges meet at a vertex `v` whose colors span at most
/// `d(v) - 1`.
pub(crate) fn default_window(g: &Graph) -> i64 {
    g.degrees()
        .iter()
        .map(|&d| d.saturating_sub(1) as i64)
        .sum::<i64>()
        + 1
}

struct Shared<'a> {
    k: u16,
    order: Vec<EdgeId>,
    /// `(u, v)` for every position in `order`.
    ends: Vec<(usize, usize)>,
    window: i64,
    budget: &'a SearchBudget,
    start: Instant,
    nodes: AtomicU64,
    stop: AtomicBool,
    over_budget: AtomicBool,
    /// Lowest branch index with a witness so far (`usize::MAX` if none).
    best_branch: AtomicUsize,
    witness: Mutex<Option<(usize, Vec<i64>)>>,
}

/// Per-worker mutable state: per-vertex color counts and summaries.
struct State {
    width: usize,
    count: Vec<u16>,
    lo: Vec<i64>,
    hi: Vec<i64>,
    distinct: Vec<usize>,
    colored: Vec<usize>,
    degree: Vec<usize>,
    colors: Vec<i64>,
    /// Saved `(lo, hi)` of both endpoints for each assigned position.
    undo: Vec<[(i64, i64); 2]>,
    local_nodes: u64,
}

impl State {
    fn new(g: &Graph, window: i64, edges: usize) -> State {
        let n = g.vertex_count();
        let width = (2 * window + 1) as usize;
        State {
            width,
            count: vec![0; n * width],
            lo: vec![i64::MAX; n],
            hi: vec![i64::MIN; n],
            distinct: vec![0; n],
            colored: vec![0; n],
            degree: g.degrees(),
            colors: Vec::with_capacity(edges),
            undo: Vec::with_capacity(edges),
            local_nodes: 0,
        }
    }

    fn slot(&self, v: usize, c: i64, window: i64) -> usize {
        v * self.width + (c + window) as usize
    }

    /// Candidate range for an edge between `u` and `v`: every colored
    /// endpoint `x` must keep its span within `d(x)`.
    fn range(&self, u: usize, v: usize, window: i64) -> (i64, i64) {
        let mut lo = -window;
        let mut hi = window;
        for x in [u, v] {
            if self.colored[x] > 0 {
                let d = self.degree[x] as i64;
                lo = lo.max(self.hi[x] - d + 1);
                hi = hi.min(self.lo[x] + d - 1);
            }
        }
        (lo, hi)
    }

    /// Assigns `c` to the next edge `(u, v)`; returns false (leaving the
    /// state unchanged) when a prune fires.
    fn push(&mut self, u: usize, v: usize, c: i64, k: u16, window: i64) -> bool {
        for x in [u, v] {
            let s = self.slot(x, c, window);
            if self.count[s] >= k {
                return false;
            }
            let lo = self.lo[x].min(c);
            let hi = self.hi[x].max(c);
            let span = (hi - lo + 1) as usize;
            let distinct = self.distinct[x] + usize::from(self.count[s] == 0);
            let remaining = self.degree[x] - self.colored[x] - 1;
            if span > self.degree[x] || span - distinct > remaining {
                return false;
            }
        }
        self.undo
            .push([(self.lo[u], self.hi[u]), (self.lo[v], self.hi[v])]);
        for x in [u, v] {
            let s = self.slot(x, c, window);
            if self.count[s] == 0 {
                self.distinct[x] += 1;
            }
            self.count[s] += 1;
            self.colored[x] += 1;
            self.lo[x] = self.lo[x].min(c);
            self.hi[x] = self.hi[x].max(c);
        }
        self.colors.push(c);
        true
    }

    fn pop(&mut self, u: usize, v: usize, window: i64) {
        let c = self.colors.pop().expect("pop after push");
        let [(lu, hu), (lv, hv)] = self.undo.pop().expect("pop after push");
        for x in [u, v] {
            let s = self.slot(x, c, window);
            self.count[s] -= 1;
            if self.count[s] == 0 {
                self.distinct[x] -= 1;
            }
            self.colored[x] -= 1;
        }
        self.lo[u] = lu;
        self.hi[u] = hu;
        self.lo[v] = lv;
        self.hi[v] = hv;
    }
}

enum Step {
    Found,
    Exhausted,
    Cancelled,
}

impl Shared<'_> {
    fn tick(&self, st: &mut State, branch: usize) -> bool {
        st.local_nodes += 1;
        if !st.local_nodes.is_multiple_of(CHECK_EVERY) {
            return true;
        }
        let total = self.nodes.fetch_add(CHECK_EVERY, Ordering::Relaxed) + CHECK_EVERY;
        if self.stop.load(Ordering::Relaxed) || self.best_branch.load(Ordering::Relaxed) < branch {
            return false;
        }
        let over_nodes = self.budget.max_nodes.is_some_and(|m| total > m);
        let over_time = self
            .budget
            .time_limit
            .is_some_and(|t| self.start.elapsed() > t);
        if over_nodes || over_time {
            self.over_budget.store(true, Ordering::Relaxed);
            self.stop.store(true, Ordering::Relaxed);
            return false;
        }
        true
    }

    fn dfs(&self, st: &mut State, pos: usize, branch: usize) -> Step {
        if pos == self.order.len() {
            return Step::Found;
        }
        let (u, v) = self.ends[pos];
        let (lo, hi) = st.range(u, v, self.window);
        for c in lo..=hi {
            if !self.tick(st, branch) {
                return Step::Cancelled;
            }
            if !st.push(u, v, c, self.k, self.window) {
                continue;
            }
            match self.dfs(st, pos + 1, branch) {
                Step::Found => return Step::Found,
                Step::Cancelled => {
                    st.pop(u, v, self.window);
                    return Step::Cancelled;
                }
                Step::Exhausted => st.pop(u, v, self.window),
            }
        }
        Step::Exhausted
    }

    fn record(&self, branch: usize, st: &State) {
        let mut w = self.witness.lock().expect("witness lock");
        if w.as_ref().is_none_or(|(b, _)| branch < *b) {
            *w = Some((branch, st.colors.clone()));
            self.best_branch.fetch_min(branch, Ordering::Relaxed);
        }
    }
}

/// Returns the result and the number of nodes expanded.
pub(crate) fn search_connected(g: &Graph, k: usize, budget: &SearchBudget) -> (SearchResult, u64) {
    let order = bfs_edge_order(g);
    if order.is_empty() {
        return (SearchResult::Found(EdgeColoring::new(Vec::new())), 0);
    }
    let window = budget.window.unwrap_or_else(|| default_window(g));
    let ends = order.iter().map(|&e| g.endpoints(e)).collect();
    let shared = Shared {
        k: k.min(u16::MAX as usize) as u16,
        order,
        ends,
        window,
        budget,
        start: Instant::now(),
        nodes: AtomicU64::new(0),
        stop: AtomicBool::new(false),
        over_budget: AtomicBool::new(false),
        best_branch: AtomicUsize::new(usize::MAX),
        witness: Mutex::new(None),
    };

    // Top level: the first edge is fixed (to 0 under symmetry breaking),
    // and each color of the second edge is an independent branch.
    let first_colors: Vec<i64> = if budget.symmetry_breaking {
        vec![0]
    } else {
        (-window..=window).collect()
    };
    let mut branches: Vec<(i64, Option<i64>)> = Vec::new();
    {
        let mut st = State::new(g, window, shared.order.len());
        let (u0, v0) = shared.ends[0];
        for &c0 in &first_colors {
            if !st.push(u0, v0, c0, shared.k, window) {
                continue;
            }
            if shared.order.len() == 1 {
                branches.push((c0, None));
            } else {
                let (u1, v1) = shared.ends[1];
                let (lo, hi) = st.range(u1, v1, window);
                let lo = if budget.symmetry_breaking {
                    lo.max(0)
                } else {
                    lo
                };
                branches.extend((lo..=hi).map(|c1| (c0, Some(c1))));
            }
            st.pop(u0, v0, window);
        }
    }

    let next = AtomicUsize::new(0);
    let workers = budget.worker_count().min(branches.len()).max(1);
    let run = || {
        let mut st = State::new(g, window, shared.order.len());
        loop {
            let b = next.fetch_add(1, Ordering::Relaxed);
            if b >= branches.len()
                || shared.stop.load(Ordering::Relaxed)
                || shared.best_branch.load(Ordering::Relaxed) < b
            {
                break;
            }
            let (c0, c1) = branches[b];
            let (u0, v0) = shared.ends[0];
            if !st.push(u0, v0, c0, shared.k, window) {
                continue;
            }
            let mut depth = 1;
            let ok = match c1 {
                None => true,
                Some(c1) => {
                    let (u1, v1) = shared.ends[1];
                    depth = 2;
                    st.push(u1, v1, c1, shared.k, window)
                }
            };
            if ok {
                if let Step::Found = shared.dfs(&mut st, depth, b) {
                    shared.record(b, &st);
                }
                while !st.colors.is_empty() {
                    let p = st.colors.len() - 1;
                    let (u, v) = shared.ends[p];
                    st.pop(u, v, window);
                }
            } else {
                st.pop(u0, v0, window);
            }
        }
        shared
            .nodes
            .fetch_add(st.local_nodes % CHECK_EVERY, Ordering::Relaxed);
    };
    if workers == 1 {
        run();
    } else {
        std::thread::scope(|s| {
            for _ in 0..workers {
                s.spawn(run);
            }
        });
    }

    let nodes = shared.nodes.load(Ordering::Relaxed);
    let witness = shared.witness.into_inner().expect("witness lock");
    let result = match witness {
        Some((_, colors)) => {
            let mut out = vec![0; g.edge_count()];
            for (pos, c) in colors.into_iter().enumerate() {
                out[shared.order[pos].0] = c;
            }
            SearchResult::Found(EdgeColoring::new(out))
        }
        None if shared.over_budget.load(Ordering::Relaxed) => SearchResult::BudgetExceeded,
        None => SearchResult::Exhausted,
    };
    (result, nodes)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{complete, cycle, path, star};

    #[test]
    fn bfs_order_starts_at_the_hub() {
        let g = star(4).unwrap();
        let order = bfs_edge_order(&g);
        assert_eq!(order.len(), 4);
        for e in order {
            assert_eq!(g.endpoints(e).0, 0);
        }
    }

    #[test]
    fn every_edge_after_the_first_touches_an_earlier_one() {
        for g in [cycle(7).unwrap(), complete(5).unwrap(), path(6).unwrap()] {
            let order = bfs_edge_order(&g);
            let mut touched = vec![false; g.vertex_count()];
            for (i, &e) in order.iter().enumerate() {
                let (u, v) = g.endpoints(e);
                assert!(i == 0 || touched[u] || touched[v]);
                touched[u] = true;
                touched[v] = true;
            }
        }
    }

    #[test]
    fn window_of_a_path() {
        // P4 has degrees 1,2,2,1
        assert_eq!(default_window(&path(4).unwrap()), 3);
    }
}
