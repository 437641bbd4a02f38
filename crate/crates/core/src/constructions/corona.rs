//! Colorings of corona products `G ⊙ H`.
//!
//! Each strategy first colors `K_1 ⊙ H` (the hub joined to one copy of
//! `H`) with local colors, then places a shifted copy of that coloring at
//! every vertex `v` of `G` so the attachment colors start one above the
//! largest `G`-color at `v`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{ensure_within, precondition, ConstructionError};
use crate::coloring::{verify, EdgeColoring};
use crate::families::{generate, CoronaLayout, FamilyRecipe};
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CoronaStrategy {
    Path,
    Cycle,
    Star,
    Spider,
    Caterpillar,
    /// Every attachment gets one color and every edge of `H` the next.
    General,
    /// Attachments split into three balanced classes with consecutive
    /// colors; edges of `H` take the middle one.
    ThreeSet,
}

impl CoronaStrategy {
    pub const ALL: [CoronaStrategy; 7] = [
        CoronaStrategy::Path,
        CoronaStrategy::Cycle,
        CoronaStrategy::Star,
        CoronaStrategy::Spider,
        CoronaStrategy::Caterpillar,
        CoronaStrategy::General,
        CoronaStrategy::ThreeSet,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CoronaStrategy::Path => "path",
            CoronaStrategy::Cycle => "cycle",
            CoronaStrategy::Star => "star",
            CoronaStrategy::Spider => "spider",
            CoronaStrategy::Caterpillar => "caterpillar",
            CoronaStrategy::General => "general",
            CoronaStrategy::ThreeSet => "three-set",
        }
    }

    /// The specialised strategy for a fiber family, if there is one.
    pub fn for_fiber(fiber: &FamilyRecipe) -> Option<CoronaStrategy> {
        match fiber {
            FamilyRecipe::Path { .. } => Some(CoronaStrategy::Path),
            FamilyRecipe::Cycle { .. } => Some(CoronaStrategy::Cycle),
            FamilyRecipe::Star { .. } => Some(CoronaStrategy::Star),
            FamilyRecipe::Spider { legs } if legs.len() <= 4 => Some(CoronaStrategy::Spider),
            FamilyRecipe::Caterpillar { .. } => Some(CoronaStrategy::Caterpillar),
            _ => None,
        }
    }
}

impl fmt::Display for CoronaStrategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CoronaStrategy {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        CoronaStrategy::ALL
            .into_iter()
            .find(|st| st.name() == s)
            .ok_or_else(|| format!("unknown strategy {s:?}"))
    }
}

/// Guaranteed impropriety of [`color_corona`] given `μ_int(G)` (or the
/// impropriety of the supplied coloring of `G`).
pub fn corona_bound(strategy: CoronaStrategy, mu_g: usize, h: &Graph) -> usize {
    match strategy {
        CoronaStrategy::General => mu_g.max(h.vertex_count()),
        CoronaStrategy::ThreeSet => mu_g
            .max(h.vertex_count().div_ceil(3))
            .max(h.max_degree() + 1),
        _ => mu_g.max(2),
    }
}

/// Local coloring of `K_1 ⊙ H`: colors of the edges of `H` (in `H`'s edge
/// order) and of the hub's edge to each vertex of `H`.
struct Local {
    fiber_edges: Vec<i64>,
    attachments: Vec<i64>,
}

impl Local {
    fn new(h: &Graph) -> Local {
        Local {
            fiber_edges: vec![0; h.edge_count()],
            attachments: vec![0; h.vertex_count()],
        }
    }

    fn set(&mut self, h: &Graph, a: usize, b: usize, c: i64) {
        self.fiber_edges[h.edge_between(a, b).expect("fiber edge").0] = c;
    }
}

fn mismatch(strategy: CoronaStrategy, fiber: &FamilyRecipe) -> ConstructionError {
    precondition(format!(
        "strategy {strategy} does not apply to a {} fiber",
        fiber.kind()
    ))
}

/// Path `v_1 .. v_k`: `v_i x` and `v_i v_{i+1}` get `i`, `v_k x` gets `k`.
fn local_path(h: &Graph) -> Local {
    let mut l = Local::new(h);
    let k = h.vertex_count();
    for i in 0..k {
        l.attachments[i] = i as i64 + 1;
        if i + 1 < k {
            l.set(h, i, i + 1, i as i64 + 1);
        }
    }
    l
}

/// `K_1 ⊙ C_k` is a wheel. The rim splits at `v_0` and `v_j`, `j = ⌊k/2⌋`,
/// into two paths; edges along each path count up from 1, interior spokes
/// repeat a neighboring rim color, and the spokes at `v_0` and `v_j` close
/// the hub's interval at 0 and the top.
fn local_cycle(h: &Graph) -> Local {
    let mut l = Local::new(h);
    let k = h.vertex_count();
    let j = k / 2;
    for i in 0..j {
        l.set(h, i, i + 1, i as i64 + 1);
    }
    for i in 1..j {
        l.attachments[i] = i as i64;
    }
    // bottom path u_0 = v_0, u_1 = v_{k-1}, ..., u_{k-j} = v_j
    let u = |i: usize| if i == 0 { 0 } else { k - i };
    for i in 0..k - j {
        l.set(h, u(i), u(i + 1), i as i64 + 1);
    }
    for i in 1..k - j {
        l.attachments[u(i)] = i as i64 + 1;
    }
    l.attachments[0] = 0;
    l.attachments[j] = if k.is_multiple_of(2) {
        j as i64 + 1
    } else {
        j as i64
    };
    l
}

/// Star with center `y = 0`: `y v_i` and `x v_i` get `i`, `x y` gets
/// `k + 1`.
fn local_star(h: &Graph) -> Local {
    let mut l = Local::new(h);
    let k = h.vertex_count() - 1;
    for i in 1..=k {
        l.set(h, 0, i, i as i64);
        l.attachments[i] = i as i64;
    }
    l.attachments[0] = k as i64 + 1;
    l
}

/// Spider with center 0: the hub edge to the center gets 0, two legs count
/// up `1, 2, ...` and the other two count down `-1, -2, ...`; each leg
/// vertex repeats on its hub edge the color of the leg edge reaching it.
fn local_spider(h: &Graph, legs: &[usize]) -> Local {
    let mut l = Local::new(h);
    let mut next = 1;
    for (leg, &len) in legs.iter().enumerate() {
        let sign = if leg < 2 { 1 } else { -1 };
        let mut prev = 0;
        for i in 1..=len {
            let vertex = next;
            next += 1;
            let c = sign * i as i64;
            l.set(h, prev, vertex, c);
            l.attachments[vertex] = c;
            prev = vertex;
        }
    }
    l.attachments[0] = 0;
    l
}

/// Caterpillar with spine `v_1 .. v_k` (vertices `0..k`). With
/// `c_1 = leaves(v_1)` and `c_i = c_{i-1} + 1 + leaves(v_i)`, the leaves
/// of `v_i` take the slots after `c_{i-1} + 1`, the spine edge
/// `v_i v_{i+1}` takes `c_i + 1`, the hub edge to `v_i` repeats the slot
/// `c_{i-1} + 1` (1 for `v_1`), and each leaf's hub edge repeats its leaf
/// edge.
fn local_caterpillar(h: &Graph, leaves: &[usize]) -> Local {
    let mut l = Local::new(h);
    let k = leaves.len();
    let mut next_leaf = k;
    let mut c_prev = 0i64;
    for i in 0..k {
        let first_slot = if i == 0 { 1 } else { c_prev + 2 };
        l.attachments[i] = if i == 0 { 1 } else { c_prev + 1 };
        for slot in 0..leaves[i] as i64 {
            let leaf = next_leaf;
            next_leaf += 1;
            l.set(h, i, leaf, first_slot + slot);
            l.attachments[leaf] = first_slot + slot;
        }
        let c_i = if i == 0 {
            leaves[0] as i64
        } else {
            c_prev + 1 + leaves[i] as i64
        };
        if i + 1 < k {
            l.set(h, i, i + 1, c_i + 1);
        }
        c_prev = c_i;
    }
    l
}

fn local_general(h: &Graph) -> Local {
    Local {
        fiber_edges: vec![2; h.edge_count()],
        attachments: vec![1; h.vertex_count()],
    }
}

fn local_three_set(h: &Graph) -> Local {
    Local {
        fiber_edges: vec![2; h.edge_count()],
        attachments: (0..h.vertex_count()).map(|w| (w % 3) as i64 + 1).collect(),
    }
}

/// Colors `G ⊙ H` from a coloring of `G`. `graph` and `layout` must come
/// from [`crate::families::corona`] applied to `g` and the graph generated
/// from `fiber`.
pub fn color_corona(
    g: &Graph,
    g_coloring: &EdgeColoring,
    fiber: &FamilyRecipe,
    graph: &Graph,
    layout: &CoronaLayout,
    strategy: CoronaStrategy,
) -> Result<EdgeColoring, ConstructionError> {
    let report = verify(g, g_coloring).map_err(|_| ConstructionError::UnverifiableBase)?;
    let Some(mu_g) = report.impropriety().value() else {
        return Err(ConstructionError::UnverifiableBase);
    };
    let (h, _) = generate(fiber)?;
    if layout.base_order != g.vertex_count()
        || layout.fiber_order != h.vertex_count()
        || layout.copy_edges.iter().any(|c| c.len() != h.edge_count())
        || graph.edge_count()
            != g.edge_count() + g.vertex_count() * (h.edge_count() + h.vertex_count())
    {
        return Err(precondition("corona layout does not match G and H"));
    }

    let local = match (strategy, fiber) {
        (CoronaStrategy::Path, FamilyRecipe::Path { .. }) => local_path(&h),
        (CoronaStrategy::Cycle, FamilyRecipe::Cycle { .. }) => local_cycle(&h),
        (CoronaStrategy::Star, FamilyRecipe::Star { .. }) => local_star(&h),
        (CoronaStrategy::Spider, FamilyRecipe::Spider { legs }) => {
            if legs.len() > 4 {
                return Err(precondition("spider strategy handles at most 4 legs"));
            }
            local_spider(&h, legs)
        }
        (CoronaStrategy::Caterpillar, FamilyRecipe::Caterpillar { leaves }) => {
            local_caterpillar(&h, leaves)
        }
        (CoronaStrategy::General, _) => local_general(&h),
        (CoronaStrategy::ThreeSet, _) => {
            if h.vertex_count() < 3 {
                return Err(precondition("three-set strategy needs |V(H)| >= 3"));
            }
            local_three_set(&h)
        }
        _ => return Err(mismatch(strategy, fiber)),
    };
    let local_min = *local.attachments.iter().min().expect("H is nonempty");

    let mut colors = vec![0i64; graph.edge_count()];
    colors[..g.edge_count()].copy_from_slice(&g_coloring.colors);
    for v in layout.base_vertices() {
        let top = g
            .incident(v)
            .iter()
            .map(|&(_, e)| g_coloring.get(e))
            .max()
            .unwrap_or(0);
        let shift = top + 1 - local_min;
        for (j, &e) in layout.copy_edges[v].iter().enumerate() {
            colors[e.0] = local.fiber_edges[j] + shift;
        }
        for (x, &e) in layout.attachments[v].iter().enumerate() {
            colors[e.0] = local.attachments[x] + shift;
        }
    }
    let coloring = EdgeColoring::new(colors);
    ensure_within(graph, &coloring, corona_bound(strategy, mu_g, &h))?;
    Ok(coloring)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{corona, cycle, path};

    fn run(
        g: &Graph,
        fiber: FamilyRecipe,
        strategy: CoronaStrategy,
    ) -> Result<usize, ConstructionError> {
        let (h, _) = generate(&fiber).unwrap();
        let (gh, layout) = corona(g, &h).unwrap();
        let base = crate::constructions::color_forest(g).or_else(|_| {
            Ok::<_, ConstructionError>(EdgeColoring::monochromatic(g.edge_count(), 1))
        })?;
        let c = color_corona(g, &base, &fiber, &gh, &layout, strategy)?;
        Ok(verify(&gh, &c).unwrap().max_multiplicity)
    }

    #[test]
    fn wheels_from_cycles() {
        let k1 = Graph::empty(1);
        for k in 3..=200 {
            let got = run(&k1, FamilyRecipe::Cycle { n: k }, CoronaStrategy::Cycle).unwrap();
            assert!(got <= 2, "C_{k}");
        }
    }

    #[test]
    fn specialised_strategies_on_k1() {
        let k1 = Graph::empty(1);
        for fiber in [
            FamilyRecipe::Path { n: 1 },
            FamilyRecipe::Path { n: 6 },
            FamilyRecipe::Star { leaves: 5 },
            FamilyRecipe::Spider {
                legs: vec![2, 2, 1, 1],
            },
            FamilyRecipe::Spider {
                legs: vec![3, 1, 2],
            },
            FamilyRecipe::Caterpillar {
                leaves: vec![2, 0, 3, 1],
            },
            FamilyRecipe::Caterpillar {
                leaves: vec![0, 0, 2],
            },
            FamilyRecipe::Caterpillar { leaves: vec![3] },
        ] {
            let strategy = CoronaStrategy::for_fiber(&fiber).unwrap();
            assert!(run(&k1, fiber.clone(), strategy).unwrap() <= 2, "{fiber:?}");
        }
    }

    #[test]
    fn spider_with_five_legs_is_rejected() {
        let fiber = FamilyRecipe::Spider { legs: vec![1; 5] };
        assert!(CoronaStrategy::for_fiber(&fiber).is_none());
        assert!(run(&Graph::empty(1), fiber, CoronaStrategy::Spider).is_err());
    }

    #[test]
    fn strategy_must_match_fiber() {
        let fiber = FamilyRecipe::Cycle { n: 4 };
        assert!(run(&path(3).unwrap(), fiber, CoronaStrategy::Star).is_err());
    }

    #[test]
    fn general_and_three_set() {
        let g = cycle(4).unwrap();
        let fiber = FamilyRecipe::Complete { n: 4 };
        assert!(run(&g, fiber.clone(), CoronaStrategy::General).unwrap() <= 4);
        assert!(run(&g, fiber, CoronaStrategy::ThreeSet).unwrap() <= 4);
    }

    #[test]
    fn strategy_names_round_trip() {
        for s in CoronaStrategy::ALL {
            assert_eq!(s.name().parse::<CoronaStrategy>(), Ok(s));
        }
    }
}
