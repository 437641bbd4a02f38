//! Picking a constructive colorer for a family.

use anyhow::{anyhow, bail, Result};
use serde::Serialize;

use impropriety::constructions::{
    color_corona, color_forest, color_iterated_triangulation, color_multipartite_stst,
    color_outerplanar, color_square_of_path, color_two_path, color_two_tree, corona_bound,
    CoronaStrategy,
};
use impropriety::exact::{exact_impropriety, SearchBudget};
use impropriety::families::{generate, FamilyMeta, FamilyRecipe, MultipartiteLabels};
use impropriety::{verify, EdgeColoring, Graph};

/// A coloring together with the graph it colors and the bound the
/// construction guarantees.
pub struct Colored {
    pub graph: Graph,
    pub coloring: EdgeColoring,
    pub bound: usize,
    pub labels: Option<MultipartiteLabels>,
    pub details: Details,
}

#[derive(Debug, Default, Serialize)]
pub struct Details {
    pub colorer: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub strategy: Option<CoronaStrategy>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub base_impropriety: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub fallbacks: Option<usize>,
}

impl Colored {
    fn new(graph: Graph, coloring: EdgeColoring, bound: usize, colorer: &'static str) -> Self {
        Colored {
            graph,
            coloring,
            bound,
            labels: None,
            details: Details {
                colorer,
                ..Details::default()
            },
        }
    }
}

#[derive(Serialize)]
pub struct ColorJson<'a> {
    pub colors: &'a [i64],
    pub impropriety: usize,
    pub bound: usize,
    #[serde(flatten)]
    pub details: &'a Details,
}

fn no_colorer(kind: &str) -> anyhow::Error {
    anyhow!("no constructive colorer for {kind}; use `solve` for an exact coloring")
}

/// Colors a generated family member with the matching construction.
pub fn color_family(recipe: &FamilyRecipe, strategy: Option<CoronaStrategy>) -> Result<Colored> {
    if strategy.is_some() && !matches!(recipe, FamilyRecipe::Corona { .. }) {
        bail!("--strategy only applies to corona products");
    }
    match recipe {
        FamilyRecipe::CompleteMultipartite { parts } => {
            let m = parts.len();
            if m < 2 || !m.is_power_of_two() {
                bail!("the multipartite colorer needs a power-of-two number of parts");
            }
            let (s, t) = (parts[0], parts[1]);
            let alternating = parts
                .iter()
                .enumerate()
                .all(|(i, &p)| p == if i % 2 == 0 { s } else { t });
            if !alternating {
                bail!("the multipartite colorer needs part sizes s,t,s,t,...");
            }
            let out = color_multipartite_stst(s, t, m.trailing_zeros())?;
            let mut c = Colored::new(out.graph, out.coloring, 1, "multipartite");
            c.labels = Some(out.labels);
            Ok(c)
        }
        FamilyRecipe::Path { .. }
        | FamilyRecipe::Star { .. }
        | FamilyRecipe::Spider { .. }
        | FamilyRecipe::Caterpillar { .. }
        | FamilyRecipe::Tree { .. } => {
            let (g, _) = generate(recipe)?;
            let c = color_forest(&g)?;
            Ok(Colored::new(g, c, 1, "forest"))
        }
        FamilyRecipe::SquareOfPath { n } => {
            let (g, c) = color_square_of_path(*n)?;
            Ok(Colored::new(g, c, 1, "square-of-path"))
        }
        FamilyRecipe::TwoPath { .. } => {
            let (_, meta) = generate(recipe)?;
            let FamilyMeta::TwoPath(seq) = meta else {
                unreachable!("two-path recipes carry their sequence")
            };
            let (g, c) = color_two_path(&seq)?;
            Ok(Colored::new(g, c, 2, "two-path"))
        }
        FamilyRecipe::TwoTree { .. } => {
            let (g, meta) = generate(recipe)?;
            let FamilyMeta::TwoTree(trace) = meta else {
                unreachable!("two-tree recipes carry their trace")
            };
            let out = color_two_tree(&g, &trace)?;
            let mut c = Colored::new(g, out.coloring, out.budget, "two-tree");
            c.details.fallbacks = Some(out.fallbacks);
            Ok(c)
        }
        FamilyRecipe::IteratedTriangulation { .. } => {
            let (_, meta) = generate(recipe)?;
            let FamilyMeta::Triangulation(trace) = meta else {
                unreachable!("triangulation recipes carry their trace")
            };
            let (g, c) = color_iterated_triangulation(&trace)?;
            let bound = g.max_degree().div_ceil(3);
            Ok(Colored::new(g, c, bound, "triangulation"))
        }
        FamilyRecipe::MaximalOuterplanar { .. } => {
            let (g, _) = generate(recipe)?;
            color_outerplanar_graph(g)
        }
        FamilyRecipe::Corona { base, fiber } => {
            let (g, _) = generate(base)?;
            let (h, _) = generate(fiber)?;
            let (graph, meta) = generate(recipe)?;
            let FamilyMeta::Corona(layout) = meta else {
                unreachable!("corona recipes carry their layout")
            };
            let base_solution = exact_impropriety(&g, &SearchBudget::default())?;
            let strategy = strategy
                .or_else(|| CoronaStrategy::for_fiber(fiber))
                .unwrap_or(CoronaStrategy::General);
            let coloring =
                color_corona(&g, &base_solution.witness, fiber, &graph, &layout, strategy)?;
            let bound = corona_bound(strategy, base_solution.impropriety, &h);
            let mut c = Colored::new(graph, coloring, bound, "corona");
            c.details.strategy = Some(strategy);
            c.details.base_impropriety = Some(base_solution.impropriety);
            Ok(c)
        }
        other => Err(no_colorer(other.kind())),
    }
}

pub fn color_outerplanar_graph(g: Graph) -> Result<Colored> {
    let out = color_outerplanar(&g)?;
    let mut c = Colored::new(g, out.coloring, out.budget, "outerplanar");
    c.details.fallbacks = Some(out.fallbacks);
    Ok(c)
}

/// Colors a graph read from a file: forests directly, anything else only
/// when a family says which construction applies.
pub fn color_graph(g: Graph, family: Option<&str>) -> Result<Colored> {
    match family {
        Some("outerplanar") => color_outerplanar_graph(g),
        None | Some("tree") if g.is_forest() => {
            let c = color_forest(&g)?;
            Ok(Colored::new(g, c, 1, "forest"))
        }
        None => Err(no_colorer("this graph")),
        Some("tree") => bail!("the graph is not a forest"),
        Some(other) => {
            bail!("--graph can be combined only with --family outerplanar or tree, not {other}")
        }
    }
}

/// Re-verifies a construction before anything is printed.
pub fn checked_impropriety(c: &Colored) -> Result<usize> {
    let report = verify(&c.graph, &c.coloring)?;
    match report.impropriety().value() {
        Some(k) if k <= c.bound => Ok(k),
        got => Err(anyhow!(
            impropriety::constructions::ConstructionError::BoundViolated {
                got,
                bound: c.bound,
            }
        )),
    }
}
