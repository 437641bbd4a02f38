//! Instance sets for the `scan` subcommand.

use anyhow::{bail, Result};
use clap::ValueEnum;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use impropriety::exact::ScanInstance;
use impropriety::families::{
    complete_multipartite, enumerate_connected_graphs, enumerate_maximal_outerplanar,
    enumerate_two_trees, wheel,
};
use impropriety::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum InstanceSet {
    /// All 2-trees on 3..=N vertices (N <= 10)
    TwoTrees,
    /// All connected graphs on 1..=N vertices (N <= 6)
    Connected,
    /// Wheels W_4..=W_N
    Wheels,
    /// All maximal outerplanar graphs on 3..=N vertices (N <= 12), each
    /// followed by a copy with one seeded edge removed
    Outerplanar,
    /// Complete multipartite graphs with at least two parts and at most N
    /// vertices in total
    Multipartite,
}

fn instance(family: &str, id: String, graph: Graph) -> ScanInstance {
    ScanInstance {
        family: family.to_string(),
        instance_id: id,
        graph,
    }
}

/// Part-size lists in nonincreasing order with `parts >= 2` and sum `<= n`.
fn part_sizes(n: usize) -> Vec<Vec<usize>> {
    fn grow(rest: usize, cap: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() >= 2 {
            out.push(cur.clone());
        }
        for p in (1..=cap.min(rest)).rev() {
            cur.push(p);
            grow(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    grow(n, n, &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// Removes one random edge, keeping the graph connected if possible.
fn delete_one_edge(g: &Graph, rng: &mut ChaCha8Rng) -> Option<Graph> {
    let mut order: Vec<usize> = (0..g.edge_count()).collect();
    order.shuffle(rng);
    order.into_iter().find_map(|skip| {
        let edges = g
            .edges()
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != skip)
            .map(|(_, &e)| e);
        let h = Graph::new(g.vertex_count(), edges).expect("subgraph of a simple graph");
        h.is_connected().then_some(h)
    })
}

pub fn instances(
    set: InstanceSet,
    n: usize,
    max_delta: Option<usize>,
    seed: u64,
) -> Result<Vec<ScanInstance>> {
    let mut out = Vec::new();
    match set {
        InstanceSet::TwoTrees => {
            for order in 3..=n {
                for (i, (g, _)) in enumerate_two_trees(order)?.into_iter().enumerate() {
                    out.push(instance("two-tree", format!("n{order}-{i}"), g));
                }
            }
        }
        InstanceSet::Connected => {
            for order in 1..=n {
                for (i, g) in enumerate_connected_graphs(order)?.into_iter().enumerate() {
                    out.push(instance("connected", format!("n{order}-{i}"), g));
                }
            }
        }
        InstanceSet::Wheels => {
            if n < 4 {
                bail!("wheels start at W_4; use --n 4 or more");
            }
            for order in 4..=n {
                out.push(instance("wheel", format!("W{order}"), wheel(order)?));
            }
        }
        InstanceSet::Outerplanar => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            for order in 3..=n {
                for (i, (g, _)) in enumerate_maximal_outerplanar(order)?
                    .into_iter()
                    .enumerate()
                {
                    let thinned = delete_one_edge(&g, &mut rng);
                    out.push(instance("maximal-outerplanar", format!("n{order}-{i}"), g));
                    if let Some(h) = thinned {
                        out.push(instance("outerplanar", format!("n{order}-{i}-minus1"), h));
                    }
                }
            }
        }
        InstanceSet::Multipartite => {
            for parts in part_sizes(n) {
                let id = parts
                    .iter()
                    .map(ToString::to_string)
                    .collect::<Vec<_>>()
                    .join("-");
                out.push(instance(
                    "multipartite",
                    format!("K{id}"),
                    complete_multipartite(&parts)?.0,
                ));
            }
        }
    }
    if let Some(limit) = max_delta {
        out.retain(|i| i.graph.max_degree() <= limit);
    }
    Ok(out)
}
