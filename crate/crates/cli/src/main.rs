//! `impropriety`: generate graphs, build improper interval edge colorings,
//! verify them, and compute the impropriety exactly.
//!
//! Exit codes: 0 success, 1 verification or bound failure, 2 usage or
//! input error, 3 search budget exceeded.

mod color;
mod family;
mod io;
mod scan;

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use anyhow::{anyhow, bail, Result};
use clap::{Args, Parser, Subcommand};

use impropriety::constructions::{ConstructionError, CoronaStrategy};
use impropriety::exact::{
    conjecture_scan, exact_impropriety, exists_k_improper, Bound, SearchBudget, SearchResult,
    SolveError,
};
use impropriety::families::{generate, FamilyMeta};
use impropriety::table::emit_table;
use impropriety::{verify, EdgeColoring, Graph};

use color::{checked_impropriety, color_family, color_graph, ColorJson};
use family::FamilyArgs;
use scan::InstanceSet;

#[derive(Debug, Parser)]
#[command(
    name = "impropriety",
    version,
    about = "Improper interval edge colorings"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Generate a family member as graph JSON with its recipe
    Gen {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Color a family member with its construction and verify the result
    Color {
        #[command(flatten)]
        family: FamilyArgs,
        /// Read the graph from a file instead of generating it
        #[arg(long)]
        graph: Option<PathBuf>,
        /// Corona strategy: path, cycle, star, spider, caterpillar, general, three-set
        #[arg(long)]
        strategy: Option<CoronaStrategy>,
        /// Print the coloring matrix instead of JSON
        #[arg(long)]
        table: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check a coloring and report its impropriety
    Verify {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        coloring: PathBuf,
        /// Also fail when the impropriety exceeds K
        #[arg(long)]
        k: Option<usize>,
    },
    /// Compute the impropriety exactly, or decide one k with --k
    Solve {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long)]
        graph: Option<PathBuf>,
        #[command(flatten)]
        budget: BudgetArgs,
        #[arg(long)]
        k: Option<usize>,
        /// Write the witness coloring here
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Solve every graph of an instance set and compare with a bound
    Scan {
        /// Instance set; omit to scan the single --family instance
        #[arg(long, value_enum)]
        set: Option<InstanceSet>,
        #[command(flatten)]
        family: FamilyArgs,
        /// Bound: 2, ceil(delta/3), ceil(delta/4)+1, ceil(delta/5) or delta
        #[arg(long, default_value = "2")]
        bound: Bound,
        /// Skip instances with a larger maximum degree
        #[arg(long)]
        max_delta: Option<usize>,
        #[command(flatten)]
        budget: BudgetArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print the coloring matrix of a family member or of a colored graph
    Table {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long, requires = "coloring")]
        graph: Option<PathBuf>,
        #[arg(long, requires = "graph")]
        coloring: Option<PathBuf>,
        #[arg(long)]
        strategy: Option<CoronaStrategy>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, Args)]
struct BudgetArgs {
    /// Node limit for each decision search
    #[arg(long)]
    max_nodes: Option<u64>,
    /// Time limit in seconds for each decision search
    #[arg(long)]
    time_limit: Option<f64>,
}

impl BudgetArgs {
    fn budget(&self) -> Result<SearchBudget> {
        let time_limit = match self.time_limit {
            Some(s) if !(s.is_finite() && s > 0.0) => bail!("--time-limit must be positive"),
            Some(s) => Some(Duration::from_secs_f64(s)),
            None => None,
        };
        Ok(SearchBudget {
            max_nodes: self.max_nodes,
            time_limit,
            ..SearchBudget::default()
        })
    }
}

/// Graph from `--graph`, or generated from the family flags.
fn load_graph(family: &FamilyArgs, graph: Option<&PathBuf>) -> Result<Graph> {
    match graph {
        Some(path) if family.family.is_none() => io::read_graph(path),
        Some(_) => bail!("give either --graph or --family, not both"),
        None => Ok(generate(&family.recipe()?)?.0),
    }
}

fn run_gen(family: &FamilyArgs, out: Option<&PathBuf>) -> Result<u8> {
    let recipe = family.recipe()?;
    let (g, meta) = generate(&recipe)?;
    let mut value = serde_json::to_value(&g)?;
    value["recipe"] = serde_json::to_value(&recipe)?;
    if meta != FamilyMeta::None {
        value["meta"] = serde_json::to_value(&meta)?;
    }
    io::emit(out, &io::json(&value)?)?;
    Ok(0)
}

fn colored(
    family: &FamilyArgs,
    graph: Option<&PathBuf>,
    strategy: Option<CoronaStrategy>,
) -> Result<color::Colored> {
    match graph {
        Some(path) => {
            let g = io::read_graph(path)?;
            let name = family
                .family
                .as_deref()
                .map(family::canonical)
                .transpose()?;
            color_graph(g, name)
        }
        None => color_family(&family.recipe()?, strategy),
    }
}

fn run_color(
    family: &FamilyArgs,
    graph: Option<&PathBuf>,
    strategy: Option<CoronaStrategy>,
    table: bool,
    out: Option<&PathBuf>,
) -> Result<u8> {
    let c = colored(family, graph, strategy)?;
    let impropriety = checked_impropriety(&c)?;
    let text = if table {
        emit_table(&c.graph, &c.coloring, c.labels.as_ref())?
    } else {
        io::json(&ColorJson {
            colors: &c.coloring.colors,
            impropriety,
            bound: c.bound,
            details: &c.details,
        })?
    };
    io::emit(out, &text)?;
    Ok(0)
}

fn run_verify(graph: &Path, coloring: &Path, k: Option<usize>) -> Result<u8> {
    let g = io::read_graph(graph)?;
    let c = io::read_coloring(coloring)?;
    let report = verify(&g, &c)?;
    let mut failed = false;
    for p in report.gap_vertices() {
        println!(
            "vertex {}: colors {:?} miss {:?}",
            p.vertex,
            p.colors,
            p.missing_colors()
        );
        failed = true;
    }
    if report.all_intervals {
        println!("interval: yes");
        println!("impropriety = {}", report.max_multiplicity);
        if let Some(k) = k {
            if report.max_multiplicity > k {
                println!("exceeds k = {k}");
                failed = true;
            }
        }
    } else {
        println!("interval: no");
    }
    Ok(u8::from(failed))
}

/// Decision run for one `k`, component by component.
fn decide(g: &Graph, k: usize, budget: &SearchBudget) -> Result<(SearchResult, u64)> {
    let mut colors = vec![0i64; g.edge_count()];
    let mut nodes = 0;
    for comp in g.components() {
        let (h, origin) = g.induced(&comp);
        if h.edge_count() == 0 {
            continue;
        }
        let (result, n) = exists_k_improper(&h, k, budget)?;
        nodes += n;
        match result {
            SearchResult::Found(c) => {
                for (i, e) in origin.iter().enumerate() {
                    colors[e.index()] = c.colors[i];
                }
            }
            other => return Ok((other, nodes)),
        }
    }
    Ok((SearchResult::Found(EdgeColoring::new(colors)), nodes))
}

fn run_solve(
    g: &Graph,
    budget: &SearchBudget,
    k: Option<usize>,
    out: Option<&PathBuf>,
) -> Result<u8> {
    let start = Instant::now();
    let witness = match k {
        Some(k) => {
            let (result, nodes) = decide(g, k, budget)?;
            eprintln!("nodes = {nodes}, {:.3} s", start.elapsed().as_secs_f64());
            match result {
                SearchResult::Found(c) => {
                    println!("{k}-improper interval coloring: found");
                    c
                }
                SearchResult::Exhausted => {
                    println!("{k}-improper interval coloring: none");
                    return Ok(1);
                }
                SearchResult::BudgetExceeded => {
                    return Err(SolveError::BudgetExceeded { k, nodes }.into());
                }
            }
        }
        None => {
            let outcome = exact_impropriety(g, budget)?;
            println!("mu_int = {}", outcome.impropriety);
            eprintln!(
                "nodes = {}, {:.3} s",
                outcome.stats.nodes,
                outcome.stats.elapsed.as_secs_f64()
            );
            outcome.witness
        }
    };
    if let Some(path) = out {
        io::emit(Some(path), &io::json(&witness)?)?;
    }
    Ok(0)
}

fn run_scan(
    set: Option<InstanceSet>,
    family: &FamilyArgs,
    bound: Bound,
    max_delta: Option<usize>,
    budget: &SearchBudget,
    out: Option<&PathBuf>,
) -> Result<u8> {
    let instances = match set {
        Some(set) => {
            let n = family.n.ok_or_else(|| anyhow!("--set needs --n"))?;
            scan::instances(set, n, max_delta, family.seed)?
        }
        None => {
            let recipe = family.recipe()?;
            let graph = generate(&recipe)?.0;
            vec![impropriety::exact::ScanInstance {
                family: recipe.kind().to_string(),
                instance_id: "0".into(),
                graph,
            }]
        }
    };
    let report = conjecture_scan(instances, bound, budget);
    io::emit(out, &report.to_csv())?;
    let violations = report.violations().count();
    let unknown = report.budget_exceeded().count();
    eprintln!(
        "{} instances, bound {bound}: {violations} violations, {unknown} over budget, max mu_int {}",
        report.rows.len(),
        report.max_mu().map_or("-".to_string(), |m| m.to_string()),
    );
    Ok(if violations > 0 {
        1
    } else if unknown > 0 {
        3
    } else {
        0
    })
}

fn run_table(
    family: &FamilyArgs,
    graph: Option<&PathBuf>,
    coloring: Option<&PathBuf>,
    strategy: Option<CoronaStrategy>,
    out: Option<&PathBuf>,
) -> Result<u8> {
    let text = match (graph, coloring) {
        (Some(g), Some(c)) => {
            let g = io::read_graph(g)?;
            let c = io::read_coloring(c)?;
            emit_table(&g, &c, None)?
        }
        _ => {
            let c = color_family(&family.recipe()?, strategy)?;
            checked_impropriety(&c)?;
            emit_table(&c.graph, &c.coloring, c.labels.as_ref())?
        }
    };
    io::emit(out, &text)?;
    Ok(0)
}

fn run(cli: Cli) -> Result<u8> {
    match cli.command {
        Command::Gen { family, out } => run_gen(&family, out.as_ref()),
        Command::Color {
            family,
            graph,
            strategy,
            table,
            out,
        } => run_color(&family, graph.as_ref(), strategy, table, out.as_ref()),
        Command::Verify { graph, coloring, k } => run_verify(&graph, &coloring, k),
        Command::Solve {
            family,
            graph,
            budget,
            k,
            out,
        } => {
            let g = load_graph(&family, graph.as_ref())?;
            run_solve(&g, &budget.budget()?, k, out.as_ref())
        }
        Command::Scan {
            set,
            family,
            bound,
            max_delta,
            budget,
            out,
        } => run_scan(
            set,
            &family,
            bound,
            max_delta,
            &budget.budget()?,
            out.as_ref(),
        ),
        Command::Table {
            family,
            graph,
            coloring,
            strategy,
            out,
        } => run_table(
            &family,
            graph.as_ref(),
            coloring.as_ref(),
            strategy,
            out.as_ref(),
        ),
    }
}

fn exit_code(err: &anyhow::Error) -> u8 {
    for cause in err.chain() {
        if let Some(SolveError::BudgetExceeded { .. }) = cause.downcast_ref() {
            return 3;
        }
        if let Some(ConstructionError::BoundViolated { .. }) = cause.downcast_ref() {
            return 1;
        }
    }
    2
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(exit_code(&err))
        }
    }
}
