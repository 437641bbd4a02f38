//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any
//! criterion fails.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use impropriety::constructions::{
    color_corona, color_iterated_triangulation, color_multipartite_stst, color_outerplanar,
    color_square_of_path, color_two_path, color_two_tree, corona_bound, CoronaStrategy,
};
use impropriety::exact::{exact_impropriety, naive_impropriety, SearchBudget};
use impropriety::families::{
    enumerate_connected_by_edges, enumerate_connected_graphs, enumerate_two_trees, generate,
    FamilyMeta, FamilyRecipe, TriangulationTrace, TwoPathSequence,
};
use impropriety::table::parse_table;
use impropriety::{verify, EdgeColoring, Graph};

type Outcome = Result<String, String>;

/// Name, time limit, check.
type Criterion = (&'static str, Duration, fn() -> Outcome);

/// The expected K_{4,3,4,3} matrix, rows and columns in the order
/// x1,1..x1,4, y1,1..y1,3, x2,1..x2,4, y2,1..y2,3; 0 marks a blank cell.
const K4343: [[i64; 14]; 14] = [
    [0, 0, 0, 0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10],
    [0, 0, 0, 0, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11],
    [0, 0, 0, 0, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12],
    [0, 0, 0, 0, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13],
    [1, 2, 3, 4, 0, 0, 0, 8, 9, 10, 11, 5, 6, 7],
    [2, 3, 4, 5, 0, 0, 0, 9, 10, 11, 12, 6, 7, 8],
    [3, 4, 5, 6, 0, 0, 0, 10, 11, 12, 13, 7, 8, 9],
    [4, 5, 6, 7, 8, 9, 10, 0, 0, 0, 0, 1, 2, 3],
    [5, 6, 7, 8, 9, 10, 11, 0, 0, 0, 0, 2, 3, 4],
    [6, 7, 8, 9, 10, 11, 12, 0, 0, 0, 0, 3, 4, 5],
    [7, 8, 9, 10, 11, 12, 13, 0, 0, 0, 0, 4, 5, 6],
    [8, 9, 10, 11, 5, 6, 7, 1, 2, 3, 4, 0, 0, 0],
    [9, 10, 11, 12, 6, 7, 8, 2, 3, 4, 5, 0, 0, 0],
    [10, 11, 12, 13, 7, 8, 9, 3, 4, 5, 6, 0, 0, 0],
];

fn check(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn mu(g: &Graph) -> usize {
    exact_impropriety(g, &SearchBudget::default())
        .expect("unlimited budget")
        .impropriety
}

fn impropriety(g: &Graph, c: &EdgeColoring) -> Option<usize> {
    verify(g, c).ok()?.impropriety().value()
}

fn built(recipe: FamilyRecipe) -> (Graph, FamilyMeta) {
    generate(&recipe).expect("valid recipe")
}

fn table_reproduction() -> Outcome {
    let start = Instant::now();
    let out = Command::new(env!("CARGO_BIN_EXE_impropriety"))
        .args([
            "color",
            "--family",
            "multipartite",
            "--s",
            "4",
            "--t",
            "3",
            "--ell",
            "2",
            "--table",
        ])
        .output()
        .map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    check(out.status.success(), || {
        format!("exit status {}", out.status)
    })?;
    let cells = parse_table(&String::from_utf8_lossy(&out.stdout));
    check(
        cells.len() == 14 && cells.iter().all(|r| r.len() == 14),
        || format!("expected a 14x14 matrix, got {} rows", cells.len()),
    )?;
    let mut colored = 0;
    for (i, row) in cells.iter().enumerate() {
        for (j, cell) in row.iter().enumerate() {
            let want = (K4343[i][j] != 0).then_some(K4343[i][j]);
            check(*cell == want, || {
                format!("cell ({i},{j}) is {cell:?}, expected {want:?}")
            })?;
            colored += usize::from(cell.is_some());
        }
    }
    check(colored == 146, || format!("{colored} colored cells"))?;
    check(elapsed < Duration::from_secs(1), || {
        format!("took {elapsed:?}")
    })?;
    Ok(format!(
        "196 cells match, 146 colored, {} ms",
        elapsed.as_millis()
    ))
}

fn multipartite_suite() -> Outcome {
    let mut count = 0;
    for s in 1..=4 {
        for t in 1..=4 {
            for ell in 1..=3 {
                let out = color_multipartite_stst(s, t, ell).map_err(|e| e.to_string())?;
                let k = impropriety(&out.graph, &out.coloring);
                check(k == Some(1), || {
                    format!("K(s={s},t={t},ell={ell}) has {k:?}")
                })?;
                count += 1;
            }
        }
    }
    Ok(format!("{count} graphs interval colored"))
}

fn ground_truths() -> Outcome {
    let mut cases: Vec<(String, FamilyRecipe, usize)> = vec![
        ("K3".into(), FamilyRecipe::Complete { n: 3 }, 2),
        ("K4".into(), FamilyRecipe::Complete { n: 4 }, 1),
        ("K5".into(), FamilyRecipe::Complete { n: 5 }, 2),
        ("C4".into(), FamilyRecipe::Cycle { n: 4 }, 1),
        ("C5".into(), FamilyRecipe::Cycle { n: 5 }, 2),
        (
            "C3 corona P2".into(),
            FamilyRecipe::Corona {
                base: Box::new(FamilyRecipe::Cycle { n: 3 }),
                fiber: Box::new(FamilyRecipe::Path { n: 2 }),
            },
            2,
        ),
    ];
    for n in 4..=10 {
        let want = if n % 3 == 1 { 1 } else { 2 };
        cases.push((format!("W{n}"), FamilyRecipe::Wheel { n }, want));
    }
    for (name, recipe, want) in &cases {
        let got = mu(&built(recipe.clone()).0);
        check(got == *want, || {
            format!("mu_int({name}) = {got}, expected {want}")
        })?;
    }
    Ok(format!("{} values match", cases.len()))
}

fn random_connected(rng: &mut ChaCha8Rng, max_edges: usize) -> Graph {
    let n = rng.gen_range(3..=8);
    let mut edges: Vec<(usize, usize)> = (1..n).map(|v| (rng.gen_range(0..v), v)).collect();
    let mut missing: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|p| !edges.contains(p))
        .collect();
    missing.shuffle(rng);
    let target = rng.gen_range(n - 1..=max_edges.max(n - 1));
    edges.extend(missing.into_iter().take(target - (n - 1)));
    edges.shuffle(rng);
    Graph::new(n, edges).expect("distinct pairs")
}

fn oracle_equivalence() -> Outcome {
    let exhaustive = enumerate_connected_by_edges(7).map_err(|e| e.to_string())?;
    for g in &exhaustive {
        let (fast, slow) = (mu(g), naive_impropriety(g));
        check(fast == slow, || {
            format!("{g:?}: solver {fast}, oracle {slow}")
        })?;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(20_241_015);
    for _ in 0..50 {
        let g = random_connected(&mut rng, 10);
        let (fast, slow) = (mu(&g), naive_impropriety(&g));
        check(fast == slow, || {
            format!("{g:?}: solver {fast}, oracle {slow}")
        })?;
    }
    Ok(format!(
        "{} exhaustive + 50 random graphs agree",
        exhaustive.len()
    ))
}

fn two_tree_suite() -> Outcome {
    let mut count = 0;
    let mut max_mu = 0;
    for n in 3..=7 {
        for (g, trace) in enumerate_two_trees(n).map_err(|e| e.to_string())? {
            let delta = g.max_degree();
            if delta >= 3 {
                let out = color_two_tree(&g, &trace).map_err(|e| e.to_string())?;
                let k = impropriety(&g, &out.coloring);
                check(k.is_some_and(|k| k <= delta.div_ceil(3)), || {
                    format!("construction on {g:?} gives {k:?}")
                })?;
            }
            let m = mu(&g);
            check(m <= 2, || format!("mu_int = {m} on {g:?}"))?;
            max_mu = max_mu.max(m);
            count += 1;
        }
    }
    Ok(format!("{count} 2-trees, max mu_int {max_mu}"))
}

fn low_degree_scan() -> Outcome {
    let mut count = 0;
    for n in 1..=6 {
        for g in enumerate_connected_graphs(n).map_err(|e| e.to_string())? {
            if g.max_degree() > 5 {
                continue;
            }
            let m = mu(&g);
            check(m <= 2, || format!("mu_int = {m} on {g:?}"))?;
            count += 1;
        }
    }
    Ok(format!("{count} connected graphs, all mu_int <= 2"))
}

fn outerplanar_suite() -> Outcome {
    let (mut count, mut fallbacks, mut seed) = (0, 0, 0u64);
    while count < 100 {
        let n = 8 + (seed % 13) as usize;
        let (g, _) = built(FamilyRecipe::MaximalOuterplanar { n, seed });
        seed += 1;
        let delta = g.max_degree();
        if delta < 6 {
            continue;
        }
        let out = color_outerplanar(&g).map_err(|e| format!("seed {}: {e}", seed - 1))?;
        let k = impropriety(&g, &out.coloring);
        check(k.is_some_and(|k| k <= delta.div_ceil(5)), || {
            format!("seed {}: impropriety {k:?} with delta {delta}", seed - 1)
        })?;
        fallbacks += out.fallbacks;
        count += 1;
    }
    Ok(format!("100 graphs, {fallbacks} fallbacks"))
}

fn family_colorers() -> Outcome {
    for n in 4..=50 {
        let (g, c) = color_square_of_path(n).map_err(|e| e.to_string())?;
        check(impropriety(&g, &c) == Some(1), || format!("square of P{n}"))?;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut sequences = vec![TwoPathSequence::reference_example()];
    sequences.extend((0..50).map(|_| {
        let triangles = rng.gen_range(1..=30);
        TwoPathSequence::random(triangles, &mut rng)
    }));
    for seq in &sequences {
        let (g, c) = color_two_path(seq).map_err(|e| e.to_string())?;
        let k = impropriety(&g, &c);
        check(k.is_some_and(|k| k <= 2), || format!("2-path gives {k:?}"))?;
    }
    for depth in 1..=4 {
        let (g, c) = color_iterated_triangulation(&TriangulationTrace::new(depth))
            .map_err(|e| e.to_string())?;
        let k = impropriety(&g, &c);
        check(k.is_some_and(|k| k <= g.max_degree().div_ceil(3)), || {
            format!("Tr({depth}) gives {k:?}")
        })?;
        check(c.colors.iter().all(|x| (1..=3).contains(x)), || {
            format!("Tr({depth}) uses colors outside 1..=3")
        })?;
    }
    Ok(format!(
        "47 squares, {} 2-paths, Tr(1..=4)",
        sequences.len()
    ))
}

fn corona_suite() -> Outcome {
    let bases = [
        ("P4", FamilyRecipe::Path { n: 4 }),
        ("C4", FamilyRecipe::Cycle { n: 4 }),
        ("C5", FamilyRecipe::Cycle { n: 5 }),
        ("K4", FamilyRecipe::Complete { n: 4 }),
    ];
    let fibers = [
        (FamilyRecipe::Path { n: 3 }, None),
        (FamilyRecipe::Cycle { n: 4 }, None),
        (FamilyRecipe::Star { leaves: 3 }, None),
        (
            FamilyRecipe::Spider {
                legs: vec![2, 1, 1],
            },
            None,
        ),
        (
            FamilyRecipe::Caterpillar {
                leaves: vec![1, 0, 2],
            },
            None,
        ),
        (FamilyRecipe::Caterpillar { leaves: vec![2, 2] }, None),
        (
            FamilyRecipe::Caterpillar {
                leaves: vec![0, 3, 0, 1],
            },
            None,
        ),
        (
            FamilyRecipe::Complete { n: 4 },
            Some(CoronaStrategy::General),
        ),
        (
            FamilyRecipe::Complete { n: 4 },
            Some(CoronaStrategy::ThreeSet),
        ),
    ];
    let mut count = 0;
    for (name, base) in &bases {
        let (g, _) = built(base.clone());
        let solved = exact_impropriety(&g, &SearchBudget::default()).map_err(|e| e.to_string())?;
        let mu_g = solved.impropriety;
        for (fiber, forced) in &fibers {
            let strategy = forced
                .or_else(|| CoronaStrategy::for_fiber(fiber))
                .ok_or_else(|| format!("no strategy for {fiber:?}"))?;
            let (h, _) = built(fiber.clone());
            let recipe = FamilyRecipe::Corona {
                base: Box::new(base.clone()),
                fiber: Box::new(fiber.clone()),
            };
            let (graph, FamilyMeta::Corona(layout)) = built(recipe) else {
                return Err("corona without layout".into());
            };
            let c = color_corona(&g, &solved.witness, fiber, &graph, &layout, strategy)
                .map_err(|e| format!("{name} with {fiber:?}: {e}"))?;
            let bound = corona_bound(strategy, mu_g, &h);
            let expected = match strategy {
                CoronaStrategy::General => mu_g.max(4),
                CoronaStrategy::ThreeSet => mu_g.max(4usize.div_ceil(3)).max(4),
                _ => mu_g.max(2),
            };
            check(bound == expected, || {
                format!("bound {bound}, expected {expected}")
            })?;
            let k = impropriety(&graph, &c);
            check(k.is_some_and(|k| k <= bound), || {
                format!("{name} corona {fiber:?} ({strategy}) gives {k:?} > {bound}")
            })?;
            count += 1;
        }
    }
    Ok(format!("{count} coronas within bound"))
}

fn strong_products() -> Outcome {
    let pairs = [
        (FamilyRecipe::Path { n: 3 }, FamilyRecipe::Path { n: 3 }),
        (FamilyRecipe::Cycle { n: 3 }, FamilyRecipe::Path { n: 2 }),
        (FamilyRecipe::Path { n: 2 }, FamilyRecipe::Cycle { n: 4 }),
    ];
    let mut notes = Vec::new();
    for (left, right) in pairs {
        let (g, _) = built(left.clone());
        let (h, _) = built(right.clone());
        let (gh, _) = built(FamilyRecipe::StrongProduct {
            left: Box::new(left),
            right: Box::new(right),
        });
        let (mg, mh, m) = (mu(&g), mu(&h), mu(&gh));
        let bound = mg.max(mh) + g.max_degree() * mh + h.max_degree() * mg;
        check(m <= bound, || format!("mu_int = {m} above {bound}"))?;
        notes.push(format!("{m}<={bound}"));
    }
    Ok(notes.join(", "))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        (
            "K_{4,3,4,3} table reproduction",
            Duration::from_secs(1),
            table_reproduction,
        ),
        (
            "multipartite construction suite",
            Duration::from_secs(10),
            multipartite_suite,
        ),
        (
            "exact ground truths",
            Duration::from_secs(60),
            ground_truths,
        ),
        (
            "solver agrees with naive oracle",
            Duration::from_secs(600),
            oracle_equivalence,
        ),
        ("2-tree suite", Duration::from_secs(300), two_tree_suite),
        (
            "connected graphs with delta <= 5",
            Duration::from_secs(600),
            low_degree_scan,
        ),
        (
            "outerplanar suite",
            Duration::from_secs(120),
            outerplanar_suite,
        ),
        ("family colorers", Duration::from_secs(60), family_colorers),
        ("corona suite", Duration::from_secs(120), corona_suite),
        (
            "strong-product bound",
            Duration::from_secs(600),
            strong_products,
        ),
    ];
    let mut failed = 0;
    for (i, (name, limit, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let outcome = match outcome {
            Ok(detail) if elapsed > *limit => Err(format!("{detail}; over the {limit:?} limit")),
            other => other,
        };
        let (status, detail) = match &outcome {
            Ok(d) => ("PASS", d),
            Err(d) => ("FAIL", d),
        };
        failed += usize::from(outcome.is_err());
        println!(
            "criterion {:>2} {status} {name}: {detail} [{:.2} s]",
            i + 1,
            elapsed.as_secs_f64()
        );
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
