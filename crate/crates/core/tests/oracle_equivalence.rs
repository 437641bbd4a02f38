use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use impropriety::exact::{
    exact_impropriety, exists_k_improper, naive_impropriety, SearchBudget, SearchResult,
};
use impropriety::families::enumerate_connected_by_edges;
use impropriety::Graph;

fn random_connected(rng: &mut ChaCha8Rng, max_edges: usize) -> Graph {
    let n = rng.gen_range(3..=8);
    let mut edges: Vec<(usize, usize)> = (1..n).map(|v| (rng.gen_range(0..v), v)).collect();
    let mut missing: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|&(u, v)| !edges.contains(&(u, v)))
        .collect();
    missing.shuffle(rng);
    let target = rng.gen_range(n - 1..=max_edges.max(n - 1));
    edges.extend(missing.into_iter().take(target - (n - 1)));
    edges.shuffle(rng);
    Graph::new(n, edges).unwrap()
}

#[test]
fn pruned_matches_naive_on_all_connected_graphs_up_to_7_edges() {
    let graphs = enumerate_connected_by_edges(7).unwrap();
    for g in &graphs {
        let fast = exact_impropriety(g, &SearchBudget::default())
            .unwrap()
            .impropriety;
        assert_eq!(fast, naive_impropriety(g), "{g:?}");
    }
}

#[test]
fn pruned_matches_naive_on_random_graphs() {
    let mut rng = ChaCha8Rng::seed_from_u64(20_241_015);
    let mut values = Vec::new();
    for _ in 0..50 {
        let g = random_connected(&mut rng, 10);
        let fast = exact_impropriety(&g, &SearchBudget::default())
            .unwrap()
            .impropriety;
        assert_eq!(fast, naive_impropriety(&g), "{g:?}");
        values.push(fast);
    }
    // the suite must exercise exhausted searches, not only k = 1 successes
    assert!(values.contains(&1) && values.contains(&2), "{values:?}");
}

#[test]
fn symmetry_breaking_does_not_change_decisions() {
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    let plain = SearchBudget {
        symmetry_breaking: false,
        ..SearchBudget::default()
    };
    for _ in 0..50 {
        let g = random_connected(&mut rng, 9);
        for k in 1..g.max_degree() {
            let a = exists_k_improper(&g, k, &SearchBudget::default())
                .unwrap()
                .0;
            let b = exists_k_improper(&g, k, &plain).unwrap().0;
            assert_eq!(
                matches!(a, SearchResult::Found(_)),
                matches!(b, SearchResult::Found(_)),
                "{g:?} k={k}"
            );
        }
    }
}
