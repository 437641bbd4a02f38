use impropriety::exact::{exact_impropriety, SearchBudget};
use impropriety::families::{complete, corona, cycle, path, wheel};
use impropriety::verify;
use impropriety::Graph;

fn mu(g: &Graph) -> usize {
    let out = exact_impropriety(g, &SearchBudget::default()).unwrap();
    assert!(verify(g, &out.witness).unwrap().within(out.impropriety));
    out.impropriety
}

#[test]
fn complete_graphs_and_cycles() {
    assert_eq!(mu(&complete(3).unwrap()), 2);
    assert_eq!(mu(&complete(4).unwrap()), 1);
    assert_eq!(mu(&complete(5).unwrap()), 2);
    assert_eq!(mu(&complete(6).unwrap()), 1);
    assert_eq!(mu(&cycle(4).unwrap()), 1);
    assert_eq!(mu(&cycle(5).unwrap()), 2);
    assert_eq!(mu(&cycle(6).unwrap()), 1);
}

#[test]
fn wheels() {
    for n in 4..=10 {
        let expected = if [4, 7, 10].contains(&n) { 1 } else { 2 };
        assert_eq!(mu(&wheel(n).unwrap()), expected, "W_{n}");
    }
}

#[test]
fn triangle_corona_path() {
    let (g, _) = corona(&cycle(3).unwrap(), &path(2).unwrap()).unwrap();
    assert_eq!(mu(&g), 2);
}
