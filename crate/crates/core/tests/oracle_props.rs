use std::collections::BTreeSet;

use proptest::prelude::*;

use endtangle::finite::{
    all_separations, all_separations_direct, brute_min_vertex_cut, check_tangle_axioms,
    flow_min_vertex_cut, majority_orientation, FiniteGraph, FiniteSeparation,
};
use endtangle::{Error, FlowValue};

fn graph(max_n: usize) -> impl Strategy<Value = FiniteGraph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        let m = pairs.len();
        proptest::collection::vec(any::<bool>(), m).prop_map(move |keep| {
            let edges: Vec<_> = pairs.iter().zip(&keep).filter(|(_, &k)| k).map(|(&e, _)| e).collect();
            FiniteGraph::new(n, &edges).unwrap()
        })
    })
}

/// A graph with a target `t`, a nonempty source set avoiding `t`, and a
/// forbidden subset of the sources.
fn cut_instance() -> impl Strategy<Value = (FiniteGraph, BTreeSet<usize>, usize, BTreeSet<usize>)> {
    graph(12).prop_filter("need two vertices", |g| g.n() >= 2).prop_flat_map(|g| {
        let n = g.n();
        (Just(g), 0..n, proptest::collection::vec(any::<(bool, bool)>(), n))
    }).prop_map(|(g, t, flags)| {
        let mut x: BTreeSet<usize> = (0..g.n()).filter(|&v| v != t && flags[v].0).collect();
        if x.is_empty() {
            x.insert((t + 1) % g.n());
        }
        let forbidden = x.iter().copied().filter(|&v| flags[v].1).collect();
        (g, x, t, forbidden)
    })
}

fn separates(g: &FiniteGraph, x: &BTreeSet<usize>, t: usize, cut: &BTreeSet<usize>) -> bool {
    g.components_avoiding(cut)
        .iter()
        .all(|c| !(c.contains(&t) && c.iter().any(|v| x.contains(v))))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn flow_agrees_with_brute_force((g, x, t, forbidden) in cut_instance()) {
        let brute = brute_min_vertex_cut(&g, &x, t, &forbidden).unwrap();
        let flow = flow_min_vertex_cut(&g, &x, t, &forbidden);
        prop_assert_eq!(brute.value, flow.value);
        if let FlowValue::Finite(v) = flow.value {
            prop_assert_eq!(flow.cut.len(), v);
            prop_assert!(flow.cut.is_disjoint(&forbidden) && !flow.cut.contains(&t));
            prop_assert!(separates(&g, &x, t, &flow.cut));
        }
    }

    #[test]
    fn separation_generation_matches_direct(g in graph(6), k in 1usize..=4) {
        let fast = all_separations(&g, k).unwrap();
        prop_assert_eq!(&fast, &all_separations_direct(&g, k).unwrap());
        for s in &fast {
            prop_assert!(s.order() < k);
            prop_assert!(fast.contains(&s.flipped()));
        }
    }

    #[test]
    fn complete_graphs_orient_to_tangles(n in 1usize..=7) {
        let kn = FiniteGraph::complete(n);
        let seps: Vec<FiniteSeparation> = all_separations(&kn, n / 3 + 1)
            .unwrap()
            .into_iter()
            .filter(|s| s.a.len() <= s.b.len())
            .collect();
        let all: BTreeSet<usize> = (0..n).collect();
        let o = majority_orientation(&seps, &all).unwrap();
        prop_assert!(check_tangle_axioms(&kn, &o).unwrap().ok);
    }
}

#[test]
fn triangle_has_eight_separations_of_order_below_two() {
    let seps = all_separations(&FiniteGraph::complete(3), 2).unwrap();
    assert_eq!(seps.len(), 8);
    let v: BTreeSet<usize> = (0..3).collect();
    for s in &seps {
        assert!(s.a == v || s.b == v);
    }
}

#[test]
fn path_cut_example() {
    let p = FiniteGraph::path(3);
    let fb: BTreeSet<usize> = [0, 2].into();
    let c = brute_min_vertex_cut(&p, &[0].into(), 2, &fb).unwrap();
    assert_eq!(c.value, FlowValue::Finite(1));
    assert_eq!(c.cut, [1].into());
}

#[test]
fn both_orientations_rejected() {
    let g = FiniteGraph::path(2);
    let s = FiniteSeparation { a: [0].into(), b: [0, 1].into() };
    assert_eq!(
        check_tangle_axioms(&g, &[s.clone(), s.flipped()]),
        Err(Error::NotAnOrientation)
    );
}

#[test]
fn caps_are_enforced() {
    let big = FiniteGraph::path(15);
    assert!(matches!(
        brute_min_vertex_cut(&big, &[0].into(), 14, &BTreeSet::new()),
        Err(Error::CapExceeded { .. })
    ));
}
