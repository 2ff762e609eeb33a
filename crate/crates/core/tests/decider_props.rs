use std::collections::BTreeSet;

use endtangle::deciders::{for_each_end_separation, linking_connectivity};
use endtangle::enumerate::Vote;
use endtangle::{find_relative_decider, Budgets, DeciderCertificate, GraphFamily, Vertex};

fn cases() -> Vec<(GraphFamily, usize)> {
    vec![
        (GraphFamily::Ray, 1),
        (GraphFamily::Ladder { m: 3 }, 3),
        (GraphFamily::Grid, 3),
        (GraphFamily::CliqueRay, 4),
        (GraphFamily::DominatedRay { m: 1 }, 2),
        (GraphFamily::DominatedRay { m: 2 }, 3),
        (GraphFamily::Complete, 4),
    ]
}

fn build(g: &GraphFamily, k: usize) -> DeciderCertificate {
    let c = find_relative_decider(g, k, &Budgets::default()).unwrap();
    assert_eq!(c.x.len(), k, "{}", g.label());
    c.check(g).unwrap_or_else(|e| panic!("{}: {e}", g.label()));
    c
}

#[test]
fn majority_vote_and_counting_bound() {
    let b = Budgets::default();
    for (g, k) in cases() {
        let c = build(&g, k);
        let top = c.x.iter().map(|&v| g.level(v)).max().unwrap();
        let inner = top.max(4);
        let mut n = 0;
        for_each_end_separation(&g, k, inner, inner + b.margin + 3, &b, |s| {
            let v = Vote::count(c.x.iter(), |&&x| s.in_a(x), |&&x| s.in_b(x));
            assert_eq!(v.a_only + v.both + v.b_only, k);
            assert!(v.a_only < v.b_only, "{} {}: {v:?}", g.label(), s.canonical_text(&g));
            n += 1;
            Ok(())
        })
        .unwrap();
        assert!(n > 0);
    }
}

/// Every split of `x` into two nonempty disjoint parts is linked by
/// `min(|a|, |b|)` disjoint paths.
#[test]
fn linking_paths_between_parts_of_the_decider() {
    let b = Budgets::default();
    for (g, k) in cases() {
        let c = build(&g, k);
        let xs: Vec<Vertex> = c.x.iter().copied().collect();
        for mask in 1..(1u32 << k) - 1 {
            let a: BTreeSet<Vertex> = (0..k).filter(|i| mask >> i & 1 == 1).map(|i| xs[i]).collect();
            let rest: BTreeSet<Vertex> = c.x.difference(&a).copied().collect();
            let n = linking_connectivity(&g, &c.x, &a, &rest, c.window, &b).unwrap();
            assert!(n >= a.len().min(rest.len()), "{}: {a:?}", g.label());
        }
    }
}

#[test]
fn certificates_are_deterministic() {
    for (g, k) in cases() {
        assert_eq!(build(&g, k), build(&g, k));
    }
}
