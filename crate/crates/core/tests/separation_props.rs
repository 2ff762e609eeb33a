use std::collections::BTreeSet;

use proptest::prelude::*;

use endtangle::deciders::{enumerate_end_separations, for_each_end_separation};
use endtangle::separation::{corner, tangle_triple_witness, SideMembership};
use endtangle::{Budgets, GraphFamily, OrientedSeparation, Side, Vertex};

fn fixtures() -> Vec<GraphFamily> {
    vec![
        GraphFamily::Ray,
        GraphFamily::Ladder { m: 2 },
        GraphFamily::Grid,
        GraphFamily::CliqueRay,
        GraphFamily::DominatedRay { m: 2 },
        GraphFamily::Complete,
    ]
}

fn pools() -> &'static Vec<(GraphFamily, Vec<OrientedSeparation>)> {
    static POOLS: std::sync::OnceLock<Vec<(GraphFamily, Vec<OrientedSeparation>)>> = std::sync::OnceLock::new();
    POOLS.get_or_init(|| {
        let b = Budgets::default();
        fixtures()
            .into_iter()
            .map(|g| (g, enumerate_end_separations(&g, 3, 3, 7, &b).unwrap()))
            .collect()
    })
}

/// Family index plus indices into its pool, reduced modulo the pool size.
fn members(n: usize) -> impl Strategy<Value = (usize, Vec<usize>)> {
    (0..fixtures().len(), proptest::collection::vec(any::<usize>(), n))
}

fn subset(g: &GraphFamily, level: u32, bits: &[bool]) -> BTreeSet<Vertex> {
    g.ball(level).into_iter().zip(bits.iter().cycle()).filter(|(_, &b)| b).map(|(v, _)| v).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn corners_stay_in_the_tangle((f, idx) in members(2)) {
        let (g, pool) = &pools()[f];
        let (s1, s2) = (&pool[idx[0] % pool.len()], &pool[idx[1] % pool.len()]);
        let c = corner(g, s1, s2).unwrap();
        prop_assert!(c.in_tau());
        prop_assert!(c.order() <= s1.order() + s2.order());
        prop_assert!(s1.small_side().is_subset(&c.small_side()));
        prop_assert!(s2.small_side().is_subset(&c.small_side()));
        prop_assert_eq!(c.side_of(g.canonical_ray(c.window() + 1)), SideMembership::Only(Side::B));
    }

    #[test]
    fn triples_leave_a_ray_edge((f, idx) in members(3)) {
        let (g, pool) = &pools()[f];
        let s: Vec<&OrientedSeparation> = idx.iter().map(|i| &pool[i % pool.len()]).collect();
        let w = tangle_triple_witness(g, s[0], s[1], s[2]).unwrap();
        prop_assert!(w.verify(g, &s));
    }

    #[test]
    fn exactly_one_orientation_in_tau((f, idx) in members(1)) {
        let (_, pool) = &pools()[f];
        let s = &pool[idx[0] % pool.len()];
        prop_assert!(s.in_tau() != s.flipped().in_tau());
    }

    #[test]
    fn agreement_is_local(
        (f, idx) in members(2),
        z1 in proptest::collection::vec(any::<bool>(), 1..20),
        z2 in proptest::collection::vec(any::<bool>(), 1..20),
    ) {
        let (g, pool) = &pools()[f];
        let (s, t) = (&pool[idx[0] % pool.len()], &pool[idx[1] % pool.len()]);
        let (z1, z2) = (subset(g, 4, &z1), subset(g, 4, &z2));
        let both: BTreeSet<Vertex> = z1.union(&z2).copied().collect();
        prop_assert_eq!(s.agrees_on(t, &z1) && s.agrees_on(t, &z2), s.agrees_on(t, &both));
        prop_assert_eq!(s.agrees_on(t, &both), s.restrict(&both) == t.restrict(&both));
    }

    #[test]
    fn co_finite_shapes_are_never_members(f in 0usize..6, bits in proptest::collection::vec(any::<bool>(), 1..10)) {
        let g = fixtures()[f];
        let d = subset(&g, 2, &bits);
        let vd = OrientedSeparation::co_finite(&g, d).unwrap();
        prop_assert!(!vd.in_tau());
        prop_assert!(vd.flipped().in_tau());
    }
}

#[test]
fn enumeration_has_no_duplicates() {
    let b = Budgets::default();
    for g in fixtures() {
        let mut seen = Vec::new();
        for_each_end_separation(&g, 3, 3, 7, &b, |s| {
            seen.push(s);
            Ok(())
        })
        .unwrap();
        let unique: BTreeSet<_> = seen.iter().cloned().collect();
        assert_eq!(unique.len(), seen.len(), "{}", g.label());
        assert!(seen.iter().all(OrientedSeparation::in_tau));
    }
}
