//! The brute-force laboratory: separations of a triangle, cuts by
//! enumeration against cuts by flow, and the random self-test.
//!
//!     cargo run --example finite_oracle [seed]

use std::collections::BTreeSet;

use endtangle::finite::{
    all_separations, brute_min_vertex_cut, check_tangle_axioms, flow_min_vertex_cut, oracle_selftest,
    FiniteGraph,
};

fn main() -> endtangle::Result<()> {
    let k3 = FiniteGraph::complete(3);
    let seps = all_separations(&k3, 2)?;
    println!("K3 has {} oriented separations of order < 2:", seps.len());
    for s in &seps {
        println!("    A = {:?}  B = {:?}", s.a, s.b);
    }
    let toward_v: Vec<_> = seps.iter().filter(|s| s.b.len() == 3).cloned().collect();
    println!("orienting all toward V is a tangle: {}", check_tangle_axioms(&k3, &toward_v)?.ok);

    let g = FiniteGraph::new(6, &[(0, 1), (0, 2), (1, 3), (2, 3), (3, 4), (2, 4), (4, 5)])?;
    let x: BTreeSet<usize> = [0].into();
    let brute = brute_min_vertex_cut(&g, &x, 5, &x)?;
    let flow = flow_min_vertex_cut(&g, &x, 5, &x);
    println!("0 to 5: brute {} {:?}, flow {} {:?}", brute.value, brute.cut, flow.value, flow.cut);

    let seed = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(1);
    let r = oracle_selftest(seed, 200)?;
    println!(
        "selftest seed {seed}: flow vs brute {}/{}, generation {}/{}, ok = {}",
        r.flow_vs_brute.passed,
        r.graphs,
        r.separation_generation.passed,
        r.separation_generation.passed + r.separation_generation.failed,
        r.ok()
    );
    Ok(())
}
