//! Relative deciders: build one from rays and dominating vertices, then
//! check it by enumeration and by flows.
//!
//!     cargo run --release --example deciders

use endtangle::deciders::{absolute_decider_window, verify_decider, verify_decider_flow};
use endtangle::{find_relative_decider, Budgets, GraphFamily, Vertex};

fn show<'a>(vs: impl IntoIterator<Item = &'a Vertex>) -> String {
    vs.into_iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

fn main() -> endtangle::Result<()> {
    let b = Budgets::default();
    for (g, k) in [
        (GraphFamily::Ladder { m: 3 }, 3),
        (GraphFamily::Grid, 4),
        (GraphFamily::DominatedRay { m: 1 }, 2),
    ] {
        let c = find_relative_decider(&g, k, &b)?;
        println!("{} k={k}: X = {{{}}}  D = {{{}}}", g.label(), show(&c.x), show(&c.d));
        for p in &c.linking_paths {
            println!("    link {:?}: {}", p.ends, show(&p.path));
        }
        let top = c.x.iter().map(|&v| g.level(v)).max().unwrap_or(0);
        let inner = top.max(4);
        let e = verify_decider(&g, &c.x, k, inner, inner + 3, &b)?;
        let f = verify_decider_flow(&g, &c.x, k, b.window.max(top + 8), &b)?;
        println!(
            "    enumeration: {} separations, {} violations; flow: {} splits, ok = {}",
            e.separations_checked, e.violation_count, f.partitions_checked, f.ok
        );
    }

    // {v0} decides order 1 on the ray but not order 2
    let x = [Vertex::Ray(0)].into();
    let bad = verify_decider(&GraphFamily::Ray, &x, 2, 3, 8, &b)?;
    if let Some(v) = bad.violations.first() {
        println!("ray: {{v0}} fails at {}", v.separation.canonical_text(&GraphFamily::Ray));
    }

    let k = absolute_decider_window(&GraphFamily::DominatedRay { m: 2 }, 5, &b)?;
    println!("dominated_ray(m=2): absolute decider in ball(5) = {{{}}}", show(&k));
    Ok(())
}
