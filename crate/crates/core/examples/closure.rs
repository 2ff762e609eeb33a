//! Sweep k and report whether the end tangle of order k is closed, with a
//! decider or with samples of the limit point (V, D).
//!
//!     cargo run --release --example closure [family] [m]

use std::collections::BTreeMap;

use endtangle::closure::{closure_check_with, ClosureWitness};
use endtangle::{cohesion, Budgets, GraphFamily};

fn main() -> endtangle::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let name = args.first().map_or("dominated_ray", String::as_str);
    let mut params = BTreeMap::new();
    if let Some(m) = args.get(1) {
        params.insert("m".to_string(), m.parse().expect("m is an integer"));
    } else if name == "dominated_ray" || name == "ladder" {
        params.insert("m".to_string(), 2);
    }
    let g = GraphFamily::make(name, &params)?;
    let b = Budgets::default();
    let report = cohesion(&g, &b)?;
    println!("{}: cohesion {}", g.label(), report.cohesion);
    for k in 1..=6 {
        let v = closure_check_with(&g, k, &report, &b)?;
        match &v.witness {
            ClosureWitness::Decider { certificate, .. } => {
                let x: Vec<String> = certificate.x.iter().map(ToString::to_string).collect();
                println!("  k={k} closed, decider {{{}}}", x.join(" "));
            }
            ClosureWitness::LimitPoint(e) => {
                println!("  k={k} not closed; (V,D) with D = {:?}", e.d.iter().map(ToString::to_string).collect::<Vec<_>>());
                for s in &e.samples {
                    println!(
                        "      Z = ball({}): {} agrees = {}",
                        s.z_level,
                        s.agreeing.canonical_text(&g),
                        s.restriction_ok
                    );
                }
            }
        }
    }
    Ok(())
}
