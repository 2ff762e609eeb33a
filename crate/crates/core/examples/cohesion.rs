//! Degree, domination and cohesion of the end of every family.
//!
//!     cargo run --release --example cohesion

use endtangle::{cohesion, Budgets, GraphFamily};

fn main() -> endtangle::Result<()> {
    let b = Budgets::default();
    let families = [
        GraphFamily::Ray,
        GraphFamily::Ladder { m: 3 },
        GraphFamily::Grid,
        GraphFamily::CliqueRay,
        GraphFamily::DominatedRay { m: 2 },
        GraphFamily::Complete,
    ];
    println!("{:<20} {:<22} {:<14} cohesion", "family", "degree", "domination");
    for g in families {
        let r = cohesion(&g, &b)?;
        let degree = r
            .degree
            .map_or("-".to_string(), |d| format!("{:?} {}", d.kind, d.value));
        let dom = format!("{:?} {}", r.domination.kind, r.domination.value);
        println!("{:<20} {:<22} {:<14} {}", g.label(), degree, dom, r.cohesion);
        if !r.evidence.degree_series.is_empty() {
            let s: Vec<String> = r.evidence.degree_series.iter().map(|(_, v)| v.to_string()).collect();
            println!("    s_d = {}", s.join(" "));
        }
    }
    Ok(())
}
