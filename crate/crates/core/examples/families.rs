//! Build each family, look at a truncation and its frontier, and round-trip
//! a family spec.
//!
//!     cargo run --example families

use std::collections::BTreeMap;

use endtangle::truncation::Truncation;
use endtangle::{FamilySpec, GraphFamily};

fn main() -> endtangle::Result<()> {
    let m = |v: i64| BTreeMap::from([("m".to_string(), v)]);
    let families = [
        GraphFamily::make("ray", &BTreeMap::new())?,
        GraphFamily::make("ladder", &m(3))?,
        GraphFamily::make("grid", &BTreeMap::new())?,
        GraphFamily::make("clique_ray", &BTreeMap::new())?,
        GraphFamily::make("dominated_ray", &m(2))?,
        GraphFamily::make("complete", &BTreeMap::new())?,
    ];
    for g in &families {
        let t = Truncation::new(g, 4, 10_000)?;
        let frontier: Vec<String> = t.frontier().iter().map(ToString::to_string).collect();
        let ray: Vec<String> = (0..5).map(|i| g.canonical_ray(i).to_string()).collect();
        println!("{:<20} |B_4| = {:>3}  edges = {:>3}", g.label(), t.len(), t.edge_count());
        println!("    frontier at 4: {}", frontier.join(" "));
        println!("    canonical ray: {} ...", ray.join(" "));
    }

    let spec: FamilySpec = "# apexes over a ray\nfamily=dominated_ray\nparam.m=2\n".parse()?;
    let g = spec.build()?;
    println!("\nspec file builds {}; renders back as:\n{}", g.label(), spec.render());
    Ok(())
}
