//! Minimum separators from the end, separator sequences and disjoint rays.
//!
//!     cargo run --example min_cuts

use std::collections::BTreeSet;

use endtangle::menger::{disjoint_rays, min_end_separator, min_end_separator_with, separator_sequence, Avoid};
use endtangle::{Budgets, GraphFamily, Vertex};

fn show<'a>(vs: impl IntoIterator<Item = &'a Vertex>) -> String {
    vs.into_iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

fn main() -> endtangle::Result<()> {
    let b = Budgets::default();

    let g = GraphFamily::Ladder { m: 4 };
    let column: BTreeSet<Vertex> = (0..4).map(|row| Vertex::Cell { row, col: 0 }).collect();
    let r = min_end_separator(&g, &column, 14, 3, &b)?;
    let series: Vec<String> = r.series.iter().map(|(l, v)| format!("{l}:{v}")).collect();
    println!("{}: column 0 needs {} vertices, stabilized = {}", g.label(), r.value, r.stabilized);
    println!("    c_L by level: {}", series.join(" "));

    let g = GraphFamily::DominatedRay { m: 2 };
    let x: BTreeSet<Vertex> = [Vertex::Ray(0)].into();
    let cuttable = min_end_separator(&g, &x, 14, 3, &b)?;
    let pinned = min_end_separator_with(&g, &x, &Avoid::forbidding(x.clone()), 14, 3, &b)?;
    println!(
        "{}: r0 cut by {{{}}}; with r0 kept, by {{{}}}",
        g.label(),
        show(&cuttable.separator),
        show(&pinned.separator)
    );

    let seq = separator_sequence(&GraphFamily::Ladder { m: 2 }, &[Vertex::Cell { row: 0, col: 0 }, Vertex::Cell { row: 1, col: 0 }].into(), 4, 14, &b)?;
    for (i, t) in seq.sets.iter().enumerate() {
        println!("ladder(m=2) T_{i} = {{{}}}", show(t));
    }
    match separator_sequence(&g, &x, 3, 12, &b) {
        Err(e) => println!("{}: {e}", g.label()),
        Ok(_) => println!("{}: unexpected sequence", g.label()),
    }

    let grid = GraphFamily::Grid;
    let starts: BTreeSet<Vertex> = (0..3).map(|y| Vertex::Grid { x: 0, y }).collect();
    for ray in disjoint_rays(&grid, &starts, 3, 10, &BTreeSet::new(), &b)? {
        println!("grid ray: {} ...", show(&ray.take(&grid, 14)));
    }
    Ok(())
}
