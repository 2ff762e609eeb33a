//! Oriented separations of the end tangle: orientation toward the end,
//! corners, restriction to a finite set, and the triple axiom.
//!
//!     cargo run --example separations

use std::collections::BTreeSet;

use endtangle::separation::{corner, orient_toward_end, tangle_triple_witness};
use endtangle::{GraphFamily, Side, Vertex};

fn main() -> endtangle::Result<()> {
    let g = GraphFamily::Grid;
    let v = |x, y| Vertex::Grid { x, y };

    // cut off the corner (0,0), and separately the strip below row 2
    let s1 = orient_toward_end(&g, &[v(0, 1), v(1, 1), v(1, 0)].into(), |_| Side::A, 10, 1, 10_000)?;
    let s2 = orient_toward_end(&g, &[v(2, 0), v(2, 1), v(2, 2), v(1, 2), v(0, 2)].into(), |_| Side::A, 10, 1, 10_000)?;
    for s in [&s1, &s2] {
        println!(
            "{}  order {}  |interior| {}  in tau: {}",
            s.canonical_text(&g),
            s.order(),
            s.interior().len(),
            s.in_tau()
        );
    }

    let c = corner(&g, &s1, &s2)?;
    println!("corner: {}  order {}  |interior| {}", c.canonical_text(&g), c.order(), c.interior().len());

    let z: BTreeSet<Vertex> = g.ball(2).into_iter().collect();
    let r = s1.restrict(&z);
    let show = |s: &BTreeSet<Vertex>| s.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ");
    println!("s1 on ball(2): A = {{{}}}  B = {{{}}}", show(&r.a_part), show(&r.b_part));

    let w = tangle_triple_witness(&g, &s1, &s2, &c)?;
    println!("edge {}-{} of the canonical ray is missed by all three small sides", w.edge.0, w.edge.1);

    // (V, D) is a separation shape but never a member of the tangle
    let vd = endtangle::OrientedSeparation::co_finite(&g, [v(0, 0)].into())?;
    println!("{} in tau: {}", vd.canonical_text(&g), vd.in_tau());
    Ok(())
}
