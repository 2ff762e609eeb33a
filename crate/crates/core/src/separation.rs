//! Finite-order separations of a one-ended family, stored intensionally.
//!
//! A separation `(A, B)` is kept as its separator `A ∩ B`, the finite set of
//! vertices on the small side, and which side holds the end. Every other
//! vertex of the graph lies on the end side. Since the small side is a finite
//! union of components of `G - separator`, membership of any vertex is
//! answered directly and two separations are equal iff their fields agree.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::family::{GraphFamily, Vertex};
use crate::truncation::{components_without, max_level, Component, ComponentLabel};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Side {
    A,
    B,
}

impl Side {
    pub fn other(self) -> Side {
        match self {
            Side::A => Side::B,
            Side::B => Side::A,
        }
    }
}

/// An oriented separation `(A, B)` of finite order.
///
/// Equality, ordering and hashing ignore the window.
#[derive(Debug, Clone, Serialize)]
pub struct OrientedSeparation {
    separator: BTreeSet<Vertex>,
    /// Vertices of the small side minus the separator.
    interior: BTreeSet<Vertex>,
    end_side: Side,
    /// Level at which the component structure was derived.
    #[serde(skip)]
    window: u32,
}

impl OrientedSeparation {
    fn key(&self) -> (&BTreeSet<Vertex>, &BTreeSet<Vertex>, Side) {
        (&self.separator, &self.interior, self.end_side)
    }

    /// Builds and validates a separation: `interior` must be disjoint from
    /// `separator` and have no neighbor outside `interior ∪ separator`.
    pub fn new(
        g: &GraphFamily,
        separator: BTreeSet<Vertex>,
        interior: BTreeSet<Vertex>,
        end_side: Side,
    ) -> Result<Self> {
        if let Some(v) = separator.iter().chain(&interior).find(|&&v| !g.contains(v)) {
            return Err(Error::NotASeparation(format!("{v} is not a vertex of {}", g.label())));
        }
        if let Some(v) = interior.intersection(&separator).next() {
            return Err(Error::NotASeparation(format!("{v} is both interior and separator")));
        }
        let top = max_level(g, separator.iter().chain(&interior)).unwrap_or(0);
        for &v in &interior {
            if g.has_neighbor_beyond(v, top) {
                return Err(Error::NotASeparation(format!("{v} has a neighbor across the separator")));
            }
            if let Some(w) = g
                .neighbors(v, top)
                .into_iter()
                .find(|w| !interior.contains(w) && !separator.contains(w))
            {
                return Err(Error::NotASeparation(format!("edge {v}-{w} crosses the separator")));
            }
        }
        Ok(OrientedSeparation {
            separator,
            interior,
            end_side,
            window: top + 1,
        })
    }

    /// Builds a separation already known to be valid, e.g. from component
    /// labelling of a truncation.
    pub(crate) fn from_parts(
        separator: BTreeSet<Vertex>,
        interior: BTreeSet<Vertex>,
        end_side: Side,
        window: u32,
    ) -> Self {
        OrientedSeparation {
            separator,
            interior,
            end_side,
            window,
        }
    }

    /// `(∅, V)`.
    pub fn trivial() -> Self {
        OrientedSeparation {
            separator: BTreeSet::new(),
            interior: BTreeSet::new(),
            end_side: Side::B,
            window: 1,
        }
    }

    /// The shape `(V, D)` for a finite `D`: the end lies on the `A` side.
    pub fn co_finite(g: &GraphFamily, d: BTreeSet<Vertex>) -> Result<Self> {
        Self::new(g, d, BTreeSet::new(), Side::A)
    }

    pub fn separator(&self) -> &BTreeSet<Vertex> {
        &self.separator
    }

    /// Vertices of the small side that are not in the separator.
    pub fn interior(&self) -> &BTreeSet<Vertex> {
        &self.interior
    }

    pub fn end_side(&self) -> Side {
        self.end_side
    }

    pub fn window(&self) -> u32 {
        self.window
    }

    pub(crate) fn with_window(mut self, window: u32) -> Self {
        self.window = self.window.max(window);
        self
    }

    pub fn order(&self) -> usize {
        self.separator.len()
    }

    /// Membership in the end tangle: the end lives in `B`.
    pub fn in_tau(&self) -> bool {
        self.end_side == Side::B
    }

    pub fn flipped(&self) -> Self {
        OrientedSeparation {
            end_side: self.end_side.other(),
            ..self.clone()
        }
    }

    pub fn side_of(&self, v: Vertex) -> SideMembership {
        if self.separator.contains(&v) {
            SideMembership::Both
        } else if self.interior.contains(&v) {
            SideMembership::Only(self.end_side.other())
        } else {
            SideMembership::Only(self.end_side)
        }
    }

    pub fn in_a(&self, v: Vertex) -> bool {
        self.side_of(v).contains(Side::A)
    }

    pub fn in_b(&self, v: Vertex) -> bool {
        self.side_of(v).contains(Side::B)
    }

    /// The vertices of `A` when `A` is the finite side.
    pub fn small_side(&self) -> BTreeSet<Vertex> {
        self.separator.union(&self.interior).copied().collect()
    }

    /// `(A ∩ Z, B ∩ Z)`.
    pub fn restrict(&self, z: &BTreeSet<Vertex>) -> RestrictionOnZ {
        RestrictionOnZ {
            a_part: z.iter().copied().filter(|&v| self.in_a(v)).collect(),
            b_part: z.iter().copied().filter(|&v| self.in_b(v)).collect(),
        }
    }

    /// Whether the two separations induce the same separation on `Z`, that
    /// is, whether `other` lies in the basic open set of `self ↾ Z`.
    pub fn agrees_on(&self, other: &OrientedSeparation, z: &BTreeSet<Vertex>) -> bool {
        z.iter().all(|&v| self.side_of(v) == other.side_of(v))
    }

    /// Sorted separator plus the smallest vertex of each finite component on
    /// the small side, e.g. `sep=[v3] a=[v0]`. The shape `(V, D)` renders
    /// with `b=` in place of `a=`.
    pub fn canonical_text(&self, g: &GraphFamily) -> String {
        let sep: Vec<String> = self.separator.iter().map(ToString::to_string).collect();
        let reps: Vec<String> = interior_components(g, &self.interior)
            .into_iter()
            .map(|c| c[0].to_string())
            .collect();
        let side = match self.end_side {
            Side::B => "a",
            Side::A => "b",
        };
        format!("sep=[{}] {side}=[{}]", sep.join(","), reps.join(","))
    }
}

impl PartialEq for OrientedSeparation {
    fn eq(&self, other: &Self) -> bool {
        self.key() == other.key()
    }
}

impl Eq for OrientedSeparation {}

impl PartialOrd for OrientedSeparation {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for OrientedSeparation {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.key().cmp(&other.key())
    }
}

impl std::hash::Hash for OrientedSeparation {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.key().hash(state);
    }
}

/// Which sides of a separation a vertex belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SideMembership {
    Only(Side),
    Both,
}

impl SideMembership {
    pub fn contains(self, side: Side) -> bool {
        match self {
            SideMembership::Both => true,
            SideMembership::Only(s) => s == side,
        }
    }
}

/// The separation `(A ∩ Z, B ∩ Z)` induced on a finite set `Z`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RestrictionOnZ {
    pub a_part: BTreeSet<Vertex>,
    pub b_part: BTreeSet<Vertex>,
}

/// Components of `G[interior]`, each sorted, ordered by smallest vertex.
fn interior_components(g: &GraphFamily, interior: &BTreeSet<Vertex>) -> Vec<Vec<Vertex>> {
    let top = max_level(g, interior).unwrap_or(0);
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for &s in interior {
        if !seen.insert(s) {
            continue;
        }
        let mut comp = vec![s];
        let mut stack = vec![s];
        while let Some(u) = stack.pop() {
            for w in g.neighbors(u, top) {
                if interior.contains(&w) && seen.insert(w) {
                    comp.push(w);
                    stack.push(w);
                }
            }
        }
        comp.sort();
        out.push(comp);
    }
    out
}

/// Orients `{A, B}` toward the end: the component of `G - separator` holding
/// the end goes to `B`; every finite component goes where `assign` says.
///
/// Components the truncation cannot classify touch the frontier, hence join
/// the end outside the window, and are placed with the end.
pub fn orient_toward_end<F>(
    g: &GraphFamily,
    separator: &BTreeSet<Vertex>,
    mut assign: F,
    window: u32,
    margin: u32,
    cap: usize,
) -> Result<OrientedSeparation>
where
    F: FnMut(&Component) -> Side,
{
    let required = max_level(g, separator).map_or(0, |l| l + margin);
    if separator.is_empty() && window < margin || !separator.is_empty() && window <= required {
        return Err(Error::HorizonTooSmall { window, required });
    }
    let comps = components_without(g, separator, window, cap)?;
    let mut interior = BTreeSet::new();
    for c in &comps {
        if c.label == ComponentLabel::Finite && assign(c) == Side::A {
            interior.extend(c.vertices.iter().copied());
        }
    }
    Ok(OrientedSeparation::new(g, separator.clone(), interior, Side::B)?.with_window(window))
}

/// `(A ∪ C, B ∩ D)` for two members of the end tangle.
pub fn corner(
    g: &GraphFamily,
    s1: &OrientedSeparation,
    s2: &OrientedSeparation,
) -> Result<OrientedSeparation> {
    if !s1.in_tau() || !s2.in_tau() {
        return Err(Error::NotInTau);
    }
    let interior: BTreeSet<Vertex> = s1.interior.union(&s2.interior).copied().collect();
    let separator: BTreeSet<Vertex> = s1
        .separator
        .union(&s2.separator)
        .filter(|v| !interior.contains(v))
        .copied()
        .collect();
    Ok(OrientedSeparation::new(g, separator, interior, Side::B)?
        .with_window(s1.window.max(s2.window)))
}

/// An edge of the canonical ray whose ends lie in `B_j \ A_j` for all three
/// separations, so `G[A_1] ∪ G[A_2] ∪ G[A_3]` misses it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TripleWitness {
    pub ray_index: u32,
    pub edge: (Vertex, Vertex),
}

impl TripleWitness {
    pub fn verify(&self, g: &GraphFamily, seps: &[&OrientedSeparation]) -> bool {
        let (u, v) = self.edge;
        g.neighbors(u, g.level(v)).contains(&v)
            && seps
                .iter()
                .all(|s| s.side_of(u) == SideMembership::Only(Side::B) && s.side_of(v) == SideMembership::Only(Side::B))
    }
}

pub fn tangle_triple_witness(
    g: &GraphFamily,
    s1: &OrientedSeparation,
    s2: &OrientedSeparation,
    s3: &OrientedSeparation,
) -> Result<TripleWitness> {
    let seps = [s1, s2, s3];
    if seps.iter().any(|s| !s.in_tau()) {
        return Err(Error::NotInTau);
    }
    let top = max_level(
        g,
        seps.iter().flat_map(|s| s.separator.iter().chain(&s.interior)),
    );
    let mut i = 0u32;
    if let Some(top) = top {
        while g.level(g.canonical_ray(i)) <= top {
            i += 1;
        }
    }
    loop {
        let w = TripleWitness {
            ray_index: i,
            edge: (g.canonical_ray(i), g.canonical_ray(i + 1)),
        };
        if w.verify(g, &seps) {
            return Ok(w);
        }
        i += 1;
    }
}
