//! Minimum separators between a finite vertex set and the end, and disjoint
//! ray systems, computed on truncations.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::budget::Budgets;
use crate::error::{Error, Result};
use crate::family::{GraphFamily, Vertex};
use crate::flow::{min_vertex_cut, FlowValue};
use crate::truncation::{max_level, Truncation};

/// A min-cut between a source set and the terminal of a truncation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CutResult {
    pub value: FlowValue,
    pub cut_vertices: BTreeSet<Vertex>,
    /// Disjoint paths, each from a source to a frontier vertex. The terminal
    /// itself is left off.
    pub path_system: Vec<Vec<Vertex>>,
}

impl CutResult {
    /// Whether deleting the cut leaves no path from `sources` to the frontier
    /// of `t`.
    pub fn separates(&self, t: &Truncation, sources: &BTreeSet<Vertex>) -> bool {
        let mut removed = vec![false; t.len()];
        for v in &self.cut_vertices {
            if let Some(i) = t.index_of(*v) {
                removed[i] = true;
            }
        }
        t.components_avoiding(&removed).iter().all(|comp| {
            !(comp.iter().any(|&i| sources.contains(&t.vertex(i)))
                && comp.iter().any(|&i| t.is_frontier(i)))
        })
    }
}

/// Maximum number of disjoint paths from `sources` to the terminal of `t`.
///
/// Sources are cuttable unless listed in `forbidden`; every vertex in
/// `forbidden` is uncuttable. The value is infinite when an uncuttable source
/// lies on the frontier, or is adjacent to another uncuttable vertex that does.
pub fn min_cut_to_terminal(
    t: &Truncation,
    sources: &BTreeSet<Vertex>,
    forbidden: &BTreeSet<Vertex>,
) -> Result<CutResult> {
    cut_with_sinks(t, sources, forbidden, |i| t.is_frontier(i))
}

fn cut_with_sinks<F>(
    t: &Truncation,
    sources: &BTreeSet<Vertex>,
    forbidden: &BTreeSet<Vertex>,
    is_sink: F,
) -> Result<CutResult>
where
    F: Fn(usize) -> bool,
{
    if sources.is_empty() {
        return Err(Error::EmptySource);
    }
    let src = t.indices(sources)?;
    let term = t.terminal();
    let mut adj = t.adjacency().to_vec();
    let mut tadj = Vec::new();
    for (i, list) in adj.iter_mut().enumerate() {
        if is_sink(i) {
            list.push(term);
            tadj.push(i);
        }
    }
    adj.push(tadj);
    let mut uncuttable = vec![false; t.len() + 1];
    for i in t.indices(forbidden)? {
        uncuttable[i] = true;
    }
    let r = min_vertex_cut(&adj, &src, &[term], &uncuttable);
    Ok(CutResult {
        value: r.value,
        cut_vertices: r.cut.iter().map(|&i| t.vertex(i)).collect(),
        path_system: r
            .paths
            .iter()
            .map(|p| p.iter().filter(|&&i| i != term).map(|&i| t.vertex(i)).collect())
            .collect(),
    })
}

/// Vertices removed from the graph and vertices that may not be cut.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Avoid {
    pub deleted: BTreeSet<Vertex>,
    pub forbidden: BTreeSet<Vertex>,
}

impl Avoid {
    pub fn deleting(deleted: BTreeSet<Vertex>) -> Self {
        Avoid {
            deleted,
            forbidden: BTreeSet::new(),
        }
    }

    pub fn forbidding(forbidden: BTreeSet<Vertex>) -> Self {
        Avoid {
            deleted: BTreeSet::new(),
            forbidden,
        }
    }
}

/// Result of scanning min-cut values over growing windows.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EndSeparator {
    pub value: FlowValue,
    pub separator: BTreeSet<Vertex>,
    /// The value was constant over the last `patience` level increments and
    /// the cut lies strictly inside the window.
    pub stabilized: bool,
    /// The last window scanned.
    pub window: u32,
    /// `(level, value)` for every scanned level.
    pub series: Vec<(u32, FlowValue)>,
    pub paths: Vec<Vec<Vertex>>,
}

/// Smallest set separating `x` from the end, by scanning windows up to
/// `l_max`.
pub fn min_end_separator(
    g: &GraphFamily,
    x: &BTreeSet<Vertex>,
    l_max: u32,
    patience: u32,
    budgets: &Budgets,
) -> Result<EndSeparator> {
    min_end_separator_with(g, x, &Avoid::default(), l_max, patience, budgets)
}

/// As [`min_end_separator`], on `G - avoid.deleted` with `avoid.forbidden`
/// uncuttable.
///
/// Every scanned cut separates `x` from the end in the whole graph, so each
/// value is an upper bound on the true minimum.
pub fn min_end_separator_with(
    g: &GraphFamily,
    x: &BTreeSet<Vertex>,
    avoid: &Avoid,
    l_max: u32,
    patience: u32,
    budgets: &Budgets,
) -> Result<EndSeparator> {
    if x.is_empty() {
        return Err(Error::EmptySource);
    }
    let base = max_level(g, x.iter().chain(&avoid.forbidden).chain(&avoid.deleted)).unwrap_or(0);
    if l_max <= base + patience {
        return Err(Error::HorizonTooSmall {
            window: l_max,
            required: base + patience,
        });
    }
    let sources: BTreeSet<Vertex> = x.difference(&avoid.deleted).copied().collect();
    if sources.is_empty() {
        return Err(Error::EmptySource);
    }
    let mut series = Vec::new();
    let mut last = None;
    for l in base + 1..=l_max {
        let t = Truncation::without(g, l, &avoid.deleted, budgets.max_vertices)?;
        let r = min_cut_to_terminal(&t, &sources, &avoid.forbidden)?;
        series.push((l, r.value));
        last = Some(r);
    }
    let last = last.expect("at least one level scanned");
    let tail = &series[series.len() - (patience as usize + 1)..];
    let constant = tail.iter().all(|&(_, v)| v == last.value);
    let inside = max_level(g, &last.cut_vertices).is_none_or(|m| m + budgets.margin < l_max);
    Ok(EndSeparator {
        value: last.value,
        separator: last.cut_vertices,
        stabilized: constant && inside && !last.value.is_infinite(),
        window: l_max,
        series,
        paths: last.path_system,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SeparatorSequence {
    pub sets: Vec<BTreeSet<Vertex>>,
    pub levels: Vec<u32>,
}

/// Sets `T_0, ..., T_{steps-1}` where `T_0` is a minimum separator of `x` from
/// the end and each later set is a minimum separator of its predecessor,
/// disjoint from it.
pub fn separator_sequence(
    g: &GraphFamily,
    x: &BTreeSet<Vertex>,
    steps: usize,
    window: u32,
    budgets: &Budgets,
) -> Result<SeparatorSequence> {
    let t = Truncation::new(g, window, budgets.max_vertices)?;
    let mut sets: Vec<BTreeSet<Vertex>> = Vec::with_capacity(steps);
    let mut levels = Vec::with_capacity(steps);
    let mut prev = x.clone();
    let mut forbidden = BTreeSet::new();
    for _ in 0..steps {
        let r = min_cut_to_terminal(&t, &prev, &forbidden)?;
        if r.value.is_infinite() {
            let culprit = prev
                .iter()
                .copied()
                .find(|&v| g.has_neighbor_beyond(v, window))
                .unwrap_or_else(|| *prev.iter().next().expect("nonempty"));
            return Err(Error::DominatedEnd(culprit));
        }
        let cut = r.cut_vertices;
        if cut.is_empty() {
            return Err(Error::Inconclusive(
                "source set is not joined to the end".into(),
            ));
        }
        let lvl = max_level(g, &cut).expect("nonempty");
        if lvl + budgets.margin >= window {
            return Err(Error::HorizonTooSmall {
                window,
                required: lvl + budgets.margin,
            });
        }
        levels.push(lvl);
        sets.push(cut.clone());
        forbidden = cut.clone();
        prev = cut;
    }
    Ok(SeparatorSequence { sets, levels })
}

/// A ray given by a finite prefix ending on the frontier of `window`, then
/// continued by the family's tail rule.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Ray {
    pub prefix: Vec<Vertex>,
    pub window: u32,
}

impl Ray {
    pub fn start(&self) -> Vertex {
        self.prefix[0]
    }

    /// Iterates the ray from its start. Infinite unless the family has no
    /// continuation from the end of the prefix.
    pub fn iter<'a>(&'a self, g: &'a GraphFamily) -> impl Iterator<Item = Vertex> + 'a {
        let mut tail = self
            .prefix
            .last()
            .and_then(|&v| g.tail_next(v, self.window));
        self.prefix.iter().copied().chain(std::iter::from_fn(move || {
            let v = tail?;
            tail = g.tail_next(v, self.window);
            Some(v)
        }))
    }

    pub fn take(&self, g: &GraphFamily, n: usize) -> Vec<Vertex> {
        self.iter(g).take(n).collect()
    }

    pub fn nth(&self, g: &GraphFamily, i: usize) -> Option<Vertex> {
        self.iter(g).nth(i)
    }
}

/// `count` disjoint rays in `G - deleted`, each starting in `x`.
///
/// Prefixes come from a flow on the truncation at `window` and end at
/// frontier vertices that admit a continuation; each prefix starts at the
/// last vertex of `x` on its path.
pub fn disjoint_rays(
    g: &GraphFamily,
    x: &BTreeSet<Vertex>,
    count: usize,
    window: u32,
    deleted: &BTreeSet<Vertex>,
    budgets: &Budgets,
) -> Result<Vec<Ray>> {
    let t = Truncation::without(g, window, deleted, budgets.max_vertices)?;
    let sources: BTreeSet<Vertex> = x.difference(deleted).copied().collect();
    if sources.is_empty() {
        return Err(Error::EmptySource);
    }
    let r = cut_with_sinks(&t, &sources, &BTreeSet::new(), |i| {
        t.is_frontier(i) && g.tail_next(t.vertex(i), window).is_some()
    })?;
    let available = r.value.finite().unwrap_or(usize::MAX);
    if available < count {
        return Err(Error::CountTooLarge {
            requested: count,
            available,
        });
    }
    Ok(r.path_system
        .into_iter()
        .take(count)
        .map(|p| {
            let start = p.iter().rposition(|v| sources.contains(v)).unwrap_or(0);
            Ray {
                prefix: p[start..].to_vec(),
                window,
            }
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn set(vs: &[Vertex]) -> BTreeSet<Vertex> {
        vs.iter().copied().collect()
    }

    fn b() -> Budgets {
        Budgets::default()
    }

    fn column(m: u32, col: u32) -> BTreeSet<Vertex> {
        (0..m).map(|row| Vertex::Cell { row, col }).collect()
    }

    #[test]
    fn ray_cut() {
        let t = Truncation::new(&GraphFamily::Ray, 8, 1000).unwrap();
        let x = set(&[Vertex::Ray(0)]);
        let r = min_cut_to_terminal(&t, &x, &BTreeSet::new()).unwrap();
        assert_eq!(r.value, FlowValue::Finite(1));
        assert_eq!(r.cut_vertices, x);
        assert_eq!(r.path_system, vec![(0..=8).map(Vertex::Ray).collect::<Vec<_>>()]);
        assert!(r.separates(&t, &x));
    }

    #[test]
    fn ladder_and_grid_cuts() {
        let g = GraphFamily::Ladder { m: 3 };
        let t = Truncation::new(&g, 8, 1000).unwrap();
        let r = min_cut_to_terminal(&t, &column(3, 0), &BTreeSet::new()).unwrap();
        assert_eq!(r.value, FlowValue::Finite(3));

        let t = Truncation::new(&GraphFamily::Grid, 6, 1000).unwrap();
        let x: BTreeSet<Vertex> = GraphFamily::Grid.ball(1).into_iter().collect();
        let r = min_cut_to_terminal(&t, &x, &BTreeSet::new()).unwrap();
        assert_eq!(r.value, FlowValue::Finite(3));
        assert_eq!(r.path_system.len(), 3);
        assert!(r.separates(&t, &x));
    }

    #[test]
    fn empty_source() {
        let t = Truncation::new(&GraphFamily::Ray, 3, 100).unwrap();
        assert_eq!(
            min_cut_to_terminal(&t, &BTreeSet::new(), &BTreeSet::new()),
            Err(Error::EmptySource)
        );
    }

    #[test]
    fn forbidden_frontier_source_is_infinite() {
        let g = GraphFamily::DominatedRay { m: 1 };
        let t = Truncation::new(&g, 4, 100).unwrap();
        let a = set(&[Vertex::Apex(0)]);
        assert!(min_cut_to_terminal(&t, &a, &a).unwrap().value.is_infinite());
    }

    #[test]
    fn end_separator_examples() {
        let r = min_end_separator(&GraphFamily::Ray, &set(&[Vertex::Ray(0)]), 12, 3, &b()).unwrap();
        assert_eq!(r.value, FlowValue::Finite(1));
        assert!(r.stabilized);

        let r = min_end_separator(&GraphFamily::Ladder { m: 4 }, &column(4, 0), 14, 3, &b()).unwrap();
        assert_eq!(r.value, FlowValue::Finite(4));
        assert!(r.stabilized);
        assert!(r.series.windows(2).all(|w| w[0].1 >= w[1].1));
    }

    #[test]
    fn dominated_ray_separator() {
        let g = GraphFamily::DominatedRay { m: 2 };
        let x = set(&[Vertex::Ray(0)]);
        // the source itself is a cut
        let r = min_end_separator(&g, &x, 14, 3, &b()).unwrap();
        assert_eq!(r.value, FlowValue::Finite(1));
        assert_eq!(r.separator, x);
        // both apexes plus one ray vertex once r0 may not be cut
        let r = min_end_separator_with(&g, &x, &Avoid::forbidding(x.clone()), 14, 3, &b()).unwrap();
        assert_eq!(r.value, FlowValue::Finite(3));
        assert!(r.stabilized);
        assert!(r.separator.contains(&Vertex::Apex(0)) && r.separator.contains(&Vertex::Apex(1)));
    }

    #[test]
    fn horizon_precondition() {
        assert!(matches!(
            min_end_separator(&GraphFamily::Ray, &set(&[Vertex::Ray(5)]), 8, 3, &b()),
            Err(Error::HorizonTooSmall { .. })
        ));
    }

    #[test]
    fn deleting_apexes_leaves_a_ray() {
        let g = GraphFamily::DominatedRay { m: 3 };
        let d = set(&[Vertex::Apex(0), Vertex::Apex(1), Vertex::Apex(2)]);
        let x: BTreeSet<Vertex> = g.ball(2).into_iter().collect();
        let r = min_end_separator_with(&g, &x, &Avoid::deleting(d), 12, 3, &b()).unwrap();
        assert_eq!(r.value, FlowValue::Finite(1));
    }

    #[test]
    fn sequences() {
        let s = separator_sequence(&GraphFamily::Ray, &set(&[Vertex::Ray(0)]), 3, 12, &b()).unwrap();
        assert_eq!(s.sets.len(), 3);
        assert!(s.sets.iter().all(|t| t.len() == 1));
        assert_eq!(s.sets[0], set(&[Vertex::Ray(0)]));

        let s = separator_sequence(&GraphFamily::Ladder { m: 2 }, &column(2, 0), 2, 12, &b()).unwrap();
        assert_eq!(s.sets.iter().map(BTreeSet::len).collect::<Vec<_>>(), vec![2, 2]);
        assert!(s.sets[0].is_disjoint(&s.sets[1]));

        let s = separator_sequence(&GraphFamily::Grid, &set(&[Vertex::Grid { x: 0, y: 0 }]), 2, 10, &b())
            .unwrap();
        assert_eq!(s.sets[0].len(), 1);
        assert!(!s.sets[1].is_empty() && s.sets[0].is_disjoint(&s.sets[1]));
    }

    #[test]
    fn sequence_detects_domination() {
        let g = GraphFamily::DominatedRay { m: 2 };
        assert!(matches!(
            separator_sequence(&g, &set(&[Vertex::Ray(0)]), 3, 12, &b()),
            Err(Error::DominatedEnd(_))
        ));
    }

    fn assert_disjoint(g: &GraphFamily, rays: &[Ray], n: usize) {
        let mut seen = HashSet::new();
        for r in rays {
            let vs = r.take(g, n);
            assert_eq!(vs.len(), n);
            for w in vs.windows(2) {
                assert!(g.neighbors(w[0], g.level(w[1])).contains(&w[1]), "{} {}", w[0], w[1]);
            }
            for v in vs {
                assert!(seen.insert(v), "{v} repeated");
            }
        }
    }

    #[test]
    fn ray_systems() {
        let rays = disjoint_rays(&GraphFamily::Ray, &set(&[Vertex::Ray(0)]), 1, 10, &BTreeSet::new(), &b())
            .unwrap();
        assert_eq!(rays[0].take(&GraphFamily::Ray, 15), (0..15).map(Vertex::Ray).collect::<Vec<_>>());

        let g = GraphFamily::Ladder { m: 3 };
        let rays = disjoint_rays(&g, &column(3, 0), 3, 10, &BTreeSet::new(), &b()).unwrap();
        assert_disjoint(&g, &rays, 30);

        let g = GraphFamily::Grid;
        let x = set(&[
            Vertex::Grid { x: 0, y: 0 },
            Vertex::Grid { x: 0, y: 1 },
            Vertex::Grid { x: 0, y: 2 },
        ]);
        let rays = disjoint_rays(&g, &x, 3, 10, &BTreeSet::new(), &b()).unwrap();
        assert_disjoint(&g, &rays, 40);
        let starts: BTreeSet<Vertex> = rays.iter().map(Ray::start).collect();
        assert_eq!(starts, x);

        for g in [GraphFamily::CliqueRay, GraphFamily::Complete] {
            let x: BTreeSet<Vertex> = g.ball(3).into_iter().collect();
            let rays = disjoint_rays(&g, &x, 3, 8, &BTreeSet::new(), &b()).unwrap();
            assert_disjoint(&g, &rays, 25);
        }
    }

    #[test]
    fn too_many_rays() {
        let g = GraphFamily::Ladder { m: 2 };
        assert_eq!(
            disjoint_rays(&g, &column(2, 0), 3, 10, &BTreeSet::new(), &b()),
            Err(Error::CountTooLarge {
                requested: 3,
                available: 2
            })
        );
    }
}
