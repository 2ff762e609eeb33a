//! Relative deciders of the end tangle: construction from disjoint rays and
//! dominating vertices, windowed verification, and the absolute decider
//! formed by the dominating vertices.

use std::collections::{BTreeSet, HashSet, VecDeque};

use serde::Serialize;

use crate::budget::Budgets;
use crate::enumerate::{side_assignments, subsets_up_to, Vote};
use crate::error::{Error, Result};
use crate::family::{GraphFamily, Vertex};
use crate::flow::{min_vertex_cut, FlowValue};
use crate::invariants::{cohesion, dominates, CohesionReport, EstimateKind, Verdict};
use crate::menger::{disjoint_rays, Ray};
use crate::separation::{OrientedSeparation, Side};
use crate::truncation::{label_components, max_level, ComponentLabel, Truncation};

/// A path joining two members of `D ∪ rays`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LinkingPath {
    /// Indices into the member list: dominating vertices first, in order,
    /// then the rays.
    pub ends: (usize, usize),
    pub path: Vec<Vertex>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DeciderCertificate {
    pub k: usize,
    pub x: BTreeSet<Vertex>,
    /// Dominating vertices used; a subset of `x`.
    pub d: Vec<Vertex>,
    /// Disjoint rays of `G - D` as found by the flow.
    pub source_rays: Vec<Ray>,
    /// Tails of the source rays starting beyond every linking path; their
    /// start vertices are `x - D`.
    pub rays: Vec<Ray>,
    pub linking_paths: Vec<LinkingPath>,
    pub window: u32,
}

fn adjacent(g: &GraphFamily, a: Vertex, b: Vertex) -> bool {
    g.neighbors(a, g.level(a).max(g.level(b))).contains(&b)
}

fn is_walk(g: &GraphFamily, p: &[Vertex]) -> bool {
    p.windows(2).all(|w| adjacent(g, w[0], w[1]))
}

impl DeciderCertificate {
    /// Number of vertices of each ray inspected by [`check`](Self::check).
    fn horizon(&self) -> usize {
        self.window as usize + 8
    }

    /// Structural check of the certificate, on initial segments of the rays.
    pub fn check(&self, g: &GraphFamily) -> std::result::Result<(), String> {
        let d: BTreeSet<Vertex> = self.d.iter().copied().collect();
        if self.x.len() != self.k {
            return Err(format!("|X| = {} but k = {}", self.x.len(), self.k));
        }
        if !d.is_subset(&self.x) || d.len() != self.d.len() {
            return Err("D is not a set inside X".into());
        }
        let starts: BTreeSet<Vertex> = self.rays.iter().map(Ray::start).collect();
        if starts.len() != self.rays.len() || starts.union(&d).count() != self.k {
            return Err("ray starts and D do not make up X".into());
        }
        if self.x.iter().any(|v| !d.contains(v) && !starts.contains(v)) {
            return Err("X has a vertex that is neither in D nor a ray start".into());
        }
        let n = self.horizon();
        let mut on_rays = HashSet::new();
        for r in &self.source_rays {
            let seg = r.take(g, n);
            if seg.len() < n || !is_walk(g, &seg) {
                return Err(format!("ray from {} is not a ray", r.start()));
            }
            for v in seg {
                if d.contains(&v) {
                    return Err(format!("ray meets D at {v}"));
                }
                if !on_rays.insert(v) {
                    return Err(format!("rays meet at {v}"));
                }
            }
        }
        let mut used: HashSet<Vertex> = HashSet::new();
        for lp in &self.linking_paths {
            let p = &lp.path;
            if p.len() < 2 || !is_walk(g, p) {
                return Err(format!("linking path {:?} is not a path", lp.ends));
            }
            for (i, v) in p.iter().enumerate() {
                let end = i == 0 || i + 1 == p.len();
                if !end && (d.contains(v) || self.x.contains(v)) {
                    return Err(format!("linking path meets X at inner vertex {v}"));
                }
                if !(end && d.contains(v)) && !used.insert(*v) {
                    return Err(format!("linking paths meet at {v}"));
                }
            }
        }
        let path_vertices: HashSet<Vertex> = self
            .linking_paths
            .iter()
            .flat_map(|lp| lp.path.iter().copied())
            .collect();
        let top = max_level(g, &path_vertices);
        for r in &self.rays {
            for v in r.take(g, n) {
                if path_vertices.contains(&v) || top.is_some_and(|t| g.level(v) <= t) {
                    return Err(format!("tail from {} does not avoid the linking paths", r.start()));
                }
            }
        }
        Ok(())
    }
}

/// A relative decider of size `k` for the end tangle of order `k`.
pub fn find_relative_decider(g: &GraphFamily, k: usize, budgets: &Budgets) -> Result<DeciderCertificate> {
    let report = cohesion(g, budgets)?;
    find_relative_decider_with(g, k, &report, budgets)
}

fn check_k(g: &GraphFamily, k: usize) -> Result<()> {
    if k == 0 {
        return Err(Error::InvalidParam {
            family: g.label(),
            key: "k".into(),
            reason: "must be at least 1".into(),
        });
    }
    Ok(())
}

/// As [`find_relative_decider`], reusing a cohesion report.
pub fn find_relative_decider_with(
    g: &GraphFamily,
    k: usize,
    report: &CohesionReport,
    budgets: &Budgets,
) -> Result<DeciderCertificate> {
    check_k(g, k)?;
    if let Some(bound) = report.exact_sum() {
        if bound < k {
            return Err(Error::InsufficientCohesion { k, bound });
        }
    }
    let mut d: Vec<Vertex> = report.evidence.dominating_witnesses.iter().copied().take(k).collect();
    if d.len() < k && report.domination.kind == EstimateKind::Infinite {
        extend_dominating(g, k, &mut d, budgets)?;
    }
    let r = k - d.len();
    let dset: BTreeSet<Vertex> = d.iter().copied().collect();
    let mut window = budgets.window;
    for _ in 0..3 {
        let source_rays = match find_source_rays(g, r, &dset, window, budgets) {
            Ok(rays) => rays,
            Err(Error::CountTooLarge { .. }) => {
                return Err(match report.exact_sum() {
                    Some(bound) => Error::InsufficientCohesion { k, bound },
                    None => Error::Inconclusive(format!(
                        "found fewer than {r} disjoint rays avoiding the dominating vertices"
                    )),
                })
            }
            Err(e) => return Err(e),
        };
        if let Some(cert) = assemble(g, k, &d, source_rays, window, budgets)? {
            return Ok(cert);
        }
        window += budgets.window / 2;
    }
    Err(Error::Inconclusive("no disjoint linking paths within the window".into()))
}

fn extend_dominating(g: &GraphFamily, k: usize, d: &mut Vec<Vertex>, budgets: &Budgets) -> Result<()> {
    let mut i = 0;
    while d.len() < k {
        let v = g.canonical_ray(i);
        i += 1;
        if d.contains(&v) {
            continue;
        }
        let l = budgets.window.max(g.level(v) + budgets.margin + 1);
        if dominates(g, v, l, budgets.threshold, budgets)?.verdict != Verdict::True {
            return Err(Error::Inconclusive(format!("{v} is not certified dominating")));
        }
        d.push(v);
    }
    d.sort();
    Ok(())
}

/// `r` disjoint rays of `G - D` starting in the smallest ball that sends
/// that many.
fn find_source_rays(
    g: &GraphFamily,
    r: usize,
    d: &BTreeSet<Vertex>,
    window: u32,
    budgets: &Budgets,
) -> Result<Vec<Ray>> {
    if r == 0 {
        return Ok(Vec::new());
    }
    let mut last = Err(Error::CountTooLarge {
        requested: r,
        available: 0,
    });
    for radius in 0..=budgets.degree_levels.min(window.saturating_sub(budgets.margin + 1)) {
        let x: BTreeSet<Vertex> = g.ball(radius).into_iter().filter(|v| !d.contains(v)).collect();
        if x.is_empty() {
            continue;
        }
        match disjoint_rays(g, &x, r, window, d, budgets) {
            Err(e @ Error::CountTooLarge { .. }) => last = Err(e),
            other => return other,
        }
    }
    last
}

/// Links every pair of members with greedy shortest paths, then cuts the
/// rays to tails beyond the paths. `None` when some pair cannot be linked.
fn assemble(
    g: &GraphFamily,
    k: usize,
    d: &[Vertex],
    source_rays: Vec<Ray>,
    window: u32,
    budgets: &Budgets,
) -> Result<Option<DeciderCertificate>> {
    let t = Truncation::new(g, window, budgets.max_vertices)?;
    let dset: BTreeSet<Vertex> = d.iter().copied().collect();
    let mut members: Vec<Vec<usize>> = d.iter().map(|&v| t.indices([&v])).collect::<Result<_>>()?;
    for r in &source_rays {
        members.push(r.prefix.iter().filter_map(|&v| t.index_of(v)).collect());
    }
    let mut blocked = vec![false; t.len()];
    for &v in d {
        blocked[t.index_of(v).ok_or(Error::OutsideWindow(v))?] = true;
    }
    let mut used = vec![false; t.len()];
    let mut linking_paths = Vec::new();
    for i in 0..members.len() {
        for j in i + 1..members.len() {
            let Some(p) = shortest_link(&t, &members[i], &members[j], &blocked, &used) else {
                return Ok(None);
            };
            for &v in &p {
                if !dset.contains(&t.vertex(v)) {
                    used[v] = true;
                }
            }
            linking_paths.push(LinkingPath {
                ends: (i, j),
                path: p.into_iter().map(|v| t.vertex(v)).collect(),
            });
        }
    }
    let path_vertices: HashSet<Vertex> = linking_paths
        .iter()
        .flat_map(|lp| lp.path.iter().copied())
        .collect();
    let top = max_level(g, &path_vertices);
    let mut rays = Vec::new();
    for r in &source_rays {
        let seg = r.take(g, r.prefix.len() + 2);
        let start = seg
            .iter()
            .rposition(|v| path_vertices.contains(v) || top.is_some_and(|l| g.level(*v) <= l))
            .map_or(0, |i| i + 1);
        let prefix = if start < r.prefix.len() {
            r.prefix[start..].to_vec()
        } else {
            vec![r.nth(g, start).expect("rays in these families are infinite")]
        };
        rays.push(Ray {
            prefix,
            window: r.window,
        });
    }
    let x: BTreeSet<Vertex> = rays.iter().map(Ray::start).chain(d.iter().copied()).collect();
    let cert = DeciderCertificate {
        k,
        x,
        d: d.to_vec(),
        source_rays,
        rays,
        linking_paths,
        window,
    };
    debug_assert_eq!(cert.check(g), Ok(()));
    Ok(Some(cert))
}

/// Shortest path from `from` to `to` whose inner vertices are neither
/// blocked nor used; endpoints must be unused.
fn shortest_link(
    t: &Truncation,
    from: &[usize],
    to: &[usize],
    blocked: &[bool],
    used: &[bool],
) -> Option<Vec<usize>> {
    let n = t.len();
    let mut target = vec![false; n];
    for &v in to {
        if !used[v] {
            target[v] = true;
        }
    }
    let mut parent = vec![usize::MAX; n];
    let mut seen = vec![false; n];
    let mut queue = VecDeque::new();
    for &s in from {
        if !used[s] && !seen[s] {
            seen[s] = true;
            queue.push_back(s);
        }
    }
    while let Some(u) = queue.pop_front() {
        for &w in &t.adjacency()[u] {
            if seen[w] || used[w] {
                continue;
            }
            seen[w] = true;
            parent[w] = u;
            if target[w] {
                let mut path = vec![w];
                let mut c = w;
                while parent[c] != usize::MAX {
                    c = parent[c];
                    path.push(c);
                }
                path.reverse();
                return Some(path);
            }
            if !blocked[w] {
                queue.push_back(w);
            }
        }
    }
    None
}

/// Calls `f` on every separation of order `< k` pointing toward the end
/// whose separator lies in the ball of radius `inner_level`, for every
/// placement of the finite components of the rest.
pub fn for_each_end_separation<F>(
    g: &GraphFamily,
    k: usize,
    inner_level: u32,
    window: u32,
    budgets: &Budgets,
    mut f: F,
) -> Result<usize>
where
    F: FnMut(OrientedSeparation) -> Result<()>,
{
    if window <= inner_level + budgets.margin {
        return Err(Error::HorizonTooSmall {
            window,
            required: inner_level + budgets.margin,
        });
    }
    if k == 0 {
        return Ok(0);
    }
    let candidates = g.ball(inner_level);
    if subset_count(candidates.len(), k - 1) > budgets.max_separations {
        return Err(Error::BudgetExceeded {
            what: "enumerated separations",
            limit: budgets.max_separations,
        });
    }
    let t = Truncation::new(g, window, budgets.max_vertices)?;
    let mut count = 0usize;
    subsets_up_to(&candidates, k - 1, |s| {
        let sep: BTreeSet<Vertex> = s.iter().copied().collect();
        let free: Vec<Vec<Vertex>> = label_components(&t, &sep)?
            .into_iter()
            .filter(|c| c.label == ComponentLabel::Finite)
            .map(|c| c.vertices.into_iter().collect())
            .collect();
        side_assignments(&free, |interior, _| {
            count += 1;
            if count > budgets.max_separations {
                return Err(Error::BudgetExceeded {
                    what: "enumerated separations",
                    limit: budgets.max_separations,
                });
            }
            f(OrientedSeparation::from_parts(sep.clone(), interior, Side::B, window))
        })
    })?;
    Ok(count)
}

/// Number of subsets of size at most `max` of an `n`-set, saturating.
fn subset_count(n: usize, max: usize) -> usize {
    let mut total = 0u128;
    let mut c = 1u128;
    for i in 0..=max.min(n) {
        total += c;
        c = c * (n - i) as u128 / (i + 1) as u128;
        if total > usize::MAX as u128 {
            return usize::MAX;
        }
    }
    total as usize
}

/// All separations visited by [`for_each_end_separation`], sorted.
pub fn enumerate_end_separations(
    g: &GraphFamily,
    k: usize,
    inner_level: u32,
    window: u32,
    budgets: &Budgets,
) -> Result<Vec<OrientedSeparation>> {
    let mut out = BTreeSet::new();
    for_each_end_separation(g, k, inner_level, window, budgets, |s| {
        out.insert(s);
        Ok(())
    })?;
    Ok(out.into_iter().collect())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub separation: OrientedSeparation,
    pub vote: Vote,
}

/// Outcome of checking a decider against every enumerated separation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EnumerationCheck {
    pub ok: bool,
    pub inner_level: u32,
    pub window: u32,
    pub separations_checked: usize,
    pub violation_count: usize,
    /// The first few violations, in enumeration order.
    pub violations: Vec<Violation>,
}

const KEPT_VIOLATIONS: usize = 8;

/// Checks `|A ∩ X| < |B ∩ X|` for every separation produced by
/// [`for_each_end_separation`].
pub fn verify_decider(
    g: &GraphFamily,
    x: &BTreeSet<Vertex>,
    k: usize,
    inner_level: u32,
    window: u32,
    budgets: &Budgets,
) -> Result<EnumerationCheck> {
    let mut violations = Vec::new();
    let mut violation_count = 0;
    let checked = for_each_end_separation(g, k, inner_level, window, budgets, |s| {
        let vote = Vote::count(x.iter().copied(), |&v| s.in_a(v), |&v| s.in_b(v));
        if !vote.decides_b() {
            violation_count += 1;
            if violations.len() < KEPT_VIOLATIONS {
                violations.push(Violation { separation: s, vote });
            }
        }
        Ok(())
    })?;
    Ok(EnumerationCheck {
        ok: violation_count == 0,
        inner_level,
        window,
        separations_checked: checked,
        violation_count,
        violations,
    })
}

/// Outcome of the flow-based decider check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FlowCheck {
    pub ok: bool,
    pub window: u32,
    pub partitions_checked: usize,
    pub violation: Option<Violation>,
}

/// Checks a decider against every separation of order `< k` whose finite
/// side lies in the truncation at `window`, with no bound on where the
/// separator sits.
///
/// A violating `(A, B)` splits `X` into `X_A = X ∩ (A - B)`, `X_S` in the
/// separator and `X_B = X ∩ (B - A)` with `X_A` nonempty and
/// `|X_A| >= |X_B|`. For each such split the smallest possible order is
/// `|X_S|` plus a min cut between `X_A` and `X_B ∪ {end}` in `G - X_S`.
pub fn verify_decider_flow(
    g: &GraphFamily,
    x: &BTreeSet<Vertex>,
    k: usize,
    window: u32,
    budgets: &Budgets,
) -> Result<FlowCheck> {
    let t = Truncation::new(g, window, budgets.max_vertices)?;
    let xs: Vec<usize> = t.indices(x)?;
    let n = t.len();
    let term = t.terminal();
    let full = t.adjacency_with_terminal();
    let m = xs.len();
    let mut checked = 0;
    let mut side = vec![0u8; m];
    let total = 3usize.checked_pow(m as u32).ok_or(Error::BudgetExceeded {
        what: "decider partitions",
        limit: usize::MAX,
    })?;
    for code in 0..total {
        let mut c = code;
        for s in side.iter_mut() {
            *s = (c % 3) as u8;
            c /= 3;
        }
        let part = |want: u8| -> Vec<usize> {
            xs.iter().zip(&side).filter(|(_, &s)| s == want).map(|(&i, _)| i).collect()
        };
        let (xa, xsep, xb) = (part(0), part(1), part(2));
        if xa.is_empty() || xa.len() < xb.len() || xsep.len() >= k {
            continue;
        }
        checked += 1;
        let mut removed = vec![false; n + 1];
        for &i in &xsep {
            removed[i] = true;
        }
        let adj: Vec<Vec<usize>> = full
            .iter()
            .enumerate()
            .map(|(u, list)| {
                if removed[u] {
                    Vec::new()
                } else {
                    list.iter().copied().filter(|&w| !removed[w]).collect()
                }
            })
            .collect();
        let mut uncuttable = vec![false; n + 1];
        for &i in xa.iter().chain(&xb) {
            uncuttable[i] = true;
        }
        let mut sinks = xb.clone();
        sinks.push(term);
        let r = min_vertex_cut(&adj, &xa, &sinks, &uncuttable);
        let FlowValue::Finite(c) = r.value else {
            continue;
        };
        if xsep.len() + c < k {
            let separator: BTreeSet<Vertex> =
                xsep.iter().chain(&r.cut).map(|&i| t.vertex(i)).collect();
            let mut gone = vec![false; n];
            for v in &separator {
                gone[t.index_of(*v).expect("in window")] = true;
            }
            let interior: BTreeSet<Vertex> = t
                .components_avoiding(&gone)
                .into_iter()
                .filter(|comp| comp.iter().any(|i| xa.contains(i)))
                .flatten()
                .map(|i| t.vertex(i))
                .collect();
            let s = OrientedSeparation::new(g, separator, interior, Side::B)?.with_window(window);
            let vote = Vote::count(x.iter().copied(), |&v| s.in_a(v), |&v| s.in_b(v));
            return Ok(FlowCheck {
                ok: false,
                window,
                partitions_checked: checked,
                violation: Some(Violation { separation: s, vote }),
            });
        }
    }
    Ok(FlowCheck {
        ok: true,
        window,
        partitions_checked: checked,
        violation: None,
    })
}

/// Vertices of level at most `inner_level` that dominate the end.
pub fn absolute_decider_window(
    g: &GraphFamily,
    inner_level: u32,
    budgets: &Budgets,
) -> Result<BTreeSet<Vertex>> {
    let l = budgets.window.max(inner_level + budgets.margin + 1);
    let mut out = BTreeSet::new();
    for v in g.ball(inner_level) {
        if dominates(g, v, l, budgets.threshold, budgets)?.verdict == Verdict::True {
            out.insert(v);
        }
    }
    Ok(out)
}

/// Agreement of `(A, B) ∈ τ` with `K ⊆ B` over enumerated separations and
/// their inverses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct AbsoluteCheck {
    pub checked: usize,
    pub agreeing: usize,
}

impl AbsoluteCheck {
    pub fn ok(&self) -> bool {
        self.checked == self.agreeing
    }
}

pub fn check_absolute_decider(
    g: &GraphFamily,
    kset: &BTreeSet<Vertex>,
    k: usize,
    inner_level: u32,
    window: u32,
    budgets: &Budgets,
) -> Result<AbsoluteCheck> {
    let mut c = AbsoluteCheck {
        checked: 0,
        agreeing: 0,
    };
    for_each_end_separation(g, k, inner_level, window, budgets, |s| {
        for s in [s.flipped(), s] {
            c.checked += 1;
            if s.in_tau() == kset.iter().all(|&v| s.in_b(v)) {
                c.agreeing += 1;
            }
        }
        Ok(())
    })?;
    Ok(c)
}

/// Number of disjoint `a`-`b` paths in the truncation at `window` whose
/// inner vertices avoid `x`.
pub fn linking_connectivity(
    g: &GraphFamily,
    x: &BTreeSet<Vertex>,
    a: &BTreeSet<Vertex>,
    b: &BTreeSet<Vertex>,
    window: u32,
    budgets: &Budgets,
) -> Result<usize> {
    let t = Truncation::new(g, window, budgets.max_vertices)?;
    let n = t.len();
    let mut removed = vec![false; n];
    for v in x.iter().filter(|v| !a.contains(v) && !b.contains(v)) {
        removed[t.index_of(*v).ok_or(Error::OutsideWindow(*v))?] = true;
    }
    let bi = t.indices(b)?;
    let mut adj: Vec<Vec<usize>> = t
        .adjacency()
        .iter()
        .enumerate()
        .map(|(u, l)| {
            if removed[u] {
                Vec::new()
            } else {
                l.iter().copied().filter(|&w| !removed[w]).collect()
            }
        })
        .collect();
    for &i in &bi {
        adj[i].push(n);
    }
    adj.push(bi);
    let r = min_vertex_cut(&adj, &t.indices(a)?, &[n], &vec![false; n + 1]);
    Ok(r.value.finite().unwrap_or(usize::MAX))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b() -> Budgets {
        Budgets::default()
    }

    fn set(vs: &[Vertex]) -> BTreeSet<Vertex> {
        vs.iter().copied().collect()
    }

    #[test]
    fn ray_enumeration() {
        let seps = enumerate_end_separations(&GraphFamily::Ray, 2, 2, 8, &b()).unwrap();
        let texts: Vec<String> = seps.iter().map(|s| s.canonical_text(&GraphFamily::Ray)).collect();
        assert_eq!(seps.len(), 6, "{texts:?}");
        assert!(seps.iter().all(OrientedSeparation::in_tau));

        let seps = enumerate_end_separations(&GraphFamily::Ray, 1, 3, 8, &b()).unwrap();
        assert_eq!(seps, vec![OrientedSeparation::trivial()]);
    }

    #[test]
    fn ray_decider_checks() {
        let x = set(&[Vertex::Ray(0)]);
        assert!(verify_decider(&GraphFamily::Ray, &x, 1, 3, 8, &b()).unwrap().ok);
        let r = verify_decider(&GraphFamily::Ray, &x, 2, 3, 8, &b()).unwrap();
        assert!(!r.ok);
        let bad = OrientedSeparation::new(
            &GraphFamily::Ray,
            set(&[Vertex::Ray(1)]),
            set(&[Vertex::Ray(0)]),
            Side::B,
        )
        .unwrap();
        assert!(r.violations.iter().any(|v| v.separation == bad));
        assert!(!verify_decider_flow(&GraphFamily::Ray, &x, 2, 8, &b()).unwrap().ok);
    }

    #[test]
    fn constructed_deciders() {
        let c = find_relative_decider(&GraphFamily::Ray, 1, &b()).unwrap();
        assert_eq!(c.x, set(&[Vertex::Ray(0)]));

        let g = GraphFamily::Ladder { m: 3 };
        let c = find_relative_decider(&g, 3, &b()).unwrap();
        assert_eq!(c.check(&g), Ok(()));
        let rows: BTreeSet<u32> = c
            .x
            .iter()
            .map(|v| match v {
                Vertex::Cell { row, .. } => *row,
                _ => unreachable!(),
            })
            .collect();
        assert_eq!(rows.len(), 3);
        assert!(verify_decider_flow(&g, &c.x, 3, 20, &b()).unwrap().ok);

        let g = GraphFamily::DominatedRay { m: 1 };
        let c = find_relative_decider(&g, 2, &b()).unwrap();
        assert_eq!(c.d, vec![Vertex::Apex(0)]);
        assert!(c.x.contains(&Vertex::Apex(0)));
        assert!(verify_decider_flow(&g, &c.x, 2, 20, &b()).unwrap().ok);
    }

    #[test]
    fn insufficient_cohesion() {
        assert_eq!(
            find_relative_decider(&GraphFamily::Ray, 2, &b()),
            Err(Error::InsufficientCohesion { k: 2, bound: 1 })
        );
    }

    #[test]
    fn ladder_enumeration_matches_flow() {
        let g = GraphFamily::Ladder { m: 2 };
        let c = find_relative_decider(&g, 2, &b()).unwrap();
        let lvl = max_level(&g, &c.x).unwrap();
        let inner = lvl.max(4);
        assert!(verify_decider(&g, &c.x, 2, inner, inner + 4, &b()).unwrap().ok);
        assert!(verify_decider_flow(&g, &c.x, 2, 20, &b()).unwrap().ok);
        // column 1 cuts off two of the three vertices
        let bad = set(&[
            Vertex::Cell { row: 0, col: 0 },
            Vertex::Cell { row: 1, col: 0 },
            Vertex::Cell { row: 0, col: 5 },
        ]);
        assert!(!verify_decider(&g, &bad, 3, 5, 9, &b()).unwrap().ok);
        assert!(!verify_decider_flow(&g, &bad, 3, 9, &b()).unwrap().ok);
    }

    #[test]
    fn absolute_deciders() {
        assert!(absolute_decider_window(&GraphFamily::Ray, 5, &b()).unwrap().is_empty());
        let k = absolute_decider_window(&GraphFamily::Complete, 5, &b()).unwrap();
        assert_eq!(k, GraphFamily::Complete.ball(5).into_iter().collect());
        let g = GraphFamily::DominatedRay { m: 2 };
        let k = absolute_decider_window(&g, 5, &b()).unwrap();
        assert_eq!(k, set(&[Vertex::Apex(0), Vertex::Apex(1)]));

        let kw = absolute_decider_window(&GraphFamily::Complete, 5, &b()).unwrap();
        let c = check_absolute_decider(&GraphFamily::Complete, &kw, 5, 5, 8, &b()).unwrap();
        assert!(c.ok() && c.checked > 0);
    }

    #[test]
    fn linking_counts() {
        let g = GraphFamily::Grid;
        let c = find_relative_decider(&g, 4, &b()).unwrap();
        let xs: Vec<Vertex> = c.x.iter().copied().collect();
        let a = set(&xs[..2]);
        let bb = set(&xs[2..]);
        assert!(linking_connectivity(&g, &c.x, &a, &bb, c.window + 4, &b()).unwrap() >= 2);
    }
}
