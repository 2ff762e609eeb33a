//! Degree, domination and cohesion of the end.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::budget::Budgets;
use crate::error::Result;
use crate::family::{GraphFamily, Vertex};
use crate::flow::FlowValue;
use crate::menger::{disjoint_rays, min_cut_to_terminal, min_end_separator_with, Avoid};
use crate::truncation::{max_level, Truncation};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    True,
    False,
    Inconclusive,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "data", rename_all = "snake_case")]
pub enum DominationCertificate {
    /// The vertex has neighbors beyond every probed level.
    FrontierAtEveryLevel,
    /// More than `threshold` disjoint paths to the window edge.
    WideFan { value: usize },
    /// A finite set, not containing the vertex, that separates it from the
    /// end.
    Separator(BTreeSet<Vertex>),
    None,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Domination {
    pub vertex: Vertex,
    pub verdict: Verdict,
    pub certificate: DominationCertificate,
}

/// Whether `v` dominates the end, judged on windows up to `l_max`.
pub fn dominates(
    g: &GraphFamily,
    v: Vertex,
    l_max: u32,
    threshold: usize,
    budgets: &Budgets,
) -> Result<Domination> {
    let t = Truncation::new(g, l_max, budgets.max_vertices)?;
    dominates_in(&t, v, threshold, budgets.margin)
}

fn dominates_in(t: &Truncation, v: Vertex, threshold: usize, margin: u32) -> Result<Domination> {
    let g = t.family();
    let l_max = t.level();
    let verdict = |verdict, certificate| Domination {
        vertex: v,
        verdict,
        certificate,
    };
    if (g.level(v)..=l_max).all(|l| g.has_neighbor_beyond(v, l)) {
        return Ok(verdict(Verdict::True, DominationCertificate::FrontierAtEveryLevel));
    }
    let x: BTreeSet<Vertex> = [v].into();
    let r = min_cut_to_terminal(t, &x, &x)?;
    let FlowValue::Finite(value) = r.value else {
        return Ok(verdict(Verdict::Inconclusive, DominationCertificate::None));
    };
    if max_level(g, &r.cut_vertices).is_none_or(|m| m + margin < l_max) {
        return Ok(verdict(
            Verdict::False,
            DominationCertificate::Separator(r.cut_vertices),
        ));
    }
    if value > threshold {
        return Ok(verdict(Verdict::True, DominationCertificate::WideFan { value }));
    }
    Ok(verdict(Verdict::Inconclusive, DominationCertificate::None))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum EstimateKind {
    Exact,
    LowerBound,
    Infinite,
}

/// An invariant value. For `Infinite`, `value` is the largest finite
/// evidence seen.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Estimate {
    pub kind: EstimateKind,
    pub value: usize,
}

impl Estimate {
    pub fn exact(self) -> Option<usize> {
        (self.kind == EstimateKind::Exact).then_some(self.value)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DominationCount {
    pub estimate: Estimate,
    pub witnesses: BTreeSet<Vertex>,
    /// Every vertex examined, in order.
    pub checked: Vec<Domination>,
}

/// Counts dominating vertices among those of level at most `search_level`.
///
/// On families with a homogeneous stream of candidates along the canonical
/// ray, further candidates are pulled from that ray until `threshold`
/// witnesses are found.
pub fn domination_count(
    g: &GraphFamily,
    search_level: u32,
    l_max: u32,
    threshold: usize,
    budgets: &Budgets,
) -> Result<DominationCount> {
    let t = Truncation::new(g, l_max.max(search_level + 1), budgets.max_vertices)?;
    let mut checked = Vec::new();
    for v in g.ball(search_level) {
        checked.push(dominates_in(&t, v, threshold, budgets.margin)?);
    }
    let count = |checked: &[Domination]| {
        checked
            .iter()
            .filter(|d| d.verdict == Verdict::True)
            .count()
    };
    if g.homogeneous_along_ray() && count(&checked) > 0 {
        let mut i = 0;
        while count(&checked) < threshold {
            let v = g.canonical_ray(i);
            i += 1;
            if g.level(v) <= search_level {
                continue;
            }
            let l = l_max.max(g.level(v) + budgets.margin + 1);
            let t = Truncation::new(g, l, budgets.max_vertices)?;
            let d = dominates_in(&t, v, threshold, budgets.margin)?;
            if d.verdict != Verdict::True {
                break;
            }
            checked.push(d);
        }
    }
    let witnesses: BTreeSet<Vertex> = checked
        .iter()
        .filter(|d| d.verdict == Verdict::True)
        .map(|d| d.vertex)
        .collect();
    let undecided = checked.iter().any(|d| d.verdict == Verdict::Inconclusive);
    let kind = if g.homogeneous_along_ray() && witnesses.len() >= threshold {
        EstimateKind::Infinite
    } else if !undecided && g.locally_finite_beyond(search_level) {
        EstimateKind::Exact
    } else {
        EstimateKind::LowerBound
    };
    Ok(DominationCount {
        estimate: Estimate {
            kind,
            value: witnesses.len(),
        },
        witnesses,
        checked,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DegreeEstimate {
    pub estimate: Estimate,
    /// `(d, s_d)` where `s_d` is the windowed separator size of the ball of
    /// radius `d` in `G - D`.
    pub series: Vec<(u32, FlowValue)>,
    /// Disjoint rays witnessing the lower bound, as initial segments.
    pub rays: Vec<Vec<Vertex>>,
}

/// Number of disjoint rays of the end in `G - deleted`.
pub fn degree_estimate(
    g: &GraphFamily,
    deleted: &BTreeSet<Vertex>,
    d_max: u32,
    l_max: u32,
    patience: u32,
    budgets: &Budgets,
) -> Result<DegreeEstimate> {
    let avoid = Avoid::deleting(deleted.clone());
    let mut series = Vec::new();
    let mut values = Vec::new();
    let mut all_stable = true;
    let mut last_x = BTreeSet::new();
    for d in 0..=d_max {
        let x: BTreeSet<Vertex> = g.ball(d).into_iter().filter(|v| !deleted.contains(v)).collect();
        if x.is_empty() {
            continue;
        }
        let l = l_max.max(d + patience + 1);
        let r = min_end_separator_with(g, &x, &avoid, l, patience, budgets)?;
        all_stable &= r.stabilized;
        series.push((d, r.value));
        values.push(r.value.finite().unwrap_or(usize::MAX));
        last_x = x;
    }
    debug_assert!(values.windows(2).all(|w| w[0] <= w[1]));
    let last = values.last().copied().unwrap_or(0);
    let p = patience as usize + 1;
    let recent = &values[values.len().saturating_sub(p)..];
    let plateau = recent.len() == p && recent.iter().all(|&v| v == last);
    let rising = recent.len() == p && recent.windows(2).all(|w| w[0] < w[1]);

    let rays = if last == 0 || last == usize::MAX {
        Vec::new()
    } else {
        let window = l_max.max(d_max + patience + 1);
        disjoint_rays(g, &last_x, last, window, deleted, budgets)?
    };
    let shown = (l_max as usize + 4).max(8);
    let ray_segments: Vec<Vec<Vertex>> = rays.iter().map(|r| r.take(g, shown)).collect();
    let found = ray_segments.len();

    let kind = match g.width_certificate() {
        Some(w) if plateau && all_stable && found == w && last == w => EstimateKind::Exact,
        None if rising && last >= budgets.divergence_bound => EstimateKind::Infinite,
        _ => EstimateKind::LowerBound,
    };
    let value = if kind == EstimateKind::Infinite { last } else { found };
    Ok(DegreeEstimate {
        estimate: Estimate { kind, value },
        series,
        rays: ray_segments,
    })
}

/// The cohesion category of the end.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "category", content = "value", rename_all = "snake_case")]
pub enum Cohesion {
    Bounded(usize),
    Unbounded,
    Infinite,
    /// Bounded below only; the budget did not settle the category.
    AtLeast(usize),
}

impl std::fmt::Display for Cohesion {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Cohesion::Bounded(k) => write!(f, "bounded({k})"),
            Cohesion::Unbounded => write!(f, "unbounded"),
            Cohesion::Infinite => write!(f, "infinite"),
            Cohesion::AtLeast(k) => write!(f, "at_least({k})"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CohesionEvidence {
    pub dominating_witnesses: BTreeSet<Vertex>,
    /// Separators certifying that a vertex does not dominate.
    pub refutations: Vec<(Vertex, BTreeSet<Vertex>)>,
    pub degree_series: Vec<(u32, FlowValue)>,
    pub rays: Vec<Vec<Vertex>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CohesionReport {
    /// Absent when domination is infinite.
    pub degree: Option<Estimate>,
    pub domination: Estimate,
    pub cohesion: Cohesion,
    pub inconclusive: bool,
    pub evidence: CohesionEvidence,
}

impl CohesionReport {
    /// `deg + dom` when both are exact.
    pub fn exact_sum(&self) -> Option<usize> {
        Some(self.degree?.exact()? + self.domination.exact()?)
    }

    /// Largest proven lower bound on `deg + dom`, or `None` if it is infinite.
    pub fn lower_sum(&self) -> Option<usize> {
        if self.domination.kind == EstimateKind::Infinite {
            return None;
        }
        match self.degree {
            Some(d) if d.kind == EstimateKind::Infinite => None,
            Some(d) => Some(d.value + self.domination.value),
            None => None,
        }
    }
}

pub fn cohesion(g: &GraphFamily, budgets: &Budgets) -> Result<CohesionReport> {
    let dom = domination_count(g, budgets.inner_level, budgets.window, budgets.threshold, budgets)?;
    let refutations = dom
        .checked
        .iter()
        .filter_map(|d| match &d.certificate {
            DominationCertificate::Separator(s) => Some((d.vertex, s.clone())),
            _ => None,
        })
        .collect();
    let mut evidence = CohesionEvidence {
        dominating_witnesses: dom.witnesses.clone(),
        refutations,
        degree_series: Vec::new(),
        rays: Vec::new(),
    };
    if dom.estimate.kind == EstimateKind::Infinite {
        return Ok(CohesionReport {
            degree: None,
            domination: dom.estimate,
            cohesion: Cohesion::Infinite,
            inconclusive: false,
            evidence,
        });
    }
    let deg = degree_estimate(
        g,
        &dom.witnesses,
        budgets.degree_levels,
        budgets.window,
        budgets.patience,
        budgets,
    )?;
    evidence.degree_series = deg.series;
    evidence.rays = deg.rays;
    let (d, m) = (deg.estimate, dom.estimate);
    let (cohesion, inconclusive) = match (d.kind, m.kind) {
        (EstimateKind::Exact, EstimateKind::Exact) => (Cohesion::Bounded(d.value + m.value + 1), false),
        (EstimateKind::Infinite, EstimateKind::Exact) => (Cohesion::Unbounded, false),
        _ => (Cohesion::AtLeast(d.value + m.value + 1), true),
    };
    Ok(CohesionReport {
        degree: Some(d),
        domination: m,
        cohesion,
        inconclusive,
        evidence,
    })
}
