//! Whether the end tangle of order `k` is closed, with a decider when it is
//! and samples of the limit point `(V, D)` when it is not.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::budget::Budgets;
use crate::deciders::{find_relative_decider_with, verify_decider_flow, DeciderCertificate, FlowCheck};
use crate::error::{Error, Result};
use crate::family::{GraphFamily, Vertex};
use crate::invariants::{cohesion, Cohesion, CohesionReport, EstimateKind};
use crate::menger::{min_end_separator_with, Avoid};
use crate::separation::{OrientedSeparation, RestrictionOnZ, Side};
use crate::truncation::{label_components, max_level, ComponentLabel, Truncation};

/// A member of the end tangle agreeing with `(V, D)` on the ball `z`.
pub fn limit_point_witness(
    g: &GraphFamily,
    k: usize,
    z: &BTreeSet<Vertex>,
    report: &CohesionReport,
    budgets: &Budgets,
) -> Result<OrientedSeparation> {
    let bound = match report.exact_sum() {
        Some(s) if s >= k => return Err(Error::CohesionTooHigh { k, bound: s }),
        Some(s) => s,
        None if report.lower_sum().is_some_and(|s| s < k) => {
            return Err(Error::Inconclusive(format!(
                "deg + dom is only bounded below by {}",
                report.lower_sum().unwrap_or(0)
            )))
        }
        None => {
            return Err(Error::CohesionTooHigh {
                k,
                bound: report.lower_sum().unwrap_or(k),
            })
        }
    };
    let d = report.evidence.dominating_witnesses.clone();
    let rest: BTreeSet<Vertex> = z.difference(&d).copied().collect();
    let top = max_level(g, z.iter().chain(&d)).unwrap_or(0);
    let window = budgets
        .window
        .max(top + budgets.patience + budgets.margin + 2);
    let mut separator = d.clone();
    if !rest.is_empty() {
        let avoid = Avoid {
            deleted: d.clone(),
            forbidden: rest.clone(),
        };
        let r = min_end_separator_with(g, &rest, &avoid, window, budgets.patience, budgets)?;
        if r.value.is_infinite() {
            return Err(Error::Inconclusive(format!("{} cannot be cut off from the end", g.label())));
        }
        separator.extend(r.separator);
    }
    if separator.len() > bound {
        return Err(Error::Inconclusive(format!(
            "separator of size {} exceeds deg + dom = {bound}",
            separator.len()
        )));
    }
    let t = Truncation::new(g, window, budgets.max_vertices)?;
    let mut interior = BTreeSet::new();
    for c in label_components(&t, &separator)? {
        match c.label {
            ComponentLabel::Finite => interior.extend(c.vertices),
            ComponentLabel::ContainsEnd => {}
            ComponentLabel::Undetermined => {
                return Err(Error::Inconclusive("component with unknown side".into()))
            }
        }
    }
    let s = OrientedSeparation::new(g, separator, interior, Side::B)?.with_window(window);
    debug_assert!(s.in_tau() && s.order() < k);
    debug_assert!(z.iter().all(|&v| s.in_a(v)));
    Ok(s)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LimitSample {
    pub z_level: u32,
    pub z: BTreeSet<Vertex>,
    pub agreeing: OrientedSeparation,
    pub restriction: RestrictionOnZ,
    /// `agreeing` and `(V, D)` induce the same separation on `z`.
    pub restriction_ok: bool,
    pub order: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LimitPointEvidence {
    pub d: BTreeSet<Vertex>,
    /// The shape `(V, D)`, which is not in the tangle.
    pub target: OrientedSeparation,
    pub samples: Vec<LimitSample>,
}

impl LimitPointEvidence {
    pub fn all_ok(&self, k: usize) -> bool {
        !self.target.in_tau()
            && self
                .samples
                .iter()
                .all(|s| s.restriction_ok && s.order < k && s.agreeing.in_tau())
    }
}

/// Samples of `(V, D)` being a limit of the tangle, on balls of radius
/// `1..=z_max`.
pub fn limit_point_evidence(
    g: &GraphFamily,
    k: usize,
    z_max: u32,
    report: &CohesionReport,
    budgets: &Budgets,
) -> Result<LimitPointEvidence> {
    let d = report.evidence.dominating_witnesses.clone();
    let target = OrientedSeparation::co_finite(g, d.clone())?;
    let mut samples = Vec::new();
    for z_level in 1..=z_max {
        let z: BTreeSet<Vertex> = g.ball(z_level).into_iter().collect();
        let agreeing = limit_point_witness(g, k, &z, report, budgets)?;
        let restriction = agreeing.restrict(&z);
        let expected = target.restrict(&z);
        samples.push(LimitSample {
            z_level,
            restriction_ok: restriction == expected && agreeing.agrees_on(&target, &z),
            order: agreeing.order(),
            restriction,
            agreeing,
            z,
        });
    }
    Ok(LimitPointEvidence { d, target, samples })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Route {
    Decider,
    LimitPoint,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ClosureWitness {
    Decider {
        certificate: DeciderCertificate,
        verification: FlowCheck,
    },
    LimitPoint(LimitPointEvidence),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClosureVerdict {
    pub k: usize,
    pub closed: bool,
    /// Verdict read off the cohesion report alone.
    pub parameter_closed: bool,
    pub route: Route,
    pub witness: ClosureWitness,
}

/// Closedness from the invariants alone: closed iff `deg + dom >= k`.
pub fn closed_by_parameters(report: &CohesionReport, k: usize) -> Result<bool> {
    match report.cohesion {
        Cohesion::Infinite | Cohesion::Unbounded => Ok(true),
        Cohesion::Bounded(c) => Ok(k < c),
        Cohesion::AtLeast(c) if k < c => Ok(true),
        Cohesion::AtLeast(c) => Err(Error::Inconclusive(format!(
            "cohesion is only known to be at least {c}"
        ))),
    }
}

pub fn closure_check(g: &GraphFamily, k: usize, budgets: &Budgets) -> Result<ClosureVerdict> {
    let report = cohesion(g, budgets)?;
    closure_check_with(g, k, &report, budgets)
}

/// Builds a decider and verifies it with flows when the parameters say
/// closed; samples the limit point otherwise.
pub fn closure_check_with(
    g: &GraphFamily,
    k: usize,
    report: &CohesionReport,
    budgets: &Budgets,
) -> Result<ClosureVerdict> {
    let parameter_closed = closed_by_parameters(report, k)?;
    if parameter_closed {
        let certificate = find_relative_decider_with(g, k, report, budgets)?;
        let top = max_level(g, &certificate.x).unwrap_or(0);
        let window = budgets.window.max(top + 2 * budgets.margin + 6);
        let verification = verify_decider_flow(g, &certificate.x, k, window, budgets)?;
        if !verification.ok {
            return Err(Error::Inconclusive(format!(
                "constructed decider for k = {k} failed verification"
            )));
        }
        return Ok(ClosureVerdict {
            k,
            closed: true,
            parameter_closed,
            route: Route::Decider,
            witness: ClosureWitness::Decider {
                certificate,
                verification,
            },
        });
    }
    debug_assert!(report.domination.kind != EstimateKind::Infinite);
    let evidence = limit_point_evidence(g, k, budgets.z_samples, report, budgets)?;
    if !evidence.all_ok(k) {
        return Err(Error::Inconclusive(format!(
            "limit point samples for k = {k} failed restriction checks"
        )));
    }
    Ok(ClosureVerdict {
        k,
        closed: false,
        parameter_closed,
        route: Route::LimitPoint,
        witness: ClosureWitness::LimitPoint(evidence),
    })
}
