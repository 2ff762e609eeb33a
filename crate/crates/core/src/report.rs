//! The analysis report emitted by the command line, as JSON or text.

use std::collections::BTreeMap;
use std::fmt::Write;

use serde::Serialize;

use crate::budget::Budgets;
use crate::closure::{ClosureVerdict, ClosureWitness, LimitSample};
use crate::deciders::{DeciderCertificate, EnumerationCheck, FlowCheck};
use crate::family::{GraphFamily, Vertex};
use crate::finite::SelfTest;
use crate::invariants::{CohesionReport, Estimate, EstimateKind};
use crate::separation::OrientedSeparation;

pub const SCHEMA_VERSION: &str = "1.0";

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FamilyInfo {
    pub name: String,
    pub params: BTreeMap<String, i64>,
    pub label: String,
}

impl From<&GraphFamily> for FamilyInfo {
    fn from(g: &GraphFamily) -> Self {
        FamilyInfo {
            name: g.name().to_string(),
            params: g.params(),
            label: g.label(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Ok,
    Inconclusive,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationSummary {
    /// Structural check of the certificate.
    pub certificate_ok: bool,
    pub flow: FlowCheck,
    pub enumeration: Option<EnumerationCheck>,
    /// Why the enumeration was not run, if it was not.
    pub enumeration_skipped: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PerK {
    pub k: usize,
    pub closed: Option<bool>,
    pub verdict: Option<ClosureVerdict>,
    pub decider: Option<DeciderCertificate>,
    pub verification: Option<VerificationSummary>,
    pub note: Option<String>,
}

impl PerK {
    pub fn new(k: usize) -> Self {
        PerK {
            k,
            closed: None,
            verdict: None,
            decider: None,
            verification: None,
            note: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LimitPointReport {
    pub k: usize,
    pub d: Vec<Vertex>,
    pub target: OrientedSeparation,
    pub sample: Option<LimitSample>,
    pub note: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct StageTime {
    pub stage: String,
    pub millis: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AnalysisReport {
    pub schema_version: &'static str,
    pub command: String,
    pub family: Option<FamilyInfo>,
    pub budgets: Budgets,
    pub status: Status,
    pub cohesion: Option<CohesionReport>,
    pub per_k: Vec<PerK>,
    pub limit_point: Option<LimitPointReport>,
    pub oracle_selftest: Option<SelfTest>,
    /// Wall-clock durations; the only part that varies between runs.
    pub timing: Vec<StageTime>,
}

impl AnalysisReport {
    pub fn new(command: &str, family: Option<&GraphFamily>, budgets: Budgets) -> Self {
        AnalysisReport {
            schema_version: SCHEMA_VERSION,
            command: command.to_string(),
            family: family.map(FamilyInfo::from),
            budgets,
            status: Status::Ok,
            cohesion: None,
            per_k: Vec::new(),
            limit_point: None,
            oracle_selftest: None,
            timing: Vec::new(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "command: {}", self.command);
        if let Some(f) = &self.family {
            let _ = writeln!(out, "family: {}", f.label);
        }
        if let Some(c) = &self.cohesion {
            let _ = writeln!(out, "cohesion: {}", c.cohesion);
            if let Some(d) = c.degree {
                let _ = writeln!(out, "degree: {}", estimate(d));
            }
            let _ = writeln!(out, "domination: {}", estimate(c.domination));
            if !c.evidence.dominating_witnesses.is_empty() {
                let _ = writeln!(out, "dominating: {}", list(c.evidence.dominating_witnesses.iter()));
            }
        }
        for p in &self.per_k {
            let _ = writeln!(out, "{}", per_k_line(p));
        }
        if let Some(l) = &self.limit_point {
            let _ = writeln!(out, "limit point k={} D={}", l.k, list(l.d.iter()));
            if let Some(s) = &l.sample {
                let _ = writeln!(
                    out,
                    "  Z=ball({}) agreeing {} order {} restriction {}",
                    s.z_level,
                    sep_text(&s.agreeing),
                    s.order,
                    if s.restriction_ok { "ok" } else { "FAILED" }
                );
            }
            if let Some(n) = &l.note {
                let _ = writeln!(out, "  {n}");
            }
        }
        if let Some(s) = &self.oracle_selftest {
            let _ = writeln!(
                out,
                "oracle selftest seed={} graphs={} flow={}/{} separations={}/{} tangles={}/{} triangle={}",
                s.seed,
                s.graphs,
                s.flow_vs_brute.passed,
                s.flow_vs_brute.passed + s.flow_vs_brute.failed,
                s.separation_generation.passed,
                s.separation_generation.passed + s.separation_generation.failed,
                s.majority_tangles.passed,
                s.majority_tangles.passed + s.majority_tangles.failed,
                s.triangle_separations
            );
        }
        let _ = writeln!(
            out,
            "status: {}",
            match self.status {
                Status::Ok => "ok",
                Status::Inconclusive => "inconclusive",
            }
        );
        out
    }
}

fn estimate(e: Estimate) -> String {
    match e.kind {
        EstimateKind::Exact => format!("exact {}", e.value),
        EstimateKind::LowerBound => format!("at least {}", e.value),
        EstimateKind::Infinite => format!("infinite (evidence {})", e.value),
    }
}

fn list<'a>(vs: impl Iterator<Item = &'a Vertex>) -> String {
    let parts: Vec<String> = vs.map(ToString::to_string).collect();
    format!("[{}]", parts.join(", "))
}

fn sep_text(s: &OrientedSeparation) -> String {
    format!(
        "sep={} interior={}",
        list(s.separator().iter()),
        list(s.interior().iter())
    )
}

/// One line per `k`; the verdict word is `closed`, `not-closed` or
/// `undecided`.
pub fn per_k_line(p: &PerK) -> String {
    let word = match p.closed {
        Some(true) => "closed",
        Some(false) => "not-closed",
        None => "undecided",
    };
    let mut line = format!("k={}: {word}", p.k);
    if let Some(v) = &p.verdict {
        match &v.witness {
            ClosureWitness::Decider {
                certificate,
                verification,
            } => {
                let _ = write!(
                    line,
                    " via decider X={} (flow check {} partitions {})",
                    list(certificate.x.iter()),
                    if verification.ok { "ok" } else { "FAILED" },
                    verification.partitions_checked
                );
            }
            ClosureWitness::LimitPoint(e) => {
                let good = e.samples.iter().filter(|s| s.restriction_ok).count();
                let _ = write!(
                    line,
                    " via limit point (V,D) D={} samples {good}/{} agree",
                    list(e.d.iter()),
                    e.samples.len()
                );
            }
        }
    }
    if let Some(c) = &p.decider {
        let _ = write!(line, " decider X={}", list(c.x.iter()));
    }
    if let Some(v) = &p.verification {
        let _ = write!(line, " flow {}", if v.flow.ok { "ok" } else { "FAILED" });
        match (&v.enumeration, &v.enumeration_skipped) {
            (Some(e), _) => {
                let _ = write!(
                    line,
                    " enumeration {} ({} separations, {} violations)",
                    if e.ok { "ok" } else { "FAILED" },
                    e.separations_checked,
                    e.violation_count
                );
            }
            (None, Some(why)) => {
                let _ = write!(line, " enumeration skipped: {why}");
            }
            _ => {}
        }
    }
    if let Some(n) = &p.note {
        let _ = write!(line, " ({n})");
    }
    line
}
