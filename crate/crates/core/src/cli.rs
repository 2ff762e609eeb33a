//! Command-line front end. [`run_cli`] never prints; it returns what the
//! binary should write and the exit code.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::budget::Budgets;
use crate::closure::{closure_check_with, limit_point_witness, LimitSample};
use crate::deciders::{find_relative_decider_with, verify_decider, verify_decider_flow};
use crate::error::{Error, Result};
use crate::family::{FamilySpec, GraphFamily};
use crate::finite::oracle_selftest;
use crate::invariants::{cohesion, CohesionReport};
use crate::report::{AnalysisReport, LimitPointReport, PerK, StageTime, Status, VerificationSummary};
use crate::separation::OrientedSeparation;
use crate::truncation::max_level;

#[derive(Debug, Parser)]
#[command(name = "endtangle", version, about = "Cohesion, deciders and closure of end tangles")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    common: Common,
}

#[derive(Debug, Args)]
struct Common {
    /// Graph family: ray, ladder, grid, clique_ray, dominated_ray, complete.
    #[arg(long, global = true, env = "ENDTANGLE_FAMILY", default_value = "ray")]
    family: String,
    /// Family parameter, e.g. `m=3`. Repeatable.
    #[arg(long = "param", global = true, value_parser = parse_param)]
    params: Vec<(String, i64)>,
    /// Read the family from a spec file instead.
    #[arg(long, global = true, env = "ENDTANGLE_SPEC_FILE")]
    spec_file: Option<std::path::PathBuf>,
    /// Truncation level for flows.
    #[arg(long, global = true, env = "ENDTANGLE_WINDOW")]
    window: Option<u32>,
    /// Separator search radius.
    #[arg(long, global = true, env = "ENDTANGLE_INNER_LEVEL")]
    inner_level: Option<u32>,
    /// Cap on vertices in a single truncation.
    #[arg(long, global = true, env = "ENDTANGLE_BUDGET")]
    budget: Option<usize>,
    /// Equal values in a row before a scan counts as stable.
    #[arg(long, global = true, env = "ENDTANGLE_PATIENCE")]
    patience: Option<u32>,
    /// Seed for the random graph oracle.
    #[arg(long, global = true, env = "ENDTANGLE_SEED", default_value_t = 1)]
    seed: u64,
    /// Output format.
    #[arg(long, global = true, env = "ENDTANGLE_EMIT", value_enum, default_value_t = Emit::Json)]
    emit: Emit,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Emit {
    Json,
    Text,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Degree, domination and cohesion of the end.
    Cohesion,
    /// Whether the tangle of order k is closed.
    Closure {
        #[arg(long)]
        k: usize,
    },
    /// Build and verify a relative decider of size k.
    Decider {
        #[arg(long)]
        k: usize,
    },
    /// A tangle member agreeing with the limit point on a ball.
    LimitPoint {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        z_level: u32,
    },
    /// Compare flow and enumeration code against brute force.
    OracleSelftest {
        #[arg(long, default_value_t = 200)]
        graphs: usize,
    },
    /// Closure verdicts for k = 1..=k_max.
    Sweep {
        #[arg(long)]
        k_max: usize,
    },
}

fn parse_param(s: &str) -> std::result::Result<(String, i64), String> {
    let (k, v) = s
        .split_once('=')
        .ok_or_else(|| format!("expected key=value, got `{s}`"))?;
    let v: i64 = v.trim().parse().map_err(|_| format!("`{v}` is not an integer"))?;
    Ok((k.trim().to_string(), v))
}

/// What the binary should print, and its exit code: 0 on success, 2 when a
/// result is inconclusive at the given budgets, 1 on any error.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliOutput {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn run_cli<I, T>(args: I) -> CliOutput
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                CliOutput {
                    code: 1,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                CliOutput {
                    code: 0,
                    stdout: text,
                    stderr: String::new(),
                }
            };
        }
    };
    match execute(&cli) {
        Ok(report) => CliOutput {
            code: if report.status == Status::Ok { 0 } else { 2 },
            stdout: match cli.common.emit {
                Emit::Json => report.to_json() + "\n",
                Emit::Text => report.to_text(),
            },
            stderr: String::new(),
        },
        Err(e) => CliOutput {
            code: if matches!(e, Error::Inconclusive(_)) { 2 } else { 1 },
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}

fn family(c: &Common) -> Result<GraphFamily> {
    if let Some(path) = &c.spec_file {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
        return text.parse::<FamilySpec>()?.build();
    }
    let mut params = BTreeMap::new();
    for (k, v) in &c.params {
        params.insert(k.clone(), *v);
    }
    GraphFamily::make(&c.family, &params)
}

fn budgets(c: &Common) -> Budgets {
    let mut b = Budgets::default();
    if let Some(w) = c.window {
        b.window = w;
    }
    if let Some(l) = c.inner_level {
        b.inner_level = l;
    }
    if let Some(n) = c.budget {
        b.max_vertices = n;
    }
    if let Some(p) = c.patience {
        b.patience = p;
    }
    b
}

struct Clock(Vec<StageTime>);

impl Clock {
    fn time<T>(&mut self, stage: &str, f: impl FnOnce() -> T) -> T {
        let start = Instant::now();
        let out = f();
        self.0.push(StageTime {
            stage: stage.to_string(),
            millis: start.elapsed().as_secs_f64() * 1e3,
        });
        out
    }
}

fn execute(cli: &Cli) -> Result<AnalysisReport> {
    let b = budgets(&cli.common);
    let mut clock = Clock(Vec::new());
    if let Command::OracleSelftest { graphs } = cli.command {
        let mut report = AnalysisReport::new("oracle-selftest", None, b);
        let s = clock.time("oracle_selftest", || oracle_selftest(cli.common.seed, graphs))?;
        if !s.ok() {
            return Err(Error::Inconclusive("oracle selftest found disagreements".into()));
        }
        report.oracle_selftest = Some(s);
        report.timing = clock.0;
        return Ok(report);
    }
    let g = family(&cli.common)?;
    let name = match cli.command {
        Command::Cohesion => "cohesion",
        Command::Closure { .. } => "closure",
        Command::Decider { .. } => "decider",
        Command::LimitPoint { .. } => "limit-point",
        Command::Sweep { .. } => "sweep",
        Command::OracleSelftest { .. } => unreachable!(),
    };
    let mut report = AnalysisReport::new(name, Some(&g), b);
    let coh = clock.time("cohesion", || cohesion(&g, &b))?;
    if coh.inconclusive {
        report.status = Status::Inconclusive;
    }
    match cli.command {
        Command::Cohesion => {}
        Command::Closure { k } => {
            let p = clock.time("closure", || closure_entry(&g, k, &coh, &b))?;
            if p.closed.is_none() {
                report.status = Status::Inconclusive;
            }
            report.per_k.push(p);
        }
        Command::Sweep { k_max } => {
            for k in 1..=k_max {
                let p = clock.time(&format!("closure k={k}"), || closure_entry(&g, k, &coh, &b))?;
                if p.closed.is_none() {
                    report.status = Status::Inconclusive;
                }
                report.per_k.push(p);
            }
        }
        Command::Decider { k } => {
            let p = clock.time("decider", || decider_entry(&g, k, &coh, &b))?;
            if p.closed.is_none() {
                report.status = Status::Inconclusive;
            }
            report.per_k.push(p);
        }
        Command::LimitPoint { k, z_level } => {
            let l = clock.time("limit_point", || limit_entry(&g, k, z_level, &coh, &b))?;
            report.limit_point = Some(l);
        }
        Command::OracleSelftest { .. } => unreachable!(),
    }
    report.cohesion = Some(coh);
    report.timing = clock.0;
    Ok(report)
}

fn closure_entry(g: &GraphFamily, k: usize, coh: &CohesionReport, b: &Budgets) -> Result<PerK> {
    let mut p = PerK::new(k);
    match closure_check_with(g, k, coh, b) {
        Ok(v) => {
            p.closed = Some(v.closed);
            p.verdict = Some(v);
        }
        Err(Error::Inconclusive(why)) => p.note = Some(why),
        Err(e) => return Err(e),
    }
    Ok(p)
}

fn decider_entry(g: &GraphFamily, k: usize, coh: &CohesionReport, b: &Budgets) -> Result<PerK> {
    let mut p = PerK::new(k);
    let cert = match find_relative_decider_with(g, k, coh, b) {
        Ok(c) => c,
        Err(e @ Error::InsufficientCohesion { .. }) => {
            p.closed = Some(false);
            p.note = Some(e.to_string());
            return Ok(p);
        }
        Err(Error::Inconclusive(why)) => {
            p.note = Some(why);
            return Ok(p);
        }
        Err(e) => return Err(e),
    };
    let top = max_level(g, &cert.x).unwrap_or(0);
    let flow = verify_decider_flow(g, &cert.x, k, b.window.max(top + 2 * b.margin + 6), b)?;
    let window = b.inner_level + b.margin + 3;
    let (enumeration, enumeration_skipped) = match verify_decider(g, &cert.x, k, b.inner_level, window, b) {
        Ok(e) => (Some(e), None),
        Err(e @ Error::BudgetExceeded { .. }) => (None, Some(e.to_string())),
        Err(e) => return Err(e),
    };
    let certificate_ok = cert.check(g).is_ok();
    let all_ok = certificate_ok && flow.ok && enumeration.as_ref().is_none_or(|e| e.ok);
    p.closed = all_ok.then_some(true);
    if !all_ok {
        p.note = Some("decider failed verification".into());
    }
    p.verification = Some(VerificationSummary {
        certificate_ok,
        flow,
        enumeration,
        enumeration_skipped,
    });
    p.decider = Some(cert);
    Ok(p)
}

fn limit_entry(
    g: &GraphFamily,
    k: usize,
    z_level: u32,
    coh: &CohesionReport,
    b: &Budgets,
) -> Result<LimitPointReport> {
    let d = coh.evidence.dominating_witnesses.clone();
    let target = OrientedSeparation::co_finite(g, d.clone())?;
    let mut out = LimitPointReport {
        k,
        d: d.iter().copied().collect(),
        target: target.clone(),
        sample: None,
        note: None,
    };
    let z = g.ball(z_level).into_iter().collect();
    match limit_point_witness(g, k, &z, coh, b) {
        Ok(agreeing) => {
            let restriction = agreeing.restrict(&z);
            out.sample = Some(LimitSample {
                z_level,
                restriction_ok: restriction == target.restrict(&z) && agreeing.agrees_on(&target, &z),
                order: agreeing.order(),
                restriction,
                agreeing,
                z,
            });
        }
        Err(e @ Error::CohesionTooHigh { .. }) => out.note = Some(e.to_string()),
        Err(e) => return Err(e),
    }
    Ok(out)
}
