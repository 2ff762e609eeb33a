//! Ends of lazily generated infinite graphs, and the tangles they induce.
//!
//! A [`GraphFamily`] describes a one-ended graph through level-bounded
//! oracles. On top of finite truncations the crate computes minimum
//! separators from the end, the degree and domination of the end, and its
//! cohesion. For each order `k` it decides whether the end tangle of order
//! `k` is closed, producing either a relative decider of size `k` or samples
//! of the limit point `(V, D)`. Brute-force oracles on small finite graphs
//! cross-check the flow and enumeration code.

pub mod budget;
pub mod cli;
pub mod closure;
pub mod deciders;
pub mod enumerate;
pub mod error;
pub mod family;
pub mod finite;
pub mod flow;
pub mod invariants;
pub mod menger;
pub mod report;
pub mod separation;
pub mod truncation;

pub use budget::Budgets;
pub use closure::{closure_check, ClosureVerdict};
pub use deciders::{find_relative_decider, DeciderCertificate};
pub use error::{Error, Result};
pub use family::{FamilySpec, GraphFamily, Vertex};
pub use flow::FlowValue;
pub use invariants::{cohesion, Cohesion, CohesionReport};
pub use separation::{OrientedSeparation, Side};
