use thiserror::Error;

use crate::family::Vertex;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unknown graph family `{0}`")]
    UnknownFamily(String),

    #[error("invalid parameter `{key}` for family `{family}`: {reason}")]
    InvalidParam {
        family: String,
        key: String,
        reason: String,
    },

    #[error("budget exceeded: {what} (limit {limit})")]
    BudgetExceeded { what: &'static str, limit: usize },

    #[error("horizon too small: window {window} must exceed level {required}")]
    HorizonTooSmall { window: u32, required: u32 },

    #[error("vertex {0} lies outside the truncation window")]
    OutsideWindow(Vertex),

    #[error("empty source set")]
    EmptySource,

    #[error("requested {requested} disjoint rays but only {available} exist")]
    CountTooLarge { requested: usize, available: usize },

    #[error("end is dominated: {0} cannot be separated from the end")]
    DominatedEnd(Vertex),

    #[error("no relative decider of size {k}: deg + dom = {bound} < {k}")]
    InsufficientCohesion { k: usize, bound: usize },

    #[error("no limit point of shape (V,D) for k = {k}: deg + dom >= {bound} >= {k}")]
    CohesionTooHigh { k: usize, bound: usize },

    #[error("inconclusive: {0}")]
    Inconclusive(String),

    #[error("separation is not oriented toward the end")]
    NotInTau,

    #[error("not a separation: {0}")]
    NotASeparation(String),

    #[error("set contains both orientations of a separation")]
    NotAnOrientation,

    #[error("graph has {n} vertices, oracle cap is {cap}")]
    CapExceeded { n: usize, cap: usize },

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
