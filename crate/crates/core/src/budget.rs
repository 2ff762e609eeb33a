use serde::Serialize;

/// Search limits shared by every analysis.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Budgets {
    /// Truncation level used for flows and component labelling.
    pub window: u32,
    /// Separators are enumerated among vertices up to this level; also the
    /// domination search depth.
    pub inner_level: u32,
    /// Consecutive equal values required before a scan counts as stable.
    pub patience: u32,
    /// Cap on the number of vertices in any single truncation.
    pub max_vertices: usize,
    /// Largest ball radius used by the degree scan.
    pub degree_levels: u32,
    /// Number of dominating vertices that, on a homogeneous family, certify
    /// infinite domination.
    pub threshold: usize,
    /// Scan value above which a strictly increasing degree scan is reported
    /// as infinite.
    pub divergence_bound: usize,
    /// Number of growing balls sampled as limit-point evidence.
    pub z_samples: u32,
    /// Levels kept between a certificate and the window edge.
    pub margin: u32,
    /// Cap on the number of separations produced by one enumeration.
    pub max_separations: usize,
}

impl Default for Budgets {
    fn default() -> Self {
        Budgets {
            window: 20,
            inner_level: 6,
            patience: 3,
            max_vertices: 100_000,
            degree_levels: 8,
            threshold: 8,
            divergence_bound: 8,
            z_samples: 4,
            margin: 1,
            max_separations: 2_000_000,
        }
    }
}
