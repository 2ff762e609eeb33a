//! Lazily generated one-ended infinite graphs.
//!
//! Every family exposes the same oracle surface: a level function that
//! stratifies the vertex set into finite shells, a neighbor oracle bounded by
//! level, and a canonical ray that witnesses the unique end. All algorithms in
//! the crate see a family only through these oracles.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// A vertex of one of the built-in families, in family-specific coordinates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Vertex {
    /// `v_i` of a ray (also the ray vertices `r_i` of the dominated ray).
    Ray(u32),
    /// Apex `a_j` of the dominated ray.
    Apex(u32),
    /// Ladder vertex in row `row`, column `col`.
    Cell { row: u32, col: u32 },
    /// Quarter-grid vertex.
    Grid { x: u32, y: u32 },
    /// Vertex `pos` of the clique `K^block` (blocks start at 1).
    Clique { block: u32, pos: u32 },
    /// Vertex `i` of the countable complete graph.
    Complete(u32),
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Vertex::Ray(i) => write!(f, "v{i}"),
            Vertex::Apex(j) => write!(f, "a{j}"),
            Vertex::Cell { row, col } => write!(f, "c{col}r{row}"),
            Vertex::Grid { x, y } => write!(f, "({x},{y})"),
            Vertex::Clique { block, pos } => write!(f, "K{block}.{pos}"),
            Vertex::Complete(i) => write!(f, "k{i}"),
        }
    }
}

impl Serialize for Vertex {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// Declared value of an end invariant.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Declared {
    Finite(usize),
    Infinite,
}

/// Ground truth for a family, for use by tests only. No algorithm in this
/// crate reads it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Annotations {
    pub degree: Declared,
    pub domination: Declared,
}

/// One of the built-in one-ended families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GraphFamily {
    /// A single ray `v_0 v_1 ...`.
    Ray,
    /// `m` parallel rays joined by rungs in every column.
    Ladder { m: u32 },
    /// The quarter grid `N x N`, levelled by the max-coordinate.
    Grid,
    /// A ray whose n-th vertex is blown up into `K^n`, consecutive cliques
    /// completely joined.
    CliqueRay,
    /// A ray plus `m` apexes adjacent to every ray vertex.
    DominatedRay { m: u32 },
    /// The countable complete graph.
    Complete,
}

pub const FAMILY_NAMES: [&str; 6] = [
    "ray",
    "ladder",
    "grid",
    "clique_ray",
    "dominated_ray",
    "complete",
];

impl GraphFamily {
    pub fn make(name: &str, params: &BTreeMap<String, i64>) -> Result<Self> {
        let known: &[&str] = match name {
            "ladder" | "dominated_ray" => &["m"],
            "ray" | "grid" | "clique_ray" | "complete" => &[],
            _ => return Err(Error::UnknownFamily(name.to_string())),
        };
        if let Some(key) = params.keys().find(|k| !known.contains(&k.as_str())) {
            return Err(Error::InvalidParam {
                family: name.to_string(),
                key: key.clone(),
                reason: "unknown parameter".into(),
            });
        }
        let m = || -> Result<u32> {
            let raw = *params.get("m").ok_or_else(|| Error::InvalidParam {
                family: name.to_string(),
                key: "m".into(),
                reason: "missing".into(),
            })?;
            if !(1..=64).contains(&raw) {
                return Err(Error::InvalidParam {
                    family: name.to_string(),
                    key: "m".into(),
                    reason: format!("must be in 1..=64, got {raw}"),
                });
            }
            Ok(raw as u32)
        };
        Ok(match name {
            "ray" => GraphFamily::Ray,
            "ladder" => GraphFamily::Ladder { m: m()? },
            "grid" => GraphFamily::Grid,
            "clique_ray" => GraphFamily::CliqueRay,
            "dominated_ray" => GraphFamily::DominatedRay { m: m()? },
            _ => GraphFamily::Complete,
        })
    }

    pub fn name(&self) -> &'static str {
        match self {
            GraphFamily::Ray => "ray",
            GraphFamily::Ladder { .. } => "ladder",
            GraphFamily::Grid => "grid",
            GraphFamily::CliqueRay => "clique_ray",
            GraphFamily::DominatedRay { .. } => "dominated_ray",
            GraphFamily::Complete => "complete",
        }
    }

    pub fn params(&self) -> BTreeMap<String, i64> {
        let mut out = BTreeMap::new();
        if let GraphFamily::Ladder { m } | GraphFamily::DominatedRay { m } = self {
            out.insert("m".to_string(), i64::from(*m));
        }
        out
    }

    /// Short label such as `ladder(m=3)`.
    pub fn label(&self) -> String {
        let params = self.params();
        if params.is_empty() {
            self.name().to_string()
        } else {
            let inner: Vec<String> = params.iter().map(|(k, v)| format!("{k}={v}")).collect();
            format!("{}({})", self.name(), inner.join(","))
        }
    }

    /// Whether `v` is a vertex of this family.
    pub fn contains(&self, v: Vertex) -> bool {
        match (*self, v) {
            (GraphFamily::Ray, Vertex::Ray(_)) => true,
            (GraphFamily::Ladder { m }, Vertex::Cell { row, .. }) => row < m,
            (GraphFamily::Grid, Vertex::Grid { .. }) => true,
            (GraphFamily::CliqueRay, Vertex::Clique { block, pos }) => block >= 1 && pos < block,
            (GraphFamily::DominatedRay { .. }, Vertex::Ray(_)) => true,
            (GraphFamily::DominatedRay { m }, Vertex::Apex(j)) => j < m,
            (GraphFamily::Complete, Vertex::Complete(_)) => true,
            _ => false,
        }
    }

    pub fn level(&self, v: Vertex) -> u32 {
        match v {
            Vertex::Ray(i) | Vertex::Complete(i) => i,
            Vertex::Apex(_) => 0,
            Vertex::Cell { col, .. } => col,
            Vertex::Grid { x, y } => x.max(y),
            Vertex::Clique { block, .. } => block - 1,
        }
    }

    /// All vertices of level exactly `l`, sorted.
    pub fn vertices_at_level(&self, l: u32) -> Vec<Vertex> {
        match *self {
            GraphFamily::Ray => vec![Vertex::Ray(l)],
            GraphFamily::Ladder { m } => (0..m).map(|row| Vertex::Cell { row, col: l }).collect(),
            GraphFamily::Grid => {
                let mut out: Vec<Vertex> = (0..=l)
                    .map(|y| Vertex::Grid { x: l, y })
                    .chain((0..l).map(|x| Vertex::Grid { x, y: l }))
                    .collect();
                out.sort();
                out
            }
            GraphFamily::CliqueRay => (0..l + 1)
                .map(|pos| Vertex::Clique { block: l + 1, pos })
                .collect(),
            GraphFamily::DominatedRay { m } => {
                let mut out = vec![Vertex::Ray(l)];
                if l == 0 {
                    out.extend((0..m).map(Vertex::Apex));
                }
                out.sort();
                out
            }
            GraphFamily::Complete => vec![Vertex::Complete(l)],
        }
    }

    /// All vertices of level at most `l`, sorted.
    pub fn ball(&self, l: u32) -> Vec<Vertex> {
        let mut out: Vec<Vertex> = (0..=l).flat_map(|i| self.vertices_at_level(i)).collect();
        out.sort();
        out
    }

    /// Neighbors of `v` whose level is at most `max_level`, sorted.
    ///
    /// Apexes and complete-graph vertices have infinitely many neighbors; the
    /// bound makes the stream finite.
    pub fn neighbors(&self, v: Vertex, max_level: u32) -> Vec<Vertex> {
        let mut out = Vec::new();
        match (*self, v) {
            (GraphFamily::Ray, Vertex::Ray(i)) => {
                if i > 0 {
                    out.push(Vertex::Ray(i - 1));
                }
                out.push(Vertex::Ray(i + 1));
            }
            (GraphFamily::Ladder { m }, Vertex::Cell { row, col }) => {
                if col > 0 {
                    out.push(Vertex::Cell { row, col: col - 1 });
                }
                out.push(Vertex::Cell { row, col: col + 1 });
                if row > 0 {
                    out.push(Vertex::Cell { row: row - 1, col });
                }
                if row + 1 < m {
                    out.push(Vertex::Cell { row: row + 1, col });
                }
            }
            (GraphFamily::Grid, Vertex::Grid { x, y }) => {
                if x > 0 {
                    out.push(Vertex::Grid { x: x - 1, y });
                }
                if y > 0 {
                    out.push(Vertex::Grid { x, y: y - 1 });
                }
                out.push(Vertex::Grid { x: x + 1, y });
                out.push(Vertex::Grid { x, y: y + 1 });
            }
            (GraphFamily::CliqueRay, Vertex::Clique { block, pos }) => {
                for b in block.saturating_sub(1).max(1)..=block + 1 {
                    for p in 0..b {
                        if (b, p) != (block, pos) {
                            out.push(Vertex::Clique { block: b, pos: p });
                        }
                    }
                }
            }
            (GraphFamily::DominatedRay { m }, Vertex::Ray(i)) => {
                if i > 0 {
                    out.push(Vertex::Ray(i - 1));
                }
                out.push(Vertex::Ray(i + 1));
                out.extend((0..m).map(Vertex::Apex));
            }
            (GraphFamily::DominatedRay { .. }, Vertex::Apex(_)) => {
                out.extend((0..=max_level).map(Vertex::Ray));
            }
            (GraphFamily::Complete, Vertex::Complete(i)) => {
                out.extend((0..=max_level).filter(|&j| j != i).map(Vertex::Complete));
            }
            _ => {}
        }
        out.retain(|&w| self.level(w) <= max_level);
        out.sort();
        out
    }

    /// Whether `v` has a neighbor of level greater than `l`.
    pub fn has_neighbor_beyond(&self, v: Vertex, l: u32) -> bool {
        match (*self, v) {
            (GraphFamily::DominatedRay { .. }, Vertex::Apex(_)) => true,
            (GraphFamily::Complete, _) => true,
            _ => self.level(v) >= l,
        }
    }

    /// The i-th vertex of the fixed witness ray of the end.
    pub fn canonical_ray(&self, i: u32) -> Vertex {
        match self {
            GraphFamily::Ray | GraphFamily::DominatedRay { .. } => Vertex::Ray(i),
            GraphFamily::Ladder { .. } => Vertex::Cell { row: 0, col: i },
            GraphFamily::Grid => Vertex::Grid { x: i, y: 0 },
            GraphFamily::CliqueRay => Vertex::Clique {
                block: i + 1,
                pos: 0,
            },
            GraphFamily::Complete => Vertex::Complete(i),
        }
    }

    /// Next vertex of the declared continuation of a ray that has reached
    /// `v` at truncation level `window`.
    ///
    /// Continuations from distinct frontier vertices are disjoint, leave the
    /// window immediately and never return. Apexes have no continuation.
    pub fn tail_next(&self, v: Vertex, window: u32) -> Option<Vertex> {
        match v {
            Vertex::Ray(i) => Some(Vertex::Ray(i + 1)),
            Vertex::Apex(_) => None,
            Vertex::Cell { row, col } => Some(Vertex::Cell { row, col: col + 1 }),
            Vertex::Grid { x, y } if x >= y => Some(Vertex::Grid { x: x + 1, y }),
            Vertex::Grid { x, y } => Some(Vertex::Grid { x, y: y + 1 }),
            Vertex::Clique { block, pos } => Some(Vertex::Clique {
                block: block + 1,
                pos,
            }),
            Vertex::Complete(i) => Some(Vertex::Complete(i + window + 1)),
        }
    }

    /// Whether every vertex of level greater than `l` has finite degree.
    pub fn locally_finite_beyond(&self, _l: u32) -> bool {
        !matches!(self, GraphFamily::Complete)
    }

    /// Whether the family carries an infinite stream of structurally
    /// equivalent candidate vertices along its canonical ray, so that a
    /// dominating vertex there implies infinitely many.
    pub fn homogeneous_along_ray(&self) -> bool {
        matches!(self, GraphFamily::Complete)
    }

    /// Analytic upper bound on the number of disjoint rays of the end after
    /// deleting its dominating vertices.
    ///
    /// A ladder's columns each have `m` vertices, so every set of disjoint
    /// rays crosses a column in at most `m` rows. Deleting the apexes of a
    /// dominated ray leaves a ray.
    pub fn width_certificate(&self) -> Option<usize> {
        match self {
            GraphFamily::Ray | GraphFamily::DominatedRay { .. } => Some(1),
            GraphFamily::Ladder { m } => Some(*m as usize),
            _ => None,
        }
    }

    /// Ground-truth end invariants, for tests.
    pub fn annotations(&self) -> Annotations {
        use Declared::*;
        let (degree, domination) = match *self {
            GraphFamily::Ray => (Finite(1), Finite(0)),
            GraphFamily::Ladder { m } => (Finite(m as usize), Finite(0)),
            GraphFamily::Grid => (Infinite, Finite(0)),
            GraphFamily::CliqueRay => (Infinite, Finite(0)),
            GraphFamily::DominatedRay { m } => (Finite(1), Finite(m as usize)),
            GraphFamily::Complete => (Infinite, Infinite),
        };
        Annotations { degree, domination }
    }
}

/// Text description of a family: a `family=<name>` line plus
/// `param.<key>=<int>` lines. Blank lines and `#` comments are ignored.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct FamilySpec {
    pub name: String,
    pub params: BTreeMap<String, i64>,
}

impl FamilySpec {
    pub fn build(&self) -> Result<GraphFamily> {
        GraphFamily::make(&self.name, &self.params)
    }

    pub fn render(&self) -> String {
        let mut out = format!("family={}\n", self.name);
        for (k, v) in &self.params {
            out.push_str(&format!("param.{k}={v}\n"));
        }
        out
    }
}

impl FromStr for FamilySpec {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let mut spec = FamilySpec::default();
        let mut seen_family = false;
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("line {}: expected key=value", lineno + 1)))?;
            let (key, value) = (key.trim(), value.trim());
            if key == "family" {
                if seen_family {
                    return Err(Error::Parse(format!("line {}: duplicate family", lineno + 1)));
                }
                seen_family = true;
                spec.name = value.to_string();
            } else if let Some(param) = key.strip_prefix("param.") {
                let parsed: i64 = value.parse().map_err(|_| {
                    Error::Parse(format!("line {}: `{value}` is not an integer", lineno + 1))
                })?;
                if spec.params.insert(param.to_string(), parsed).is_some() {
                    return Err(Error::Parse(format!("line {}: duplicate param.{param}", lineno + 1)));
                }
            } else {
                return Err(Error::Parse(format!("line {}: unknown key `{key}`", lineno + 1)));
            }
        }
        if !seen_family {
            return Err(Error::Parse("missing family= line".into()));
        }
        Ok(spec)
    }
}

impl From<&GraphFamily> for FamilySpec {
    fn from(g: &GraphFamily) -> Self {
        FamilySpec {
            name: g.name().to_string(),
            params: g.params(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fam(name: &str, m: Option<i64>) -> GraphFamily {
        let mut params = BTreeMap::new();
        if let Some(m) = m {
            params.insert("m".to_string(), m);
        }
        GraphFamily::make(name, &params).unwrap()
    }

    fn all_families() -> Vec<GraphFamily> {
        vec![
            fam("ray", None),
            fam("ladder", Some(3)),
            fam("grid", None),
            fam("clique_ray", None),
            fam("dominated_ray", Some(2)),
            fam("complete", None),
        ]
    }

    #[test]
    fn ray_neighbors() {
        let g = fam("ray", None);
        assert_eq!(g.neighbors(Vertex::Ray(3), 10), vec![Vertex::Ray(2), Vertex::Ray(4)]);
        assert_eq!(g.neighbors(Vertex::Ray(0), 10), vec![Vertex::Ray(1)]);
    }

    #[test]
    fn one_row_ladder_is_a_ray() {
        let ladder = fam("ladder", Some(1));
        let ray = fam("ray", None);
        let to_ray = |v: Vertex| match v {
            Vertex::Cell { col, .. } => Vertex::Ray(col),
            other => other,
        };
        for l in 0..20 {
            assert_eq!(ladder.vertices_at_level(l).len(), 1);
            let lv = ladder.vertices_at_level(l)[0];
            let mapped: Vec<Vertex> = ladder.neighbors(lv, 30).into_iter().map(to_ray).collect();
            assert_eq!(mapped, ray.neighbors(Vertex::Ray(l), 30));
        }
    }

    #[test]
    fn clique_ray_blocks() {
        let g = fam("clique_ray", None);
        for n in 1..8u32 {
            let block = g.vertices_at_level(n - 1);
            assert_eq!(block.len(), n as usize);
            let v = block[0];
            let nbrs = g.neighbors(v, 100);
            let expected = n.saturating_sub(1) + (n - 1) + (n + 1);
            assert_eq!(nbrs.len() as u32, expected, "block {n}");
        }
    }

    #[test]
    fn unknown_and_invalid() {
        assert_eq!(
            GraphFamily::make("torus", &BTreeMap::new()),
            Err(Error::UnknownFamily("torus".into()))
        );
        let mut p = BTreeMap::new();
        p.insert("m".to_string(), 0);
        assert!(matches!(
            GraphFamily::make("ladder", &p),
            Err(Error::InvalidParam { .. })
        ));
        assert!(matches!(
            GraphFamily::make("dominated_ray", &BTreeMap::new()),
            Err(Error::InvalidParam { .. })
        ));
        assert!(matches!(
            GraphFamily::make("ray", &p),
            Err(Error::InvalidParam { .. })
        ));
    }

    #[test]
    fn adjacency_is_symmetric() {
        for g in all_families() {
            for v in g.ball(6) {
                for w in g.neighbors(v, 8) {
                    assert!(g.neighbors(w, 8).contains(&v), "{} {v} {w}", g.label());
                    assert_ne!(v, w);
                }
            }
        }
    }

    #[test]
    fn canonical_ray_is_a_ray() {
        for g in all_families() {
            let mut last_level = 0;
            for i in 0..10_000u32 {
                let (a, b) = (g.canonical_ray(i), g.canonical_ray(i + 1));
                assert!(g.contains(a));
                assert!(g.neighbors(a, g.level(b)).contains(&b), "{}", g.label());
                last_level = g.level(b);
            }
            assert!(last_level >= 10_000);
        }
    }

    #[test]
    fn level_shells_partition_the_ball() {
        for g in all_families() {
            for l in 0..8 {
                for v in g.vertices_at_level(l) {
                    assert_eq!(g.level(v), l);
                    assert!(g.contains(v));
                }
            }
        }
    }

    #[test]
    fn tails_leave_the_window_disjointly() {
        for g in all_families() {
            let window = 6;
            let frontier: Vec<Vertex> = g
                .ball(window)
                .into_iter()
                .filter(|&v| g.has_neighbor_beyond(v, window) && !matches!(v, Vertex::Apex(_)))
                .collect();
            let mut seen = std::collections::HashSet::new();
            for &start in &frontier {
                let mut v = start;
                for _ in 0..30 {
                    let next = g.tail_next(v, window).unwrap();
                    assert!(g.neighbors(v, g.level(next)).contains(&next));
                    assert!(g.level(next) > window);
                    assert!(seen.insert(next), "{} tails collide at {next}", g.label());
                    v = next;
                }
            }
        }
    }

    #[test]
    fn spec_text_round_trip() {
        let text = "# fixture\nfamily=ladder\nparam.m=3\n";
        let spec: FamilySpec = text.parse().unwrap();
        assert_eq!(spec.build().unwrap(), GraphFamily::Ladder { m: 3 });
        assert_eq!(spec.render().parse::<FamilySpec>().unwrap(), spec);
        assert!("param.m=3".parse::<FamilySpec>().is_err());
        assert!("family=ray\nparam.m=x".parse::<FamilySpec>().is_err());
        assert!("family=ray\nfoo=1".parse::<FamilySpec>().is_err());
    }
}
