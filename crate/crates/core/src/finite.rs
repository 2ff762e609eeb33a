//! Brute-force oracles on small finite graphs, used to cross-check the flow
//! and enumeration code.

use std::collections::{BTreeSet, HashSet};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::enumerate::{side_assignments, subsets_up_to, Vote};
use crate::error::{Error, Result};
use crate::flow::{min_vertex_cut, FlowValue};
use crate::truncation::Truncation;

/// Default cap for exhaustive separation enumeration.
pub const SEPARATION_CAP: usize = 10;
/// Cap for exhaustive min-cut search.
pub const BRUTE_CUT_CAP: usize = 14;

/// A simple undirected graph on `0..n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FiniteGraph {
    adj: Vec<BTreeSet<usize>>,
}

impl FiniteGraph {
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut adj = vec![BTreeSet::new(); n];
        for &(u, v) in edges {
            if u == v || u >= n || v >= n {
                return Err(Error::Parse(format!("bad edge {u}-{v} on {n} vertices")));
            }
            adj[u].insert(v);
            adj[v].insert(u);
        }
        Ok(FiniteGraph { adj })
    }

    pub fn complete(n: usize) -> Self {
        let edges: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        Self::new(n, &edges).expect("valid edges")
    }

    pub fn path(n: usize) -> Self {
        let edges: Vec<(usize, usize)> = (1..n).map(|v| (v - 1, v)).collect();
        Self::new(n, &edges).expect("valid edges")
    }

    /// Erdős–Rényi graph with edge probability `p`.
    pub fn random<R: Rng>(n: usize, p: f64, rng: &mut R) -> Self {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(p) {
                    edges.push((u, v));
                }
            }
        }
        Self::new(n, &edges).expect("valid edges")
    }

    /// The truncation as a finite graph; the terminal is the last vertex.
    pub fn from_truncation(t: &Truncation) -> Self {
        let n = t.len() + 1;
        let adj = t
            .adjacency_with_terminal()
            .into_iter()
            .map(|l| l.into_iter().collect())
            .collect();
        debug_assert_eq!(n, t.len() + 1);
        FiniteGraph { adj }
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn neighbors(&self, v: usize) -> &BTreeSet<usize> {
        &self.adj[v]
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.n())
            .flat_map(|u| self.adj[u].iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
            .collect()
    }

    fn adjacency(&self) -> Vec<Vec<usize>> {
        self.adj.iter().map(|s| s.iter().copied().collect()).collect()
    }

    /// Components of `G - removed`, each sorted, by smallest vertex.
    pub fn components_avoiding(&self, removed: &BTreeSet<usize>) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n()];
        let mut out = Vec::new();
        for s in 0..self.n() {
            if seen[s] || removed.contains(&s) {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut stack = vec![s];
            while let Some(u) = stack.pop() {
                for &w in &self.adj[u] {
                    if !seen[w] && !removed.contains(&w) {
                        seen[w] = true;
                        comp.push(w);
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }
}

/// An ordered pair `(A, B)` with `A ∪ B = V` and no edge between `A - B`
/// and `B - A`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct FiniteSeparation {
    pub a: BTreeSet<usize>,
    pub b: BTreeSet<usize>,
}

impl FiniteSeparation {
    pub fn order(&self) -> usize {
        self.a.intersection(&self.b).count()
    }

    pub fn flipped(&self) -> Self {
        FiniteSeparation {
            a: self.b.clone(),
            b: self.a.clone(),
        }
    }

    pub fn vote(&self, x: &BTreeSet<usize>) -> Vote {
        Vote::count(x.iter().copied(), |v| self.a.contains(v), |v| self.b.contains(v))
    }
}

fn check_cap(n: usize, cap: usize) -> Result<()> {
    if n > cap {
        return Err(Error::CapExceeded { n, cap });
    }
    Ok(())
}

/// All oriented separations of order `< k`, from separator subsets and
/// component assignments.
pub fn all_separations(g: &FiniteGraph, k: usize) -> Result<Vec<FiniteSeparation>> {
    check_cap(g.n(), SEPARATION_CAP)?;
    let mut out = BTreeSet::new();
    if k == 0 {
        return Ok(Vec::new());
    }
    let vertices: Vec<usize> = (0..g.n()).collect();
    subsets_up_to(&vertices, k - 1, |s| {
        let sep: BTreeSet<usize> = s.iter().copied().collect();
        let comps = g.components_avoiding(&sep);
        side_assignments(&comps, |chosen, rest| {
            out.insert(FiniteSeparation {
                a: sep.union(&chosen).copied().collect(),
                b: sep.union(&rest).copied().collect(),
            });
            Ok(())
        })
    })?;
    Ok(out.into_iter().collect())
}

/// All oriented separations of order `< k`, by labelling every vertex as
/// `A`-only, separator or `B`-only.
pub fn all_separations_direct(g: &FiniteGraph, k: usize) -> Result<Vec<FiniteSeparation>> {
    check_cap(g.n(), SEPARATION_CAP)?;
    let n = g.n();
    let mut out = BTreeSet::new();
    let mut label = vec![0u8; n];
    for code in 0..3usize.pow(n as u32) {
        let mut c = code;
        for l in label.iter_mut() {
            *l = (c % 3) as u8;
            c /= 3;
        }
        if label.iter().filter(|&&l| l == 1).count() >= k {
            continue;
        }
        if g.edges().iter().any(|&(u, v)| label[u] ^ label[v] == 2) {
            continue;
        }
        out.insert(FiniteSeparation {
            a: (0..n).filter(|&v| label[v] <= 1).collect(),
            b: (0..n).filter(|&v| label[v] >= 1).collect(),
        });
    }
    Ok(out.into_iter().collect())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FiniteCut {
    pub value: FlowValue,
    pub cut: BTreeSet<usize>,
}

/// Smallest set avoiding `forbidden ∪ {t}` whose removal leaves no path from
/// `x` to `t`, by trying all subsets in order of size.
pub fn brute_min_vertex_cut(
    g: &FiniteGraph,
    x: &BTreeSet<usize>,
    t: usize,
    forbidden: &BTreeSet<usize>,
) -> Result<FiniteCut> {
    check_cap(g.n(), BRUTE_CUT_CAP)?;
    let candidates: Vec<usize> = (0..g.n()).filter(|v| *v != t && !forbidden.contains(v)).collect();
    let separated = |cut: &BTreeSet<usize>| {
        if x.iter().any(|v| !cut.contains(v) && *v == t) {
            return false;
        }
        g.components_avoiding(cut)
            .iter()
            .all(|c| !(c.contains(&t) && c.iter().any(|v| x.contains(v))))
    };
    let mut found = None;
    subsets_up_to(&candidates, candidates.len(), |s| {
        let cut: BTreeSet<usize> = s.iter().copied().collect();
        if separated(&cut) {
            found = Some(cut);
            return Err(Error::Inconclusive(String::new()));
        }
        Ok(())
    })
    .ok();
    Ok(match found {
        Some(cut) => FiniteCut {
            value: FlowValue::Finite(cut.len()),
            cut,
        },
        None => FiniteCut {
            value: FlowValue::Infinite,
            cut: BTreeSet::new(),
        },
    })
}

/// Same problem as [`brute_min_vertex_cut`], solved by max-flow.
pub fn flow_min_vertex_cut(
    g: &FiniteGraph,
    x: &BTreeSet<usize>,
    t: usize,
    forbidden: &BTreeSet<usize>,
) -> FiniteCut {
    let mut unc = vec![false; g.n()];
    for &v in forbidden {
        unc[v] = true;
    }
    let src: Vec<usize> = x.iter().copied().collect();
    let r = min_vertex_cut(&g.adjacency(), &src, &[t], &unc);
    FiniteCut {
        value: r.value,
        cut: r.cut.into_iter().collect(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AxiomCheck {
    pub ok: bool,
    /// Indices of three (not necessarily distinct) members whose small sides
    /// cover every vertex and edge.
    pub violating_triple: Option<[usize; 3]>,
}

/// Checks that no three members of `orientation` have small sides covering
/// the graph, vertices and edges alike.
pub fn check_tangle_axioms(g: &FiniteGraph, orientation: &[FiniteSeparation]) -> Result<AxiomCheck> {
    let members: HashSet<&FiniteSeparation> = orientation.iter().collect();
    if orientation.iter().any(|s| members.contains(&s.flipped())) {
        return Err(Error::NotAnOrientation);
    }
    let edges = g.edges();
    let m = orientation.len();
    for i in 0..m {
        for j in i..m {
            for l in j..m {
                let sides = [&orientation[i].a, &orientation[j].a, &orientation[l].a];
                let vertices = (0..g.n()).all(|v| sides.iter().any(|a| a.contains(&v)));
                let covered = vertices
                    && edges
                        .iter()
                        .all(|(u, v)| sides.iter().any(|a| a.contains(u) && a.contains(v)));
                if covered {
                    return Ok(AxiomCheck {
                        ok: false,
                        violating_triple: Some([i, j, l]),
                    });
                }
            }
        }
    }
    Ok(AxiomCheck {
        ok: true,
        violating_triple: None,
    })
}

/// Orients each separation toward the strict majority of `x`; `None` if some
/// separation splits `x` evenly.
pub fn majority_orientation(
    seps: &[FiniteSeparation],
    x: &BTreeSet<usize>,
) -> Option<Vec<FiniteSeparation>> {
    let mut out = BTreeSet::new();
    for s in seps {
        let v = s.vote(x);
        if v.decides_b() {
            out.insert(s.clone());
        } else if v.a() > v.b() {
            out.insert(s.flipped());
        } else {
            return None;
        }
    }
    Some(out.into_iter().collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub struct Tally {
    pub passed: usize,
    pub failed: usize,
}

impl Tally {
    fn record(&mut self, ok: bool) {
        if ok {
            self.passed += 1;
        } else {
            self.failed += 1;
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SelfTest {
    pub seed: u64,
    pub graphs: usize,
    pub flow_vs_brute: Tally,
    pub separation_generation: Tally,
    pub majority_tangles: Tally,
    pub triangle_separations: usize,
}

impl SelfTest {
    pub fn ok(&self) -> bool {
        self.flow_vs_brute.failed == 0
            && self.separation_generation.failed == 0
            && self.majority_tangles.failed == 0
            && self.triangle_separations == 8
    }
}

/// Runs the oracle comparisons on `graphs` random graphs with at most 10
/// vertices.
pub fn oracle_selftest(seed: u64, graphs: usize) -> Result<SelfTest> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = SelfTest {
        seed,
        graphs,
        flow_vs_brute: Tally::default(),
        separation_generation: Tally::default(),
        majority_tangles: Tally::default(),
        triangle_separations: all_separations(&FiniteGraph::complete(3), 2)?.len(),
    };
    for _ in 0..graphs {
        let n = rng.gen_range(2..=10);
        let p = rng.gen_range(0.15..0.7);
        let g = FiniteGraph::random(n, p, &mut rng);
        let t = rng.gen_range(0..n);
        let x: BTreeSet<usize> = (0..n).filter(|&v| v != t && rng.gen_bool(0.3)).collect();
        let x = if x.is_empty() { [(t + 1) % n].into() } else { x };
        let forbidden: BTreeSet<usize> = x.iter().copied().filter(|_| rng.gen_bool(0.5)).collect();
        let brute = brute_min_vertex_cut(&g, &x, t, &forbidden)?;
        let flow = flow_min_vertex_cut(&g, &x, t, &forbidden);
        report.flow_vs_brute.record(brute.value == flow.value);

        if n <= 7 {
            let k = rng.gen_range(1..=4);
            report
                .separation_generation
                .record(all_separations(&g, k)? == all_separations_direct(&g, k)?);
        }
        // K_n oriented toward its vertex set is a tangle of order < n/3 + 1
        let kn = FiniteGraph::complete(n.min(7));
        let order = kn.n() / 3 + 1;
        let seps: Vec<FiniteSeparation> = all_separations(&kn, order)?
            .into_iter()
            .filter(|s| s.a.len() <= s.b.len())
            .collect();
        let all: BTreeSet<usize> = (0..kn.n()).collect();
        let ok = match majority_orientation(&seps, &all) {
            Some(o) => check_tangle_axioms(&kn, &o).map(|c| c.ok).unwrap_or(false),
            None => false,
        };
        report.majority_tangles.record(ok);
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(vs: &[usize]) -> BTreeSet<usize> {
        vs.iter().copied().collect()
    }

    #[test]
    fn triangle_has_eight() {
        let k3 = FiniteGraph::complete(3);
        let s = all_separations(&k3, 2).unwrap();
        assert_eq!(s.len(), 8);
        assert_eq!(s, all_separations_direct(&k3, 2).unwrap());
    }

    #[test]
    fn small_cases() {
        let one = FiniteGraph::new(1, &[]).unwrap();
        assert_eq!(all_separations(&one, 1).unwrap().len(), 2);
        let two = FiniteGraph::new(2, &[]).unwrap();
        let s = all_separations(&two, 1).unwrap();
        assert!(s.contains(&FiniteSeparation { a: set(&[0]), b: set(&[1]) }));
        assert_eq!(s, all_separations_direct(&two, 1).unwrap());
        assert!(matches!(
            all_separations(&FiniteGraph::path(11), 2),
            Err(Error::CapExceeded { n: 11, cap: 10 })
        ));
    }

    #[test]
    fn brute_cuts() {
        let p = FiniteGraph::path(3);
        let c = brute_min_vertex_cut(&p, &set(&[0]), 2, &set(&[0, 2])).unwrap();
        assert_eq!((c.value, c.cut), (FlowValue::Finite(1), set(&[1])));

        let g = FiniteGraph::new(4, &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]).unwrap();
        let c = brute_min_vertex_cut(&g, &set(&[0]), 3, &set(&[0, 3])).unwrap();
        assert_eq!(c.value, FlowValue::Finite(2));

        let g = FiniteGraph::new(3, &[(0, 1)]).unwrap();
        let c = brute_min_vertex_cut(&g, &set(&[0]), 2, &set(&[0])).unwrap();
        assert_eq!(c.value, FlowValue::Finite(0));

        let g = FiniteGraph::path(2);
        let c = brute_min_vertex_cut(&g, &set(&[0]), 1, &set(&[0])).unwrap();
        assert_eq!(c.value, FlowValue::Infinite);
        assert_eq!(flow_min_vertex_cut(&g, &set(&[0]), 1, &set(&[0])).value, FlowValue::Infinite);
    }

    #[test]
    fn axioms() {
        let k3 = FiniteGraph::complete(3);
        let seps = all_separations(&k3, 2).unwrap();
        let toward_v: Vec<FiniteSeparation> = seps.iter().filter(|s| s.b.len() == 3).cloned().collect();
        assert!(check_tangle_axioms(&k3, &toward_v).unwrap().ok);

        let whole = FiniteSeparation { a: set(&[0, 1, 2]), b: BTreeSet::new() };
        let c = check_tangle_axioms(&k3, std::slice::from_ref(&whole)).unwrap();
        assert_eq!(c.violating_triple, Some([0, 0, 0]));

        let p = FiniteGraph::path(3);
        let s = FiniteSeparation { a: set(&[0, 1]), b: set(&[1, 2]) };
        assert_eq!(
            check_tangle_axioms(&p, &[s.clone(), s.flipped()]),
            Err(Error::NotAnOrientation)
        );
    }

    #[test]
    fn edges_count_for_coverage() {
        // small sides {0,1}, {1,2}, {0,2} cover all vertices and all edges of K3
        let k3 = FiniteGraph::complete(3);
        let o: Vec<FiniteSeparation> = [[0, 1], [1, 2], [0, 2]]
            .iter()
            .map(|p| FiniteSeparation { a: set(p), b: (0..3).collect() })
            .collect();
        assert!(!check_tangle_axioms(&k3, &o).unwrap().ok);
        // on the 4-cycle {0,1},{2,3} cover vertices but miss edges 1-2 and 3-0
        let c4 = FiniteGraph::new(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let o = vec![
            FiniteSeparation { a: set(&[0, 1]), b: (0..4).collect() },
            FiniteSeparation { a: set(&[2, 3]), b: (0..4).collect() },
        ];
        assert!(check_tangle_axioms(&c4, &o).unwrap().ok);
    }

    #[test]
    fn truncation_flow_matches_brute() {
        use crate::family::{GraphFamily, Vertex};
        let g = GraphFamily::DominatedRay { m: 2 };
        let t = Truncation::new(&g, 5, 100).unwrap();
        let fg = FiniteGraph::from_truncation(&t);
        let x = t.index_of(Vertex::Ray(0)).unwrap();
        let brute = brute_min_vertex_cut(&fg, &set(&[x]), t.terminal(), &set(&[x])).unwrap();
        assert_eq!(brute.value, FlowValue::Finite(3));
    }

    #[test]
    fn selftest_passes() {
        let r = oracle_selftest(7, 40).unwrap();
        assert!(r.ok(), "{r:?}");
    }
}
