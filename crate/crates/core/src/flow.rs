//! Unit vertex-capacity max-flow on undirected index graphs.
//!
//! Each vertex `v` is split into `in(v) -> out(v)` carrying capacity 1, or an
//! effectively infinite capacity when `v` may not be cut. Graph edges become
//! infinite arcs `out(u) -> in(v)` in both directions. The result is the
//! maximum number of vertex-disjoint source-to-sink paths together with a
//! minimum vertex cut read off the final residual graph.

use std::collections::VecDeque;

use serde::Serialize;

/// A flow or cut value; `Infinite` when an uncuttable source reaches an
/// uncuttable sink. Serializes as a number or the string `"inf"`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FlowValue {
    Finite(usize),
    Infinite,
}

impl FlowValue {
    pub fn finite(self) -> Option<usize> {
        match self {
            FlowValue::Finite(v) => Some(v),
            FlowValue::Infinite => None,
        }
    }

    pub fn is_infinite(self) -> bool {
        matches!(self, FlowValue::Infinite)
    }
}

impl Serialize for FlowValue {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            FlowValue::Finite(v) => serializer.serialize_u64(*v as u64),
            FlowValue::Infinite => serializer.serialize_str("inf"),
        }
    }
}

impl std::fmt::Display for FlowValue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            FlowValue::Finite(v) => write!(f, "{v}"),
            FlowValue::Infinite => write!(f, "inf"),
        }
    }
}

/// Min-cut certificate on an index graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndexCut {
    pub value: FlowValue,
    /// Minimum vertex cut (sorted); empty when the value is infinite.
    pub cut: Vec<usize>,
    /// Vertex-disjoint source-to-sink paths, each starting at a source and
    /// ending at a sink; empty when the value is infinite.
    pub paths: Vec<Vec<usize>>,
}

#[derive(Debug, Clone)]
struct Arc {
    to: usize,
    cap: i64,
    rev: usize,
}

struct Dinic {
    arcs: Vec<Vec<Arc>>,
    orig: Vec<Vec<i64>>,
    level: Vec<i32>,
    next: Vec<usize>,
}

impl Dinic {
    fn new(n: usize) -> Self {
        Dinic {
            arcs: vec![Vec::new(); n],
            orig: vec![Vec::new(); n],
            level: vec![-1; n],
            next: vec![0; n],
        }
    }

    fn add_arc(&mut self, from: usize, to: usize, cap: i64) {
        let rf = self.arcs[to].len();
        let rt = self.arcs[from].len();
        self.arcs[from].push(Arc { to, cap, rev: rf });
        self.arcs[to].push(Arc { to: from, cap: 0, rev: rt });
        self.orig[from].push(cap);
        self.orig[to].push(0);
    }

    fn bfs(&mut self, s: usize, t: usize) -> bool {
        self.level.fill(-1);
        self.level[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for a in &self.arcs[u] {
                if a.cap > 0 && self.level[a.to] < 0 {
                    self.level[a.to] = self.level[u] + 1;
                    queue.push_back(a.to);
                }
            }
        }
        self.level[t] >= 0
    }

    fn dfs(&mut self, u: usize, t: usize, pushed: i64) -> i64 {
        if u == t {
            return pushed;
        }
        while self.next[u] < self.arcs[u].len() {
            let i = self.next[u];
            let Arc { to, cap, rev } = self.arcs[u][i];
            if cap > 0 && self.level[to] == self.level[u] + 1 {
                let got = self.dfs(to, t, pushed.min(cap));
                if got > 0 {
                    self.arcs[u][i].cap -= got;
                    self.arcs[to][rev].cap += got;
                    return got;
                }
            }
            self.next[u] += 1;
        }
        0
    }

    fn max_flow(&mut self, s: usize, t: usize, limit: i64) -> i64 {
        let mut total = 0;
        while total < limit && self.bfs(s, t) {
            self.next.fill(0);
            loop {
                let f = self.dfs(s, t, limit - total);
                if f == 0 {
                    break;
                }
                total += f;
                if total >= limit {
                    break;
                }
            }
        }
        total
    }

    fn residual_reach(&self, s: usize) -> Vec<bool> {
        let mut seen = vec![false; self.arcs.len()];
        seen[s] = true;
        let mut stack = vec![s];
        while let Some(u) = stack.pop() {
            for a in &self.arcs[u] {
                if a.cap > 0 && !seen[a.to] {
                    seen[a.to] = true;
                    stack.push(a.to);
                }
            }
        }
        seen
    }
}

/// Maximum number of vertex-disjoint paths from `sources` to `sinks` in the
/// undirected graph `adj`, with a dual minimum vertex cut.
///
/// Vertices flagged in `uncuttable` (and every sink) have unbounded capacity
/// and never appear in the cut. A source may itself be cut unless flagged.
/// Arcs are explored in adjacency order, so the output is deterministic.
pub fn min_vertex_cut(
    adj: &[Vec<usize>],
    sources: &[usize],
    sinks: &[usize],
    uncuttable: &[bool],
) -> IndexCut {
    let n = adj.len();
    let inf = n as i64 + 1;
    let (s, t) = (2 * n, 2 * n + 1);
    let mut is_sink = vec![false; n];
    for &v in sinks {
        is_sink[v] = true;
    }
    let mut net = Dinic::new(2 * n + 2);
    for v in 0..n {
        let cap = if uncuttable[v] || is_sink[v] { inf } else { 1 };
        net.add_arc(2 * v, 2 * v + 1, cap);
    }
    for (u, list) in adj.iter().enumerate() {
        for &v in list {
            net.add_arc(2 * u + 1, 2 * v, inf);
        }
    }
    let mut sorted_sources = sources.to_vec();
    sorted_sources.sort_unstable();
    sorted_sources.dedup();
    for &x in &sorted_sources {
        net.add_arc(s, 2 * x, inf);
    }
    for (v, _) in is_sink.iter().enumerate().filter(|(_, &b)| b) {
        net.add_arc(2 * v + 1, t, inf);
    }

    let flow = net.max_flow(s, t, inf);
    if flow >= inf {
        return IndexCut {
            value: FlowValue::Infinite,
            cut: Vec::new(),
            paths: Vec::new(),
        };
    }

    let reach = net.residual_reach(s);
    let cut: Vec<usize> = (0..n)
        .filter(|&v| reach[2 * v] && !reach[2 * v + 1])
        .collect();
    let paths = decompose(&net, s, t, flow as usize);
    IndexCut {
        value: FlowValue::Finite(flow as usize),
        cut,
        paths,
    }
}

/// Peels `count` unit paths off the flow, cancelling any circulation met on
/// the way.
fn decompose(net: &Dinic, s: usize, t: usize, count: usize) -> Vec<Vec<usize>> {
    let mut flow: Vec<Vec<i64>> = net
        .arcs
        .iter()
        .zip(&net.orig)
        .map(|(list, orig)| list.iter().zip(orig).map(|(a, &c)| (c - a.cap).max(0)).collect())
        .collect();
    let mut paths = Vec::with_capacity(count);
    while paths.len() < count {
        let mut nodes = vec![s];
        let mut used: Vec<(usize, usize)> = Vec::new();
        let mut pos = vec![usize::MAX; net.arcs.len()];
        pos[s] = 0;
        let mut u = s;
        while u != t {
            let i = (0..net.arcs[u].len())
                .find(|&i| flow[u][i] > 0)
                .expect("flow conservation");
            let to = net.arcs[u][i].to;
            if pos[to] != usize::MAX {
                // circulation: cancel it and restart the walk at `to`
                let start = pos[to];
                for &(a, b) in &used[start..] {
                    flow[a][b] -= 1;
                }
                flow[u][i] -= 1;
                for &node in &nodes[start + 1..] {
                    pos[node] = usize::MAX;
                }
                nodes.truncate(start + 1);
                used.truncate(start);
                u = to;
                continue;
            }
            used.push((u, i));
            pos[to] = nodes.len();
            nodes.push(to);
            u = to;
        }
        for &(a, b) in &used {
            flow[a][b] -= 1;
        }
        let mut path: Vec<usize> = Vec::new();
        for &node in &nodes[1..nodes.len() - 1] {
            let v = node / 2;
            if path.last() != Some(&v) {
                path.push(v);
            }
        }
        paths.push(path);
    }
    paths
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path_graph(n: usize) -> Vec<Vec<usize>> {
        (0..n)
            .map(|i| {
                let mut l = Vec::new();
                if i > 0 {
                    l.push(i - 1);
                }
                if i + 1 < n {
                    l.push(i + 1);
                }
                l
            })
            .collect()
    }

    #[test]
    fn path_has_unit_cut() {
        let adj = path_graph(3);
        let mut unc = vec![false; 3];
        unc[0] = true;
        let r = min_vertex_cut(&adj, &[0], &[2], &unc);
        assert_eq!(r.value, FlowValue::Finite(1));
        assert_eq!(r.cut, vec![1]);
        assert_eq!(r.paths, vec![vec![0, 1, 2]]);
    }

    #[test]
    fn cuttable_source_is_cut() {
        let adj = path_graph(3);
        let r = min_vertex_cut(&adj, &[0], &[2], &[false; 3]);
        assert_eq!(r.value, FlowValue::Finite(1));
        assert_eq!(r.cut, vec![0]);
    }

    #[test]
    fn adjacent_uncuttables_are_infinite() {
        let adj = path_graph(2);
        let r = min_vertex_cut(&adj, &[0], &[1], &[true, false]);
        assert_eq!(r.value, FlowValue::Infinite);
    }

    #[test]
    fn disconnected_is_zero() {
        let adj = vec![vec![], vec![]];
        let r = min_vertex_cut(&adj, &[0], &[1], &[true, false]);
        assert_eq!(r.value, FlowValue::Finite(0));
        assert!(r.cut.is_empty() && r.paths.is_empty());
    }

    #[test]
    fn k4_minus_edge() {
        // vertices 0..4, all edges except 0-3
        let adj = vec![vec![1, 2], vec![0, 2, 3], vec![0, 1, 3], vec![1, 2]];
        let r = min_vertex_cut(&adj, &[0], &[3], &[true, false, false, false]);
        assert_eq!(r.value, FlowValue::Finite(2));
        assert_eq!(r.cut, vec![1, 2]);
        assert_eq!(r.paths.len(), 2);
    }

    #[test]
    fn paths_are_disjoint_and_valid() {
        // 3x3 grid, left column to right column
        let idx = |x: usize, y: usize| 3 * y + x;
        let mut adj = vec![Vec::new(); 9];
        for y in 0..3 {
            for x in 0..3 {
                if x + 1 < 3 {
                    adj[idx(x, y)].push(idx(x + 1, y));
                    adj[idx(x + 1, y)].push(idx(x, y));
                }
                if y + 1 < 3 {
                    adj[idx(x, y)].push(idx(x, y + 1));
                    adj[idx(x, y + 1)].push(idx(x, y));
                }
            }
        }
        let src = [idx(0, 0), idx(0, 1), idx(0, 2)];
        let snk = [idx(2, 0), idx(2, 1), idx(2, 2)];
        let r = min_vertex_cut(&adj, &src, &snk, &[false; 9]);
        assert_eq!(r.value, FlowValue::Finite(3));
        assert_eq!(r.cut.len(), 3);
        let mut seen = std::collections::HashSet::new();
        for p in &r.paths {
            assert!(src.contains(&p[0]));
            assert!(snk.contains(p.last().unwrap()));
            for w in p.windows(2) {
                assert!(adj[w[0]].contains(&w[1]));
            }
            for &v in p {
                assert!(seen.insert(v));
            }
        }
    }
}
