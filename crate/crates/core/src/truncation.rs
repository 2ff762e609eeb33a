//! Finite truncations of a family, with a virtual terminal standing in for
//! everything beyond the window.

use std::collections::{BTreeSet, HashMap};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::family::{GraphFamily, Vertex};

/// The subgraph induced by all vertices of level at most `level`, minus an
/// optional deleted set, as an index graph.
///
/// Index `len()` is the terminal; it is adjacent to every frontier vertex and
/// is not part of `adj`.
#[derive(Debug, Clone)]
pub struct Truncation {
    family: GraphFamily,
    level: u32,
    vertices: Vec<Vertex>,
    index: HashMap<Vertex, usize>,
    adj: Vec<Vec<usize>>,
    frontier: Vec<bool>,
    deleted: BTreeSet<Vertex>,
}

impl Truncation {
    pub fn new(g: &GraphFamily, level: u32, cap: usize) -> Result<Self> {
        Self::without(g, level, &BTreeSet::new(), cap)
    }

    /// Truncation of `G - deleted`. Deleted vertices must have level at most
    /// `level`.
    pub fn without(
        g: &GraphFamily,
        level: u32,
        deleted: &BTreeSet<Vertex>,
        cap: usize,
    ) -> Result<Self> {
        let mut vertices = Vec::new();
        for l in 0..=level {
            for v in g.vertices_at_level(l) {
                if !deleted.contains(&v) {
                    vertices.push(v);
                }
            }
            if vertices.len() > cap {
                return Err(Error::BudgetExceeded {
                    what: "truncation vertices",
                    limit: cap,
                });
            }
        }
        vertices.sort();
        let index: HashMap<Vertex, usize> =
            vertices.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let adj = vertices
            .iter()
            .map(|&v| {
                g.neighbors(v, level)
                    .into_iter()
                    .filter_map(|w| index.get(&w).copied())
                    .collect()
            })
            .collect();
        let frontier = vertices
            .iter()
            .map(|&v| g.has_neighbor_beyond(v, level))
            .collect();
        Ok(Truncation {
            family: *g,
            level,
            vertices,
            index,
            adj,
            frontier,
            deleted: deleted.clone(),
        })
    }

    pub fn family(&self) -> &GraphFamily {
        &self.family
    }

    pub fn level(&self) -> u32 {
        self.level
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn terminal(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn vertex(&self, i: usize) -> Vertex {
        self.vertices[i]
    }

    pub fn index_of(&self, v: Vertex) -> Option<usize> {
        self.index.get(&v).copied()
    }

    pub fn deleted(&self) -> &BTreeSet<Vertex> {
        &self.deleted
    }

    /// Index adjacency without the terminal.
    pub fn adjacency(&self) -> &[Vec<usize>] {
        &self.adj
    }

    /// Index adjacency with the terminal appended as the last node.
    pub fn adjacency_with_terminal(&self) -> Vec<Vec<usize>> {
        let t = self.terminal();
        let mut adj = self.adj.clone();
        let mut tadj = Vec::new();
        for (i, list) in adj.iter_mut().enumerate() {
            if self.frontier[i] {
                list.push(t);
                tadj.push(i);
            }
        }
        adj.push(tadj);
        adj
    }

    pub fn is_frontier(&self, i: usize) -> bool {
        self.frontier[i]
    }

    pub fn frontier(&self) -> Vec<Vertex> {
        self.vertices
            .iter()
            .zip(&self.frontier)
            .filter(|(_, &f)| f)
            .map(|(&v, _)| v)
            .collect()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Maps vertices to indices, failing on any vertex outside the window.
    pub fn indices<'a, I>(&self, vs: I) -> Result<Vec<usize>>
    where
        I: IntoIterator<Item = &'a Vertex>,
    {
        vs.into_iter()
            .map(|&v| self.index_of(v).ok_or(Error::OutsideWindow(v)))
            .collect()
    }

    /// Connected components of the truncation after removing `removed`
    /// (indices). Components are returned in order of their smallest index,
    /// each sorted.
    pub fn components_avoiding(&self, removed: &[bool]) -> Vec<Vec<usize>> {
        let n = self.len();
        let mut comp = vec![usize::MAX; n];
        let mut out = Vec::new();
        let mut stack = Vec::new();
        for s in 0..n {
            if removed[s] || comp[s] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut members = vec![s];
            comp[s] = id;
            stack.push(s);
            while let Some(u) = stack.pop() {
                for &w in &self.adj[u] {
                    if !removed[w] && comp[w] == usize::MAX {
                        comp[w] = id;
                        members.push(w);
                        stack.push(w);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ComponentLabel {
    ContainsEnd,
    Finite,
    Undetermined,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Component {
    pub label: ComponentLabel,
    pub vertices: BTreeSet<Vertex>,
}

impl Component {
    pub fn representative(&self) -> Vertex {
        *self.vertices.iter().next().expect("components are nonempty")
    }
}

pub(crate) fn max_level<'a, I>(g: &GraphFamily, vs: I) -> Option<u32>
where
    I: IntoIterator<Item = &'a Vertex>,
{
    vs.into_iter().map(|&v| g.level(v)).max()
}

/// Labels the components of `Truncation(level) - separator`.
///
/// A component touching the frontier that holds a vertex deeper than every
/// separator vertex contains the end. A component that misses the frontier is
/// finite. Anything else is undetermined.
pub fn label_components(t: &Truncation, separator: &BTreeSet<Vertex>) -> Result<Vec<Component>> {
    let g = t.family();
    let sep_level = max_level(g, separator);
    if let Some(sl) = sep_level {
        if t.level() <= sl {
            return Err(Error::HorizonTooSmall {
                window: t.level(),
                required: sl,
            });
        }
    }
    let mut removed = vec![false; t.len()];
    for i in t.indices(separator)? {
        removed[i] = true;
    }
    Ok(t.components_avoiding(&removed)
        .into_iter()
        .map(|members| {
            let touches = members.iter().any(|&i| t.is_frontier(i));
            let deep = members
                .iter()
                .any(|&i| sep_level.is_none_or(|sl| g.level(t.vertex(i)) > sl));
            let label = match (touches, deep) {
                (false, _) => ComponentLabel::Finite,
                (true, true) => ComponentLabel::ContainsEnd,
                (true, false) => ComponentLabel::Undetermined,
            };
            Component {
                label,
                vertices: members.into_iter().map(|i| t.vertex(i)).collect(),
            }
        })
        .collect())
}

/// Components of `Truncation(level) - separator`, labelled.
pub fn components_without(
    g: &GraphFamily,
    separator: &BTreeSet<Vertex>,
    level: u32,
    cap: usize,
) -> Result<Vec<Component>> {
    if let Some(sl) = max_level(g, separator) {
        if level <= sl {
            return Err(Error::HorizonTooSmall {
                window: level,
                required: sl,
            });
        }
    }
    let t = Truncation::new(g, level, cap)?;
    label_components(&t, separator)
}
