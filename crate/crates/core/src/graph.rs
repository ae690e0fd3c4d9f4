//! Simple undirected graphs on vertices `0..n`.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SimpleGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

#[derive(Serialize, Deserialize)]
struct GraphRepr {
    n: usize,
    edges: Vec<[usize; 2]>,
}

impl SimpleGraph {
    /// Builds a graph, normalizing each edge to `(min, max)`.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut set = BTreeSet::new();
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidGraph(format!("edge ({u},{v}) out of range")));
            }
            if u == v {
                return Err(Error::InvalidGraph(format!("loop at {u}")));
            }
            if !set.insert((u.min(v), u.max(v))) {
                return Err(Error::InvalidGraph(format!("duplicate edge ({u},{v})")));
            }
        }
        Ok(Self::from_set(n, set))
    }

    pub(crate) fn from_set(n: usize, set: BTreeSet<(usize, usize)>) -> Self {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &set {
            adj[u].push(v);
            adj[v].push(u);
        }
        for a in &mut adj {
            a.sort_unstable();
        }
        Self {
            n,
            edges: set.into_iter().collect(),
            adj,
        }
    }

    pub fn empty(n: usize) -> Self {
        Self::from_set(n, BTreeSet::new())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Edges as `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).collect()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn has_isolated_vertices(&self) -> bool {
        self.adj.iter().any(Vec::is_empty)
    }

    /// Component id per vertex, numbered in order of first vertex.
    pub fn components(&self) -> Vec<usize> {
        let mut comp = vec![usize::MAX; self.n];
        let mut next = 0;
        let mut stack = Vec::new();
        for s in 0..self.n {
            if comp[s] != usize::MAX {
                continue;
            }
            comp[s] = next;
            stack.push(s);
            while let Some(u) = stack.pop() {
                for &v in &self.adj[u] {
                    if comp[v] == usize::MAX {
                        comp[v] = next;
                        stack.push(v);
                    }
                }
            }
            next += 1;
        }
        comp
    }

    pub fn is_connected(&self) -> bool {
        self.components().iter().all(|&c| c == 0)
    }

    /// The subgraph induced on `keep`, renumbered in the order given.
    pub fn induced_subgraph(&self, keep: &[usize]) -> Result<Self> {
        let mut pos = vec![usize::MAX; self.n];
        for (i, &v) in keep.iter().enumerate() {
            if v >= self.n || pos[v] != usize::MAX {
                return Err(Error::InvalidParameter(format!("bad vertex {v}")));
            }
            pos[v] = i;
        }
        let set = self
            .edges
            .iter()
            .filter(|&&(u, v)| pos[u] != usize::MAX && pos[v] != usize::MAX)
            .map(|&(u, v)| (pos[u].min(pos[v]), pos[u].max(pos[v])))
            .collect();
        Ok(Self::from_set(keep.len(), set))
    }

    /// Disjoint union, with `other`'s vertices shifted past ours.
    pub fn disjoint_union(&self, other: &Self) -> Self {
        let off = self.n;
        let set = self
            .edges
            .iter()
            .copied()
            .chain(other.edges.iter().map(|&(u, v)| (u + off, v + off)))
            .collect();
        Self::from_set(self.n + other.n, set)
    }

    /// Disjoint union plus every edge between the two sides.
    pub fn join(&self, other: &Self) -> Self {
        let off = self.n;
        let mut set: BTreeSet<_> = self.disjoint_union(other).edges.into_iter().collect();
        for u in 0..self.n {
            for v in 0..other.n {
                set.insert((u, v + off));
            }
        }
        Self::from_set(self.n + other.n, set)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.repr()).expect("graph serializes")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let r: GraphRepr = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        Self::new(r.n, r.edges.into_iter().map(|[u, v]| (u, v)))
    }

    fn repr(&self) -> GraphRepr {
        GraphRepr {
            n: self.n,
            edges: self.edges.iter().map(|&(u, v)| [u, v]).collect(),
        }
    }
}

impl Serialize for SimpleGraph {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.repr().serialize(s)
    }
}

impl<'de> Deserialize<'de> for SimpleGraph {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = GraphRepr::deserialize(d)?;
        Self::new(r.n, r.edges.into_iter().map(|[u, v]| (u, v))).map_err(serde::de::Error::custom)
    }
}
