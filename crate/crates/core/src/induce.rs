//! Sum graph induction.

use std::collections::BTreeSet;

use crate::graph::SimpleGraph;
use crate::labeling::Labeling;

/// The sum graph of a label set, split into its core and isolated labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InducedResult {
    /// Vertex `i` carries `label_of[i]`, the `i`-th smallest label.
    pub graph: SimpleGraph,
    pub label_of: Vec<i64>,
    pub isolated_labels: Vec<i64>,
    /// Non-isolated vertices, renumbered in ascending label order.
    pub core_graph: SimpleGraph,
    pub core_labels: Vec<i64>,
    pub isolate_count: usize,
}

impl InducedResult {
    /// Edges of the full graph written as label pairs.
    pub fn label_edges(&self) -> Vec<(i64, i64)> {
        self.graph
            .edges()
            .iter()
            .map(|&(u, v)| (self.label_of[u], self.label_of[v]))
            .collect()
    }
}

/// Index pairs `i < j` with `labels[i] + labels[j]` also a label.
pub(crate) fn sum_pairs(labels: &[i64]) -> Vec<(usize, usize)> {
    let n = labels.len();
    let mut out = Vec::new();
    for i in 0..n {
        // sums grow with j, so the probe index only moves forward
        let mut k = 0;
        for j in i + 1..n {
            let s = labels[i] + labels[j];
            while k < n && labels[k] < s {
                k += 1;
            }
            if k == n {
                break;
            }
            if labels[k] == s {
                out.push((i, j));
            }
        }
    }
    out
}

pub fn induce(l: &Labeling) -> InducedResult {
    let labels = l.labels();
    let n = labels.len();
    let pairs = sum_pairs(labels);
    let mut deg = vec![0usize; n];
    for &(u, v) in &pairs {
        deg[u] += 1;
        deg[v] += 1;
    }
    let core_idx: Vec<usize> = (0..n).filter(|&i| deg[i] > 0).collect();
    let mut pos = vec![usize::MAX; n];
    for (c, &i) in core_idx.iter().enumerate() {
        pos[i] = c;
    }
    let core_set: BTreeSet<_> = pairs.iter().map(|&(u, v)| (pos[u], pos[v])).collect();
    InducedResult {
        graph: SimpleGraph::from_set(n, pairs.into_iter().collect()),
        label_of: labels.to_vec(),
        isolated_labels: (0..n).filter(|&i| deg[i] == 0).map(|i| labels[i]).collect(),
        core_graph: SimpleGraph::from_set(core_idx.len(), core_set),
        core_labels: core_idx.iter().map(|&i| labels[i]).collect(),
        isolate_count: n - core_idx.len(),
    }
}

pub fn range(l: &Labeling) -> i64 {
    l.range()
}
