//! Explicit labelings, labeling combinators, and Sidon-type sets.

mod closed_form;
mod combinators;
mod sidon;

pub use closed_form::{
    ispum_cycle_odd, ispum_matching, sd_general, sd_general_with, sd_path, spum_cycle4,
    spum_matching, spum_path_even,
};
pub use combinators::{
    add_isolated, add_vertex, disjoint_union_scaled, disjoint_union_translated, join, modify,
    translate, Modification,
};
pub use sidon::{bk_set, certify_bk, sidon_set, SidonSet};

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::families::{recognize, FamilySpec};
use crate::graph::SimpleGraph;
use crate::induce::{induce, InducedResult};
use crate::iso::find_isomorphism;
use crate::labeling::{Domain, Labeling};

/// A labeling together with the graph it was built for and its checked range.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConstructionReport {
    pub labeling: Labeling,
    pub target: SimpleGraph,
    pub claimed_range_bound: i64,
    pub achieved_range: i64,
    pub isolate_count: usize,
    pub valid: bool,
}

/// How a construction's output is compared with its target.
pub(crate) enum Expect<'a> {
    /// Core must belong to the family.
    Family(FamilySpec),
    /// Induced edges must be exactly the target's edges under the vertex labels.
    Mapped(&'a [i64]),
}

pub(crate) enum Isolates {
    Exactly(usize),
    AtLeast(usize),
}

pub(crate) fn finish(
    labeling: Labeling,
    target: SimpleGraph,
    expect: Expect<'_>,
    isolates: Isolates,
    claimed_range_bound: i64,
) -> Result<ConstructionReport> {
    let r = induce(&labeling);
    let structure_ok = match expect {
        Expect::Family(spec) => recognize(&r.core_graph, spec),
        Expect::Mapped(labels) => matches_mapping(&r, &target, labels),
    };
    if !structure_ok {
        return Err(Error::SelfCheckFailed(format!(
            "labeling {labeling} does not induce the intended graph"
        )));
    }
    let isolates_ok = match isolates {
        Isolates::Exactly(k) => r.isolate_count == k,
        Isolates::AtLeast(k) => r.isolate_count >= k,
    };
    if !isolates_ok {
        return Err(Error::SelfCheckFailed(format!(
            "labeling {labeling} induces {} isolates",
            r.isolate_count
        )));
    }
    let achieved_range = labeling.range();
    if achieved_range > claimed_range_bound {
        return Err(Error::SelfCheckFailed(format!(
            "range {achieved_range} exceeds the bound {claimed_range_bound}"
        )));
    }
    Ok(ConstructionReport {
        labeling,
        target,
        claimed_range_bound,
        achieved_range,
        isolate_count: r.isolate_count,
        valid: true,
    })
}

/// Exact check: vertex `v` of `target` carries `labels[v]`.
fn matches_mapping(r: &InducedResult, target: &SimpleGraph, labels: &[i64]) -> bool {
    if labels.len() != target.n() {
        return false;
    }
    let mut expected = BTreeSet::new();
    for &(u, v) in target.edges() {
        let (a, b) = (labels[u], labels[v]);
        expected.insert((a.min(b), a.max(b)));
    }
    let got: BTreeSet<(i64, i64)> = r.label_edges().into_iter().collect();
    let on_target: BTreeSet<i64> = labels.iter().copied().collect();
    got == expected
        && on_target.len() == labels.len()
        && labels.iter().all(|l| r.label_of.binary_search(l).is_ok())
}

/// Label carried by each vertex of `g`, found through an isomorphism onto the core.
pub fn embedding(l: &Labeling, g: &SimpleGraph) -> Result<Vec<i64>> {
    if g.has_isolated_vertices() {
        return Err(Error::IsolatedVertices);
    }
    let r = induce(l);
    let map = find_isomorphism(g, &r.core_graph)?.ok_or_else(|| {
        Error::InvalidLabeling(format!("{l} does not induce the given graph"))
    })?;
    Ok(map.into_iter().map(|c| r.core_labels[c]).collect())
}

/// Labels of `L` that are sums of two distinct labels of `L`.
pub(crate) fn sum_labels(l: &Labeling) -> Vec<i64> {
    let labels = l.labels();
    let mut out: BTreeSet<i64> = BTreeSet::new();
    for (i, j) in crate::induce::sum_pairs(labels) {
        out.insert(labels[i] + labels[j]);
    }
    out.into_iter().collect()
}

pub(crate) fn require_positive(l: &Labeling) -> Result<()> {
    if l.domain() != Domain::Positive {
        return Err(Error::InvalidParameter(
            "combinators need positive-domain labelings".into(),
        ));
    }
    Ok(())
}

pub(crate) fn checked_add(a: i64, b: i64) -> Result<i64> {
    a.checked_add(b).ok_or(Error::Overflow)
}

pub(crate) fn checked_mul(a: i64, b: i64) -> Result<i64> {
    a.checked_mul(b).ok_or(Error::Overflow)
}

/// Builds a labeling from possibly overlapping parts.
pub(crate) fn collect_labels(
    parts: impl IntoIterator<Item = i64>,
    domain: Domain,
) -> Result<Labeling> {
    let set: BTreeSet<i64> = parts.into_iter().collect();
    Labeling::new(set.into_iter().collect(), domain)
}
