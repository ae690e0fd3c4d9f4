//! Validity of a labeling for a target graph, and general range bounds.

use crate::error::{Error, Result};
use crate::graph::SimpleGraph;
use crate::induce::induce;
use crate::iso::isomorphic;
use crate::labeling::{Domain, Labeling};

/// True iff `L` induces `G` plus isolated labels, with exactly
/// `exact_isolates` of them when given.
pub fn is_valid_labeling(
    l: &Labeling,
    g: &SimpleGraph,
    exact_isolates: Option<usize>,
) -> Result<bool> {
    if g.has_isolated_vertices() {
        return Err(Error::IsolatedVertices);
    }
    let r = induce(l);
    if exact_isolates.is_some_and(|k| k != r.isolate_count) {
        return Ok(false);
    }
    isomorphic(&r.core_graph, g)
}

fn check_isolate_free(g: &SimpleGraph) -> Result<()> {
    if g.has_isolated_vertices() {
        return Err(Error::IsolatedVertices);
    }
    if g.n() < 2 {
        return Err(Error::InvalidGraph("need at least two vertices".into()));
    }
    Ok(())
}

/// `2n - (Δ - δ) - 2`, a lower bound on the positive range.
pub fn sd_lower_bound(g: &SimpleGraph) -> Result<i64> {
    check_isolate_free(g)?;
    let n = g.n() as i64;
    Ok(2 * n - (g.max_degree() as i64 - g.min_degree() as i64) - 2)
}

/// `2n - Δ - 3`, a lower bound on the integral range.
pub fn isd_lower_bound(g: &SimpleGraph) -> Result<i64> {
    check_isolate_free(g)?;
    let n = g.n() as i64;
    Ok(2 * n - g.max_degree() as i64 - 3)
}

/// Structural facts every optimal labeling must satisfy.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OptimalityReport {
    /// The smallest label is a vertex label.
    pub min_label_is_vertex: bool,
    /// The range equals the positive lower bound.
    pub equality_case: bool,
    /// `[min L, 2 min L]` are all vertex labels; only checked in the equality case.
    pub doubling_interval_in_core: Option<bool>,
}

impl OptimalityReport {
    pub fn passes(&self) -> bool {
        self.min_label_is_vertex && self.doubling_interval_in_core != Some(false)
    }
}

pub fn optimality_witness_check(l: &Labeling, g: &SimpleGraph) -> Result<OptimalityReport> {
    let r = induce(l);
    let min_l = l.min().ok_or_else(|| Error::InvalidLabeling("empty".into()))?;
    let min_s = r.core_labels.first().copied();
    let equality_case = l.domain() == Domain::Positive && l.range() == sd_lower_bound(g)?;
    let doubling_interval_in_core = equality_case.then(|| {
        (min_l..=2 * min_l).all(|x| r.core_labels.binary_search(&x).is_ok())
    });
    Ok(OptimalityReport {
        min_label_is_vertex: min_s == Some(min_l),
        equality_case,
        doubling_interval_in_core,
    })
}
