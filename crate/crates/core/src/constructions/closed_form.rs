//! Closed-form labelings for paths, cycles, matchings and arbitrary graphs.

use super::{finish, sidon_set, ConstructionReport, Expect, Isolates, SidonSet};
use crate::error::{Error, Result};
use crate::families::{generate, FamilySpec};
use crate::graph::SimpleGraph;
use crate::labeling::Labeling;

const MAX_N: usize = 1_000_000_000;

fn size(n: usize) -> Result<i64> {
    if n > MAX_N {
        return Err(Error::InvalidParameter(format!("n = {n} is too large")));
    }
    Ok(n as i64)
}

fn family(
    labels: Vec<i64>,
    spec: FamilySpec,
    isolates: usize,
    bound: i64,
    integral: bool,
) -> Result<ConstructionReport> {
    let labeling = if integral {
        Labeling::integral(labels)?
    } else {
        Labeling::positive(labels)?
    };
    finish(labeling, generate(spec)?, Expect::Family(spec), Isolates::Exactly(isolates), bound)
}

/// `P_n`, even `n ≥ 4`, one isolate, range `2n - 1`.
pub fn spum_path_even(n: usize) -> Result<ConstructionReport> {
    if n < 4 || n % 2 == 1 {
        return Err(Error::InvalidParameter("n must be even and at least 4".into()));
    }
    let m = size(n)?;
    let mut labels: Vec<i64> = (1..=2 * m - 3).step_by(2).collect();
    labels.extend([2 * m - 4, 2 * m]);
    family(labels, FamilySpec::path(n), 1, 2 * m - 1, false)
}

/// `P_n`, `n ≥ 3`, two isolates, range `2n - 2`.
pub fn sd_path(n: usize) -> Result<ConstructionReport> {
    if n < 3 {
        return Err(Error::InvalidParameter("n must be at least 3".into()));
    }
    let m = size(n)?;
    let mut labels: Vec<i64> = (m - 1..=2 * m - 2).collect();
    labels.extend([3 * m - 4, 3 * m - 3]);
    family(labels, FamilySpec::path(n), 2, 2 * m - 2, false)
}

/// `C_4` with three isolates and range 7.
pub fn spum_cycle4() -> Result<ConstructionReport> {
    let labels = (3..=6).chain(8..=10).collect();
    family(labels, FamilySpec::cycle(4), 3, 7, false)
}

/// Integral labeling of `C_n` for odd `n ≥ 15` with no isolates and range `8(n - 9)`.
pub fn ispum_cycle_odd(n: usize) -> Result<ConstructionReport> {
    if n < 15 || n.is_multiple_of(2) {
        return Err(Error::InvalidParameter("n must be odd and at least 15".into()));
    }
    let k = (size(n)? - 9) / 2;
    let mut labels: Vec<i64> = (-8 * k..=-7 * k + 1).chain(4 * k..=5 * k).collect();
    labels.extend([-3 * k, -3 * k + 1, -5 * k, -k - 1, 7 * k - 1, 8 * k]);
    family(labels, FamilySpec::cycle(n), 0, 16 * k, true)
}

/// `nK_2` with one isolate and range `4n - 2`.
pub fn spum_matching(n: usize) -> Result<ConstructionReport> {
    if n < 1 {
        return Err(Error::InvalidParameter("n must be at least 1".into()));
    }
    let m = size(n)?;
    let mut labels: Vec<i64> = (2 * m - 1..=4 * m - 2).collect();
    labels.push(6 * m - 3);
    family(labels, FamilySpec::matching(n), 1, 4 * m - 2, false)
}

/// Integral labeling of `nK_2`, `n ≥ 3`, with no isolates and range `4n - 3`.
pub fn ispum_matching(n: usize) -> Result<ConstructionReport> {
    if n < 3 {
        return Err(Error::InvalidParameter("n must be at least 3".into()));
    }
    let m = size(n)?;
    let mut labels = vec![-1];
    labels.extend((1..=4 * m - 5).step_by(2));
    labels.push(4 * m - 4);
    family(labels, FamilySpec::matching(n), 0, 4 * m - 3, true)
}

/// Vertex labels `4s + 1` and edge labels `4(s_u + s_v) + 2` over a Sidon set.
pub fn sd_general(g: &SimpleGraph) -> Result<ConstructionReport> {
    sd_general_with(g, &sidon_set(g.n()))
}

pub fn sd_general_with(g: &SimpleGraph, sidon: &SidonSet) -> Result<ConstructionReport> {
    if g.has_isolated_vertices() {
        return Err(Error::IsolatedVertices);
    }
    if g.n() < 2 {
        return Err(Error::InvalidGraph("need at least two vertices".into()));
    }
    if sidon.order() != 2 || sidon.len() != g.n() {
        return Err(Error::InvalidParameter(format!(
            "need a Sidon set with {} elements",
            g.n()
        )));
    }
    let s = sidon.elements();
    let vertex: Vec<i64> = s.iter().map(|&x| 4 * x + 1).collect();
    let mut labels = vertex.clone();
    labels.extend(g.edges().iter().map(|&(u, v)| 4 * (s[u] + s[v]) + 2));
    let n = size(g.n())?;
    let bound = 64 * n * n - 64 * n + 9;
    finish(
        Labeling::positive(labels)?,
        g.clone(),
        Expect::Mapped(&vertex),
        Isolates::Exactly(g.edge_count()),
        bound,
    )
}
