//! k-uniform hypergraphs induced by k-fold label sums.

use std::collections::{BTreeSet, HashSet};
use std::sync::atomic::{AtomicU64, Ordering};
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::constructions::{bk_set, SidonSet};
use crate::error::{Error, Result};
use crate::labeling::{Domain, Labeling};
use crate::search::{Invariant, SearchCertificate, DEFAULT_BUDGET};

/// Largest vertex count accepted by the permutation-based isomorphism test.
pub const HYPER_ISO_CAP: usize = 9;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawHypergraph", into = "RawHypergraph")]
pub struct Hypergraph {
    n: usize,
    k: usize,
    edges: Vec<Vec<usize>>,
}

#[derive(Serialize, Deserialize)]
struct RawHypergraph {
    n: usize,
    k: usize,
    edges: Vec<Vec<usize>>,
}

impl TryFrom<RawHypergraph> for Hypergraph {
    type Error = Error;

    fn try_from(raw: RawHypergraph) -> Result<Self> {
        Hypergraph::new(raw.n, raw.k, raw.edges)
    }
}

impl From<Hypergraph> for RawHypergraph {
    fn from(h: Hypergraph) -> Self {
        RawHypergraph { n: h.n, k: h.k, edges: h.edges }
    }
}

impl Hypergraph {
    pub fn new(n: usize, k: usize, edges: impl IntoIterator<Item = Vec<usize>>) -> Result<Self> {
        if k < 3 {
            return Err(Error::InvalidParameter(format!("uniformity {k} is below 3")));
        }
        Self::build(n, k, edges)
    }

    fn build(n: usize, k: usize, edges: impl IntoIterator<Item = Vec<usize>>) -> Result<Self> {
        let mut seen = BTreeSet::new();
        for mut e in edges {
            e.sort_unstable();
            e.dedup();
            if e.len() != k {
                return Err(Error::InvalidGraph(format!("edge {e:?} does not have {k} vertices")));
            }
            if e.iter().any(|&v| v >= n) {
                return Err(Error::InvalidGraph(format!("edge {e:?} leaves [0, {n})")));
            }
            if !seen.insert(e.clone()) {
                return Err(Error::InvalidGraph(format!("duplicate edge {e:?}")));
            }
        }
        Ok(Self { n, k, edges: seen.into_iter().collect() })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn edges(&self) -> &[Vec<usize>] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n];
        for e in &self.edges {
            for &v in e {
                deg[v] += 1;
            }
        }
        deg
    }

    pub fn has_isolated_vertices(&self) -> bool {
        self.degrees().contains(&0)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("hypergraph serializes")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
    }
}

/// Induced k-sum hypergraph with the isolate partition.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InducedHyper {
    /// Over all labels, vertex `i` carrying `label_of[i]`.
    pub hypergraph: Hypergraph,
    pub label_of: Vec<i64>,
    pub isolated_labels: Vec<i64>,
    pub core: Hypergraph,
    pub core_labels: Vec<i64>,
    pub isolate_count: usize,
}

impl InducedHyper {
    /// Edges as sorted label tuples.
    pub fn label_edges(&self) -> BTreeSet<Vec<i64>> {
        self.hypergraph
            .edges()
            .iter()
            .map(|e| e.iter().map(|&v| self.label_of[v]).collect())
            .collect()
    }
}

pub fn induce_hyper(l: &Labeling, k: usize) -> Result<InducedHyper> {
    if k < 3 {
        return Err(Error::InvalidParameter(format!(
            "uniformity {k} is below 3; use induce for graphs"
        )));
    }
    induce_uniform(l, k)
}

/// Any uniformity, including 2.
pub(crate) fn induce_uniform(l: &Labeling, k: usize) -> Result<InducedHyper> {
    if k == 0 || l.len() < k {
        return Err(Error::InvalidParameter(format!("need at least {k} labels")));
    }
    let labels = l.labels();
    let present: HashSet<i64> = labels.iter().copied().collect();
    let mut edges = Vec::new();
    let mut pick = Vec::with_capacity(k);
    subsets(labels.len(), k, &mut pick, &mut |idx| {
        let sum: i64 = idx.iter().map(|&i| labels[i]).sum();
        if present.contains(&sum) {
            edges.push(idx.to_vec());
        }
    });
    let hypergraph = Hypergraph::build(labels.len(), k, edges)?;
    let deg = hypergraph.degrees();
    let mut index = vec![usize::MAX; labels.len()];
    let mut core_labels = Vec::new();
    let mut isolated_labels = Vec::new();
    for (i, &d) in deg.iter().enumerate() {
        if d == 0 {
            isolated_labels.push(labels[i]);
        } else {
            index[i] = core_labels.len();
            core_labels.push(labels[i]);
        }
    }
    let core = Hypergraph::build(
        core_labels.len(),
        k,
        hypergraph.edges().iter().map(|e| e.iter().map(|&v| index[v]).collect()),
    )?;
    Ok(InducedHyper {
        hypergraph,
        label_of: labels.to_vec(),
        isolate_count: isolated_labels.len(),
        isolated_labels,
        core,
        core_labels,
    })
}

fn subsets(n: usize, k: usize, pick: &mut Vec<usize>, visit: &mut impl FnMut(&[usize])) {
    if pick.len() == k {
        visit(pick);
        return;
    }
    let from = pick.last().map_or(0, |&v| v + 1);
    for i in from..n {
        if n - i < k - pick.len() {
            break;
        }
        pick.push(i);
        subsets(n, k, pick, visit);
        pick.pop();
    }
}

pub fn hyper_sd_lower_bound(h: &Hypergraph) -> Result<i64> {
    if h.has_isolated_vertices() {
        return Err(Error::IsolatedVertices);
    }
    let (n, k) = (h.n() as i64, h.k() as i64);
    Ok(n + k * (k - 1) / 2 - 1)
}

/// Isomorphism by trying every degree-preserving vertex permutation.
pub fn hyper_isomorphic(a: &Hypergraph, b: &Hypergraph) -> Result<bool> {
    if a.n() > HYPER_ISO_CAP {
        return Err(Error::GraphTooLarge { n: a.n(), cap: HYPER_ISO_CAP });
    }
    if a.n() != b.n() || a.k() != b.k() || a.edge_count() != b.edge_count() {
        return Ok(false);
    }
    let (da, db) = (a.degrees(), b.degrees());
    let mut sa = da.clone();
    let mut sb = db.clone();
    sa.sort_unstable();
    sb.sort_unstable();
    if sa != sb {
        return Ok(false);
    }
    let target: HashSet<&[usize]> = b.edges().iter().map(Vec::as_slice).collect();
    let mut map = vec![usize::MAX; a.n()];
    let mut used = vec![false; b.n()];
    Ok(extend_map(a, &da, &db, &target, 0, &mut map, &mut used))
}

fn extend_map(
    a: &Hypergraph,
    da: &[usize],
    db: &[usize],
    target: &HashSet<&[usize]>,
    v: usize,
    map: &mut [usize],
    used: &mut [bool],
) -> bool {
    if v == a.n() {
        return a.edges().iter().all(|e| {
            let mut image: Vec<usize> = e.iter().map(|&u| map[u]).collect();
            image.sort_unstable();
            target.contains(image.as_slice())
        });
    }
    for w in 0..used.len() {
        if used[w] || da[v] != db[w] {
            continue;
        }
        map[v] = w;
        used[w] = true;
        if extend_map(a, da, db, target, v + 1, map, used) {
            return true;
        }
        used[w] = false;
    }
    false
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HyperConstructionReport {
    pub labeling: Labeling,
    pub target: Hypergraph,
    pub claimed_range_bound: i64,
    pub achieved_range: i64,
    pub isolate_count: usize,
    pub valid: bool,
}

pub fn hyper_general(h: &Hypergraph) -> Result<HyperConstructionReport> {
    hyper_general_with(h, &bk_set(h.n(), h.k()))
}

/// Vertex `i` gets `k²·s_i + 1`, each edge gets `k²·Σs + k`.
pub fn hyper_general_with(h: &Hypergraph, set: &SidonSet) -> Result<HyperConstructionReport> {
    if h.has_isolated_vertices() {
        return Err(Error::IsolatedVertices);
    }
    let k = h.k();
    if set.order() != k || set.len() < h.n() {
        return Err(Error::InvalidParameter(format!(
            "need a B_{k} set with at least {} elements",
            h.n()
        )));
    }
    let s = &set.elements()[..h.n()];
    let kk = (k * k) as i64;
    let mul = |a: i64, b: i64| a.checked_mul(b).ok_or(Error::Overflow);
    let add = |a: i64, b: i64| a.checked_add(b).ok_or(Error::Overflow);
    let mut vertex_labels = Vec::with_capacity(h.n());
    for &si in s {
        vertex_labels.push(add(mul(kk, si)?, 1)?);
    }
    let mut labels = vertex_labels.clone();
    for e in h.edges() {
        let mut sum = 0i64;
        for &v in e {
            sum = add(sum, s[v])?;
        }
        labels.push(add(mul(kk, sum)?, k as i64)?);
    }
    let labeling = Labeling::new(labels, Domain::Positive)?;
    let top: i64 = s.iter().rev().take(k).sum();
    let claimed_range_bound = add(mul(kk, top)?, k as i64)? - vertex_labels[0];

    let r = induce_hyper(&labeling, k)?;
    let expected: BTreeSet<Vec<i64>> = h
        .edges()
        .iter()
        .map(|e| {
            let mut t: Vec<i64> = e.iter().map(|&v| vertex_labels[v]).collect();
            t.sort_unstable();
            t
        })
        .collect();
    if r.label_edges() != expected || r.isolate_count != h.edge_count() {
        return Err(Error::SelfCheckFailed(format!(
            "labeling {labeling} does not induce the hypergraph"
        )));
    }
    let achieved_range = labeling.range();
    if achieved_range > claimed_range_bound {
        return Err(Error::SelfCheckFailed(format!(
            "range {achieved_range} exceeds {claimed_range_bound}"
        )));
    }
    Ok(HyperConstructionReport {
        isolate_count: r.isolate_count,
        labeling,
        target: h.clone(),
        claimed_range_bound,
        achieved_range,
        valid: true,
    })
}

#[derive(Debug, Clone)]
pub struct HyperSearch {
    pub max_range: Option<i64>,
    pub jobs: usize,
    pub budget: u64,
}

impl Default for HyperSearch {
    fn default() -> Self {
        Self { max_range: None, jobs: 1, budget: DEFAULT_BUDGET }
    }
}

pub fn search_hyper_sd(h: &Hypergraph) -> Result<SearchCertificate> {
    search_hyper_sd_with(h, &HyperSearch::default())
}

pub fn search_hyper_sd_with(h: &Hypergraph, opts: &HyperSearch) -> Result<SearchCertificate> {
    let clock = Instant::now();
    let start = hyper_sd_lower_bound(h)?;
    if h.n() > HYPER_ISO_CAP {
        return Err(Error::GraphTooLarge { n: h.n(), cap: HYPER_ISO_CAP });
    }
    let (n, k) = (h.n() as i64, h.k() as i64);
    let shape = HyperShape {
        target: h,
        max_deg: h.degrees().into_iter().max().unwrap_or(0),
        spent: AtomicU64::new(0),
        budget: opts.budget,
    };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(opts.jobs.max(1))
        .build()
        .map_err(|e| Error::InvalidParameter(e.to_string()))?;
    let mut examined = 0;
    let mut x = start;
    loop {
        if opts.max_range.is_some_and(|m| x > m) {
            return Err(Error::Infeasible { max_range: opts.max_range.unwrap() });
        }
        let top = (x - (k - 2) * (k - 1) / 2 - n + 1).div_euclid(k - 1);
        let windows: Vec<i64> = (1..=top).collect();
        let outs: Vec<Result<(u64, Option<Vec<i64>>)>> = if opts.jobs > 1 {
            pool.install(|| windows.par_iter().map(|&lo| shape.window(lo, lo + x)).collect())
        } else {
            windows.iter().map(|&lo| shape.window(lo, lo + x)).collect()
        };
        for out in outs {
            let (nodes, found) = out?;
            examined += nodes;
            if let Some(labels) = found {
                return Ok(SearchCertificate {
                    invariant: Invariant::Sd,
                    target: h.to_json(),
                    value: x,
                    witness: Labeling::new(labels, Domain::Positive)?,
                    exhausted_below: true,
                    candidates_examined: examined,
                    window_bound_used: "windows [a, a+x] with (k-1)a <= x-(k-2)(k-1)/2-n+1"
                        .to_string(),
                    wall_time_ms: Some(clock.elapsed().as_millis() as u64),
                });
            }
        }
        x += 1;
    }
}

struct HyperShape<'a> {
    target: &'a Hypergraph,
    max_deg: usize,
    spent: AtomicU64,
    budget: u64,
}

struct HyperDfs<'s, 'a> {
    shape: &'s HyperShape<'a>,
    hi: i64,
    members: Vec<i64>,
    deg: Vec<usize>,
    edges: Vec<Vec<usize>>,
    nodes: u64,
}

impl HyperShape<'_> {
    /// Lexicographically first set in `[lo, hi]` containing both ends that works.
    fn window(&self, lo: i64, hi: i64) -> Result<(u64, Option<Vec<i64>>)> {
        let mut dfs = HyperDfs {
            shape: self,
            hi,
            members: vec![lo],
            deg: vec![0],
            edges: Vec::new(),
            nodes: 0,
        };
        let found = dfs.explore(lo + 1)?;
        Ok((dfs.nodes, found))
    }
}

impl HyperDfs<'_, '_> {
    fn tick(&mut self) -> Result<()> {
        self.nodes += 1;
        if self.nodes.is_multiple_of(1024) {
            let total = self.shape.spent.fetch_add(1024, Ordering::Relaxed) + 1024;
            if total > self.shape.budget {
                return Err(Error::BudgetExceeded {
                    budget: self.shape.budget,
                    examined: total,
                    range: self.hi - self.members[0],
                });
            }
        }
        Ok(())
    }

    /// Appends `c` and records the edges it closes; false when pruned.
    fn push(&mut self, c: i64) -> bool {
        let k = self.shape.target.k();
        let mut closed = Vec::new();
        let mut pick = Vec::with_capacity(k);
        let members = &self.members;
        subsets(members.len(), k, &mut pick, &mut |idx| {
            if idx.iter().map(|&i| members[i]).sum::<i64>() == c {
                closed.push(idx.to_vec());
            }
        });
        self.members.push(c);
        self.deg.push(0);
        let base = self.edges.len();
        for e in closed {
            for &v in &e {
                self.deg[v] += 1;
            }
            self.edges.push(e);
        }
        self.edges.len() <= self.shape.target.edge_count()
            && self.edges[base..]
                .iter()
                .flatten()
                .all(|&v| self.deg[v] <= self.shape.max_deg)
            && self.deg.iter().filter(|&&d| d > 0).count() <= self.shape.target.n()
    }

    fn explore(&mut self, from: i64) -> Result<Option<Vec<i64>>> {
        for c in from..self.hi {
            self.tick()?;
            let mark = self.edges.len();
            let ok = self.push(c);
            let found = if ok { self.explore(c + 1)? } else { None };
            self.undo(mark);
            if found.is_some() {
                return Ok(found);
            }
        }
        self.tick()?;
        let mark = self.edges.len();
        let found = if self.push(self.hi) && self.leaf() {
            Some(self.members.clone())
        } else {
            None
        };
        self.undo(mark);
        Ok(found)
    }

    fn undo(&mut self, mark: usize) {
        while self.edges.len() > mark {
            for v in self.edges.pop().unwrap() {
                self.deg[v] -= 1;
            }
        }
        self.members.pop();
        self.deg.pop();
    }

    fn leaf(&self) -> bool {
        let target = self.shape.target;
        if self.edges.len() != target.edge_count() || self.deg[0] == 0 {
            return false;
        }
        let mut index = vec![usize::MAX; self.members.len()];
        let mut core = 0;
        for (i, &d) in self.deg.iter().enumerate() {
            if d > 0 {
                index[i] = core;
                core += 1;
            }
        }
        if core != target.n() {
            return false;
        }
        let Ok(h) = Hypergraph::build(
            core,
            target.k(),
            self.edges.iter().map(|e| e.iter().map(|&v| index[v]).collect()),
        ) else {
            return false;
        };
        hyper_isomorphic(&h, target).unwrap_or(false)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lab(v: &[i64]) -> Labeling {
        Labeling::new(v.to_vec(), Domain::Positive).unwrap()
    }

    #[test]
    fn single_forced_edge() {
        let r = induce_hyper(&lab(&[1, 2, 3, 6]), 3).unwrap();
        assert_eq!(r.core_labels, vec![1, 2, 3]);
        assert_eq!(r.isolated_labels, vec![6]);
        let r = induce_hyper(&lab(&[1, 2, 3, 4]), 3).unwrap();
        assert_eq!(r.isolate_count, 4);
        assert!(induce_hyper(&lab(&[1, 2, 3]), 2).is_err());
    }

    #[test]
    fn uniformity_two_matches_graph_induction() {
        for labels in [&[1, 2, 3][..], &[1, 2, 3, 4, 6], &[-3, -2, -1, 1, 2], &[-1, 0, 1], &[2, 5, 7, 9]] {
            let l = Labeling::infer(labels.to_vec()).unwrap();
            let pairs: BTreeSet<Vec<i64>> = crate::induce::induce(&l)
                .label_edges()
                .into_iter()
                .map(|(u, v)| vec![u, v])
                .collect();
            let shim = induce_uniform(&l, 2).unwrap();
            assert_eq!(shim.label_edges(), pairs);
            assert_eq!(shim.isolate_count, crate::induce::induce(&l).isolate_count);
        }
    }

    #[test]
    fn lower_bound_examples() {
        let e = Hypergraph::new(3, 3, [vec![0, 1, 2]]).unwrap();
        assert_eq!(hyper_sd_lower_bound(&e).unwrap(), 5);
        let h = Hypergraph::new(4, 3, [vec![0, 1, 2], vec![1, 2, 3]]).unwrap();
        assert_eq!(hyper_sd_lower_bound(&h).unwrap(), 6);
        let h = Hypergraph::new(5, 4, [vec![0, 1, 2, 3], vec![1, 2, 3, 4]]).unwrap();
        assert_eq!(hyper_sd_lower_bound(&h).unwrap(), 10);
        let loose = Hypergraph::new(4, 3, [vec![0, 1, 2]]).unwrap();
        assert_eq!(hyper_sd_lower_bound(&loose), Err(Error::IsolatedVertices));
    }

    #[test]
    fn single_edge_search() {
        let e = Hypergraph::new(3, 3, [vec![0, 1, 2]]).unwrap();
        let c = search_hyper_sd(&e).unwrap();
        assert_eq!(c.value, 5);
        assert_eq!(c.witness.labels(), &[1, 2, 3, 4, 5, 6]);
        let r = induce_hyper(&lab(&[1, 2, 3, 6]), 3).unwrap();
        assert!(hyper_isomorphic(&r.core, &e).unwrap());
    }

    #[test]
    fn json_round_trip() {
        let h = Hypergraph::new(4, 3, [vec![2, 1, 0], vec![1, 2, 3]]).unwrap();
        assert_eq!(h.to_json(), r#"{"n":4,"k":3,"edges":[[0,1,2],[1,2,3]]}"#);
        assert_eq!(Hypergraph::from_json(&h.to_json()).unwrap(), h);
        assert!(Hypergraph::from_json(r#"{"n":3,"k":3,"edges":[[0,1]]}"#).is_err());
    }
}
