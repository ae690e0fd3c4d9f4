//! Named graph families and the values known for them.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::SimpleGraph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FamilyKind {
    Path,
    Cycle,
    Complete,
    /// `n` disjoint edges.
    Matching,
    /// `K_{1,n}`: one centre and `n` leaves.
    Star,
    /// `K_{n,n}`.
    CompleteBipartiteBalanced,
    Empty,
}

impl FamilyKind {
    const NAMES: [(FamilyKind, &'static str); 7] = [
        (FamilyKind::Path, "path"),
        (FamilyKind::Cycle, "cycle"),
        (FamilyKind::Complete, "complete"),
        (FamilyKind::Matching, "matching"),
        (FamilyKind::Star, "star"),
        (FamilyKind::CompleteBipartiteBalanced, "complete-bipartite"),
        (FamilyKind::Empty, "empty"),
    ];

    pub fn name(self) -> &'static str {
        Self::NAMES.iter().find(|(k, _)| *k == self).unwrap().1
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FamilySpec {
    pub kind: FamilyKind,
    pub n: usize,
}

impl FamilySpec {
    pub fn new(kind: FamilyKind, n: usize) -> Result<Self> {
        let s = Self { kind, n };
        s.validate()?;
        Ok(s)
    }

    pub fn path(n: usize) -> Self {
        Self::new(FamilyKind::Path, n).expect("valid path")
    }

    pub fn cycle(n: usize) -> Self {
        Self::new(FamilyKind::Cycle, n).expect("valid cycle")
    }

    pub fn complete(n: usize) -> Self {
        Self::new(FamilyKind::Complete, n).expect("valid complete graph")
    }

    pub fn matching(n: usize) -> Self {
        Self::new(FamilyKind::Matching, n).expect("valid matching")
    }

    fn validate(&self) -> Result<()> {
        if self.n < 1 {
            return Err(Error::InvalidParameter("family size must be at least 1".into()));
        }
        if self.kind == FamilyKind::Cycle && self.n < 3 {
            return Err(Error::InvalidParameter("a cycle needs at least 3 vertices".into()));
        }
        Ok(())
    }

    pub fn vertex_count(&self) -> usize {
        match self.kind {
            FamilyKind::Matching | FamilyKind::CompleteBipartiteBalanced => 2 * self.n,
            FamilyKind::Star => self.n + 1,
            _ => self.n,
        }
    }

    pub fn has_isolated_vertices(&self) -> bool {
        match self.kind {
            FamilyKind::Empty => true,
            FamilyKind::Path | FamilyKind::Complete => self.n == 1,
            _ => false,
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.kind.name(), self.n)
    }
}

impl FromStr for FamilySpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (kind, n) = s
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("expected <kind>:<n>, got {s:?}")))?;
        let kind = FamilyKind::NAMES
            .iter()
            .find(|(_, name)| *name == kind.trim())
            .map(|(k, _)| *k)
            .ok_or_else(|| Error::Parse(format!("unknown family {kind:?}")))?;
        let n = n
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad family size {n:?}")))?;
        Self::new(kind, n)
    }
}

pub fn generate(spec: FamilySpec) -> Result<SimpleGraph> {
    spec.validate()?;
    let n = spec.n;
    let edges: Vec<(usize, usize)> = match spec.kind {
        FamilyKind::Path => (1..n).map(|i| (i - 1, i)).collect(),
        FamilyKind::Cycle => (0..n).map(|i| (i, (i + 1) % n)).collect(),
        FamilyKind::Complete => (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect(),
        FamilyKind::Matching => (0..n).map(|i| (2 * i, 2 * i + 1)).collect(),
        FamilyKind::Star => (1..=n).map(|i| (0, i)).collect(),
        FamilyKind::CompleteBipartiteBalanced => (0..n)
            .flat_map(|u| (0..n).map(move |v| (u, n + v)))
            .collect(),
        FamilyKind::Empty => Vec::new(),
    };
    SimpleGraph::new(spec.vertex_count(), edges)
}

/// Structural membership test, linear in the graph size.
pub fn recognize(g: &SimpleGraph, spec: FamilySpec) -> bool {
    if spec.validate().is_err() || g.n() != spec.vertex_count() {
        return false;
    }
    let n = spec.n;
    let deg = g.degrees();
    let m = g.edge_count();
    match spec.kind {
        FamilyKind::Path => {
            m + 1 == n && deg.iter().all(|&d| d <= 2) && g.is_connected()
        }
        FamilyKind::Cycle => deg.iter().all(|&d| d == 2) && g.is_connected(),
        FamilyKind::Complete => m == n * (n - 1) / 2,
        FamilyKind::Matching => deg.iter().all(|&d| d == 1),
        FamilyKind::Star => {
            m == n && (n == 1 || deg.iter().filter(|&&d| d == n).count() == 1)
                && deg.iter().all(|&d| d == 1 || d == n)
        }
        FamilyKind::CompleteBipartiteBalanced => {
            m == n * n && deg.iter().all(|&d| d == n) && is_bipartite(g)
        }
        FamilyKind::Empty => m == 0,
    }
}

fn is_bipartite(g: &SimpleGraph) -> bool {
    let mut side = vec![u8::MAX; g.n()];
    let mut stack = Vec::new();
    for s in 0..g.n() {
        if side[s] != u8::MAX {
            continue;
        }
        side[s] = 0;
        stack.push(s);
        while let Some(u) = stack.pop() {
            for &v in g.neighbors(u) {
                if side[v] == u8::MAX {
                    side[v] = 1 - side[u];
                    stack.push(v);
                } else if side[v] == side[u] {
                    return false;
                }
            }
        }
    }
    true
}

/// A closed integer interval with possibly unknown ends.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub struct Interval {
    pub lo: Option<i64>,
    pub hi: Option<i64>,
}

impl Interval {
    pub fn exact(v: i64) -> Self {
        Self { lo: Some(v), hi: Some(v) }
    }

    pub fn between(lo: i64, hi: i64) -> Self {
        Self { lo: Some(lo), hi: Some(hi) }
    }

    pub fn is_known(&self) -> bool {
        self.lo.is_some() || self.hi.is_some()
    }

    pub fn exact_value(&self) -> Option<i64> {
        match (self.lo, self.hi) {
            (Some(a), Some(b)) if a == b => Some(a),
            _ => None,
        }
    }

    pub fn contains(&self, v: i64) -> bool {
        self.lo.is_none_or(|a| a <= v) && self.hi.is_none_or(|b| v <= b)
    }

    pub fn is_consistent(&self) -> bool {
        match (self.lo, self.hi) {
            (Some(a), Some(b)) => a <= b,
            _ => true,
        }
    }

    fn raise(&mut self, lo: Option<i64>) {
        self.lo = match (self.lo, lo) {
            (Some(a), Some(b)) => Some(a.max(b)),
            (a, b) => a.or(b),
        };
    }

    fn lower(&mut self, hi: Option<i64>) {
        self.hi = match (self.hi, hi) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        };
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(v) = self.exact_value() {
            return write!(f, "{v}");
        }
        let end = |v: Option<i64>| v.map_or("?".to_string(), |v| v.to_string());
        write!(f, "[{}, {}]", end(self.lo), end(self.hi))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub struct KnownValues {
    pub sigma: Option<i64>,
    pub zeta: Option<i64>,
    pub spum: Interval,
    pub ispum: Interval,
    pub sd: Interval,
    pub isd: Interval,
}

impl KnownValues {
    /// Propagates `isd <= sd <= spum` and `isd <= ispum` through the intervals.
    /// spum and ispum entries are only refined, never introduced.
    fn tighten(&mut self) {
        self.sd.lower(self.spum.hi);
        self.isd.lower(self.sd.hi);
        self.isd.lower(self.ispum.hi);
        self.sd.raise(self.isd.lo);
        if self.spum.is_known() {
            self.spum.raise(self.sd.lo);
        }
        if self.ispum.is_known() {
            self.ispum.raise(self.isd.lo);
        }
    }
}

/// spum(P_n) for 7 ≤ n ≤ 15, indexed by `n - 7`.
const PATH_SPUM: [i64; 9] = [12, 15, 19, 19, 23, 23, 27, 27, 31];
/// ispum(C_n) for 4 ≤ n ≤ 14, indexed by `n - 4`.
const CYCLE_ISPUM: [i64; 11] = [7, 5, 8, 11, 14, 17, 17, 21, 25, 26, 31];

pub fn known_values(spec: FamilySpec) -> KnownValues {
    let n = spec.n as i64;
    let mut kv = KnownValues::default();
    let single_vertex = spec.vertex_count() == 1;
    if single_vertex {
        kv.sigma = Some(0);
        kv.zeta = Some(0);
        kv.sd = Interval::exact(0);
        return kv;
    }
    match spec.kind {
        FamilyKind::Path if n == 2 => return known_values(FamilySpec::complete(2)),
        FamilyKind::Path => {
            kv.sigma = Some(1);
            kv.zeta = Some(0);
            kv.spum = match n {
                3..=6 => Interval::exact(2 * n - 3),
                7..=15 => Interval::exact(PATH_SPUM[(n - 7) as usize]),
                _ if n % 2 == 1 => Interval::between(2 * n - 2, 2 * n + 1),
                _ => Interval::between(2 * n - 2, 2 * n - 1),
            };
            kv.sd = match n {
                3..=6 => Interval::exact(2 * n - 3),
                7..=13 => Interval::exact(2 * n - 2),
                _ => Interval::between(2 * n - 3, 2 * n - 2),
            };
            let ispum_hi = match n {
                4 | 6 => Some(2 * n - 4),
                _ if n % 2 == 0 => Some(2 * n - 3),
                _ if n >= 5 => Some(5 * (n - 3) / 2),
                _ => None,
            };
            kv.ispum = Interval { lo: Some(2 * n - 5), hi: ispum_hi };
            let isd_hi = match n {
                4 | 6 => 2 * n - 4,
                _ if n % 2 == 1 => 2 * n - 2,
                _ => 2 * n - 3,
            };
            kv.isd = Interval::between(2 * n - 5, isd_hi);
        }
        FamilyKind::Cycle if n == 3 => return known_values(FamilySpec::complete(3)),
        FamilyKind::Cycle => {
            kv.sigma = Some(if n == 4 { 3 } else { 2 });
            kv.zeta = Some(if n == 4 { 3 } else { 0 });
            // exhaustive search finds no range-9 labeling of C5 with two isolates
            kv.spum = Interval::exact(if n == 5 { 10 } else { 2 * n - 1 });
            kv.sd = Interval::between(2 * n - 2, 2 * n - 1);
            kv.ispum = match n {
                4..=14 => Interval::exact(CYCLE_ISPUM[(n - 4) as usize]),
                _ if n % 2 == 1 => Interval::between(2 * n - 5, 8 * (n - 9)),
                _ => Interval::between(2 * n - 5, 3 * (3 * n - 14) / 2),
            };
            kv.isd = Interval::between(2 * n - 5, 2 * n - 1);
        }
        FamilyKind::Complete => {
            kv.sigma = Some(match n {
                2 => 1,
                3 => 2,
                _ => 2 * n - 3,
            });
            kv.zeta = Some(if n <= 3 { 0 } else { 2 * n - 3 });
            kv.spum = Interval::exact(4 * n - 6);
            kv.sd = Interval::exact(4 * n - 6);
            let integral = if n <= 3 { n - 1 } else { 4 * n - 6 };
            kv.ispum = Interval::exact(integral);
            kv.isd = Interval::exact(integral);
        }
        FamilyKind::Matching => {
            kv.sigma = Some(1);
            kv.zeta = Some(0);
            kv.spum = Interval::exact(4 * n - 2);
            kv.ispum = Interval::exact(match n {
                1 => 1,
                2 => 4,
                _ => 4 * n - 3,
            });
        }
        FamilyKind::Star | FamilyKind::CompleteBipartiteBalanced => {}
        FamilyKind::Empty => return kv,
    }
    if let Ok(g) = generate(spec) {
        let nv = g.n() as i64;
        let spread = (g.max_degree() - g.min_degree()) as i64;
        kv.sd.raise(Some(2 * nv - spread - 2));
        kv.isd.raise(Some(2 * nv - g.max_degree() as i64 - 3));
        kv.sd.lower(Some(64 * nv * nv - 64 * nv + 9));
    }
    kv.tighten();
    kv
}
