//! Exact minimum-range labelings by exhaustive search.
//!
//! For each candidate range `x`, ascending from a proven lower bound, every
//! window `[lo, lo + x]` that can hold an optimal labeling is enumerated in
//! lexicographic order. The first hit in the smallest window is the
//! lexicographically first optimal labeling.

mod enumerate;

use std::fmt;
use std::str::FromStr;
use std::sync::atomic::AtomicU64;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::bounds::{isd_lower_bound, sd_lower_bound};
use crate::error::{Error, Result};
use crate::families::{generate, known_values, recognize, FamilySpec};
use crate::graph::SimpleGraph;
use crate::induce::induce;
use crate::iso::{isomorphic, DEFAULT_ISO_CAP};
use crate::labeling::{Domain, Labeling};

use enumerate::{run_task, Matcher, Problem, Shape, Size, Task};

pub const DEFAULT_BUDGET: u64 = 1 << 32;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Invariant {
    /// Positive labels, exactly σ isolates.
    Spum,
    /// Integral labels, exactly ζ isolates.
    Ispum,
    /// Positive labels, any number of isolates.
    Sd,
    /// Integral labels, any number of isolates.
    Isd,
}

impl Invariant {
    pub fn domain(self) -> Domain {
        match self {
            Invariant::Spum | Invariant::Sd => Domain::Positive,
            Invariant::Ispum | Invariant::Isd => Domain::Integral,
        }
    }

    pub fn fixed_isolates(self) -> bool {
        matches!(self, Invariant::Spum | Invariant::Ispum)
    }

    pub fn name(self) -> &'static str {
        match self {
            Invariant::Spum => "spum",
            Invariant::Ispum => "ispum",
            Invariant::Sd => "sd",
            Invariant::Isd => "isd",
        }
    }
}

impl fmt::Display for Invariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Invariant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "spum" => Ok(Invariant::Spum),
            "ispum" => Ok(Invariant::Ispum),
            "sd" => Ok(Invariant::Sd),
            "isd" => Ok(Invariant::Isd),
            _ => Err(Error::Parse(format!("unknown invariant {s:?}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Target {
    Family(FamilySpec),
    Graph(SimpleGraph),
}

impl Target {
    pub fn graph(&self) -> Result<SimpleGraph> {
        match self {
            Target::Family(spec) => generate(*spec),
            Target::Graph(g) => Ok(g.clone()),
        }
    }
}

impl fmt::Display for Target {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Target::Family(spec) => write!(f, "{spec}"),
            Target::Graph(g) => f.write_str(&g.to_json()),
        }
    }
}

impl From<FamilySpec> for Target {
    fn from(spec: FamilySpec) -> Self {
        Target::Family(spec)
    }
}

impl From<SimpleGraph> for Target {
    fn from(g: SimpleGraph) -> Self {
        Target::Graph(g)
    }
}

#[derive(Debug, Clone)]
pub struct SearchProblem {
    pub invariant: Invariant,
    pub target: Target,
    /// σ or ζ; taken from the family tables when absent.
    pub isolates: Option<usize>,
    pub max_range: Option<i64>,
    /// Skip ranges below this; the certificate then no longer covers them.
    pub start_range: Option<i64>,
    pub jobs: usize,
    pub budget: u64,
    /// Require `[min L, 2 min L]` in the core at the equality range.
    pub doubling_prune: bool,
}

impl SearchProblem {
    pub fn new(invariant: Invariant, target: impl Into<Target>) -> Self {
        Self {
            invariant,
            target: target.into(),
            isolates: None,
            max_range: None,
            start_range: None,
            jobs: 1,
            budget: DEFAULT_BUDGET,
            doubling_prune: false,
        }
    }

    pub fn isolates(mut self, k: usize) -> Self {
        self.isolates = Some(k);
        self
    }

    pub fn max_range(mut self, x: i64) -> Self {
        self.max_range = Some(x);
        self
    }

    pub fn start_range(mut self, x: i64) -> Self {
        self.start_range = Some(x);
        self
    }

    pub fn jobs(mut self, jobs: usize) -> Self {
        self.jobs = jobs.max(1);
        self
    }

    pub fn budget(mut self, budget: u64) -> Self {
        self.budget = budget;
        self
    }

    pub fn doubling_prune(mut self, on: bool) -> Self {
        self.doubling_prune = on;
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SearchCertificate {
    pub invariant: Invariant,
    pub target: String,
    pub value: i64,
    pub witness: Labeling,
    pub exhausted_below: bool,
    pub candidates_examined: u64,
    pub window_bound_used: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_time_ms: Option<u64>,
}

impl SearchCertificate {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("certificate serializes")
    }

    /// The same certificate without timing, for byte-stable output.
    pub fn without_timing(&self) -> Self {
        Self { wall_time_ms: None, ..self.clone() }
    }
}

/// The first range worth trying.
pub fn starting_range(invariant: Invariant, g: &SimpleGraph, isolates: usize) -> Result<i64> {
    let n = g.n() as i64;
    let k = isolates as i64;
    Ok(match invariant {
        Invariant::Spum => sd_lower_bound(g)?.max(n + k - 1),
        Invariant::Sd => sd_lower_bound(g)?.max(n),
        Invariant::Ispum => isd_lower_bound(g)?.max(n + k - 1),
        Invariant::Isd => isd_lower_bound(g)?.max(n - 1),
    }
    .max(1))
}

/// Smallest window minimum considered at range `x`.
fn window_starts(domain: Domain, x: i64, n: i64) -> (i64, i64) {
    // an optimal one-signed labeling has its least label on a vertex,
    // which forces min L <= x - n + 1
    let positive_top = x - n + 1;
    match domain {
        Domain::Positive => (1, positive_top),
        Domain::Integral => {
            let mirror_top = (-x).div_euclid(2);
            let bottom = if positive_top >= 1 { -positive_top - x } else { -x };
            (bottom, mirror_top)
        }
    }
}

fn window_description(domain: Domain) -> &'static str {
    match domain {
        Domain::Positive => "windows [a, a+x] with 1 <= a <= x-n+1",
        Domain::Integral => {
            "windows [m, m+x] with -(2x-n+1) <= m <= floor(-x/2); the rest are negations"
        }
    }
}

fn tasks_for(domain: Domain, x: i64, n: i64) -> Vec<Task> {
    let (from, to) = window_starts(domain, x, n);
    let mut tasks = Vec::new();
    for lo in from..=to {
        let hi = lo + x;
        tasks.extend((lo + 1..hi).map(|c| Task { lo, hi, second: Some(c) }));
        tasks.push(Task { lo, hi, second: None });
    }
    tasks
}

fn run_level(
    problem: &Problem<'_>,
    tasks: &[Task],
    pool: Option<&rayon::ThreadPool>,
) -> Result<(u64, Option<Vec<i64>>)> {
    let mut nodes = 0;
    let Some(pool) = pool else {
        for &t in tasks {
            let out = run_task(problem, t)?;
            nodes += out.nodes;
            if out.witness.is_some() {
                return Ok((nodes, out.witness));
            }
        }
        return Ok((nodes, None));
    };
    let batch = pool.current_num_threads() * 8;
    for chunk in tasks.chunks(batch) {
        let outs: Vec<_> =
            pool.install(|| chunk.par_iter().map(|&t| run_task(problem, t)).collect());
        // merge in task order so counts and witness match a serial run
        for out in outs {
            let out = out?;
            nodes += out.nodes;
            if out.witness.is_some() {
                return Ok((nodes, out.witness));
            }
        }
    }
    Ok((nodes, None))
}

pub fn solve(p: &SearchProblem) -> Result<SearchCertificate> {
    let clock = Instant::now();
    let g = p.target.graph()?;
    if g.has_isolated_vertices() {
        return Err(Error::IsolatedVertices);
    }
    if g.n() < 2 {
        return Err(Error::InvalidGraph("need at least two vertices".into()));
    }
    let matcher = match &p.target {
        Target::Family(spec) => Matcher::Family(*spec),
        Target::Graph(h) => {
            if h.n() > DEFAULT_ISO_CAP {
                return Err(Error::GraphTooLarge { n: h.n(), cap: DEFAULT_ISO_CAP });
            }
            Matcher::Graph(h.clone())
        }
    };
    let isolates = if p.invariant.fixed_isolates() {
        let known = match (&p.target, p.invariant) {
            (Target::Family(spec), Invariant::Spum) => known_values(*spec).sigma,
            (Target::Family(spec), Invariant::Ispum) => known_values(*spec).zeta,
            _ => None,
        };
        p.isolates
            .or(known.map(|k| k as usize))
            .ok_or(Error::UnknownIsolateCount)?
    } else {
        0
    };
    let n = g.n();
    let size = match p.invariant {
        Invariant::Spum | Invariant::Ispum => Size::Exact(n + isolates),
        Invariant::Sd => Size::AtLeast(n + 1),
        Invariant::Isd => Size::AtLeast(n),
    };
    let proven = starting_range(p.invariant, &g, isolates)?;
    let start = p.start_range.map_or(proven, |s| s.max(proven));
    let domain = p.invariant.domain();
    let equality_range = sd_lower_bound(&g)?;
    let shape = Shape::of(&g);
    let spent = AtomicU64::new(0);
    let pool = if p.jobs > 1 {
        Some(
            rayon::ThreadPoolBuilder::new()
                .num_threads(p.jobs)
                .build()
                .map_err(|e| Error::InvalidParameter(e.to_string()))?,
        )
    } else {
        None
    };
    let mut examined = 0;
    let mut x = start;
    loop {
        if p.max_range.is_some_and(|m| x > m) {
            return Err(Error::Infeasible { max_range: p.max_range.unwrap() });
        }
        let problem = Problem {
            shape: &shape,
            matcher: &matcher,
            size,
            budget: p.budget,
            spent: &spent,
            doubling_prefix: p.doubling_prune && domain == Domain::Positive && x == equality_range,
        };
        let tasks = tasks_for(domain, x, n as i64);
        let (nodes, found) = run_level(&problem, &tasks, pool.as_ref())?;
        examined += nodes;
        if let Some(labels) = found {
            let witness = Labeling::new(labels, domain)?;
            confirm(&witness, &matcher, p.invariant.fixed_isolates().then_some(isolates))?;
            return Ok(SearchCertificate {
                invariant: p.invariant,
                target: p.target.to_string(),
                value: x,
                witness,
                exhausted_below: start == proven,
                candidates_examined: examined,
                window_bound_used: window_description(domain).to_string(),
                wall_time_ms: Some(clock.elapsed().as_millis() as u64),
            });
        }
        x += 1;
    }
}

fn confirm(witness: &Labeling, matcher: &Matcher, isolates: Option<usize>) -> Result<()> {
    let r = induce(witness);
    let shape_ok = match matcher {
        Matcher::Family(spec) => recognize(&r.core_graph, *spec),
        Matcher::Graph(g) => isomorphic(&r.core_graph, g)?,
    };
    if !shape_ok || isolates.is_some_and(|k| k != r.isolate_count) {
        return Err(Error::SelfCheckFailed(format!("search witness {witness} is invalid")));
    }
    Ok(())
}

pub fn search_spum(g: &SimpleGraph, sigma: usize) -> Result<SearchCertificate> {
    solve(&SearchProblem::new(Invariant::Spum, g.clone()).isolates(sigma))
}

pub fn search_ispum(g: &SimpleGraph, zeta: usize) -> Result<SearchCertificate> {
    solve(&SearchProblem::new(Invariant::Ispum, g.clone()).isolates(zeta))
}

pub fn search_sd(g: &SimpleGraph) -> Result<SearchCertificate> {
    solve(&SearchProblem::new(Invariant::Sd, g.clone()))
}

pub fn search_isd(g: &SimpleGraph) -> Result<SearchCertificate> {
    solve(&SearchProblem::new(Invariant::Isd, g.clone()))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableName {
    /// spum of paths, from `n = 3`.
    SpumPaths,
    /// ispum of cycles, from `n = 4`.
    IspumCycles,
}

impl FromStr for TableName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "spum-paths" => Ok(TableName::SpumPaths),
            "ispum-cycles" => Ok(TableName::IspumCycles),
            _ => Err(Error::Parse(format!("unknown table {s:?}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TableRow {
    pub n: usize,
    pub witness: Labeling,
    pub value: i64,
}

pub fn reproduce_table(name: TableName, n_max: usize, jobs: usize) -> Result<Vec<TableRow>> {
    reproduce_table_with(name, n_max, jobs, DEFAULT_BUDGET)
}

pub fn reproduce_table_with(
    name: TableName,
    n_max: usize,
    jobs: usize,
    budget: u64,
) -> Result<Vec<TableRow>> {
    let (first, invariant, family): (usize, _, fn(usize) -> FamilySpec) = match name {
        TableName::SpumPaths => (3, Invariant::Spum, FamilySpec::path),
        TableName::IspumCycles => (4, Invariant::Ispum, FamilySpec::cycle),
    };
    (first..=n_max)
        .map(|n| {
            let cert = solve(&SearchProblem::new(invariant, family(n)).jobs(jobs).budget(budget))?;
            Ok(TableRow { n, witness: cert.witness, value: cert.value })
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Conjecture {
    /// spum(P_n) is 2n+1 for odd n and 2n-1 for even n, n ≥ 8.
    SpumPaths,
    /// sd(P_n) is 2n-3 for 3 ≤ n ≤ 6 and 2n-2 from 7 on.
    SdPaths,
}

impl FromStr for Conjecture {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "spum-paths" => Ok(Conjecture::SpumPaths),
            "sd-paths" => Ok(Conjecture::SdPaths),
            _ => Err(Error::Parse(format!("unknown conjecture {s:?}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConjectureReport {
    pub conjecture: Conjecture,
    pub n: usize,
    pub conjectured: i64,
    pub value: i64,
    pub matches: bool,
    pub witness: Labeling,
}

pub fn check_conjecture(name: Conjecture, n: usize, jobs: usize) -> Result<ConjectureReport> {
    check_conjecture_with(name, n, jobs, DEFAULT_BUDGET)
}

pub fn check_conjecture_with(
    name: Conjecture,
    n: usize,
    jobs: usize,
    budget: u64,
) -> Result<ConjectureReport> {
    let m = n as i64;
    let (conjectured, invariant) = match name {
        Conjecture::SpumPaths if n >= 8 => {
            (if n % 2 == 1 { 2 * m + 1 } else { 2 * m - 1 }, Invariant::Spum)
        }
        Conjecture::SdPaths if n >= 3 => (if n <= 6 { 2 * m - 3 } else { 2 * m - 2 }, Invariant::Sd),
        _ => return Err(Error::InvalidParameter(format!("n = {n} is outside the conjecture"))),
    };
    let cert =
        solve(&SearchProblem::new(invariant, FamilySpec::path(n)).jobs(jobs).budget(budget))?;
    Ok(ConjectureReport {
        conjecture: name,
        n,
        conjectured,
        value: cert.value,
        matches: cert.value == conjectured,
        witness: cert.witness,
    })
}
