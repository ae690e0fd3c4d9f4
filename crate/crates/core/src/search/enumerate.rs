//! Depth-first enumeration of label sets inside one window `[lo, hi]`.
//!
//! Labels are added in ascending order with `hi` present from the start, so
//! every sum relation `u + v = w` is detected exactly once, when the last of
//! its three labels arrives. Degrees only ever grow, which makes the degree
//! profile of the target a sound prune at every node.

use std::sync::atomic::{AtomicU64, Ordering};

use crate::error::{Error, Result};
use crate::families::{recognize, FamilySpec};
use crate::graph::SimpleGraph;
use crate::iso::isomorphic;

/// How a candidate core graph is compared with the target.
#[derive(Debug, Clone)]
pub(crate) enum Matcher {
    Family(FamilySpec),
    Graph(SimpleGraph),
}

impl Matcher {
    fn matches(&self, core: &SimpleGraph) -> bool {
        match self {
            Matcher::Family(spec) => recognize(core, *spec),
            Matcher::Graph(g) => isomorphic(core, g).unwrap_or(false),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Size {
    Exact(usize),
    AtLeast(usize),
}

/// Degree profile of the target.
#[derive(Debug, Clone)]
pub(crate) struct Shape {
    pub max_deg: usize,
    /// `at_least[d]`: vertices of degree at least `d`.
    pub at_least: Vec<usize>,
}

impl Shape {
    pub fn of(g: &SimpleGraph) -> Self {
        let max_deg = g.max_degree();
        let mut at_least = vec![0; max_deg + 2];
        for d in g.degrees() {
            for slot in &mut at_least[..=d] {
                *slot += 1;
            }
        }
        Self { max_deg, at_least }
    }
}

/// Everything shared by the tasks of one search.
pub(crate) struct Problem<'a> {
    pub shape: &'a Shape,
    pub matcher: &'a Matcher,
    pub size: Size,
    pub budget: u64,
    pub spent: &'a AtomicU64,
    /// When set, all of `[lo, 2lo]` must be vertex labels.
    pub doubling_prefix: bool,
}

/// One unit of work: window `[lo, hi]`, optionally with its second label fixed.
#[derive(Debug, Clone, Copy)]
pub(crate) struct Task {
    pub lo: i64,
    pub hi: i64,
    /// `None` means the two-label set `{lo, hi}`.
    pub second: Option<i64>,
}

pub(crate) struct Outcome {
    pub nodes: u64,
    pub witness: Option<Vec<i64>>,
}

const FLUSH: u64 = 1 << 12;

struct Dfs<'p, 'a> {
    p: &'p Problem<'a>,
    lo: i64,
    hi: i64,
    present: Vec<bool>,
    deg: Vec<u32>,
    at_least: Vec<usize>,
    members: Vec<i64>,
    edges: Vec<(i64, i64)>,
    bumped: Vec<usize>,
    /// Labels up to this value must all be present.
    forced_to: i64,
    /// Labels up to this value must all be vertex labels.
    core_to: i64,
    nodes: u64,
    unflushed: u64,
}

impl<'p, 'a> Dfs<'p, 'a> {
    fn new(p: &'p Problem<'a>, lo: i64, hi: i64) -> Self {
        let width = (hi - lo + 1) as usize;
        let core_to = if p.doubling_prefix && lo > 0 { (2 * lo).min(hi) } else { lo };
        let forced_to = core_to.min(hi - 1).max(lo);
        let mut dfs = Self {
            p,
            lo,
            hi,
            present: vec![false; width],
            deg: vec![0; width],
            at_least: vec![0; p.shape.max_deg + 2],
            members: vec![hi],
            edges: Vec::new(),
            bumped: Vec::new(),
            forced_to,
            core_to,
            nodes: 0,
            unflushed: 0,
        };
        dfs.present[width - 1] = true;
        dfs
    }

    fn has(&self, label: i64) -> bool {
        label >= self.lo && label <= self.hi && self.present[(label - self.lo) as usize]
    }

    fn bump(&mut self, label: i64) -> bool {
        let i = (label - self.lo) as usize;
        self.deg[i] += 1;
        self.bumped.push(i);
        let d = self.deg[i] as usize;
        if d > self.p.shape.max_deg {
            return false;
        }
        self.at_least[d] += 1;
        self.at_least[d] <= self.p.shape.at_least[d]
    }

    /// Adds `c` above every current member except `hi`; false if a prune fires.
    fn push(&mut self, c: i64) -> Result<bool> {
        self.count()?;
        self.present[(c - self.lo) as usize] = true;
        let mut ok = true;
        let k = self.members.len();
        for idx in 0..k {
            let u = self.members[idx];
            if self.has(u + c) {
                self.edges.push((u.min(c), u.max(c)));
                ok &= self.bump(u);
                ok &= self.bump(c);
            }
            let w = c - u;
            if u < w && w != c && self.has(w) {
                self.edges.push((u, w));
                ok &= self.bump(u);
                ok &= self.bump(w);
            }
        }
        self.members.push(c);
        Ok(ok)
    }

    fn pop(&mut self, c: i64, edges: usize, bumped: usize) {
        self.members.pop();
        self.present[(c - self.lo) as usize] = false;
        self.edges.truncate(edges);
        while self.bumped.len() > bumped {
            let i = self.bumped.pop().unwrap();
            let d = self.deg[i] as usize;
            if d <= self.p.shape.max_deg {
                self.at_least[d] -= 1;
            }
            self.deg[i] -= 1;
        }
    }

    fn count(&mut self) -> Result<()> {
        self.nodes += 1;
        self.unflushed += 1;
        if self.unflushed == FLUSH {
            self.flush()?;
        }
        Ok(())
    }

    fn flush(&mut self) -> Result<()> {
        let total = self.p.spent.fetch_add(self.unflushed, Ordering::Relaxed) + self.unflushed;
        self.unflushed = 0;
        if total > self.p.budget {
            return Err(Error::BudgetExceeded {
                budget: self.p.budget,
                examined: total,
                range: self.hi - self.lo,
            });
        }
        Ok(())
    }

    /// Tries `c` as the next label, then everything above it.
    fn descend(&mut self, c: i64) -> Result<Option<Vec<i64>>> {
        let (edges, bumped) = (self.edges.len(), self.bumped.len());
        let found = if self.push(c)? { self.explore(c)? } else { None };
        self.pop(c, edges, bumped);
        Ok(found)
    }

    /// Extensions in ascending order, then the set as it stands.
    fn explore(&mut self, last: i64) -> Result<Option<Vec<i64>>> {
        let m = self.members.len();
        let cap = match self.p.size {
            Size::Exact(s) => s,
            Size::AtLeast(_) => usize::MAX,
        };
        if m < cap {
            let top = match self.p.size {
                // leave room for the labels still to come
                Size::Exact(s) => self.hi - (s - m) as i64,
                Size::AtLeast(_) => self.hi - 1,
            };
            let top = if last < self.forced_to { top.min(last + 1) } else { top };
            for c in last + 1..=top {
                if let Some(w) = self.descend(c)? {
                    return Ok(Some(w));
                }
            }
        }
        Ok(self.leaf(last).then(|| self.sorted_members()))
    }

    fn leaf(&self, last: i64) -> bool {
        let sized = match self.p.size {
            Size::Exact(s) => self.members.len() == s,
            Size::AtLeast(s) => self.members.len() >= s,
        };
        if !sized || last < self.forced_to {
            return false;
        }
        let shape = self.p.shape;
        if (1..=shape.max_deg).any(|d| self.at_least[d] != shape.at_least[d]) {
            return false;
        }
        if self.p.doubling_prefix
            && (self.lo..=self.core_to).any(|x| self.deg[(x - self.lo) as usize] == 0)
        {
            return false;
        }
        self.p.matcher.matches(&self.core_graph())
    }

    fn core_graph(&self) -> SimpleGraph {
        let mut index = vec![usize::MAX; self.present.len()];
        let mut n = 0;
        for (i, &d) in self.deg.iter().enumerate() {
            if d > 0 {
                index[i] = n;
                n += 1;
            }
        }
        let at = |l: i64| index[(l - self.lo) as usize];
        let set = self.edges.iter().map(|&(u, v)| (at(u), at(v))).collect();
        SimpleGraph::from_set(n, set)
    }

    fn sorted_members(&self) -> Vec<i64> {
        let mut v = self.members.clone();
        v.sort_unstable();
        v
    }
}

/// Runs one task to its first hit in lexicographic order, or to exhaustion.
pub(crate) fn run_task(p: &Problem<'_>, task: Task) -> Result<Outcome> {
    let mut dfs = Dfs::new(p, task.lo, task.hi);
    let result = (|| {
        let (e0, b0) = (dfs.edges.len(), dfs.bumped.len());
        if !dfs.push(task.lo)? {
            return Ok(None);
        }
        let found = match task.second {
            Some(c) => {
                let room = match p.size {
                    Size::Exact(s) => s >= 3 && c <= task.hi - (s - 2) as i64,
                    Size::AtLeast(_) => true,
                };
                let allowed = task.lo >= dfs.forced_to || c == task.lo + 1;
                if room && allowed {
                    dfs.descend(c)?
                } else {
                    None
                }
            }
            None => dfs.leaf(task.lo).then(|| dfs.sorted_members()),
        };
        dfs.pop(task.lo, e0, b0);
        Ok(found)
    })();
    let flushed = dfs.flush();
    let witness = result?;
    flushed?;
    Ok(Outcome { nodes: dfs.nodes, witness })
}
