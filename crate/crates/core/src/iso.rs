//! Exact isomorphism for small graphs: colour refinement, then backtracking.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::graph::SimpleGraph;

pub const DEFAULT_ISO_CAP: usize = 24;

pub fn isomorphic(g: &SimpleGraph, h: &SimpleGraph) -> Result<bool> {
    isomorphic_with_cap(g, h, DEFAULT_ISO_CAP)
}

pub fn isomorphic_with_cap(g: &SimpleGraph, h: &SimpleGraph, cap: usize) -> Result<bool> {
    Ok(find_isomorphism_with_cap(g, h, cap)?.is_some())
}

/// `map[v]` is the vertex of `h` matched to vertex `v` of `g`.
pub fn find_isomorphism(g: &SimpleGraph, h: &SimpleGraph) -> Result<Option<Vec<usize>>> {
    find_isomorphism_with_cap(g, h, DEFAULT_ISO_CAP)
}

pub fn find_isomorphism_with_cap(
    g: &SimpleGraph,
    h: &SimpleGraph,
    cap: usize,
) -> Result<Option<Vec<usize>>> {
    for x in [g, h] {
        if x.n() > cap {
            return Err(Error::GraphTooLarge { n: x.n(), cap });
        }
    }
    if g.n() != h.n() || g.edge_count() != h.edge_count() {
        return Ok(None);
    }
    let mut dg = g.degrees();
    let mut dh = h.degrees();
    dg.sort_unstable();
    dh.sort_unstable();
    if dg != dh {
        return Ok(None);
    }
    let (cg, ch) = refine(g, h);
    let mut hist_g = cg.clone();
    let mut hist_h = ch.clone();
    hist_g.sort_unstable();
    hist_h.sort_unstable();
    if hist_g != hist_h {
        return Ok(None);
    }
    Ok(Matcher::new(g, h, cg, ch).run())
}

/// Joint colour refinement so classes are comparable across both graphs.
fn refine(g: &SimpleGraph, h: &SimpleGraph) -> (Vec<usize>, Vec<usize>) {
    let mut cg = g.degrees();
    let mut ch = h.degrees();
    let mut classes = count_classes(&cg, &ch);
    loop {
        let sig = |x: &SimpleGraph, c: &[usize], v: usize| {
            let mut nb: Vec<usize> = x.neighbors(v).iter().map(|&u| c[u]).collect();
            nb.sort_unstable();
            (c[v], nb)
        };
        let sg: Vec<_> = (0..g.n()).map(|v| sig(g, &cg, v)).collect();
        let sh: Vec<_> = (0..h.n()).map(|v| sig(h, &ch, v)).collect();
        let keys: BTreeSet<_> = sg.iter().chain(sh.iter()).cloned().collect();
        let rank: BTreeMap<_, usize> = keys.into_iter().enumerate().map(|(i, k)| (k, i)).collect();
        cg = sg.iter().map(|s| rank[s]).collect();
        ch = sh.iter().map(|s| rank[s]).collect();
        let now = count_classes(&cg, &ch);
        if now == classes {
            return (cg, ch);
        }
        classes = now;
    }
}

fn count_classes(a: &[usize], b: &[usize]) -> usize {
    let mut all: Vec<usize> = a.iter().chain(b).copied().collect();
    all.sort_unstable();
    all.dedup();
    all.len()
}

struct Matcher<'a> {
    g: &'a SimpleGraph,
    h: &'a SimpleGraph,
    cg: Vec<usize>,
    ch: Vec<usize>,
    order: Vec<usize>,
    map: Vec<usize>,
    used: Vec<bool>,
}

impl<'a> Matcher<'a> {
    fn new(g: &'a SimpleGraph, h: &'a SimpleGraph, cg: Vec<usize>, ch: Vec<usize>) -> Self {
        let n = g.n();
        let mut class_size = BTreeMap::new();
        for &c in &cg {
            *class_size.entry(c).or_insert(0usize) += 1;
        }
        let mut order = Vec::with_capacity(n);
        let mut placed = vec![false; n];
        let mut links = vec![0usize; n];
        for _ in 0..n {
            let v = (0..n)
                .filter(|&v| !placed[v])
                .min_by_key(|&v| (std::cmp::Reverse(links[v]), class_size[&cg[v]], v))
                .expect("unplaced vertex remains");
            placed[v] = true;
            order.push(v);
            for &u in g.neighbors(v) {
                links[u] += 1;
            }
        }
        Self {
            g,
            h,
            cg,
            ch,
            order,
            map: vec![usize::MAX; n],
            used: vec![false; n],
        }
    }

    fn run(mut self) -> Option<Vec<usize>> {
        if self.extend(0) {
            Some(self.map)
        } else {
            None
        }
    }

    fn extend(&mut self, depth: usize) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let v = self.order[depth];
        for c in 0..self.h.n() {
            if self.used[c] || self.ch[c] != self.cg[v] || !self.consistent(v, c, depth) {
                continue;
            }
            self.map[v] = c;
            self.used[c] = true;
            if self.extend(depth + 1) {
                return true;
            }
            self.used[c] = false;
            self.map[v] = usize::MAX;
        }
        false
    }

    fn consistent(&self, v: usize, c: usize, depth: usize) -> bool {
        self.order[..depth]
            .iter()
            .all(|&w| self.g.has_edge(v, w) == self.h.has_edge(c, self.map[w]))
    }
}
