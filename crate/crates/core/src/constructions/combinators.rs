//! Operations that turn labelings of graphs into labelings of derived graphs.

use std::collections::BTreeSet;

use super::{
    checked_add, checked_mul, collect_labels, embedding, finish, require_positive, sum_labels,
    ConstructionReport, Expect, Isolates,
};
use crate::error::{Error, Result};
use crate::graph::SimpleGraph;
use crate::induce::induce;
use crate::labeling::{Domain, Labeling};

/// A labeling split into per-vertex labels and the edge-sum labels.
struct Split {
    vertex: Vec<i64>,
    sums: Vec<i64>,
    min: i64,
    range: i64,
}

fn split(l: &Labeling, g: &SimpleGraph) -> Result<Split> {
    require_positive(l)?;
    Ok(Split {
        vertex: embedding(l, g)?,
        sums: sum_labels(l),
        min: l.min().unwrap_or(0),
        range: l.range(),
    })
}

/// `(S + x, T + 2x)` as vertex labels and edge labels.
fn shifted(s: &Split, x: i64) -> Result<(Vec<i64>, Vec<i64>)> {
    let vertex = s
        .vertex
        .iter()
        .map(|&v| checked_add(v, x))
        .collect::<Result<Vec<_>>>()?;
    let x2 = checked_mul(x, 2)?;
    let sums = s
        .sums
        .iter()
        .map(|&t| checked_add(t, x2))
        .collect::<Result<Vec<_>>>()?;
    Ok((vertex, sums))
}

fn positive(parts: impl IntoIterator<Item = i64>) -> Result<Labeling> {
    collect_labels(parts, Domain::Positive)
}

/// Shifts vertex labels by `x` and edge-sum labels by `2x`; other isolated labels are dropped.
pub fn translate(l: &Labeling, g: &SimpleGraph, x: i64) -> Result<Labeling> {
    let s = split(l, g)?;
    let threshold = s.range - 1 - s.min;
    if x < threshold {
        return Err(Error::InvalidParameter(format!(
            "shift {x} is below the threshold {threshold}"
        )));
    }
    let (vertex, sums) = shifted(&s, x)?;
    let out = positive(vertex.iter().copied().chain(sums))?;
    let check = finish(
        out,
        g.clone(),
        Expect::Mapped(&vertex),
        Isolates::AtLeast(0),
        i64::MAX,
    )?;
    Ok(check.labeling)
}

/// `L1 ∪ c·L2` with `c = 4·range(L1) - 2`.
pub fn disjoint_union_scaled(
    l1: &Labeling,
    g1: &SimpleGraph,
    l2: &Labeling,
    g2: &SimpleGraph,
) -> Result<ConstructionReport> {
    let s1 = split(l1, g1)?;
    let s2 = split(l2, g2)?;
    let max1 = s1.min + s1.range;
    let c = (4 * s1.range - 2).max(2 * max1);
    let scaled = l2.scaled(c)?;
    let mut vertex = s1.vertex.clone();
    for &v in &s2.vertex {
        vertex.push(checked_mul(v, c)?);
    }
    let out = positive(l1.labels().iter().chain(scaled.labels()).copied())?;
    let bound = 2 * (2 * s1.range - 1) * (2 * s2.range - 1) - 1;
    finish(
        out,
        g1.disjoint_union(g2),
        Expect::Mapped(&vertex),
        Isolates::AtLeast(1),
        bound,
    )
}

/// Translates the wider labeling to start just above its range and the other far above it.
pub fn disjoint_union_translated(
    l1: &Labeling,
    g1: &SimpleGraph,
    l2: &Labeling,
    g2: &SimpleGraph,
) -> Result<ConstructionReport> {
    let a = split(l1, g1)?;
    let b = split(l2, g2)?;
    let swap = a.range < b.range;
    let (wide, narrow) = if swap { (&b, &a) } else { (&a, &b) };
    let r1 = wide.range;
    let (v_wide, e_wide) = shifted(wide, r1 + 1 - wide.min)?;
    let (v_narrow, e_narrow) = shifted(narrow, 6 * r1 + 2 - narrow.min)?;
    let (v1, v2) = if swap { (&v_narrow, &v_wide) } else { (&v_wide, &v_narrow) };
    let vertex: Vec<i64> = v1.iter().chain(v2).copied().collect();
    let out = positive(
        vertex
            .iter()
            .copied()
            .chain(e_wide)
            .chain(e_narrow),
    )?;
    let bound = 11 * r1 + narrow.range + 2;
    finish(
        out,
        g1.disjoint_union(g2),
        Expect::Mapped(&vertex),
        Isolates::AtLeast(2),
        bound,
    )
}

/// Pads the labeling so it induces `G` with at least `k` isolates.
pub fn add_isolated(l: &Labeling, g: &SimpleGraph, k: usize) -> Result<ConstructionReport> {
    if k < 1 {
        return Err(Error::InvalidParameter("k must be at least 1".into()));
    }
    let s = split(l, g)?;
    let r = s.range;
    let kk = k as i64;
    let bound = kk.max(4 * r) + kk - 5;
    let isolates = induce(l).isolate_count;
    if isolates >= k {
        return finish(
            l.clone(),
            g.clone(),
            Expect::Mapped(&s.vertex),
            Isolates::AtLeast(k),
            bound,
        );
    }
    let block = if kk <= 4 * r {
        4 * r - 2..=4 * r + kk - 4
    } else {
        kk - 2..=2 * kk - 4
    };
    let padded = positive(l.labels().iter().copied().chain(block))?;
    let direct = finish(
        padded,
        g.clone(),
        Expect::Mapped(&s.vertex),
        Isolates::AtLeast(k),
        bound,
    );
    if direct.is_ok() {
        return direct;
    }
    // New labels can differ by an old label, so old + new lands on new.
    // Shift instead so vertex labels start above the padding width.
    let t = s.sums.len() as i64;
    let start = (kk + r - 1 - t).max(r - 1);
    let (vertex, sums) = shifted(&s, start - s.min)?;
    let need = (kk - t).max(0);
    let pad = start + r..start + r + need;
    let out = positive(vertex.iter().copied().chain(sums).chain(pad))?;
    finish(
        out,
        g.clone(),
        Expect::Mapped(&vertex),
        Isolates::AtLeast(k),
        bound,
    )
}

/// Even relabeling of `G` plus one odd vertex adjacent to `neighbors`.
struct Extension {
    /// Labels of the old vertices, then the new vertex.
    vertex: Vec<i64>,
    labels: BTreeSet<i64>,
    range_bound: i64,
}

fn extend(s: &Split, neighbors: &[usize]) -> Result<Extension> {
    let r = s.range;
    let (v, e) = shifted(s, r - s.min)?;
    let mut vertex = v.iter().map(|&x| checked_mul(x, 2)).collect::<Result<Vec<_>>>()?;
    let mut labels: BTreeSet<i64> = vertex.iter().copied().collect();
    for x in e {
        labels.insert(checked_mul(x, 2)?);
    }
    let b = 2 * r + 1;
    for &u in neighbors {
        let label = vertex
            .get(u)
            .ok_or_else(|| Error::InvalidParameter(format!("no vertex {u}")))?;
        labels.insert(b + label);
    }
    labels.insert(b);
    vertex.push(b);
    Ok(Extension {
        vertex,
        labels,
        range_bound: 4 * r - 1,
    })
}

fn with_new_vertex(g: &SimpleGraph, neighbors: &[usize]) -> Result<SimpleGraph> {
    let n = g.n();
    let mut edges: Vec<(usize, usize)> = g.edges().to_vec();
    for &u in neighbors {
        edges.push((u, n));
    }
    SimpleGraph::new(n + 1, edges)
}

/// Adds one vertex adjacent exactly to `neighbors`; the new vertex is numbered `n`.
pub fn add_vertex(
    l: &Labeling,
    g: &SimpleGraph,
    neighbors: &[usize],
) -> Result<ConstructionReport> {
    let s = split(l, g)?;
    let neighbors: Vec<usize> = neighbors.iter().copied().collect::<BTreeSet<_>>().into_iter().collect();
    let ext = extend(&s, &neighbors)?;
    let target = with_new_vertex(g, &neighbors)?;
    finish(
        positive(ext.labels)?,
        target,
        Expect::Mapped(&ext.vertex),
        Isolates::AtLeast(1),
        ext.range_bound,
    )
}

/// Join of `G1` and `G2`: every vertex of one side adjacent to every vertex of the other.
pub fn join(
    l1: &Labeling,
    g1: &SimpleGraph,
    l2: &Labeling,
    g2: &SimpleGraph,
) -> Result<ConstructionReport> {
    let a = split(l1, g1)?;
    let b = split(l2, g2)?;
    let swap = a.range > b.range;
    let (small, big) = if swap { (&b, &a) } else { (&a, &b) };
    let (r1, r2) = (small.range, big.range);
    let (v_small, e_small) = shifted(small, r1 + r2 - small.min)?;
    let (v_big, e_big) = shifted(big, 6 * r1 + 4 * r2 - 2 - big.min)?;
    let lo = v_small.iter().min().unwrap() + v_big.iter().min().unwrap();
    let hi = v_small.iter().max().unwrap() + v_big.iter().max().unwrap();
    let (v1, v2) = if swap { (&v_big, &v_small) } else { (&v_small, &v_big) };
    let vertex: Vec<i64> = v1.iter().chain(v2).copied().collect();
    let out = positive(
        vertex
            .iter()
            .copied()
            .chain(e_small)
            .chain(e_big)
            .chain(lo..=hi),
    )?;
    finish(
        out,
        g1.join(g2),
        Expect::Mapped(&vertex),
        Isolates::AtLeast(1),
        11 * r1 + 8 * r2 - 5,
    )
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Modification {
    DeleteVertex(usize),
    /// Keep exactly these vertices, renumbered in ascending order.
    InducedSubgraph(Vec<usize>),
    DeleteEdge(usize, usize),
    /// Merge the endpoints; the merged vertex is numbered last.
    ContractEdge(usize, usize),
    AddEdge(usize, usize),
}

/// Applies a vertex or edge modification, keeping the labeling valid.
pub fn modify(l: &Labeling, g: &SimpleGraph, op: &Modification) -> Result<ConstructionReport> {
    let s = split(l, g)?;
    let n = g.n();
    let vertex_ok = |v: usize| {
        if v < n {
            Ok(())
        } else {
            Err(Error::InvalidParameter(format!("no vertex {v}")))
        }
    };
    let keep_only = |keep: Vec<usize>| -> Result<ConstructionReport> {
        let target = g.induced_subgraph(&keep)?;
        if target.n() == 0 || target.has_isolated_vertices() {
            return Err(Error::IsolatedVertices);
        }
        let (v, e) = shifted(&s, s.range - 1 - s.min)?;
        let vertex: Vec<i64> = keep.iter().map(|&u| v[u]).collect();
        let out = positive(vertex.iter().copied().chain(e))?;
        finish(
            out,
            target,
            Expect::Mapped(&vertex),
            Isolates::AtLeast(1),
            2 * s.range - 2,
        )
    };
    match op {
        Modification::DeleteVertex(v) => {
            vertex_ok(*v)?;
            keep_only((0..n).filter(|u| u != v).collect())
        }
        Modification::InducedSubgraph(keep) => {
            let set: BTreeSet<usize> = keep.iter().copied().collect();
            for &u in &set {
                vertex_ok(u)?;
            }
            keep_only(set.into_iter().collect())
        }
        Modification::DeleteEdge(u, v) | Modification::AddEdge(u, v) => {
            vertex_ok(*u)?;
            vertex_ok(*v)?;
            let present = g.has_edge(*u, *v);
            let adding = matches!(op, Modification::AddEdge(..));
            if u == v || present == adding {
                return Err(Error::InvalidParameter(format!(
                    "edge ({u},{v}) is {}",
                    if present { "already present" } else { "absent" }
                )));
            }
            let mut nb: BTreeSet<usize> = g.neighbors(*v).iter().copied().collect();
            if adding {
                nb.insert(*u);
            } else {
                nb.remove(u);
            }
            let mut edges: BTreeSet<(usize, usize)> = g.edges().iter().copied().collect();
            let e = ((*u).min(*v), (*u).max(*v));
            if adding {
                edges.insert(e);
            } else {
                edges.remove(&e);
            }
            let target = SimpleGraph::new(n, edges)?;
            if target.has_isolated_vertices() {
                return Err(Error::IsolatedVertices);
            }
            replace_vertices(&s, &[*v], nb.into_iter().collect(), target, |w| {
                if w == n { *v } else { w }
            })
        }
        Modification::ContractEdge(u, v) => {
            vertex_ok(*u)?;
            vertex_ok(*v)?;
            if !g.has_edge(*u, *v) {
                return Err(Error::InvalidParameter(format!("edge ({u},{v}) is absent")));
            }
            let mut nb: BTreeSet<usize> = g.neighbors(*u).iter().copied().collect();
            nb.extend(g.neighbors(*v));
            nb.remove(u);
            nb.remove(v);
            let rest: Vec<usize> = (0..n).filter(|w| w != u && w != v).collect();
            let mut pos = vec![usize::MAX; n];
            for (i, &w) in rest.iter().enumerate() {
                pos[w] = i;
            }
            let merged = rest.len();
            let mut edges = BTreeSet::new();
            for &(a, b) in g.edges() {
                let (a, b) = (
                    if pos[a] == usize::MAX { merged } else { pos[a] },
                    if pos[b] == usize::MAX { merged } else { pos[b] },
                );
                if a != b {
                    edges.insert((a.min(b), a.max(b)));
                }
            }
            let target = SimpleGraph::new(merged + 1, edges)?;
            if target.has_isolated_vertices() {
                return Err(Error::IsolatedVertices);
            }
            replace_vertices(&s, &[*u, *v], nb.into_iter().collect(), target, |w| {
                if w == n { merged } else { pos[w] }
            })
        }
    }
}

/// Adds a vertex adjacent to `nb`, then drops the labels of `removed`.
/// `place(w)` is the target vertex that old vertex `w` (or the new one, `n`) becomes.
fn replace_vertices(
    s: &Split,
    removed: &[usize],
    nb: Vec<usize>,
    target: SimpleGraph,
    place: impl Fn(usize) -> usize,
) -> Result<ConstructionReport> {
    let ext = extend(s, &nb)?;
    let old_n = ext.vertex.len() - 1;
    let mut labels = ext.labels;
    for &w in removed {
        labels.remove(&ext.vertex[w]);
    }
    let mut vertex = vec![0; target.n()];
    for w in (0..old_n).filter(|w| !removed.contains(w)) {
        vertex[place(w)] = ext.vertex[w];
    }
    vertex[place(old_n)] = ext.vertex[old_n];
    finish(
        positive(labels)?,
        target,
        Expect::Mapped(&vertex),
        Isolates::AtLeast(1),
        ext.range_bound,
    )
}
