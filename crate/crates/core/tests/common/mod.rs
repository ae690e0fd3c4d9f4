#![allow(dead_code)]

use std::collections::BTreeSet;

use sumdiam_core::SimpleGraph;

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut p: Vec<usize> = (0..n).collect();
    heap(n, &mut p, &mut out);
    out
}

fn heap(k: usize, p: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if k <= 1 {
        out.push(p.clone());
        return;
    }
    for i in 0..k {
        heap(k - 1, p, out);
        let j = if k.is_multiple_of(2) { i } else { 0 };
        p.swap(j, k - 1);
    }
    p.truncate(p.len());
}

fn edge_set(edges: &[(usize, usize)]) -> BTreeSet<(usize, usize)> {
    edges.iter().map(|&(u, v)| (u.min(v), u.max(v))).collect()
}

/// Tries every vertex permutation.
pub fn brute_isomorphic(a: &SimpleGraph, b: &SimpleGraph) -> bool {
    if a.n() != b.n() || a.edge_count() != b.edge_count() {
        return false;
    }
    let target = edge_set(b.edges());
    permutations(a.n()).iter().any(|p| {
        let mapped: Vec<(usize, usize)> = a.edges().iter().map(|&(u, v)| (p[u], p[v])).collect();
        edge_set(&mapped) == target
    })
}

/// Core graph and isolate count, by checking every pair.
pub fn naive_core(labels: &[i64]) -> (SimpleGraph, usize) {
    let mut edges = Vec::new();
    for i in 0..labels.len() {
        for j in i + 1..labels.len() {
            if labels.contains(&(labels[i] + labels[j])) {
                edges.push((i, j));
            }
        }
    }
    let mut used = vec![false; labels.len()];
    for &(u, v) in &edges {
        used[u] = true;
        used[v] = true;
    }
    let mut index = vec![0; labels.len()];
    let mut next = 0;
    for (i, &u) in used.iter().enumerate() {
        if u {
            index[i] = next;
            next += 1;
        }
    }
    let core = SimpleGraph::new(next, edges.iter().map(|&(u, v)| (index[u], index[v]))).unwrap();
    (core, labels.len() - next)
}

/// Every simple graph on 2..=4 vertices without isolated vertices, up to isomorphism.
pub fn isolate_free_graphs() -> Vec<(&'static str, SimpleGraph)> {
    let g = |n, e: &[(usize, usize)]| SimpleGraph::new(n, e.iter().copied()).unwrap();
    vec![
        ("K2", g(2, &[(0, 1)])),
        ("P3", g(3, &[(0, 1), (1, 2)])),
        ("K3", g(3, &[(0, 1), (1, 2), (0, 2)])),
        ("2K2", g(4, &[(0, 1), (2, 3)])),
        ("P4", g(4, &[(0, 1), (1, 2), (2, 3)])),
        ("K1,3", g(4, &[(0, 1), (0, 2), (0, 3)])),
        ("C4", g(4, &[(0, 1), (1, 2), (2, 3), (3, 0)])),
        ("paw", g(4, &[(0, 1), (1, 2), (0, 2), (2, 3)])),
        ("diamond", g(4, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)])),
        ("K4", g(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])),
    ]
}

/// Random graph on `n` vertices in which every vertex has an edge.
pub fn random_isolate_free(rng: &mut impl rand::Rng, n: usize) -> SimpleGraph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(0.4) {
                edges.push((u, v));
            }
        }
    }
    for u in 0..n {
        if !edges.iter().any(|&(a, b)| a == u || b == u) {
            let mut v = rng.gen_range(0..n - 1);
            if v >= u {
                v += 1;
            }
            edges.push((u.min(v), u.max(v)));
        }
    }
    edges.sort_unstable();
    edges.dedup();
    SimpleGraph::new(n, edges).unwrap()
}
