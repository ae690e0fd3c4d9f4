mod common;

use common::{brute_isomorphic, naive_core};
use sumdiam_core::constructions::{
    add_isolated, add_vertex, disjoint_union_scaled, disjoint_union_translated, embedding, join,
    modify, translate, ConstructionReport, Modification,
};
use sumdiam_core::search::search_sd;
use sumdiam_core::{Labeling, SimpleGraph};

fn g(n: usize, e: &[(usize, usize)]) -> SimpleGraph {
    SimpleGraph::new(n, e.iter().copied()).unwrap()
}

/// The five base graphs with sd-optimal labelings.
fn bases() -> Vec<(&'static str, SimpleGraph, Labeling)> {
    [
        ("K2", g(2, &[(0, 1)])),
        ("P3", g(3, &[(0, 1), (1, 2)])),
        ("P4", g(4, &[(0, 1), (1, 2), (2, 3)])),
        ("C4", g(4, &[(0, 1), (1, 2), (2, 3), (0, 3)])),
        ("K3", g(3, &[(0, 1), (1, 2), (0, 2)])),
    ]
    .into_iter()
    .map(|(name, graph)| {
        let l = search_sd(&graph).unwrap().witness;
        (name, graph, l)
    })
    .collect()
}

fn edges_of(h: &SimpleGraph) -> Vec<(usize, usize)> {
    h.edges().to_vec()
}

fn union(a: &SimpleGraph, b: &SimpleGraph) -> SimpleGraph {
    let mut e = edges_of(a);
    e.extend(b.edges().iter().map(|&(u, v)| (u + a.n(), v + a.n())));
    g(a.n() + b.n(), &e)
}

fn joined(a: &SimpleGraph, b: &SimpleGraph) -> SimpleGraph {
    let mut e = edges_of(&union(a, b));
    for u in 0..a.n() {
        for v in 0..b.n() {
            e.push((u, a.n() + v));
        }
    }
    g(a.n() + b.n(), &e)
}

fn keep(h: &SimpleGraph, vertices: &[usize]) -> SimpleGraph {
    let e: Vec<_> = h
        .edges()
        .iter()
        .filter_map(|&(u, v)| {
            let a = vertices.iter().position(|&x| x == u)?;
            let b = vertices.iter().position(|&x| x == v)?;
            Some((a, b))
        })
        .collect();
    g(vertices.len(), &e)
}

fn without_edge(h: &SimpleGraph, e: (usize, usize)) -> SimpleGraph {
    let rest: Vec<_> = h.edges().iter().copied().filter(|&x| x != e).collect();
    g(h.n(), &rest)
}

fn with_edge(h: &SimpleGraph, e: (usize, usize)) -> SimpleGraph {
    let mut all = edges_of(h);
    all.push(e);
    g(h.n(), &all)
}

fn contracted(h: &SimpleGraph, (a, b): (usize, usize)) -> SimpleGraph {
    let others: Vec<usize> = (0..h.n()).filter(|&v| v != a && v != b).collect();
    let merged = others.len();
    let place = |v: usize| if v == a || v == b { merged } else { others.iter().position(|&x| x == v).unwrap() };
    let mut e: Vec<(usize, usize)> = h
        .edges()
        .iter()
        .filter(|&&x| x != (a, b))
        .map(|&(u, v)| {
            let (p, q) = (place(u), place(v));
            (p.min(q), p.max(q))
        })
        .collect();
    e.sort_unstable();
    e.dedup();
    g(merged + 1, &e)
}

fn isolate_free(h: &SimpleGraph) -> bool {
    h.n() >= 1 && (0..h.n()).all(|v| h.degree(v) > 0)
}

fn assert_induces(report: &ConstructionReport, expected: &SimpleGraph, bound: i64, what: &str) {
    assert!(report.valid, "{what}");
    let (core, _) = naive_core(report.labeling.labels());
    assert!(brute_isomorphic(&core, expected), "{what}: wrong graph");
    assert_eq!(report.achieved_range, report.labeling.range(), "{what}");
    assert!(report.achieved_range <= bound, "{what}: range {} > {bound}", report.achieved_range);
    assert!(report.labeling.labels().iter().all(|&l| l >= 1), "{what}");
}

#[test]
fn unions_of_base_graphs() {
    let bases = bases();
    for (n1, g1, l1) in &bases {
        for (n2, g2, l2) in &bases {
            let (r1, r2) = (l1.range(), l2.range());
            let target = union(g1, g2);
            let scaled = disjoint_union_scaled(l1, g1, l2, g2).unwrap();
            let bound = 2 * (2 * r1 - 1) * (2 * r2 - 1) - 1;
            assert_induces(&scaled, &target, bound, &format!("{n1} ∪ {n2} scaled"));
            let moved = disjoint_union_translated(l1, g1, l2, g2).unwrap();
            let bound = 10 * r1.max(r2) + r1 + r2 + 2;
            assert_induces(&moved, &target, bound, &format!("{n1} ∪ {n2} translated"));
        }
    }
}

#[test]
fn joins_of_base_graphs() {
    let bases = bases();
    for (n1, g1, l1) in &bases {
        for (n2, g2, l2) in &bases {
            let (lo, hi) = (l1.range().min(l2.range()), l1.range().max(l2.range()));
            let report = join(l1, g1, l2, g2).unwrap();
            assert_induces(&report, &joined(g1, g2), 11 * lo + 8 * hi - 5, &format!("{n1} + {n2}"));
        }
    }
}

#[test]
fn padding_with_isolates() {
    for (name, h, l) in bases() {
        let r = l.range();
        for k in (1..=12).chain([20, 33]) {
            let report = add_isolated(&l, &h, k).unwrap();
            let kk = k as i64;
            assert_induces(&report, &h, kk.max(4 * r) + kk - 5, &format!("{name} + {k} isolates"));
            let (_, isolates) = naive_core(report.labeling.labels());
            assert!(isolates >= k, "{name} + {k} isolates");
        }
    }
}

#[test]
fn adding_a_vertex() {
    for (name, h, l) in bases() {
        let n = h.n();
        for mask in 1u32..(1 << n) {
            let nb: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
            let report = add_vertex(&l, &h, &nb).unwrap();
            let mut e = edges_of(&h);
            e.extend(nb.iter().map(|&u| (u, n)));
            let target = g(n + 1, &e);
            assert_induces(&report, &target, 4 * l.range() - 1, &format!("{name} + vertex {nb:?}"));
            let core = sumdiam_core::induce(&report.labeling).core_labels;
            assert_eq!(core.iter().filter(|&&x| x % 2 == 1).count(), 1, "{name} + vertex {nb:?}");
        }
    }
}

#[test]
fn modifications() {
    for (name, h, l) in bases() {
        let n = h.n();
        let r = l.range();
        for v in 0..n {
            let rest: Vec<usize> = (0..n).filter(|&x| x != v).collect();
            let target = keep(&h, &rest);
            let got = modify(&l, &h, &Modification::DeleteVertex(v));
            if isolate_free(&target) {
                assert_induces(&got.unwrap(), &target, 2 * r - 2, &format!("{name} - {v}"));
            } else {
                assert!(got.is_err(), "{name} - {v}");
            }
        }
        for mask in 1u32..(1 << n) {
            let subset: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
            let target = keep(&h, &subset);
            let got = modify(&l, &h, &Modification::InducedSubgraph(subset.clone()));
            if isolate_free(&target) {
                assert_induces(&got.unwrap(), &target, 2 * r - 2, &format!("{name}[{subset:?}]"));
            } else {
                assert!(got.is_err(), "{name}[{subset:?}]");
            }
        }
        for &(a, b) in h.edges() {
            let target = without_edge(&h, (a, b));
            let got = modify(&l, &h, &Modification::DeleteEdge(a, b));
            if isolate_free(&target) {
                assert_induces(&got.unwrap(), &target, 4 * r - 1, &format!("{name} \\ {a}{b}"));
            } else {
                assert!(got.is_err(), "{name} \\ {a}{b}");
            }
            let target = contracted(&h, (a, b));
            let got = modify(&l, &h, &Modification::ContractEdge(a, b));
            if isolate_free(&target) && target.n() >= 2 {
                assert_induces(&got.unwrap(), &target, 4 * r - 1, &format!("{name} / {a}{b}"));
            } else {
                assert!(got.is_err(), "{name} / {a}{b}");
            }
        }
        for a in 0..n {
            for b in a + 1..n {
                if h.has_edge(a, b) {
                    assert!(modify(&l, &h, &Modification::AddEdge(a, b)).is_err());
                    continue;
                }
                let target = with_edge(&h, (a, b));
                let got = modify(&l, &h, &Modification::AddEdge(a, b)).unwrap();
                assert_induces(&got, &target, 4 * r - 1, &format!("{name} + {a}{b}"));
            }
        }
    }
}

#[test]
fn translation_keeps_blocks_apart() {
    for (name, h, l) in bases() {
        let threshold = l.range() - 1 - l.min().unwrap();
        for x in threshold..threshold + 5 {
            let out = translate(&l, &h, x).unwrap();
            let vertex = embedding(&out, &h).unwrap();
            let top = *vertex.iter().max().unwrap();
            let (core, _) = naive_core(out.labels());
            assert!(brute_isomorphic(&core, &h), "{name} shifted by {x}");
            for &label in out.labels() {
                assert!(vertex.contains(&label) || label > top, "{name} shifted by {x}");
            }
        }
        assert!(translate(&l, &h, threshold - 1).is_err(), "{name}");
    }
}

#[test]
fn combinator_examples() {
    let k2 = g(2, &[(0, 1)]);
    let p3 = g(3, &[(0, 1), (1, 2)]);
    let l = Labeling::positive(vec![1, 2, 3]).unwrap();
    let r = disjoint_union_scaled(&l, &k2, &l, &k2).unwrap();
    assert_eq!(r.achieved_range, 17);
    let r = add_isolated(&l, &k2, 20).unwrap();
    assert!(r.achieved_range <= 35);
    let t = translate(&Labeling::positive(vec![1, 2, 3, 4]).unwrap(), &p3, 2).unwrap();
    assert_eq!(t.labels(), &[3, 4, 5, 7, 8]);
}
