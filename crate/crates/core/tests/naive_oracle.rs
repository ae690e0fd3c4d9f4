mod common;

use common::{brute_isomorphic, isolate_free_graphs, naive_core};
use sumdiam_core::search::{solve, Invariant, SearchProblem};
use sumdiam_core::{isd_lower_bound, known_values, sd_lower_bound, FamilySpec, SimpleGraph};

/// Lexicographically first labeling of range exactly `x`, over every window
/// in which an edge can occur at all.
fn naive_at(g: &SimpleGraph, x: i64, integral: bool, isolates: Option<usize>) -> Option<Vec<i64>> {
    // a positive edge needs a + (a+1) <= max, so min <= x - 1; integral adds the mirror
    let los: Vec<i64> = if integral { (-2 * x + 1..x).collect() } else { (1..x).collect() };
    for lo in los {
        let hi = lo + x;
        let inner = (x - 1) as u32;
        let mut best: Option<Vec<i64>> = None;
        for mask in 0u64..(1 << inner) {
            let mut labels = vec![lo];
            labels.extend((0..inner).filter(|b| mask >> b & 1 == 1).map(|b| lo + 1 + b as i64));
            labels.push(hi);
            if !integral && labels.contains(&0) {
                continue;
            }
            let (core, iso) = naive_core(&labels);
            if isolates.is_some_and(|k| k != iso) || !brute_isomorphic(&core, g) {
                continue;
            }
            if best.as_ref().is_none_or(|b| labels < *b) {
                best = Some(labels);
            }
        }
        if best.is_some() {
            return best;
        }
    }
    None
}

fn naive_min(g: &SimpleGraph, integral: bool, isolates: Option<usize>) -> (i64, Vec<i64>) {
    (1..=16)
        .find_map(|x| naive_at(g, x, integral, isolates).map(|w| (x, w)))
        .expect("found within range 16")
}

/// Fewest isolates over every label set inside a fixed box.
fn naive_isolate_number(g: &SimpleGraph, integral: bool) -> usize {
    let pool: Vec<i64> = if integral { (-7..=7).collect() } else { (1..=14).collect() };
    let mut best = usize::MAX;
    for mask in 1u32..(1 << pool.len()) {
        if (mask.count_ones() as usize) < g.n() {
            continue;
        }
        let labels: Vec<i64> =
            (0..pool.len()).filter(|&b| mask >> b & 1 == 1).map(|b| pool[b]).collect();
        let (core, iso) = naive_core(&labels);
        if iso < best && brute_isomorphic(&core, g) {
            best = iso;
        }
    }
    best
}

/// σ and ζ from the family table, or from a box scan for the rest.
fn isolate_numbers(name: &str, g: &SimpleGraph) -> (usize, usize) {
    let spec = match name {
        "K2" => FamilySpec::complete(2),
        "P3" => FamilySpec::path(3),
        "K3" => FamilySpec::complete(3),
        "2K2" => FamilySpec::matching(2),
        "P4" => FamilySpec::path(4),
        "C4" => FamilySpec::cycle(4),
        "K4" => FamilySpec::complete(4),
        _ => return (naive_isolate_number(g, false), naive_isolate_number(g, true)),
    };
    let kv = known_values(spec);
    (kv.sigma.unwrap() as usize, kv.zeta.unwrap() as usize)
}

#[test]
fn all_four_searches_match_naive_enumeration() {
    for (name, g) in isolate_free_graphs() {
        let (sigma, zeta) = isolate_numbers(name, &g);
        let mut values = Vec::new();
        for (inv, integral, isolates) in [
            (Invariant::Spum, false, Some(sigma)),
            (Invariant::Sd, false, None),
            (Invariant::Ispum, true, Some(zeta)),
            (Invariant::Isd, true, None),
        ] {
            let mut p = SearchProblem::new(inv, g.clone());
            if let Some(k) = isolates {
                p = p.isolates(k);
            }
            let cert = solve(&p).unwrap();
            let (value, witness) = naive_min(&g, integral, isolates);
            assert_eq!(cert.value, value, "{inv} of {name}");
            assert_eq!(cert.witness.labels(), witness.as_slice(), "{inv} witness of {name}");
            values.push(cert.value);
        }
        let [spum, sd, ispum, isd] = values[..] else { unreachable!() };
        assert!(isd <= sd && sd <= spum && isd <= ispum, "{name}: ordering");
        assert!(sd >= sd_lower_bound(&g).unwrap(), "{name}: sd bound");
        assert!(isd >= isd_lower_bound(&g).unwrap(), "{name}: isd bound");
        assert!(spum >= (g.n() + sigma) as i64 - 1);
    }
}

#[test]
fn box_scan_agrees_with_family_table() {
    let graphs = isolate_free_graphs();
    for name in ["K2", "P3", "K3", "2K2", "P4", "C4"] {
        let g = &graphs.iter().find(|(n, _)| *n == name).unwrap().1;
        let scanned = (naive_isolate_number(g, false), naive_isolate_number(g, true));
        assert_eq!(scanned, isolate_numbers(name, g), "{name}");
    }
}

#[test]
fn parallel_search_matches_serial_on_small_graphs() {
    for (name, g) in isolate_free_graphs() {
        for inv in [Invariant::Sd, Invariant::Isd] {
            let one = solve(&SearchProblem::new(inv, g.clone()).jobs(1)).unwrap();
            let four = solve(&SearchProblem::new(inv, g.clone()).jobs(4)).unwrap();
            assert_eq!(one.without_timing(), four.without_timing(), "{inv} of {name}");
        }
    }
}
