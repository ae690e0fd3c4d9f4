mod common;

use proptest::prelude::*;
use sumdiam_core::{induce, Domain, Labeling, SimpleGraph};

fn labels(domain: Domain) -> impl Strategy<Value = Labeling> {
    let lo = if domain == Domain::Positive { 1 } else { -40 };
    prop::collection::btree_set(lo..=40i64, 1..=14)
        .prop_map(move |s| Labeling::new(s.into_iter().collect(), domain).unwrap())
}

fn edge_set(l: &Labeling) -> Vec<(i64, i64)> {
    let mut e = induce(l).label_edges();
    e.sort_unstable();
    e
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn scaling_scales_every_edge(l in labels(Domain::Integral), c in prop_oneof![-9..=-1i64, 1..=9i64]) {
        let scaled = l.scaled(c).unwrap();
        let mut expected: Vec<(i64, i64)> = edge_set(&l)
            .into_iter()
            .map(|(u, v)| ((u * c).min(v * c), (u * c).max(v * c)))
            .collect();
        expected.sort_unstable();
        prop_assert_eq!(edge_set(&scaled), expected);
        prop_assert_eq!(induce(&scaled).isolate_count, induce(&l).isolate_count);
    }

    #[test]
    fn negation_mirrors_edges(l in labels(Domain::Integral)) {
        let neg = l.negated();
        let mut expected: Vec<(i64, i64)> = edge_set(&l).into_iter().map(|(u, v)| (-v, -u)).collect();
        expected.sort_unstable();
        prop_assert_eq!(edge_set(&neg), expected);
        prop_assert_eq!(neg.range(), l.range());
    }

    #[test]
    fn largest_positive_label_is_isolated(l in labels(Domain::Positive)) {
        let r = induce(&l);
        prop_assert!(r.isolated_labels.contains(&l.max().unwrap()));
    }

    #[test]
    fn induce_matches_pairwise_check(l in labels(Domain::Integral)) {
        let r = induce(&l);
        let (core, isolates) = common::naive_core(l.labels());
        prop_assert_eq!(r.isolate_count, isolates);
        prop_assert_eq!(r.core_graph.edge_count(), core.edge_count());
        prop_assert!(core.n() > 8 || common::brute_isomorphic(&r.core_graph, &core));
        prop_assert_eq!(r.isolate_count + r.core_labels.len(), l.len());
    }

    #[test]
    fn input_order_does_not_matter(mut v in prop::collection::btree_set(-30..=30i64, 1..=12)
        .prop_map(|s| s.into_iter().collect::<Vec<_>>()), seed in any::<u64>()) {
        let sorted = Labeling::integral(v.clone()).unwrap();
        let k = v.len();
        v.rotate_left((seed as usize) % k);
        if seed % 2 == 0 {
            v.reverse();
        }
        prop_assert_eq!(Labeling::integral(v).unwrap(), sorted);
    }

    #[test]
    fn text_forms_round_trip(l in labels(Domain::Integral)) {
        let inferred = Labeling::infer(l.labels().to_vec()).unwrap();
        prop_assert_eq!(l.to_string().parse::<Labeling>().unwrap(), inferred.clone());
        prop_assert_eq!(l.to_json().parse::<Labeling>().unwrap(), inferred);
    }

    #[test]
    fn graph_json_round_trips(n in 1usize..8, bits in any::<u32>()) {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        let g = SimpleGraph::new(n, pairs.iter().enumerate().filter(|(i, _)| bits >> (i % 32) & 1 == 1).map(|(_, &p)| p)).unwrap();
        prop_assert_eq!(SimpleGraph::from_json(&g.to_json()).unwrap(), g);
    }
}
