use sumdiam_core::search::{check_conjecture, solve, Conjecture, Invariant, SearchProblem};
use sumdiam_core::{
    induce, is_valid_labeling, isd_lower_bound, sd_lower_bound, FamilySpec, SearchCertificate,
};

fn run(inv: Invariant, spec: &str) -> SearchCertificate {
    let spec: FamilySpec = spec.parse().unwrap();
    let cert = solve(&SearchProblem::new(inv, spec)).unwrap();
    let g = sumdiam_core::generate(spec).unwrap();
    assert!(cert.exhausted_below);
    assert_eq!(cert.witness.range(), cert.value);
    assert!(is_valid_labeling(&cert.witness, &g, None).unwrap());
    let lb = match inv {
        Invariant::Spum | Invariant::Sd => sd_lower_bound(&g).unwrap(),
        Invariant::Ispum | Invariant::Isd => isd_lower_bound(&g).unwrap(),
    };
    assert!(cert.value >= lb, "{inv} {spec}: {} below bound {lb}", cert.value);
    cert
}

#[test]
fn cycles_spum() {
    for n in [4, 6, 7, 8, 9, 10] {
        assert_eq!(run(Invariant::Spum, &format!("cycle:{n}")).value, 2 * n - 1);
    }
}

#[test]
fn five_cycle_needs_range_ten() {
    let cert = run(Invariant::Spum, "cycle:5");
    assert_eq!(cert.value, 10);
    assert_eq!(cert.witness.to_string(), "1,2,4,5,6,8,11");
    let capped = SearchProblem::new(Invariant::Spum, FamilySpec::cycle(5)).max_range(9);
    assert_eq!(solve(&capped), Err(sumdiam_core::Error::Infeasible { max_range: 9 }));
}

#[test]
fn matchings() {
    for n in 1..=4 {
        assert_eq!(run(Invariant::Spum, &format!("matching:{n}")).value, 4 * n - 2);
        let expected = match n {
            1 => 1,
            2 => 4,
            _ => 4 * n - 3,
        };
        assert_eq!(run(Invariant::Ispum, &format!("matching:{n}")).value, expected);
    }
}

#[test]
fn complete_graphs() {
    for n in 2..=5 {
        assert_eq!(run(Invariant::Sd, &format!("complete:{n}")).value, 4 * n - 6);
    }
    assert_eq!(run(Invariant::Isd, "complete:2").value, 1);
    assert_eq!(run(Invariant::Isd, "complete:3").value, 2);
    assert_eq!(run(Invariant::Isd, "complete:4").value, 10);
}

#[test]
fn isd_of_an_edge_has_a_mirrored_witness() {
    let cert = run(Invariant::Isd, "complete:2");
    let w = cert.witness.labels().to_vec();
    assert_eq!(w, vec![-1, 0]);
    let mirror = cert.witness.negated();
    assert_eq!(mirror.labels(), &[0, 1]);
    assert_eq!(induce(&mirror).core_graph.edge_count(), 1);
}

#[test]
fn paths_sd() {
    for n in 3..=7 {
        let expected = if n <= 6 { 2 * n - 3 } else { 2 * n - 2 };
        assert_eq!(run(Invariant::Sd, &format!("path:{n}")).value, expected);
    }
}

#[test]
fn conjecture_checks_agree_where_known() {
    let r = check_conjecture(Conjecture::SpumPaths, 9, 1).unwrap();
    assert!(r.matches);
    assert_eq!(r.value, 19);
    let r = check_conjecture(Conjecture::SdPaths, 7, 1).unwrap();
    assert!(r.matches);
    assert!(check_conjecture(Conjecture::SpumPaths, 7, 1).is_err());
}

#[test]
fn ordering_between_invariants() {
    for spec in ["path:4", "path:5", "cycle:5", "complete:3", "matching:2", "star:3"] {
        let sd = run(Invariant::Sd, spec).value;
        let isd = run(Invariant::Isd, spec).value;
        assert!(isd <= sd, "{spec}");
        let parsed: FamilySpec = spec.parse().unwrap();
        let known = sumdiam_core::known_values(parsed);
        if known.sigma.is_some() {
            assert!(sd <= run(Invariant::Spum, spec).value, "{spec}");
        }
        if known.zeta.is_some() {
            assert!(isd <= run(Invariant::Ispum, spec).value, "{spec}");
        }
    }
}

#[test]
fn parallel_runs_match_serial() {
    for (inv, spec) in [
        (Invariant::Spum, "path:9"),
        (Invariant::Ispum, "cycle:8"),
        (Invariant::Sd, "complete:4"),
        (Invariant::Isd, "path:6"),
    ] {
        let spec: FamilySpec = spec.parse().unwrap();
        let one = solve(&SearchProblem::new(inv, spec).jobs(1)).unwrap();
        let four = solve(&SearchProblem::new(inv, spec).jobs(4)).unwrap();
        assert_eq!(one.without_timing().to_json(), four.without_timing().to_json());
    }
}

#[test]
fn start_range_above_bound_is_flagged() {
    let spec = FamilySpec::path(5);
    let cert = solve(&SearchProblem::new(Invariant::Spum, spec).start_range(8)).unwrap();
    assert_eq!(cert.value, 8);
    assert!(!cert.exhausted_below);
}
