use antiramsey_core::constructions::{build_forest_coloring, InteriorArrangement};
use antiramsey_core::formulas::erdos_gallai_bound;
use antiramsey_core::oracles::{brute_force_ar, brute_force_ex, verify_witness, SearchBudget, Witness};
use antiramsey_core::LinearForest;

fn lf(s: &str) -> LinearForest {
    s.parse().unwrap()
}

fn seq() -> SearchBudget {
    SearchBudget::single_threaded()
}

#[test]
fn constructions_are_lower_bounds_for_the_oracle() {
    for (n, spec) in [(6, "2,2"), (7, "2,2")] {
        let f = lf(spec);
        let c = build_forest_coloring(n, &f, InteriorArrangement::default()).unwrap();
        let r = brute_force_ar(n, &f, seq()).unwrap();
        assert!(r.exhausted);
        assert!(r.value >= c.color_count(), "n={n} F={f}");
    }
}

#[test]
fn small_anti_ramsey_table() {
    // n = 4..6. The perfect-matching coloring of K_4 has three colors and no
    // rainbow P_4 or 2P_2, so both values drop from n = 4 to n = 5.
    let table = [
        ("3", [1, 1, 1]),
        ("4", [3, 2, 2]),
        ("2,2", [3, 1, 1]),
        // P_3 ∪ P_2 does not fit in K_4
        ("3,2", [6, 2, 2]),
    ];
    for (spec, want) in table {
        let f = lf(spec);
        for (i, n) in (4..=6).enumerate() {
            let r = brute_force_ar(n, &f, seq()).unwrap();
            assert!(r.exhausted && verify_witness(&r, &f));
            assert_eq!(r.value, want[i], "AR({n},{f})");
        }
    }
}

#[test]
fn not_monotone_in_n() {
    for spec in ["4", "2,2"] {
        let f = lf(spec);
        let small = brute_force_ar(4, &f, seq()).unwrap().value;
        let large = brute_force_ar(5, &f, seq()).unwrap().value;
        assert!(small > large, "AR(4,{f}) = {small}, AR(5,{f}) = {large}");
    }
}

#[test]
fn turan_examples() {
    let r = brute_force_ex(6, &lf("3"), seq()).unwrap();
    assert_eq!(r.value, 3);
    assert!(r.exhausted);
    let r = brute_force_ex(5, &lf("4"), seq()).unwrap();
    assert_eq!(r.value, 4);
    // the star K_{1,4} has no two disjoint edges
    let r = brute_force_ex(5, &lf("2,2"), seq()).unwrap();
    assert_eq!(r.value, 4);
    let Witness::Graph(g) = &r.witness else { panic!("graph witness expected") };
    assert_eq!(g.edge_count(), 4);
}

#[test]
fn turan_below_erdos_gallai_with_bound_enabled() {
    for n in 2..=7u64 {
        for k in 2..=n {
            let r = brute_force_ex(n as usize, &LinearForest::path(k as usize).unwrap(), seq()).unwrap();
            assert!(r.exhausted);
            let eg = erdos_gallai_bound(n, k).unwrap().floor().to_integer();
            assert!(r.value as i128 <= eg, "ex({n},P{k}) = {} > {eg}", r.value);
        }
    }
}

#[test]
fn parallel_runs_agree_on_value() {
    let par = SearchBudget { parallelism: 3, ..SearchBudget::default() };
    for (n, spec) in [(5, "3,2"), (6, "4"), (5, "2,2")] {
        let f = lf(spec);
        let a = brute_force_ar(n, &f, seq()).unwrap();
        let b = brute_force_ar(n, &f, par).unwrap();
        assert_eq!((a.value, a.exhausted), (b.value, b.exhausted), "AR({n},{f})");
        assert!(verify_witness(&b, &f));
    }
    for (n, spec) in [(8, "5"), (7, "3,3")] {
        let f = lf(spec);
        let a = brute_force_ex(n, &f, seq()).unwrap();
        let b = brute_force_ex(n, &f, par).unwrap();
        assert_eq!((a.value, a.exhausted), (b.value, b.exhausted), "ex({n},{f})");
    }
}

#[test]
fn millisecond_budget_reports_lower_bound() {
    let tiny = SearchBudget { max_nodes: 1, max_millis: 1, parallelism: 1 };
    let f = lf("6");
    let r = brute_force_ar(7, &f, tiny).unwrap();
    assert!(!r.exhausted);
    assert!(verify_witness(&r, &f));
}
