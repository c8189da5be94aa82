use antiramsey_core::constructions::{build_forest_coloring, build_turan_extremal, hub_search, InteriorArrangement};
use antiramsey_core::formulas::{ar_linear_forest, ex_linear_forest};
use antiramsey_core::{contains_subgraph, find_rainbow, graph6, EdgeColoring, LinearForest};

fn lf(s: &str) -> LinearForest {
    s.parse().unwrap()
}

#[test]
fn coloring_file_round_trip_keeps_rainbow_freeness() {
    let f = lf("4,2");
    let c = build_forest_coloring(11, &f, InteriorArrangement::MonochromaticInterior).unwrap();
    let back = EdgeColoring::parse(&c.to_text()).unwrap();
    assert_eq!(back, c);
    assert!(find_rainbow(&back, &f).is_none());
    assert_eq!(back.color_count() as u128, ar_linear_forest(11, &f).unwrap().value);
}

#[test]
fn graph6_round_trip_of_turan_graphs() {
    for (n, spec) in [(10, "4,3"), (20, "5,4"), (70, "6,2")] {
        let f = lf(spec);
        let g = build_turan_extremal(n, &f).unwrap();
        let back = graph6::decode(&graph6::encode(&g)).unwrap();
        assert_eq!(back, g);
        assert_eq!(back.edge_count() as u128, ex_linear_forest(n as u64, &f).unwrap().value);
    }
}

#[test]
fn hub_is_recovered_from_turan_graph() {
    let f = lf("5,4");
    let g = build_turan_extremal(14, &f).unwrap();
    let h = f.half_sum() - 1;
    let everyone: Vec<usize> = (0..14).collect();
    let (hub, _) = hub_search(&g, &everyone[..h + 2], h).unwrap();
    assert_eq!(hub, (0..h).collect::<Vec<_>>());
    assert!(contains_subgraph(&g, &f).is_none());
}

#[test]
fn one_more_color_creates_a_rainbow_copy() {
    // split the interior class once more: the coloring exceeds the formula
    let f = lf("4,2");
    let n = 10;
    let c = build_forest_coloring(n, &f, InteriorArrangement::default()).unwrap();
    let extra = c.color_count() as u32;
    let mut labels = c.colors().to_vec();
    let last = labels.len() - 1;
    labels[last] = extra;
    let richer = EdgeColoring::from_labels(n, &labels).unwrap();
    assert_eq!(richer.color_count(), c.color_count() + 1);
    let e = find_rainbow(&richer, &f).expect("too many colors");
    assert!(e.is_rainbow_in(&richer));
}
