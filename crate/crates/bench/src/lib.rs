//! Shared inputs for the benchmarks.

use antiramsey_core::constructions::{build_forest_coloring, InteriorArrangement};
use antiramsey_core::{EdgeColoring, LinearForest};

pub fn forest(spec: &str) -> LinearForest {
    spec.parse().expect("valid forest spec")
}

/// The extremal coloring for `spec` on `n` vertices: a rainbow-free worst case
/// for the detector, which has to exhaust its search tree.
pub fn extremal_coloring(n: usize, spec: &str) -> EdgeColoring {
    build_forest_coloring(n, &forest(spec), InteriorArrangement::SingleEdgeSecondColor).expect("construction fits")
}
