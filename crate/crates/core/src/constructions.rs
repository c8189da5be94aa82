//! Extremal graphs and extremal edge-colorings built around a hub.
//!
//! All constructions put the hub on vertices `0..h`. In the colorings every
//! edge touching the hub gets its own color; colors are allocated to
//! hub-internal edges, then hub-to-interior edges, then the interior classes,
//! and finally renumbered canonically by [`EdgeColoring`].

use itertools::Itertools;
use thiserror::Error;

use crate::coloring::EdgeColoring;
use crate::error::FormulaError;
use crate::forest::LinearForest;
use crate::formulas;
use crate::graph::{Graph, VertexSet};
use crate::rainbow::{contains_subgraph, find_rainbow, Embedding};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ConstructionError {
    #[error("{0}")]
    Precondition(String),
    #[error(transparent)]
    Formula(#[from] FormulaError),
    #[error("coloring contains a rainbow {}: {:?}", .0.forest, .0.paths)]
    RainbowCopy(Embedding),
    #[error("graph contains {}: {:?}", .0.forest, .0.paths)]
    ContainsCopy(Embedding),
}

/// Where the second interior color goes when the interior uses two colors.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, serde::Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum InteriorArrangement {
    /// One interior edge (the first one, between the two lowest interior
    /// vertices) carries the second color.
    #[default]
    SingleEdgeSecondColor,
    /// The interior is monochromatic except for the star of its lowest vertex,
    /// which is split off into the second color.
    MonochromaticInterior,
}

impl std::str::FromStr for InteriorArrangement {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "single-edge" | "single-edge-second-color" => Ok(Self::SingleEdgeSecondColor),
            "monochromatic" | "monochromatic-interior" => Ok(Self::MonochromaticInterior),
            _ => Err(format!("unknown arrangement {s:?} (expected single-edge or monochromatic)")),
        }
    }
}

/// Shape of a hub construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HubSpec {
    pub n: usize,
    pub hub_size: usize,
    pub forest: LinearForest,
    /// Colors used inside `V − U` (colorings only).
    pub interior_colors: usize,
    pub arrangement: InteriorArrangement,
}

impl HubSpec {
    /// Layout of the extremal coloring: hub of `s − 2`, `1 + ε` interior colors.
    pub fn anti_ramsey(n: usize, forest: &LinearForest, arrangement: InteriorArrangement) -> Result<Self, ConstructionError> {
        if forest.components() < 2 {
            return Err(ConstructionError::Precondition("need at least two components".into()));
        }
        let eps = forest.census().main_epsilon().ok_or_else(|| {
            ConstructionError::Precondition(format!("{forest} has no even component"))
        })?;
        let need = forest.order() + forest.half_sum();
        if n < need {
            return Err(ConstructionError::Precondition(format!("n = {n} < |V(F)| + s = {need}")));
        }
        Ok(HubSpec {
            n,
            hub_size: forest.half_sum() - 2,
            forest: forest.clone(),
            interior_colors: 1 + eps as usize,
            arrangement,
        })
    }

    /// Layout of the Turán graph: hub of `s − 1` universal vertices.
    pub fn turan(n: usize, forest: &LinearForest) -> Result<Self, ConstructionError> {
        if forest.components() < 2 {
            return Err(ConstructionError::Precondition("need at least two components".into()));
        }
        if forest.parts().iter().all(|&t| t == 3) {
            return Err(ConstructionError::Precondition("every component is P_3".into()));
        }
        let hub_size = forest.half_sum() - 1;
        if n < forest.order() || n < hub_size + 2 {
            return Err(ConstructionError::Precondition(format!(
                "n = {n} is too small: need n >= {} and room for two vertices outside the hub",
                forest.order()
            )));
        }
        Ok(HubSpec { n, hub_size, forest: forest.clone(), interior_colors: 0, arrangement: InteriorArrangement::default() })
    }
}

/// Colors `K_n` with a rainbow hub `0..hub` and `interior` further colors on
/// `K_n − hub`.
fn hub_coloring(n: usize, hub: usize, interior: usize, arrangement: InteriorArrangement) -> EdgeColoring {
    let mut next = 0usize;
    let mut labels = vec![usize::MAX; n * (n - 1) / 2];
    let idx = |u: usize, v: usize| crate::graph::edge_index(n, u, v);
    for (u, v) in (0..hub).tuple_combinations() {
        labels[idx(u, v)] = next;
        next += 1;
    }
    for u in 0..hub {
        for v in hub..n {
            labels[idx(u, v)] = next;
            next += 1;
        }
    }
    let (first, second) = (next, next + 1);
    for u in hub..n {
        for v in u + 1..n {
            let two = interior == 2
                && match arrangement {
                    InteriorArrangement::SingleEdgeSecondColor => (u, v) == (hub, hub + 1),
                    InteriorArrangement::MonochromaticInterior => u == hub,
                };
            labels[idx(u, v)] = if two { second } else { first };
        }
    }
    EdgeColoring::from_labels(n, &labels).expect("one label per pair")
}

/// The Turán-extremal graph: `s − 1` universal hub vertices, and outside the hub
/// a single edge if all components are odd, no edges otherwise.
pub fn build_turan_extremal(n: usize, forest: &LinearForest) -> Result<Graph, ConstructionError> {
    let spec = HubSpec::turan(n, forest)?;
    let h = spec.hub_size;
    let mut g = Graph::empty(n);
    for u in 0..h {
        for v in u + 1..n {
            g.add_edge(u, v).expect("in range");
        }
    }
    if forest.census().all_odd() {
        g.add_edge(h, h + 1).expect("in range");
    }
    Ok(g)
}

/// The extremal coloring for the path `P_k`: a rainbow hub of `⌊(k−1)/2⌋ − 1`
/// vertices and 1 (odd `k`) or 2 (even `k`) interior colors.
pub fn build_path_coloring(n: usize, k: usize) -> Result<EdgeColoring, ConstructionError> {
    if k < 3 {
        return Err(ConstructionError::Precondition(format!("k = {k}: every edge is a rainbow P_2")));
    }
    if n < k {
        return Err(ConstructionError::Precondition(format!("n = {n} < k = {k}")));
    }
    let hub = (k - 1) / 2 - 1;
    let interior = if k.is_multiple_of(2) { 2 } else { 1 };
    Ok(hub_coloring(n, hub, interior, InteriorArrangement::SingleEdgeSecondColor))
}

/// The extremal coloring for a linear forest with an even component. Not
/// checked; see [`build_forest_coloring_verified`].
pub fn build_forest_coloring(
    n: usize,
    forest: &LinearForest,
    arrangement: InteriorArrangement,
) -> Result<EdgeColoring, ConstructionError> {
    let spec = HubSpec::anti_ramsey(n, forest, arrangement)?;
    Ok(hub_coloring(n, spec.hub_size, spec.interior_colors, arrangement))
}

/// [`build_forest_coloring`] followed by an exhaustive rainbow search; fails
/// with the witness if the coloring contains a rainbow copy.
pub fn build_forest_coloring_verified(
    n: usize,
    forest: &LinearForest,
    arrangement: InteriorArrangement,
) -> Result<EdgeColoring, ConstructionError> {
    let c = build_forest_coloring(n, forest, arrangement)?;
    verify_rainbow_free(&c, forest)?;
    Ok(c)
}

pub fn verify_rainbow_free(c: &EdgeColoring, forest: &LinearForest) -> Result<(), ConstructionError> {
    match find_rainbow(c, forest) {
        Some(e) => Err(ConstructionError::RainbowCopy(e)),
        None => Ok(()),
    }
}

pub fn verify_forest_free(g: &Graph, forest: &LinearForest) -> Result<(), ConstructionError> {
    match contains_subgraph(g, forest) {
        Some(e) => Err(ConstructionError::ContainsCopy(e)),
        None => Ok(()),
    }
}

/// Among the `hub_size`-subsets `U` of `within`, one maximizing the number of
/// common neighbors of `U` outside `within`. Ties go to the lexicographically
/// smallest sorted vertex list.
pub fn hub_search(g: &Graph, within: &[usize], hub_size: usize) -> Result<(Vec<usize>, usize), ConstructionError> {
    let pool = VertexSet::from_vertices(g.order(), within.iter().copied())
        .map_err(|e| ConstructionError::Precondition(e.to_string()))?;
    let members = pool.to_vec();
    if hub_size > members.len() {
        return Err(ConstructionError::Precondition(format!(
            "hub size {hub_size} exceeds the {} candidate vertices",
            members.len()
        )));
    }
    let mut best: Option<(Vec<usize>, usize)> = None;
    for u in members.iter().copied().combinations(hub_size) {
        let mut common = g.common_neighborhood_of(&u).expect("validated");
        common.difference_with(&pool);
        let size = common.len();
        if best.as_ref().is_none_or(|(_, b)| size > *b) {
            best = Some((u, size));
        }
    }
    Ok(best.expect("at least one subset"))
}

/// Color count the extremal colorings are meant to reach.
pub fn expected_colors(n: usize, forest: &LinearForest) -> Result<u128, ConstructionError> {
    Ok(formulas::ar_linear_forest(n as u64, forest)?.value)
}
