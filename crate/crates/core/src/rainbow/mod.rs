//! Rainbow and plain detection of linear forests, representing graphs, and
//! recombination of representing graphs.

mod detect;
mod recombine;
mod representing;

use std::collections::HashSet;

use serde::Serialize;

use crate::coloring::EdgeColoring;
use crate::forest::LinearForest;
use crate::graph::Graph;

pub(crate) use detect::{Colors, Detector, Host};
pub use recombine::{recombine_representing, RecombineError};
pub use representing::{representing_graphs, sample_representing, RepresentingGraph, RepresentingGraphs};

/// A copy of a linear forest inside a host graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Embedding {
    pub forest: LinearForest,
    /// Host vertices of each path, in the forest's part order.
    pub paths: Vec<Vec<usize>>,
    /// Host edges used, normalized `(min, max)`.
    pub edges: Vec<(usize, usize)>,
    /// Colors of `edges`, for rainbow copies.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub colors: Option<Vec<u32>>,
}

impl Embedding {
    fn from_paths(forest: &LinearForest, paths: Vec<Vec<usize>>, coloring: Option<&EdgeColoring>) -> Self {
        let edges: Vec<(usize, usize)> =
            paths.iter().flat_map(|p| p.windows(2).map(|w| (w[0].min(w[1]), w[0].max(w[1])))).collect();
        let colors = coloring.map(|c| edges.iter().map(|&(u, v)| c.color(u, v)).collect());
        Embedding { forest: forest.clone(), paths, edges, colors }
    }

    /// Checks the shape against the forest and every edge against `g`.
    pub fn is_valid_in(&self, g: &Graph) -> bool {
        let lens: Vec<usize> = self.paths.iter().map(|p| p.len()).collect();
        if lens != self.forest.parts() || self.edges.len() != self.forest.size() {
            return false;
        }
        let mut seen = HashSet::new();
        if !self.paths.iter().flatten().all(|&v| v < g.order() && seen.insert(v)) {
            return false;
        }
        self.paths.iter().all(|p| p.windows(2).all(|w| g.has_edge(w[0], w[1])))
    }

    /// Valid in `K_n` and all edge colors distinct under `c`.
    pub fn is_rainbow_in(&self, c: &EdgeColoring) -> bool {
        if !self.is_valid_in(&c.host()) {
            return false;
        }
        let mut seen = HashSet::new();
        self.edges.iter().all(|&(u, v)| seen.insert(c.color(u, v)))
    }
}

pub(crate) fn graph_host(g: &Graph) -> Host<'_> {
    Host { n: g.order(), words: g.words(), adj: g.raw_adjacency(), colors: None }
}

/// Searches for a rainbow copy of `forest` in the colored `K_n`.
pub fn find_rainbow(c: &EdgeColoring, forest: &LinearForest) -> Option<Embedding> {
    find_rainbow_using(c, forest, None)
}

/// As [`find_rainbow`], restricted to copies that use the edge `anchor` when given.
pub fn find_rainbow_using(c: &EdgeColoring, forest: &LinearForest, anchor: Option<(usize, usize)>) -> Option<Embedding> {
    let host = c.host();
    let matrix = c.color_matrix();
    let view = Host {
        n: host.order(),
        words: host.words(),
        adj: host.raw_adjacency(),
        colors: Some(Colors { matrix: &matrix, bound: c.color_count(), distinct: c.color_count() }),
    };
    Detector::new().find(&view, forest.parts(), anchor).map(|p| Embedding::from_paths(forest, p, Some(c)))
}

/// Searches for a copy of `forest` in `g`.
pub fn contains_subgraph(g: &Graph, forest: &LinearForest) -> Option<Embedding> {
    contains_subgraph_using(g, forest, None)
}

/// As [`contains_subgraph`], restricted to copies through `anchor` when given.
pub fn contains_subgraph_using(g: &Graph, forest: &LinearForest, anchor: Option<(usize, usize)>) -> Option<Embedding> {
    Detector::new().find(&graph_host(g), forest.parts(), anchor).map(|p| Embedding::from_paths(forest, p, None))
}
