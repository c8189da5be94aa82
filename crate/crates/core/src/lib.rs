//! Anti-Ramsey and Turán numbers of linear forests.
//!
//! * [`formulas`]: closed-form values with their ranges of validity.
//! * [`constructions`]: extremal graphs and extremal edge-colorings.
//! * [`rainbow`]: rainbow / plain detection of linear forests, representing
//!   graphs and their recombination.
//! * [`oracles`]: exact branch-and-bound searches for small `n`.

pub mod coloring;
pub mod constructions;
pub mod error;
pub mod forest;
pub mod formulas;
pub mod graph;
pub mod graph6;
pub mod oracles;
pub mod rainbow;

#[cfg(test)]
mod brute;

pub use coloring::EdgeColoring;
pub use error::{ColoringError, ForestError, FormulaError, GraphError, ParseError};
pub use forest::LinearForest;
pub use formulas::FormulaResult;
pub use graph::{Graph, VertexSet};
pub use rainbow::{contains_subgraph, find_rainbow, Embedding, RepresentingGraph};
