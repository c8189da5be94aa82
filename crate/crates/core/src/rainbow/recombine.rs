use std::collections::HashSet;

use thiserror::Error;

use super::RepresentingGraph;
use crate::coloring::EdgeColoring;
use crate::graph::VertexSet;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RecombineError {
    #[error("U must be nonempty")]
    EmptyU,
    #[error("vertex {0} is out of range")]
    VertexOutOfRange(usize),
    #[error("U and W share vertex {0}")]
    Overlap(usize),
    #[error("{0} is not a representing graph of the coloring")]
    NotRepresenting(&'static str),
    #[error("U has {have} common neighbors in L1, needs {need}")]
    UNeighborhood { have: usize, need: usize },
    #[error("W has {have} common neighbors in L2, needs {need}")]
    WNeighborhood { have: usize, need: usize },
}

/// Merges two representing graphs of `c`: `U` keeps `s` common neighbors from
/// `l1` and `W` gets `s` common neighbors from `l2`.
///
/// `U`'s star to a set `X` of `s` common neighbors is taken from `l1`; these
/// `s·|U|` edges carry distinct colors. Each such color is on at most one edge
/// of `l2`, so at most `s·|U|` of `W`'s common neighbors in `l2` see one of
/// those colors on an edge to `W`. The first `s` remaining neighbors `Y'` are
/// connected to `W` by overriding the representatives of the colors of the
/// `W`–`Y'` edges, none of which is a `U`–`X` color.
pub fn recombine_representing(
    c: &EdgeColoring,
    u: &[usize],
    w: &[usize],
    s: usize,
    l1: &RepresentingGraph,
    l2: &RepresentingGraph,
) -> Result<RepresentingGraph, RecombineError> {
    let n = c.order();
    if u.is_empty() {
        return Err(RecombineError::EmptyU);
    }
    if let Some(&v) = u.iter().chain(w).find(|&&v| v >= n) {
        return Err(RecombineError::VertexOutOfRange(v));
    }
    if let Some(&v) = w.iter().find(|v| u.contains(v)) {
        return Err(RecombineError::Overlap(v));
    }
    if !l1.is_valid_for(c) {
        return Err(RecombineError::NotRepresenting("L1"));
    }
    if !l2.is_valid_for(c) {
        return Err(RecombineError::NotRepresenting("L2"));
    }
    let set = |vs: &[usize]| VertexSet::from_vertices(n, vs.iter().copied()).expect("range checked");

    let nu = l1.graph().common_neighborhood(&set(u)).expect("range checked");
    if nu.len() < s {
        return Err(RecombineError::UNeighborhood { have: nu.len(), need: s });
    }
    if w.is_empty() {
        return Ok(l1.clone());
    }
    let nw = l2.graph().common_neighborhood(&set(w)).expect("range checked");
    let need = s + s * u.len();
    if nw.len() < need {
        return Err(RecombineError::WNeighborhood { have: nw.len(), need });
    }

    let x: Vec<usize> = nu.iter().take(s).collect();
    let blocked: HashSet<u32> = x.iter().flat_map(|&xv| u.iter().map(move |&uv| c.color(xv, uv))).collect();
    let y: Vec<usize> = nw.iter().filter(|&yv| w.iter().all(|&wv| !blocked.contains(&c.color(wv, yv)))).take(s).collect();
    debug_assert_eq!(y.len(), s);

    let mut merged = l1.clone();
    for &yv in &y {
        for &wv in w {
            merged.set(c.color(wv, yv), (wv, yv));
        }
    }
    Ok(merged)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rainbow::sample_representing;

    #[test]
    fn empty_w_returns_first_graph() {
        let c = EdgeColoring::from_fn(6, |u, v| (u * v) % 5);
        let l1 = sample_representing(&c, 1);
        let l2 = sample_representing(&c, 2);
        let nu = l1.graph().common_neighborhood_of(&[0]).unwrap().len();
        let out = recombine_representing(&c, &[0], &[], nu, &l1, &l2).unwrap();
        assert_eq!(out, l1);
    }

    #[test]
    fn precondition_errors() {
        let c = EdgeColoring::rainbow(6);
        let l = sample_representing(&c, 0);
        assert_eq!(recombine_representing(&c, &[], &[1], 1, &l, &l), Err(RecombineError::EmptyU));
        assert_eq!(recombine_representing(&c, &[0, 1], &[1], 1, &l, &l), Err(RecombineError::Overlap(1)));
        assert_eq!(recombine_representing(&c, &[7], &[], 1, &l, &l), Err(RecombineError::VertexOutOfRange(7)));
        assert_eq!(
            recombine_representing(&c, &[0], &[1], 3, &l, &l),
            Err(RecombineError::WNeighborhood { have: 5, need: 6 })
        );
        assert_eq!(
            recombine_representing(&c, &[0, 1], &[2], 5, &l, &l),
            Err(RecombineError::UNeighborhood { have: 4, need: 5 })
        );
        let other = sample_representing(&EdgeColoring::monochromatic(6), 0);
        assert_eq!(recombine_representing(&c, &[0], &[1], 1, &other, &l), Err(RecombineError::NotRepresenting("L1")));
    }

    #[test]
    fn rainbow_host_keeps_everything() {
        let c = EdgeColoring::rainbow(10);
        let l = sample_representing(&c, 0);
        let out = recombine_representing(&c, &[0, 1], &[2], 2, &l, &l).unwrap();
        assert!(out.is_valid_for(&c));
        assert_eq!(out.graph(), l.graph());
    }
}
