//! Slow reference implementations used only by unit tests.

use crate::coloring::EdgeColoring;
use crate::graph::Graph;

/// Tries every injective sequence of `Σ parts` vertices, cut into consecutive
/// paths, and checks each path edge with `edge`; with `color` set, the edge
/// colors must be pairwise distinct.
pub(crate) fn has_copy(
    n: usize,
    parts: &[usize],
    edge: &dyn Fn(usize, usize) -> bool,
    color: Option<&dyn Fn(usize, usize) -> u32>,
) -> bool {
    let f: usize = parts.iter().sum();
    if f > n {
        return false;
    }
    let mut seq = Vec::with_capacity(f);
    let mut used = vec![false; n];
    fn rec(
        n: usize,
        f: usize,
        parts: &[usize],
        seq: &mut Vec<usize>,
        used: &mut Vec<bool>,
        edge: &dyn Fn(usize, usize) -> bool,
        color: Option<&dyn Fn(usize, usize) -> u32>,
    ) -> bool {
        if seq.len() == f {
            let mut colors = Vec::new();
            let mut at = 0;
            for &t in parts {
                for i in at..at + t - 1 {
                    if !edge(seq[i], seq[i + 1]) {
                        return false;
                    }
                    if let Some(col) = color {
                        colors.push(col(seq[i], seq[i + 1]));
                    }
                }
                at += t;
            }
            colors.sort_unstable();
            return colors.windows(2).all(|w| w[0] != w[1]);
        }
        for v in 0..n {
            if !used[v] {
                used[v] = true;
                seq.push(v);
                if rec(n, f, parts, seq, used, edge, color) {
                    return true;
                }
                seq.pop();
                used[v] = false;
            }
        }
        false
    }
    rec(n, f, parts, &mut seq, &mut used, edge, color)
}

pub(crate) fn has_rainbow(c: &EdgeColoring, parts: &[usize]) -> bool {
    has_copy(c.order(), parts, &|u, v| u != v, Some(&|u, v| c.color(u, v)))
}

pub(crate) fn has_subgraph(g: &Graph, parts: &[usize]) -> bool {
    has_copy(g.order(), parts, &|u, v| g.has_edge(u, v), None)
}
