//! Maximum number of edges in an `F`-free graph on `n` vertices.
//!
//! Edges of `K_n` are decided in lexicographic order, include before exclude.
//! An include is kept only if no copy of the forest passes through the new
//! edge. When the forest has at least two edges the search may assume the edge
//! `{0, 1}` is present: an optimum has an edge, and relabeling moves it there.

use crate::forest::LinearForest;
use crate::formulas::erdos_gallai_bound;
use crate::graph::{lex_pairs, Graph};
use crate::rainbow::{graph_host, Detector};

use super::{check_budget, run_tasks, Local, SearchBudget, SearchError, SearchReport, Shared, Witness, SPLIT_DEPTH};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExOptions {
    /// For a single path `P_k`, never look for more than `(k-2)n/2` edges.
    pub erdos_gallai: bool,
    /// Fix the first edge `{0, 1}` as present.
    pub fix_first_edge: bool,
}

impl Default for ExOptions {
    fn default() -> Self {
        ExOptions { erdos_gallai: true, fix_first_edge: true }
    }
}

/// Exact `ex(n, F)` by exhaustive search. Use small `n` (8 or below).
pub fn brute_force_ex(n: usize, forest: &LinearForest, budget: SearchBudget) -> Result<SearchReport, SearchError> {
    brute_force_ex_with(n, forest, budget, ExOptions::default())
}

pub fn brute_force_ex_with(
    n: usize,
    forest: &LinearForest,
    budget: SearchBudget,
    opts: ExOptions,
) -> Result<SearchReport, SearchError> {
    check_budget(&budget)?;
    if n == 0 {
        return Err(SearchError::Unsupported("need n >= 1".into()));
    }
    let edges: Vec<(usize, usize)> = lex_pairs(n).collect();
    let total = edges.len();
    if forest.order() > n {
        let shared = Shared::new(total, (), budget);
        return Ok(report(n, forest, total, Graph::complete(n).expect("n >= 1"), &shared));
    }
    let e_f = forest.size();
    if e_f == 1 {
        let shared = Shared::new(0, (), budget);
        return Ok(report(n, forest, 0, Graph::empty(n), &shared));
    }

    let mut cap = total;
    if opts.erdos_gallai && forest.components() == 1 {
        let eg = erdos_gallai_bound(n as u64, forest.order() as u64).expect("k >= 2");
        cap = cap.min(eg.floor().to_integer() as usize);
    }

    // one edge is always F-free here
    let shared = Shared::new(1, vec![edges[0]], budget);

    let depth = SPLIT_DEPTH.min(total);
    let prefixes: Vec<Vec<bool>> = (0u32..1 << depth)
        .map(|mask| (0..depth).map(|i| mask >> (depth - 1 - i) & 1 == 0).collect())
        .filter(|p: &Vec<bool>| !opts.fix_first_edge || p[0])
        .collect();

    run_tasks(&prefixes, &shared, |prefix: &Vec<bool>, local: &mut Local| {
        let mut st = State::new(n, &edges, forest.parts(), cap);
        for (i, &take) in prefix.iter().enumerate() {
            if take {
                st.g.set_edge(edges[i].0, edges[i].1);
                st.count += 1;
                if st.copy_through(i) {
                    local.pruned_copy += 1;
                    return;
                }
            }
        }
        st.dfs(prefix.len(), &shared, local);
    });

    let value = shared.best();
    let chosen = std::mem::take(&mut *shared.witness.lock().unwrap());
    let witness = Graph::from_edges(n, chosen).expect("edges in range");
    Ok(report(n, forest, value, witness, &shared))
}

fn report<W>(n: usize, forest: &LinearForest, value: usize, g: Graph, shared: &Shared<W>) -> SearchReport {
    SearchReport {
        n,
        forest: forest.clone(),
        value,
        witness: Witness::Graph(g),
        exhausted: shared.exhausted(),
        stats: shared.stats(),
    }
}

struct State<'a> {
    g: Graph,
    count: usize,
    edges: &'a [(usize, usize)],
    parts: &'a [usize],
    cap: usize,
    det: Detector,
}

impl<'a> State<'a> {
    fn new(n: usize, edges: &'a [(usize, usize)], parts: &'a [usize], cap: usize) -> Self {
        State { g: Graph::empty(n), count: 0, edges, parts, cap, det: Detector::new() }
    }

    fn copy_through(&mut self, i: usize) -> bool {
        self.det.find(&graph_host(&self.g), self.parts, Some(self.edges[i])).is_some()
    }

    fn dfs(&mut self, i: usize, shared: &Shared<Vec<(usize, usize)>>, local: &mut Local) {
        if !local.tick(shared) {
            return;
        }
        let best = shared.best();
        if best >= self.cap {
            local.pruned_bound += 1;
            return;
        }
        let remaining = self.edges.len() - i;
        if self.count + remaining <= best {
            local.pruned_bound += 1;
            return;
        }
        if remaining == 0 {
            shared.offer(self.count, || self.g.edges().collect());
            return;
        }
        let (u, v) = self.edges[i];
        self.g.set_edge(u, v);
        self.count += 1;
        if self.copy_through(i) {
            local.pruned_copy += 1;
        } else {
            self.dfs(i + 1, shared, local);
        }
        self.g.remove_edge(u, v);
        self.count -= 1;
        if shared.aborted() {
            return;
        }
        self.dfs(i + 1, shared, local);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::brute;
    use crate::oracles::verify_witness;

    fn lf(s: &str) -> LinearForest {
        s.parse().unwrap()
    }

    fn ex(n: usize, f: &str) -> usize {
        let r = brute_force_ex(n, &lf(f), SearchBudget::single_threaded()).unwrap();
        assert!(r.exhausted);
        assert!(verify_witness(&r, &lf(f)));
        r.value
    }

    fn naive_ex(n: usize, parts: &[usize]) -> usize {
        let edges: Vec<_> = lex_pairs(n).collect();
        (0u64..1 << edges.len())
            .filter_map(|mask| {
                let g = Graph::from_edges(n, edges.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, e)| *e))
                    .unwrap();
                (!brute::has_subgraph(&g, parts)).then(|| g.edge_count())
            })
            .max()
            .unwrap()
    }

    #[test]
    fn small_values() {
        assert_eq!(ex(6, "3"), 3);
        assert_eq!(ex(5, "4"), 4);
        assert_eq!(ex(5, "2,2"), 4);
    }

    #[test]
    fn agrees_with_unpruned_enumeration() {
        for (n, parts) in [(4, vec![3]), (5, vec![3]), (5, vec![4]), (5, vec![2, 2]), (5, vec![3, 2]), (4, vec![2, 2])] {
            let f = LinearForest::new(parts.clone()).unwrap();
            assert_eq!(ex(n, &f.spec()), naive_ex(n, &parts), "n={n} F={f}");
        }
    }

    #[test]
    fn options_do_not_change_values() {
        let plain = ExOptions { erdos_gallai: false, fix_first_edge: false };
        for (n, f) in [(6, "4"), (6, "3,2"), (7, "3")] {
            let a = brute_force_ex_with(n, &lf(f), SearchBudget::single_threaded(), plain).unwrap();
            assert_eq!(a.value, ex(n, f), "n={n} F={f}");
        }
    }

    #[test]
    fn path_on_three_vertices_is_a_matching() {
        for n in 2..=8 {
            assert_eq!(ex(n, "3"), n / 2, "n={n}");
        }
    }

    #[test]
    fn degenerate_forests() {
        assert_eq!(ex(5, "2"), 0);
        assert_eq!(ex(3, "4"), 3);
    }

    #[test]
    fn parallel_matches_sequential() {
        let par = SearchBudget { parallelism: 4, ..SearchBudget::default() };
        for f in ["4", "3,3", "2,2,2"] {
            let r = brute_force_ex(7, &lf(f), par).unwrap();
            assert_eq!(r.value, ex(7, f), "{f}");
            assert!(verify_witness(&r, &lf(f)));
        }
    }
}
