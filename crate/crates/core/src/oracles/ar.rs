//! Maximum number of colors in a rainbow-`F`-free coloring of `K_n`.
//!
//! Colorings are enumerated as restricted-growth strings over the edges in
//! lexicographic order, so each partition of `E(K_n)` into color classes is
//! visited once. After coloring edge `i`, only rainbow copies through edge `i`
//! can be new, which is what the anchored detector checks.

use crate::coloring::{EdgeColoring, NO_COLOR};
use crate::forest::LinearForest;
use crate::graph::{lex_pairs, words_for, WORD};
use crate::rainbow::{Colors, Detector, Host};

use super::{check_budget, run_tasks, Local, SearchBudget, SearchError, SearchReport, Shared, Witness, SPLIT_DEPTH};

/// Exact `AR(n, F)` by exhaustive search. Use small `n` (7 or below is
/// comfortable).
pub fn brute_force_ar(n: usize, forest: &LinearForest, budget: SearchBudget) -> Result<SearchReport, SearchError> {
    search(n, forest, budget, Tuning::default())
}

type Observer<'a> = &'a (dyn Fn(&[u32]) + Sync);

#[derive(Clone, Copy)]
pub(super) struct Tuning<'a> {
    pub prune_bound: bool,
    /// Called on every complete coloring reached.
    pub observer: Option<Observer<'a>>,
}

impl Default for Tuning<'_> {
    fn default() -> Self {
        Tuning { prune_bound: true, observer: None }
    }
}

pub(super) fn search(
    n: usize,
    forest: &LinearForest,
    budget: SearchBudget,
    tuning: Tuning,
) -> Result<SearchReport, SearchError> {
    check_budget(&budget)?;
    let e_f = forest.size();
    if e_f < 2 {
        return Err(SearchError::Unsupported("every coloring of K_n (n >= 2) has a rainbow P2".into()));
    }
    if n < 2 {
        return Err(SearchError::Unsupported("need n >= 2".into()));
    }
    let edges: Vec<(usize, usize)> = lex_pairs(n).collect();
    let total = edges.len();
    if forest.order() > n {
        let shared = Shared::new(total, (), budget);
        return Ok(report(n, forest, total, EdgeColoring::rainbow(n), &shared));
    }

    // e(F) - 1 colors never give a rainbow F
    let start = (e_f - 1).min(total).max(1);
    let initial = EdgeColoring::from_fn(n, |u, v| {
        let i = crate::graph::edge_index(n, u, v);
        i.min(start - 1)
    });
    let shared = Shared::new(start, initial.colors().to_vec(), budget);

    let depth = SPLIT_DEPTH.min(total);
    let mut prefixes = Vec::new();
    rgs_prefixes(depth, &mut Vec::new(), 0, &mut prefixes);

    run_tasks(&prefixes, &shared, |prefix: &Vec<u32>, local: &mut Local| {
        let mut st = State::new(n, &edges, forest.parts());
        for (i, &c) in prefix.iter().enumerate() {
            st.assign(i, c);
            if st.has_new_rainbow(i) {
                local.pruned_copy += 1;
                return;
            }
        }
        st.dfs(prefix.len(), &shared, local, tuning);
    });

    let value = shared.best();
    let labels = std::mem::take(&mut *shared.witness.lock().unwrap());
    let witness = EdgeColoring::from_labels(n, &labels).expect("complete labeling");
    debug_assert_eq!(witness.color_count(), value);
    Ok(report(n, forest, value, witness, &shared))
}

fn report<W>(n: usize, forest: &LinearForest, value: usize, c: EdgeColoring, shared: &Shared<W>) -> SearchReport {
    SearchReport {
        n,
        forest: forest.clone(),
        value,
        witness: Witness::Coloring(c),
        exhausted: shared.exhausted(),
        stats: shared.stats(),
    }
}

/// All restricted-growth strings of length `len`, fresh block first.
fn rgs_prefixes(len: usize, cur: &mut Vec<u32>, blocks: u32, out: &mut Vec<Vec<u32>>) {
    if cur.len() == len {
        out.push(cur.clone());
        return;
    }
    for c in child_order(blocks) {
        cur.push(c);
        rgs_prefixes(len, cur, blocks.max(c + 1), out);
        cur.pop();
    }
}

/// Color choices at a node with `blocks` classes so far: a new class, then the
/// existing ones.
fn child_order(blocks: u32) -> impl Iterator<Item = u32> {
    std::iter::once(blocks).chain(0..blocks)
}

struct State<'a> {
    n: usize,
    words: usize,
    edges: &'a [(usize, usize)],
    parts: &'a [usize],
    e_f: usize,
    adj: Vec<u64>,
    matrix: Vec<u32>,
    labels: Vec<u32>,
    /// Class sizes; `blocks` counts the nonzero ones.
    sizes: Vec<usize>,
    blocks: usize,
    det: Detector,
}

impl<'a> State<'a> {
    fn new(n: usize, edges: &'a [(usize, usize)], parts: &'a [usize]) -> Self {
        let words = words_for(n);
        State {
            n,
            words,
            edges,
            parts,
            e_f: parts.iter().map(|t| t - 1).sum(),
            adj: vec![0; n * words],
            matrix: vec![NO_COLOR; n * n],
            labels: Vec::with_capacity(edges.len()),
            sizes: vec![0; edges.len() + 1],
            blocks: 0,
            det: Detector::new(),
        }
    }

    fn assign(&mut self, i: usize, c: u32) {
        debug_assert_eq!(self.labels.len(), i);
        let (u, v) = self.edges[i];
        self.adj[u * self.words + v / WORD] |= 1 << (v % WORD);
        self.adj[v * self.words + u / WORD] |= 1 << (u % WORD);
        self.matrix[u * self.n + v] = c;
        self.matrix[v * self.n + u] = c;
        self.labels.push(c);
        if self.sizes[c as usize] == 0 {
            self.blocks += 1;
        }
        self.sizes[c as usize] += 1;
    }

    fn unassign(&mut self, i: usize) {
        let (u, v) = self.edges[i];
        self.adj[u * self.words + v / WORD] &= !(1 << (v % WORD));
        self.adj[v * self.words + u / WORD] &= !(1 << (u % WORD));
        self.matrix[u * self.n + v] = NO_COLOR;
        self.matrix[v * self.n + u] = NO_COLOR;
        let c = self.labels.pop().unwrap() as usize;
        self.sizes[c] -= 1;
        if self.sizes[c] == 0 {
            self.blocks -= 1;
        }
    }

    /// Rainbow copy of the forest through edge `i` in the colored prefix.
    fn has_new_rainbow(&mut self, i: usize) -> bool {
        if self.blocks < self.e_f {
            return false;
        }
        let host = Host {
            n: self.n,
            words: self.words,
            adj: &self.adj,
            colors: Some(Colors { matrix: &self.matrix, bound: self.sizes.len(), distinct: self.blocks }),
        };
        self.det.find(&host, self.parts, Some(self.edges[i])).is_some()
    }

    fn dfs(&mut self, i: usize, shared: &Shared<Vec<u32>>, local: &mut Local, tuning: Tuning) {
        if !local.tick(shared) {
            return;
        }
        let remaining = self.edges.len() - i;
        if remaining == 0 {
            if let Some(obs) = tuning.observer {
                obs(&self.labels);
            }
            shared.offer(self.blocks, || self.labels.clone());
            return;
        }
        for c in child_order(self.blocks as u32) {
            let blocks_after = self.blocks.max(c as usize + 1);
            if tuning.prune_bound && blocks_after + remaining - 1 <= shared.best() {
                local.pruned_bound += 1;
                continue;
            }
            self.assign(i, c);
            if self.has_new_rainbow(i) {
                local.pruned_copy += 1;
            } else {
                self.dfs(i + 1, shared, local, tuning);
            }
            self.unassign(i);
            if shared.aborted() {
                return;
            }
        }
    }
}
