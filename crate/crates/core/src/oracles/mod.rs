//! Exact anti-Ramsey and Turán values for small `n` by branch and bound.
//!
//! Both searches walk the edges of `K_n` in lexicographic order. The top levels
//! of the tree are expanded into independent tasks; workers share a monotone
//! best value, so a worker may read a stale (smaller) bound, which only weakens
//! pruning. The reported value and `exhausted` flag do not depend on
//! scheduling; the witness may.

mod ar;
mod ex;

use std::sync::atomic::{AtomicBool, AtomicU64, AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::{Duration, Instant};

use serde::Serialize;
use thiserror::Error;

use crate::coloring::EdgeColoring;
use crate::forest::LinearForest;
use crate::graph::Graph;
use crate::rainbow::{contains_subgraph, find_rainbow};

pub use ar::brute_force_ar;
pub use ex::{brute_force_ex, brute_force_ex_with, ExOptions};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SearchBudget {
    pub max_nodes: u64,
    pub max_millis: u64,
    pub parallelism: usize,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget {
            max_nodes: 50_000_000_000,
            max_millis: 10 * 60 * 1000,
            parallelism: std::thread::available_parallelism().map_or(1, |p| p.get()),
        }
    }
}

impl SearchBudget {
    pub fn single_threaded() -> Self {
        SearchBudget { parallelism: 1, ..Self::default() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error("budget fields must be positive")]
    BadBudget,
    #[error("{0}")]
    Unsupported(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    Coloring(EdgeColoring),
    Graph(Graph),
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct SearchStats {
    pub nodes_visited: u64,
    /// Branches cut because the partial object already contains the forest
    /// (as a rainbow copy for colorings, as a subgraph for graphs).
    pub pruned_by_rainbow: u64,
    pub pruned_by_bound: u64,
    #[serde(serialize_with = "millis")]
    pub elapsed: Duration,
}

fn millis<S: serde::Serializer>(d: &Duration, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_f64(d.as_secs_f64() * 1000.0)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchReport {
    pub n: usize,
    pub forest: LinearForest,
    /// Best value found; optimal when `exhausted`.
    pub value: usize,
    pub witness: Witness,
    /// The whole tree was explored or pruned within budget.
    pub exhausted: bool,
    pub stats: SearchStats,
}

/// Re-checks a report's witness: recounts colors (or edges) against `value`
/// and reruns the detector.
pub fn verify_witness(report: &SearchReport, forest: &LinearForest) -> bool {
    match &report.witness {
        Witness::Coloring(c) => {
            c.order() == report.n && c.color_count() == report.value && find_rainbow(c, forest).is_none()
        }
        Witness::Graph(g) => {
            g.order() == report.n && g.edge_count() == report.value && contains_subgraph(g, forest).is_none()
        }
    }
}

/// State shared by the workers of one search.
struct Shared<W> {
    best: AtomicUsize,
    witness: Mutex<W>,
    nodes: AtomicU64,
    pruned_copy: AtomicU64,
    pruned_bound: AtomicU64,
    abort: AtomicBool,
    /// Some branch was abandoned because of the budget.
    stopped: AtomicBool,
    start: Instant,
    budget: SearchBudget,
}

impl<W> Shared<W> {
    fn new(best: usize, witness: W, budget: SearchBudget) -> Self {
        Shared {
            best: AtomicUsize::new(best),
            witness: Mutex::new(witness),
            nodes: AtomicU64::new(0),
            pruned_copy: AtomicU64::new(0),
            pruned_bound: AtomicU64::new(0),
            abort: AtomicBool::new(false),
            stopped: AtomicBool::new(false),
            start: Instant::now(),
            budget,
        }
    }

    #[inline]
    fn best(&self) -> usize {
        self.best.load(Ordering::Relaxed)
    }

    fn offer(&self, value: usize, make: impl FnOnce() -> W) {
        if value <= self.best() {
            return;
        }
        let mut w = self.witness.lock().unwrap();
        // re-check under the lock so the witness always matches `best`
        if value > self.best.load(Ordering::Relaxed) {
            *w = make();
            self.best.store(value, Ordering::Relaxed);
        }
    }

    fn aborted(&self) -> bool {
        self.abort.load(Ordering::Relaxed)
    }

    fn exhausted(&self) -> bool {
        !self.stopped.load(Ordering::Relaxed)
    }

    fn stats(&self) -> SearchStats {
        SearchStats {
            nodes_visited: self.nodes.load(Ordering::Relaxed),
            pruned_by_rainbow: self.pruned_copy.load(Ordering::Relaxed),
            pruned_by_bound: self.pruned_bound.load(Ordering::Relaxed),
            elapsed: self.start.elapsed(),
        }
    }
}

const FLUSH_EVERY: u64 = 1 << 12;

/// Per-worker counters, flushed into [`Shared`] in batches.
#[derive(Default)]
struct Local {
    nodes: u64,
    pruned_copy: u64,
    pruned_bound: u64,
}

impl Local {
    /// Counts a node; returns false once the search must stop.
    #[inline]
    fn tick<W>(&mut self, shared: &Shared<W>) -> bool {
        self.nodes += 1;
        if self.nodes.is_multiple_of(FLUSH_EVERY) {
            self.flush(shared);
        }
        if shared.aborted() {
            shared.stopped.store(true, Ordering::Relaxed);
            return false;
        }
        true
    }

    fn flush<W>(&mut self, shared: &Shared<W>) {
        let total = shared.nodes.fetch_add(self.nodes, Ordering::Relaxed) + self.nodes;
        shared.pruned_copy.fetch_add(self.pruned_copy, Ordering::Relaxed);
        shared.pruned_bound.fetch_add(self.pruned_bound, Ordering::Relaxed);
        *self = Local::default();
        let b = &shared.budget;
        if total >= b.max_nodes || shared.start.elapsed() >= Duration::from_millis(b.max_millis) {
            shared.abort.store(true, Ordering::Relaxed);
        }
    }
}

/// Runs `work` on every task, on `parallelism` threads.
fn run_tasks<T: Sync, W: Send>(tasks: &[T], shared: &Shared<W>, work: impl Fn(&T, &mut Local) + Sync) {
    let run = |t: &T| {
        if shared.aborted() {
            shared.stopped.store(true, Ordering::Relaxed);
            return;
        }
        let mut local = Local::default();
        work(t, &mut local);
        local.flush(shared);
    };
    if shared.budget.parallelism <= 1 {
        tasks.iter().for_each(run);
    } else {
        use rayon::prelude::*;
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(shared.budget.parallelism)
            .build()
            .expect("thread pool");
        pool.install(|| tasks.par_iter().for_each(run));
    }
}

fn check_budget(budget: &SearchBudget) -> Result<(), SearchError> {
    if budget.max_nodes == 0 || budget.max_millis == 0 || budget.parallelism == 0 {
        Err(SearchError::BadBudget)
    } else {
        Ok(())
    }
}

/// Levels of the tree expanded into parallel tasks.
const SPLIT_DEPTH: usize = 4;

#[cfg(test)]
mod tests {
    use super::*;

    fn lf(s: &str) -> LinearForest {
        s.parse().unwrap()
    }

    #[test]
    fn tampered_value_fails() {
        let f = lf("3,2");
        let mut r = brute_force_ar(5, &f, SearchBudget::single_threaded()).unwrap();
        assert!(verify_witness(&r, &f));
        r.value += 1;
        assert!(!verify_witness(&r, &f));

        let mut r = brute_force_ex(5, &lf("4"), SearchBudget::single_threaded()).unwrap();
        assert!(verify_witness(&r, &lf("4")));
        r.value += 1;
        assert!(!verify_witness(&r, &lf("4")));
    }

    #[test]
    fn recolored_witness_fails() {
        let f = lf("4");
        let r = brute_force_ar(4, &f, SearchBudget::single_threaded()).unwrap();
        let Witness::Coloring(c) = &r.witness else { panic!() };
        // give the path 0-1-2-3 three distinct colors, keeping the count at 3
        let mut labels = c.colors().to_vec();
        let idx = |u, v| crate::graph::edge_index(4, u, v);
        labels[idx(0, 1)] = 0;
        labels[idx(1, 2)] = 1;
        labels[idx(2, 3)] = 2;
        for (u, v) in [(0, 2), (0, 3), (1, 3)] {
            labels[idx(u, v)] = 0;
        }
        let bad = EdgeColoring::from_labels(4, &labels).unwrap();
        assert_eq!(bad.color_count(), r.value);
        let tampered = SearchReport { witness: Witness::Coloring(bad), ..r };
        assert!(!verify_witness(&tampered, &f));
    }

    #[test]
    fn report_stats_count_work() {
        let r = brute_force_ar(5, &lf("3,2"), SearchBudget::single_threaded()).unwrap();
        assert!(r.stats.nodes_visited > 0);
        assert!(r.stats.pruned_by_rainbow > 0);
        assert!(r.stats.pruned_by_bound > 0);
    }
}
