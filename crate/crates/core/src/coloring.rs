//! Edge-colorings of complete graphs.
//!
//! Color ids are always dense and canonical: scanning the edges of `K_n` in
//! lexicographic order, each new color receives the next unused id. Two
//! colorings that differ only by a renaming of colors therefore compare equal.
//!
//! Text format: a header line `n m`, then one line `u v c` for each pair
//! `u < v`, whitespace separated, 0-based. Lines may appear in any order.

use std::collections::HashMap;
use std::fmt::Write as _;

use crate::error::{ColoringError, GraphError, ParseError};
use crate::graph::{edge_index, lex_pairs, Graph};

/// Marker for "no edge" in a dense color matrix.
pub(crate) const NO_COLOR: u32 = u32::MAX;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct EdgeColoring {
    n: usize,
    /// Color of each pair, indexed by [`edge_index`].
    colors: Vec<u32>,
    m: usize,
}

impl EdgeColoring {
    /// Builds a coloring from one label per pair in lexicographic order. Labels
    /// are arbitrary and get renumbered canonically.
    pub fn from_labels<T: Eq + std::hash::Hash + Copy>(n: usize, labels: &[T]) -> Result<Self, ColoringError> {
        let expected = n * n.saturating_sub(1) / 2;
        if labels.len() != expected {
            return Err(ColoringError::WrongEdgeCount { n, expected, got: labels.len() });
        }
        let mut ids: HashMap<T, u32> = HashMap::new();
        let colors = labels
            .iter()
            .map(|l| {
                let next = ids.len() as u32;
                *ids.entry(*l).or_insert(next)
            })
            .collect();
        Ok(EdgeColoring { n, colors, m: ids.len() })
    }

    /// Builds a coloring from a function of the (ordered) pair `u < v`.
    pub fn from_fn<T, F>(n: usize, mut f: F) -> Self
    where
        T: Eq + std::hash::Hash + Copy,
        F: FnMut(usize, usize) -> T,
    {
        let labels: Vec<T> = lex_pairs(n).map(|(u, v)| f(u, v)).collect();
        Self::from_labels(n, &labels).expect("one label per pair")
    }

    /// Every edge its own color.
    pub fn rainbow(n: usize) -> Self {
        Self::from_fn(n, |u, v| (u, v))
    }

    /// One color on every edge.
    pub fn monochromatic(n: usize) -> Self {
        Self::from_fn(n, |_, _| 0u8)
    }

    pub fn order(&self) -> usize {
        self.n
    }

    /// Number of distinct colors `m`.
    pub fn color_count(&self) -> usize {
        self.m
    }

    pub fn edge_count(&self) -> usize {
        self.colors.len()
    }

    /// Color of the pair `{u, v}`; panics if `u == v` or out of range.
    #[inline]
    pub fn color(&self, u: usize, v: usize) -> u32 {
        let (a, b) = if u < v { (u, v) } else { (v, u) };
        assert!(a != b && b < self.n, "({u}, {v}) is not an edge of K_{}", self.n);
        self.colors[edge_index(self.n, a, b)]
    }

    /// Colors in lexicographic edge order.
    pub fn colors(&self) -> &[u32] {
        &self.colors
    }

    /// `(u, v, color)` in lexicographic edge order.
    pub fn colored_edges(&self) -> impl Iterator<Item = (usize, usize, u32)> + '_ {
        lex_pairs(self.n).zip(self.colors.iter()).map(|((u, v), &c)| (u, v, c))
    }

    /// Edges of each color class, classes indexed by color id, edges in
    /// lexicographic order.
    pub fn classes(&self) -> Vec<Vec<(usize, usize)>> {
        let mut classes = vec![Vec::new(); self.m];
        for (u, v, c) in self.colored_edges() {
            classes[c as usize].push((u, v));
        }
        classes
    }

    pub fn class_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0; self.m];
        for &c in &self.colors {
            sizes[c as usize] += 1;
        }
        sizes
    }

    /// Dense `n × n` color matrix with [`NO_COLOR`] on the diagonal.
    pub(crate) fn color_matrix(&self) -> Vec<u32> {
        let mut mat = vec![NO_COLOR; self.n * self.n];
        for (u, v, c) in self.colored_edges() {
            mat[u * self.n + v] = c;
            mat[v * self.n + u] = c;
        }
        mat
    }

    pub fn host(&self) -> Graph {
        Graph::complete(self.n.max(1)).expect("n >= 1")
    }

    /// Applies a vertex relabeling `v -> perm[v]`.
    pub fn relabel_vertices(&self, perm: &[usize]) -> Result<Self, GraphError> {
        if perm.len() != self.n {
            return Err(GraphError::VertexOutOfRange { vertex: perm.len(), n: self.n });
        }
        let mut labels = vec![0u32; self.colors.len()];
        for (u, v, c) in self.colored_edges() {
            let (a, b) = (perm[u].min(perm[v]), perm[u].max(perm[v]));
            if b >= self.n || a == b {
                return Err(GraphError::VertexOutOfRange { vertex: b, n: self.n });
            }
            labels[edge_index(self.n, a, b)] = c;
        }
        Ok(Self::from_labels(self.n, &labels).expect("sizes match"))
    }

    /// Serializes to the `n m` / `u v c` text format.
    pub fn to_text(&self) -> String {
        let mut out = format!("{} {}\n", self.n, self.m);
        for (u, v, c) in self.colored_edges() {
            writeln!(out, "{u} {v} {c}").unwrap();
        }
        out
    }

    /// Parses the text format. Color ids must be exactly `{0..m-1}`; they are
    /// renumbered canonically afterwards.
    pub fn parse(text: &str) -> Result<Self, ColoringError> {
        let mut tokens = Tokens::new(text);
        let n = tokens.next_usize("vertex count")?;
        let declared = tokens.next_usize("color count")?;
        let total = n * n.saturating_sub(1) / 2;
        let mut labels: Vec<Option<usize>> = vec![None; total];
        let mut seen = vec![false; declared];
        let mut got = 0;
        while let Some(u) = tokens.next_opt_usize()? {
            let v = tokens.next_usize("edge endpoint")?;
            let c = tokens.next_usize("color id")?;
            let (a, b) = (u.min(v), u.max(v));
            if a == b || b >= n {
                return Err(ColoringError::BadEdge { u, v, n });
            }
            if c >= declared {
                return Err(ColoringError::NotDense { declared, found: c + 1 });
            }
            let slot = &mut labels[edge_index(n, a, b)];
            if slot.is_some() {
                return Err(ColoringError::DuplicateEdge { u: a, v: b });
            }
            *slot = Some(c);
            seen[c] = true;
            got += 1;
        }
        if got != total {
            let (u, v) = lex_pairs(n).zip(&labels).find(|(_, l)| l.is_none()).map(|(e, _)| e).unwrap();
            return Err(ColoringError::MissingEdge { u, v });
        }
        let found = seen.iter().filter(|s| **s).count();
        if found != declared {
            return Err(ColoringError::NotDense { declared, found });
        }
        let labels: Vec<usize> = labels.into_iter().map(|l| l.unwrap()).collect();
        Self::from_labels(n, &labels)
    }
}

impl std::fmt::Debug for EdgeColoring {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("EdgeColoring").field("n", &self.n).field("m", &self.m).field("colors", &self.colors).finish()
    }
}

struct Tokens<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> Tokens<'a> {
    fn new(text: &'a str) -> Self {
        Tokens { text, pos: 0 }
    }

    fn next_token(&mut self) -> Option<(usize, &'a str)> {
        let bytes = self.text.as_bytes();
        while self.pos < bytes.len() && bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
        if self.pos == bytes.len() {
            return None;
        }
        let start = self.pos;
        while self.pos < bytes.len() && !bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
        Some((start, &self.text[start..self.pos]))
    }

    fn next_opt_usize(&mut self) -> Result<Option<usize>, ParseError> {
        match self.next_token() {
            None => Ok(None),
            Some((at, tok)) => {
                tok.parse().map(Some).map_err(|_| ParseError::new(at, format!("expected an integer, found {tok:?}")))
            }
        }
    }

    fn next_usize(&mut self, what: &str) -> Result<usize, ParseError> {
        let end = self.text.len();
        self.next_opt_usize()?.ok_or_else(|| ParseError::new(end, format!("unexpected end of input, expected {what}")))
    }
}
