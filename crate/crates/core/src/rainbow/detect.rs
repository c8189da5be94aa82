//! Backtracking embedder for linear forests.
//!
//! Parts are placed longest first, each grown one endpoint at a time. A path is
//! only accepted with its first vertex below its last, and parts of equal
//! length are placed with increasing first vertices, so every copy of the
//! forest is visited once. Trailing `P_2` parts are placed as a matching whose
//! edges have increasing smaller endpoints.
//!
//! In rainbow mode every placed edge must carry a color not used so far, and a
//! branch dies as soon as the unused colors cannot cover the unplaced edges.
//!
//! An anchored search only reports copies that use one given edge: the anchor
//! is put into some part at every possible position (oriented so that its first
//! endpoint comes first) and that part is grown in both directions before the
//! rest of the forest is placed.

use crate::coloring::NO_COLOR;
use crate::graph::WORD;

/// Read-only view of a (possibly colored) host graph.
#[derive(Clone, Copy)]
pub(crate) struct Host<'a> {
    pub n: usize,
    pub words: usize,
    /// `n` rows of `words` words each.
    pub adj: &'a [u64],
    pub colors: Option<Colors<'a>>,
}

#[derive(Clone, Copy)]
pub(crate) struct Colors<'a> {
    /// `n × n`, [`NO_COLOR`] off the edge set.
    pub matrix: &'a [u32],
    /// Color ids are below this bound.
    pub bound: usize,
    /// Number of distinct colors present on the host's edges.
    pub distinct: usize,
}

impl Host<'_> {
    #[inline]
    fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u * self.words + v / WORD] >> (v % WORD) & 1 == 1
    }

    #[inline]
    fn color(&self, u: usize, v: usize) -> u32 {
        match self.colors {
            Some(c) => c.matrix[u * self.n + v],
            None => NO_COLOR,
        }
    }
}

/// A successful placement: one vertex sequence per part, longest part first.
pub(crate) type Placement = Vec<Vec<usize>>;

/// Reusable search state.
#[derive(Default)]
pub(crate) struct Detector {
    order: Vec<usize>,
    used: Vec<u64>,
    used_colors: Vec<u64>,
    colors_taken: usize,
    vertices_taken: usize,
    edges_left: usize,
    vertices_left: usize,
    /// Per slot: left extension (reversed) and right extension.
    left: Vec<Vec<usize>>,
    right: Vec<Vec<usize>>,
    anchored_slot: Option<usize>,
    /// Distinct host colors, in rainbow mode.
    rainbow: Option<usize>,
    pub(crate) nodes: u64,
}

impl Detector {
    pub(crate) fn new() -> Self {
        Self::default()
    }

    /// Searches for a copy of the forest `parts` (nonincreasing) in `host`,
    /// rainbow when `host.colors` is set, using the edge `anchor` when given.
    pub(crate) fn find(&mut self, host: &Host, parts: &[usize], anchor: Option<(usize, usize)>) -> Option<Placement> {
        let f: usize = parts.iter().sum();
        let e: usize = parts.iter().map(|t| t - 1).sum();
        if f > host.n {
            return None;
        }
        if let Some(c) = host.colors {
            if c.distinct < e {
                return None;
            }
        }
        self.reset(host, parts.len());
        self.edges_left = e;
        self.vertices_left = f;
        match anchor {
            None => {
                self.order.clear();
                self.order.extend_from_slice(parts);
                self.anchored_slot = None;
                if self.place_parts(host, 0) {
                    Some(self.collect())
                } else {
                    None
                }
            }
            Some((a, b)) => {
                if a == b || a >= host.n || b >= host.n || !host.has_edge(a, b) {
                    return None;
                }
                let slot = parts.len() - 1;
                self.anchored_slot = Some(slot);
                for (p, &t) in parts.iter().enumerate() {
                    if p > 0 && parts[p - 1] == t {
                        continue;
                    }
                    self.order.clear();
                    self.order.extend(parts.iter().enumerate().filter(|&(i, _)| i != p).map(|(_, &t)| t));
                    self.left[slot].clear();
                    self.right[slot].clear();
                    self.right[slot].extend([a, b]);
                    self.take_vertex(a);
                    self.take_vertex(b);
                    let c = host.color(a, b);
                    self.take_color(c);
                    self.edges_left -= 1;
                    for j in 0..t - 1 {
                        if self.grow(host, slot, t - 2 - j, j, None) {
                            return Some(self.collect());
                        }
                    }
                    self.edges_left += 1;
                    self.release_color(c);
                    self.release_vertex(b);
                    self.release_vertex(a);
                }
                None
            }
        }
    }

    fn reset(&mut self, host: &Host, slots: usize) {
        self.used.clear();
        self.used.resize(host.words, 0);
        let cw = host.colors.map_or(0, |c| c.bound.div_ceil(WORD));
        self.used_colors.clear();
        self.used_colors.resize(cw, 0);
        self.colors_taken = 0;
        self.vertices_taken = 0;
        self.left.resize_with(slots.max(1), Vec::new);
        self.right.resize_with(slots.max(1), Vec::new);
        for v in self.left.iter_mut().chain(self.right.iter_mut()) {
            v.clear();
        }
        self.rainbow = host.colors.map(|c| c.distinct);
    }

    fn collect(&self) -> Placement {
        let slots = self.order.len() + usize::from(self.anchored_slot.is_some());
        let mut paths: Vec<Vec<usize>> = (0..slots)
            .map(|s| self.left[s].iter().rev().chain(self.right[s].iter()).copied().collect())
            .collect();
        paths.sort_by_key(|p| std::cmp::Reverse(p.len()));
        paths
    }

    #[inline]
    fn take_vertex(&mut self, v: usize) {
        self.used[v / WORD] |= 1 << (v % WORD);
        self.vertices_taken += 1;
        self.vertices_left -= 1;
    }

    #[inline]
    fn release_vertex(&mut self, v: usize) {
        self.used[v / WORD] &= !(1 << (v % WORD));
        self.vertices_taken -= 1;
        self.vertices_left += 1;
    }

    #[inline]
    fn color_free(&self, c: u32) -> bool {
        c == NO_COLOR || self.used_colors[c as usize / WORD] >> (c as usize % WORD) & 1 == 0
    }

    #[inline]
    fn take_color(&mut self, c: u32) {
        if c != NO_COLOR {
            self.used_colors[c as usize / WORD] |= 1 << (c as usize % WORD);
            self.colors_taken += 1;
        }
    }

    #[inline]
    fn release_color(&mut self, c: u32) {
        if c != NO_COLOR {
            self.used_colors[c as usize / WORD] &= !(1 << (c as usize % WORD));
            self.colors_taken -= 1;
        }
    }

    #[inline]
    fn feasible(&self, host: &Host) -> bool {
        if self.vertices_left > host.n - self.vertices_taken {
            return false;
        }
        match self.rainbow {
            Some(distinct) => self.edges_left <= distinct - self.colors_taken,
            None => true,
        }
    }

    fn next_slot(&self, slot: usize) -> usize {
        if Some(slot) == self.anchored_slot {
            0
        } else {
            slot + 1
        }
    }

    fn place_parts(&mut self, host: &Host, idx: usize) -> bool {
        if idx == self.order.len() {
            return true;
        }
        self.nodes += 1;
        if !self.feasible(host) {
            return false;
        }
        let t = self.order[idx];
        if t == 2 {
            // nonincreasing order: everything from here on is an edge
            return self.place_matching(host, idx, 0);
        }
        let min_start = if idx > 0 && self.order[idx - 1] == t { self.right[idx - 1][0] + 1 } else { 0 };
        for wi in min_start / WORD..host.words {
            let mut bits = !self.used[wi];
            if wi == min_start / WORD {
                bits &= !0u64 << (min_start % WORD);
            }
            while bits != 0 {
                let v = wi * WORD + bits.trailing_zeros() as usize;
                bits &= bits - 1;
                if v + 1 >= host.n {
                    return false;
                }
                self.take_vertex(v);
                self.left[idx].clear();
                self.right[idx].clear();
                self.right[idx].push(v);
                if self.grow(host, idx, t - 1, 0, Some(v)) {
                    return true;
                }
                self.release_vertex(v);
            }
        }
        false
    }

    /// Extends slot `slot` by `right` vertices at its right end, then `left`
    /// vertices at its left end. With `first` set, the final vertex must exceed it.
    #[allow(clippy::needless_range_loop)]
    fn grow(&mut self, host: &Host, slot: usize, right: usize, left: usize, first: Option<usize>) -> bool {
        if right == 0 && left == 0 {
            let next = self.next_slot(slot);
            return self.place_parts(host, next);
        }
        self.nodes += 1;
        if !self.feasible(host) {
            return false;
        }
        let on_right = right > 0;
        let end = if on_right {
            *self.right[slot].last().unwrap()
        } else {
            *self.left[slot].last().unwrap_or(&self.right[slot][0])
        };
        let last = right + left == 1;
        let row = &host.adj[end * host.words..(end + 1) * host.words];
        for wi in 0..host.words {
            let mut bits = row[wi] & !self.used[wi];
            while bits != 0 {
                let w = wi * WORD + bits.trailing_zeros() as usize;
                bits &= bits - 1;
                if last && first.is_some_and(|f| w < f) {
                    continue;
                }
                let c = host.color(end, w);
                if self.rainbow.is_some() && !self.color_free(c) {
                    continue;
                }
                self.take_vertex(w);
                self.take_color(c);
                self.edges_left -= 1;
                let found = if on_right {
                    self.right[slot].push(w);
                    let r = self.grow(host, slot, right - 1, left, first);
                    if !r {
                        self.right[slot].pop();
                    }
                    r
                } else {
                    self.left[slot].push(w);
                    let r = self.grow(host, slot, right, left - 1, first);
                    if !r {
                        self.left[slot].pop();
                    }
                    r
                };
                if found {
                    return true;
                }
                self.edges_left += 1;
                self.release_color(c);
                self.release_vertex(w);
            }
        }
        false
    }

    /// Places parts `idx..` (all `P_2`) as a matching with increasing smaller
    /// endpoints, each at least `min_u`.
    #[allow(clippy::needless_range_loop)]
    fn place_matching(&mut self, host: &Host, idx: usize, min_u: usize) -> bool {
        if idx == self.order.len() {
            return true;
        }
        self.nodes += 1;
        if !self.feasible(host) {
            return false;
        }
        let remaining = self.order.len() - idx;
        for u in min_u..host.n {
            if host.n - u < 2 * remaining {
                break;
            }
            if self.used[u / WORD] >> (u % WORD) & 1 == 1 {
                continue;
            }
            let row = &host.adj[u * host.words..(u + 1) * host.words];
            for wi in (u + 1) / WORD..host.words {
                let mut bits = row[wi] & !self.used[wi];
                if wi == (u + 1) / WORD {
                    bits &= !0u64 << ((u + 1) % WORD);
                }
                while bits != 0 {
                    let v = wi * WORD + bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    let c = host.color(u, v);
                    if self.rainbow.is_some() && !self.color_free(c) {
                        continue;
                    }
                    self.take_vertex(u);
                    self.take_vertex(v);
                    self.take_color(c);
                    self.edges_left -= 1;
                    self.left[idx].clear();
                    self.right[idx].clear();
                    self.right[idx].extend([u, v]);
                    if self.place_matching(host, idx + 1, u + 1) {
                        return true;
                    }
                    self.edges_left += 1;
                    self.release_color(c);
                    self.release_vertex(v);
                    self.release_vertex(u);
                }
            }
        }
        false
    }
}
