use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::coloring::EdgeColoring;
use crate::graph::Graph;

/// A spanning subgraph of the colored `K_n` with exactly one edge of each color.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RepresentingGraph {
    n: usize,
    /// `chosen[c]` is the representative of color `c`.
    chosen: Vec<(usize, usize)>,
}

impl RepresentingGraph {
    /// Wraps a choice of one edge per color, checking it against `c`.
    pub fn from_choice(c: &EdgeColoring, chosen: Vec<(usize, usize)>) -> Option<Self> {
        let r = RepresentingGraph { n: c.order(), chosen };
        r.is_valid_for(c).then_some(r)
    }

    /// Representing graph that contains the given edges (which must have
    /// pairwise distinct colors) and takes the first edge of every other class.
    pub fn extending(c: &EdgeColoring, edges: &[(usize, usize)]) -> Option<Self> {
        let mut chosen: Vec<Option<(usize, usize)>> = vec![None; c.color_count()];
        for &(u, v) in edges {
            let slot = &mut chosen[c.color(u, v) as usize];
            if slot.is_some() {
                return None;
            }
            *slot = Some((u.min(v), u.max(v)));
        }
        let classes = c.classes();
        let chosen = chosen.into_iter().zip(classes).map(|(e, class)| e.unwrap_or(class[0])).collect();
        Some(RepresentingGraph { n: c.order(), chosen })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn edge_of(&self, color: u32) -> (usize, usize) {
        self.chosen[color as usize]
    }

    pub fn choices(&self) -> &[(usize, usize)] {
        &self.chosen
    }

    pub(crate) fn set(&mut self, color: u32, edge: (usize, usize)) {
        self.chosen[color as usize] = (edge.0.min(edge.1), edge.0.max(edge.1));
    }

    pub fn graph(&self) -> Graph {
        Graph::from_edges(self.n, self.chosen.iter().copied()).expect("representatives are edges of K_n")
    }

    /// One edge per color, each edge carrying its own color under `c`.
    pub fn is_valid_for(&self, c: &EdgeColoring) -> bool {
        self.n == c.order()
            && self.chosen.len() == c.color_count()
            && self.chosen.iter().enumerate().all(|(col, &(u, v))| u < v && v < self.n && c.color(u, v) as usize == col)
    }
}

/// Iterator over representing graphs in lexicographic choice order (color 0's
/// choice varies slowest), stopping after `cap` items.
pub struct RepresentingGraphs {
    n: usize,
    classes: Vec<Vec<(usize, usize)>>,
    cursor: Option<Vec<usize>>,
    cap: usize,
    yielded: usize,
}

impl RepresentingGraphs {
    /// `|ℛ(c, K_n)|`, the product of the class sizes.
    pub fn total_count(&self) -> BigUint {
        self.classes.iter().map(|c| BigUint::from(c.len())).product()
    }

    /// True once the cap stopped the iteration before the family was exhausted.
    pub fn capped(&self) -> bool {
        self.yielded >= self.cap && self.cursor.is_some()
    }

    pub fn yielded(&self) -> usize {
        self.yielded
    }
}

impl Iterator for RepresentingGraphs {
    type Item = RepresentingGraph;

    fn next(&mut self) -> Option<RepresentingGraph> {
        if self.yielded >= self.cap {
            return None;
        }
        let cursor = self.cursor.as_mut()?;
        let item = RepresentingGraph {
            n: self.n,
            chosen: cursor.iter().zip(&self.classes).map(|(&i, class)| class[i]).collect(),
        };
        self.yielded += 1;
        let mut done = true;
        for pos in (0..cursor.len()).rev() {
            cursor[pos] += 1;
            if cursor[pos] < self.classes[pos].len() {
                done = false;
                break;
            }
            cursor[pos] = 0;
        }
        if done {
            self.cursor = None;
        }
        Some(item)
    }
}

pub fn representing_graphs(c: &EdgeColoring, cap: usize) -> RepresentingGraphs {
    let classes = c.classes();
    RepresentingGraphs { n: c.order(), cursor: Some(vec![0; classes.len()]), classes, cap, yielded: 0 }
}

/// One edge per color class, uniformly and independently, from `seed`.
pub fn sample_representing(c: &EdgeColoring, seed: u64) -> RepresentingGraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let chosen = c.classes().into_iter().map(|class| class[rng.gen_range(0..class.len())]).collect();
    RepresentingGraph { n: c.order(), chosen }
}

#[cfg(test)]
mod tests {
    use std::collections::HashSet;

    use proptest::prelude::*;

    use super::*;
    use crate::forest::LinearForest;
    use crate::rainbow::{contains_subgraph, find_rainbow};

    #[test]
    fn total_count_is_product_of_class_sizes() {
        let c = EdgeColoring::from_labels(3, &[0, 0, 1]).unwrap();
        assert_eq!(representing_graphs(&c, 100).total_count(), BigUint::from(2u32));
        // sizes {2, 3} among the six edges of K_4, plus one singleton
        let c = EdgeColoring::from_labels(4, &[0, 0, 1, 1, 1, 2]).unwrap();
        assert_eq!(representing_graphs(&c, 100).total_count(), BigUint::from(6u32));
    }

    #[test]
    fn rainbow_coloring_has_one_member() {
        let c = EdgeColoring::rainbow(5);
        let all: Vec<_> = representing_graphs(&c, 10).collect();
        assert_eq!(all.len(), 1);
        assert_eq!(all[0].graph(), Graph::complete(5).unwrap());
        assert_eq!(sample_representing(&c, 99).graph(), Graph::complete(5).unwrap());
    }

    #[test]
    fn monochromatic_members_are_single_edges() {
        let c = EdgeColoring::monochromatic(4);
        let it = representing_graphs(&c, 100);
        assert_eq!(it.total_count(), BigUint::from(6u32));
        let all: Vec<_> = it.collect();
        assert_eq!(all.len(), 6);
        assert!(all.iter().all(|r| r.graph().edge_count() == 1));
        let distinct: HashSet<_> = all.iter().collect();
        assert_eq!(distinct.len(), 6);
    }

    #[test]
    fn cap_stops_enumeration() {
        let c = EdgeColoring::monochromatic(5);
        let mut it = representing_graphs(&c, 4);
        assert_eq!(it.by_ref().count(), 4);
        assert!(it.capped());
        assert_eq!(it.yielded(), 4);
        let mut full = representing_graphs(&c, 10);
        assert_eq!(full.by_ref().count(), 10);
        assert!(!full.capped());
    }

    #[test]
    fn lexicographic_choice_order() {
        let c = EdgeColoring::from_labels(3, &[0, 0, 1]).unwrap();
        let all: Vec<_> = representing_graphs(&c, 10).map(|r| r.choices().to_vec()).collect();
        assert_eq!(all, vec![vec![(0, 1), (1, 2)], vec![(0, 2), (1, 2)]]);
    }

    #[test]
    fn sampler_is_deterministic_and_varies() {
        // K_3 plus a pendant pair: classes {01, 02} and {03, 12}, the rest singletons
        let c = EdgeColoring::from_fn(4, |u, v| match (u, v) {
            (0, 1) | (0, 2) => 0,
            (0, 3) | (1, 2) => 1,
            _ => 2 + u + v,
        });
        assert_eq!(c.class_sizes()[..2], [2, 2]);
        assert_eq!(sample_representing(&c, 5), sample_representing(&c, 5));
        let firsts: HashSet<_> = (0..16).map(|s| sample_representing(&c, s).edge_of(0)).collect();
        let seconds: HashSet<_> = (0..16).map(|s| sample_representing(&c, s).edge_of(1)).collect();
        assert_eq!(firsts.len(), 2);
        assert_eq!(seconds.len(), 2);
    }

    #[test]
    fn extending_completes_a_witness() {
        let c = EdgeColoring::from_fn(5, |u, v| (u + v) % 4);
        let e = find_rainbow(&c, &"3".parse().unwrap()).unwrap();
        let r = RepresentingGraph::extending(&c, &e.edges).unwrap();
        assert!(r.is_valid_for(&c));
        assert!(e.edges.iter().all(|&(u, v)| r.graph().has_edge(u, v)));
        // two edges of one color cannot both be representatives
        assert_eq!(c.color(0, 1), c.color(2, 3));
        assert!(RepresentingGraph::extending(&c, &[(0, 1), (2, 3)]).is_none());
    }

    fn arb_small_coloring() -> impl Strategy<Value = EdgeColoring> {
        (3usize..=6, 1usize..=15).prop_flat_map(|(n, k)| {
            proptest::collection::vec(0..k, n * (n - 1) / 2).prop_map(move |l| EdgeColoring::from_labels(n, &l).unwrap())
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(150))]

        #[test]
        fn rainbow_iff_some_member_contains(c in arb_small_coloring(), pick in 0usize..4) {
            let f: LinearForest = ["2,2", "3,2", "4", "3"][pick].parse().unwrap();
            let mut it = representing_graphs(&c, 100_000);
            let any = it.by_ref().any(|r| contains_subgraph(&r.graph(), &f).is_some());
            prop_assert!(!it.capped() || any);
            prop_assert_eq!(any, find_rainbow(&c, &f).is_some());
        }

        #[test]
        fn members_are_valid(c in arb_small_coloring(), seed in any::<u64>()) {
            prop_assert!(sample_representing(&c, seed).is_valid_for(&c));
            for r in representing_graphs(&c, 50) {
                prop_assert!(r.is_valid_for(&c));
                prop_assert_eq!(r.graph().edge_count(), c.color_count());
            }
        }
    }
}
