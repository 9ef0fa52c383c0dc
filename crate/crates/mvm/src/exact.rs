//! Exact maximum vertex-weighted matching on bipartite graphs.
//!
//! The solver processes vertices in non-increasing weight order and,
//! for each still-unmatched vertex, augments along a path to a heaviest
//! unmatched vertex it can reach by an alternating path. Growing the
//! matching only by augmentations keeps every already-matched vertex
//! matched, so with non-negative weights the result has maximum weight,
//! maximum cardinality, and the lexicographically maximum weight
//! vector. Cost is O(nm + n log n): one sort plus one O(m) search per
//! vertex.

use std::cmp::Reverse;

use crate::graph::{BipartiteGraph, Side, Vertex};
use crate::matching::Matching;
use crate::search::{AlternatingSearch, AugmentingPath};
use crate::weights::VertexWeights;

/// Computes a maximum vertex-weighted matching of `g`.
pub fn exact_mvm(g: &BipartiteGraph, w: &VertexWeights) -> Matching {
    exact_mvm_with_paths(g, w).0
}

/// Like [`exact_mvm`], also returning the augmenting paths in the order
/// they were applied. Replaying them from the empty matching reproduces
/// the run, which is how the tests check the per-augmentation
/// invariants.
pub fn exact_mvm_with_paths(
    g: &BipartiteGraph,
    w: &VertexWeights,
) -> (Matching, Vec<AugmentingPath>) {
    assert!(w.fits(g), "weights sized for graph");

    // Static weights allow a pre-sorted queue with lazy skipping
    // instead of a priority queue. Ties: S before T, then lower index.
    let mut order: Vec<Vertex> = g.vertices(Side::S).chain(g.vertices(Side::T)).collect();
    order.sort_by_key(|&v| (Reverse(w.weight(v)), v.side, v.index));

    let mut matching = Matching::empty(g.n_s(), g.n_t());
    let mut search = AlternatingSearch::new(g.n_s(), g.n_t());
    let mut processed_s = vec![false; g.n_s()];
    let mut processed_t = vec![false; g.n_t()];
    let mut paths = Vec::new();

    for &u in &order {
        let processed = match u.side {
            Side::S => &mut processed_s[u.index],
            Side::T => &mut processed_t[u.index],
        };
        if *processed || matching.is_matched(u) {
            continue;
        }
        *processed = true;

        if let Some(path) = heaviest_reachable_path(g, &matching, w, u, &mut search) {
            matching.augment(&path);
            paths.push(path);
        }
    }

    (matching, paths)
}

/// Searches the full alternating-reachability set of the unmatched
/// vertex `u` and returns a path to a heaviest reachable unmatched
/// vertex (ties broken by lowest index), or `None` if no unmatched
/// vertex is reachable.
pub fn find_augmenting_to_heaviest(
    g: &BipartiteGraph,
    m: &Matching,
    w: &VertexWeights,
    u: Vertex,
) -> Option<AugmentingPath> {
    assert!(!m.is_matched(u), "source vertex must be unmatched");
    let mut search = AlternatingSearch::new(g.n_s(), g.n_t());
    heaviest_reachable_path(g, m, w, u, &mut search)
}

fn heaviest_reachable_path(
    g: &BipartiteGraph,
    m: &Matching,
    w: &VertexWeights,
    u: Vertex,
    search: &mut AlternatingSearch,
) -> Option<AugmentingPath> {
    search.run(g, m, u, None);
    let opposite = u.side.opposite();
    let target = search
        .unmatched_hits()
        .iter()
        .map(|&(index, _)| index)
        .min_by_key(|&index| {
            (
                Reverse(w.weight(Vertex {
                    side: opposite,
                    index,
                })),
                index,
            )
        })?;
    Some(search.path_to(m, u, target))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matching::{matching_weight, validate_matching};

    fn f1() -> (BipartiteGraph, VertexWeights) {
        let g = BipartiteGraph::build(2, 1, &[(0, 0), (1, 0)]).unwrap();
        let w = VertexWeights::new(vec![5, 9], vec![1]);
        (g, w)
    }

    fn f2() -> (BipartiteGraph, VertexWeights) {
        let g = BipartiteGraph::build(2, 2, &[(0, 0), (0, 1), (1, 0)]).unwrap();
        let w = VertexWeights::new(vec![10, 8], vec![0, 0]);
        (g, w)
    }

    fn f3() -> (BipartiteGraph, VertexWeights) {
        let g = BipartiteGraph::build(2, 2, &[(0, 0), (1, 0), (1, 1)]).unwrap();
        let w = VertexWeights::new(vec![1, 9], vec![9, 1]);
        (g, w)
    }

    #[test]
    fn solves_f1() {
        // Brute force over the three matchings of F1 gives optimum 10
        // with s1 matched to t0 and s0 left out.
        let (g, w) = f1();
        let m = exact_mvm(&g, &w);
        assert!(validate_matching(&g, &m));
        assert_eq!(matching_weight(&m, &w).unwrap(), 10);
        assert_eq!(m.mate_of_s(1), Some(0));
        assert_eq!(m.mate_of_s(0), None);
    }

    #[test]
    fn solves_f2_via_length_three_augmentation() {
        let (g, w) = f2();
        let (m, paths) = exact_mvm_with_paths(&g, &w);
        assert_eq!(matching_weight(&m, &w).unwrap(), 18);
        assert_eq!(m.cardinality(), 2);
        // Second augmentation walks s1 - t0 - s0 - t1.
        assert_eq!(paths.len(), 2);
        assert_eq!(
            paths[1].vertices(),
            &[Vertex::s(1), Vertex::t(0), Vertex::s(0), Vertex::t(1)]
        );
    }

    #[test]
    fn solves_f3() {
        // The four-vertex path where a heaviest-edge choice would trap
        // a greedy edge algorithm; the optimum matches all vertices.
        let (g, w) = f3();
        let m = exact_mvm(&g, &w);
        assert_eq!(matching_weight(&m, &w).unwrap(), 20);
        assert_eq!(m.mate_of_s(0), Some(0));
        assert_eq!(m.mate_of_s(1), Some(1));
    }

    #[test]
    fn empty_graph_yields_empty_matching() {
        let g = BipartiteGraph::build(0, 0, &[]).unwrap();
        let w = VertexWeights::new(vec![], vec![]);
        let m = exact_mvm(&g, &w);
        assert_eq!(m.cardinality(), 0);
    }

    #[test]
    fn zero_weight_targets_still_augment() {
        // All-zero weights: maximum cardinality must still be reached.
        let (g, _) = f2();
        let w = VertexWeights::zero(&g);
        let m = exact_mvm(&g, &w);
        assert_eq!(m.cardinality(), 2);
    }

    #[test]
    fn augmenting_search_single_candidate() {
        let (g, w) = f1();
        let m = Matching::empty(2, 1);
        let path = find_augmenting_to_heaviest(&g, &m, &w, Vertex::s(1)).unwrap();
        assert_eq!(path.vertices(), &[Vertex::s(1), Vertex::t(0)]);
    }

    #[test]
    fn augmenting_search_exhausts_reachability() {
        let (g, w) = f1();
        let m = Matching::from_pairs(2, 1, &[(1, 0)]).unwrap();
        assert!(find_augmenting_to_heaviest(&g, &m, &w, Vertex::s(0)).is_none());
    }

    #[test]
    fn augmenting_search_prefers_heavier_target() {
        // From t0 of F3 both S vertices are reachable; s1 (weight 9)
        // outweighs s0 (weight 1).
        let (g, w) = f3();
        let m = Matching::empty(2, 2);
        let path = find_augmenting_to_heaviest(&g, &m, &w, Vertex::t(0)).unwrap();
        assert_eq!(path.vertices(), &[Vertex::t(0), Vertex::s(1)]);
    }

    #[test]
    fn augmenting_search_breaks_weight_ties_by_index() {
        let g = BipartiteGraph::build(1, 3, &[(0, 1), (0, 2)]).unwrap();
        let w = VertexWeights::new(vec![4], vec![7, 3, 3]);
        let m = Matching::empty(1, 3);
        let path = find_augmenting_to_heaviest(&g, &m, &w, Vertex::s(0)).unwrap();
        assert_eq!(path.target(), Vertex::t(1));
    }
}
