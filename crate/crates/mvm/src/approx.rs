//! Approximation algorithms built from bounded-length augmenting paths.
//!
//! Both approximations solve two one-side-weighted subproblems, one
//! with the T weights zeroed and one with the S weights zeroed, and
//! combine the results so that each subproblem keeps its weighted
//! side's matched vertices. Capping augmenting paths at three edges
//! yields a 2/3-approximation in O(n log n + m); capping at one edge
//! yields the greedy 1/2-approximation.

use std::cmp::Reverse;

use crate::graph::{BipartiteGraph, Side, Vertex};
use crate::matching::Matching;
use crate::search::AugmentingPath;
use crate::symdiff::{symmetric_difference, ComponentKind, EdgeLabel, SymDiffComponent};
use crate::weights::VertexWeights;

/// Cap on augmenting-path length for [`restricted_match`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MaxPathLen {
    One,
    Three,
}

/// Solves the one-side-weighted subproblem: vertices of `side` are
/// processed in non-increasing weight order (ties by index) and each is
/// matched over a shortest augmenting path of length one — or, with
/// [`MaxPathLen::Three`], length three — if one exists. Weights on the
/// other side are ignored. A vertex that fails is never reprocessed.
///
/// The length-three search keeps a cursor per weighted-side vertex that
/// only ever moves forward over its adjacency list: a matched neighbor
/// stays matched for the rest of the run, so nothing the cursor skips
/// can complete a later path. Total work beyond the sort is O(m).
pub fn restricted_match(
    g: &BipartiteGraph,
    side: Side,
    w: &VertexWeights,
    max_path_len: MaxPathLen,
) -> Matching {
    assert!(w.fits(g), "weights sized for graph");
    let weights = w.side_weights(side);
    let opposite = side.opposite();

    let mut order: Vec<usize> = (0..g.side_len(side)).collect();
    order.sort_by_key(|&i| (Reverse(weights[i]), i));

    let mut matching = Matching::empty(g.n_s(), g.n_t());
    let mut cursor = vec![0usize; g.side_len(side)];
    let mut cursor_advances = 0usize;

    'process: for &u in &order {
        let u_vertex = Vertex { side, index: u };
        if matching.is_matched(u_vertex) {
            continue;
        }

        // Length one: first unmatched neighbor in index order.
        for &t in g.neighbors(u_vertex) {
            if !matching.is_matched(Vertex {
                side: opposite,
                index: t,
            }) {
                match_oriented(&mut matching, side, u, t);
                continue 'process;
            }
        }
        if max_path_len == MaxPathLen::One {
            continue;
        }

        // Length three: u - t - mid - t2 where t is matched to mid and
        // t2 is an unmatched neighbor of mid found by its cursor.
        for &t in g.neighbors(u_vertex) {
            let mid = matching
                .mate(Vertex {
                    side: opposite,
                    index: t,
                })
                .expect("all neighbors are matched after the length-one scan failed");
            let mid_neighbors = g.neighbors(Vertex { side, index: mid });
            while cursor[mid] < mid_neighbors.len() {
                let t2 = mid_neighbors[cursor[mid]];
                cursor[mid] += 1;
                cursor_advances += 1;
                if !matching.is_matched(Vertex {
                    side: opposite,
                    index: t2,
                }) {
                    matching.augment(&AugmentingPath::new(vec![
                        u_vertex,
                        Vertex {
                            side: opposite,
                            index: t,
                        },
                        Vertex { side, index: mid },
                        Vertex {
                            side: opposite,
                            index: t2,
                        },
                    ]));
                    continue 'process;
                }
            }
        }
    }

    debug_assert!(
        cursor_advances <= g.edge_count(),
        "cursor advancement is bounded by the edge count"
    );
    matching
}

fn match_oriented(m: &mut Matching, side: Side, u: usize, v: usize) {
    match side {
        Side::S => m.match_pair(u, v),
        Side::T => m.match_pair(v, u),
    }
}

/// Failure of [`mendelsohn_dulmage_merge`]; only possible when an input
/// is not a valid matching.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MergeError {
    #[error("no label class of a symmetric-difference component covers its required endpoints")]
    NoQualifyingClass,
    #[error("merged matching leaves required vertex {0} unmatched")]
    UncoveredVertex(Vertex),
}

/// Combines two matchings into one M with M a subset of the union, such
/// that every `m_s`-matched S vertex and every `m_t`-matched T vertex
/// is matched in M.
///
/// Edges common to both inputs are kept. Each remaining
/// symmetric-difference component contributes all of its `m_s` edges or
/// all of its `m_t` edges: for a path exactly one of the two classes
/// covers the component's required endpoints, and for a cycle either
/// does (the `m_s` class is taken). Cost is linear in the number of
/// vertices.
pub fn mendelsohn_dulmage_merge(
    g: &BipartiteGraph,
    m_s: &Matching,
    m_t: &Matching,
) -> Result<Matching, MergeError> {
    assert_eq!((m_s.n_s(), m_s.n_t()), (g.n_s(), g.n_t()));
    assert_eq!((m_t.n_s(), m_t.n_t()), (g.n_s(), g.n_t()));

    let diff = symmetric_difference(m_s, m_t);
    let mut merged = Matching::empty(g.n_s(), g.n_t());
    for &(s, t) in &diff.common_edges {
        merged.match_pair(s, t);
    }

    for component in &diff.components {
        let class = qualifying_class(component)?;
        let closing = match component.kind {
            ComponentKind::Cycle => 1,
            ComponentKind::Path => 0,
        };
        for (i, &label) in component.edge_labels.iter().enumerate() {
            if label != class {
                continue;
            }
            let a = component.vertices[i];
            let b = if i + 1 < component.vertices.len() {
                component.vertices[i + 1]
            } else {
                debug_assert_eq!(closing, 1);
                component.vertices[0]
            };
            let (s, t) = match a.side {
                Side::S => (a.index, b.index),
                Side::T => (b.index, a.index),
            };
            merged.match_pair(s, t);
        }
    }

    // The whole point of the merge: both required vertex sets stay
    // matched.
    for s in m_s.matched_on(Side::S) {
        if !merged.is_matched(Vertex::s(s)) {
            return Err(MergeError::UncoveredVertex(Vertex::s(s)));
        }
    }
    for t in m_t.matched_on(Side::T) {
        if !merged.is_matched(Vertex::t(t)) {
            return Err(MergeError::UncoveredVertex(Vertex::t(t)));
        }
    }
    Ok(merged)
}

/// Picks the label class of a component that covers its required
/// endpoints. The first-matching class fails only at a path endpoint
/// that is a T vertex with a second-matching edge, and symmetrically;
/// alternation makes both failures at once impossible for valid inputs.
fn qualifying_class(component: &SymDiffComponent) -> Result<EdgeLabel, MergeError> {
    if component.kind == ComponentKind::Cycle {
        return Ok(EdgeLabel::First);
    }
    let ends = [
        (component.vertices[0], component.edge_labels[0]),
        (
            *component.vertices.last().unwrap(),
            *component.edge_labels.last().unwrap(),
        ),
    ];
    let first_disqualified = ends
        .iter()
        .any(|&(v, label)| v.side == Side::T && label == EdgeLabel::Second);
    let second_disqualified = ends
        .iter()
        .any(|&(v, label)| v.side == Side::S && label == EdgeLabel::First);
    match (first_disqualified, second_disqualified) {
        (true, true) => Err(MergeError::NoQualifyingClass),
        (true, false) => Ok(EdgeLabel::Second),
        _ => Ok(EdgeLabel::First),
    }
}

/// 2/3-approximation of the maximum vertex-weighted matching: merges
/// the two one-side-weighted solutions with augmenting paths capped at
/// three edges. Runs in O(n log n + m).
pub fn two_thirds_mvm(g: &BipartiteGraph, w: &VertexWeights) -> Matching {
    let m_s = restricted_match(g, Side::S, w, MaxPathLen::Three);
    let m_t = restricted_match(g, Side::T, w, MaxPathLen::Three);
    mendelsohn_dulmage_merge(g, &m_s, &m_t)
        .expect("restricted matchings always admit a qualifying class")
}

/// Greedy 1/2-approximation: as [`two_thirds_mvm`] but with augmenting
/// paths of length one only.
pub fn greedy_half_mvm(g: &BipartiteGraph, w: &VertexWeights) -> Matching {
    let m_s = restricted_match(g, Side::S, w, MaxPathLen::One);
    let m_t = restricted_match(g, Side::T, w, MaxPathLen::One);
    mendelsohn_dulmage_merge(g, &m_s, &m_t)
        .expect("restricted matchings always admit a qualifying class")
}
