//! Alternating breadth-first search over a bipartite graph with respect
//! to a matching.
//!
//! One [`AlternatingSearch`] value is reused across many searches; a
//! generation counter stamps visited vertices so no per-search reset of
//! the visit arrays is needed. From an unmatched source the search
//! walks unmatched edges away from the source side and matched edges
//! back, which enumerates exactly the alternating paths rooted at the
//! source.

use crate::graph::{BipartiteGraph, Side, Vertex};
use crate::matching::Matching;

/// An alternating path whose first and last vertices are unmatched, so
/// flipping it grows the matching by one edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AugmentingPath {
    vertices: Vec<Vertex>,
}

impl AugmentingPath {
    pub(crate) fn new(vertices: Vec<Vertex>) -> AugmentingPath {
        debug_assert!(vertices.len() >= 2 && vertices.len().is_multiple_of(2));
        debug_assert!(vertices
            .windows(2)
            .all(|w| w[0].side == w[1].side.opposite()));
        AugmentingPath { vertices }
    }

    /// The vertex sequence, alternating sides; the edge count is odd.
    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    /// The endpoint the search started from.
    pub fn source(&self) -> Vertex {
        self.vertices[0]
    }

    /// The unmatched endpoint the search reached.
    pub fn target(&self) -> Vertex {
        *self.vertices.last().unwrap()
    }

    /// Number of edges; always odd.
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.vertices.len() - 1
    }
}

/// Reusable alternating-BFS state. `stamp_*` holds the generation in
/// which a vertex was last visited; `discovered_by_*` is only valid for
/// vertices stamped with the current generation.
pub(crate) struct AlternatingSearch {
    generation: u64,
    stamp_s: Vec<u64>,
    stamp_t: Vec<u64>,
    discovered_by_s: Vec<usize>,
    discovered_by_t: Vec<usize>,
    queue: Vec<(usize, usize)>,
    unmatched_hits: Vec<(usize, usize)>,
    matched_hits: Vec<(usize, usize)>,
}

impl AlternatingSearch {
    pub(crate) fn new(n_s: usize, n_t: usize) -> AlternatingSearch {
        AlternatingSearch {
            generation: 0,
            stamp_s: vec![0; n_s],
            stamp_t: vec![0; n_t],
            discovered_by_s: vec![0; n_s],
            discovered_by_t: vec![0; n_t],
            queue: Vec::new(),
            unmatched_hits: Vec::new(),
            matched_hits: Vec::new(),
        }
    }

    /// Explores all alternating paths from the unmatched `source`,
    /// optionally capped at `max_len` edges. Results are read through
    /// [`Self::unmatched_hits`] and [`Self::matched_hits`] until the
    /// next call.
    pub(crate) fn run(
        &mut self,
        g: &BipartiteGraph,
        m: &Matching,
        source: Vertex,
        max_len: Option<usize>,
    ) {
        debug_assert!(!m.is_matched(source), "search source must be unmatched");
        self.generation += 1;
        self.queue.clear();
        self.unmatched_hits.clear();
        self.matched_hits.clear();

        let opposite = source.side.opposite();
        self.queue.push((source.index, 0));
        let mut head = 0;
        while head < self.queue.len() {
            let (x, depth) = self.queue[head];
            head += 1;
            if max_len.is_some_and(|cap| depth + 1 > cap) {
                continue;
            }
            for &nb in g.neighbors(Vertex {
                side: source.side,
                index: x,
            }) {
                if self.stamp(opposite)[nb] == self.generation {
                    continue;
                }
                self.stamp_mut(opposite)[nb] = self.generation;
                self.discovered_by_mut(opposite)[nb] = x;
                let nb_vertex = Vertex {
                    side: opposite,
                    index: nb,
                };
                match m.mate(nb_vertex) {
                    None => self.unmatched_hits.push((nb, depth + 1)),
                    Some(mate) => {
                        // The matched edge leads back to the source
                        // side; each such vertex is enqueued at most
                        // once because its mate is unique.
                        if max_len.is_none_or(|cap| depth + 2 <= cap) {
                            self.matched_hits.push((mate, depth + 2));
                            self.queue.push((mate, depth + 2));
                        }
                    }
                }
            }
        }
    }

    /// Unmatched opposite-side vertices reached by the last run, as
    /// (index, path length in edges).
    pub(crate) fn unmatched_hits(&self) -> &[(usize, usize)] {
        &self.unmatched_hits
    }

    /// Matched source-side vertices (other than the source) reached by
    /// the last run, as (index, even path length in edges).
    pub(crate) fn matched_hits(&self) -> &[(usize, usize)] {
        &self.matched_hits
    }

    /// Rebuilds the alternating path from `source` to the unmatched
    /// opposite-side vertex `target` found by the last run.
    pub(crate) fn path_to(&self, m: &Matching, source: Vertex, target: usize) -> AugmentingPath {
        let opposite = source.side.opposite();
        debug_assert_eq!(self.stamp(opposite)[target], self.generation);
        let mut reversed = Vec::new();
        let mut t = target;
        loop {
            reversed.push(Vertex {
                side: opposite,
                index: t,
            });
            let x = self.discovered_by(opposite)[t];
            reversed.push(Vertex {
                side: source.side,
                index: x,
            });
            if x == source.index {
                break;
            }
            t = m
                .mate(Vertex {
                    side: source.side,
                    index: x,
                })
                .expect("interior source-side vertices were reached over their matched edge");
        }
        reversed.reverse();
        AugmentingPath::new(reversed)
    }

    fn stamp(&self, side: Side) -> &[u64] {
        match side {
            Side::S => &self.stamp_s,
            Side::T => &self.stamp_t,
        }
    }

    fn stamp_mut(&mut self, side: Side) -> &mut [u64] {
        match side {
            Side::S => &mut self.stamp_s,
            Side::T => &mut self.stamp_t,
        }
    }

    fn discovered_by(&self, side: Side) -> &[usize] {
        match side {
            Side::S => &self.discovered_by_s,
            Side::T => &self.discovered_by_t,
        }
    }

    fn discovered_by_mut(&mut self, side: Side) -> &mut [usize] {
        match side {
            Side::S => &mut self.discovered_by_s,
            Side::T => &mut self.discovered_by_t,
        }
    }
}
