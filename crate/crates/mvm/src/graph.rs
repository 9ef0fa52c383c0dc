//! Immutable bipartite graph storage.
//!
//! A [`BipartiteGraph`] keeps the vertex sets `S` and `T` indexed
//! independently from zero and stores the adjacency compactly
//! (offset + index arrays) in both orientations, so that algorithms can
//! walk neighbor lists from either side without transposing anything.
//! Graphs are immutable after construction and safe to share across
//! threads.

use std::fmt;

/// Which bipartition a vertex belongs to. `S` is the row side when a
/// graph comes from a sparse matrix, `T` the column side.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    S,
    T,
}

impl Side {
    pub fn opposite(self) -> Side {
        match self {
            Side::S => Side::T,
            Side::T => Side::S,
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Side::S => write!(f, "S"),
            Side::T => write!(f, "T"),
        }
    }
}

/// A vertex handle: side plus index within that side.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Vertex {
    pub side: Side,
    pub index: usize,
}

impl Vertex {
    pub fn s(index: usize) -> Vertex {
        Vertex {
            side: Side::S,
            index,
        }
    }

    pub fn t(index: usize) -> Vertex {
        Vertex {
            side: Side::T,
            index,
        }
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.side, self.index)
    }
}

/// Construction failure for [`BipartiteGraph`].
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GraphError {
    #[error("edge ({s}, {t}) is out of range for sides of size {n_s} x {n_t}")]
    EdgeOutOfRange {
        s: usize,
        t: usize,
        n_s: usize,
        n_t: usize,
    },
}

/// An immutable bipartite graph with sorted, deduplicated adjacency in
/// both orientations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BipartiteGraph {
    n_s: usize,
    n_t: usize,
    m: usize,
    s_offsets: Vec<usize>,
    s_neighbors: Vec<usize>,
    t_offsets: Vec<usize>,
    t_neighbors: Vec<usize>,
}

impl BipartiteGraph {
    /// Builds a graph from an edge list. Duplicate edges are silently
    /// deduplicated; an out-of-range endpoint is reported with the
    /// offending edge.
    pub fn build(
        n_s: usize,
        n_t: usize,
        edges: &[(usize, usize)],
    ) -> Result<BipartiteGraph, GraphError> {
        for &(s, t) in edges {
            if s >= n_s || t >= n_t {
                return Err(GraphError::EdgeOutOfRange { s, t, n_s, n_t });
            }
        }

        let mut sorted: Vec<(usize, usize)> = edges.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        let m = sorted.len();

        let mut s_degrees = vec![0usize; n_s];
        let mut t_degrees = vec![0usize; n_t];
        for &(s, t) in &sorted {
            s_degrees[s] += 1;
            t_degrees[t] += 1;
        }

        let s_offsets = prefix_sum(&s_degrees);
        let t_offsets = prefix_sum(&t_degrees);

        let mut s_neighbors = vec![0usize; m];
        let mut t_neighbors = vec![0usize; m];
        let mut s_fill = s_offsets.clone();
        let mut t_fill = t_offsets.clone();
        // sorted is ordered by (s, t), so each S list comes out sorted;
        // T lists come out sorted because s grows within each t bucket.
        for &(s, t) in &sorted {
            s_neighbors[s_fill[s]] = t;
            s_fill[s] += 1;
            t_neighbors[t_fill[t]] = s;
            t_fill[t] += 1;
        }

        Ok(BipartiteGraph {
            n_s,
            n_t,
            m,
            s_offsets,
            s_neighbors,
            t_offsets,
            t_neighbors,
        })
    }

    pub fn n_s(&self) -> usize {
        self.n_s
    }

    pub fn n_t(&self) -> usize {
        self.n_t
    }

    /// Number of vertices on one side.
    pub fn side_len(&self, side: Side) -> usize {
        match side {
            Side::S => self.n_s,
            Side::T => self.n_t,
        }
    }

    /// Number of distinct edges.
    pub fn edge_count(&self) -> usize {
        self.m
    }

    /// Neighbors of an S vertex (sorted T indices).
    pub fn s_neighbors(&self, s: usize) -> &[usize] {
        &self.s_neighbors[self.s_offsets[s]..self.s_offsets[s + 1]]
    }

    /// Neighbors of a T vertex (sorted S indices).
    pub fn t_neighbors(&self, t: usize) -> &[usize] {
        &self.t_neighbors[self.t_offsets[t]..self.t_offsets[t + 1]]
    }

    /// Neighbors of any vertex; the returned indices live on the
    /// opposite side.
    pub fn neighbors(&self, v: Vertex) -> &[usize] {
        match v.side {
            Side::S => self.s_neighbors(v.index),
            Side::T => self.t_neighbors(v.index),
        }
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.neighbors(v).len()
    }

    /// True iff (s, t) is an edge. Binary search over the sorted S list.
    pub fn has_edge(&self, s: usize, t: usize) -> bool {
        s < self.n_s && t < self.n_t && self.s_neighbors(s).binary_search(&t).is_ok()
    }

    /// All edges as (s, t) pairs in S-major order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n_s).flat_map(move |s| self.s_neighbors(s).iter().map(move |&t| (s, t)))
    }

    /// All vertices of one side.
    pub fn vertices(&self, side: Side) -> impl Iterator<Item = Vertex> {
        (0..self.side_len(side)).map(move |index| Vertex { side, index })
    }
}

fn prefix_sum(degrees: &[usize]) -> Vec<usize> {
    let mut offsets = Vec::with_capacity(degrees.len() + 1);
    let mut acc = 0usize;
    offsets.push(0);
    for &d in degrees {
        acc += d;
        offsets.push(acc);
    }
    offsets
}
