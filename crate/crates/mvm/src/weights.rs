//! Vertex weights and the signed-weight preprocessing transform.
//!
//! Weights are non-negative 64-bit integers; integer arithmetic keeps
//! "heaviest" selections free of floating-point tie ambiguity. Inputs
//! with negative weights must go through [`transform_negative_weights`]
//! before any solver sees them.

use crate::graph::{BipartiteGraph, Side, Vertex};

/// One non-negative weight per vertex, stored per side.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexWeights {
    s_weights: Vec<u64>,
    t_weights: Vec<u64>,
}

impl VertexWeights {
    pub fn new(s_weights: Vec<u64>, t_weights: Vec<u64>) -> VertexWeights {
        VertexWeights {
            s_weights,
            t_weights,
        }
    }

    /// All-one weights sized for `g`.
    pub fn unit(g: &BipartiteGraph) -> VertexWeights {
        VertexWeights {
            s_weights: vec![1; g.n_s()],
            t_weights: vec![1; g.n_t()],
        }
    }

    /// All-zero weights sized for `g`.
    pub fn zero(g: &BipartiteGraph) -> VertexWeights {
        VertexWeights {
            s_weights: vec![0; g.n_s()],
            t_weights: vec![0; g.n_t()],
        }
    }

    pub fn weight(&self, v: Vertex) -> u64 {
        match v.side {
            Side::S => self.s_weights[v.index],
            Side::T => self.t_weights[v.index],
        }
    }

    pub fn side_weights(&self, side: Side) -> &[u64] {
        match side {
            Side::S => &self.s_weights,
            Side::T => &self.t_weights,
        }
    }

    /// Copy with every weight outside `side` zeroed; the one-side
    /// restriction used by the approximation algorithms.
    pub fn one_sided(&self, side: Side) -> VertexWeights {
        match side {
            Side::S => VertexWeights {
                s_weights: self.s_weights.clone(),
                t_weights: vec![0; self.t_weights.len()],
            },
            Side::T => VertexWeights {
                s_weights: vec![0; self.s_weights.len()],
                t_weights: self.t_weights.clone(),
            },
        }
    }

    /// True iff the lengths match the graph's sides.
    pub fn fits(&self, g: &BipartiteGraph) -> bool {
        self.s_weights.len() == g.n_s() && self.t_weights.len() == g.n_t()
    }
}

/// Outcome of [`transform_negative_weights`]: the widened graph, the
/// now non-negative weights, and the bookkeeping needed to map results
/// back to the original vertex sets.
#[derive(Debug, Clone)]
pub struct NegativeTransform {
    pub graph: BipartiteGraph,
    pub weights: VertexWeights,
    /// Original side sizes before companions were appended.
    pub original_n_s: usize,
    pub original_n_t: usize,
    /// `companion_s[k]` is the original T vertex whose companion is the
    /// appended S vertex `original_n_s + k`.
    pub companion_s: Vec<usize>,
    /// `companion_t[k]` is the original S vertex whose companion is the
    /// appended T vertex `original_n_t + k`.
    pub companion_t: Vec<usize>,
}

impl NegativeTransform {
    /// True iff no companion vertices were added (input already
    /// non-negative).
    pub fn is_identity(&self) -> bool {
        self.companion_s.is_empty() && self.companion_t.is_empty()
    }

    /// Drops matched pairs that touch a companion vertex, leaving a
    /// matching on the original graph.
    pub fn restrict(&self, m: &crate::matching::Matching) -> crate::matching::Matching {
        let mut restricted = crate::matching::Matching::empty(self.original_n_s, self.original_n_t);
        for (s, t) in m.pairs() {
            if s < self.original_n_s && t < self.original_n_t {
                restricted.match_pair(s, t);
            }
        }
        restricted
    }
}

/// Rewrites an instance with signed weights into an equivalent one with
/// non-negative weights: every vertex `v` with a negative weight gets a
/// new opposite-side companion `v'` carrying `|weight(v)|`, an edge
/// `(v, v')`, and its own weight reset to zero.
///
/// Intended to run ahead of the exact solver only; the approximation
/// guarantees of the bounded-path algorithms are not proven to survive
/// this rewrite.
pub fn transform_negative_weights(
    g: &BipartiteGraph,
    s_signed: &[i64],
    t_signed: &[i64],
) -> NegativeTransform {
    assert_eq!(s_signed.len(), g.n_s(), "S weight vector sized for graph");
    assert_eq!(t_signed.len(), g.n_t(), "T weight vector sized for graph");

    let mut s_weights: Vec<u64> = s_signed.iter().map(|&w| w.max(0) as u64).collect();
    let mut t_weights: Vec<u64> = t_signed.iter().map(|&w| w.max(0) as u64).collect();

    // Companions for negative S vertices are appended on the T side and
    // vice versa.
    let mut companion_t: Vec<usize> = Vec::new();
    let mut companion_s: Vec<usize> = Vec::new();
    let mut extra_edges: Vec<(usize, usize)> = Vec::new();

    for (s, &w) in s_signed.iter().enumerate() {
        if w < 0 {
            let companion = g.n_t() + companion_t.len();
            companion_t.push(s);
            t_weights.push(w.unsigned_abs());
            extra_edges.push((s, companion));
        }
    }
    for (t, &w) in t_signed.iter().enumerate() {
        if w < 0 {
            let companion = g.n_s() + companion_s.len();
            companion_s.push(t);
            s_weights.push(w.unsigned_abs());
            extra_edges.push((companion, t));
        }
    }

    if extra_edges.is_empty() {
        return NegativeTransform {
            graph: g.clone(),
            weights: VertexWeights::new(s_weights, t_weights),
            original_n_s: g.n_s(),
            original_n_t: g.n_t(),
            companion_s,
            companion_t,
        };
    }

    let mut edges: Vec<(usize, usize)> = g.edges().collect();
    edges.extend(extra_edges);
    let graph = BipartiteGraph::build(
        g.n_s() + companion_s.len(),
        g.n_t() + companion_t.len(),
        &edges,
    )
    .expect("companion edges are in range by construction");

    NegativeTransform {
        graph,
        weights: VertexWeights::new(s_weights, t_weights),
        original_n_s: g.n_s(),
        original_n_t: g.n_t(),
        companion_s,
        companion_t,
    }
}
