//! Per-side degree statistics in the style of a benchmark table row.

use std::fmt;

use crate::graph::{BipartiteGraph, Side, Vertex};

/// Sizes and degree statistics of a bipartite graph. Mean degrees are
/// edge count over side size, displayed to two decimals.
#[derive(Debug, Clone, PartialEq)]
pub struct GraphStats {
    pub n_s: usize,
    pub n_t: usize,
    pub m: usize,
    pub s_max_degree: usize,
    pub s_mean_degree: f64,
    pub t_max_degree: usize,
    pub t_mean_degree: f64,
}

pub fn graph_stats(g: &BipartiteGraph) -> GraphStats {
    let side_max = |side: Side| {
        (0..g.side_len(side))
            .map(|index| g.degree(Vertex { side, index }))
            .max()
            .unwrap_or(0)
    };
    let side_mean = |side: Side| {
        if g.side_len(side) == 0 {
            0.0
        } else {
            g.edge_count() as f64 / g.side_len(side) as f64
        }
    };
    GraphStats {
        n_s: g.n_s(),
        n_t: g.n_t(),
        m: g.edge_count(),
        s_max_degree: side_max(Side::S),
        s_mean_degree: side_mean(Side::S),
        t_max_degree: side_max(Side::T),
        t_mean_degree: side_mean(Side::T),
    }
}

impl fmt::Display for GraphStats {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "n_s={} s_max_degree={} s_mean_degree={:.2} \
             n_t={} t_max_degree={} t_mean_degree={:.2} m={}",
            self.n_s,
            self.s_max_degree,
            self.s_mean_degree,
            self.n_t,
            self.t_max_degree,
            self.t_mean_degree,
            self.m
        )
    }
}
