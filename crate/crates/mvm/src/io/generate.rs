//! Seeded, platform-independent generation of weights and test graphs.
//!
//! All randomness comes from [`SplitMix64`], a 64-bit generator with a
//! one-word state and a fixed, documented update, so any seed produces
//! the same weights and edges on every platform. Weights fill S by
//! ascending index, then T by ascending index; bounded draws take the
//! generator output modulo the range size.

use std::collections::HashSet;
use std::path::PathBuf;
use std::str::FromStr;

use crate::graph::BipartiteGraph;
use crate::io::files::{self, FileFormatError};
use crate::weights::VertexWeights;

/// SplitMix64: state advances by the golden-ratio increment and the
/// output is a bijective mix of the state (Steele, Lea and Flood's
/// variant, the one used to seed most 64-bit generators).
#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> SplitMix64 {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// A value in `[0, bound)`; `bound` must be positive.
    pub fn next_below(&mut self, bound: u64) -> u64 {
        debug_assert!(bound > 0);
        self.next_u64() % bound
    }
}

/// How to obtain vertex weights for a graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WeightSpec {
    /// Every vertex gets weight one.
    Unit,
    /// Independent draws from `[lo, hi]` inclusive, seeded.
    UniformRandom { lo: u64, hi: u64, seed: u64 },
    /// Weights read from a file: one integer per line, all S weights
    /// then all T weights.
    FromFile(PathBuf),
}

impl FromStr for WeightSpec {
    type Err = String;

    /// Accepts `unit`, `random:<lo>:<hi>:<seed>`, or `file:<path>`.
    fn from_str(text: &str) -> Result<WeightSpec, String> {
        if text == "unit" {
            return Ok(WeightSpec::Unit);
        }
        if let Some(rest) = text.strip_prefix("random:") {
            let parts: Vec<&str> = rest.split(':').collect();
            if parts.len() != 3 {
                return Err(format!(
                    "expected random:<lo>:<hi>:<seed>, got 'random:{rest}'"
                ));
            }
            let parse = |p: &str, what: &str| {
                p.parse::<u64>()
                    .map_err(|_| format!("cannot parse {what} '{p}' in weight spec"))
            };
            return Ok(WeightSpec::UniformRandom {
                lo: parse(parts[0], "lower bound")?,
                hi: parse(parts[1], "upper bound")?,
                seed: parse(parts[2], "seed")?,
            });
        }
        if let Some(path) = text.strip_prefix("file:") {
            return Ok(WeightSpec::FromFile(PathBuf::from(path)));
        }
        Err(format!(
            "unknown weight spec '{text}'; use unit, random:<lo>:<hi>:<seed>, or file:<path>"
        ))
    }
}

#[derive(Debug, thiserror::Error)]
pub enum GenError {
    #[error("invalid weight range [{lo}, {hi}]")]
    InvalidRange { lo: u64, hi: u64 },
    #[error("cannot place {requested} distinct edges in a {n_s} x {n_t} bipartite graph")]
    InfeasibleEdgeCount {
        requested: usize,
        n_s: usize,
        n_t: usize,
    },
    #[error(transparent)]
    WeightFile(#[from] FileFormatError),
}

/// Materializes weights for `g` according to `spec`. A pure function of
/// the graph sizes and the spec: repeated calls are identical.
pub fn generate_weights(g: &BipartiteGraph, spec: &WeightSpec) -> Result<VertexWeights, GenError> {
    match spec {
        WeightSpec::Unit => Ok(VertexWeights::unit(g)),
        WeightSpec::UniformRandom { lo, hi, seed } => {
            let (lo, hi) = (*lo, *hi);
            if lo > hi {
                return Err(GenError::InvalidRange { lo, hi });
            }
            let mut rng = SplitMix64::new(*seed);
            let mut draw = |count: usize| -> Vec<u64> {
                (0..count)
                    .map(|_| match (hi - lo).checked_add(1) {
                        Some(range) => lo + rng.next_below(range),
                        None => rng.next_u64(),
                    })
                    .collect()
            };
            let s = draw(g.n_s());
            let t = draw(g.n_t());
            Ok(VertexWeights::new(s, t))
        }
        WeightSpec::FromFile(path) => Ok(files::read_weight_file(path, g.n_s(), g.n_t())?),
    }
}

/// Draws `target_m` distinct edges uniformly (rejection sampling over
/// the full S x T rectangle) with deterministic output for a given
/// seed.
pub fn generate_random_bipartite(
    n_s: usize,
    n_t: usize,
    target_m: usize,
    seed: u64,
) -> Result<BipartiteGraph, GenError> {
    let feasible = match n_s.checked_mul(n_t) {
        Some(max) => target_m <= max,
        None => true,
    };
    if !feasible {
        return Err(GenError::InfeasibleEdgeCount {
            requested: target_m,
            n_s,
            n_t,
        });
    }

    let mut rng = SplitMix64::new(seed);
    let mut seen: HashSet<(usize, usize)> = HashSet::with_capacity(target_m * 2);
    let mut edges: Vec<(usize, usize)> = Vec::with_capacity(target_m);
    while edges.len() < target_m {
        let s = rng.next_below(n_s as u64) as usize;
        let t = rng.next_below(n_t as u64) as usize;
        if seen.insert((s, t)) {
            edges.push((s, t));
        }
    }
    Ok(BipartiteGraph::build(n_s, n_t, &edges).expect("sampled edges are in range"))
}
