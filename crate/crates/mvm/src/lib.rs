//! Maximum vertex-weighted matching (MVM) in bipartite graphs.
//!
//! In an MVM instance every vertex carries a non-negative weight, the
//! weight of a matching is the sum over its *matched vertices*, and we
//! want a matching of maximum weight. This crate provides:
//!
//! - an exact solver, [`exact_mvm`], that augments from vertices in
//!   non-increasing weight order (O(nm + n log n));
//! - a 2/3-approximation, [`two_thirds_mvm`], from augmenting paths of
//!   length at most three (O(n log n + m));
//! - the greedy 1/2-approximation, [`greedy_half_mvm`];
//! - brute-force oracles and path verifiers ([`oracle`]) for checking
//!   optimality on small instances;
//! - Matrix Market ingestion, seeded generators, and report plumbing
//!   ([`io`]).
//!
//! ```
//! use mvm::{exact_mvm, two_thirds_mvm, BipartiteGraph, VertexWeights};
//! use mvm::matching::matching_weight;
//!
//! let g = BipartiteGraph::build(2, 1, &[(0, 0), (1, 0)])?;
//! let w = VertexWeights::new(vec![5, 9], vec![1]);
//! let best = exact_mvm(&g, &w);
//! assert_eq!(matching_weight(&best, &w)?, 10);
//! let approx = two_thirds_mvm(&g, &w);
//! assert!(3 * matching_weight(&approx, &w)? >= 2 * 10);
//! # Ok::<(), Box<dyn std::error::Error>>(())
//! ```

pub mod approx;
pub mod book;
pub mod exact;
pub mod graph;
pub mod io;
pub mod matching;
pub mod oracle;
mod search;
pub mod symdiff;
pub mod weights;

pub use approx::{
    greedy_half_mvm, mendelsohn_dulmage_merge, restricted_match, two_thirds_mvm, MaxPathLen,
};
pub use exact::{exact_mvm, exact_mvm_with_paths, find_augmenting_to_heaviest};
pub use graph::{BipartiteGraph, GraphError, Side, Vertex};
pub use matching::{
    lex_compare, matching_weight, validate_matching, weight_vector, Matching, WeightVector,
};
pub use search::AugmentingPath;
pub use weights::{transform_negative_weights, NegativeTransform, VertexWeights};
