//! File formats and instance generation: Matrix Market ingestion,
//! seeded weight and random-graph generation, weight and matching
//! files, and per-side graph statistics.

pub mod files;
pub mod generate;
pub mod matrix_market;
pub mod stats;

pub use files::{read_matching_file, read_weight_file, write_matching_file, write_weight_file};
pub use generate::{generate_random_bipartite, generate_weights, GenError, SplitMix64, WeightSpec};
pub use matrix_market::{parse_matrix_market, read_matrix_market, write_matrix_market, MmError};
pub use stats::{graph_stats, GraphStats};
