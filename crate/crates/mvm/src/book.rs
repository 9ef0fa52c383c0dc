//! The guide chapters from `book/`, re-exposed as rustdoc modules so
//! every code snippet in the book compiles and runs under
//! `cargo test --doc`. The rendered book itself is built with
//! `mdbook build book`.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}

#[doc = include_str!("../../../book/src/graphs-and-matchings.md")]
pub mod graphs_and_matchings {}

#[doc = include_str!("../../../book/src/weight-vectors.md")]
pub mod weight_vectors {}

#[doc = include_str!("../../../book/src/exact-solver.md")]
pub mod exact_solver {}

#[doc = include_str!("../../../book/src/approximation.md")]
pub mod approximation {}

#[doc = include_str!("../../../book/src/oracles-and-verification.md")]
pub mod oracles_and_verification {}

#[doc = include_str!("../../../book/src/io-and-generation.md")]
pub mod io_and_generation {}

#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
