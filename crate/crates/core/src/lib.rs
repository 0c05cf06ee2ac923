//! Exact independent domination in direct products of graphs.
//!
//! The crate computes i(G), α, γ, γ_t and ρ exactly for desk-scale graphs,
//! builds direct products `G × H` with their layer structure, and implements
//! the labelling characterisation of maximal independent sets of `G × K_n`.

pub mod bitset;
pub mod bounds;
pub mod families;
pub mod generate;
pub mod graph;
pub mod invariants;
pub mod io;
pub mod labelling;
pub mod options;
pub mod product;
pub mod reproduce;
pub mod scan;

pub use bitset::VertexSet;
pub use graph::{Graph, GraphError};
pub use invariants::{Invariant, InvariantResult};
pub use options::{SolveError, SolveOptions, DEFAULT_CAP, VERIFY_CAP};
pub use product::{direct_product, Factor, ProductGraph};
