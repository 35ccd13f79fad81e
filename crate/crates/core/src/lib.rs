//! Exact and sampled face statistics of random orientable embeddings.
//!
//! An embedding of a multigraph is a rotation system: a cyclic order of the
//! darts at every vertex. Chosen uniformly, the number of faces becomes a
//! random variable. This crate computes its law exactly for multistars
//! (dipoles, bouquets and stars with parallel edges) from Stanley's
//! generating function, samples it for arbitrary multigraphs, evaluates
//! degree-based bounds, and checks all of these against exhaustive
//! enumeration.

pub mod bounds;
pub mod choice;
pub mod distribution;
pub mod embed;
pub mod enumerate;
pub mod error;
pub mod graph;
pub mod montecarlo;
pub mod multistar;
pub mod oracle;
pub mod partition;
pub mod perm;
pub mod poly;
pub mod rational;
pub mod stirling;

pub use distribution::FaceDistribution;
pub use embed::{trace_faces, FaceStructure, PartialEmbedding, RotationSystem};
pub use error::{Error, Result};
pub use graph::{Dart, Multigraph, Vertex};
pub use montecarlo::{monte_carlo_faces, EstimateReport};
pub use partition::Partition;
pub use perm::Permutation;
pub use poly::IntPolynomial;
pub use stirling::StirlingTable;

pub use num_bigint::{BigInt, BigUint};
pub use num_rational::BigRational;
