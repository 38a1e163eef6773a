//! Independence numbers of 2-token graphs.
//!
//! The crate builds the 2-token graph `F2(G)` of a simple graph, computes
//! exact maximum independent sets of it, builds the explicit independent
//! sets known for path unions and for joins `E_n + H`, and evaluates the
//! closed forms for paths, cycles, path unions, fans, wheels, `E_n + K_m`
//! and complete bipartite graphs. [`harness`] cross-checks the three.

pub mod bitset;
pub mod constructions;
pub mod error;
pub mod family;
pub mod formulas;
pub mod graph;
pub mod harness;
pub mod io;
pub mod mis;
pub mod num;
pub mod token;

pub use error::{Error, Result};
pub use family::FamilySpec;
pub use graph::{Graph, VertexSet};
pub use mis::MisResult;
pub use token::{TokenGraph, TokenVertex};

/// Default integer type closed forms are evaluated in.
pub type Alpha = u64;

/// Closed-form result in the default integer type.
pub type AlphaFormula = formulas::AlphaFormulaResult<Alpha>;

/// Closed-form result in `u128`, for parameters whose values overflow
/// [`Alpha`].
pub type WideAlphaFormula = formulas::AlphaFormulaResult<u128>;
