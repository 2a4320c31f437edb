//! Exact integer homological algebra: matrices, Smith normal form,
//! finitely presented abelian groups, chain complexes.

pub mod chain;
pub mod fp;
pub mod matrix;
pub mod snf;

pub use chain::{format_invariants, ChainComplex};
pub use fp::{FpComplex, FpGroup, FpMap};
pub use matrix::IntMatrix;
pub use snf::{kernel_basis, snf, solve, solve_mat, Snf};
