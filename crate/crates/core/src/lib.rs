//! Computations with simplicial sets, simplicial groups and equivariant
//! retractive spaces: simplex categories and their presheaves,
//! linearisation to abelian group objects, Kan loop groups and twisted
//! bundles, homotopy orbits, finite CW filtrations, and exact integer
//! homology via Smith normal form.

pub mod cw;
pub mod error;
pub mod fincat;
pub mod homalg;
pub mod linab;
pub mod retract;
pub mod sgrp;
pub mod ssj;
pub mod sset;
pub mod suites;

pub use error::{Error, Result};
