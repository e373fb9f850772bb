//! Exact computations with the 27-dimensional E6-module.

pub mod decomp;
pub mod error;
pub mod invariants;
pub mod liealg;
pub mod linalg;
pub mod model;
pub mod polyops;
pub mod rep;
pub mod report;
pub mod rootsys;
pub mod scalar;
pub mod singular;
pub mod suite;
pub mod weyl;

pub use error::{Error, Result};

/// Default exact coefficient field.
pub type Q = num_rational::BigRational;
pub type Poly = polyops::Polynomial<Q>;
pub type WeylOp = polyops::DiffOp<Q>;
