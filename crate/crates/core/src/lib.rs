//! Exact computation of Donaldson–Futaki invariants, L² norms and pairings of
//! filtrations of homogeneous coordinate rings, together with torus
//! specialisation and a bounded check of a non-finitely-generated initial
//! algebra.

pub mod algebra;
pub mod appendix;
pub mod corpus;
pub mod error;
pub mod filtration;
pub mod invariants;
pub mod specialize;

pub use error::{Error, Result};
