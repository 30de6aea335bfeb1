//! Exact arithmetic substrate: rationals, polynomials, graded quotient rings and
//! echelonised subspaces.

pub mod groebner;
pub mod parse;
pub mod poly;
pub mod rational;
pub mod ring;
pub mod subspace;

pub use parse::parse_poly;
pub use poly::{Monomial, Poly};
pub use rational::Rational;
pub use ring::{DegreeBasis, GradedRing};
pub use subspace::Subspace;
