//! Specialisation of filtrations along one-parameter subgroups of a torus.

mod generic;
mod initial;
mod tc;
mod torus;

pub use generic::generic_ops;
pub use initial::{
    initial_subspace, initial_subspace_by_intersections, rees_initial, specialize, specialize_checked, specialize_flag,
};
pub use tc::{specialize_tc, TcOutcome, TcReport, TcStep};
pub use torus::{OneParamSubgroup, Torus};
