//! Numerical invariants of filtrations: fits, Donaldson–Futaki invariant,
//! norms, pairings, torus projections and distances.

mod df;
mod distance;
pub mod fit;
mod pairing;
mod projection;

pub use df::{df_and_norm, InvariantReport};
pub use distance::{distance, DistanceReport};
pub use fit::{fit, fit_from, fit_quasi, PolyFit, QuasiFit, MAX_PERIOD};
pub use pairing::{pair, pair_k, PairingData};
pub use projection::{orthogonal_basis, perp_from_projection, perp_invariants, project_torus, Direction, PerpReport, ProjectionReport, Verdict};
