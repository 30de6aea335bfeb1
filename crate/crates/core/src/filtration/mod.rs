//! Filtrations of the graded ring: Rees presentations, tabulated flags,
//! weight functions, approximations and equivariance.

mod flag;
mod rees;
mod tabulated;
mod weights;

use std::sync::Arc;

use crate::algebra::GradedRing;
use crate::error::Result;

pub use flag::Flag;
pub use rees::{product_filtration, Generator, LevelBound, ReesPresentation, ValidationReport};
pub use tabulated::{
    approximate, approximate_with_report, check_multiplicative, is_equivariant, tabulate, Approximation,
    MultiplicativityViolation, TabulatedFiltration,
};
pub use weights::{default_window, is_trivial, weight_functions, WeightData, WeightFits};

pub(crate) use weights::to_rationals;

/// Anything that can produce the flag `F_• R_k` of each degree.
pub trait Filtration: Send + Sync {
    fn ring(&self) -> &Arc<GradedRing>;

    fn label(&self) -> &str;

    fn flag(&self, k: usize) -> Result<Arc<Flag>>;

    /// Flags for `k = 0..=kmax`.
    fn flags(&self, kmax: usize) -> Result<Vec<Arc<Flag>>> {
        (0..=kmax).map(|k| self.flag(k)).collect()
    }
}
