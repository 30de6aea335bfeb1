//! Specialisation of a test-configuration: specialise along a generic
//! one-parameter subgroup of the torus, then re-present by a finitely
//! generated approximation.

use crate::error::{Error, Result};
use crate::filtration::{approximate_with_report, is_equivariant, Filtration, ReesPresentation, TabulatedFiltration};

use super::generic::generic_ops;
use super::initial::specialize;
use super::torus::{OneParamSubgroup, Torus};

/// One escalation step: the approximation by degrees `<= r`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TcStep {
    pub r: usize,
    pub generators: usize,
    /// First degree where the approximation's weight functions differ from
    /// the specialisation's.
    pub first_disagreement: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TcOutcome {
    /// The approximation with this `r < kmax` reproduces all tabulated weights.
    Stable { r: usize },
    /// Every `r < kmax` disagrees somewhere below `kmax`; the last step's
    /// first disagreement is recorded.
    Unstable { disagreement: usize },
}

#[derive(Debug)]
pub struct TcReport {
    pub lambda: OneParamSubgroup,
    pub kmax: usize,
    pub input_equivariant: bool,
    pub specialized: TabulatedFiltration,
    pub steps: Vec<TcStep>,
    pub outcome: TcOutcome,
    /// The stable approximation, when one was found.
    pub presentation: Option<ReesPresentation>,
    /// Whether the stable approximation is torus-equivariant up to `kmax`.
    pub output_equivariant: Option<bool>,
}

impl TcReport {
    pub fn require_stable(&self) -> Result<&ReesPresentation> {
        match (&self.outcome, &self.presentation) {
            (TcOutcome::Stable { .. }, Some(p)) => Ok(p),
            (TcOutcome::Unstable { disagreement }, _) => {
                Err(Error::ApproximationUnstable { kmax: self.kmax, disagreement: *disagreement })
            }
            _ => unreachable!("stable outcomes carry a presentation"),
        }
    }
}

/// Escalates `r = 1, 2, …, min(rmax, kmax − 1)` until the approximation of the
/// specialisation reproduces its weight functions on all `k <= kmax`.
/// Taking `r = kmax` would agree trivially, so it is never used as evidence.
pub fn specialize_tc(
    filt: &dyn Filtration,
    torus: &Torus,
    kmax: usize,
    rmax: Option<usize>,
    seed: u64,
) -> Result<TcReport> {
    if !filt.ring().same_as(torus.ring()) {
        return Err(Error::RingMismatch);
    }
    if kmax < 2 {
        return Err(Error::OutOfBounds("specialisation pipeline needs kmax >= 2".into()));
    }
    let lambda = generic_ops(torus, kmax, seed)?;
    let input_equivariant = is_equivariant(filt, torus, kmax)?;
    let specialized = specialize(filt, &lambda, kmax)?;
    let top = rmax.unwrap_or(kmax - 1).min(kmax - 1).max(1);
    let mut steps = Vec::new();
    for r in 1..=top {
        let approx = approximate_with_report(&specialized, r)?;
        steps.push(TcStep {
            r,
            generators: approx.presentation.generators().len(),
            first_disagreement: approx.first_disagreement,
        });
        if approx.first_disagreement.is_none() {
            let output_equivariant = Some(is_equivariant(&approx.presentation, torus, kmax)?);
            return Ok(TcReport {
                lambda,
                kmax,
                input_equivariant,
                specialized,
                steps,
                outcome: TcOutcome::Stable { r },
                presentation: Some(approx.presentation),
                output_equivariant,
            });
        }
    }
    let disagreement = steps.last().and_then(|s| s.first_disagreement).unwrap_or(kmax);
    Ok(TcReport {
        lambda,
        kmax,
        input_equivariant,
        specialized,
        steps,
        outcome: TcOutcome::Unstable { disagreement },
        presentation: None,
        output_equivariant: None,
    })
}
