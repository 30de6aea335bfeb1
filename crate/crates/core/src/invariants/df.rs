//! Donaldson–Futaki invariant and L² norm from fitted weight functions.

use crate::algebra::Rational;
use crate::error::Result;
use crate::filtration::WeightData;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantReport {
    pub label: String,
    pub df: Rational,
    pub norm_sq: Rational,
    pub weights: WeightData,
}

/// `DF = (a1·b0 − a0·b1)/a0²` and `‖χ‖² = c0 − b0²/a0`.
pub fn df_and_norm(wd: &WeightData, label: &str) -> Result<InvariantReport> {
    let (a0, a1, b0, b1, c0) = (wd.a0()?, wd.a1()?, wd.b0()?, wd.b1()?, wd.c0()?);
    let df = (&a1 * &b0 - &a0 * &b1) / (&a0 * &a0);
    let norm_sq = c0 - &b0 * &b0 / &a0;
    Ok(InvariantReport { label: label.to_string(), df, norm_sq, weights: wd.clone() })
}
