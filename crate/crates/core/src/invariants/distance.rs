//! Angle between two filtrations.

use num_traits::{Signed, Zero};

use crate::algebra::rational::{sqrt_exact, to_f64};
use crate::algebra::Rational;
use crate::error::{Error, Result};
use crate::filtration::{weight_functions, Filtration};

use super::df::df_and_norm;
use super::pairing::{pair, sign, PairingData};

#[derive(Clone, Debug, PartialEq)]
pub struct DistanceReport {
    pub pairing: PairingData,
    pub norm1_sq: Rational,
    pub norm2_sq: Rational,
    /// Exact cosine when `‖χ1‖²·‖χ2‖²` is a rational square.
    pub cosine: Option<Rational>,
    pub cosine_sq: Rational,
    pub cosine_sign: i8,
    /// `arccos` of the cosine; advisory floating point.
    pub angle: f64,
    /// `arccos(P̄(k)/√(d̄1(k)·d̄2(k)))` with `d̄ = d − w²/h`; `None` where a
    /// centred trace vanishes.
    pub per_k_angles: Vec<Option<f64>>,
}

fn centred(d: i64, w: i64, h: i64) -> Rational {
    Rational::from_integer(d.into()) - Rational::new((w as i128 * w as i128).into(), h.into())
}

/// `ρ = arccos(⟨χ1,χ2⟩ / (‖χ1‖·‖χ2‖))`.
pub fn distance(f1: &dyn Filtration, f2: &dyn Filtration, kmax: usize, window: Option<usize>) -> Result<DistanceReport> {
    let pairing = pair(f1, f2, kmax, window)?;
    let value = pairing.value.clone().ok_or(Error::UncertifiedFit)?;
    let norm1_sq = df_and_norm(&weight_functions(f1, kmax, window)?, f1.label())?.norm_sq;
    let norm2_sq = df_and_norm(&weight_functions(f2, kmax, window)?, f2.label())?.norm_sq;
    if !norm1_sq.is_positive() || !norm2_sq.is_positive() {
        return Err(Error::ZeroNorm);
    }
    let product = &norm1_sq * &norm2_sq;
    let cosine = sqrt_exact(&product).map(|s| &value / s);
    let cosine_sq = &value * &value / &product;
    let cosine_sign = sign(&value);
    let c = f64::from(cosine_sign) * to_f64(&cosine_sq).sqrt();
    let angle = c.clamp(-1.0, 1.0).acos();
    let per_k_angles = (0..=kmax)
        .map(|k| {
            let a = centred(pairing.d1[k], pairing.w1[k], pairing.h[k]);
            let b = centred(pairing.d2[k], pairing.w2[k], pairing.h[k]);
            let denom = a * b;
            if denom.is_zero() {
                return None;
            }
            let x = to_f64(&pairing.p_bar[k]) / to_f64(&denom).sqrt();
            Some(x.clamp(-1.0, 1.0).acos())
        })
        .collect();
    Ok(DistanceReport { pairing, norm1_sq, norm2_sq, cosine, cosine_sq, cosine_sign, angle, per_k_angles })
}
