//! Exact polynomial fits of integer or rational sequences.

use num_traits::{One, Zero};

use crate::algebra::Rational;
use crate::error::{Error, Result};

/// A polynomial `Σ coefficients[i] · k^{degree − i}` that reproduces a
/// sequence exactly on `[start, end]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyFit {
    pub degree: usize,
    pub coefficients: Vec<Rational>,
    pub start: usize,
    pub end: usize,
}

impl PolyFit {
    /// Coefficient of `k^{degree − i}`; so `leading(0)` is the top coefficient.
    pub fn leading(&self, i: usize) -> Rational {
        self.coefficients.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn eval(&self, k: usize) -> Rational {
        let k = Rational::from_integer(k.into());
        self.coefficients.iter().fold(Rational::zero(), |acc, c| acc * &k + c)
    }
}

/// Coefficients (highest power first) of the polynomial of degree
/// `< nodes.len()` through the given points, by divided differences.
fn interpolate(nodes: &[(usize, Rational)]) -> Vec<Rational> {
    let xs: Vec<Rational> = nodes.iter().map(|(k, _)| Rational::from_integer((*k).into())).collect();
    let mut table: Vec<Rational> = nodes.iter().map(|(_, v)| v.clone()).collect();
    let mut newton = Vec::with_capacity(nodes.len());
    for level in 0..nodes.len() {
        newton.push(table[0].clone());
        table = (0..table.len() - 1)
            .map(|i| (&table[i + 1] - &table[i]) / (&xs[i + level + 1] - &xs[i]))
            .collect();
    }
    // ascending coefficients of Σ_j newton_j · Π_{i<j} (k − x_i)
    let mut total = vec![Rational::zero(); nodes.len()];
    let mut basis = vec![Rational::one()];
    for (j, c) in newton.iter().enumerate() {
        for (t, b) in total.iter_mut().zip(&basis) {
            *t += c * b;
        }
        let mut next = vec![Rational::zero(); basis.len() + 1];
        for (i, b) in basis.iter().enumerate() {
            next[i + 1] += b;
            next[i] -= b * &xs[j];
        }
        basis = next;
    }
    total.reverse();
    total
}

/// Interpolates `seq` on `k0..=k0+degree` and certifies the result on all of
/// `[k0, kmax]`. A certified fit also coincides with the interpolant of the
/// window starting at `k0 + 1`.
pub fn fit(seq: &[Rational], degree: usize, k0: usize, kmax: usize) -> Result<PolyFit> {
    fit_stride(seq, degree, k0, kmax, 1)
}

/// As [`fit`], using only the degrees `k0, k0 + stride, k0 + 2·stride, …`.
fn fit_stride(seq: &[Rational], degree: usize, k0: usize, kmax: usize, stride: usize) -> Result<PolyFit> {
    if kmax < k0 || (kmax - k0) / stride < degree + 2 {
        return Err(Error::WindowTooShort { needed: stride * (degree + 2), have: kmax.saturating_sub(k0) });
    }
    if kmax >= seq.len() {
        return Err(Error::BoundExceeded { requested: kmax, bound: seq.len().saturating_sub(1) });
    }
    let nodes: Vec<(usize, Rational)> = (0..=degree).map(|i| k0 + i * stride).map(|k| (k, seq[k].clone())).collect();
    let fitted = PolyFit { degree, coefficients: interpolate(&nodes), start: k0, end: kmax };
    if let Some(k) = (k0..=kmax).step_by(stride).find(|&k| fitted.eval(k) != seq[k]) {
        return Err(Error::NotYetPolynomial(k));
    }
    Ok(fitted)
}

fn fit_stride_from(seq: &[Rational], degree: usize, k0: usize, kmax: usize, stride: usize) -> Result<PolyFit> {
    let mut start = k0;
    loop {
        match fit_stride(seq, degree, start, kmax, stride) {
            Err(Error::NotYetPolynomial(bad)) => {
                let next = start + stride * ((bad - start) / stride).saturating_sub(degree).max(1);
                if kmax < next || (kmax - next) / stride < degree + 2 {
                    return Err(Error::NotYetPolynomial(bad));
                }
                start = next;
            }
            other => return other,
        }
    }
}

/// Raises the window start from `k0` until [`fit`] certifies, as long as the
/// window stays long enough.
pub fn fit_from(seq: &[Rational], degree: usize, k0: usize, kmax: usize) -> Result<PolyFit> {
    fit_stride_from(seq, degree, k0, kmax, 1)
}

/// Largest period tried by [`fit_quasi`] in the weight and pairing fits.
pub const MAX_PERIOD: usize = 6;

/// A quasi-polynomial fit: one polynomial per residue class of `k` modulo
/// `period`, each certified on its class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuasiFit {
    pub period: usize,
    /// `classes[c]` fits the degrees `k ≡ start_c (mod period)`.
    pub classes: Vec<PolyFit>,
}

impl QuasiFit {
    /// Coefficient of `k^{degree − i}` when all residue classes agree on it.
    pub fn common(&self, i: usize) -> Option<Rational> {
        let first = self.classes[0].leading(i);
        self.classes.iter().all(|c| c.leading(i) == first).then_some(first)
    }

    /// Largest window start over the classes.
    pub fn threshold(&self) -> usize {
        self.classes.iter().map(|c| c.start).max().unwrap_or(0)
    }
}

/// Tries periods `1..=max_period` in turn and returns the first for which
/// every residue class from `k0` on certifies; period 1 is an ordinary fit.
pub fn fit_quasi(seq: &[Rational], degree: usize, k0: usize, kmax: usize, max_period: usize) -> Result<QuasiFit> {
    let mut first_error = None;
    for period in 1..=max_period.max(1) {
        let classes = (0..period).map(|c| fit_stride_from(seq, degree, k0 + c, kmax, period)).collect::<Result<Vec<_>>>();
        match classes {
            Ok(classes) => return Ok(QuasiFit { period, classes }),
            Err(e) => {
                if matches!(e, Error::WindowTooShort { .. }) && period > 1 {
                    break;
                }
                first_error.get_or_insert(e);
            }
        }
    }
    Err(first_error.expect("at least one period tried"))
}
