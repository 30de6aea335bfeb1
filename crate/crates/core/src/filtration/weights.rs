//! Hilbert, weight and trace-squared sequences and their polynomial fits.

use num_traits::Zero;

use crate::algebra::Rational;
use crate::error::{Error, Result};
use crate::invariants::fit::{fit_quasi, QuasiFit, MAX_PERIOD};

use super::Filtration;

/// `h(k)`, `w(k) = Σ(−i)·dim gr_i` and `d(k) = Σ i²·dim gr_i` for `k <= kmax`,
/// with fits of degrees `n`, `n+1`, `n+2` when they certify.
///
/// Fits are quasi-polynomial: when the Rees algebra is not generated in
/// R-degree one the sequences can depend on `k` modulo a period. The
/// coefficients `a0, a1, b0, b1, c0` count as certified only when every
/// residue class agrees on them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightData {
    pub n: usize,
    pub kmax: usize,
    pub h: Vec<i64>,
    pub w: Vec<i64>,
    pub d: Vec<i64>,
    /// Requested start of the fit window.
    pub window: usize,
    pub fits: Option<WeightFits>,
    /// Why the fit failed, when it did.
    pub fit_error: Option<Error>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightFits {
    pub h: QuasiFit,
    pub w: QuasiFit,
    pub d: QuasiFit,
}

impl WeightFits {
    /// Start of the common certified window.
    pub fn threshold(&self) -> usize {
        self.h.threshold().max(self.w.threshold()).max(self.d.threshold())
    }

    pub fn period(&self) -> usize {
        self.h.period.max(self.w.period).max(self.d.period)
    }
}

impl WeightData {
    /// True when the fits exist and `a0, a1, b0, b1, c0` are well defined.
    pub fn certified(&self) -> bool {
        self.a0().is_ok() && self.a1().is_ok() && self.b0().is_ok() && self.b1().is_ok() && self.c0().is_ok()
    }

    fn coefficient(&self, pick: impl Fn(&WeightFits) -> &QuasiFit, i: usize) -> Result<Rational> {
        let fits = self.fits.as_ref().ok_or(Error::UncertifiedFit)?;
        pick(fits).common(i).ok_or(Error::UncertifiedFit)
    }

    pub fn a0(&self) -> Result<Rational> {
        self.coefficient(|f| &f.h, 0)
    }

    pub fn a1(&self) -> Result<Rational> {
        self.coefficient(|f| &f.h, 1)
    }

    pub fn b0(&self) -> Result<Rational> {
        self.coefficient(|f| &f.w, 0)
    }

    pub fn b1(&self) -> Result<Rational> {
        self.coefficient(|f| &f.w, 1)
    }

    pub fn c0(&self) -> Result<Rational> {
        self.coefficient(|f| &f.d, 0)
    }

    pub fn c1(&self) -> Result<Rational> {
        self.coefficient(|f| &f.d, 1)
    }

    /// First degree where the `w` or `d` sequences of the two inputs differ.
    pub fn first_disagreement(&self, other: &WeightData) -> Option<usize> {
        let top = self.kmax.min(other.kmax);
        (0..=top).find(|&k| self.h[k] != other.h[k] || self.w[k] != other.w[k] || self.d[k] != other.d[k])
    }
}

pub(crate) fn to_rationals(seq: &[i64]) -> Vec<Rational> {
    seq.iter().map(|&x| Rational::from_integer(x.into())).collect()
}

/// Default fit window start `n + 3`.
pub fn default_window(n: usize) -> usize {
    n + 3
}

/// Tabulates the weight sequences up to `kmax` and fits them from `window`
/// onwards (raising the window start if the sequences are not yet polynomial).
pub fn weight_functions(filt: &dyn Filtration, kmax: usize, window: Option<usize>) -> Result<WeightData> {
    let ring = filt.ring();
    let n = ring.dimension();
    let mut h = Vec::with_capacity(kmax + 1);
    let mut w = Vec::with_capacity(kmax + 1);
    let mut d = Vec::with_capacity(kmax + 1);
    for k in 0..=kmax {
        let f = filt.flag(k)?;
        h.push(f.ambient_dim() as i64);
        w.push(f.weight());
        d.push(f.trace_squared());
    }
    let window = window.unwrap_or_else(|| default_window(n));
    let attempt = || -> Result<WeightFits> {
        Ok(WeightFits {
            h: fit_quasi(&to_rationals(&h), n, window, kmax, MAX_PERIOD)?,
            w: fit_quasi(&to_rationals(&w), n + 1, window, kmax, MAX_PERIOD)?,
            d: fit_quasi(&to_rationals(&d), n + 2, window, kmax, MAX_PERIOD)?,
        })
    };
    let (fits, fit_error) = match attempt() {
        Ok(f) => (Some(f), None),
        Err(e) => (None, Some(e)),
    };
    let mut data = WeightData { n, kmax, h, w, d, window, fits, fit_error };
    if data.fits.is_some() && !data.certified() {
        data.fit_error = Some(Error::UncertifiedFit);
    }
    Ok(data)
}

/// True when every sequence entry is zero, i.e. the filtration is trivial.
pub fn is_trivial(wd: &WeightData) -> bool {
    wd.w.iter().chain(&wd.d).all(|x| x.is_zero())
}
