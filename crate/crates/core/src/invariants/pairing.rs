//! The product functions `P(k) = Tr(A_k B_k)` of two filtrations and their
//! normalised leading coefficient.

use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

use crate::algebra::Rational;
use crate::error::{Error, Result};
use crate::filtration::{default_window, to_rationals, Filtration, Flag};

use super::fit::{fit_quasi, QuasiFit, MAX_PERIOD};

/// Inverse of a square matrix of full rank, by Gauss–Jordan elimination.
fn inverse(rows: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    let n = rows.len();
    let mut a: Vec<Vec<Rational>> = rows
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut row = r.clone();
            row.extend((0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() }));
            row
        })
        .collect();
    for col in 0..n {
        let p = (col..n).find(|&r| !a[r][col].is_zero()).expect("adapted basis is invertible");
        a.swap(col, p);
        let inv = a[col][col].recip();
        for x in a[col].iter_mut() {
            *x *= &inv;
        }
        let pivot = a[col].clone();
        for (r, row) in a.iter_mut().enumerate() {
            if r == col || row[col].is_zero() {
                continue;
            }
            let c = row[col].clone();
            for (x, y) in row.iter_mut().zip(&pivot) {
                if !y.is_zero() {
                    *x -= &c * y;
                }
            }
        }
    }
    a.into_iter().map(|r| r[n..].to_vec()).collect()
}

fn is_monomial(basis: &[Vec<Rational>]) -> bool {
    basis.iter().all(|r| r.iter().filter(|x| !x.is_zero()).count() == 1)
}

/// `P(k) = Σ_{i,j} i·j·g_ij`, where `g_ij` counts a common adapted basis of
/// the two flags by level. The relative position is found by writing the
/// first flag's adapted basis in the second's and eliminating on the last
/// nonzero coordinate: row `r` then has level `level_F(r)` and pairs with the
/// second flag's level at its pivot.
pub fn pair_k(f: &Flag, g: &Flag) -> Result<Rational> {
    if f.degree() != g.degree() || f.ambient_dim() != g.ambient_dim() {
        return Err(Error::AmbientMismatch(f.degree(), g.degree()));
    }
    if is_monomial(f.basis()) && !is_monomial(g.basis()) {
        return pair_k(g, f);
    }
    let h = f.ambient_dim();
    let coordinates: Box<dyn Fn(&[Rational]) -> Vec<Rational>> = if is_monomial(g.basis()) {
        // g's basis is a scaled permutation of the standard basis
        let mut slot = vec![(0, Rational::zero()); h];
        for (j, row) in g.basis().iter().enumerate() {
            let i = row.iter().position(|x| !x.is_zero()).unwrap();
            slot[i] = (j, row[i].clone());
        }
        Box::new(move |v: &[Rational]| {
            let mut c = vec![Rational::zero(); h];
            for (x, (j, s)) in v.iter().zip(&slot) {
                if !x.is_zero() {
                    c[*j] = x / s;
                }
            }
            c
        })
    } else {
        let ginv = inverse(g.basis());
        Box::new(move |v: &[Rational]| {
            (0..h).map(|j| v.iter().zip(&ginv).filter(|(x, _)| !x.is_zero()).map(|(x, row)| x * &row[j]).sum()).collect()
        })
    };
    let mut pivots: Vec<Option<Vec<Rational>>> = vec![None; h];
    let mut total: i64 = 0;
    for (v, &fl) in f.basis().iter().zip(f.levels()) {
        let mut c = coordinates(v);
        loop {
            let last = c.iter().rposition(|x| !x.is_zero()).expect("basis vectors are independent");
            match &pivots[last] {
                Some(row) => {
                    let factor = &c[last] / &row[last];
                    for (x, y) in c.iter_mut().zip(row) {
                        if !y.is_zero() {
                            *x -= &factor * y;
                        }
                    }
                }
                None => {
                    total += (fl * g.levels()[last]) as i64;
                    pivots[last] = Some(c);
                    break;
                }
            }
        }
    }
    Ok(Rational::from_integer(total.into()))
}

/// Sequences of a pairing together with the normalised leading coefficient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairingData {
    pub n: usize,
    pub kmax: usize,
    pub h: Vec<i64>,
    pub w1: Vec<i64>,
    pub w2: Vec<i64>,
    pub d1: Vec<i64>,
    pub d2: Vec<i64>,
    pub p: Vec<Rational>,
    /// `P̄(k) = P(k) − w1(k)·w2(k)/h(k)`.
    pub p_bar: Vec<Rational>,
    /// Certified `⟨χ1, χ2⟩`.
    pub value: Option<Rational>,
    /// Fits of `h`, `w1`, `w2`, `P` used for the value (quasi-polynomial,
    /// leading coefficients common to all residue classes).
    pub fits: Option<[QuasiFit; 4]>,
    /// When uncertified: max over the tail of `k^{−n−2} P̄(k)`, flagged as an estimate.
    pub tail_estimate: Option<Rational>,
    pub fit_error: Option<Error>,
}

impl PairingData {
    pub fn certified(&self) -> bool {
        self.value.is_some()
    }

    /// Per-degree Cauchy–Schwarz check `P(k)² <= d1(k)·d2(k)`.
    pub fn cauchy_schwarz_holds(&self) -> bool {
        (0..=self.kmax).all(|k| {
            let bound = Rational::from_integer((self.d1[k] as i128 * self.d2[k] as i128).into());
            &self.p[k] * &self.p[k] <= bound
        })
    }
}

/// `⟨χ1, χ2⟩ = lim k^{−n−2} P̄(k)`. The leading coefficient of `P̄` is
/// `p0 − b0·b0'/a0`, read off degree-`(n+2)`, `(n+1)`, `n` fits of `P`, `w1`,
/// `w2`, `h`; when those fail to certify a flagged tail estimate is returned.
pub fn pair(f1: &dyn Filtration, f2: &dyn Filtration, kmax: usize, window: Option<usize>) -> Result<PairingData> {
    if !f1.ring().same_as(f2.ring()) {
        return Err(Error::RingMismatch);
    }
    let n = f1.ring().dimension();
    let a = f1.flags(kmax)?;
    let b = f2.flags(kmax)?;
    let p = a.par_iter().zip(b.par_iter()).map(|(x, y)| pair_k(x, y)).collect::<Result<Vec<_>>>()?;
    let h: Vec<i64> = a.iter().map(|f| f.ambient_dim() as i64).collect();
    let (w1, w2): (Vec<i64>, Vec<i64>) = a.iter().zip(&b).map(|(x, y)| (x.weight(), y.weight())).unzip();
    let (d1, d2): (Vec<i64>, Vec<i64>) = a.iter().zip(&b).map(|(x, y)| (x.trace_squared(), y.trace_squared())).unzip();
    let p_bar: Vec<Rational> = (0..=kmax)
        .map(|k| &p[k] - Rational::new((w1[k] as i128 * w2[k] as i128).into(), h[k].into()))
        .collect();
    let window = window.unwrap_or_else(|| default_window(n));
    let attempt = || -> Result<([QuasiFit; 4], Rational)> {
        let fits = [
            fit_quasi(&to_rationals(&h), n, window, kmax, MAX_PERIOD)?,
            fit_quasi(&to_rationals(&w1), n + 1, window, kmax, MAX_PERIOD)?,
            fit_quasi(&to_rationals(&w2), n + 1, window, kmax, MAX_PERIOD)?,
            fit_quasi(&p, n + 2, window, kmax, MAX_PERIOD)?,
        ];
        let lead = |i: usize| fits[i].common(0).ok_or(Error::UncertifiedFit);
        let value = lead(3)? - lead(1)? * lead(2)? / lead(0)?;
        Ok((fits, value))
    };
    let (value, fits, tail_estimate, fit_error) = match attempt() {
        Ok((fits, value)) => (Some(value), Some(fits), None, None),
        Err(e) => {
            let start = window.max(kmax / 2).min(kmax).max(1);
            let estimate = (start..=kmax)
                .map(|k| &p_bar[k] / Rational::from_integer(num_bigint::BigInt::from(k).pow((n + 2) as u32)))
                .max_by(|x, y| x.cmp(y));
            (None, None, estimate, Some(e))
        }
    };
    Ok(PairingData { n, kmax, h, w1, w2, d1, d2, p, p_bar, value, fits, tail_estimate, fit_error })
}

/// Sign of a rational as -1, 0 or 1.
pub(crate) fn sign(q: &Rational) -> i8 {
    if q.is_zero() {
        0
    } else if q.is_positive() {
        1
    } else {
        -1
    }
}
