//! Subspaces of a single degree piece `R_k`, kept in reduced row echelon form.

use num_traits::{One, Zero};

use super::rational::Rational;
use crate::error::{Error, Result};

/// A subspace of `R_k` given by the RREF of a spanning set in the standard
/// monomial coordinates. Two equal subspaces have identical representations.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    degree: usize,
    ambient: usize,
    rows: Vec<Vec<Rational>>,
    pivots: Vec<usize>,
}

fn first_nonzero(v: &[Rational]) -> Option<usize> {
    v.iter().position(|x| !x.is_zero())
}

impl Subspace {
    pub fn zero(degree: usize, ambient: usize) -> Self {
        Subspace { degree, ambient, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(degree: usize, ambient: usize) -> Self {
        let rows = (0..ambient)
            .map(|i| (0..ambient).map(|j| if i == j { Rational::one() } else { Rational::zero() }).collect())
            .collect();
        Subspace { degree, ambient, rows, pivots: (0..ambient).collect() }
    }

    pub fn span(degree: usize, ambient: usize, vectors: impl IntoIterator<Item = Vec<Rational>>) -> Self {
        let mut s = Self::zero(degree, ambient);
        for v in vectors {
            s.insert(v);
        }
        s
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.ambient
    }

    pub fn rows(&self) -> &[Vec<Rational>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Residual of `v` after eliminating every pivot column.
    pub fn reduce(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.ambient, "vector length does not match ambient dimension");
        let mut v = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if v[p].is_zero() {
                continue;
            }
            let c = v[p].clone();
            for (x, r) in v.iter_mut().zip(row).skip(p) {
                if !r.is_zero() {
                    *x -= &c * r;
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        self.reduce(v).iter().all(Zero::is_zero)
    }

    /// Adds `v` to the span; returns whether the dimension grew.
    pub fn insert(&mut self, v: Vec<Rational>) -> bool {
        let mut v = self.reduce(&v);
        let Some(q) = first_nonzero(&v) else { return false };
        let inv = v[q].recip();
        for x in v.iter_mut().skip(q) {
            if !x.is_zero() {
                *x *= &inv;
            }
        }
        for row in self.rows.iter_mut() {
            if row[q].is_zero() {
                continue;
            }
            let c = row[q].clone();
            for (x, y) in row.iter_mut().zip(&v).skip(q) {
                if !y.is_zero() {
                    *x -= &c * y;
                }
            }
        }
        let at = self.pivots.partition_point(|&p| p < q);
        self.pivots.insert(at, q);
        self.rows.insert(at, v);
        true
    }

    fn check_ambient(&self, other: &Subspace) -> Result<()> {
        if self.degree != other.degree || self.ambient != other.ambient {
            return Err(Error::AmbientMismatch(self.degree, other.degree));
        }
        Ok(())
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> Result<bool> {
        self.check_ambient(other)?;
        Ok(self.dim() <= other.dim() && self.rows.iter().all(|r| other.contains(r)))
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        let (mut big, small) = if self.dim() >= other.dim() { (self.clone(), other) } else { (other.clone(), self) };
        for r in &small.rows {
            if big.is_full() {
                break;
            }
            big.insert(r.clone());
        }
        Ok(big)
    }

    /// Zassenhaus intersection.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Subspace::zero(self.degree, self.ambient));
        }
        if self.is_full() {
            return Ok(other.clone());
        }
        if other.is_full() {
            return Ok(self.clone());
        }
        let n = self.ambient;
        let mut stacked = Subspace::zero(self.degree, 2 * n);
        for r in &self.rows {
            stacked.insert(r.iter().chain(r.iter()).cloned().collect());
        }
        for r in &other.rows {
            stacked.insert(r.iter().cloned().chain(std::iter::repeat(Rational::zero()).take(n)).collect());
        }
        let meet = stacked
            .rows
            .iter()
            .zip(&stacked.pivots)
            .filter(|(_, &p)| p >= n)
            .map(|(r, _)| r[n..].to_vec());
        Ok(Subspace::span(self.degree, n, meet))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::int;

    fn v(xs: &[i64]) -> Vec<Rational> {
        xs.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn span_is_canonical() {
        let a = Subspace::span(1, 3, [v(&[1, 1, 0]), v(&[0, 1, 1])]);
        let b = Subspace::span(1, 3, [v(&[1, 2, 1]), v(&[2, 1, -1]), v(&[1, 0, -1])]);
        assert_eq!(a, b);
        assert_eq!(a.dim(), 2);
        assert_eq!(a.pivots(), &[0, 1]);
    }

    #[test]
    fn dependent_vectors_collapse() {
        let s = Subspace::span(1, 2, [v(&[1, 1]), v(&[2, 2])]);
        assert_eq!(s.dim(), 1);
        assert!(Subspace::span(1, 2, Vec::<Vec<Rational>>::new()).is_zero());
    }

    #[test]
    fn sum_and_intersection() {
        let x = Subspace::span(1, 2, [v(&[1, 0])]);
        let y = Subspace::span(1, 2, [v(&[0, 1])]);
        assert!(x.intersect(&y).unwrap().is_zero());
        assert!(x.sum(&y).unwrap().is_full());
        assert_eq!(x.intersect(&x).unwrap(), x);
        assert_eq!(x.sum(&x).unwrap(), x);
        let p = Subspace::span(1, 2, [v(&[1, 1])]);
        let m = Subspace::span(1, 2, [v(&[1, -1])]);
        assert!(p.intersect(&m).unwrap().is_zero());
    }

    #[test]
    fn intersection_of_planes() {
        let a = Subspace::span(1, 3, [v(&[1, 0, 0]), v(&[0, 1, 0])]);
        let b = Subspace::span(1, 3, [v(&[0, 1, 0]), v(&[0, 0, 1])]);
        assert_eq!(a.intersect(&b).unwrap(), Subspace::span(1, 3, [v(&[0, 5, 0])]));
    }

    #[test]
    fn mismatched_ambient() {
        let a = Subspace::zero(1, 2);
        let b = Subspace::zero(2, 3);
        assert!(matches!(a.sum(&b), Err(Error::AmbientMismatch(1, 2))));
    }
}
