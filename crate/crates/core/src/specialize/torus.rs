//! Diagonal one-parameter subgroups and tori acting on the ring.

use std::sync::Arc;

use crate::algebra::{GradedRing, Rational, Subspace};
use crate::error::{Error, Result};

/// `λ(τ)·x_j = τ^{weights_j} x_j`.
#[derive(Clone, Debug)]
pub struct OneParamSubgroup {
    ring: Arc<GradedRing>,
    weights: Vec<i64>,
}

impl OneParamSubgroup {
    pub fn new(ring: Arc<GradedRing>, weights: Vec<i64>) -> Result<Self> {
        ring.check_weights(&weights)?;
        Ok(OneParamSubgroup { ring, weights })
    }

    pub fn trivial(ring: Arc<GradedRing>) -> Self {
        let weights = vec![0; ring.nvars()];
        OneParamSubgroup { ring, weights }
    }

    pub fn ring(&self) -> &Arc<GradedRing> {
        &self.ring
    }

    pub fn weights(&self) -> &[i64] {
        &self.weights
    }

    pub fn is_trivial(&self) -> bool {
        self.weights.iter().all(|&w| w == 0)
    }

    /// λ-weight of each standard monomial of degree `k`.
    pub fn monomial_weights(&self, k: usize) -> Vec<i64> {
        self.ring.monomial_weights(k, &self.weights)
    }
}

/// A torus given by a basis of its cocharacter lattice, acting diagonally.
#[derive(Clone, Debug)]
pub struct Torus {
    ring: Arc<GradedRing>,
    cocharacters: Vec<Vec<i64>>,
    maximal: bool,
}

impl Torus {
    pub fn new(ring: Arc<GradedRing>, cocharacters: Vec<Vec<i64>>) -> Result<Self> {
        for c in &cocharacters {
            ring.check_weights(c)?;
        }
        let rows = cocharacters.iter().map(|c| c.iter().map(|&x| Rational::from_integer(x.into())).collect());
        if Subspace::span(1, ring.nvars(), rows).dim() != cocharacters.len() {
            return Err(Error::DegenerateTorus);
        }
        Ok(Torus { ring, cocharacters, maximal: false })
    }

    pub fn trivial(ring: Arc<GradedRing>) -> Self {
        Torus { ring, cocharacters: Vec::new(), maximal: false }
    }

    /// Diagonal torus modulo scalars: cocharacters `e_1, …, e_m`.
    pub fn diagonal(ring: Arc<GradedRing>) -> Result<Self> {
        let m = ring.nvars();
        let cochars = (1..m).map(|j| (0..m).map(|i| i64::from(i == j)).collect()).collect();
        Self::new(ring, cochars)
    }

    /// Records the caller's assertion that the torus is maximal.
    pub fn with_maximal(mut self, maximal: bool) -> Self {
        self.maximal = maximal;
        self
    }

    pub fn maximal(&self) -> bool {
        self.maximal
    }

    pub fn ring(&self) -> &Arc<GradedRing> {
        &self.ring
    }

    pub fn cocharacters(&self) -> &[Vec<i64>] {
        &self.cocharacters
    }

    pub fn rank(&self) -> usize {
        self.cocharacters.len()
    }

    /// `Σ c_m β_m`.
    pub fn combination(&self, coefficients: &[i64]) -> Vec<i64> {
        let mut out = vec![0; self.ring.nvars()];
        for (c, beta) in coefficients.iter().zip(&self.cocharacters) {
            for (o, b) in out.iter_mut().zip(beta) {
                *o += c * b;
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dependent_cocharacters() {
        let r = Arc::new(GradedRing::projective_space(2));
        assert_eq!(Torus::new(r.clone(), vec![vec![0, 1, 0], vec![0, 2, 0]]).unwrap_err(), Error::DegenerateTorus);
        assert_eq!(Torus::diagonal(r).unwrap().rank(), 2);
    }
}
