//! Increasing exhaustive flags `F_0 R_k ⊆ F_1 R_k ⊆ … = R_k` of one degree piece.

use std::collections::BTreeSet;

use crate::algebra::{Rational, Subspace};
use crate::error::{Error, Result};

/// A flag stored as a canonical adapted basis: basis vector `e` lies in
/// `F_i` exactly when `level(e) <= i`. For each jump level the vectors are the
/// rows of the echelon form of `F_i` whose pivots are new at that level, so
/// equal flags have equal representations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Flag {
    degree: usize,
    ambient: usize,
    basis: Vec<Vec<Rational>>,
    levels: Vec<usize>,
}

/// Grows a flag level by level.
pub(crate) struct FlagBuilder {
    space: Subspace,
    basis: Vec<Vec<Rational>>,
    levels: Vec<usize>,
}

impl FlagBuilder {
    pub fn new(degree: usize, ambient: usize) -> Self {
        FlagBuilder { space: Subspace::zero(degree, ambient), basis: Vec::new(), levels: Vec::new() }
    }

    pub fn space(&self) -> &Subspace {
        &self.space
    }

    pub fn is_full(&self) -> bool {
        self.space.is_full()
    }

    pub fn insert(&mut self, v: Vec<Rational>) -> bool {
        !self.space.is_full() && self.space.insert(v)
    }

    /// Records everything inserted so far as lying in `F_level`.
    pub fn close_level(&mut self, level: usize) {
        let old: BTreeSet<usize> = self.basis.iter().map(|v| leading(v)).collect();
        for (row, &p) in self.space.rows().iter().zip(self.space.pivots()) {
            if !old.contains(&p) {
                self.basis.push(row.clone());
                self.levels.push(level);
            }
        }
    }

    pub fn into_leveled(self) -> Vec<(usize, Vec<Rational>)> {
        self.levels.into_iter().zip(self.basis).collect()
    }

    pub fn finish(self) -> Flag {
        let (degree, ambient) = (self.space.degree(), self.space.ambient_dim());
        debug_assert!(self.space.is_full());
        Flag { degree, ambient, basis: self.basis, levels: self.levels }
    }
}

fn leading(v: &[Rational]) -> usize {
    v.iter().position(|x| !num_traits::Zero::is_zero(x)).expect("basis vectors are nonzero")
}

impl Flag {
    /// The flag with `F_0 = R_k`.
    pub fn trivial(degree: usize, ambient: usize) -> Self {
        let full = Subspace::full(degree, ambient);
        Flag { degree, ambient, basis: full.rows().to_vec(), levels: vec![0; ambient] }
    }

    /// Builds the flag from `chain[i] = F_i`; the chain must increase and end at `R_k`.
    pub fn from_chain(chain: &[Subspace]) -> Result<Self> {
        let last = chain.last().ok_or_else(|| Error::OutOfBounds("empty chain".into()))?;
        let (degree, ambient) = (last.degree(), last.ambient_dim());
        if !last.is_full() {
            return Err(Error::NotExhaustiveWithinBound(degree));
        }
        let mut b = FlagBuilder::new(degree, ambient);
        for (i, piece) in chain.iter().enumerate() {
            if !b.space().is_subspace_of(piece)? {
                return Err(Error::CrossCheck(format!("chain is not increasing at level {i} in degree {degree}")));
            }
            for r in piece.rows() {
                b.insert(r.clone());
            }
            b.close_level(i);
        }
        Ok(b.finish())
    }

    /// Builds the flag in which each `(level, v)` lies in `F_level`.
    pub fn from_leveled(degree: usize, ambient: usize, mut vectors: Vec<(usize, Vec<Rational>)>) -> Result<Self> {
        vectors.sort_by_key(|(l, _)| *l);
        let mut b = FlagBuilder::new(degree, ambient);
        let mut i = 0;
        while i < vectors.len() {
            let level = vectors[i].0;
            while i < vectors.len() && vectors[i].0 == level {
                b.insert(vectors[i].1.clone());
                i += 1;
            }
            b.close_level(level);
        }
        if !b.is_full() {
            return Err(Error::NotExhaustiveWithinBound(degree));
        }
        Ok(b.finish())
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn basis(&self) -> &[Vec<Rational>] {
        &self.basis
    }

    /// Level of each adapted basis vector, nondecreasing.
    pub fn levels(&self) -> &[usize] {
        &self.levels
    }

    /// Smallest `i` with `F_i = R_k`.
    pub fn top(&self) -> usize {
        self.levels.last().copied().unwrap_or(0)
    }

    pub fn dim_at(&self, i: usize) -> usize {
        self.levels.partition_point(|&l| l <= i)
    }

    /// Basis vectors spanning `F_i` modulo `F_{i-1}`.
    pub fn increment(&self, i: usize) -> &[Vec<Rational>] {
        let lo = self.levels.partition_point(|&l| l < i);
        let hi = self.levels.partition_point(|&l| l <= i);
        &self.basis[lo..hi]
    }

    pub fn piece(&self, i: usize) -> Subspace {
        Subspace::span(self.degree, self.ambient, self.basis[..self.dim_at(i)].iter().cloned())
    }

    /// Distinct levels at which the flag jumps.
    pub fn jumps(&self) -> Vec<usize> {
        let mut j = self.levels.clone();
        j.dedup();
        j
    }

    /// `w(k) = Σ_i (−i)·dim gr_i`.
    pub fn weight(&self) -> i64 {
        -self.levels.iter().map(|&l| l as i64).sum::<i64>()
    }

    /// `d(k) = Σ_i i²·dim gr_i`.
    pub fn trace_squared(&self) -> i64 {
        self.levels.iter().map(|&l| (l * l) as i64).sum()
    }

    /// `dim F_i − dim F_{i−1}` for `i = 0..=top`.
    pub fn graded_dims(&self) -> Vec<usize> {
        let mut g = vec![0; self.top() + 1];
        for &l in &self.levels {
            g[l] += 1;
        }
        g
    }
}
