//! Bigraded pieces of a `k[t]`-subalgebra of `R[t]` given by generators.

use std::sync::Arc;

use crate::algebra::{GradedRing, Poly, Rational, Subspace};
use crate::error::{Error, Result};
use crate::filtration::Generator;

/// `piece(k, j) = { s ∈ R_k : t^j s ∈ A }` for `k <= kmax`, `j <= jmax`,
/// where `A` is generated over `k[t]` by the listed `t^{i_a} s_a`.
///
/// Pieces are built from complete bases of lower pieces:
/// `piece(k, j) = piece(k, j−1) + Σ_a s_a · piece(k − k_a, j − i_a)`.
#[derive(Clone, Debug)]
pub struct BigradedAlgebraTable {
    ring: Arc<GradedRing>,
    generators: Vec<Generator>,
    kmax: usize,
    jmax: usize,
    /// `pieces[k][j]`; once a piece is all of `R_k` later ones are omitted.
    pieces: Vec<Vec<Subspace>>,
}

impl BigradedAlgebraTable {
    pub fn new(ring: Arc<GradedRing>, generators: Vec<Generator>, kmax: usize, jmax: usize) -> Result<Self> {
        let mut prepared = Vec::with_capacity(generators.len());
        let mut normal = Vec::with_capacity(generators.len());
        for (i, g) in generators.into_iter().enumerate() {
            let element = ring.normal_form(&g.element);
            let degree = match element.homogeneous_degree() {
                _ if element.is_zero() => return Err(Error::DegenerateGenerator(i)),
                Some(0) => return Err(Error::DegenerateGenerator(i)),
                Some(d) => d,
                None => return Err(Error::NotHomogeneous),
            };
            prepared.push((g.t, degree, ring.coords(&element, degree)?));
            normal.push(Generator::new(g.t, element));
        }
        let mut pieces: Vec<Vec<Subspace>> = Vec::with_capacity(kmax + 1);
        pieces.push(vec![Subspace::full(0, 1)]);
        for k in 1..=kmax {
            let h = ring.hilbert(k);
            let mut row: Vec<Subspace> = Vec::new();
            for j in 0..=jmax {
                let mut s = row.last().cloned().unwrap_or_else(|| Subspace::zero(k, h));
                for (t, deg, coords) in prepared.iter().filter(|(t, d, _)| *t <= j && *d <= k) {
                    let lower = piece_of(&pieces[k - deg], j - t);
                    for v in lower.rows() {
                        if s.is_full() {
                            break;
                        }
                        s.insert(ring.multiply(coords, *deg, v, k - deg));
                    }
                }
                let full = s.is_full();
                row.push(s);
                if full {
                    break;
                }
            }
            pieces.push(row);
        }
        Ok(BigradedAlgebraTable { ring, generators: normal, kmax, jmax, pieces })
    }

    pub fn ring(&self) -> &Arc<GradedRing> {
        &self.ring
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn kmax(&self) -> usize {
        self.kmax
    }

    pub fn jmax(&self) -> usize {
        self.jmax
    }

    pub fn piece(&self, k: usize, j: usize) -> Result<&Subspace> {
        if k > self.kmax || j > self.jmax {
            return Err(Error::OutOfBounds(format!(
                "bidegree ({k}, {j}) outside the table bounds ({}, {})",
                self.kmax, self.jmax
            )));
        }
        Ok(piece_of(&self.pieces[k], j))
    }

    /// Smallest `j <= jmax` with `piece(k, j) = R_k`.
    pub fn exhaustion_level(&self, k: usize) -> Option<usize> {
        let row = self.pieces.get(k)?;
        row.last().filter(|s| s.is_full()).map(|_| row.len() - 1)
    }

    /// Whether `t^j · element ∈ A`.
    pub fn contains(&self, element: &Poly, j: usize) -> Result<bool> {
        let element = self.ring.normal_form(element);
        if element.is_zero() {
            return Ok(true);
        }
        let k = element.homogeneous_degree().ok_or(Error::NotHomogeneous)?;
        let coords = self.ring.coords(&element, k)?;
        Ok(self.piece(k, j)?.contains(&coords))
    }

    /// Coordinates of `element` in `R_k`, for coordinate queries on pieces.
    pub fn coords(&self, element: &Poly, k: usize) -> Result<Vec<Rational>> {
        self.ring.coords(&self.ring.normal_form(element), k)
    }
}

fn piece_of(row: &[Subspace], j: usize) -> &Subspace {
    row.get(j).unwrap_or_else(|| row.last().expect("nonempty row"))
}
