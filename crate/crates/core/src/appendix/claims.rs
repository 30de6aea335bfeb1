//! Bounded checks of the two membership claims and the initial-algebra census.

use num_traits::Zero;

use crate::algebra::{Monomial, Poly, Subspace};
use crate::error::{Error, Result};
use crate::specialize::{initial_subspace, OneParamSubgroup};

use super::table::BigradedAlgebraTable;

/// `x·y^n` or `y^j` in the two-variable ring.
fn monomial(x: u32, y: u32) -> Poly {
    Poly::monomial(Monomial::new(vec![x, y]))
}

fn require_two_variables(table: &BigradedAlgebraTable) -> Result<()> {
    if table.ring().nvars() != 2 {
        return Err(Error::OutOfBounds("the appendix checks are stated on the projective line".into()));
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Claim1Entry {
    pub n: usize,
    /// `t^{n−1} x y^n ∈ A`.
    pub contains_monomial: bool,
    /// t-degrees `k < n − 1` at which some element of `A` has a nonzero
    /// `t^k x y^n` coefficient.
    pub lower_components: Vec<usize>,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Claim1Report {
    pub max_n: usize,
    pub entries: Vec<Claim1Entry>,
    pub pass: bool,
}

/// For `3 <= n <= max_n`: `t^{n−1} x y^n ∈ A`, and no element of the piece of
/// bidegree `(n+1, k)`, `k < n − 1`, has a nonzero `x y^n` coordinate.
pub fn verify_claim1(table: &BigradedAlgebraTable, max_n: usize) -> Result<Claim1Report> {
    require_two_variables(table)?;
    if max_n + 1 > table.kmax() || max_n > table.jmax() + 1 {
        return Err(Error::OutOfBounds(format!(
            "claim 1 up to n = {max_n} needs kmax >= {} and jmax >= {}",
            max_n + 1,
            max_n.saturating_sub(1)
        )));
    }
    let ring = table.ring();
    let mut entries = Vec::new();
    for n in 3..=max_n {
        let m = monomial(1, n as u32);
        let contains_monomial = table.contains(&m, n - 1)?;
        let column = ring.degree_basis(n + 1).index_of(m.leading_term().unwrap().0).expect("standard monomial");
        let lower_components: Vec<usize> = (0..n - 1)
            .filter(|&k| table.piece(n + 1, k).is_ok_and(|p| p.rows().iter().any(|r| !r[column].is_zero())))
            .collect();
        let pass = contains_monomial && lower_components.is_empty();
        entries.push(Claim1Entry { n, contains_monomial, lower_components, pass });
    }
    let pass = entries.iter().all(|e| e.pass);
    Ok(Claim1Report { max_n, entries, pass })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Claim2Entry {
    pub j: usize,
    pub k: usize,
    /// `t^k y^j ∈ A`.
    pub contains_monomial: bool,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Claim2Report {
    pub max_j: usize,
    pub entries: Vec<Claim2Entry>,
    pub pass: bool,
}

/// For `1 <= j <= max_j` and `k <= j`: `t^k y^j ∉ A`. Since `A` is bigraded
/// this is the same as saying no element of `A` has `t^k y^j` as a
/// homogeneous component.
pub fn verify_claim2(table: &BigradedAlgebraTable, max_j: usize) -> Result<Claim2Report> {
    require_two_variables(table)?;
    if max_j > table.kmax() || max_j > table.jmax() {
        return Err(Error::OutOfBounds(format!("claim 2 up to j = {max_j} needs kmax, jmax >= {max_j}")));
    }
    let mut entries = Vec::new();
    for j in 1..=max_j {
        let m = monomial(0, j as u32);
        for k in 0..=j {
            let contains_monomial = table.contains(&m, k)?;
            entries.push(Claim2Entry { j, k, contains_monomial, pass: !contains_monomial });
        }
    }
    let pass = entries.iter().all(|e| e.pass);
    Ok(Claim2Report { max_j, entries, pass })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CensusEntry {
    /// R-degree.
    pub k: usize,
    /// t-degree.
    pub j: usize,
    pub initial_dim: usize,
    pub generated_dim: usize,
}

impl CensusEntry {
    pub fn new_generators(&self) -> usize {
        self.initial_dim - self.generated_dim
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CensusReport {
    pub bound: usize,
    /// Largest R-degree examined, `min(bound + 1, kmax)`.
    pub kmax: usize,
    pub jmax: usize,
    /// Bidegrees needing new generators, with their counts.
    pub entries: Vec<CensusEntry>,
}

impl CensusReport {
    pub fn generator_bidegrees(&self) -> Vec<(usize, usize)> {
        self.entries.iter().filter(|e| e.new_generators() > 0).map(|e| (e.k, e.j)).collect()
    }

    pub fn generator_count(&self) -> usize {
        self.entries.iter().map(|e| e.new_generators()).sum()
    }
}

/// Walks the bidegrees `(k, j)` with `1 <= k <= min(bound + 1, kmax)`,
/// `j <= jmax`, in order of `k` then `j`, comparing the initial piece
/// `in(A)_{k,j}` with the span of `t·in(A)_{k,j−1}` and all products of two
/// initial pieces of lower bidegree. The difference in dimension is the
/// number of new algebra generators that bidegree requires.
pub fn initial_algebra_census(table: &BigradedAlgebraTable, lambda: &OneParamSubgroup, bound: usize) -> Result<CensusReport> {
    if bound == 0 || bound > table.kmax() {
        return Err(Error::OutOfBounds(format!("census bound {bound} outside 1..={}", table.kmax())));
    }
    let ring = table.ring();
    let kmax = (bound + 1).min(table.kmax());
    let jmax = table.jmax();
    // initial[k][j]
    let mut initial: Vec<Vec<Subspace>> = vec![vec![Subspace::full(0, 1); jmax + 1]];
    let mut entries = Vec::new();
    for k in 1..=kmax {
        let h = ring.hilbert(k);
        let mut row: Vec<Subspace> = Vec::with_capacity(jmax + 1);
        for j in 0..=jmax {
            let init = initial_subspace(table.piece(k, j)?, lambda);
            let mut generated = if j > 0 { row[j - 1].clone() } else { Subspace::zero(k, h) };
            'products: for k1 in 1..=k / 2 {
                let k2 = k - k1;
                for j1 in 0..=j {
                    let (a, b) = (&initial[k1][j1], &initial[k2][j - j1]);
                    for u in a.rows() {
                        for v in b.rows() {
                            if generated.is_full() {
                                break 'products;
                            }
                            generated.insert(ring.multiply(u, k1, v, k2));
                        }
                    }
                }
            }
            if !generated.is_subspace_of(&init)? {
                return Err(Error::CrossCheck(format!("initial pieces are not multiplicative at ({k}, {j})")));
            }
            if generated.dim() < init.dim() {
                entries.push(CensusEntry { k, j, initial_dim: init.dim(), generated_dim: generated.dim() });
            }
            row.push(init);
        }
        initial.push(row);
    }
    Ok(CensusReport { bound, kmax, jmax, entries })
}
