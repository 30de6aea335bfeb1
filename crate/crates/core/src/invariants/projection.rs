//! Projection of a filtration onto the cocharacters of a torus.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::algebra::Rational;
use crate::error::{Error, Result};
use crate::filtration::{is_equivariant, product_filtration, weight_functions, Filtration};
use crate::specialize::Torus;

use super::df::df_and_norm;
use super::pairing::pair;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Degenerate,
    NonDegenerate,
    /// Some fit did not certify, so no verdict is claimed.
    Uncertified,
}

impl Verdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            Verdict::Degenerate => "degenerate",
            Verdict::NonDegenerate => "non-degenerate",
            Verdict::Uncertified => "uncertified",
        }
    }
}

/// One direction of the orthogonalised cocharacter basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Direction {
    /// Weight vector `Σ_m coeff_m β_m`.
    pub weights: Vec<Rational>,
    pub norm_sq: Rational,
    /// `⟨χ, β̃⟩`, when certified.
    pub pairing: Option<Rational>,
    /// `c = ⟨χ, β̃⟩ / ‖β̃‖²`.
    pub coefficient: Option<Rational>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProjectionReport {
    pub label: String,
    pub basis: Vec<Direction>,
    /// Indices of cocharacters dropped because their orthogonalised norm vanished.
    pub dropped: Vec<usize>,
    pub norm_t_sq: Option<Rational>,
    pub norm_sq: Option<Rational>,
    /// Weight vector of `χ_T = Σ c_i β̃_i`.
    pub projection: Option<Vec<Rational>>,
    pub verdict: Verdict,
    pub maximal_asserted: bool,
    /// Whether the torus preserves every tabulated flag. When it does not,
    /// `⟨χ, ·⟩` need not be additive on cocharacters and the projection
    /// depends on the cocharacter basis.
    pub equivariant: bool,
    pub warnings: Vec<String>,
}

fn rational_vec(v: &[i64]) -> Vec<Rational> {
    v.iter().map(|&x| Rational::from_integer(x.into())).collect()
}

/// Positive integer multiple `D·v` of a rational weight vector, with `D`.
fn integral_multiple(v: &[Rational]) -> (Vec<i64>, Rational) {
    let d = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let scale = Rational::from_integer(d);
    let ints = v
        .iter()
        .map(|x| {
            let y = x * &scale;
            i64::try_from(y.to_integer()).expect("weight vector fits in i64")
        })
        .collect();
    (ints, scale)
}

/// `⟨χ, v⟩` for a rational weight vector `v` of the torus, using positive
/// homogeneity: `⟨χ, v⟩ = ⟨χ, D·v⟩ / D`.
fn pair_with_weights(filt: &dyn Filtration, v: &[Rational], kmax: usize, window: Option<usize>) -> Result<Option<Rational>> {
    let (ints, scale) = integral_multiple(v);
    let prod = product_filtration(filt.ring().clone(), &ints)?;
    Ok(pair(filt, &prod, kmax, window)?.value.map(|x| x / scale))
}

fn dot(a: &[Rational], gram: &[Vec<Rational>], b: &[Rational]) -> Rational {
    let mut s = Rational::zero();
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            if !x.is_zero() && !y.is_zero() {
                s += x * y * &gram[i][j];
            }
        }
    }
    s
}

/// Gram–Schmidt on the cocharacters under the pairing of their product
/// filtrations. Returns coefficient vectors over the cocharacters with their
/// norms, plus the indices dropped for having zero norm.
pub fn orthogonal_basis(torus: &Torus, kmax: usize, window: Option<usize>) -> Result<(Vec<(Vec<Rational>, Rational)>, Vec<usize>)> {
    let ring = torus.ring();
    let products = torus
        .cocharacters()
        .iter()
        .map(|c| product_filtration(ring.clone(), c))
        .collect::<Result<Vec<_>>>()?;
    let r = products.len();
    let mut gram = vec![vec![Rational::zero(); r]; r];
    for a in 0..r {
        for b in a..r {
            let v = pair(&products[a], &products[b], kmax, window)?.value.ok_or(Error::UncertifiedFit)?;
            gram[a][b] = v.clone();
            gram[b][a] = v;
        }
    }
    let mut kept: Vec<(Vec<Rational>, Rational)> = Vec::new();
    let mut dropped = Vec::new();
    for i in 0..r {
        let mut v: Vec<Rational> = (0..r).map(|j| if i == j { Rational::one() } else { Rational::zero() }).collect();
        for (u, nu) in &kept {
            let c = dot(&v, &gram, u) / nu;
            for (x, y) in v.iter_mut().zip(u) {
                *x -= &c * y;
            }
        }
        let norm = dot(&v, &gram, &v);
        if norm.is_zero() {
            dropped.push(i);
        } else {
            kept.push((v, norm));
        }
    }
    Ok((kept, dropped))
}

fn to_weights(torus: &Torus, coeffs: &[Rational]) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); torus.ring().nvars()];
    for (c, beta) in coeffs.iter().zip(torus.cocharacters()) {
        for (o, b) in out.iter_mut().zip(rational_vec(beta)) {
            *o += c * b;
        }
    }
    out
}

/// `χ_T = Σ_i ⟨χ, β̃_i⟩/‖β̃_i‖² · β̃_i` over an orthogonalised cocharacter
/// basis, and the verdict `‖χ_T‖² = ‖χ‖²`.
pub fn project_torus(filt: &dyn Filtration, torus: &Torus, kmax: usize, window: Option<usize>) -> Result<ProjectionReport> {
    if !filt.ring().same_as(torus.ring()) {
        return Err(Error::RingMismatch);
    }
    let (ortho, dropped) = orthogonal_basis(torus, kmax, window)?;
    let mut warnings: Vec<String> = dropped
        .iter()
        .map(|i| format!("cocharacter {i} has zero norm after orthogonalisation and was dropped"))
        .collect();
    let equivariant = is_equivariant(filt, torus, kmax)?;
    if !equivariant {
        warnings.push("input is not torus-equivariant; the projection may depend on the choice of cocharacter basis, including signs".into());
    }
    let wd = weight_functions(filt, kmax, window)?;
    let norm_sq = df_and_norm(&wd, filt.label()).ok().map(|r| r.norm_sq);
    let mut basis = Vec::with_capacity(ortho.len());
    for (coeffs, norm) in &ortho {
        let weights = to_weights(torus, coeffs);
        let pairing = pair_with_weights(filt, &weights, kmax, window)?;
        let coefficient = pairing.as_ref().map(|p| p / norm);
        basis.push(Direction { weights, norm_sq: norm.clone(), pairing, coefficient });
    }
    let certified = norm_sq.is_some() && basis.iter().all(|d| d.pairing.is_some());
    let (norm_t_sq, projection, verdict) = if certified {
        let norm_t_sq: Rational = basis.iter().map(|d| d.pairing.as_ref().unwrap().pow(2) / &d.norm_sq).sum();
        let mut proj = vec![Rational::zero(); torus.ring().nvars()];
        for d in &basis {
            for (p, w) in proj.iter_mut().zip(&d.weights) {
                *p += d.coefficient.as_ref().unwrap() * w;
            }
        }
        let verdict = if Some(&norm_t_sq) == norm_sq.as_ref() { Verdict::Degenerate } else { Verdict::NonDegenerate };
        (Some(norm_t_sq), Some(proj), verdict)
    } else {
        warnings.push("fits did not certify; no verdict".into());
        (None, None, Verdict::Uncertified)
    };
    Ok(ProjectionReport {
        label: filt.label().to_string(),
        basis,
        dropped,
        norm_t_sq,
        norm_sq,
        projection,
        verdict,
        maximal_asserted: torus.maximal(),
        equivariant,
        warnings,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PerpReport {
    pub projection: ProjectionReport,
    pub df: Rational,
    pub df_perp: Rational,
    pub norm_perp_sq: Rational,
}

/// Invariants of `χ − Σ c_i β̃_i` for a torus-equivariant `χ`, using that the
/// DF invariant is linear on commuting actions.
pub fn perp_invariants(filt: &dyn Filtration, torus: &Torus, kmax: usize, window: Option<usize>) -> Result<PerpReport> {
    if !is_equivariant(filt, torus, kmax)? {
        return Err(Error::NotEquivariant);
    }
    let projection = project_torus(filt, torus, kmax, window)?;
    perp_from_projection(filt, projection, kmax, window)
}

/// As [`perp_invariants`], reusing a projection already computed for `filt`.
pub fn perp_from_projection(
    filt: &dyn Filtration,
    projection: ProjectionReport,
    kmax: usize,
    window: Option<usize>,
) -> Result<PerpReport> {
    if !projection.equivariant {
        return Err(Error::NotEquivariant);
    }
    let inv = df_and_norm(&weight_functions(filt, kmax, window)?, filt.label())?;
    let norm_t_sq = projection.norm_t_sq.clone().ok_or(Error::UncertifiedFit)?;
    let mut df_perp = inv.df.clone();
    for d in &projection.basis {
        let (ints, scale) = integral_multiple(&d.weights);
        let prod = product_filtration(filt.ring().clone(), &ints)?;
        let df_beta = df_and_norm(&weight_functions(&prod, kmax, window)?, prod.label())?.df / scale;
        df_perp -= d.coefficient.as_ref().unwrap() * df_beta;
    }
    Ok(PerpReport { df: inv.df, df_perp, norm_perp_sq: inv.norm_sq - norm_t_sq, projection })
}
