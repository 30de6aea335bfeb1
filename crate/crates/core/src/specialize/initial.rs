//! Grassmannian limits of flags under a one-parameter subgroup.

use std::collections::BTreeSet;
use std::sync::Arc;

use num_traits::Zero;
use rayon::prelude::*;

use crate::algebra::{Rational, Subspace};
use crate::appendix::BigradedAlgebraTable;
use crate::error::{Error, Result};
use crate::filtration::{Filtration, Flag, ReesPresentation, TabulatedFiltration};

use super::torus::OneParamSubgroup;

/// Echelon form of a subspace with columns ordered by ascending weight, so
/// each row's pivot sits at its lowest-weight component.
struct WeightEchelon {
    order: Vec<usize>,
    weights: Vec<i64>,
    space: Subspace,
}

impl WeightEchelon {
    fn new(degree: usize, weights: Vec<i64>) -> Self {
        let mut order: Vec<usize> = (0..weights.len()).collect();
        order.sort_by_key(|&i| (weights[i], i));
        let space = Subspace::zero(degree, weights.len());
        WeightEchelon { order, weights, space }
    }

    fn insert(&mut self, v: &[Rational]) -> bool {
        self.space.insert(self.order.iter().map(|&i| v[i].clone()).collect())
    }

    /// Lowest-weight component of the row with pivot `p` (permuted position),
    /// in original coordinates.
    fn initial_form(&self, row: &[Rational], p: usize) -> Vec<Rational> {
        let w = self.weights[self.order[p]];
        let mut out = vec![Rational::zero(); row.len()];
        for (pos, x) in row.iter().enumerate().skip(p) {
            let orig = self.order[pos];
            if self.weights[orig] == w {
                out[orig] = x.clone();
            }
        }
        out
    }

    fn initial_forms_where(&self, keep: impl Fn(usize) -> bool) -> Vec<Vec<Rational>> {
        self.space
            .rows()
            .iter()
            .zip(self.space.pivots())
            .filter(|(_, &p)| keep(p))
            .map(|(r, &p)| self.initial_form(r, p))
            .collect()
    }
}

/// `lim_{τ→0} λ(τ)·V`: the span of lowest-weight components of a
/// weight-adapted echelon basis of `V`.
pub fn initial_subspace(v: &Subspace, lambda: &OneParamSubgroup) -> Subspace {
    let weights = lambda.monomial_weights(v.degree());
    assert_eq!(weights.len(), v.ambient_dim(), "subspace and subgroup live on different rings");
    let mut e = WeightEchelon::new(v.degree(), weights);
    for r in v.rows() {
        e.insert(r);
    }
    Subspace::span(v.degree(), v.ambient_dim(), e.initial_forms_where(|_| true))
}

/// Same limit computed from the weight filtration: for each weight `w`, the
/// weight-`w` components of `V ∩ (weights >= w)`.
pub fn initial_subspace_by_intersections(v: &Subspace, lambda: &OneParamSubgroup) -> Subspace {
    let (k, h) = (v.degree(), v.ambient_dim());
    let weights = lambda.monomial_weights(k);
    let distinct: BTreeSet<i64> = weights.iter().copied().collect();
    let mut out = Subspace::zero(k, h);
    for &w in &distinct {
        let unit = |i: usize| (0..h).map(|j| if i == j { Rational::from_integer(1.into()) } else { Rational::zero() }).collect();
        let upper = Subspace::span(k, h, (0..h).filter(|&i| weights[i] >= w).map(unit));
        let meet = v.intersect(&upper).expect("same ambient");
        for r in meet.rows() {
            let proj = r.iter().enumerate().map(|(i, x)| if weights[i] == w { x.clone() } else { Rational::zero() }).collect();
            out.insert(proj);
        }
    }
    out
}

/// Limit of a whole flag. Only rows with newly created pivots contribute new
/// initial forms at each level; earlier rows keep their span of initial forms.
pub fn specialize_flag(flag: &Flag, lambda: &OneParamSubgroup) -> Result<Flag> {
    let (k, h) = (flag.degree(), flag.ambient_dim());
    let mut e = WeightEchelon::new(k, lambda.monomial_weights(k));
    let mut leveled = Vec::with_capacity(h);
    let mut seen: BTreeSet<usize> = BTreeSet::new();
    for level in flag.jumps() {
        for v in flag.increment(level) {
            e.insert(v);
        }
        let new: BTreeSet<usize> = e.space.pivots().iter().copied().filter(|p| !seen.contains(p)).collect();
        for f in e.initial_forms_where(|p| new.contains(&p)) {
            leveled.push((level, f));
        }
        seen.extend(new);
    }
    let out = Flag::from_leveled(k, h, leveled)?;
    if out.levels() != flag.levels() {
        return Err(Error::CrossCheck(format!("specialisation changed piece dimensions in degree {k}")));
    }
    Ok(out)
}

/// The specialisation `χ̄` tabulated up to `kmax`.
pub fn specialize(filt: &dyn Filtration, lambda: &OneParamSubgroup, kmax: usize) -> Result<TabulatedFiltration> {
    if !filt.ring().same_as(lambda.ring()) {
        return Err(Error::RingMismatch);
    }
    let flags = filt.flags(kmax)?;
    let limits = flags
        .par_iter()
        .map(|f| specialize_flag(f, lambda).map(Arc::new))
        .collect::<Result<Vec<_>>>()?;
    TabulatedFiltration::new(filt.ring().clone(), format!("spec({})", filt.label()), limits)
}

/// Flags of the initial algebra of `Rees(χ)` under λ (acting trivially on
/// `t`), read off bidegree by bidegree from the generators' algebra table.
pub fn rees_initial(
    filt: &ReesPresentation,
    lambda: &OneParamSubgroup,
    kmax: usize,
    imax: Option<usize>,
) -> Result<TabulatedFiltration> {
    let ring = filt.ring().clone();
    if !ring.same_as(lambda.ring()) {
        return Err(Error::RingMismatch);
    }
    let jmax = imax.unwrap_or_else(|| filt.level_bound(kmax));
    let table = BigradedAlgebraTable::new(ring.clone(), filt.generators().to_vec(), kmax, jmax)?;
    let flags = (0..=kmax)
        .into_par_iter()
        .map(|k| {
            let top = table.exhaustion_level(k).ok_or(Error::NotExhaustiveWithinBound(k))?;
            let chain = (0..=top)
                .map(|j| Ok(initial_subspace_by_intersections(table.piece(k, j)?, lambda)))
                .collect::<Result<Vec<_>>>()?;
            Flag::from_chain(&chain).map(Arc::new)
        })
        .collect::<Result<Vec<_>>>()?;
    TabulatedFiltration::new(ring, format!("in({})", filt.label()), flags)
}

/// Runs both routes and fails with a cross-check error if any flag differs.
pub fn specialize_checked(filt: &ReesPresentation, lambda: &OneParamSubgroup, kmax: usize) -> Result<TabulatedFiltration> {
    let spec = specialize(filt, lambda, kmax)?;
    let oracle = rees_initial(filt, lambda, kmax, None)?;
    for k in 0..=kmax {
        if spec.flag(k)? != oracle.flag(k)? {
            return Err(Error::CrossCheck(format!("specialisation routes disagree in degree {k} for {}", filt.label())));
        }
    }
    Ok(spec)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::GradedRing;
    use crate::filtration::Generator;

    #[test]
    fn limit_of_a_line() {
        let r = Arc::new(GradedRing::projective_space(1));
        let lambda = OneParamSubgroup::new(r.clone(), vec![-1, 1]).unwrap();
        let v = r.span(&[r.parse_element("x+y").unwrap()], 1).unwrap();
        let x = r.span(&[r.parse_element("x").unwrap()], 1).unwrap();
        assert_eq!(initial_subspace(&v, &lambda), x);
        assert_eq!(initial_subspace_by_intersections(&v, &lambda), x);
        let y = r.span(&[r.parse_element("y").unwrap()], 1).unwrap();
        assert_eq!(initial_subspace(&y, &lambda), y);
        let full = Subspace::full(1, 2);
        assert_eq!(initial_subspace(&full, &lambda), full);
    }

    #[test]
    fn appendix_routes_agree() {
        let r = Arc::new(GradedRing::projective_space(1));
        let gens = [(1, "x+y"), (1, "x y"), (1, "x y^2"), (2, "y")]
            .iter()
            .map(|(t, s)| Generator::new(*t, r.parse_element(s).unwrap()))
            .collect();
        let a = ReesPresentation::new(r.clone(), gens, "appendix").unwrap();
        let lambda = OneParamSubgroup::new(r.clone(), vec![-1, 1]).unwrap();
        let spec = specialize_checked(&a, &lambda, 6).unwrap();
        let f1 = spec.flag(1).unwrap();
        assert_eq!(f1.piece(1), r.span(&[r.parse_element("x").unwrap()], 1).unwrap());
        assert!(f1.piece(2).is_full());
    }
}
