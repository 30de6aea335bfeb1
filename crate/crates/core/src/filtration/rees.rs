//! Filtrations given by generators `t^{i_a} s_a` of their Rees algebra.

use std::fmt;
use std::sync::{Arc, Mutex};

use crate::algebra::{GradedRing, Poly, Rational};
use crate::error::{Error, Result};

use super::flag::{Flag, FlagBuilder};
use super::Filtration;

/// A generator `t^t · element` of the Rees algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generator {
    pub t: usize,
    pub element: Poly,
}

impl Generator {
    pub fn new(t: usize, element: Poly) -> Self {
        Generator { t, element }
    }
}

#[derive(Clone, Debug)]
pub(crate) struct Prepared {
    pub t: usize,
    pub degree: usize,
    pub coords: Vec<Rational>,
}

pub type LevelBound = Arc<dyn Fn(usize) -> usize + Send + Sync>;

/// The filtration `F_i R = { s : t^i s ∈ A }` where `A ⊆ R[t]` is the
/// `k[t]`-subalgebra generated by the listed elements.
pub struct ReesPresentation {
    ring: Arc<GradedRing>,
    generators: Vec<Generator>,
    prepared: Vec<Prepared>,
    label: String,
    level_bound: Option<LevelBound>,
    cache: Mutex<Vec<Arc<Flag>>>,
}

impl fmt::Debug for ReesPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ReesPresentation")
            .field("label", &self.label)
            .field("generators", &self.generators)
            .finish()
    }
}

impl Clone for ReesPresentation {
    fn clone(&self) -> Self {
        ReesPresentation {
            ring: self.ring.clone(),
            generators: self.generators.clone(),
            prepared: self.prepared.clone(),
            label: self.label.clone(),
            level_bound: self.level_bound.clone(),
            cache: Mutex::new(self.cache.lock().unwrap().clone()),
        }
    }
}

/// Summary of the checks made by [`ReesPresentation::validate`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValidationReport {
    pub kmax: usize,
    /// Smallest `i` with `F_i R_k = R_k`, for each `k <= kmax`.
    pub exhaustion_levels: Vec<usize>,
    /// No generator has t-power 0, so `A ∩ R` is the constants.
    pub meets_r_in_constants: bool,
    /// Generators are homogeneous, so the filtration is homogeneous.
    pub homogeneous: bool,
}

impl ReesPresentation {
    /// Validating constructor: generators must be homogeneous of positive
    /// degree, nonzero in the ring, and carry a positive power of `t`.
    pub fn new(ring: Arc<GradedRing>, generators: Vec<Generator>, label: impl Into<String>) -> Result<Self> {
        if let Some(i) = generators.iter().position(|g| g.t == 0) {
            return Err(Error::DegreeZeroGenerator(i));
        }
        Self::build(ring, generators, label.into())
    }

    /// As [`ReesPresentation::new`] but accepting `t^0` generators, which place
    /// elements in `F_0`. Used for product filtrations and for re-presenting
    /// tabulated filtrations.
    pub(crate) fn new_with_level_zero(ring: Arc<GradedRing>, generators: Vec<Generator>, label: impl Into<String>) -> Result<Self> {
        Self::build(ring, generators, label.into())
    }

    fn build(ring: Arc<GradedRing>, generators: Vec<Generator>, label: String) -> Result<Self> {
        let mut normal = Vec::with_capacity(generators.len());
        let mut prepared = Vec::with_capacity(generators.len());
        for (i, g) in generators.into_iter().enumerate() {
            if g.element.nvars() != ring.nvars() {
                return Err(Error::WeightLength { expected: ring.nvars(), found: g.element.nvars() });
            }
            let element = ring.normal_form(&g.element);
            if element.is_zero() {
                return Err(Error::DegenerateGenerator(i));
            }
            let degree = element.homogeneous_degree().ok_or(Error::NotHomogeneous)?;
            if degree == 0 {
                return Err(Error::DegenerateGenerator(i));
            }
            prepared.push(Prepared { t: g.t, degree, coords: ring.coords(&element, degree)? });
            normal.push(Generator { t: g.t, element });
        }
        Ok(ReesPresentation { ring, generators: normal, prepared, label, level_bound: None, cache: Mutex::new(Vec::new()) })
    }

    /// Overrides the per-degree ceiling on `i` used by the flag computation.
    pub fn with_level_bound(mut self, bound: LevelBound) -> Self {
        self.level_bound = Some(bound);
        self.cache = Mutex::new(Vec::new());
        self
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    /// Generators in normal form.
    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn max_t(&self) -> usize {
        self.generators.iter().map(|g| g.t).max().unwrap_or(0)
    }

    pub fn max_generator_degree(&self) -> usize {
        self.prepared.iter().map(|g| g.degree).max().unwrap_or(0)
    }

    /// Default ceiling `k · max_a i_a`.
    pub fn level_bound(&self, k: usize) -> usize {
        match &self.level_bound {
            Some(f) => f(k),
            None => k * self.max_t(),
        }
    }

    /// Same generators with every t-power multiplied by `r`.
    pub fn scaled(&self, r: usize) -> Result<Self> {
        let gens = self.generators.iter().map(|g| Generator::new(g.t * r, g.element.clone())).collect();
        Self::build(self.ring.clone(), gens, format!("{}*{}", r, self.label))
    }

    /// Computes flags up to `kmax`, checking exhaustiveness below the level bound.
    pub fn validate(&self, kmax: usize) -> Result<ValidationReport> {
        let mut exhaustion_levels = Vec::with_capacity(kmax + 1);
        for k in 0..=kmax {
            exhaustion_levels.push(self.flag(k)?.top());
        }
        Ok(ValidationReport {
            kmax,
            exhaustion_levels,
            meets_r_in_constants: self.generators.iter().all(|g| g.t > 0),
            homogeneous: true,
        })
    }

    fn compute_flag(&self, k: usize, lower: &[Arc<Flag>]) -> Result<Flag> {
        if k == 0 {
            return Ok(Flag::trivial(0, 1));
        }
        let bound = self.level_bound(k);
        let b = grow_levels(&self.ring, &self.prepared, lower, k, bound);
        if !b.is_full() {
            return Err(Error::NotExhaustiveWithinBound(k));
        }
        Ok(b.finish())
    }
}

/// Runs the bidegree recursion `F_j R_k = F_{j−1} R_k + Σ_a s_a · F_{j−i_a} R_{k−k_a}`
/// for `j = 0..=bound`, given the flags of all lower degrees. Only the
/// increments `F_{j−i_a} / F_{j−i_a−1}` need multiplying at step `j`.
/// Stops early once `R_k` is exhausted.
pub(crate) fn grow_levels(
    ring: &GradedRing,
    generators: &[Prepared],
    lower: &[Arc<Flag>],
    k: usize,
    bound: usize,
) -> FlagBuilder {
    let h = ring.hilbert(k);
    let mut b = FlagBuilder::new(k, h);
    for j in 0..=bound {
        for g in generators.iter().filter(|g| g.t <= j && g.degree <= k) {
            for e in lower[k - g.degree].increment(j - g.t) {
                if b.is_full() {
                    break;
                }
                b.insert(ring.multiply(&g.coords, g.degree, e, k - g.degree));
            }
        }
        b.close_level(j);
        if b.is_full() {
            break;
        }
    }
    b
}

impl Filtration for ReesPresentation {
    fn ring(&self) -> &Arc<GradedRing> {
        &self.ring
    }

    fn label(&self) -> &str {
        &self.label
    }

    fn flag(&self, k: usize) -> Result<Arc<Flag>> {
        let mut cache = self.cache.lock().unwrap();
        while cache.len() <= k {
            let next = self.compute_flag(cache.len(), &cache)?;
            cache.push(Arc::new(next));
        }
        Ok(cache[k].clone())
    }
}

/// Product filtration of the diagonal one-parameter subgroup with weights `u`:
/// after shifting so that the largest weight is 0, the generators are
/// `t^{−u'_j} x_j`.
pub fn product_filtration(ring: Arc<GradedRing>, u: &[i64]) -> Result<ReesPresentation> {
    ring.check_weights(u)?;
    let max = u.iter().copied().max().unwrap_or(0);
    let n = ring.nvars();
    let gens = u
        .iter()
        .enumerate()
        .map(|(j, &w)| Generator::new((max - w) as usize, Poly::variable(n, j)))
        .collect();
    let label = format!("product({})", u.iter().map(|w| w.to_string()).collect::<Vec<_>>().join(","));
    ReesPresentation::new_with_level_zero(ring, gens, label)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Subspace;

    fn p1() -> Arc<GradedRing> {
        Arc::new(GradedRing::projective_space(1))
    }

    fn pres(ring: &Arc<GradedRing>, gens: &[(usize, &str)]) -> Result<ReesPresentation> {
        let gens = gens.iter().map(|(t, s)| Generator::new(*t, ring.parse_element(s).unwrap())).collect();
        ReesPresentation::new(ring.clone(), gens, "test")
    }

    #[test]
    fn appendix_degree_one() {
        let r = p1();
        let a = pres(&r, &[(1, "x+y"), (1, "x y"), (1, "x y^2"), (2, "y")]).unwrap();
        let f = a.flag(1).unwrap();
        assert_eq!(f.dim_at(0), 0);
        assert_eq!(f.piece(1), r.span(&[r.parse_element("x+y").unwrap()], 1).unwrap());
        assert_eq!(f.dim_at(2), 2);
        let rep = a.validate(4).unwrap();
        assert!(rep.meets_r_in_constants);
    }

    #[test]
    fn single_generator_is_not_exhaustive() {
        let r = p1();
        assert_eq!(pres(&r, &[(1, "x")]).unwrap().validate(3).unwrap_err(), Error::NotExhaustiveWithinBound(1));
        assert_eq!(pres(&r, &[]).unwrap().validate(3).unwrap_err(), Error::NotExhaustiveWithinBound(1));
    }

    #[test]
    fn square_of_linear_form() {
        let r = p1();
        let a = pres(&r, &[(1, "x+y"), (3, "y")]).unwrap();
        let f = a.flag(2).unwrap();
        assert_eq!(f.piece(2), r.span(&[r.parse_element("(x+y)^2").unwrap()], 2).unwrap());
    }

    #[test]
    fn rejects_bad_generators() {
        let r = p1();
        assert_eq!(pres(&r, &[(0, "x")]).unwrap_err(), Error::DegreeZeroGenerator(0));
        assert_eq!(pres(&r, &[(1, "x + y^2")]).unwrap_err(), Error::NotHomogeneous);
        assert_eq!(pres(&r, &[(1, "3")]).unwrap_err(), Error::DegenerateGenerator(0));
    }

    #[test]
    fn product_flags_are_monomial() {
        let r = p1();
        let p = product_filtration(r.clone(), &[0, -1]).unwrap();
        for k in 0..6 {
            let f = p.flag(k).unwrap();
            let basis = r.degree_basis(k);
            for i in 0..=k {
                let mons: Vec<Poly> = basis.monomials.iter().filter(|m| m.exponents()[1] as usize <= i).map(|m| Poly::monomial(m.clone())).collect();
                assert_eq!(f.piece(i), r.span(&mons, k).unwrap());
            }
        }
        let shifted = product_filtration(r.clone(), &[5, 4]).unwrap();
        assert_eq!(shifted.generators(), product_filtration(r.clone(), &[1, 0]).unwrap().generators());
        let trivial = product_filtration(r.clone(), &[0, 0]).unwrap();
        assert_eq!(trivial.flag(3).unwrap().piece(0), Subspace::full(3, 4));
    }

    #[test]
    fn product_rejects_non_preserving_weights() {
        let r = Arc::new(GradedRing::parse(&["x", "y", "z"], &["x^2 - y z"], None).unwrap());
        assert_eq!(product_filtration(r, &[0, 0, 1]).unwrap_err(), Error::IdealNotPreserved(0));
    }
}
