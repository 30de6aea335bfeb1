//! Graded quotient rings `k[x_0..x_m] / I` with per-degree monomial bases.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, RwLock};

use num_traits::Zero;

use super::groebner::{groebner_basis, reduce};
use super::parse::parse_poly;
use super::poly::{Monomial, Poly};
use super::rational::Rational;
use super::subspace::Subspace;
use crate::error::{Error, Result};

/// Standard monomials of one degree, in descending grevlex order.
#[derive(Debug)]
pub struct DegreeBasis {
    pub degree: usize,
    pub monomials: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
}

impl DegreeBasis {
    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn index_of(&self, m: &Monomial) -> Option<usize> {
        self.index.get(m).copied()
    }
}

type SparseVec = Vec<(usize, Rational)>;

pub struct GradedRing {
    variables: Vec<String>,
    relations: Vec<Poly>,
    groebner: Vec<Poly>,
    dimension: usize,
    bases: RwLock<BTreeMap<usize, Arc<DegreeBasis>>>,
    reduced_monomials: RwLock<HashMap<Monomial, Arc<SparseVec>>>,
}

impl fmt::Debug for GradedRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GradedRing")
            .field("variables", &self.variables)
            .field("relations", &self.relations.len())
            .field("dimension", &self.dimension)
            .finish()
    }
}

impl GradedRing {
    /// Builds the ring; the Gröbner basis of the relations is computed here.
    /// When `dimension` is `None` it is read off the Hilbert function.
    pub fn new(variables: Vec<String>, relations: Vec<Poly>, dimension: Option<usize>) -> Result<Self> {
        for (i, r) in relations.iter().enumerate() {
            if !r.is_homogeneous() || r.homogeneous_degree() == Some(0) {
                return Err(Error::NonHomogeneousRelation(i));
            }
        }
        let groebner = groebner_basis(&relations);
        let mut ring = GradedRing {
            variables,
            relations,
            groebner,
            dimension: 0,
            bases: RwLock::new(BTreeMap::new()),
            reduced_monomials: RwLock::new(HashMap::new()),
        };
        ring.dimension = match dimension {
            Some(n) => n,
            None => ring.infer_dimension(),
        };
        Ok(ring)
    }

    /// Parses relation strings with [`parse_poly`].
    pub fn parse(variables: &[&str], relations: &[&str], dimension: Option<usize>) -> Result<Self> {
        let vars: Vec<String> = variables.iter().map(|s| s.to_string()).collect();
        let rels = relations.iter().map(|r| parse_poly(r, &vars)).collect::<Result<Vec<_>>>()?;
        Self::new(vars, rels, dimension)
    }

    /// Coordinate ring of projective `n`-space.
    pub fn projective_space(n: usize) -> Self {
        let names: Vec<String> = if n < 4 {
            ["x", "y", "z", "w"][..=n].iter().map(|s| s.to_string()).collect()
        } else {
            (0..=n).map(|i| format!("x{i}")).collect()
        };
        Self::new(names, vec![], Some(n)).expect("free ring")
    }

    pub fn variables(&self) -> &[String] {
        &self.variables
    }

    pub fn nvars(&self) -> usize {
        self.variables.len()
    }

    pub fn relations(&self) -> &[Poly] {
        &self.relations
    }

    pub fn groebner_basis(&self) -> &[Poly] {
        &self.groebner
    }

    pub fn is_free(&self) -> bool {
        self.groebner.is_empty()
    }

    /// Dimension `n` of the projective variety (Krull dimension minus one).
    pub fn dimension(&self) -> usize {
        self.dimension
    }

    /// Same variables and same ideal.
    pub fn same_as(&self, other: &GradedRing) -> bool {
        self.variables == other.variables && self.groebner == other.groebner
    }

    pub fn parse_element(&self, s: &str) -> Result<Poly> {
        parse_poly(s, &self.variables)
    }

    pub fn display(&self, p: &Poly) -> String {
        p.display(&self.variables).to_string()
    }

    pub fn normal_form(&self, p: &Poly) -> Poly {
        if self.is_free() {
            return p.clone();
        }
        reduce(p, &self.groebner)
    }

    pub fn degree_basis(&self, k: usize) -> Arc<DegreeBasis> {
        if let Some(b) = self.bases.read().unwrap().get(&k) {
            return b.clone();
        }
        let lead: Vec<&Monomial> = self.groebner.iter().map(|g| g.leading_term().unwrap().0).collect();
        let monomials: Vec<Monomial> = Monomial::all_of_degree(self.nvars(), k)
            .into_iter()
            .filter(|m| !lead.iter().any(|l| l.divides(m)))
            .collect();
        let index = monomials.iter().enumerate().map(|(i, m)| (m.clone(), i)).collect();
        let basis = Arc::new(DegreeBasis { degree: k, monomials, index });
        self.bases.write().unwrap().entry(k).or_insert(basis).clone()
    }

    pub fn hilbert(&self, k: usize) -> usize {
        self.degree_basis(k).len()
    }

    /// Normal form of a monomial as sparse coordinates in its degree basis.
    fn reduce_monomial(&self, m: &Monomial) -> Arc<SparseVec> {
        if let Some(v) = self.reduced_monomials.read().unwrap().get(m) {
            return v.clone();
        }
        let basis = self.degree_basis(m.degree());
        let nf = reduce(&Poly::monomial(m.clone()), &self.groebner);
        let v: SparseVec = nf
            .terms()
            .map(|(mm, c)| (basis.index_of(mm).expect("normal form uses standard monomials"), c.clone()))
            .collect();
        let v = Arc::new(v);
        self.reduced_monomials.write().unwrap().entry(m.clone()).or_insert(v).clone()
    }

    fn accumulate_monomial(&self, m: &Monomial, c: &Rational, basis: &DegreeBasis, out: &mut [Rational]) {
        if self.is_free() {
            let i = basis.index_of(m).expect("degree matches");
            out[i] += c;
        } else {
            for (i, x) in self.reduce_monomial(m).iter() {
                out[*i] += c * x;
            }
        }
    }

    /// Coordinates of the class of `p` in the standard monomial basis of `R_k`.
    pub fn coords(&self, p: &Poly, k: usize) -> Result<Vec<Rational>> {
        let basis = self.degree_basis(k);
        let mut out = vec![Rational::zero(); basis.len()];
        for (m, c) in p.terms() {
            if m.degree() != k {
                return Err(Error::MixedDegree { expected: k, found: m.degree() });
            }
            self.accumulate_monomial(m, c, &basis, &mut out);
        }
        Ok(out)
    }

    pub fn element(&self, coords: &[Rational], k: usize) -> Poly {
        let basis = self.degree_basis(k);
        Poly::from_terms(
            self.nvars(),
            coords.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, c)| (basis.monomials[i].clone(), c.clone())),
        )
    }

    /// Product of an element of `R_l` and one of `R_m`, as coordinates in `R_{l+m}`.
    pub fn multiply(&self, a: &[Rational], l: usize, b: &[Rational], m: usize) -> Vec<Rational> {
        let (bl, bm, bt) = (self.degree_basis(l), self.degree_basis(m), self.degree_basis(l + m));
        let mut out = vec![Rational::zero(); bt.len()];
        for (i, x) in a.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
            for (j, y) in b.iter().enumerate().filter(|(_, y)| !y.is_zero()) {
                let prod = &bl.monomials[i] * &bm.monomials[j];
                self.accumulate_monomial(&prod, &(x * y), &bt, &mut out);
            }
        }
        out
    }

    /// Multiplies coordinates in `R_m` by a homogeneous polynomial of degree `l`.
    pub fn multiply_poly(&self, p: &Poly, l: usize, b: &[Rational], m: usize) -> Vec<Rational> {
        let (bm, bt) = (self.degree_basis(m), self.degree_basis(l + m));
        let mut out = vec![Rational::zero(); bt.len()];
        for (pm, x) in p.terms() {
            for (j, y) in b.iter().enumerate().filter(|(_, y)| !y.is_zero()) {
                let prod = pm * &bm.monomials[j];
                self.accumulate_monomial(&prod, &(x * y), &bt, &mut out);
            }
        }
        out
    }

    /// Linear span of homogeneous elements of degree `k`.
    pub fn span(&self, vectors: &[Poly], k: usize) -> Result<Subspace> {
        let rows = vectors.iter().map(|p| self.coords(p, k)).collect::<Result<Vec<_>>>()?;
        Ok(Subspace::span(k, self.hilbert(k), rows))
    }

    /// Checks that the diagonal action with these weights preserves the ideal,
    /// generator by generator.
    pub fn check_weights(&self, weights: &[i64]) -> Result<()> {
        if weights.len() != self.nvars() {
            return Err(Error::WeightLength { expected: self.nvars(), found: weights.len() });
        }
        match self.relations.iter().position(|r| !r.is_weight_homogeneous(weights)) {
            Some(i) => Err(Error::IdealNotPreserved(i)),
            None => Ok(()),
        }
    }

    /// Weight of each standard monomial of degree `k`.
    pub fn monomial_weights(&self, k: usize, weights: &[i64]) -> Vec<i64> {
        self.degree_basis(k).monomials.iter().map(|m| m.weight(weights)).collect()
    }

    fn infer_dimension(&self) -> usize {
        let top = 3 * self.nvars() + 2 * self.groebner.iter().map(|g| g.homogeneous_degree().unwrap_or(0)).max().unwrap_or(0) + 6;
        let h: Vec<i64> = (0..=top).map(|k| self.hilbert(k) as i64).collect();
        let tail = top / 2;
        // smallest d whose (d+1)-th differences vanish on the tail
        let mut diffs = h;
        for d in 0..self.nvars() {
            diffs = diffs.windows(2).map(|w| w[1] - w[0]).collect();
            if diffs[tail..].iter().all(|&x| x == 0) {
                return d;
            }
        }
        self.nvars().saturating_sub(1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn free_hilbert_function_matches_binomials() {
        let p1 = GradedRing::projective_space(1);
        assert_eq!(p1.hilbert(5), 6);
        let b = p1.degree_basis(2);
        let names: Vec<String> = b.monomials.iter().map(|m| Poly::monomial(m.clone()).display(p1.variables()).to_string()).collect();
        assert_eq!(names, ["x^2", "x*y", "y^2"]);
        let p2 = GradedRing::projective_space(2);
        assert_eq!(p2.hilbert(2), 6);
        assert_eq!(p2.hilbert(3), 10);
        assert_eq!(p2.dimension(), 2);
    }

    #[test]
    fn quadric_surface() {
        let q = GradedRing::parse(&["x", "y", "z", "w"], &["x w - y z"], None).unwrap();
        assert_eq!(q.hilbert(2), 9);
        assert_eq!(q.dimension(), 2);
        // (k+1)^2
        for k in 0..8 {
            assert_eq!(q.hilbert(k), (k + 1) * (k + 1));
        }
    }

    #[test]
    fn normal_form_in_quotient() {
        let r = GradedRing::parse(&["x", "y", "z"], &["x^2 - y z"], None).unwrap();
        let p = r.parse_element("x^2").unwrap();
        assert_eq!(r.normal_form(&p), r.parse_element("y z").unwrap());
        assert!(r.normal_form(&Poly::zero(3)).is_zero());
        assert_eq!(r.dimension(), 1);
        let free = GradedRing::projective_space(1);
        let q = free.parse_element("x^2 + x y").unwrap();
        assert_eq!(free.normal_form(&q), q);
    }

    #[test]
    fn rejects_inhomogeneous_relations() {
        assert_eq!(
            GradedRing::parse(&["x", "y"], &["x^2 - y"], None).unwrap_err(),
            Error::NonHomogeneousRelation(0)
        );
    }

    #[test]
    fn multiplication_reduces() {
        let r = GradedRing::parse(&["x", "y", "z"], &["x^2 - y z"], None).unwrap();
        let x = r.coords(&r.parse_element("x").unwrap(), 1).unwrap();
        let prod = r.multiply(&x, 1, &x, 1);
        assert_eq!(prod, r.coords(&r.parse_element("y z").unwrap(), 2).unwrap());
    }

    #[test]
    fn weight_checks() {
        let r = GradedRing::parse(&["x", "y", "z"], &["x^2 - y z"], None).unwrap();
        assert!(r.check_weights(&[0, -1, 1]).is_ok());
        assert_eq!(r.check_weights(&[0, 0, 1]), Err(Error::IdealNotPreserved(0)));
        assert!(matches!(r.check_weights(&[0, 1]), Err(Error::WeightLength { .. })));
    }
}
