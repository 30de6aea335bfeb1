//! Filtrations known degree by degree up to a bound.

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use crate::algebra::{GradedRing, Subspace};
use crate::error::{Error, Result};
use crate::specialize::Torus;

use super::flag::Flag;
use super::rees::{grow_levels, Generator, Prepared, ReesPresentation};
use super::Filtration;

/// Flags `F_• R_k` for `k = 0..=kmax`.
#[derive(Clone, Debug)]
pub struct TabulatedFiltration {
    ring: Arc<GradedRing>,
    label: String,
    flags: Vec<Arc<Flag>>,
}

impl TabulatedFiltration {
    pub fn new(ring: Arc<GradedRing>, label: impl Into<String>, flags: Vec<Arc<Flag>>) -> Result<Self> {
        for (k, f) in flags.iter().enumerate() {
            if f.degree() != k || f.ambient_dim() != ring.hilbert(k) {
                return Err(Error::AmbientMismatch(k, f.degree()));
            }
        }
        if flags.is_empty() {
            return Err(Error::OutOfBounds("a tabulation needs at least degree 0".into()));
        }
        Ok(TabulatedFiltration { ring, label: label.into(), flags })
    }

    pub fn kmax(&self) -> usize {
        self.flags.len() - 1
    }

    pub fn all_flags(&self) -> &[Arc<Flag>] {
        &self.flags
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    /// Flag-by-flag equality up to the smaller bound.
    pub fn same_flags(&self, other: &TabulatedFiltration) -> bool {
        self.ring.same_as(&other.ring) && self.flags.iter().zip(&other.flags).all(|(a, b)| a == b)
    }
}

impl Filtration for TabulatedFiltration {
    fn ring(&self) -> &Arc<GradedRing> {
        &self.ring
    }

    fn label(&self) -> &str {
        &self.label
    }

    fn flag(&self, k: usize) -> Result<Arc<Flag>> {
        self.flags.get(k).cloned().ok_or(Error::BoundExceeded { requested: k, bound: self.kmax() })
    }
}

pub fn tabulate(filt: &dyn Filtration, kmax: usize) -> Result<TabulatedFiltration> {
    TabulatedFiltration::new(filt.ring().clone(), filt.label(), filt.flags(kmax)?)
}

/// The filtration generated by `t^i F_i R_k` for all `k <= r`. Generators are
/// taken from the adapted bases of the tabulation, skipping vectors already
/// produced by lower-degree generators; the flags in degrees `<= r` reproduce
/// the tabulation exactly.
pub fn approximate(tab: &TabulatedFiltration, r: usize) -> Result<ReesPresentation> {
    if r > tab.kmax() {
        return Err(Error::BoundExceeded { requested: r, bound: tab.kmax() });
    }
    let ring = &tab.ring;
    let mut prepared: Vec<Prepared> = Vec::new();
    let mut gens: Vec<Generator> = Vec::new();
    for k in 1..=r {
        let target = &tab.flags[k];
        let generated = grow_levels(ring, &prepared, &tab.flags[..k], k, target.top()).into_leveled();
        let mut space = Subspace::zero(k, ring.hilbert(k));
        let mut produced = generated.into_iter().peekable();
        let mut added = Vec::new();
        for level in 0..=target.top() {
            while let Some((_, v)) = produced.next_if(|(l, _)| *l <= level) {
                space.insert(v);
            }
            for e in target.increment(level) {
                if !space.contains(e) {
                    space.insert(e.clone());
                    added.push(Prepared { t: level, degree: k, coords: e.clone() });
                    gens.push(Generator::new(level, ring.element(e, k)));
                }
            }
        }
        prepared.extend(added);
    }
    ReesPresentation::new_with_level_zero(ring.clone(), gens, format!("approx{r}({})", tab.label))
}

/// An approximation together with how far its weight functions match.
#[derive(Debug, Clone)]
pub struct Approximation {
    pub r: usize,
    pub presentation: ReesPresentation,
    /// First `k <= kmax` where `w` or `d` differ, if any.
    pub first_disagreement: Option<usize>,
}

impl Approximation {
    /// Largest `k` such that weight functions agree in every degree up to `k`.
    pub fn agrees_through(&self, kmax: usize) -> usize {
        self.first_disagreement.map_or(kmax, |k| k - 1)
    }
}

pub fn approximate_with_report(tab: &TabulatedFiltration, r: usize) -> Result<Approximation> {
    let presentation = approximate(tab, r)?;
    let mut first_disagreement = None;
    for k in r + 1..=tab.kmax() {
        let (a, b) = (presentation.flag(k)?, tab.flag(k)?);
        if a.weight() != b.weight() || a.trace_squared() != b.trace_squared() {
            first_disagreement = Some(k);
            break;
        }
    }
    Ok(Approximation { r, presentation, first_disagreement })
}

/// Witness of `(F_i R_l)(F_j R_m) ⊄ F_{i+j} R_{l+m}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiplicativityViolation {
    pub l: usize,
    pub m: usize,
    pub i: usize,
    pub j: usize,
}

/// Checks multiplicativity on every bidegree with `l + m <= kmax`, using
/// products of adapted basis vectors.
pub fn check_multiplicative(filt: &dyn Filtration, kmax: usize) -> Result<Option<MultiplicativityViolation>> {
    let ring = filt.ring();
    for total in 2..=kmax {
        let target = filt.flag(total)?;
        let mut pieces: HashMap<usize, Subspace> = HashMap::new();
        for l in 1..=total / 2 {
            let m = total - l;
            let (fl, fm) = (filt.flag(l)?, filt.flag(m)?);
            for (e, &i) in fl.basis().iter().zip(fl.levels()) {
                for (f, &j) in fm.basis().iter().zip(fm.levels()) {
                    let piece = pieces.entry(i + j).or_insert_with(|| target.piece(i + j));
                    if !piece.contains(&ring.multiply(e, l, f, m)) {
                        return Ok(Some(MultiplicativityViolation { l, m, i, j }));
                    }
                }
            }
        }
    }
    Ok(None)
}

/// Groups the standard monomials of `R_k` by their torus weight.
pub(crate) fn weight_classes(torus: &Torus, k: usize) -> Vec<Vec<usize>> {
    let basis = torus.ring().degree_basis(k);
    let mut classes: BTreeMap<Vec<i64>, Vec<usize>> = BTreeMap::new();
    for (idx, m) in basis.monomials.iter().enumerate() {
        let key = torus.cocharacters().iter().map(|c| m.weight(c)).collect();
        classes.entry(key).or_default().push(idx);
    }
    classes.into_values().collect()
}

/// Whether every `F_i R_k`, `k <= kmax`, is spanned by torus weight vectors.
pub fn is_equivariant(filt: &dyn Filtration, torus: &Torus, kmax: usize) -> Result<bool> {
    if !filt.ring().same_as(torus.ring()) {
        return Err(Error::RingMismatch);
    }
    for k in 0..=kmax {
        let flag = filt.flag(k)?;
        let classes = weight_classes(torus, k);
        if classes.len() <= 1 {
            continue;
        }
        let mut class_of = vec![0; flag.ambient_dim()];
        for (c, idxs) in classes.iter().enumerate() {
            for &i in idxs {
                class_of[i] = c;
            }
        }
        for level in flag.jumps() {
            let piece = flag.piece(level);
            for row in piece.rows() {
                let support: Vec<usize> = (0..row.len()).filter(|&i| !num_traits::Zero::is_zero(&row[i])).collect();
                let first = class_of[support[0]];
                if support.iter().all(|&i| class_of[i] == first) {
                    continue;
                }
                for idxs in &classes {
                    let mut proj = vec![num_traits::Zero::zero(); row.len()];
                    for &i in idxs {
                        proj[i] = row[i].clone();
                    }
                    if !piece.contains(&proj) {
                        return Ok(false);
                    }
                }
            }
        }
    }
    Ok(true)
}
