//! Certified generic one-parameter subgroups of a torus.

use std::collections::BTreeSet;

use crate::error::{Error, Result};

use super::torus::{OneParamSubgroup, Torus};

/// Whether `λ` separates every pair of standard monomials of degree `<= kmax`
/// that have different torus weights.
fn separates(torus: &Torus, lambda: &[i64], kmax: usize) -> bool {
    let ring = torus.ring();
    (0..=kmax).all(|k| {
        let basis = ring.degree_basis(k);
        let mut torus_weights = BTreeSet::new();
        let mut lambda_weights = BTreeSet::new();
        for m in &basis.monomials {
            torus_weights.insert(torus.cocharacters().iter().map(|c| m.weight(c)).collect::<Vec<_>>());
            lambda_weights.insert(m.weight(lambda));
        }
        torus_weights.len() == lambda_weights.len()
    })
}

/// `λ = Σ_m c_m β_m` with `c_m = (2·kmax·D + 1)^{m−1}`, starting from
/// `D = 1 + seed` and increasing `D` until separation is certified.
pub fn generic_ops(torus: &Torus, kmax: usize, seed: u64) -> Result<OneParamSubgroup> {
    let ring = torus.ring().clone();
    if torus.rank() == 0 {
        return Ok(OneParamSubgroup::trivial(ring));
    }
    let spread = torus
        .cocharacters()
        .iter()
        .map(|c| c.iter().max().unwrap() - c.iter().min().unwrap())
        .max()
        .unwrap_or(0);
    let first = 1 + seed as i64;
    // Once D exceeds the spread of weights the base-(2·kmax·D+1) digits are
    // unambiguous, so the loop ends by then.
    for d in first..=first.max(spread + 1) {
        let base = 2 * kmax as i64 * d + 1;
        let coefficients: Vec<i64> = (0..torus.rank()).map(|m| base.pow(m as u32)).collect();
        let lambda = torus.combination(&coefficients);
        if separates(torus, &lambda, kmax) {
            return OneParamSubgroup::new(ring, lambda);
        }
    }
    Err(Error::CrossCheck("no separating one-parameter subgroup found".into()))
}
