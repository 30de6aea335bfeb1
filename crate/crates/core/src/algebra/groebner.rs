//! Buchberger's algorithm over the rationals with the grevlex order.
//!
//! Only used for normal forms in quotient rings of a handful of variables.

use super::poly::Poly;

/// Remainder of `p` under full reduction by `basis` (not necessarily a
/// Gröbner basis; the result is canonical only when it is one).
pub fn reduce(p: &Poly, basis: &[Poly]) -> Poly {
    let mut rest = p.clone();
    let mut out = Poly::zero(p.nvars());
    while let Some((m, c)) = rest.leading_term().map(|(m, c)| (m.clone(), c.clone())) {
        let divisor = basis.iter().find(|g| {
            g.leading_term().is_some_and(|(lm, _)| lm.divides(&m))
        });
        match divisor {
            Some(g) => {
                let (lm, lc) = g.leading_term().unwrap();
                let q = lm.quotient_of(&m);
                let f = -(&c / lc);
                rest.add_scaled_shifted(&f, &q, g);
            }
            None => {
                rest.add_term(m.clone(), -c.clone());
                out.add_term(m, c);
            }
        }
    }
    out
}

fn s_polynomial(f: &Poly, g: &Poly) -> Poly {
    let (mf, cf) = f.leading_term().unwrap();
    let (mg, cg) = g.leading_term().unwrap();
    let l = mf.lcm(mg);
    let mut s = Poly::zero(f.nvars());
    s.add_scaled_shifted(&cf.recip(), &mf.quotient_of(&l), f);
    s.add_scaled_shifted(&-cg.recip(), &mg.quotient_of(&l), g);
    s
}

/// Reduced Gröbner basis of the ideal generated by `generators`.
pub fn groebner_basis(generators: &[Poly]) -> Vec<Poly> {
    let mut basis: Vec<Poly> = generators.iter().filter(|p| !p.is_zero()).map(Poly::monic).collect();
    let mut pairs: Vec<(usize, usize)> = (0..basis.len())
        .flat_map(|j| (0..j).map(move |i| (i, j)))
        .collect();
    while let Some((i, j)) = pairs.pop() {
        let (mi, _) = basis[i].leading_term().unwrap();
        let (mj, _) = basis[j].leading_term().unwrap();
        if mi.is_coprime(mj) {
            continue;
        }
        let r = reduce(&s_polynomial(&basis[i], &basis[j]), &basis);
        if !r.is_zero() {
            let n = basis.len();
            basis.push(r.monic());
            pairs.extend((0..n).map(|i| (i, n)));
        }
    }
    interreduce(basis)
}

fn interreduce(mut basis: Vec<Poly>) -> Vec<Poly> {
    // drop elements whose leading monomial is divisible by another's
    let mut keep: Vec<Poly> = Vec::new();
    basis.sort_by(|a, b| a.leading_term().unwrap().0.cmp(b.leading_term().unwrap().0));
    for g in basis {
        let lm = g.leading_term().unwrap().0.clone();
        if !keep.iter().any(|h| h.leading_term().unwrap().0.divides(&lm)) {
            keep.push(g);
        }
    }
    let mut out = Vec::with_capacity(keep.len());
    for i in 0..keep.len() {
        let others: Vec<Poly> = keep.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, g)| g.clone()).collect();
        let (lm, lc) = keep[i].leading_term().map(|(m, c)| (m.clone(), c.clone())).unwrap();
        let tail = {
            let mut t = keep[i].clone();
            t.add_term(lm.clone(), -lc.clone());
            reduce(&t, &others)
        };
        let mut g = tail;
        g.add_term(lm, lc);
        debug_assert!(!g.is_zero());
        out.push(g.monic());
    }
    out
}
