use std::sync::Arc;

use kstab::algebra::rational::int;
use kstab::algebra::{GradedRing, Poly, Subspace};
use kstab::appendix::{initial_algebra_census, verify_claim1, verify_claim2, BigradedAlgebraTable};
use kstab::corpus::{appendix, appendix_generators, appendix_lambda, p1};
use kstab::filtration::{Filtration, Generator};
use kstab::Error;

/// Span of every product of generators of total degree `k` and total
/// `t`-exponent at most `j`.
fn brute_force_piece(ring: &Arc<GradedRing>, gens: &[Generator], k: usize, j: usize) -> Subspace {
    fn walk(
        ring: &GradedRing,
        gens: &[Generator],
        from: usize,
        k: usize,
        j: usize,
        acc: Poly,
        out: &mut Vec<Poly>,
    ) {
        if k == 0 {
            out.push(ring.normal_form(&acc));
            return;
        }
        for (i, g) in gens.iter().enumerate().skip(from) {
            let d = g.element.homogeneous_degree().unwrap();
            if d <= k && g.t <= j {
                walk(ring, gens, i, k - d, j - g.t, &acc * &g.element, out);
            }
        }
    }
    let mut products = Vec::new();
    walk(ring, gens, 0, k, j, Poly::constant(ring.nvars(), int(1)), &mut products);
    ring.span(&products, k).unwrap()
}

#[test]
fn table_matches_brute_force_and_the_flag() {
    let r = p1();
    let gens = appendix_generators(&r);
    let table = BigradedAlgebraTable::new(r.clone(), gens.clone(), 6, 8).unwrap();
    let chi = appendix(&r);
    for k in 1..=6 {
        let flag = chi.flag(k).unwrap();
        for j in 0..=8 {
            let piece = table.piece(k, j).unwrap();
            assert_eq!(piece, &brute_force_piece(&r, &gens, k, j), "({k}, {j})");
            assert_eq!(piece, &flag.piece(j), "flag ({k}, {j})");
        }
    }
}

#[test]
fn claims_hold_up_to_eight() {
    let r = p1();
    let table = BigradedAlgebraTable::new(r.clone(), appendix_generators(&r), 12, 12).unwrap();
    let c1 = verify_claim1(&table, 8).unwrap();
    assert!(c1.pass);
    assert_eq!(c1.entries.len(), 6);
    let c2 = verify_claim2(&table, 8).unwrap();
    assert!(c2.pass);
    // y^j first appears at level j + 1.
    for j in 1..=8 {
        assert!(table.contains(&r.parse_element(&format!("y^{j}")).unwrap(), j + 1).unwrap());
    }
}

#[test]
fn minimal_bound_and_out_of_bounds() {
    let r = p1();
    let table = BigradedAlgebraTable::new(r.clone(), appendix_generators(&r), 4, 4).unwrap();
    let c1 = verify_claim1(&table, 3).unwrap();
    assert!(c1.pass);
    assert_eq!(c1.entries.len(), 1);
    let small = BigradedAlgebraTable::new(r.clone(), appendix_generators(&r), 2, 2).unwrap();
    assert!(matches!(verify_claim1(&small, 8), Err(Error::OutOfBounds(_))));
    assert!(matches!(small.piece(3, 0), Err(Error::OutOfBounds(_))));
}

#[test]
fn census_finds_the_claimed_generators() {
    let r = p1();
    let table = BigradedAlgebraTable::new(r.clone(), appendix_generators(&r), 12, 12).unwrap();
    let lambda = appendix_lambda(&r);
    let eight = initial_algebra_census(&table, &lambda, 8).unwrap();
    let ten = initial_algebra_census(&table, &lambda, 10).unwrap();
    let found = eight.generator_bidegrees();
    for n in 3..=8 {
        assert!(found.contains(&(n + 1, n - 1)), "missing ({}, {})", n + 1, n - 1);
    }
    for b in &found {
        assert!(ten.generator_bidegrees().contains(b));
    }
    assert!(ten.generator_count() >= eight.generator_count());
    assert!(eight.generator_count() >= 8);
}

#[test]
fn census_of_a_monomial_algebra() {
    let r = p1();
    let gens = vec![Generator::new(1, r.parse_element("x").unwrap()), Generator::new(1, r.parse_element("y").unwrap())];
    let table = BigradedAlgebraTable::new(r.clone(), gens, 8, 8).unwrap();
    let census = initial_algebra_census(&table, &appendix_lambda(&r), 7).unwrap();
    assert_eq!(census.generator_bidegrees(), vec![(1, 1)]);
}
