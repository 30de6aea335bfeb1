use std::sync::Arc;

use num_traits::{Signed, Zero};
use proptest::prelude::*;

use kstab::algebra::rational::{int, to_f64};
use kstab::algebra::{GradedRing, Monomial, Poly, Rational, Subspace};
use kstab::filtration::{
    approximate, check_multiplicative, is_equivariant, tabulate, weight_functions, Filtration, Flag, Generator,
    ReesPresentation, TabulatedFiltration,
};
use kstab::invariants::{df_and_norm, distance, pair, pair_k, project_torus};
use kstab::specialize::{
    generic_ops, initial_subspace, initial_subspace_by_intersections, rees_initial, specialize, specialize_flag,
    OneParamSubgroup, Torus,
};

fn p1() -> Arc<GradedRing> {
    Arc::new(GradedRing::projective_space(1))
}

fn p2() -> Arc<GradedRing> {
    Arc::new(GradedRing::projective_space(2))
}

fn vector(len: usize) -> impl Strategy<Value = Vec<Rational>> {
    prop::collection::vec((-3i64..=3).prop_map(int), len)
}

fn vectors(ambient: usize, max: usize) -> impl Strategy<Value = Vec<Vec<Rational>>> {
    prop::collection::vec(vector(ambient), 0..=max)
}

fn poly(nvars: usize, degree: usize, coeffs: &[i64]) -> Poly {
    let terms = Monomial::all_of_degree(nvars, degree).into_iter().zip(coeffs.iter().map(|&c| int(c)));
    Poly::from_terms(nvars, terms)
}

fn independent(rows: &[Vec<i64>]) -> bool {
    let n = rows.len();
    Subspace::span(1, n, rows.iter().map(|r| r.iter().map(|&c| int(c)).collect())).dim() == n
}

/// Exhaustive presentations on the projective line: two independent linear
/// forms, optionally a quadric.
fn line_presentation() -> impl Strategy<Value = ReesPresentation> {
    line_presentation_up_to(3)
}

fn line_presentation_up_to(tmax: usize) -> impl Strategy<Value = ReesPresentation> {
    let linear = (1usize..=tmax, prop::collection::vec(-3i64..=3, 2));
    let quadric = prop::option::of((1usize..=tmax, prop::collection::vec(-2i64..=2, 3)));
    (linear.clone(), linear, quadric)
        .prop_filter("independent linear forms", |(a, b, _)| independent(&[a.1.clone(), b.1.clone()]))
        .prop_map(|(a, b, q)| {
            let mut gens = vec![Generator::new(a.0, poly(2, 1, &a.1)), Generator::new(b.0, poly(2, 1, &b.1))];
            if let Some((t, c)) = q {
                if c.iter().any(|&x| x != 0) {
                    gens.push(Generator::new(t, poly(2, 2, &c)));
                }
            }
            ReesPresentation::new(p1(), gens, "random").unwrap()
        })
}

fn plane_presentation() -> impl Strategy<Value = ReesPresentation> {
    let linear = (1usize..=2, prop::collection::vec(-2i64..=2, 3));
    (linear.clone(), linear.clone(), linear)
        .prop_filter("independent linear forms", |(a, b, c)| independent(&[a.1.clone(), b.1.clone(), c.1.clone()]))
        .prop_map(|(a, b, c)| {
            let gens = [a, b, c].into_iter().map(|(t, v)| Generator::new(t, poly(3, 1, &v))).collect();
            ReesPresentation::new(p2(), gens, "random").unwrap()
        })
}

/// Span of every product of generators of degree `k` and `t`-exponent `<= j`.
fn brute_force_piece(ring: &GradedRing, gens: &[Generator], k: usize, j: usize) -> Subspace {
    fn walk(ring: &GradedRing, gens: &[Generator], from: usize, k: usize, j: usize, acc: Poly, out: &mut Vec<Poly>) {
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

fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// `F'_i R_k = F_{i − c·k} R_k`.
fn shifted(filt: &dyn Filtration, c: usize, kmax: usize) -> TabulatedFiltration {
    let flags = (0..=kmax)
        .map(|k| {
            let f = filt.flag(k).unwrap();
            let leveled = f.basis().iter().cloned().zip(f.levels()).map(|(v, &l)| (l + c * k, v)).collect();
            Arc::new(Flag::from_leveled(k, f.ambient_dim(), leveled).unwrap())
        })
        .collect();
    TabulatedFiltration::new(filt.ring().clone(), "shifted", flags).unwrap()
}

fn permuted(chi: &ReesPresentation, perm: &[usize]) -> ReesPresentation {
    let gens = chi
        .generators()
        .iter()
        .map(|g| {
            let terms = g.element.terms().map(|(m, c)| {
                let e = m.exponents();
                (Monomial::new(perm.iter().map(|&p| e[p]).collect()), c.clone())
            });
            Generator::new(g.t, Poly::from_terms(3, terms))
        })
        .collect();
    ReesPresentation::new(chi.ring().clone(), gens, "permuted").unwrap()
}

#[test]
fn hilbert_matches_binomials() {
    for n in 1..=3 {
        let ring = GradedRing::projective_space(n);
        for k in 0..=20 {
            assert_eq!(ring.hilbert(k), binomial(n + k, n), "P^{n} degree {k}");
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn grassmann_identity(
        (ambient, a, b) in (1usize..=7).prop_flat_map(|n| (Just(n), vectors(n, n), vectors(n, n)))
    ) {
        let u = Subspace::span(1, ambient, a);
        let w = Subspace::span(1, ambient, b);
        let sum = u.sum(&w).unwrap();
        let meet = u.intersect(&w).unwrap();
        prop_assert_eq!(sum.dim() + meet.dim(), u.dim() + w.dim());
        prop_assert!(meet.is_subspace_of(&u).unwrap() && meet.is_subspace_of(&w).unwrap());
        prop_assert!(u.is_subspace_of(&sum).unwrap() && w.is_subspace_of(&sum).unwrap());
    }

    #[test]
    fn echelon_form_is_canonical(rows in vectors(6, 5), mix in prop::collection::vec(-2i64..=2, 25)) {
        let u = Subspace::span(1, 6, rows.clone());
        // Random combinations of the rows together with the rows themselves span the same space.
        let mut others: Vec<Vec<Rational>> = (0..rows.len())
            .map(|i| {
                let mut v = vec![Rational::zero(); 6];
                for (j, r) in rows.iter().enumerate() {
                    let c = int(mix[(i * 5 + j) % mix.len()]);
                    for (x, y) in v.iter_mut().zip(r) {
                        *x += &c * y;
                    }
                }
                v
            })
            .collect();
        others.extend(rows.iter().rev().cloned());
        prop_assert_eq!(u, Subspace::span(1, 6, others));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn normal_form_is_a_linear_projection(
        a in prop::collection::vec(-3i64..=3, 10),
        b in prop::collection::vec(-3i64..=3, 10),
        q in prop::collection::vec(-3i64..=3, 3),
    ) {
        let ring = GradedRing::parse(&["x", "y", "z"], &["x*z - y^2"], Some(1)).unwrap();
        let (pa, pb) = (poly(3, 3, &a), poly(3, 3, &b));
        let nf = |p: &Poly| ring.normal_form(p);
        prop_assert_eq!(nf(&nf(&pa)), nf(&pa));
        prop_assert_eq!(nf(&(&pa + &pb)), &nf(&pa) + &nf(&pb));
        let multiple = &poly(3, 1, &q) * &ring.parse_element("x*z - y^2").unwrap();
        prop_assert!(nf(&multiple).is_zero());
        prop_assert_eq!(nf(&(&pa + &multiple)), nf(&pa));
    }

    #[test]
    fn initial_subspace_routes_agree(rows in vectors(7, 6), w in prop::collection::vec(-4i64..=4, 2)) {
        let ring = p1();
        let lambda = OneParamSubgroup::new(ring, w).unwrap();
        let v = Subspace::span(6, 7, rows);
        let init = initial_subspace(&v, &lambda);
        prop_assert_eq!(init.dim(), v.dim());
        prop_assert_eq!(&init, &initial_subspace_by_intersections(&v, &lambda));
        prop_assert_eq!(&initial_subspace(&init, &lambda), &init);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn flags_match_brute_force_products(chi in line_presentation()) {
        let ring = chi.ring().clone();
        for k in 0..=6 {
            let flag = chi.flag(k).unwrap();
            for j in 0..=flag.top() + 1 {
                prop_assert_eq!(flag.piece(j), brute_force_piece(&ring, chi.generators(), k, j));
            }
        }
    }

    #[test]
    fn plane_flags_match_brute_force_products(chi in plane_presentation()) {
        let ring = chi.ring().clone();
        for k in 0..=4 {
            let flag = chi.flag(k).unwrap();
            for j in 0..=flag.top() {
                prop_assert_eq!(flag.piece(j), brute_force_piece(&ring, chi.generators(), k, j));
            }
        }
    }

    #[test]
    fn flags_are_exhaustive_and_multiplicative(chi in line_presentation()) {
        for k in 0..=10 {
            let flag = chi.flag(k).unwrap();
            prop_assert_eq!(flag.graded_dims().iter().sum::<usize>(), chi.ring().hilbert(k));
            prop_assert!(flag.piece(flag.top()).is_full());
        }
        prop_assert!(check_multiplicative(&chi, 8).unwrap().is_none());
    }

    #[test]
    fn scaling_multiplies_weights(chi in line_presentation(), r in 2usize..=3) {
        let scaled = chi.scaled(r).unwrap();
        for k in 0..=8 {
            let (f, g) = (chi.flag(k).unwrap(), scaled.flag(k).unwrap());
            prop_assert_eq!(g.weight(), r as i64 * f.weight());
            prop_assert_eq!(g.trace_squared(), (r * r) as i64 * f.trace_squared());
        }
    }

    #[test]
    fn approximation_agrees_up_to_r(chi in line_presentation(), r in 1usize..=4) {
        let tab = tabulate(&chi, 8).unwrap();
        let approx = approximate(&tab, r).unwrap();
        for k in 0..=r {
            prop_assert_eq!(approx.flag(k).unwrap(), tab.flag(k).unwrap());
        }
        // Every generator has degree at most two, so r = 2 already reproduces everything.
        if r >= 2 {
            for k in 0..=8 {
                prop_assert_eq!(approx.flag(k).unwrap(), tab.flag(k).unwrap());
            }
        }
    }

    #[test]
    fn specialisation_is_equivariant_and_idempotent(chi in line_presentation(), seed in 0u64..3) {
        let ring = chi.ring().clone();
        let torus = Torus::diagonal(ring.clone()).unwrap();
        let lambda = generic_ops(&torus, 8, seed).unwrap();
        let spec = specialize(&chi, &lambda, 8).unwrap();
        for k in 0..=8 {
            let (f, g) = (chi.flag(k).unwrap(), spec.flag(k).unwrap());
            prop_assert_eq!(f.levels(), g.levels());
            prop_assert_eq!(specialize_flag(&g, &lambda).unwrap(), (*g).clone());
        }
        prop_assert!(is_equivariant(&spec, &torus, 8).unwrap());
        prop_assert!(check_multiplicative(&spec, 8).unwrap().is_none());
        let oracle = rees_initial(&chi, &lambda, 8, None).unwrap();
        prop_assert!(spec.same_flags(&oracle));
        let again = specialize(&spec, &lambda, 8).unwrap();
        prop_assert!(spec.same_flags(&again));
    }

    #[test]
    fn generic_subgroups_give_the_same_limit(chi in plane_presentation()) {
        let torus = Torus::diagonal(chi.ring().clone()).unwrap();
        let a = specialize(&chi, &generic_ops(&torus, 5, 0).unwrap(), 5).unwrap();
        let b = specialize(&chi, &generic_ops(&torus, 5, 1).unwrap(), 5).unwrap();
        prop_assert!(a.same_flags(&b));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn pairing_is_symmetric_and_bounded(a in line_presentation_up_to(2), b in line_presentation_up_to(2)) {
        let ab = pair(&a, &b, 24, None).unwrap();
        let ba = pair(&b, &a, 24, None).unwrap();
        prop_assert_eq!(&ab.p, &ba.p);
        prop_assert_eq!(&ab.value, &ba.value);
        prop_assert!(ab.cauchy_schwarz_holds());
        for k in 0..=6 {
            let (f, g) = (a.flag(k).unwrap(), b.flag(k).unwrap());
            prop_assert_eq!(pair_k(&f, &g).unwrap(), pair_k(&g, &f).unwrap());
        }
    }

    #[test]
    fn self_pairing_is_the_norm(chi in line_presentation_up_to(2)) {
        let data = pair(&chi, &chi, 24, None).unwrap();
        for k in 0..=24 {
            prop_assert_eq!(data.p[k].clone(), int(data.d1[k]));
        }
        let wd = weight_functions(&chi, 24, None).unwrap();
        if let (Some(v), Ok(report)) = (data.value, df_and_norm(&wd, "random")) {
            prop_assert_eq!(v, report.norm_sq);
        }
    }

    #[test]
    fn invariants_ignore_shifts(chi in line_presentation_up_to(2), c in 1usize..=3) {
        let moved = shifted(&chi, c, 24);
        let (w0, w1) = (weight_functions(&chi, 24, None).unwrap(), weight_functions(&moved, 24, None).unwrap());
        if let (Ok(a), Ok(b)) = (df_and_norm(&w0, "a"), df_and_norm(&w1, "b")) {
            prop_assert_eq!(a.df, b.df);
            prop_assert_eq!(a.norm_sq, b.norm_sq);
        }
        let (p, q) = (pair(&chi, &chi, 24, None).unwrap(), pair(&moved, &chi, 24, None).unwrap());
        if p.certified() && q.certified() {
            prop_assert_eq!(p.value, q.value);
        }
    }

    #[test]
    fn distance_axioms(a in line_presentation_up_to(2), b in line_presentation_up_to(2)) {
        let wa = df_and_norm(&weight_functions(&a, 24, None).unwrap(), "a");
        let wb = df_and_norm(&weight_functions(&b, 24, None).unwrap(), "b");
        let nonzero = |r: &kstab::Result<kstab::invariants::InvariantReport>| {
            r.as_ref().is_ok_and(|r| r.norm_sq.is_positive())
        };
        prop_assume!(nonzero(&wa) && nonzero(&wb));
        let ab = distance(&a, &b, 24, None);
        prop_assume!(!matches!(ab, Err(kstab::Error::UncertifiedFit)));
        let ab = ab.unwrap();
        let ba = distance(&b, &a, 24, None).unwrap();
        prop_assert!(ab.cosine_sq <= int(1));
        prop_assert_eq!(&ab.cosine_sq, &ba.cosine_sq);
        prop_assert!((ab.angle - ba.angle).abs() < 1e-12);
        prop_assert!((0.0..=std::f64::consts::PI).contains(&ab.angle));
        let aa = distance(&a, &a, 24, None).unwrap();
        prop_assert_eq!(aa.cosine, Some(int(1)));
        prop_assert!(aa.angle.abs() < 1e-12);
        prop_assert!(to_f64(&ab.cosine_sq) <= 1.0);
    }
}

fn plane(gens: &[(usize, &str)]) -> ReesPresentation {
    let ring = p2();
    let gens = gens.iter().map(|(t, e)| Generator::new(*t, ring.parse_element(e).unwrap())).collect();
    ReesPresentation::new(ring, gens, "plane").unwrap()
}

const PERMUTATIONS: [[usize; 3]; 5] = [[0, 2, 1], [1, 0, 2], [2, 1, 0], [1, 2, 0], [2, 0, 1]];

#[test]
fn automorphisms_preserve_invariants() {
    let chi = plane(&[(1, "x + z"), (1, "y"), (2, "z")]);
    let base = df_and_norm(&weight_functions(&chi, 14, None).unwrap(), "plane").unwrap();
    for perm in PERMUTATIONS {
        let moved = permuted(&chi, &perm);
        let r = df_and_norm(&weight_functions(&moved, 14, None).unwrap(), "moved").unwrap();
        assert_eq!(r.df, base.df);
        assert_eq!(r.norm_sq, base.norm_sq);
        for k in 0..=6 {
            let (f, g) = (chi.flag(k).unwrap(), moved.flag(k).unwrap());
            assert_eq!(f.weight(), g.weight());
            assert_eq!(f.trace_squared(), g.trace_squared());
        }
    }
}

#[test]
fn automorphisms_preserve_projections_of_equivariant_filtrations() {
    let chi = plane(&[(1, "x"), (1, "y"), (2, "z"), (1, "y z")]);
    let torus = Torus::diagonal(chi.ring().clone()).unwrap();
    let base = project_torus(&chi, &torus, 20, None).unwrap();
    assert!(base.equivariant);
    assert!(base.norm_t_sq.is_some());
    for perm in PERMUTATIONS {
        let t = project_torus(&permuted(&chi, &perm), &torus, 20, None).unwrap();
        assert_eq!(t.norm_t_sq, base.norm_t_sq, "{perm:?}");
        assert_eq!(t.verdict, base.verdict);
    }
}

/// Off the torus, `⟨χ, ·⟩` is positively homogeneous on cocharacters but not
/// additive, so the projection of a non-equivariant filtration depends on the
/// cocharacter basis.
#[test]
fn cocharacter_pairing_is_not_additive_off_the_torus() {
    let chi = plane(&[(1, "x + z"), (1, "y"), (2, "z")]);
    let ring = chi.ring().clone();
    let value = |u: [i64; 3]| {
        let g = kstab::filtration::product_filtration(ring.clone(), &u).unwrap();
        pair(&chi, &g, 17, None).unwrap().value.unwrap()
    };
    let (a, b) = (value([0, 1, 0]), value([0, 0, 1]));
    assert_eq!(value([0, 2, 0]), &a * int(2));
    assert_eq!(value([0, 1, 1]), &a + &b);
    assert_ne!(value([0, 1, -1]), &a - &b);

    let torus = Torus::diagonal(ring.clone()).unwrap();
    let before = project_torus(&chi, &torus, 17, None).unwrap();
    let after = project_torus(&permuted(&chi, &[1, 0, 2]), &torus, 17, None).unwrap();
    assert!(!before.equivariant);
    assert_ne!(before.norm_t_sq, after.norm_t_sq);
}
