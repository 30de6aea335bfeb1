//! Named example filtrations on the projective line and plane, used by the
//! test suites and the command-line examples.

use std::sync::Arc;

use crate::algebra::GradedRing;
use crate::filtration::{product_filtration, Generator, ReesPresentation};
use crate::specialize::OneParamSubgroup;

pub fn p1() -> Arc<GradedRing> {
    Arc::new(GradedRing::projective_space(1))
}

pub fn p2() -> Arc<GradedRing> {
    Arc::new(GradedRing::projective_space(2))
}

/// Builds a presentation from `(t-power, element)` pairs.
pub fn rees(ring: &Arc<GradedRing>, label: &str, gens: &[(usize, &str)]) -> ReesPresentation {
    let gens = gens
        .iter()
        .map(|(t, s)| Generator::new(*t, ring.parse_element(s).expect("corpus elements parse")))
        .collect();
    ReesPresentation::new(ring.clone(), gens, label).expect("corpus presentations are valid")
}

/// `t(x + y), t·xy, t·xy², t²·y` on the projective line.
pub fn appendix_generators(ring: &Arc<GradedRing>) -> Vec<Generator> {
    [(1, "x + y"), (1, "x y"), (1, "x y^2"), (2, "y")]
        .iter()
        .map(|(t, s)| Generator::new(*t, ring.parse_element(s).unwrap()))
        .collect()
}

pub fn appendix(ring: &Arc<GradedRing>) -> ReesPresentation {
    ReesPresentation::new(ring.clone(), appendix_generators(ring), "appendix").unwrap()
}

/// `λ(τ)·x = τ^{−1} x`, `λ(τ)·y = τ y`.
pub fn appendix_lambda(ring: &Arc<GradedRing>) -> OneParamSubgroup {
    OneParamSubgroup::new(ring.clone(), vec![-1, 1]).unwrap()
}

/// Rees presentations on the projective line.
pub fn line_presentations() -> Vec<ReesPresentation> {
    let r = p1();
    vec![
        appendix(&r),
        rees(&r, "line-a", &[(1, "x + y"), (2, "y")]),
        rees(&r, "line-b", &[(1, "x"), (1, "x + 2y")]),
        rees(&r, "line-c", &[(1, "x"), (3, "y"), (2, "x y")]),
        rees(&r, "line-d", &[(1, "x - y"), (2, "x + y")]),
        rees(&r, "line-e", &[(1, "x"), (2, "y"), (1, "x y")]),
    ]
}

/// Rees presentations on the projective plane.
pub fn plane_presentations() -> Vec<ReesPresentation> {
    let r = p2();
    vec![
        rees(&r, "plane-a", &[(1, "x + y"), (1, "y + z"), (2, "z")]),
        rees(&r, "plane-b", &[(1, "x"), (1, "y + z"), (2, "z"), (1, "x z")]),
        rees(&r, "plane-c", &[(1, "x + y + z"), (2, "y"), (2, "z"), (1, "x y")]),
        rees(&r, "plane-d", &[(1, "x"), (2, "y"), (3, "z")]),
        rees(&r, "plane-e", &[(1, "x + z"), (1, "y"), (2, "z")]),
    ]
}

/// Product filtrations on the line and plane.
pub fn products() -> Vec<ReesPresentation> {
    let (l, p) = (p1(), p2());
    vec![
        product_filtration(l.clone(), &[0, -1]).unwrap(),
        product_filtration(l.clone(), &[-1, 0]).unwrap(),
        product_filtration(l.clone(), &[0, -2]).unwrap(),
        product_filtration(l, &[0, 0]).unwrap(),
        product_filtration(p.clone(), &[0, -1, -2]).unwrap(),
        product_filtration(p, &[0, 0, -1]).unwrap(),
    ]
}

/// Every presentation above.
pub fn all() -> Vec<ReesPresentation> {
    let mut v = line_presentations();
    v.extend(plane_presentations());
    v.extend(products());
    v
}
