use torus_spp::appendix::spp_min_diagrams;
use torus_spp::checks::{
    bps_decompose, check_blowup, check_degree_bounds, check_no_cancellation, check_symmetry,
    check_t_minus_one_signs, check_uspp_identity,
};
use torus_spp::series::{superpoly_with, truncation_bound};
use torus_spp::{LaurentPoly3, Method, Mono, Semigroup};

const PAIRS: [(i64, i64); 10] =
    [(2, 3), (2, 5), (2, 7), (3, 4), (3, 5), (3, 7), (4, 5), (4, 7), (5, 6), (5, 7)];

fn trefoil() -> LaurentPoly3 {
    let f = LaurentPoly3::from_terms([(Mono::ONE, 1), (Mono::new(2, 0, 1), 1)]);
    let g = LaurentPoly3::from_terms([
        (Mono::new(0, -2, 0), 1),
        (Mono::new(0, 2, 2), 1),
        (Mono::new(2, 0, 3), 1),
    ]);
    &f * &g
}

#[test]
fn trefoil_and_reduced_form() {
    let s = superpoly_with(2, 3, Method::Cells).unwrap();
    assert_eq!(s.spp, trefoil());
    let reduced = LaurentPoly3::from_terms([
        (Mono::new(2, -2, 0), 1),
        (Mono::new(4, 0, 3), 1),
        (Mono::new(2, 2, 2), 1),
    ]);
    let f = LaurentPoly3::from_terms([(Mono::ONE, 1), (Mono::new(2, 0, 1), 1)]);
    assert_eq!(s.spp.mul_mono(Mono::new(2, 0, 0)), &f * &reduced);
    assert_eq!(s.reduced().unwrap(), reduced);
}

#[test]
fn cells_beta_and_diagrams_agree() {
    for (n, k) in PAIRS {
        let sg = Semigroup::new(n, k).unwrap();
        let cells = superpoly_with(n, k, Method::Cells).unwrap();
        let beta = superpoly_with(n, k, Method::Beta).unwrap();
        assert_eq!(cells.spp, beta.spp, "({n},{k})");
        let low = spp_min_diagrams(&sg).mul_mono(Mono::new(0, -(sg.mu() as i32), 0));
        assert_eq!(cells.spp_min(), low, "({n},{k}) a = 0");
        let full = superpoly_with(n, k, Method::Diagrams).unwrap();
        assert_eq!(cells.spp, full.spp, "({n},{k}) full diagrams");
    }
}

#[test]
fn localization_agrees() {
    for (n, k) in [(2, 3), (2, 5), (3, 4), (3, 7), (4, 5), (5, 6)] {
        let a = superpoly_with(n, k, Method::Beta).unwrap();
        let b = superpoly_with(n, k, Method::Localization).unwrap();
        assert_eq!(a.spp, b.spp, "({n},{k})");
    }
}

#[test]
fn g_route_for_five_seven() {
    let a = superpoly_with(5, 7, Method::Beta).unwrap();
    let b = superpoly_with(5, 7, Method::Localization).unwrap();
    assert_eq!(a.spp, b.spp);
}

#[test]
fn structural_checks() {
    for (n, k) in PAIRS {
        let s = superpoly_with(n, k, Method::Beta).unwrap();
        check_symmetry(&s.spp).unwrap();
        check_degree_bounds(&s).unwrap();
        check_no_cancellation(&s).unwrap();
        check_t_minus_one_signs(&s).unwrap();
        check_uspp_identity(&s).unwrap();
        let b = bps_decompose(&s.spp, s.delta()).unwrap();
        assert_eq!(b.len() as i64, s.delta() + 1);
        let sg = Semigroup::new(n, k).unwrap();
        check_blowup(n, k, truncation_bound(&sg)).unwrap();
    }
}

#[test]
fn counts_at_one() {
    // At a = 0, q = t = 1 the a = 0 part counts semimodules.
    for (n, k, c) in [(2, 3, 2), (3, 4, 5), (3, 5, 7), (4, 5, 14)] {
        let s = superpoly_with(n, k, Method::Beta).unwrap();
        assert_eq!(s.spp_min().eval_ones(), c.into(), "({n},{k})");
    }
}
