use torus_spp::checks::check_stability;
use torus_spp::closed::{closed_form_2n, closed_form_3n};
use torus_spp::series::{raw_hilbert_sum_beta, stable_series, superpoly_with};
use torus_spp::{Method, Mono};

#[test]
fn two_strand_closed_forms() {
    for k in 1..=4 {
        let s = superpoly_with(2, 2 * k + 1, Method::Beta).unwrap();
        assert_eq!(closed_form_2n(k).unwrap(), s.spp, "(2,{})", 2 * k + 1);
    }
}

#[test]
fn three_strand_closed_forms() {
    for k in 1..=2 {
        for r in [1, 2] {
            let s = superpoly_with(3, 3 * k + r, Method::Beta).unwrap();
            assert_eq!(closed_form_3n(k, r).unwrap(), s.spp, "(3,{})", 3 * k + r);
        }
    }
}

#[test]
fn raw_sums_approach_the_stable_product() {
    for n in 2..=5 {
        check_stability(n, 7).unwrap();
    }
}

#[test]
fn stable_product_low_terms() {
    // 1/(1 - q²) (1 + a² t) up to q⁴ for n = 1.
    let s = stable_series(1, 4);
    let p = s.poly();
    for e in [0, 2] {
        assert_eq!(p.coeff(Mono::new(0, e, 0)), 1.into());
        assert_eq!(p.coeff(Mono::new(2, e, 1)), 1.into());
    }
    assert_eq!(p.coeff(Mono::new(0, 4, 0)), 0.into());
}

#[test]
fn stability_fails_beyond_its_range() {
    // Agreement mod q^{2k} is the best one can ask for: the next coefficient differs.
    let raw = raw_hilbert_sum_beta(2, 3, 8).unwrap();
    let st = stable_series(2, 12);
    assert!(raw.truncate(6).agrees_with(&st.truncate(6)));
    assert!(!raw.truncate(12).agrees_with(&st));
}
