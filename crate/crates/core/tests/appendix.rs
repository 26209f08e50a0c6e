use num_bigint::BigInt;
use torus_spp::appendix::{
    check_betab_bridge, check_piontkowski, corner_data, diagram_contribution, g_map, qt_catalan, spp_min_diagrams,
};
use torus_spp::cells::{diagram_of, h_plus};
use torus_spp::module::enumerate_normalized_semimodules;
use torus_spp::poly::MonoMap;
use torus_spp::series::spp_min;
use torus_spp::{GammaModule, LaurentPoly3, Mono, Semigroup};

fn binomial(n: i64, k: i64) -> BigInt {
    (0..k).fold(BigInt::from(1), |acc, i| acc * (n - i) / (i + 1))
}

fn coprime_pairs(max_sum: i64) -> Vec<(i64, i64)> {
    let mut v = Vec::new();
    for n in 2..max_sum {
        for k in n + 1..=max_sum - n {
            if num_integer::gcd(n, k) == 1 {
                v.push((n, k));
            }
        }
    }
    v
}

#[test]
fn worked_example_five_six() {
    let g = Semigroup::new(5, 6).unwrap();
    let d = GammaModule::from_mins(&g, vec![0, 1, 2, 8, 9]).unwrap();
    let c = corner_data(&d);
    assert_eq!(c.diagram.size(), 8);
    assert_eq!(h_plus(&c.diagram, 6, 5), 4);
    let mut se = c.se.clone();
    se.sort();
    assert_eq!(se, [-5, -4, 3, 4]);
    let betas: Vec<i64> = se.iter().map(|p| c.betas[p]).collect();
    assert_eq!(betas, [2, 1, 1, 0]);
    let f = |e: i32| LaurentPoly3::from_terms([(Mono::ONE, 1), (Mono::new(2, e, 1), 1)]);
    let expect = (&(&f(-2) * &f(-2)) * &f(-4)).mul_mono(Mono::new(0, 24, 16));
    assert_eq!(diagram_contribution(&g, &d), expect);
}

#[test]
fn bridge_up_to_seven() {
    for n in 2..=7 {
        let count = check_betab_bridge(n).unwrap();
        assert_eq!(BigInt::from(count), binomial(2 * n + 1, n) / (2 * n + 1));
    }
}

#[test]
fn catalan_symmetry_and_value() {
    let swap = MonoMap { a: Mono::new(1, 0, 0), q: Mono::new(0, 0, 1), t: Mono::new(0, 1, 0) };
    for n in 2..=8 {
        let c = qt_catalan(n, 1).unwrap();
        assert_eq!(c.substitute(&swap), c, "n={n}");
        assert_eq!(c.eval_ones(), binomial(2 * n, n) / (n + 1), "n={n}");
    }
    for n in 2..=4 {
        let c = qt_catalan(n, 2).unwrap();
        assert_eq!(c.substitute(&swap), c, "n={n}, m=2");
        assert_eq!(c.eval_ones(), binomial(3 * n, n) / (2 * n + 1), "n={n}, m=2");
    }
}

#[test]
fn semimodule_counts() {
    for (n, k) in coprime_pairs(14) {
        let sg = Semigroup::new(n, k).unwrap();
        let count = enumerate_normalized_semimodules(&sg).len();
        assert_eq!(BigInt::from(count), binomial(n + k, n) / (n + k), "({n},{k})");
    }
}

#[test]
fn diagram_side_matches_ideal_side_at_a_zero() {
    for (n, k) in coprime_pairs(11) {
        let sg = Semigroup::new(n, k).unwrap();
        let low = spp_min_diagrams(&sg).mul_mono(Mono::new(0, -(sg.mu() as i32), 0));
        assert_eq!(low, spp_min(n, k).unwrap(), "({n},{k})");
    }
}

#[test]
fn cell_dimensions() {
    for (n, k) in coprime_pairs(13) {
        check_piontkowski(&Semigroup::new(n, k).unwrap()).unwrap();
    }
}

#[test]
fn g_map_is_injective() {
    for n in 2..=7 {
        let sg = Semigroup::new(n, n + 1).unwrap();
        let mods = enumerate_normalized_semimodules(&sg);
        let mut images: Vec<_> = mods.iter().map(|d| g_map(d).parts().to_vec()).collect();
        images.sort();
        images.dedup();
        assert_eq!(images.len(), mods.len(), "n={n}");
        for d in &mods {
            assert!(diagram_of(d).size() as i64 <= sg.delta());
        }
    }
}
