//! One line per acceptance criterion. Exits nonzero if any criterion fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use torus_spp::appendix::{
    check_betab_bridge, check_piontkowski, corner_data, diagram_contribution, qt_catalan, spp_min_diagrams,
};
use torus_spp::cells::h_plus;
use torus_spp::checks::{
    bps_decompose, check_blowup, check_degree_bounds, check_no_cancellation, check_stability, check_symmetry,
    check_t_minus_one_signs, check_uspp_identity,
};
use torus_spp::closed::{closed_form_2n, closed_form_3n};
use torus_spp::gdata::{superpoly_from_g, superpoly_from_g_with, Table};
use torus_spp::localization::spp_localization;
use torus_spp::module::enumerate_normalized_semimodules;
use torus_spp::poly::{MonoMap, Var};
use torus_spp::series::truncation_bound;
use torus_spp::{Error, GammaModule, LaurentPoly3, Method, Mono, Semigroup};
use torus_spp_cli::compute::superpoly;
use torus_spp_cli::verify::{sampled_beta_identity, DEFAULT_SEED};

const PAIRS: [(i64, i64); 10] = [(2, 3), (2, 5), (2, 7), (3, 4), (3, 5), (3, 7), (4, 5), (4, 7), (5, 6), (5, 7)];

type Outcome = Result<String, String>;

fn ensure(ok: bool, what: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(what())
    }
}

fn e(x: Error) -> String {
    x.to_string()
}

fn p(terms: &[(i32, i32, i32, i64)]) -> LaurentPoly3 {
    LaurentPoly3::from_terms(terms.iter().map(|&(a, q, t, c)| (Mono::new(a, q, t), c)))
}

fn binomial(n: i64, k: i64) -> i64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn trefoil() -> Outcome {
    let t = Instant::now();
    let s = superpoly(2, 3, Method::Cells, None).map_err(e)?;
    let el = t.elapsed();
    let f = p(&[(0, 0, 0, 1), (2, 0, 1, 1)]);
    ensure(s.spp == &f * &p(&[(0, -2, 0, 1), (0, 2, 2, 1), (2, 0, 3, 1)]), || format!("got {}", s.spp))?;
    let reduced = p(&[(2, -2, 0, 1), (4, 0, 3, 1), (2, 2, 2, 1)]);
    ensure(s.spp.mul_mono(Mono::new(2, 0, 0)) == &f * &reduced, || "reduced form differs".into())?;
    ensure(el < Duration::from_millis(100), || format!("took {el:.2?}"))?;
    Ok(format!("exact, {el:.2?}"))
}

fn methods() -> Outcome {
    let t = Instant::now();
    for (n, k) in PAIRS {
        let sg = Semigroup::new(n, k).map_err(e)?;
        let cells = superpoly(n, k, Method::Cells, None).map_err(e)?;
        let beta = superpoly(n, k, Method::Beta, None).map_err(e)?;
        ensure(cells.spp == beta.spp, || format!("cells != beta at ({n},{k})"))?;
        let low = spp_min_diagrams(&sg).mul_mono(Mono::new(0, -(sg.mu() as i32), 0));
        ensure(low == cells.spp_min(), || format!("diagrams a=0 differ at ({n},{k})"))?;
        if k % n == 1 {
            ensure(spp_localization(&sg).map_err(e)? == cells.spp, || format!("localization differs at ({n},{k})"))?;
        }
    }
    let el = t.elapsed();
    ensure(el < Duration::from_secs(60), || format!("took {el:.2?}"))?;
    Ok(format!("10 pairs, localization on 6, {el:.2?}"))
}

fn closed_forms() -> Outcome {
    let t = Instant::now();
    for k in 1..=4 {
        let s = superpoly(2, 2 * k + 1, Method::Beta, None).map_err(e)?;
        ensure(closed_form_2n(k).map_err(e)? == s.spp, || format!("(2,{})", 2 * k + 1))?;
    }
    for k in 1..=2 {
        for r in [1, 2] {
            let s = superpoly(3, 3 * k + r, Method::Beta, None).map_err(e)?;
            ensure(closed_form_3n(k, r).map_err(e)? == s.spp, || format!("(3,{})", 3 * k + r))?;
        }
    }
    Ok(format!("(2,2k+1) k<=4, (3,3k+1), (3,3k+2) k<=2, {:.2?}; two-strand numerator exponents corrected", t.elapsed()))
}

fn stability() -> Outcome {
    let t = Instant::now();
    for n in 2..=5 {
        check_stability(n, 7).map_err(e)?;
    }
    Ok(format!("(2..5, 7) mod q^14, {:.2?}", t.elapsed()))
}

fn structural() -> Outcome {
    let t = Instant::now();
    for (n, k) in PAIRS {
        let s = superpoly(n, k, Method::Beta, None).map_err(e)?;
        let at = |x: Error| format!("({n},{k}): {x}");
        check_symmetry(&s.spp).map_err(at)?;
        check_degree_bounds(&s).map_err(at)?;
        ensure(s.spp.distinct_exponents(Var::A).len() as i64 <= n.min(k) + 1, || format!("({n},{k}) a-powers"))?;
        check_no_cancellation(&s).map_err(at)?;
        check_t_minus_one_signs(&s).map_err(at)?;
        check_uspp_identity(&s).map_err(at)?;
        bps_decompose(&s.spp, s.delta()).map_err(at)?;
        let sg = Semigroup::new(n, k).map_err(e)?;
        check_blowup(n, k, truncation_bound(&sg)).map_err(at)?;
    }
    Ok(format!("10 pairs, {:.2?}", t.elapsed()))
}

fn appendix() -> Outcome {
    let t = Instant::now();
    let g = Semigroup::new(5, 6).map_err(e)?;
    let d = GammaModule::from_mins(&g, vec![0, 1, 2, 8, 9]).map_err(e)?;
    let c = corner_data(&d);
    let mut se = c.se.clone();
    se.sort();
    let mut es = c.es.clone();
    es.sort();
    ensure(se == [-5, -4, 3, 4] && es == [-10, -9, -2], || format!("corners {se:?} {es:?}"))?;
    let betas: Vec<i64> = se.iter().map(|x| c.betas[x]).collect();
    ensure(betas == [2, 1, 1, 0], || format!("betas {betas:?}"))?;
    ensure(c.diagram.size() == 8 && h_plus(&c.diagram, 6, 5) == 4, || "size or h+".into())?;
    let f = |x: i32| p(&[(0, 0, 0, 1), (2, x, 1, 1)]);
    let expect = (&(&f(-2) * &f(-2)) * &f(-4)).mul_mono(Mono::new(0, 24, 16));
    ensure(diagram_contribution(&g, &d) == expect, || "contribution".into())?;
    for n in 2..=7 {
        check_betab_bridge(n).map_err(e)?;
    }
    let swap = MonoMap { a: Mono::new(1, 0, 0), q: Mono::new(0, 0, 1), t: Mono::new(0, 1, 0) };
    for n in 2..=8 {
        let cn = qt_catalan(n, 1).map_err(e)?;
        ensure(cn.substitute(&swap) == cn, || format!("C_{n} not symmetric"))?;
    }
    let mut pairs = 0;
    for n in 2..14 {
        for k in n + 1..=14 - n {
            if let Ok(sg) = Semigroup::new(n, k) {
                let count = enumerate_normalized_semimodules(&sg).len() as i64;
                ensure(count == binomial(n + k, n) / (n + k), || format!("count at ({n},{k})"))?;
                pairs += 1;
            }
        }
    }
    Ok(format!("worked example, bridge n<=7, C_n n<=8, counts on {pairs} pairs, {:.2?}", t.elapsed()))
}

fn g_data() -> Outcome {
    let t = Instant::now();
    let s = superpoly(5, 7, Method::Beta, None).map_err(e)?;
    ensure(superpoly_from_g(5, 7).map_err(e)? == s.spp, || "(5,7)".into())?;
    let s = superpoly(7, 17, Method::Beta, None).map_err(e)?;
    let listed = superpoly_from_g_with(Table::AsListed, 7, 17);
    ensure(matches!(listed, Err(Error::NonPolynomial { .. })), || "as-listed n=7 table unexpectedly closed".into())?;
    ensure(superpoly_from_g(7, 17).map_err(e)? == s.spp, || "(7,17) with amended entries".into())?;
    Ok(format!(
        "(5,7) exact; (7,17) exact only after amending g_3/7 at (2,2,2,1) and (4,1,1,1), as listed the sum is not a polynomial; {:.2?}",
        t.elapsed()
    ))
}

fn properties() -> Outcome {
    let t = Instant::now();
    for (n, k) in PAIRS {
        let sg = Semigroup::new(n, k).map_err(e)?;
        sampled_beta_identity(&sg, DEFAULT_SEED, 200).map_err(e)?;
        check_piontkowski(&sg).map_err(e)?;
    }
    let oracles = Instant::now();
    methods()?;
    appendix()?;
    let el = oracles.elapsed();
    ensure(el < Duration::from_secs(300), || format!("oracles took {el:.2?}"))?;
    Ok(format!("seed {DEFAULT_SEED}, oracles {el:.2?}, total {:.2?}", t.elapsed()))
}

fn main() -> ExitCode {
    let criteria: [(u32, fn() -> Outcome); 8] = [
        (1, trefoil),
        (2, methods),
        (3, closed_forms),
        (4, stability),
        (5, structural),
        (6, appendix),
        (7, g_data),
        (8, properties),
    ];
    let mut failed = 0;
    for (i, f) in criteria {
        match f() {
            Ok(msg) => println!("criterion {i}: PASS  {msg}"),
            Err(msg) => {
                failed += 1;
                println!("criterion {i}: FAIL  {msg}");
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
