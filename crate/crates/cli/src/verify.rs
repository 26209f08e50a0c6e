//! The `verify` command: every applicable cross-check for one `(n, k)`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use torus_spp::appendix::{check_piontkowski, hook_formula, hook_to_spp, spp_min_diagrams};
use torus_spp::checks::{
    bps_decompose, check_blowup, check_degree_bounds, check_no_cancellation, check_stability, check_symmetry,
    check_t_minus_one_signs, check_uspp_identity,
};
use torus_spp::closed::closed_form;
use torus_spp::gdata::has_formula;
use torus_spp::localization::spp_localization;
use torus_spp::series::{truncation_bound, BetaTally, NestedTally};
use torus_spp::{Error, GammaModule, LaurentPoly3, Method, Mono, Result, Semigroup, Superpoly};

use crate::compute;

pub const DEFAULT_SEED: u64 = 20_120_105;
const SAMPLES: usize = 200;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckRow {
    pub check: &'static str,
    pub status: Status,
    pub detail: String,
    #[serde(skip)]
    pub error: Option<Error>,
}

impl CheckRow {
    fn from_result(check: &'static str, r: Result<String>) -> Self {
        match r {
            Ok(detail) => CheckRow { check, status: Status::Pass, detail, error: None },
            Err(e) => CheckRow { check, status: Status::Fail, detail: e.to_string(), error: Some(e) },
        }
    }

    fn skip(check: &'static str, why: &str) -> Self {
        CheckRow { check, status: Status::Skip, detail: why.to_string(), error: None }
    }
}

pub struct Report {
    pub superpoly: Option<Superpoly>,
    pub rows: Vec<CheckRow>,
    /// Methods whose result matched the reference.
    pub agreeing: Vec<Method>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.rows.iter().all(|r| r.status != Status::Fail)
    }
}

fn same(what: &str, a: &LaurentPoly3, b: &LaurentPoly3) -> Result<String> {
    if a == b {
        Ok(format!("{} terms", a.len()))
    } else {
        let d = a - b;
        let (m, c) = d.terms().next().expect("nonzero difference");
        Err(Error::Mismatch {
            what: what.to_string(),
            detail: format!("differs at a^{} q^{} t^{} by {c}", m.a, m.q, m.t),
        })
    }
}

/// A random ideal with class offsets `B_0 >= … >= B_{n-1}`, `B_0 - B_{n-1} <= k`.
fn random_ideal<'a>(sg: &'a Semigroup, rng: &mut ChaCha8Rng, max_base: i64) -> GammaModule<'a> {
    let (n, k) = (sg.n() as usize, sg.k());
    let base = rng.gen_range(0..=max_base);
    let mut d: Vec<i64> = (0..n - 1).map(|_| rng.gen_range(0..=k)).collect();
    d.sort_unstable_by(|x, y| y.cmp(x));
    d.push(0);
    let mut mins = vec![0; n];
    for (a, da) in d.iter().enumerate() {
        let a = a as i64;
        mins[((a * k) % n as i64) as usize] = a * k + (base + da) * n as i64;
    }
    GammaModule::from_mins(sg, mins).expect("offsets describe an ideal")
}

/// Nested-pair weights against the β product on randomly drawn ideals.
pub fn sampled_beta_identity(sg: &Semigroup, seed: u64, samples: usize) -> Result<String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..samples {
        let j = random_ideal(sg, &mut rng, 3);
        let l = j.colength().expect("ideal");
        let (mut a, mut b) = (NestedTally::default(), BetaTally::default());
        a.add_ideal(&j, l)?;
        b.add_ideal(&j, l)?;
        if a.to_poly() != b.to_poly() {
            return Err(Error::Mismatch {
                what: "sampled beta identity".into(),
                detail: format!("ideal with class minima {:?}", j.mins()),
            });
        }
    }
    Ok(format!("{samples} ideals, seed {seed}"))
}

fn localization_applies(n: i64, k: i64) -> bool {
    let r = k % n;
    r == 1 || r == n - 1 || has_formula(r, n)
}

pub fn run(n: i64, k: i64, seed: u64) -> Result<Report> {
    let sg = Semigroup::new(n, k)?;
    let (n, k) = (sg.n(), sg.k());
    let mut rows = Vec::new();
    let mut agreeing = Vec::new();

    let cells = compute::superpoly(n, k, Method::Cells, None);
    let reference = match cells {
        Ok(s) => s,
        Err(e) => {
            rows.push(CheckRow::from_result("cells", Err(e)));
            return Ok(Report { superpoly: None, rows, agreeing });
        }
    };
    agreeing.push(Method::Cells);
    let spp = &reference.spp;
    let mut compare = |rows: &mut Vec<CheckRow>, name: &'static str, method: Method, r: Result<LaurentPoly3>| {
        let row = CheckRow::from_result(name, r.and_then(|p| same(name, spp, &p)));
        if row.status == Status::Pass {
            agreeing.push(method);
        }
        rows.push(row);
    };
    compare(&mut rows, "cells = beta", Method::Beta, compute::superpoly(n, k, Method::Beta, None).map(|s| s.spp));
    compare(
        &mut rows,
        "diagrams, full",
        Method::Diagrams,
        compute::superpoly(n, k, Method::Diagrams, None).map(|s| s.spp),
    );
    if localization_applies(n, k) {
        compare(&mut rows, "localization", Method::Localization, spp_localization(&sg));
    } else {
        rows.push(CheckRow::skip("localization", "no g data for this residue"));
    }
    if n <= 3 {
        compare(&mut rows, "closed form", Method::Closed, closed_form(&sg));
    } else {
        rows.push(CheckRow::skip("closed form", "only n = 2, 3"));
    }

    let low = spp_min_diagrams(&sg).mul_mono(Mono::new(0, -(sg.mu() as i32), 0));
    rows.push(CheckRow::from_result("diagrams, a = 0", same("diagrams, a = 0", &reference.spp_min(), &low)));
    rows.push(CheckRow::from_result("symmetry", check_symmetry(spp).map(|_| String::new())));
    rows.push(CheckRow::from_result("degree bounds", check_degree_bounds(&reference).map(|_| String::new())));
    rows.push(CheckRow::from_result("t parity", check_no_cancellation(&reference).map(|_| String::new())));
    rows.push(CheckRow::from_result("t = -1 signs", check_t_minus_one_signs(&reference).map(|_| String::new())));
    rows.push(CheckRow::from_result("uspp identity", check_uspp_identity(&reference).map(|_| String::new())));
    rows.push(CheckRow::from_result(
        "BPS decomposition",
        bps_decompose(spp, sg.delta()).map(|v| format!("h = 0..{}", v.len() - 1)),
    ));
    rows.push(CheckRow::from_result(
        "blowup",
        check_blowup(n, k, truncation_bound(&sg)).map(|_| {
            if k - n == 1 {
                "against the smooth point".into()
            } else {
                format!("against <{}, {}>", n.min(k - n), n.max(k - n))
            }
        }),
    ));
    rows.push(CheckRow::from_result(
        "stable limit",
        check_stability(n, k).map(|_| format!("mod q^{}", 2 * k)),
    ));
    rows.push(CheckRow::from_result("cell dimensions", check_piontkowski(&sg).map(|_| String::new())));
    if k == n + 1 {
        let h = hook_formula(n).and_then(|h| hook_to_spp(&h, sg.mu()));
        rows.push(CheckRow::from_result("hook formula", h.and_then(|p| same("hook formula", spp, &p))));
    } else {
        rows.push(CheckRow::skip("hook formula", "only k = n + 1"));
    }
    rows.push(CheckRow::from_result("sampled beta identity", sampled_beta_identity(&sg, seed, SAMPLES)));
    Ok(Report { superpoly: Some(reference), rows, agreeing })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trefoil_passes() {
        let r = run(2, 3, DEFAULT_SEED).unwrap();
        assert!(r.passed(), "{:?}", r.rows);
        assert!(r.agreeing.contains(&Method::Localization));
        assert!(r.agreeing.contains(&Method::Closed));
    }

    #[test]
    fn three_five_skips_nothing_it_can_do() {
        let r = run(3, 5, DEFAULT_SEED).unwrap();
        assert!(r.passed(), "{:?}", r.rows);
        let loc = r.rows.iter().find(|x| x.check == "localization").unwrap();
        assert_eq!(loc.status, Status::Pass);
    }

    #[test]
    fn samples_depend_on_seed_only() {
        let sg = Semigroup::new(4, 7).unwrap();
        let mut a = ChaCha8Rng::seed_from_u64(5);
        let mut b = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..10 {
            assert_eq!(random_ideal(&sg, &mut a, 3), random_ideal(&sg, &mut b, 3));
        }
        sampled_beta_identity(&sg, 5, 50).unwrap();
    }
}
