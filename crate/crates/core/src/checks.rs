//! Structural identities a superpolynomial must satisfy.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::{LaurentPoly3, Mono, MonoMap, QSeries, Var};
use crate::semigroup::Semigroup;
use crate::series::{beta_tally, one_minus_q2, stable_series, Superpoly};

fn mismatch(what: &str, detail: String) -> Error {
    Error::Mismatch { what: String::from(what), detail }
}

fn first_difference(a: &LaurentPoly3, b: &LaurentPoly3) -> String {
    let d = a - b;
    let out = match d.terms().next() {
        Some((m, c)) => format!("differs at a^{} q^{} t^{} by {c}", m.a, m.q, m.t),
        None => String::from("equal"),
    };
    out
}

/// Invariance of `spp` under `q -> 1/(qt)`.
pub fn check_symmetry(spp: &LaurentPoly3) -> Result<()> {
    let s = spp.substitute(&MonoMap::Q_TO_INV_QT);
    if &s == spp {
        Ok(())
    } else {
        Err(mismatch("q -> 1/(qt) symmetry", first_difference(spp, &s)))
    }
}

/// `q`-degrees within `[-2δ, 2δ]` and at most `min(n,k) + 1` powers of `a`.
pub fn check_degree_bounds(s: &Superpoly) -> Result<()> {
    let d = 2 * s.delta() as i32;
    if let Some((m, _)) = s.spp.terms().find(|(m, _)| m.q.abs() > d) {
        return Err(mismatch("q-degree bound", format!("term a^{} q^{} t^{}", m.a, m.q, m.t)));
    }
    let na = s.spp.distinct_exponents(Var::A).len() as i64;
    if na > s.n.min(s.k) + 1 {
        return Err(mismatch("a-degree count", format!("{na} distinct powers of a")));
    }
    Ok(())
}

/// For each `(e_a, e_q)`, all `t`-exponents of `uspp_num` share a parity.
pub fn check_no_cancellation(s: &Superpoly) -> Result<()> {
    let mut parity: BTreeMap<(i32, i32), i32> = BTreeMap::new();
    for (m, _) in s.uspp_num.terms() {
        let p = m.t.rem_euclid(2);
        if *parity.entry((m.a, m.q)).or_insert(p) != p {
            return Err(mismatch("t-parity", format!("a^{} q^{} has both parities", m.a, m.q)));
        }
    }
    Ok(())
}

/// After `t = -1`, all coefficients with the same power of `a` share a sign.
pub fn check_t_minus_one_signs(s: &Superpoly) -> Result<()> {
    let h = s.homfly();
    let mut sign: BTreeMap<i32, bool> = BTreeMap::new();
    for (m, c) in h.terms() {
        let pos = c.is_positive();
        if *sign.entry(m.a).or_insert(pos) != pos {
            return Err(mismatch("t = -1 signs", format!("mixed signs at a^{}", m.a)));
        }
    }
    Ok(())
}

/// `spp (1 - q²) = (q^{-1} - q) uspp_num`.
pub fn check_uspp_identity(s: &Superpoly) -> Result<()> {
    let lhs = &s.spp * &one_minus_q2();
    let rhs = &s.uspp_num * &LaurentPoly3::from_terms([(Mono::new(0, -1, 0), 1), (Mono::new(0, 1, 0), -1)]);
    if lhs == rhs {
        Ok(())
    } else {
        Err(mismatch("uspp identity", first_difference(&lhs, &rhs)))
    }
}

/// Coefficients `n_h(a, t)`, `h = 0..=δ`, with
/// `spp = Σ_h n_h (q^{-1} - q)^h (q^{-1} - q t²)^h`.
pub fn bps_decompose(spp: &LaurentPoly3, delta: i64) -> Result<Vec<LaurentPoly3>> {
    let x = LaurentPoly3::from_terms([(Mono::new(0, -1, 0), 1), (Mono::new(0, 1, 0), -1)]);
    let y = LaurentPoly3::from_terms([(Mono::new(0, -1, 0), 1), (Mono::new(0, 1, 2), -1)]);
    let xy = &x * &y;
    let mut rest = spp.clone();
    let mut out = alloc::vec![LaurentPoly3::zero(); delta as usize + 1];
    for h in (0..=delta).rev() {
        let e = -2 * h as i32;
        if let Some((m, _)) = rest.terms().find(|(m, _)| m.q < e) {
            return Err(mismatch("BPS decomposition", format!("term q^{} left at h = {h}", m.q)));
        }
        let nh = rest.coefficient_of(Var::Q, e);
        rest -= &(&nh * &xy.pow(h as u32));
        out[h as usize] = nh;
    }
    if !rest.is_zero() {
        return Err(mismatch("BPS decomposition", format!("nonzero remainder {}", rest.short_text(4))));
    }
    Ok(out)
}

/// The a^{2n} part of the raw series of `<n,k>` against
/// `q^{n(n-1)} t^{n²}` times the `a⁰` part for `<n, k-n>` (or `1/(1-q²)`
/// when `k - n = 1`), modulo `q^{2L+2}`.
pub fn check_blowup(n: i64, k: i64, max_colength: i64) -> Result<()> {
    let sg = Semigroup::new(n, k)?;
    let (n, k) = (sg.n(), sg.k());
    let order = 2 * max_colength as i32 + 2;
    let raw = beta_tally(&sg, max_colength, None)?.to_poly();
    let lhs = raw.slice(Var::A, 2 * n as i32).coefficient_of(Var::A, 2 * n as i32);
    let base = if k - n == 1 {
        LaurentPoly3::from_terms((0..=max_colength as i32).map(|l| (Mono::new(0, 2 * l, 0), 1)))
    } else {
        let sb = Semigroup::new(n, k - n)?;
        beta_tally(&sb, max_colength, None)?.to_poly().a_zero()
    };
    let rhs = base.mul_mono(Mono::new(0, (n * (n - 1)) as i32, (n * n) as i32));
    let (l, r) = (lhs.truncate_q(order), rhs.truncate_q(order));
    if l == r {
        Ok(())
    } else {
        Err(mismatch("blowup", first_difference(&l, &r)))
    }
}

/// The raw series of `<n,k>` against the stable product modulo `q^{2k}`.
pub fn check_stability(n: i64, k: i64) -> Result<()> {
    let sg = Semigroup::new(n, k)?;
    let order = 2 * k as i32;
    let raw = QSeries::new(beta_tally(&sg, k - 1, None)?.to_poly(), order);
    let st = stable_series(n, order);
    if raw.agrees_with(&st) {
        Ok(())
    } else {
        Err(mismatch("stable limit", first_difference(raw.poly(), st.poly())))
    }
}

/// `spp_a = M · spp_b` for a single monomial `M`, which is returned.
pub fn monomial_ratio(a: &LaurentPoly3, b: &LaurentPoly3) -> Option<Mono> {
    let (ma, ca) = a.leading()?;
    let (mb, cb) = b.leading()?;
    if ca != cb || (ca.is_zero()) {
        return None;
    }
    let m = ma / mb;
    (b.mul_mono(m) == *a).then_some(m)
}
