//! Partition sums over torus fixed points of `Hilb^n(C²)`.
//!
//! Box `(i, j)` of λ has arm `λ_i - j - 1`, leg `λ'_j - i - 1`, co-arm `j`
//! and co-leg `i`. This orientation gives `T1 + T2` for `n = 2, m = 1`.
//! Variables live in the slots of [`LaurentPoly3`]: `T1` in `q`, `T2` in
//! `t`, `A` in `a`.

use alloc::vec::Vec;

use crate::error::Result;
use crate::gdata;
use crate::partition::Partition;
use crate::poly::{LaurentPoly3, Mono, MonoMap};
use crate::ratfunc::{int, tmono, tterm, RatFunc2};
use crate::semigroup::Semigroup;
use crate::series::one_plus_a2t;

/// Fixed point data of one partition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FixedPointWeights {
    pub partition: Partition,
    /// `T_λ = Σ T1^{l'} T2^{a'}`.
    pub t_lambda: LaurentPoly3,
    /// `T1^{κ(λ)} T2^{κ(λ')}`.
    pub det_t: Mono,
    /// `Π (1 - T1^{1+l} T2^{-a})(1 - T1^{-l} T2^{1+a})`, kept as its factors.
    pub tangent: Vec<Mono>,
    /// `(1 - T1)(1 - T2) Π_{x ≠ (0,0)} (1 - T1^{l'} T2^{a'})`.
    pub oz: LaurentPoly3,
    /// `Π_{x ≠ (0,0)} (1 + A T1^{-l'} T2^{-a'})`.
    pub ext_a: LaurentPoly3,
}

impl FixedPointWeights {
    pub fn tangent_poly(&self) -> LaurentPoly3 {
        let mut p = int(1);
        for &w in &self.tangent {
            p = &p * &(&int(1) - &LaurentPoly3::monomial(1, w));
        }
        p
    }
}

pub fn weights(lambda: &Partition) -> FixedPointWeights {
    let mut t_lambda = LaurentPoly3::zero();
    let mut tangent = Vec::new();
    let mut oz = &(&int(1) - &tterm(1, 1, 0)) * &(&int(1) - &tterm(1, 0, 1));
    let mut ext_a = int(1);
    for c in lambda.cells() {
        let (a, l, ap, lp) = (c.arm as i32, c.leg as i32, c.coarm as i32, c.coleg as i32);
        t_lambda += &tterm(1, lp, ap);
        tangent.push(tmono(1 + l, -a, 0));
        tangent.push(tmono(-l, 1 + a, 0));
        if (c.row, c.col) != (0, 0) {
            oz = &oz * &(&int(1) - &tterm(1, lp, ap));
            ext_a = &ext_a * &(&int(1) + &LaurentPoly3::monomial(1, tmono(-lp, -ap, 1)));
        }
    }
    let det_t = tmono(lambda.kappa() as i32, lambda.dual().kappa() as i32, 0);
    FixedPointWeights { partition: lambda.clone(), t_lambda, det_t, tangent, oz, ext_a }
}

/// `Σ_λ (det T)^m · O_Z · [ext_A] · g(λ) / tangent_λ`.
pub fn partition_sum<G>(n: usize, m: i64, full: bool, mut g: G) -> Result<RatFunc2>
where
    G: FnMut(&Partition, &FixedPointWeights) -> Result<RatFunc2>,
{
    let mut terms = Vec::new();
    for lambda in Partition::all(n) {
        let w = weights(&lambda);
        let mut num = w.oz.mul_mono(w.det_t.pow(m as i32));
        if full {
            num = &num * &w.ext_a;
        }
        let mut f = &g(&lambda, &w)? * &RatFunc2::from_poly(num);
        for &d in &w.tangent {
            f = f.over_binomial(d)?;
        }
        terms.push(f);
    }
    Ok(RatFunc2::sum(&terms))
}

fn t_lambda_g(_: &Partition, w: &FixedPointWeights) -> Result<RatFunc2> {
    Ok(RatFunc2::from_poly(w.t_lambda.clone()))
}

/// The `A = 0` sum with `g = T_λ`, for `T(n, mn+1)`.
pub fn mnp1_min(n: usize, m: i64) -> Result<LaurentPoly3> {
    partition_sum(n, m, false, t_lambda_g)?.into_polynomial()
}

/// The full sum with the `ext_A` factor, for `T(n, mn+1)`.
pub fn mnp1_full(n: usize, m: i64) -> Result<LaurentPoly3> {
    partition_sum(n, m, true, t_lambda_g)?.into_polynomial()
}

/// `T1 -> q²`, `T2 -> q^{-2} t^{-2}`, `A -> a² t`.
pub const TO_AQT: MonoMap = MonoMap {
    a: Mono::new(2, 0, 1),
    q: Mono::new(0, 2, 0),
    t: Mono::new(0, -2, -2),
};

/// `spp = (1 + a² t) t^μ F` for a full sum, `spp_min = t^μ F` for an
/// `A = 0` sum.
pub fn to_spp(f: &LaurentPoly3, mu: i64, full: bool) -> LaurentPoly3 {
    let p = f.substitute(&TO_AQT).mul_mono(Mono::new(0, 0, mu as i32));
    if full {
        &one_plus_a2t() * &p
    } else {
        p
    }
}

/// `spp` by localization: the `T_λ` sum when `k ≡ 1 (mod n)`, the
/// tabulated `g` values otherwise.
pub fn spp_localization(sg: &Semigroup) -> Result<LaurentPoly3> {
    let (n, k) = (sg.n(), sg.k());
    if k % n == 1 {
        Ok(to_spp(&mnp1_full(n as usize, k / n)?, sg.mu(), true))
    } else {
        gdata::superpoly_from_g(n, k)
    }
}
