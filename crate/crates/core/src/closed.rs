//! Closed forms for `T(2, 2k+1)`, `T(3, 3k+1)` and `T(3, 3k+2)`.
//!
//! Each right-hand side `R` is the normalized series
//! `(1 - q²) raw / (1 + a² t) = q^μ spp / (1 + a² t)`, so
//! `spp = q^{-μ} (1 + a² t) R`.

use crate::error::{Error, Result};
use crate::poly::{LaurentPoly3, Mono};
use crate::semigroup::Semigroup;
use crate::series::one_plus_a2t;

fn p(terms: &[(i32, i32, i32, i64)]) -> LaurentPoly3 {
    LaurentPoly3::from_terms(terms.iter().map(|&(a, q, t, c)| (Mono::new(a, q, t), c)))
}

fn mono(a: i32, q: i32, t: i32) -> LaurentPoly3 {
    p(&[(a, q, t, 1)])
}

/// `1 - q^e t^f`.
fn one_minus(e: i32, f: i32) -> LaurentPoly3 {
    p(&[(0, 0, 0, 1), (0, e, f, -1)])
}

fn to_spp(r: &LaurentPoly3, mu: i64) -> LaurentPoly3 {
    (&one_plus_a2t() * r).mul_mono(Mono::new(0, -(mu as i32), 0))
}

fn check_k(k: i64) -> Result<i32> {
    if k < 1 {
        return Err(Error::InvalidArgument(alloc::format!("closed forms need k >= 1, got {k}")));
    }
    Ok(k as i32)
}

/// `spp` of `T(2, 2k+1)` from
/// `R = (1 - X^{k+1})/(1 - X) + a² q² t³ (1 - X^k)/(1 - X)`, `X = q⁴ t²`.
pub fn closed_form_2n(k: i64) -> Result<LaurentPoly3> {
    let kk = check_k(k)?;
    let num = &one_minus(4 * kk + 4, 2 * kk + 2) + &(&mono(2, 2, 3) * &one_minus(4 * kk, 2 * kk));
    let r = num.divide_exact(&one_minus(4, 2))?;
    Ok(to_spp(&r, 2 * k))
}

/// The same with the exponents `2k+1`, `2k-1` in the numerators. Its
/// numerator is not divisible by `1 - q⁴ t²`, so this reports the remainder.
pub fn closed_form_2n_printed(k: i64) -> Result<LaurentPoly3> {
    let kk = check_k(k)?;
    let num = &one_minus(4 * kk + 2, 2 * kk + 1) + &(&mono(2, 2, 3) * &one_minus(4 * kk - 2, 2 * kk - 1));
    let r = num.divide_exact(&one_minus(4, 2))?;
    Ok(to_spp(&r, 2 * k))
}

/// `spp` of `T(3, 3k + residue)` for `residue` 1 or 2.
pub fn closed_form_3n(k: i64, residue: i64) -> Result<LaurentPoly3> {
    let kk = check_k(k)?;
    let (d1, d2, d3) = (one_minus(4, 2), one_minus(6, 4), one_minus(6, 2));
    let q2a = p(&[(0, 2, 0, 1), (2, 0, 1, 1)]);
    let q4a = p(&[(0, 4, 0, 1), (2, 0, 1, 1)]);
    let lead = &(&one_plus_a2t_q(2, 3) * &one_plus_a2t_q(4, 5)) * &d3;
    let (mid, last) = match residue {
        1 => (
            &(&(&mono(0, 2 + 6 * kk, 2 + 4 * kk) * &q2a) * &one_plus_a2t_q(2, 3))
                * &p(&[(0, 0, 0, 1), (0, 2, 2, 1), (0, 4, 2, 1)]),
            &(&mono(0, 4 + 12 * kk, 4 + 6 * kk) * &q2a) * &q4a,
        ),
        2 => (
            &(&(&mono(0, 4 + 6 * kk, 4 + 4 * kk) * &q2a) * &one_plus_a2t_q(2, 3))
                * &p(&[(0, 0, 0, 1), (0, 2, 0, 1), (0, 4, 2, 1)]),
            &(&mono(0, 8 + 12 * kk, 6 + 6 * kk) * &q2a) * &q4a,
        ),
        _ => return Err(Error::InvalidArgument(alloc::format!("residue must be 1 or 2, got {residue}"))),
    };
    let num = &(&lead - &(&mid * &d1)) + &(&last * &d2);
    let r = num.divide_exact(&(&(&d1 * &d2) * &d3))?;
    let kn = 3 * k + residue;
    Ok(to_spp(&r, 2 * (kn - 1)))
}

/// `1 + a² q^e t^f`.
fn one_plus_a2t_q(e: i32, f: i32) -> LaurentPoly3 {
    p(&[(0, 0, 0, 1), (2, e, f, 1)])
}

/// Dispatch on the semigroup: `n = 2` or `n = 3`.
pub fn closed_form(sg: &Semigroup) -> Result<LaurentPoly3> {
    let (n, k) = (sg.n(), sg.k());
    match n {
        2 => closed_form_2n((k - 1) / 2),
        3 => closed_form_3n(k / 3, k % 3),
        _ => Err(Error::InvalidArgument(alloc::format!("no closed form for n = {n}"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trefoil_closed_form() {
        let t = &one_plus_a2t() * &p(&[(0, -2, 0, 1), (0, 2, 2, 1), (2, 0, 3, 1)]);
        assert_eq!(closed_form_2n(1).unwrap(), t);
    }

    #[test]
    fn printed_form_is_not_exact() {
        for k in 1..=3 {
            assert!(matches!(closed_form_2n_printed(k), Err(Error::NonExactDivision { .. })));
        }
    }

    #[test]
    fn bad_arguments() {
        assert!(closed_form_3n(1, 0).is_err());
        assert!(closed_form_2n(0).is_err());
        assert!(closed_form(&Semigroup::new(4, 5).unwrap()).is_err());
    }
}
