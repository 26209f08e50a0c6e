//! The functions `g_{r/n}(λ)` for `T(n, mn + r)`.
//!
//! Lookup order: `T_λ` for `r = 1`, a direct formula for λ, a formula for
//! `λ'` with `T1 <-> T2`, and finally duality from `n - r`.
//!
//! Two of the tabulated `n = 7, r = 3` values are amended in
//! [`Table::Amended`]: `(2,2,2,1)` has denominator `T1² T2 - 1` rather than
//! `T1 T2² - 1`, and `(4,1,1,1)` carries an extra factor `T1 T2`. With the
//! values as listed ([`Table::AsListed`]) the sum for `T(7, 7m+3)` does not
//! clear its denominators.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::localization::{partition_sum, to_spp, weights};
use crate::partition::Partition;
use crate::poly::{LaurentPoly3, Mono, MonoMap};
use crate::ratfunc::{tmono, RatFunc2};
use crate::semigroup::Semigroup;

const SWAP: MonoMap = MonoMap {
    a: Mono::new(1, 0, 0),
    q: Mono::new(0, 0, 1),
    t: Mono::new(0, 1, 0),
};

const INVERT: MonoMap = MonoMap {
    a: Mono::new(1, 0, 0),
    q: Mono::new(0, -1, 0),
    t: Mono::new(0, 0, -1),
};

/// Which version of the `n = 7` table to use.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Table {
    #[default]
    Amended,
    AsListed,
}

fn poly(terms: &[(i64, i32, i32)]) -> LaurentPoly3 {
    LaurentPoly3::from_terms(terms.iter().map(|&(c, e1, e2)| (tmono(e1, e2, 0), c)))
}

/// `[x]_v = 1 + v + … + v^{x-1}`, zero for `x <= 0`.
fn qint(x: i64, v: Mono) -> LaurentPoly3 {
    LaurentPoly3::from_terms((0..x.max(0) as i32).map(|i| (v.pow(i), 1)))
}

fn t1(e: i64) -> Mono {
    tmono(e as i32, 0, 0)
}

fn t2(e: i64) -> Mono {
    tmono(0, e as i32, 0)
}

fn is_hook_with_arm(lambda: &Partition, first: usize) -> bool {
    lambda.parts().first() == Some(&first) && lambda.is_hook()
}

/// A formula stated directly for λ, if there is one.
fn direct(r: i64, n: i64, lambda: &Partition, table: Table) -> Result<Option<RatFunc2>> {
    let e = (n - 1) * (r - 1) / 2;
    let parts = lambda.parts();
    let nu = n as usize;
    let p = if parts.len() == nu {
        qint(n, t1(1)).mul_mono(t1(e))
    } else if parts == [nu] {
        qint(n, t2(1)).mul_mono(t2(e))
    } else if n >= 3 && is_hook_with_arm(lambda, 2) {
        (&qint(n - r, t1(1)) + &qint(r, t1(-1)).mul_mono(t2(1))).mul_mono(t1(e))
    } else if n >= 4 && is_hook_with_arm(lambda, 3) {
        let (lo, hi) = ((n - r).min(r), (n - 2 * r).max(0));
        let mut s = qint(hi, t1(1)).mul_mono(t1((r - 1) * (n - 1) / 2));
        s += &qint(lo, t1(1)).mul_mono(t1((r - 1) * (n - 3) / 2) * t2(1));
        s += &qint(lo, t1(-1)).mul_mono(t1((r - 1) * (n - 3) / 2) * t2(2));
        s += &qint((2 * r - n).max(0), t1(-1)).mul_mono(t1((r - 1) * (n - 1) / 2 - n + 2) * t2(3));
        s
    } else if n == 5 && parts == [2, 2, 1] {
        match r {
            1 => poly(&[(1, 0, 0), (1, 1, 0), (1, 2, 0), (1, 0, 1), (1, 1, 1)]),
            2 => poly(&[(1, 2, 0), (1, 3, 0), (1, 1, 1), (1, 2, 1), (1, 0, 2)]),
            3 => poly(&[(1, 4, 0), (1, 2, 1), (1, 3, 1), (1, 1, 2), (1, 2, 2)]),
            4 => poly(&[(1, 3, 1), (1, 4, 1), (1, 2, 2), (1, 3, 2), (1, 4, 2)]),
            _ => return Ok(None),
        }
    } else if n == 7 && r == 3 {
        return seven_three(parts, table);
    } else {
        return Ok(None);
    };
    Ok(Some(RatFunc2::from_poly(p)))
}

fn seven_three(parts: &[usize], table: Table) -> Result<Option<RatFunc2>> {
    let f = match parts {
        [2, 2, 1, 1, 1] => RatFunc2::from_poly(poly(&[
            (1, 2, 2), (1, 3, 2), (1, 4, 1), (1, 4, 2), (2, 5, 1), (1, 6, 0),
            (2, 6, 1), (1, 7, 0), (1, 7, 1), (2, 8, 0), (1, 9, 0),
        ]))
        .over_cyclotomic(4, tmono(1, 0, 0))?,
        // a denominator T1^i T2^j - 1 is -(1 - T1^i T2^j)
        [2, 2, 2, 1] => RatFunc2::from_poly(-poly(&[
            (-1, 2, 2), (-1, 2, 3), (1, 2, 4), (-2, 3, 2), (-1, 4, 1), (-1, 4, 2),
            (1, 4, 3), (-1, 5, 1), (1, 5, 2), (1, 5, 3), (-1, 6, 0), (2, 6, 2),
            (-1, 7, 0), (1, 7, 1), (1, 7, 2), (1, 8, 1),
        ]))
        .over_binomial(match table {
            Table::Amended => tmono(2, 1, 0),
            Table::AsListed => tmono(1, 2, 0),
        })?,
        [3, 2, 1, 1] => RatFunc2::from_poly(poly(&[
            (1, 1, 4), (1, 2, 2), (3, 2, 3), (2, 2, 4), (3, 3, 2), (5, 3, 3),
            (1, 3, 4), (1, 4, 1), (6, 4, 2), (4, 4, 3), (3, 5, 1), (4, 5, 2),
            (1, 5, 3), (1, 6, 0), (3, 6, 1), (1, 6, 2), (1, 7, 0), (1, 7, 1),
        ]))
        .over_cyclotomic(2, tmono(0, 1, 0))?
        .over_cyclotomic(3, tmono(1, 0, 0))?,
        [3, 2, 2] => RatFunc2::from_poly(-poly(&[
            (-1, 1, 4), (-1, 2, 2), (-2, 2, 3), (1, 2, 5), (-2, 3, 2), (-1, 3, 3),
            (1, 3, 4), (-1, 4, 1), (-1, 4, 2), (2, 4, 3), (1, 4, 4), (2, 5, 2),
            (1, 5, 3), (-1, 6, 0), (1, 6, 1), (1, 6, 2),
        ]))
        .over_binomial(tmono(2, 1, 0))?,
        [4, 1, 1, 1] => {
            let p = poly(&[(1, 0, 3), (1, 1, 1), (1, 1, 2), (1, 1, 3), (1, 2, 1), (1, 3, 0), (1, 3, 1)]);
            RatFunc2::from_poly(match table {
                Table::Amended => p.mul_mono(tmono(1, 1, 0)),
                Table::AsListed => p,
            })
        }
        _ => return Ok(None),
    };
    Ok(Some(f))
}

fn no_formula(r: i64, n: i64, lambda: &Partition) -> Error {
    Error::NoFormula { r, n, shape: lambda.parts().to_vec() }
}

fn lookup(r: i64, n: i64, lambda: &Partition, allow_duality: bool, table: Table) -> Result<RatFunc2> {
    if r == 1 {
        return Ok(RatFunc2::from_poly(weights(lambda).t_lambda));
    }
    if let Some(g) = direct(r, n, lambda, table)? {
        return Ok(g);
    }
    if let Some(g) = direct(r, n, &lambda.dual(), table)? {
        return g.substitute(&SWAP);
    }
    if allow_duality {
        let det = weights(lambda).det_t;
        let g = lookup(n - r, n, lambda, false, table).map_err(|_| no_formula(r, n, lambda))?;
        return Ok(g.substitute(&INVERT)?.mul_poly(&LaurentPoly3::monomial(1, det)));
    }
    Err(no_formula(r, n, lambda))
}

/// `g_{r/n}(λ)` with `0 < r < n` coprime to `n`.
pub fn g_formula(r: i64, n: i64, lambda: &Partition) -> Result<RatFunc2> {
    g_formula_from(Table::Amended, r, n, lambda)
}

pub fn g_formula_from(table: Table, r: i64, n: i64, lambda: &Partition) -> Result<RatFunc2> {
    if !(0 < r && r < n) || num_integer::gcd(r, n) != 1 || lambda.size() != n as usize {
        return Err(Error::InvalidArgument(alloc::format!("bad g arguments r={r}, n={n}, λ={lambda}")));
    }
    lookup(r, n, lambda, true, table)
}

/// Whether every partition of `n` has a `g_{r/n}` value.
pub fn has_formula(r: i64, n: i64) -> bool {
    Partition::all(n as usize).iter().all(|l| g_formula(r, n, l).is_ok())
}

/// The `A`-extended partition sum with `g_{r/n}` for `k = mn + r`.
pub fn g_sum(table: Table, n: i64, k: i64) -> Result<LaurentPoly3> {
    let sg = Semigroup::new(n, k)?;
    let (n, k) = (sg.n(), sg.k());
    let (m, r) = (k / n, k % n);
    partition_sum(n as usize, m, true, |l, _| g_formula_from(table, r, n, l))?.into_polynomial()
}

/// `spp` of `T(n, k)` assembled from `g_{r/n}`.
pub fn superpoly_from_g(n: i64, k: i64) -> Result<LaurentPoly3> {
    superpoly_from_g_with(Table::Amended, n, k)
}

pub fn superpoly_from_g_with(table: Table, n: i64, k: i64) -> Result<LaurentPoly3> {
    let sg = Semigroup::new(n, k)?;
    Ok(to_spp(&g_sum(table, n, k)?, sg.mu(), true))
}

/// `(r, λ)` pairs with a formula, for listing.
pub fn shapes_with_formula(r: i64, n: i64) -> Vec<Partition> {
    Partition::all(n as usize).into_iter().filter(|l| g_formula(r, n, l).is_ok()).collect()
}
