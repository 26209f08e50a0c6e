//! Rational functions in `T1`, `T2` (with `A` adjoined polynomially).
//!
//! Every denominator met in the localization sums is a product of binomials
//! `1 - T^w`, and the tabulated `g` values only add cyclotomic factors such
//! as `1 + T1^2`. A denominator is therefore stored as a multiset of
//! irreducible factors `Φ_e(T^v)` with `v` a primitive exponent vector, and
//! reduction is trial division by those factors.
//!
//! Exponent slots: `T1` is `q`, `T2` is `t`, `A` is `a` (see [`crate::poly`]).

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;

use crate::cyclotomic::{cyclotomic, divisors};
use crate::error::{Error, Result};
use crate::poly::{LaurentPoly3, Mono, MonoMap, Style, TermOrder, T_NAMES};

/// Monomial `T1^e1 T2^e2 A^ea`.
pub fn tmono(e1: i32, e2: i32, ea: i32) -> Mono {
    Mono::new(ea, e1, e2)
}

/// Polynomial `c T1^e1 T2^e2`.
pub fn tterm(c: i64, e1: i32, e2: i32) -> LaurentPoly3 {
    LaurentPoly3::monomial(c, tmono(e1, e2, 0))
}

/// The irreducible factor `Φ_e(T^dir)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CycloFactor {
    pub e: u32,
    pub dir: Mono,
}

impl CycloFactor {
    pub fn poly(&self) -> LaurentPoly3 {
        LaurentPoly3::from_terms(
            cyclotomic(self.e)
                .into_iter()
                .enumerate()
                .filter(|(_, c)| *c != 0)
                .map(|(i, c)| (self.dir.pow(i as i32), c)),
        )
    }

    fn degree(&self) -> i32 {
        cyclotomic(self.e).len() as i32 - 1
    }
}

fn gcd3(m: Mono) -> i32 {
    m.q.gcd(&m.t).gcd(&m.a)
}

/// Split `w = d * v` with `v` primitive and its first nonzero component
/// (in the order T1, T2, A) positive. Returns `(v, d, flipped)`.
fn normalize_dir(w: Mono) -> (Mono, i32, bool) {
    let d = gcd3(w);
    let v = Mono::new(w.a / d, w.q / d, w.t / d);
    let first = [v.q, v.t, v.a].into_iter().find(|&x| x != 0).unwrap_or(0);
    if first < 0 {
        (v.inv(), d, true)
    } else {
        (v, d, false)
    }
}

/// `u` with `Φ_e(T^{-v}) = u · Φ_e(T^v)` for primitive `v`.
fn flip_unit(f: &CycloFactor) -> (i64, Mono) {
    if f.e == 1 {
        (-1, f.dir.inv())
    } else {
        (1, f.dir.pow(-f.degree()))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatFunc2 {
    num: LaurentPoly3,
    den: BTreeMap<CycloFactor, u32>,
}

impl RatFunc2 {
    pub fn zero() -> Self {
        Self::from_poly(LaurentPoly3::zero())
    }

    pub fn one() -> Self {
        Self::from_poly(LaurentPoly3::one())
    }

    pub fn from_poly(p: LaurentPoly3) -> Self {
        RatFunc2 { num: p, den: BTreeMap::new() }
    }

    pub fn numerator(&self) -> &LaurentPoly3 {
        &self.num
    }

    pub fn denominator_factors(&self) -> impl Iterator<Item = (&CycloFactor, &u32)> {
        self.den.iter()
    }

    pub fn denominator(&self) -> LaurentPoly3 {
        let mut d = LaurentPoly3::one();
        for (f, &m) in &self.den {
            d = &d * &f.poly().pow(m);
        }
        d
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> Option<&LaurentPoly3> {
        if self.den.is_empty() {
            Some(&self.num)
        } else {
            None
        }
    }

    pub fn into_polynomial(self) -> Result<LaurentPoly3> {
        if self.den.is_empty() {
            Ok(self.num)
        } else {
            Err(Error::NonPolynomial { detail: format!("{self}") })
        }
    }

    /// Divide by `1 - T^w`.
    pub fn over_binomial(mut self, w: Mono) -> Result<Self> {
        if w.is_one() {
            return Err(Error::DivisionByZero);
        }
        let (v, d, flipped) = normalize_dir(w);
        // 1 - x^d = -Π_{e|d} Φ_e(x); with x = T^{-v}: 1 - T^{-dv} = T^{-dv}(T^{dv} - 1)
        self.num = if flipped { self.num.mul_mono(v.pow(d)) } else { -&self.num };
        for e in divisors(d as u32) {
            *self.den.entry(CycloFactor { e, dir: v }).or_insert(0) += 1;
        }
        self.reduce();
        Ok(self)
    }

    /// Divide by `Φ_e(T^w)` for a primitive `w`.
    pub fn over_cyclotomic(mut self, e: u32, w: Mono) -> Result<Self> {
        let (v, d, flipped) = normalize_dir(w);
        if d != 1 || e == 0 {
            return Err(Error::InvalidArgument(format!("Φ_{e} at non-primitive monomial")));
        }
        let f = CycloFactor { e, dir: v };
        if flipped {
            let (c, m) = flip_unit(&f);
            self.num = self.num.mul_mono(m.inv());
            if c < 0 {
                self.num = -&self.num;
            }
        }
        *self.den.entry(f).or_insert(0) += 1;
        self.reduce();
        Ok(self)
    }

    fn reduce(&mut self) {
        if self.num.is_zero() {
            self.den.clear();
            return;
        }
        let keys: Vec<CycloFactor> = self.den.keys().copied().collect();
        for f in keys {
            let p = f.poly();
            while let Some(m) = self.den.get_mut(&f) {
                match self.num.divide_exact(&p) {
                    Ok(q) => {
                        self.num = q;
                        *m -= 1;
                        if *m == 0 {
                            self.den.remove(&f);
                        }
                    }
                    Err(_) => break,
                }
            }
        }
    }

    /// Sum over a common denominator, reduced once at the end.
    pub fn sum<'a, I: IntoIterator<Item = &'a RatFunc2>>(items: I) -> RatFunc2 {
        let items: Vec<&RatFunc2> = items.into_iter().collect();
        let mut lcm: BTreeMap<CycloFactor, u32> = BTreeMap::new();
        for r in &items {
            for (f, &m) in &r.den {
                let e = lcm.entry(*f).or_insert(0);
                *e = (*e).max(m);
            }
        }
        let mut num = LaurentPoly3::zero();
        for r in &items {
            let mut x = r.num.clone();
            for (f, &m) in &lcm {
                let have = r.den.get(f).copied().unwrap_or(0);
                let p = f.poly();
                for _ in have..m {
                    x = &x * &p;
                }
            }
            num += &x;
        }
        let mut out = RatFunc2 { num, den: lcm };
        out.reduce();
        out
    }

    pub fn mul_poly(&self, p: &LaurentPoly3) -> RatFunc2 {
        let mut out = RatFunc2 { num: &self.num * p, den: self.den.clone() };
        out.reduce();
        out
    }

    pub fn div(&self, o: &RatFunc2) -> Result<RatFunc2> {
        if o.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let (c, m, factors) = factor_binomials(&o.num)?;
        let mut num = (&self.num * &o.denominator()).mul_mono(m.inv());
        if c < 0 {
            num = -&num;
        }
        let mut den = self.den.clone();
        for f in factors {
            *den.entry(f).or_insert(0) += 1;
        }
        let mut out = RatFunc2 { num, den };
        out.reduce();
        Ok(out)
    }

    /// Apply a monomial substitution that maps primitive exponent vectors to
    /// primitive ones (e.g. `T -> 1/T` or `T1 <-> T2`).
    pub fn substitute(&self, map: &MonoMap) -> Result<RatFunc2> {
        let mut num = self.num.substitute(map);
        let mut den = BTreeMap::new();
        for (f, &mult) in &self.den {
            let w = map.apply(f.dir);
            let (v, d, flipped) = normalize_dir(w);
            if d != 1 {
                return Err(Error::InvalidArgument(String::from("substitution is not unimodular")));
            }
            let g = CycloFactor { e: f.e, dir: v };
            if flipped {
                let (c, m) = flip_unit(&g);
                for _ in 0..mult {
                    num = num.mul_mono(m.inv());
                    if c < 0 {
                        num = -&num;
                    }
                }
            }
            *den.entry(g).or_insert(0) += mult;
        }
        let mut out = RatFunc2 { num, den };
        out.reduce();
        Ok(out)
    }
}

/// Write `p = c · T^m · Π factors` with `c = ±1`.
fn factor_binomials(p: &LaurentPoly3) -> Result<(i64, Mono, Vec<CycloFactor>)> {
    let mut p = p.clone();
    let mut out = Vec::new();
    'outer: loop {
        if let Some((m, c)) = p.as_monomial() {
            return if c.is_one() {
                Ok((1, m, out))
            } else if (-c).is_one() {
                Ok((-1, m, out))
            } else {
                Err(Error::UnsupportedDivisor)
            };
        }
        let mons: Vec<Mono> = p.terms().map(|(m, _)| *m).collect();
        let m0 = mons[0];
        for &m in &mons[1..] {
            let (v, d, _) = normalize_dir(m / m0);
            for e in 1..=(4 * d as u32 + 6) {
                let f = CycloFactor { e, dir: v };
                if f.degree() > d {
                    continue;
                }
                if let Ok(q) = p.divide_exact(&f.poly()) {
                    out.push(f);
                    p = q;
                    continue 'outer;
                }
            }
        }
        return Err(Error::UnsupportedDivisor);
    }
}

impl fmt::Display for RatFunc2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let num = self.num.render(&T_NAMES, Style::Text, TermOrder::Canonical);
        if self.den.is_empty() {
            return f.write_str(&num);
        }
        write!(f, "({num}) / (")?;
        for (i, (g, m)) in self.den.iter().enumerate() {
            if i > 0 {
                f.write_str(" * ")?;
            }
            let p = g.poly().render(&T_NAMES, Style::Text, TermOrder::Canonical);
            write!(f, "({p})")?;
            if *m > 1 {
                write!(f, "^{m}")?;
            }
        }
        f.write_str(")")
    }
}

impl<'a> Add<&'a RatFunc2> for &'a RatFunc2 {
    type Output = RatFunc2;
    fn add(self, o: &RatFunc2) -> RatFunc2 {
        RatFunc2::sum([self, o])
    }
}

impl<'a> Sub<&'a RatFunc2> for &'a RatFunc2 {
    type Output = RatFunc2;
    fn sub(self, o: &RatFunc2) -> RatFunc2 {
        RatFunc2::sum([self, &-o])
    }
}

impl Neg for &RatFunc2 {
    type Output = RatFunc2;
    fn neg(self) -> RatFunc2 {
        RatFunc2 { num: -&self.num, den: self.den.clone() }
    }
}

impl<'a> Mul<&'a RatFunc2> for &'a RatFunc2 {
    type Output = RatFunc2;
    fn mul(self, o: &RatFunc2) -> RatFunc2 {
        let mut den = self.den.clone();
        for (f, &m) in &o.den {
            *den.entry(*f).or_insert(0) += m;
        }
        let mut out = RatFunc2 { num: &self.num * &o.num, den };
        out.reduce();
        out
    }
}

impl From<LaurentPoly3> for RatFunc2 {
    fn from(p: LaurentPoly3) -> Self {
        RatFunc2::from_poly(p)
    }
}

/// Constant polynomial.
pub fn int(c: i64) -> LaurentPoly3 {
    LaurentPoly3::constant(BigInt::from(c))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn one_minus(e1: i32, e2: i32) -> LaurentPoly3 {
        &int(1) - &tterm(1, e1, e2)
    }

    #[test]
    fn quotient_becomes_polynomial() {
        let f = RatFunc2::from_poly(one_minus(2, 0)).over_binomial(tmono(1, 0, 0)).unwrap();
        assert_eq!(f.is_polynomial(), Some(&(&int(1) + &tterm(1, 1, 0))));
    }

    #[test]
    fn sum_over_common_denominator() {
        let x = RatFunc2::one().over_binomial(tmono(1, 0, 0)).unwrap();
        let y = RatFunc2::one().over_binomial(tmono(0, 1, 0)).unwrap();
        let s = (&x + &y).mul_poly(&(&one_minus(1, 0) * &one_minus(0, 1)));
        let expect = &(&int(2) - &tterm(1, 1, 0)) - &tterm(1, 0, 1);
        assert_eq!(s.is_polynomial(), Some(&expect));
    }

    #[test]
    fn flipped_binomials_agree() {
        // 1/(1 - 1/T1) = -T1/(1 - T1)
        let x = RatFunc2::one().over_binomial(tmono(-1, 0, 0)).unwrap();
        let y = RatFunc2::from_poly(tterm(-1, 1, 0)).over_binomial(tmono(1, 0, 0)).unwrap();
        assert_eq!(x, y);
        assert!((&x - &y).is_zero());
    }

    #[test]
    fn division_by_binomial_product() {
        let d = &one_minus(1, 0) * &one_minus(2, 1);
        let x = RatFunc2::from_poly(d.clone());
        let y = RatFunc2::one().div(&x).unwrap();
        assert_eq!((&y * &x).is_polynomial(), Some(&int(1)));
        assert_eq!(
            RatFunc2::one().div(&RatFunc2::from_poly(&int(1) + &tterm(2, 1, 0))),
            Err(Error::UnsupportedDivisor)
        );
        assert_eq!(RatFunc2::one().div(&RatFunc2::zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn inversion_substitution() {
        let inv = MonoMap { a: Mono::new(-1, 0, 0), q: Mono::new(0, -1, 0), t: Mono::new(0, 0, -1) };
        let x = RatFunc2::from_poly(tterm(1, 1, 0)).over_cyclotomic(4, tmono(1, 0, 0)).unwrap();
        let y = x.substitute(&inv).unwrap();
        // T1^-1/(1+T1^-2) = T1/(1+T1^2)
        assert_eq!(x, y);
    }

    #[test]
    fn display_shows_factors() {
        let x = RatFunc2::one().over_binomial(tmono(2, 0, 0)).unwrap();
        let s = alloc::format!("{x}");
        assert!(s.contains("T1"), "{s}");
    }
}
