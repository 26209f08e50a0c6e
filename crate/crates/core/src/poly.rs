//! Sparse Laurent polynomials in three variables with big integer
//! coefficients, plus q-adically truncated series.
//!
//! The three exponent slots are called `a`, `q`, `t`. The localization code
//! reuses the same type for `A`, `T1`, `T2` (slots `a`, `q`, `t`).

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::{self, Write};
use core::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exponent vector. Field order gives the canonical term order
/// (lexicographic on `(e_a, e_t, e_q)`).
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Mono {
    pub a: i32,
    pub t: i32,
    pub q: i32,
}

impl Mono {
    pub const ONE: Mono = Mono { a: 0, t: 0, q: 0 };

    pub const fn new(a: i32, q: i32, t: i32) -> Mono {
        Mono { a, t, q }
    }

    pub fn inv(self) -> Mono {
        Mono { a: -self.a, t: -self.t, q: -self.q }
    }

    pub fn pow(self, e: i32) -> Mono {
        Mono { a: self.a * e, t: self.t * e, q: self.q * e }
    }

    pub fn is_one(self) -> bool {
        self == Mono::ONE
    }

    fn get(self, v: Var) -> i32 {
        match v {
            Var::A => self.a,
            Var::Q => self.q,
            Var::T => self.t,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Var {
    A,
    Q,
    T,
}

/// Substitution sending each variable to a monomial.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MonoMap {
    pub a: Mono,
    pub q: Mono,
    pub t: Mono,
}

impl Mul for Mono {
    type Output = Mono;
    fn mul(self, o: Mono) -> Mono {
        Mono { a: self.a + o.a, t: self.t + o.t, q: self.q + o.q }
    }
}

impl Div for Mono {
    type Output = Mono;
    fn div(self, o: Mono) -> Mono {
        Mono { a: self.a - o.a, t: self.t - o.t, q: self.q - o.q }
    }
}

impl MonoMap {
    pub const IDENTITY: MonoMap = MonoMap {
        a: Mono::new(1, 0, 0),
        q: Mono::new(0, 1, 0),
        t: Mono::new(0, 0, 1),
    };

    /// `q -> 1/(q t)`.
    pub const Q_TO_INV_QT: MonoMap = MonoMap {
        a: Mono::new(1, 0, 0),
        q: Mono::new(0, -1, -1),
        t: Mono::new(0, 0, 1),
    };

    pub fn apply(&self, m: Mono) -> Mono {
        self.a.pow(m.a) * self.q.pow(m.q) * self.t.pow(m.t)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Style {
    Text,
    Latex,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TermOrder {
    /// Ascending in `(e_a, e_t, e_q)`.
    Canonical,
    /// Descending in `(e_q, e_t, e_a)`.
    QDescending,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VarNames {
    pub a: &'static str,
    pub q: &'static str,
    pub t: &'static str,
}

pub const AQT: VarNames = VarNames { a: "a", q: "q", t: "t" };
pub const T_NAMES: VarNames = VarNames { a: "A", q: "T1", t: "T2" };

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly3 {
    terms: BTreeMap<Mono, BigInt>,
}

impl LaurentPoly3 {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, Mono::ONE)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, Mono::ONE)
    }

    pub fn monomial(c: impl Into<BigInt>, m: Mono) -> Self {
        let mut p = Self::zero();
        p.add_term(m, c.into());
        p
    }

    /// Shorthand for `c * a^ea q^eq t^et`.
    pub fn term(c: i64, ea: i32, eq: i32, et: i32) -> Self {
        Self::monomial(c, Mono::new(ea, eq, et))
    }

    pub fn from_terms<I, C>(it: I) -> Self
    where
        I: IntoIterator<Item = (Mono, C)>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero();
        for (m, c) in it {
            p.add_term(m, c.into());
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Mono, &BigInt)> + '_ {
        self.terms.iter()
    }

    pub fn coeff(&self, m: Mono) -> BigInt {
        self.terms.get(&m).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, m: Mono, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            alloc::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            alloc::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn add_scaled(&mut self, other: &LaurentPoly3, c: &BigInt, shift: Mono) {
        for (m, d) in &other.terms {
            self.add_term(*m * shift, c * d);
        }
    }

    /// The single monomial if the polynomial has exactly one term.
    pub fn as_monomial(&self) -> Option<(Mono, &BigInt)> {
        if self.terms.len() == 1 {
            self.terms.iter().next().map(|(m, c)| (*m, c))
        } else {
            None
        }
    }

    pub fn leading(&self) -> Option<(Mono, &BigInt)> {
        self.terms.iter().next_back().map(|(m, c)| (*m, c))
    }

    pub fn mul_mono(&self, m: Mono) -> Self {
        LaurentPoly3 { terms: self.terms.iter().map(|(k, c)| (*k * m, c.clone())).collect() }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly3 { terms: self.terms.iter().map(|(k, d)| (*k, d * c)).collect() }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn substitute(&self, map: &MonoMap) -> Self {
        let mut p = Self::zero();
        for (m, c) in &self.terms {
            p.add_term(map.apply(*m), c.clone());
        }
        p
    }

    /// Specialize `t = -1`.
    pub fn at_t_minus_one(&self) -> Self {
        let mut p = Self::zero();
        for (m, c) in &self.terms {
            let c = if m.t.rem_euclid(2) == 1 { -c } else { c.clone() };
            p.add_term(Mono { t: 0, ..*m }, c);
        }
        p
    }

    /// The `a^0` part.
    pub fn a_zero(&self) -> Self {
        self.coefficient_of(Var::A, 0)
    }

    /// Coefficient of `var^e`, as a polynomial in the remaining variables.
    pub fn coefficient_of(&self, var: Var, e: i32) -> Self {
        let mut p = Self::zero();
        for (m, c) in &self.terms {
            if m.get(var) == e {
                let mut m = *m;
                match var {
                    Var::A => m.a = 0,
                    Var::Q => m.q = 0,
                    Var::T => m.t = 0,
                }
                p.add_term(m, c.clone());
            }
        }
        p
    }

    /// Terms whose `var` exponent equals `e`, exponent kept.
    pub fn slice(&self, var: Var, e: i32) -> Self {
        LaurentPoly3 {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.get(var) == e)
                .map(|(m, c)| (*m, c.clone()))
                .collect(),
        }
    }

    /// Drop every term with `e_q >= order`.
    pub fn truncate_q(&self, order: i32) -> Self {
        LaurentPoly3 {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.q < order)
                .map(|(m, c)| (*m, c.clone()))
                .collect(),
        }
    }

    pub fn exponent_range(&self, var: Var) -> Option<(i32, i32)> {
        let mut it = self.terms.keys().map(|m| m.get(var));
        let first = it.next()?;
        Some(it.fold((first, first), |(lo, hi), e| (lo.min(e), hi.max(e))))
    }

    pub fn distinct_exponents(&self, var: Var) -> Vec<i32> {
        let mut v: Vec<i32> = self.terms.keys().map(|m| m.get(var)).collect();
        v.sort_unstable();
        v.dedup();
        v
    }

    /// Sum of coefficients (value at a = q = t = 1).
    pub fn eval_ones(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Exact quotient `self / d`; fails with the remainder when `d` does not
    /// divide `self`.
    pub fn divide_exact(&self, d: &LaurentPoly3) -> Result<LaurentPoly3> {
        let (dm, dc) = match d.leading() {
            Some((m, c)) => (m, c.clone()),
            None => return Err(Error::DivisionByZero),
        };
        if self.is_zero() {
            return Ok(Self::zero());
        }
        if let Some((m, c)) = d.as_monomial() {
            if self.terms.values().all(|x| x.is_multiple_of(c)) {
                return Ok(LaurentPoly3 {
                    terms: self.terms.iter().map(|(k, x)| (*k / m, x / c)).collect(),
                });
            }
        }
        let lo = |p: &LaurentPoly3, v| p.exponent_range(v).unwrap();
        let mut bounds = [(0, 0); 3];
        for (i, v) in [Var::A, Var::Q, Var::T].into_iter().enumerate() {
            let (pl, ph) = lo(self, v);
            let (dl, dh) = lo(d, v);
            bounds[i] = (pl - dl, ph - dh);
        }
        let inside = |m: Mono| {
            let e = [m.a, m.q, m.t];
            (0..3).all(|i| bounds[i].0 <= e[i] && e[i] <= bounds[i].1)
        };
        let mut rem = self.clone();
        let mut quo = Self::zero();
        while let Some((lm, lc)) = rem.leading() {
            let (qc, r) = lc.div_rem(&dc);
            let qm = lm / dm;
            if !r.is_zero() || !inside(qm) {
                return Err(Error::NonExactDivision { remainder: rem.short_text(160) });
            }
            rem.add_scaled(d, &-&qc, qm);
            quo.add_term(qm, qc);
        }
        Ok(quo)
    }

    /// Exact division by an integer.
    pub fn div_int(&self, c: &BigInt) -> Result<LaurentPoly3> {
        if c.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.terms.values().all(|x| x.is_multiple_of(c)) {
            Ok(LaurentPoly3 { terms: self.terms.iter().map(|(k, x)| (*k, x / c)).collect() })
        } else {
            Err(Error::NonExactDivision { remainder: self.short_text(160) })
        }
    }

    pub fn render(&self, names: &VarNames, style: Style, order: TermOrder) -> String {
        let mut out = String::new();
        if self.is_zero() {
            out.push('0');
            return out;
        }
        let mut terms: Vec<(&Mono, &BigInt)> = self.terms.iter().collect();
        if order == TermOrder::QDescending {
            terms.sort_by_key(|x| core::cmp::Reverse((x.0.q, x.0.t, x.0.a)));
        }
        for (i, (m, c)) in terms.into_iter().enumerate() {
            let neg = c.is_negative();
            match (i, neg) {
                (0, true) => out.push('-'),
                (0, false) => {}
                (_, true) => out.push_str(" - "),
                (_, false) => out.push_str(" + "),
            }
            let abs = c.abs();
            let mono = render_mono(m, names, style);
            if mono.is_empty() {
                let _ = write!(out, "{abs}");
            } else if abs.is_one() {
                out.push_str(&mono);
            } else if style == Style::Text {
                let _ = write!(out, "{abs}*{mono}");
            } else {
                let _ = write!(out, "{abs}{mono}");
            }
        }
        out
    }

    pub fn to_latex(&self) -> String {
        self.render(&AQT, Style::Latex, TermOrder::Canonical)
    }

    pub(crate) fn short_text(&self, max: usize) -> String {
        let mut s = self.render(&AQT, Style::Text, TermOrder::Canonical);
        if s.len() > max {
            let mut cut = max;
            while !s.is_char_boundary(cut) {
                cut -= 1;
            }
            s.truncate(cut);
            s.push_str(" ...");
        }
        s
    }
}

fn render_mono(m: &Mono, names: &VarNames, style: Style) -> String {
    let mut s = String::new();
    for (name, e) in [(names.a, m.a), (names.q, m.q), (names.t, m.t)] {
        if e == 0 {
            continue;
        }
        if style == Style::Text && !s.is_empty() {
            s.push('*');
        }
        s.push_str(name);
        if e != 1 {
            match style {
                Style::Text => {
                    let _ = write!(s, "^{e}");
                }
                Style::Latex => {
                    let _ = write!(s, "^{{{e}}}");
                }
            }
        }
    }
    s
}

impl fmt::Display for LaurentPoly3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(&AQT, Style::Text, TermOrder::Canonical))
    }
}

impl<'a> Add<&'a LaurentPoly3> for &'a LaurentPoly3 {
    type Output = LaurentPoly3;
    fn add(self, o: &LaurentPoly3) -> LaurentPoly3 {
        let mut p = self.clone();
        p += o;
        p
    }
}

impl<'a> Sub<&'a LaurentPoly3> for &'a LaurentPoly3 {
    type Output = LaurentPoly3;
    fn sub(self, o: &LaurentPoly3) -> LaurentPoly3 {
        let mut p = self.clone();
        p -= o;
        p
    }
}

impl<'a> Mul<&'a LaurentPoly3> for &'a LaurentPoly3 {
    type Output = LaurentPoly3;
    fn mul(self, o: &LaurentPoly3) -> LaurentPoly3 {
        let (small, big) = if self.len() <= o.len() { (self, o) } else { (o, self) };
        let mut p = LaurentPoly3::zero();
        for (m, c) in &small.terms {
            p.add_scaled(big, c, *m);
        }
        p
    }
}

impl Neg for &LaurentPoly3 {
    type Output = LaurentPoly3;
    fn neg(self) -> LaurentPoly3 {
        LaurentPoly3 { terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect() }
    }
}

impl AddAssign<&LaurentPoly3> for LaurentPoly3 {
    fn add_assign(&mut self, o: &LaurentPoly3) {
        for (m, c) in &o.terms {
            self.add_term(*m, c.clone());
        }
    }
}

impl SubAssign<&LaurentPoly3> for LaurentPoly3 {
    fn sub_assign(&mut self, o: &LaurentPoly3) {
        for (m, c) in &o.terms {
            self.add_term(*m, -c);
        }
    }
}

macro_rules! owned_ops {
    ($($tr:ident $f:ident),*) => {$(
        impl $tr for LaurentPoly3 {
            type Output = LaurentPoly3;
            fn $f(self, o: LaurentPoly3) -> LaurentPoly3 { (&self).$f(&o) }
        }
        impl $tr<&LaurentPoly3> for LaurentPoly3 {
            type Output = LaurentPoly3;
            fn $f(self, o: &LaurentPoly3) -> LaurentPoly3 { (&self).$f(o) }
        }
    )*};
}
owned_ops!(Add add, Sub sub, Mul mul);

impl Neg for LaurentPoly3 {
    type Output = LaurentPoly3;
    fn neg(self) -> LaurentPoly3 {
        -&self
    }
}

/// A series in q known modulo `q^order`; `order == None` means exact.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QSeries {
    poly: LaurentPoly3,
    order: Option<i32>,
}

impl QSeries {
    pub fn new(poly: LaurentPoly3, order: i32) -> Self {
        QSeries { poly: poly.truncate_q(order), order: Some(order) }
    }

    pub fn exact(poly: LaurentPoly3) -> Self {
        QSeries { poly, order: None }
    }

    pub fn poly(&self) -> &LaurentPoly3 {
        &self.poly
    }

    pub fn into_poly(self) -> LaurentPoly3 {
        self.poly
    }

    pub fn order(&self) -> Option<i32> {
        self.order
    }

    pub fn truncate(&self, order: i32) -> QSeries {
        let order = self.order.map_or(order, |o| o.min(order));
        QSeries::new(self.poly.clone(), order)
    }

    pub fn add(&self, o: &QSeries) -> QSeries {
        let order = min_order(self.order, o.order);
        let p = &self.poly + &o.poly;
        match order {
            Some(ord) => QSeries::new(p, ord),
            None => QSeries::exact(p),
        }
    }

    pub fn mul(&self, o: &QSeries) -> QSeries {
        let low = |p: &LaurentPoly3| p.exponent_range(Var::Q).map(|r| r.0);
        let a = match (self.order, low(&o.poly)) {
            (Some(ord), Some(v)) => Some(ord + v),
            _ => None,
        };
        let b = match (o.order, low(&self.poly)) {
            (Some(ord), Some(v)) => Some(ord + v),
            _ => None,
        };
        let order = min_order(a, b);
        let p = &self.poly * &o.poly;
        match order {
            Some(ord) => QSeries::new(p, ord),
            None => QSeries::exact(p),
        }
    }

    /// True when the two series agree up to the smaller known order.
    pub fn agrees_with(&self, o: &QSeries) -> bool {
        match min_order(self.order, o.order) {
            Some(ord) => self.poly.truncate_q(ord) == o.poly.truncate_q(ord),
            None => self.poly == o.poly,
        }
    }
}

fn min_order(a: Option<i32>, b: Option<i32>) -> Option<i32> {
    match (a, b) {
        (Some(x), Some(y)) => Some(x.min(y)),
        (x, None) => x,
        (None, y) => y,
    }
}
