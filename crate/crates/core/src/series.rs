//! Hilbert scheme generating series and the superpolynomial.
//!
//! The raw series is `Σ q^{2l} a^{2m} t^{m² + 2N(j ⊃ i)}` over nested pairs
//! of ideals with `#(Γ \ j) = l` and `m = #(j \ i)`. It is a rational
//! function of `q` with denominator `1 - q²`, and
//! `spp = q^{-μ} (1 - q²) · raw` is a Laurent polynomial.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_bigint::BigInt;

use crate::cells::{beta, cell_dim, cell_dim_nested};
use crate::error::{Error, Result};
use crate::module::{visit_ideals_with_b0, GammaModule};
use crate::poly::{LaurentPoly3, Mono, QSeries};
use crate::semigroup::Semigroup;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Method {
    /// Direct sum over nested pairs of ideals.
    Cells,
    /// Sum over ideals with one `(1 + a² t^{2β-1})` factor per generator.
    Beta,
    /// Sum over compactified Jacobian diagrams.
    Diagrams,
    /// Partition sums at torus fixed points.
    Localization,
    Closed,
}

impl Method {
    pub const ALL: [Method; 5] =
        [Method::Cells, Method::Beta, Method::Diagrams, Method::Localization, Method::Closed];

    pub fn name(self) -> &'static str {
        match self {
            Method::Cells => "cells",
            Method::Beta => "beta",
            Method::Diagrams => "diagrams",
            Method::Localization => "localization",
            Method::Closed => "closed",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = Error;
    fn from_str(s: &str) -> Result<Method> {
        Method::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown method {s:?}")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Superpoly {
    pub n: i64,
    pub k: i64,
    /// `spp = (q^{-1} - q) · uspp`, a Laurent polynomial.
    pub spp: LaurentPoly3,
    /// Numerator of `uspp = uspp_num / (1 - q²)`.
    pub uspp_num: LaurentPoly3,
    pub method: Method,
    /// Colength bound of the enumeration, if one was used.
    pub truncation: Option<i64>,
}

impl Superpoly {
    pub fn new(sg: &Semigroup, spp: LaurentPoly3, method: Method, truncation: Option<i64>) -> Self {
        let uspp_num = spp.mul_mono(Mono::new(0, 1, 0));
        Superpoly { n: sg.n(), k: sg.k(), spp, uspp_num, method, truncation }
    }

    pub fn delta(&self) -> i64 {
        (self.n - 1) * (self.k - 1) / 2
    }

    pub fn mu(&self) -> i64 {
        2 * self.delta()
    }

    pub fn spp_min(&self) -> LaurentPoly3 {
        self.spp.a_zero()
    }

    /// `a^μ spp / (1 + a² t)`, the reduced normalization.
    pub fn reduced(&self) -> Result<LaurentPoly3> {
        let p = self.spp.divide_exact(&one_plus_a2t())?;
        Ok(p.mul_mono(Mono::new(self.mu() as i32, 0, 0)))
    }

    /// HOMFLY specialization `t = -1` of `spp`.
    pub fn homfly(&self) -> LaurentPoly3 {
        self.spp.at_t_minus_one()
    }
}

pub(crate) fn one_plus_a2t() -> LaurentPoly3 {
    LaurentPoly3::from_terms([(Mono::ONE, 1), (Mono::new(2, 0, 1), 1)])
}

/// `1 - q²`.
pub(crate) fn one_minus_q2() -> LaurentPoly3 {
    LaurentPoly3::from_terms([(Mono::ONE, 1), (Mono::new(0, 2, 0), -1)])
}

/// Default colength bound `2δ + n + k`.
pub fn truncation_bound(sg: &Semigroup) -> i64 {
    2 * sg.delta() + sg.n() + sg.k()
}

/// Counts of ideals by `(colength, N, sorted β list)`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BetaTally {
    counts: BTreeMap<(i64, i64, Vec<u8>), u64>,
}

impl BetaTally {
    pub fn add_ideal(&mut self, j: &GammaModule<'_>, colength: i64) -> Result<()> {
        let n_dim = cell_dim(j)?;
        let mut bs: Vec<u8> = j.minimal_generators().into_iter().map(|g| beta(j, g) as u8).collect();
        bs.sort_unstable();
        *self.counts.entry((colength, n_dim, bs)).or_insert(0) += 1;
        Ok(())
    }

    pub fn merge(&mut self, o: BetaTally) {
        for (key, c) in o.counts {
            *self.counts.entry(key).or_insert(0) += c;
        }
    }

    pub fn ideals(&self) -> u64 {
        self.counts.values().sum()
    }

    /// `Σ q^{2l} t^{2N} Π (1 + a² t^{2β-1})`.
    pub fn to_poly(&self) -> LaurentPoly3 {
        let mut out = LaurentPoly3::zero();
        let mut cache: BTreeMap<&[u8], LaurentPoly3> = BTreeMap::new();
        for ((l, nd, bs), &c) in &self.counts {
            let prod = cache.entry(bs.as_slice()).or_insert_with(|| {
                let mut p = LaurentPoly3::one();
                for &b in bs.iter() {
                    let f = LaurentPoly3::from_terms([(Mono::ONE, 1), (Mono::new(2, 0, 2 * b as i32 - 1), 1)]);
                    p = &p * &f;
                }
                p
            });
            let m = Mono::new(0, 2 * *l as i32, 2 * *nd as i32);
            out += &prod.mul_mono(m).scale(&BigInt::from(c));
        }
        out
    }
}

/// Counts of nested pairs by monomial `q^{2l} a^{2m} t^{m² + 2N}`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct NestedTally {
    counts: BTreeMap<Mono, u64>,
}

impl NestedTally {
    pub fn add_ideal(&mut self, j: &GammaModule<'_>, colength: i64) -> Result<()> {
        for p in j.nested_pairs() {
            let m = p.m() as i32;
            let d = cell_dim_nested(&p)?;
            let key = Mono::new(2 * m, 2 * colength as i32, m * m + 2 * d as i32);
            *self.counts.entry(key).or_insert(0) += 1;
        }
        Ok(())
    }

    pub fn merge(&mut self, o: NestedTally) {
        for (key, c) in o.counts {
            *self.counts.entry(key).or_insert(0) += c;
        }
    }

    pub fn to_poly(&self) -> LaurentPoly3 {
        LaurentPoly3::from_terms(self.counts.iter().map(|(m, &c)| (*m, BigInt::from(c))))
    }
}

fn visit_modules<F>(sg: &Semigroup, max_colength: i64, b0: Option<i64>, mut f: F) -> Result<()>
where
    F: FnMut(&GammaModule<'_>, i64) -> Result<()>,
{
    let mut err = None;
    let mut go = |b: i64| {
        visit_ideals_with_b0(sg, max_colength, b, |mins, l| {
            if err.is_none() {
                let j = GammaModule::from_mins_unchecked(sg, mins.to_vec());
                if let Err(e) = f(&j, l) {
                    err = Some(e);
                }
            }
        })
    };
    match b0 {
        Some(b) => go(b),
        None => (0..=max_colength).for_each(&mut go),
    }
    err.map_or(Ok(()), Err)
}

/// Tally the ideals of colength `<= max_colength`, optionally only those
/// with leading offset `b0` (for splitting work across threads).
pub fn beta_tally(sg: &Semigroup, max_colength: i64, b0: Option<i64>) -> Result<BetaTally> {
    let mut t = BetaTally::default();
    visit_modules(sg, max_colength, b0, |j, l| t.add_ideal(j, l))?;
    Ok(t)
}

pub fn nested_tally(sg: &Semigroup, max_colength: i64, b0: Option<i64>) -> Result<NestedTally> {
    let mut t = NestedTally::default();
    visit_modules(sg, max_colength, b0, |j, l| t.add_ideal(j, l))?;
    Ok(t)
}

/// The raw series over nested pairs, trusted modulo `q^{2L+2}`.
pub fn raw_hilbert_sum(n: i64, k: i64, max_colength: i64) -> Result<QSeries> {
    let sg = Semigroup::new(n, k)?;
    let p = nested_tally(&sg, max_colength, None)?.to_poly();
    Ok(QSeries::new(p, 2 * max_colength as i32 + 2))
}

/// The raw series from β products, trusted modulo `q^{2L+2}`.
pub fn raw_hilbert_sum_beta(n: i64, k: i64, max_colength: i64) -> Result<QSeries> {
    let sg = Semigroup::new(n, k)?;
    let p = beta_tally(&sg, max_colength, None)?.to_poly();
    Ok(QSeries::new(p, 2 * max_colength as i32 + 2))
}

/// Compare the nested sum with the β product ideal by ideal and report the
/// first ideal where they differ.
pub fn calibrate_beta(n: i64, k: i64, max_colength: i64) -> Result<()> {
    let sg = Semigroup::new(n, k)?;
    visit_modules(&sg, max_colength, None, |j, l| {
        let mut a = NestedTally::default();
        a.add_ideal(j, l)?;
        let mut b = BetaTally::default();
        b.add_ideal(j, l)?;
        if a.to_poly() != b.to_poly() {
            return Err(Error::Mismatch {
                what: String::from("beta calibration"),
                detail: format!("ideal with class minima {:?}", j.mins()),
            });
        }
        Ok(())
    })
}

/// `spp = q^{-μ} (1 - q²) raw`, checking that everything above `q^{4δ}`
/// cancels below the truncation order.
pub fn finish(sg: &Semigroup, raw: &LaurentPoly3, max_colength: i64, method: Method) -> Result<Superpoly> {
    let order = 2 * max_colength as i32 + 2;
    let u = (&one_minus_q2() * raw).truncate_q(order);
    let top = 4 * sg.delta() as i32;
    if order <= top + 2 {
        return Err(Error::InvalidArgument(alloc::format!(
            "max colength {max_colength} is too small to close the series (need > {})",
            top / 2
        )));
    }
    if let Some((m, _)) = u.terms().find(|(m, _)| m.q > top) {
        return Err(Error::TailNotCancelled { e_a: m.a, e_q: m.q, e_t: m.t });
    }
    let spp = u.mul_mono(Mono::new(0, -(sg.mu() as i32), 0));
    Ok(Superpoly::new(sg, spp, method, Some(max_colength)))
}

/// The superpolynomial from the direct nested-pair enumeration.
pub fn superpoly(n: i64, k: i64) -> Result<Superpoly> {
    superpoly_with(n, k, Method::Cells)
}

pub fn superpoly_with(n: i64, k: i64, method: Method) -> Result<Superpoly> {
    let sg = Semigroup::new(n, k)?;
    let l = truncation_bound(&sg);
    match method {
        Method::Cells => finish(&sg, &nested_tally(&sg, l, None)?.to_poly(), l, method),
        Method::Beta => finish(&sg, &beta_tally(&sg, l, None)?.to_poly(), l, method),
        Method::Diagrams => {
            let p = crate::appendix::spp_full_diagrams(&sg);
            let spp = p.mul_mono(Mono::new(0, -(sg.mu() as i32), 0));
            Ok(Superpoly::new(&sg, spp, method, None))
        }
        Method::Localization => {
            let spp = crate::localization::spp_localization(&sg)?;
            Ok(Superpoly::new(&sg, spp, method, None))
        }
        Method::Closed => {
            let spp = crate::closed::closed_form(&sg)?;
            Ok(Superpoly::new(&sg, spp, method, None))
        }
    }
}

/// The `a = 0` part of the superpolynomial.
pub fn spp_min(n: i64, k: i64) -> Result<LaurentPoly3> {
    Ok(superpoly(n, k)?.spp_min())
}

/// `Π_{i=1}^{n} (1 + a² q^{2i-2} t^{2i-1}) / (1 - q^{2i} t^{2i-2})` modulo
/// `q^order`.
pub fn stable_series(n: i64, order: i32) -> QSeries {
    let mut acc = QSeries::new(LaurentPoly3::one(), order);
    for i in 1..=n as i32 {
        let num = LaurentPoly3::from_terms([(Mono::ONE, 1), (Mono::new(2, 2 * i - 2, 2 * i - 1), 1)]);
        let step = Mono::new(0, 2 * i, 2 * i - 2);
        let geo = LaurentPoly3::from_terms((0..=order / (2 * i)).map(|j| (step.pow(j), 1)));
        acc = acc.mul(&QSeries::new(&num * &geo, order));
    }
    acc
}
