//! Γ-stable subsets of the integers: ideals of Γ and 0-normalized
//! semimodules.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::error::{Error, Result};
use crate::semigroup::Semigroup;

/// A Γ-stable set `{x : x >= mins[x mod n]}`.
#[derive(Clone, Debug)]
pub struct GammaModule<'a> {
    sg: &'a Semigroup,
    mins: Vec<i64>,
}

impl PartialEq for GammaModule<'_> {
    fn eq(&self, o: &Self) -> bool {
        self.mins == o.mins
    }
}

impl Eq for GammaModule<'_> {}

impl PartialOrd for GammaModule<'_> {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

impl Ord for GammaModule<'_> {
    fn cmp(&self, o: &Self) -> Ordering {
        self.mins.cmp(&o.mins)
    }
}

/// A generator with its staircase coordinates `gamma = a k + b n`, `0 <= a < n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct StairGen {
    pub gamma: i64,
    pub a: i64,
    pub b: i64,
}

impl<'a> GammaModule<'a> {
    pub fn from_mins(sg: &'a Semigroup, mins: Vec<i64>) -> Result<Self> {
        let n = sg.n();
        if mins.len() != n as usize {
            return Err(Error::InvalidModule(format!("expected {n} class minima")));
        }
        for (r, &m) in mins.iter().enumerate() {
            if m.rem_euclid(n) != r as i64 {
                return Err(Error::InvalidModule(format!("mins[{r}] = {m} is in the wrong class")));
            }
        }
        let j = GammaModule { sg, mins };
        j.check_closure()?;
        Ok(j)
    }

    pub(crate) fn from_mins_unchecked(sg: &'a Semigroup, mins: Vec<i64>) -> Self {
        GammaModule { sg, mins }
    }

    /// The module generated by `gens`.
    pub fn generated_by(sg: &'a Semigroup, gens: &[i64]) -> Result<Self> {
        if gens.is_empty() {
            return Err(Error::InvalidModule("no generators".into()));
        }
        let mins = (0..sg.n())
            .map(|r| gens.iter().map(|&g| g + sg.class_min(r - g)).min().unwrap())
            .collect();
        Ok(GammaModule { sg, mins })
    }

    /// Γ itself.
    pub fn whole(sg: &'a Semigroup) -> Self {
        GammaModule { sg, mins: sg.class_minima().to_vec() }
    }

    /// The nonnegative integers.
    pub fn naturals(sg: &'a Semigroup) -> Self {
        GammaModule { sg, mins: (0..sg.n()).collect() }
    }

    pub fn semigroup(&self) -> &'a Semigroup {
        self.sg
    }

    pub fn mins(&self) -> &[i64] {
        &self.mins
    }

    pub fn min(&self, r: i64) -> i64 {
        self.mins[r.rem_euclid(self.sg.n()) as usize]
    }

    pub fn contains(&self, x: i64) -> bool {
        x >= self.min(x)
    }

    /// The +k closure condition `mins[(r+k) mod n] <= mins[r] + k`.
    pub fn check_closure(&self) -> Result<()> {
        let k = self.sg.k();
        for (r, &m) in self.mins.iter().enumerate() {
            if self.min(r as i64 + k) > m + k {
                return Err(Error::InvalidModule(format!("{} + k is missing", m)));
            }
        }
        Ok(())
    }

    pub fn is_ideal(&self) -> bool {
        self.mins.iter().enumerate().all(|(r, &m)| m >= self.sg.class_min(r as i64))
    }

    pub fn is_normalized(&self) -> bool {
        self.mins.iter().min() == Some(&0)
    }

    /// `#(Γ \ j)` for an ideal.
    pub fn colength(&self) -> Option<i64> {
        if !self.is_ideal() {
            return None;
        }
        let n = self.sg.n();
        Some(self.mins.iter().zip(self.sg.class_minima()).map(|(m, g)| (m - g) / n).sum())
    }

    /// The `n`-generators, i.e. the class minima, ascending.
    pub fn n_generators(&self) -> Vec<i64> {
        let mut v = self.mins.clone();
        v.sort_unstable();
        v
    }

    /// Elements `x` with neither `x - n` nor `x - k` in the module, ascending.
    pub fn minimal_generators(&self) -> Vec<i64> {
        let k = self.sg.k();
        let mut v: Vec<i64> = self.mins.iter().copied().filter(|&m| !self.contains(m - k)).collect();
        v.sort_unstable();
        v
    }

    /// Generators in the order met when climbing the staircase, starting from
    /// the smallest `a`.
    pub fn staircase_order(&self) -> Vec<StairGen> {
        let (n, k) = (self.sg.n(), self.sg.k());
        let ik = self.sg.k_inverse();
        let mut v: Vec<StairGen> = self
            .minimal_generators()
            .into_iter()
            .map(|gamma| {
                let a = (gamma * ik).rem_euclid(n);
                StairGen { gamma, a, b: (gamma - a * k).div_euclid(n) }
            })
            .collect();
        v.sort_by_key(|g| g.a);
        v
    }

    /// Minimal generators of the set of elements with at least two
    /// expressions `x = γ + s`, `γ` a minimal generator, `s ∈ Γ`.
    pub fn syzygy_degrees(&self) -> Vec<i64> {
        let gens = self.minimal_generators();
        if gens.len() < 2 {
            return Vec::new();
        }
        let n = self.sg.n();
        let mins = (0..n)
            .map(|r| {
                let mut firsts: Vec<i64> = gens.iter().map(|&g| g + self.sg.class_min(r - g)).collect();
                firsts.sort_unstable();
                firsts[1]
            })
            .collect();
        GammaModule { sg: self.sg, mins }.minimal_generators()
    }

    /// Syzygy degrees `a_{i+1} k + b_i n` read off the staircase, with
    /// `a_{r+1} = a_1 + n`.
    pub fn syzygies_cyclic(&self) -> Vec<i64> {
        let st = self.staircase_order();
        let r = st.len();
        if r < 2 {
            return Vec::new();
        }
        let (n, k) = (self.sg.n(), self.sg.k());
        let mut v: Vec<i64> = (0..r)
            .map(|i| {
                let next = if i + 1 == r { st[0].a + n } else { st[i + 1].a };
                next * k + st[i].b * n
            })
            .collect();
        v.sort_unstable();
        v
    }

    /// `#(Γ_{>x} \ self)`.
    pub fn count_gt_not_in(&self, x: i64) -> i64 {
        let n = self.sg.n();
        let mut total = 0;
        for r in 0..n {
            let lo = (x + 1).max(self.sg.class_min(r));
            let hi = self.mins[r as usize];
            if hi <= lo {
                continue;
            }
            let first = lo + (r - lo).rem_euclid(n);
            if first < hi {
                total += (hi - 1 - first) / n + 1;
            }
        }
        total
    }

    /// The set with the listed minimal generators deleted.
    pub fn remove_generators(&self, removed: &[i64]) -> Result<Self> {
        let gens = self.minimal_generators();
        let mut mins = self.mins.clone();
        let n = self.sg.n();
        for &x in removed {
            if !gens.contains(&x) {
                return Err(Error::InvalidModule(format!("{x} is not a minimal generator")));
            }
            mins[x.rem_euclid(n) as usize] = x + n;
        }
        Ok(GammaModule { sg: self.sg, mins })
    }

    /// Translate by `s`.
    pub fn shift(&self, s: i64) -> Self {
        let n = self.sg.n();
        let mut mins = alloc::vec![0; n as usize];
        for &m in &self.mins {
            mins[(m + s).rem_euclid(n) as usize] = m + s;
        }
        GammaModule { sg: self.sg, mins }
    }

    pub fn nested_pairs(&self) -> Vec<NestedPair<'a>> {
        let gens = self.minimal_generators();
        let r = gens.len();
        (0u32..1 << r)
            .map(|mask| {
                let removed: Vec<i64> =
                    (0..r).filter(|i| mask >> i & 1 == 1).map(|i| gens[i]).collect();
                let small = self.remove_generators(&removed).expect("generators removable");
                NestedPair { big: self.clone(), removed, small }
            })
            .collect()
    }
}

/// `big ⊇ small` where `small` drops some minimal generators of `big`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NestedPair<'a> {
    pub big: GammaModule<'a>,
    pub removed: Vec<i64>,
    pub small: GammaModule<'a>,
}

impl<'a> NestedPair<'a> {
    pub fn new(big: GammaModule<'a>, removed: Vec<i64>) -> Result<Self> {
        let small = big.remove_generators(&removed)?;
        Ok(NestedPair { big, removed, small })
    }

    pub fn m(&self) -> usize {
        self.removed.len()
    }
}

/// Visit every ideal of colength `<= max_colength` whose class offset vector
/// starts with `b0` (see [`visit_ideals`]). Used to split the enumeration.
pub fn visit_ideals_with_b0<F>(sg: &Semigroup, max_colength: i64, b0: i64, mut f: F)
where
    F: FnMut(&[i64], i64),
{
    // mins[(A k) mod n] = A k + B_A n with B_0 >= B_1 >= ... >= B_{n-1} >= 0
    // and B_0 - B_{n-1} <= k.
    let n = sg.n() as usize;
    let k = sg.k();
    if b0 > max_colength || b0 < 0 {
        return;
    }
    let mut b = alloc::vec![0i64; n];
    let mut mins = alloc::vec![0i64; n];
    b[0] = b0;
    fn rec<F: FnMut(&[i64], i64)>(
        i: usize,
        rem: i64,
        b: &mut [i64],
        mins: &mut [i64],
        k: i64,
        f: &mut F,
    ) {
        let n = b.len();
        if i == n {
            for (a, &ba) in b.iter().enumerate() {
                let a = a as i64;
                mins[((a * k) % n as i64) as usize] = a * k + ba * n as i64;
            }
            let used: i64 = b.iter().sum();
            f(mins, used);
            return;
        }
        let hi = b[i - 1].min(rem);
        let lo = (b[0] - k).max(0);
        let mut v = lo;
        while v <= hi {
            b[i] = v;
            rec(i + 1, rem - v, b, mins, k, f);
            v += 1;
        }
    }
    rec(1, max_colength - b0, &mut b, &mut mins, k, &mut f);
}

/// Visit every ideal of colength `<= max_colength` as `(mins, colength)`.
pub fn visit_ideals<F>(sg: &Semigroup, max_colength: i64, mut f: F)
where
    F: FnMut(&[i64], i64),
{
    for b0 in 0..=max_colength {
        visit_ideals_with_b0(sg, max_colength, b0, &mut f);
    }
}

pub fn enumerate_ideals_by_colength(sg: &Semigroup, max_colength: i64) -> BTreeMap<i64, Vec<GammaModule<'_>>> {
    let mut out: BTreeMap<i64, Vec<GammaModule<'_>>> = BTreeMap::new();
    for l in 0..=max_colength {
        out.insert(l, Vec::new());
    }
    visit_ideals(sg, max_colength, |mins, l| {
        out.get_mut(&l).unwrap().push(GammaModule::from_mins_unchecked(sg, mins.to_vec()));
    });
    for v in out.values_mut() {
        v.sort();
    }
    out
}

/// All 0-normalized semimodules, sorted by their mins arrays.
pub fn enumerate_normalized_semimodules(sg: &Semigroup) -> Vec<GammaModule<'_>> {
    // mins[(A k) mod n] = A k - C_A n with 0 = C_0 <= C_1 <= ... and C_A <= A k / n.
    let n = sg.n();
    let k = sg.k();
    let mut out = Vec::new();
    let mut c = alloc::vec![0i64; n as usize];
    fn rec(a: usize, c: &mut [i64], n: i64, k: i64, out: &mut Vec<Vec<i64>>) {
        if a == c.len() {
            let mut mins = alloc::vec![0i64; n as usize];
            for (i, &ci) in c.iter().enumerate() {
                let i = i as i64;
                mins[((i * k) % n) as usize] = i * k - ci * n;
            }
            out.push(mins);
            return;
        }
        let hi = (a as i64 * k) / n;
        for v in c[a - 1]..=hi {
            c[a] = v;
            rec(a + 1, c, n, k, out);
        }
    }
    if n == 1 {
        out.push(alloc::vec![0]);
    } else {
        rec(1, &mut c, n, k, &mut out);
    }
    out.sort();
    out.into_iter().map(|mins| GammaModule::from_mins_unchecked(sg, mins)).collect()
}
