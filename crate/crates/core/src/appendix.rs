//! Compactified Jacobian side: sums over 0-normalized semimodules and their
//! diagrams, `(q,t)`-Catalan numbers and the hook formula for `(n, n+1)`.
//!
//! Boxes `(x, y)` of the rectangle carry the label `f(x, y) = kn - kx - ny`.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::cells::{diagram_of, h_plus, jacobian_cell_dim, window_gaps};
use crate::error::{Error, Result};
use crate::module::{enumerate_normalized_semimodules, GammaModule};
use crate::partition::Partition;
use crate::poly::{LaurentPoly3, Mono};
use crate::semigroup::Semigroup;
use crate::series::one_plus_a2t;

/// Corner labels of `D(Δ)` and the β statistic of each SE corner.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CornerData {
    pub diagram: Partition,
    /// SE corners (the addable cells), in column order.
    pub se: Vec<i64>,
    /// ES corners, one between each pair of consecutive SE corners.
    pub es: Vec<i64>,
    /// `β(P) = #{P' > P} - #{Q > P}` for each SE label `P`.
    pub betas: BTreeMap<i64, i64>,
}

pub fn corner_data(delta: &GammaModule<'_>) -> CornerData {
    let sg = delta.semigroup();
    corners_of(sg, diagram_of(delta))
}

fn corners_of(sg: &Semigroup, diagram: Partition) -> CornerData {
    let (n, k) = (sg.n(), sg.k());
    let f = |x: i64, y: i64| k * n - k * x - n * y;
    let mut h: Vec<i64> = diagram.parts().iter().map(|&p| p as i64).collect();
    h.push(0);
    let add: Vec<(i64, i64)> = (0..h.len())
        .filter(|&i| i == 0 || h[i] < h[i - 1])
        .map(|i| (i as i64 + 1, h[i] + 1))
        .collect();
    let se: Vec<i64> = add.iter().map(|&(x, y)| f(x, y)).collect();
    let es: Vec<i64> = add.windows(2).map(|w| f(w[1].0, w[0].1)).collect();
    let betas = se
        .iter()
        .map(|&p| {
            let above = se.iter().filter(|&&p2| p2 > p).count() as i64;
            let q_above = es.iter().filter(|&&q| q > p).count() as i64;
            (p, above - q_above)
        })
        .collect();
    CornerData { diagram, se, es, betas }
}

/// `q^{2|D| + 2h⁺} t^{2|D|}` with `h⁺` at `k/n`.
fn diagram_weight(sg: &Semigroup, d: &Partition) -> Mono {
    let s = d.size() as i32;
    let h = h_plus(d, sg.k(), sg.n()) as i32;
    Mono::new(0, 2 * s + 2 * h, 2 * s)
}

/// `Σ_D q^{2|D| + 2h⁺(D)} t^{2|D|}`, equal to `q^μ spp(a = 0)`.
pub fn spp_min_diagrams(sg: &Semigroup) -> LaurentPoly3 {
    LaurentPoly3::from_terms(
        enumerate_normalized_semimodules(sg)
            .iter()
            .map(|d| (diagram_weight(sg, &diagram_of(d)), 1)),
    )
}

/// Contribution of one diagram: its weight times `(1 + a² q^{-2β} t)` for
/// each SE corner with `β > 0`.
pub fn diagram_contribution(sg: &Semigroup, delta: &GammaModule<'_>) -> LaurentPoly3 {
    let c = corner_data(delta);
    let mut p = LaurentPoly3::monomial(1, diagram_weight(sg, &c.diagram));
    for &b in c.betas.values().filter(|&&b| b > 0) {
        p = &p * &LaurentPoly3::from_terms([(Mono::ONE, 1), (Mono::new(2, -2 * b as i32, 1), 1)]);
    }
    p
}

/// `(1 + a² t) Σ_D contribution(D)`, equal to `q^μ spp`.
pub fn spp_full_diagrams(sg: &Semigroup) -> LaurentPoly3 {
    let mut s = LaurentPoly3::zero();
    for d in enumerate_normalized_semimodules(sg) {
        s += &diagram_contribution(sg, &d);
    }
    &one_plus_a2t() * &s
}

/// `C^{(m)}_n(q,t) = Σ_D q^{h⁺_{k/n}(D)} t^{δ - |D|}` over semimodules of
/// `<n, mn+1>`. Returned with `q` and `t` in their usual slots.
pub fn qt_catalan(n: i64, m: i64) -> Result<LaurentPoly3> {
    if n == 1 {
        return Ok(LaurentPoly3::one());
    }
    if n < 1 || m < 1 {
        return Err(Error::InvalidArgument(alloc::format!("need n >= 1 and m >= 1, got n={n}, m={m}")));
    }
    let sg = Semigroup::new(n, m * n + 1)?;
    let delta = sg.delta();
    Ok(LaurentPoly3::from_terms(enumerate_normalized_semimodules(&sg).iter().map(|d| {
        let lam = diagram_of(d);
        let h = h_plus(&lam, sg.k(), sg.n());
        (Mono::new(0, h as i32, (delta - lam.size() as i64) as i32), 1)
    })))
}

/// Columns `g(a_i) = #([a_i, a_i + k) \ Δ)` sorted into a diagram.
pub fn g_map(delta: &GammaModule<'_>) -> Partition {
    Partition::from_unsorted(window_gaps(delta).into_iter().map(|g| g as usize).collect())
}

/// `b_i = n - 1 - i - g(a_i)` along the ascending `n`-generators.
pub fn bounce_b(delta: &GammaModule<'_>) -> Vec<i64> {
    let n = delta.semigroup().n();
    window_gaps(delta).into_iter().enumerate().map(|(i, g)| n - 1 - i as i64 - g).collect()
}

/// The hook formula for `(n, n+1)`:
/// `Σ_Δ q^{C(n,2) - |G|} t^{dinv(G)} Π_{b_i > b_{i+1}} (1 + a² q^{-b_i} t)`,
/// in the `(q, t, a)` of the Catalan side.
pub fn hook_formula(n: i64) -> Result<LaurentPoly3> {
    let sg = Semigroup::new(n, n + 1)?;
    let top = n * (n - 1) / 2;
    let mut s = LaurentPoly3::zero();
    for d in enumerate_normalized_semimodules(&sg) {
        let g = g_map(&d);
        let dinv = h_plus(&g, n + 1, n) as i32;
        let mut p = LaurentPoly3::monomial(1, Mono::new(0, (top - g.size() as i64) as i32, dinv));
        let b = bounce_b(&d);
        for w in b.windows(2).filter(|w| w[0] > w[1]) {
            p = &p * &LaurentPoly3::from_terms([(Mono::ONE, 1), (Mono::new(2, -(w[0] as i32), 1), 1)]);
        }
        s += &p;
    }
    Ok(s)
}

/// Translate a Catalan-side polynomial to `spp`:
/// `q -> q²`, `t -> q^{-2} t^{-2}`, `a² -> a² q² t³`, then multiply by
/// `(1 + a² t) t^μ`.
pub fn hook_to_spp(h: &LaurentPoly3, mu: i64) -> Result<LaurentPoly3> {
    let mut out = LaurentPoly3::zero();
    for (m, c) in h.terms() {
        if m.a % 2 != 0 {
            return Err(Error::InvalidArgument(alloc::string::String::from("odd power of a")));
        }
        let j = m.a / 2;
        let e = Mono::new(2 * j, 2 * m.q - 2 * m.t + 2 * j, -2 * m.t + 3 * j + mu as i32);
        out.add_term(e, c.clone());
    }
    Ok(&one_plus_a2t() * &out)
}

/// Check `β(a_i - n) = b_i` at every descent of `b`, and that the descents
/// are exactly the SE corners among the `a_i - n`. Returns the number of
/// semimodules checked.
pub fn check_betab_bridge(n: i64) -> Result<usize> {
    let sg = Semigroup::new(n, n + 1)?;
    let mods = enumerate_normalized_semimodules(&sg);
    for d in &mods {
        let c = corner_data(d);
        let b = bounce_b(d);
        let a = d.n_generators();
        for i in 0..(n as usize - 1) {
            let descent = b[i] > b[i + 1];
            let label = a[i] - n;
            let beta = c.betas.get(&label);
            if descent != beta.is_some() || (descent && beta != Some(&b[i])) {
                return Err(Error::Mismatch {
                    what: alloc::string::String::from("beta-b bridge"),
                    detail: alloc::format!("semimodule {:?}, index {i}", d.mins()),
                });
            }
        }
    }
    Ok(mods.len())
}

/// Compactified Jacobian cell dimension against `δ - h⁺` for one semigroup.
pub fn check_piontkowski(sg: &Semigroup) -> Result<()> {
    for d in enumerate_normalized_semimodules(sg) {
        let lhs = jacobian_cell_dim(&d);
        let rhs = sg.delta() - h_plus(&diagram_of(&d), sg.k(), sg.n());
        if lhs != rhs {
            return Err(Error::Mismatch {
                what: alloc::string::String::from("cell dimension"),
                detail: alloc::format!("semimodule {:?}: {lhs} vs {rhs}", d.mins()),
            });
        }
    }
    Ok(())
}
