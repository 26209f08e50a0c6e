//! Cell dimensions of the Hilbert scheme strata and of compactified
//! Jacobian cells.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::module::{GammaModule, NestedPair};
use crate::partition::Partition;

/// `N(j)`, the dimension of the affine cell indexed by the ideal `j`.
pub fn cell_dim(j: &GammaModule<'_>) -> Result<i64> {
    let gens = j.minimal_generators();
    let syz = j.syzygies_cyclic();
    let v = gens.iter().map(|&x| j.count_gt_not_in(x)).sum::<i64>()
        - syz.iter().map(|&s| j.count_gt_not_in(s)).sum::<i64>();
    if v < 0 {
        return Err(Error::NegativeDimension { value: v });
    }
    Ok(v)
}

/// `N(j ⊃ i)` for a nested pair. Syzygies are those of the big ideal.
pub fn cell_dim_nested(p: &NestedPair<'_>) -> Result<i64> {
    let (j, i) = (&p.big, &p.small);
    let mut v = 0;
    for x in j.minimal_generators() {
        v += if p.removed.contains(&x) { j.count_gt_not_in(x) } else { i.count_gt_not_in(x) };
    }
    for s in j.syzygies_cyclic() {
        v -= i.count_gt_not_in(s);
    }
    if v < 0 {
        return Err(Error::NegativeDimension { value: v });
    }
    Ok(v)
}

/// Number of `n`-generators of `j` in the window `(γ - k, γ]`.
pub fn beta(j: &GammaModule<'_>, gamma: i64) -> i64 {
    let k = j.semigroup().k();
    j.mins().iter().filter(|&&m| gamma - k < m && m <= gamma).count() as i64
}

/// β of every minimal generator, in ascending generator order.
pub fn betas(j: &GammaModule<'_>) -> Vec<i64> {
    j.minimal_generators().into_iter().map(|g| beta(j, g)).collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CellData {
    pub n_dim: i64,
    pub betas: Vec<i64>,
}

pub fn cell_data(j: &GammaModule<'_>) -> Result<CellData> {
    Ok(CellData { n_dim: cell_dim(j)?, betas: betas(j) })
}

/// Dimension of the compactified Jacobian cell of a 0-normalized
/// semimodule: `Σ_j #([a_j, a_j + k) \ Δ)`.
pub fn jacobian_cell_dim(delta: &GammaModule<'_>) -> i64 {
    window_gaps(delta).iter().sum()
}

/// `#([a, a + k) \ Δ)` for each `n`-generator `a`, ascending in `a`.
pub fn window_gaps(delta: &GammaModule<'_>) -> Vec<i64> {
    let k = delta.semigroup().k();
    delta
        .n_generators()
        .into_iter()
        .map(|a| (a..a + k).filter(|&y| !delta.contains(y)).count() as i64)
        .collect()
}

/// `D(Δ)`: boxes `(x, y)`, `x, y >= 1`, whose label `kn - kx - ny` lies in
/// `Δ \ Γ`. Column `x` has height equal to the number of such `y`; the
/// heights are the parts.
pub fn diagram_of(delta: &GammaModule<'_>) -> Partition {
    let sg = delta.semigroup();
    let (n, k) = (sg.n(), sg.k());
    let mut cols = Vec::new();
    for x in 1..n {
        let h = (1..=k)
            .filter(|&y| {
                let f = k * n - k * x - n * y;
                f > 0 && delta.contains(f) && !sg.contains(f)
            })
            .count();
        if h == 0 {
            break;
        }
        cols.push(h);
    }
    Partition::new(cols).expect("staircase columns decrease")
}

/// `h⁺_x(D) = #{c : a(c)/(l(c)+1) <= x < (a(c)+1)/l(c)}` at `x = num/den`,
/// the upper bound being infinite when `l(c) = 0`.
pub fn h_plus(d: &Partition, num: i64, den: i64) -> i64 {
    assert!(num > 0 && den > 0);
    d.cells()
        .iter()
        .filter(|c| {
            let (a, l) = (c.arm as i64, c.leg as i64);
            a * den <= num * (l + 1) && (l == 0 || num * l < (a + 1) * den)
        })
        .count() as i64
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::module::enumerate_normalized_semimodules;
    use crate::semigroup::Semigroup;
    use alloc::vec;

    #[test]
    fn trefoil_cells() {
        let g = Semigroup::new(2, 3).unwrap();
        assert_eq!(cell_dim(&GammaModule::whole(&g)).unwrap(), 0);
        let j = GammaModule::generated_by(&g, &[2]).unwrap();
        assert_eq!(cell_dim(&j).unwrap(), 1);
        assert_eq!(betas(&j), vec![1]);
        let j = GammaModule::generated_by(&g, &[3, 4]).unwrap();
        assert_eq!(cell_dim(&j).unwrap(), 0);
        let j = GammaModule::generated_by(&g, &[2, 3]).unwrap();
        assert_eq!(betas(&j), vec![1, 2]);
        assert_eq!(betas(&GammaModule::whole(&g)), vec![1]);
    }

    #[test]
    fn nested_with_nothing_removed() {
        let g = Semigroup::new(3, 5).unwrap();
        let j = GammaModule::generated_by(&g, &[6, 8, 10]).unwrap();
        for p in j.nested_pairs() {
            let d = cell_dim_nested(&p).unwrap();
            if p.removed.is_empty() {
                assert_eq!(d, cell_dim(&j).unwrap());
            }
        }
        let g = Semigroup::new(2, 3).unwrap();
        let p = NestedPair::new(GammaModule::whole(&g), vec![0]).unwrap();
        assert_eq!(cell_dim_nested(&p).unwrap(), 0);
    }

    #[test]
    fn jacobian_dims() {
        let g = Semigroup::new(2, 3).unwrap();
        assert_eq!(jacobian_cell_dim(&GammaModule::naturals(&g)), 0);
        assert_eq!(jacobian_cell_dim(&GammaModule::whole(&g)), 1);
        let g = Semigroup::new(4, 7).unwrap();
        assert_eq!(jacobian_cell_dim(&GammaModule::whole(&g)), g.delta());
        assert!(diagram_of(&GammaModule::whole(&g)).is_empty());
        assert_eq!(diagram_of(&GammaModule::naturals(&g)).size() as i64, g.delta());
    }

    #[test]
    fn example_diagram_five_six() {
        let g = Semigroup::new(5, 6).unwrap();
        let d = GammaModule::from_mins(&g, vec![0, 1, 2, 8, 9]).unwrap();
        let lam = diagram_of(&d);
        assert_eq!(lam.parts(), &[3, 2, 2, 1]);
        assert_eq!(h_plus(&lam, 6, 5), 4);
    }

    #[test]
    fn h_plus_small() {
        assert_eq!(h_plus(&Partition::empty(), 3, 2), 0);
        assert_eq!(h_plus(&Partition::new(vec![1]).unwrap(), 2, 3), 1);
    }

    #[test]
    fn piontkowski_matches_h_plus() {
        for (n, k) in [(2, 3), (3, 4), (3, 5), (4, 5), (2, 9), (5, 7)] {
            let g = Semigroup::new(n, k).unwrap();
            for d in enumerate_normalized_semimodules(&g) {
                assert_eq!(jacobian_cell_dim(&d), g.delta() - h_plus(&diagram_of(&d), k, n));
            }
        }
    }
}
