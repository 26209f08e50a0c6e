//! Superpolynomial computation with the ideal enumeration split across
//! threads by the leading class offset.

use rayon::prelude::*;
use torus_spp::series::{beta_tally, finish, nested_tally, superpoly_with, truncation_bound, BetaTally, NestedTally};
use torus_spp::{Method, Result, Semigroup, Superpoly};

pub fn superpoly(n: i64, k: i64, method: Method, truncation: Option<i64>) -> Result<Superpoly> {
    let sg = Semigroup::new(n, k)?;
    let l = truncation.unwrap_or_else(|| truncation_bound(&sg));
    match method {
        Method::Beta => {
            let t = (0..=l)
                .into_par_iter()
                .map(|b0| beta_tally(&sg, l, Some(b0)))
                .try_reduce(BetaTally::default, |mut a, b| {
                    a.merge(b);
                    Ok(a)
                })?;
            finish(&sg, &t.to_poly(), l, method)
        }
        Method::Cells => {
            let t = (0..=l)
                .into_par_iter()
                .map(|b0| nested_tally(&sg, l, Some(b0)))
                .try_reduce(NestedTally::default, |mut a, b| {
                    a.merge(b);
                    Ok(a)
                })?;
            finish(&sg, &t.to_poly(), l, method)
        }
        _ => superpoly_with(n, k, method),
    }
}
