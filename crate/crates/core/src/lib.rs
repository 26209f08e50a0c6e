//! Exact superpolynomials of torus knots `T(n,k)`.
//!
//! The main computation enumerates ideals of the numerical semigroup
//! `Γ = <n,k>`, assigns each nested pair of ideals its affine cell dimension
//! and sums the resulting weights. Independent routes (β products,
//! compactified Jacobian diagrams, partition sums at torus fixed points and
//! closed forms for `n = 2, 3`) are provided so results can be cross-checked.
//!
//! The crate is `no_std` and only needs `alloc`.
#![no_std]

extern crate alloc;

pub mod appendix;
pub mod cells;
pub mod checks;
pub mod closed;
mod cyclotomic;
pub mod error;
pub mod gdata;
pub mod localization;
pub mod module;
pub mod partition;
pub mod poly;
pub mod ratfunc;
pub mod semigroup;
pub mod series;

pub use error::{Error, Result};
pub use module::{GammaModule, NestedPair};
pub use partition::Partition;
pub use poly::{LaurentPoly3, Mono, QSeries};
pub use ratfunc::RatFunc2;
pub use semigroup::Semigroup;
pub use series::{Method, Superpoly};

/// Version tag written into cache files.
pub const ENGINE_VERSION: &str = env!("CARGO_PKG_VERSION");
