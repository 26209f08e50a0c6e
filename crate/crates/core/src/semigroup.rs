use alloc::vec::Vec;

use num_integer::Integer;

use crate::error::{Error, Result};

/// The numerical semigroup `Γ = <n,k>`, stored with `n < k`.
///
/// Membership uses the minimal element of Γ in each residue class mod `n`:
/// `x ∈ Γ` iff `x >= class_min[x mod n]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Semigroup {
    n: i64,
    k: i64,
    swapped: bool,
    class_min: Vec<i64>,
}

impl Semigroup {
    pub fn new(n: i64, k: i64) -> Result<Semigroup> {
        if n < 2 || k < 2 || n == k {
            return Err(Error::Degenerate { n, k });
        }
        if n.gcd(&k) != 1 {
            return Err(Error::NotCoprime { n, k });
        }
        let (n, k, swapped) = if n < k { (n, k, false) } else { (k, n, true) };
        let mut class_min = alloc::vec![0; n as usize];
        for a in 0..n {
            class_min[((a * k) % n) as usize] = a * k;
        }
        Ok(Semigroup { n, k, swapped, class_min })
    }

    /// The smaller generator.
    pub fn n(&self) -> i64 {
        self.n
    }

    /// The larger generator.
    pub fn k(&self) -> i64 {
        self.k
    }

    /// Whether the constructor arguments arrived as `(k, n)`.
    pub fn swapped(&self) -> bool {
        self.swapped
    }

    pub fn conductor(&self) -> i64 {
        (self.n - 1) * (self.k - 1)
    }

    pub fn delta(&self) -> i64 {
        self.conductor() / 2
    }

    /// Milnor number, `2δ` for a unibranch singularity.
    pub fn mu(&self) -> i64 {
        self.conductor()
    }

    pub fn class_min(&self, r: i64) -> i64 {
        self.class_min[r.rem_euclid(self.n) as usize]
    }

    pub fn class_minima(&self) -> &[i64] {
        &self.class_min
    }

    pub fn contains(&self, x: i64) -> bool {
        x >= 0 && x >= self.class_min(x)
    }

    pub fn gaps(&self) -> Vec<i64> {
        (0..self.conductor()).filter(|&x| !self.contains(x)).collect()
    }

    /// `k^{-1} mod n`.
    pub fn k_inverse(&self) -> i64 {
        let e = self.k.extended_gcd(&self.n);
        e.x.rem_euclid(self.n)
    }
}
