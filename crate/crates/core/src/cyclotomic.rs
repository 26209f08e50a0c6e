use alloc::vec;
use alloc::vec::Vec;

/// Coefficients (constant term first) of the cyclotomic polynomial `Φ_e`.
pub(crate) fn cyclotomic(e: u32) -> Vec<i64> {
    assert!(e >= 1);
    // x^e - 1 divided by Φ_d for every proper divisor d
    let mut num = vec![0i64; e as usize + 1];
    num[0] = -1;
    num[e as usize] = 1;
    for d in (1..e).filter(|d| e.is_multiple_of(*d)) {
        num = div_exact(&num, &cyclotomic(d));
    }
    num
}

fn div_exact(num: &[i64], den: &[i64]) -> Vec<i64> {
    let dl = den.len() - 1;
    let lead = den[dl];
    let mut rem = num.to_vec();
    let mut quo = vec![0i64; num.len() - dl];
    for i in (0..quo.len()).rev() {
        let c = rem[i + dl] / lead;
        quo[i] = c;
        for (j, &dc) in den.iter().enumerate() {
            rem[i + j] -= c * dc;
        }
    }
    debug_assert!(rem.iter().all(|&x| x == 0));
    quo
}

pub(crate) fn divisors(d: u32) -> impl Iterator<Item = u32> {
    (1..=d).filter(move |e| d.is_multiple_of(*e))
}
