use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{Permutation, SignedCount, ENUMERATION_CAP};
use crate::{Error, Result};

/// Alternating in one-line notation from position 2 on: every interior
/// entry is a strict local maximum or minimum.
fn alternates(v: &[usize]) -> bool {
    v.windows(3)
        .all(|w| (w[0] < w[1] && w[1] > w[2]) || (w[0] > w[1] && w[1] < w[2]))
}

/// `s(1) > s(2) < s(3) > …`. The empty and one-point permutations count.
pub fn is_zigzag(s: &Permutation) -> bool {
    let v = s.images();
    (v.len() < 2 || v[0] > v[1]) && alternates(v)
}

/// `s(1) < s(2) > s(3) < …`. The empty and one-point permutations count.
pub fn is_zagzig(s: &Permutation) -> bool {
    let v = s.images();
    (v.len() < 2 || v[0] < v[1]) && alternates(v)
}

/// Every `j` is a two-sided maximum or minimum of `(s⁻¹(j), j, s(j))`.
pub fn is_forthback(s: &Permutation) -> bool {
    let inv = s.inverse();
    (1..=s.len()).all(|j| {
        let (p, q) = (inv.apply(j), s.apply(j));
        (p < j && j > q) || (p > j && j < q)
    })
}

/// Counts zigzag permutations of `{1,…,n}` by scanning all of `S_n`.
pub fn euler_zigzag_enumerate(n: usize) -> Result<SignedCount> {
    euler_zigzag_enumerate_with_cap(n, ENUMERATION_CAP)
}

pub fn euler_zigzag_enumerate_with_cap(n: usize, cap: usize) -> Result<SignedCount> {
    if n > cap {
        return Err(Error::CapExceeded {
            what: "zigzag enumeration",
            requested: n,
            cap,
        });
    }
    Ok(BigInt::from(Permutation::all(n).filter(is_zigzag).count()))
}

/// Euler zigzag numbers `A_0..=A_n_max` from the Seidel–Entringer
/// boustrophedon triangle `E(k, 0) = 0`, `E(k, i) = E(k, i−1) + E(k−1, k−i)`,
/// with `A_k = E(k, k)`.
pub fn euler_zigzag_table(n_max: usize) -> Vec<SignedCount> {
    let mut out = vec![BigInt::one()];
    let mut prev = vec![BigInt::one()];
    for k in 1..=n_max {
        let mut row = Vec::with_capacity(k + 1);
        row.push(BigInt::zero());
        for i in 1..=k {
            let v = &row[i - 1] + &prev[k - i];
            row.push(v);
        }
        out.push(row[k].clone());
        prev = row;
    }
    out
}

/// `A_n` from the boustrophedon recurrence.
pub fn euler_zigzag_fast(n: usize) -> SignedCount {
    euler_zigzag_table(n).pop().expect("table has n + 1 entries")
}
