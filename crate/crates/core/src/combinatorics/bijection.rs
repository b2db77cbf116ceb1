//! Bijections between forth-back and alternating permutations.

use alloc::vec::Vec;

use num_bigint::BigInt;

use super::{is_forthback, is_zagzig, is_zigzag, Permutation, SignedCount, ENUMERATION_CAP};
use crate::{Error, Result};

/// Foata's transformation restricted to forth-back permutations: write the
/// cycles with their largest entry first, order cycles by increasing first
/// entry, erase the brackets. The result is zigzag.
pub fn fundamental_transform(s: &Permutation) -> Result<Permutation> {
    if !is_forthback(s) {
        return Err(Error::NotForthBack);
    }
    let images: Vec<usize> = s.canonical_cycles().into_iter().flatten().collect();
    Ok(Permutation::from_images_unchecked(images))
}

/// Inverse of [`fundamental_transform`]: a new cycle opens at every
/// left-to-right maximum of the zigzag word.
pub fn inverse_fundamental(z: &Permutation) -> Result<Permutation> {
    if !is_zigzag(z) {
        return Err(Error::NotZigzag);
    }
    let mut cycles: Vec<Vec<usize>> = Vec::new();
    let mut record = 0;
    for &x in z.images() {
        if x > record {
            record = x;
            cycles.push(Vec::new());
        }
        cycles.last_mut().expect("first entry is a record").push(x);
    }
    Permutation::from_cycles(z.len(), &cycles)
}

/// Cyclic forth-back permutation of `{1,…,2m}` to a zagzig permutation of
/// `{1,…,2m−1}`: rotate the cycle so that `2m` comes last, then drop it.
pub fn cyclic_to_zagzig(s: &Permutation) -> Result<Permutation> {
    if !s.is_cyclic() || s.len() < 2 {
        return Err(Error::NotCyclic);
    }
    if !is_forthback(s) {
        return Err(Error::NotForthBack);
    }
    let n = s.len();
    let mut seq = Vec::with_capacity(n - 1);
    let mut x = s.apply(n);
    while x != n {
        seq.push(x);
        x = s.apply(x);
    }
    Ok(Permutation::from_images_unchecked(seq))
}

/// Inverse of [`cyclic_to_zagzig`]: the cycle `(z(1), …, z(2m−1), 2m)`.
pub fn zagzig_to_cyclic(z: &Permutation) -> Result<Permutation> {
    if !is_zagzig(z) || z.len().is_multiple_of(2) {
        return Err(Error::NotZagzig);
    }
    let n = z.len() + 1;
    let mut cycle = z.images().to_vec();
    cycle.push(n);
    Permutation::from_cycles(n, &[cycle])
}

fn check_cap(n: usize) -> Result<()> {
    if n > ENUMERATION_CAP {
        return Err(Error::CapExceeded {
            what: "permutation enumeration",
            requested: n,
            cap: ENUMERATION_CAP,
        });
    }
    Ok(())
}

/// All forth-back permutations of `{1,…,n}` by scanning `S_n`.
pub fn forthback_perms(n: usize) -> Result<Vec<Permutation>> {
    check_cap(n)?;
    Ok(Permutation::all(n).filter(is_forthback).collect())
}

/// Every cyclic permutation of `{1,…,n}`, each once, as the cycle
/// `(π(1), …, π(n−1), n)` for `π` running over `S_{n−1}`.
pub fn cyclic_perms(n: usize) -> impl Iterator<Item = Permutation> {
    let m = n.saturating_sub(1);
    Permutation::all(m).filter(move |_| n > 0).map(move |p| {
        let mut cycle = p.images().to_vec();
        cycle.push(n);
        Permutation::from_cycles(n, &[cycle]).expect("valid cycle")
    })
}

/// Number of forth-back permutations of `{1,…,2m}` that are a single cycle,
/// by exhaustive scan of the `(2m−1)!` cycles.
pub fn cyclic_forthback_count(m: usize) -> Result<SignedCount> {
    check_cap(2 * m)?;
    Ok(BigInt::from(cyclic_perms(2 * m).filter(is_forthback).count()))
}
