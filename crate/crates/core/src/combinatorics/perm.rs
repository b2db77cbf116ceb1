use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::fmt::Write;

use crate::{Error, Result};

/// A bijection of `{1,…,n}`, stored in one-line notation `[s(1), …, s(n)]`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    /// Builds from 1-based one-line notation.
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n + 1];
        for &x in &images {
            if x == 0 || x > n || seen[x] {
                return Err(Error::InvalidPermutation(n));
            }
            seen[x] = true;
        }
        Ok(Self { images })
    }

    pub(crate) fn from_images_unchecked(images: Vec<usize>) -> Self {
        debug_assert!(Self::new(images.clone()).is_ok());
        Self { images }
    }

    pub fn identity(n: usize) -> Self {
        Self {
            images: (1..=n).collect(),
        }
    }

    /// Builds from cycles, each listed as `a → b → … → a`. Points not
    /// mentioned are fixed.
    pub fn from_cycles<C: AsRef<[usize]>>(n: usize, cycles: &[C]) -> Result<Self> {
        let mut images: Vec<usize> = (1..=n).collect();
        let mut seen = vec![false; n + 1];
        for c in cycles {
            let c = c.as_ref();
            for (i, &x) in c.iter().enumerate() {
                if x == 0 || x > n || seen[x] {
                    return Err(Error::InvalidPermutation(n));
                }
                seen[x] = true;
                images[x - 1] = c[(i + 1) % c.len()];
            }
        }
        Ok(Self { images })
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    /// `s(j)` for `1 ≤ j ≤ n`.
    #[inline]
    pub fn apply(&self, j: usize) -> usize {
        self.images[j - 1]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.len()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x - 1] = i + 1;
        }
        Self { images: inv }
    }

    pub fn fixed_points(&self) -> impl Iterator<Item = usize> + '_ {
        (1..=self.len()).filter(|&j| self.apply(j) == j)
    }

    pub fn is_fixed_point_free(&self) -> bool {
        self.fixed_points().next().is_none()
    }

    /// Cycles, each starting at its smallest element, sorted by that element.
    /// Fixed points appear as 1-cycles.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.len();
        let mut seen = vec![false; n + 1];
        let mut out = Vec::new();
        for start in 1..=n {
            if seen[start] {
                continue;
            }
            let mut c = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                c.push(x);
                x = self.apply(x);
            }
            out.push(c);
        }
        out
    }

    pub fn cycle_lengths(&self) -> Vec<usize> {
        self.cycles().iter().map(Vec::len).collect()
    }

    pub fn is_cyclic(&self) -> bool {
        self.cycles().len() == 1
    }

    /// Fixed-point-free with only even cycles.
    pub fn has_only_even_cycles(&self) -> bool {
        self.cycles().iter().all(|c| c.len() % 2 == 0)
    }

    /// Cycle notation with the largest entry first in every cycle and cycles
    /// sorted by increasing first entry.
    pub fn canonical_cycles(&self) -> Vec<Vec<usize>> {
        let mut cycles: Vec<Vec<usize>> = self
            .cycles()
            .into_iter()
            .map(|mut c| {
                let pos = c
                    .iter()
                    .enumerate()
                    .max_by_key(|&(_, &x)| x)
                    .map(|(i, _)| i)
                    .unwrap_or(0);
                c.rotate_left(pos);
                c
            })
            .collect();
        cycles.sort_by_key(|c| c[0]);
        cycles
    }

    /// Canonical cycle notation rendered as `(a,b,…)(c,…)`.
    pub fn cycle_notation(&self) -> String {
        let mut s = String::new();
        for c in self.canonical_cycles() {
            s.push('(');
            for (i, x) in c.iter().enumerate() {
                if i > 0 {
                    s.push(',');
                }
                let _ = write!(s, "{x}");
            }
            s.push(')');
        }
        s
    }

    /// Every permutation of `{1,…,n}` in lexicographic order of one-line
    /// notation.
    pub fn all(n: usize) -> AllPermutations {
        AllPermutations {
            next: Some((1..=n).collect()),
        }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, x) in self.images.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str("]")
    }
}

/// Iterator over `S_n` in lexicographic order.
#[derive(Debug, Clone)]
pub struct AllPermutations {
    next: Option<Vec<usize>>,
}

impl Iterator for AllPermutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let cur = self.next.take()?;
        let mut succ = cur.clone();
        if next_lexicographic(&mut succ) {
            self.next = Some(succ);
        }
        Some(Permutation { images: cur })
    }
}

/// Advances `v` to its lexicographic successor; `false` at the last one.
pub(crate) fn next_lexicographic(v: &mut [usize]) -> bool {
    let n = v.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation() {
        assert!(Permutation::new(vec![2, 1, 3]).is_ok());
        assert!(Permutation::new(vec![2, 2, 3]).is_err());
        assert!(Permutation::new(vec![0, 1]).is_err());
        assert!(Permutation::from_cycles(3, &[vec![1, 1]]).is_err());
    }

    #[test]
    fn cycles_and_inverse() {
        // 4 → 1 → 8 → 2 → 6 → 7 → 5 → 3 → 4
        let s = Permutation::from_cycles(8, &[[4, 1, 8, 2, 6, 7, 5, 3]]).unwrap();
        assert_eq!(s.images(), &[8, 6, 4, 1, 3, 7, 5, 2]);
        assert_eq!(s.cycles(), vec![vec![1, 8, 2, 6, 7, 5, 3, 4]]);
        assert_eq!(s.cycle_notation(), "(8,2,6,7,5,3,4,1)");
        let inv = s.inverse();
        for j in 1..=8 {
            assert_eq!(inv.apply(s.apply(j)), j);
        }
        assert!(s.is_cyclic());
    }

    #[test]
    fn canonical_cycle_form() {
        let s = Permutation::new(vec![3, 4, 2, 1]).unwrap();
        assert_eq!(s.canonical_cycles(), vec![vec![4, 1, 3, 2]]);
        let t = Permutation::new(vec![2, 1, 4, 3]).unwrap();
        assert_eq!(t.cycle_notation(), "(2,1)(4,3)");
        assert_eq!(alloc::format!("{t}"), "[2, 1, 4, 3]");
    }

    #[test]
    fn all_permutations() {
        assert_eq!(Permutation::all(0).count(), 1);
        assert_eq!(Permutation::all(1).count(), 1);
        assert_eq!(Permutation::all(5).count(), 120);
        let v: Vec<_> = Permutation::all(3).collect();
        assert!(v.windows(2).all(|w| w[0] < w[1]));
    }
}
