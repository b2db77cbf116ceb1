//! Labelled arc tuples on `{1,…,n}` where every vertex is either a double
//! source (two outgoing arcs, none incoming) or a double sink.
//!
//! Such a tuple `(e₁,…,e_n)` is exactly a choice of one term `R_{e_ℓ}` per
//! factor of the n-th power whose product survives at multirank `(1,…,1)`
//! as a multiple of `dT⊗…⊗dT`: a double source carries `{dX}{dX}`, a double
//! sink `{dY}{dY}`, each with rank-1 part `{dT}`.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{sn_pair, Permutation, SignedCount};
use crate::{Error, Result};

/// Largest vertex count for [`alternating_digraph_signed_sum`].
pub const ARC_TUPLE_CAP: usize = 10;

/// Directed edge `from → to` with `from ≠ to`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Arc {
    pub from: usize,
    pub to: usize,
}

impl Arc {
    pub fn new(from: usize, to: usize) -> Result<Self> {
        if from == to || from == 0 || to == 0 {
            return Err(Error::InvalidArc(from, to));
        }
        Ok(Self { from, to })
    }

    pub fn sn(&self) -> i8 {
        sn_pair(self.from, self.to).expect("arcs are off-diagonal")
    }
}

/// An alternating labelled digraph: `n` arcs on `n` vertices, each vertex a
/// double source or a double sink. Multiple arcs are allowed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlternatingDigraph {
    n: usize,
    arcs: Vec<Arc>,
}

impl AlternatingDigraph {
    pub fn new(n: usize, arcs: Vec<Arc>) -> Result<Self> {
        let mut out_deg = vec![0usize; n + 1];
        let mut in_deg = vec![0usize; n + 1];
        for a in &arcs {
            if a.from > n || a.to > n || a.from == a.to {
                return Err(Error::InvalidArc(a.from, a.to));
            }
            out_deg[a.from] += 1;
            in_deg[a.to] += 1;
        }
        for v in 1..=n {
            let ok = (out_deg[v] == 2 && in_deg[v] == 0) || (out_deg[v] == 0 && in_deg[v] == 2);
            if !ok {
                return Err(Error::NotAlternating(v));
            }
        }
        Ok(Self { n, arcs })
    }

    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    /// `∏ sn(e)` over the arcs.
    pub fn sign(&self) -> i8 {
        self.arcs.iter().map(Arc::sn).product()
    }

    /// Reorients the alternating cycles cyclically.
    ///
    /// Each connected component (an even cycle, possibly a doubled arc) is
    /// walked from its smallest vertex, leaving first along the incident arc
    /// whose other end is smaller (lower arc index on ties); every arc is then
    /// read in the walking direction. Returns the resulting permutation in
    /// `D_n` and the number of arcs that had to be reversed, which is always
    /// `n / 2`.
    pub fn to_cyclic(&self) -> (Permutation, usize) {
        let n = self.n;
        let mut incident: Vec<Vec<usize>> = vec![Vec::new(); n + 1];
        for (i, a) in self.arcs.iter().enumerate() {
            incident[a.from].push(i);
            incident[a.to].push(i);
        }
        let other = |i: usize, v: usize| {
            let a = self.arcs[i];
            if a.from == v {
                a.to
            } else {
                a.from
            }
        };
        let mut images = vec![0usize; n];
        let mut used_arc = vec![false; self.arcs.len()];
        let mut flipped = 0;
        for start in 1..=n {
            if images[start - 1] != 0 {
                continue;
            }
            let mut first = incident[start].clone();
            first.sort_by_key(|&i| (other(i, start), i));
            let mut arc = first[0];
            let mut v = start;
            loop {
                used_arc[arc] = true;
                let w = other(arc, v);
                if self.arcs[arc].from != v {
                    flipped += 1;
                }
                images[v - 1] = w;
                v = w;
                if v == start {
                    break;
                }
                arc = *incident[v]
                    .iter()
                    .find(|&&i| !used_arc[i])
                    .expect("2-regular component");
            }
        }
        (Permutation::from_images_unchecked(images), flipped)
    }
}

/// `Σ ∏ sn(e_ℓ)` over every labelled alternating digraph on `{1,…,n}`.
///
/// Choosing the `n/2` double sources, the digraph is a source-by-sink matrix
/// of arc multiplicities with all row and column sums 2; it has
/// `n! / ∏ mult!` labellings.
pub fn alternating_digraph_signed_sum(n: usize) -> Result<SignedCount> {
    if n > ARC_TUPLE_CAP {
        return Err(Error::CapExceeded {
            what: "alternating digraph enumeration",
            requested: n,
            cap: ARC_TUPLE_CAP,
        });
    }
    if n % 2 == 1 {
        return Ok(BigInt::zero());
    }
    if n == 0 {
        return Ok(BigInt::one());
    }
    let m = n / 2;
    let fact: Vec<i64> = (0..=n as i64)
        .scan(1i64, |acc, k| {
            if k > 0 {
                *acc *= k;
            }
            Some(*acc)
        })
        .collect();
    let mut total = 0i64;
    for mask in 0u32..(1 << n) {
        if mask.count_ones() as usize != m {
            continue;
        }
        let sources: Vec<usize> = (1..=n).filter(|&v| mask & (1 << (v - 1)) != 0).collect();
        let sinks: Vec<usize> = (1..=n).filter(|&v| mask & (1 << (v - 1)) == 0).collect();
        let mut col_left = vec![2u8; m];
        // (labelling denominator ∏ mult!, sign) accumulated row by row
        fill_rows(&sources, &sinks, 0, &mut col_left, 1, 1, &mut |denom, sign| {
            total += i64::from(sign) * (fact[n] / denom);
        });
    }
    Ok(BigInt::from(total))
}

fn fill_rows(
    sources: &[usize],
    sinks: &[usize],
    row: usize,
    col_left: &mut [u8],
    denom: i64,
    sign: i8,
    emit: &mut dyn FnMut(i64, i8),
) {
    if row == sources.len() {
        emit(denom, sign);
        return;
    }
    let h = sources[row];
    let m = sinks.len();
    for a in 0..m {
        if col_left[a] == 0 {
            continue;
        }
        // double arc h → sinks[a]
        if col_left[a] == 2 {
            col_left[a] = 0;
            fill_rows(sources, sinks, row + 1, col_left, denom * 2, sign, emit);
            col_left[a] = 2;
        }
        for b in a + 1..m {
            if col_left[b] == 0 {
                continue;
            }
            col_left[a] -= 1;
            col_left[b] -= 1;
            let s = sign * sn_pair(h, sinks[a]).unwrap() * sn_pair(h, sinks[b]).unwrap();
            fill_rows(sources, sinks, row + 1, col_left, denom, s, emit);
            col_left[a] += 1;
            col_left[b] += 1;
        }
    }
}

/// Brute-force version of [`alternating_digraph_signed_sum`]: scans all
/// `(n(n−1))^n` labelled arc tuples and keeps the alternating ones.
pub fn alternating_digraph_signed_sum_brute(n: usize) -> Result<SignedCount> {
    if n > 4 {
        return Err(Error::CapExceeded {
            what: "brute-force arc tuples",
            requested: n,
            cap: 4,
        });
    }
    let arcs: Vec<Arc> = (1..=n)
        .flat_map(|h| (1..=n).filter(move |&k| k != h).map(move |k| Arc { from: h, to: k }))
        .collect();
    let base = arcs.len();
    if base == 0 {
        return Ok(BigInt::from(if n == 0 { 1 } else { 0 }));
    }
    let mut total = 0i64;
    let mut idx = vec![0usize; n];
    'outer: loop {
        let tuple: Vec<Arc> = idx.iter().map(|&i| arcs[i]).collect();
        if let Ok(d) = AlternatingDigraph::new(n, tuple) {
            total += i64::from(d.sign());
        }
        for slot in idx.iter_mut() {
            *slot += 1;
            if *slot < base {
                continue 'outer;
            }
            *slot = 0;
        }
        break;
    }
    Ok(BigInt::from(total))
}
