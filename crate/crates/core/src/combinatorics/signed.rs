//! Signed enumeration over `D_{2m}`, the fixed-point-free permutations of
//! `{1,…,2m}` whose cycles all have even length, and the sign-reversing
//! involution that cancels every member with a transit.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;

use super::{Permutation, SignedCount, EVEN_CYCLE_CAP};
use crate::{Error, Result};

/// `+1` if `h < k`, `−1` if `h > k`.
pub fn sn_pair(h: usize, k: usize) -> Result<i8> {
    match h.cmp(&k) {
        core::cmp::Ordering::Less => Ok(1),
        core::cmp::Ordering::Greater => Ok(-1),
        core::cmp::Ordering::Equal => Err(Error::DiagonalPair(h)),
    }
}

/// `∏_j sn(j, s(j))`.
pub fn sn_perm(s: &Permutation) -> Result<i8> {
    let mut sign = 1i8;
    for j in 1..=s.len() {
        let k = s.apply(j);
        if k == j {
            return Err(Error::FixedPoint(j));
        }
        if k < j {
            sign = -sign;
        }
    }
    Ok(sign)
}

fn check_cap(m: usize, cap: usize) -> Result<()> {
    if 2 * m > cap {
        return Err(Error::CapExceeded {
            what: "even-cycle enumeration (2m)",
            requested: 2 * m,
            cap,
        });
    }
    Ok(())
}

/// Streams `D_{2m}` constructively, each element exactly once: cycles are
/// built in cycle notation, every cycle opening at the smallest unused point
/// and closing only at even length.
pub fn enumerate_even_cycle_perms(m: usize) -> Result<EvenCyclePerms> {
    enumerate_even_cycle_perms_with_cap(m, EVEN_CYCLE_CAP)
}

pub fn enumerate_even_cycle_perms_with_cap(m: usize, cap: usize) -> Result<EvenCyclePerms> {
    check_cap(m, cap)?;
    Ok(EvenCyclePerms::new(2 * m))
}

#[derive(Debug, Clone, Copy)]
enum Step {
    Place(usize),
    Open(usize),
}

/// Iterator returned by [`enumerate_even_cycle_perms`].
#[derive(Debug, Clone)]
pub struct EvenCyclePerms {
    n: usize,
    seq: Vec<usize>,
    starts: Vec<usize>,
    used: Vec<bool>,
    // option to try next at each open decision point: 0 closes the current
    // cycle, v ≥ 1 appends v
    cursors: Vec<usize>,
    steps: Vec<Step>,
    fresh: bool,
}

impl EvenCyclePerms {
    fn new(n: usize) -> Self {
        Self {
            n,
            seq: Vec::with_capacity(n),
            starts: Vec::new(),
            used: vec![false; n + 1],
            cursors: Vec::new(),
            steps: Vec::new(),
            fresh: true,
        }
    }

    fn build(&self) -> Permutation {
        let mut images = vec![0; self.n];
        for (ci, &s) in self.starts.iter().enumerate() {
            let e = self.starts.get(ci + 1).copied().unwrap_or(self.seq.len());
            let c = &self.seq[s..e];
            for (i, &x) in c.iter().enumerate() {
                images[x - 1] = c[(i + 1) % c.len()];
            }
        }
        Permutation::from_images_unchecked(images)
    }

    fn undo(&mut self, step: Step) {
        match step {
            Step::Place(v) => {
                self.seq.pop();
                self.used[v] = false;
            }
            Step::Open(u) => {
                self.seq.pop();
                self.used[u] = false;
                self.starts.pop();
            }
        }
    }
}

impl Iterator for EvenCyclePerms {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        if self.fresh {
            self.fresh = false;
            if self.n == 0 {
                return Some(Permutation::identity(0));
            }
            self.seq.push(1);
            self.used[1] = true;
            self.starts.push(0);
            self.cursors.push(0);
        }
        loop {
            let cycle_len = self.seq.len() - *self.starts.last()?;
            let n = self.n;
            let cur = self.cursors.last_mut()?;
            let chosen = (*cur..=n).find(|&opt| {
                if opt == 0 {
                    cycle_len.is_multiple_of(2)
                } else {
                    !self.used[opt]
                }
            });
            match chosen {
                None => {
                    self.cursors.pop();
                    {
                        let step = self.steps.pop()?;
                        self.undo(step)
                    }
                }
                Some(0) => {
                    *cur = 1;
                    if self.seq.len() == n {
                        return Some(self.build());
                    }
                    let u = (1..=n).find(|&v| !self.used[v]).expect("unused point");
                    self.starts.push(self.seq.len());
                    self.seq.push(u);
                    self.used[u] = true;
                    self.steps.push(Step::Open(u));
                    self.cursors.push(0);
                }
                Some(v) => {
                    *cur = v + 1;
                    self.seq.push(v);
                    self.used[v] = true;
                    self.steps.push(Step::Place(v));
                    self.cursors.push(0);
                }
            }
        }
    }
}

/// Depth-first walk over `D_{2m}` tracking the partial sign, calling `leaf`
/// with `(images, sn)` for every member.
fn walk_even_cycles(n: usize, mut leaf: impl FnMut(&[usize], i8)) {
    struct State {
        n: usize,
        images: Vec<usize>,
        used: Vec<bool>,
    }
    fn rec(
        st: &mut State,
        start: usize,
        last: usize,
        len: usize,
        placed: usize,
        sign: i8,
        leaf: &mut dyn FnMut(&[usize], i8),
    ) {
        if len.is_multiple_of(2) {
            // close last → start
            let s = if start > last { sign } else { -sign };
            st.images[last - 1] = start;
            if placed == st.n {
                leaf(&st.images, s);
            } else if let Some(u) = (1..=st.n).find(|&v| !st.used[v]) {
                st.used[u] = true;
                rec(st, u, u, 1, placed + 1, s, leaf);
                st.used[u] = false;
            }
        }
        for v in 1..=st.n {
            if st.used[v] {
                continue;
            }
            st.used[v] = true;
            st.images[last - 1] = v;
            let s = if v > last { sign } else { -sign };
            rec(st, start, v, len + 1, placed + 1, s, leaf);
            st.used[v] = false;
        }
    }
    if n == 0 {
        leaf(&[], 1);
        return;
    }
    let mut st = State {
        n,
        images: vec![0; n],
        used: vec![false; n + 1],
    };
    st.used[1] = true;
    rec(&mut st, 1, 1, 1, 1, 1, &mut leaf);
}

/// Calls `f` on every member of `D_{2m}`.
pub fn visit_even_cycle_perms(m: usize, mut f: impl FnMut(&Permutation)) -> Result<()> {
    check_cap(m, EVEN_CYCLE_CAP)?;
    walk_even_cycles(2 * m, |images, _| {
        f(&Permutation::from_images_unchecked(images.to_vec()))
    });
    Ok(())
}

/// `Σ_{s ∈ D_{2m}} sn(s)`.
pub fn signed_sum_d(m: usize) -> Result<SignedCount> {
    signed_sum_d_with_cap(m, EVEN_CYCLE_CAP)
}

pub fn signed_sum_d_with_cap(m: usize, cap: usize) -> Result<SignedCount> {
    check_cap(m, cap)?;
    let mut total = 0i64;
    walk_even_cycles(2 * m, |_, s| total += i64::from(s));
    Ok(BigInt::from(total))
}

/// Points `h` with `s⁻¹(h) < h < s(h)` or `s⁻¹(h) > h > s(h)`, ascending.
pub fn transits(s: &Permutation) -> Result<Vec<usize>> {
    if let Some(j) = s.fixed_points().next() {
        return Err(Error::FixedPoint(j));
    }
    let inv = s.inverse();
    Ok((1..=s.len())
        .filter(|&h| {
            let (p, q) = (inv.apply(h), s.apply(h));
            (p < h && h < q) || (p > h && h > q)
        })
        .collect())
}

fn check_even_cycles(s: &Permutation) -> Result<()> {
    if let Some(j) = s.fixed_points().next() {
        return Err(Error::FixedPoint(j));
    }
    if !s.has_only_even_cycles() {
        return Err(Error::OddCycle);
    }
    Ok(())
}

/// Sign-reversing partner of `s ∈ D_{2m}` within its class of permutations
/// sharing the same reduction `s′` (the smallest transit `h` cut out).
///
/// The places where `h` can be put back as a transit are the arcs `x → y` of
/// the odd cycle of `s′` that cross altitude `h`. Walking that cycle from its
/// smallest point, crossings alternate between upward and downward, and the
/// `(2i, 2i+1)`-th crossings are paired.
pub fn cancel_partner(s: &Permutation) -> Result<Permutation> {
    check_even_cycles(s)?;
    let h = *transits(s)?.first().ok_or(Error::NoTransit)?;
    let inv = s.inverse();
    let (pred, succ) = (inv.apply(h), s.apply(h));

    // the odd cycle of s′ from its smallest point
    let mut cycle = Vec::new();
    let mut x = succ;
    loop {
        cycle.push(x);
        if x == pred {
            break;
        }
        x = s.apply(x);
    }
    let min_pos = cycle
        .iter()
        .enumerate()
        .min_by_key(|&(_, &v)| v)
        .map(|(i, _)| i)
        .unwrap_or(0);
    cycle.rotate_left(min_pos);

    let len = cycle.len();
    let crossings: Vec<usize> = (0..len)
        .filter(|&i| {
            let (a, b) = (cycle[i], cycle[(i + 1) % len]);
            (a < h && h < b) || (a > h && h > b)
        })
        .collect();
    debug_assert!(crossings.len().is_multiple_of(2));
    let here = crossings
        .iter()
        .position(|&i| cycle[i] == pred)
        .expect("h sits on a crossing of its own reduction");
    let there = crossings[here ^ 1];
    let (a, b) = (cycle[there], cycle[(there + 1) % len]);

    let mut images = s.images().to_vec();
    images[pred - 1] = succ;
    images[a - 1] = h;
    images[h - 1] = b;
    Ok(Permutation::from_images_unchecked(images))
}
