//! Moments of Lévy's area.
//!
//! Writing `g = {dX⊗dY} − {dY⊗dX}`, the area over `[a, b)` is `½ J(g)` and
//! its n-th power is `2^{−n} J(gⁿ)`. Only the `dT⊗…⊗dT` term of `gⁿ` has
//! nonzero expectation, so with `w_n` its coefficient
//!
//! ```text
//! E[A^n] = w_n (b − a)^n / (2^n n!)
//! ```
//!
//! `w_n` is computed here by five independent routes; see the crate docs.

mod sech;
mod validate;

pub use sech::{sech_taylor, sech_via_reciprocal, sech_via_zigzag, SechSeries};
pub use validate::{cross_validate, Clock, CrossValidateOptions, NoClock, ValidationReport, ValidationRow};

use alloc::vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::combinatorics::{alternating_digraph_signed_sum, euler_zigzag_fast, signed_sum_d_with_cap};
use crate::ito::ItoSymbol;
use crate::tensor::{
    iterated_coproduct, multitensor_product_capped, power, MultiTensorElement, TensorElement, TensorWord,
};
use crate::{Error, Result, Scalar};

/// Default largest `n` for [`w_direct`].
pub const DIRECT_CAP: usize = 8;
/// Default largest `2m` for [`w_digraph`].
pub const DIGRAPH_CAP: usize = 12;
/// Largest `n` for [`w_recovery`].
pub const RECOVERY_CAP: usize = 6;

/// Which computation produced a `w_n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum MomentMethod {
    /// Sticky power in `T(L)`.
    Direct,
    /// Signed sum over even-cycle permutations.
    Digraph,
    /// `(2m)!·A_{2m}` from the boustrophedon recurrence.
    Euler,
}

impl MomentMethod {
    pub const ALL: [MomentMethod; 3] = [MomentMethod::Direct, MomentMethod::Digraph, MomentMethod::Euler];

    pub fn as_str(self) -> &'static str {
        match self {
            MomentMethod::Direct => "direct",
            MomentMethod::Digraph => "digraph",
            MomentMethod::Euler => "euler",
        }
    }
}

impl fmt::Display for MomentMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// `w_n` together with `E[A^n]` over an interval of length one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MomentResult {
    pub n: usize,
    pub w: BigInt,
    pub moment_unit_interval: Scalar,
    pub method: MomentMethod,
}

impl MomentResult {
    pub fn new(n: usize, w: BigInt, method: MomentMethod) -> Self {
        let moment_unit_interval = Scalar::new(w.clone(), BigInt::from(2u8).pow(n as u32) * factorial(n));
        Self {
            n,
            w,
            moment_unit_interval,
            method,
        }
    }

    /// `E[A^n]` over an interval of length `t`.
    pub fn moment(&self, t: &Scalar) -> Scalar {
        &self.moment_unit_interval * pow(t, self.n)
    }
}

pub(crate) fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

fn pow(t: &Scalar, n: usize) -> Scalar {
    (0..n).fold(Scalar::one(), |acc, _| acc * t)
}

/// `{dX⊗dY} − {dY⊗dX}`; the area is half its iterated integral.
pub fn levy_generator() -> TensorElement {
    TensorElement::word([ItoSymbol::Dx, ItoSymbol::Dy]).sub(&TensorElement::word([ItoSymbol::Dy, ItoSymbol::Dx]))
}

/// `gⁿ`, truncated to ranks `≤ n` when `truncate` is set.
pub fn levy_power(n: usize, truncate: bool) -> TensorElement {
    power(&levy_generator(), n, truncate.then_some(n))
}

fn cap_error(what: &'static str, requested: usize, cap: usize) -> Error {
    Error::CapExceeded { what, requested, cap }
}

fn integral(c: &Scalar, n: usize) -> Result<BigInt> {
    if !c.is_integer() {
        return Err(Error::Mismatch {
            n,
            detail: alloc::format!("non-integral coefficient {c}"),
        });
    }
    Ok(c.to_integer())
}

/// `w_n` as the `dT^⊗n` coefficient of the rank-truncated sticky power.
pub fn w_direct(n: usize) -> Result<BigInt> {
    w_direct_with_cap(n, DIRECT_CAP)
}

pub fn w_direct_with_cap(n: usize, cap: usize) -> Result<BigInt> {
    if n > cap {
        return Err(cap_error("direct route", n, cap));
    }
    let p = levy_power(n, true);
    integral(&p.coeff(&TensorWord::repeat(ItoSymbol::Dt, n)), n)
}

/// `w_n` through the recovery formula: the `n`-th power of `Δ^(n) g` in the
/// n-fold tensor power, read at multirank `(1,…,1)`. Slots of rank above one
/// are discarded as soon as they appear.
pub fn w_recovery(n: usize) -> Result<BigInt> {
    if n > RECOVERY_CAP {
        return Err(cap_error("recovery route", n, RECOVERY_CAP));
    }
    if n == 0 {
        return Ok(BigInt::one());
    }
    let g = iterated_coproduct(&levy_generator(), n)?;
    let mut acc = MultiTensorElement::unit(n);
    for _ in 0..n {
        acc = multitensor_product_capped(&acc, &g, Some(1))?;
    }
    let key = vec![TensorWord::letter(ItoSymbol::Dt); n];
    integral(&acc.coeff(&key), n)
}

/// `w_n` as the signed count of labelled alternating digraphs.
pub fn w_arc_tuples(n: usize) -> Result<BigInt> {
    alternating_digraph_signed_sum(n)
}

/// `w_n = (−1)^m (2m)! Σ_{s ∈ D_{2m}} sn(s)`; zero for odd `n`.
pub fn w_digraph(n: usize) -> Result<BigInt> {
    w_digraph_with_cap(n, DIGRAPH_CAP)
}

pub fn w_digraph_with_cap(n: usize, cap: usize) -> Result<BigInt> {
    if n > cap {
        return Err(cap_error("digraph route", n, cap));
    }
    if n.is_odd() {
        return Ok(BigInt::zero());
    }
    let m = n / 2;
    let sum = signed_sum_d_with_cap(m, cap)?;
    let signed = if m.is_odd() { -sum } else { sum };
    Ok(signed * factorial(n))
}

/// `w_n = n!·A_n` for even `n`; zero for odd `n`.
pub fn w_euler(n: usize) -> BigInt {
    if n.is_odd() {
        return BigInt::zero();
    }
    factorial(n) * euler_zigzag_fast(n)
}

/// `w_n` by the chosen route.
pub fn w_by(method: MomentMethod, n: usize) -> Result<BigInt> {
    match method {
        MomentMethod::Direct => w_direct(n),
        MomentMethod::Digraph => w_digraph(n),
        MomentMethod::Euler => Ok(w_euler(n)),
    }
}

pub fn moment_result(n: usize, method: MomentMethod) -> Result<MomentResult> {
    Ok(MomentResult::new(n, w_by(method, n)?, method))
}

/// `E[A^n]` over an interval of length `interval_length`, from the Euler
/// route, cross-checked against the digraph route when `n` is within its cap.
pub fn moment(n: usize, interval_length: &Scalar) -> Result<Scalar> {
    if !interval_length.is_positive() {
        return Err(Error::NonPositiveInterval);
    }
    let w = w_euler(n);
    if n <= DIGRAPH_CAP {
        let check = w_digraph(n)?;
        if check != w {
            return Err(Error::Mismatch {
                n,
                detail: alloc::format!("euler {w} vs digraph {check}"),
            });
        }
    }
    Ok(MomentResult::new(n, w, MomentMethod::Euler).moment(interval_length))
}

/// Like [`moment`] with an explicit route and no cross-check.
pub fn moment_with(n: usize, interval_length: &Scalar, method: MomentMethod) -> Result<Scalar> {
    if !interval_length.is_positive() {
        return Err(Error::NonPositiveInterval);
    }
    Ok(moment_result(n, method)?.moment(interval_length))
}
