use alloc::format;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};

use super::factorial;
use crate::combinatorics::euler_zigzag_table;
use crate::{Error, Result, Scalar};

/// Taylor coefficients `c_0..=c_M` of `sech(z) = Σ c_k z^k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SechSeries {
    pub coefficients: Vec<Scalar>,
}

impl SechSeries {
    pub fn coefficient(&self, k: usize) -> Option<&Scalar> {
        self.coefficients.get(k)
    }

    pub fn order(&self) -> usize {
        self.coefficients.len().saturating_sub(1)
    }

    /// Evaluates the truncated series in floating point.
    pub fn eval(&self, z: f64) -> f64 {
        self.coefficients
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * z + c.to_f64().unwrap_or(f64::NAN))
    }
}

/// Formal reciprocal of `cosh(z) = Σ z^{2k}/(2k)!` over the rationals.
pub fn sech_via_reciprocal(order: usize) -> SechSeries {
    let cosh: Vec<Scalar> = (0..=order)
        .map(|k| {
            if k % 2 == 0 {
                Scalar::new(BigInt::one(), factorial(k))
            } else {
                Scalar::zero()
            }
        })
        .collect();
    let mut c: Vec<Scalar> = Vec::with_capacity(order + 1);
    for k in 0..=order {
        if k == 0 {
            c.push(Scalar::one() / &cosh[0]);
            continue;
        }
        let s: Scalar = (1..=k).map(|j| &cosh[j] * &c[k - j]).sum();
        c.push(-s / &cosh[0]);
    }
    SechSeries { coefficients: c }
}

/// `c_{2m} = (−1)^m A_{2m} / (2m)!`, odd coefficients zero.
pub fn sech_via_zigzag(order: usize) -> SechSeries {
    let a = euler_zigzag_table(order);
    let coefficients = (0..=order)
        .map(|k| {
            if k % 2 == 1 {
                return Scalar::zero();
            }
            let v = Scalar::new(a[k].clone(), factorial(k));
            if (k / 2) % 2 == 1 {
                -v
            } else {
                v
            }
        })
        .collect();
    SechSeries { coefficients }
}

/// Both constructions, required to agree coefficient by coefficient.
pub fn sech_taylor(order: usize) -> Result<SechSeries> {
    let a = sech_via_reciprocal(order);
    let b = sech_via_zigzag(order);
    if let Some(k) = (0..=order).find(|&k| a.coefficients[k] != b.coefficients[k]) {
        return Err(Error::Mismatch {
            n: k,
            detail: format!(
                "sech coefficient {k}: reciprocal {} vs zigzag {}",
                a.coefficients[k], b.coefficients[k]
            ),
        });
    }
    Ok(a)
}
