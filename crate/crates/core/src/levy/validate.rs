use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::time::Duration;

use num_bigint::BigInt;

use super::{w_by, w_euler, MomentMethod, MomentResult, DIGRAPH_CAP, DIRECT_CAP};
use crate::{Error, Result, Scalar};

/// Monotonic time source for per-route timings.
pub trait Clock {
    /// Time elapsed since an arbitrary fixed origin.
    fn now(&self) -> Duration;
}

/// Clock that never advances; all timings read zero.
#[derive(Clone, Copy, Debug, Default)]
pub struct NoClock;

impl Clock for NoClock {
    fn now(&self) -> Duration {
        Duration::ZERO
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CrossValidateOptions {
    pub direct_cap: usize,
    pub digraph_cap: usize,
}

impl Default for CrossValidateOptions {
    fn default() -> Self {
        Self {
            direct_cap: DIRECT_CAP,
            digraph_cap: DIGRAPH_CAP,
        }
    }
}

/// One `n`: the agreed value and how each route fared.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValidationRow {
    pub n: usize,
    pub w: BigInt,
    pub moment_unit_interval: Scalar,
    /// `(route, time)` for every route that ran.
    pub timings: Vec<(MomentMethod, Duration)>,
    /// Routes skipped for exceeding their cap.
    pub skipped: Vec<MomentMethod>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValidationReport {
    pub n_max: usize,
    pub rows: Vec<ValidationRow>,
}

impl ValidationReport {
    pub fn notes(&self) -> Vec<String> {
        self.rows
            .iter()
            .filter(|r| !r.skipped.is_empty())
            .map(|r| {
                let names: Vec<&str> = r.skipped.iter().map(|m| m.as_str()).collect();
                format!("n = {}: skipped {} (over cap)", r.n, names.join(", "))
            })
            .collect()
    }
}

/// Runs every route within its cap for each `n ≤ n_max` and fails on the
/// first disagreement with the Euler route.
pub fn cross_validate(n_max: usize, options: CrossValidateOptions, clock: &dyn Clock) -> Result<ValidationReport> {
    let mut rows = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        let t0 = clock.now();
        let reference = w_euler(n);
        let mut timings = alloc::vec![(MomentMethod::Euler, clock.now().saturating_sub(t0))];
        let mut skipped = Vec::new();
        for (method, cap) in [
            (MomentMethod::Direct, options.direct_cap),
            (MomentMethod::Digraph, options.digraph_cap),
        ] {
            if n > cap {
                skipped.push(method);
                continue;
            }
            let t0 = clock.now();
            let w = match method {
                MomentMethod::Direct => super::w_direct_with_cap(n, cap)?,
                MomentMethod::Digraph => super::w_digraph_with_cap(n, cap)?,
                MomentMethod::Euler => w_by(method, n)?,
            };
            timings.push((method, clock.now().saturating_sub(t0)));
            if w != reference {
                return Err(Error::Mismatch {
                    n,
                    detail: format!("{method} gives {w}, euler gives {reference}"),
                });
            }
        }
        timings.sort_by_key(|(m, _)| *m);
        let r = MomentResult::new(n, reference, MomentMethod::Euler);
        rows.push(ValidationRow {
            n,
            w: r.w,
            moment_unit_interval: r.moment_unit_interval,
            timings,
            skipped,
        });
    }
    Ok(ValidationReport { n_max, rows })
}
