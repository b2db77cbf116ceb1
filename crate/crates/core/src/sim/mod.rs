//! Monte Carlo on simulated planar Brownian paths.
//!
//! Everything here is double precision. Paths use left-point (Itô) sums on a
//! uniform grid of `[a, b)`, and every path draws from its own ChaCha stream
//! keyed by `(seed, path_index)`, so estimates do not depend on how paths are
//! scheduled across threads.

mod checks;
mod estimate;
mod path;

pub use checks::{
    check_multiplicativity, estimate_charfn, estimate_moment, levy_area_samples, theorem5_estimates,
    time_word_estimates, CharFnEstimate, MultiplicativityReport,
};
pub use estimate::{pairwise_sum, MCEstimate};
pub use path::{
    iterated_integral, j_map, levy_area, sample_levy_area, signature, simulate_iterated_integral, PlanarPath,
    SIM_RANK_CAP,
};

use alloc::vec::Vec;

use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SimConfig {
    pub a: f64,
    pub b: f64,
    pub steps: usize,
    pub paths: usize,
    pub seed: u64,
}

impl SimConfig {
    pub fn new(a: f64, b: f64, steps: usize, paths: usize, seed: u64) -> Result<Self> {
        let cfg = Self {
            a,
            b,
            steps,
            paths,
            seed,
        };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.a.is_finite() && self.b.is_finite()) {
            return Err(Error::InvalidConfig("interval endpoints must be finite"));
        }
        if self.a >= self.b {
            return Err(Error::InvalidConfig("need a < b"));
        }
        if self.steps == 0 {
            return Err(Error::InvalidConfig("steps must be positive"));
        }
        if self.paths == 0 {
            return Err(Error::InvalidConfig("paths must be positive"));
        }
        Ok(())
    }

    pub fn length(&self) -> f64 {
        self.b - self.a
    }

    pub fn dt(&self) -> f64 {
        self.length() / self.steps as f64
    }
}

/// Evaluates a per-path function for path indices `0..paths`, in order.
pub trait PathRunner {
    fn run<T, F>(&self, paths: usize, f: F) -> Vec<T>
    where
        T: Send,
        F: Fn(u64) -> T + Sync + Send;
}

/// Runs paths one after another on the calling thread.
#[derive(Clone, Copy, Debug, Default)]
pub struct Sequential;

impl PathRunner for Sequential {
    fn run<T, F>(&self, paths: usize, f: F) -> Vec<T>
    where
        T: Send,
        F: Fn(u64) -> T + Sync + Send,
    {
        (0..paths as u64).map(f).collect()
    }
}
