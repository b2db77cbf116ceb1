use std::time::{Duration, Instant};

use levy_core::levy::Clock;
use levy_core::sim::PathRunner;
use rayon::prelude::*;

/// Spreads paths over the rayon pool. Output order is path order, so
/// estimates match [`levy_core::sim::Sequential`] exactly.
#[derive(Clone, Copy, Debug, Default)]
pub struct RayonRunner;

impl PathRunner for RayonRunner {
    fn run<T, F>(&self, paths: usize, f: F) -> Vec<T>
    where
        T: Send,
        F: Fn(u64) -> T + Sync + Send,
    {
        (0..paths as u64).into_par_iter().map(f).collect()
    }
}

/// Wall clock measured from construction.
#[derive(Clone, Copy, Debug)]
pub struct StdClock(Instant);

impl StdClock {
    pub fn start() -> Self {
        Self(Instant::now())
    }
}

impl Default for StdClock {
    fn default() -> Self {
        Self::start()
    }
}

impl Clock for StdClock {
    fn now(&self) -> Duration {
        self.0.elapsed()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use levy_core::sim::{levy_area_samples, Sequential, SimConfig};

    #[test]
    fn parallel_matches_sequential() {
        let cfg = SimConfig::new(0.0, 1.0, 64, 300, 17).unwrap();
        assert_eq!(
            levy_area_samples(&cfg, &RayonRunner).unwrap(),
            levy_area_samples(&cfg, &Sequential).unwrap()
        );
    }
}
