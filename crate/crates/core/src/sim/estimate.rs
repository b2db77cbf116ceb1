use crate::{Error, Result};

const PAIRWISE_BLOCK: usize = 8;

/// Sum with a split shape fixed by the length alone.
pub fn pairwise_sum(xs: &[f64]) -> f64 {
    if xs.len() <= PAIRWISE_BLOCK {
        return xs.iter().sum();
    }
    let (l, r) = xs.split_at(xs.len() / 2);
    pairwise_sum(l) + pairwise_sum(r)
}

/// Sample mean with its standard error.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct MCEstimate {
    pub mean: f64,
    pub std_error: f64,
    pub paths: usize,
}

impl MCEstimate {
    pub fn from_samples(xs: &[f64]) -> Result<Self> {
        let n = xs.len();
        if n < 2 {
            return Err(Error::TooFewSamples(n));
        }
        let mean = pairwise_sum(xs) / n as f64;
        let dev: alloc::vec::Vec<f64> = xs.iter().map(|x| (x - mean) * (x - mean)).collect();
        let var = pairwise_sum(&dev) / (n - 1) as f64;
        Ok(Self {
            mean,
            std_error: libm::sqrt(var / n as f64),
            paths: n,
        })
    }

    /// `(mean − target) / std_error`; zero when both the error and the
    /// deviation vanish.
    pub fn z_score(&self, target: f64) -> f64 {
        let d = self.mean - target;
        if self.std_error == 0.0 {
            return if d == 0.0 {
                0.0
            } else {
                libm::copysign(f64::INFINITY, d)
            };
        }
        d / self.std_error
    }

    pub fn within(&self, target: f64, sigmas: f64) -> bool {
        self.z_score(target).abs() <= sigmas
    }
}
