use alloc::vec::Vec;

use num_traits::ToPrimitive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use super::SimConfig;
use crate::ito::ItoSymbol;
use crate::tensor::{TensorElement, TensorWord};
use crate::{Error, Result};

/// Largest word rank accepted by [`simulate_iterated_integral`].
pub const SIM_RANK_CAP: usize = 4;

/// Increments of a planar Brownian path on a uniform grid.
#[derive(Clone, Debug, PartialEq)]
pub struct PlanarPath {
    pub dt: f64,
    pub dx: Vec<f64>,
    pub dy: Vec<f64>,
}

impl PlanarPath {
    /// Path number `path_index` of the configuration. Each path reads its own
    /// ChaCha stream, so it does not depend on which other paths are drawn.
    pub fn sample(cfg: &SimConfig, path_index: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
        rng.set_stream(path_index);
        let dt = cfg.dt();
        let sd = libm::sqrt(dt);
        let mut dx = Vec::with_capacity(cfg.steps);
        let mut dy = Vec::with_capacity(cfg.steps);
        for _ in 0..cfg.steps {
            let zx: f64 = rng.sample(StandardNormal);
            let zy: f64 = rng.sample(StandardNormal);
            dx.push(sd * zx);
            dy.push(sd * zy);
        }
        Self { dt, dx, dy }
    }

    pub fn steps(&self) -> usize {
        self.dx.len()
    }

    /// The same path with the coordinates exchanged.
    pub fn swapped(&self) -> Self {
        Self {
            dt: self.dt,
            dx: self.dy.clone(),
            dy: self.dx.clone(),
        }
    }

    pub fn increment(&self, sym: ItoSymbol, i: usize) -> f64 {
        match sym {
            ItoSymbol::Dx => self.dx[i],
            ItoSymbol::Dy => self.dy[i],
            ItoSymbol::Dt => self.dt,
        }
    }
}

/// Left-point sum `½ Σ ((X_i − X_0) ΔY_i − (Y_i − Y_0) ΔX_i)`.
pub fn levy_area(path: &PlanarPath) -> f64 {
    let (mut x, mut y, mut s) = (0.0, 0.0, 0.0);
    for (&dx, &dy) in path.dx.iter().zip(&path.dy) {
        s += x * dy - y * dx;
        x += dx;
        y += dy;
    }
    0.5 * s
}

pub fn sample_levy_area(cfg: &SimConfig, path_index: u64) -> f64 {
    levy_area(&PlanarPath::sample(cfg, path_index))
}

/// `Σ_{i₁ < … < i_m} Δl₁(i₁)⋯Δl_m(i_m)` by running prefix sums.
pub fn iterated_integral(path: &PlanarPath, word: &TensorWord) -> f64 {
    let letters = word.letters();
    let m = letters.len();
    let mut prefix = [0.0f64; SIM_RANK_CAP + 1];
    let mut prefix_vec;
    let p: &mut [f64] = if m <= SIM_RANK_CAP {
        &mut prefix[..=m]
    } else {
        prefix_vec = alloc::vec![0.0; m + 1];
        &mut prefix_vec
    };
    p[0] = 1.0;
    for i in 0..path.steps() {
        for k in (1..=m).rev() {
            p[k] += p[k - 1] * path.increment(letters[k - 1], i);
        }
    }
    p[m]
}

/// All words of rank `≤ max_rank` in one pass, in [`TensorWord`] order.
pub fn signature(path: &PlanarPath, max_rank: usize) -> Vec<(TensorWord, f64)> {
    let words: Vec<TensorWord> = (0..=max_rank).flat_map(TensorWord::all_of_rank).collect();
    // a word's value after step i uses its prefix (word minus last letter)
    // from before step i; words are stored rank by rank, so walk backwards
    let parent: Vec<Option<(usize, ItoSymbol)>> = words
        .iter()
        .map(|w| {
            let (head, last) = w.split_at(w.rank().saturating_sub(1));
            last.letters()
                .first()
                .map(|&l| (words.binary_search(&head).expect("prefix present"), l))
        })
        .collect();
    let mut value = alloc::vec![0.0; words.len()];
    value[0] = 1.0;
    for i in 0..path.steps() {
        for j in (1..words.len()).rev() {
            let (h, l) = parent[j].expect("nonempty word");
            value[j] += value[h] * path.increment(l, i);
        }
    }
    words.into_iter().zip(value).collect()
}

pub fn simulate_iterated_integral(word: &TensorWord, cfg: &SimConfig, path_index: u64) -> Result<f64> {
    check_rank(word.rank())?;
    Ok(iterated_integral(&PlanarPath::sample(cfg, path_index), word))
}

pub(crate) fn check_rank(rank: usize) -> Result<()> {
    if rank > SIM_RANK_CAP {
        return Err(Error::CapExceeded {
            what: "simulated iterated integral rank",
            requested: rank,
            cap: SIM_RANK_CAP,
        });
    }
    Ok(())
}

/// `J(α)` on one path: the coefficient-weighted sum of its words' integrals.
pub fn j_map(path: &PlanarPath, a: &TensorElement) -> Result<f64> {
    let mut s = 0.0;
    for (w, c) in a.iter() {
        check_rank(w.rank())?;
        let c = c
            .to_f64()
            .ok_or(Error::InvalidConfig("coefficient not representable"))?;
        s += c * iterated_integral(path, w);
    }
    Ok(s)
}
