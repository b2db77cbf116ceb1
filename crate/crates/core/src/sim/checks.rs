use alloc::vec::Vec;

use super::path::check_rank;
use super::{j_map, levy_area, signature, MCEstimate, PathRunner, PlanarPath, SimConfig};
use crate::tensor::{product, TensorElement, TensorWord};
use crate::Result;

/// One Lévy area sample per path.
pub fn levy_area_samples(cfg: &SimConfig, runner: &impl PathRunner) -> Result<Vec<f64>> {
    cfg.validate()?;
    let cfg = *cfg;
    Ok(runner.run(cfg.paths, move |i| levy_area(&PlanarPath::sample(&cfg, i))))
}

fn powi(x: f64, n: usize) -> f64 {
    (0..n).fold(1.0, |acc, _| acc * x)
}

pub fn estimate_moment(n: usize, cfg: &SimConfig, runner: &impl PathRunner) -> Result<MCEstimate> {
    let xs: Vec<f64> = levy_area_samples(cfg, runner)?
        .into_iter()
        .map(|a| powi(a, n))
        .collect();
    MCEstimate::from_samples(&xs)
}

/// Real and imaginary parts of `E[exp(izA)]`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CharFnEstimate {
    pub re: MCEstimate,
    pub im: MCEstimate,
}

impl CharFnEstimate {
    pub fn from_area_samples(z: f64, areas: &[f64]) -> Result<Self> {
        let re: Vec<f64> = areas.iter().map(|a| libm::cos(z * a)).collect();
        let im: Vec<f64> = areas.iter().map(|a| libm::sin(z * a)).collect();
        Ok(Self {
            re: MCEstimate::from_samples(&re)?,
            im: MCEstimate::from_samples(&im)?,
        })
    }
}

pub fn estimate_charfn(z: f64, cfg: &SimConfig, runner: &impl PathRunner) -> Result<CharFnEstimate> {
    CharFnEstimate::from_area_samples(z, &levy_area_samples(cfg, runner)?)
}

/// Path-wise residual `J(α)J(β) − J(αβ)` on shared paths.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct MultiplicativityReport {
    /// Estimate of the mean square residual.
    pub mean_square: MCEstimate,
    pub max_abs: f64,
}

pub fn check_multiplicativity(
    alpha: &TensorElement,
    beta: &TensorElement,
    cfg: &SimConfig,
    runner: &impl PathRunner,
) -> Result<MultiplicativityReport> {
    cfg.validate()?;
    let ab = product(alpha, beta);
    for w in alpha.iter().chain(beta.iter()).chain(ab.iter()).map(|(w, _)| w) {
        check_rank(w.rank())?;
    }
    let cfg = *cfg;
    let residuals: Vec<Result<f64>> = runner.run(cfg.paths, |i| {
        let p = PlanarPath::sample(&cfg, i);
        Ok(j_map(&p, alpha)? * j_map(&p, beta)? - j_map(&p, &ab)?)
    });
    let residuals = residuals.into_iter().collect::<Result<Vec<f64>>>()?;
    let max_abs = residuals.iter().fold(0.0f64, |m, r| m.max(r.abs()));
    let squares: Vec<f64> = residuals.iter().map(|r| r * r).collect();
    Ok(MultiplicativityReport {
        mean_square: MCEstimate::from_samples(&squares)?,
        max_abs,
    })
}

/// `E[J(w)]` for every word of rank `1..=max_rank`, from one signature pass
/// per path.
fn word_estimates(
    cfg: &SimConfig,
    max_rank: usize,
    runner: &impl PathRunner,
    keep: impl Fn(&TensorWord) -> bool,
) -> Result<Vec<(TensorWord, MCEstimate)>> {
    cfg.validate()?;
    check_rank(max_rank)?;
    let cfg = *cfg;
    let words: Vec<TensorWord> = signature(
        &PlanarPath {
            dt: 0.0,
            dx: Vec::new(),
            dy: Vec::new(),
        },
        max_rank,
    )
    .into_iter()
    .map(|(w, _)| w)
    .collect();
    let chosen: Vec<usize> = (0..words.len())
        .filter(|&j| !words[j].is_empty() && keep(&words[j]))
        .collect();
    let per_path: Vec<Vec<f64>> = runner.run(cfg.paths, |i| {
        let sig = signature(&PlanarPath::sample(&cfg, i), max_rank);
        chosen.iter().map(|&j| sig[j].1).collect()
    });
    chosen
        .iter()
        .enumerate()
        .map(|(k, &j)| {
            let xs: Vec<f64> = per_path.iter().map(|v| v[k]).collect();
            Ok((words[j].clone(), MCEstimate::from_samples(&xs)?))
        })
        .collect()
}

/// `E[J(w)]` for every word of rank `≤ max_rank` with a `dX` or `dY`; all
/// should vanish.
pub fn theorem5_estimates(
    cfg: &SimConfig,
    max_rank: usize,
    runner: &impl PathRunner,
) -> Result<Vec<(TensorWord, MCEstimate)>> {
    word_estimates(cfg, max_rank, runner, TensorWord::has_noise)
}

/// `E[J(dT^⊗m)]` for `1 ≤ m ≤ max_rank`; these are deterministic.
pub fn time_word_estimates(
    cfg: &SimConfig,
    max_rank: usize,
    runner: &impl PathRunner,
) -> Result<Vec<(TensorWord, MCEstimate)>> {
    word_estimates(cfg, max_rank, runner, |w| !w.has_noise())
}
