use levy_core::ito::ItoSymbol;
use levy_core::sim::*;
use levy_core::tensor::{TensorElement, TensorWord};

fn cfg(steps: usize, paths: usize, seed: u64) -> SimConfig {
    SimConfig::new(0.0, 1.0, steps, paths, seed).unwrap()
}

#[test]
fn area_and_generator_agree_pathwise() {
    let c = cfg(300, 1, 5);
    let g = levy_core::levy::levy_generator();
    for i in 0..20 {
        let p = PlanarPath::sample(&c, i);
        assert!((0.5 * j_map(&p, &g).unwrap() - levy_area(&p)).abs() < 1e-12);
    }
}

#[test]
fn reproducible_regardless_of_order() {
    let c = cfg(100, 10, 99);
    let forward: Vec<f64> = (0..10).map(|i| sample_levy_area(&c, i)).collect();
    let backward: Vec<f64> = (0..10).rev().map(|i| sample_levy_area(&c, i)).collect();
    assert!(forward.iter().eq(backward.iter().rev()));
    assert_eq!(levy_area_samples(&c, &Sequential).unwrap(), forward);
}

#[test]
fn time_words_are_simplex_volumes() {
    let steps = 400;
    let c = SimConfig::new(0.0, 2.0, steps, 2, 1).unwrap();
    let est = time_word_estimates(&c, 3, &Sequential).unwrap();
    let fact = [1.0, 1.0, 2.0, 6.0];
    for (m, (w, e)) in est.iter().enumerate() {
        let m = m + 1;
        assert_eq!(w.rank(), m);
        let exact = 2f64.powi(m as i32) / fact[m];
        assert!(
            (e.mean - exact).abs() < 2.0 * m as f64 / steps as f64 * exact,
            "{w}: {}",
            e.mean
        );
    }
}

#[test]
fn moment_estimates_on_a_modest_run() {
    let c = cfg(200, 20_000, 3);
    let areas = levy_area_samples(&c, &Sequential).unwrap();
    let sq: Vec<f64> = areas.iter().map(|a| a * a).collect();
    let e = MCEstimate::from_samples(&sq).unwrap();
    assert!(e.within(0.25, 4.0), "{e:?}");
    let ch = CharFnEstimate::from_area_samples(1.0, &areas).unwrap();
    assert!(ch.re.within(1.0 / 0.5f64.cosh(), 4.0), "{ch:?}");
    assert!(ch.im.within(0.0, 4.0), "{ch:?}");
}

#[test]
fn longer_interval_scales_second_moment() {
    let e1 = estimate_moment(2, &cfg(100, 20_000, 8), &Sequential).unwrap();
    let e4 = estimate_moment(2, &SimConfig::new(0.0, 4.0, 100, 20_000, 9).unwrap(), &Sequential).unwrap();
    // ratio of means is 16; compare 16·e1 against e4 with combined error
    let diff = e4.mean - 16.0 * e1.mean;
    let se = (e4.std_error.powi(2) + (16.0 * e1.std_error).powi(2)).sqrt();
    assert!(diff.abs() <= 4.0 * se, "{e1:?} {e4:?}");
}

#[test]
fn cross_residual_shrinks_with_steps() {
    let dx = TensorElement::word([ItoSymbol::Dx]);
    let dy = TensorElement::word([ItoSymbol::Dy]);
    let mut last = f64::INFINITY;
    for steps in [250, 500, 1000] {
        let r = check_multiplicativity(&dx, &dy, &cfg(steps, 2000, 4), &Sequential).unwrap();
        // Σ ΔX_i ΔY_i has mean square 1/steps
        assert!(r.mean_square.within(1.0 / steps as f64, 4.0), "{steps}: {r:?}");
        assert!(r.mean_square.mean < last);
        last = r.mean_square.mean;
    }
}

#[test]
fn rank_limits() {
    let c = cfg(10, 2, 0);
    assert!(simulate_iterated_integral(&TensorWord::repeat(ItoSymbol::Dt, 4), &c, 0).is_ok());
    assert!(simulate_iterated_integral(&TensorWord::repeat(ItoSymbol::Dt, 5), &c, 0).is_err());
    let big = TensorElement::word(TensorWord::repeat(ItoSymbol::Dx, 3));
    assert!(check_multiplicativity(&big, &big, &c, &Sequential).is_err());
}
