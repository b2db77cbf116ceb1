//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use levy::RayonRunner;
use levy_core::combinatorics::*;
use levy_core::ito::ItoSymbol;
use levy_core::levy::*;
use levy_core::sim::{
    check_multiplicativity, levy_area_samples, theorem5_estimates, CharFnEstimate, MCEstimate, SimConfig,
};
use levy_core::tensor::*;
use levy_core::Scalar;
use num_bigint::BigInt;
use num_traits::One;
use rand::seq::IndexedRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

/// `A_0..=A_n` from `2A_{k+1} = Σ C(k,j) A_j A_{k−j}`, kept apart from the
/// library's boustrophedon table.
fn zigzag_oracle(n: usize) -> Vec<BigInt> {
    let mut binom: Vec<Vec<BigInt>> = vec![vec![BigInt::one()]];
    for k in 1..=n {
        let prev = &binom[k - 1];
        let row: Vec<BigInt> = (0..=k)
            .map(|j| {
                let l = if j > 0 { prev[j - 1].clone() } else { BigInt::from(0) };
                let r = if j < k { prev[j].clone() } else { BigInt::from(0) };
                l + r
            })
            .collect();
        binom.push(row);
    }
    let mut a = vec![BigInt::one(), BigInt::one()];
    for k in 1..n {
        let s: BigInt = (0..=k).map(|j| &binom[k][j] * &a[j] * &a[k - j]).sum();
        a.push(s / 2);
    }
    a.truncate(n + 1);
    a
}

fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

fn random_word(rng: &mut ChaCha8Rng, max_rank: usize) -> TensorWord {
    let r = rng.random_range(0..=max_rank);
    TensorWord::new((0..r).map(|_| ItoSymbol::ALL[rng.random_range(0..3)]).collect())
}

fn random_element(rng: &mut ChaCha8Rng, max_rank: usize, max_terms: usize) -> TensorElement {
    let k = rng.random_range(1..=max_terms);
    TensorElement::from_terms((0..k).map(|_| {
        let c = Scalar::new(rng.random_range(-7i64..=7).into(), rng.random_range(1i64..=5).into());
        (random_word(rng, max_rank), c)
    }))
}

fn within_budget(start: Instant, budget: Duration) -> Result<(), String> {
    let t = start.elapsed();
    ensure(t <= budget, || format!("took {t:.1?}, budget {budget:?}"))
}

fn three_route_agreement() -> Outcome {
    let start = Instant::now();
    let a = zigzag_oracle(8);
    let golden = [(2, 2u64), (4, 120), (6, 43920), (8, 55843200)];
    for (n, w) in golden {
        let w = BigInt::from(w);
        ensure(factorial(n) * &a[n] == w, || {
            format!("oracle disagrees with golden w_{n}")
        })?;
        let direct = w_direct(n).map_err(|e| e.to_string())?;
        let digraph = w_digraph(n).map_err(|e| e.to_string())?;
        let euler = w_euler(n);
        ensure(direct == w && digraph == w && euler == w, || {
            format!("w_{n}: direct {direct}, digraph {digraph}, euler {euler}, expected {w}")
        })?;
    }
    for n in [1, 3, 5, 7] {
        let zero = BigInt::from(0);
        ensure(
            w_direct(n).unwrap() == zero && w_digraph(n).unwrap() == zero && w_euler(n) == zero,
            || format!("w_{n} nonzero"),
        )?;
    }
    within_budget(start, Duration::from_secs(300))?;
    Ok("w_2, w_4, w_6, w_8 = 2, 120, 43920, 55843200 on all routes; odd n ≤ 7 give 0".into())
}

fn exact_moments() -> Outcome {
    let oracle = zigzag_oracle(10);
    let table = euler_zigzag_table(10);
    for n in 0..=10 {
        let e = euler_zigzag_enumerate(n).map_err(|e| e.to_string())?;
        ensure(table[n] == e && oracle[n] == e, || {
            format!("A_{n}: table {}, enumeration {e}", table[n])
        })?;
    }
    let expected: Vec<BigInt> = [1, 5, 61, 1385, 50521].into_iter().map(BigInt::from).collect();
    for m in 1..=5 {
        ensure(table[2 * m] == expected[m - 1], || format!("A_{}", 2 * m))?;
        let want = Scalar::new(table[2 * m].clone(), BigInt::from(4).pow(m as u32));
        let got = moment(2 * m, &Scalar::one()).map_err(|e| e.to_string())?;
        ensure(got == want, || format!("moment({}, 1) = {got}, expected {want}", 2 * m))?;
    }
    Ok("moment(2m, 1) = A_2m/4^m for m ≤ 5; A_0..A_10 agree with enumeration".into())
}

fn lemma8() -> Outcome {
    let want = [1usize, 5, 61, 1385];
    let mut sets = Vec::new();
    for m in 1..=4 {
        let fb = forthback_perms(2 * m).map_err(|e| e.to_string())?;
        ensure(fb.len() == want[m - 1], || {
            format!("S_{}: {} forth-back", 2 * m, fb.len())
        })?;
        sets.push(fb);
    }
    for m in 1..=3 {
        let mut images = Vec::new();
        for s in &sets[m - 1] {
            let z = fundamental_transform(s).map_err(|e| e.to_string())?;
            ensure(is_zigzag(&z) && inverse_fundamental(&z).as_ref() == Ok(s), || {
                format!("{s}")
            })?;
            images.push(z);
        }
        images.sort();
        images.dedup();
        let mut zz: Vec<Permutation> = Permutation::all(2 * m).filter(is_zigzag).collect();
        zz.sort();
        ensure(images == zz, || format!("transform not onto zigzag S_{}", 2 * m))?;
        for z in &zz {
            let s = inverse_fundamental(z).map_err(|e| e.to_string())?;
            ensure(is_forthback(&s) && fundamental_transform(&s).as_ref() == Ok(z), || {
                format!("{z}")
            })?;
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for _ in 0..1000 {
        let s = sets[3].choose(&mut rng).expect("nonempty");
        let z = fundamental_transform(s).map_err(|e| e.to_string())?;
        ensure(is_zigzag(&z) && inverse_fundamental(&z).as_ref() == Ok(s), || {
            format!("{s}")
        })?;
    }
    Ok("forth-back counts 1, 5, 61, 1385; bijection exhaustive for 2m ≤ 6, 1000 samples in S_8".into())
}

fn lemma9() -> Outcome {
    let want = [1u64, 2, 16, 272];
    for m in 1..=4 {
        let c = cyclic_forthback_count(m).map_err(|e| e.to_string())?;
        ensure(c == BigInt::from(want[m - 1]), || format!("S_{}: {c}", 2 * m))?;
    }
    Ok("cyclic forth-back counts 1, 2, 16, 272".into())
}

fn transit_cancellation() -> Outcome {
    let mut forthback_seen = 0;
    for m in 1..=4 {
        let rigid = if m % 2 == 0 { 1 } else { -1 };
        let mut sum = 0i64;
        for s in enumerate_even_cycle_perms(m).map_err(|e| e.to_string())? {
            let sn = sn_perm(&s).map_err(|e| e.to_string())?;
            if transits(&s).map_err(|e| e.to_string())?.is_empty() {
                ensure(sn == rigid, || format!("{s} has sign {sn}"))?;
                forthback_seen += 1;
            } else {
                sum += i64::from(sn);
            }
        }
        ensure(sum == 0, || format!("2m = {}: transit sum {sum}", 2 * m))?;
    }
    Ok(format!(
        "transit sums vanish for 2m ≤ 8; sign (−1)^m on all {forthback_seen} forth-back"
    ))
}

fn hopf_suite() -> Outcome {
    let start = Instant::now();
    let words: Vec<TensorWord> = (0..=6).flat_map(TensorWord::all_of_rank).collect();
    let mut exhaustive = 0;
    for u in &words {
        for v in words.iter().filter(|v| u.rank() + v.rank() <= 6) {
            ensure(shuffle_words_recursive(u, v) == shuffle_words_subsets(u, v), || {
                format!("{u} · {v}")
            })?;
            exhaustive += 1;
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    for _ in 0..500 {
        let total = rng.random_range(0..=8);
        let p = rng.random_range(0..=total);
        let u = TensorWord::new((0..p).map(|_| ItoSymbol::ALL[rng.random_range(0..3)]).collect());
        let v = TensorWord::new((0..total - p).map(|_| ItoSymbol::ALL[rng.random_range(0..3)]).collect());
        ensure(shuffle_words_recursive(&u, &v) == shuffle_words_subsets(&u, &v), || {
            format!("{u} · {v}")
        })?;
    }
    for _ in 0..200 {
        let a = random_element(&mut rng, 4, 4);
        let b = random_element(&mut rng, 4, 4);
        let d = coproduct(&a);
        ensure(d.expand_slot(0).unwrap() == d.expand_slot(1).unwrap(), || {
            "coassociativity".into()
        })?;
        for slot in 0..2 {
            let back = d
                .contract_slot(slot)
                .and_then(|m| m.into_single())
                .map_err(|e| e.to_string())?;
            ensure(back == a, || format!("counit law on slot {slot}"))?;
        }
        let lhs = coproduct(&product(&a, &b));
        let rhs = multitensor_product(&d, &coproduct(&b)).map_err(|e| e.to_string())?;
        ensure(lhs == rhs, || "Δ(ab) ≠ Δ(a)Δ(b)".into())?;
        for n in 2..=4 {
            ensure(recover_component(&a, n).flatten() == a.component(n), || {
                format!("recovery at N = {n}")
            })?;
        }
    }
    for n in 1..=4 {
        ensure(levy_power(n, true) == levy_power(n, false).truncated(n), || {
            format!("truncation at n = {n}")
        })?;
    }
    within_budget(start, Duration::from_secs(120))?;
    Ok(format!(
        "{exhaustive} exhaustive + 500 random pairs; 200 elements for Hopf laws; truncation n ≤ 4"
    ))
}

fn sech_series() -> Outcome {
    let s = sech_via_reciprocal(21);
    let a = zigzag_oracle(20);
    for m in 0..=10 {
        let v = Scalar::new(a[2 * m].clone(), factorial(2 * m));
        let want = if m % 2 == 1 { -v } else { v };
        ensure(s.coefficients[2 * m] == want, || format!("c_{}", 2 * m))?;
        ensure(s.coefficients[2 * m + 1] == Scalar::from_integer(0.into()), || {
            format!("c_{}", 2 * m + 1)
        })?;
    }
    ensure(sech_taylor(20).is_ok(), || "library routes disagree".into())?;
    Ok("formal 1/cosh equals (−1)^m A_2m/(2m)! for m ≤ 10".into())
}

fn monte_carlo() -> Outcome {
    let start = Instant::now();
    let cfg = SimConfig::new(0.0, 1.0, 1000, 100_000, 20_240_601).map_err(|e| e.to_string())?;
    let areas = levy_area_samples(&cfg, &RayonRunner).map_err(|e| e.to_string())?;
    let mut lines = Vec::new();
    let mut check = |label: &str, e: &MCEstimate, target: f64| -> Result<(), String> {
        let z = e.z_score(target);
        lines.push(format!("{label} z={z:+.2}"));
        ensure(z.abs() <= 4.0, || {
            format!("{label}: {} ± {} vs {target} (z = {z:.2})", e.mean, e.std_error)
        })
    };
    let sq: Vec<f64> = areas.iter().map(|a| a * a).collect();
    check("E[A^2]", &MCEstimate::from_samples(&sq).unwrap(), 0.25)?;
    let q: Vec<f64> = areas.iter().map(|a| a.powi(4)).collect();
    check("E[A^4]", &MCEstimate::from_samples(&q).unwrap(), 5.0 / 16.0)?;
    for z in [1.0f64, 2.0] {
        let c = CharFnEstimate::from_area_samples(z, &areas).unwrap();
        check(&format!("Re phi({z})"), &c.re, 1.0 / (z / 2.0).cosh())?;
        check(&format!("Im phi({z})"), &c.im, 0.0)?;
    }
    let est = theorem5_estimates(&cfg, 3, &RayonRunner).map_err(|e| e.to_string())?;
    ensure(est.len() == 3 + 9 + 27 - 3, || format!("{} theorem 5 words", est.len()))?;
    let worst = est.iter().map(|(_, e)| e.z_score(0.0).abs()).fold(0.0, f64::max);
    for (w, e) in &est {
        let z = e.z_score(0.0);
        ensure(z.abs() <= 4.0, || {
            format!("E[J({w})] = {} ± {} (z = {z:.2})", e.mean, e.std_error)
        })?;
    }
    let dx = TensorElement::word([ItoSymbol::Dx]);
    let mut residuals = Vec::new();
    for steps in [250, 500, 1000] {
        let c = SimConfig { steps, ..cfg };
        let r = check_multiplicativity(&dx, &dx, &c, &RayonRunner).map_err(|e| e.to_string())?;
        residuals.push(r.mean_square.mean);
    }
    ensure(residuals[0] > residuals[1] && residuals[1] > residuals[2], || {
        format!("residuals {residuals:?}")
    })?;
    within_budget(start, Duration::from_secs(300))?;
    Ok(format!(
        "{}; theorem 5: {} words, max |z| = {worst:.2}; residual {:.2e} > {:.2e} > {:.2e}",
        lines.join(", "),
        est.len(),
        residuals[0],
        residuals[1],
        residuals[2]
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("three-route agreement of w_n", three_route_agreement),
        ("exact moments from zigzag numbers", exact_moments),
        ("forth-back counts and fundamental transform", lemma8),
        ("cyclic forth-back counts", lemma9),
        ("transit cancellation and sign rigidity", transit_cancellation),
        ("sticky shuffle Hopf algebra laws", hopf_suite),
        ("sech Taylor series", sech_series),
        ("Monte Carlo against exact targets", monte_carlo),
    ];
    let mut failed = 0;
    for (i, (title, f)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let r = f();
        let dt = t.elapsed();
        match r {
            Ok(detail) => println!("PASS criterion {} ({title}) [{dt:.1?}]: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL criterion {} ({title}) [{dt:.1?}]: {detail}", i + 1);
            }
        }
    }
    println!(
        "acceptance: {} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
