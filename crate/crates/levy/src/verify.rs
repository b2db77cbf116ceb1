//! Named property checks behind `levy verify`.

use std::time::{Duration, Instant};

use levy_core::combinatorics::*;
use levy_core::ito::{ItoSymbol, ItoTable};
use levy_core::levy::*;
use levy_core::sim::{signature, theorem5_estimates, time_word_estimates, PlanarPath, SimConfig};
use levy_core::tensor::*;
use levy_core::Scalar;
use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::seq::IndexedRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::runner::RayonRunner;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Profile {
    Fast,
    Full,
}

/// Deliberate corruption used to show that the checks can fail.
#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Fault {
    /// Replaces the planar table with one where `dT·dT = dT`.
    Table,
    /// Adds one to the last zigzag number produced by the recurrence.
    Euler,
}

/// The planar table with `dT·dT = dT`; no longer associative.
pub const CORRUPTED_TABLE: ItoTable = ItoTable::new([
    [Some(ItoSymbol::Dt), None, None],
    [None, Some(ItoSymbol::Dt), None],
    [None, None, Some(ItoSymbol::Dt)],
]);

#[derive(Clone, Debug)]
pub struct Outcome {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    pub elapsed: Duration,
}

type Check = fn(&Ctx) -> Result<String, String>;

struct Ctx {
    full: bool,
    table: ItoTable,
    faults: Vec<Fault>,
}

impl Ctx {
    fn pick<T>(&self, fast: T, full: T) -> T {
        if self.full {
            full
        } else {
            fast
        }
    }

    /// `A_0..=A_n`, corrupted at the end under [`Fault::Euler`].
    fn zigzag(&self, n: usize) -> Vec<BigInt> {
        let mut t = euler_zigzag_table(n);
        if self.faults.contains(&Fault::Euler) {
            if let Some(last) = t.last_mut() {
                *last += 1;
            }
        }
        t
    }

    fn product(&self, a: &TensorElement, b: &TensorElement) -> TensorElement {
        product_with_table(a, b, None, &self.table)
    }
}

fn rng(salt: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(0x5eed_0000 + salt)
}

fn random_word(rng: &mut ChaCha8Rng, max_rank: usize) -> TensorWord {
    let r = rng.random_range(0..=max_rank);
    TensorWord::new((0..r).map(|_| ItoSymbol::ALL[rng.random_range(0..3)]).collect())
}

fn random_element(rng: &mut ChaCha8Rng, max_rank: usize, max_terms: usize) -> TensorElement {
    let k = rng.random_range(1..=max_terms);
    TensorElement::from_terms((0..k).map(|_| {
        let c = Scalar::new(rng.random_range(-5i64..=5).into(), rng.random_range(1i64..=3).into());
        (random_word(rng, max_rank), c)
    }))
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |a, k| a * k)
}

fn ito_associativity(ctx: &Ctx) -> Result<String, String> {
    if let Some((x, y, z)) = ctx.table.associativity_violation() {
        return Err(format!("({x}·{y})·{z} ≠ {x}·({y}·{z})"));
    }
    Ok("27 basis triples".into())
}

fn ito_commutativity(ctx: &Ctx) -> Result<String, String> {
    match ctx.table.commutativity_violation() {
        Some((x, y)) => Err(format!("{x}·{y} ≠ {y}·{x}")),
        None => Ok("9 basis pairs".into()),
    }
}

fn ito_nilpotency(ctx: &Ctx) -> Result<String, String> {
    match ctx.table.nilpotency_violation() {
        Some((x, y, z)) => Err(format!("{x}·{y}·{z} ≠ 0")),
        None => Ok("27 basis triples".into()),
    }
}

fn definition_equivalence(ctx: &Ctx) -> Result<String, String> {
    let max = ctx.pick(5, 6);
    let words: Vec<TensorWord> = (0..=max).flat_map(TensorWord::all_of_rank).collect();
    let mut pairs = 0;
    for u in &words {
        for v in words.iter().filter(|v| u.rank() + v.rank() <= max) {
            let r = shuffle_words_recursive(u, v);
            ensure(r == shuffle_words_subsets(u, v), || {
                format!("{u} · {v}: definitions differ")
            })?;
            let p = ctx.product(&TensorElement::word(u.clone()), &TensorElement::word(v.clone()));
            ensure(r == p, || format!("{u} · {v}: fast product differs"))?;
            pairs += 1;
        }
    }
    let random = ctx.pick(100, 500);
    let mut g = rng(1);
    for _ in 0..random {
        let u = random_word(&mut g, 4);
        let v = random_word(&mut g, 8 - u.rank());
        ensure(shuffle_words_recursive(&u, &v) == shuffle_words_subsets(&u, &v), || {
            format!("{u} · {v}: definitions differ")
        })?;
    }
    Ok(format!(
        "{pairs} exhaustive pairs to total rank {max}, {random} random to 8"
    ))
}

fn hopf_associativity(ctx: &Ctx) -> Result<String, String> {
    let cases = ctx.pick(40, 200);
    let mut g = rng(2);
    for _ in 0..cases {
        let a = random_element(&mut g, 2, 3);
        let b = random_element(&mut g, 2, 3);
        let c = random_element(&mut g, 2, 3);
        ensure(
            ctx.product(&ctx.product(&a, &b), &c) == ctx.product(&a, &ctx.product(&b, &c)),
            || format!("(ab)c ≠ a(bc) for a = {a:?}"),
        )?;
    }
    // the stuck letter dT·dT exercises the table on every dT pair
    let dt = TensorElement::word([ItoSymbol::Dt]);
    let dx = TensorElement::word([ItoSymbol::Dx]);
    ensure(
        ctx.product(&ctx.product(&dx, &dx), &dt) == ctx.product(&dx, &ctx.product(&dx, &dt)),
        || "({dX}{dX}){dT} ≠ {dX}({dX}{dT})".into(),
    )?;
    Ok(format!("{cases} random triples, total rank ≤ 6"))
}

fn hopf_multiplicativity(ctx: &Ctx) -> Result<String, String> {
    let cases = ctx.pick(40, 200);
    let mut g = rng(3);
    for _ in 0..cases {
        let a = random_element(&mut g, 3, 3);
        let b = random_element(&mut g, 3, 3);
        let lhs = coproduct(&product(&a, &b));
        let rhs = multitensor_product(&coproduct(&a), &coproduct(&b)).map_err(|e| e.to_string())?;
        ensure(lhs == rhs, || "Δ(ab) ≠ Δ(a)Δ(b)".into())?;
    }
    Ok(format!("{cases} random pairs of rank ≤ 3"))
}

fn hopf_coassociativity(ctx: &Ctx) -> Result<String, String> {
    let cases = ctx.pick(50, 200);
    let mut g = rng(4);
    for _ in 0..cases {
        let d = coproduct(&random_element(&mut g, 4, 5));
        ensure(d.expand_slot(0).unwrap() == d.expand_slot(1).unwrap(), || {
            "(Δ⊗Id)Δ ≠ (Id⊗Δ)Δ".into()
        })?;
    }
    Ok(format!("{cases} random elements of rank ≤ 4"))
}

fn hopf_counit(ctx: &Ctx) -> Result<String, String> {
    let cases = ctx.pick(50, 200);
    let mut g = rng(5);
    for _ in 0..cases {
        let a = random_element(&mut g, 4, 5);
        let d = coproduct(&a);
        for slot in 0..2 {
            let back = d
                .contract_slot(slot)
                .and_then(|m| m.into_single())
                .map_err(|e| e.to_string())?;
            ensure(back == a, || {
                format!("counit on slot {slot} does not restore the element")
            })?;
        }
    }
    Ok(format!("{cases} random elements of rank ≤ 4"))
}

fn hopf_recovery(ctx: &Ctx) -> Result<String, String> {
    let cases = ctx.pick(50, 200);
    let mut g = rng(6);
    for _ in 0..cases {
        let a = random_element(&mut g, 4, 6);
        for n in 2..=4 {
            ensure(recover_component(&a, n).flatten() == a.component(n), || {
                format!("rank {n} not recovered")
            })?;
        }
    }
    Ok(format!("{cases} random elements, N ≤ 4"))
}

fn hopf_truncation(_: &Ctx) -> Result<String, String> {
    for n in 1..=4 {
        ensure(levy_power(n, false).truncated(n) == levy_power(n, true), || {
            format!("n = {n}")
        })?;
    }
    Ok("n ≤ 4".into())
}

fn hopf_term_count(_: &Ctx) -> Result<String, String> {
    // dX⊗dX⊗dX against dY⊗dY: no sticking is possible, yet every size-valid
    // labelling is scanned
    let u = TensorWord::repeat(ItoSymbol::Dx, 3);
    let v = TensorWord::repeat(ItoSymbol::Dy, 2);
    let (_, counts) = shuffle_words_subsets_counted(&u, &v);
    let f = |k: usize| (1..=k as u64).product::<u64>();
    for (n, scanned) in counts {
        let (p, q) = (3, 2);
        let expected = f(n) / (f(n - q) * f(n - p) * f(p + q - n));
        ensure(scanned == expected, || {
            format!("rank {n}: scanned {scanned}, expected {expected}")
        })?;
    }
    Ok("ranks 3..=5 of {dX⊗dX⊗dX}{dY⊗dY}".into())
}

fn comb_complementarity(ctx: &Ctx) -> Result<String, String> {
    let n_max = ctx.pick(6, 8);
    for n in 1..=n_max {
        for s in Permutation::all(n) {
            let structural = s.is_fixed_point_free()
                && s.has_only_even_cycles()
                && transits(&s).map(|t| t.is_empty()).unwrap_or(false);
            ensure(is_forthback(&s) == structural, || format!("{s}"))?;
        }
    }
    Ok(format!("S_n for n ≤ {n_max}"))
}

fn comb_lemma8(ctx: &Ctx) -> Result<String, String> {
    let m_max = ctx.pick(3, 4);
    let a = ctx.zigzag(2 * m_max);
    for m in 1..=m_max {
        let count = forthback_perms(2 * m).map_err(|e| e.to_string())?.len();
        ensure(BigInt::from(count) == a[2 * m], || {
            format!("S_{}: {count} vs A = {}", 2 * m, a[2 * m])
        })?;
    }
    Ok(format!("2m ≤ {}", 2 * m_max))
}

fn comb_lemma9(ctx: &Ctx) -> Result<String, String> {
    let m_max = ctx.pick(3, 4);
    let a = ctx.zigzag(2 * m_max);
    for m in 1..=m_max {
        let count = cyclic_forthback_count(m).map_err(|e| e.to_string())?;
        ensure(count == a[2 * m - 1], || {
            format!("S_{}: {count} vs A = {}", 2 * m, a[2 * m - 1])
        })?;
    }
    Ok(format!("2m ≤ {}", 2 * m_max))
}

fn comb_cancellation(ctx: &Ctx) -> Result<String, String> {
    let m_max = ctx.pick(3, 4);
    for m in 1..=m_max {
        let mut sum = 0i64;
        for s in enumerate_even_cycle_perms(m).map_err(|e| e.to_string())? {
            if !transits(&s).unwrap().is_empty() {
                sum += i64::from(sn_perm(&s).unwrap());
                let t = cancel_partner(&s).map_err(|e| e.to_string())?;
                ensure(sn_perm(&t).unwrap() == -sn_perm(&s).unwrap(), || {
                    format!("{s} ↦ {t} keeps its sign")
                })?;
            }
        }
        ensure(sum == 0, || format!("m = {m}: transit sum {sum}"))?;
    }
    Ok(format!("2m ≤ {}", 2 * m_max))
}

fn comb_sign_rigidity(ctx: &Ctx) -> Result<String, String> {
    let m_max = ctx.pick(3, 4);
    for m in 1..=m_max {
        let want = if m % 2 == 0 { 1 } else { -1 };
        for s in forthback_perms(2 * m).map_err(|e| e.to_string())? {
            ensure(sn_perm(&s).unwrap() == want, || format!("{s}"))?;
        }
    }
    Ok(format!("2m ≤ {}", 2 * m_max))
}

fn comb_signed_sum(ctx: &Ctx) -> Result<String, String> {
    let m_max = ctx.pick(3, 4);
    let a = ctx.zigzag(2 * m_max);
    for m in 1..=m_max {
        let got = signed_sum_d(m).map_err(|e| e.to_string())?;
        let want = if m % 2 == 0 {
            a[2 * m].clone()
        } else {
            -a[2 * m].clone()
        };
        ensure(got == want, || format!("m = {m}: {got} vs {want}"))?;
    }
    Ok(format!("m ≤ {m_max}"))
}

fn comb_bijection(ctx: &Ctx) -> Result<String, String> {
    for m in 1..=3 {
        let fb = forthback_perms(2 * m).map_err(|e| e.to_string())?;
        let mut images = Vec::new();
        for s in &fb {
            let z = fundamental_transform(s).map_err(|e| e.to_string())?;
            ensure(is_zigzag(&z), || format!("{s} ↦ {z} not zigzag"))?;
            ensure(inverse_fundamental(&z).as_ref() == Ok(s), || {
                format!("{s} does not round-trip")
            })?;
            images.push(z);
        }
        images.sort();
        let mut zz: Vec<Permutation> = Permutation::all(2 * m).filter(is_zigzag).collect();
        zz.sort();
        ensure(images == zz, || {
            format!("not onto the zigzag permutations of S_{}", 2 * m)
        })?;
    }
    if ctx.full {
        let fb = forthback_perms(8).map_err(|e| e.to_string())?;
        let mut g = rng(7);
        for _ in 0..1000 {
            let s = fb.choose(&mut g).expect("nonempty");
            let z = fundamental_transform(s).map_err(|e| e.to_string())?;
            ensure(inverse_fundamental(&z).as_ref() == Ok(s), || {
                format!("{s} does not round-trip")
            })?;
        }
        return Ok("2m ≤ 6 exhaustive, 1000 samples in S_8".into());
    }
    Ok("2m ≤ 6 exhaustive".into())
}

fn comb_zigzag_enumeration(ctx: &Ctx) -> Result<String, String> {
    let n_max = ctx.pick(8, 10);
    let a = ctx.zigzag(n_max);
    for (n, an) in a.iter().enumerate() {
        let e = euler_zigzag_enumerate(n).map_err(|e| e.to_string())?;
        ensure(&e == an, || format!("A_{n}: recurrence {an}, enumeration {e}"))?;
    }
    Ok(format!("n ≤ {n_max}"))
}

fn levy_route_agreement(ctx: &Ctx) -> Result<String, String> {
    let n_max = ctx.pick(6, 8);
    let a = ctx.zigzag(n_max);
    for n in 1..=n_max {
        let euler = if n % 2 == 0 {
            factorial(n) * &a[n]
        } else {
            BigInt::zero()
        };
        let direct = w_direct(n).map_err(|e| e.to_string())?;
        let digraph = w_digraph(n).map_err(|e| e.to_string())?;
        let arcs = w_arc_tuples(n).map_err(|e| e.to_string())?;
        ensure(direct == euler && digraph == euler && arcs == euler, || {
            format!("n = {n}: direct {direct}, digraph {digraph}, arc tuples {arcs}, euler {euler}")
        })?;
    }
    Ok(format!("n ≤ {n_max}"))
}

fn levy_recovery_route(ctx: &Ctx) -> Result<String, String> {
    let n_max = ctx.pick(4, RECOVERY_CAP);
    for n in 1..=n_max {
        let r = w_recovery(n).map_err(|e| e.to_string())?;
        ensure(r == w_euler(n), || format!("n = {n}: {r}"))?;
    }
    Ok(format!("n ≤ {n_max}"))
}

fn levy_moment_identity(ctx: &Ctx) -> Result<String, String> {
    let a = ctx.zigzag(10);
    let ts = [
        Scalar::one(),
        Scalar::from_integer(2.into()),
        Scalar::new(1.into(), 3.into()),
    ];
    for t in &ts {
        for m in 1..=5 {
            let half = t / Scalar::from_integer(2.into());
            let want = (0..2 * m).fold(Scalar::from_integer(a[2 * m].clone()), |acc, _| acc * &half);
            let got = moment(2 * m, t).map_err(|e| e.to_string())?;
            ensure(got == want, || format!("m = {m}, t = {t}: {got} vs {want}"))?;
        }
    }
    Ok("m ≤ 5, t ∈ {1, 2, 1/3}".into())
}

fn levy_series_consistency(ctx: &Ctx) -> Result<String, String> {
    let a = ctx.zigzag(20);
    let s = sech_via_reciprocal(20);
    for m in 0..=10 {
        let v = Scalar::new(a[2 * m].clone(), factorial(2 * m));
        let want = if m % 2 == 1 { -v } else { v };
        ensure(s.coefficients[2 * m] == want, || {
            format!("c_{}: {} vs {want}", 2 * m, s.coefficients[2 * m])
        })?;
    }
    Ok("m ≤ 10".into())
}

fn levy_intermediate_structure(ctx: &Ctx) -> Result<String, String> {
    let n_max = ctx.pick(3, 4);
    for n in 1..=n_max {
        let p = levy_power(n, false);
        for (w, _) in p.iter() {
            let pure_time = !w.has_noise();
            ensure(w.rank() >= n, || format!("n = {n}: term {w} below rank n"))?;
            ensure(!pure_time || w.rank() == n, || {
                format!("n = {n}: pure-time term {w} above rank n")
            })?;
        }
    }
    Ok(format!("untruncated powers, n ≤ {n_max}"))
}

fn sim_determinism(_: &Ctx) -> Result<String, String> {
    let cfg = SimConfig::new(0.0, 1.0, 200, 1, 42).map_err(|e| e.to_string())?;
    for i in [0, 1, 1000, u64::MAX] {
        let a = PlanarPath::sample(&cfg, i);
        let b = PlanarPath::sample(&cfg, i);
        ensure(a == b, || format!("path {i} differs between draws"))?;
        let sa: Vec<f64> = signature(&a, 2).into_iter().map(|(_, v)| v).collect();
        let sb: Vec<f64> = signature(&b, 2).into_iter().map(|(_, v)| v).collect();
        ensure(sa.iter().zip(&sb).all(|(x, y)| x.to_bits() == y.to_bits()), || {
            "signature differs".into()
        })?;
    }
    Ok("bit-identical paths and signatures".into())
}

fn sim_theorem5(ctx: &Ctx) -> Result<String, String> {
    let (steps, paths) = ctx.pick((100, 4000), (200, 20000));
    let cfg = SimConfig::new(0.0, 1.0, steps, paths, 5).map_err(|e| e.to_string())?;
    let est = theorem5_estimates(&cfg, 3, &RayonRunner).map_err(|e| e.to_string())?;
    let worst = est
        .iter()
        .map(|(w, e)| (w, e.z_score(0.0).abs()))
        .fold(None, |m: Option<(&TensorWord, f64)>, (w, z)| match m {
            Some((_, zm)) if zm >= z => m,
            _ => Some((w, z)),
        })
        .expect("words present");
    ensure(worst.1 <= 4.0, || format!("E[J({})] has |z| = {:.2}", worst.0, worst.1))?;
    Ok(format!("{} words, max |z| = {:.2} at {}", est.len(), worst.1, worst.0))
}

fn sim_time_words(_: &Ctx) -> Result<String, String> {
    let steps = 500;
    let cfg = SimConfig::new(0.0, 2.0, steps, 2, 0).map_err(|e| e.to_string())?;
    let est = time_word_estimates(&cfg, 3, &RayonRunner).map_err(|e| e.to_string())?;
    for (m, (w, e)) in est.iter().enumerate() {
        let m = m as i32 + 1;
        let exact = 2f64.powi(m) / [1.0, 1.0, 2.0, 6.0][m as usize];
        let tol = exact * m as f64 * m as f64 / steps as f64;
        ensure((e.mean - exact).abs() <= tol, || {
            format!("J({w}) = {} vs {exact}", e.mean)
        })?;
    }
    Ok("m ≤ 3 within O(1/steps)".into())
}

const CHECKS: &[(&str, bool, Check)] = &[
    ("ito.associativity", true, ito_associativity),
    ("ito.commutativity", true, ito_commutativity),
    ("ito.nilpotency", true, ito_nilpotency),
    ("hopf.definition_equivalence", true, definition_equivalence),
    ("hopf.associativity", true, hopf_associativity),
    ("hopf.multiplicativity", true, hopf_multiplicativity),
    ("hopf.coassociativity", true, hopf_coassociativity),
    ("hopf.counit_laws", true, hopf_counit),
    ("hopf.recovery", true, hopf_recovery),
    ("hopf.truncation", true, hopf_truncation),
    ("hopf.term_count", true, hopf_term_count),
    ("combinatorics.complementarity", true, comb_complementarity),
    ("combinatorics.lemma8_count", true, comb_lemma8),
    ("combinatorics.lemma9_count", true, comb_lemma9),
    ("combinatorics.cancellation", true, comb_cancellation),
    ("combinatorics.sign_rigidity", true, comb_sign_rigidity),
    ("combinatorics.signed_sum", true, comb_signed_sum),
    ("combinatorics.bijection", true, comb_bijection),
    ("combinatorics.zigzag_enumeration", true, comb_zigzag_enumeration),
    ("moments.route_agreement", true, levy_route_agreement),
    ("moments.recovery_route", true, levy_recovery_route),
    ("moments.moment_identity", true, levy_moment_identity),
    ("moments.series_consistency", true, levy_series_consistency),
    ("moments.intermediate_structure", true, levy_intermediate_structure),
    ("sim.determinism", true, sim_determinism),
    ("sim.pure_time_words", true, sim_time_words),
    ("sim.theorem5", false, sim_theorem5),
];

/// Names of the checks in a profile, in run order.
pub fn check_names(profile: Profile) -> Vec<&'static str> {
    CHECKS
        .iter()
        .filter(|(_, fast, _)| *fast || profile == Profile::Full)
        .map(|(n, _, _)| *n)
        .collect()
}

pub fn run(profile: Profile, faults: &[Fault]) -> Vec<Outcome> {
    let ctx = Ctx {
        full: profile == Profile::Full,
        table: if faults.contains(&Fault::Table) {
            CORRUPTED_TABLE
        } else {
            ItoTable::PLANAR
        },
        faults: faults.to_vec(),
    };
    CHECKS
        .iter()
        .filter(|(_, fast, _)| *fast || ctx.full)
        .map(|&(name, _, check)| {
            let t = Instant::now();
            let r = check(&ctx);
            let elapsed = t.elapsed();
            match r {
                Ok(detail) => Outcome {
                    name,
                    passed: true,
                    detail,
                    elapsed,
                },
                Err(detail) => Outcome {
                    name,
                    passed: false,
                    detail,
                    elapsed,
                },
            }
        })
        .collect()
}
