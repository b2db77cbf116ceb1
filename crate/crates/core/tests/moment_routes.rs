use levy_core::ito::ItoSymbol;
use levy_core::levy::*;
use levy_core::tensor::{TensorElement, TensorWord};
use levy_core::Scalar;
use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Coefficients of `1/cosh` by long division with `i128` fractions, kept
/// separate from the library's rational arithmetic.
fn sech_oracle(order: usize) -> Vec<(i128, i128)> {
    let fact = |k: usize| (1..=k as i128).product::<i128>();
    let gcd = |mut a: i128, mut b: i128| {
        while b != 0 {
            (a, b) = (b, a % b);
        }
        a.abs()
    };
    let mut c: Vec<(i128, i128)> = vec![(1, 1)];
    for k in 1..=order {
        // c_k = −Σ_{j even, 2 ≤ j ≤ k} c_{k−j}/j!
        let (mut p, mut q) = (0i128, 1i128);
        for j in (2..=k).step_by(2) {
            let (a, b) = c[k - j];
            let (a, b) = (a, b * fact(j));
            p = p * b + a * q;
            q *= b;
            let g = gcd(p, q).max(1);
            (p, q) = (p / g, q / g);
        }
        c.push((-p, q));
    }
    c
}

#[test]
fn golden_values_from_every_route() {
    let golden = [(2usize, 2i64), (4, 120), (6, 43920), (8, 55843200)];
    for (n, w) in golden {
        let w = BigInt::from(w);
        assert_eq!(w_euler(n), w);
        assert_eq!(w_digraph(n).unwrap(), w);
        assert_eq!(w_direct(n).unwrap(), w);
        assert_eq!(w_arc_tuples(n).unwrap(), w);
        if n <= RECOVERY_CAP {
            assert_eq!(w_recovery(n).unwrap(), w);
        }
    }
    for n in (1..=7).step_by(2) {
        assert!(w_direct(n).unwrap().is_zero());
        assert!(w_digraph(n).unwrap().is_zero());
        assert!(w_euler(n).is_zero());
    }
    assert_eq!(w_arc_tuples(10).unwrap(), w_euler(10));
    assert_eq!(w_digraph(10).unwrap(), w_euler(10));
}

#[test]
fn truncated_power_has_pure_time_top_rank() {
    for n in 1..=4 {
        let full = levy_power(n, false);
        let trunc = levy_power(n, true);
        assert_eq!(full.truncated(n), trunc, "n = {n}");
        // ranks run from n (all stuck) to 2n (no sticking); rank n vanishes for odd n
        let low = if n % 2 == 0 { n } else { n + 1 };
        assert_eq!(full.min_rank(), Some(low));
        assert_eq!(full.max_rank(), Some(2 * n));
        let top = trunc.component(n);
        let expected =
            TensorElement::from_terms([(TensorWord::repeat(ItoSymbol::Dt, n), Scalar::from_integer(w_euler(n)))]);
        assert_eq!(top, expected, "n = {n}");
    }
}

#[test]
fn exact_moments_are_zigzag_over_powers_of_four() {
    let zigzag = [1i64, 1, 5, 61, 1385, 50521];
    for m in 1..=5 {
        let expected = Scalar::new(zigzag[m].into(), BigInt::from(4).pow(m as u32));
        assert_eq!(moment(2 * m, &Scalar::one()).unwrap(), expected, "m = {m}");
    }
}

#[test]
fn moments_scale_with_interval_length() {
    for t in [
        Scalar::one(),
        Scalar::from_integer(2.into()),
        Scalar::new(1.into(), 3.into()),
    ] {
        for m in 1..=4usize {
            let base = moment(2 * m, &Scalar::one()).unwrap();
            let scale = (0..2 * m).fold(Scalar::one(), |acc, _| acc * &t);
            assert_eq!(moment(2 * m, &t).unwrap(), base * scale);
        }
    }
    let four = Scalar::from_integer(4.into());
    assert_eq!(
        moment(2, &four).unwrap() / moment(2, &Scalar::one()).unwrap(),
        Scalar::from_integer(16.into())
    );
}

#[test]
fn sech_coefficients_match_oracle() {
    let oracle = sech_oracle(20);
    let s = sech_taylor(20).unwrap();
    for (k, (p, q)) in oracle.into_iter().enumerate() {
        assert_eq!(s.coefficients[k], Scalar::new(p.into(), q.into()), "k = {k}");
    }
}

#[test]
fn cross_validation_report() {
    let report = cross_validate(8, CrossValidateOptions::default(), &NoClock).unwrap();
    assert_eq!(report.rows.len(), 9);
    assert!(report.rows.iter().all(|r| r.skipped.is_empty()));
    assert_eq!(report.rows[8].w, BigInt::from(55843200));
}

#[test]
fn caps_are_refused() {
    assert!(w_direct(DIRECT_CAP + 1).is_err());
    assert!(w_digraph(DIGRAPH_CAP + 1).is_err());
    assert!(w_recovery(RECOVERY_CAP + 1).is_err());
    assert!(w_arc_tuples(11).is_err());
}
