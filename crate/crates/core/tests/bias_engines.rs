//! Engines against a plain enumeration written here and against published values.

use num_rational::BigRational;
use qbias::bias::{
    bias_series_dp, bias_series_gf, bias_series_symmetric, compare_bias, theorem2_witness, BiasSpec, Flavor,
    Weights,
};
use qbias::truncated::parse_rational;

/// Partitions of `n` into parts `<= max`, distinct when asked.
fn parts(n: usize, max: usize, distinct: bool, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if n == 0 {
        out.push(prefix.clone());
        return;
    }
    for p in (1..=max.min(n)).rev() {
        prefix.push(p);
        let next = if distinct { p - 1 } else { p };
        parts(n - p, next, distinct, prefix, out);
        prefix.pop();
    }
}

fn all(n: usize, distinct: bool) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    parts(n, n, distinct, &mut Vec::new(), &mut out);
    out
}

fn class(p: usize, m: usize) -> usize {
    (p - 1) % m + 1
}

/// `Σ x^ℓ(λ) y^ℓ(μ)` over `|λ| + |μ| = n` with more `a`-parts than `b`-parts.
fn naive(a: usize, b: usize, m: usize, x: &BigRational, y: &BigRational, n: usize) -> BigRational {
    let mut total = BigRational::from_integer(0.into());
    for k in 0..=n {
        for lam in all(k, false) {
            for mu in all(n - k, true) {
                let count = |c: usize| lam.iter().chain(&mu).filter(|&&p| class(p, m) == c).count();
                if count(a) > count(b) {
                    total += num_traits::pow(x.clone(), lam.len()) * num_traits::pow(y.clone(), mu.len());
                }
            }
        }
    }
    total
}

fn r(s: &str) -> BigRational {
    parse_rational(s).unwrap()
}

#[test]
fn engines_match_enumeration() {
    for (x, y) in [("1", "0"), ("0", "1"), ("3/2", "1/2"), ("2", "1")] {
        for (a, b, m) in [(1, 2, 2), (2, 1, 3), (1, 3, 4), (4, 2, 5), (3, 3, 3)] {
            if a == b {
                continue;
            }
            let spec = BiasSpec::new(a, b, m, Weights::exact(r(x), r(y)).unwrap()).unwrap();
            let gf = bias_series_gf(&spec, 14).unwrap().rational_coeffs().unwrap();
            let dp = bias_series_dp(&spec, 14).unwrap().rational_coeffs().unwrap();
            for n in 0..=14 {
                let want = naive(a, b, m, &r(x), &r(y), n);
                assert_eq!(gf[n], want, "gf ({a},{b},{m};{x},{y}) n = {n}");
                assert_eq!(dp[n], want, "dp ({a},{b},{m};{x},{y}) n = {n}");
            }
        }
    }
}

#[test]
fn symmetric_closed_forms_match_dp() {
    for (a, m) in [(1, 3), (1, 4), (2, 5), (3, 7)] {
        for f in Flavor::ALL {
            let (x, y) = f.weights();
            let spec = BiasSpec::with_ints(a, m - a, m, x, y).unwrap();
            let dp = bias_series_dp(&spec, 120).unwrap().rational_coeffs().unwrap();
            let sym = bias_series_symmetric(a, m, f, 120).unwrap();
            for n in 0..=120 {
                assert_eq!(dp[n], BigRational::from_integer(sym.coeff(n).clone()), "({a},{m}) {f} n = {n}");
            }
        }
    }
}

#[test]
fn first_distinct_value() {
    // only the partition (1) of 1 has more parts ≡ 1 than ≡ 2 (mod 3)
    let s = bias_series_symmetric(1, 3, Flavor::F01, 5).unwrap();
    assert_eq!(s.coeff(1), &1.into());
}

#[test]
fn parity_landmarks() {
    let r10 = compare_bias(&BiasSpec::with_ints(1, 2, 2, 1, 0).unwrap(), 300).unwrap();
    assert!(r10.violations.is_empty());
    assert_eq!(r10.equalities(), vec![0, 2]);

    let r01 = compare_bias(&BiasSpec::with_ints(1, 2, 2, 0, 1).unwrap(), 1000).unwrap();
    let mut failures = r01.equalities();
    failures.extend(&r01.violations);
    failures.sort_unstable();
    assert_eq!(failures, vec![0, 2, 4, 6, 7, 9, 11, 13, 15, 17, 19]);
}

#[test]
fn small_witnesses() {
    assert_eq!(theorem2_witness(1, 3, 4), Some(2));
    assert_eq!(theorem2_witness(3, 6, 9), Some(1));
}

#[test]
fn symbolic_weights_specialize() {
    let sym = BiasSpec::new(1, 2, 3, Weights::Symbolic).unwrap();
    let s = bias_series_gf(&sym, 10).unwrap();
    let exact = BiasSpec::with_ints(1, 2, 3, 2, 3).unwrap();
    let e = bias_series_gf(&exact, 10).unwrap().rational_coeffs().unwrap();
    let coeffs = match s {
        qbias::TruncatedSeries::Marker(m) => m,
        _ => panic!("symbolic weights give marker coefficients"),
    };
    for n in 0..=10 {
        assert_eq!(coeffs.coeff(n).evaluate(&r("2"), &r("3")), e[n]);
    }
}
