//! The digamma difference `ψ(1/2 + s/2) − ψ(s/2)` and the bias constants.

use std::f64::consts::PI;

use serde::Serialize;

use crate::bias::Flavor;
use crate::error::{invalid, Result};

/// Partial sums averaged this many times.
const EULER_DEPTH: usize = 64;

/// `2·Σ_{k≥0} (−1)^k/(k + s)` by repeated averaging of partial sums.
///
/// The terms are completely monotone in `k`, so each averaging pass halves
/// the error; 64 passes reach the `f64` floor.
pub fn alternating_digamma_diff(s: f64) -> f64 {
    let mut sums = Vec::with_capacity(EULER_DEPTH + 1);
    let mut acc = 0.0;
    for k in 0..=EULER_DEPTH {
        let term = 1.0 / (k as f64 + s);
        acc += if k % 2 == 0 { term } else { -term };
        sums.push(acc);
    }
    while sums.len() > 1 {
        sums = sums.windows(2).map(|w| 0.5 * (w[0] + w[1])).collect();
    }
    2.0 * sums[0]
}

/// `ψ(1/2 + a/2m) − ψ(a/2m)` for `1 <= a < m`.
pub fn digamma_diff(a: usize, m: usize) -> Result<f64> {
    if !(1 <= a && a < m) {
        return Err(invalid(format!("digamma_diff needs 1 <= a < m, got a = {a}, m = {m}")));
    }
    Ok(alternating_digamma_diff(a as f64 / m as f64))
}

/// Digamma by upward recurrence to `x >= 10` and the asymptotic series.
pub fn digamma(mut x: f64) -> f64 {
    assert!(x > 0.0, "digamma is only evaluated on the positive axis");
    let mut shift = 0.0;
    while x < 10.0 {
        shift -= 1.0 / x;
        x += 1.0;
    }
    let r = 1.0 / (x * x);
    // B_{2k}/(2k) for k = 1..7
    let tail = r
        * (1.0 / 12.0
            - r * (1.0 / 120.0
                - r * (1.0 / 252.0
                    - r * (1.0 / 240.0 - r * (1.0 / 132.0 - r * (691.0 / 32760.0 - r / 12.0))))));
    shift + x.ln() - 0.5 / x - tail
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct BiasConstant {
    pub a: usize,
    pub m: usize,
    pub flavor: Flavor,
    pub value: f64,
}

/// Limit of `p_n(a, m−a, m; x, y)/p_n(x, y)` for `1 <= a < m/2`.
pub fn bias_constant(a: usize, m: usize, flavor: Flavor) -> Result<BiasConstant> {
    if !(1 <= a && 2 * a < m) {
        return Err(invalid(format!("bias constants need 1 <= a < m/2, got a = {a}, m = {m}")));
    }
    let value = match flavor {
        Flavor::F01 => 0.5,
        Flavor::F10 | Flavor::F11 => {
            digamma_diff(a, m)? * (a as f64 * PI / m as f64).sin() / (2.0 * PI)
        }
    };
    Ok(BiasConstant { a, m, flavor, value })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn half_gives_pi() {
        assert!((digamma_diff(1, 2).unwrap() - PI).abs() < 1e-14);
        assert!((digamma_diff(3, 6).unwrap() - PI).abs() < 1e-14);
    }

    #[test]
    fn oracle_known_values() {
        let euler_gamma = 0.577_215_664_901_532_9;
        assert!((digamma(1.0) + euler_gamma).abs() < 1e-14);
        assert!((digamma(0.5) + euler_gamma + 2.0 * 2f64.ln()).abs() < 1e-14);
        assert!((digamma(0.25) - (-euler_gamma - PI / 2.0 - 3.0 * 2f64.ln())).abs() < 1e-13);
    }

    #[test]
    fn two_methods_agree() {
        for m in 2..=12 {
            for a in 1..m {
                let s = a as f64 / m as f64;
                let fast = digamma_diff(a, m).unwrap();
                let slow = digamma(0.5 + s / 2.0) - digamma(s / 2.0);
                assert!(((fast - slow) / slow).abs() < 1e-10, "a = {a}, m = {m}");
                assert!(fast > 0.0);
            }
        }
    }

    #[test]
    fn constants() {
        assert_eq!(bias_constant(1, 3, Flavor::F01).unwrap().value, 0.5);
        let c = bias_constant(1, 3, Flavor::F10).unwrap().value;
        assert_eq!(c, bias_constant(1, 3, Flavor::F11).unwrap().value);
        // (ψ(2/3) − ψ(1/6))·sin(π/3)/(2π)
        assert!((c - 0.691_076_034_711_422_0).abs() < 1e-12, "{c:.16}");
        assert!(bias_constant(2, 4, Flavor::F10).is_err());
        assert!(bias_constant(1, 2, Flavor::F01).is_err());
    }
}
