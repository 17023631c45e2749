//! Finite-horizon evidence for distinct-partition biases `d_n(a,b;m)`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use super::gf::GfEngine;
use super::symmetric::mod3_difference_product;
use super::weights::ScaledWeights;
use crate::error::{invalid, Result};
use crate::par::Exec;
use crate::series::Series;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConjectureReport {
    pub a: usize,
    pub b: usize,
    pub m: usize,
    /// Largest `n` examined.
    pub horizon: usize,
    /// `n` with `d_n(a,b;m) < d_n(b,a;m)`.
    pub violations: Vec<usize>,
    /// Last violation plus one, or 0; minimal within the horizon only.
    pub threshold: usize,
    /// A violation lies in the top tenth of the horizon.
    pub inconclusive: bool,
}

fn distinct_pair(a: usize, b: usize, m: usize, n: usize) -> (Series<BigInt>, Series<BigInt>) {
    let w = ScaledWeights::new(&BigRational::zero(), &BigRational::one(), n);
    let engine = GfEngine::new(&w, n, Exec::Sequential);
    (engine.bias(a, b, m), engine.bias(b, a, m))
}

/// Scans `d_n(a,b;m) >= d_n(b,a;m)` for `n <= N`.
pub fn conjecture_scan(a: usize, b: usize, m: usize, n: usize) -> Result<ConjectureReport> {
    if m < 3 || !(1 <= a && a < b && b <= m) {
        return Err(invalid(format!("need 1 <= a < b <= m and m >= 3, got ({a},{b},{m})")));
    }
    let (ab, ba) = distinct_pair(a, b, m, n);
    let violations: Vec<usize> = (0..=n).filter(|&k| ab.coeff(k) < ba.coeff(k)).collect();
    let threshold = violations.last().map_or(0, |v| v + 1);
    let inconclusive = violations.iter().any(|&v| 10 * v >= 9 * n);
    Ok(ConjectureReport {
        a,
        b,
        m,
        horizon: n,
        violations,
        threshold,
        inconclusive,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Mod3Report {
    pub horizon: usize,
    /// `n ≡ 2 (mod 3)` with `d_n(1,2;3) > d_n(2,1;3)`.
    pub failures_class2: Vec<usize>,
    /// `n ≢ 2 (mod 3)` with `d_n(1,2;3) < d_n(2,1;3)`.
    pub failures_other: Vec<usize>,
    /// The difference matches its product form coefficientwise.
    pub product_form_agrees: bool,
}

impl Mod3Report {
    pub fn passed(&self) -> bool {
        self.failures_class2.is_empty() && self.failures_other.is_empty() && self.product_form_agrees
    }
}

/// The sign pattern of `d_n(1,2;3) - d_n(2,1;3)` by residue of `n` mod 3.
pub fn mod3_proposition(n: usize) -> Mod3Report {
    let (ab, ba) = distinct_pair(1, 2, 3, n);
    let diff = ab.try_sub(&ba).expect("same order");
    let product_form_agrees = diff == mod3_difference_product(n);
    let mut failures_class2 = Vec::new();
    let mut failures_other = Vec::new();
    for k in 0..=n {
        let d = diff.coeff(k);
        if k % 3 == 2 && *d > BigInt::zero() {
            failures_class2.push(k);
        }
        if k % 3 != 2 && *d < BigInt::zero() {
            failures_other.push(k);
        }
    }
    Mod3Report {
        horizon: n,
        failures_class2,
        failures_other,
        product_form_agrees,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_small_modulus() {
        assert!(conjecture_scan(1, 2, 2, 10).is_err());
        assert!(conjecture_scan(2, 1, 3, 10).is_err());
    }

    #[test]
    fn four_three_one() {
        let r = conjecture_scan(1, 3, 4, 120).unwrap();
        assert_eq!(r.threshold, 0);
        assert!(!r.inconclusive);
    }

    #[test]
    fn mod3_small() {
        assert!(mod3_proposition(90).passed());
    }
}
