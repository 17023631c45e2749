//! Ratio `R_n = p_n(a, m−a, m; x, y)/p_n(x, y)` against the bias constant.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde::Serialize;

use super::digamma::bias_constant;
use crate::bias::gf::total_product;
use crate::bias::weights::ScaledWeights;
use crate::bias::{bias_series_symmetric_with, Flavor};
use crate::error::{invalid, Result};
use crate::par::Exec;
use crate::series::Series;

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct ConvergenceRow {
    pub n: usize,
    pub ratio: f64,
    pub reference: f64,
    pub abs_error: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ConvergenceReport {
    pub a: usize,
    pub m: usize,
    pub flavor: Flavor,
    #[serde(rename = "N")]
    pub order: usize,
    pub rows: Vec<ConvergenceRow>,
    /// `|R_n − c|` strictly decreasing; `None` for fewer than two samples.
    pub trend: Option<bool>,
}

/// Total weighted series for a flavor, `p_n(x, y)`.
pub fn flavor_total(flavor: Flavor, n: usize) -> Series<BigInt> {
    let (x, y) = flavor.weights();
    let w = ScaledWeights::new(&BigRational::from_integer(x.into()), &BigRational::from_integer(y.into()), n);
    total_product(&w, n)
}

pub(crate) fn big_ratio(num: &BigInt, den: &BigInt) -> f64 {
    BigRational::new(num.clone(), den.clone()).to_f64().unwrap_or(f64::NAN)
}

pub fn convergence_report(
    a: usize,
    m: usize,
    flavor: Flavor,
    samples: &[usize],
    n: usize,
    exec: Exec,
) -> Result<ConvergenceReport> {
    let c = bias_constant(a, m, flavor)?.value;
    if samples.is_empty() || samples.windows(2).any(|w| w[0] >= w[1]) {
        return Err(invalid("samples must be nonempty and strictly increasing"));
    }
    if samples.last().is_some_and(|&s| s > n) {
        return Err(invalid(format!("samples must not exceed N = {n}")));
    }
    let (sym, total) = exec.join(
        || bias_series_symmetric_with(a, m, flavor, n, exec),
        || flavor_total(flavor, n),
    );
    let sym = sym?;
    let rows: Vec<ConvergenceRow> = samples
        .iter()
        .map(|&k| {
            let ratio = big_ratio(sym.coeff(k), total.coeff(k));
            ConvergenceRow {
                n: k,
                ratio,
                reference: c,
                abs_error: (ratio - c).abs(),
            }
        })
        .collect();
    let trend = (rows.len() > 1).then(|| rows.windows(2).all(|w| w[1].abs_error < w[0].abs_error));
    Ok(ConvergenceReport {
        a,
        m,
        flavor,
        order: n,
        rows,
        trend,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_sample_has_no_trend() {
        let r = convergence_report(1, 3, Flavor::F01, &[50], 60, Exec::Sequential).unwrap();
        assert_eq!(r.rows.len(), 1);
        assert_eq!(r.trend, None);
    }

    #[test]
    fn rejects_bad_samples() {
        assert!(convergence_report(1, 3, Flavor::F01, &[50, 40], 60, Exec::Sequential).is_err());
        assert!(convergence_report(1, 3, Flavor::F01, &[70], 60, Exec::Sequential).is_err());
        assert!(convergence_report(2, 4, Flavor::F01, &[10], 60, Exec::Sequential).is_err());
    }

    #[test]
    fn ratio_is_a_fraction() {
        let r = convergence_report(1, 3, Flavor::F10, &[100, 200], 200, Exec::Sequential).unwrap();
        for row in &r.rows {
            assert!(row.ratio > 0.0 && row.ratio < 1.0);
        }
    }
}
