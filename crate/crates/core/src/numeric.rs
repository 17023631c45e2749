//! Floating-point evaluation of exact series inside the unit disc.

use num_complex::Complex64;
use num_traits::ToPrimitive;

use crate::error::{invalid, Error, Result};
use crate::truncated::TruncatedSeries;

/// Relative size of the crude tail estimate that raises the flag.
pub const TAIL_FLAG_RATIO: f64 = 1e-6;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Evaluation {
    pub value: Complex64,
    /// Raised when `|c_N q0^N|·N` exceeds [`TAIL_FLAG_RATIO`] of `|value|`.
    pub tail_flag: bool,
}

/// Coefficients as `f64`; values beyond the `f64` range become infinite.
pub fn coeffs_f64(s: &TruncatedSeries) -> Result<Vec<f64>> {
    match s {
        TruncatedSeries::Integer(s) => Ok(s
            .coeffs()
            .iter()
            .map(|c| c.to_f64().unwrap_or(f64::NAN))
            .collect()),
        TruncatedSeries::Rational(s) => Ok(s
            .coeffs()
            .iter()
            .map(|c| c.to_f64().unwrap_or(f64::NAN))
            .collect()),
        TruncatedSeries::Marker(_) => Err(Error::DomainMismatch {
            left: "marker",
            right: "numeric",
        }),
    }
}

/// `Σ c_n q0^n` for an integer or rational series, `|q0| < 1`.
pub fn evaluate_numeric(s: &TruncatedSeries, q0: Complex64) -> Result<Evaluation> {
    evaluate_coeffs(&coeffs_f64(s)?, q0)
}

pub fn evaluate_coeffs(coeffs: &[f64], q0: Complex64) -> Result<Evaluation> {
    if !(q0.norm() < 1.0) {
        return Err(invalid(format!("|q0| = {} is not inside the unit disc", q0.norm())));
    }
    let mut acc = Complex64::new(0.0, 0.0);
    for c in coeffs.iter().rev() {
        acc = acc * q0 + c;
    }
    let n = coeffs.len() - 1;
    let last = coeffs[n].abs() * q0.norm().powi(n as i32) * n.max(1) as f64;
    let tail_flag = !acc.norm().is_finite() || last > TAIL_FLAG_RATIO * acc.norm();
    Ok(Evaluation {
        value: acc,
        tail_flag,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qfunc::euler_product;
    use crate::series::Series;
    use num_bigint::BigInt;

    #[test]
    fn constant_one() {
        let s = TruncatedSeries::Integer(Series::one(10));
        let e = evaluate_numeric(&s, Complex64::new(0.3, -0.2)).unwrap();
        assert_eq!(e.value, Complex64::new(1.0, 0.0));
        assert!(!e.tail_flag);
    }

    #[test]
    fn geometric_at_half() {
        let mut one_minus_q = Series::<BigInt>::one(60);
        one_minus_q.set_coeff(1, BigInt::from(-1));
        let s = TruncatedSeries::Integer(one_minus_q.invert().unwrap());
        let e = evaluate_numeric(&s, Complex64::new(0.5, 0.0)).unwrap();
        assert!((e.value.re - 2.0).abs() < 1e-12);
    }

    #[test]
    fn inverse_euler_matches_direct_product() {
        let s = TruncatedSeries::Integer(euler_product(50).invert().unwrap());
        let e = evaluate_numeric(&s, Complex64::new(0.1, 0.0)).unwrap();
        let direct: f64 = (1..200).map(|j| 1.0 / (1.0 - 0.1f64.powi(j))).product();
        assert!(!e.tail_flag);
        assert!((e.value.re - direct).abs() < 1e-13 * direct);
    }

    #[test]
    fn outside_disc_rejected() {
        let s = TruncatedSeries::Integer(Series::one(3));
        assert!(evaluate_numeric(&s, Complex64::new(1.0, 0.0)).is_err());
        assert!(evaluate_numeric(&s, Complex64::new(0.0, -1.5)).is_err());
    }

    #[test]
    fn short_series_flags_tail() {
        let mut one_minus_q = Series::<BigInt>::one(10);
        one_minus_q.set_coeff(1, BigInt::from(-1));
        let s = TruncatedSeries::Integer(one_minus_q.invert().unwrap());
        let e = evaluate_numeric(&s, Complex64::new(0.9, 0.0)).unwrap();
        assert!(e.tail_flag);
    }
}
