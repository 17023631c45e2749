//! Behaviour of the symmetric bias generating functions near `q = 1`.

use std::f64::consts::PI;

use num_complex::Complex64;
use num_traits::ToPrimitive;
use serde::Serialize;

use super::digamma::bias_constant;
use crate::bias::{bias_series_symmetric_with, Flavor};
use crate::error::{invalid, Error, Result};
use crate::numeric::{evaluate_coeffs, TAIL_FLAG_RATIO};
use crate::par::Exec;

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct BoundaryRow {
    pub z: f64,
    /// `G(e^{-z/m})` for `m | h`, else `|G(e^{-z/m} ζ_m^h)|`.
    pub value: f64,
    /// Closed main term for `m | h`, else `|G(e^{-z/m})|`.
    pub reference: f64,
    pub ratio: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BoundaryReport {
    pub a: usize,
    pub m: usize,
    pub flavor: Flavor,
    pub h: usize,
    #[serde(rename = "N")]
    pub order: usize,
    pub rows: Vec<BoundaryRow>,
    /// With `z` decreasing: `|ratio − 1|` shrinks for `m | h`, `ratio` shrinks otherwise.
    pub improving: Option<bool>,
}

/// `π²/6`, `π²/12`, `π²/4` growth rate `β` of the total product.
fn growth(flavor: Flavor) -> f64 {
    PI * PI
        / match flavor {
            Flavor::F01 => 12.0,
            Flavor::F10 => 6.0,
            Flavor::F11 => 4.0,
        }
}

/// Leading term of `G_xy(a, m; e^{-z/m})`.
pub fn closed_form(a: usize, m: usize, flavor: Flavor, z: f64) -> Result<f64> {
    let c = bias_constant(a, m, flavor)?.value;
    let mf = m as f64;
    let e = (growth(flavor) * mf / z).exp();
    Ok(match flavor {
        Flavor::F01 => c * std::f64::consts::FRAC_1_SQRT_2 * e,
        Flavor::F10 => c * (z / (2.0 * PI * mf)).sqrt() * e,
        Flavor::F11 => c * (z / (4.0 * PI * mf)).sqrt() * e,
    })
}

/// Smallest order whose crude tail `exp(2√(βk) − zk/m)·k` sits below the flag
/// level relative to the closed-form size.
fn required_order(flavor: Flavor, m: usize, z: f64, from: usize) -> usize {
    let beta = growth(flavor);
    let target = beta * m as f64 / z + TAIL_FLAG_RATIO.ln() - 2.0;
    let mut k = from.max(1);
    while 2.0 * (beta * k as f64).sqrt() - z * k as f64 / m as f64 + (k as f64).ln() > target {
        k += k / 8 + 1;
    }
    k
}

pub fn boundary_check(
    a: usize,
    m: usize,
    flavor: Flavor,
    zs: &[f64],
    h: usize,
    n: usize,
    exec: Exec,
) -> Result<BoundaryReport> {
    bias_constant(a, m, flavor)?;
    if zs.iter().any(|&z| !(z > 0.0 && z.is_finite())) {
        return Err(invalid("z samples must be positive and finite"));
    }
    let series = bias_series_symmetric_with(a, m, flavor, n, exec)?;
    let coeffs: Vec<f64> = series.coeffs().iter().map(|c| c.to_f64().unwrap_or(f64::INFINITY)).collect();
    let twist = Complex64::from_polar(1.0, 2.0 * PI * (h % m) as f64 / m as f64);
    let rows = zs
        .iter()
        .map(|&z| {
            let q = Complex64::new((-z / m as f64).exp(), 0.0);
            let real = evaluate_coeffs(&coeffs, q)?;
            let tail_error = || Error::TailBound {
                order: n,
                required: required_order(flavor, m, z, n + 1),
            };
            if real.tail_flag {
                return Err(tail_error());
            }
            if h % m == 0 {
                let reference = closed_form(a, m, flavor, z)?;
                let value = real.value.re;
                return Ok(BoundaryRow {
                    z,
                    value,
                    reference,
                    ratio: value / reference,
                });
            }
            let twisted = evaluate_coeffs(&coeffs, q * twist)?;
            if twisted.tail_flag && twisted.value.norm() * 1e3 > real.value.norm() {
                return Err(tail_error());
            }
            let value = twisted.value.norm();
            let reference = real.value.norm();
            Ok(BoundaryRow {
                z,
                value,
                reference,
                ratio: value / reference,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let mut by_z = rows.clone();
    by_z.sort_by(|p, q| q.z.total_cmp(&p.z));
    let score = |r: &BoundaryRow| if h % m == 0 { (r.ratio - 1.0).abs() } else { r.ratio };
    let improving = (by_z.len() > 1).then(|| by_z.windows(2).all(|w| score(&w[1]) < score(&w[0])));
    Ok(BoundaryReport {
        a,
        m,
        flavor,
        h,
        order: n,
        rows,
        improving,
    })
}
