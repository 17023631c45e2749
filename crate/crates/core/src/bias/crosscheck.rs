//! Agreement of the two engines with brute-force enumeration.

use num_rational::BigRational;
use serde::Serialize;

use super::{bias_series_dp, bias_series_gf, BiasSpec, Weights};
use crate::error::{Error, Result};
use crate::oracle::oracle_bias;
use crate::par::Exec;
use crate::truncated::CoefficientValue;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CrossCheckCase {
    pub spec: BiasSpec,
    pub gf_dp: bool,
    pub gf_oracle: bool,
    /// Smallest `n` where any two sources differ.
    pub first_mismatch: Option<usize>,
}

impl CrossCheckCase {
    pub fn agree(&self) -> bool {
        self.gf_dp && self.gf_oracle
    }
}

/// All `(a, b, m)` with `a != b`, `1 <= a, b <= m <= m_max`.
pub fn all_pairs(m_max: usize) -> Vec<(usize, usize, usize)> {
    let mut out = Vec::new();
    for m in 1..=m_max {
        for a in 1..=m {
            for b in 1..=m {
                if a != b {
                    out.push((a, b, m));
                }
            }
        }
    }
    out
}

/// Compares `gf`, `dp` and the oracle for every triple and weight pair.
///
/// The oracle is tallied once per triple with symbolic weights and then
/// evaluated at each pair.
pub fn cross_check(
    triples: &[(usize, usize, usize)],
    weights: &[(BigRational, BigRational)],
    n: usize,
    exec: Exec,
) -> Result<Vec<CrossCheckCase>> {
    let per_triple = exec.map(triples, |&(a, b, m)| -> Result<Vec<CrossCheckCase>> {
        let symbolic = BiasSpec::new(a, b, m, Weights::Symbolic)?;
        let markers = (0..=n)
            .map(|k| match oracle_bias(&symbolic, k)? {
                CoefficientValue::Marker(p) => Ok(p),
                _ => Err(Error::DomainMismatch {
                    left: "marker",
                    right: "exact",
                }),
            })
            .collect::<Result<Vec<_>>>()?;
        weights
            .iter()
            .map(|(x, y)| {
                let spec = BiasSpec::new(a, b, m, Weights::exact(x.clone(), y.clone())?)?;
                let gf = bias_series_gf(&spec, n)?.rational_coeffs()?;
                let dp = bias_series_dp(&spec, n)?.rational_coeffs()?;
                let oracle: Vec<BigRational> = markers.iter().map(|p| p.evaluate(x, y)).collect();
                let first_mismatch = (0..=n).find(|&k| gf[k] != dp[k] || gf[k] != oracle[k]);
                Ok(CrossCheckCase {
                    spec,
                    gf_dp: gf == dp,
                    gf_oracle: gf == oracle,
                    first_mismatch,
                })
            })
            .collect()
    });
    let mut out = Vec::new();
    for cases in per_triple {
        out.extend(cases?);
    }
    Ok(out)
}
