//! Residue-class bias counts `p_n(a,b,m;x,y)` and the checks built on them.

mod conjecture;
mod crosscheck;
pub mod dp;
pub mod gf;
mod nonneg;
mod report;
mod spec;
mod sweep;
pub mod symmetric;
pub mod weights;
mod witness;

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;

pub use crosscheck::{all_pairs, cross_check, CrossCheckCase};
pub use conjecture::{conjecture_scan, mod3_proposition, ConjectureReport, Mod3Report};
pub use nonneg::{nonneg_suite, random_params, NonnegKind, NonnegOutcome, NonnegParams};
pub use report::{compare_bias, compare_bias_with, format_value, monotonicity_check, BiasReport};
pub use spec::{residue, BiasSpec, Weights};
pub use sweep::{monotonicity_sweep, ordered_triples, theorem1_sweep, theorem2_sweep, SweepCase, SweepReport};
pub use symmetric::{bias_series_symmetric, bias_series_symmetric_with, Flavor};
pub use witness::theorem2_witness;

use crate::error::{Error, Result};
use crate::par::Exec;
use crate::series::Series;
use crate::truncated::TruncatedSeries;
use gf::GfEngine;
use weights::{MarkerWeights, ScaledWeights, WeightSystem};

/// How a bias series was produced.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    /// Restricted double sum.
    Gf,
    /// Excess-marker product.
    Dp,
    /// Symmetric single-sum closed form.
    Symmetric,
}

impl Method {
    pub fn tag(self) -> &'static str {
        match self {
            Method::Gf => "gf",
            Method::Dp => "dp",
            Method::Symmetric => "symmetric",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for Method {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "gf" => Ok(Method::Gf),
            "dp" => Ok(Method::Dp),
            "symmetric" => Ok(Method::Symmetric),
            _ => Err(Error::Parse(format!("unknown method '{s}', expected gf, dp or symmetric"))),
        }
    }
}

fn from_scaled(w: &ScaledWeights, s: Series<BigInt>) -> TruncatedSeries {
    if w.is_integral() {
        TruncatedSeries::Integer(s)
    } else {
        let n = s.order();
        TruncatedSeries::Rational(Series::from_prefix(w.unscale_all(s.coeffs()), n))
    }
}

/// `Σ p_n(x,y) q^n = (-yq;q)_∞ / (xq;q)_∞`.
pub fn total_weighted_series(x: &BigRational, y: &BigRational, n: usize) -> Result<TruncatedSeries> {
    let w = Weights::exact(x.clone(), y.clone())?;
    total_weighted_series_for(&w, n)
}

pub fn total_weighted_series_for(weights: &Weights, n: usize) -> Result<TruncatedSeries> {
    Ok(match weights {
        Weights::Exact { x, y } => {
            let w = ScaledWeights::new(x, y, n);
            from_scaled(&w, gf::total_product(&w, n))
        }
        Weights::Symbolic => TruncatedSeries::Marker(gf::total_product(&MarkerWeights, n)),
    })
}

fn run<W: WeightSystem>(w: &W, spec: &BiasSpec, n: usize, method: Method, exec: Exec) -> Result<Series<W::R>> {
    match method {
        Method::Gf => Ok(GfEngine::new(w, n, exec).bias(spec.a, spec.b, spec.m)),
        Method::Dp => Ok(dp::bias(w, spec.a, spec.b, spec.m, n)),
        Method::Symmetric => Err(Error::InvalidParameter(
            "the symmetric method is only available through bias_series_symmetric".into(),
        )),
    }
}

/// Integer picture `D^n p_n` of an exactly weighted spec.
pub(crate) fn scaled_bias(
    spec: &BiasSpec,
    n: usize,
    method: Method,
    exec: Exec,
) -> Result<(ScaledWeights, Series<BigInt>)> {
    let Weights::Exact { x, y } = &spec.weights else {
        return Err(Error::InvalidParameter("exact weights required".into()));
    };
    let w = ScaledWeights::new(x, y, n);
    if method == Method::Symmetric {
        let flavor = Flavor::ALL
            .into_iter()
            .find(|f| {
                let (fx, fy) = f.weights();
                *x == BigRational::from_integer(fx.into()) && *y == BigRational::from_integer(fy.into())
            })
            .ok_or_else(|| Error::InvalidParameter("the symmetric method needs (x, y) in {(0,1), (1,0), (1,1)}".into()))?;
        if spec.b + spec.a != spec.m {
            return Err(Error::InvalidParameter("the symmetric method needs b = m - a".into()));
        }
        let s = bias_series_symmetric_with(spec.a, spec.m, flavor, n, exec)?;
        return Ok((w, s));
    }
    let s = run(&w, spec, n, method, exec)?;
    Ok((w, s))
}

fn bias_series(spec: &BiasSpec, n: usize, method: Method) -> Result<TruncatedSeries> {
    match &spec.weights {
        Weights::Exact { .. } => {
            let (w, s) = scaled_bias(spec, n, method, Exec::default())?;
            Ok(from_scaled(&w, s))
        }
        Weights::Symbolic => Ok(TruncatedSeries::Marker(run(
            &MarkerWeights,
            spec,
            n,
            method,
            Exec::default(),
        )?)),
    }
}

/// `p_0..p_N` from the restricted double sum.
pub fn bias_series_gf(spec: &BiasSpec, n: usize) -> Result<TruncatedSeries> {
    bias_series(spec, n, Method::Gf)
}

/// `p_0..p_N` from the excess-marker product.
pub fn bias_series_dp(spec: &BiasSpec, n: usize) -> Result<TruncatedSeries> {
    bias_series(spec, n, Method::Dp)
}
