//! Domain-tagged series and scalars, and their JSON wire format.
//!
//! On the wire a series is
//!
//! ```json
//! {"domain": "rational", "order": 3, "coeffs": ["1/1", "-1/2", "0/1", "5/3"]}
//! ```
//!
//! Integer coefficients are decimal strings, rationals are `"p/q"` strings in
//! lowest terms, and marker coefficients are lists of `[i, j, "c"]` triples
//! meaning `c·X^i·Y^j`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::ring::{MarkerPoly, Ring};
use crate::series::Series;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Domain {
    Integer,
    Rational,
    Marker,
}

impl Domain {
    pub fn tag(self) -> &'static str {
        match self {
            Domain::Integer => "integer",
            Domain::Rational => "rational",
            Domain::Marker => "marker",
        }
    }
}

impl FromStr for Domain {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "integer" => Ok(Domain::Integer),
            "rational" => Ok(Domain::Rational),
            "marker" => Ok(Domain::Marker),
            other => Err(Error::Parse(format!("unknown domain tag {other:?}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum CoefficientValue {
    Integer(BigInt),
    Rational(BigRational),
    Marker(MarkerPoly),
}

impl CoefficientValue {
    pub fn domain(&self) -> Domain {
        match self {
            CoefficientValue::Integer(_) => Domain::Integer,
            CoefficientValue::Rational(_) => Domain::Rational,
            CoefficientValue::Marker(_) => Domain::Marker,
        }
    }

    /// The value as an exact rational, unless it is a marker polynomial.
    pub fn as_rational(&self) -> Option<BigRational> {
        match self {
            CoefficientValue::Integer(v) => Some(BigRational::from_integer(v.clone())),
            CoefficientValue::Rational(v) => Some(v.clone()),
            CoefficientValue::Marker(_) => None,
        }
    }
}

impl fmt::Display for CoefficientValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoefficientValue::Integer(v) => write!(f, "{v}"),
            CoefficientValue::Rational(v) => f.write_str(&format_rational(v)),
            CoefficientValue::Marker(p) => write!(f, "{p:?}"),
        }
    }
}

/// `"p/q"` with `q > 0`; BigRational is always kept in lowest terms.
pub fn format_rational(v: &BigRational) -> String {
    format!("{}/{}", v.numer(), v.denom())
}

/// Parse `"p/q"` or a bare integer `"p"`. The result is reduced.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not an exact rational: {s:?}"));
    match s.split_once('/') {
        Some((p, q)) => {
            let p = BigInt::from_str(p.trim()).map_err(|_| bad())?;
            let q = BigInt::from_str(q.trim()).map_err(|_| bad())?;
            if q.is_zero_value() {
                return Err(Error::Parse(format!("zero denominator in {s:?}")));
            }
            Ok(BigRational::new(p, q))
        }
        None => Ok(BigRational::from_integer(
            BigInt::from_str(s).map_err(|_| bad())?,
        )),
    }
}

/// A truncated series whose coefficient domain is fixed at construction.
#[derive(Clone, Debug, PartialEq)]
pub enum TruncatedSeries {
    Integer(Series<BigInt>),
    Rational(Series<BigRational>),
    Marker(Series<MarkerPoly>),
}

macro_rules! same_domain {
    ($lhs:expr, $rhs:expr, |$a:ident, $b:ident| $body:expr) => {
        match ($lhs, $rhs) {
            (TruncatedSeries::Integer($a), TruncatedSeries::Integer($b)) => {
                Ok(TruncatedSeries::Integer($body?))
            }
            (TruncatedSeries::Rational($a), TruncatedSeries::Rational($b)) => {
                Ok(TruncatedSeries::Rational($body?))
            }
            (TruncatedSeries::Marker($a), TruncatedSeries::Marker($b)) => {
                Ok(TruncatedSeries::Marker($body?))
            }
            (l, r) => Err(Error::DomainMismatch {
                left: l.domain().tag(),
                right: r.domain().tag(),
            }),
        }
    };
}

impl TruncatedSeries {
    /// Zero series of order `n`; a negative order cannot be expressed.
    pub fn zero(domain: Domain, n: usize) -> Self {
        match domain {
            Domain::Integer => TruncatedSeries::Integer(Series::zero(n)),
            Domain::Rational => TruncatedSeries::Rational(Series::zero(n)),
            Domain::Marker => TruncatedSeries::Marker(Series::zero(n)),
        }
    }

    pub fn one(domain: Domain, n: usize) -> Self {
        match domain {
            Domain::Integer => TruncatedSeries::Integer(Series::one(n)),
            Domain::Rational => TruncatedSeries::Rational(Series::one(n)),
            Domain::Marker => TruncatedSeries::Marker(Series::one(n)),
        }
    }

    pub fn domain(&self) -> Domain {
        match self {
            TruncatedSeries::Integer(_) => Domain::Integer,
            TruncatedSeries::Rational(_) => Domain::Rational,
            TruncatedSeries::Marker(_) => Domain::Marker,
        }
    }

    pub fn order(&self) -> usize {
        match self {
            TruncatedSeries::Integer(s) => s.order(),
            TruncatedSeries::Rational(s) => s.order(),
            TruncatedSeries::Marker(s) => s.order(),
        }
    }

    pub fn coeff(&self, n: usize) -> CoefficientValue {
        match self {
            TruncatedSeries::Integer(s) => CoefficientValue::Integer(s.coeff(n).clone()),
            TruncatedSeries::Rational(s) => CoefficientValue::Rational(s.coeff(n).clone()),
            TruncatedSeries::Marker(s) => CoefficientValue::Marker(s.coeff(n).clone()),
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        same_domain!(self, other, |a, b| a.try_add(b))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        same_domain!(self, other, |a, b| a.try_sub(b))
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        same_domain!(self, other, |a, b| a.try_mul(b))
    }

    /// Multiply by a scalar of the same domain.
    pub fn scale(&self, c: &CoefficientValue) -> Result<Self> {
        match (self, c) {
            (TruncatedSeries::Integer(s), CoefficientValue::Integer(c)) => {
                Ok(TruncatedSeries::Integer(s.scale(c)))
            }
            (TruncatedSeries::Rational(s), CoefficientValue::Rational(c)) => {
                Ok(TruncatedSeries::Rational(s.scale(c)))
            }
            (TruncatedSeries::Marker(s), CoefficientValue::Marker(c)) => {
                Ok(TruncatedSeries::Marker(s.scale(c)))
            }
            (s, c) => Err(Error::DomainMismatch {
                left: s.domain().tag(),
                right: c.domain().tag(),
            }),
        }
    }

    pub fn invert(&self) -> Result<Self> {
        Ok(match self {
            TruncatedSeries::Integer(s) => TruncatedSeries::Integer(s.invert()?),
            TruncatedSeries::Rational(s) => TruncatedSeries::Rational(s.invert()?),
            TruncatedSeries::Marker(s) => TruncatedSeries::Marker(s.invert()?),
        })
    }

    pub fn truncate(&self, n: usize) -> Result<Self> {
        Ok(match self {
            TruncatedSeries::Integer(s) => TruncatedSeries::Integer(s.truncate(n)?),
            TruncatedSeries::Rational(s) => TruncatedSeries::Rational(s.truncate(n)?),
            TruncatedSeries::Marker(s) => TruncatedSeries::Marker(s.truncate(n)?),
        })
    }

    /// Explicit promotion integer → rational. Rational input is returned as is.
    pub fn to_rational(&self) -> Result<Self> {
        match self {
            TruncatedSeries::Integer(s) => Ok(TruncatedSeries::Rational(
                s.map(|c| BigRational::from_integer(c.clone())),
            )),
            TruncatedSeries::Rational(_) => Ok(self.clone()),
            TruncatedSeries::Marker(_) => Err(Error::DomainMismatch {
                left: "marker",
                right: "rational",
            }),
        }
    }

    /// Explicit promotion integer → marker (constant polynomials).
    pub fn to_marker(&self) -> Result<Self> {
        match self {
            TruncatedSeries::Integer(s) => Ok(TruncatedSeries::Marker(
                s.map(|c| MarkerPoly::constant(c.clone())),
            )),
            TruncatedSeries::Marker(_) => Ok(self.clone()),
            TruncatedSeries::Rational(_) => Err(Error::DomainMismatch {
                left: "rational",
                right: "marker",
            }),
        }
    }

    /// Coefficients as exact rationals (integer or rational domain only).
    pub fn rational_coeffs(&self) -> Result<Vec<BigRational>> {
        match self {
            TruncatedSeries::Integer(s) => Ok(s
                .coeffs()
                .iter()
                .map(|c| BigRational::from_integer(c.clone()))
                .collect()),
            TruncatedSeries::Rational(s) => Ok(s.coeffs().to_vec()),
            TruncatedSeries::Marker(_) => Err(Error::DomainMismatch {
                left: "marker",
                right: "rational",
            }),
        }
    }

    pub fn to_wire(&self) -> SeriesWire {
        let coeffs = match self {
            TruncatedSeries::Integer(s) => s
                .coeffs()
                .iter()
                .map(|c| Value::String(c.to_string()))
                .collect(),
            TruncatedSeries::Rational(s) => s
                .coeffs()
                .iter()
                .map(|c| Value::String(format_rational(c)))
                .collect(),
            TruncatedSeries::Marker(s) => s.coeffs().iter().map(marker_to_json).collect(),
        };
        SeriesWire {
            domain: self.domain().tag().to_string(),
            order: self.order(),
            coeffs,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_wire()).expect("series serialization cannot fail")
    }

    pub fn from_wire(w: &SeriesWire) -> Result<Self> {
        let domain: Domain = w.domain.parse()?;
        if w.coeffs.len() != w.order + 1 {
            return Err(Error::Parse(format!(
                "order {} needs {} coefficients, got {}",
                w.order,
                w.order + 1,
                w.coeffs.len()
            )));
        }
        let as_str = |v: &Value| -> Result<String> {
            v.as_str()
                .map(str::to_owned)
                .ok_or_else(|| Error::Parse(format!("expected a decimal string, got {v}")))
        };
        Ok(match domain {
            Domain::Integer => {
                let cs = w
                    .coeffs
                    .iter()
                    .map(|v| {
                        let s = as_str(v)?;
                        BigInt::from_str(&s).map_err(|_| Error::Parse(format!("bad integer {s:?}")))
                    })
                    .collect::<Result<Vec<_>>>()?;
                TruncatedSeries::Integer(Series::from_coeffs(cs)?)
            }
            Domain::Rational => {
                let cs = w
                    .coeffs
                    .iter()
                    .map(|v| parse_rational(&as_str(v)?))
                    .collect::<Result<Vec<_>>>()?;
                TruncatedSeries::Rational(Series::from_coeffs(cs)?)
            }
            Domain::Marker => {
                let cs = w
                    .coeffs
                    .iter()
                    .map(marker_from_json)
                    .collect::<Result<Vec<_>>>()?;
                TruncatedSeries::Marker(Series::from_coeffs(cs)?)
            }
        })
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let w: SeriesWire =
            serde_json::from_str(s).map_err(|e| Error::Parse(format!("series JSON: {e}")))?;
        Self::from_wire(&w)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SeriesWire {
    pub domain: String,
    pub order: usize,
    pub coeffs: Vec<Value>,
}

fn marker_to_json(p: &MarkerPoly) -> Value {
    Value::Array(
        p.terms()
            .map(|(i, j, c)| Value::Array(vec![i.into(), j.into(), Value::String(c.to_string())]))
            .collect(),
    )
}

fn marker_from_json(v: &Value) -> Result<MarkerPoly> {
    let bad = || Error::Parse(format!("bad marker coefficient {v}"));
    let arr = v.as_array().ok_or_else(bad)?;
    let mut terms = Vec::with_capacity(arr.len());
    for t in arr {
        let t = t.as_array().filter(|t| t.len() == 3).ok_or_else(bad)?;
        let i = t[0].as_u64().ok_or_else(bad)? as u32;
        let j = t[1].as_u64().ok_or_else(bad)? as u32;
        let c = BigInt::from_str(t[2].as_str().ok_or_else(bad)?).map_err(|_| bad())?;
        terms.push((i, j, c));
    }
    Ok(MarkerPoly::from_terms(terms))
}

/// `true` if the value is a unit of its domain.
pub fn is_unit(c: &CoefficientValue) -> bool {
    match c {
        CoefficientValue::Integer(v) => v.inverse().is_some(),
        CoefficientValue::Rational(v) => !v.is_zero_value(),
        CoefficientValue::Marker(p) => p.inverse().is_some(),
    }
}

impl From<Series<BigInt>> for TruncatedSeries {
    fn from(s: Series<BigInt>) -> Self {
        TruncatedSeries::Integer(s)
    }
}

impl From<Series<BigRational>> for TruncatedSeries {
    fn from(s: Series<BigRational>) -> Self {
        TruncatedSeries::Rational(s)
    }
}

impl From<Series<MarkerPoly>> for TruncatedSeries {
    fn from(s: Series<MarkerPoly>) -> Self {
        TruncatedSeries::Marker(s)
    }
}
