use std::fmt;

use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{invalid, Result};
use crate::truncated::format_rational;

/// Part weights `x` (ordinary parts) and `y` (distinct parts).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Weights {
    Exact { x: BigRational, y: BigRational },
    /// Keep `x`, `y` as the markers `X`, `Y`.
    Symbolic,
}

impl Weights {
    pub fn exact(x: BigRational, y: BigRational) -> Result<Self> {
        if x.is_negative() || y.is_negative() {
            return Err(invalid(format!(
                "weights must be non-negative, got x = {}, y = {}",
                format_rational(&x),
                format_rational(&y)
            )));
        }
        Ok(Weights::Exact { x, y })
    }

    pub fn ints(x: i64, y: i64) -> Result<Self> {
        Self::exact(BigRational::from_integer(x.into()), BigRational::from_integer(y.into()))
    }

    /// Weights from `(numerator, denominator)` pairs.
    pub fn ratios(x: (i64, i64), y: (i64, i64)) -> Result<Self> {
        if x.1 == 0 || y.1 == 0 {
            return Err(invalid("zero denominator in weight"));
        }
        Self::exact(
            BigRational::new(x.0.into(), x.1.into()),
            BigRational::new(y.0.into(), y.1.into()),
        )
    }

    pub fn is_symbolic(&self) -> bool {
        matches!(self, Weights::Symbolic)
    }
}

impl fmt::Display for Weights {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Weights::Exact { x, y } => write!(f, "x={}, y={}", format_rational(x), format_rational(y)),
            Weights::Symbolic => write!(f, "x=X, y=Y"),
        }
    }
}

/// Parameters `(a, b, m; x, y)` of the bias count `p_n(a,b,m;x,y)`.
///
/// Residues are represented in `1..=m`; a part divisible by `m` belongs to
/// class `m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BiasSpec {
    pub a: usize,
    pub b: usize,
    pub m: usize,
    pub weights: Weights,
}

impl BiasSpec {
    pub fn new(a: usize, b: usize, m: usize, weights: Weights) -> Result<Self> {
        if m == 0 {
            return Err(invalid("modulus m must be >= 1"));
        }
        if a < 1 || a > m || b < 1 || b > m {
            return Err(invalid(format!("residues must lie in 1..={m}, got a = {a}, b = {b}")));
        }
        if a == b {
            return Err(invalid(format!("residues must differ, got a = b = {a}")));
        }
        if let Weights::Exact { x, y } = &weights {
            if x.is_zero() && y.is_zero() {
                return Err(invalid("x and y must not both be zero"));
            }
        }
        Ok(BiasSpec { a, b, m, weights })
    }

    pub fn with_ints(a: usize, b: usize, m: usize, x: i64, y: i64) -> Result<Self> {
        Self::new(a, b, m, Weights::ints(x, y)?)
    }

    /// The same weights with the two residue classes exchanged.
    pub fn swapped(&self) -> Self {
        BiasSpec {
            a: self.b,
            b: self.a,
            m: self.m,
            weights: self.weights.clone(),
        }
    }

    /// Residue class of a part, in `1..=m`.
    pub fn class_of(&self, part: usize) -> usize {
        residue(part, self.m)
    }

    /// `true` if the class is symmetric (`b = m - a`) with `a < m/2`.
    pub fn is_symmetric(&self) -> bool {
        self.a + self.b == self.m && 2 * self.a < self.m
    }
}

/// Residue of `part` modulo `m`, taken in `1..=m`.
pub fn residue(part: usize, m: usize) -> usize {
    debug_assert!(part >= 1 && m >= 1);
    (part - 1) % m + 1
}

impl fmt::Display for BiasSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{}; {})", self.a, self.b, self.m, self.weights)
    }
}

impl Serialize for BiasSpec {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("BiasSpec", 5)?;
        st.serialize_field("a", &self.a)?;
        st.serialize_field("b", &self.b)?;
        st.serialize_field("m", &self.m)?;
        match &self.weights {
            Weights::Exact { x, y } => {
                st.serialize_field("x", &format_rational(x))?;
                st.serialize_field("y", &format_rational(y))?;
            }
            Weights::Symbolic => {
                st.serialize_field("x", "X")?;
                st.serialize_field("y", "Y")?;
            }
        }
        st.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation() {
        assert!(BiasSpec::with_ints(1, 2, 2, 1, 0).is_ok());
        assert!(BiasSpec::with_ints(2, 2, 3, 1, 0).is_err());
        assert!(BiasSpec::with_ints(0, 2, 3, 1, 0).is_err());
        assert!(BiasSpec::with_ints(1, 4, 3, 1, 0).is_err());
        assert!(BiasSpec::with_ints(1, 2, 3, 0, 0).is_err());
        assert!(BiasSpec::with_ints(1, 2, 3, -1, 1).is_err());
        assert!(BiasSpec::new(1, 2, 3, Weights::Symbolic).is_ok());
    }

    #[test]
    fn residues_in_one_to_m() {
        assert_eq!(residue(3, 3), 3);
        assert_eq!(residue(4, 3), 1);
        assert_eq!(residue(1, 1), 1);
    }

    #[test]
    fn symmetric_cases() {
        assert!(BiasSpec::with_ints(1, 2, 3, 0, 1).unwrap().is_symmetric());
        assert!(!BiasSpec::with_ints(2, 1, 3, 0, 1).unwrap().is_symmetric());
        assert!(!BiasSpec::with_ints(1, 2, 4, 0, 1).unwrap().is_symmetric());
    }

    #[test]
    fn serializes_canonically() {
        let s = BiasSpec::new(1, 3, 4, Weights::ratios((3, 2), (0, 1)).unwrap()).unwrap();
        assert_eq!(
            serde_json::to_string(&s).unwrap(),
            r#"{"a":1,"b":3,"m":4,"x":"3/2","y":"0/1"}"#
        );
    }
}
