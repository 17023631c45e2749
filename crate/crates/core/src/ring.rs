//! Exact coefficient rings used by the series engine.
//!
//! Three rings are supported: arbitrary-precision integers, arbitrary-precision
//! rationals, and bivariate marker polynomials `Σ c_ij X^i Y^j` with integer
//! coefficients. The [`Ring`] trait is the minimal interface the convolution
//! and factor routines need.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub trait Ring: Clone + PartialEq + fmt::Debug + Send + Sync {
    fn zero_value() -> Self;
    fn one_value() -> Self;
    fn is_zero_value(&self) -> bool;
    fn from_i64(v: i64) -> Self;
    fn add_assign_ref(&mut self, rhs: &Self);
    fn sub_assign_ref(&mut self, rhs: &Self);
    fn mul_ref(&self, rhs: &Self) -> Self;
    fn neg_ref(&self) -> Self;
    /// Multiplicative inverse, if it exists in the ring.
    fn inverse(&self) -> Option<Self>;

    /// `self += a * b`
    fn add_mul(&mut self, a: &Self, b: &Self) {
        if a.is_zero_value() || b.is_zero_value() {
            return;
        }
        let p = a.mul_ref(b);
        self.add_assign_ref(&p);
    }

    fn is_one_value(&self) -> bool {
        *self == Self::one_value()
    }
}

impl Ring for BigInt {
    fn zero_value() -> Self {
        Zero::zero()
    }
    fn one_value() -> Self {
        One::one()
    }
    fn is_zero_value(&self) -> bool {
        Zero::is_zero(self)
    }
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }
    fn add_assign_ref(&mut self, rhs: &Self) {
        *self += rhs;
    }
    fn sub_assign_ref(&mut self, rhs: &Self) {
        *self -= rhs;
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn inverse(&self) -> Option<Self> {
        if self.abs().is_one_value() {
            Some(self.clone())
        } else {
            None
        }
    }
    fn add_mul(&mut self, a: &Self, b: &Self) {
        if Zero::is_zero(a) || Zero::is_zero(b) {
            return;
        }
        *self += a * b;
    }
}

impl Ring for BigRational {
    fn zero_value() -> Self {
        Zero::zero()
    }
    fn one_value() -> Self {
        One::one()
    }
    fn is_zero_value(&self) -> bool {
        Zero::is_zero(self)
    }
    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }
    fn add_assign_ref(&mut self, rhs: &Self) {
        *self += rhs;
    }
    fn sub_assign_ref(&mut self, rhs: &Self) {
        *self -= rhs;
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn inverse(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
}

/// Polynomial in the two part-count markers `X` (ordinary parts) and `Y`
/// (distinct parts). Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct MarkerPoly {
    terms: BTreeMap<(u32, u32), BigInt>,
}

impl MarkerPoly {
    pub fn constant(c: BigInt) -> Self {
        let mut p = MarkerPoly::default();
        p.insert(0, 0, c);
        p
    }

    pub fn monomial(i: u32, j: u32, c: BigInt) -> Self {
        let mut p = MarkerPoly::default();
        p.insert(i, j, c);
        p
    }

    /// The marker `X`.
    pub fn x() -> Self {
        Self::monomial(1, 0, BigInt::one_value())
    }

    /// The marker `Y`.
    pub fn y() -> Self {
        Self::monomial(0, 1, BigInt::one_value())
    }

    fn insert(&mut self, i: u32, j: u32, c: BigInt) {
        if Zero::is_zero(&c) {
            self.terms.remove(&(i, j));
        } else {
            self.terms.insert((i, j), c);
        }
    }

    fn add_term(&mut self, i: u32, j: u32, c: &BigInt) {
        if Zero::is_zero(c) {
            return;
        }
        let entry = self.terms.entry((i, j)).or_insert_with(BigInt::zero_value);
        *entry += c;
        if Zero::is_zero(entry) {
            self.terms.remove(&(i, j));
        }
    }

    pub fn coeff(&self, i: u32, j: u32) -> BigInt {
        self.terms.get(&(i, j)).cloned().unwrap_or_default()
    }

    /// Terms `(i, j, c)` in increasing `(i, j)` order.
    pub fn terms(&self) -> impl Iterator<Item = (u32, u32, &BigInt)> {
        self.terms.iter().map(|(&(i, j), c)| (i, j, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn from_terms<I: IntoIterator<Item = (u32, u32, BigInt)>>(it: I) -> Self {
        let mut p = MarkerPoly::default();
        for (i, j, c) in it {
            p.add_term(i, j, &c);
        }
        p
    }

    /// Substitute exact rational values for `X` and `Y`.
    pub fn evaluate(&self, x: &BigRational, y: &BigRational) -> BigRational {
        let mut acc = BigRational::zero_value();
        for (i, j, c) in self.terms() {
            let term = BigRational::from_integer(c.clone())
                * num_traits::pow(x.clone(), i as usize)
                * num_traits::pow(y.clone(), j as usize);
            acc += term;
        }
        acc
    }
}

impl fmt::Debug for MarkerPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, j, c) in self.terms() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{c}*X^{i}*Y^{j}")?;
        }
        Ok(())
    }
}

impl Ring for MarkerPoly {
    fn zero_value() -> Self {
        MarkerPoly::default()
    }
    fn one_value() -> Self {
        MarkerPoly::constant(BigInt::one_value())
    }
    fn is_zero_value(&self) -> bool {
        self.terms.is_empty()
    }
    fn from_i64(v: i64) -> Self {
        MarkerPoly::constant(BigInt::from(v))
    }
    fn add_assign_ref(&mut self, rhs: &Self) {
        for (i, j, c) in rhs.terms() {
            self.add_term(i, j, c);
        }
    }
    fn sub_assign_ref(&mut self, rhs: &Self) {
        for (i, j, c) in rhs.terms() {
            self.add_term(i, j, &-c);
        }
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        let mut out = MarkerPoly::default();
        for (i1, j1, c1) in self.terms() {
            for (i2, j2, c2) in rhs.terms() {
                out.add_term(i1 + i2, j1 + j2, &(c1 * c2));
            }
        }
        out
    }
    fn neg_ref(&self) -> Self {
        MarkerPoly {
            terms: self.terms.iter().map(|(k, c)| (*k, -c)).collect(),
        }
    }
    fn inverse(&self) -> Option<Self> {
        // only constants ±1 are units in Z[X, Y]
        if self.terms.len() == 1 {
            if let Some(c) = self.terms.get(&(0, 0)) {
                if c.abs().is_one_value() {
                    return Some(self.clone());
                }
            }
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn marker_poly_drops_zero_terms() {
        let mut p = MarkerPoly::x();
        p.sub_assign_ref(&MarkerPoly::x());
        assert!(p.is_empty());
        let q = MarkerPoly::from_terms([(1, 0, BigInt::from(2)), (1, 0, BigInt::from(-2))]);
        assert!(q.is_empty());
    }

    #[test]
    fn marker_poly_product() {
        // (X + Y)^2 = X^2 + 2XY + Y^2
        let mut s = MarkerPoly::x();
        s.add_assign_ref(&MarkerPoly::y());
        let sq = s.mul_ref(&s);
        assert_eq!(sq.coeff(2, 0), BigInt::from(1));
        assert_eq!(sq.coeff(1, 1), BigInt::from(2));
        assert_eq!(sq.coeff(0, 2), BigInt::from(1));
        assert_eq!(sq.len(), 3);
    }

    #[test]
    fn units() {
        assert!(BigInt::from(-1).inverse().is_some());
        assert!(BigInt::from(2).inverse().is_none());
        assert!(BigRational::new(2.into(), 3.into()).inverse().is_some());
        assert!(MarkerPoly::x().inverse().is_none());
        assert!(MarkerPoly::from_i64(-1).inverse().is_some());
    }

    #[test]
    fn evaluate_marker() {
        let p = MarkerPoly::from_terms([(2, 0, BigInt::from(3)), (0, 1, BigInt::from(1))]);
        let v = p.evaluate(
            &BigRational::new(1.into(), 2.into()),
            &BigRational::from_integer(5.into()),
        );
        assert_eq!(v, BigRational::new(23.into(), 4.into()));
    }
}
