//! Dense truncated power series over an exact [`Ring`].
//!
//! A `Series<R>` of order `N` holds exactly `N + 1` coefficients and every
//! operation is exact modulo `q^(N+1)`.

use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::par::Exec;
use crate::ring::Ring;

/// Below this order convolution stays on the calling thread.
const PAR_MUL_MIN_ORDER: usize = 96;

#[derive(Clone, Debug, PartialEq)]
pub struct Series<R: Ring> {
    coeffs: Vec<R>,
}

impl<R: Ring> Series<R> {
    /// Build from coefficients `c_0..c_N`; the vector must be non-empty.
    pub fn from_coeffs(coeffs: Vec<R>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::InvalidParameter(
                "a series needs at least one coefficient".into(),
            ));
        }
        Ok(Series { coeffs })
    }

    /// Build from a prefix of coefficients, zero-padding (or cutting) to order `n`.
    pub fn from_prefix(mut coeffs: Vec<R>, n: usize) -> Self {
        coeffs.resize(n + 1, R::zero_value());
        Series { coeffs }
    }

    pub fn from_fn(n: usize, f: impl FnMut(usize) -> R) -> Self {
        Series {
            coeffs: (0..=n).map(f).collect(),
        }
    }

    pub fn zero(n: usize) -> Self {
        Series {
            coeffs: vec![R::zero_value(); n + 1],
        }
    }

    pub fn one(n: usize) -> Self {
        Self::constant(R::one_value(), n)
    }

    pub fn constant(c: R, n: usize) -> Self {
        let mut s = Self::zero(n);
        s.coeffs[0] = c;
        s
    }

    /// `c * q^e`, which is zero when `e > n`.
    pub fn monomial(c: R, e: usize, n: usize) -> Self {
        let mut s = Self::zero(n);
        if e <= n {
            s.coeffs[e] = c;
        }
        s
    }

    /// Truncation order `N`.
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<R> {
        self.coeffs
    }

    pub fn coeff(&self, n: usize) -> &R {
        &self.coeffs[n]
    }

    pub fn set_coeff(&mut self, n: usize, c: R) {
        if n <= self.order() {
            self.coeffs[n] = c;
        }
    }

    pub fn add_to_coeff(&mut self, n: usize, c: &R) {
        if n <= self.order() {
            self.coeffs[n].add_assign_ref(c);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Ring::is_zero_value)
    }

    /// Index of the lowest nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero_value())
    }

    /// Keep coefficients up to `n`; `n` larger than the order is an error.
    pub fn truncate(&self, n: usize) -> Result<Self> {
        if n > self.order() {
            return Err(Error::OrderMismatch {
                left: self.order(),
                right: n,
            });
        }
        Ok(Series {
            coeffs: self.coeffs[..=n].to_vec(),
        })
    }

    fn check_order(&self, other: &Self) -> Result<()> {
        if self.order() != other.order() {
            return Err(Error::OrderMismatch {
                left: self.order(),
                right: other.order(),
            });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let mut out = self.clone();
        out.add_assign(other);
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let mut out = self.clone();
        out.sub_assign(other);
        Ok(out)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        Ok(self.mul_with(other, Exec::default()))
    }

    /// In-place addition; orders must agree.
    pub fn add_assign(&mut self, other: &Self) {
        debug_assert_eq!(self.order(), other.order());
        for (a, b) in self.coeffs.iter_mut().zip(&other.coeffs) {
            if !b.is_zero_value() {
                a.add_assign_ref(b);
            }
        }
    }

    pub fn sub_assign(&mut self, other: &Self) {
        debug_assert_eq!(self.order(), other.order());
        for (a, b) in self.coeffs.iter_mut().zip(&other.coeffs) {
            if !b.is_zero_value() {
                a.sub_assign_ref(b);
            }
        }
    }

    pub fn scale(&self, c: &R) -> Self {
        Series {
            coeffs: self
                .coeffs
                .iter()
                .map(|a| if a.is_zero_value() { R::zero_value() } else { a.mul_ref(c) })
                .collect(),
        }
    }

    pub fn negate(&self) -> Self {
        Series {
            coeffs: self.coeffs.iter().map(Ring::neg_ref).collect(),
        }
    }

    /// Full schoolbook convolution. Each output coefficient is computed
    /// independently, so the result does not depend on the policy.
    pub fn mul_with(&self, other: &Self, exec: Exec) -> Self {
        debug_assert_eq!(self.order(), other.order());
        let n = self.order();
        let a = &self.coeffs;
        let b = &other.coeffs;
        let lo_a = self.valuation().unwrap_or(n + 1);
        let lo_b = other.valuation().unwrap_or(n + 1);
        let coeff = |k: usize| {
            let mut acc = R::zero_value();
            if k >= lo_a + lo_b {
                for i in lo_a..=(k - lo_b) {
                    acc.add_mul(&a[i], &b[k - i]);
                }
            }
            acc
        };
        let exec = if n < PAR_MUL_MIN_ORDER {
            Exec::Sequential
        } else {
            exec
        };
        Series {
            coeffs: exec.map_range(n + 1, coeff),
        }
    }

    /// Multiplicative inverse modulo `q^(N+1)`.
    pub fn invert(&self) -> Result<Self> {
        let inv0 = self.coeffs[0]
            .inverse()
            .ok_or_else(|| Error::SingularSeries(format!("{:?}", self.coeffs[0])))?;
        let n = self.order();
        let mut g: Vec<R> = Vec::with_capacity(n + 1);
        g.push(inv0.clone());
        let neg_inv0 = inv0.neg_ref();
        for k in 1..=n {
            let mut acc = R::zero_value();
            for i in 1..=k {
                acc.add_mul(&self.coeffs[i], &g[k - i]);
            }
            g.push(if acc.is_zero_value() {
                acc
            } else {
                acc.mul_ref(&neg_inv0)
            });
        }
        Ok(Series { coeffs: g })
    }

    /// Multiply by `q^e` in place.
    pub fn shift(&mut self, e: usize) {
        if e == 0 {
            return;
        }
        let n = self.order();
        for i in (0..=n).rev() {
            self.coeffs[i] = if i >= e {
                std::mem::replace(&mut self.coeffs[i - e], R::zero_value())
            } else {
                R::zero_value()
            };
        }
    }

    /// `self *= (1 + c q^k)`, `k >= 1`.
    pub fn mul_binomial(&mut self, c: &R, k: usize) {
        assert!(k >= 1, "binomial factor needs a positive exponent");
        if c.is_zero_value() {
            return;
        }
        let n = self.order();
        for i in (k..=n).rev() {
            let (lo, hi) = self.coeffs.split_at_mut(i);
            hi[0].add_mul(c, &lo[i - k]);
        }
    }

    /// `self /= (1 + c q^k)`, `k >= 1`.
    pub fn div_binomial(&mut self, c: &R, k: usize) {
        assert!(k >= 1, "binomial factor needs a positive exponent");
        if c.is_zero_value() {
            return;
        }
        let neg = c.neg_ref();
        let n = self.order();
        for i in k..=n {
            let (lo, hi) = self.coeffs.split_at_mut(i);
            hi[0].add_mul(&neg, &lo[i - k]);
        }
    }

    /// `self *= (c1 q^e1 + c2 q^e2)`.
    pub fn mul_two_term(&mut self, c1: &R, e1: usize, c2: &R, e2: usize) {
        let n = self.order();
        let mut out = vec![R::zero_value(); n + 1];
        for (e, c) in [(e1, c1), (e2, c2)] {
            if c.is_zero_value() {
                continue;
            }
            for i in e..=n {
                out[i].add_mul(c, &self.coeffs[i - e]);
            }
        }
        self.coeffs = out;
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> Series<S> {
        Series {
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }
}

impl<'a, R: Ring> Add for &'a Series<R> {
    type Output = Series<R>;
    fn add(self, rhs: Self) -> Series<R> {
        self.try_add(rhs).expect("series order mismatch")
    }
}

impl<'a, R: Ring> Sub for &'a Series<R> {
    type Output = Series<R>;
    fn sub(self, rhs: Self) -> Series<R> {
        self.try_sub(rhs).expect("series order mismatch")
    }
}

impl<'a, R: Ring> Mul for &'a Series<R> {
    type Output = Series<R>;
    fn mul(self, rhs: Self) -> Series<R> {
        self.try_mul(rhs).expect("series order mismatch")
    }
}

impl<'a, R: Ring> Neg for &'a Series<R> {
    type Output = Series<R>;
    fn neg(self) -> Series<R> {
        self.negate()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use proptest::prelude::*;

    fn int_series(v: &[i64]) -> Series<BigInt> {
        Series::from_coeffs(v.iter().map(|&x| BigInt::from(x)).collect()).unwrap()
    }

    #[test]
    fn difference_of_squares() {
        let a = int_series(&[1, 1, 0, 0]);
        let b = int_series(&[1, -1, 0, 0]);
        assert_eq!(&a * &b, int_series(&[1, 0, -1, 0]));
    }

    #[test]
    fn geometric_telescopes() {
        let geo = Series::from_fn(50, |_| BigInt::from(1));
        let mut one_minus_q = Series::<BigInt>::one(50);
        one_minus_q.set_coeff(1, BigInt::from(-1));
        assert_eq!(&geo * &one_minus_q, Series::one(50));
    }

    #[test]
    fn invert_one_minus_q_is_geometric() {
        let s = int_series(&[1, -1, 0, 0, 0, 0]);
        let inv = s.invert().unwrap();
        assert!(inv.coeffs().iter().all(|c| *c == BigInt::from(1)));
    }

    #[test]
    fn invert_rejects_non_unit() {
        let s = int_series(&[2, 1, 0]);
        assert!(matches!(s.invert(), Err(Error::SingularSeries(_))));
    }

    #[test]
    fn order_mismatch_rejected() {
        let a = int_series(&[1, 2]);
        let b = int_series(&[1, 2, 3]);
        assert!(matches!(a.try_mul(&b), Err(Error::OrderMismatch { .. })));
        assert!(a.truncate(3).is_err());
    }

    #[test]
    fn empty_rejected() {
        assert!(Series::<BigInt>::from_coeffs(vec![]).is_err());
    }

    #[test]
    fn factor_ops_match_convolution() {
        let s = int_series(&[3, -1, 4, 1, -5, 9, 2, 6]);
        let n = s.order();
        let c = BigInt::from(-2);
        let mut f = Series::one(n);
        f.set_coeff(3, c.clone());
        let mut viaop = s.clone();
        viaop.mul_binomial(&c, 3);
        assert_eq!(viaop, &s * &f);
        viaop.div_binomial(&c, 3);
        assert_eq!(viaop, s);
        let mut two = s.clone();
        two.mul_two_term(&BigInt::from(2), 1, &BigInt::from(-1), 4);
        let mut g = Series::zero(n);
        g.set_coeff(1, BigInt::from(2));
        g.set_coeff(4, BigInt::from(-1));
        assert_eq!(two, &s * &g);
    }

    #[test]
    fn shift_moves_coefficients() {
        let mut s = int_series(&[1, 2, 3, 4]);
        s.shift(2);
        assert_eq!(s, int_series(&[0, 0, 1, 2]));
    }

    fn arb_series(n: usize) -> impl Strategy<Value = Series<BigInt>> {
        proptest::collection::vec(-50i64..50, n + 1)
            .prop_map(|v| Series::from_coeffs(v.into_iter().map(BigInt::from).collect()).unwrap())
    }

    fn arb_unit_series(n: usize) -> impl Strategy<Value = Series<BigInt>> {
        (prop_oneof![Just(1i64), Just(-1i64)], arb_series(n)).prop_map(|(c0, mut s)| {
            s.set_coeff(0, BigInt::from(c0));
            s
        })
    }

    proptest! {
        #[test]
        fn ring_laws(a in arb_series(12), b in arb_series(12), c in arb_series(12)) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a + &Series::zero(12), a.clone());
            prop_assert_eq!(&(&a + &b) - &b, a);
        }

        #[test]
        fn invert_is_two_sided(s in arb_unit_series(15)) {
            let inv = s.invert().unwrap();
            prop_assert_eq!(&s * &inv, Series::one(15));
            prop_assert_eq!(&inv * &s, Series::one(15));
            prop_assert_eq!(inv.invert().unwrap(), s);
        }

        #[test]
        fn truncation_commutes_with_mul(a in arb_unit_series(20), b in arb_series(20), k in 0usize..20) {
            let full = &a * &b;
            let direct = &a.truncate(k).unwrap() * &b.truncate(k).unwrap();
            prop_assert_eq!(full.truncate(k).unwrap(), direct);
            prop_assert_eq!(
                a.invert().unwrap().truncate(k).unwrap(),
                a.truncate(k).unwrap().invert().unwrap()
            );
        }

        #[test]
        fn parallel_mul_is_deterministic(a in arb_series(130), b in arb_series(130)) {
            prop_assert_eq!(a.mul_with(&b, Exec::Sequential), a.mul_with(&b, Exec::Parallel));
        }
    }
}
