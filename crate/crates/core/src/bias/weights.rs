//! Coefficient systems for the weighted generating functions.
//!
//! For rational `x = x0/D`, `y = y0/D` the substitution `q -> D q` turns
//! every coefficient into an integer: the coefficient of `q^n` becomes
//! `D^n p_n`. [`ScaledWeights`] works in that integer picture and
//! [`MarkerWeights`] keeps `x`, `y` symbolic.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::Signed;

use crate::ring::{MarkerPoly, Ring};

/// Ring elements standing for `x^i y^j q^e` once `q^e` is factored out.
pub trait WeightSystem: Sync {
    type R: Ring;

    fn monomial(&self, i: u32, j: u32, e: usize) -> Self::R;

    /// Weight of `x q^e`.
    fn x_part(&self, e: usize) -> Self::R {
        self.monomial(1, 0, e)
    }

    /// Weight of `y q^e`.
    fn y_part(&self, e: usize) -> Self::R {
        self.monomial(0, 1, e)
    }

    /// Weight of a bare `q^e`.
    fn q_pow(&self, e: usize) -> Self::R {
        self.monomial(0, 0, e)
    }
}

/// Integer picture of rational weights. Valid for exponents up to the
/// order it was built for.
#[derive(Clone, Debug)]
pub struct ScaledWeights {
    x0: BigInt,
    y0: BigInt,
    denom: BigInt,
    powers: Vec<BigInt>,
    xs: Vec<BigInt>,
    ys: Vec<BigInt>,
}

impl ScaledWeights {
    pub fn new(x: &BigRational, y: &BigRational, n: usize) -> Self {
        let denom = x.denom().lcm(y.denom());
        let x0 = x.numer() * (&denom / x.denom());
        let y0 = y.numer() * (&denom / y.denom());
        let mut powers = Vec::with_capacity(n + 1);
        powers.push(BigInt::one_value());
        for k in 1..=n {
            let next = &powers[k - 1] * &denom;
            powers.push(next);
        }
        let xs = powers.iter().map(|p| p * &x0).collect();
        let ys = powers.iter().map(|p| p * &y0).collect();
        ScaledWeights {
            x0,
            y0,
            denom,
            powers,
            xs,
            ys,
        }
    }

    pub fn denom(&self) -> &BigInt {
        &self.denom
    }

    pub fn is_integral(&self) -> bool {
        self.denom.is_one_value()
    }

    pub fn power(&self, k: usize) -> &BigInt {
        &self.powers[k]
    }

    /// `C / D^n` back in the rational picture.
    pub fn unscale(&self, c: &BigInt, n: usize) -> BigRational {
        BigRational::new(c.clone(), self.powers[n].clone())
    }

    pub fn unscale_all(&self, cs: &[BigInt]) -> Vec<BigRational> {
        cs.iter().enumerate().map(|(n, c)| self.unscale(c, n)).collect()
    }
}

impl WeightSystem for ScaledWeights {
    type R = BigInt;

    fn monomial(&self, i: u32, j: u32, e: usize) -> BigInt {
        let deg = (i + j) as usize;
        assert!(deg <= e, "monomial x^{i} y^{j} needs q-degree >= {deg}, got {e}");
        let mut v = self.powers[e - deg].clone();
        if i > 0 {
            v *= num_traits::pow(self.x0.clone(), i as usize);
        }
        if j > 0 {
            v *= num_traits::pow(self.y0.clone(), j as usize);
        }
        v
    }

    fn x_part(&self, e: usize) -> BigInt {
        self.xs[e - 1].clone()
    }

    fn y_part(&self, e: usize) -> BigInt {
        self.ys[e - 1].clone()
    }

    fn q_pow(&self, e: usize) -> BigInt {
        self.powers[e].clone()
    }
}

/// Symbolic weights: `x -> X`, `y -> Y`.
#[derive(Clone, Copy, Debug, Default)]
pub struct MarkerWeights;

impl WeightSystem for MarkerWeights {
    type R = MarkerPoly;

    fn monomial(&self, i: u32, j: u32, _e: usize) -> MarkerPoly {
        MarkerPoly::monomial(i, j, BigInt::one_value())
    }
}

/// Sign of `C_n` equals the sign of `p_n` since `D > 0`.
pub fn same_sign(c: &BigInt) -> i8 {
    if c.is_positive() {
        1
    } else if c.is_negative() {
        -1
    } else {
        0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(p: i64, q: i64) -> BigRational {
        BigRational::new(p.into(), q.into())
    }

    #[test]
    fn common_denominator() {
        let w = ScaledWeights::new(&r(1, 2), &r(2, 3), 4);
        assert_eq!(*w.denom(), BigInt::from(6));
        assert_eq!(w.x_part(1), BigInt::from(3));
        assert_eq!(w.y_part(2), BigInt::from(24));
        assert_eq!(w.monomial(1, 1, 3), BigInt::from(72));
        assert_eq!(w.unscale(&BigInt::from(72), 3), r(1, 3));
    }

    #[test]
    fn integral_weights_are_plain() {
        let w = ScaledWeights::new(&r(3, 1), &r(0, 1), 5);
        assert!(w.is_integral());
        assert_eq!(w.x_part(5), BigInt::from(3));
        assert_eq!(w.q_pow(5), BigInt::from(1));
    }
}
