//! q-shifted factorials and theta-type partial sums as truncated series.

use num_bigint::BigInt;

use crate::error::{invalid, Result};
use crate::ring::Ring;
use crate::series::Series;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    fn apply<R: Ring>(self, c: &R) -> R {
        match self {
            Sign::Plus => c.clone(),
            Sign::Minus => c.neg_ref(),
        }
    }
}

/// `Π_{j≥0} (1 + sign·c·q^(offset + j·step))` modulo `q^(n+1)`.
///
/// With `sign = Minus` this is `(c q^offset; q^step)_∞`. Only factors whose
/// exponent is at most `n` are multiplied in.
pub fn pochhammer_product<R: Ring>(
    c: &R,
    sign: Sign,
    offset: usize,
    step: usize,
    n: usize,
) -> Result<Series<R>> {
    if offset == 0 {
        return Err(invalid(
            "infinite product needs offset >= 1 (a constant factor would repeat forever)",
        ));
    }
    if step == 0 {
        return Err(invalid("step must be positive"));
    }
    let mut s = Series::one(n);
    let c = sign.apply(c);
    let mut e = offset;
    while e <= n {
        s.mul_binomial(&c, e);
        e += step;
    }
    Ok(s)
}

/// Finite product `Π_{0≤j<count} (1 + sign·c·q^(offset + j·step))`; `offset`
/// may be zero, in which case the first factor is the constant `1 ± c`.
pub fn pochhammer_finite<R: Ring>(
    c: &R,
    sign: Sign,
    offset: usize,
    step: usize,
    count: usize,
    n: usize,
) -> Series<R> {
    let mut s = Series::one(n);
    let c = sign.apply(c);
    for j in 0..count {
        let e = offset + j * step;
        if e == 0 {
            let mut k = R::one_value();
            k.add_assign_ref(&c);
            s = s.scale(&k);
        } else if e <= n {
            s.mul_binomial(&c, e);
        }
    }
    s
}

/// Reciprocal of [`pochhammer_product`], built factor by factor without a
/// general series inversion.
pub fn pochhammer_reciprocal<R: Ring>(
    c: &R,
    sign: Sign,
    offset: usize,
    step: usize,
    n: usize,
) -> Result<Series<R>> {
    if offset == 0 || step == 0 {
        return Err(invalid("reciprocal product needs offset >= 1 and step >= 1"));
    }
    let mut s = Series::one(n);
    let c = sign.apply(c);
    let mut e = offset;
    while e <= n {
        s.div_binomial(&c, e);
        e += step;
    }
    Ok(s)
}

/// Euler's product `(q;q)_∞` over the integers.
pub fn euler_product(n: usize) -> Series<BigInt> {
    pochhammer_product(&BigInt::from(1), Sign::Minus, 1, 1, n).expect("valid parameters")
}

/// `Σ_{k≥1} q^(step·k(k-1)/2 + a·k)` modulo `q^(n+1)`.
pub fn theta_partial(step: usize, a: usize, n: usize) -> Result<Series<BigInt>> {
    if step == 0 || a == 0 {
        return Err(invalid("theta_partial needs step >= 1 and a >= 1"));
    }
    let mut s = Series::zero(n);
    let one = BigInt::from(1);
    for k in 1.. {
        let e = step * k * (k - 1) / 2 + a * k;
        if e > n {
            break;
        }
        s.add_to_coeff(e, &one);
    }
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle;

    #[test]
    fn distinct_partitions_of_six() {
        let s = pochhammer_product(&BigInt::from(1), Sign::Plus, 1, 1, 10).unwrap();
        assert_eq!(*s.coeff(6), BigInt::from(4));
        assert_eq!(
            *s.coeff(6),
            BigInt::from(oracle::enumerate_distinct(6).unwrap().count())
        );
    }

    #[test]
    fn zero_parameter_is_one() {
        let s = pochhammer_product(&BigInt::from(0), Sign::Minus, 1, 1, 10).unwrap();
        assert_eq!(s, Series::one(10));
    }

    #[test]
    fn euler_first_order() {
        assert_eq!(*euler_product(5).coeff(1), BigInt::from(-1));
    }

    #[test]
    fn zero_offset_rejected() {
        assert!(pochhammer_product(&BigInt::from(1), Sign::Minus, 0, 1, 10).is_err());
    }

    #[test]
    fn inverse_euler_counts_partitions() {
        let inv = euler_product(30).invert().unwrap();
        assert_eq!(*inv.coeff(10), BigInt::from(42));
        for n in 0..=30 {
            let count = oracle::enumerate_partitions(n).unwrap().count();
            assert_eq!(*inv.coeff(n), BigInt::from(count), "n = {n}");
        }
    }

    #[test]
    fn reciprocal_matches_inverse() {
        let c = BigInt::from(-3);
        let p = pochhammer_product(&c, Sign::Minus, 2, 3, 40).unwrap();
        let r = pochhammer_reciprocal(&c, Sign::Minus, 2, 3, 40).unwrap();
        assert_eq!(&p * &r, Series::one(40));
    }

    #[test]
    fn split_range_product() {
        // (c q^1; q^2)_∞ = (c q; q^2)_3 · (c q^7; q^2)_∞
        let c = BigInt::from(2);
        let full = pochhammer_product(&c, Sign::Minus, 1, 2, 40).unwrap();
        let head = pochhammer_finite(&c, Sign::Minus, 1, 2, 3, 40);
        let tail = pochhammer_product(&c, Sign::Minus, 7, 2, 40).unwrap();
        assert_eq!(full, &head * &tail);
    }

    #[test]
    fn finite_with_constant_factor() {
        // (2;q)_2 = (1-2)(1-2q)
        let s = pochhammer_finite(&BigInt::from(2), Sign::Minus, 0, 1, 2, 3);
        let expect: Vec<BigInt> = [-1, 2, 0, 0].iter().map(|&v| BigInt::from(v)).collect();
        assert_eq!(s.coeffs(), expect.as_slice());
    }

    #[test]
    fn theta_partial_exponents() {
        let sq = theta_partial(2, 1, 30).unwrap();
        let support: Vec<usize> = (0..=30).filter(|&i| *sq.coeff(i) != BigInt::from(0)).collect();
        assert_eq!(support, vec![1, 4, 9, 16, 25]);
        let t = theta_partial(3, 1, 30).unwrap();
        let support: Vec<usize> = (0..=30).filter(|&i| *t.coeff(i) != BigInt::from(0)).collect();
        assert_eq!(support, vec![1, 5, 12, 22]);
        for (m, a) in [(1, 1), (4, 3), (7, 2)] {
            assert_eq!(theta_partial(m, a, 40).unwrap().valuation(), Some(a));
        }
    }

    #[test]
    fn truncation_consistency() {
        let big = pochhammer_product(&BigInt::from(3), Sign::Plus, 2, 3, 60).unwrap();
        let small = pochhammer_product(&BigInt::from(3), Sign::Plus, 2, 3, 25).unwrap();
        assert_eq!(big.truncate(25).unwrap(), small);
        assert_eq!(
            theta_partial(5, 2, 60).unwrap().truncate(25).unwrap(),
            theta_partial(5, 2, 25).unwrap()
        );
    }
}
