//! Bias series from the excess marker `t`.
//!
//! Parts in class `a` carry `t`, parts in class `b` carry `t^-1`; the bias
//! is the sum of the coefficients of `t^k`, `k > 0`.

use crate::ring::Ring;
use crate::series::Series;

use super::spec::residue;
use super::weights::WeightSystem;

/// Coefficients `c[n][k]` of `q^n t^k`, `n <= N`, `k` in `[-N/b, N/a]`.
#[derive(Clone, Debug, PartialEq)]
pub struct MarkerLaurentSeries<R: Ring> {
    order: usize,
    low: i64,
    high: i64,
    rows: Vec<Vec<R>>,
}

impl<R: Ring> MarkerLaurentSeries<R> {
    /// The constant `1`, with room for exponents in `[low, high]`.
    pub fn one(order: usize, low: i64, high: i64) -> Self {
        assert!(low <= 0 && high >= 0);
        let width = (high - low + 1) as usize;
        let mut rows = vec![vec![R::zero_value(); width]; order + 1];
        rows[0][(-low) as usize] = R::one_value();
        MarkerLaurentSeries {
            order,
            low,
            high,
            rows,
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeff(&self, n: usize, k: i64) -> R {
        if k < self.low || k > self.high {
            return R::zero_value();
        }
        self.rows[n][(k - self.low) as usize].clone()
    }

    /// Smallest and largest `t`-exponent with a non-zero coefficient at `q^n`.
    pub fn support(&self, n: usize) -> Option<(i64, i64)> {
        let row = &self.rows[n];
        let first = row.iter().position(|c| !c.is_zero_value())?;
        let last = row.iter().rposition(|c| !c.is_zero_value())?;
        Some((first as i64 + self.low, last as i64 + self.low))
    }

    fn shifted_add(&mut self, target: usize, source: usize, coef: &R, shift: i64) {
        let width = self.rows[0].len();
        let (src, dst) = if source < target {
            let (lo, hi) = self.rows.split_at_mut(target);
            (&lo[source], &mut hi[0])
        } else {
            unreachable!("factor exponents are positive")
        };
        for i in 0..width {
            let j = i as i64 - shift;
            if j < 0 || j >= width as i64 {
                continue;
            }
            dst[i].add_mul(coef, &src[j as usize]);
        }
    }

    /// `self *= 1 / (1 - c t^s q^k)`.
    pub fn div_factor(&mut self, c: &R, s: i64, k: usize) {
        if c.is_zero_value() {
            return;
        }
        for n in k..=self.order {
            self.shifted_add(n, n - k, c, s);
        }
    }

    /// `self *= (1 + c t^s q^k)`.
    pub fn mul_factor(&mut self, c: &R, s: i64, k: usize) {
        if c.is_zero_value() {
            return;
        }
        for n in (k..=self.order).rev() {
            self.shifted_add(n, n - k, c, s);
        }
    }

    /// Sum of coefficients with `t`-exponent in the given range.
    fn collapse(&self, keep: impl Fn(i64) -> bool) -> Series<R> {
        Series::from_fn(self.order, |n| {
            let mut acc = R::zero_value();
            for (i, c) in self.rows[n].iter().enumerate() {
                if keep(i as i64 + self.low) {
                    acc.add_assign_ref(c);
                }
            }
            acc
        })
    }

    /// `t -> 1`.
    pub fn at_one(&self) -> Series<R> {
        self.collapse(|_| true)
    }

    /// Coefficients of positive powers of `t`.
    pub fn positive_part(&self) -> Series<R> {
        self.collapse(|k| k > 0)
    }
}

/// Which part sizes enter the marker product.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PartRange {
    /// Only parts in classes `a` and `b`; the rest factor out.
    Marked,
    /// Every part size, unmarked ones with `t^0`.
    All,
}

/// Product over part sizes `1..=N` of `(1 + y t^s q^k) / (1 - x t^s q^k)`.
pub fn excess_table<W: WeightSystem>(
    w: &W,
    a: usize,
    b: usize,
    m: usize,
    n: usize,
    range: PartRange,
) -> MarkerLaurentSeries<W::R> {
    let mut t = MarkerLaurentSeries::one(n, -((n / b) as i64), (n / a) as i64);
    for k in 1..=n {
        let r = residue(k, m);
        let s = if r == a {
            1
        } else if r == b {
            -1
        } else if range == PartRange::All {
            0
        } else {
            continue;
        };
        t.div_factor(&w.x_part(k), s, k);
        t.mul_factor(&w.y_part(k), s, k);
    }
    t
}

/// `Π_{k ≢ a, b} (1 + y q^k) / (1 - x q^k)`.
pub fn neutral_product<W: WeightSystem>(w: &W, a: usize, b: usize, m: usize, n: usize) -> Series<W::R> {
    let mut s = Series::one(n);
    for k in 1..=n {
        let r = residue(k, m);
        if r == a || r == b {
            continue;
        }
        s.mul_binomial(&w.y_part(k), k);
        s.div_binomial(&w.x_part(k).neg_ref(), k);
    }
    s
}

/// Coefficients of `p_n(a,b,m;x,y)` for `n <= N`.
pub fn bias<W: WeightSystem>(w: &W, a: usize, b: usize, m: usize, n: usize) -> Series<W::R> {
    let marked = excess_table(w, a, b, m, n, PartRange::Marked).positive_part();
    let neutral = neutral_product(w, a, b, m, n);
    &marked * &neutral
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bias::gf::total_product;
    use crate::bias::weights::{MarkerWeights, ScaledWeights};
    use num_bigint::BigInt;
    use num_rational::BigRational;

    fn scaled(x: i64, y: i64, n: usize) -> ScaledWeights {
        ScaledWeights::new(
            &BigRational::from_integer(x.into()),
            &BigRational::from_integer(y.into()),
            n,
        )
    }

    #[test]
    fn collapse_at_one_is_total() {
        let n = 30;
        for (x, y) in [(1, 0), (0, 1), (2, 1)] {
            let w = scaled(x, y, n);
            let t = excess_table(&w, 1, 2, 3, n, PartRange::All);
            assert_eq!(t.at_one(), total_product(&w, n));
        }
        let t = excess_table(&MarkerWeights, 2, 1, 4, 16, PartRange::All);
        assert_eq!(t.at_one(), total_product(&MarkerWeights, 16));
    }

    #[test]
    fn support_within_bounds() {
        let n = 40;
        let (a, b, m) = (2, 3, 5);
        let t = excess_table(&scaled(1, 1, n), a, b, m, n, PartRange::All);
        for k in 0..=n {
            let (lo, hi) = t.support(k).unwrap();
            assert!(lo >= -((k / b) as i64) && hi <= (k / a) as i64, "n = {k}");
        }
    }

    #[test]
    fn parity_bias_start() {
        let s = bias(&scaled(1, 0, 6), 1, 2, 2, 6);
        let expect: Vec<BigInt> = [0, 1, 1, 2].iter().map(|&v| BigInt::from(v)).collect();
        assert_eq!(&s.coeffs()[..4], expect.as_slice());
    }
}
