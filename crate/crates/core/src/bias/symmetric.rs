//! Single-sum closed forms for the symmetric bias `b = m - a`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{invalid, Error, Result};
use crate::par::Exec;
use crate::qfunc::{pochhammer_product, pochhammer_reciprocal, theta_partial, Sign};
use crate::series::Series;

/// Which of the weightings `(x, y) = (0,1), (1,0), (1,1)` is meant.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Flavor {
    /// Distinct partitions.
    F01,
    /// Ordinary partitions.
    F10,
    /// Overpartitions.
    F11,
}

impl Flavor {
    pub const ALL: [Flavor; 3] = [Flavor::F01, Flavor::F10, Flavor::F11];

    pub fn weights(self) -> (i64, i64) {
        match self {
            Flavor::F01 => (0, 1),
            Flavor::F10 => (1, 0),
            Flavor::F11 => (1, 1),
        }
    }

    pub fn tag(self) -> &'static str {
        match self {
            Flavor::F01 => "01",
            Flavor::F10 => "10",
            Flavor::F11 => "11",
        }
    }
}

impl serde::Serialize for Flavor {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.tag())
    }
}

impl fmt::Display for Flavor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for Flavor {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "01" => Ok(Flavor::F01),
            "10" => Ok(Flavor::F10),
            "11" => Ok(Flavor::F11),
            _ => Err(Error::Parse(format!("unknown flavor '{s}', expected 01, 10 or 11"))),
        }
    }
}

fn one() -> BigInt {
    BigInt::one()
}

fn times_product(s: &mut Series<BigInt>, sign: Sign, offset: usize, step: usize, power: usize) {
    let c = match sign {
        Sign::Minus => -one(),
        Sign::Plus => one(),
    };
    for _ in 0..power {
        let mut e = offset;
        while e <= s.order() {
            s.mul_binomial(&c, e);
            e += step;
        }
    }
}

fn over_product(s: &mut Series<BigInt>, sign: Sign, offset: usize, step: usize, power: usize) {
    let c = match sign {
        Sign::Minus => -one(),
        Sign::Plus => one(),
    };
    for _ in 0..power {
        let mut e = offset;
        while e <= s.order() {
            s.div_binomial(&c, e);
            e += step;
        }
    }
}

/// Product part of the closed form.
fn prefactor(a: usize, m: usize, flavor: Flavor, n: usize) -> Series<BigInt> {
    let b = m - a;
    match flavor {
        Flavor::F01 => {
            let mut s = pochhammer_product(&one(), Sign::Plus, 1, 1, n).expect("valid");
            over_product(&mut s, Sign::Plus, a, m, 1);
            over_product(&mut s, Sign::Plus, b, m, 1);
            over_product(&mut s, Sign::Minus, m, m, 1);
            s
        }
        Flavor::F10 => {
            let mut s = pochhammer_reciprocal(&one(), Sign::Minus, 1, 1, n).expect("valid");
            times_product(&mut s, Sign::Minus, a, m, 1);
            times_product(&mut s, Sign::Minus, b, m, 1);
            over_product(&mut s, Sign::Minus, m, m, 2);
            s
        }
        Flavor::F11 => {
            let mut s = Series::constant(BigInt::from(2), n);
            times_product(&mut s, Sign::Minus, 2, 2, 1);
            times_product(&mut s, Sign::Minus, 2 * m, 2 * m, 2);
            over_product(&mut s, Sign::Minus, 1, 1, 2);
            over_product(&mut s, Sign::Minus, m, m, 4);
            times_product(&mut s, Sign::Minus, a, m, 1);
            times_product(&mut s, Sign::Minus, b, m, 1);
            over_product(&mut s, Sign::Plus, a, m, 1);
            over_product(&mut s, Sign::Plus, b, m, 1);
            s
        }
    }
}

/// Sum part of the closed form.
fn single_sum(a: usize, m: usize, flavor: Flavor, n: usize) -> Series<BigInt> {
    match flavor {
        Flavor::F01 => theta_partial(m, a, n).expect("a, m >= 1"),
        Flavor::F10 => {
            // Σ_{j>=0} (-1)^j q^{m j(j+1)/2 + mj + a} / (1 - q^{mj+a})
            let mut s = Series::zero(n);
            for j in 0.. {
                let lead = m * j * (j + 1) / 2 + m * j + a;
                if lead > n {
                    break;
                }
                let c = if j % 2 == 0 { one() } else { -one() };
                let step = m * j + a;
                let mut e = lead;
                while e <= n {
                    s.add_to_coeff(e, &c);
                    e += step;
                }
            }
            s
        }
        Flavor::F11 => {
            // Σ_{j>=1} q^{aj} / (1 + q^{mj})
            let mut s = Series::zero(n);
            for j in 1..=n / a {
                let mut e = a * j;
                let mut sign = one();
                while e <= n {
                    s.add_to_coeff(e, &sign);
                    sign = -sign;
                    e += m * j;
                }
            }
            s
        }
    }
}

/// Coefficients of `p_n(a, m-a, m; x, y)`, `(x, y)` given by the flavor.
pub fn bias_series_symmetric(a: usize, m: usize, flavor: Flavor, n: usize) -> Result<Series<BigInt>> {
    bias_series_symmetric_with(a, m, flavor, n, Exec::default())
}

pub fn bias_series_symmetric_with(
    a: usize,
    m: usize,
    flavor: Flavor,
    n: usize,
    exec: Exec,
) -> Result<Series<BigInt>> {
    if a == 0 || 2 * a >= m {
        return Err(invalid(format!("symmetric form needs 1 <= a < m/2, got a = {a}, m = {m}")));
    }
    let (p, s) = exec.join(|| prefactor(a, m, flavor, n), || single_sum(a, m, flavor, n));
    Ok(p.mul_with(&s, exec))
}

/// `(-q;q)_∞ / ((-q^a, -q^{m-a}, q^m; q^m)_∞) · Σ_{j>=1} q^{m C(j,2) + ja}`, the
/// distinct-partition form assembled from its own factors.
pub fn distinct_symmetric_product(a: usize, m: usize, n: usize) -> Result<Series<BigInt>> {
    if a == 0 || 2 * a >= m {
        return Err(invalid(format!("symmetric form needs 1 <= a < m/2, got a = {a}, m = {m}")));
    }
    let num = pochhammer_product(&one(), Sign::Plus, 1, 1, n)?;
    let d1 = pochhammer_product(&one(), Sign::Plus, a, m, n)?;
    let d2 = pochhammer_product(&one(), Sign::Plus, m - a, m, n)?;
    let d3 = pochhammer_product(&one(), Sign::Minus, m, m, n)?;
    let den = (&(&d1 * &d2) * &d3).invert()?;
    let mut theta = Series::zero(n);
    for j in 1.. {
        let e = m * j * (j - 1) / 2 + j * a;
        if e > n {
            break;
        }
        theta.add_to_coeff(e, &one());
    }
    Ok(&(&num * &den) * &theta)
}

/// `(-q^3;q^3)_∞ / (q^3;q^3)_∞ · Σ_{j>=1} q^{j(3j-1)/2} (1 - q^j)`, the
/// generating function of `d_n(1,2;3) - d_n(2,1;3)`.
pub fn mod3_difference_product(n: usize) -> Series<BigInt> {
    let mut s = Series::zero(n);
    for j in 1.. {
        let e = j * (3 * j - 1) / 2;
        if e > n {
            break;
        }
        s.add_to_coeff(e, &one());
        if e + j <= n {
            s.add_to_coeff(e + j, &-one());
        }
    }
    times_product(&mut s, Sign::Plus, 3, 3, 1);
    over_product(&mut s, Sign::Minus, 3, 3, 1);
    s
}
