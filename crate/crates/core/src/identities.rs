//! Checks of the classical q-series identities the bias formulas rest on.
//!
//! Jacobi, Fine and Heine are compared coefficientwise after substituting
//! monomials `c q^s` for the free parameters. The theta reciprocal and the
//! Kronecker sum involve `q/ζ`, which has no formal meaning for monomial
//! `ζ`, so they are compared numerically at real points `0 < |q| < |ζ| < 1`.

use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{invalid, Error, Result};
use crate::series::Series;
use crate::truncated::format_rational;

/// Terms kept on each side of a numeric identity.
pub const NUMERIC_TERMS: usize = 200;
/// Largest accepted absolute residual for numeric identities.
pub const NUMERIC_TOLERANCE: f64 = 1e-10;

/// The monomial `c q^s`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Monomial {
    pub c: BigRational,
    pub s: usize,
}

impl Monomial {
    pub fn new(c: i64, s: usize) -> Self {
        Monomial {
            c: BigRational::from_integer(c.into()),
            s,
        }
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}*q^{}", format_rational(&self.c), self.s)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum IdentityCase {
    /// `(-ζ, -q/ζ, q; q)_∞ = Σ_n q^{n(n-1)/2} ζ^n`
    Jacobi { zeta: Monomial, order: usize },
    /// `Σ (α;q)_n z^n / (γ;q)_{n+1} = Σ (αz/γ;q)_n γ^n / (z;q)_{n+1}`
    Fine {
        alpha: Monomial,
        gamma: Monomial,
        z: Monomial,
        order: usize,
    },
    /// `Σ (α,β;q)_n z^n / (γ,q;q)_n
    ///   = (γ/β, βz;q)_∞ / (γ, z;q)_∞ · Σ (αβz/γ, β;q)_n (γ/β)^n / (βz, q;q)_n`
    Heine {
        alpha: Monomial,
        beta: Monomial,
        gamma: Monomial,
        z: Monomial,
        order: usize,
    },
    /// `(q;q)_∞^2 / (ζ, q/ζ; q)_∞ = Σ_n (-1)^n q^{n(n+1)/2} / (1 - ζ q^n)`
    ThetaReciprocal { q: f64, zeta: f64 },
    /// `(-q/ζ, -ζ;q)_∞ / (q/ζ, ζ;q)_∞
    ///   = (-q;q)_∞^2 / (q;q)_∞^2 · (1 + 2 Σ_{n>=1} (ζ^n + (q/ζ)^n) / (1 + q^n))`
    Kronecker { q: f64, zeta: f64 },
}

impl IdentityCase {
    pub fn name(&self) -> &'static str {
        match self {
            IdentityCase::Jacobi { .. } => "jacobi",
            IdentityCase::Fine { .. } => "fine",
            IdentityCase::Heine { .. } => "heine",
            IdentityCase::ThetaReciprocal { .. } => "theta_reciprocal",
            IdentityCase::Kronecker { .. } => "kronecker",
        }
    }

    fn describe(&self) -> String {
        match self {
            IdentityCase::Jacobi { zeta, .. } => format!("zeta={zeta}"),
            IdentityCase::Fine { alpha, gamma, z, .. } => {
                format!("alpha={alpha} gamma={gamma} z={z}")
            }
            IdentityCase::Heine {
                alpha, beta, gamma, z, ..
            } => format!("alpha={alpha} beta={beta} gamma={gamma} z={z}"),
            IdentityCase::ThetaReciprocal { q, zeta } | IdentityCase::Kronecker { q, zeta } => {
                format!("q={q} zeta={zeta}")
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct IdentityReport {
    pub identity: &'static str,
    pub params: String,
    /// `formal` or `numeric`.
    pub mode: &'static str,
    /// Truncation order (formal) or terms per side (numeric).
    pub order: usize,
    /// Largest coefficient difference, as an exact rational string (formal).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_discrepancy: Option<String>,
    /// Largest absolute residual (numeric).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub residual: Option<f64>,
    pub passed: bool,
}

type Q = BigRational;

fn rat(v: i64) -> Q {
    Q::from_integer(v.into())
}

/// `s *= (1 + c q^e)`, allowing `e = 0`.
fn times(s: &mut Series<Q>, c: &Q, e: usize) {
    if e == 0 {
        *s = s.scale(&(Q::one() + c));
    } else if e <= s.order() {
        s.mul_binomial(c, e);
    }
}

/// `s /= (1 + c q^e)`, allowing `e = 0` when `c != -1`.
fn divide(s: &mut Series<Q>, c: &Q, e: usize) -> Result<()> {
    if e == 0 {
        let k = Q::one() + c;
        if k.is_zero() {
            return Err(Error::SingularSeries("factor (1 - q^0) in a denominator".into()));
        }
        *s = s.scale(&k.recip());
    } else if e <= s.order() {
        s.div_binomial(c, e);
    }
    Ok(())
}

/// `s *= (c q^e; q)_∞` or its reciprocal.
fn infinite(s: &mut Series<Q>, c: &Q, e: usize, reciprocal: bool) -> Result<()> {
    if e == 0 {
        return Err(invalid("infinite product needs a positive q-exponent"));
    }
    let neg = -c.clone();
    let mut k = e;
    while k <= s.order() {
        if reciprocal {
            s.div_binomial(&neg, k);
        } else {
            s.mul_binomial(&neg, k);
        }
        k += 1;
    }
    Ok(())
}

fn max_discrepancy(lhs: &Series<Q>, rhs: &Series<Q>) -> Q {
    lhs.coeffs()
        .iter()
        .zip(rhs.coeffs())
        .map(|(l, r)| (l - r).abs())
        .max()
        .unwrap_or_else(Q::zero)
}

fn jacobi(zeta: &Monomial, n: usize) -> Result<(Series<Q>, Series<Q>)> {
    let (c, s) = (&zeta.c, zeta.s);
    if c.is_zero() || s == 0 {
        return Err(invalid("jacobi needs zeta = c q^s with c != 0 and s >= 1"));
    }
    // Both sides times q^{s(s-1)/2}, which moves the non-positive powers
    // of q/ζ into a finite polynomial in q.
    let inv = c.recip();
    let mut lhs = Series::one(n);
    infinite(&mut lhs, &-c.clone(), s, false)?;
    for i in 1..s {
        if i <= n {
            // (1/c + q^i) = (1/c)(1 + c q^i)
            lhs = lhs.scale(&inv);
            lhs.mul_binomial(c, i);
        } else {
            lhs = lhs.scale(&inv);
        }
    }
    times(&mut lhs, &inv, 0);
    infinite(&mut lhs, &-inv.clone(), 1, false)?;
    infinite(&mut lhs, &rat(1), 1, false)?;

    let mut rhs = Series::zero(n);
    // exponent (j)(j-1)/2 with j = k + s; j ranges over all integers
    let reach = ((2 * n) as f64).sqrt() as i64 + 2;
    for j in -reach..=reach + 1 {
        let e = j * (j - 1) / 2;
        if e < 0 || e as usize > n {
            continue;
        }
        let k = j - s as i64;
        let ck = if k >= 0 {
            num_traits::pow(c.clone(), k as usize)
        } else {
            num_traits::pow(inv.clone(), (-k) as usize)
        };
        rhs.add_to_coeff(e as usize, &ck);
    }
    Ok((lhs, rhs))
}

fn check_positive(name: &str, m: &Monomial) -> Result<()> {
    if m.s == 0 {
        return Err(invalid(format!("{name} must have q-exponent >= 1, got {m}")));
    }
    Ok(())
}

fn fine(alpha: &Monomial, gamma: &Monomial, z: &Monomial, n: usize) -> Result<(Series<Q>, Series<Q>)> {
    for (name, m) in [("alpha", alpha), ("gamma", gamma), ("z", z)] {
        check_positive(name, m)?;
    }
    if gamma.c.is_zero() {
        return Err(invalid("gamma must be non-zero"));
    }
    if alpha.s + z.s < gamma.s {
        return Err(invalid(format!(
            "alpha z / gamma needs q-exponent >= 0, got {} + {} - {}",
            alpha.s, z.s, gamma.s
        )));
    }
    let neg = |c: &Q| -c.clone();
    // term_k = (α;q)_k z^k / (γ;q)_{k+1}
    let mut lhs = Series::zero(n);
    let mut term = Series::one(n);
    divide(&mut term, &neg(&gamma.c), gamma.s)?;
    for k in 0..=n / z.s {
        if k > 0 {
            times(&mut term, &neg(&alpha.c), alpha.s + k - 1);
            term = term.scale(&z.c);
            term.shift(z.s);
            divide(&mut term, &neg(&gamma.c), gamma.s + k)?;
        }
        lhs.add_assign(&term);
    }
    let w = Monomial {
        c: &alpha.c * &z.c / &gamma.c,
        s: alpha.s + z.s - gamma.s,
    };
    let mut rhs = Series::zero(n);
    let mut term = Series::one(n);
    divide(&mut term, &neg(&z.c), z.s)?;
    for k in 0..=n / gamma.s {
        if k > 0 {
            times(&mut term, &neg(&w.c), w.s + k - 1);
            term = term.scale(&gamma.c);
            term.shift(gamma.s);
            divide(&mut term, &neg(&z.c), z.s + k)?;
        }
        rhs.add_assign(&term);
    }
    Ok((lhs, rhs))
}

fn heine(
    alpha: &Monomial,
    beta: &Monomial,
    gamma: &Monomial,
    z: &Monomial,
    n: usize,
) -> Result<(Series<Q>, Series<Q>)> {
    for (name, m) in [("alpha", alpha), ("beta", beta), ("gamma", gamma), ("z", z)] {
        check_positive(name, m)?;
    }
    if beta.c.is_zero() {
        return Err(invalid("beta must be non-zero"));
    }
    if gamma.s <= beta.s {
        return Err(invalid(format!(
            "gamma / beta needs q-exponent >= 1, got {} - {}",
            gamma.s, beta.s
        )));
    }
    if alpha.s + beta.s + z.s < gamma.s {
        return Err(invalid("alpha beta z / gamma needs q-exponent >= 0"));
    }
    let neg = |c: &Q| -c.clone();
    let minus_one = rat(-1);
    let mut lhs = Series::zero(n);
    let mut term = Series::one(n);
    for k in 0..=n / z.s {
        if k > 0 {
            times(&mut term, &neg(&alpha.c), alpha.s + k - 1);
            times(&mut term, &neg(&beta.c), beta.s + k - 1);
            divide(&mut term, &neg(&gamma.c), gamma.s + k - 1)?;
            divide(&mut term, &minus_one, k)?;
            term = term.scale(&z.c);
            term.shift(z.s);
        }
        lhs.add_assign(&term);
    }

    let ratio = Monomial {
        c: &gamma.c / &beta.c,
        s: gamma.s - beta.s,
    };
    let bz = Monomial {
        c: &beta.c * &z.c,
        s: beta.s + z.s,
    };
    let w = Monomial {
        c: &alpha.c * &beta.c * &z.c / &gamma.c,
        s: alpha.s + beta.s + z.s - gamma.s,
    };
    let mut sum = Series::zero(n);
    let mut term = Series::one(n);
    for k in 0..=n / ratio.s {
        if k > 0 {
            times(&mut term, &neg(&w.c), w.s + k - 1);
            times(&mut term, &neg(&beta.c), beta.s + k - 1);
            divide(&mut term, &neg(&bz.c), bz.s + k - 1)?;
            divide(&mut term, &minus_one, k)?;
            term = term.scale(&ratio.c);
            term.shift(ratio.s);
        }
        sum.add_assign(&term);
    }
    let mut rhs = sum;
    infinite(&mut rhs, &ratio.c, ratio.s, false)?;
    infinite(&mut rhs, &bz.c, bz.s, false)?;
    infinite(&mut rhs, &gamma.c, gamma.s, true)?;
    infinite(&mut rhs, &z.c, z.s, true)?;
    Ok((lhs, rhs))
}

fn check_point(q: f64, zeta: f64) -> Result<()> {
    if !(q != 0.0 && q.abs() < zeta.abs() && zeta.abs() < 1.0) {
        return Err(invalid(format!("need 0 < |q| < |zeta| < 1, got q = {q}, zeta = {zeta}")));
    }
    Ok(())
}

/// `Π_{j<terms} (1 + c q^{j+offset})`
fn product(c: f64, q: f64, offset: usize, terms: usize) -> f64 {
    let mut p = 1.0;
    let mut qj = q.powi(offset as i32);
    for _ in 0..terms {
        p *= 1.0 + c * qj;
        qj *= q;
    }
    p
}

fn theta_reciprocal(q: f64, zeta: f64, terms: usize) -> (f64, f64) {
    let qq = product(-1.0, q, 1, terms);
    let lhs = qq * qq / (product(-zeta, q, 0, terms) * product(-1.0 / zeta, q, 1, terms));
    let mut rhs = 0.0;
    for k in 0..terms as i32 {
        let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
        rhs += sign * q.powi(k * (k + 1) / 2) / (1.0 - zeta * q.powi(k));
        if k >= 1 {
            // n = -k: (-1)^k q^{k(k+1)/2} / (q^k - ζ)
            rhs += sign * q.powi(k * (k + 1) / 2) / (q.powi(k) - zeta);
        }
    }
    (lhs, rhs)
}

fn kronecker(q: f64, zeta: f64, terms: usize) -> (f64, f64) {
    let lhs = product(1.0 / zeta, q, 1, terms) * product(zeta, q, 0, terms)
        / (product(-1.0 / zeta, q, 1, terms) * product(-zeta, q, 0, terms));
    let ratio = product(1.0, q, 1, terms) / product(-1.0, q, 1, terms);
    let mut sum = 0.0;
    for k in 1..=terms as i32 {
        sum += (zeta.powi(k) + (q / zeta).powi(k)) / (1.0 + q.powi(k));
    }
    (lhs, ratio * ratio * (1.0 + 2.0 * sum))
}

/// Runs one identity check.
pub fn verify_identity(case: &IdentityCase) -> Result<IdentityReport> {
    let formal = |(lhs, rhs): (Series<Q>, Series<Q>), order: usize| {
        let d = max_discrepancy(&lhs, &rhs);
        IdentityReport {
            identity: case.name(),
            params: case.describe(),
            mode: "formal",
            order,
            passed: d.is_zero(),
            max_discrepancy: Some(format_rational(&d)),
            residual: None,
        }
    };
    let numeric = |(lhs, rhs): (f64, f64)| {
        let r = (lhs - rhs).abs();
        IdentityReport {
            identity: case.name(),
            params: case.describe(),
            mode: "numeric",
            order: NUMERIC_TERMS,
            passed: r < NUMERIC_TOLERANCE,
            max_discrepancy: None,
            residual: Some(r),
        }
    };
    match case {
        IdentityCase::Jacobi { zeta, order } => Ok(formal(jacobi(zeta, *order)?, *order)),
        IdentityCase::Fine {
            alpha,
            gamma,
            z,
            order,
        } => Ok(formal(fine(alpha, gamma, z, *order)?, *order)),
        IdentityCase::Heine {
            alpha,
            beta,
            gamma,
            z,
            order,
        } => Ok(formal(heine(alpha, beta, gamma, z, *order)?, *order)),
        IdentityCase::ThetaReciprocal { q, zeta } => {
            check_point(*q, *zeta)?;
            Ok(numeric(theta_reciprocal(*q, *zeta, NUMERIC_TERMS)))
        }
        IdentityCase::Kronecker { q, zeta } => {
            check_point(*q, *zeta)?;
            Ok(numeric(kronecker(*q, *zeta, NUMERIC_TERMS)))
        }
    }
}

/// The standard battery: five Jacobi substitutions at order 300, three
/// each of Fine and Heine at order 100, three sample points each for the
/// numeric identities.
pub fn standard_cases() -> Vec<IdentityCase> {
    let mut out = Vec::new();
    for (c, s) in [(1, 2), (-1, 1), (2, 1), (-3, 2), (2, 3)] {
        out.push(IdentityCase::Jacobi {
            zeta: Monomial::new(c, s),
            order: 300,
        });
    }
    for (a, g, z) in [((1, 2), (1, 3), (1, 1)), ((2, 1), (-1, 2), (3, 2)), ((-1, 3), (2, 1), (1, 1))] {
        out.push(IdentityCase::Fine {
            alpha: Monomial::new(a.0, a.1),
            gamma: Monomial::new(g.0, g.1),
            z: Monomial::new(z.0, z.1),
            order: 100,
        });
    }
    for (a, b, g, z) in [
        ((1, 1), (1, 1), (1, 2), (1, 1)),
        ((2, 2), (1, 1), (-1, 3), (1, 1)),
        ((-1, 1), (3, 2), (2, 4), (1, 2)),
    ] {
        out.push(IdentityCase::Heine {
            alpha: Monomial::new(a.0, a.1),
            beta: Monomial::new(b.0, b.1),
            gamma: Monomial::new(g.0, g.1),
            z: Monomial::new(z.0, z.1),
            order: 100,
        });
    }
    for (q, zeta) in [(0.2, 0.5), (0.1, 0.3), (-0.3, 0.6)] {
        out.push(IdentityCase::ThetaReciprocal { q, zeta });
        out.push(IdentityCase::Kronecker { q, zeta });
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn jacobi_square() {
        let r = verify_identity(&IdentityCase::Jacobi {
            zeta: Monomial::new(1, 2),
            order: 200,
        })
        .unwrap();
        assert!(r.passed, "{r:?}");
    }

    #[test]
    fn fine_example() {
        let r = verify_identity(&IdentityCase::Fine {
            alpha: Monomial::new(1, 2),
            gamma: Monomial::new(1, 3),
            z: Monomial::new(1, 1),
            order: 100,
        })
        .unwrap();
        assert!(r.passed, "{r:?}");
    }

    #[test]
    fn kronecker_example() {
        let r = verify_identity(&IdentityCase::Kronecker { q: 0.2, zeta: 0.5 }).unwrap();
        assert!(r.passed, "{r:?}");
    }

    #[test]
    fn perturbed_sides_fail() {
        let (lhs, mut rhs) = jacobi(&Monomial::new(2, 1), 40).unwrap();
        rhs.add_to_coeff(17, &rat(1));
        assert_eq!(max_discrepancy(&lhs, &rhs), rat(1));
    }

    #[test]
    fn invalid_regions_rejected() {
        assert!(verify_identity(&IdentityCase::Jacobi {
            zeta: Monomial::new(1, 0),
            order: 10
        })
        .is_err());
        assert!(verify_identity(&IdentityCase::Heine {
            alpha: Monomial::new(1, 1),
            beta: Monomial::new(1, 2),
            gamma: Monomial::new(1, 2),
            z: Monomial::new(1, 1),
            order: 10
        })
        .is_err());
        assert!(verify_identity(&IdentityCase::ThetaReciprocal { q: 0.5, zeta: 0.2 }).is_err());
    }

    #[test]
    fn standard_battery_passes() {
        for case in standard_cases() {
            let r = verify_identity(&case).unwrap();
            assert!(r.passed, "{r:?}");
        }
    }
}
