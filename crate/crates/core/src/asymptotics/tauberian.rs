//! Coefficient asymptotics from boundary growth `f(e^{-z}) ~ α z^γ exp(β z^{-ρ}/ρ)`.

use serde::Serialize;
use twofloat::TwoFloat;

use crate::error::{invalid, Result};

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct AsymptoticProfile {
    pub alpha: f64,
    pub beta: f64,
    pub gamma: f64,
    pub rho: f64,
    #[serde(skip)]
    beta_hi: TwoFloat,
}

fn pi_squared_over(d: f64) -> TwoFloat {
    twofloat::consts::PI * twofloat::consts::PI / d
}

impl AsymptoticProfile {
    pub fn new(alpha: f64, beta: f64, gamma: f64, rho: f64) -> Result<Self> {
        if !(alpha > 0.0 && beta > 0.0 && rho > 0.0 && gamma.is_finite()) {
            return Err(invalid(format!(
                "profile needs alpha, beta, rho > 0 and finite gamma, got ({alpha}, {beta}, {gamma}, {rho})"
            )));
        }
        Ok(AsymptoticProfile {
            alpha,
            beta,
            gamma,
            rho,
            beta_hi: TwoFloat::from(beta),
        })
    }

    fn with_beta(alpha: f64, beta_hi: TwoFloat, gamma: f64) -> Self {
        AsymptoticProfile {
            alpha,
            beta: beta_hi.hi(),
            gamma,
            rho: 1.0,
            beta_hi,
        }
    }

    /// `1/(q;q)_∞ ~ (z/2π)^{1/2} exp(π²/6z)`.
    pub fn partitions() -> Self {
        Self::with_beta(1.0 / (2.0 * std::f64::consts::PI).sqrt(), pi_squared_over(6.0), 0.5)
    }

    /// `(−q;q)_∞ ~ 2^{-1/2} exp(π²/12z)`.
    pub fn distinct() -> Self {
        Self::with_beta(std::f64::consts::FRAC_1_SQRT_2, pi_squared_over(12.0), 0.0)
    }

    /// `(−q;q)_∞/(q;q)_∞ ~ (z/4π)^{1/2} exp(π²/4z)`.
    pub fn overpartitions() -> Self {
        Self::with_beta(0.5 / std::f64::consts::PI.sqrt(), pi_squared_over(4.0), 0.5)
    }

    fn power_exponent(&self) -> f64 {
        (1.0 + 2.0 * self.gamma) / (2.0 * (1.0 + self.rho))
    }
}

/// `ln c_n` split as a large exponential part and an `O(log n)` remainder.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LogMagnitude {
    pub exponent: TwoFloat,
    pub rest: f64,
}

impl LogMagnitude {
    pub fn ln(&self) -> f64 {
        (self.exponent + self.rest).hi()
    }

    /// `|e^{self − other} − 1|`.
    pub fn relative_diff(&self, other: &LogMagnitude) -> f64 {
        let d = (self.exponent - other.exponent).hi() + (self.rest - other.rest);
        d.exp_m1().abs()
    }
}

/// `ln` of the main term of `c_n`.
pub fn tauberian_log_predict(p: &AsymptoticProfile, n: f64) -> LogMagnitude {
    let k = p.power_exponent();
    let rest = p.alpha.ln() + k * p.beta.ln()
        - 0.5 * (2.0 * std::f64::consts::PI * (1.0 + p.rho)).ln()
        - (k + 0.5) * n.ln();
    let nn = TwoFloat::from(n);
    let exponent = if p.rho == 1.0 {
        (p.beta_hi * nn).sqrt() * 2.0
    } else {
        let r = p.rho / (1.0 + p.rho);
        p.beta_hi.powf(TwoFloat::from(1.0 / (1.0 + p.rho))) * nn.powf(TwoFloat::from(r)) * (1.0 + 1.0 / p.rho)
    };
    LogMagnitude { exponent, rest }
}

/// The main term of `c_n`; overflows to infinity for large `n`.
pub fn tauberian_predict(p: &AsymptoticProfile, n: f64) -> f64 {
    tauberian_log_predict(p, n).ln().exp()
}

/// Classical main terms for `p(n)`, `q(n)` and `p̄(n)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ClassicalTerm {
    Partitions,
    Distinct,
    Overpartitions,
}

impl ClassicalTerm {
    pub const ALL: [ClassicalTerm; 3] = [Self::Partitions, Self::Distinct, Self::Overpartitions];

    pub fn profile(self) -> AsymptoticProfile {
        match self {
            Self::Partitions => AsymptoticProfile::partitions(),
            Self::Distinct => AsymptoticProfile::distinct(),
            Self::Overpartitions => AsymptoticProfile::overpartitions(),
        }
    }

    pub fn tag(self) -> &'static str {
        match self {
            Self::Partitions => "p",
            Self::Distinct => "q",
            Self::Overpartitions => "pbar",
        }
    }

    /// `e^{2π√(n/6)}/(4√3 n)`, `e^{π√(n/3)}/(4·3^{1/4} n^{3/4})`, `e^{π√n}/(8n)`.
    pub fn log_main_term(self, n: f64) -> LogMagnitude {
        let pi = twofloat::consts::PI;
        let nn = TwoFloat::from(n);
        match self {
            Self::Partitions => LogMagnitude {
                exponent: pi * 2.0 * (nn / 6.0).sqrt(),
                rest: -(4.0 * 3f64.sqrt() * n).ln(),
            },
            Self::Distinct => LogMagnitude {
                exponent: pi * (nn / 3.0).sqrt(),
                rest: -(4.0f64.ln() + 0.25 * 3f64.ln() + 0.75 * n.ln()),
            },
            Self::Overpartitions => LogMagnitude {
                exponent: pi * nn.sqrt(),
                rest: -(8.0 * n).ln(),
            },
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn profiles_match_classical_terms() {
        for t in ClassicalTerm::ALL {
            for n in [1e3, 1e4, 1e6] {
                let err = tauberian_log_predict(&t.profile(), n).relative_diff(&t.log_main_term(n));
                assert!(err < 1e-12, "{} at {n}: {err:e}", t.tag());
            }
        }
    }

    #[test]
    fn rejects_bad_profile() {
        assert!(AsymptoticProfile::new(0.0, 1.0, 0.0, 1.0).is_err());
        assert!(AsymptoticProfile::new(1.0, 1.0, 0.0, -1.0).is_err());
    }

    #[test]
    fn general_rho_matches_rho_one_path() {
        let p = AsymptoticProfile::partitions();
        let generic = AsymptoticProfile::new(p.alpha, p.beta, p.gamma, 1.0 + 1e-15).unwrap();
        let a = tauberian_predict(&p, 100.0);
        let b = tauberian_predict(&generic, 100.0);
        assert!(((a - b) / a).abs() < 1e-10);
    }

    #[test]
    fn small_n_sanity() {
        // p(100) = 190569292, main term overshoots by a few percent
        let r = tauberian_predict(&AsymptoticProfile::partitions(), 100.0) / 190_569_292.0;
        assert!(r > 1.0 && r < 1.1, "{r}");
    }
}
