use std::cmp::Ordering;

use num_rational::BigRational;
use serde::Serialize;

use super::{scaled_bias, BiasSpec, Method};
use crate::error::Result;
use crate::par::Exec;
use crate::truncated::format_rational;

/// `p_n(a,b)` and `p_n(b,a)` side by side for `n <= N`.
#[derive(Clone, Debug, PartialEq)]
pub struct BiasReport {
    pub spec: BiasSpec,
    pub method: Method,
    pub order: usize,
    pub values: Vec<BigRational>,
    pub swapped: Vec<BigRational>,
    /// Sign of `p_n(a,b) - p_n(b,a)`.
    pub signs: Vec<i8>,
    /// Indices where the difference is negative.
    pub violations: Vec<usize>,
    pub threshold: Option<usize>,
    pub inconclusive: Option<bool>,
}

/// Integers print bare, everything else as `p/q`.
pub fn format_value(v: &BigRational) -> String {
    if v.is_integer() {
        v.numer().to_string()
    } else {
        format_rational(v)
    }
}

#[derive(Serialize)]
struct Wire<'a> {
    spec: &'a BiasSpec,
    method: Method,
    #[serde(rename = "N")]
    order: usize,
    values: Vec<String>,
    swapped_values: Vec<String>,
    violations: &'a [usize],
    equalities: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    threshold: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    inconclusive: Option<bool>,
}

impl BiasReport {
    /// Indices where `p_n(a,b) = p_n(b,a)`.
    pub fn equalities(&self) -> Vec<usize> {
        (0..self.signs.len()).filter(|&n| self.signs[n] == 0).collect()
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::to_value(Wire {
            spec: &self.spec,
            method: self.method,
            order: self.order,
            values: self.values.iter().map(format_value).collect(),
            swapped_values: self.swapped.iter().map(format_value).collect(),
            violations: &self.violations,
            equalities: self.equalities(),
            threshold: self.threshold,
            inconclusive: self.inconclusive,
        })
        .expect("report serializes")
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_json_value()).expect("report serializes")
    }

    /// Columns `n,p_ab,p_ba,diff_sign`.
    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(["n", "p_ab", "p_ba", "diff_sign"]).expect("in-memory write");
        for n in 0..=self.order {
            w.write_record([
                n.to_string(),
                format_value(&self.values[n]),
                format_value(&self.swapped[n]),
                self.signs[n].to_string(),
            ])
            .expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("flush")).expect("utf-8")
    }
}

/// Tabulates the sign of `p_n(a,b,m;x,y) - p_n(b,a,m;x,y)`.
pub fn compare_bias(spec: &BiasSpec, n: usize) -> Result<BiasReport> {
    compare_bias_with(spec, n, Method::Gf, Exec::default())
}

pub fn compare_bias_with(spec: &BiasSpec, n: usize, method: Method, exec: Exec) -> Result<BiasReport> {
    let swapped_spec = spec.swapped();
    // the closed form covers only a < m/2, so the swapped side uses the double sum
    let swapped_method = if method == Method::Symmetric { Method::Gf } else { method };
    let ((w, ab), (_, ba)) = {
        let (l, r) = exec.join(
            || scaled_bias(spec, n, method, exec),
            || scaled_bias(&swapped_spec, n, swapped_method, exec),
        );
        (l?, r?)
    };
    let signs: Vec<i8> = ab
        .coeffs()
        .iter()
        .zip(ba.coeffs())
        .map(|(p, q)| match p.cmp(q) {
            Ordering::Greater => 1,
            Ordering::Equal => 0,
            Ordering::Less => -1,
        })
        .collect();
    let violations = (0..signs.len()).filter(|&k| signs[k] < 0).collect();
    Ok(BiasReport {
        spec: spec.clone(),
        method,
        order: n,
        values: w.unscale_all(ab.coeffs()),
        swapped: w.unscale_all(ba.coeffs()),
        signs,
        violations,
        threshold: None,
        inconclusive: None,
    })
}

/// `Ok(())` if `c_{n+m} >= c_n` throughout, otherwise the first index
/// `n + m` at which the sequence drops.
pub fn monotonicity_check<T: PartialOrd>(seq: &[T], m: usize) -> std::result::Result<(), usize> {
    assert!(m >= 1, "modulus must be positive");
    for k in m..seq.len() {
        if seq[k] < seq[k - m] {
            return Err(k);
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn symmetric_method_matches_gf() {
        let spec = BiasSpec::with_ints(1, 4, 5, 1, 1).unwrap();
        let gf = compare_bias_with(&spec, 60, Method::Gf, Exec::Sequential).unwrap();
        let sym = compare_bias_with(&spec, 60, Method::Symmetric, Exec::Sequential).unwrap();
        assert_eq!(gf.values, sym.values);
        assert_eq!(gf.signs, sym.signs);
        let off = BiasSpec::with_ints(1, 3, 5, 1, 1).unwrap();
        assert!(compare_bias_with(&off, 10, Method::Symmetric, Exec::Sequential).is_err());
    }

    #[test]
    fn parity_report() {
        let spec = BiasSpec::with_ints(1, 2, 2, 1, 0).unwrap();
        let r = compare_bias(&spec, 40).unwrap();
        assert!(r.violations.is_empty());
        assert_eq!(r.equalities(), vec![0, 2]);
        let csv = r.to_csv();
        assert!(csv.starts_with("n,p_ab,p_ba,diff_sign\n0,0,0,0\n1,1,0,1\n"));
    }

    #[test]
    fn symbolic_weights_rejected() {
        let spec = BiasSpec::new(1, 2, 3, super::super::Weights::Symbolic).unwrap();
        assert!(compare_bias(&spec, 10).is_err());
    }

    #[test]
    fn monotonicity() {
        assert_eq!(monotonicity_check(&[3, 3, 3, 3], 2), Ok(()));
        assert_eq!(monotonicity_check(&[0, 1, 1, 2, 0, 3], 2), Err(4));
    }
}
