//! Parameter grids for the two inequality theorems.

use num_rational::BigRational;
use serde::Serialize;

use super::gf::GfEngine;
use super::report::monotonicity_check;
use super::weights::ScaledWeights;
use super::{theorem2_witness, BiasSpec, Weights};
use crate::error::Result;
use crate::par::Exec;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SweepCase {
    pub spec: BiasSpec,
    /// `n` with `p_n(a,b) < p_n(b,a)`.
    pub violations: Vec<usize>,
    /// Both sequences satisfy `c_{n+m} >= c_n`.
    pub monotone: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SweepReport {
    pub name: String,
    #[serde(rename = "N")]
    pub order: usize,
    pub cases: Vec<SweepCase>,
}

impl SweepReport {
    pub fn total_violations(&self) -> usize {
        self.cases.iter().map(|c| c.violations.len()).sum()
    }

    pub fn all_monotone(&self) -> bool {
        self.cases.iter().all(|c| c.monotone)
    }

    pub fn passed(&self) -> bool {
        self.total_violations() == 0 && self.all_monotone()
    }
}

/// Runs `compare` for every triple under every weight pair.
///
/// Weight pairs are processed in order and the triples of one pair are
/// fanned out under `exec`; case order is the input order.
pub fn sweep(
    name: &str,
    triples: &[(usize, usize, usize)],
    weights: &[(BigRational, BigRational)],
    n: usize,
    exec: Exec,
) -> Result<SweepReport> {
    let mut cases = Vec::with_capacity(triples.len() * weights.len());
    for (x, y) in weights {
        let w = ScaledWeights::new(x, y, n);
        let engine = GfEngine::new(&w, n, Exec::Sequential);
        let specs = triples
            .iter()
            .map(|&(a, b, m)| BiasSpec::new(a, b, m, Weights::exact(x.clone(), y.clone())?))
            .collect::<Result<Vec<_>>>()?;
        cases.extend(exec.map(&specs, |spec| {
            let swapped = spec.swapped();
            let ab = engine.bias(spec.a, spec.b, spec.m);
            let ba = engine.bias(swapped.a, swapped.b, swapped.m);
            let violations = (0..=n).filter(|&k| ab.coeff(k) < ba.coeff(k)).collect();
            let monotone = monotonicity_check(ab.coeffs(), spec.m).is_ok()
                && monotonicity_check(ba.coeffs(), spec.m).is_ok();
            SweepCase {
                spec: spec.clone(),
                violations,
                monotone,
            }
        }));
    }
    Ok(SweepReport {
        name: name.to_string(),
        order: n,
        cases,
    })
}

fn r(p: i64, q: i64) -> BigRational {
    BigRational::new(p.into(), q.into())
}

/// All `1 <= a < b <= m`, `2 <= m <= m_max`.
pub fn ordered_triples(m_max: usize) -> Vec<(usize, usize, usize)> {
    let mut out = Vec::new();
    for m in 2..=m_max {
        for a in 1..m {
            for b in a + 1..=m {
                out.push((a, b, m));
            }
        }
    }
    out
}

/// `p_n(a,b) >= p_n(b,a)` over `m <= m_max`, `x ∈ {1, 3/2, 2, 3}`,
/// `y ∈ {0, 1/2, 1, 2}`.
pub fn theorem1_sweep(m_max: usize, n: usize, exec: Exec) -> Result<SweepReport> {
    let xs = [r(1, 1), r(3, 2), r(2, 1), r(3, 1)];
    let ys = [r(0, 1), r(1, 2), r(1, 1), r(2, 1)];
    let weights: Vec<_> = xs
        .iter()
        .flat_map(|x| ys.iter().map(move |y| (x.clone(), y.clone())))
        .collect();
    sweep("theorem1", &ordered_triples(m_max), &weights, n, exec)
}

/// `p_n(a,b;x,1) >= p_n(b,a;x,1)` over triples with a witness, `m <= m_max`,
/// `x ∈ {0, 1/2, 1, 2}`.
pub fn theorem2_sweep(m_max: usize, n: usize, exec: Exec) -> Result<SweepReport> {
    let triples: Vec<_> = ordered_triples(m_max)
        .into_iter()
        .filter(|&(a, b, m)| theorem2_witness(a, b, m).is_some())
        .collect();
    let weights: Vec<_> = [r(0, 1), r(1, 2), r(1, 1), r(2, 1)]
        .into_iter()
        .map(|x| (x, r(1, 1)))
        .collect();
    sweep("theorem2", &triples, &weights, n, exec)
}

/// `c_{n+m} >= c_n` for both orders of every triple, `m <= m_max`,
/// `x, y ∈ {0, 1/2, 1, 2}` not both zero.
pub fn monotonicity_sweep(m_max: usize, n: usize, exec: Exec) -> Result<SweepReport> {
    let grid = [r(0, 1), r(1, 2), r(1, 1), r(2, 1)];
    let weights: Vec<_> = grid
        .iter()
        .flat_map(|x| grid.iter().map(move |y| (x.clone(), y.clone())))
        .filter(|(x, y)| !(x.numer() == &0.into() && y.numer() == &0.into()))
        .collect();
    sweep("lemma2-1", &ordered_triples(m_max), &weights, n, exec)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triple_count() {
        assert_eq!(ordered_triples(4).len(), 1 + 3 + 6);
    }

    #[test]
    fn small_sweeps_pass() {
        let t1 = theorem1_sweep(4, 40, Exec::Sequential).unwrap();
        assert_eq!(t1.cases.len(), 10 * 16);
        assert!(t1.passed());
        let t2 = theorem2_sweep(5, 40, Exec::Sequential).unwrap();
        assert!(t2.passed());
    }

    #[test]
    fn monotone_everywhere() {
        let r = monotonicity_sweep(4, 40, Exec::Sequential).unwrap();
        assert_eq!(r.cases.len(), 10 * 15);
        assert!(r.all_monotone());
    }

    #[test]
    fn distinct_parity_is_not_a_theorem_case() {
        // (1,2,2;0,1) has no witness and fails at small n.
        let r = sweep("probe", &[(1, 2, 2)], &[(r(0, 1), r(1, 1))], 20, Exec::Sequential).unwrap();
        assert!(!r.cases[0].violations.is_empty());
    }
}
