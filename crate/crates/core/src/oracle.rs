//! Brute-force enumeration of partitions and partition pairs.
//!
//! Nothing here uses generating functions; it exists to check the series
//! engine on small `n`.

use std::collections::BTreeMap;

use num_bigint::BigInt;

use crate::bias::{residue, BiasSpec, Weights};
use crate::error::{Error, Result};
use crate::ring::MarkerPoly;
use crate::truncated::CoefficientValue;

/// Largest `n` accepted by the single-partition enumerators.
pub const ENUM_CAP: usize = 60;
/// Largest `n` accepted by the pair enumerators.
pub const PAIR_CAP: usize = 36;

/// Parts in non-increasing order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(pub Vec<usize>);

impl Partition {
    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn is_distinct(&self) -> bool {
        self.0.windows(2).all(|w| w[0] > w[1])
    }

    pub fn residue_stats(&self, m: usize) -> ResidueStat {
        let mut counts = vec![0; m];
        for &p in &self.0 {
            counts[residue(p, m) - 1] += 1;
        }
        ResidueStat { m, counts }
    }
}

/// Number of parts in each residue class `1..=m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResidueStat {
    pub m: usize,
    counts: Vec<usize>,
}

impl ResidueStat {
    pub fn count(&self, class: usize) -> usize {
        self.counts[class - 1]
    }

    pub fn total(&self) -> usize {
        self.counts.iter().sum()
    }
}

/// Streams partitions of `n` in decreasing lexicographic order.
pub struct PartitionIter {
    n: usize,
    current: Option<Vec<usize>>,
    distinct: bool,
}

impl PartitionIter {
    fn new(n: usize, distinct: bool) -> Self {
        let current = if n == 0 { Some(Vec::new()) } else { Some(vec![n]) };
        PartitionIter { n, current, distinct }
    }

    /// Appends the lexicographically largest tail summing to `rem` with
    /// parts below (distinct) or at most (ordinary) `bound`.
    fn fill(&self, parts: &mut Vec<usize>, mut rem: usize, mut bound: usize) {
        while rem > 0 {
            let cap = if self.distinct { bound - 1 } else { bound };
            let p = rem.min(cap);
            parts.push(p);
            rem -= p;
            bound = p;
        }
    }

    fn feasible(&self, rem: usize, v: usize) -> bool {
        if self.distinct {
            rem <= v * (v - 1) / 2
        } else {
            true
        }
    }

    fn advance(&self, parts: &[usize]) -> Option<Vec<usize>> {
        let mut suffix = 0;
        for i in (0..parts.len()).rev() {
            suffix += parts[i];
            let v = parts[i] - 1;
            if v == 0 {
                continue;
            }
            let rem = suffix - v;
            if self.feasible(rem, v) {
                let mut next = parts[..i].to_vec();
                next.push(v);
                self.fill(&mut next, rem, v);
                return Some(next);
            }
        }
        None
    }
}

impl Iterator for PartitionIter {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let cur = self.current.take()?;
        debug_assert_eq!(cur.iter().sum::<usize>(), self.n);
        self.current = self.advance(&cur);
        Some(Partition(cur))
    }
}

fn check_cap(n: usize, cap: usize) -> Result<()> {
    if n > cap {
        Err(Error::CapExceeded { n, cap })
    } else {
        Ok(())
    }
}

/// All partitions of `n`, `n <= 60`.
pub fn enumerate_partitions(n: usize) -> Result<PartitionIter> {
    check_cap(n, ENUM_CAP)?;
    Ok(PartitionIter::new(n, false))
}

/// All partitions of `n` into distinct parts, `n <= 60`.
pub fn enumerate_distinct(n: usize) -> Result<PartitionIter> {
    check_cap(n, ENUM_CAP)?;
    Ok(PartitionIter::new(n, true))
}

/// Walks every pair `(λ, μ)` with `|λ| + |μ| = n`, `μ` distinct.
fn for_each_pair(n: usize, mut f: impl FnMut(&Partition, &Partition)) {
    for j in 0..=n {
        for lambda in PartitionIter::new(j, false) {
            for mu in PartitionIter::new(n - j, true) {
                f(&lambda, &mu);
            }
        }
    }
}

fn finish(tally: BTreeMap<(u32, u32), u64>, weights: &Weights) -> CoefficientValue {
    let poly = MarkerPoly::from_terms(
        tally
            .into_iter()
            .map(|((i, j), c)| (i, j, BigInt::from(c))),
    );
    match weights {
        Weights::Symbolic => CoefficientValue::Marker(poly),
        Weights::Exact { x, y } => CoefficientValue::Rational(poly.evaluate(x, y)),
    }
}

/// `p_n(a,b,m;x,y)` by direct enumeration of pairs, `n <= 36`.
///
/// Counts `x^ℓ(λ) y^ℓ(μ)` over pairs with more parts `≡ a` than `≡ b`
/// in `λ ∪ μ`.
pub fn oracle_bias(spec: &BiasSpec, n: usize) -> Result<CoefficientValue> {
    check_cap(n, PAIR_CAP)?;
    let mut tally = BTreeMap::new();
    for_each_pair(n, |lambda, mu| {
        let sl = lambda.residue_stats(spec.m);
        let sm = mu.residue_stats(spec.m);
        let la = sl.count(spec.a) + sm.count(spec.a);
        let lb = sl.count(spec.b) + sm.count(spec.b);
        if la > lb {
            *tally.entry((lambda.len() as u32, mu.len() as u32)).or_insert(0u64) += 1;
        }
    });
    Ok(finish(tally, &spec.weights))
}

/// `Σ x^ℓ(λ) y^ℓ(μ)` over all pairs of total size `n`, `n <= 36`.
pub fn oracle_total(weights: &Weights, n: usize) -> Result<CoefficientValue> {
    check_cap(n, PAIR_CAP)?;
    let mut tally = BTreeMap::new();
    for_each_pair(n, |lambda, mu| {
        *tally.entry((lambda.len() as u32, mu.len() as u32)).or_insert(0u64) += 1;
    });
    Ok(finish(tally, weights))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;
    use std::collections::HashSet;

    #[test]
    fn known_counts() {
        let p: Vec<usize> = (0..=12).map(|n| enumerate_partitions(n).unwrap().count()).collect();
        assert_eq!(p, vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77]);
        let q: Vec<usize> = (0..=12).map(|n| enumerate_distinct(n).unwrap().count()).collect();
        assert_eq!(q, vec![1, 1, 1, 2, 2, 3, 4, 5, 6, 8, 10, 12, 15]);
        assert_eq!(enumerate_partitions(40).unwrap().count(), 37338);
    }

    #[test]
    fn partitions_are_valid_and_unique() {
        for n in 0..=18 {
            let mut seen = HashSet::new();
            for p in enumerate_partitions(n).unwrap() {
                assert_eq!(p.size(), n);
                assert!(p.parts().windows(2).all(|w| w[0] >= w[1]));
                assert!(seen.insert(p));
            }
            for p in enumerate_distinct(n).unwrap() {
                assert_eq!(p.size(), n);
                assert!(p.is_distinct());
            }
        }
    }

    #[test]
    fn caps() {
        assert!(matches!(
            enumerate_partitions(61),
            Err(Error::CapExceeded { n: 61, cap: 60 })
        ));
        let spec = BiasSpec::with_ints(1, 2, 3, 1, 1).unwrap();
        assert!(oracle_bias(&spec, 37).is_err());
    }

    #[test]
    fn residue_classes_one_to_m() {
        let s = Partition(vec![6, 4, 3, 1]).residue_stats(3);
        assert_eq!((s.count(1), s.count(2), s.count(3)), (2, 0, 2));
        assert_eq!(s.total(), 4);
    }

    #[test]
    fn small_bias_by_hand() {
        // n = 1: only λ = (1) or μ = (1); part 1 lies in class 1.
        let spec = BiasSpec::with_ints(1, 2, 3, 2, 5).unwrap();
        let v = oracle_bias(&spec, 1).unwrap().as_rational().unwrap();
        assert_eq!(v, BigRational::from_integer(7.into()));
        let spec = BiasSpec::with_ints(2, 1, 3, 2, 5).unwrap();
        let v = oracle_bias(&spec, 1).unwrap().as_rational().unwrap();
        assert_eq!(v, BigRational::from_integer(0.into()));
    }

    #[test]
    fn total_at_unit_weights_is_overpartitions() {
        let w = Weights::ints(1, 1).unwrap();
        let got: Vec<BigRational> = (0..=6)
            .map(|n| oracle_total(&w, n).unwrap().as_rational().unwrap())
            .collect();
        let expect: Vec<BigRational> = [1, 2, 4, 8, 14, 24, 40]
            .iter()
            .map(|&v| BigRational::from_integer(v.into()))
            .collect();
        assert_eq!(got, expect);
    }
}
