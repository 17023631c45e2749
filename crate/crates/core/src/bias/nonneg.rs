//! Non-negativity of the auxiliary series used in the inequality proofs.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;
use rand::Rng;
use serde::Serialize;

use super::gf::total_product;
use super::weights::{ScaledWeights, WeightSystem};
use crate::error::{Error, Result};
use crate::ring::Ring;
use crate::series::Series;
use crate::truncated::format_rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum NonnegKind {
    FSeries,
    Maino,
    ChernCorollary,
    Andrews,
}

impl NonnegKind {
    pub const ALL: [NonnegKind; 4] = [
        NonnegKind::FSeries,
        NonnegKind::Maino,
        NonnegKind::ChernCorollary,
        NonnegKind::Andrews,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            NonnegKind::FSeries => "f_series",
            NonnegKind::Maino => "maino",
            NonnegKind::ChernCorollary => "chern_corollary",
            NonnegKind::Andrews => "andrews",
        }
    }
}

impl fmt::Display for NonnegKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for NonnegKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        NonnegKind::ALL
            .into_iter()
            .find(|k| k.tag() == s)
            .ok_or_else(|| Error::Parse(format!("unknown non-negativity kind '{s}'")))
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum NonnegParams {
    /// `(1 - q^{b-a}) (-yq;q)_∞/(xq;q)_∞ · (xq^a, xq^b; q^m)_∞/(-yq^a, -yq^b; q^m)_∞`
    FSeries {
        a: usize,
        b: usize,
        m: usize,
        x: BigRational,
        y: BigRational,
    },
    /// `Σ_k (-yq^s/x;q^m)_k x^k q^{a(k+1)} / (q^s;q^m)_{k+1}` minus the same
    /// with `ab` in place of `a`.
    Maino {
        a: usize,
        b: usize,
        m: usize,
        s: usize,
        x: BigRational,
        y: BigRational,
    },
    /// `Σ_k q^k (1 - q^k) / (q^s;q^m)_k`
    ChernCorollary { m: usize, s: usize },
    /// `(xq^{a_0})^h Π (1+yq^{a_j})/(1-xq^{a_j}) - (xq^{b_0})^h Π (1+yq^{b_j})/(1-xq^{b_j})`
    Andrews {
        a_seq: Vec<usize>,
        b_seq: Vec<usize>,
        h: usize,
        x: BigRational,
        y: BigRational,
    },
}

impl NonnegParams {
    pub fn kind(&self) -> NonnegKind {
        match self {
            NonnegParams::FSeries { .. } => NonnegKind::FSeries,
            NonnegParams::Maino { .. } => NonnegKind::Maino,
            NonnegParams::ChernCorollary { .. } => NonnegKind::ChernCorollary,
            NonnegParams::Andrews { .. } => NonnegKind::Andrews,
        }
    }

    /// Checks the hypotheses of the corresponding theorem.
    pub fn check(&self) -> Result<()> {
        let fail = |msg: String| Err(Error::Hypothesis(msg));
        let weights = |x: &BigRational, y: &BigRational| -> Result<()> {
            if *x < BigRational::one_value() {
                return fail(format!("x >= 1 required, got x = {}", format_rational(x)));
            }
            if y.is_negative() {
                return fail(format!("y >= 0 required, got y = {}", format_rational(y)));
            }
            Ok(())
        };
        match self {
            NonnegParams::FSeries { a, b, m, x, y } => {
                if !(1 <= *a && a < b && b <= m) {
                    return fail(format!("1 <= a < b <= m required, got ({a},{b},{m})"));
                }
                if (*a, *b) == (1, 2) {
                    return fail("(a,b) != (1,2) required".into());
                }
                weights(x, y)
            }
            NonnegParams::Maino { a, b, m, s, x, y } => {
                if *a == 0 || *b == 0 {
                    return fail(format!("a, b >= 1 required, got a = {a}, b = {b}"));
                }
                if *m == 0 || *s == 0 {
                    return fail(format!("m, s >= 1 required, got m = {m}, s = {s}"));
                }
                weights(x, y)
            }
            NonnegParams::ChernCorollary { m, s } => {
                if *m == 0 || *s == 0 {
                    return fail(format!("m, s >= 1 required, got m = {m}, s = {s}"));
                }
                Ok(())
            }
            NonnegParams::Andrews {
                a_seq,
                b_seq,
                x,
                y,
                ..
            } => {
                if a_seq.is_empty() || a_seq.len() != b_seq.len() {
                    return fail("sequences must be non-empty and of equal length".into());
                }
                for (name, seq) in [("a", a_seq), ("b", b_seq)] {
                    if seq[0] == 0 || seq.windows(2).any(|w| w[0] >= w[1]) {
                        return fail(format!("({name}_j) must be increasing positive integers"));
                    }
                }
                let a0 = a_seq[0];
                if b_seq[0] % a0 != 0 {
                    return fail("b_0 ≡ 0 (mod a_0) required".into());
                }
                if b_seq[0] <= a0 {
                    return fail("b_0 > a_0 required".into());
                }
                for (j, (&aj, &bj)) in a_seq.iter().zip(b_seq).enumerate().skip(1) {
                    if bj < aj {
                        return fail(format!("b_j >= a_j required, fails at j = {j}"));
                    }
                    if (bj - aj) % a0 != 0 {
                        return fail(format!("b_j - a_j ≡ 0 (mod a_0) required, fails at j = {j}"));
                    }
                }
                weights(x, y)
            }
        }
    }

    fn series(&self, n: usize) -> Series<BigInt> {
        match self {
            NonnegParams::FSeries { a, b, m, x, y } => {
                let w = ScaledWeights::new(x, y, n);
                let mut s = total_product(&w, n);
                for c in [*a, *b] {
                    let mut e = c;
                    while e <= n {
                        s.mul_binomial(&-w.x_part(e), e);
                        s.div_binomial(&w.y_part(e), e);
                        e += m;
                    }
                }
                if b - a <= n {
                    s.mul_binomial(&-w.q_pow(b - a), b - a);
                }
                s
            }
            NonnegParams::Maino { a, b, m, s, x, y } => {
                let w = ScaledWeights::new(x, y, n);
                let mut out = maino_sum(&w, *a, *m, *s, n);
                out.sub_assign(&maino_sum(&w, a * b, *m, *s, n));
                out
            }
            NonnegParams::ChernCorollary { m, s } => {
                let mut out = Series::zero(n);
                let mut recip = Series::<BigInt>::one(n);
                for k in 1..=n {
                    let e = s + (k - 1) * m;
                    if e <= n {
                        recip.div_binomial(&-BigInt::one_value(), e);
                    }
                    for i in k..=n {
                        out.add_to_coeff(i, recip.coeff(i - k));
                        if i >= 2 * k {
                            let neg = -recip.coeff(i - 2 * k);
                            out.add_to_coeff(i, &neg);
                        }
                    }
                }
                out
            }
            NonnegParams::Andrews {
                a_seq,
                b_seq,
                h,
                x,
                y,
            } => {
                let w = ScaledWeights::new(x, y, n);
                let mut out = andrews_term(&w, a_seq, *h, n);
                out.sub_assign(&andrews_term(&w, b_seq, *h, n));
                out
            }
        }
    }
}

fn maino_sum(w: &ScaledWeights, a: usize, m: usize, s: usize, n: usize) -> Series<BigInt> {
    let mut out = Series::zero(n);
    if a > n {
        return out;
    }
    let mut term = Series::monomial(w.q_pow(a), a, n);
    if s <= n {
        term.div_binomial(&-w.q_pow(s), s);
    }
    out.add_assign(&term);
    for k in 1..=n / a {
        let e2 = s + (k - 1) * m + a;
        let y = if e2 <= n { w.y_part(e2) } else { BigInt::zero_value() };
        term.mul_two_term(&w.x_part(a), a, &y, e2.min(n));
        let d = s + k * m;
        if d <= n {
            term.div_binomial(&-w.q_pow(d), d);
        }
        out.add_assign(&term);
    }
    out
}

fn andrews_term(w: &ScaledWeights, seq: &[usize], h: usize, n: usize) -> Series<BigInt> {
    let lead = seq[0] * h;
    if lead > n {
        return Series::zero(n);
    }
    let mut s = Series::monomial(w.monomial(h as u32, 0, lead), lead, n);
    for &e in seq.iter().filter(|&&e| e <= n) {
        s.mul_binomial(&w.y_part(e), e);
        s.div_binomial(&-w.x_part(e), e);
    }
    s
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NonnegOutcome {
    pub kind: NonnegKind,
    pub params: String,
    #[serde(rename = "N")]
    pub order: usize,
    pub passed: bool,
    pub first_negative: Option<usize>,
}

impl fmt::Display for NonnegParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let r = format_rational;
        match self {
            NonnegParams::FSeries { a, b, m, x, y } => {
                write!(f, "a={a} b={b} m={m} x={} y={}", r(x), r(y))
            }
            NonnegParams::Maino { a, b, m, s, x, y } => {
                write!(f, "a={a} b={b} m={m} s={s} x={} y={}", r(x), r(y))
            }
            NonnegParams::ChernCorollary { m, s } => write!(f, "m={m} s={s}"),
            NonnegParams::Andrews {
                a_seq,
                b_seq,
                h,
                x,
                y,
            } => write!(f, "a={a_seq:?} b={b_seq:?} h={h} x={} y={}", r(x), r(y)),
        }
    }
}

/// Expands the series to order `N` and reports the first negative coefficient.
pub fn nonneg_suite(params: &NonnegParams, n: usize) -> Result<NonnegOutcome> {
    params.check()?;
    let s = params.series(n);
    let first_negative = s.coeffs().iter().position(|c| c.is_negative());
    Ok(NonnegOutcome {
        kind: params.kind(),
        params: params.to_string(),
        order: n,
        passed: first_negative.is_none(),
        first_negative,
    })
}

fn ratio<R: Rng>(rng: &mut R, base: i64) -> BigRational {
    let p: i64 = rng.gen_range(0..=4);
    let q: i64 = rng.gen_range(1..=3);
    BigRational::from_integer(base.into()) + BigRational::new(p.into(), q.into())
}

/// A random parameter set satisfying the hypotheses of `kind`.
pub fn random_params<R: Rng>(kind: NonnegKind, rng: &mut R) -> NonnegParams {
    let x = ratio(rng, 1);
    let y = ratio(rng, 0);
    match kind {
        NonnegKind::FSeries => loop {
            let m = rng.gen_range(3..=9);
            let a = rng.gen_range(1..m);
            let b = rng.gen_range(a + 1..=m);
            if (a, b) != (1, 2) {
                return NonnegParams::FSeries { a, b, m, x, y };
            }
        },
        NonnegKind::Maino => NonnegParams::Maino {
            a: rng.gen_range(1..=3),
            b: rng.gen_range(1..=3),
            m: rng.gen_range(1..=5),
            s: rng.gen_range(1..=5),
            x,
            y,
        },
        NonnegKind::ChernCorollary => NonnegParams::ChernCorollary {
            m: rng.gen_range(1..=6),
            s: rng.gen_range(1..=6),
        },
        NonnegKind::Andrews => {
            let a0 = rng.gen_range(1..=3);
            let len = rng.gen_range(1..=5);
            let mut a_seq = vec![a0];
            let mut b_seq = vec![a0 * rng.gen_range(2..=3)];
            for _ in 1..len {
                let aj = a_seq.last().unwrap() + rng.gen_range(1..=3);
                let mut bj = aj + a0 * rng.gen_range(0..=2);
                while bj <= *b_seq.last().unwrap() {
                    bj += a0;
                }
                a_seq.push(aj);
                b_seq.push(bj);
            }
            NonnegParams::Andrews {
                a_seq,
                b_seq,
                h: rng.gen_range(0..=2),
                x,
                y,
            }
        }
    }
}
