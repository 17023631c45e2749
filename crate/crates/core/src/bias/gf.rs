//! Bias series from the restricted double sum.
//!
//! `Σ p_n q^n = P · Σ_{n1 > n >= 0} T_a(n1) T_b(n)` with
//! `P = (-yq;q)_∞ (xq^a, xq^b; q^m)_∞ / ((xq;q)_∞ (-yq^a, -yq^b; q^m)_∞)` and
//! `T_c(k) = Π_{j<k}(x + y q^{jm}) q^{ck} / (q^m;q^m)_k`.

use crate::par::Exec;
use crate::ring::Ring;
use crate::series::Series;

use super::weights::WeightSystem;

/// `(-yq;q)_∞ / (xq;q)_∞`, the generating function of `p_n(x, y)`.
pub fn total_product<W: WeightSystem>(w: &W, n: usize) -> Series<W::R> {
    let mut s = Series::one(n);
    for k in 1..=n {
        s.mul_binomial(&w.y_part(k), k);
        s.div_binomial(&w.x_part(k).neg_ref(), k);
    }
    s
}

/// Applies `(xq^c;q^m)_∞ / (-yq^c;q^m)_∞` in place.
fn apply_class_factor<W: WeightSystem>(w: &W, s: &mut Series<W::R>, c: usize, m: usize) {
    let n = s.order();
    let mut e = c;
    while e <= n {
        s.mul_binomial(&w.x_part(e).neg_ref(), e);
        s.div_binomial(&w.y_part(e), e);
        e += m;
    }
}

/// `s <- s · (x q^c + y q^{(k-1)m+c}) / (1 - q^{km})`, i.e. `T_c(k-1) -> T_c(k)`.
fn step<W: WeightSystem>(w: &W, s: &mut Series<W::R>, c: usize, m: usize, k: usize) {
    let e2 = (k - 1) * m + c;
    let n = s.order();
    if e2 <= n {
        s.mul_two_term(&w.x_part(c), c, &w.y_part(e2), e2);
    } else {
        s.mul_two_term(&w.x_part(c), c, &W::R::zero_value(), 0);
    }
    if k * m <= n {
        s.div_binomial(&w.q_pow(k * m).neg_ref(), k * m);
    }
}

/// `T_c(k)` for `k = 0..=n/c`; later terms vanish modulo `q^{n+1}`.
fn t_terms<W: WeightSystem>(w: &W, c: usize, m: usize, n: usize) -> Vec<Series<W::R>> {
    let mut out = Vec::with_capacity(n / c + 1);
    let mut cur = Series::one(n);
    out.push(cur.clone());
    for k in 1..=n / c {
        step(w, &mut cur, c, m, k);
        out.push(cur.clone());
    }
    out
}

/// `Σ_{n1 > n >= 0} T_a(n1) T_b(n)` by Horner's rule in the `T_b` steps.
pub fn double_sum<W: WeightSystem>(w: &W, a: usize, b: usize, m: usize, n: usize) -> Series<W::R> {
    let ta = t_terms(w, a, m, n);
    let kmax = ta.len() - 1;
    // suffix[j] = S_a(j) = Σ_{n1 > j} T_a(n1)
    let mut suffix = vec![Series::zero(n); kmax + 1];
    for j in (0..kmax).rev() {
        let mut s = suffix[j + 1].clone();
        s.add_assign(&ta[j + 1]);
        suffix[j] = s;
    }
    // term j needs b·j + a·(j+1) <= n
    let top = if a > n { 0 } else { (n - a) / (a + b) };
    let mut h = suffix[top].clone();
    for j in (0..top).rev() {
        step(w, &mut h, b, m, j + 1);
        h.add_assign(&suffix[j]);
    }
    h
}

/// Reusable state for several bias series sharing weights and order.
pub struct GfEngine<'w, W: WeightSystem> {
    weights: &'w W,
    total: Series<W::R>,
    exec: Exec,
}

impl<'w, W: WeightSystem> GfEngine<'w, W> {
    pub fn new(weights: &'w W, n: usize, exec: Exec) -> Self {
        GfEngine {
            weights,
            total: total_product(weights, n),
            exec,
        }
    }

    pub fn order(&self) -> usize {
        self.total.order()
    }

    pub fn total(&self) -> &Series<W::R> {
        &self.total
    }

    /// Coefficients of `p_n(a,b,m;x,y)` for `n <= N`.
    pub fn bias(&self, a: usize, b: usize, m: usize) -> Series<W::R> {
        let n = self.order();
        let (prefactor, sum) = self.exec.join(
            || {
                let mut p = self.total.clone();
                apply_class_factor(self.weights, &mut p, a, m);
                apply_class_factor(self.weights, &mut p, b, m);
                p
            },
            || double_sum(self.weights, a, b, m, n),
        );
        prefactor.mul_with(&sum, self.exec)
    }
}
