use std::collections::HashSet;

/// Smallest `k | (b - a)` such that `2^h k` avoids the classes of `a` and `b`
/// modulo `m` for every `h >= 0`, if one exists.
pub fn theorem2_witness(a: usize, b: usize, m: usize) -> Option<usize> {
    assert!(1 <= a && a < b && b <= m, "need 1 <= a < b <= m");
    let d = b - a;
    (1..=d).filter(|k| d % k == 0).find(|&k| avoids(k, a % m, b % m, m))
}

/// Walks `2^h k mod m` until a state repeats.
fn avoids(k: usize, ra: usize, rb: usize, m: usize) -> bool {
    let mut seen = HashSet::new();
    let mut s = k % m;
    while seen.insert(s) {
        if s == ra || s == rb {
            return false;
        }
        s = 2 * s % m;
    }
    true
}
