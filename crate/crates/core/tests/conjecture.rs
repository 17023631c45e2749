use qbias::bias::{conjecture_scan, mod3_proposition};

#[test]
fn exceptional_thresholds() {
    for (a, b, m, t) in [(2, 3, 5, 45), (2, 4, 6, 5), (3, 4, 7, 8), (4, 5, 9, 9)] {
        let r = conjecture_scan(a, b, m, 500).unwrap();
        assert_eq!(r.threshold, t, "({a},{b},{m})");
        assert!(!r.inconclusive);
    }
}

#[test]
fn mod3_case_never_settles() {
    let r = conjecture_scan(1, 2, 3, 500).unwrap();
    assert!(r.inconclusive);
    assert_eq!(r.threshold, 501);
}

#[test]
fn mod3_sign_pattern() {
    assert!(mod3_proposition(600).passed());
}

/// Direct count of distinct partitions by excess of class `a` over `b`.
fn distinct_excess(a: usize, b: usize, m: usize, n: usize) -> (Vec<u128>, Vec<u128>) {
    let off = n + 1;
    let mut dp = vec![vec![0u128; 2 * off + 1]; n + 1];
    dp[0][off] = 1;
    for p in 1..=n {
        let c = (p - 1) % m + 1;
        let d: isize = if c == a { 1 } else if c == b { -1 } else { 0 };
        for k in (p..=n).rev() {
            for e in 0..=2 * off {
                let src = e as isize - d;
                if (0..=2 * off as isize).contains(&src) {
                    dp[k][e] += dp[k - p][src as usize];
                }
            }
        }
    }
    let pos = dp.iter().map(|row| row[off + 1..].iter().sum()).collect();
    let neg = dp.iter().map(|row| row[..off].iter().sum()).collect();
    (pos, neg)
}

#[test]
fn threshold_matches_direct_count() {
    let (pos, neg) = distinct_excess(2, 3, 5, 120);
    let last = (0..=120).filter(|&k| pos[k] < neg[k]).last();
    assert_eq!(last, Some(44));
    assert_eq!(conjecture_scan(2, 3, 5, 120).unwrap().threshold, 45);
}
