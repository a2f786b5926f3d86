//! Small exact-integer helpers shared across the crate.

/// Binomial coefficient with the combinatorial convention: 0 whenever
/// `n < 0`, `k < 0` or `n < k`. Exact, panics on overflow of i64.
pub fn binom(n: i64, k: i64) -> i64 {
    if k < 0 || n < 0 || n < k {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: i128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as i128 / (i as i128 + 1);
    }
    i64::try_from(acc).expect("binomial overflow")
}

/// Sorted ascending copy of the input (the `ord` reordering of a tuple).
pub fn ord(values: &[i64]) -> Vec<i64> {
    let mut v = values.to_vec();
    v.sort_unstable();
    v
}
