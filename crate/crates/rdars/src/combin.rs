//! Lexicographic combination ranking/unranking used by the exhaustive
//! mode-selection searches.

/// Binomial coefficient, saturating at `u128::MAX`.
pub(crate) fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        let num = (n - i) as u128;
        acc = match acc.checked_mul(num) {
            Some(v) => v / (i as u128 + 1),
            None => return u128::MAX,
        };
    }
    acc
}

/// Number of cardinality-`k` subsets of `{0..n}` if it does not exceed `cap`.
pub(crate) fn subset_count_capped(n: usize, k: usize, cap: u64) -> Option<u64> {
    let c = binomial(n as u64, k as u64);
    if c <= cap as u128 {
        Some(c as u64)
    } else {
        None
    }
}

/// The `rank`-th cardinality-`k` subset of `{0..n}` in lexicographic order.
pub(crate) fn unrank(n: usize, k: usize, rank: u64) -> Vec<usize> {
    let mut subset = Vec::with_capacity(k);
    let mut r = rank as u128;
    let mut next = 0usize;
    for picked in 0..k {
        let remaining = (k - picked - 1) as u64;
        for candidate in next..n {
            let below = binomial((n - candidate - 1) as u64, remaining);
            if r < below {
                subset.push(candidate);
                next = candidate + 1;
                break;
            }
            r -= below;
        }
    }
    debug_assert_eq!(subset.len(), k);
    subset
}

/// Lexicographic rank of a strictly increasing subset of `{0..n}`.
pub(crate) fn rank(n: usize, subset: &[usize]) -> u64 {
    let k = subset.len();
    let mut r: u128 = 0;
    let mut prev = 0usize;
    for (picked, &idx) in subset.iter().enumerate() {
        let remaining = (k - picked - 1) as u64;
        for candidate in prev..idx {
            r += binomial((n - candidate - 1) as u64, remaining);
        }
        prev = idx + 1;
    }
    r as u64
}
