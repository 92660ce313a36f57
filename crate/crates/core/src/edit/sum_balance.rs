//! Sum-balance predicates over quaternary words.
//!
//! A window of length `L` is sum-balanced when its symbol sum lies strictly
//! between `L` and `2L`. A word is `k`-sum-balanced when every window of
//! length at least `k` is. The restricted variant only looks at windows of
//! length exactly `k` and asks for `5k/4 < sum < 7k/4`.

/// Returns whether every window of `x` of length at least `k` has a sum
/// strictly between its length and twice its length.
///
/// With prefix sums `A_j = Σ_{t≤j} (x_t − 1)` and `B_j = Σ_{t≤j} (x_t − 2)`
/// the condition reads `A_j > A_i` and `B_j < B_i` whenever `j − i >= k`,
/// so a running maximum of `A` and minimum of `B` suffice. `k = 0` is
/// treated as `k = 1`.
pub fn is_sum_balanced(x: &[u8], k: usize) -> bool {
    let k = k.max(1);
    let n = x.len();
    let mut a = vec![0i64; n + 1];
    let mut b = vec![0i64; n + 1];
    for (j, &s) in x.iter().enumerate() {
        a[j + 1] = a[j] + s as i64 - 1;
        b[j + 1] = b[j] + s as i64 - 2;
    }
    let (mut max_a, mut min_b) = (i64::MIN, i64::MAX);
    for j in k..=n {
        max_a = max_a.max(a[j - k]);
        min_b = min_b.min(b[j - k]);
        if a[j] <= max_a || b[j] >= min_b {
            return false;
        }
    }
    true
}

/// Returns whether the window sum `sum` of a length-`k` window lies strictly
/// inside `(5k/4, 7k/4)`.
pub fn window_sum_in_range(sum: u64, k: usize) -> bool {
    let k = k as u64;
    5 * k < 4 * sum && 4 * sum < 7 * k
}

/// Returns whether every window of `x` of length exactly `k` has a sum
/// strictly inside `(5k/4, 7k/4)`. Words shorter than `k` qualify.
pub fn is_restricted_sum_balanced(x: &[u8], k: usize) -> bool {
    first_violating_window(x, k).is_none()
}

/// 0-based start of the leftmost length-`k` window whose sum falls outside
/// `(5k/4, 7k/4)`.
pub fn first_violating_window(x: &[u8], k: usize) -> Option<usize> {
    let k = k.max(1);
    if x.len() < k {
        return None;
    }
    let mut sum: u64 = x[..k].iter().map(|&s| s as u64).sum();
    for start in 0..=x.len() - k {
        if start > 0 {
            sum = sum + x[start + k - 1] as u64 - x[start - 1] as u64;
        }
        if !window_sum_in_range(sum, k) {
            return Some(start);
        }
    }
    None
}
