//! The 2-burst code `L^burst_a(n) = {x : Rsyn(0x) ≡ a (mod 2n)}` and its
//! decoder for one burst of two adjacent deletions or insertions.
//!
//! Writing `δ_j = x_{j-1} XOR x_j` with `x_0 = 0`, the run syndrome equals
//! `Rsyn(0x) = Σ_j δ_j·(n + 1 − j)`: every run boundary contributes the
//! number of bits after it. The decoder evaluates this sum for every
//! candidate repair in constant time from prefix and suffix sums over the
//! received word, keeps the candidates that hit the residue and checks that
//! they all describe the same word.

use crate::error::{CodecError, Result};
use crate::words::{check_alphabet, run_syndrome_prefixed, BinaryWord};

/// Returns whether `x` has length `n` and `Rsyn(0x) ≡ a (mod 2n)`.
pub fn member_lburst(x: &[u8], n: usize, a: u64) -> bool {
    n > 0 && x.len() == n && run_syndrome_prefixed(x, 2 * n as u64) == a % (2 * n as u64)
}

/// Recovers the codeword of `L^burst_a(n)` from `y`, which is the codeword
/// itself or the codeword after a burst of two deletions or two insertions.
pub fn dec_burst(y: &[u8], n: usize, a: u64) -> Result<BinaryWord> {
    check_alphabet(y, 2)?;
    if n < 2 {
        return Err(CodecError::params(format!("burst code length n = {n} must be at least 2")));
    }
    let modulus = 2 * n as u64;
    let a = a % modulus;
    if y.len() == n {
        return if member_lburst(y, n, a) {
            Ok(y.to_vec())
        } else {
            Err(CodecError::decode("word of full length is not a codeword"))
        };
    }
    let delta = boundaries(y);
    let m = y.len();
    let bit = |j: usize| if j == 0 { 0 } else { y[j - 1] as u64 };
    if m + 2 == n {
        // prefix[i] = Σ_{j≤i} δ_j (n+1−j); suffix[i] = Σ_{j≥i} δ_j (n−1−j).
        let mut prefix = vec![0u64; m + 1];
        for j in 1..=m {
            prefix[j] = prefix[j - 1] + delta[j] * (n + 1 - j) as u64;
        }
        let mut suffix = vec![0u64; m + 3];
        for j in (1..=m).rev() {
            suffix[j] = suffix[j + 1] + delta[j] * (n - 1 - j) as u64;
        }
        let mut hits: Vec<(usize, [u8; 2])> = Vec::new();
        for i in 0..=m {
            for pair in [[0u8, 0], [0, 1], [1, 0], [1, 1]] {
                let (u, v) = (pair[0] as u64, pair[1] as u64);
                let mut total = prefix[i] + (u ^ bit(i)) * (n - i) as u64 + (u ^ v) * (n - i - 1) as u64;
                if i < m {
                    total += (v ^ bit(i + 1)) * (n - i - 2) as u64 + suffix[i + 2];
                }
                if total % modulus == a {
                    hits.push((i, pair));
                }
            }
        }
        let view = |&(i, pair): &(usize, [u8; 2]), j: usize| -> u8 {
            if j < i {
                y[j]
            } else if j < i + 2 {
                pair[j - i]
            } else {
                y[j - 2]
            }
        };
        let first = unique_candidate(&hits, |h1, h2| {
            (h1.0..(h2.0 + 2).min(n)).all(|j| view(h1, j) == view(h2, j))
        })?;
        Ok((0..n).map(|j| view(first, j)).collect())
    } else if m == n + 2 {
        // prefix[i] = Σ_{j≤i} δ_j (n+1−j); suffix[i] = Σ_{j≥i} δ_j (n+3−j).
        let mut prefix = vec![0u64; m + 1];
        for j in 1..=m {
            prefix[j] = prefix[j - 1] + delta[j] * (n as u64 + 1).saturating_sub(j as u64);
        }
        let mut suffix = vec![0u64; m + 5];
        for j in (1..=m).rev() {
            suffix[j] = suffix[j + 1] + delta[j] * (n + 3 - j) as u64;
        }
        let mut hits: Vec<usize> = Vec::new();
        for i in 0..=n {
            let mut total = prefix[i] + suffix[i + 4];
            if i < n {
                total += (bit(i) ^ bit(i + 3)) * (n - i) as u64;
            }
            if total % modulus == a {
                hits.push(i);
            }
        }
        let view = |&i: &usize, j: usize| -> u8 { if j < i { y[j] } else { y[j + 2] } };
        let first = unique_candidate(&hits, |h1, h2| (*h1..*h2).all(|j| view(h1, j) == view(h2, j)))?;
        Ok((0..n).map(|j| view(first, j)).collect())
    } else {
        Err(CodecError::length(format!("{}, {} or {}", n - 2, n, n + 2), y.len()))
    }
}

/// `δ` with a leading unused slot: `δ[j] = y_{j-1} XOR y_j` for `j >= 1`, `y_0 = 0`.
fn boundaries(y: &[u8]) -> Vec<u64> {
    let mut out = vec![0u64; y.len() + 1];
    let mut prev = 0;
    for (j, &b) in y.iter().enumerate() {
        out[j + 1] = (b ^ prev) as u64;
        prev = b;
    }
    out
}

/// Returns the first candidate after checking that consecutive candidates
/// (sorted by position) describe the same word.
fn unique_candidate<T>(hits: &[T], same: impl Fn(&T, &T) -> bool) -> Result<&T> {
    let first = hits
        .first()
        .ok_or_else(|| CodecError::decode("no burst repair reaches the residue"))?;
    if hits.windows(2).all(|w| same(&w[0], &w[1])) {
        Ok(first)
    } else {
        Err(CodecError::decode("burst repairs disagree"))
    }
}
