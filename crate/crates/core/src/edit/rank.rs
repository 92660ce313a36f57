//! Enumerative ranking of the length-`k` quaternary windows whose sum falls
//! outside `(5k/4, 7k/4)`.
//!
//! Words are ordered lexicographically. The table `cum[r][s]` counts words
//! of length `r` with sum at most `s`, so the number of violating
//! completions of any prefix is read off in constant time per symbol.

use num_bigint::BigUint;
use num_traits::{One, Zero};

use super::sum_balance::window_sum_in_range;
use crate::error::{CodecError, Result};

/// Rank and unrank for violating windows of one fixed length `k`.
#[derive(Debug, Clone)]
pub struct SumWindowRanker {
    k: usize,
    low_max: usize,
    high_min: usize,
    cum: Vec<Vec<BigUint>>,
    total: BigUint,
}

impl SumWindowRanker {
    /// Builds the counting table for windows of length `k >= 1`.
    pub fn new(k: usize) -> Result<Self> {
        if k == 0 {
            return Err(CodecError::params("window length k must be positive"));
        }
        // low_max: largest sum with 4s <= 5k; high_min: smallest sum with 4s >= 7k.
        let low_max = 5 * k / 4;
        let high_min = (7 * k).div_ceil(4);
        let mut cum: Vec<Vec<BigUint>> = Vec::with_capacity(k + 1);
        let mut counts = vec![BigUint::one()];
        for r in 0..=k {
            if r > 0 {
                let mut next = vec![BigUint::zero(); 3 * r + 1];
                for (s, c) in counts.iter().enumerate() {
                    for v in 0..4 {
                        next[s + v] += c;
                    }
                }
                counts = next;
            }
            let mut running = BigUint::zero();
            cum.push(
                counts
                    .iter()
                    .map(|c| {
                        running += c;
                        running.clone()
                    })
                    .collect(),
            );
        }
        let mut ranker = SumWindowRanker {
            k,
            low_max,
            high_min,
            cum,
            total: BigUint::zero(),
        };
        ranker.total = ranker.completions(k, 0);
        Ok(ranker)
    }

    /// Window length.
    pub fn k(&self) -> usize {
        self.k
    }

    /// Number of violating windows `V_k`.
    pub fn violating_count(&self) -> &BigUint {
        &self.total
    }

    /// Whether a window of length `k` with this sum violates the range.
    pub fn is_violating(&self, w: &[u8]) -> bool {
        !window_sum_in_range(w.iter().map(|&s| s as u64).sum(), self.k)
    }

    /// Words of length `r` with sum at most `s`.
    fn at_most(&self, r: usize, s: usize) -> BigUint {
        let row = &self.cum[r];
        row[s.min(row.len() - 1)].clone()
    }

    /// Completions of length `r` that make a prefix with sum `s0` violating.
    fn completions(&self, r: usize, s0: usize) -> BigUint {
        let mut out = BigUint::zero();
        if s0 <= self.low_max {
            out += self.at_most(r, self.low_max - s0);
        }
        let all = self.at_most(r, 3 * r);
        if s0 >= self.high_min {
            out += all;
        } else {
            out += all - self.at_most(r, self.high_min - s0 - 1);
        }
        out
    }

    /// Lexicographic index of a violating window.
    pub fn rank(&self, w: &[u8]) -> Result<BigUint> {
        if w.len() != self.k {
            return Err(CodecError::length(self.k, w.len()));
        }
        crate::words::check_alphabet(w, 4)?;
        if !self.is_violating(w) {
            return Err(CodecError::params("window sum lies inside the balanced range"));
        }
        let mut index = BigUint::zero();
        let mut s0 = 0;
        for (i, &sym) in w.iter().enumerate() {
            for v in 0..sym as usize {
                index += self.completions(self.k - i - 1, s0 + v);
            }
            s0 += sym as usize;
        }
        Ok(index)
    }

    /// Violating window with the given lexicographic index.
    pub fn unrank(&self, index: &BigUint) -> Result<Vec<u8>> {
        if index >= &self.total {
            return Err(CodecError::decode(format!("window rank {index} is not below {}", self.total)));
        }
        let mut rest = index.clone();
        let mut w = Vec::with_capacity(self.k);
        let mut s0 = 0;
        for i in 0..self.k {
            let mut chosen = None;
            for v in 0..4usize {
                let block = self.completions(self.k - i - 1, s0 + v);
                if rest < block {
                    chosen = Some(v);
                    break;
                }
                rest -= block;
            }
            let v = chosen.expect("index below total always selects a symbol");
            w.push(v as u8);
            s0 += v;
        }
        Ok(w)
    }
}
