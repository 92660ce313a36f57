//! Encoder into `k`-restricted-sum-balanced words with one redundant symbol.
//!
//! # Format
//!
//! The encoder starts from `w = msg ‖ 1`; the final `1` marks the end of
//! the data. While `w` has a length-`k` window whose sum is outside
//! `(5k/4, 7k/4)`, the leftmost such window at 0-based offset `p` is cut out
//! and the record
//!
//! ```text
//! pad ‖ rank ‖ pointer ‖ 2
//! ```
//!
//! of exactly `k` symbols is appended. `rank` is the lexicographic index of
//! the removed window among all violating windows, written in base 4 with
//! `⌈log4 V_k⌉` digits, and `pointer` is `p` with `⌈log4(n − k + 1)⌉`
//! digits, both most significant first. Digit `j` of `rank ‖ pointer` is
//! stored as `(digit + 1 + j mod 2) mod 4`. The pad brings the record sum as
//! close to `3k/2` as possible and is ignored when decoding.
//!
//! The decoder reads the last symbol: `1` ends decoding, `2` announces a
//! record that restores one window. The number of rounds is capped at `n`
//! in both directions; an encoder that reaches the cap reports an error.
//! When `k > n` there is no window and the output is `msg ‖ 1`.

use num_bigint::BigUint;

use super::rank::SumWindowRanker;
use super::sum_balance::first_violating_window;
use crate::error::{CodecError, Result};
use crate::words::{ceil_log4, check_alphabet, int_repr, int_value, QuaternaryWord};

const END: u8 = 1;
const RECORD: u8 = 2;

#[derive(Debug, Clone)]
struct Layout {
    ranker: SumWindowRanker,
    rank_len: usize,
    ptr_len: usize,
    pad_len: usize,
}

/// Restricted-sum-balance codec for output length `n` and window length `k`.
#[derive(Debug, Clone)]
pub struct RsbCodec {
    n: usize,
    k: usize,
    layout: Option<Layout>,
}

/// Number of base-4 digits needed for the values `0..count`.
fn digits_for(count: &BigUint) -> usize {
    if *count <= BigUint::from(1u8) {
        return 0;
    }
    let bits = (count - 1u8).bits() as usize;
    bits.div_ceil(2)
}

impl RsbCodec {
    /// Builds the codec, rejecting parameters where a record would not be
    /// strictly shorter than the window it replaces.
    pub fn new(n: usize, k: usize) -> Result<Self> {
        if n == 0 || k == 0 {
            return Err(CodecError::params("RSB length n and window k must be positive"));
        }
        if k > n {
            return Ok(RsbCodec { n, k, layout: None });
        }
        let ranker = SumWindowRanker::new(k)?;
        let rank_len = digits_for(ranker.violating_count());
        let ptr_len = ceil_log4(n - k + 1);
        if 1 + rank_len + ptr_len >= k {
            return Err(CodecError::params(format!(
                "RSB record needs 1 + {rank_len} rank digits + {ptr_len} pointer digits, not below k = {k}"
            )));
        }
        let pad_len = k - 1 - rank_len - ptr_len;
        Ok(RsbCodec {
            n,
            k,
            layout: Some(Layout {
                ranker,
                rank_len,
                ptr_len,
                pad_len,
            }),
        })
    }

    /// Output length.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Window length.
    pub fn k(&self) -> usize {
        self.k
    }

    /// Message length `n − 1`.
    pub fn message_len(&self) -> usize {
        self.n - 1
    }

    /// True when `k > n`, so that no window exists.
    pub fn is_vacuous(&self) -> bool {
        self.layout.is_none()
    }

    /// Encodes `msg` of length `n − 1`.
    pub fn encode(&self, msg: &[u8]) -> Result<QuaternaryWord> {
        if msg.len() != self.n - 1 {
            return Err(CodecError::length(self.n - 1, msg.len()));
        }
        check_alphabet(msg, 4)?;
        let mut w = msg.to_vec();
        w.push(END);
        let Some(layout) = &self.layout else {
            return Ok(w);
        };
        for _ in 0..self.n {
            let Some(p) = first_violating_window(&w, self.k) else {
                return Ok(w);
            };
            let window: Vec<u8> = w.drain(p..p + self.k).collect();
            let record = self.record(layout, &window, p)?;
            w.extend(record);
        }
        match first_violating_window(&w, self.k) {
            None => Ok(w),
            Some(_) => Err(CodecError::EncodeFailure(format!(
                "no balanced word after {} replacement rounds",
                self.n
            ))),
        }
    }

    fn record(&self, layout: &Layout, window: &[u8], p: usize) -> Result<Vec<u8>> {
        let rank = layout.ranker.rank(window)?;
        let mut digits = rank.to_radix_be(4);
        if rank == BigUint::ZERO {
            digits.clear();
        }
        let mut payload = vec![0u8; layout.rank_len - digits.len()];
        payload.extend(digits);
        payload.extend(int_repr(p as u64, 4, layout.ptr_len)?);
        for (j, d) in payload.iter_mut().enumerate() {
            *d = (*d + 1 + (j % 2) as u8) % 4;
        }
        let used: usize = payload.iter().map(|&d| d as usize).sum::<usize>() + RECORD as usize;
        let need = (3 * self.k / 2).saturating_sub(used).min(3 * layout.pad_len);
        let mut record: Vec<u8> = (0..layout.pad_len)
            .map(|i| (need / layout.pad_len + usize::from(i < need % layout.pad_len)) as u8)
            .collect();
        record.extend(payload);
        record.push(RECORD);
        Ok(record)
    }

    /// Inverts [`RsbCodec::encode`].
    pub fn decode(&self, y: &[u8]) -> Result<QuaternaryWord> {
        if y.len() != self.n {
            return Err(CodecError::length(self.n, y.len()));
        }
        check_alphabet(y, 4)?;
        let mut w = y.to_vec();
        for _ in 0..=self.n {
            match w.last().copied() {
                Some(END) => {
                    w.pop();
                    return Ok(w);
                }
                Some(RECORD) => {
                    let layout = self
                        .layout
                        .as_ref()
                        .ok_or_else(|| CodecError::decode("record marker in a word without windows"))?;
                    let start = w.len() - self.k;
                    let mut payload: Vec<u8> = w[start + layout.pad_len..w.len() - 1].to_vec();
                    for (j, d) in payload.iter_mut().enumerate() {
                        *d = (*d + 3 - (j % 2) as u8) % 4;
                    }
                    let (rank_digits, ptr_digits) = payload.split_at(layout.rank_len);
                    let rank = BigUint::from_radix_be(rank_digits, 4).unwrap_or_default();
                    let p = int_value(ptr_digits, 4) as usize;
                    if p > self.n - self.k {
                        return Err(CodecError::decode(format!("record pointer {p} out of range")));
                    }
                    let window = layout.ranker.unrank(&rank)?;
                    w.truncate(start);
                    w.splice(p..p, window);
                }
                _ => return Err(CodecError::decode("word does not end in a data or record marker")),
            }
        }
        Err(CodecError::decode("too many records"))
    }
}
