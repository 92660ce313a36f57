//! Run-length-limited encoder with one redundant bit: every run of the
//! output has length at most `⌈log2 n⌉ + 3`, where `n` is the output length.
//!
//! # Format
//!
//! Let `t = ⌈log2 n⌉` and `w = t + 3`. The encoder works on the difference
//! word `z` of the output `y`: `z_1 = y_1` and `z_i = y_{i-1} XOR y_i`. A run
//! of length `L` in `y` corresponds to `L − 1` consecutive zeros in `z`, so it
//! suffices to keep every zero run of `z` at most `w − 1` long.
//!
//! 1. Start with `z = msg ‖ 0`. The final `0` is the stop flag.
//! 2. While `z` has a zero run of length `w` starting inside its data part,
//!    take the leftmost such window start `p` (0-based), delete the `w`
//!    zeros and append the record `1 ‖ bin_t(p) ‖ 1 ‖ 1`, where `bin_t(p)`
//!    is `p` in `t` bits, most significant first.
//! 3. Output `y` with `y_1 = z_1` and `y_i = y_{i-1} XOR z_i`.
//!
//! Records start and end with `1` and contain at most `t` zeros, so every
//! forbidden window lies in the data part, which shrinks by `w` bits per
//! step. The decoder reads `z` from the end: a final `1` announces a record
//! whose pointer says where to put back `w` zeros; a final `0` is the stop
//! flag and the message is everything before it.

use crate::error::{CodecError, Result};
use crate::words::{ceil_log2, check_alphabet, int_repr, int_value, BinaryWord};

/// Maximum run length guaranteed for outputs of length `n`.
pub fn rll_run_limit(n: usize) -> usize {
    ceil_log2(n) + 3
}

fn record_len(n: usize) -> usize {
    ceil_log2(n) + 3
}

/// Encodes `msg` of length `n − 1` into a word of length `n` whose runs are
/// at most `⌈log2 n⌉ + 3` long.
pub fn enc_rll(msg: &[u8]) -> Result<BinaryWord> {
    check_alphabet(msg, 2)?;
    let n = msg.len() + 1;
    let t = ceil_log2(n);
    let w = record_len(n);
    let mut data: Vec<u8> = msg.to_vec();
    data.push(0);
    let mut records: Vec<u8> = Vec::new();
    let mut from = 0;
    while let Some(p) = first_zero_window(&data, w, from) {
        data.drain(p..p + w);
        records.push(1);
        records.extend(int_repr(p as u64, 2, t)?);
        records.extend([1, 1]);
        from = p.saturating_sub(w - 1);
    }
    data.extend(records);
    debug_assert_eq!(data.len(), n);
    Ok(integrate(&data))
}

/// Inverts [`enc_rll`]; reports malformed records as decode failures.
pub fn dec_rll(y: &[u8]) -> Result<BinaryWord> {
    check_alphabet(y, 2)?;
    let n = y.len();
    if n == 0 {
        return Err(CodecError::length("at least 1", 0));
    }
    let t = ceil_log2(n);
    let w = record_len(n);
    let mut z = differentiate(y);
    for _ in 0..=n / w {
        if z[n - 1] == 0 {
            z.truncate(n - 1);
            return Ok(z);
        }
        if n < w || z[n - w] != 1 || z[n - 2] != 1 {
            return Err(CodecError::decode("malformed run-length record"));
        }
        let p = int_value(&z[n - w + 1..n - w + 1 + t], 2) as usize;
        if p > n - w {
            return Err(CodecError::decode(format!("record pointer {p} out of range")));
        }
        z.truncate(n - w);
        z.splice(p..p, std::iter::repeat_n(0, w));
    }
    Err(CodecError::decode("too many run-length records"))
}

fn first_zero_window(z: &[u8], w: usize, from: usize) -> Option<usize> {
    let mut run = 0;
    for (i, &b) in z.iter().enumerate().skip(from) {
        if b == 0 {
            run += 1;
            if run == w {
                return Some(i + 1 - w);
            }
        } else {
            run = 0;
        }
    }
    None
}

fn integrate(z: &[u8]) -> BinaryWord {
    let mut acc = 0;
    z.iter()
        .map(|&b| {
            acc ^= b;
            acc
        })
        .collect()
}

fn differentiate(y: &[u8]) -> BinaryWord {
    let mut prev = 0;
    y.iter()
        .map(|&b| {
            let d = b ^ prev;
            prev = b;
            d
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::max_run;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn all_zero_message() {
        for n in [8, 12, 64, 256, 1000] {
            let y = enc_rll(&vec![0; n - 1]).unwrap();
            assert_eq!(y.len(), n);
            assert!(max_run(&y) <= rll_run_limit(n), "n = {n}");
            assert_eq!(dec_rll(&y).unwrap(), vec![0; n - 1]);
        }
    }

    #[test]
    fn all_one_message() {
        for n in [8, 12, 64, 256] {
            let y = enc_rll(&vec![1; n - 1]).unwrap();
            assert!(max_run(&y) <= rll_run_limit(n));
            assert_eq!(dec_rll(&y).unwrap(), vec![1; n - 1]);
        }
    }

    #[test]
    fn exhaustive_at_twelve() {
        for v in 0u32..1 << 11 {
            let msg: Vec<u8> = (0..11).map(|i| ((v >> i) & 1) as u8).collect();
            let y = enc_rll(&msg).unwrap();
            assert!(max_run(&y) <= rll_run_limit(12));
            assert_eq!(dec_rll(&y).unwrap(), msg);
        }
    }

    #[test]
    fn small_lengths_round_trip() {
        for n in 1..=10usize {
            for v in 0u32..1 << (n - 1) {
                let msg: Vec<u8> = (0..n - 1).map(|i| ((v >> i) & 1) as u8).collect();
                let y = enc_rll(&msg).unwrap();
                assert!(max_run(&y) <= rll_run_limit(n));
                assert_eq!(dec_rll(&y).unwrap(), msg);
            }
        }
    }

    #[test]
    fn random_with_long_runs() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..500 {
            let n = 256;
            let mut msg = Vec::with_capacity(n - 1);
            while msg.len() < n - 1 {
                let bit = rng.random_range(0..2);
                let len = rng.random_range(1..40).min(n - 1 - msg.len());
                msg.extend(std::iter::repeat_n(bit, len));
            }
            let y = enc_rll(&msg).unwrap();
            assert!(max_run(&y) <= rll_run_limit(n));
            assert_eq!(dec_rll(&y).unwrap(), msg);
        }
    }

    #[test]
    fn malformed_input_fails_cleanly() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..2000 {
            let y: Vec<u8> = (0..16).map(|_| rng.random_range(0..2)).collect();
            let _ = dec_rll(&y);
        }
    }
}
