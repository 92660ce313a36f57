//! Knuth balancing and the GC-balanced single-edit code.
//!
//! The upper sequence is a Knuth-balanced word `z`, which makes the strand
//! GC-balanced. The lower sequence is a Levenshtein codeword carrying the
//! remaining payload, `Syn(z) mod 2n` in `t + 1` bits and the balancing
//! index in `t` bits. The index `k ∈ [1, n]` is stored as `k mod 2^t`,
//! and a stored `0` is read back as `2^t`.

use crate::binary::{dec_l_codeword, dec_l_message, enc_l, LevParams};
use crate::error::{CodecError, Result};
use crate::words::{ceil_log2, check_alphabet, from_upper_lower, int_repr, int_value, syndrome, upper_lower, weight, BinaryWord, DnaWord};

/// Returns whether a binary word has exactly as many ones as zeros.
pub fn is_balanced(x: &[u8]) -> bool {
    x.len().is_multiple_of(2) && 2 * weight(x) == x.len() as u64
}

/// Returns whether exactly half the symbols of a strand are `C` or `G`.
pub fn is_gc_balanced(s: &[u8]) -> bool {
    s.len().is_multiple_of(2) && 2 * s.iter().filter(|&&v| v >= 2).count() == s.len()
}

/// Flips the shortest nonempty prefix of `x` that balances it; returns the
/// balanced word and the prefix length.
pub fn knuth_balance(x: &[u8]) -> Result<(BinaryWord, usize)> {
    check_alphabet(x, 2)?;
    if x.is_empty() || !x.len().is_multiple_of(2) {
        return Err(CodecError::length("a positive even number", x.len()));
    }
    let target = (x.len() / 2) as i64;
    let mut w = weight(x) as i64;
    for (k, &bit) in x.iter().enumerate() {
        w += 1 - 2 * bit as i64;
        if w == target {
            let mut z = x.to_vec();
            z[..=k].iter_mut().for_each(|b| *b ^= 1);
            return Ok((z, k + 1));
        }
    }
    unreachable!("flipping all bits of an even-length word passes through balance")
}

/// Undoes [`knuth_balance`].
pub fn knuth_unbalance(z: &[u8], k: usize) -> Result<BinaryWord> {
    check_alphabet(z, 2)?;
    if k > z.len() {
        return Err(CodecError::params(format!("balancing index {k} exceeds length {}", z.len())));
    }
    let mut x = z.to_vec();
    x[..k].iter_mut().for_each(|b| *b ^= 1);
    Ok(x)
}

/// Parameters of the GC-balanced code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GcParams {
    n: usize,
    t: usize,
    lower: LevParams,
}

impl GcParams {
    /// Builds the code for even `n` with `n − 3⌈log n⌉ − 2 >= 0` and lower
    /// residue `a < 2n`.
    pub fn new(n: usize, a: u64) -> Result<Self> {
        if n < 2 || !n.is_multiple_of(2) {
            return Err(CodecError::params(format!("GC length n = {n} must be even and at least 2")));
        }
        let t = ceil_log2(n);
        if n < 3 * t + 2 {
            return Err(CodecError::params(format!("GC length n = {n} is below 3⌈log n⌉ + 2 = {}", 3 * t + 2)));
        }
        Ok(GcParams { n, t, lower: LevParams::new(n, a)? })
    }

    /// Strand length.
    pub fn n(&self) -> usize {
        self.n
    }

    /// `t = ⌈log n⌉`.
    pub fn t(&self) -> usize {
        self.t
    }

    /// Lower residue.
    pub fn a(&self) -> u64 {
        self.lower.a()
    }

    /// Message length `m = 2n − 3t − 2`.
    pub fn message_len(&self) -> usize {
        2 * self.n - 3 * self.t - 2
    }

    /// Redundancy `3t + 2` in bits.
    pub fn redundancy(&self) -> usize {
        2 * self.n - self.message_len()
    }
}

/// Encodes `x ‖ y` with `|x| = n`.
pub fn enc_gc(msg: &[u8], params: &GcParams) -> Result<DnaWord> {
    if msg.len() != params.message_len() {
        return Err(CodecError::length(params.message_len(), msg.len()));
    }
    let (n, t) = (params.n, params.t);
    let (x, y) = msg.split_at(n);
    let (z, k) = knuth_balance(x)?;
    let mut lower_msg = y.to_vec();
    lower_msg.extend(int_repr(syndrome(&z) % (2 * n as u64), 2, t + 1)?);
    lower_msg.extend(int_repr(k as u64 % (1 << t), 2, t)?);
    from_upper_lower(&z, &enc_l(&lower_msg, &params.lower)?)
}

/// Decodes a strand of length `n − 1`, `n` or `n + 1` with at most one edit.
pub fn dec_gc(s: &[u8], params: &GcParams) -> Result<BinaryWord> {
    check_alphabet(s, 4)?;
    let (n, t) = (params.n, params.t);
    let (u, l) = upper_lower(s);
    let lower_msg = dec_l_message(&l, &params.lower)?;
    let (y, tail) = lower_msg.split_at(n - 3 * t - 2);
    let d = int_value(&tail[..=t], 2);
    if d >= 2 * n as u64 {
        return Err(CodecError::decode(format!("stored syndrome {d} is not below 2n")));
    }
    let k = match int_value(&tail[t + 1..], 2) as usize {
        0 => 1 << t,
        k => k,
    };
    if k > n {
        return Err(CodecError::decode(format!("stored balancing index {k} exceeds n")));
    }
    let z = dec_l_codeword(&u, n, d)?;
    let mut msg = knuth_unbalance(&z, k)?;
    msg.extend_from_slice(y);
    Ok(msg)
}
