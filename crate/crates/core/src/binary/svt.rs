//! Shifted VT codes `SVT_{c,d,P}(n) = {x : Syn(x) ≡ c (mod P), Σ x_i ≡ d (mod 2)}`.
//!
//! A codeword corrects one deletion, insertion or substitution when the
//! error position is known to lie in a window of consecutive positions. The
//! systematic encoder writes the syndrome deficiency `c − Syn(c') mod P`
//! least significant bit first into positions `1, 2, ..., 2^{t-1}` with
//! `t = ⌈log2 P⌉`, then sets position `P` as the parity bit.

use std::ops::RangeInclusive;

use crate::error::{CodecError, Result};
use crate::words::{ceil_log2, check_alphabet, syndrome, BinaryWord};

use super::lev::project;

/// Parameters of a shifted VT code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SvtParams {
    n: usize,
    p: usize,
    c: u64,
    d: u8,
}

impl SvtParams {
    /// Builds `SVT_{c,d,P}(n)` with `P >= 1`, `c < P` and `d < 2`.
    ///
    /// The encoder additionally needs `P <= n`; decoding and membership do not.
    pub fn new(n: usize, p: usize, c: u64, d: u8) -> Result<Self> {
        if p == 0 {
            return Err(CodecError::params("SVT modulus P must be positive"));
        }
        if c >= p as u64 {
            return Err(CodecError::params(format!("SVT residue c = {c} must be below P = {p}")));
        }
        if d > 1 {
            return Err(CodecError::params(format!("SVT parity d = {d} must be 0 or 1")));
        }
        Ok(SvtParams { n, p, c, d })
    }

    /// Codeword length.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Window modulus `P`.
    pub fn p(&self) -> usize {
        self.p
    }

    /// Syndrome residue.
    pub fn c(&self) -> u64 {
        self.c
    }

    /// Parity residue.
    pub fn d(&self) -> u8 {
        self.d
    }

    /// Number of syndrome bits `⌈log2 P⌉`.
    pub fn t(&self) -> usize {
        ceil_log2(self.p)
    }

    /// Message length `n − ⌈log2 P⌉ − 1`, or an error when `P > n`.
    pub fn message_len(&self) -> Result<usize> {
        if self.p > self.n || self.t() + 1 > self.n {
            return Err(CodecError::params(format!(
                "SVT encoder needs P = {} and t + 1 = {} within n = {}",
                self.p,
                self.t() + 1,
                self.n
            )));
        }
        Ok(self.n - self.t() - 1)
    }

    /// Information positions, 1-based and increasing.
    pub fn info_positions(&self) -> Vec<usize> {
        let t = self.t();
        (1..=self.n)
            .filter(|&q| q != self.p && !(q.is_power_of_two() && q < (1 << t)))
            .collect()
    }
}

/// Returns whether `x` belongs to the code; words of the wrong length do not.
pub fn member_svt(x: &[u8], params: &SvtParams) -> bool {
    x.len() == params.n
        && syndrome(x) % params.p as u64 == params.c
        && parity(x) == params.d
}

fn parity(x: &[u8]) -> u8 {
    x.iter().fold(0, |acc, &b| acc ^ (b & 1))
}

/// Encodes `msg` of length `n − ⌈log2 P⌉ − 1` into `SVT_{c,d,P}(n)`.
pub fn enc_svt(msg: &[u8], params: &SvtParams) -> Result<BinaryWord> {
    let m = params.message_len()?;
    if msg.len() != m {
        return Err(CodecError::length(m, msg.len()));
    }
    check_alphabet(msg, 2)?;
    let p = params.p as u64;
    let mut x = vec![0u8; params.n];
    for (&pos, &bit) in params.info_positions().iter().zip(msg) {
        x[pos - 1] = bit;
    }
    let deficiency = (params.c + p - syndrome(&x) % p) % p;
    for j in 0..params.t() {
        x[(1 << j) - 1] = ((deficiency >> j) & 1) as u8;
    }
    x[params.p - 1] = parity(&x) ^ params.d;
    debug_assert!(member_svt(&x, params));
    Ok(x)
}

/// Decodes `y` back to the message of an SVT codeword.
pub fn dec_svt_message(y: &[u8], window: RangeInclusive<usize>, params: &SvtParams) -> Result<BinaryWord> {
    let c = dec_svt(y, window, params)?;
    Ok(project(&c, &params.info_positions()))
}

/// Recovers the SVT codeword from `y`, which differs from it by one
/// deletion, insertion or substitution located inside `window`, or by none.
///
/// Window positions are 1-based. For a deletion they index the codeword
/// (the position the missing bit occupied); for an insertion they index `y`
/// (the position of the extra bit); for a substitution they index either.
/// The window is clipped to the valid range. A window of at most `P`
/// positions makes the answer unique; otherwise an ambiguous result is
/// reported as a decode failure.
pub fn dec_svt(y: &[u8], window: RangeInclusive<usize>, params: &SvtParams) -> Result<BinaryWord> {
    check_alphabet(y, 2)?;
    let n = params.n;
    let p = params.p as u64;
    let target = params.c;
    let syn = syndrome(y) % p;
    let w = y.iter().filter(|&&b| b == 1).count() as u64;
    let (lo, hi) = (*window.start(), *window.end());
    let mut found: Vec<BinaryWord> = Vec::new();
    if y.len() == n {
        if member_svt(y, params) {
            return Ok(y.to_vec());
        }
        if parity(y) == params.d {
            return Err(CodecError::decode("parity holds but syndrome does not"));
        }
        for q in lo.max(1)..=hi.min(n) {
            let shifted = if y[q - 1] == 1 {
                (syn + p - q as u64 % p) % p
            } else {
                (syn + q as u64) % p
            };
            if shifted == target {
                let mut c = y.to_vec();
                c[q - 1] ^= 1;
                push_unique(&mut found, c);
            }
        }
    } else if y.len() + 1 == n {
        let bit = ((params.d as u64 + w) % 2) as u8;
        // ones_from[q] = number of ones in y at 1-based positions >= q.
        let mut ones_from = vec![0u64; n + 1];
        for q in (1..n).rev() {
            ones_from[q] = ones_from[q + 1] + y[q - 1] as u64;
        }
        for q in lo.max(1)..=hi.min(n) {
            let s = (syn + bit as u64 * q as u64 + ones_from[q]) % p;
            if s == target {
                let mut c = y.to_vec();
                c.insert(q - 1, bit);
                push_unique(&mut found, c);
            }
        }
    } else if y.len() == n + 1 {
        let bit = ((w + params.d as u64) % 2) as u8;
        // ones_after[q] = number of ones in y at 1-based positions > q.
        let mut ones_after = vec![0u64; n + 2];
        for q in (1..=n).rev() {
            ones_after[q] = ones_after[q + 1] + y[q] as u64;
        }
        for q in lo.max(1)..=hi.min(n + 1) {
            if y[q - 1] != bit {
                continue;
            }
            let removed = (bit as u64 * q as u64 + ones_after[q]) % p;
            if (syn + p - removed) % p == target {
                let mut c = y.to_vec();
                c.remove(q - 1);
                push_unique(&mut found, c);
            }
        }
    } else {
        return Err(CodecError::length(format!("{} to {}", n.saturating_sub(1), n + 1), y.len()));
    }
    match found.len() {
        1 => Ok(found.pop().unwrap()),
        0 => Err(CodecError::decode("no SVT codeword within the window")),
        k => Err(CodecError::decode(format!("{k} SVT codewords fit the window"))),
    }
}

fn push_unique(found: &mut Vec<BinaryWord>, c: BinaryWord) {
    if !found.contains(&c) {
        found.push(c);
    }
}
