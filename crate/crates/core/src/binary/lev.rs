//! Levenshtein codes `L_a(n) = {x : Syn(x) ≡ a (mod 2n)}`, their systematic
//! encoder and the single-edit decoder.
//!
//! The encoder places message bits on the information set `I = [n] \ S`
//! with `S = {1, 2, 4, ..., 2^{t-1}} ∪ {n}` and `t = ⌈log2 n⌉`. The
//! syndrome deficiency `d' = a − Syn(c') mod 2n` is written least
//! significant bit first into positions `1, 2, 4, ...`; when `d' >= n`
//! the bit at position `n` is set and `d' − n` is written instead.

use crate::error::{CodecError, Result};
use crate::words::{ceil_log2, check_alphabet, syndrome, BinaryWord};

/// Parameters of the systematic encoder for `L_a(n)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LevParams {
    n: usize,
    a: u64,
    t: usize,
    info: Vec<usize>,
}

impl LevParams {
    /// Builds parameters for length `n >= 2` and residue `a < 2n`.
    pub fn new(n: usize, a: u64) -> Result<Self> {
        if n < 2 {
            return Err(CodecError::params(format!("Levenshtein length n = {n} must be at least 2")));
        }
        if a >= 2 * n as u64 {
            return Err(CodecError::params(format!("residue a = {a} must be below 2n = {}", 2 * n)));
        }
        let t = ceil_log2(n);
        let redundant: Vec<usize> = (0..t).map(|j| 1usize << j).chain([n]).collect();
        let info: Vec<usize> = (1..=n).filter(|p| !redundant.contains(p)).collect();
        debug_assert_eq!(info.len(), n - t - 1);
        Ok(LevParams { n, a, t, info })
    }

    /// Codeword length.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Syndrome residue modulo `2n`.
    pub fn a(&self) -> u64 {
        self.a
    }

    /// Number of syndrome bits `t = ⌈log2 n⌉` written to powers of two.
    pub fn t(&self) -> usize {
        self.t
    }

    /// Message length `m = n − ⌈log2 n⌉ − 1`.
    pub fn message_len(&self) -> usize {
        self.info.len()
    }

    /// Redundancy `n − m` in bits.
    pub fn redundancy(&self) -> usize {
        self.n - self.message_len()
    }

    /// Information positions `I`, 1-based and increasing.
    pub fn info_positions(&self) -> &[usize] {
        &self.info
    }
}

/// Restricts `c` to the 1-based positions listed in `positions`.
pub fn project(c: &[u8], positions: &[usize]) -> BinaryWord {
    positions.iter().map(|&p| c[p - 1]).collect()
}

/// Returns whether `x` belongs to `L_a(n)`; rejects words whose length is not `n`.
pub fn member_l(x: &[u8], n: usize, a: u64) -> Result<bool> {
    if x.len() != n {
        return Err(CodecError::length(n, x.len()));
    }
    Ok(n > 0 && syndrome(x) % (2 * n as u64) == a % (2 * n as u64))
}

/// Encodes `msg` of length `n − ⌈log2 n⌉ − 1` into `L_a(n)`.
pub fn enc_l(msg: &[u8], params: &LevParams) -> Result<BinaryWord> {
    if msg.len() != params.message_len() {
        return Err(CodecError::length(params.message_len(), msg.len()));
    }
    check_alphabet(msg, 2)?;
    let n = params.n;
    let modulus = 2 * n as u64;
    let mut c = vec![0u8; n];
    for (&pos, &bit) in params.info.iter().zip(msg) {
        c[pos - 1] = bit;
    }
    let mut deficiency = (params.a + modulus - syndrome(&c) % modulus) % modulus;
    if deficiency >= n as u64 {
        deficiency -= n as u64;
        c[n - 1] = 1;
    }
    for j in 0..params.t {
        c[(1 << j) - 1] = ((deficiency >> j) & 1) as u8;
    }
    debug_assert_eq!(syndrome(&c) % modulus, params.a);
    Ok(c)
}

/// Recovers the codeword of `L_a(n)` from `y`, which differs from it by at
/// most one deletion, insertion or substitution.
pub fn dec_l_codeword(y: &[u8], n: usize, a: u64) -> Result<BinaryWord> {
    if n < 2 {
        return Err(CodecError::params(format!("Levenshtein length n = {n} must be at least 2")));
    }
    check_alphabet(y, 2)?;
    let modulus = 2 * n as u64;
    let a = a % modulus;
    let syn = syndrome(y) % modulus;
    let w = y.iter().filter(|&&b| b == 1).count();
    let c = if y.len() == n {
        repair_substitution(y, n, (syn + modulus - a) % modulus)?
    } else if y.len() + 1 == n {
        repair_deletion(y, n, w, (a + modulus - syn) % modulus)?
    } else if y.len() == n + 1 {
        repair_insertion(y, n, w, (syn + modulus - a) % modulus)?
    } else {
        return Err(CodecError::length(format!("{} to {}", n - 1, n + 1), y.len()));
    };
    if syndrome(&c) % modulus != a {
        return Err(CodecError::decode("repaired word misses the syndrome"));
    }
    Ok(c)
}

fn repair_substitution(y: &[u8], n: usize, excess: u64) -> Result<BinaryWord> {
    let mut c = y.to_vec();
    let e = excess as usize;
    if e == 0 {
        return Ok(c);
    }
    let (pos, expected) = match e.cmp(&n) {
        std::cmp::Ordering::Less => (e, Some(1)),
        std::cmp::Ordering::Equal => (n, None),
        std::cmp::Ordering::Greater => (2 * n - e, Some(0)),
    };
    if let Some(bit) = expected {
        if c[pos - 1] != bit {
            return Err(CodecError::decode(format!("no single substitution explains syndrome excess {e}")));
        }
    }
    c[pos - 1] ^= 1;
    Ok(c)
}

fn repair_deletion(y: &[u8], n: usize, w: usize, deficiency: u64) -> Result<BinaryWord> {
    let delta = deficiency as usize;
    let (index, bit) = if delta <= w {
        // A 0 was deleted with exactly `delta` ones to its right.
        (index_after_count(y, 1, w - delta), 0)
    } else if delta <= n {
        // A 1 was deleted with exactly `delta − w − 1` zeros to its left.
        (index_after_count(y, 0, delta - w - 1), 1)
    } else {
        return Err(CodecError::decode(format!("deletion deficiency {delta} exceeds n = {n}")));
    };
    let mut c = Vec::with_capacity(n);
    c.extend_from_slice(&y[..index]);
    c.push(bit);
    c.extend_from_slice(&y[index..]);
    Ok(c)
}

fn repair_insertion(y: &[u8], n: usize, w: usize, excess: u64) -> Result<BinaryWord> {
    let delta = excess as usize;
    let found = if delta < w || (delta == w && y[0] == 0) {
        // The inserted bit is a 0 with `w − delta` ones to its left.
        find_with_count_before(y, 0, 1, w - delta)
    } else if delta <= n + 1 {
        // The inserted bit is a 1 with `delta − w` zeros to its left.
        find_with_count_before(y, 1, 0, delta - w)
    } else {
        None
    };
    let index = found.ok_or_else(|| {
        CodecError::decode(format!("no single insertion explains syndrome excess {delta}"))
    })?;
    let mut c = y.to_vec();
    c.remove(index);
    Ok(c)
}

/// Index just after the `count`-th occurrence of `symbol` (0 when `count` is 0).
fn index_after_count(y: &[u8], symbol: u8, count: usize) -> usize {
    if count == 0 {
        return 0;
    }
    let mut seen = 0;
    for (i, &b) in y.iter().enumerate() {
        if b == symbol {
            seen += 1;
            if seen == count {
                return i + 1;
            }
        }
    }
    y.len()
}

/// First index holding `target` with exactly `count` copies of `other` before it.
fn find_with_count_before(y: &[u8], target: u8, other: u8, count: usize) -> Option<usize> {
    let mut seen = 0;
    for (i, &b) in y.iter().enumerate() {
        if b == target && seen == count {
            return Some(i);
        }
        if b == other {
            seen += 1;
            if seen > count {
                return None;
            }
        }
    }
    None
}

/// Decodes `y` to the message of `params`: single-edit repair followed by
/// projection onto the information set.
pub fn dec_l_message(y: &[u8], params: &LevParams) -> Result<BinaryWord> {
    let c = dec_l_codeword(y, params.n, params.a)?;
    Ok(project(&c, &params.info))
}
