//! Encoder B: a restricted-sum-balanced payload `y` followed by a marker and
//! the four syndromes of `C^B`, written in base 4.
//!
//! ```text
//! y (n) ‖ M = r r ‖ R1 = Syn(y) mod 4n+1 ‖ R2 = Syn(α(y)) mod P ‖ R3 = wt(α(y)) mod 2 ‖ R4 = Σy mod 7
//! ```
//!
//! `r` is the smallest symbol different from the last symbol of `y`, so the
//! marker tells whether an indel hit the payload.

use crate::error::{CodecError, Result};
use crate::words::{ceil_log4, check_alphabet, int_repr, int_value, signature, syndrome, weight, QuaternaryWord};

use super::cb::{cb_decode_indel, decode_substitution, CbParams};
use super::rsb::RsbCodec;

/// Default balance window `⌈72 log2 n⌉`.
pub fn default_window(n: usize) -> usize {
    (72.0 * (n as f64).log2()).ceil().max(1.0) as usize
}

/// Parameters of Encoder B. Construction is cheap; the RSB tables are built
/// by [`EditBCodec::new`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EncBParams {
    n: usize,
    k: usize,
}

impl EncBParams {
    /// Payload length `n` with the default window.
    pub fn new(n: usize) -> Result<Self> {
        Self::with_k(n, default_window(n))
    }

    /// Payload length `n` with an explicit restricted window `k`.
    pub fn with_k(n: usize, k: usize) -> Result<Self> {
        if n < 2 || k == 0 {
            return Err(CodecError::params(format!("Encoder B needs n >= 2 and k >= 1, got n = {n}, k = {k}")));
        }
        Ok(EncBParams { n, k })
    }

    /// Payload length `|y|`.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Restricted window `k`.
    pub fn k(&self) -> usize {
        self.k
    }

    /// Balance window of the payload, `k′ = 4k`.
    pub fn k_prime(&self) -> usize {
        4 * self.k
    }

    /// Signature modulus `P = 5k′`.
    pub fn p(&self) -> usize {
        5 * self.k_prime()
    }

    /// Digits of `R1`.
    pub fn r1_len(&self) -> usize {
        ceil_log4(4 * self.n + 1)
    }

    /// Digits of `R2`.
    pub fn r2_len(&self) -> usize {
        ceil_log4(self.p())
    }

    /// Codeword length `N = n + |R1| + |R2| + 5`.
    pub fn codeword_len(&self) -> usize {
        self.n + self.r1_len() + self.r2_len() + 5
    }

    /// Message length `n − 1` in quaternary symbols.
    pub fn message_len(&self) -> usize {
        self.n - 1
    }

    /// Redundancy in bits, `2(N − (n − 1))`.
    pub fn redundancy_bits(&self) -> usize {
        2 * (self.codeword_len() - self.message_len())
    }
}

/// Encoder and decoder for a fixed [`EncBParams`].
#[derive(Debug, Clone)]
pub struct EditBCodec {
    params: EncBParams,
    rsb: RsbCodec,
}

impl EditBCodec {
    /// Builds the codec; fails when the RSB record does not fit in `k` symbols.
    pub fn new(params: EncBParams) -> Result<Self> {
        let rsb = RsbCodec::new(params.n, params.k)?;
        Ok(EditBCodec { params, rsb })
    }

    /// Parameters in use.
    pub fn params(&self) -> &EncBParams {
        &self.params
    }

    /// Encodes a message of `n − 1` quaternary symbols.
    pub fn encode(&self, msg: &[u8]) -> Result<QuaternaryWord> {
        let p = &self.params;
        let y = self.rsb.encode(msg)?;
        let alpha = signature(&y)?;
        let r = if y[p.n - 1] == 0 { 1 } else { 0 };
        let mut z = y.clone();
        z.extend([r, r]);
        z.extend(int_repr(syndrome(&y) % (4 * p.n as u64 + 1), 4, p.r1_len())?);
        z.extend(int_repr(syndrome(&alpha) % p.p() as u64, 4, p.r2_len())?);
        z.push((weight(&alpha) % 2) as u8);
        z.extend(int_repr(weight(&y) % 7, 4, 2)?);
        Ok(z)
    }

    /// Decodes a word of length `N − 1`, `N` or `N + 1` carrying at most
    /// one edit.
    pub fn decode(&self, z: &[u8]) -> Result<QuaternaryWord> {
        let y = self.recover_payload(z)?;
        self.rsb.decode(&y)
    }

    /// Recovers the payload `y` without undoing the RSB map.
    pub fn recover_payload(&self, z: &[u8]) -> Result<QuaternaryWord> {
        check_alphabet(z, 4)?;
        let p = &self.params;
        let (n, big_n) = (p.n, p.codeword_len());
        if z.len() == big_n {
            let y = &z[..n];
            if z[n] != z[n + 1] {
                return Ok(y.to_vec());
            }
            let d = int_value(&z[big_n - 2..], 4);
            if d == weight(y) % 7 {
                return Ok(y.to_vec());
            }
            let a = int_value(&z[n + 2..n + 2 + p.r1_len()], 4);
            if a == syndrome(y) % (4 * n as u64 + 1) {
                return Ok(y.to_vec());
            }
            if a > 4 * n as u64 || d >= 7 {
                return Err(CodecError::decode("stored syndromes are out of range"));
            }
            decode_substitution(y, n, a, d)
        } else if z.len() + 1 == big_n {
            if z[n - 1] != z[n] {
                return Ok(z[..n].to_vec());
            }
            self.indel(&z[..n - 1], &z[n + 1..])
        } else if z.len() == big_n + 1 {
            if z[n] == z[n + 1] {
                return Ok(z[..n].to_vec());
            }
            self.indel(&z[..n + 1], &z[n + 3..])
        } else {
            Err(CodecError::length(format!("{}, {big_n} or {}", big_n - 1, big_n + 1), z.len()))
        }
    }

    fn indel(&self, y: &[u8], tail: &[u8]) -> Result<QuaternaryWord> {
        let p = &self.params;
        let (r1, rest) = tail.split_at(p.r1_len());
        let (r2, rest) = rest.split_at(p.r2_len());
        let cb = CbParams::with_any_window(
            p.n,
            p.k_prime(),
            int_value(r1, 4),
            int_value(r2, 4),
            rest[0] & 1,
            int_value(&rest[1..3], 4),
        )?;
        cb_decode_indel(y, &cb)
    }
}
