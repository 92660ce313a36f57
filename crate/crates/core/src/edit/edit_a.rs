//! Encoder A: the upper and lower sequences of the strand are two
//! independent Levenshtein codewords. One edit of the strand is at most one
//! edit of each rail.

use crate::binary::{dec_l_message, enc_l, LevParams};
use crate::error::{CodecError, Result};
use crate::words::{check_alphabet, from_upper_lower, upper_lower, BinaryWord, DnaWord};

/// Rails `L_{a1}(n)` (upper) and `L_{a2}(n)` (lower).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EditAParams {
    upper: LevParams,
    lower: LevParams,
}

impl EditAParams {
    /// Builds the rails for strand length `n` and residues `a1, a2 < 2n`.
    pub fn new(n: usize, a1: u64, a2: u64) -> Result<Self> {
        Ok(EditAParams {
            upper: LevParams::new(n, a1)?,
            lower: LevParams::new(n, a2)?,
        })
    }

    /// Strand length.
    pub fn n(&self) -> usize {
        self.upper.n()
    }

    /// Message length `2(n − ⌈log n⌉ − 1)` in bits.
    pub fn message_len(&self) -> usize {
        2 * self.upper.message_len()
    }

    /// Redundancy `2⌈log n⌉ + 2` in bits.
    pub fn redundancy(&self) -> usize {
        2 * self.n() - self.message_len()
    }
}

/// Encodes a binary message; the first half feeds the upper rail.
pub fn enc_edit_a(msg: &[u8], params: &EditAParams) -> Result<DnaWord> {
    if msg.len() != params.message_len() {
        return Err(CodecError::length(params.message_len(), msg.len()));
    }
    let (m1, m2) = msg.split_at(params.upper.message_len());
    from_upper_lower(&enc_l(m1, &params.upper)?, &enc_l(m2, &params.lower)?)
}

/// Decodes a strand of length `n − 1`, `n` or `n + 1` with at most one edit.
pub fn dec_edit_a(s: &[u8], params: &EditAParams) -> Result<BinaryWord> {
    check_alphabet(s, 4)?;
    let (u, l) = upper_lower(s);
    let mut msg = dec_l_message(&u, &params.upper)?;
    msg.extend(dec_l_message(&l, &params.lower)?);
    Ok(msg)
}
