//! Single-indel DNA code `C_a(n) = {Ψ^{-1}(c) : c ∈ L^burst_a(2n)}`.
//!
//! One indel in a DNA word is a burst of two adjacent indels in its Ψ image.
//! The encoder places the message in `L_{−a}(2n)`, applies `Φ^{-1}` so that
//! the run syndrome of `0c'` becomes `a (mod 4n)`, and maps back to DNA.

use crate::binary::{dec_burst, enc_l, member_lburst, project, LevParams};
use crate::error::{CodecError, Result};
use crate::words::{check_alphabet, phi_forward, phi_inverse, psi_forward, psi_inverse, BinaryWord, DnaWord};

/// Parameters of the single-indel DNA codec.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndelParams {
    n: usize,
    a: u64,
    lev: LevParams,
}

impl IndelParams {
    /// Builds the codec for DNA length `n >= 1` and run-syndrome residue `a < 4n`.
    pub fn new(n: usize, a: u64) -> Result<Self> {
        if n == 0 {
            return Err(CodecError::params("DNA length n must be positive"));
        }
        let modulus = 4 * n as u64;
        if a >= modulus {
            return Err(CodecError::params(format!("residue a = {a} must be below 4n = {modulus}")));
        }
        let lev = LevParams::new(2 * n, (modulus - a) % modulus)?;
        Ok(IndelParams { n, a, lev })
    }

    /// DNA codeword length.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Run-syndrome residue modulo `4n`.
    pub fn a(&self) -> u64 {
        self.a
    }

    /// Message length `2n − ⌈log2 n⌉ − 2`.
    pub fn message_len(&self) -> usize {
        self.lev.message_len()
    }

    /// Redundancy `2n − m` in bits.
    pub fn redundancy(&self) -> usize {
        2 * self.n - self.message_len()
    }
}

/// Returns whether the DNA word `s` lies in `C_a(n)`.
pub fn member_c(s: &[u8], n: usize, a: u64) -> bool {
    s.len() == n && check_alphabet(s, 4).is_ok() && member_lburst(&psi_forward(s), 2 * n, a)
}

/// Encodes a binary message into `C_a(n)`.
pub fn enc_indel(msg: &[u8], params: &IndelParams) -> Result<DnaWord> {
    let c = enc_l(msg, &params.lev)?;
    psi_inverse(&phi_inverse(&c)?)
}

/// Decodes a DNA word that suffered at most one indel back to the message.
pub fn dec_indel(s: &[u8], params: &IndelParams) -> Result<BinaryWord> {
    check_alphabet(s, 4)?;
    let n = params.n;
    if s.len() + 1 < n || s.len() > n + 1 {
        return Err(CodecError::length(format!("{} to {}", n.saturating_sub(1), n + 1), s.len()));
    }
    let c_prime = dec_burst(&psi_forward(s), 2 * n, params.a)?;
    let c = phi_forward(&c_prime)?;
    Ok(project(&c, params.lev.info_positions()))
}
