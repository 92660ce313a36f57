//! Nucleotide-edit code `C^nt`. A substitution always flips the upper bit
//! of the symbol; indels remove or add a whole symbol.
//!
//! The upper sequence is `enc_L(enc_rll(x1))`, so its runs are at most
//! `r = 2⌈log n⌉ + 4` long; the lower sequence is an SVT codeword with
//! `P = r + 1`. The upper rail locates the error exactly (substitution) or
//! up to one run (indel), which is narrow enough for the SVT decoder.

use crate::binary::{dec_l_codeword, dec_rll, dec_svt, enc_l, enc_rll, member_l, member_svt, project, LevParams, SvtParams};
use crate::error::{CodecError, Result};
use crate::indel::burst::error_run;
use crate::words::{ceil_log2, check_alphabet, from_upper_lower, max_run, upper_lower, BinaryWord, DnaWord};

/// Parameters of `C^nt(n; a, b, c)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NtParams {
    n: usize,
    r: usize,
    lev: LevParams,
    svt: SvtParams,
}

impl NtParams {
    /// Builds the code for length `n`, Levenshtein residue `a < 2n`, SVT
    /// residue `b < P` and parity `c < 2`. Requires `P <= n`.
    pub fn new(n: usize, a: u64, b: u64, c: u8) -> Result<Self> {
        if n < 2 {
            return Err(CodecError::params(format!("strand length n = {n} must be at least 2")));
        }
        let r = 2 * ceil_log2(n) + 4;
        let lev = LevParams::new(n, a)?;
        let svt = SvtParams::new(n, r + 1, b, c)?;
        svt.message_len()?;
        if lev.message_len() < 2 {
            return Err(CodecError::params(format!("strand length n = {n} leaves no upper message bits")));
        }
        Ok(NtParams { n, r, lev, svt })
    }

    /// Strand length.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Upper run bound `r`.
    pub fn r(&self) -> usize {
        self.r
    }

    /// SVT window `P = r + 1`.
    pub fn p(&self) -> usize {
        self.r + 1
    }

    /// `t = ⌈log P⌉ + 1`.
    pub fn t(&self) -> usize {
        self.svt.t() + 1
    }

    /// Upper message bits `n − ⌈log n⌉ − 2`.
    pub fn upper_len(&self) -> usize {
        self.lev.message_len() - 1
    }

    /// Lower message bits `n − t`.
    pub fn lower_len(&self) -> usize {
        self.n - self.t()
    }

    /// Message length `m = 2n − ⌈log n⌉ − t − 2`.
    pub fn message_len(&self) -> usize {
        self.upper_len() + self.lower_len()
    }

    /// Redundancy `2n − m` in bits.
    pub fn redundancy(&self) -> usize {
        2 * self.n - self.message_len()
    }
}

/// Returns whether `s` lies in `C^nt`.
pub fn member_cnt(s: &[u8], params: &NtParams) -> bool {
    if s.len() != params.n || check_alphabet(s, 4).is_err() {
        return false;
    }
    let (u, l) = upper_lower(s);
    member_l(&u, params.n, params.lev.a()).unwrap_or(false) && max_run(&u) <= params.r && member_svt(&l, &params.svt)
}

/// Encodes `msg` of length `m`; the first `n − ⌈log n⌉ − 2` bits feed the
/// upper sequence.
pub fn enc_nt_edit(msg: &[u8], params: &NtParams) -> Result<DnaWord> {
    if msg.len() != params.message_len() {
        return Err(CodecError::length(params.message_len(), msg.len()));
    }
    let (x1, x2) = msg.split_at(params.upper_len());
    let upper = enc_l(&enc_rll(x1)?, &params.lev)?;
    let lower = crate::binary::enc_svt(x2, &params.svt)?;
    from_upper_lower(&upper, &lower)
}

/// Decodes a strand carrying at most one nucleotide edit.
pub fn dec_nt_edit(s: &[u8], params: &NtParams) -> Result<BinaryWord> {
    check_alphabet(s, 4)?;
    let n = params.n;
    let (u_rx, l_rx) = upper_lower(s);
    let upper = dec_l_codeword(&u_rx, n, params.lev.a())?;
    let lower = if s.len() == n {
        match upper.iter().zip(&u_rx).position(|(x, y)| x != y) {
            Some(p) => dec_svt(&l_rx, p + 1..=p + 1, &params.svt)?,
            None if member_svt(&l_rx, &params.svt) => l_rx,
            None => return Err(CodecError::decode("lower sequence changed without the upper one")),
        }
    } else {
        let (start, end) = error_run(&upper, &u_rx);
        dec_svt(&l_rx, start..=end, &params.svt)?
    };
    let mut msg = dec_rll(&project(&upper, params.lev.info_positions()))?;
    msg.extend(project(&lower, &params.svt.info_positions()));
    Ok(msg)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::psi_forward;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn nucleotide_edits(s: &[u8]) -> Vec<Vec<u8>> {
        let mut out = Vec::new();
        for i in 0..s.len() {
            let mut y = s.to_vec();
            y.remove(i);
            out.push(y);
            for sym in 0..4u8 {
                if (sym >> 1) != (s[i] >> 1) {
                    let mut y = s.to_vec();
                    y[i] = sym;
                    out.push(y);
                }
            }
        }
        for i in 0..=s.len() {
            for sym in 0..4u8 {
                let mut y = s.to_vec();
                y.insert(i, sym);
                out.push(y);
            }
        }
        out
    }

    #[test]
    fn redundancy_formula() {
        for n in 32..3000 {
            let p = NtParams::new(n, 0, 0, 0).unwrap();
            let big_p = 2 * ceil_log2(n) + 5;
            assert_eq!(p.redundancy(), ceil_log2(n) + ceil_log2(big_p) + 3);
        }
    }

    #[test]
    fn allowed_substitutions_flip_the_upper_bit() {
        for from in 0..4u8 {
            for to in 0..4u8 {
                if (to >> 1) != (from >> 1) {
                    assert_ne!(psi_forward(&[from])[0], psi_forward(&[to])[0]);
                }
            }
        }
    }

    #[test]
    fn corrects_every_nucleotide_edit() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for (n, trials) in [(32, 20), (64, 10), (100, 4)] {
            let p = NtParams::new(n, rng.random_range(0..2 * n as u64), 3, 1).unwrap();
            for _ in 0..trials {
                let msg: Vec<u8> = (0..p.message_len()).map(|_| rng.random_range(0..2)).collect();
                let s = enc_nt_edit(&msg, &p).unwrap();
                assert!(member_cnt(&s, &p));
                assert_eq!(dec_nt_edit(&s, &p).unwrap(), msg);
                for y in nucleotide_edits(&s) {
                    assert_eq!(dec_nt_edit(&y, &p).unwrap(), msg, "n = {n} y = {y:?}");
                }
            }
        }
    }

    #[test]
    fn constant_messages_respect_the_run_bound() {
        let p = NtParams::new(64, 5, 0, 0).unwrap();
        for bit in 0..2 {
            let s = enc_nt_edit(&vec![bit; p.message_len()], &p).unwrap();
            assert!(member_cnt(&s, &p));
        }
        assert!(!member_cnt(&[0; 64], &p));
    }

    #[test]
    fn small_lengths_are_rejected() {
        for n in 2..13 {
            assert!(NtParams::new(n, 0, 0, 0).is_err());
        }
        assert!(NtParams::new(13, 0, 0, 0).is_ok());
    }
}
