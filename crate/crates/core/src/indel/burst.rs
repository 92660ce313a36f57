//! DNA code correcting one burst of exactly `b` adjacent indels.
//!
//! The Ψ image of a codeword of length `bN` is read as an array of `2b`
//! rows and `N` columns, transmitted column by column. A burst of `b`
//! nucleotide indels removes or adds exactly one bit in every row. Row 1 is
//! a run-length-limited Levenshtein codeword and is decoded first; the run
//! of row 1 that holds its error confines the error of every other row to a
//! window of at most `P + 1` positions, where the shifted VT rows can be
//! repaired.

use crate::binary::{dec_l_codeword, dec_rll, dec_svt, enc_l, enc_rll, enc_svt, member_l, member_svt, project};
use crate::binary::{rll_run_limit, LevParams, SvtParams};
use crate::error::{CodecError, Result};
use crate::words::{array_columns, array_rows, ceil_log2, check_alphabet, max_run, psi_forward, psi_inverse};
use crate::words::{BinaryWord, DnaWord};

/// Parameters of the burst-indel codec.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BurstParams {
    b: usize,
    cols: usize,
    r: usize,
    lev: LevParams,
    svt: SvtParams,
}

impl BurstParams {
    /// Builds the codec for bursts of `b` nucleotides over `N = cols` columns,
    /// with Levenshtein residue `a < 2N`, SVT residue `c < P` and parity `d`.
    pub fn new(b: usize, cols: usize, a: u64, c: u64, d: u8) -> Result<Self> {
        if b == 0 {
            return Err(CodecError::params("burst length b must be positive"));
        }
        if cols < 2 {
            return Err(CodecError::params(format!("column count N = {cols} must be at least 2")));
        }
        let r = 2 * ceil_log2(cols) + 4;
        let p = r + 1;
        let lev = LevParams::new(cols, a)?;
        let svt = SvtParams::new(cols, p, c, d)?;
        svt.message_len()?;
        if lev.message_len() == 0 {
            return Err(CodecError::params(format!("N = {cols} leaves no room for the run-length-limited row")));
        }
        Ok(BurstParams { b, cols, r, lev, svt })
    }

    /// Burst length in nucleotides.
    pub fn b(&self) -> usize {
        self.b
    }

    /// Number of columns `N`.
    pub fn cols(&self) -> usize {
        self.cols
    }

    /// DNA codeword length `bN`.
    pub fn n(&self) -> usize {
        self.b * self.cols
    }

    /// Run bound `r = 2⌈log2 N⌉ + 4` of row 1.
    pub fn r(&self) -> usize {
        self.r
    }

    /// SVT window modulus `P = r + 1`.
    pub fn p(&self) -> usize {
        self.svt.p()
    }

    /// Levenshtein parameters of row 1.
    pub fn lev(&self) -> &LevParams {
        &self.lev
    }

    /// SVT parameters of rows 2 to `2b`.
    pub fn svt(&self) -> &SvtParams {
        &self.svt
    }

    fn row1_len(&self) -> usize {
        self.lev.message_len() - 1
    }

    fn svt_len(&self) -> usize {
        self.cols - self.svt.t() - 1
    }

    /// Message length `2bN − ⌈log2 N⌉ − (2b − 1)(t + 1) − 2`.
    pub fn message_len(&self) -> usize {
        self.row1_len() + (2 * self.b - 1) * self.svt_len()
    }

    /// Redundancy `2bN − m` in bits.
    pub fn redundancy(&self) -> usize {
        2 * self.n() - self.message_len()
    }
}

/// Returns whether `s` is a codeword: row 1 in `L_a(N)` with runs at most
/// `r`, every other row in the SVT code.
pub fn member_burst_indel(s: &[u8], params: &BurstParams) -> bool {
    if s.len() != params.n() || check_alphabet(s, 4).is_err() {
        return false;
    }
    let rows = match array_rows(&psi_forward(s), 2 * params.b) {
        Ok(rows) => rows,
        Err(_) => return false,
    };
    member_l(&rows[0], params.cols, params.lev.a()).unwrap_or(false)
        && max_run(&rows[0]) <= params.r
        && rows[1..].iter().all(|row| member_svt(row, &params.svt))
}

/// Encodes a binary message of length `m` into a DNA word of length `bN`.
pub fn enc_burst_indel(msg: &[u8], params: &BurstParams) -> Result<DnaWord> {
    let m = params.message_len();
    if msg.len() != m {
        return Err(CodecError::length(m, msg.len()));
    }
    check_alphabet(msg, 2)?;
    let (head, tail) = msg.split_at(params.row1_len());
    let mut rows = vec![enc_l(&enc_rll(head)?, &params.lev)?];
    for chunk in tail.chunks_exact(params.svt_len()) {
        rows.push(enc_svt(chunk, &params.svt)?);
    }
    debug_assert!(max_run(&rows[0]) <= rll_run_limit(params.cols) + ceil_log2(params.cols) + 1);
    psi_inverse(&array_columns(&rows)?)
}

/// Decodes a DNA word that suffered at most one burst of `b` adjacent
/// deletions or insertions.
pub fn dec_burst_indel(s: &[u8], params: &BurstParams) -> Result<BinaryWord> {
    check_alphabet(s, 4)?;
    let (b, n) = (params.b, params.n());
    if s.len() != n && s.len() + b != n && s.len() != n + b {
        return Err(CodecError::length(format!("{}, {n} or {}", n.saturating_sub(b), n + b), s.len()));
    }
    let received = array_rows(&psi_forward(s), 2 * b)?;
    let rows: Vec<BinaryWord> = if s.len() == n {
        if !member_burst_indel(s, params) {
            return Err(CodecError::decode("word of full length is not a codeword"));
        }
        received
    } else {
        let first = dec_l_codeword(&received[0], params.cols, params.lev.a())?;
        let (start, end) = error_run(&first, &received[0]);
        let window = start.saturating_sub(1).max(1)..=end;
        let mut rows = vec![first];
        for row in &received[1..] {
            rows.push(dec_svt(row, window.clone(), &params.svt)?);
        }
        rows
    };
    let mut msg = dec_rll(&project(&rows[0], params.lev.info_positions()))?;
    let info = params.svt.info_positions();
    for row in &rows[1..] {
        msg.extend(project(row, &info));
    }
    Ok(msg)
}

/// 1-based bounds of the run that holds the indel separating `codeword`
/// from `received`, measured in `codeword` for a deletion and in `received`
/// for an insertion.
pub(crate) fn error_run(codeword: &[u8], received: &[u8]) -> (usize, usize) {
    let host = if received.len() > codeword.len() { received } else { codeword };
    let i = codeword
        .iter()
        .zip(received)
        .position(|(x, y)| x != y)
        .unwrap_or(codeword.len().min(received.len()));
    let i = i.min(host.len() - 1);
    let mut start = i;
    while start > 0 && host[start - 1] == host[i] {
        start -= 1;
    }
    let mut end = i;
    while end + 1 < host.len() && host[end + 1] == host[i] {
        end += 1;
    }
    (start + 1, end + 1)
}
