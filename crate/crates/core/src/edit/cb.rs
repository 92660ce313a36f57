//! Quaternary single-edit code
//! `C^B = {x ∈ Bal_k(n) : Syn(x) ≡ a (mod 4n+1), α(x) ∈ SVT_{b,c,5k}(n−1), Σx ≡ d (mod 7)}`.
//!
//! Substitutions are sized by the sum check mod 7 and located by the
//! syndrome mod `4n + 1`. For an indel the sum check names the symbol, the
//! syndrome narrows its position to a set spanning at most `2k` places,
//! the signature is repaired by the windowed SVT decoder and the symbol is
//! put back where the signature agrees.

use crate::binary::{dec_svt, SvtParams};
use crate::error::{CodecError, Result};
use crate::words::{check_alphabet, signature, syndrome, weight, BinaryWord, QuaternaryWord};

use super::sum_balance::is_sum_balanced;

/// Parameters of `C^B(n; k, a, b, c, d)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CbParams {
    n: usize,
    k: usize,
    a: u64,
    d: u64,
    svt: SvtParams,
}

impl CbParams {
    /// Builds the code with `1 <= k < n`, `a < 4n+1`, `b < 5k`, `c < 2`, `d < 7`.
    pub fn new(n: usize, k: usize, a: u64, b: u64, c: u8, d: u64) -> Result<Self> {
        if k >= n {
            return Err(CodecError::params(format!("balance window k = {k} must be below n = {n}")));
        }
        Self::with_any_window(n, k, a, b, c, d)
    }

    /// As [`CbParams::new`] without the `k < n` requirement.
    pub(crate) fn with_any_window(n: usize, k: usize, a: u64, b: u64, c: u8, d: u64) -> Result<Self> {
        if n < 2 || k == 0 {
            return Err(CodecError::params(format!("need n >= 2 and k >= 1, got n = {n}, k = {k}")));
        }
        let modulus = 4 * n as u64 + 1;
        if a >= modulus {
            return Err(CodecError::params(format!("residue a = {a} must be below 4n + 1 = {modulus}")));
        }
        if d >= 7 {
            return Err(CodecError::params(format!("sum check d = {d} must be below 7")));
        }
        let svt = SvtParams::new(n - 1, 5 * k, b, c)?;
        Ok(CbParams { n, k, a, d, svt })
    }

    /// Codeword length.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Balance window.
    pub fn k(&self) -> usize {
        self.k
    }

    /// Signature window modulus `P = 5k`.
    pub fn p(&self) -> usize {
        self.svt.p()
    }

    /// Syndrome residue modulo `4n + 1`.
    pub fn a(&self) -> u64 {
        self.a
    }

    /// Sum residue modulo 7.
    pub fn d(&self) -> u64 {
        self.d
    }

    /// Shifted VT parameters applied to the signature.
    pub fn signature_code(&self) -> &SvtParams {
        &self.svt
    }

    fn modulus(&self) -> u64 {
        4 * self.n as u64 + 1
    }
}

/// Signature that tolerates words shorter than two symbols.
fn sig(y: &[u8]) -> BinaryWord {
    if y.len() < 2 {
        Vec::new()
    } else {
        signature(y).expect("length checked")
    }
}

/// Returns whether `x` is a codeword.
pub fn member_cb(x: &[u8], params: &CbParams) -> bool {
    x.len() == params.n
        && check_alphabet(x, 4).is_ok()
        && is_sum_balanced(x, params.k)
        && syndrome(x) % params.modulus() == params.a
        && crate::binary::member_svt(&sig(x), &params.svt)
        && weight(x) % 7 == params.d
}

/// Decodes a word of the code's length that carries at most one substitution.
pub fn cb_decode_substitution(y: &[u8], params: &CbParams) -> Result<QuaternaryWord> {
    decode_substitution(y, params.n, params.a, params.d)
}

/// Substitution repair from the syndrome mod `4n + 1` and the sum mod 7 alone.
pub(crate) fn decode_substitution(y: &[u8], n: usize, a: u64, d: u64) -> Result<QuaternaryWord> {
    check_alphabet(y, 4)?;
    if y.len() != n {
        return Err(CodecError::length(n, y.len()));
    }
    let modulus = 4 * n as u64 + 1;
    let gap = (syndrome(y) % modulus + modulus - a) % modulus;
    let shift = (weight(y) % 7 + 7 - d) % 7;
    if shift == 0 {
        return if gap == 0 {
            Ok(y.to_vec())
        } else {
            Err(CodecError::decode("sum check holds but syndrome does not"))
        };
    }
    // y_j − x_j = e with e in [−3, 3] \ {0}, and j·e ≡ gap (mod 4n + 1).
    let (magnitude, target) = if shift <= 3 { (shift, gap) } else { (7 - shift, (modulus - gap) % modulus) };
    if target % magnitude != 0 {
        return Err(CodecError::decode("syndrome gap is not a multiple of the error size"));
    }
    let j = (target / magnitude) as usize;
    if j == 0 || j > n {
        return Err(CodecError::decode(format!("located position {j} is outside the word")));
    }
    let old = y[j - 1] as i64 - if shift <= 3 { magnitude as i64 } else { -(magnitude as i64) };
    if !(0..4).contains(&old) {
        return Err(CodecError::decode("repaired symbol is outside the alphabet"));
    }
    let mut x = y.to_vec();
    x[j - 1] = old as u8;
    Ok(x)
}

/// The deleted symbol and the 1-based positions `j` where inserting it into
/// `y` restores the syndrome.
pub fn deletion_candidates(y: &[u8], params: &CbParams) -> Result<(u8, Vec<usize>)> {
    let n = params.n;
    if y.len() + 1 != n {
        return Err(CodecError::length(n - 1, y.len()));
    }
    check_alphabet(y, 4)?;
    let modulus = params.modulus();
    let m = (params.d + 7 - weight(y) % 7) % 7;
    if m > 3 {
        return Err(CodecError::decode(format!("sum check names symbol {m}")));
    }
    let base = syndrome(y) % modulus;
    let mut tail = 0u64;
    let mut found = Vec::new();
    for j in (1..=n).rev() {
        if j < n {
            tail += y[j - 1] as u64;
        }
        if (base + j as u64 * m + tail) % modulus == params.a {
            found.push(j);
        }
    }
    found.reverse();
    Ok((m as u8, found))
}

/// The inserted symbol and the 1-based positions `j` of `y` holding it whose
/// removal restores the syndrome.
pub fn insertion_candidates(y: &[u8], params: &CbParams) -> Result<(u8, Vec<usize>)> {
    let n = params.n;
    if y.len() != n + 1 {
        return Err(CodecError::length(n + 1, y.len()));
    }
    check_alphabet(y, 4)?;
    let modulus = params.modulus();
    let m = (weight(y) % 7 + 7 - params.d) % 7;
    if m > 3 {
        return Err(CodecError::decode(format!("sum check names symbol {m}")));
    }
    let base = syndrome(y) % modulus;
    let mut after = 0u64;
    let mut found = Vec::new();
    for j in (1..=n + 1).rev() {
        let removed = (j as u64 * m + after) % modulus;
        if y[j - 1] as u64 == m && (base + modulus - removed) % modulus == params.a {
            found.push(j);
        }
        after += y[j - 1] as u64;
    }
    found.reverse();
    Ok((m as u8, found))
}

/// Decodes a word of length `n − 1` or `n + 1` that carries one deletion or
/// one insertion.
pub fn cb_decode_indel(y: &[u8], params: &CbParams) -> Result<QuaternaryWord> {
    let n = params.n;
    let deletion = y.len() + 1 == n;
    let (m, positions) = if deletion {
        deletion_candidates(y, params)?
    } else if y.len() == n + 1 {
        insertion_candidates(y, params)?
    } else {
        return Err(CodecError::length(format!("{} or {}", n - 1, n + 1), y.len()));
    };
    let (Some(&lo), Some(&hi)) = (positions.first(), positions.last()) else {
        return Err(CodecError::decode("no position restores the syndrome"));
    };
    let sig_y = sig(y);
    let upper = if deletion { n - 1 } else { n };
    let window = lo.saturating_sub(1).max(1)..=hi.min(upper);
    let target = dec_svt(&sig_y, window, &params.svt)?;
    let x = if deletion {
        reinsert(y, &sig_y, &target, m)?
    } else {
        remove_matching(y, &sig_y, &target, m)?
    };
    if syndrome(&x) % params.modulus() != params.a || weight(&x) % 7 != params.d {
        return Err(CodecError::decode("repaired word fails the syndrome checks"));
    }
    Ok(x)
}

/// Dispatches on the received length.
pub fn cb_decode(y: &[u8], params: &CbParams) -> Result<QuaternaryWord> {
    if y.len() == params.n {
        cb_decode_substitution(y, params)
    } else {
        cb_decode_indel(y, params)
    }
}

/// `ok[l]` is true when `a[..l]` equals `b[..l]`.
fn prefix_agreement(a: &[u8], b: &[u8], len: usize) -> Vec<bool> {
    let mut ok = vec![true; len + 1];
    for l in 1..=len {
        ok[l] = ok[l - 1] && a[l - 1] == b[l - 1];
    }
    ok
}

/// Unique word obtained by inserting `m` into `y` whose signature is `target`.
fn reinsert(y: &[u8], sig_y: &[u8], target: &[u8], m: u8) -> Result<QuaternaryWord> {
    let len = y.len() + 1;
    let last = target.len();
    let pre = prefix_agreement(sig_y, target, sig_y.len().min(last));
    // suf[s]: sig_y[p − 1] == target[p] for every p >= s.
    let mut suf = vec![true; last + 2];
    for p in (1..last).rev() {
        suf[p] = suf[p + 1] && sig_y[p - 1] == target[p];
    }
    let mut found: Option<QuaternaryWord> = None;
    for j in 0..len {
        let mut ok = j == 0 || pre[j - 1];
        if ok && j >= 1 && j - 1 < last {
            ok = u8::from(m >= y[j - 1]) == target[j - 1];
        }
        if ok && j < last {
            ok = u8::from(y[j] >= m) == target[j] && suf[j + 1];
        }
        if ok {
            let mut x = y.to_vec();
            x.insert(j, m);
            match &found {
                Some(prev) if *prev != x => return Err(CodecError::decode("signature admits two reinsertions")),
                _ => found = Some(x),
            }
        }
    }
    found.ok_or_else(|| CodecError::decode("no reinsertion matches the signature"))
}

/// Unique word obtained by removing one `m` from `y` whose signature is `target`.
fn remove_matching(y: &[u8], sig_y: &[u8], target: &[u8], m: u8) -> Result<QuaternaryWord> {
    let len = y.len();
    let last = target.len();
    let pre = prefix_agreement(sig_y, target, last);
    // suf[s]: sig_y[p + 1] == target[p] for every p >= s.
    let mut suf = vec![true; last + 1];
    for p in (0..last).rev() {
        suf[p] = suf[p + 1] && sig_y[p + 1] == target[p];
    }
    let mut found: Option<QuaternaryWord> = None;
    for j in 0..len {
        if y[j] != m {
            continue;
        }
        let ok = if j == 0 {
            suf[0]
        } else if j == len - 1 {
            pre[last]
        } else {
            pre[j - 1] && u8::from(y[j + 1] >= y[j - 1]) == target[j - 1] && suf[j]
        };
        if ok {
            let mut x = y.to_vec();
            x.remove(j);
            match &found {
                Some(prev) if *prev != x => return Err(CodecError::decode("signature admits two removals")),
                _ => found = Some(x),
            }
        }
    }
    found.ok_or_else(|| CodecError::decode("no removal matches the signature"))
}
