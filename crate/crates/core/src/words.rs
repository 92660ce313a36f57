//! Shared word vocabulary: alphabets, the Ψ correspondence between DNA and
//! bit pairs, interleaving, syndromes, runs, the signature α and the Φ map.
//!
//! Words are plain `Vec<u8>` values. A binary word holds symbols in `{0,1}`,
//! a quaternary word holds symbols in `{0,1,2,3}`, and a DNA word holds the
//! Ψ value of each nucleotide: `A = 0 (00)`, `T = 1 (01)`, `C = 2 (10)`,
//! `G = 3 (11)`. Under this convention a DNA word and a quaternary word are
//! the same value, and the first Ψ bit of a symbol is its high bit.
//!
//! All syndrome formulas use 1-based positions.

use crate::error::{CodecError, Result};

/// A word over `{0,1}`.
pub type BinaryWord = Vec<u8>;
/// A word over `{0,1,2,3}`.
pub type QuaternaryWord = Vec<u8>;
/// A word over `{A,T,C,G}` stored as Ψ values `0..=3`.
pub type DnaWord = Vec<u8>;

const DNA_LETTERS: [char; 4] = ['A', 'T', 'C', 'G'];

/// Smallest `t` with `2^t >= n`; `ceil_log2(1) = 0`.
pub fn ceil_log2(n: usize) -> usize {
    assert!(n >= 1, "ceil_log2 of zero");
    (usize::BITS - (n - 1).leading_zeros()) as usize
}

/// Smallest `t` with `4^t >= n`; `ceil_log4(1) = 0`.
pub fn ceil_log4(n: usize) -> usize {
    ceil_log2(n).div_ceil(2)
}

/// Checks that every symbol of `w` is below `q`.
pub fn check_alphabet(w: &[u8], q: u8) -> Result<()> {
    match w.iter().position(|&s| s >= q) {
        Some(index) => Err(CodecError::Symbol {
            index,
            symbol: w[index],
            q,
        }),
        None => Ok(()),
    }
}

/// Maps each nucleotide to its two Ψ bits, high bit first.
pub fn psi_forward(s: &[u8]) -> BinaryWord {
    s.iter().flat_map(|&v| [v >> 1, v & 1]).collect()
}

/// Inverse of [`psi_forward`]; rejects words of odd length.
pub fn psi_inverse(x: &[u8]) -> Result<DnaWord> {
    if !x.len().is_multiple_of(2) {
        return Err(CodecError::length("an even length", x.len()));
    }
    Ok(x.chunks_exact(2).map(|p| (p[0] << 1) | p[1]).collect())
}

/// Splits a DNA word into its upper (first Ψ bits) and lower (second Ψ bits)
/// sequences.
pub fn upper_lower(s: &[u8]) -> (BinaryWord, BinaryWord) {
    (
        s.iter().map(|&v| v >> 1).collect(),
        s.iter().map(|&v| v & 1).collect(),
    )
}

/// Builds the DNA word whose upper and lower sequences are `u` and `l`.
pub fn from_upper_lower(u: &[u8], l: &[u8]) -> Result<DnaWord> {
    if u.len() != l.len() {
        return Err(CodecError::length(u.len(), l.len()));
    }
    Ok(u.iter().zip(l).map(|(&h, &b)| (h << 1) | b).collect())
}

/// Returns `u1 l1 u2 l2 ...`.
pub fn interleave(u: &[u8], l: &[u8]) -> Result<BinaryWord> {
    if u.len() != l.len() {
        return Err(CodecError::length(u.len(), l.len()));
    }
    Ok(u.iter().zip(l).flat_map(|(&a, &b)| [a, b]).collect())
}

/// Splits `x` into its odd-indexed and even-indexed symbols (1-based).
pub fn deinterleave(x: &[u8]) -> Result<(BinaryWord, BinaryWord)> {
    let rows = array_rows(x, 2)?;
    let mut it = rows.into_iter();
    Ok((it.next().unwrap_or_default(), it.next().unwrap_or_default()))
}

/// Array view with `rows` rows: row `i` holds `x_i, x_{rows+i}, ...`.
pub fn array_rows(x: &[u8], rows: usize) -> Result<Vec<Vec<u8>>> {
    if rows == 0 || !x.len().is_multiple_of(rows) {
        return Err(CodecError::length(
            format!("a multiple of {rows}"),
            x.len(),
        ));
    }
    Ok((0..rows)
        .map(|r| x.iter().skip(r).step_by(rows).copied().collect())
        .collect())
}

/// Reads an array column by column; inverse of [`array_rows`].
pub fn array_columns(rows: &[Vec<u8>]) -> Result<Vec<u8>> {
    let cols = rows.first().map_or(0, Vec::len);
    if let Some(bad) = rows.iter().find(|r| r.len() != cols) {
        return Err(CodecError::length(cols, bad.len()));
    }
    let mut out = Vec::with_capacity(cols * rows.len());
    for c in 0..cols {
        out.extend(rows.iter().map(|r| r[c]));
    }
    Ok(out)
}

/// `Σ i·w_i` over 1-based positions, without reduction.
pub fn syndrome(w: &[u8]) -> u64 {
    w.iter()
        .enumerate()
        .map(|(i, &v)| (i as u64 + 1) * v as u64)
        .sum()
}

/// `Σ i·w_i mod modulus` over 1-based positions.
pub fn vt_syndrome(w: &[u8], modulus: u64) -> u64 {
    assert!(modulus >= 1, "modulus must be positive");
    syndrome(w) % modulus
}

/// Sum of the symbols of `w`.
pub fn weight(w: &[u8]) -> u64 {
    w.iter().map(|&v| v as u64).sum()
}

/// Lengths of the maximal constant blocks of `x`, left to right.
pub fn run_decompose(x: &[u8]) -> Result<Vec<usize>> {
    if x.is_empty() {
        return Err(CodecError::length("at least 1", 0));
    }
    let mut runs = vec![1usize];
    for w in x.windows(2) {
        if w[0] == w[1] {
            *runs.last_mut().unwrap() += 1;
        } else {
            runs.push(1);
        }
    }
    Ok(runs)
}

/// Length of the longest run of `x` (0 for the empty word).
pub fn max_run(x: &[u8]) -> usize {
    run_decompose(x).map_or(0, |r| r.into_iter().max().unwrap_or(0))
}

/// Run syndrome of the word `0x`: `Σ_{i≥1} i·r_i` over the runs
/// `r_0, r_1, ...` of `0x`, reduced mod `modulus`.
pub fn run_syndrome_prefixed(x: &[u8], modulus: u64) -> u64 {
    let mut prefixed = Vec::with_capacity(x.len() + 1);
    prefixed.push(0);
    prefixed.extend_from_slice(x);
    let runs = run_decompose(&prefixed).expect("prefixed word is non-empty");
    let total: u64 = runs
        .iter()
        .enumerate()
        .map(|(i, &r)| i as u64 * r as u64)
        .sum();
    total % modulus
}

/// `Φ(x)_i = x_i XOR x_{i+1}` for `i < n` and `Φ(x)_n = x_n`.
pub fn phi_forward(x: &[u8]) -> Result<BinaryWord> {
    if x.is_empty() {
        return Err(CodecError::length("at least 1", 0));
    }
    let mut out: Vec<u8> = x.windows(2).map(|w| w[0] ^ w[1]).collect();
    out.push(x[x.len() - 1]);
    Ok(out)
}

/// Inverse of [`phi_forward`] by suffix accumulation from the last bit.
pub fn phi_inverse(y: &[u8]) -> Result<BinaryWord> {
    if y.is_empty() {
        return Err(CodecError::length("at least 1", 0));
    }
    let mut out = vec![0u8; y.len()];
    let mut acc = 0u8;
    for i in (0..y.len()).rev() {
        acc ^= y[i];
        out[i] = acc;
    }
    Ok(out)
}

/// Signature α(x): bit `i` is 1 iff `x_{i+1} >= x_i`.
pub fn signature(x: &[u8]) -> Result<BinaryWord> {
    if x.len() < 2 {
        return Err(CodecError::length("at least 2", x.len()));
    }
    Ok(x.windows(2).map(|w| u8::from(w[1] >= w[0])).collect())
}

/// Fixed-width representation of `v` in `base`, most significant digit first.
pub fn int_repr(v: u64, base: u8, width: usize) -> Result<Vec<u8>> {
    let mut out = vec![0u8; width];
    let mut rest = v;
    for slot in out.iter_mut().rev() {
        *slot = (rest % base as u64) as u8;
        rest /= base as u64;
    }
    if rest != 0 {
        return Err(CodecError::Overflow {
            value: v,
            base,
            width,
        });
    }
    Ok(out)
}

/// Value of a most-significant-first digit string in `base`.
pub fn int_value(digits: &[u8], base: u8) -> u64 {
    digits
        .iter()
        .fold(0u64, |acc, &d| acc * base as u64 + d as u64)
}

/// Parses a `0`/`1` string.
pub fn parse_binary(s: &str) -> Result<BinaryWord> {
    s.chars()
        .map(|c| match c {
            '0' => Ok(0),
            '1' => Ok(1),
            _ => Err(CodecError::Parse(format!("'{c}' is not a binary digit"))),
        })
        .collect()
}

/// Parses an uppercase `ACGT` string.
pub fn parse_dna(s: &str) -> Result<DnaWord> {
    s.chars()
        .map(|c| {
            DNA_LETTERS
                .iter()
                .position(|&l| l == c)
                .map(|p| p as u8)
                .ok_or_else(|| CodecError::Parse(format!("'{c}' is not a nucleotide")))
        })
        .collect()
}

/// Parses a string of digits `0..=3`.
pub fn parse_quaternary(s: &str) -> Result<QuaternaryWord> {
    s.chars()
        .map(|c| match c.to_digit(4) {
            Some(d) => Ok(d as u8),
            None => Err(CodecError::Parse(format!("'{c}' is not a quaternary digit"))),
        })
        .collect()
}

/// Formats a word of small symbols as a digit string.
pub fn to_digits(w: &[u8]) -> String {
    w.iter().map(|&v| char::from(b'0' + v)).collect()
}

/// Formats a DNA word as an `ACGT` string.
pub fn to_dna_string(s: &[u8]) -> String {
    s.iter().map(|&v| DNA_LETTERS[v as usize]).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn all_words(len: usize, q: u8) -> Vec<Vec<u8>> {
        let mut out = vec![vec![]];
        for _ in 0..len {
            out = out
                .into_iter()
                .flat_map(|w| {
                    (0..q).map(move |s| {
                        let mut v = w.clone();
                        v.push(s);
                        v
                    })
                })
                .collect();
        }
        out
    }

    #[test]
    fn psi_matches_mapping_table() {
        assert_eq!(
            to_digits(&psi_forward(&parse_dna("ACAGTG").unwrap())),
            "001000110111"
        );
        assert_eq!(psi_forward(&parse_dna("A").unwrap()), vec![0, 0]);
        assert!(psi_forward(&[]).is_empty());
        let s = psi_inverse(&parse_binary("0010011111").unwrap()).unwrap();
        assert_eq!(to_dna_string(&s), "ACTGG");
        assert!(psi_inverse(&[0, 1, 1]).is_err());
    }

    #[test]
    fn psi_round_trip_exhaustive() {
        for len in 0..=6 {
            for w in all_words(len, 4) {
                assert_eq!(psi_inverse(&psi_forward(&w)).unwrap(), w);
            }
        }
    }

    #[test]
    fn upper_lower_examples() {
        let (u, l) = upper_lower(&parse_dna("ACAGTG").unwrap());
        assert_eq!(to_digits(&u), "010101");
        assert_eq!(to_digits(&l), "000111");
        let (u, l) = upper_lower(&parse_dna("GGG").unwrap());
        assert_eq!((u, l), (vec![1; 3], vec![1; 3]));
        for len in 0..=5 {
            for s in all_words(len, 4) {
                let (u, l) = upper_lower(&s);
                assert_eq!(interleave(&u, &l).unwrap(), psi_forward(&s));
                assert_eq!(from_upper_lower(&u, &l).unwrap(), s);
            }
        }
    }

    #[test]
    fn interleave_round_trip() {
        assert_eq!(
            to_digits(&interleave(&[0, 1, 0, 1, 0, 1], &[0, 0, 0, 1, 1, 1]).unwrap()),
            "001000110111"
        );
        assert!(interleave(&[0], &[]).is_err());
        for len in 0..=4 {
            for u in all_words(len, 2) {
                for l in all_words(len, 2) {
                    let x = interleave(&u, &l).unwrap();
                    assert_eq!(deinterleave(&x).unwrap(), (u.clone(), l.clone()));
                }
            }
        }
    }

    #[test]
    fn array_view_unrolls_definition() {
        let x = parse_binary("0110100001").unwrap();
        let rows = array_rows(&x, 2).unwrap();
        assert_eq!(to_digits(&rows[0]), "01100");
        assert_eq!(to_digits(&rows[1]), "10001");
        assert_eq!(array_columns(&rows).unwrap(), x);
        assert_eq!(array_rows(&x, 1).unwrap(), vec![x.clone()]);
        assert!(array_rows(&x, 3).is_err());
    }

    #[test]
    fn syndromes() {
        assert_eq!(vt_syndrome(&parse_binary("0010101010").unwrap(), 20), 4);
        assert_eq!(vt_syndrome(&parse_binary("0111101011").unwrap(), 20), 0);
        assert_eq!(vt_syndrome(&[0; 7], 5), 0);
    }

    #[test]
    fn runs_and_run_syndrome() {
        assert_eq!(
            run_decompose(&parse_binary("0010110").unwrap()).unwrap(),
            vec![2, 1, 1, 2, 1]
        );
        assert_eq!(run_decompose(&[0; 4]).unwrap(), vec![4]);
        assert_eq!(run_decompose(&[0, 1, 0, 1]).unwrap(), vec![1; 4]);
        assert!(run_decompose(&[]).is_err());
        assert_eq!(run_syndrome_prefixed(&parse_binary("010110").unwrap(), 12), 1);
        assert_eq!(run_syndrome_prefixed(&parse_binary("010110").unwrap(), 1000), 13);
        assert_eq!(run_syndrome_prefixed(&[0; 9], 18), 0);
    }

    #[test]
    fn phi_examples_and_inverse() {
        assert_eq!(
            to_digits(&phi_forward(&parse_binary("010110").unwrap()).unwrap()),
            "111010"
        );
        assert_eq!(
            to_digits(&phi_inverse(&parse_binary("0110100001").unwrap()).unwrap()),
            "0010011111"
        );
        assert_eq!(phi_forward(&[0; 5]).unwrap(), vec![0; 5]);
        for len in 1..=8 {
            for x in all_words(len, 2) {
                assert_eq!(phi_inverse(&phi_forward(&x).unwrap()).unwrap(), x);
            }
        }
    }

    #[test]
    fn run_syndrome_equals_negated_phi_syndrome() {
        for len in 1..=12 {
            let modulus = 2 * len as u64;
            for x in all_words(len, 2) {
                let lhs = run_syndrome_prefixed(&x, modulus);
                let rhs = (modulus - vt_syndrome(&phi_forward(&x).unwrap(), modulus)) % modulus;
                assert_eq!(lhs, rhs, "x = {}", to_digits(&x));
            }
        }
    }

    #[test]
    fn signature_examples() {
        assert_eq!(signature(&[0, 1, 2, 3]).unwrap(), vec![1, 1, 1]);
        assert_eq!(signature(&[3, 2, 1, 0]).unwrap(), vec![0, 0, 0]);
        assert_eq!(signature(&[2, 2, 1, 3]).unwrap(), vec![1, 0, 1]);
        assert!(signature(&[1]).is_err());
    }

    #[test]
    fn int_repr_examples() {
        assert_eq!(to_digits(&int_repr(6, 2, 4).unwrap()), "0110");
        assert_eq!(to_digits(&int_repr(20, 2, 5).unwrap()), "10100");
        assert_eq!(int_repr(0, 4, 3).unwrap(), vec![0; 3]);
        assert!(int_repr(16, 2, 4).is_err());
        assert_eq!(int_value(&int_repr(1234, 4, 6).unwrap(), 4), 1234);
    }

    #[test]
    fn logs() {
        assert_eq!(ceil_log2(1), 0);
        assert_eq!(ceil_log2(10), 4);
        assert_eq!(ceil_log2(16), 4);
        assert_eq!(ceil_log2(17), 5);
        assert_eq!(ceil_log4(257), 5);
        assert_eq!(ceil_log4(256), 4);
        assert_eq!(ceil_log4(1), 0);
    }

    #[test]
    fn text_forms() {
        assert_eq!(to_dna_string(&parse_dna("GATTACA").unwrap()), "GATTACA");
        assert!(parse_dna("ACGU").is_err());
        assert!(parse_binary("012").is_err());
        assert_eq!(parse_quaternary("0123").unwrap(), vec![0, 1, 2, 3]);
    }
}
