//! Error balls, seeded corruption and brute-force reference decoding.
//!
//! All channels here are symmetric: `y` lies in the ball of `x` exactly
//! when `x` lies in the ball of `y`. The brute-force decoder relies on this
//! and searches the ball around the received word.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{CodecError, Result};
use crate::words::check_alphabet;

/// Error model.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ChannelKind {
    /// One deletion or one insertion.
    Indel,
    /// One deletion, insertion or substitution.
    Edit,
    /// `b` adjacent deletions or `b` adjacent insertions.
    BurstIndel(usize),
    /// One indel, or a substitution that flips the upper bit of a DNA symbol.
    NucleotideEdit,
}

impl ChannelKind {
    fn check(&self, q: u8) -> Result<()> {
        match self {
            ChannelKind::BurstIndel(0) => Err(CodecError::params("burst length must be at least 1")),
            ChannelKind::NucleotideEdit if q != 4 => Err(CodecError::params("nucleotide edits need a 4-letter alphabet")),
            _ if q < 2 => Err(CodecError::params(format!("alphabet size {q} is below 2"))),
            _ => Ok(()),
        }
    }
}

impl fmt::Display for ChannelKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ChannelKind::Indel => write!(f, "indel"),
            ChannelKind::Edit => write!(f, "edit"),
            ChannelKind::BurstIndel(b) => write!(f, "burst{b}"),
            ChannelKind::NucleotideEdit => write!(f, "nt"),
        }
    }
}

impl FromStr for ChannelKind {
    type Err = CodecError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "indel" => Ok(ChannelKind::Indel),
            "edit" => Ok(ChannelKind::Edit),
            "nt" | "nucleotide" => Ok(ChannelKind::NucleotideEdit),
            _ => s
                .strip_prefix("burst")
                .and_then(|b| b.parse().ok())
                .filter(|&b| b >= 1)
                .map(ChannelKind::BurstIndel)
                .ok_or_else(|| CodecError::Parse(format!("unknown channel kind {s:?}"))),
        }
    }
}

/// One corruption event, positions 0-based.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Operation {
    /// Remove `len` symbols starting at `pos`.
    Delete { pos: usize, len: usize },
    /// Insert `symbols` before index `pos`.
    Insert { pos: usize, symbols: Vec<u8> },
    /// Overwrite index `pos` with `symbol`.
    Substitute { pos: usize, symbol: u8 },
}

impl Operation {
    /// Applies the operation to `w`.
    pub fn apply(&self, w: &[u8]) -> Result<Vec<u8>> {
        let mut out = w.to_vec();
        match self {
            Operation::Delete { pos, len } if pos + len <= w.len() => {
                out.drain(*pos..pos + len);
            }
            Operation::Insert { pos, symbols } if *pos <= w.len() => {
                out.splice(*pos..*pos, symbols.iter().copied());
            }
            Operation::Substitute { pos, symbol } if *pos < w.len() => out[*pos] = *symbol,
            _ => return Err(CodecError::params(format!("operation {self} does not fit a word of length {}", w.len()))),
        }
        Ok(out)
    }
}

impl fmt::Display for Operation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Operation::Delete { pos, len } => write!(f, "del:{pos}:{len}"),
            Operation::Insert { pos, symbols } => {
                write!(f, "ins:{pos}:")?;
                symbols.iter().try_for_each(|s| write!(f, "{s}"))
            }
            Operation::Substitute { pos, symbol } => write!(f, "sub:{pos}:{symbol}"),
        }
    }
}

impl FromStr for Operation {
    type Err = CodecError;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || CodecError::Parse(format!("malformed operation {s:?}"));
        let mut parts = s.split(':');
        let (Some(tag), Some(pos), Some(arg), None) = (parts.next(), parts.next(), parts.next(), parts.next()) else {
            return Err(bad());
        };
        let pos = pos.parse().map_err(|_| bad())?;
        match tag {
            "del" => Ok(Operation::Delete { pos, len: arg.parse().map_err(|_| bad())? }),
            "sub" => Ok(Operation::Substitute { pos, symbol: arg.parse().map_err(|_| bad())? }),
            "ins" => {
                let symbols = arg
                    .chars()
                    .map(|c| c.to_digit(10).map(|d| d as u8))
                    .collect::<Option<Vec<u8>>>()
                    .filter(|v| !v.is_empty())
                    .ok_or_else(bad)?;
                Ok(Operation::Insert { pos, symbols })
            }
            _ => Err(bad()),
        }
    }
}

/// Replayable description of a call to [`corrupt`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorruptionRecord {
    pub kind: ChannelKind,
    pub op: Operation,
    pub seed: u64,
}

impl CorruptionRecord {
    /// Reapplies the recorded operation.
    pub fn replay(&self, w: &[u8]) -> Result<Vec<u8>> {
        self.op.apply(w)
    }
}

impl fmt::Display for CorruptionRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "kind={} op={} seed={}", self.kind, self.op, self.seed)
    }
}

impl FromStr for CorruptionRecord {
    type Err = CodecError;

    fn from_str(s: &str) -> Result<Self> {
        let (mut kind, mut op, mut seed) = (None, None, None);
        for field in s.split_whitespace() {
            match field.split_once('=') {
                Some(("kind", v)) => kind = Some(v.parse()?),
                Some(("op", v)) => op = Some(v.parse()?),
                Some(("seed", v)) => seed = v.parse().ok(),
                _ => {}
            }
        }
        match (kind, op, seed) {
            (Some(kind), Some(op), Some(seed)) => Ok(CorruptionRecord { kind, op, seed }),
            _ => Err(CodecError::Parse(format!("corruption record needs kind, op and seed: {s:?}"))),
        }
    }
}

/// Every non-identity operation of `kind` on `w` paired with its result;
/// the first operation listed for a result is kept.
fn outcomes(w: &[u8], kind: ChannelKind, q: u8) -> BTreeMap<Vec<u8>, Operation> {
    let mut ops = Vec::new();
    let n = w.len();
    let b = match kind {
        ChannelKind::BurstIndel(b) => b,
        _ => 1,
    };
    if n >= b {
        ops.extend((0..=n - b).map(|pos| Operation::Delete { pos, len: b }));
    }
    let mut inserts = vec![Vec::new()];
    for _ in 0..b {
        inserts = inserts
            .into_iter()
            .flat_map(|v: Vec<u8>| (0..q).map(move |s| [v.clone(), vec![s]].concat()))
            .collect();
    }
    for pos in 0..=n {
        ops.extend(inserts.iter().map(|symbols| Operation::Insert { pos, symbols: symbols.clone() }));
    }
    for (pos, &old) in w.iter().enumerate() {
        for symbol in 0..q {
            let allowed = match kind {
                ChannelKind::Edit => symbol != old,
                ChannelKind::NucleotideEdit => symbol >> 1 != old >> 1,
                _ => false,
            };
            if allowed {
                ops.push(Operation::Substitute { pos, symbol });
            }
        }
    }
    let mut out = BTreeMap::new();
    for op in ops {
        let y = op.apply(w).expect("operation generated in range");
        if y != w {
            out.entry(y).or_insert(op);
        }
    }
    out
}

/// The exact error ball of `w`, including `w` itself.
pub fn error_ball(w: &[u8], kind: ChannelKind, q: u8) -> Result<BTreeSet<Vec<u8>>> {
    kind.check(q)?;
    check_alphabet(w, q)?;
    let mut ball: BTreeSet<Vec<u8>> = outcomes(w, kind, q).into_keys().collect();
    ball.insert(w.to_vec());
    Ok(ball)
}

/// Picks a word of the ball other than `w`, uniformly under a ChaCha8
/// generator seeded with `seed`.
pub fn corrupt(w: &[u8], kind: ChannelKind, q: u8, seed: u64) -> Result<(Vec<u8>, CorruptionRecord)> {
    kind.check(q)?;
    check_alphabet(w, q)?;
    let choices = outcomes(w, kind, q);
    if choices.is_empty() {
        return Err(CodecError::params(format!("{kind} ball of a word of length {} has no other word", w.len())));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let index = rng.random_range(0..choices.len());
    let (y, op) = choices.into_iter().nth(index).expect("index in range");
    Ok((y, CorruptionRecord { kind, op, seed }))
}

/// Two codewords whose balls share `shared`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Overlap {
    pub first: Vec<u8>,
    pub second: Vec<u8>,
    pub shared: Vec<u8>,
}

/// Returns the first overlap between balls of distinct codewords, or
/// `None` when all balls are disjoint.
pub fn verify_disjoint(code: &[Vec<u8>], kind: ChannelKind, q: u8) -> Result<Option<Overlap>> {
    let mut owner: HashMap<Vec<u8>, usize> = HashMap::new();
    for (i, x) in code.iter().enumerate() {
        for y in error_ball(x, kind, q)? {
            match owner.get(&y) {
                Some(&j) if code[j] != *x => {
                    return Ok(Some(Overlap {
                        first: code[j].clone(),
                        second: x.clone(),
                        shared: y,
                    }))
                }
                Some(_) => {}
                None => {
                    owner.insert(y, i);
                }
            }
        }
    }
    Ok(None)
}

/// Result of exhaustive decoding.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BruteForce {
    Unique(Vec<u8>),
    None,
    Ambiguous(Vec<Vec<u8>>),
}

/// Lists every length-`n` word accepted by `is_codeword` whose ball contains `y`.
pub fn brute_force_decode(
    y: &[u8],
    n: usize,
    kind: ChannelKind,
    q: u8,
    is_codeword: impl Fn(&[u8]) -> bool,
) -> Result<BruteForce> {
    let hits: Vec<Vec<u8>> = error_ball(y, kind, q)?
        .into_iter()
        .filter(|x| x.len() == n && is_codeword(x))
        .collect();
    Ok(match hits.len() {
        0 => BruteForce::None,
        1 => BruteForce::Unique(hits.into_iter().next().expect("one hit")),
        _ => BruteForce::Ambiguous(hits),
    })
}
