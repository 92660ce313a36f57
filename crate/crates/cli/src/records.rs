//! Line-oriented record files.
//!
//! A file is either FASTA-like (`>` header lines, each followed by one or
//! more sequence lines) or plain, with one record per line. Plain records
//! are `0`/`1` strings, `ACGT` strings, or `BITS:0xHEX` where `BITS` is the
//! exact bit count. Blank lines and lines starting with `#` are skipped.

use anyhow::{anyhow, bail, Context, Result};
use dnaedit::words::{parse_binary, parse_dna, to_digits, to_dna_string};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Record {
    /// Header text after `>`, if the file is FASTA-like.
    pub header: Option<String>,
    pub body: String,
}

impl Record {
    /// Record index from the header, or the position in the file.
    pub fn index(&self, position: usize) -> usize {
        self.header
            .as_deref()
            .and_then(|h| h.split_whitespace().next())
            .and_then(|t| t.parse().ok())
            .unwrap_or(position)
    }

    /// Header text after the index.
    pub fn header_fields(&self) -> &str {
        match self.header.as_deref() {
            Some(h) => h.trim_start().split_once(char::is_whitespace).map_or("", |(_, rest)| rest),
            None => "",
        }
    }
}

pub fn parse_records(text: &str) -> Result<Vec<Record>> {
    let mut out: Vec<Record> = Vec::new();
    let mut fasta = false;
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if let Some(header) = line.strip_prefix('>') {
            fasta = true;
            out.push(Record { header: Some(header.trim().to_string()), body: String::new() });
        } else if fasta {
            let last = out.last_mut().ok_or_else(|| anyhow!("line {}: sequence before any header", lineno + 1))?;
            last.body.push_str(line);
        } else {
            out.push(Record { header: None, body: line.to_string() });
        }
    }
    Ok(out)
}

/// Binary message from a `0/1` or `BITS:0xHEX` record.
pub fn parse_bits(body: &str) -> Result<Vec<u8>> {
    let Some((len, hex)) = body.split_once(':') else {
        return Ok(parse_binary(body)?);
    };
    let len: usize = len.trim().parse().with_context(|| format!("bit count in {body:?}"))?;
    let hex = hex.trim().trim_start_matches("0x").trim_start_matches("0X");
    let mut bits = Vec::with_capacity(4 * hex.len());
    for c in hex.chars() {
        let v = c.to_digit(16).ok_or_else(|| anyhow!("'{c}' is not a hex digit"))?;
        bits.extend((0..4).rev().map(|i| ((v >> i) & 1) as u8));
    }
    if bits.len() < len {
        bits.splice(0..0, std::iter::repeat_n(0, len - bits.len()));
    }
    let extra = bits.len() - len;
    if bits[..extra].iter().any(|&b| b != 0) {
        bail!("hex value in {body:?} needs more than {len} bits");
    }
    Ok(bits.split_off(extra))
}

/// Word and alphabet size of a record body: `ACGT` bodies are DNA, `0/1`
/// bodies binary.
pub fn parse_word(body: &str) -> Result<(Vec<u8>, u8)> {
    if body.chars().all(|c| c == '0' || c == '1') {
        Ok((parse_binary(body)?, 2))
    } else {
        Ok((parse_dna(body)?, 4))
    }
}

pub fn format_word(word: &[u8], q: u8) -> String {
    if q == 2 {
        to_digits(word)
    } else {
        to_dna_string(word)
    }
}
