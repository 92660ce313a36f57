//! Scheme selection, parameter serialization and per-record codec calls.

use std::fmt;
use std::str::FromStr;

use anyhow::{anyhow, bail, Context, Result};
use dnaedit::balance::{dec_gc, enc_gc, GcParams};
use dnaedit::binary::{dec_l_message, enc_l, LevParams};
use dnaedit::channel::ChannelKind;
use dnaedit::edit::{dec_edit_a, dec_nt_edit, enc_edit_a, enc_nt_edit, EditAParams, EditBCodec, EncBParams, NtParams};
use dnaedit::indel::{dec_burst_indel, dec_indel, enc_burst_indel, enc_indel, BurstParams, IndelParams};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum SchemeName {
    Lev,
    Indel,
    Burst,
    #[value(name = "editA")]
    EditA,
    #[value(name = "editB")]
    EditB,
    Nt,
    Gc,
}

impl fmt::Display for SchemeName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            SchemeName::Lev => "lev",
            SchemeName::Indel => "indel",
            SchemeName::Burst => "burst",
            SchemeName::EditA => "editA",
            SchemeName::EditB => "editB",
            SchemeName::Nt => "nt",
            SchemeName::Gc => "gc",
        };
        f.write_str(s)
    }
}

impl FromStr for SchemeName {
    type Err = anyhow::Error;

    fn from_str(s: &str) -> Result<Self> {
        <SchemeName as clap::ValueEnum>::from_str(s, false).map_err(|_| anyhow!("unknown scheme {s:?}"))
    }
}

/// Raw parameter fields shared by every scheme; unused fields are ignored.
#[derive(Debug, Clone, Default, PartialEq, Eq, clap::Args)]
pub struct SchemeArgs {
    /// Code length (columns for burst, payload length for editB)
    #[arg(long)]
    pub n: Option<usize>,
    /// Levenshtein or syndrome residue
    #[arg(long)]
    pub a: Option<u64>,
    /// Second residue (lower rail for editA, SVT residue for nt)
    #[arg(long)]
    pub b: Option<u64>,
    /// SVT residue (burst) or parity (nt)
    #[arg(long)]
    pub c: Option<u64>,
    /// SVT parity (burst)
    #[arg(long)]
    pub d: Option<u64>,
    /// Restricted balance window (editB)
    #[arg(long)]
    pub k: Option<usize>,
    /// Burst length (burst)
    #[arg(long)]
    pub burst: Option<usize>,
}

impl SchemeArgs {
    /// Fills unset fields from `key=value` pairs of a FASTA header.
    pub fn merge_header(&self, header: &str) -> Result<(Option<SchemeName>, SchemeArgs)> {
        let mut out = self.clone();
        let mut scheme = None;
        for field in header.split_whitespace() {
            let Some((key, value)) = field.split_once('=') else { continue };
            let bad = || format!("header field {field:?}");
            match key {
                "scheme" => scheme = Some(value.parse()?),
                "n" => out.n = Some(value.parse().with_context(bad)?),
                "a" => out.a = Some(value.parse().with_context(bad)?),
                "b" => out.b = Some(value.parse().with_context(bad)?),
                "c" => out.c = Some(value.parse().with_context(bad)?),
                "d" => out.d = Some(value.parse().with_context(bad)?),
                "k" => out.k = Some(value.parse().with_context(bad)?),
                "burst" => out.burst = Some(value.parse().with_context(bad)?),
                _ => {}
            }
        }
        Ok((scheme, out))
    }
}

fn small(v: u64, what: &str) -> Result<u8> {
    u8::try_from(v).ok().filter(|&v| v < 2).ok_or_else(|| anyhow!("{what} must be 0 or 1, got {v}"))
}

enum Codec {
    Lev(LevParams),
    Indel(IndelParams),
    Burst(BurstParams),
    EditA(EditAParams),
    EditB(Box<EditBCodec>),
    Nt(NtParams),
    Gc(GcParams),
}

/// A fully built codec together with the parameters it was built from.
pub struct Scheme {
    pub name: SchemeName,
    pub args: SchemeArgs,
    codec: Codec,
}

fn need_n(args: &SchemeArgs) -> Result<usize> {
    args.n.ok_or_else(|| anyhow!("--n is required"))
}

impl Scheme {
    pub fn build(name: SchemeName, args: &SchemeArgs) -> Result<Self> {
        let n = need_n(args)?;
        let a = args.a.unwrap_or(0);
        let mut args = args.clone();
        args.a = Some(a);
        let codec = match name {
            SchemeName::Lev => Codec::Lev(LevParams::new(n, a)?),
            SchemeName::Indel => Codec::Indel(IndelParams::new(n, a)?),
            SchemeName::Burst => {
                let b = *args.burst.get_or_insert(2);
                let c = *args.c.get_or_insert(0);
                let d = *args.d.get_or_insert(0);
                Codec::Burst(BurstParams::new(b, n, a, c, small(d, "--d")?)?)
            }
            SchemeName::EditA => Codec::EditA(EditAParams::new(n, a, *args.b.get_or_insert(0))?),
            SchemeName::EditB => {
                let params = match args.k {
                    Some(k) => EncBParams::with_k(n, k)?,
                    None => EncBParams::new(n)?,
                };
                args.k = Some(params.k());
                Codec::EditB(Box::new(EditBCodec::new(params)?))
            }
            SchemeName::Nt => {
                let b = *args.b.get_or_insert(0);
                let c = *args.c.get_or_insert(0);
                Codec::Nt(NtParams::new(n, a, b, small(c, "--c")?)?)
            }
            SchemeName::Gc => Codec::Gc(GcParams::new(n, a)?),
        };
        Ok(Scheme { name, args, codec })
    }

    /// FASTA header fields after the record index.
    pub fn header(&self) -> String {
        let mut out = format!("scheme={}", self.name);
        let f = &self.args;
        let fields: [(&str, Option<u64>); 7] = [
            ("n", f.n.map(|v| v as u64)),
            ("a", f.a),
            ("b", f.b),
            ("c", f.c),
            ("d", f.d),
            ("k", f.k.map(|v| v as u64)),
            ("burst", f.burst.map(|v| v as u64)),
        ];
        for (key, value) in fields {
            if let Some(v) = value {
                out.push_str(&format!(" {key}={v}"));
            }
        }
        out
    }

    /// Whether codewords are strands (as opposed to binary words).
    pub fn is_dna(&self) -> bool {
        !matches!(self.codec, Codec::Lev(_))
    }

    /// Message length in bits.
    pub fn message_bits(&self) -> usize {
        match &self.codec {
            Codec::Lev(p) => p.message_len(),
            Codec::Indel(p) => p.message_len(),
            Codec::Burst(p) => p.message_len(),
            Codec::EditA(p) => p.message_len(),
            Codec::EditB(c) => 2 * c.params().message_len(),
            Codec::Nt(p) => p.message_len(),
            Codec::Gc(p) => p.message_len(),
        }
    }

    /// Default channel for `verify`.
    pub fn default_kind(&self) -> ChannelKind {
        match &self.codec {
            Codec::Indel(_) => ChannelKind::Indel,
            Codec::Burst(p) => ChannelKind::BurstIndel(p.b()),
            Codec::Nt(_) => ChannelKind::NucleotideEdit,
            _ => ChannelKind::Edit,
        }
    }

    pub fn encode(&self, bits: &[u8]) -> Result<Vec<u8>> {
        if bits.len() != self.message_bits() {
            bail!("message has {} bits, scheme {} expects {}", bits.len(), self.name, self.message_bits());
        }
        Ok(match &self.codec {
            Codec::Lev(p) => enc_l(bits, p)?,
            Codec::Indel(p) => enc_indel(bits, p)?,
            Codec::Burst(p) => enc_burst_indel(bits, p)?,
            Codec::EditA(p) => enc_edit_a(bits, p)?,
            Codec::EditB(c) => c.encode(&bits.chunks(2).map(|pair| 2 * pair[0] + pair[1]).collect::<Vec<u8>>())?,
            Codec::Nt(p) => enc_nt_edit(bits, p)?,
            Codec::Gc(p) => enc_gc(bits, p)?,
        })
    }

    pub fn decode(&self, word: &[u8]) -> Result<Vec<u8>> {
        Ok(match &self.codec {
            Codec::Lev(p) => dec_l_message(word, p)?,
            Codec::Indel(p) => dec_indel(word, p)?,
            Codec::Burst(p) => dec_burst_indel(word, p)?,
            Codec::EditA(p) => dec_edit_a(word, p)?,
            Codec::EditB(c) => c.decode(word)?.iter().flat_map(|&s| [s >> 1, s & 1]).collect(),
            Codec::Nt(p) => dec_nt_edit(word, p)?,
            Codec::Gc(p) => dec_gc(word, p)?,
        })
    }
}

/// `(message bits, redundancy bits, codeword bits)` without building
/// encoder tables.
pub fn rate_row(name: SchemeName, args: &SchemeArgs) -> Result<(usize, usize, usize)> {
    let n = need_n(args)?;
    if name == SchemeName::EditB {
        let p = match args.k {
            Some(k) => EncBParams::with_k(n, k)?,
            None => EncBParams::new(n)?,
        };
        let total = 2 * p.codeword_len();
        return Ok((total - p.redundancy_bits(), p.redundancy_bits(), total));
    }
    let scheme = Scheme::build(name, args)?;
    let m = scheme.message_bits();
    let total = match &scheme.codec {
        Codec::Lev(_) => n,
        Codec::Burst(p) => 2 * p.n(),
        _ => 2 * n,
    };
    Ok((m, total - m, total))
}
