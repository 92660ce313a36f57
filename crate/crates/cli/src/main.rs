//! `dnaedit`: encode, decode, corrupt and verify records with the codes of
//! the `dnaedit` library.

mod records;
mod scheme;

use std::collections::{HashMap, HashSet};
use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand};
use dnaedit::channel::{brute_force_decode, corrupt, error_ball, verify_disjoint, BruteForce, ChannelKind, CorruptionRecord};

use records::{format_word, parse_bits, parse_records, parse_word, Record};
use scheme::{rate_row, Scheme, SchemeArgs, SchemeName};

#[derive(Parser)]
#[command(name = "dnaedit", version, about = "Edit-correcting codes for DNA storage")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Encode binary message records
    Encode {
        #[arg(long)]
        scheme: SchemeName,
        #[command(flatten)]
        params: SchemeArgs,
        /// Output file (stdout when absent)
        #[arg(long)]
        out: Option<PathBuf>,
        input: PathBuf,
    },
    /// Decode codeword records; FASTA headers supply the parameters
    Decode {
        #[arg(long)]
        scheme: Option<SchemeName>,
        #[command(flatten)]
        params: SchemeArgs,
        #[arg(long)]
        out: Option<PathBuf>,
        input: PathBuf,
    },
    /// Apply one seeded channel error to every record
    Corrupt {
        /// indel, edit, nt or burstB (for example burst2)
        #[arg(long)]
        kind: Option<ChannelKind>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Replay the operations of an earlier corruption log instead
        #[arg(long)]
        replay: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Where to write the corruption log (stderr when absent)
        #[arg(long)]
        log: Option<PathBuf>,
        input: PathBuf,
    },
    /// Check ball disjointness and decoder agreement with brute force
    Verify {
        #[arg(long, required_unless_present = "code")]
        scheme: Option<SchemeName>,
        #[command(flatten)]
        params: SchemeArgs,
        /// Raw code file with one codeword per line
        #[arg(long)]
        code: Option<PathBuf>,
        #[arg(long)]
        kind: Option<ChannelKind>,
        /// Refuse sweeps whose estimated ball evaluations exceed this bound
        #[arg(long, default_value_t = 50_000_000)]
        max_work: u64,
    },
    /// Print message length, redundancy and rate for a list of lengths
    Rates {
        #[arg(long)]
        scheme: SchemeName,
        /// Comma-separated lengths
        #[arg(long, value_delimiter = ',', required = true)]
        n: Vec<usize>,
        #[command(flatten)]
        params: RateArgs,
    },
}

#[derive(clap::Args)]
struct RateArgs {
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    burst: Option<usize>,
}

/// Failure classes mapped to exit codes 1 and 2.
enum Outcome {
    Pass,
    RecordFailures,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(Outcome::Pass) => ExitCode::SUCCESS,
        Ok(Outcome::RecordFailures) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<Outcome> {
    match command {
        Command::Encode { scheme, params, out, input } => encode(scheme, &params, out.as_deref(), &input),
        Command::Decode { scheme, params, out, input } => decode(scheme, &params, out.as_deref(), &input),
        Command::Corrupt { kind, seed, replay, out, log, input } => {
            corrupt_cmd(kind, seed, replay.as_deref(), out.as_deref(), log.as_deref(), &input)
        }
        Command::Verify { scheme, params, code, kind, max_work } => verify(scheme, &params, code.as_deref(), kind, max_work),
        Command::Rates { scheme, n, params } => rates(scheme, &n, &params),
    }
}

fn read(path: &Path) -> Result<Vec<Record>> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse_records(&text)
}

fn emit(out: Option<&Path>, text: &str) -> Result<()> {
    match out {
        Some(path) => std::fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn fail_line(idx: usize, reason: impl std::fmt::Display) -> String {
    let reason = reason.to_string().replace(char::is_whitespace, "_");
    format!("FAIL idx={idx} reason={reason}\n")
}

fn encode(name: SchemeName, params: &SchemeArgs, out: Option<&Path>, input: &Path) -> Result<Outcome> {
    let scheme = Scheme::build(name, params)?;
    let mut text = String::new();
    let mut failed = false;
    for (pos, record) in read(input)?.iter().enumerate() {
        let idx = record.index(pos);
        match parse_bits(&record.body).and_then(|bits| scheme.encode(&bits)) {
            Ok(word) if scheme.is_dna() => {
                writeln!(text, ">{idx} {}\n{}", scheme.header(), format_word(&word, 4))?;
            }
            Ok(word) => writeln!(text, "{}", format_word(&word, 2))?,
            Err(e) => {
                failed = true;
                text.push_str(&fail_line(idx, e));
            }
        }
    }
    emit(out, &text)?;
    Ok(if failed { Outcome::RecordFailures } else { Outcome::Pass })
}

fn decode(name: Option<SchemeName>, params: &SchemeArgs, out: Option<&Path>, input: &Path) -> Result<Outcome> {
    let mut cache: HashMap<String, Scheme> = HashMap::new();
    let mut text = String::new();
    let mut failed = false;
    for (pos, record) in read(input)?.iter().enumerate() {
        let idx = record.index(pos);
        let (from_header, merged) = params.merge_header(record.header_fields())?;
        let name = name.or(from_header).ok_or_else(|| anyhow!("record {idx}: no scheme given"))?;
        let key = format!("{name} {merged:?}");
        if !cache.contains_key(&key) {
            cache.insert(key.clone(), Scheme::build(name, &merged)?);
        }
        let scheme = &cache[&key];
        let result = parse_word(&record.body).and_then(|(word, _)| scheme.decode(&word));
        match result {
            Ok(bits) => writeln!(text, "{}", format_word(&bits, 2))?,
            Err(e) => {
                failed = true;
                text.push_str(&fail_line(idx, e));
            }
        }
    }
    emit(out, &text)?;
    Ok(if failed { Outcome::RecordFailures } else { Outcome::Pass })
}

fn corrupt_cmd(
    kind: Option<ChannelKind>,
    seed: u64,
    replay: Option<&Path>,
    out: Option<&Path>,
    log: Option<&Path>,
    input: &Path,
) -> Result<Outcome> {
    let replayed: HashMap<usize, CorruptionRecord> = match replay {
        Some(path) => std::fs::read_to_string(path)
            .with_context(|| format!("reading {}", path.display()))?
            .lines()
            .filter(|l| !l.trim().is_empty())
            .map(|l| {
                let idx = l
                    .split_whitespace()
                    .find_map(|f| f.strip_prefix("idx="))
                    .and_then(|v| v.parse().ok())
                    .ok_or_else(|| anyhow!("log line without idx: {l:?}"))?;
                Ok((idx, l.parse()?))
            })
            .collect::<Result<_>>()?,
        None => HashMap::new(),
    };
    if replay.is_none() && kind.is_none() {
        bail!("--kind is required unless --replay is given");
    }
    let mut text = String::new();
    let mut log_text = String::new();
    for (pos, record) in read(input)?.iter().enumerate() {
        let idx = record.index(pos);
        let (word, q) = parse_word(&record.body)?;
        let (corrupted, entry) = match replay {
            Some(_) => {
                let entry = replayed.get(&idx).ok_or_else(|| anyhow!("no log entry for record {idx}"))?;
                (entry.replay(&word)?, entry.clone())
            }
            None => corrupt(&word, kind.expect("checked above"), q, seed.wrapping_add(idx as u64))?,
        };
        writeln!(log_text, "idx={idx} {entry}")?;
        match &record.header {
            Some(h) => writeln!(text, ">{h}\n{}", format_word(&corrupted, q))?,
            None => writeln!(text, "{}", format_word(&corrupted, q))?,
        }
    }
    emit(out, &text)?;
    match log {
        Some(path) => std::fs::write(path, log_text).with_context(|| format!("writing {}", path.display()))?,
        None => eprint!("{log_text}"),
    }
    Ok(Outcome::Pass)
}

fn all_messages(bits: usize) -> impl Iterator<Item = Vec<u8>> {
    (0u64..1 << bits).map(move |v| (0..bits).rev().map(|i| ((v >> i) & 1) as u8).collect())
}

fn verify(
    name: Option<SchemeName>,
    params: &SchemeArgs,
    code_file: Option<&Path>,
    kind: Option<ChannelKind>,
    max_work: u64,
) -> Result<Outcome> {
    let mut report = String::new();
    let mut failed = false;
    if let Some(path) = code_file {
        let kind = kind.unwrap_or(ChannelKind::Edit);
        let mut code = Vec::new();
        let mut q = 2;
        for record in read(path)? {
            let (word, alphabet) = parse_word(&record.body)?;
            q = q.max(alphabet);
            code.push(word);
        }
        let n = code.iter().map(Vec::len).max().unwrap_or(0) as u64;
        check_work(code.len() as u64 * 3 * (q as u64 + 1) * (n + 1), max_work)?;
        match verify_disjoint(&code, kind, q)? {
            None => writeln!(report, "PASS property=disjoint kind={kind} codewords={}", code.len())?,
            Some(o) => {
                failed = true;
                writeln!(
                    report,
                    "FAIL property=disjoint kind={kind} first={} second={} witness={}",
                    format_word(&o.first, q),
                    format_word(&o.second, q),
                    format_word(&o.shared, q)
                )?;
            }
        }
    } else {
        let scheme = Scheme::build(name.expect("clap requires scheme or code"), params)?;
        let kind = kind.unwrap_or_else(|| scheme.default_kind());
        let q = if scheme.is_dna() { 4 } else { 2 };
        let m = scheme.message_bits();
        if m >= 40 {
            bail!("{m} message bits cannot be enumerated");
        }
        let probe = scheme.encode(&vec![0; m])?;
        let ball = error_ball(&probe, kind, q)?.len() as u64;
        check_work((1u64 << m).saturating_mul(ball).saturating_mul(ball), max_work)?;
        let code: Vec<(Vec<u8>, Vec<u8>)> = all_messages(m)
            .map(|msg| scheme.encode(&msg).map(|w| (msg, w)))
            .collect::<Result<_>>()?;
        let words: Vec<Vec<u8>> = code.iter().map(|(_, w)| w.clone()).collect();
        let label = format!("{} kind={kind}", scheme.header());
        match verify_disjoint(&words, kind, q)? {
            None => writeln!(report, "PASS property=disjoint {label} codewords={}", words.len())?,
            Some(o) => {
                failed = true;
                writeln!(report, "FAIL property=disjoint {label} witness={}", format_word(&o.shared, q))?;
            }
        }
        let members: HashSet<&[u8]> = words.iter().map(Vec::as_slice).collect();
        let n = probe.len();
        let mut checked = 0u64;
        let mut mismatch = None;
        'outer: for (msg, word) in &code {
            for y in error_ball(word, kind, q)? {
                checked += 1;
                let oracle = brute_force_decode(&y, n, kind, q, |x| members.contains(x))?;
                let decoded = scheme.decode(&y).ok();
                if oracle != BruteForce::Unique(word.clone()) || decoded.as_ref() != Some(msg) {
                    mismatch = Some(y);
                    break 'outer;
                }
            }
        }
        match mismatch {
            None => writeln!(report, "PASS property=decoder {label} received={checked}")?,
            Some(y) => {
                failed = true;
                writeln!(report, "FAIL property=decoder {label} witness={}", format_word(&y, q))?;
            }
        }
    }
    print!("{report}");
    Ok(if failed { Outcome::RecordFailures } else { Outcome::Pass })
}

fn check_work(estimate: u64, max_work: u64) -> Result<()> {
    if estimate > max_work {
        bail!("estimated work {estimate} exceeds --max-work {max_work}");
    }
    Ok(())
}

fn rates(name: SchemeName, lengths: &[usize], extra: &RateArgs) -> Result<Outcome> {
    println!("scheme n m redundancy rate");
    for &n in lengths {
        let args = SchemeArgs { n: Some(n), k: extra.k, burst: extra.burst, ..SchemeArgs::default() };
        let (m, redundancy, total) = rate_row(name, &args)?;
        println!("{name} {n} {m} {redundancy} {:.6}", m as f64 / total as f64);
    }
    Ok(Outcome::Pass)
}
