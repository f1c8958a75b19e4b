//! The `pancake` command line.

use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;

use crate::canonical::{extract, Checkpoint};
use crate::classify::{classify, Certificate};
use crate::compose::{compose_even, compose_odd};
use crate::error::{Error, Result};
use crate::format::{format_sequence, parse_sequence, parse_sequence_file, parse_stack};
use crate::oracle::{check_identities, god_table, MAX_N};
use crate::patterns::{compose_route, generate, table};
use crate::perm::FlipSequence;
use crate::potential::potential;
use crate::search::{search, Emit, HintPreset, Mode, SearchConfig, Symmetry};

#[derive(Debug, Parser)]
#[command(
    name = "pancake",
    version,
    about = "Optimal burnt pancake sequences: generate, search, splice, verify"
)]
pub struct Cli {
    /// Worker threads for parallel commands (default: all cores).
    #[arg(long, global = true, env = "PANCAKE_JOBS")]
    pub jobs: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check every sequence in the given files (or stdin) and print one JSON
    /// certificate per line. Fails if a sequence does not sort or a claim
    /// after `=>` does not hold.
    Verify { paths: Vec<PathBuf> },
    /// Print the pattern-family sequence for one size.
    Gen {
        #[arg(long)]
        n: usize,
        /// Build by splicing seeds instead of from the closed-form checkpoint.
        #[arg(long)]
        splice: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: OutputFormat,
    },
    /// Print a sequence for every covered size up to `--max`.
    Table {
        #[arg(long)]
        max: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: OutputFormat,
    },
    /// Exhaustive search for fortuitous sequences.
    Search(SearchArgs),
    /// Splice two fortuitous sequences into one for a larger stack.
    Compose {
        #[arg(long, conflicts_with = "even", required_unless_present = "even")]
        odd: bool,
        #[arg(long)]
        even: bool,
        /// Inner sequence: a literal like `(3 2)^3` or a file whose first entry is used.
        inner: String,
        /// Outer sequence, same forms.
        outer: String,
        #[arg(long, value_enum, default_value = "text")]
        format: OutputFormat,
    },
    /// Exact flip distances by breadth-first search (small n only).
    Oracle {
        #[arg(long)]
        n: usize,
        /// A stack to measure instead of the `-I_n` identities.
        #[arg(long)]
        state: Option<String>,
        #[arg(long, value_enum, default_value = "text")]
        format: OutputFormat,
    },
    /// Per-pancake potential of a stack.
    Potential {
        stack: String,
        /// Count the plate under the stack.
        #[arg(long)]
        plate: bool,
    },
    /// Rebuild a sequence from its checkpoint stack.
    Extract {
        stack: String,
        #[arg(long, value_enum, default_value = "text")]
        format: OutputFormat,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SearchMode {
    Palin,
    Triple,
    Patchwork,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SymmetryArg {
    Double,
    #[value(name = "pal-n1")]
    PalN1,
    #[value(name = "pal-n")]
    PalN,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PresetArg {
    EvenFamily,
    OddFamily,
    Double,
    #[value(name = "pal-n1")]
    PalN1,
    #[value(name = "pal-n")]
    PalN,
}

#[derive(Debug, Args)]
pub struct SearchArgs {
    #[arg(long, value_enum)]
    pub mode: SearchMode,
    #[arg(long)]
    pub n: usize,
    #[arg(long, value_enum)]
    pub symmetry: Vec<SymmetryArg>,
    /// Forced checkpoint values; also turns on the preset's symmetry.
    #[arg(long, value_enum)]
    pub hints: Option<PresetArg>,
    /// Report every solution instead of stopping at the first.
    #[arg(long)]
    pub all: bool,
    /// Give up after this many seconds; the result is then marked incomplete.
    #[arg(long)]
    pub budget: Option<f64>,
    #[arg(long, value_enum, default_value = "text")]
    pub format: OutputFormat,
}

impl SearchArgs {
    fn config(&self) -> Result<SearchConfig> {
        let mut config = SearchConfig {
            emit: if self.all { Emit::All } else { Emit::First },
            budget: self.budget.map(Duration::from_secs_f64),
            ..SearchConfig::default()
        };
        for s in &self.symmetry {
            config.symmetries.insert(match s {
                SymmetryArg::Double => Symmetry::Double,
                SymmetryArg::PalN1 => Symmetry::PalCenterNminus1,
                SymmetryArg::PalN => Symmetry::PalCenterN,
            });
        }
        if let Some(p) = self.hints {
            let preset = match p {
                PresetArg::EvenFamily => HintPreset::EvenFamily,
                PresetArg::OddFamily => HintPreset::OddFamily,
                PresetArg::Double => HintPreset::Double,
                PresetArg::PalN1 => HintPreset::PalCenterNminus1,
                PresetArg::PalN => HintPreset::PalCenterN,
            };
            config = config.with_preset(preset, self.n)?;
        }
        Ok(config)
    }

    fn mode(&self) -> Mode {
        match self.mode {
            SearchMode::Palin => Mode::PalindromicOdd,
            SearchMode::Triple => Mode::Triple,
            SearchMode::Patchwork => Mode::Patchwork,
        }
    }
}

/// One line of `verify` output.
#[derive(Debug, Serialize)]
pub struct VerifyRecord {
    pub source: String,
    pub line: usize,
    pub pass: bool,
    pub claims: String,
    pub problems: Vec<String>,
    #[serde(flatten)]
    pub certificate: Certificate,
}

fn json_line<T: Serialize>(out: &mut dyn Write, value: &T) -> Result<()> {
    let text = serde_json::to_string(value).map_err(|e| Error::Parse(e.to_string()))?;
    writeln!(out, "{text}").map_err(io_error)
}

fn io_error(e: io::Error) -> Error {
    Error::Parse(format!("i/o: {e}"))
}

fn read_source(path: &PathBuf) -> Result<(String, String)> {
    if path.as_os_str() == "-" {
        let mut text = String::new();
        io::stdin().read_to_string(&mut text).map_err(io_error)?;
        return Ok(("-".into(), text));
    }
    let text =
        fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    Ok((path.display().to_string(), text))
}

/// A sequence literal, or a file whose first entry is taken.
fn sequence_arg(arg: &str) -> Result<FlipSequence> {
    let t = arg.trim_start();
    if t.starts_with('(') || t.starts_with("n=") {
        return parse_sequence(t);
    }
    let (_, text) = read_source(&PathBuf::from(arg))?;
    parse_sequence_file(&text)?
        .into_iter()
        .next()
        .map(|e| e.sequence)
        .ok_or_else(|| Error::Parse(format!("{arg}: no sequence found")))
}

fn emit_sequence(out: &mut dyn Write, seq: &FlipSequence, format: OutputFormat) -> Result<()> {
    match format {
        OutputFormat::Text => writeln!(out, "{}", format_sequence(seq)).map_err(io_error),
        OutputFormat::Json => json_line(out, &classify(seq)),
    }
}

fn verify(paths: &[PathBuf], out: &mut dyn Write) -> Result<bool> {
    let stdin = [PathBuf::from("-")];
    let paths = if paths.is_empty() { &stdin[..] } else { paths };
    let mut all_pass = true;
    for path in paths {
        let (source, text) = read_source(path)?;
        let entries = parse_sequence_file(&text)?;
        let records: Vec<VerifyRecord> = entries
            .par_iter()
            .map(|e| {
                let certificate = classify(&e.sequence);
                let mut problems = Vec::new();
                if !certificate.sorts {
                    problems.push(format!("does not sort -I_{}", certificate.n));
                }
                problems.extend(e.claims.check(&certificate));
                VerifyRecord {
                    source: source.clone(),
                    line: e.line,
                    pass: problems.is_empty(),
                    claims: e.claims.to_string(),
                    problems,
                    certificate,
                }
            })
            .collect();
        for r in &records {
            all_pass &= r.pass;
            json_line(out, r)?;
        }
    }
    Ok(all_pass)
}

/// Run a parsed command line, writing results to `out`. `Ok(false)` means
/// the command ran but a check failed.
pub fn run(cli: &Cli, out: &mut dyn Write) -> Result<bool> {
    match &cli.command {
        Command::Verify { paths } => verify(paths, out),
        Command::Gen { n, splice, format } => {
            let seq = if *splice {
                compose_route(*n).ok_or(Error::UnsupportedN(*n))??
            } else {
                generate(*n)?
            };
            emit_sequence(out, &seq, *format)?;
            Ok(true)
        }
        Command::Table { max, format } => {
            let certs = table(*max)?;
            let mut ok = true;
            for c in &certs {
                ok &= c.optimal() && c.failures.is_empty();
                match format {
                    OutputFormat::Text => {
                        writeln!(out, "{}", format_sequence(&c.sequence)).map_err(io_error)?
                    }
                    OutputFormat::Json => json_line(out, c)?,
                }
            }
            Ok(ok)
        }
        Command::Search(args) => {
            let outcome = search(args.mode(), args.n, &args.config()?)?;
            match args.format {
                OutputFormat::Text => {
                    for s in &outcome.sequences {
                        writeln!(out, "{}", format_sequence(s)).map_err(io_error)?;
                    }
                    writeln!(
                        out,
                        "# {} sequence(s), search {}",
                        outcome.sequences.len(),
                        if outcome.complete {
                            "complete"
                        } else {
                            "stopped by budget"
                        }
                    )
                    .map_err(io_error)?;
                }
                OutputFormat::Json => json_line(out, &outcome)?,
            }
            Ok(true)
        }
        Command::Compose {
            odd,
            inner,
            outer,
            format,
            ..
        } => {
            let (a, b) = (sequence_arg(inner)?, sequence_arg(outer)?);
            let seq = if *odd {
                compose_odd(&a, &b)?
            } else {
                compose_even(&a, &b)?
            };
            emit_sequence(out, &seq, *format)?;
            Ok(true)
        }
        Command::Oracle { n, state, format } => oracle(*n, state.as_deref(), *format, out),
        Command::Potential { stack, plate } => {
            let s = parse_stack(stack)?;
            write!(out, "{}", potential(&s, *plate).render(&s, *plate)).map_err(io_error)?;
            Ok(true)
        }
        Command::Extract { stack, format } => {
            let cp = Checkpoint::new(parse_stack(stack)?)?;
            emit_sequence(out, &extract(&cp)?, *format)?;
            Ok(true)
        }
    }
}

#[derive(Serialize)]
struct StateReport {
    n: usize,
    state: String,
    distance: u8,
    minimal_sequence: FlipSequence,
}

fn oracle(
    n: usize,
    state: Option<&str>,
    format: OutputFormat,
    out: &mut dyn Write,
) -> Result<bool> {
    if n == 0 || n > MAX_N {
        return Err(Error::OracleRange { n, max: MAX_N });
    }
    let table = god_table(n)?;
    if let Some(text) = state {
        let s = parse_stack(text)?;
        let report = StateReport {
            n,
            state: s.to_string(),
            distance: table.distance(&s)?,
            minimal_sequence: table.minimal_sequence(&s)?,
        };
        match format {
            OutputFormat::Text => writeln!(
                out,
                "g({}) = {}\nminimal {}",
                report.state,
                report.distance,
                format_sequence(&report.minimal_sequence)
            )
            .map_err(io_error)?,
            OutputFormat::Json => json_line(out, &report)?,
        }
        return Ok(true);
    }
    if n < 2 {
        return Err(Error::SizeTooSmall { n, min: 2 });
    }
    let r = check_identities(&table)?;
    match format {
        OutputFormat::Text => writeln!(
            out,
            "g(-I_{n}) = {}\ng(-f_{n}) = {}\nlower bound {}\ndiameter {}\ng(-I_n) = 1 + g(-f_n): {}\nbound respected: {}\nminimal {}",
            r.g_minus_identity,
            r.g_minus_reversal,
            r.lower_bound,
            table.diameter(),
            r.one_more_than_reversal,
            r.bound_respected,
            format_sequence(&r.minimal_sequence)
        )
        .map_err(io_error)?,
        OutputFormat::Json => json_line(out, &r)?,
    }
    Ok(r.holds())
}
