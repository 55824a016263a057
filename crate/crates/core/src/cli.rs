//! Command line front end.
//!
//! Exit codes: 0 on success (including a Cyclic verdict), 2 when a tensor
//! check comes back Unknown, 1 on any error.

use crate::braid::{apply_word, check_automorphism, check_braid_relation};
use crate::cyclicity::{check_tensor, full_table, fundamental_set, kr_set, KrFactor, Verdict};
use crate::json;
use crate::lie::{make_lie_datum, Family, LieDatum, LieType};
use crate::ratfun::random_tuple;
use crate::rational::GaussRat;
use crate::weyl::{longest_word, WeylWord};
use crate::{Error, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "drinfeld", version, about = "Braid group action on Drinfeld data and cyclicity tables")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct TypeArgs {
    /// Lie family: A, B, C, D, E6, E7, E8, F4, G2
    #[arg(long)]
    family: Family,
    /// Rank, required for A/B/C/D, fixed for the exceptional families
    #[arg(long)]
    rank: Option<usize>,
}

impl TypeArgs {
    fn datum(&self) -> Result<LieDatum> {
        let rank = match (self.rank, self.family.fixed_rank()) {
            (Some(r), _) => r,
            (None, Some(r)) => r,
            (None, None) => {
                return Err(Error::Parse(format!(
                    "--rank is required for family {}",
                    self.family.name()
                )))
            }
        };
        make_lie_datum(LieType::new(self.family, rank)?)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Markdown,
}

#[derive(Subcommand)]
enum Command {
    /// Print the Cartan matrix, symmetrizers and node numbering
    Cartan(TypeArgs),
    /// Print the reduced word for the longest Weyl group element
    W0(TypeArgs),
    /// Apply a braid word to a tuple
    Braid {
        #[command(subcommand)]
        command: BraidCommand,
    },
    /// Randomized verification of structural identities
    Verify {
        #[command(subcommand)]
        command: VerifyCommand,
    },
    /// Compute failure sets S(b1, b2)
    Sets {
        #[command(subcommand)]
        command: SetsCommand,
    },
    /// Cyclicity checks for tensor products
    Check {
        #[command(subcommand)]
        command: CheckCommand,
    },
    /// The full rank-by-rank table of fundamental failure sets
    Tables {
        #[command(flatten)]
        ty: TypeArgs,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        /// Reduced word to use instead of the built-in longest word;
        /// inline letters ("1 2 1") or a file path
        #[arg(long)]
        word: Option<String>,
        /// Worker threads for the per-pair set computations
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
}

#[derive(Subcommand)]
enum BraidCommand {
    /// T_w applied right-to-left to the given tuple
    Apply {
        #[command(flatten)]
        ty: TypeArgs,
        /// Braid word: inline letters ("1 2 1") or a file path
        #[arg(long)]
        word: String,
        /// Tuple as inline JSON or a file path
        #[arg(long)]
        tuple: String,
    },
}

#[derive(Subcommand)]
enum VerifyCommand {
    /// Braid relations and the automorphism property on random tuples
    Braid {
        #[command(flatten)]
        ty: TypeArgs,
        #[arg(long, default_value_t = 100)]
        iters: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Subcommand)]
enum SetsCommand {
    /// S(b1, b2) for a pair of fundamental representations
    Fundamental {
        #[command(flatten)]
        ty: TypeArgs,
        #[arg(long)]
        b1: usize,
        #[arg(long)]
        b2: usize,
        #[arg(long)]
        word: Option<String>,
    },
    /// The failure set for a pair of Kirillov-Reshetikhin modules
    Kr {
        #[command(flatten)]
        ty: TypeArgs,
        #[arg(long)]
        b1: usize,
        #[arg(long)]
        m1: u32,
        #[arg(long)]
        b2: usize,
        #[arg(long)]
        m2: u32,
        #[arg(long)]
        word: Option<String>,
    },
}

#[derive(Subcommand)]
enum CheckCommand {
    /// Sufficiency test for an ordered tensor product of KR modules.
    /// Factors are "node:base:length" triples separated by commas, with
    /// bases written as exact rationals like "3/2" or "1/2+1i".
    Tensor {
        #[command(flatten)]
        ty: TypeArgs,
        #[arg(long)]
        factors: String,
        #[arg(long)]
        word: Option<String>,
    },
}

fn parse_word_arg(datum: &LieDatum, raw: &str) -> Result<WeylWord> {
    let inline: std::result::Result<Vec<usize>, _> = raw
        .split(|c: char| c.is_whitespace() || c == ',')
        .filter(|s| !s.is_empty())
        .map(str::parse::<usize>)
        .collect();
    let letters = match inline {
        Ok(letters) if !letters.is_empty() => letters,
        _ => {
            let text = std::fs::read_to_string(raw)
                .map_err(|e| Error::Parse(format!("cannot read word from {raw}: {e}")))?;
            text.split(|c: char| c.is_whitespace() || c == ',')
                .filter(|s| !s.is_empty())
                .map(str::parse::<usize>)
                .collect::<std::result::Result<_, _>>()
                .map_err(|e| Error::Parse(format!("bad letter in {raw}: {e}")))?
        }
    };
    WeylWord::new(datum, letters)
}

fn resolve_word(datum: &LieDatum, word: &Option<String>) -> Result<WeylWord> {
    match word {
        Some(raw) => {
            let w = parse_word_arg(datum, raw)?;
            if !crate::weyl::is_reduced(datum, &w) {
                return Err(Error::NotReduced {
                    reason: "the supplied word is not a reduced expression".into(),
                });
            }
            if w.len() != datum.lie_type().positive_root_count() {
                return Err(Error::NotReduced {
                    reason: format!(
                        "word length {} does not match the number of positive roots {}",
                        w.len(),
                        datum.lie_type().positive_root_count()
                    ),
                });
            }
            Ok(w)
        }
        None => longest_word(datum),
    }
}

fn parse_tuple_arg(datum: &LieDatum, raw: &str) -> Result<crate::ratfun::RationalTuple> {
    let text = if raw.trim_start().starts_with('{') {
        raw.to_string()
    } else {
        std::fs::read_to_string(raw)
            .map_err(|e| Error::Parse(format!("cannot read tuple from {raw}: {e}")))?
    };
    let value: serde_json::Value =
        serde_json::from_str(&text).map_err(|e| Error::Parse(format!("bad tuple JSON: {e}")))?;
    json::tuple_from_json(datum, &value)
}

fn parse_factors(raw: &str) -> Result<Vec<KrFactor>> {
    raw.split(',')
        .filter(|s| !s.trim().is_empty())
        .map(|part| {
            let fields: Vec<&str> = part.trim().split(':').collect();
            if fields.len() != 3 {
                return Err(Error::Parse(format!(
                    "factor {part:?} is not of the form node:base:length"
                )));
            }
            Ok(KrFactor {
                node: fields[0]
                    .parse()
                    .map_err(|e| Error::Parse(format!("bad node in {part:?}: {e}")))?,
                base: fields[1].parse::<GaussRat>()?,
                length: fields[2]
                    .parse()
                    .map_err(|e| Error::Parse(format!("bad length in {part:?}: {e}")))?,
            })
        })
        .collect()
}

/// The full table with the pairs split across a bounded worker pool.
/// Output order is row-major in (b1, b2) regardless of the worker count.
fn parallel_table(
    datum: &LieDatum,
    w0: &WeylWord,
    jobs: usize,
) -> Result<Vec<((usize, usize), crate::cyclicity::CyclicitySet)>> {
    if jobs <= 1 {
        return full_table(datum, w0);
    }
    let l = datum.rank();
    let pairs: Vec<(usize, usize)> = (1..=l)
        .flat_map(|b1| (1..=l).map(move |b2| (b1, b2)))
        .collect();
    let results = std::thread::scope(|scope| {
        let handles: Vec<_> = pairs
            .chunks(pairs.len().div_ceil(jobs))
            .map(|chunk| {
                scope.spawn(move || {
                    chunk
                        .iter()
                        .map(|&(b1, b2)| Ok(((b1, b2), fundamental_set(datum, w0, b1, b2)?)))
                        .collect::<Result<Vec<_>>>()
                })
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("table worker panicked"))
            .collect::<Result<Vec<_>>>()
    })?;
    Ok(results.into_iter().flatten().collect())
}

fn emit(value: &serde_json::Value) {
    println!("{}", serde_json::to_string_pretty(value).expect("json output"));
}

fn run_command(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Cartan(ty) => {
            let datum = ty.datum()?;
            emit(&json::cartan_json(&datum));
        }
        Command::W0(ty) => {
            let datum = ty.datum()?;
            let w0 = longest_word(&datum)?;
            emit(&serde_json::json!({
                "family": datum.lie_type().family().name(),
                "rank": datum.rank(),
                "numbering": datum.numbering_tag(),
                "length": w0.len(),
                "letters": w0.letters(),
            }));
        }
        Command::Braid {
            command: BraidCommand::Apply { ty, word, tuple },
        } => {
            let datum = ty.datum()?;
            let w = parse_word_arg(&datum, &word)?;
            let t = parse_tuple_arg(&datum, &tuple)?;
            emit(&json::tuple_to_json(&apply_word(&datum, &w, &t)?));
        }
        Command::Verify {
            command: VerifyCommand::Braid { ty, iters, seed },
        } => {
            let datum = ty.datum()?;
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut checked = 0u64;
            for _ in 0..iters {
                let p = random_tuple(&mut rng, &datum, 3);
                let q = random_tuple(&mut rng, &datum, 3);
                for i in 1..=datum.rank() {
                    if !check_automorphism(&datum, i, &p, &q)? {
                        return Err(Error::Parse(format!(
                            "automorphism property failed at node {i} on {p:?}, {q:?}"
                        )));
                    }
                    for j in (i + 1)..=datum.rank() {
                        checked += 1;
                        if !check_braid_relation(&datum, i, j, &p)? {
                            return Err(Error::Parse(format!(
                                "braid relation ({i},{j}) failed on {p:?}"
                            )));
                        }
                    }
                }
            }
            emit(&serde_json::json!({
                "family": datum.lie_type().family().name(),
                "rank": datum.rank(),
                "iters": iters,
                "seed": seed,
                "relations_checked": checked,
                "ok": true,
            }));
        }
        Command::Sets { command } => match command {
            SetsCommand::Fundamental { ty, b1, b2, word } => {
                let datum = ty.datum()?;
                let w0 = resolve_word(&datum, &word)?;
                let set = fundamental_set(&datum, &w0, b1, b2)?;
                emit(&json::set_json(&datum, &w0, b1, b2, &set));
            }
            SetsCommand::Kr {
                ty,
                b1,
                m1,
                b2,
                m2,
                word,
            } => {
                let datum = ty.datum()?;
                let w0 = resolve_word(&datum, &word)?;
                let set = kr_set(&datum, &w0, b1, m1, b2, m2)?;
                emit(&serde_json::json!({
                    "family": datum.lie_type().family().name(),
                    "rank": datum.rank(),
                    "numbering": datum.numbering_tag(),
                    "b1": b1, "m1": m1, "b2": b2, "m2": m2,
                    "values": json::set_values_json(&set),
                }));
            }
        },
        Command::Check {
            command: CheckCommand::Tensor { ty, factors, word },
        } => {
            let datum = ty.datum()?;
            let w0 = resolve_word(&datum, &word)?;
            let factors = parse_factors(&factors)?;
            let cert = check_tensor(&datum, &w0, &factors)?;
            emit(&json::certificate_json(&cert));
            if cert.verdict == Verdict::Unknown {
                return Ok(ExitCode::from(2));
            }
        }
        Command::Tables {
            ty,
            format,
            word,
            jobs,
        } => {
            let datum = ty.datum()?;
            let w0 = resolve_word(&datum, &word)?;
            let table = parallel_table(&datum, &w0, jobs.max(1))?;
            match format {
                Format::Json => emit(&json::table_json(&datum, &w0, &table)),
                Format::Markdown => print!("{}", json::table_markdown(&datum, &w0, &table)),
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

pub fn run() -> ExitCode {
    let cli = Cli::parse();
    match run_command(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}
