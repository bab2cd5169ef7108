//! The `relmatch` command line. Kept in the library so it can be tested
//! without spawning a process.
//!
//! Exit codes: 0 true / match found, 1 false / no match, 2 usage or input
//! error, 3 cap exceeded, 4 engine and oracle disagree.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::automaton::{ENfa, Symbol};
use crate::bench::{bench_scaling, BenchConfig};
use crate::closure::{condense, downward_automaton, upward_automaton};
use crate::error::Error;
use crate::matching::match_relation;
use crate::oracle::{brute_match, brute_quantitative, brute_universal};
use crate::quantitative::{quantitative_match, LengthAnswer, Mode};
use crate::regex::{compile, SymbolTable};
use crate::relation::RelationKind;
use crate::universal::{universal_bounded, DEFAULT_CAP};

pub const EXIT_TRUE: i32 = 0;
pub const EXIT_FALSE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_CAP: i32 = 3;
pub const EXIT_MISMATCH: i32 = 4;

#[derive(Debug, Parser)]
#[command(
    name = "relmatch",
    version,
    about = "Regex matching up to string relations"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Is some string related to the text accepted?
    Match {
        #[command(flatten)]
        query: Query,
        /// Cross-check against the brute-force oracle.
        #[arg(long)]
        oracle: bool,
        #[arg(long)]
        json: bool,
    },
    /// Shortest or longest accepted string related to the text.
    Quantify {
        #[command(flatten)]
        query: Query,
        #[arg(long, value_enum)]
        mode: ModeArg,
        #[arg(long)]
        oracle: bool,
        /// Accepted for symmetry; output is always JSON.
        #[arg(long)]
        json: bool,
    },
    /// Is every string related to the text accepted?
    Universal {
        #[command(flatten)]
        query: Query,
        /// Explored-state budget for the exponential cases.
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
        #[arg(long)]
        oracle: bool,
        #[arg(long)]
        json: bool,
    },
    /// Print an automaton in the text format.
    Compile {
        #[command(flatten)]
        source: Source,
        #[arg(long, value_enum, default_value_t = Emit::Nfa)]
        emit: Emit,
    },
    /// Time the linear matchers against the closure-automaton simulation
    /// and print CSV.
    Bench {
        /// Relation to benchmark; repeat for several. Default: both.
        #[arg(long = "relation")]
        relations: Vec<RelationKind>,
        /// Transitions in the generated automaton.
        #[arg(long, default_value_t = 1 << 14)]
        m: usize,
        #[arg(long, default_value_t = 8)]
        sigma: u32,
        /// Comma-separated text lengths.
        #[arg(long, value_delimiter = ',', default_values_t = [1 << 16, 1 << 17, 1 << 18, 1 << 19, 1 << 20])]
        w_lens: Vec<usize>,
        /// Comma-separated text lengths at which the baseline also runs.
        #[arg(long, value_delimiter = ',', default_values_t = [1 << 16])]
        baseline_w_lens: Vec<usize>,
        /// Baseline gives up after this multiple of the linear time.
        #[arg(long, default_value_t = 100)]
        baseline_budget: u32,
        #[arg(long, default_value_t = 9)]
        reps: usize,
        #[arg(long, default_value_t = 0x5eed)]
        seed: u64,
    },
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
struct Source {
    /// Regular expression.
    #[arg(long)]
    regex: Option<String>,
    /// Automaton file in the text format.
    #[arg(long)]
    nfa: Option<PathBuf>,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
struct TextSource {
    /// Text; with --nfa, whitespace-separated symbol numbers.
    #[arg(long, allow_hyphen_values = true)]
    text: Option<String>,
    /// File whose bytes are the text.
    #[arg(long)]
    file: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct Query {
    #[command(flatten)]
    source: Source,
    #[arg(long)]
    relation: RelationKind,
    #[command(flatten)]
    text: TextSource,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ModeArg {
    Min,
    Max,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Mode {
        match m {
            ModeArg::Min => Mode::Min,
            ModeArg::Max => Mode::Max,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Emit {
    Nfa,
    Upward,
    Downward,
    Condensed,
}

/// JSON shape printed by `quantify`.
#[derive(Debug, Serialize, PartialEq, Eq)]
pub struct QuantifyOutput {
    pub kind: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub length: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

/// How symbols are shown: characters through the regex symbol table, or
/// numbers for automata read from a file.
enum Alphabet {
    Chars(SymbolTable),
    Numbers,
}

impl Alphabet {
    fn show(&self, word: &[Symbol]) -> String {
        match self {
            Alphabet::Chars(table) => table.decode(word),
            Alphabet::Numbers => word
                .iter()
                .map(|a| a.to_string())
                .collect::<Vec<_>>()
                .join(" "),
        }
    }
}

struct Failure(String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure(e.to_string())
    }
}

fn load(source: &Source) -> Result<(ENfa, Alphabet), Failure> {
    if let Some(pattern) = &source.regex {
        let (nfa, table) = compile(pattern)?;
        return Ok((nfa, Alphabet::Chars(table)));
    }
    let path = source.nfa.as_ref().expect("clap enforces one source");
    let text =
        std::fs::read_to_string(path).map_err(|e| Failure(format!("{}: {e}", path.display())))?;
    Ok((ENfa::from_text(&text)?.trim(), Alphabet::Numbers))
}

fn read_text(text: &TextSource, alphabet: &mut Alphabet) -> Result<Vec<Symbol>, Failure> {
    if let Some(path) = &text.file {
        let bytes = std::fs::read(path).map_err(|e| Failure(format!("{}: {e}", path.display())))?;
        return Ok(match alphabet {
            // bytes as Latin-1 characters
            Alphabet::Chars(table) => bytes.iter().map(|&b| table.intern(char::from(b))).collect(),
            // byte b is symbol b + 1; 0 is reserved for ε
            Alphabet::Numbers => bytes.iter().map(|&b| Symbol::from(b) + 1).collect(),
        });
    }
    let text = text.text.as_deref().expect("clap enforces one text source");
    match alphabet {
        Alphabet::Chars(table) => Ok(table.encode(text)),
        Alphabet::Numbers => text
            .split_whitespace()
            .map(|tok| match tok.parse::<Symbol>() {
                Ok(a) if a > 0 => Ok(a),
                _ => Err(Failure(format!(
                    "bad symbol {tok:?} in --text; expected a positive integer"
                ))),
            })
            .collect(),
    }
}

fn quantify_output(answer: &LengthAnswer, alphabet: &Alphabet) -> QuantifyOutput {
    match answer {
        LengthAnswer::NoMatch => QuantifyOutput {
            kind: "no-match",
            length: None,
            witness: None,
        },
        LengthAnswer::Unbounded => QuantifyOutput {
            kind: "unbounded",
            length: None,
            witness: None,
        },
        LengthAnswer::Finite { length, witness } => QuantifyOutput {
            kind: "finite",
            length: Some(*length),
            witness: Some(alphabet.show(witness)),
        },
    }
}

fn print_bool(out: &mut dyn Write, value: bool, json: bool) -> std::io::Result<()> {
    if json {
        writeln!(out, "{{\"result\":{value}}}")
    } else {
        writeln!(out, "{value}")
    }
}

/// Parse `args` (including the program name) and execute. Returns the exit
/// code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                EXIT_USAGE
            } else {
                EXIT_TRUE
            };
            let rendered = e.render().to_string();
            if e.use_stderr() {
                // keep the diagnostic to its first line
                let first = rendered.lines().next().unwrap_or("error");
                let _ = writeln!(err, "{first}");
            } else {
                let _ = write!(out, "{rendered}");
            }
            return code;
        }
    };
    match execute(cli.command, out, err) {
        Ok(code) => code,
        Err(Failure(message)) => {
            let _ = writeln!(err, "error: {message}");
            EXIT_USAGE
        }
    }
}

fn execute(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, Failure> {
    let io = |e: std::io::Error| Failure(e.to_string());
    match command {
        Command::Match {
            query,
            oracle,
            json,
        } => {
            let (nfa, mut alphabet) = load(&query.source)?;
            let word = read_text(&query.text, &mut alphabet)?;
            let answer = match_relation(&nfa, &word, query.relation);
            if oracle {
                let expected = brute_match(&nfa, &word, query.relation);
                if expected != answer {
                    writeln!(err, "oracle mismatch: engine={answer} oracle={expected}")
                        .map_err(io)?;
                    return Ok(EXIT_MISMATCH);
                }
            }
            print_bool(out, answer, json).map_err(io)?;
            Ok(if answer { EXIT_TRUE } else { EXIT_FALSE })
        }
        Command::Quantify {
            query,
            mode,
            oracle,
            ..
        } => {
            let (nfa, mut alphabet) = load(&query.source)?;
            let word = read_text(&query.text, &mut alphabet)?;
            let mode = Mode::from(mode);
            let answer = quantitative_match(&nfa, &word, query.relation, mode);
            if oracle {
                let expected = brute_quantitative(&nfa, &word, query.relation, mode);
                if expected.length() != answer.length() || expected.is_match() != answer.is_match()
                {
                    writeln!(
                        err,
                        "oracle mismatch: engine={answer:?} oracle={expected:?}"
                    )
                    .map_err(io)?;
                    return Ok(EXIT_MISMATCH);
                }
            }
            let rendered = serde_json::to_string(&quantify_output(&answer, &alphabet))
                .map_err(|e| Failure(e.to_string()))?;
            writeln!(out, "{rendered}").map_err(io)?;
            Ok(if answer.is_match() {
                EXIT_TRUE
            } else {
                EXIT_FALSE
            })
        }
        Command::Universal {
            query,
            cap,
            oracle,
            json,
        } => {
            let (nfa, mut alphabet) = load(&query.source)?;
            let word = read_text(&query.text, &mut alphabet)?;
            let answer = universal_bounded(&nfa, &word, query.relation, cap);
            if oracle {
                let expected = brute_universal(&nfa, &word, query.relation);
                if let Ok(got) = answer {
                    if got != expected {
                        writeln!(err, "oracle mismatch: engine={got} oracle={expected}")
                            .map_err(io)?;
                        return Ok(EXIT_MISMATCH);
                    }
                }
            }
            match answer {
                Ok(value) => {
                    print_bool(out, value, json).map_err(io)?;
                    Ok(if value { EXIT_TRUE } else { EXIT_FALSE })
                }
                Err(_) => {
                    if json {
                        writeln!(out, "{{\"result\":\"cap-exceeded\"}}").map_err(io)?;
                    } else {
                        writeln!(out, "cap-exceeded").map_err(io)?;
                    }
                    Ok(EXIT_CAP)
                }
            }
        }
        Command::Compile { source, emit } => {
            let (nfa, _) = load(&source)?;
            let emitted = match emit {
                Emit::Nfa => nfa,
                Emit::Upward => upward_automaton(&nfa),
                Emit::Downward => downward_automaton(&nfa),
                Emit::Condensed => condense(&downward_automaton(&nfa)).condensed,
            };
            write!(out, "{}", emitted.to_text()).map_err(io)?;
            Ok(EXIT_TRUE)
        }
        Command::Bench {
            relations,
            m,
            sigma,
            w_lens,
            baseline_w_lens,
            baseline_budget,
            reps,
            seed,
        } => {
            if sigma < 2 {
                return Err(Failure("--sigma must be at least 2".into()));
            }
            if let Some(r) = relations
                .iter()
                .find(|r| !matches!(r, RelationKind::Subsequence | RelationKind::Supersequence))
            {
                return Err(Failure(format!("no linear engine to benchmark for {r}")));
            }
            let defaults = BenchConfig::default();
            let config = BenchConfig {
                relations: if relations.is_empty() {
                    defaults.relations
                } else {
                    relations
                },
                m,
                sigma,
                w_lens,
                repetitions: reps,
                seed,
                baseline_w_lens,
                baseline_budget,
            };
            let report = bench_scaling(&config);
            write!(out, "{}", report.to_csv()).map_err(io)?;
            write!(err, "{}", report.summary()).map_err(io)?;
            Ok(EXIT_TRUE)
        }
    }
}
