//! The `refa` command line.
//!
//! Inputs are taken as a file path if one exists (automaton JSON when the
//! text starts with `{`, an expression otherwise), then as a family such as
//! `buffer:6` or `random:8:2`, then as an expression.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::automaton::{
    distinguishing_word, minimize, subset_construction, Automaton, MinimizeMode,
};
use crate::construct::{construct_position, Method};
use crate::convert::{
    arden_solve, mcnaughton_yamada, state_elimination, state_elimination_raw, Ordering,
};
use crate::error::{Error, Result};
use crate::graph::{
    cycle_rank, star_height_bideterministic, underlying_digraph, undirected_cycle_rank,
    DEFAULT_BUDGET,
};
use crate::regex::{render_unicode, RegEx};
use crate::toolkit::{
    bench_constructions, bench_orderings, default_construction_families, random_dfa, summarize,
    write_csv, Family, OrderingBenchConfig,
};

#[derive(Parser, Debug)]
#[command(
    name = "refa",
    version,
    about = "Regular expression and automaton conversions"
)]
struct Cli {
    /// Seed for everything random.
    #[arg(long, global = true, env = "REFA_SEED", default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Expression to automaton.
    Convert {
        input: String,
        #[arg(long, default_value = "pos")]
        to: Method,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        /// Determinize and minimize the result.
        #[arg(long)]
        minimize: bool,
    },
    /// Automaton to expression.
    Toregex {
        input: String,
        #[arg(long, value_enum, default_value_t = ToRegexMethod::Eliminate)]
        method: ToRegexMethod,
        /// Elimination ordering: fixed:<ids>, greedy, dm, cycles, indep or bridge.
        #[arg(long, default_value = "dm")]
        order: Ordering,
        /// Pivot ranking for mny, as comma separated ids; defaults to descending ids.
        #[arg(long, value_delimiter = ',')]
        ranking: Option<Vec<usize>>,
        /// Recompute the ordering measure after each elimination (on/off).
        #[arg(long)]
        recompute: Option<bool>,
        #[arg(long)]
        no_simplify: bool,
        /// Print λ and ∅ instead of & and #.
        #[arg(long)]
        unicode: bool,
    },
    /// Size measures of an expression or automaton.
    Measure {
        input: String,
        #[arg(long)]
        json: bool,
    },
    /// Language equivalence, with a shortest witness when they differ.
    Equiv { left: String, right: String },
    /// Witness families and random automata.
    Gen {
        /// buffer:n, options:n, growth:row:n[:m], hypercube:d, torus:m:n or random:n:k.
        family: String,
        #[arg(long, value_enum)]
        format: Option<GenFormat>,
    },
    /// Benchmarks written as CSV.
    Bench(BenchArgs),
    /// Cycle rank of the underlying digraph, or star height.
    Rank {
        input: String,
        /// Star height of a bideterministic language.
        #[arg(long, conflicts_with = "undirected")]
        star_height: bool,
        /// Cycle rank of the symmetric closure.
        #[arg(long)]
        undirected: bool,
        /// Largest strongly connected component searched exactly.
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: usize,
    },
}

#[derive(Args, Debug)]
struct BenchArgs {
    #[arg(value_enum)]
    kind: BenchKind,
    /// Families for `constructions`; defaults to the built-in table.
    #[arg(long = "family")]
    families: Vec<Family>,
    #[arg(long, default_value_t = 8)]
    states: usize,
    #[arg(long, default_value_t = 2)]
    alphabet: usize,
    #[arg(long, default_value_t = 100)]
    samples: usize,
    /// Record wall time in microseconds.
    #[arg(long)]
    timing: bool,
    /// Write the CSV here instead of standard output.
    #[arg(long, short)]
    output: Option<PathBuf>,
    /// Print a per-method ranking to standard error.
    #[arg(long)]
    summary: bool,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Json,
    Dot,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum GenFormat {
    Regex,
    Json,
    Dot,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ToRegexMethod {
    Eliminate,
    Arden,
    Mny,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum BenchKind {
    Constructions,
    Orderings,
}

enum Input {
    Regex(RegEx),
    Automaton(Automaton),
    Both(RegEx, Automaton),
}

impl Input {
    fn load(text: &str, seed: u64) -> Result<Input> {
        let path = std::path::Path::new(text);
        if path.is_file() {
            let body = std::fs::read_to_string(path)?;
            return if body.trim_start().starts_with('{') {
                Ok(Input::Automaton(Automaton::from_json(&body)?))
            } else {
                Ok(Input::Regex(body.trim().parse()?))
            };
        }
        if let Some(rest) = text.strip_prefix("random:") {
            let (n, k) = parse_random(rest)?;
            return Ok(Input::Automaton(random_dfa(n, k, seed)));
        }
        if let Ok(f) = text.parse::<Family>() {
            let g = f.generate()?;
            return Ok(match (g.regex, g.automaton) {
                (Some(r), Some(a)) => Input::Both(r, a),
                (Some(r), None) => Input::Regex(r),
                (None, Some(a)) => Input::Automaton(a),
                (None, None) => unreachable!("families provide something"),
            });
        }
        Ok(Input::Regex(text.parse()?))
    }

    fn regex(self) -> Result<RegEx> {
        match self {
            Input::Regex(r) | Input::Both(r, _) => Ok(r),
            Input::Automaton(_) => Err(Error::InvalidArgument(
                "expected an expression, got an automaton".into(),
            )),
        }
    }

    /// Expressions are turned into their position automaton.
    fn automaton(self) -> Automaton {
        match self {
            Input::Automaton(a) | Input::Both(_, a) => a,
            Input::Regex(r) => construct_position(&r),
        }
    }
}

fn parse_random(rest: &str) -> Result<(usize, usize)> {
    let bad = || Error::InvalidFamily(format!("expected random:n:k, got 'random:{rest}'"));
    let (n, k) = rest.split_once([':', ',']).ok_or_else(bad)?;
    let n: usize = n.parse().map_err(|_| bad())?;
    let k: usize = k.parse().map_err(|_| bad())?;
    if n == 0 || k == 0 {
        return Err(bad());
    }
    Ok((n, k))
}

fn show(r: &RegEx, unicode: bool) -> String {
    if unicode {
        render_unicode(r)
    } else {
        r.to_string()
    }
}

/// Parses `args` (program name first) and runs the command, writing to
/// `out`. Returns 0 on success, 1 on domain errors and 2 on usage errors.
pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            if code == 0 {
                let _ = write!(out, "{text}");
            } else {
                let _ = write!(err, "{text}");
            }
            return code;
        }
    };
    match execute(cli, out, err) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
    }
}

pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    run_with(
        args,
        &mut std::io::stdout().lock(),
        &mut std::io::stderr().lock(),
    )
}

fn execute(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<()> {
    let seed = cli.seed;
    match cli.command {
        Command::Convert {
            input,
            to,
            format,
            minimize: min,
        } => {
            let r = Input::load(&input, seed)?.regex()?;
            let mut a = to.build(&r)?;
            if min {
                a = minimize(&subset_construction(&a), MinimizeMode::Partial)?;
            }
            match format {
                Format::Json => writeln!(out, "{}", a.to_json())?,
                Format::Dot => write!(out, "{}", a.to_dot())?,
            }
        }
        Command::Toregex {
            input,
            method,
            order,
            ranking,
            recompute,
            no_simplify,
            unicode,
        } => {
            let a = Input::load(&input, seed)?.automaton();
            let r = match method {
                ToRegexMethod::Eliminate => {
                    let o = match recompute {
                        Some(on) => order.with_recompute(on),
                        None => order,
                    };
                    if no_simplify {
                        state_elimination_raw(&a, &o)?
                    } else {
                        state_elimination(&a, &o)?
                    }
                }
                ToRegexMethod::Arden => arden_solve(&a)?,
                ToRegexMethod::Mny => {
                    let ranking = ranking.unwrap_or_else(|| (0..a.num_states()).rev().collect());
                    mcnaughton_yamada(&a, &ranking)?
                }
            };
            writeln!(out, "{}", show(&r, unicode))?;
        }
        Command::Measure { input, json } => match Input::load(&input, seed)? {
            Input::Regex(r) | Input::Both(r, _) => {
                let m = r.measures();
                if json {
                    let v = serde_json::json!({
                        "size": m.size, "rpn": m.rpn, "awidth": m.awidth, "height": m.height,
                    });
                    writeln!(out, "{v}")?;
                } else {
                    writeln!(out, "size {}", m.size)?;
                    writeln!(out, "rpn {}", m.rpn)?;
                    writeln!(out, "awidth {}", m.awidth)?;
                    writeln!(out, "height {}", m.height)?;
                }
            }
            Input::Automaton(a) => {
                let m = a.fa_measures();
                let class = if a.is_complete_deterministic() {
                    "complete-dfa"
                } else if a.is_partial_deterministic() {
                    "partial-dfa"
                } else if a.is_lambda_free() {
                    "nfa"
                } else {
                    "lambda-nfa"
                };
                if json {
                    let v = serde_json::json!({
                        "states": m.states, "transitions": m.transitions,
                        "size": m.size(), "class": class,
                    });
                    writeln!(out, "{v}")?;
                } else {
                    writeln!(out, "states {}", m.states)?;
                    writeln!(out, "transitions {}", m.transitions)?;
                    writeln!(out, "size {}", m.size())?;
                    writeln!(out, "class {class}")?;
                }
            }
        },
        Command::Equiv { left, right } => {
            let a = Input::load(&left, seed)?.automaton();
            let b = Input::load(&right, seed)?.automaton();
            match distinguishing_word(&a, &b) {
                None => writeln!(out, "equivalent")?,
                Some(w) => {
                    let sigma: Vec<_> = a.alphabet().union(b.alphabet()).cloned().collect();
                    let in_a = a.with_alphabet(&sigma).accepts(&w)?;
                    let in_b = b.with_alphabet(&sigma).accepts(&w)?;
                    assert_ne!(in_a, in_b, "witness must separate the languages");
                    writeln!(out, "inequivalent: {w}")?;
                }
            }
        }
        Command::Gen { family, format } => {
            let input = Input::load_family(&family, seed)?;
            match (format, input) {
                (None | Some(GenFormat::Regex), Input::Regex(r) | Input::Both(r, _)) => {
                    writeln!(out, "{r}")?
                }
                (Some(GenFormat::Regex), Input::Automaton(_)) => {
                    return Err(Error::InvalidArgument(format!(
                        "{family} has no expression form"
                    )))
                }
                (Some(GenFormat::Dot), input) => write!(out, "{}", input.automaton().to_dot())?,
                (_, input) => writeln!(out, "{}", input.automaton().to_json())?,
            }
        }
        Command::Bench(args) => {
            let rows = match args.kind {
                BenchKind::Constructions => {
                    let families = if args.families.is_empty() {
                        default_construction_families()
                    } else {
                        args.families.clone()
                    };
                    bench_constructions(&families, args.timing)?
                }
                BenchKind::Orderings => bench_orderings(&OrderingBenchConfig {
                    states: args.states,
                    alphabet: args.alphabet,
                    samples: args.samples,
                    seed,
                    timing: args.timing,
                })?,
            };
            match &args.output {
                Some(path) => write_csv(&rows, std::fs::File::create(path)?)?,
                None => write_csv(&rows, &mut *out)?,
            }
            if args.summary {
                for s in summarize(&rows) {
                    writeln!(
                        err,
                        "{:<12} runs {:>5}  median awidth {:>7.1}  mean awidth {:>8.2}  median height {:>4.1}",
                        s.method, s.runs, s.median_awidth, s.mean_awidth, s.median_height
                    )?;
                }
            }
        }
        Command::Rank {
            input,
            star_height,
            undirected,
            budget,
        } => {
            let a = Input::load(&input, seed)?.automaton();
            let k = if star_height {
                star_height_bideterministic(&a)?
            } else if undirected {
                undirected_cycle_rank(&underlying_digraph(&a), budget)?
            } else {
                cycle_rank(&underlying_digraph(&a), budget)?
            };
            writeln!(out, "{k}")?;
        }
    }
    Ok(())
}

impl Input {
    fn load_family(text: &str, seed: u64) -> Result<Input> {
        if !text.starts_with("random:") {
            text.parse::<Family>()?;
        }
        Input::load(text, seed)
    }
}
