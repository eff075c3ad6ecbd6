//! `imbalance`: decide and realize tournament imbalance sets.
//!
//! Exit status: 0 yes/pass, 2 no/fail, 1 usage or parse error, 3 when a
//! resource cap is exceeded.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use imbalance_cli::format::{self, GraphFormat};
use imbalance_cli::literal::{join, parse_members, parse_sequence, parse_set};
use imbalance_core::equalsum::solve_esseq;
use imbalance_core::oracle::brute_min_order;
use imbalance_core::sequences::{
    digraph_imbalance_violation, landau_violation, tournament_imbalance_violation,
};
use imbalance_core::tis::{decide_tis_with, order_upper_bound_with, Construction};
use imbalance_core::{
    Error as CoreError, ImbalanceSequence, ImbalanceSet, ScoreSequence, TisDecision, TisOptions,
};
use serde_json::json;

const YES: u8 = 0;
const USAGE: u8 = 1;
const NO: u8 = 2;
const RESOURCE: u8 = 3;

#[derive(Parser)]
#[command(name = "imbalance", version, about = "Tournament imbalance sets")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether SET is the imbalance set of some tournament.
    Decide {
        #[arg(allow_hyphen_values = true)]
        set: String,
        #[arg(long)]
        json: bool,
        #[arg(long, default_value_t = TisOptions::default().max_n)]
        max_n: u64,
    },
    /// Write a tournament whose imbalance set is SET.
    Realize {
        #[arg(allow_hyphen_values = true)]
        set: String,
        #[arg(long, value_enum, default_value_t = GraphFormat::Dot)]
        format: GraphFormat,
        /// Destination file; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = TisOptions::default().max_n)]
        max_n: u64,
    },
    /// Check a score or imbalance sequence.
    Check {
        #[arg(allow_hyphen_values = true)]
        sequence: String,
        #[arg(long, value_enum, default_value_t = Mode::Tournament)]
        mode: Mode,
        #[arg(long)]
        json: bool,
    },
    /// Check that GRAPH is a tournament with imbalance set SET.
    Verify {
        graph: PathBuf,
        #[arg(allow_hyphen_values = true)]
        set: String,
        /// Input format; guessed from the contents when omitted.
        #[arg(long, value_enum)]
        format: Option<GraphFormat>,
    },
    /// Upper bound on the order of a tournament realizing SET.
    Bound {
        #[arg(allow_hyphen_values = true)]
        set: String,
        /// Also search exhaustively for the minimal order, up to this many vertices.
        #[arg(long)]
        budget: Option<usize>,
        #[arg(long, default_value_t = TisOptions::default().max_n)]
        max_n: u64,
    },
    /// Equal-sum sequences from X and Y, each element used at most K times.
    EqualSum {
        #[arg(allow_hyphen_values = true)]
        x: String,
        #[arg(allow_hyphen_values = true)]
        y: String,
        #[arg(long, default_value_t = 1)]
        k: u64,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    /// Nondecreasing score sequence.
    Landau,
    /// Nonincreasing imbalance sequence of a simple digraph.
    Digraph,
    /// Nonincreasing imbalance sequence of a tournament.
    Tournament,
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { USAGE } else { YES });
        }
    };
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            let resource = e
                .chain()
                .any(|c| matches!(c.downcast_ref(), Some(CoreError::ResourceCap { .. })));
            ExitCode::from(if resource { RESOURCE } else { USAGE })
        }
    }
}

fn run(command: Command) -> Result<u8> {
    match command {
        Command::Decide { set, json, max_n } => decide(&set, json, max_n),
        Command::Realize {
            set,
            format,
            out,
            max_n,
        } => realize(&set, format, out, max_n),
        Command::Check {
            sequence,
            mode,
            json,
        } => check(&sequence, mode, json),
        Command::Verify { graph, set, format } => verify(&graph, &set, format),
        Command::Bound { set, budget, max_n } => bound(&set, budget, max_n),
        Command::EqualSum { x, y, k, json } => equal_sum(&x, &y, k, json),
    }
}

fn read_set(literal: &str) -> Result<ImbalanceSet> {
    parse_set(literal).with_context(|| format!("cannot parse set `{literal}`"))
}

fn construction_name(c: &Construction) -> &'static str {
    match c {
        Construction::Single => "single-vertex",
        Construction::Odd => "odd",
        Construction::Apex => "apex",
        Construction::AddArcs(_) => "add-arcs",
    }
}

fn decide(literal: &str, as_json: bool, max_n: u64) -> Result<u8> {
    let z = read_set(literal)?;
    let decision = decide_tis_with(&z, &TisOptions { max_n })?;
    if as_json {
        let report = match &decision {
            TisDecision::Yes {
                certificate,
                construction,
            } => {
                let witness = match construction {
                    Construction::AddArcs(w) => {
                        json!({ "xs": w.xs, "ys": w.ys, "common_sum": w.common_sum })
                    }
                    _ => serde_json::Value::Null,
                };
                json!({
                    "set": z.members(),
                    "verdict": "yes",
                    "order": certificate.order(),
                    "construction": construction_name(construction),
                    "witness": witness,
                    "imbalance_sequence": certificate.imbalance_sequence().into_vec(),
                })
            }
            TisDecision::No { refusal } => json!({
                "set": z.members(),
                "verdict": "no",
                "refusal": refusal.as_str(),
            }),
        };
        println!("{report}");
    } else {
        match &decision {
            TisDecision::Yes { certificate, .. } => println!("yes, order {}", certificate.order()),
            TisDecision::No { refusal } => println!("no, {refusal}"),
        }
    }
    Ok(if decision.is_yes() { YES } else { NO })
}

fn realize(literal: &str, format: GraphFormat, out: Option<PathBuf>, max_n: u64) -> Result<u8> {
    let z = read_set(literal)?;
    let g = match decide_tis_with(&z, &TisOptions { max_n })? {
        TisDecision::Yes { certificate, .. } => certificate,
        TisDecision::No { refusal } => {
            eprintln!("{z} is not a tournament imbalance set: {refusal}");
            return Ok(NO);
        }
    };
    let document = format::emit(&g, format);
    let note = format!(
        "order {}; imbalance sequence {}",
        g.order(),
        join(g.imbalance_sequence().entries())
    );
    match out {
        Some(path) => {
            fs::write(&path, document)
                .with_context(|| format!("cannot write {}", path.display()))?;
            println!("{note}");
        }
        None => {
            print!("{document}");
            eprintln!("{note}");
        }
    }
    Ok(YES)
}

fn check(literal: &str, mode: Mode, as_json: bool) -> Result<u8> {
    let values =
        parse_sequence(literal).with_context(|| format!("cannot parse sequence `{literal}`"))?;
    let violation = match mode {
        Mode::Landau => {
            let s = ScoreSequence::new(values).map_err(|e| sort_hint(e, "nondecreasing"))?;
            landau_violation(&s)
        }
        Mode::Digraph | Mode::Tournament => {
            let t = ImbalanceSequence::new(values).map_err(|e| sort_hint(e, "nonincreasing"))?;
            if matches!(mode, Mode::Digraph) {
                digraph_imbalance_violation(&t)
            } else {
                tournament_imbalance_violation(&t)
            }
        }
    };
    if as_json {
        let report = match &violation {
            None => json!({ "result": "pass" }),
            Some(v) => json!({ "result": "fail", "reason": v.to_string() }),
        };
        println!("{report}");
    } else {
        match &violation {
            None => println!("pass"),
            Some(v) => println!("fail: {v}"),
        }
    }
    Ok(if violation.is_none() { YES } else { NO })
}

fn sort_hint(e: CoreError, order: &str) -> anyhow::Error {
    match e {
        CoreError::Unsorted(_) => {
            anyhow::anyhow!("sequence must be sorted {order}; sort it and try again")
        }
        other => other.into(),
    }
}

fn verify(path: &PathBuf, literal: &str, format: Option<GraphFormat>) -> Result<u8> {
    let z = read_set(literal)?;
    let text =
        fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
    let format = match format {
        Some(f) => f,
        None => format::detect(&text)?,
    };
    let raw =
        format::parse(&text, format).with_context(|| format!("cannot parse {}", path.display()))?;
    let g = match raw.build() {
        Ok(g) => g,
        Err(e) => {
            println!("fail: {e}");
            return Ok(NO);
        }
    };
    let n = g.order();
    if let Some((u, v)) = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .find(|&(u, v)| !g.is_joined(u, v))
    {
        println!("fail: missing pair {{{u}, {v}}}; not a tournament");
        return Ok(NO);
    }
    let actual = g.imbalance_set();
    if actual != z {
        println!("fail: imbalance set is {actual}, expected {z}");
        return Ok(NO);
    }
    println!("pass");
    Ok(YES)
}

fn bound(literal: &str, budget: Option<usize>, max_n: u64) -> Result<u8> {
    let z = read_set(literal)?;
    let upper = match order_upper_bound_with(&z, &TisOptions { max_n }) {
        Ok(b) => b,
        Err(CoreError::NotRealizable(refusal)) => {
            eprintln!("{z} is not a tournament imbalance set: {refusal}");
            return Ok(NO);
        }
        Err(e) => return Err(e.into()),
    };
    println!("{upper}");
    if let Some(budget) = budget {
        let limit = (upper as usize).min(budget);
        match brute_min_order(&z, limit) {
            Some(m) => println!("exact {m}"),
            None => println!("exact > {limit}"),
        }
    }
    Ok(YES)
}

fn equal_sum(x: &str, y: &str, k: u64, as_json: bool) -> Result<u8> {
    let xs = parse_members(x).with_context(|| format!("cannot parse set `{x}`"))?;
    let ys = parse_members(y).with_context(|| format!("cannot parse set `{y}`"))?;
    if k == 0 {
        bail!("--k must be at least 1");
    }
    let witness = solve_esseq(&xs, &ys, k)?;
    if as_json {
        let report = match &witness {
            Some(w) => json!({ "xs": w.xs, "ys": w.ys, "common_sum": w.common_sum }),
            None => serde_json::Value::Null,
        };
        println!("{report}");
    } else {
        match &witness {
            Some(w) => println!("[{}] / [{}]", join(&w.xs), join(&w.ys)),
            None => println!("none"),
        }
    }
    Ok(if witness.is_some() { YES } else { NO })
}
