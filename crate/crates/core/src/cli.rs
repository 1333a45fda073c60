//! Command-line driver.
//!
//! Subcommands: `std-basis` (reduce generators to the standard basis),
//! `invariants` (full invariant report), `check-gapset` (three independent
//! gapset deciders), `count` (gapset counts by multiplicity and genus, with
//! optional checkpointing), and `export-dag` (DOT/JSON extension DAG).
//!
//! Exit codes: 0 success or positive verdict, 1 negative verdict, 2 usage
//! or input error, 3 resource limit, 4 I/O error. `GAPSET_WORKERS` and
//! `GAPSET_NODE_CAP` provide defaults that explicit flags override.

use std::collections::BTreeMap;
use std::env;
use std::fs::{self, File};
use std::io::{self, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use serde::Serialize;

use crate::check::{is_gapset, realize_fundamental_gaps, sum_closure_witness};
use crate::error::{Error, Result};
use crate::ext_nat::ExtNat;
use crate::extension::{
    count_table, read_frontier, with_pool, write_frontier, CountTable, EnumConfig, LevelFrontier,
    DEFAULT_NODE_CAP, MAX_COUNT_GENUS,
};
use crate::dag::{export_dag, DagFormat};
use crate::gapset::Gapset;
use crate::generators::GeneratorSet;
use crate::report::invariant_report;
use crate::stdbasis::{generator_minima, standard_basis_traced};

const WORKERS_ENV: &str = "GAPSET_WORKERS";
const NODE_CAP_ENV: &str = "GAPSET_NODE_CAP";

#[derive(Parser)]
#[command(
    name = "gapset",
    version,
    about = "Numerical semigroup gapsets: standard bases, invariants, recognition, enumeration"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Reduce a generator list to the standard basis of class-wise minima.
    #[command(name = "std-basis")]
    StdBasis {
        /// Positive generators of the monoid.
        #[arg(required = true)]
        generators: Vec<u64>,
        /// Emit the basis as JSON instead of text.
        #[arg(long)]
        json: bool,
        /// Show each fixpoint pass and replacement.
        #[arg(long, short)]
        verbose: bool,
    },
    /// Report every invariant of the generated monoid.
    Invariants {
        /// Positive generators of the monoid.
        #[arg(required = true)]
        generators: Vec<u64>,
        /// Emit the report as JSON instead of text.
        #[arg(long)]
        json: bool,
    },
    /// Decide whether a finite set is the gapset of a numerical semigroup.
    #[command(name = "check-gapset")]
    CheckGapset {
        /// Candidate gap values; an empty list denotes the empty gapset.
        elements: Vec<u64>,
        /// Emit the verdicts as JSON instead of text.
        #[arg(long)]
        json: bool,
    },
    /// Tabulate gapset counts by multiplicity up to a genus bound.
    Count {
        /// Largest genus to count.
        g_max: u64,
        /// Emit JSON instead of CSV.
        #[arg(long)]
        json: bool,
        /// Worker threads for enumeration (default: shared global pool).
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        workers: Option<u64>,
        /// Abort when a frontier exceeds this many nodes.
        #[arg(long = "node-cap", value_parser = clap::value_parser!(u64).range(1..))]
        node_cap: Option<u64>,
        /// Persist one frontier checkpoint per multiplicity here and resume
        /// from matching files.
        #[arg(long = "checkpoint-dir")]
        checkpoint_dir: Option<PathBuf>,
        /// Write the table to a file instead of standard output.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Write the extension DAG of one multiplicity down to a genus bound.
    #[command(name = "export-dag")]
    ExportDag {
        /// Multiplicity (at least 2).
        m: u64,
        /// Deepest genus level to include (at least m − 1).
        g_max: u64,
        /// Emit Graphviz DOT (the default).
        #[arg(long, conflicts_with = "json")]
        dot: bool,
        /// Emit JSON instead of DOT.
        #[arg(long)]
        json: bool,
        /// Abort when a level exceeds this many nodes.
        #[arg(long = "node-cap", value_parser = clap::value_parser!(u64).range(1..))]
        node_cap: Option<u64>,
        /// Write the document to a file instead of standard output.
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

/// Runs the CLI and returns the process exit code.
pub fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    let outcome = match cli.command {
        Command::StdBasis {
            generators,
            json,
            verbose,
        } => cmd_std_basis(&generators, json, verbose),
        Command::Invariants { generators, json } => cmd_invariants(&generators, json),
        Command::CheckGapset { elements, json } => cmd_check_gapset(&elements, json),
        Command::Count {
            g_max,
            json,
            workers,
            node_cap,
            checkpoint_dir,
            output,
        } => cmd_count(
            g_max,
            json,
            workers,
            node_cap,
            checkpoint_dir.as_deref(),
            output.as_deref(),
        ),
        Command::ExportDag {
            m,
            g_max,
            dot: _,
            json,
            node_cap,
            output,
        } => cmd_export_dag(m, g_max, json, node_cap, output.as_deref()),
    };
    match outcome {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            2
        }
        Err(Failure::Domain(e)) => {
            eprintln!("error: {e}");
            match e {
                Error::ResourceLimit(_) => 3,
                Error::Io(_) => 4,
                _ => 2,
            }
        }
    }
}

/// CLI-level failure: either a usage problem detected by the driver itself
/// or an error from the library.
enum Failure {
    Usage(String),
    Domain(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

type CmdResult = std::result::Result<i32, Failure>;

fn env_u64(name: &str) -> std::result::Result<Option<u64>, Failure> {
    match env::var(name) {
        Ok(raw) => raw
            .trim()
            .parse::<u64>()
            .map(Some)
            .map_err(|_| Failure::Usage(format!("{name} must be an unsigned integer, got {raw:?}"))),
        Err(env::VarError::NotPresent) => Ok(None),
        Err(env::VarError::NotUnicode(_)) => {
            Err(Failure::Usage(format!("{name} holds non-unicode data")))
        }
    }
}

/// Flag beats environment beats default; zero is rejected for both knobs.
fn resolve_knob(
    flag: Option<u64>,
    env_name: &str,
    default: u64,
) -> std::result::Result<u64, Failure> {
    if let Some(v) = flag {
        return Ok(v);
    }
    match env_u64(env_name)? {
        Some(0) => Err(Failure::Usage(format!("{env_name} must be at least 1"))),
        Some(v) => Ok(v),
        None => Ok(default),
    }
}

fn open_sink(path: Option<&Path>) -> Result<Box<dyn Write>> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(File::create(p)?)),
        None => Box::new(io::stdout().lock()),
    })
}

fn braced(values: &[u64]) -> String {
    let body = values
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(", ");
    format!("{{{body}}}")
}

#[derive(Serialize)]
struct BasisDoc<'a> {
    m: u64,
    heads: &'a [ExtNat],
}

fn cmd_std_basis(raw: &[u64], json: bool, verbose: bool) -> CmdResult {
    let gens = GeneratorSet::new(raw).map_err(Failure::Domain)?;
    let (basis, trace) = standard_basis_traced(&gens)?;
    let gcd = basis.gcd();
    if gcd > 1 {
        eprintln!(
            "warning: gcd = {gcd} > 1; the monoid is not numerical and infinite entries appear as inf"
        );
    }
    if json {
        let doc = BasisDoc {
            m: basis.modulus(),
            heads: basis.heads(),
        };
        println!(
            "{}",
            serde_json::to_string(&doc)
                .map_err(|e| Error::Internal(format!("JSON serialization failed: {e}")))?
        );
        return Ok(0);
    }
    if verbose {
        let start = generator_minima(&gens)?;
        println!("H_0 = {start}");
        for pass in 1..=trace.iterations {
            let in_pass: Vec<_> = trace.updates.iter().filter(|u| u.pass == pass).collect();
            if in_pass.is_empty() {
                println!("pass {pass}: no updates");
            } else {
                println!("pass {pass}:");
                for u in in_pass {
                    println!(
                        "  h_{} + h_{} = {} -> h_{} (was {})",
                        u.i, u.j, u.new, u.class, u.old
                    );
                }
            }
        }
    }
    println!("H = {basis}");
    Ok(0)
}

fn cmd_invariants(raw: &[u64], json: bool) -> CmdResult {
    let gens = GeneratorSet::new(raw).map_err(Failure::Domain)?;
    let report = invariant_report(&gens)?;
    if json {
        println!(
            "{}",
            serde_json::to_string(&report)
                .map_err(|e| Error::Internal(format!("JSON serialization failed: {e}")))?
        );
        return Ok(0);
    }
    let heads: Vec<String> = report.heads.iter().map(|h| h.to_string()).collect();
    println!("H = [{}]", heads.join(", "));
    println!("m = {}", report.multiplicity);
    println!("gcd = {}", report.gcd);
    println!("genus = {}", report.genus);
    match report.frobenius {
        Some(f) => println!("F = {f}"),
        None => println!("F = none"),
    }
    match report.pf_search_bound {
        Some(bound) => println!("PF (x <= {bound}) = {}", braced(&report.pseudo_frobenius)),
        None => println!("PF = {}", braced(&report.pseudo_frobenius)),
    }
    println!("PF* classes = {}", braced(&report.pf_star_classes));
    if let Some(fg) = &report.fundamental_gaps {
        println!("fundamental gaps = {}", braced(fg));
    }
    Ok(0)
}

#[derive(Serialize)]
struct CheckDoc<'a> {
    is_gapset: bool,
    m: u64,
    heads: &'a [ExtNat],
    head_conditions: bool,
    sum_closure: bool,
    sum_witness: Option<(u64, u64)>,
    gap_realization: bool,
}

fn cmd_check_gapset(elements: &[u64], json: bool) -> CmdResult {
    let set = Gapset::new(elements).map_err(Failure::Domain)?;
    let heads = set.head_set();
    let by_heads = is_gapset(elements)?;
    let witness = sum_closure_witness(elements)?;
    let by_sums = witness.is_none();
    let by_realization = match realize_fundamental_gaps(&set.fundamental_gaps())? {
        Some(realized) => realized == set,
        None => false,
    };
    if by_heads != by_sums || by_sums != by_realization {
        return Err(Failure::Domain(Error::Internal(format!(
            "decider disagreement: heads={by_heads} sums={by_sums} realization={by_realization}"
        ))));
    }
    if json {
        let doc = CheckDoc {
            is_gapset: by_heads,
            m: heads.modulus(),
            heads: heads.heads(),
            head_conditions: by_heads,
            sum_closure: by_sums,
            sum_witness: witness,
            gap_realization: by_realization,
        };
        println!(
            "{}",
            serde_json::to_string(&doc)
                .map_err(|e| Error::Internal(format!("JSON serialization failed: {e}")))?
        );
    } else {
        println!("{}", if by_heads { "yes" } else { "no" });
        println!("H = {heads}");
        println!("head conditions: {}", if by_heads { "yes" } else { "no" });
        match witness {
            None => println!("sum closure: yes"),
            Some((x, y)) => println!("sum closure: no (witness: {x} + {y} = {})", x + y),
        }
        println!(
            "gap realization: {}",
            if by_realization { "yes" } else { "no" }
        );
    }
    Ok(if by_heads { 0 } else { 1 })
}

#[derive(Serialize)]
struct CountDoc<'a> {
    g_max: u64,
    totals: &'a [u64],
    counts: Vec<[u64; 3]>,
}

fn render_count_csv(table: &CountTable) -> String {
    let g_max = table.g_max();
    let mut out = String::from("g");
    for m in 2..=g_max + 1 {
        out.push_str(&format!(",m={m}"));
    }
    out.push_str(",total\n");
    for g in 0..=g_max {
        out.push_str(&g.to_string());
        for m in 2..=g_max + 1 {
            out.push(',');
            if let Some(n) = table.count(m, g) {
                out.push_str(&n.to_string());
            }
        }
        out.push_str(&format!(",{}\n", table.totals()[g as usize]));
    }
    out
}

fn render_count_json(table: &CountTable) -> Result<String> {
    let doc = CountDoc {
        g_max: table.g_max(),
        totals: table.totals(),
        counts: table.iter().map(|(m, g, n)| [m, g, n]).collect(),
    };
    let mut text = serde_json::to_string(&doc)
        .map_err(|e| Error::Internal(format!("JSON serialization failed: {e}")))?;
    text.push('\n');
    Ok(text)
}

fn cmd_count(
    g_max: u64,
    json: bool,
    workers_flag: Option<u64>,
    node_cap_flag: Option<u64>,
    checkpoint_dir: Option<&Path>,
    output: Option<&Path>,
) -> CmdResult {
    let workers = resolve_knob(workers_flag, WORKERS_ENV, 0)?;
    let node_cap = resolve_knob(node_cap_flag, NODE_CAP_ENV, DEFAULT_NODE_CAP)?;
    let cfg = EnumConfig {
        node_cap,
        workers: usize::try_from(workers).unwrap_or(usize::MAX),
    };
    let table = match checkpoint_dir {
        None => count_table(g_max, &cfg)?,
        Some(dir) => count_table_checkpointed(g_max, &cfg, dir)?,
    };
    let text = if json {
        render_count_json(&table)?
    } else {
        render_count_csv(&table)
    };
    let mut sink = open_sink(output)?;
    sink.write_all(text.as_bytes()).map_err(Error::Io)?;
    sink.flush().map_err(Error::Io)?;
    Ok(0)
}

fn cmd_export_dag(
    m: u64,
    g_max: u64,
    json: bool,
    node_cap_flag: Option<u64>,
    output: Option<&Path>,
) -> CmdResult {
    let node_cap = resolve_knob(node_cap_flag, NODE_CAP_ENV, DEFAULT_NODE_CAP)?;
    let cfg = EnumConfig {
        node_cap,
        workers: 0,
    };
    let format = if json { DagFormat::Json } else { DagFormat::Dot };
    let mut sink = open_sink(output)?;
    let stats = export_dag(m, g_max, format, &cfg, &mut sink)?;
    sink.flush().map_err(Error::Io)?;
    eprintln!("exported {} nodes, {} edges", stats.nodes, stats.edges);
    Ok(0)
}

fn frontier_path(dir: &Path, m: u64) -> PathBuf {
    dir.join(format!("frontier-m{m}.txt"))
}

fn history_path(dir: &Path, m: u64) -> PathBuf {
    dir.join(format!("counts-m{m}.csv"))
}

/// Writes both checkpoint files through a temporary-then-rename step so a
/// crash never leaves a half-written file under the final name.
fn persist_checkpoint(
    frontier: &LevelFrontier,
    history: &[(u64, u64)],
    dir: &Path,
    m: u64,
) -> Result<()> {
    let target = frontier_path(dir, m);
    let tmp = dir.join(format!("frontier-m{m}.txt.tmp"));
    {
        let mut w = BufWriter::new(File::create(&tmp)?);
        write_frontier(frontier, &mut w)?;
        w.flush()?;
    }
    fs::rename(&tmp, &target)?;

    let target = history_path(dir, m);
    let tmp = dir.join(format!("counts-m{m}.csv.tmp"));
    {
        let mut w = BufWriter::new(File::create(&tmp)?);
        for (g, n) in history {
            writeln!(w, "{g},{n}")?;
        }
        w.flush()?;
    }
    fs::rename(&tmp, &target)?;
    Ok(())
}

/// Loads and cross-validates one multiplicity's checkpoint pair.
fn load_checkpoint(dir: &Path, m: u64) -> Result<(LevelFrontier, Vec<(u64, u64)>)> {
    let frontier = read_frontier(&mut BufReader::new(File::open(frontier_path(dir, m))?))?;
    if frontier.multiplicity() != m {
        return Err(Error::CorruptCheckpoint(format!(
            "frontier file for m={m} holds multiplicity {}",
            frontier.multiplicity()
        )));
    }
    let text = fs::read_to_string(history_path(dir, m))?;
    let mut history: Vec<(u64, u64)> = Vec::new();
    for line in text.lines() {
        if line.trim().is_empty() {
            continue;
        }
        let parsed = line
            .split_once(',')
            .and_then(|(g, n)| Some((g.trim().parse::<u64>().ok()?, n.trim().parse::<u64>().ok()?)));
        match parsed {
            Some(pair) => history.push(pair),
            None => {
                return Err(Error::CorruptCheckpoint(format!(
                    "bad count line {line:?} for m={m}"
                )))
            }
        }
    }
    let valid = history.first().is_some_and(|&(g, n)| g == m - 1 && n == 1)
        && history.windows(2).all(|w| w[1].0 == w[0].0 + 1)
        && history
            .last()
            .is_some_and(|&(g, n)| g == frontier.genus() && n == frontier.len() as u64);
    if !valid {
        return Err(Error::CorruptCheckpoint(format!(
            "count history for m={m} does not match its frontier"
        )));
    }
    Ok((frontier, history))
}

/// `count_table` with per-multiplicity persistence: each level finished is
/// written to the checkpoint directory, and matching files short-circuit
/// the work already done.
fn count_table_checkpointed(g_max: u64, cfg: &EnumConfig, dir: &Path) -> Result<CountTable> {
    if g_max > MAX_COUNT_GENUS {
        return Err(Error::ResourceLimit(format!(
            "count table to genus {g_max} exceeds the supported maximum {MAX_COUNT_GENUS}"
        )));
    }
    fs::create_dir_all(dir)?;
    with_pool(cfg, || {
        let mut counts = BTreeMap::new();
        for m in 2..=g_max + 1 {
            let have_frontier = frontier_path(dir, m).exists();
            let have_history = history_path(dir, m).exists();
            let (mut frontier, mut history) = match (have_frontier, have_history) {
                (true, true) => load_checkpoint(dir, m)?,
                (false, false) => {
                    let frontier = LevelFrontier::root_level(m)?;
                    let history = vec![(m - 1, 1u64)];
                    persist_checkpoint(&frontier, &history, dir, m)?;
                    (frontier, history)
                }
                _ => {
                    return Err(Error::CorruptCheckpoint(format!(
                        "checkpoint pair for m={m} is incomplete"
                    )))
                }
            };
            while frontier.genus() < g_max {
                frontier = frontier.advance(cfg)?;
                history.push((frontier.genus(), frontier.len() as u64));
                persist_checkpoint(&frontier, &history, dir, m)?;
            }
            for &(g, n) in &history {
                if g <= g_max {
                    counts.insert((m, g), n);
                }
            }
        }
        CountTable::from_parts(g_max, counts)
    })
}
