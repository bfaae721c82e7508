//! `monoconn`: emit extremal colourings as files, run the extraction
//! procedures on colouring files, query the exact oracle and the bounds
//! table, and search adversarially for colourings with a small answer.
//!
//! Exit codes: 0 success; 1 bad input (command line or file); 2 a documented
//! hypothesis of the operation fails on this input; 3 an internal invariant
//! was violated (a bug, never expected); 4 a resource guard refused.

use std::fs;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

use monoconn::constructions::{
    construct_affine, construct_bg, construct_bipartite_modular, construct_hamzero,
};
use monoconn::extractors::{
    extract_31kbip, extract_degs, extract_mader, extract_r11, extract_r1kbip,
    extract_thm21k_with, extract_thm31k, extract_thm_r1k, BipOutcome, ExtractionReport,
    ThresholdMode, Trace,
};
use monoconn::oracle::{
    adversarial_search, exact_m, theorem_bounds, InitKind, ObjectiveKind, SearchParams,
    DEFAULT_ORACLE_LIMIT,
};
use monoconn::{Error, Result, SubgraphWitness};

use monoconn_cli::format::{self, BipartiteFile, ColouringFile};
use monoconn_cli::report::Report;

#[derive(Parser)]
#[command(
    name = "monoconn",
    version,
    about = "Monochromatic k-connected subgraphs of edge-coloured complete graphs",
    propagate_version = true
)]
struct Cli {
    /// Emit reports as a JSON object instead of flat key-value lines.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Emit a named construction as a colouring file.
    #[command(subcommand)]
    Construct(ConstructCmd),
    /// Run an extraction procedure on a colouring file.
    Extract(ExtractArgs),
    /// Exact largest k-connected subgraph on at most s colours (small hosts).
    Oracle(OracleArgs),
    /// Closed-form lower and upper bounds with their sources.
    Bounds(BoundsArgs),
    /// Simulated-annealing search for a colouring with a small answer.
    Search(SearchArgs),
}

#[derive(Subcommand)]
enum ConstructCmd {
    /// Two-colour block colouring: no monochromatic k-connected subgraph
    /// beats n-2k+2 (none at all when n = 4k-4).
    Bg {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        /// Write the file here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Affine-plane colouring; requires r-1 a prime power.
    Affine {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Hamilton-path blow-up with no k-connected monochromatic subgraph.
    Hamzero {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Modular bipartite colouring with small monochromatic components.
    Bipmod {
        /// Left part size.
        #[arg(long)]
        m: usize,
        /// Right part size.
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    /// Minimum-degree dichotomy on two colours (order >= n-k+1).
    Degs,
    /// Full two-colour pipeline (order >= n-2k+2).
    Thm21k,
    /// Density core: a k-connected subgraph of one colour graph.
    Mader,
    /// Largest-component argument, k = 1, any number of colours.
    R11,
    /// Bipartite budget extraction: (ell+1)-connected on >= q vertices.
    R1kbip,
    /// Spanning extraction from a capped three-coloured bipartite pair.
    #[value(name = "31kbip")]
    Bip31k,
    /// Multicolour pipeline for r >= 3.
    Thmr1k,
    /// Three-colour pipeline for n >= 480k.
    Thm31k,
}

impl Method {
    fn name(self) -> &'static str {
        match self {
            Method::Degs => "degs",
            Method::Thm21k => "thm21k",
            Method::Mader => "mader",
            Method::R11 => "r11",
            Method::R1kbip => "r1kbip",
            Method::Bip31k => "31kbip",
            Method::Thmr1k => "thmr1k",
            Method::Thm31k => "thm31k",
        }
    }
}

#[derive(Args)]
struct ExtractArgs {
    /// Which extraction procedure to run.
    #[arg(value_enum)]
    method: Method,
    /// Colouring file: ECG, or ECGB for the bipartite methods.
    #[arg(long)]
    file: PathBuf,
    /// Connectivity target.
    #[arg(long, default_value_t = 1)]
    k: usize,
    /// Colour whose graph is used (mader, r1kbip).
    #[arg(long, default_value_t = 1)]
    colour: usize,
    /// Cut size for r1kbip; the subgraph is (ell+1)-connected.
    #[arg(long)]
    ell: Option<usize>,
    /// Order target for r1kbip.
    #[arg(long)]
    q: Option<usize>,
    /// Use the relaxed large-k threshold for thm21k.
    #[arg(long)]
    relaxed: bool,
}

#[derive(Args)]
struct OracleArgs {
    /// Complete-graph colouring file (ECG).
    #[arg(long)]
    file: PathBuf,
    /// Connectivity target.
    #[arg(long, default_value_t = 1)]
    k: usize,
    /// Colour budget.
    #[arg(long, default_value_t = 1)]
    s: usize,
    /// Raise the oracle's vertex cap (default 16, hard cap 64); the
    /// MONOCONN_ORACLE_LIMIT environment variable sets it too.
    #[arg(long)]
    limit: Option<usize>,
}

#[derive(Args)]
struct BoundsArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    r: usize,
    /// Colour budget.
    #[arg(long, default_value_t = 1)]
    s: usize,
    #[arg(long)]
    k: usize,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum InitArg {
    /// Seeded uniformly random colouring.
    Random,
    /// The two-colour block construction (requires r = 2).
    Blocks,
}

#[derive(Args)]
struct SearchArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    r: usize,
    /// Colour budget.
    #[arg(long, default_value_t = 1)]
    s: usize,
    #[arg(long)]
    k: usize,
    #[arg(long, default_value_t = 10_000)]
    iters: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Starting colouring.
    #[arg(long, value_enum, default_value_t = InitArg::Random)]
    init: InitArg,
    /// Write the best colouring found to this file.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Oracle vertex cap for the exact objective (see `oracle --limit`).
    #[arg(long)]
    limit: Option<usize>,
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            std::process::exit(code);
        }
    };
    match run(&cli) {
        Ok(()) => {}
        Err(err) => {
            eprintln!("{err}");
            std::process::exit(exit_code(&err));
        }
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parameter(_) => 1,
        Error::Hypothesis(_) => 2,
        Error::Internal(_) => 3,
        Error::Resource(_) => 4,
    }
}

fn run(cli: &Cli) -> Result<()> {
    match &cli.command {
        Command::Construct(cmd) => run_construct(cmd),
        Command::Extract(args) => run_extract(args, cli.json),
        Command::Oracle(args) => run_oracle(args, cli.json),
        Command::Bounds(args) => run_bounds(args, cli.json),
        Command::Search(args) => run_search(args, cli.json),
    }
}

fn emit(rep: &Report, json: bool) {
    if json {
        print!("{}", rep.json());
    } else {
        print!("{}", rep.text());
    }
}

fn write_out(path: Option<&PathBuf>, text: &str) -> Result<()> {
    match path {
        Some(p) => fs::write(p, text)
            .map_err(|e| Error::Parameter(format!("cannot write {}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn read_file(path: &PathBuf) -> Result<String> {
    fs::read_to_string(path)
        .map_err(|e| Error::Parameter(format!("cannot read {}: {e}", path.display())))
}

fn run_construct(cmd: &ConstructCmd) -> Result<()> {
    match cmd {
        ConstructCmd::Bg { n, k, out } => {
            let file = ColouringFile::from_construction(&construct_bg(*n, *k)?);
            write_out(out.as_ref(), &file.serialise())
        }
        ConstructCmd::Affine { n, r, k, out } => {
            let file = ColouringFile::from_construction(&construct_affine(*n, *r, *k)?);
            write_out(out.as_ref(), &file.serialise())
        }
        ConstructCmd::Hamzero { n, r, k, out } => {
            let file = ColouringFile::from_construction(&construct_hamzero(*n, *r, *k)?);
            write_out(out.as_ref(), &file.serialise())
        }
        ConstructCmd::Bipmod { m, n, r, out } => {
            let mut file = BipartiteFile::new(construct_bipartite_modular(*m, *n, *r)?);
            file.push_metadata("construction", "bipmod");
            file.push_metadata("parameters", &format!("m={m} n={n} r={r}"));
            write_out(out.as_ref(), &file.serialise())
        }
    }
}

fn check_colour_flag(colour: usize, r: usize) -> Result<()> {
    if colour < 1 || colour > r {
        return Err(Error::Parameter(format!(
            "--colour {colour} outside the file's colour range 1..={r}"
        )));
    }
    Ok(())
}

fn run_extract(args: &ExtractArgs, json: bool) -> Result<()> {
    let started = Instant::now();
    let text = read_file(&args.file)?;
    let mut rep = Report::new();
    rep.push("method", args.method.name());
    rep.push("file", args.file.display().to_string());

    match args.method {
        Method::R1kbip => {
            let file = format::parse_bipartite_file(&text)?;
            let b = &file.colouring;
            let ell = args
                .ell
                .ok_or_else(|| Error::Parameter("--ell is required for r1kbip".into()))?;
            let q = args
                .q
                .ok_or_else(|| Error::Parameter("--q is required for r1kbip".into()))?;
            check_colour_flag(args.colour, b.colour_count())?;
            rep.push("left", b.left_order() as u64);
            rep.push("right", b.right_order() as u64);
            rep.push("r", b.colour_count() as u64);
            rep.push("colour", args.colour as u64);
            rep.push("ell", ell as u64);
            rep.push("q", q as u64);
            let g = b.colour_graph(args.colour);
            let (left, right) = b.parts();
            match extract_r1kbip(&g, &left, &right, ell, q)? {
                BipOutcome::Subgraph(sub) => {
                    let witness = SubgraphWitness::new(
                        sub.vertices().to_vec(),
                        vec![args.colour as u8],
                        ell + 1,
                    );
                    let verified = witness.verify_bipartite(b);
                    let er = ExtractionReport { witness, guarantee: q, trace: Trace::new() };
                    finish_witness(rep, &er, verified, started, json)
                }
                BipOutcome::Refused { edges, budget } => Err(Error::Hypothesis(format!(
                    "edge count {edges} is within the budget {budget}; no subgraph is promised"
                ))),
            }
        }
        Method::Bip31k => {
            let file = format::parse_bipartite_file(&text)?;
            let b = &file.colouring;
            rep.push("left", b.left_order() as u64);
            rep.push("right", b.right_order() as u64);
            rep.push("r", b.colour_count() as u64);
            rep.push("k", args.k as u64);
            let er = extract_31kbip(b, args.k)?;
            let verified = er.witness.verify_bipartite(b);
            finish_witness(rep, &er, verified, started, json)
        }
        _ => {
            let file = format::parse_complete_file(&text)?;
            let f = &file.colouring;
            rep.push("n", f.order() as u64);
            rep.push("r", f.colour_count() as u64);
            rep.push("k", args.k as u64);
            let er = match args.method {
                Method::Degs => extract_degs(f, args.k)?,
                Method::Thm21k => {
                    let mode = if args.relaxed {
                        ThresholdMode::RemarkAlpha
                    } else {
                        ThresholdMode::Standard
                    };
                    extract_thm21k_with(f, args.k, mode)?
                }
                Method::Mader => {
                    check_colour_flag(args.colour, f.colour_count())?;
                    rep.push("colour", args.colour as u64);
                    let g = f.colour_graph(args.colour);
                    let sub = extract_mader(&g, args.k)?;
                    ExtractionReport {
                        witness: SubgraphWitness::new(
                            sub.vertices().to_vec(),
                            vec![args.colour as u8],
                            args.k,
                        ),
                        guarantee: args.k + 1,
                        trace: Trace::new(),
                    }
                }
                Method::R11 => {
                    if args.k != 1 {
                        return Err(Error::Parameter(format!(
                            "the component extractor handles k = 1 only, got k = {}",
                            args.k
                        )));
                    }
                    extract_r11(f)?
                }
                Method::Thmr1k => extract_thm_r1k(f, args.k)?,
                Method::Thm31k => extract_thm31k(f, args.k)?,
                Method::R1kbip | Method::Bip31k => unreachable!("handled above"),
            };
            let verified = er.witness.verify(f);
            finish_witness(rep, &er, verified, started, json)
        }
    }
}

/// Append the witness fields shared by every extraction report and print.
/// The verification flag is recomputed by the caller at emit time; a failed
/// recheck is an internal error, never a report.
fn finish_witness(
    mut rep: Report,
    er: &ExtractionReport,
    verified: bool,
    started: Instant,
    json: bool,
) -> Result<()> {
    if !verified {
        return Err(Error::Internal(
            "the emitted witness failed re-verification at emit time".into(),
        ));
    }
    rep.push("guarantee", er.guarantee as u64);
    rep.push("order", er.order() as u64);
    rep.push("witness_k", er.witness.k as u64);
    let colours: Vec<u64> = er.witness.colours.iter().map(|&c| c as u64).collect();
    rep.push("colours", colours);
    let vertices: Vec<u64> = er.witness.vertices.iter().map(|&v| v as u64).collect();
    rep.push("vertices", vertices);
    rep.push("verified", true);
    for (i, e) in er.trace.entries().iter().enumerate() {
        let mut line = format!("{}: {}", e.label, e.note);
        if let Some(vs) = &e.vertices {
            line.push_str(&format!(" [{} vertices]", vs.len()));
        }
        rep.push(format!("trace.{i}"), line);
    }
    rep.push("wall_ms", started.elapsed().as_millis() as u64);
    emit(&rep, json);
    Ok(())
}

fn effective_limit(flag: Option<usize>) -> Result<Option<usize>> {
    if flag.is_some() {
        return Ok(flag);
    }
    match std::env::var("MONOCONN_ORACLE_LIMIT") {
        Ok(raw) => {
            let v = raw.trim().parse::<usize>().map_err(|_| {
                Error::Parameter(format!(
                    "MONOCONN_ORACLE_LIMIT must be a vertex count, got {raw:?}"
                ))
            })?;
            Ok(Some(v))
        }
        Err(std::env::VarError::NotPresent) => Ok(None),
        Err(e) => Err(Error::Parameter(format!("MONOCONN_ORACLE_LIMIT: {e}"))),
    }
}

fn run_oracle(args: &OracleArgs, json: bool) -> Result<()> {
    let started = Instant::now();
    let text = read_file(&args.file)?;
    let file = format::parse_complete_file(&text)?;
    let f = &file.colouring;
    let limit = effective_limit(args.limit)?;
    let mut rep = Report::new();
    rep.push("file", args.file.display().to_string());
    rep.push("n", f.order() as u64);
    rep.push("r", f.colour_count() as u64);
    rep.push("s", args.s as u64);
    rep.push("k", args.k as u64);
    rep.push("limit", limit.unwrap_or(DEFAULT_ORACLE_LIMIT) as u64);
    let res = exact_m(f, args.s, args.k, limit)?;
    rep.push("value", res.value as u64);
    match &res.witness {
        Some(w) => {
            if !w.verify(f) {
                return Err(Error::Internal(
                    "the oracle witness failed re-verification at emit time".into(),
                ));
            }
            rep.push("order", w.order() as u64);
            let colours: Vec<u64> = w.colours.iter().map(|&c| c as u64).collect();
            rep.push("colours", colours);
            let vertices: Vec<u64> = w.vertices.iter().map(|&v| v as u64).collect();
            rep.push("vertices", vertices);
            rep.push("verified", true);
        }
        None => rep.push("witness", "none"),
    }
    rep.push("wall_ms", started.elapsed().as_millis() as u64);
    emit(&rep, json);
    Ok(())
}

fn run_bounds(args: &BoundsArgs, json: bool) -> Result<()> {
    let started = Instant::now();
    let row = theorem_bounds(args.n, args.r, args.s, args.k)?;
    let mut rep = Report::new();
    rep.push("n", row.n as u64);
    rep.push("r", row.r as u64);
    rep.push("s", row.s as u64);
    rep.push("k", row.k as u64);
    rep.push("lower", row.lower.value as u64);
    rep.push("lower_source", row.lower.source.as_str());
    rep.push("upper", row.upper.value as u64);
    rep.push("upper_source", row.upper.source.as_str());
    rep.push("exact", row.exact);
    for (i, c) in row.conjectures.iter().enumerate() {
        rep.push(format!("conjecture.{i}"), format!("{} ({})", c.value, c.source));
    }
    rep.push("wall_ms", started.elapsed().as_millis() as u64);
    emit(&rep, json);
    Ok(())
}

fn run_search(args: &SearchArgs, json: bool) -> Result<()> {
    let started = Instant::now();
    let mut params = SearchParams::new(args.n, args.r, args.s, args.k, args.iters, args.seed);
    params.init = match args.init {
        InitArg::Random => InitKind::Random,
        InitArg::Blocks => InitKind::TwoColourBlocks,
    };
    params.oracle_limit = effective_limit(args.limit)?;
    let outcome = adversarial_search(&params)?;
    let mut rep = Report::new();
    rep.push("n", args.n as u64);
    rep.push("r", args.r as u64);
    rep.push("s", args.s as u64);
    rep.push("k", args.k as u64);
    rep.push("iterations", outcome.iterations as u64);
    rep.push("seed", args.seed);
    rep.push(
        "init",
        match args.init {
            InitArg::Random => "random",
            InitArg::Blocks => "blocks",
        },
    );
    let objective = match outcome.objective {
        ObjectiveKind::Exact => "exact",
        ObjectiveKind::Surrogate => "surrogate",
    };
    rep.push("objective", objective);
    rep.push("best_value", outcome.best_value as u64);
    rep.push("evaluations", outcome.evaluations as u64);
    for (i, (iter, value)) in outcome.archive.iter().enumerate() {
        rep.push(format!("archive.{i}"), format!("{iter} {value}"));
    }
    if let Some(path) = &args.out {
        let mut file = ColouringFile::new(outcome.best.clone());
        file.push_metadata(
            "search",
            &format!(
                "n={} r={} s={} k={} iterations={} seed={}",
                args.n, args.r, args.s, args.k, args.iters, args.seed
            ),
        );
        file.push_metadata("objective", objective);
        file.push_metadata("bestValue", &outcome.best_value.to_string());
        write_out(Some(path), &file.serialise())?;
        rep.push("out", path.display().to_string());
    }
    rep.push("wall_ms", started.elapsed().as_millis() as u64);
    emit(&rep, json);
    Ok(())
}
