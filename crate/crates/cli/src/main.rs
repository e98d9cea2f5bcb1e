//! `toric`: invariants of toric rings of bipartite graphs from the command line.
//!
//! Exit codes: 0 success, 1 usage or size guard, 2 domain error (not
//! bipartite, disconnected, invalid parameters), 3 internal error or a
//! verification counterexample.

mod family;
mod plot;

use std::collections::BTreeSet;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use toric_core::atlas::{
    cardinality_formula, cardinality_sum, computed_pairs, default_cache_dir, enumerate_connected_bipartite,
    theoretical_pairs, verify, VerifyOptions,
};
use toric_core::betti::{betti_table, invariants_from_betti};
use toric_core::graph::{parse_edge_list, parse_graph_json, GraphJson};
use toric_core::hilbert::analyze;
use toric_core::{Error, Graph, InvariantReport, MonomialOrder, OrderKind};

use family::Family;

#[derive(Parser)]
#[command(name = "toric", version, about = "Homological invariants of toric rings of bipartite graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print (reg, deg h, pdim, depth, dim) with the a-invariant and codegree.
    Invariants {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long, default_value = "degrevlex")]
        order: OrderKind,
        #[arg(long)]
        json: bool,
    },
    /// Print a member of a graph family as an edge list.
    Construct {
        #[arg(long)]
        family: Family,
        #[arg(long, num_args = 1.., required = true)]
        params: Vec<usize>,
        #[arg(long)]
        json: bool,
    },
    /// List one graph per isomorphism class of connected bipartite graphs.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        allow_large: bool,
        #[arg(long)]
        json: bool,
    },
    /// Check the realised (reg, pdim) pairs and per-graph properties for n.
    Verify(VerifyArgs),
    /// Evaluate the closed-form count of (reg, pdim) pairs.
    Count {
        #[arg(long)]
        n: usize,
    },
    /// Print the graded Betti table computed from Koszul homology.
    Betti {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long)]
        json: bool,
    },
    /// Write the (reg, pdim) scatter as SVG or CSV.
    Plot {
        #[arg(long)]
        n: usize,
        /// Output file ending in .svg or .csv.
        #[arg(long)]
        out: PathBuf,
        #[arg(long, value_enum, default_value_t = Source::Theoretical)]
        source: Source,
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(long)]
        allow_large: bool,
        #[arg(long)]
        no_cache: bool,
    },
}

#[derive(Args)]
struct GraphInput {
    /// Edge list (one "u v" pair per line) or a .json graph document.
    #[arg(long, conflicts_with = "family", required_unless_present = "family")]
    graph: Option<PathBuf>,
    #[arg(long)]
    family: Option<Family>,
    #[arg(long, num_args = 1.., requires = "family")]
    params: Vec<usize>,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long)]
    n: usize,
    /// Cross-check (reg, pdim) against Koszul homology on small graphs.
    #[arg(long)]
    with_betti_oracle: bool,
    /// Edge limit for the Betti oracle.
    #[arg(long, default_value_t = 8)]
    betti_max_edges: usize,
    #[arg(long)]
    jobs: Option<usize>,
    /// Lift the n <= 10 enumeration guard.
    #[arg(long)]
    allow_large: bool,
    /// Report path; defaults to verify-n<N>.json in the cache directory.
    #[arg(long)]
    report: Option<PathBuf>,
    #[arg(long)]
    no_cache: bool,
    /// Skip the lex versus degrevlex comparison.
    #[arg(long)]
    skip_lex: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Source {
    Computed,
    Theoretical,
}

enum Failure {
    Usage(String),
    Domain(String),
    Internal(String),
    Counterexample,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::SizeGuardExceeded(_) | Error::Io(_) => Failure::Usage(e.to_string()),
            e if e.is_domain() || matches!(e, Error::Json(_)) => Failure::Domain(e.to_string()),
            e => Failure::Internal(e.to_string()),
        }
    }
}

type CliResult = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(1)
        }
        Err(Failure::Domain(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
        Err(Failure::Internal(m)) => {
            eprintln!("internal error: {m}");
            ExitCode::from(3)
        }
        Err(Failure::Counterexample) => ExitCode::from(3),
    }
}

fn run(command: Command) -> CliResult {
    match command {
        Command::Invariants { input, order, json } => cmd_invariants(&input, order, json),
        Command::Construct { family, params, json } => {
            let g = family.build(&params)?;
            print!("{}", if json { g.to_json() + "\n" } else { g.to_edge_list() });
            Ok(())
        }
        Command::Enumerate { n, allow_large, json } => cmd_enumerate(n, allow_large, json),
        Command::Verify(args) => cmd_verify(&args),
        Command::Count { n } => {
            if n < 2 {
                return Err(Failure::Usage(format!("need n >= 2, got {n}")));
            }
            println!(
                "n={n}: formula {}, direct sum {}, theoretical set {}",
                cardinality_formula(n),
                cardinality_sum(n),
                theoretical_pairs(n).len()
            );
            Ok(())
        }
        Command::Betti { input, json } => cmd_betti(&input, json),
        Command::Plot { n, out, source, jobs, allow_large, no_cache } => {
            cmd_plot(n, &out, source, jobs, allow_large, no_cache)
        }
    }
}

fn load_graph(input: &GraphInput) -> Result<Graph, Failure> {
    if let Some(path) = &input.graph {
        let text = fs::read_to_string(path)
            .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
        let g = if path.extension().is_some_and(|e| e == "json") {
            parse_graph_json(&text)?
        } else {
            parse_edge_list(&text)?
        };
        return Ok(g);
    }
    let family = input.family.ok_or_else(|| Failure::Usage("--graph or --family is required".into()))?;
    Ok(family.build(&input.params)?)
}

fn cmd_invariants(input: &GraphInput, order: OrderKind, json: bool) -> CliResult {
    let g = load_graph(input)?;
    let analysis = analyze(&g, &MonomialOrder::new(order))?;
    let report = InvariantReport::new(&analysis.tuple, g.num_vertices());
    if json {
        println!("{}", serde_json::to_string_pretty(&report).expect("report serialises"));
    } else {
        println!("{}", analysis.tuple);
        println!("a-invariant: {}", report.a_invariant);
        println!("codegree: {}", report.codegree);
    }
    Ok(())
}

fn cmd_enumerate(n: usize, allow_large: bool, json: bool) -> CliResult {
    let classes = enumerate_connected_bipartite(n, allow_large)?;
    for class in &classes {
        if json {
            let doc = serde_json::json!({
                "code": class.code.to_hex(),
                "n": class.graph.num_vertices(),
                "edges": GraphJson::from(&class.graph).edges,
            });
            println!("{doc}");
        } else {
            let edges: Vec<String> = class.graph.edges().iter().map(|(u, v)| format!("{u}-{v}")).collect();
            println!("{} {}", class.code, edges.join(" "));
        }
    }
    if !json {
        println!("# {} classes", classes.len());
    }
    Ok(())
}

fn with_jobs<T: Send>(jobs: Option<usize>, f: impl FnOnce() -> T + Send) -> Result<T, Failure> {
    match jobs {
        None => Ok(f()),
        Some(0) => Err(Failure::Usage("--jobs must be positive".into())),
        Some(j) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(j)
                .build()
                .map_err(|e| Failure::Internal(e.to_string()))?;
            Ok(pool.install(f))
        }
    }
}

fn cmd_verify(args: &VerifyArgs) -> CliResult {
    let cache = default_cache_dir();
    let opts = VerifyOptions {
        lex_check: !args.skip_lex,
        monotonicity: true,
        betti_max_edges: args.with_betti_oracle.then_some(args.betti_max_edges),
        allow_large: args.allow_large,
        cache_dir: (!args.no_cache).then(|| cache.clone()),
    };
    let report = with_jobs(args.jobs, || verify(args.n, &opts))??;
    let path = args.report.clone().unwrap_or_else(|| cache.join(format!("verify-n{}.json", args.n)));
    write_file(&path, &report.to_json())?;
    println!("{}", report.summary());
    println!("report: {}", path.display());
    if !report.corrupted_cache_lines.is_empty() {
        eprintln!("warning: skipped corrupted cache lines {:?}", report.corrupted_cache_lines);
    }
    if report.success() {
        return Ok(());
    }
    for f in report.failures.iter().take(10) {
        eprintln!("counterexample {} [{}]: {}", f.code, f.property, f.detail);
    }
    Err(Failure::Counterexample)
}

fn cmd_betti(input: &GraphInput, json: bool) -> CliResult {
    let g = load_graph(input)?;
    let t = analyze(&g, &MonomialOrder::default())?.tuple;
    let table = betti_table(&g, t.reg, t.pdim)?;
    let (reg, pdim) = invariants_from_betti(&table);
    if json {
        println!("{}", table.to_json());
    } else {
        println!("{table}");
        println!("reg {reg}, pdim {pdim} (Hilbert route: reg {}, pdim {})", t.reg, t.pdim);
    }
    if (reg, pdim) != (t.reg, t.pdim) || !table.guard_clean() {
        return Err(Failure::Internal("Betti table disagrees with the Hilbert route".into()));
    }
    Ok(())
}

fn cmd_plot(
    n: usize,
    out: &Path,
    source: Source,
    jobs: Option<usize>,
    allow_large: bool,
    no_cache: bool,
) -> CliResult {
    let ext = out.extension().and_then(|e| e.to_str()).unwrap_or("");
    if ext != "svg" && ext != "csv" {
        return Err(Failure::Usage(format!("--out must end in .svg or .csv, got {}", out.display())));
    }
    if n < 2 {
        return Err(Failure::Usage(format!("need n >= 2, got {n}")));
    }
    let points: BTreeSet<(usize, usize)> = match source {
        Source::Theoretical => theoretical_pairs(n),
        Source::Computed => {
            let opts = VerifyOptions {
                allow_large,
                cache_dir: (!no_cache).then(default_cache_dir),
                ..Default::default()
            };
            with_jobs(jobs, || computed_pairs(n, &opts))??
        }
    };
    let body = if ext == "svg" { plot::to_svg(n, &points) } else { plot::to_csv(&points) };
    write_file(out, &body)?;
    let (r, p) = plot::max_point(&points).unwrap_or((0, 0));
    println!("{} points, max point ({r},{p})", points.len());
    println!("wrote {}", out.display());
    Ok(())
}

fn write_file(path: &Path, body: &str) -> CliResult {
    if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
        fs::create_dir_all(dir)
            .map_err(|e| Failure::Usage(format!("cannot create {}: {e}", dir.display())))?;
    }
    fs::write(path, body).map_err(|e| Failure::Usage(format!("cannot write {}: {e}", path.display())))
}
