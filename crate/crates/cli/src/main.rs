use std::fs::File;
use std::io::{self, BufReader, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use bisectlab::bisection::find_k_bisection;
use bisectlab::cyperm::{build_cpg, build_gp, two_bisection_cpg, CpgError, CpgSpec};
use bisectlab::enumerate::enumerate_cubic_with_ceiling;
use bisectlab::families::{three_bisection_t, FamilySpec};
use bisectlab::scan::{read_graph6_lines, run_scan, Property, ScanBudget};
use bisectlab::{write_graph6, CubicGraph};
use clap::{Args, Parser, Subcommand};
use thiserror::Error;

#[derive(Parser)]
#[command(name = "bisectlab", version, about = "Bisections and colourings of cubic graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a property over many graphs and report failures per order.
    Scan(ScanArgs),
    /// List cubic graphs of one order as graph6.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        connected: bool,
        #[arg(long, default_value_t = 20)]
        ceiling: usize,
    },
    /// 2-bisection of the cycle permutation graph C(n, p).
    Cpg {
        /// Comma-separated permutation of 0..n.
        #[arg(long, value_delimiter = ',', required = true)]
        perm: Vec<usize>,
    },
    /// 2-bisection of the generalised Petersen graph GP(n, k).
    Gp {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
    },
    /// Print a named graph or family member as graph6.
    Family {
        #[arg(long)]
        name: String,
        #[arg(long, value_delimiter = ',')]
        params: Vec<usize>,
        /// For T: also print the 3-bisection with isomorphic parts.
        #[arg(long)]
        colouring: bool,
    },
}

#[derive(Args)]
struct ScanArgs {
    /// graph6 file, one graph per line ("-" for stdin).
    #[arg(long = "in", conflicts_with = "enumerate", required_unless_present = "enumerate")]
    input: Option<PathBuf>,
    /// Generate all cubic graphs of even order up to N.
    #[arg(long)]
    enumerate: Option<usize>,
    #[arg(long, default_value_t = 4)]
    min_order: usize,
    /// Only connected graphs when enumerating.
    #[arg(long)]
    connected: bool,
    #[arg(long)]
    property: String,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long, env = "BISECTLAB_THREADS")]
    threads: Option<usize>,
    /// Per-graph wall-clock cap.
    #[arg(long)]
    budget_ms: Option<u64>,
    /// Whole-scan wall-clock cap.
    #[arg(long)]
    budget_s: Option<u64>,
    /// Writes PREFIX.csv, PREFIX.conn.csv, PREFIX.json and PREFIX.g6.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Stop at the first malformed input line.
    #[arg(long)]
    strict: bool,
    /// Largest order the enumerator accepts.
    #[arg(long, default_value_t = 20)]
    ceiling: usize,
}

#[derive(Debug, Error)]
enum CliError {
    #[error(transparent)]
    Lib(#[from] bisectlab::Error),
    #[error(transparent)]
    Cpg(#[from] CpgError),
    #[error("{0}: {1}")]
    Io(String, io::Error),
    #[error("{0}")]
    Usage(String),
}

fn io_err(what: impl Into<String>) -> impl FnOnce(io::Error) -> CliError {
    let what = what.into();
    move |e| CliError::Io(what, e)
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

fn run(cmd: Command) -> Result<ExitCode, CliError> {
    let mut out = io::stdout().lock();
    match cmd {
        Command::Scan(args) => return scan(args),
        Command::Enumerate { n, connected, ceiling } => {
            for g in enumerate_cubic_with_ceiling(n, connected, ceiling)? {
                writeln!(out, "{}", write_graph6(g.as_simple())).map_err(io_err("stdout"))?;
            }
        }
        Command::Cpg { perm } => {
            let spec = CpgSpec::new(perm)?;
            print_cpg(&mut out, &spec)?;
        }
        Command::Gp { n, k } => {
            let g = build_gp(n, k)?;
            match CpgSpec::from_gp(n, k) {
                Ok(spec) => print_cpg(&mut out, &spec)?,
                // Not a cycle permutation graph: fall back to the general solver.
                Err(_) => {
                    writeln!(out, "graph6 {}", write_graph6(g.as_simple())).map_err(io_err("stdout"))?;
                    match find_k_bisection(&g, 2) {
                        Some(w) => writeln!(out, "method search\nbisection {}", w.bisection.letters()),
                        None => writeln!(out, "no 2-bisection"),
                    }
                    .map_err(io_err("stdout"))?;
                }
            }
        }
        Command::Family { name, params, colouring } => {
            let spec = FamilySpec::parse(&name, &params)?;
            let g = spec.build()?;
            writeln!(out, "{}", write_graph6(&g)).map_err(io_err("stdout"))?;
            if colouring {
                if !name.eq_ignore_ascii_case("t") || params.len() != 3 {
                    return Err(CliError::Usage("--colouring needs --name T with three parameters".into()));
                }
                let c = three_bisection_t(params[0], params[1], params[2]);
                writeln!(out, "{}", c.letters()).map_err(io_err("stdout"))?;
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

/// The vertex order of the bisection is the one of `C(n, p)`: outer cycle
/// `0..n`, then the inner cycle.
fn print_cpg(out: &mut impl Write, spec: &CpgSpec) -> Result<(), CliError> {
    writeln!(out, "graph6 {}", write_graph6(build_cpg(spec).as_simple())).map_err(io_err("stdout"))?;
    let r = two_bisection_cpg(spec)?;
    writeln!(out, "method {:?}\nbisection {}", r.method, r.bisection.letters()).map_err(io_err("stdout"))?;
    Ok(())
}

fn scan(args: ScanArgs) -> Result<ExitCode, CliError> {
    let property = Property::parse(&args.property, args.k)?;
    let graphs = load(&args, &property)?;
    let budget = ScanBudget {
        per_graph: args.budget_ms.map(Duration::from_millis),
        total: args.budget_s.map(Duration::from_secs),
    };
    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(t) = args.threads {
        pool = pool.num_threads(t);
    }
    let pool = pool.build().map_err(|e| CliError::Usage(e.to_string()))?;
    let report = pool.install(|| run_scan(&graphs, property, budget));

    print!("{}", report.to_csv());
    if let Some(prefix) = &args.out {
        let write = |ext: &str, body: String| {
            let mut path = prefix.clone().into_os_string();
            path.push(ext);
            std::fs::write(&path, body).map_err(io_err(path.to_string_lossy()))
        };
        write(".csv", report.to_csv())?;
        write(".conn.csv", report.connectivity_csv())?;
        write(".json", report.to_json())?;
        write(".g6", report.witness_lines())?;
    }
    Ok(if report.inconclusive() > 0 { ExitCode::from(2) } else { ExitCode::SUCCESS })
}

fn load(args: &ScanArgs, property: &Property) -> Result<Vec<CubicGraph>, CliError> {
    if let Some(n) = args.enumerate {
        let mut gs = Vec::new();
        let start = args.min_order.max(4).next_multiple_of(2);
        for m in (start..=n).step_by(2).filter(|&m| property.applies_to(m)) {
            gs.extend(enumerate_cubic_with_ceiling(m, args.connected, args.ceiling)?);
        }
        return Ok(gs);
    }
    let path = args.input.as_ref().expect("clap requires --in or --enumerate");
    let (gs, bad) = if path.as_os_str() == "-" {
        read_graph6_lines(io::stdin().lock(), args.strict)?
    } else {
        let f = File::open(path).map_err(io_err(path.display().to_string()))?;
        read_graph6_lines(BufReader::new(f), args.strict)?
    };
    for b in &bad {
        eprintln!("warning: line {}: {}", b.line, b.error);
    }
    Ok(gs)
}
