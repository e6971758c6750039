use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;
use swapset_core::exact::{dd_m_exact, DdmStatus, DEFAULT_NODE_BUDGET};
use swapset_core::grid::{density_tsv, gamma_grid_dp, grid_density_report, grid_swap_construct, p3_strip_swap};
use swapset_core::product::{product_question_scan, product_swap_general, star_product_swap};
use swapset_core::small_alpha::{alpha2_scan, alpha3_bound_check, conjecture_scan, ScanReport};
use swapset_core::tree::{
    alpha_equals_ddm, alpha_equals_eviction, dd_m_tree, four_way_equality, is_weak_tree, s_weight, weak_reduction,
};
use swapset_core::{check_certificate, parse_graph, Error, Graph, SwapCertificate};

const OK: u8 = 0;
const FAILED: u8 = 1;
const USAGE: u8 = 2;
const BUDGET: u8 = 3;

/// Swap sets: disjoint dominating sets joined by a perfect matching.
///
/// A GRAPH argument is an edge-list file (`n m` header, then `u v` lines) or
/// a generator: `pN`, `cN`, `k1,N`, `grid:MxN`, `g6:<graph6>`.
#[derive(Parser, Debug)]
#[command(name = "swapset", version)]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,

    /// Search-node budget for exact solves.
    #[arg(long, default_value_t = DEFAULT_NODE_BUDGET, value_parser = clap::value_parser!(u64).range(1..), global = true)]
    budget: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Tsv,
    Ascii,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Exact swap number with a minimum certificate.
    Compute { graph: String },
    /// Check a certificate JSON file against a graph.
    Verify { graph: String, certificate: PathBuf },
    /// Star-partition weight, weak reduction and swap number of a tree.
    Tree { graph: String },
    /// Build a certificate with one of the explicit constructions.
    Construct {
        #[command(subcommand)]
        what: Construct,
        /// Also write the host graph as an edge list.
        #[arg(long, global = true)]
        graph_out: Option<PathBuf>,
    },
    /// Domination number of a grid by the column DP.
    GammaDp { rows: usize, cols: usize },
    /// Exhaustive scans over small connected graphs.
    Scan {
        kind: ScanKind,
        #[arg(long, default_value_t = 8)]
        max_n: usize,
        /// Write each counterexample graph as an edge-list file here.
        #[arg(long)]
        dump_dir: Option<PathBuf>,
    },
    /// Tabulated reports.
    Report {
        #[command(subcommand)]
        what: Report,
    },
}

#[derive(Subcommand, Debug)]
enum Construct {
    /// K_{1,p} □ K_{1,q}.
    StarProduct { p: usize, q: usize },
    /// P_m □ P_n with m >= n >= 8.
    Grid { m: usize, n: usize },
    /// P_3 □ P_{4k+1} with k >= 3.
    P3Strip { k: usize },
    /// G □ H for connected factors.
    Product { g: String, h: String },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ScanKind {
    Alpha2,
    Alpha3,
    Conjectures,
    Products,
}

#[derive(Subcommand, Debug)]
enum Report {
    /// Grid construction sizes for 8 <= n <= m <= max-mn.
    Grid {
        #[arg(long, default_value_t = 30)]
        max_mn: usize,
    },
}

/// A failed command: message for stderr and the exit code.
struct Failure(u8, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::BudgetExceeded(_) => BUDGET,
            Error::Construction(_) => FAILED,
            _ => USAGE,
        };
        Failure(code, e.to_string())
    }
}

type Outcome = Result<(String, u8), Failure>;

fn load_graph(spec: &str) -> Result<Graph, Failure> {
    let usage = |m: String| Failure(USAGE, m);
    let number = |s: &str| s.parse::<usize>().map_err(|_| usage(format!("bad generator `{spec}`")));
    if let Some(code) = spec.strip_prefix("g6:") {
        return Ok(Graph::from_graph6(code)?);
    }
    if let Some(dims) = spec.strip_prefix("grid:") {
        let (m, n) = dims
            .split_once('x')
            .ok_or_else(|| usage(format!("expected grid:MxN, got `{spec}`")))?;
        return Ok(Graph::grid(number(m)?, number(n)?));
    }
    if let Some(k) = spec.strip_prefix("k1,") {
        return Ok(Graph::star(number(k)?));
    }
    let generator = |prefix: &str| {
        spec.strip_prefix(prefix)
            .filter(|r| !r.is_empty() && r.bytes().all(|b| b.is_ascii_digit()))
    };
    if let Some(n) = generator("p") {
        return Ok(Graph::path(number(n)?));
    }
    if let Some(n) = generator("c") {
        let n = number(n)?;
        if n < 3 {
            return Err(usage(format!("cycle needs at least 3 vertices, got {n}")));
        }
        return Ok(Graph::cycle(n));
    }
    let text = std::fs::read_to_string(spec).map_err(|e| usage(format!("{spec}: {e}")))?;
    parse_graph(&text).map_err(|e| usage(format!("{spec}: {e}")))
}

fn pretty(value: &impl serde::Serialize) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("output serializes");
    s.push('\n');
    s
}

fn certificate_text(c: &SwapCertificate, format: Format) -> String {
    match format {
        Format::Json => pretty(c),
        Format::Tsv => {
            let mut out = String::from("d\td_prime\n");
            for (u, v) in &c.matching.pairs {
                let _ = writeln!(out, "{u}\t{v}");
            }
            out
        }
        Format::Ascii => format!(
            "size {}\nD  {:?}\nD' {:?}\nmatching {:?}\n",
            c.size(),
            c.d.to_vec(),
            c.d_prime.to_vec(),
            c.matching.pairs
        ),
    }
}

fn compute(spec: &str, cli: &Cli) -> Outcome {
    let g = load_graph(spec)?;
    let r = dd_m_exact(&g, cli.budget)?;
    let text = match cli.format {
        Format::Json => pretty(&r),
        Format::Tsv => format!("status\tdd_m\n{:?}\t{}\n", r.status, r.display_value()).to_lowercase(),
        Format::Ascii => match &r.certificate {
            Some(c) => certificate_text(c, Format::Ascii),
            None => format!("dd_m {}\n", r.display_value()),
        },
    };
    let code = if r.status == DdmStatus::BudgetExceeded {
        BUDGET
    } else {
        OK
    };
    Ok((text, code))
}

fn verify(spec: &str, path: &Path, format: Format) -> Outcome {
    let g = load_graph(spec)?;
    let text = std::fs::read_to_string(path).map_err(|e| Failure(USAGE, format!("{}: {e}", path.display())))?;
    let cert = SwapCertificate::from_json(&text)
        .map_err(|e| Failure(USAGE, format!("{}: bad certificate: {e}", path.display())))?;
    match check_certificate(&g, &cert) {
        Ok(()) => {
            let text = match format {
                Format::Json => pretty(&json!({ "valid": true, "size": cert.size() })),
                _ => format!("valid\t{}\n", cert.size()),
            };
            Ok((text, OK))
        }
        Err(v) => {
            eprintln!("certificate rejected: {v}");
            let text = match format {
                Format::Json => pretty(&json!({ "valid": false, "violation": v, "reason": v.to_string() })),
                _ => format!("invalid\t{v}\n"),
            };
            Ok((text, FAILED))
        }
    }
}

fn tree(spec: &str, format: Format) -> Outcome {
    let t = load_graph(spec)?;
    let (s, partition) = s_weight(&t)?;
    let reduction = weak_reduction(&t)?;
    let (reduced_s, _) = s_weight(&reduction.reduced)?;
    let ddm = dd_m_tree(&t)?;
    let weak = is_weak_tree(&t)?;
    let alpha_ddm = alpha_equals_ddm(&t)?;
    let alpha_eviction = alpha_equals_eviction(&t)?;
    let four_way = four_way_equality(&t)?;
    let text = match format {
        Format::Json => pretty(&json!({
            "n": t.n(),
            "weak": weak,
            "s_weight": s,
            "partition": partition,
            "weak_reduction": {
                "n": reduction.reduced.n(),
                "s_weight": reduced_s,
                "removed": reduction.removed,
                "embedding": reduction.embedding,
            },
            "dd_m": ddm,
            "alpha_equals_dd_m": alpha_ddm,
            "alpha_equals_eviction": alpha_eviction,
            "four_way_equality": four_way,
        })),
        _ => format!(
            "n\tweak\ts_weight\treduced_s_weight\tdd_m\talpha_equals_dd_m\talpha_equals_eviction\tfour_way_equality\n\
             {}\t{weak}\t{s}\t{reduced_s}\t{}\t{alpha_ddm}\t{alpha_eviction}\t{four_way}\n",
            t.n(),
            ddm.display_value()
        ),
    };
    Ok((text, OK))
}

fn construct(what: &Construct, graph_out: Option<&Path>, format: Format) -> Outcome {
    let (graph, cert, board) = match what {
        Construct::StarProduct { p, q } => {
            let (g, c, _) = star_product_swap(*p, *q)?;
            (g, c, None)
        }
        Construct::Grid { m, n } => {
            let built = grid_swap_construct(*m, *n)?;
            (built.graph, built.certificate, Some(built.board))
        }
        Construct::P3Strip { k } => {
            let (g, c) = p3_strip_swap(*k)?;
            (g, c, None)
        }
        Construct::Product { g, h } => {
            let (prod, c) = product_swap_general(&load_graph(g)?, &load_graph(h)?)?;
            (prod, c, None)
        }
    };
    if let Some(path) = graph_out {
        std::fs::write(path, graph.to_edge_list()).map_err(|e| Failure(USAGE, format!("{}: {e}", path.display())))?;
    }
    let text = match (format, board) {
        (Format::Ascii, Some(board)) => board.to_ascii(),
        _ => certificate_text(&cert, format),
    };
    Ok((text, OK))
}

fn dump(dir: &Path, ids: &[String]) -> Result<(), Failure> {
    let io = |e: std::io::Error| Failure(USAGE, format!("{}: {e}", dir.display()));
    std::fs::create_dir_all(dir).map_err(io)?;
    for (i, id) in ids.iter().enumerate() {
        let g = Graph::from_graph6(id)?;
        std::fs::write(dir.join(format!("counterexample-{i:03}.edges")), g.to_edge_list()).map_err(io)?;
        eprintln!("counterexample-{i:03}.edges\t{id}");
    }
    Ok(())
}

fn scan_report(report: &ScanReport, format: Format) -> String {
    match format {
        Format::Json => {
            let mut s = report.to_json();
            s.push('\n');
            s
        }
        _ => {
            let mut out = report.to_tsv();
            if !report.thresholds.is_empty() {
                out.push('\n');
                out.push_str(&report.thresholds_tsv());
            }
            out
        }
    }
}

fn scan(kind: ScanKind, max_n: usize, dump_dir: Option<&Path>, format: Format) -> Outcome {
    if let ScanKind::Products = kind {
        let scan = product_question_scan(max_n)?;
        for f in &scan.construction_failures {
            eprintln!("construction failed: {f}");
        }
        let violations = scan.violations("gamma");
        if violations > 0 {
            eprintln!("{violations} products below gamma(G)·gamma(H)");
        }
        let text = match format {
            Format::Json => scan.to_json() + "\n",
            _ => scan.to_tsv(),
        };
        let failed = violations > 0 || !scan.construction_failures.is_empty();
        return Ok((text, if failed { FAILED } else { OK }));
    }
    let report = match kind {
        ScanKind::Alpha2 => alpha2_scan(max_n)?,
        ScanKind::Alpha3 => alpha3_bound_check(max_n)?,
        _ => conjecture_scan(max_n)?,
    };
    for c in &report.counterexamples {
        eprintln!("counterexample {}: {} ({})", c.id, c.claim, c.detail);
    }
    if let Some(dir) = dump_dir {
        let ids: Vec<String> = report.counterexamples.iter().map(|c| c.id.clone()).collect();
        dump(dir, &ids)?;
    }
    let code = if report.counterexamples.is_empty() { OK } else { FAILED };
    Ok((scan_report(&report, format), code))
}

fn run(cli: &Cli) -> Outcome {
    match &cli.command {
        Command::Compute { graph } => compute(graph, cli),
        Command::Verify { graph, certificate } => verify(graph, certificate, cli.format),
        Command::Tree { graph } => tree(graph, cli.format),
        Command::Construct { what, graph_out } => construct(what, graph_out.as_deref(), cli.format),
        Command::GammaDp { rows, cols } => {
            let gamma = gamma_grid_dp(*rows, *cols)?;
            let text = match cli.format {
                Format::Json => pretty(&json!({ "rows": rows, "cols": cols, "gamma": gamma })),
                _ => format!("{gamma}\n"),
            };
            Ok((text, OK))
        }
        Command::Scan { kind, max_n, dump_dir } => scan(*kind, *max_n, dump_dir.as_deref(), cli.format),
        Command::Report {
            what: Report::Grid { max_mn },
        } => {
            let rows = grid_density_report(*max_mn)?;
            let text = match cli.format {
                Format::Json => pretty(&rows),
                _ => density_tsv(&rows),
            };
            Ok((text, OK))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok((text, code)) => {
            print!("{text}");
            ExitCode::from(code)
        }
        Err(Failure(code, message)) => {
            eprintln!("error: {message}");
            ExitCode::from(code)
        }
    }
}
