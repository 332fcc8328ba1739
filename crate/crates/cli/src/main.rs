//! `h3cover`: build, verify and search covering-codegree constructions.
//!
//! Exit codes: 0 success, 1 I/O or unreadable input, 2 usage, 3 a claim
//! failed, 4 search budget exhausted.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use anyhow::Context;
use clap::{Parser, Subcommand, ValueEnum};
use h3cover::constructions::{self, admissible_sample, f1_variant, Case};
use h3cover::{
    c2_bounds, c2_exact, format, recover_partition, uncovered_vertices, verify_construction,
    Budget, ConstructionClaims, Hypergraph3, Pattern, SearchOptions,
};
use num_rational::Ratio;
use serde::Serialize;
use serde_json::json;

#[derive(Parser, Debug)]
#[command(
    name = "h3cover",
    version,
    about = "Covering codegree thresholds of 3-uniform hypergraphs"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build a construction and write `<out>.h3` plus `<out>.claims.json`.
    Construct {
        #[arg(value_enum)]
        name: Construction,
        /// Number of vertices.
        #[arg(long)]
        n: Option<usize>,
        /// Steiner system order (for `sts`).
        #[arg(long)]
        t: Option<usize>,
        /// Seed for the sampled pair set of `f1e` and `f1p`.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Residue case for `f1e` (0, 1 or 2); defaults to `n mod 3`.
        #[arg(long)]
        case: Option<String>,
        /// Base graph for `blowup`: a pattern name or `.h3` file, `co:` prefix
        /// for its complement.
        #[arg(long)]
        base: Option<String>,
        /// Part size for `blowup`.
        #[arg(long, default_value_t = 1)]
        copies: usize,
        /// Output path; defaults to `<name>_<n>.h3`.
        #[arg(short, long)]
        out: Option<PathBuf>,
        /// Write the bitmap form instead of the edge list.
        #[arg(long)]
        hex: bool,
    },
    /// Re-check a graph against its claims file.
    Verify {
        #[arg(long = "in")]
        input: PathBuf,
        /// Claims file; defaults to the sidecar of `--in`.
        #[arg(long)]
        claims: Option<PathBuf>,
        /// Pattern; defaults to the one named in the claims.
        #[arg(long)]
        pattern: Option<String>,
    },
    /// List the vertices lying in no copy of the pattern.
    Cover {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        pattern: String,
    },
    /// Exhaustive c₂(n, F) for tiny n.
    Search {
        #[arg(long)]
        pattern: String,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 1)]
        workers: usize,
        /// Only one link graph per isomorphism class (required for n = 7).
        #[arg(long)]
        prune_iso: bool,
        #[arg(long)]
        budget_seconds: Option<f64>,
        #[arg(long)]
        budget_nodes: Option<u64>,
    },
    /// Closed-form brackets for c₂(n, F) over `N` or an inclusive range `A..B`.
    Bounds {
        #[arg(long)]
        pattern: String,
        #[arg(long)]
        n: String,
    },
    /// Recover the tripartition around a K4-uncovered vertex.
    Recover {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        apex: usize,
        #[arg(long, default_value = "1/429")]
        delta: String,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Construction {
    F1,
    F1e,
    F1p,
    F2,
    F3,
    F4,
    Sts,
    Blowup,
    Fano2,
    F32tri,
}

/// A failure with its exit code.
struct Failure {
    code: u8,
    error: anyhow::Error,
}

impl Failure {
    fn usage(msg: impl std::fmt::Display) -> Self {
        Self {
            code: 2,
            error: anyhow::anyhow!("{msg}"),
        }
    }
}

impl From<anyhow::Error> for Failure {
    fn from(error: anyhow::Error) -> Self {
        Self { code: 1, error }
    }
}

impl From<h3cover::Error> for Failure {
    fn from(e: h3cover::Error) -> Self {
        Self::usage(e)
    }
}

type Outcome = Result<u8, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {:#}", f.error);
            ExitCode::from(f.code)
        }
    }
}

fn run(cli: Cli) -> Outcome {
    let fmt = cli.format;
    match cli.command {
        Command::Construct {
            name,
            n,
            t,
            seed,
            case,
            base,
            copies,
            out,
            hex,
        } => construct(fmt, name, n, t, seed, case, base, copies, out, hex),
        Command::Verify {
            input,
            claims,
            pattern,
        } => verify(fmt, &input, claims, pattern),
        Command::Cover { input, pattern } => cover(fmt, &input, &pattern),
        Command::Search {
            pattern,
            n,
            workers,
            prune_iso,
            budget_seconds,
            budget_nodes,
        } => search(
            fmt,
            &pattern,
            n,
            workers,
            prune_iso,
            budget_seconds,
            budget_nodes,
        ),
        Command::Bounds { pattern, n } => bounds(fmt, &pattern, &n),
        Command::Recover { input, apex, delta } => recover(fmt, &input, apex, &delta),
    }
}

fn read_graph(path: &Path) -> Result<Hypergraph3, Failure> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let g = format::parse(&text).with_context(|| format!("parsing {}", path.display()))?;
    Ok(g)
}

/// A catalog name, or a `.h3` file holding the pattern graph.
fn load_pattern(arg: &str) -> Result<Pattern, Failure> {
    if arg.ends_with(".h3") {
        let g = read_graph(Path::new(arg))?;
        let name = Path::new(arg)
            .file_stem()
            .map_or(arg.to_string(), |s| s.to_string_lossy().into_owned());
        return Ok(Pattern::new(name, g)?);
    }
    Ok(arg.parse()?)
}

fn sidecar(path: &Path) -> PathBuf {
    path.with_extension("claims.json")
}

fn print_json<T: Serialize>(value: &T) -> Result<(), Failure> {
    let s = serde_json::to_string_pretty(value).context("serializing report")?;
    println!("{s}");
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn construct(
    fmt: Format,
    name: Construction,
    n: Option<usize>,
    t: Option<usize>,
    seed: u64,
    case: Option<String>,
    base: Option<String>,
    copies: usize,
    out: Option<PathBuf>,
    hex: bool,
) -> Outcome {
    let need_n = || n.ok_or_else(|| Failure::usage("this construction needs --n"));
    let (g, claims): (Hypergraph3, ConstructionClaims) = match name {
        Construction::F1 => constructions::f1(need_n()?)?,
        Construction::F1e | Construction::F1p => {
            let n = need_n()?;
            let case = match (name, case) {
                (Construction::F1p, _) => Case::TwoPrime,
                (_, Some(c)) => c.parse()?,
                (_, None) => match n % 3 {
                    0 => Case::Zero,
                    1 => Case::One,
                    _ => Case::TwoBalanced,
                },
            };
            f1_variant(&admissible_sample(case, n, seed)?)?
        }
        Construction::F2 => constructions::f2(need_n()?)?,
        Construction::F3 => constructions::f3(need_n()?)?,
        Construction::F4 => constructions::f4(need_n()?)?,
        Construction::Fano2 => constructions::fano_bipartite(need_n()?)?,
        Construction::F32tri => constructions::f32_tripartite(need_n()?)?,
        Construction::Sts => {
            let t = t.or(n).ok_or_else(|| Failure::usage("sts needs --t"))?;
            let g = constructions::steiner(t)?;
            let claims = ConstructionClaims {
                schema: 1,
                construction: "sts".into(),
                n: t,
                min_codegree: Some(1),
                pattern: None,
                uncovered: Vec::new(),
                apex: None,
                parts: Vec::new(),
                pairs: Vec::new(),
            };
            (g, claims)
        }
        Construction::Blowup => {
            let arg = base.ok_or_else(|| Failure::usage("blowup needs --base"))?;
            let (complement, arg) = match arg.strip_prefix("co:") {
                Some(rest) => (true, rest.to_string()),
                None => (false, arg),
            };
            let h = load_pattern(&arg)?.graph().clone();
            let h = if complement { h.complement() } else { h };
            constructions::blow_up(&h, copies)?
        }
    };
    let label = format!("{name:?}").to_lowercase();
    let out = out.unwrap_or_else(|| PathBuf::from(format!("{label}_{}.h3", g.n())));
    let body = if hex {
        format::to_hex(&g)
    } else {
        format::to_text(&g)
    };
    fs::write(&out, body).with_context(|| format!("writing {}", out.display()))?;
    let claims_path = sidecar(&out);
    let claims_json = serde_json::to_string_pretty(&claims).context("serializing claims")?;
    fs::write(&claims_path, claims_json + "\n")
        .with_context(|| format!("writing {}", claims_path.display()))?;
    match fmt {
        Format::Json => print_json(&json!({
            "schema": 1,
            "graph": out,
            "claims_file": claims_path,
            "edges": g.edge_count(),
            "claims": claims,
        }))?,
        Format::Table => {
            println!(
                "wrote {} ({} vertices, {} edges)",
                out.display(),
                g.n(),
                g.edge_count()
            );
            println!("claims {}", claims_path.display());
            if let Some(d) = claims.min_codegree {
                println!("intended min codegree {d}");
            }
        }
    }
    Ok(0)
}

fn verify(fmt: Format, input: &Path, claims: Option<PathBuf>, pattern: Option<String>) -> Outcome {
    let g = read_graph(input)?;
    let claims_path = claims.unwrap_or_else(|| sidecar(input));
    let text = fs::read_to_string(&claims_path)
        .with_context(|| format!("reading {}", claims_path.display()))?;
    let claims: ConstructionClaims = serde_json::from_str(&text)
        .with_context(|| format!("parsing {}", claims_path.display()))?;
    let arg = pattern
        .or_else(|| claims.pattern.clone())
        .ok_or_else(|| Failure::usage("no pattern given and none named in the claims"))?;
    let pattern = load_pattern(&arg)?;
    let report = verify_construction(&g, &claims, &pattern);
    match fmt {
        Format::Json => print_json(&report)?,
        Format::Table => {
            for c in &report.checks {
                let mark = if c.pass { "pass" } else { "FAIL" };
                println!(
                    "{mark}  {:<13} expected {}  measured {}",
                    c.claim, c.expected, c.measured
                );
            }
        }
    }
    Ok(if report.pass { 0 } else { 3 })
}

fn cover(fmt: Format, input: &Path, pattern: &str) -> Outcome {
    let g = read_graph(input)?;
    let p = load_pattern(pattern)?;
    let uncovered = uncovered_vertices(&g, &p);
    match fmt {
        Format::Json => print_json(&json!({
            "schema": 1,
            "pattern": p.name(),
            "n": g.n(),
            "uncovered": uncovered,
        }))?,
        Format::Table => {
            let list: Vec<String> = uncovered.iter().map(ToString::to_string).collect();
            println!(
                "{} uncovered by {}: {{{}}}",
                uncovered.len(),
                p.name(),
                list.join(", ")
            );
        }
    }
    Ok(0)
}

fn search(
    fmt: Format,
    pattern: &str,
    n: usize,
    workers: usize,
    prune_iso: bool,
    budget_seconds: Option<f64>,
    budget_nodes: Option<u64>,
) -> Outcome {
    let p = load_pattern(pattern)?;
    let time = match budget_seconds {
        Some(s) if !(s >= 0.0 && s.is_finite()) => {
            return Err(Failure::usage("--budget-seconds must be >= 0"))
        }
        Some(s) => Some(Duration::from_secs_f64(s)),
        None => None,
    };
    if workers == 0 {
        return Err(Failure::usage("--workers must be at least 1"));
    }
    let opts = SearchOptions {
        workers,
        prune_iso,
        budget: Budget {
            time,
            nodes: budget_nodes,
        },
    };
    let report = c2_exact(&p, n, &opts)?;
    match fmt {
        Format::Json => print_json(&report)?,
        Format::Table => {
            match report.value {
                Some(v) => println!("c2({n}, {}) = {v}", p.name()),
                None => println!(
                    "c2({n}, {}) in [{}, {}] (budget exhausted)",
                    p.name(),
                    report.lower,
                    report.upper
                ),
            }
            println!("nodes {}  time {:.3?}", report.nodes, report.elapsed);
        }
    }
    eprintln!("search time {:.3?}", report.elapsed);
    Ok(if report.exhaustive { 0 } else { 4 })
}

/// `N` or inclusive `A..B`.
fn parse_range(s: &str) -> Result<Vec<usize>, Failure> {
    let bad = || Failure::usage(format!("--n expects N or A..B, got `{s}`"));
    match s.split_once("..") {
        Some((a, b)) => {
            let a: usize = a.trim().parse().map_err(|_| bad())?;
            let b: usize = b.trim().parse().map_err(|_| bad())?;
            if a > b {
                return Err(bad());
            }
            Ok((a..=b).collect())
        }
        None => Ok(vec![s.trim().parse().map_err(|_| bad())?]),
    }
}

fn bounds(fmt: Format, pattern: &str, n: &str) -> Outcome {
    let p = load_pattern(pattern)?;
    let rows = parse_range(n)?
        .into_iter()
        .map(|n| c2_bounds(&p, n))
        .collect::<Result<Vec<_>, _>>()?;
    match fmt {
        Format::Json => print_json(&json!({ "schema": 1, "pattern": p.name(), "bounds": rows }))?,
        Format::Table => {
            let mut s = format!("{:>4} {:>6} {:>6} {:>6}\n", "n", "lower", "upper", "exact");
            for b in &rows {
                let exact = b.exact.map_or("-".to_string(), |e| e.to_string());
                let _ = writeln!(s, "{:>4} {:>6} {:>6} {:>6}", b.n, b.lower, b.upper, exact);
            }
            print!("{s}");
        }
    }
    Ok(0)
}

fn recover(fmt: Format, input: &Path, apex: usize, delta: &str) -> Outcome {
    let g = read_graph(input)?;
    let delta: Ratio<i64> = delta.parse().map_err(|_| {
        Failure::usage(format!(
            "--delta expects a fraction like 1/429, got `{delta}`"
        ))
    })?;
    let rec = recover_partition(&g, apex, delta)?;
    match fmt {
        Format::Json => print_json(&json!({
            "schema": 1,
            "apex": apex,
            "delta": delta.to_string(),
            "recovery": rec,
        }))?,
        Format::Table => match &rec {
            None => println!("no tripartition recovered around {apex}"),
            Some(r) => {
                for (i, p) in r.partition.parts.iter().enumerate() {
                    println!("V{} ({} vertices): {:?}", i + 1, p.len(), p);
                }
                let v = &r.violations;
                println!(
                    "within-part link edges {}, missing cross link triples {}, tripartite edges {}, missing two-one triples {}",
                    v.within_link, v.missing_cross_link, v.tripartite, v.missing_two_one
                );
                println!("guarantee applies: {}", r.guarantee_applies);
            }
        },
    }
    Ok(0)
}
