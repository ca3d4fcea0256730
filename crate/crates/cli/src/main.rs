//! `cofrac`: compute, verify and check fractional (co)chromatic numbers.

mod source;

use std::fs::OpenOptions;
use std::io::Write;
use std::ops::RangeInclusive;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use cofrac::graph::{stats_with_limit, Graph};
use cofrac::harness::{self, suites, TheoremReport};
use cofrac::rational;
use cofrac::solver::{self, CertifiedValue, MethodChoice, Parameter, SolveOptions};
use cofrac::Error;

use source::{load_graph, split_sources};

#[derive(Parser)]
#[command(
    name = "cofrac",
    version,
    about = "Exact fractional chromatic and cochromatic numbers"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute a graph parameter.
    Compute(ComputeArgs),
    /// Print a generated or parsed graph as an edge list.
    Generate(GenerateArgs),
    /// Check a certificate against a graph.
    Verify(VerifyArgs),
    /// Run a theorem suite and print one JSON report per line.
    Check(CheckArgs),
    /// Run a seeded experiment and print one JSON line.
    Experiment(ExperimentArgs),
}

#[derive(Args)]
struct Common {
    /// Seed for randomized generators and suites.
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Largest vertex count the exact searches accept.
    #[arg(long = "max-n", global = true)]
    max_n: Option<usize>,
    /// Write output to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<String>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Param {
    #[value(name = "chi_f")]
    ChiF,
    #[value(name = "z_f")]
    ZF,
    Alpha,
    Omega,
    Chi,
    Z,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Enum,
    Colgen,
    Auto,
}

#[derive(Args)]
struct ComputeArgs {
    /// Graph source (file, `gen:<family>:<params>`, or a named graph).
    source: Option<String>,
    /// Parameter to compute.
    #[arg(value_enum)]
    param_pos: Option<Param>,
    #[arg(long, conflicts_with = "source")]
    graph: Option<String>,
    #[arg(long, value_enum, conflicts_with = "param_pos")]
    param: Option<Param>,
    #[arg(long, value_enum, default_value = "auto")]
    method: MethodArg,
    /// Emit the full JSON certificate.
    #[arg(long)]
    json: bool,
    #[command(flatten)]
    common: Common,
}

#[derive(Args)]
struct GenerateArgs {
    source: Option<String>,
    #[arg(long, conflicts_with = "source")]
    graph: Option<String>,
    /// Emit JSON with provenance instead of an edge list.
    #[arg(long)]
    json: bool,
    #[command(flatten)]
    common: Common,
}

#[derive(Args)]
struct VerifyArgs {
    source: Option<String>,
    /// Certificate file as written by `compute --json`.
    certificate: Option<String>,
    #[arg(long, conflicts_with = "source")]
    graph: Option<String>,
    #[arg(long = "cert", conflicts_with = "certificate")]
    cert: Option<String>,
    #[arg(long)]
    json: bool,
    #[command(flatten)]
    common: Common,
}

#[derive(Clone, Copy, ValueEnum)]
enum TheoremId {
    Example1,
    Prop1,
    Thm3,
    Thm4,
    Thm5,
    Thm6,
    Thm7,
    Mycielski,
    Kneser,
}

#[derive(Args)]
struct CheckArgs {
    #[arg(value_enum)]
    theorem: TheoremId,
    /// Leaf counts for example1, as `a..b` (inclusive) or a single value.
    #[arg(long, default_value = "1..6")]
    t: String,
    /// Isolated-vertex counts for example1.
    #[arg(long, default_value = "0..3")]
    s: String,
    /// Comma-separated graph sources.
    #[arg(long)]
    graphs: Option<String>,
    /// Number of seeded random graphs for sampled suites.
    #[arg(long)]
    count: Option<usize>,
    /// Kneser parameters as `a:b` pairs, comma separated.
    #[arg(long, default_value = "3:1,4:2,5:2,6:2")]
    pairs: String,
    /// Largest number of disjoint copies for thm4 and thm5.
    #[arg(long, default_value_t = 3)]
    max_k: usize,
    #[command(flatten)]
    common: Common,
}

#[derive(Clone, Copy, ValueEnum)]
enum ExperimentId {
    Remark6,
    Gap,
    Aks,
    Zfnm,
}

#[derive(Args)]
struct ExperimentArgs {
    #[arg(value_enum)]
    experiment: ExperimentId,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    m: Option<usize>,
    /// Density offset for `gap`: edges appear with probability 1/(2-eps).
    #[arg(long, default_value = "1/2")]
    eps: String,
    #[arg(long, default_value_t = 100)]
    trials: usize,
    /// Graph source for `aks`.
    #[arg(long)]
    graph: Option<String>,
    #[command(flatten)]
    common: Common,
}

enum Failure {
    Core(Error),
    Usage(String),
    Verification(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

impl Failure {
    fn exit_code(&self) -> u8 {
        match self {
            Failure::Verification(_) => 1,
            Failure::Usage(_) => 2,
            Failure::Core(Error::Parse { .. } | Error::InvalidArgument(_)) => 2,
            Failure::Core(Error::Capability { .. } | Error::Unsupported(_)) => 3,
            Failure::Core(Error::Internal(_)) => 4,
        }
    }

    fn message(&self) -> String {
        match self {
            Failure::Core(e) => e.to_string(),
            Failure::Usage(m) => m.clone(),
            Failure::Verification(m) => format!("verification failed: {m}"),
        }
    }
}

type Outcome = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Compute(a) => compute(a),
        Command::Generate(a) => generate(a),
        Command::Verify(a) => verify(a),
        Command::Check(a) => check(a),
        Command::Experiment(a) => experiment(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("cofrac: {}", f.message());
            ExitCode::from(f.exit_code())
        }
    }
}

/// Writes `text` to `--out` (truncating, or appending when `append`) or stdout.
fn emit(common: &Common, text: &str, append: bool) -> Outcome {
    match &common.out {
        None => {
            print!("{text}");
            Ok(())
        }
        Some(path) => OpenOptions::new()
            .create(true)
            .write(true)
            .append(append)
            .truncate(!append)
            .open(path)
            .and_then(|mut f| f.write_all(text.as_bytes()))
            .map_err(|e| Failure::Usage(format!("cannot write {path}: {e}"))),
    }
}

fn warn(message: String) {
    eprintln!("cofrac: warning: {message}");
}

fn graph_arg(
    positional: Option<String>,
    flag: Option<String>,
    common: &Common,
) -> Result<Graph, Failure> {
    let source = positional
        .or(flag)
        .ok_or_else(|| Failure::Usage("no graph given; pass a source or --graph".into()))?;
    Ok(load_graph(&source, common.seed, &mut warn)?)
}

fn solve_options(method: MethodArg, max_n: Option<usize>) -> SolveOptions {
    let choice = match method {
        MethodArg::Enum => MethodChoice::Enumeration,
        MethodArg::Colgen => MethodChoice::ColumnGeneration,
        MethodArg::Auto => MethodChoice::Auto,
    };
    let mut opts = SolveOptions::with_method(choice);
    if let Some(limit) = max_n {
        opts.column_generation_limit = limit;
        if let MethodArg::Enum = method {
            opts.enumeration_limit = limit;
        }
    }
    opts
}

fn certificate_summary(cert: &CertifiedValue) -> String {
    let cliques = cert.cover.clique_weight();
    format!(
        "{value}\nmethod: {method}, sets in cover: {sets}, clique weight: {cw}, independent weight: {iw}\ncolumns: {cols}, pivots: {piv}, pricing rounds: {rounds}, max bits: {bits}\n",
        value = rational::to_string(&cert.value),
        method = serde_json::to_value(cert.method).expect("method serializes").as_str().unwrap_or("?"),
        sets = cert.cover.entries.len(),
        cw = rational::to_string(&cliques),
        iw = rational::to_string(&cert.cover.independent_weight()),
        cols = cert.stats.columns,
        piv = cert.stats.pivots,
        rounds = cert.stats.pricing_rounds,
        bits = cert.stats.max_bits,
    )
}

fn compute(a: ComputeArgs) -> Outcome {
    let g = graph_arg(a.source, a.graph, &a.common)?;
    let param = a.param_pos.or(a.param).ok_or_else(|| {
        Failure::Usage("no parameter given; pass one of chi_f, z_f, alpha, omega, chi, z".into())
    })?;
    let fractional = match param {
        Param::ChiF => Some(Parameter::ChiF),
        Param::ZF => Some(Parameter::ZF),
        _ => None,
    };
    if let Some(parameter) = fractional {
        let cert = solver::solve(&g, parameter, &solve_options(a.method, a.common.max_n))?;
        let text = if a.json {
            format!("{}\n", cert.to_json())
        } else {
            certificate_summary(&cert)
        };
        return emit(&a.common, &text, false);
    }
    let (name, value) = match param {
        Param::Alpha | Param::Omega => {
            let st = stats_with_limit(
                &g,
                a.common.max_n.unwrap_or(cofrac::graph::DEFAULT_STATS_LIMIT),
            )?;
            match param {
                Param::Alpha => ("alpha", st.alpha),
                _ => ("omega", st.omega),
            }
        }
        Param::Chi => (
            "chi",
            harness::integral_chi_with_limit(
                &g,
                a.common
                    .max_n
                    .unwrap_or(harness::integral::DEFAULT_CHI_LIMIT),
            )?,
        ),
        _ => (
            "z",
            harness::integral_z_with_limit(
                &g,
                a.common.max_n.unwrap_or(harness::integral::DEFAULT_Z_LIMIT),
            )?,
        ),
    };
    let text = if a.json {
        format!("{}\n", json!({ "parameter": name, "value": value }))
    } else {
        format!("{value}\n")
    };
    emit(&a.common, &text, false)
}

fn generate(a: GenerateArgs) -> Outcome {
    let g = graph_arg(a.source, a.graph, &a.common)?;
    let text = if a.json {
        let edges: Vec<[usize; 2]> = g.edges().map(|(u, v)| [u, v]).collect();
        format!(
            "{}\n",
            json!({ "n": g.n(), "m": g.m(), "edges": edges, "provenance": g.provenance() })
        )
    } else {
        g.to_edge_list()
    };
    emit(&a.common, &text, false)
}

fn verify(a: VerifyArgs) -> Outcome {
    let g = graph_arg(a.source, a.graph, &a.common)?;
    let path = a
        .certificate
        .or(a.cert)
        .ok_or_else(|| Failure::Usage("no certificate given; pass a file or --cert".into()))?;
    let text = std::fs::read_to_string(&path)
        .map_err(|e| Failure::Usage(format!("cannot read certificate {path}: {e}")))?;
    let cert: CertifiedValue = serde_json::from_str(&text)
        .map_err(|e| Failure::Usage(format!("malformed certificate {path}: {e}")))?;
    match solver::verify_certificate(&g, &cert) {
        Ok(()) => {
            let text = if a.json {
                format!(
                    "{}\n",
                    json!({ "valid": true, "parameter": cert.parameter.to_string(), "value": rational::to_string(&cert.value) })
                )
            } else {
                format!(
                    "valid: {} = {}\n",
                    cert.parameter,
                    rational::to_string(&cert.value)
                )
            };
            emit(&a.common, &text, false)
        }
        Err(v) => {
            let reason = v.to_string();
            let text = if a.json {
                format!("{}\n", json!({ "valid": false, "reason": reason }))
            } else {
                format!("invalid: {reason}\n")
            };
            emit(&a.common, &text, false)?;
            Err(Failure::Verification(reason))
        }
    }
}

fn parse_range(name: &str, raw: &str) -> Result<RangeInclusive<usize>, Failure> {
    let bad = || {
        Failure::Usage(format!(
            "--{name}: expected `a..b` or a single value, got {raw:?}"
        ))
    };
    let num = |s: &str| s.trim().parse::<usize>().map_err(|_| bad());
    match raw.split_once("..") {
        Some((lo, hi)) => Ok(num(lo)?..=num(hi.trim_start_matches('='))?),
        None => {
            let v = num(raw)?;
            Ok(v..=v)
        }
    }
}

fn parse_pairs(raw: &str) -> Result<Vec<(usize, usize)>, Failure> {
    raw.split(',')
        .map(|pair| {
            let (a, b) = pair
                .split_once(':')
                .ok_or_else(|| Failure::Usage(format!("--pairs: expected a:b, got {pair:?}")))?;
            let num = |s: &str| {
                s.trim()
                    .parse::<usize>()
                    .map_err(|_| Failure::Usage(format!("--pairs: bad number {s:?}")))
            };
            Ok((num(a)?, num(b)?))
        })
        .collect()
}

fn graph_list(list: &str, seed: Option<u64>) -> Result<Vec<Graph>, Failure> {
    split_sources(list)
        .iter()
        .map(|s| load_graph(s, seed, &mut warn).map_err(Failure::from))
        .collect()
}

fn require_seed(common: &Common, what: &str) -> Result<u64, Failure> {
    common
        .seed
        .ok_or_else(|| Failure::Usage(format!("{what} is randomized; pass --seed")))
}

/// Graphs given with `--graphs`, or the seeded corpus up to `--max-n`.
fn corpus_or_list(a: &CheckArgs, default_max_n: usize) -> Result<Vec<Graph>, Failure> {
    if let Some(list) = &a.graphs {
        return graph_list(list, a.common.seed);
    }
    let seed = require_seed(&a.common, "the corpus suite")?;
    let max_n = a.common.max_n.unwrap_or(default_max_n);
    Ok(suites::small_corpus(seed)
        .into_iter()
        .filter(|g| g.n() <= max_n)
        .collect())
}

fn check(a: CheckArgs) -> Outcome {
    let listed = |default: &str| graph_list(a.graphs.as_deref().unwrap_or(default), a.common.seed);
    let reports: Vec<TheoremReport> = match a.theorem {
        TheoremId::Example1 => {
            suites::example1_suite(parse_range("t", &a.t)?, parse_range("s", &a.s)?)?
        }
        TheoremId::Prop1 => {
            suites::proposition1_suite(&listed("petersen,c5,c7,k4,gen:star:3,0,grotzsch")?)?
        }
        TheoremId::Thm3 => suites::theorem3_suite(&corpus_or_list(&a, 10)?)?,
        TheoremId::Thm4 => suites::theorem4_suite(&corpus_or_list(&a, 7)?, a.max_k)?,
        TheoremId::Thm5 => {
            suites::theorem5_suite(&listed("c5,k2,k3,petersen")?, a.max_k.saturating_sub(1), 24)?
        }
        TheoremId::Thm6 => {
            let seed = require_seed(&a.common, "thm6")?;
            let mut reports =
                suites::theorem6_suite(a.common.max_n.unwrap_or(9), a.count.unwrap_or(500), seed)?;
            if let Some(list) = &a.graphs {
                for g in graph_list(list, Some(seed))? {
                    reports.push(harness::check_theorem6(&g)?);
                }
            }
            reports
        }
        TheoremId::Thm7 => {
            let mut graphs = listed("petersen,c5,grotzsch")?;
            if let Some(count) = a.count {
                let seed = require_seed(&a.common, "thm7 with --count")?;
                graphs.extend(suites::triangle_free_sample(
                    a.common.max_n.unwrap_or(12),
                    count,
                    seed,
                ));
            }
            suites::theorem7_suite(&graphs)?
        }
        TheoremId::Mycielski => suites::mycielski_suite(&listed("k1,k2,c5")?)?,
        TheoremId::Kneser => suites::kneser_suite(&parse_pairs(&a.pairs)?)?,
    };
    let text: String = reports.iter().map(|r| r.to_json_line() + "\n").collect();
    emit(&a.common, &text, true)?;
    let fails = reports.iter().filter(|r| r.is_failure()).count();
    eprintln!("cofrac: {} report(s), {fails} failing", reports.len());
    if fails > 0 {
        return Err(Failure::Verification(format!("{fails} report(s) failed")));
    }
    Ok(())
}

fn experiment(a: ExperimentArgs) -> Outcome {
    let seed = a
        .common
        .seed
        .ok_or_else(|| Failure::Usage("experiments are randomized; pass --seed".into()))?;
    let need =
        |v: Option<usize>, flag: &str| v.ok_or_else(|| Failure::Usage(format!("missing --{flag}")));
    let (line, ok) = match a.experiment {
        ExperimentId::Remark6 => {
            let r = harness::remark6_experiment(need(a.n, "n")?, seed)?;
            let report = r.to_report(&r.graph());
            (report.to_json_line(), !report.is_failure())
        }
        ExperimentId::Gap => {
            let eps = rational::parse(&a.eps)?;
            let n = need(a.n, "n")?;
            let r = harness::gap_experiment(n, &eps, seed)?;
            let p = (rational::int(2) - &eps).recip();
            let g = cofrac::graph::gen_random(n, &p, seed)?;
            let report = r.to_report(&g);
            (report.to_json_line(), r.holds)
        }
        ExperimentId::Aks => {
            let source = a
                .graph
                .ok_or_else(|| Failure::Usage("aks needs --graph".into()))?;
            let g = load_graph(&source, Some(seed), &mut warn)?;
            let s = harness::aks_subgraph_sample(&g, seed)?;
            let edges: Vec<[usize; 2]> = s.h.edges().map(|(u, v)| [u, v]).collect();
            let line = json!({
                "experiment": "aks",
                "seed": seed,
                "v1": s.v1,
                "empty": s.empty,
                "h": { "n": s.h.n(), "m": s.h.m(), "edges": edges },
                "z_f": rational::to_string(&s.z_f.value),
            });
            (line.to_string(), true)
        }
        ExperimentId::Zfnm => {
            let n = need(a.n, "n")?;
            let r = harness::zf_nm_search(n, need(a.m, "m")?, a.trials, seed)?;
            let edges: Vec<[usize; 2]> = r.witness.edges().map(|(u, v)| [u, v]).collect();
            let line = json!({
                "experiment": "zfnm",
                "seed": seed,
                "n": n,
                "m": r.witness.m(),
                "best": rational::to_string(&r.best),
                "evaluations": r.evaluations,
                "witness": edges,
            });
            (line.to_string(), true)
        }
    };
    emit(&a.common, &(line + "\n"), true)?;
    if ok {
        Ok(())
    } else {
        Err(Failure::Verification("experiment assertion failed".into()))
    }
}
