//! `graphsym`: generate graphs, inspect automorphism groups, compute the
//! asymmetric index and run the claim ledger.
//!
//! Exit codes: 0 ok, 2 usage or parse error, 3 no asymmetrization exists,
//! 4 search budget exceeded, 5 refutation outside the allowlist.

/// `println!` without the panic on a closed pipe.
macro_rules! out {
    ($($t:tt)*) => {{
        use std::io::Write as _;
        let _ = writeln!(std::io::stdout().lock(), $($t)*);
    }};
}

macro_rules! out_raw {
    ($($t:tt)*) => {{
        use std::io::Write as _;
        let _ = write!(std::io::stdout().lock(), $($t)*);
    }};
}

mod config;
mod input;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use graphsym::theorems::{
    catalog, cycle_augmentation_formula, render_table, unexpected_refutations, Ranges, SuiteError,
    Variant,
};
use graphsym::{
    asymmetric_index, automorphism_group, count_nonisomorphic_asymmetrizations, lower_bound,
    to_graph6_string, verify_claim, verify_suite, AiError, FamilySpec, Graph, Mode, SearchConfig,
    Status, SuiteConfig,
};
use serde_json::{json, Value};

use config::Config;

const EXIT_USAGE: u8 = 2;
const EXIT_NO_ASYMMETRIZATION: u8 = 3;
const EXIT_BUDGET: u8 = 4;
const EXIT_REFUTED: u8 = 5;

#[derive(Parser)]
#[command(
    name = "graphsym",
    version,
    about = "Asymmetry toolkit for small graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the graph6 encoding of a named family member.
    ///
    /// Grammar: path:N cycle:N complete:N star:N wheel:N circulant:M:D1,D2,...
    /// grid:RxS pxc:RxS torus:RxS split:S+T pendant-cycle:L
    Gen { spec: String },
    /// Compute the asymmetric index with witnesses.
    Ai(AiArgs),
    /// Report the automorphism group.
    Aut(AutArgs),
    /// Count asymmetric two-chord augmentations of C_n and the two closed forms.
    CountCycleAug(CountArgs),
    /// Run the claim ledger, or one claim.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct GraphInput {
    /// graph6 text, `-` for graph6 on stdin, or `@path` for an edge-list file.
    input: String,
    /// Emit a JSON envelope instead of text.
    #[arg(long)]
    json: bool,
    /// Shift vertex labels by one in text output.
    #[arg(long)]
    one_based: bool,
}

#[derive(Args)]
struct AiArgs {
    #[command(flatten)]
    graph: GraphInput,
    /// mixed, add-only or remove-only.
    #[arg(long, default_value = "mixed")]
    mode: Mode,
    /// Largest flip-set size to try.
    #[arg(long, default_value_t = graphsym::edit::DEFAULT_MAX_K)]
    max_k: usize,
    /// Number of witnesses to report.
    #[arg(long, default_value_t = 1)]
    witnesses: usize,
}

#[derive(Args)]
struct AutArgs {
    #[command(flatten)]
    graph: GraphInput,
}

#[derive(Args)]
struct CountArgs {
    /// Cycle length, at least 6.
    n: i64,
    /// Also evaluate both closed forms and flag disagreements.
    #[arg(long)]
    compare: bool,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct VerifyArgs {
    /// Claim id; omit to run every claim.
    claim: Option<String>,
    /// Range for n: `a`, `a..b`, `a..=b` or `a-b` (inclusive).
    #[arg(long, value_parser = input::parse_range)]
    n: Option<(usize, usize)>,
    #[arg(long, value_parser = input::parse_range)]
    r: Option<(usize, usize)>,
    #[arg(long, value_parser = input::parse_range)]
    s: Option<(usize, usize)>,
    /// Largest flip-set size any exact search may reach.
    #[arg(long)]
    budget: Option<usize>,
    /// TOML file with budget, witness_cap, threads and allowlist.
    #[arg(long)]
    config: Option<PathBuf>,
    /// List claim ids and exit.
    #[arg(long)]
    list: bool,
    #[arg(long)]
    json: bool,
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Self {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }
}

type Outcome = Result<u8, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let argv: Vec<String> = std::env::args().skip(1).collect();
    match run(cli, &argv) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("graphsym: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run(cli: Cli, argv: &[String]) -> Outcome {
    let config = match &cli.command {
        Command::Verify(VerifyArgs {
            config: Some(path), ..
        }) => Config::load(path).map_err(Failure::usage)?,
        _ => Config::default(),
    };
    if let Some(t) = config::thread_count(config.threads).map_err(Failure::usage)? {
        // Fails only if a pool already exists, which cannot happen this early.
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build_global();
    }
    match cli.command {
        Command::Gen { spec } => cmd_gen(&spec),
        Command::Ai(a) => cmd_ai(&a, argv),
        Command::Aut(a) => cmd_aut(&a, argv),
        Command::CountCycleAug(a) => cmd_count(&a, argv),
        Command::Verify(a) => cmd_verify(&a, &config, argv),
    }
}

fn envelope(argv: &[String], input: Option<&Graph>, result: Value, stats: Value) -> String {
    let v = json!({
        "command": argv,
        "input": input.map(to_graph6_string),
        "result": result,
        "stats": stats,
        "version": env!("CARGO_PKG_VERSION"),
    });
    serde_json::to_string_pretty(&v).expect("envelope serializes")
}

fn cmd_gen(text: &str) -> Outcome {
    let spec: FamilySpec = text.parse().map_err(|e| Failure::usage(format!("{e}")))?;
    let g = spec
        .generate()
        .map_err(|e| Failure::usage(format!("{e}")))?;
    out!("{}", to_graph6_string(&g));
    Ok(0)
}

fn cmd_ai(a: &AiArgs, argv: &[String]) -> Outcome {
    let g = input::read_graph(&a.graph.input).map_err(Failure::usage)?;
    let cfg = SearchConfig {
        mode: a.mode,
        max_k: a.max_k,
        witness_cap: a.witnesses,
    };
    let offset = usize::from(a.graph.one_based);
    match asymmetric_index(&g, &cfg) {
        Ok(res) => {
            let bound = lower_bound(&g);
            if a.graph.json {
                let result = json!({
                    "value": res.value,
                    "mode": res.mode,
                    "witnesses": res.witnesses,
                    "lower_bound": bound,
                });
                out!(
                    "{}",
                    envelope(
                        argv,
                        Some(&g),
                        result,
                        serde_json::to_value(&res.stats).unwrap()
                    )
                );
            } else {
                out!("ai = {} ({})", res.value, res.mode);
                out!("transposable-clique lower bound: {bound}");
                for w in &res.witnesses {
                    out!("witness: {}", w.display_with_offset(offset));
                }
                out!(
                    "tested {} graphs, layers {:?}, |Aut| = {}",
                    res.stats.graphs_tested,
                    res.stats.layer_sizes,
                    res.stats.group_order
                );
            }
            Ok(0)
        }
        Err(e) => {
            let (code, result, stats) = match &e {
                AiError::NoAsymmetrization { n } => (
                    EXIT_NO_ASYMMETRIZATION,
                    json!({"error": "no-asymmetrization", "n": n}),
                    Value::Null,
                ),
                AiError::BudgetExceeded {
                    budget,
                    lower_bound,
                    exhausted,
                    stats,
                } => (
                    EXIT_BUDGET,
                    json!({
                        "error": "budget-exceeded",
                        "budget": budget,
                        "lower_bound": lower_bound,
                        "exhausted": exhausted,
                    }),
                    serde_json::to_value(stats).unwrap(),
                ),
            };
            if a.graph.json {
                out!("{}", envelope(argv, Some(&g), result, stats));
            }
            Err(Failure {
                code,
                message: e.to_string(),
            })
        }
    }
}

fn cmd_aut(a: &AutArgs, argv: &[String]) -> Outcome {
    let g = input::read_graph(&a.graph.input).map_err(Failure::usage)?;
    let rep = automorphism_group(&g);
    if a.graph.json {
        let result = json!({
            "is_asymmetric": rep.is_asymmetric,
            "order": rep.order.to_string(),
            "generators": rep.generators.iter().map(|p| p.as_slice()).collect::<Vec<_>>(),
            "orbits": rep.orbits,
        });
        let stats =
            json!({"n": g.n(), "edges": g.edge_count(), "generators": rep.generators.len()});
        out!("{}", envelope(argv, Some(&g), result, stats));
        return Ok(0);
    }
    let offset = usize::from(a.graph.one_based);
    out!("n = {}, m = {}", g.n(), g.edge_count());
    out!("asymmetric: {}", rep.is_asymmetric);
    out!("order: {}", rep.order);
    for p in &rep.generators {
        out!("generator: {}", p.cycle_notation(offset));
    }
    let orbits: Vec<String> = rep
        .orbits
        .iter()
        .map(|o| {
            format!(
                "{{{}}}",
                o.iter()
                    .map(|v| (v + offset).to_string())
                    .collect::<Vec<_>>()
                    .join(" ")
            )
        })
        .collect();
    out!("orbits: {}", orbits.join(" "));
    Ok(0)
}

fn cmd_count(a: &CountArgs, argv: &[String]) -> Outcome {
    if a.n < 6 {
        return Err(Failure::usage(format!(
            "count-cycle-aug needs n >= 6, got {}",
            a.n
        )));
    }
    let n = usize::try_from(a.n).map_err(|_| Failure::usage("n out of range"))?;
    let cycle = FamilySpec::Cycle(n)
        .generate()
        .map_err(|e| Failure::usage(e.to_string()))?;
    let oracle = count_nonisomorphic_asymmetrizations(&cycle, 0, 2) as i64;
    let variants: Vec<(Variant, i64)> = if a.compare {
        [Variant::Text, Variant::Remark]
            .into_iter()
            .map(|v| {
                Ok((
                    v,
                    cycle_augmentation_formula(a.n, v)
                        .map_err(|e| Failure::usage(e.to_string()))?,
                ))
            })
            .collect::<Result<_, Failure>>()?
    } else {
        Vec::new()
    };
    if a.json {
        let mut result = json!({"n": n, "oracle": oracle});
        for (v, val) in &variants {
            result[v.to_string()] = json!({"value": val, "matches": *val == oracle});
        }
        out!(
            "{}",
            envelope(argv, Some(&cycle), result, json!({"r": 0, "s": 2}))
        );
        return Ok(0);
    }
    out!("n = {n}");
    out!("oracle: {oracle}");
    for (v, val) in &variants {
        let flag = if *val == oracle { "match" } else { "MISMATCH" };
        out!("{v}: {val} {flag}");
    }
    Ok(0)
}

fn cmd_verify(a: &VerifyArgs, config: &Config, argv: &[String]) -> Outcome {
    if a.list {
        for (id, summary) in catalog() {
            out!("{id:<26} {summary}");
        }
        return Ok(0);
    }
    let mut cfg = SuiteConfig {
        ranges: Ranges {
            n: a.n,
            r: a.r,
            s: a.s,
        },
        ..SuiteConfig::default()
    };
    if let Some(b) = config.budget {
        cfg.budget = b;
    }
    if let Some(b) = a.budget {
        cfg.budget = b;
    }
    if let Some(w) = config.witness_cap {
        cfg.witness_cap = w;
    }
    if let Some(list) = &config.allowlist {
        cfg.allowlist = list.clone();
    }
    let rows = match &a.claim {
        Some(id) => verify_claim(id, &cfg).map_err(|e| match e {
            SuiteError::UnknownClaim(_) => {
                Failure::usage(format!("{e}; see `graphsym verify --list`"))
            }
            other => Failure::usage(other.to_string()),
        })?,
        None => verify_suite(&cfg),
    };
    let unexpected = unexpected_refutations(&rows);
    let allowlisted: Vec<String> = rows
        .iter()
        .filter(|r| r.allowlisted)
        .map(|r| r.key())
        .collect();
    let count = |s: Status| rows.iter().filter(|r| r.status == s).count();
    if a.json {
        let stats = json!({
            "rows": rows.len(),
            "confirmed": count(Status::Confirmed),
            "refuted": count(Status::Refuted),
            "budget_exceeded": count(Status::BudgetExceeded),
            "not_applicable": count(Status::NotApplicable),
            "unexpected_refutations": unexpected.len(),
            "budget": cfg.budget,
            "allowlist": cfg.allowlist,
            "allowlisted": allowlisted,
        });
        out!(
            "{}",
            envelope(argv, None, serde_json::to_value(&rows).unwrap(), stats)
        );
    } else {
        out_raw!("{}", render_table(&rows));
        out!(
            "{} rows: {} confirmed, {} refuted, {} budget-exceeded, {} not-applicable",
            rows.len(),
            count(Status::Confirmed),
            count(Status::Refuted),
            count(Status::BudgetExceeded),
            count(Status::NotApplicable)
        );
        out!("allowlist: {}", cfg.allowlist.join(", "));
    }
    for key in &allowlisted {
        eprintln!("allowlist applied: {key}");
    }
    if unexpected.is_empty() {
        return Ok(0);
    }
    for r in &unexpected {
        eprintln!("unexpected refutation: {}", r.key());
    }
    Ok(EXIT_REFUTED)
}
