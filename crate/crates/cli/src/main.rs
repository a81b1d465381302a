use std::fs::File;
use std::io::{self, BufRead, BufReader, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use triex_core::extremal::ExtremalError;
use triex_core::oracle::{check_report, OracleError, DEFAULT_WORK_CEILING, MAX_SWEEP_VERTICES};
use triex_core::schur::{self, BoundReport, SchurError};
use triex_core::{
    build_extremal, enumerate_max, graph6, max_triangles, maximizer_catalogue, rivin_bound,
    triangular_decompose, verify_rivin_average, EnumerationConfig, EnumerationMode,
    EnumerationTask,
};

const CEILING_VAR: &str = "TRIEX_WORK_CEILING";
const SWEEP_MAX_M: u64 = 8;

#[derive(Parser)]
#[command(
    name = "triex",
    version,
    about = "Triangle-maximal graphs and Schur multiplier bounds"
)]
struct Cli {
    #[arg(long, value_enum, default_value_t = Output::Text, global = true)]
    output: Output,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Output {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Variant {
    Auto,
    Connected,
    Disconnected,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Structural,
    Exhaustive,
}

#[derive(Clone, Copy, ValueEnum)]
enum Formula {
    Special,
    Nil3,
    Simple,
    Sharpened,
    Nonhomocyclic,
    Vermani,
    Coclass,
    Table1,
}

#[derive(Subcommand)]
enum Command {
    /// Maximum triangle count for n edges, next to the Rivin bound.
    Bound {
        #[arg(long)]
        edges: u64,
    },
    /// Print graph6 for each triangle-maximal graph with n edges.
    Construct {
        #[arg(long)]
        edges: u64,
        #[arg(long, value_enum, default_value_t = Variant::Auto)]
        variant: Variant,
    },
    /// Count triangles of graph6 graphs, one per line.
    Triangles {
        /// Read from a file instead of stdin.
        #[arg(long)]
        input: Option<PathBuf>,
    },
    /// Check the closed form and catalogue against brute force.
    Verify {
        #[arg(long)]
        max_edges: u64,
        #[arg(long, value_enum, default_value_t = Mode::Structural)]
        mode: Mode,
        /// Vertex budget for every n; defaults depend on the mode.
        #[arg(long)]
        vertex_budget: Option<usize>,
        /// Worker threads; 0 picks the machine default.
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        /// Largest vertex count for the per-edge triangle average sweep.
        #[arg(long, default_value_t = 6)]
        sweep_vertices: usize,
    },
    /// Evaluate a Schur multiplier bound.
    Schur {
        #[arg(value_enum)]
        formula: Formula,
        #[command(flatten)]
        params: SchurParams,
    },
}

#[derive(clap::Args)]
struct SchurParams {
    #[arg(long)]
    p: Option<u64>,
    #[arg(long)]
    d: Option<u64>,
    #[arg(long)]
    k: Option<u64>,
    #[arg(long)]
    n: Option<u64>,
    #[arg(long)]
    e: Option<u64>,
    #[arg(long)]
    delta: Option<u64>,
    /// Invariants of G^ab, non-increasing.
    #[arg(long, value_delimiter = ',')]
    alpha: Option<Vec<u64>>,
    /// Invariants of K, used with --alpha when --tensor is absent.
    #[arg(long, value_delimiter = ',')]
    beta: Option<Vec<u64>>,
    #[arg(long)]
    coclass: Option<u64>,
    #[arg(long)]
    m: Option<u64>,
    #[arg(long)]
    rsub: Option<u64>,
    #[arg(long)]
    dquot: Option<u64>,
    /// log_p |(G/K)^ab ⊗ K|.
    #[arg(long)]
    tensor: Option<u64>,
}

enum Failure {
    Usage(String),
    Mismatch(String),
}

impl From<SchurError> for Failure {
    fn from(e: SchurError) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<ExtremalError> for Failure {
    fn from(e: ExtremalError) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let out = cli.output;
    let result = match cli.command {
        Command::Bound { edges } => cmd_bound(edges, out),
        Command::Construct { edges, variant } => cmd_construct(edges, variant, out),
        Command::Triangles { input } => cmd_triangles(input, out),
        Command::Verify {
            max_edges,
            mode,
            vertex_budget,
            jobs,
            sweep_vertices,
        } => cmd_verify(max_edges, mode, vertex_budget, jobs, sweep_vertices, out),
        Command::Schur { formula, params } => cmd_schur(formula, &params, out),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Mismatch(msg)) => {
            eprintln!("triex: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("triex: {msg}");
            ExitCode::from(2)
        }
    }
}

fn emit(value: serde_json::Value) {
    println!("{value}");
}

fn cmd_bound(n: u64, out: Output) -> Outcome {
    let d = triangular_decompose(n);
    let max = max_triangles(n);
    // the smallest graph holding n edges, so the Rivin bound is tightest
    let vertices = d.min_vertex_count();
    let rivin = rivin_bound(n, vertices).ok();
    let gap = rivin.map(|b| b - max as f64);
    match out {
        Output::Json => emit(json!({
            "n": n,
            "r": d.r,
            "t": d.t,
            "max_triangles": max,
            "rivin_vertices": vertices,
            "rivin": rivin,
            "gap": gap,
        })),
        Output::Text => {
            let fmt = |x: Option<f64>| x.map_or_else(|| "n/a".to_string(), |x| format!("{x:.6}"));
            println!(
                "n={n} r={} t={} max={max} rivin(V={vertices})={} gap={}",
                d.r,
                d.t,
                fmt(rivin),
                fmt(gap)
            );
        }
    }
    Ok(())
}

fn cmd_construct(n: u64, variant: Variant, out: Output) -> Outcome {
    let d = triangular_decompose(n);
    let shapes: Vec<_> = maximizer_catalogue(n)
        .into_iter()
        .filter(|s| match variant {
            Variant::Auto => true,
            Variant::Connected => s.is_connected(),
            Variant::Disconnected => !s.is_connected(),
        })
        .collect();
    if shapes.is_empty() {
        return Err(Failure::Usage(format!(
            "no disconnected maximizer for n = {n} (t = {}): a disconnected maximizer forces n = C(r,2)+1",
            d.t
        )));
    }
    for shape in shapes {
        let g = build_extremal(shape)?;
        let line = graph6::encode(&g);
        match out {
            Output::Json => emit(json!({
                "n": n,
                "shape": shape.to_string(),
                "graph6": line,
                "vertices": g.vertex_count(),
                "triangles": g.triangle_count(),
            })),
            Output::Text => println!("{line}"),
        }
    }
    Ok(())
}

fn cmd_triangles(input: Option<PathBuf>, out: Output) -> Outcome {
    let reader: Box<dyn BufRead> = match &input {
        Some(path) => {
            Box::new(BufReader::new(File::open(path).map_err(|e| {
                Failure::Usage(format!("{}: {e}", path.display()))
            })?))
        }
        None => Box::new(io::stdin().lock()),
    };
    let mut bad = 0;
    let stdout = io::stdout();
    let mut stdout = stdout.lock();
    for (i, line) in reader.lines().enumerate() {
        let line = line?;
        let text = line.trim();
        if text.is_empty() {
            continue;
        }
        let number = i + 1;
        match graph6::decode(text) {
            Ok(g) => {
                let triangles = g.triangle_count();
                match out {
                    Output::Json => writeln!(
                        stdout,
                        "{}",
                        json!({
                            "line": number,
                            "graph6": text,
                            "vertices": g.vertex_count(),
                            "edges": g.edge_count(),
                            "triangles": triangles,
                        })
                    )?,
                    Output::Text => writeln!(stdout, "{triangles}")?,
                }
            }
            Err(e) => {
                bad += 1;
                eprintln!("line {number}: {e}");
            }
        }
    }
    if bad > 0 {
        return Err(Failure::Usage(format!("{bad} malformed line(s)")));
    }
    Ok(())
}

fn work_ceiling() -> Result<u128, Failure> {
    match std::env::var(CEILING_VAR) {
        Ok(v) => v.trim().parse().map_err(|_| {
            Failure::Usage(format!(
                "{CEILING_VAR} must be a non-negative integer, got {v:?}"
            ))
        }),
        Err(_) => Ok(DEFAULT_WORK_CEILING),
    }
}

fn cmd_verify(
    max_edges: u64,
    mode: Mode,
    budget: Option<usize>,
    jobs: usize,
    sweep_vertices: usize,
    out: Output,
) -> Outcome {
    if sweep_vertices > MAX_SWEEP_VERTICES {
        return Err(Failure::Usage(format!(
            "--sweep-vertices is at most {MAX_SWEEP_VERTICES}"
        )));
    }
    let mode = match mode {
        Mode::Structural => EnumerationMode::Structural,
        Mode::Exhaustive => EnumerationMode::Exhaustive,
    };
    let config = EnumerationConfig {
        jobs,
        work_ceiling: work_ceiling()?,
    };
    let oracle = |e: OracleError| Failure::Usage(e.to_string());
    let mut failures = 0;
    if out == Output::Text {
        println!(
            "{:>4} {:>3} {:>3} {:>6} {:>12} {:>8} {:>8} {:>7}  result",
            "n", "r", "t", "budget", "subsets", "formula", "observed", "classes"
        );
    }
    for n in 1..=max_edges {
        let task = match budget {
            Some(b) => EnumerationTask::with_budget(n, b, mode),
            None => EnumerationTask::new(n, mode),
        }
        .map_err(oracle)?;
        let report = enumerate_max(&task, &config).map_err(oracle)?;
        // a small exhaustive budget can exclude the disconnected maximizer, so
        // only the maximum is judged there
        let verdict = match mode {
            EnumerationMode::Structural => check_report(&report).map_err(|e| e.to_string()),
            EnumerationMode::Exhaustive if report.observed_max == report.formula_max => Ok(()),
            EnumerationMode::Exhaustive => Err(format!(
                "observed maximum {} but formula gives {}",
                report.observed_max, report.formula_max
            )),
        };
        if verdict.is_err() {
            failures += 1;
        }
        match out {
            Output::Json => {
                let mut value = serde_json::to_value(&report).expect("report serializes");
                value["pass"] = json!(verdict.is_ok());
                if let Err(msg) = &verdict {
                    value["detail"] = json!(msg);
                }
                emit(value);
            }
            Output::Text => println!(
                "{:>4} {:>3} {:>3} {:>6} {:>12} {:>8} {:>8} {:>7}  {}",
                n,
                report.r,
                report.t,
                report.vertex_budget,
                report.subsets,
                report.formula_max,
                report.observed_max,
                report.maximizer_classes.len(),
                match &verdict {
                    Ok(()) => "PASS".to_string(),
                    Err(msg) => format!("FAIL {msg}"),
                }
            ),
        }
    }
    for v in 0..=sweep_vertices {
        for m in 2..=SWEEP_MAX_M {
            let r = verify_rivin_average(v, m).map_err(oracle)?;
            if !r.holds {
                failures += 1;
            }
            match out {
                Output::Json => emit(json!({ "rivin_average": r })),
                Output::Text => println!(
                    "average v={v} m={m}: {} graphs, {} applicable, {} equality  {}",
                    r.graphs_checked,
                    r.applicable,
                    r.equality_cases,
                    if r.holds {
                        "PASS".to_string()
                    } else {
                        format!("FAIL {}", r.witness.unwrap_or_default())
                    }
                ),
            }
        }
    }
    if failures > 0 {
        return Err(Failure::Mismatch(format!("{failures} check(s) failed")));
    }
    Ok(())
}

fn need(value: Option<u64>, flag: &str) -> Result<u64, Failure> {
    value.ok_or_else(|| Failure::Usage(format!("--{flag} is required for this formula")))
}

fn need_list<'a>(value: &'a Option<Vec<u64>>, flag: &str) -> Result<&'a [u64], Failure> {
    value
        .as_deref()
        .ok_or_else(|| Failure::Usage(format!("--{flag} is required for this formula")))
}

fn print_bound(r: &BoundReport, out: Output) {
    match out {
        Output::Json => emit(serde_json::to_value(r).expect("report serializes")),
        Output::Text => {
            let inputs: Vec<String> = r
                .inputs
                .iter()
                .map(|(k, v)| match v {
                    schur::InputValue::Int(x) => format!("{k}={x}"),
                    schur::InputValue::List(xs) => {
                        format!(
                            "{k}=({})",
                            xs.iter().map(u64::to_string).collect::<Vec<_>>().join(",")
                        )
                    }
                })
                .collect();
            let target = serde_json::to_value(r.bound_on).expect("target serializes");
            let id = serde_json::to_value(r.formula_id).expect("id serializes");
            println!(
                "{} [{}]: log_p |{}| <= {} (floor {})",
                id.as_str().unwrap_or_default(),
                inputs.join(" "),
                target.as_str().unwrap_or_default(),
                schur::format_fraction(&r.exponent_rational),
                r.exponent_floor
            );
            if let Some(s) = &r.secondary {
                println!(
                    "  {}: {} (floor {})",
                    s.label,
                    schur::format_fraction(&s.exponent_rational),
                    s.exponent_floor
                );
            }
            for a in &r.assumptions {
                println!("  assumes: {a}");
            }
        }
    }
}

fn cmd_schur(formula: Formula, a: &SchurParams, out: Output) -> Outcome {
    let report = match formula {
        Formula::Table1 => {
            let rows = schur::table1();
            let mut all = true;
            for row in &rows {
                all &= row.matches;
                match out {
                    Output::Json => emit(serde_json::to_value(row).expect("row serializes")),
                    Output::Text => println!(
                        "SmallGroup(3^{}, {}) d={} k={} reported={} computed={} {}",
                        row.order_exponent,
                        row.group_id,
                        row.d,
                        row.k,
                        row.reported_exponent,
                        schur::format_fraction(&row.computed.exponent_rational),
                        if row.matches { "match" } else { "MISMATCH" }
                    ),
                }
            }
            return if all {
                Ok(())
            } else {
                Err(Failure::Mismatch(
                    "table row disagrees with the computed bound".into(),
                ))
            };
        }
        Formula::Special => {
            schur::special_bound(need(a.p, "p")?, need(a.d, "d")?, need(a.k, "k")?)?
        }
        Formula::Nil3 => schur::nil3_bound(
            need(a.p, "p")?,
            need(a.d, "d")?,
            need(a.n, "n")?,
            need(a.k, "k")?,
            need(a.e, "e")?,
            need(a.delta, "delta")?,
        )?,
        Formula::Simple => schur::simple_nil3_bound(
            need(a.p, "p")?,
            need(a.d, "d")?,
            need(a.n, "n")?,
            need(a.k, "k")?,
        )?,
        Formula::Sharpened => schur::sharpened_nil3_bound(
            need(a.p, "p")?,
            need(a.d, "d")?,
            need(a.n, "n")?,
            need(a.k, "k")?,
            need(a.delta, "delta")?,
            need_list(&a.alpha, "alpha")?,
        )?,
        Formula::Nonhomocyclic => schur::non_homocyclic_bound(
            need(a.p, "p")?,
            need(a.d, "d")?,
            need(a.n, "n")?,
            need(a.k, "k")?,
            need_list(&a.alpha, "alpha")?,
        )?,
        Formula::Vermani => {
            let tensor = match a.tensor {
                Some(t) => t,
                None => {
                    let (alpha, beta) =
                        (need_list(&a.alpha, "alpha")?, need_list(&a.beta, "beta")?);
                    if alpha.iter().chain(beta).any(|&x| x == 0) {
                        return Err(Failure::Usage("invariants must be positive".into()));
                    }
                    schur::abelian_tensor_exponent(alpha, beta)
                }
            };
            schur::vermani_improved_bound(
                need(a.p, "p")?,
                need(a.m, "m")?,
                need(a.rsub, "rsub")?,
                need(a.dquot, "dquot")?,
                tensor,
            )?
        }
        Formula::Coclass => schur::coclass_bound(
            need(a.p, "p")?,
            need(a.coclass, "coclass")?,
            need(a.k, "k")?,
        )?,
    };
    print_bound(&report, out);
    Ok(())
}
