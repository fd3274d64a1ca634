//! `a22` — command-line verification harness.
//!
//! Subcommands:
//!
//! - `verify theorem-a` / `verify theorem-3-1` — run the four counting
//!   pipelines up to a bound and compare them;
//! - `verify lemma-embeddings` — recompute the six length-3 embedding sums
//!   and the 161 dimension check;
//! - `derive rules --spec S0,S1` — push the pattern families through a
//!   specialization and print the induced pair-rule table;
//! - `enumerate --spec S0,S1 --max-n N [--list n]` — count (or list) the
//!   admissible basis monomials by weight;
//! - `series --product pm1mod6|distinct-odd --max-n N` — print product-side
//!   coefficients.
//!
//! Exit codes: 0 on full agreement, 1 when a verification found mismatches,
//! 2 on usage or domain errors. Data output is deterministic byte-for-byte;
//! wall-clock durations go to stderr (and into JSON reports only).

use std::fmt::Write as _;
use std::num::NonZeroUsize;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use a22_basis::embedding::{lemma22_sums, ResidueClassSums};
use a22_basis::enumerate::{count_basis_with_workers, list_basis};
use a22_basis::identity::{
    derive_rule_table, verify_identity, IdentityKind, VerificationReport, PIPELINES,
};
use a22_basis::qseries;
use a22_basis::{LeadingTermTable, Specialization};

#[derive(Parser)]
#[command(
    name = "a22",
    version,
    about = "Verification harness for the basic A2(2) module basis and its partition identities"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Verify an identity or the embedding-count lemma.
    Verify {
        #[command(subcommand)]
        target: VerifyTarget,
    },
    /// Derive tables from the compiled pattern families.
    Derive {
        #[command(subcommand)]
        what: DeriveTarget,
    },
    /// Count admissible basis monomials by specialized weight.
    Enumerate(EnumerateArgs),
    /// Print coefficients of a product-side series.
    Series(SeriesArgs),
}

#[derive(Subcommand)]
enum VerifyTarget {
    /// Difference-5 identity at specialization (2,1) vs distinct odd parts.
    #[command(name = "theorem-a")]
    TheoremA(VerifyArgs),
    /// Two-colored difference-4 identity at (1,1) vs parts ≡ ±1 mod 6.
    #[command(name = "theorem-3-1")]
    Theorem31(VerifyArgs),
    /// The six length-3 embedding sums (81,81,81,80,80,80) and 81+80=161.
    #[command(name = "lemma-embeddings")]
    LemmaEmbeddings(LemmaArgs),
}

#[derive(Args)]
struct VerifyArgs {
    /// Largest weight to check.
    #[arg(long = "max-n", default_value_t = 200)]
    max_n: u64,
    /// Worker threads for the basis enumeration (default: all cores).
    #[arg(long)]
    workers: Option<NonZeroUsize>,
    /// Stdout format.
    #[arg(long, value_enum, default_value_t = Format::Table)]
    format: Format,
    /// Also write the JSON report to this path.
    #[arg(long)]
    json: Option<PathBuf>,
}

#[derive(Args)]
struct LemmaArgs {
    /// Degree window radius for the translation-class enumeration.
    #[arg(long, default_value_t = 3)]
    window: u32,
    /// Stdout format.
    #[arg(long, value_enum, default_value_t = Format::Table)]
    format: Format,
    /// Also write the JSON report to this path.
    #[arg(long)]
    json: Option<PathBuf>,
}

#[derive(Subcommand)]
enum DeriveTarget {
    /// The pair-rule table induced by a specialization.
    Rules {
        /// Specialization as two comma-separated nonnegative integers.
        #[arg(long, value_parser = parse_spec)]
        spec: Specialization,
        /// Stdout format.
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
}

#[derive(Args)]
struct EnumerateArgs {
    /// Specialization as two comma-separated nonnegative integers.
    #[arg(long, value_parser = parse_spec)]
    spec: Specialization,
    /// Largest weight to count.
    #[arg(long = "max-n", default_value_t = 200)]
    max_n: u64,
    /// List the explicit monomials of this weight instead of counting.
    #[arg(long)]
    list: Option<u64>,
    /// Worker threads (default: all cores).
    #[arg(long)]
    workers: Option<NonZeroUsize>,
}

#[derive(Args)]
struct SeriesArgs {
    /// Which product to expand.
    #[arg(long, value_enum)]
    product: Product,
    /// Truncation order.
    #[arg(long = "max-n", default_value_t = 200)]
    max_n: u64,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Product {
    /// ∏ 1/(1−qⁿ) over n ≡ ±1 (mod 6).
    Pm1mod6,
    /// ∏ (1+q^(2n−1)).
    DistinctOdd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Csv,
    Json,
}

fn parse_spec(text: &str) -> Result<Specialization, String> {
    let (s0, s1) = text
        .split_once(',')
        .ok_or_else(|| format!("expected S0,S1 but got {text:?}"))?;
    let s0: u64 = s0
        .trim()
        .parse()
        .map_err(|_| format!("{s0:?} is not a nonnegative integer"))?;
    let s1: u64 = s1
        .trim()
        .parse()
        .map_err(|_| format!("{s1:?} is not a nonnegative integer"))?;
    Specialization::new(s0, s1).map_err(|e| e.to_string())
}

fn workers_or_default(workers: Option<NonZeroUsize>) -> NonZeroUsize {
    workers.unwrap_or_else(|| {
        std::thread::available_parallelism().unwrap_or(NonZeroUsize::new(1).unwrap())
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

/// Ok(true) = success, Ok(false) = verification mismatch, Err = usage/domain.
fn run(cli: Cli) -> Result<bool, String> {
    let table = LeadingTermTable::global();
    match cli.command {
        Command::Verify { target } => match target {
            VerifyTarget::TheoremA(args) => run_verify(table, IdentityKind::TheoremA, args),
            VerifyTarget::Theorem31(args) => run_verify(table, IdentityKind::Theorem31, args),
            VerifyTarget::LemmaEmbeddings(args) => run_lemma(table, args),
        },
        Command::Derive { what } => match what {
            DeriveTarget::Rules { spec, format } => {
                let rules = derive_rule_table(table, spec).map_err(|e| e.to_string())?;
                match format {
                    Format::Json => {
                        println!(
                            "{}",
                            serde_json::to_string_pretty(&rules).map_err(|e| e.to_string())?
                        );
                    }
                    _ => print!("{}", rules.render()),
                }
                Ok(true)
            }
        },
        Command::Enumerate(args) => run_enumerate(table, args),
        Command::Series(args) => run_series(args),
    }
}

fn run_verify(
    table: &LeadingTermTable,
    kind: IdentityKind,
    args: VerifyArgs,
) -> Result<bool, String> {
    let report = verify_identity(table, kind, args.max_n, workers_or_default(args.workers));

    match args.format {
        Format::Table => print!("{}", render_report_table(&report)),
        Format::Csv => print!("{}", render_report_csv(&report)),
        Format::Json => {
            println!(
                "{}",
                serde_json::to_string_pretty(&report).map_err(|e| e.to_string())?
            );
        }
    }
    if let Some(path) = &args.json {
        let json = serde_json::to_string_pretty(&report).map_err(|e| e.to_string())?;
        std::fs::write(path, json).map_err(|e| format!("cannot write {}: {e}", path.display()))?;
    }
    eprintln!("duration_ms: {}", report.duration_ms);
    Ok(report.agreed())
}

fn render_report_table(report: &VerificationReport) -> String {
    let mut out = String::new();
    let total = report.max_n + 1;
    let _ = writeln!(out, "identity: {}", report.identity);
    let _ = writeln!(out, "max_n: {}", report.max_n);
    let _ = writeln!(out, "pipelines: {}", PIPELINES.join(", "));
    let _ = writeln!(
        out,
        "agreements: {}/{total}",
        total
            - report
                .mismatches
                .iter()
                .map(|m| m.n)
                .collect::<std::collections::BTreeSet<_>>()
                .len() as u64
    );
    for m in &report.mismatches {
        let _ = writeln!(
            out,
            "mismatch: n={} pipeline={} expected={} got={}",
            m.n, m.pipeline, m.expected, m.got
        );
    }
    let _ = writeln!(
        out,
        "status: {}",
        if report.agreed() { "OK" } else { "MISMATCH" }
    );
    out
}

fn render_report_csv(report: &VerificationReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "n,{}", PIPELINES.join(","));
    for n in 0..=report.max_n as usize {
        let row: Vec<String> = report.counts.iter().map(|c| c[n].to_string()).collect();
        let _ = writeln!(out, "{n},{}", row.join(","));
    }
    out
}

const EXPECTED_HALF: [u64; 3] = [81, 81, 81];
const EXPECTED_INT: [u64; 3] = [80, 80, 80];
const EXPECTED_DIMENSION: u64 = 161;

fn run_lemma(table: &LeadingTermTable, args: LemmaArgs) -> Result<bool, String> {
    if args.window < 3 {
        return Err("window radius must be at least 3".into());
    }
    let start = std::time::Instant::now();
    let sums = lemma22_sums(table, args.window);
    let ok = sums.half_integer_classes() == EXPECTED_HALF
        && sums.integer_classes() == EXPECTED_INT
        && sums.half_integer_classes()[0] + sums.integer_classes()[0] == EXPECTED_DIMENSION;

    match args.format {
        Format::Json => {
            println!(
                "{}",
                serde_json::to_string_pretty(&lemma_json(&sums, args.window, ok))
                    .map_err(|e| e.to_string())?
            );
        }
        _ => print!("{}", render_lemma_table(&sums, ok)),
    }
    if let Some(path) = &args.json {
        let json = serde_json::to_string_pretty(&lemma_json(&sums, args.window, ok))
            .map_err(|e| e.to_string())?;
        std::fs::write(path, json).map_err(|e| format!("cannot write {}: {e}", path.display()))?;
    }
    eprintln!("duration_ms: {}", start.elapsed().as_millis());
    Ok(ok)
}

fn render_lemma_table(sums: &ResidueClassSums, ok: bool) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "class   N-sum");
    for (label, sum) in sums.rows() {
        let _ = writeln!(out, "{label:<7} {sum}");
    }
    let half = sums.half_integer_classes()[0];
    let int = sums.integer_classes()[0];
    let _ = writeln!(
        out,
        "{half}+{int}={} {}",
        half + int,
        if ok { "OK" } else { "MISMATCH" }
    );
    out
}

fn lemma_json(sums: &ResidueClassSums, window: u32, ok: bool) -> serde_json::Value {
    let classes: Vec<serde_json::Value> = sums
        .rows()
        .iter()
        .map(|(label, sum)| serde_json::json!({ "class": label, "sum": sum }))
        .collect();
    serde_json::json!({
        "window_radius": window,
        "classes": classes,
        "dimension_check": {
            "half_integer": sums.half_integer_classes()[0],
            "integer": sums.integer_classes()[0],
            "total": sums.half_integer_classes()[0] + sums.integer_classes()[0],
            "expected_total": EXPECTED_DIMENSION,
        },
        "ok": ok,
    })
}

fn run_enumerate(table: &LeadingTermTable, args: EnumerateArgs) -> Result<bool, String> {
    match args.list {
        Some(n) => {
            let monomials = list_basis(table, args.spec, n).map_err(|e| e.to_string())?;
            let mut out = String::new();
            for monomial in &monomials {
                let _ = writeln!(out, "{monomial}");
            }
            print!("{out}");
        }
        None => {
            let counts = count_basis_with_workers(
                table,
                args.spec,
                args.max_n,
                workers_or_default(args.workers),
            )
            .map_err(|e| e.to_string())?;
            let mut out = String::new();
            let _ = writeln!(out, "n,count");
            for (n, count) in counts.iter().enumerate() {
                let _ = writeln!(out, "{n},{count}");
            }
            print!("{out}");
        }
    }
    Ok(true)
}

fn run_series(args: SeriesArgs) -> Result<bool, String> {
    let order = args.max_n as usize;
    let series = match args.product {
        Product::Pm1mod6 => qseries::product_pm1_mod6(order),
        Product::DistinctOdd => qseries::product_distinct_odd(order),
    };
    let mut out = String::new();
    let _ = writeln!(out, "n,coefficient");
    for (n, c) in series.coefficients().iter().enumerate() {
        let _ = writeln!(out, "{n},{c}");
    }
    print!("{out}");
    Ok(true)
}
