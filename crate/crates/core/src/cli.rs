//! The `pbound` command line.
//!
//! Exit codes: 0 on success, 1 when a verification finds a counterexample,
//! 2 on invalid input or an exceeded limit.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use serde::Serialize;

use crate::bounds::table::{c_table, render, TableFormat, LIMIT_CELL};
use crate::bounds::{
    an_upper_bound, bezout_exponents, c_bound, char_set_order_bound, component_order_bound, l_max, legacy_pierce_bound,
    leov_ackermann_bound, leov_recursive_bound_m2, mu_sequence, nullstellensatz_t, paper_gn, BoundReport,
    GrowthFunction,
};
use crate::consistency::d_r;
use crate::error::{Error, Result};
use crate::lattice::AntichainSequence;
use crate::limits::Limits;
use crate::oracle::{
    brute_max_d, check_sperner_lemma, check_techlem1, exhaustive_block_converse_m2, exhaustive_strict_macaulay,
    verify_hs_domination, VerificationReport,
};

#[derive(Debug, Parser)]
#[command(name = "pbound", version, about = "Prolongation-length bounds for differential kernels")]
pub struct Cli {
    /// Bit-length cap on every big integer (default: $PBOUND_BIT_CAP or 2^24).
    #[arg(long, global = true)]
    pub bit_cap: Option<u64>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Which {
    C,
    Pierce,
    LeovRec,
    LeovAck,
    AnUpper,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Growth {
    /// `g_n`, the growth function behind `C_{r,m}^n`.
    Gn,
    /// `f(i) = r + i - 1`.
    Arithmetic,
    /// `f(i) = 2^i r`.
    Doubling,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Macaulay,
    Sperner,
    Techlem1,
    BruteC,
    Domination,
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
    Md,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// One bound for (r, m, n).
    Bound {
        #[arg(long)]
        r: u64,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: u64,
        #[arg(long, value_enum, default_value = "c")]
        which: Which,
        /// Print the formula path and intermediates.
        #[arg(long)]
        explain: bool,
        #[arg(long)]
        json: bool,
    },
    /// `D_{r,ᾱ}` with its certificate, for an antichain sequence in JSON.
    Dr {
        #[arg(long)]
        file: PathBuf,
        #[arg(long)]
        r: u64,
        #[arg(long)]
        json: bool,
    },
    /// The greedy antichain sequence.
    Mu {
        #[arg(long)]
        r: u64,
        #[arg(long)]
        m: usize,
        #[arg(long, default_value_t = 1)]
        n: u32,
        #[arg(long, value_enum, default_value = "gn")]
        growth: Growth,
        #[arg(long)]
        json: bool,
    },
    /// The maximal length of an antichain sequence with bounded degree growth.
    Lmax {
        #[arg(long)]
        r: u64,
        #[arg(long)]
        m: usize,
        #[arg(long, default_value_t = 1)]
        n: u32,
        #[arg(long, value_enum, default_value = "gn")]
        growth: Growth,
    },
    /// Order, Nullstellensatz and Bézout bounds.
    Apps {
        #[arg(long)]
        r: u64,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: u64,
        #[arg(long)]
        dim_v: Option<u64>,
        #[arg(long)]
        json: bool,
    },
    /// Brute-force verification suites.
    Verify {
        #[arg(long, value_enum, default_value = "all")]
        suite: Suite,
        /// Smaller default ranges.
        #[arg(long)]
        quick: bool,
        /// Worker threads (default: all cores).
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long)]
        d: Option<u64>,
        #[arg(long)]
        r: Option<u64>,
        #[arg(long)]
        n: Option<u32>,
        #[arg(long)]
        json: bool,
    },
    /// `C_{r,m}^n` over a grid; ranges look like `1..5` or `1,2,7`.
    Table {
        #[arg(long)]
        rs: String,
        #[arg(long)]
        ms: String,
        #[arg(long)]
        ns: String,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
    },
}

/// Parses `a..b` (inclusive), `a`, and comma-separated mixtures.
pub fn parse_range(text: &str) -> Result<Vec<u64>> {
    let bad = || Error::InvalidArgument(format!("cannot read range {text:?}"));
    let mut out = Vec::new();
    for part in text.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        match part.split_once("..") {
            Some((a, b)) => {
                let a: u64 = a.trim().parse().map_err(|_| bad())?;
                let b: u64 = b.trim().trim_start_matches('=').parse().map_err(|_| bad())?;
                if a > b {
                    return Err(bad());
                }
                out.extend(a..=b);
            }
            None => out.push(part.parse().map_err(|_| bad())?),
        }
    }
    if out.is_empty() {
        return Err(bad());
    }
    Ok(out)
}

fn json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("report serializes") + "\n"
}

fn growth_function(growth: Growth, r: u64, m: usize, n: u32, limits: &Limits) -> Result<GrowthFunction> {
    Ok(match growth {
        Growth::Gn => paper_gn(&BigUint::from(r), m, u64::from(n), limits)?.0,
        Growth::Arithmetic => GrowthFunction::arithmetic(r),
        Growth::Doubling => GrowthFunction::doubling(r),
    })
}

fn bound_report(which: Which, r: u64, m: usize, n: u64, limits: &Limits) -> Result<BoundReport> {
    let big = BigUint::from(r);
    let n32 = || u32::try_from(n).map_err(|_| Error::InvalidArgument(format!("n = {n} is too large")));
    match which {
        Which::C => c_bound(&big, m, n, limits),
        Which::Pierce => legacy_pierce_bound(&big, m, n32()?, limits),
        Which::LeovRec => {
            if m != 2 {
                return Err(Error::InvalidArgument("the b_n recursion is stated for m = 2".into()));
            }
            leov_recursive_bound_m2(&big, n32()?, limits)
        }
        Which::LeovAck => leov_ackermann_bound(&big, m, n32()?, limits),
        Which::AnUpper => an_upper_bound(&big, m, n32()?, limits),
    }
}

fn explain(report: &BoundReport) -> String {
    let mut out = format!("{}\nformula_path: {}\n", report.value, json(&report.formula_path).trim().trim_matches('"'));
    for (name, value) in &report.intermediates {
        out += &format!("{name} = {value}\n");
    }
    for note in &report.notes {
        out += &format!("note: {note}\n");
    }
    out
}

#[derive(Serialize)]
struct Apps {
    char_set_order: Field,
    component_order: Field,
    nullstellensatz: Field,
    #[serde(skip_serializing_if = "Option::is_none")]
    bezout: Option<Field>,
}

#[derive(Serialize)]
#[serde(untagged)]
enum Field {
    Report(BoundReport),
    Limit { error: String },
}

fn field(result: Result<BoundReport>) -> Result<Field> {
    match result {
        Ok(report) => Ok(Field::Report(report)),
        Err(e @ (Error::ValueExceedsLimit { .. } | Error::BudgetExceeded { .. })) => Ok(Field::Limit { error: e.to_string() }),
        Err(e) => Err(e),
    }
}

fn apps_text(apps: &Apps) -> String {
    let line = |name: &str, f: &Field, keys: &[&str]| -> String {
        match f {
            Field::Limit { error } => format!("{name}: {LIMIT_CELL} ({error})\n"),
            Field::Report(rep) => {
                let mut s = format!("{name}: {}\n", rep.value);
                for k in keys {
                    if let Some(v) = rep.get(k) {
                        s += &format!("  {k} = {v}\n");
                    }
                }
                s
            }
        }
    };
    let mut out = line("char_set_order", &apps.char_set_order, &[]);
    out += &line("component_order", &apps.component_order, &[]);
    out += &line("nullstellensatz_T", &apps.nullstellensatz, &["alpha_{T-1}", "alpha_T"]);
    if let Some(b) = &apps.bezout {
        out += &line("bezout_e_V", b, &["e_W", "T'", "E"]);
    }
    out
}

fn verify(suite: Suite, quick: bool, m: Option<usize>, d: Option<u64>, r: Option<u64>, n: Option<u32>, limits: &Limits) -> Result<VerificationReport> {
    let mut parts = Vec::new();
    let wants = |s: Suite| suite == s || suite == Suite::All;
    if wants(Suite::Macaulay) {
        let cases: Vec<(usize, u64)> = match (m, d) {
            (Some(m), Some(d)) => vec![(m, d)],
            _ if quick => vec![(2, 2), (2, 3), (3, 2), (3, 3)],
            _ => vec![(2, 2), (2, 3), (2, 4), (2, 5), (3, 2), (3, 3)],
        };
        for (m, d) in cases {
            parts.push(exhaustive_strict_macaulay(m, d, limits)?);
            if m == 2 {
                parts.push(exhaustive_block_converse_m2(d, limits)?);
            }
        }
    }
    if wants(Suite::Sperner) {
        let range = if quick { 60 } else { 200 };
        for m in m.map_or(vec![2, 3], |m| vec![m]) {
            parts.push(check_sperner_lemma(m, range)?);
        }
    }
    if wants(Suite::Techlem1) {
        let samples = if quick { 2_000 } else { 10_000 };
        let (m, d) = (m.unwrap_or(2), d.unwrap_or(2));
        parts.push(check_techlem1(m, d, 3, samples, 1)?);
    }
    let tuples: Vec<(u64, usize, u32)> = match (r, m, n) {
        (Some(r), Some(m), Some(n)) => vec![(r, m, n)],
        _ => vec![(0, 2, 1), (1, 2, 1), (2, 2, 1), (1, 2, 2), (1, 3, 1), (2, 3, 1)],
    };
    if wants(Suite::BruteC) {
        for &(r, m, n) in &tuples {
            let c = c_bound(&BigUint::from(r), m, u64::from(n), limits)?.value;
            let c: u64 = c.try_into().map_err(|_| Error::InvalidArgument("C is too large to enumerate under".into()))?;
            parts.push(brute_max_d(r, m, n, c + 1, usize::MAX, limits)?);
        }
    }
    if wants(Suite::Domination) {
        for &(r, m, n) in &tuples {
            parts.push(verify_hs_domination(r, m, n, if quick { 20 } else { 200 }, limits)?);
        }
    }
    Ok(match parts.len() {
        1 => parts.pop().expect("one report"),
        _ => VerificationReport::merge(format!("suite {suite:?}").to_lowercase(), parts),
    })
}

fn verify_text(report: &VerificationReport) -> String {
    let mut out = format!(
        "{}: {} ({} instances, {} skipped)\n",
        report.claim,
        if report.passed() { "PASS" } else { "FAIL" },
        report.instances_checked,
        report.skipped
    );
    for (k, v) in &report.findings {
        out += &format!("  {k} = {v}\n");
    }
    for f in &report.failures {
        out += &format!("  counterexample: {f}\n");
    }
    out
}

fn dispatch(cli: Cli, out: &mut dyn Write) -> Result<i32> {
    let mut limits = Limits::from_env();
    if let Some(cap) = cli.bit_cap {
        limits = limits.with_bit_cap(cap);
    }
    let text = match cli.command {
        Command::Bound { r, m, n, which, explain: verbose, json: as_json } => {
            let report = bound_report(which, r, m, n, &limits)?;
            match (as_json, verbose) {
                (true, _) => json(&report),
                (false, true) => explain(&report),
                (false, false) => format!("{}\n", report.value),
            }
        }
        Command::Dr { file, r, json: as_json } => {
            let text = std::fs::read_to_string(&file)
                .map_err(|e| Error::InvalidArgument(format!("cannot read {}: {e}", file.display())))?;
            let seq: AntichainSequence =
                serde_json::from_str(&text).map_err(|e| Error::InvalidArgument(format!("invalid antichain: {e}")))?;
            let result = d_r(&seq, r);
            if as_json {
                json(&result)
            } else {
                let mut s = format!("{}\n", result.value);
                for ob in &result.obligations {
                    let chain: Vec<String> = ob.chain.iter().map(|c| c.xi().to_string()).collect();
                    s += &format!("{} i={} j={}: {}\n", ob.tau, ob.i, ob.j, chain.join(" - "));
                }
                if let Some(f) = &result.failure_below {
                    s += &format!("fails at p={}: {} i={} j={}\n", f.p, f.tau, f.i, f.j);
                }
                s
            }
        }
        Command::Mu { r, m, n, growth, json: as_json } => {
            let f = growth_function(growth, r, m, n, &limits)?;
            let seq = mu_sequence(&f, m, n, &limits)?;
            if as_json {
                json(&seq)
            } else {
                seq.elements().iter().map(|a| format!("{a}\n")).collect()
            }
        }
        Command::Lmax { r, m, n, growth } => {
            let f = growth_function(growth, r, m, n, &limits)?;
            format!("{}\n", l_max(&f, m, n, &limits)?)
        }
        Command::Apps { r, m, n, dim_v, json: as_json } => {
            let big = BigUint::from(r);
            let apps = Apps {
                char_set_order: field(char_set_order_bound(&big, m, n, &limits))?,
                component_order: field(component_order_bound(&big, m, n, &limits))?,
                nullstellensatz: field(nullstellensatz_t(&big, m, n, &limits))?,
                bezout: dim_v.map(|v| field(bezout_exponents(n, &big, m, &BigUint::from(v), &limits))).transpose()?,
            };
            if as_json {
                json(&apps)
            } else {
                apps_text(&apps)
            }
        }
        Command::Verify { suite, quick, jobs, m, d, r, n, json: as_json } => {
            let run = || verify(suite, quick, m, d, r, n, &limits);
            let report = match jobs {
                Some(j) => rayon::ThreadPoolBuilder::new()
                    .num_threads(j.max(1))
                    .build()
                    .map_err(|e| Error::InvalidArgument(format!("thread pool: {e}")))?
                    .install(run)?,
                None => run()?,
            };
            let text = if as_json { json(&report) } else { verify_text(&report) };
            out.write_all(text.as_bytes()).map_err(|e| Error::InvalidArgument(e.to_string()))?;
            return Ok(if report.passed() { 0 } else { 1 });
        }
        Command::Table { rs, ms, ns, format } => {
            let rs = parse_range(&rs)?;
            let ms: Vec<usize> = parse_range(&ms)?.into_iter().map(|m| m as usize).collect();
            let ns = parse_range(&ns)?;
            let rows = c_table(&rs, &ms, &ns, &limits)?;
            let format = match format {
                Format::Csv => TableFormat::Csv,
                Format::Json => TableFormat::Json,
                Format::Md => TableFormat::Markdown,
            };
            render(&rows, format)
        }
    };
    out.write_all(text.as_bytes()).map_err(|e| Error::InvalidArgument(e.to_string()))?;
    Ok(0)
}

/// Runs the command line, writing to `out` and `err`; returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    match dispatch(cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}
