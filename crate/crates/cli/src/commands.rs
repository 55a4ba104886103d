//! Argument definitions and the subcommand drivers.
//!
//! Exit codes: 0 success, 1 verification or table mismatch, 2 usage or parse
//! error, 3 enumeration cap or method domain violation.

use std::ffi::OsString;
use std::fmt;
use std::io::{self, Write};

use clap::{Args, Parser, Subcommand, ValueEnum};
use colmahon_core::arith::group_order;
use colmahon_core::lehmer::perm_to_code;
use colmahon_core::mahonian::{self, colored_row, gf_colored, MahonianMethod};
use colmahon_core::oracle::{verify_suite, Distribution, Status, DEFAULT_CAP};
use colmahon_core::special;
use colmahon_core::stats;
use colmahon_core::{ClassKind, ColoredPermutation, ExactInt, StatisticKind};
use serde_json::{json, Map, Value};

use crate::output::{write_json, Field, Format, Records};
use crate::parallel;
use crate::tables;

/// Environment variable overriding the default enumeration cap.
pub const CAP_ENV: &str = "MAHONIAN_CAP";

#[derive(Debug, Parser)]
#[command(
    name = "colmahon",
    version,
    about = "Colored inversions, colored Mahonian numbers and friends"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Statistics of one colored permutation.
    Stat(StatArgs),
    /// Histogram of a statistic over a class, by enumeration.
    Dist(DistArgs),
    /// Integer sequences from the closed forms.
    Seq(SeqArgs),
    /// Recompute a published table and diff it against the fixture.
    Table(TableArgs),
    /// Run every cross-check and print a JSON report.
    Verify(VerifyArgs),
}

fn colors(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(c) if c >= 1 => Ok(c),
        _ => Err(format!("expected a positive integer, got {s:?}")),
    }
}

fn class(s: &str) -> Result<ClassKind, String> {
    s.parse()
        .map_err(|_| format!("unknown class {s:?}; expected all, derangements or involutions"))
}

fn statistic(s: &str) -> Result<StatisticKind, String> {
    s.parse()
        .map_err(|_| format!("unknown statistic {s:?}; expected inv_c, tilde_inv_c, inv or col"))
}

fn method(s: &str) -> Result<MahonianMethod, String> {
    s.parse().map_err(|_| {
        let names: Vec<&str> = MahonianMethod::ALL.iter().map(|m| m.name()).collect();
        format!("unknown method {s:?}; expected one of {}", names.join(", "))
    })
}

#[derive(Debug, Args)]
pub struct StatArgs {
    /// One-line window, e.g. "3[1] 2 1[2] 4[1]".
    #[arg(long)]
    pub perm: String,
    #[arg(long, value_parser = colors)]
    pub c: usize,
    #[arg(long, value_enum, default_value = "csv")]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct DistArgs {
    #[arg(long, value_parser = colors)]
    pub c: usize,
    #[arg(long)]
    pub n: usize,
    #[arg(long, value_parser = class, default_value = "all")]
    pub class: ClassKind,
    #[arg(long, value_parser = statistic, default_value = "inv_c")]
    pub statistic: StatisticKind,
    /// Largest group to enumerate; defaults to $MAHONIAN_CAP, then 10^7.
    #[arg(long)]
    pub cap: Option<u64>,
    /// Compare the histogram against the matching closed forms.
    #[arg(long)]
    pub check: bool,
    #[arg(long)]
    pub threads: Option<usize>,
    #[arg(long, value_enum, default_value = "csv")]
    pub format: Format,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SeqName {
    /// Colored Mahonian numbers i_c(n, k).
    #[value(name = "ic")]
    Ic,
    /// Total inv_c over G_{c,n}.
    #[value(name = "I")]
    TotalInversions,
    /// Colored derangements.
    #[value(name = "d")]
    Derangements,
    /// Total inv_c over colored derangements.
    #[value(name = "t")]
    DerangementInversions,
    /// Colored involutions.
    #[value(name = "r")]
    Involutions,
    /// Total inv_c over colored involutions.
    #[value(name = "iinv")]
    InvolutionInversions,
}

#[derive(Debug, Args)]
pub struct SeqArgs {
    #[arg(long, value_enum)]
    pub name: SeqName,
    #[arg(long, value_parser = colors)]
    pub c: usize,
    #[arg(long, default_value_t = 1)]
    pub n_min: usize,
    #[arg(long)]
    pub n_max: usize,
    /// Only for ic: a single k per n instead of the whole row.
    #[arg(long)]
    pub k: Option<i64>,
    /// Only for ic.
    #[arg(long, value_parser = method)]
    pub method: Option<MahonianMethod>,
    #[arg(long, value_enum, default_value = "csv")]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    #[arg(long, value_parser = clap::value_parser!(u8).range(1..=4))]
    pub which: u8,
    #[arg(long)]
    pub threads: Option<usize>,
    #[arg(long, value_enum, default_value = "csv")]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Largest group enumerated; defaults to $MAHONIAN_CAP, then 10^7.
    #[arg(long)]
    pub budget: Option<u64>,
    #[arg(long)]
    pub threads: Option<usize>,
    /// JSON unless csv is asked for.
    #[arg(long, value_enum)]
    pub format: Option<Format>,
}

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Limit(String),
    Io(io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Limit(_) => 3,
            CliError::Io(_) => 1,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(msg) | CliError::Limit(msg) => f.write_str(msg),
            CliError::Io(e) => write!(f, "write failed: {e}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Io(e)
    }
}

/// Whether every check of a command held.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Outcome {
    Clean,
    Mismatch,
}

impl Outcome {
    fn from_ok(ok: bool) -> Self {
        if ok {
            Outcome::Clean
        } else {
            Outcome::Mismatch
        }
    }
}

/// The flag, else `$MAHONIAN_CAP`, else the oracle default.
pub fn resolve_cap(flag: Option<u64>) -> Result<u64, CliError> {
    if let Some(cap) = flag {
        return Ok(cap);
    }
    match std::env::var(CAP_ENV) {
        Ok(text) => text.trim().parse().map_err(|_| {
            CliError::Usage(format!(
                "{CAP_ENV} must be a non-negative integer, got {text:?}"
            ))
        }),
        Err(_) => Ok(DEFAULT_CAP),
    }
}

fn threads(flag: Option<usize>) -> usize {
    flag.unwrap_or_else(parallel::default_threads).max(1)
}

/// Parses `args` (program name first), runs, and returns the exit code.
pub fn main_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{rendered}");
                2
            } else {
                let _ = write!(out, "{rendered}");
                0
            };
        }
    };
    match run(&cli.command, out, err) {
        Ok(Outcome::Clean) => 0,
        Ok(Outcome::Mismatch) => 1,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

pub fn run(
    command: &Command,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<Outcome, CliError> {
    match command {
        Command::Stat(args) => stat(args, out),
        Command::Dist(args) => dist(args, out, err),
        Command::Seq(args) => seq(args, out),
        Command::Table(args) => table(args, out, err),
        Command::Verify(args) => verify(args, out),
    }
}

pub fn stat_record(sigma: &ColoredPermutation) -> Records {
    let mut r = Records::new(&[
        "permutation",
        "c",
        "n",
        "inv",
        "maj",
        "col",
        "cross_term",
        "inv_c",
        "tilde_inv_c",
        "lehmer_code",
        "cycles",
        "derangement",
        "involution",
    ]);
    let cycles: String = sigma
        .cycle_decomposition()
        .iter()
        .map(|cycle| cycle.to_string())
        .collect();
    r.push(vec![
        sigma.to_string().into(),
        sigma.c().into(),
        sigma.n().into(),
        stats::inv(sigma.values()).into(),
        stats::maj(sigma.values()).into(),
        stats::col(sigma).into(),
        stats::cross_term(sigma).into(),
        stats::inv_c(sigma).into(),
        stats::tilde_inv_c(sigma).into(),
        perm_to_code(sigma).to_string().into(),
        cycles.into(),
        sigma.is_derangement().into(),
        sigma.is_involution().into(),
    ]);
    r
}

fn stat(args: &StatArgs, out: &mut dyn Write) -> Result<Outcome, CliError> {
    let sigma = ColoredPermutation::parse(&args.perm, args.c)
        .map_err(|e| CliError::Usage(format!("cannot parse --perm {:?}: {e}", args.perm)))?;
    stat_record(&sigma).write_single(args.format, out)?;
    Ok(Outcome::Clean)
}

pub fn histogram_records(d: &Distribution) -> Records {
    let mut r = Records::new(&["k", "count"]);
    for (&k, m) in &d.histogram {
        r.push(vec![k.into(), m.into()]);
    }
    r
}

/// Closed forms the histogram has to agree with; each entry is (what, expected, observed).
pub fn dist_checks(d: &Distribution) -> Vec<(String, ExactInt, ExactInt)> {
    let (n, c) = (d.n, d.c);
    let mut checks = Vec::new();
    let size = match d.class {
        ClassKind::All => group_order(n, c),
        ClassKind::Derangements => special::derangement_count(n, c),
        ClassKind::Involutions => special::involution_count(n, c),
    };
    checks.push(("class size".to_string(), size, d.total_count.clone()));
    match (d.class, d.statistic) {
        (ClassKind::All, StatisticKind::InvC | StatisticKind::TildeInvC) => {
            let gf = gf_colored(n, c);
            for (k, observed) in d.dense().into_iter().enumerate() {
                checks.push((
                    format!("coefficient of q^{k}"),
                    gf.coeff(k as i64),
                    observed,
                ));
            }
            checks.push((
                "first moment".to_string(),
                mahonian::total_inversions_closed(n, c),
                d.first_moment(),
            ));
        }
        (ClassKind::Derangements, StatisticKind::InvC) => {
            checks.push((
                "first moment".to_string(),
                special::t_colored(n, c),
                d.first_moment(),
            ));
        }
        (ClassKind::Involutions, StatisticKind::InvC) => {
            checks.push((
                "first moment".to_string(),
                special::involution_inv_total(n, c),
                d.first_moment(),
            ));
        }
        _ => {}
    }
    checks
}

fn dist(args: &DistArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<Outcome, CliError> {
    let cap = resolve_cap(args.cap)?;
    let d = parallel::distribution(
        args.n,
        args.c,
        args.class,
        args.statistic,
        cap,
        threads(args.threads),
    )
    .map_err(|e| CliError::Limit(e.to_string()))?;
    histogram_records(&d).write(args.format, out)?;
    if !args.check {
        return Ok(Outcome::Clean);
    }
    let mut ok = true;
    for (what, expected, observed) in dist_checks(&d) {
        if expected != observed {
            ok = false;
            writeln!(
                err,
                "check failed: {what}: expected {expected}, enumerated {observed}"
            )?;
        }
    }
    if ok {
        writeln!(err, "check: histogram agrees with the closed forms")?;
    }
    Ok(Outcome::from_ok(ok))
}

pub fn seq_records(args: &SeqArgs) -> Result<Records, CliError> {
    if args.n_min > args.n_max {
        return Err(CliError::Usage(format!(
            "--n-min {} exceeds --n-max {}",
            args.n_min, args.n_max
        )));
    }
    let c = args.c;
    let ns = args.n_min..=args.n_max;
    if args.name != SeqName::Ic {
        if args.k.is_some() || args.method.is_some() {
            return Err(CliError::Usage(
                "--k and --method only apply to --name ic".to_string(),
            ));
        }
        let f: fn(usize, usize) -> ExactInt = match args.name {
            SeqName::TotalInversions => mahonian::total_inversions_closed,
            SeqName::Derangements => special::derangement_count,
            SeqName::DerangementInversions => special::t_colored,
            SeqName::Involutions => special::involution_count,
            SeqName::InvolutionInversions => special::involution_inv_total,
            SeqName::Ic => unreachable!(),
        };
        let mut r = Records::new(&["c", "n", "value"]);
        for n in ns {
            r.push(vec![c.into(), n.into(), f(n, c).into()]);
        }
        return Ok(r);
    }
    let method = args.method.unwrap_or(MahonianMethod::GenFunc);
    let mut r = Records::new(&["c", "n", "k", "value"]);
    for n in ns {
        match args.k {
            Some(k) => {
                let value = mahonian::i_colored(method, n, k, c)
                    .map_err(|e| CliError::Limit(e.to_string()))?;
                r.push(vec![
                    c.into(),
                    n.into(),
                    Field::Text(k.to_string()),
                    value.into(),
                ]);
            }
            None => {
                for (k, value) in colored_row(method, n, c).into_iter().enumerate() {
                    r.push(vec![c.into(), n.into(), k.into(), value.into()]);
                }
            }
        }
    }
    Ok(r)
}

fn seq(args: &SeqArgs, out: &mut dyn Write) -> Result<Outcome, CliError> {
    seq_records(args)?.write(args.format, out)?;
    Ok(Outcome::Clean)
}

fn table(args: &TableArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<Outcome, CliError> {
    let report = tables::report(args.which, threads(args.threads));
    report.records.write(args.format, out)?;
    for note in &report.notes {
        writeln!(err, "{note}")?;
    }
    Ok(Outcome::from_ok(report.clean()))
}

/// One line of the verify report.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyEntry {
    pub identity: String,
    pub params: Vec<(String, String)>,
    pub passed: bool,
    pub detail: String,
}

impl VerifyEntry {
    pub fn to_json(&self) -> Value {
        let params: Map<String, Value> = self
            .params
            .iter()
            .map(|(k, v)| (k.clone(), Value::String(v.clone())))
            .collect();
        json!({
            "identity": self.identity,
            "params": params,
            "status": if self.passed { "pass" } else { "fail" },
            "detail": self.detail,
        })
    }
}

/// The core suite followed by the table diffs.
pub fn verify_entries(budget: u64, threads: usize) -> Vec<VerifyEntry> {
    let mut entries: Vec<VerifyEntry> = verify_suite(budget)
        .entries
        .into_iter()
        .map(|e| VerifyEntry {
            identity: e.identity,
            params: e.params,
            passed: e.status == Status::Pass,
            detail: e.detail,
        })
        .collect();
    for which in 1..=4 {
        let report = tables::report(which, threads);
        let identity = if which == 3 {
            "table3_formula_vs_enumeration".to_string()
        } else {
            format!("table{which}_reproduction")
        };
        entries.push(VerifyEntry {
            identity,
            params: vec![
                ("table".to_string(), which.to_string()),
                ("checked".to_string(), report.checked.to_string()),
                ("mismatches".to_string(), report.mismatches.to_string()),
            ],
            passed: report.clean(),
            detail: report.notes.join("; "),
        });
    }
    entries
}

fn verify(args: &VerifyArgs, out: &mut dyn Write) -> Result<Outcome, CliError> {
    let budget = resolve_cap(args.budget)?;
    let entries = verify_entries(budget, threads(args.threads));
    match args.format.unwrap_or(Format::Json) {
        Format::Json => write_json(
            &Value::Array(entries.iter().map(VerifyEntry::to_json).collect()),
            out,
        )?,
        Format::Csv => {
            let mut r = Records::new(&["identity", "params", "status", "detail"]);
            for e in &entries {
                let params: Vec<String> =
                    e.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
                let status = if e.passed { "pass" } else { "fail" };
                r.push(vec![
                    e.identity.as_str().into(),
                    params.join(";").into(),
                    status.into(),
                    e.detail.as_str().into(),
                ]);
            }
            r.write(Format::Csv, out)?;
        }
    }
    Ok(Outcome::from_ok(entries.iter().all(|e| e.passed)))
}
