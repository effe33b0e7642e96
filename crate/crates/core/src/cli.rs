//! The `boolgb` command: argument parsing and the six subcommands.
//!
//! Commands return a [`Report`] (what to print and the exit code) instead of
//! printing, so they can be driven from tests. Exit codes: 0 success,
//! 1 I/O failure, 2 usage or parse error, 3 resource limit, 4 failed check.

use std::fmt::Write as _;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::caps::Caps;
use crate::construction::{
    build_family, count_standard_monomials, format_generator_file, measure_growth,
    parse_generator_file, predicted_gb_size, predicted_solution_count, Family, GrowthRecord,
    InstanceParams,
};
use crate::error::{Error, Result};
use crate::groebner::{
    ideal_membership, is_groebner_basis, is_reduced_basis, reduced_basis, BasisDump, GeneratorSet,
    GroebnerBasis, ReductionStats,
};
use crate::oracle;
use crate::polyring::{format_poly, parse_poly, MonomialOrder, RingMode};

pub const EXIT_OK: u8 = 0;
pub const EXIT_IO: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_RESOURCE: u8 = 3;
pub const EXIT_VERIFY: u8 = 4;

pub const CSV_HEADER: &str = "n,inputCount,inputBitsize,inputMaxDegree,gbCount,predictedGbCount,solutionCount,predictedSolutionCount,wallTimeMs";

#[derive(Debug, Parser)]
#[command(
    name = "boolgb",
    version,
    about = "Groebner bases over F2 and Boolean rings"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Write a generator family (H, G, S, L, T or P) as a generator-set file.
    Gen {
        #[arg(long, default_value = "H")]
        family: Family,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = ModeArg::Full)]
        mode: ModeArg,
        #[command(flatten)]
        common: Common,
    },
    /// Compute the reduced Groebner basis of a generator-set file.
    Gb {
        input: PathBuf,
        /// Print run statistics as key=value lines on stderr.
        #[arg(long)]
        stats: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Check the H/G identities for one n.
    Verify {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        common: Common,
    },
    /// Growth table for H_n over a range of n.
    Bench {
        #[arg(long, default_value_t = 2)]
        n: usize,
        #[arg(long)]
        n_max: Option<usize>,
        #[command(flatten)]
        common: Common,
    },
    /// Normal form of a polynomial modulo the ideal of a basis file.
    Nf {
        poly: String,
        basis: PathBuf,
        #[command(flatten)]
        common: Common,
    },
    /// Ideal membership of a polynomial.
    Member {
        poly: String,
        basis: PathBuf,
        /// Cross-check by exhaustive evaluation (needs field polynomials).
        #[arg(long)]
        oracle: bool,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Debug, Clone, Args)]
pub struct Common {
    #[arg(long, value_enum, default_value_t = OrderArg::Deglex)]
    pub order: OrderArg,
    #[arg(long, value_enum, default_value_t = Engine::Full)]
    pub engine: Engine,
    #[arg(long)]
    pub max_pairs: Option<u64>,
    #[arg(long)]
    pub max_basis: Option<usize>,
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    #[arg(short, long, action = clap::ArgAction::Count)]
    pub verbose: u8,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OrderArg {
    Deglex,
    Degrevlex,
}

impl From<OrderArg> for MonomialOrder {
    fn from(o: OrderArg) -> Self {
        match o {
            OrderArg::Deglex => MonomialOrder::DegLex,
            OrderArg::Degrevlex => MonomialOrder::DegRevLex,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Full,
    Boolean,
}

impl From<ModeArg> for RingMode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::Full => RingMode::Full,
            ModeArg::Boolean => RingMode::Boolean,
        }
    }
}

/// Which engine computes bases. `full` works in `F2[vars]` with the field
/// polynomials explicit, `boolean` in the quotient ring; `both` runs the two
/// and requires the Boolean result, lifted back, to equal the full one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Engine {
    Full,
    Boolean,
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

/// What a command wants printed, and how the process should exit.
#[derive(Debug, Default, Clone, PartialEq, Eq)]
pub struct Report {
    pub stdout: String,
    pub stderr: String,
    pub exit: u8,
}

impl Report {
    fn fail(err: &Error) -> Report {
        Report {
            stdout: String::new(),
            stderr: format!("error: {err}\n"),
            exit: exit_code(err),
        }
    }
}

pub fn exit_code(err: &Error) -> u8 {
    match err {
        Error::ResourceLimit { .. } | Error::TooManyVariables { .. } => EXIT_RESOURCE,
        Error::Io { .. } => EXIT_IO,
        Error::NotAGroebnerBasis(_) => EXIT_VERIFY,
        _ => EXIT_USAGE,
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run_args<I, T>(args: I) -> Report
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(&cli),
        Err(e) => {
            let exit = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            if exit == EXIT_OK {
                Report {
                    stdout: text,
                    ..Report::default()
                }
            } else {
                Report {
                    stderr: text,
                    exit,
                    ..Report::default()
                }
            }
        }
    }
}

pub fn run(cli: &Cli) -> Report {
    let caps = match Caps::from_env() {
        Ok(c) => c,
        Err(e) => return Report::fail(&e),
    };
    let result = match &cli.command {
        Command::Gen {
            family,
            n,
            mode,
            common,
        } => cmd_gen(*family, *n, (*mode).into(), common, &caps),
        Command::Gb {
            input,
            stats,
            common,
        } => cmd_gb(input, *stats, common, &caps),
        Command::Verify { n, common } => cmd_verify(*n, common, &caps),
        Command::Bench { n, n_max, common } => cmd_bench(*n, n_max.unwrap_or(*n), common, &caps),
        Command::Nf {
            poly,
            basis,
            common,
        } => cmd_nf(poly, basis, common, &caps),
        Command::Member {
            poly,
            basis,
            oracle,
            common,
        } => cmd_member(poly, basis, *oracle, common, &caps),
    };
    result.unwrap_or_else(|e| Report::fail(&e))
}

fn effective_caps(common: &Common, caps: &Caps) -> Caps {
    let mut c = *caps;
    if let Some(p) = common.max_pairs {
        c.limits.max_pairs = p;
    }
    if let Some(b) = common.max_basis {
        c.limits.max_basis = b;
    }
    c
}

/// Writes `text` to `out` via a temporary file and rename, or returns it for
/// stdout when no path is given.
fn emit(text: String, out: Option<&Path>, report: &mut Report) -> Result<()> {
    match out {
        None => report.stdout.push_str(&text),
        Some(path) => {
            write_atomic(path, &text)?;
            writeln!(report.stderr, "wrote {}", path.display()).unwrap();
        }
    }
    Ok(())
}

pub fn write_atomic(path: &Path, text: &str) -> Result<()> {
    let dir = match path.parent() {
        Some(d) if !d.as_os_str().is_empty() => d,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir).map_err(|e| Error::io(dir, e))?;
    tmp.write_all(text.as_bytes())
        .map_err(|e| Error::io(path, e))?;
    tmp.persist(path).map_err(|e| Error::io(path, e.error))?;
    Ok(())
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::io(path, e))
}

/// Loads either a generator-set file or a JSON basis dump.
pub fn load_generators(path: &Path, order: MonomialOrder) -> Result<GeneratorSet> {
    let text = read(path)?;
    if text.trim_start().starts_with('{') {
        let basis = BasisDump::from_json(&text)?.to_basis()?;
        Ok(basis.to_generator_set().with_order(order))
    } else {
        parse_generator_file(&text, order)
    }
}

/// Reduced basis of `set` under the chosen engine. For `Full` and `Both` the
/// result lives in the full ring and includes the field polynomials when the
/// input is Boolean or when `Both` is used.
pub fn compute_basis(
    set: &GeneratorSet,
    engine: Engine,
    caps: &Caps,
) -> Result<(GroebnerBasis, ReductionStats)> {
    let with_fp = || {
        set.to_mode(RingMode::Full)
            .extended(crate::construction::field_polynomials(set.n()))
    };
    match engine {
        Engine::Full => {
            let input = match set.mode() {
                RingMode::Full => set.clone(),
                RingMode::Boolean => with_fp()?,
            };
            reduced_basis(&input, &caps.limits)
        }
        Engine::Boolean => reduced_basis(&set.to_mode(RingMode::Boolean), &caps.limits),
        Engine::Both => {
            let (full, stats) = reduced_basis(&with_fp()?, &caps.limits)?;
            let (boolean, _) = reduced_basis(&set.to_mode(RingMode::Boolean), &caps.limits)?;
            if boolean.lift_to_full() != full {
                return Err(Error::NotAGroebnerBasis(
                    "full and Boolean engines disagree".into(),
                ));
            }
            Ok((full, stats))
        }
    }
}

pub fn cmd_gen(
    family: Family,
    n: usize,
    mode: RingMode,
    common: &Common,
    caps: &Caps,
) -> Result<Report> {
    let params = InstanceParams::new(n)
        .with_mode(mode)
        .with_order(common.order.into());
    let set = build_family(family, params, caps)?;
    let mut report = Report::default();
    emit(
        format_generator_file(&set),
        common.out.as_deref(),
        &mut report,
    )?;
    writeln!(report.stderr, "{family}_{n}: {} polynomials", set.len()).unwrap();
    Ok(report)
}

pub fn cmd_gb(input: &Path, want_stats: bool, common: &Common, caps: &Caps) -> Result<Report> {
    let caps = effective_caps(common, caps);
    let set = load_generators(input, common.order.into())?;
    let mut report = Report::default();
    let (basis, stats) = match compute_basis(&set, common.engine, &caps) {
        Ok(r) => r,
        Err(Error::ResourceLimit { what, limit, stats }) => {
            writeln!(
                report.stderr,
                "error: resource limit exceeded: {what} > {limit}"
            )
            .unwrap();
            if let Some(s) = stats {
                report.stderr.push_str(&s.to_key_values());
            }
            report.exit = EXIT_RESOURCE;
            return Ok(report);
        }
        Err(e) => return Err(e),
    };
    let text = match common.format.unwrap_or(Format::Json) {
        Format::Json => BasisDump::from_basis(&basis).to_json(),
        Format::Text => {
            let set = basis.to_generator_set();
            format_generator_file(&set)
        }
        Format::Csv => {
            return Err(Error::format(
                "arguments",
                "gb supports --format text or json",
            ))
        }
    };
    emit(text, common.out.as_deref(), &mut report)?;
    if want_stats {
        report.stderr.push_str(&stats.to_key_values());
    }
    if common.verbose > 0 {
        writeln!(report.stderr, "basis has {} elements", basis.len()).unwrap();
    }
    Ok(report)
}

/// Outcome of one verification check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CheckStatus {
    Pass,
    Fail,
    /// Deviates from the `n > 1` statement, as it must for `n = 1`.
    Expected,
    Skipped(String),
}

impl std::fmt::Display for CheckStatus {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CheckStatus::Pass => f.write_str("PASS"),
            CheckStatus::Fail => f.write_str("FAIL"),
            CheckStatus::Expected => f.write_str("EXPECTED"),
            CheckStatus::Skipped(why) => write!(f, "SKIPPED ({why})"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub id: &'static str,
    pub detail: String,
    pub status: CheckStatus,
}

fn skip_or(err: Error) -> Result<CheckStatus> {
    match err {
        Error::ResourceLimit { .. } | Error::TooManyVariables { .. } => {
            Ok(CheckStatus::Skipped(err.to_string()))
        }
        other => Err(other),
    }
}

/// Runs the four checks for `n`:
/// V1 `Sol(H_n) = Sol(G_n)`; V2 `G_n` is a Groebner basis and (for `n > 1`)
/// reduced; V3 the reduced basis of `H_n` has `6n + 3^n` elements and equals
/// `G_n`; V4 standard monomials, solutions and `4^n - 3^n` agree.
pub fn verify_checks(
    n: usize,
    order: MonomialOrder,
    engine: Engine,
    caps: &Caps,
) -> Result<Vec<Check>> {
    let params = InstanceParams::new(n).with_order(order);
    let h = build_family(Family::H, params, caps)?;
    let g = build_family(Family::G, params, caps)?;
    let mut checks = Vec::new();

    let (detail, status) = match oracle::solution_sets_equal(&h, &g, caps.max_enum_vars) {
        Ok(eq) => (
            format!("Sol(H_{n}) = Sol(G_{n}): {eq}"),
            if eq {
                CheckStatus::Pass
            } else {
                CheckStatus::Fail
            },
        ),
        Err(e) => ("Sol(H_n) = Sol(G_n)".to_string(), skip_or(e)?),
    };
    checks.push(Check {
        id: "V1",
        detail,
        status,
    });

    let is_gb = is_groebner_basis(g.polys(), order);
    let reduced = is_reduced_basis(g.polys(), order);
    let status = match (is_gb, reduced, n > 1) {
        (true, true, true) => CheckStatus::Pass,
        (true, false, false) => CheckStatus::Expected,
        _ => CheckStatus::Fail,
    };
    checks.push(Check {
        id: "V2",
        detail: format!("G_{n} groebner={is_gb} reduced={reduced}"),
        status,
    });

    let (detail, status, basis) = match compute_basis(&h, engine, caps) {
        Ok((basis, _)) => {
            let predicted = predicted_gb_size(n);
            let same = basis.same_elements(g.polys());
            let ok = basis.len() as u128 == predicted && same;
            let status = match (ok, n > 1) {
                (true, _) => CheckStatus::Pass,
                (false, false) => CheckStatus::Expected,
                (false, true) => CheckStatus::Fail,
            };
            (
                format!(
                    "|GB(H_{n})| = {} (6n+3^n = {predicted}), equals G_{n}: {same}",
                    basis.len()
                ),
                status,
                Some(basis),
            )
        }
        Err(Error::NotAGroebnerBasis(msg)) => (msg, CheckStatus::Fail, None),
        Err(e) => ("GB(H_n)".to_string(), skip_or(e)?, None),
    };
    checks.push(Check {
        id: "V3",
        detail,
        status,
    });

    let predicted = predicted_solution_count(n);
    let sols = match oracle::enumerate_solutions(&h, caps.max_enum_vars) {
        Ok(s) => Some(s.len() as u128),
        Err(e) => {
            skip_or(e)?;
            None
        }
    };
    let std_count = match &basis {
        Some(b) => Some(count_standard_monomials(b)? as u128),
        None => None,
    };
    let fmt_opt = |v: Option<u128>| v.map_or("n/a".to_string(), |x| x.to_string());
    let status = match (std_count, sols) {
        (Some(c), Some(s)) if c == predicted && s == predicted => CheckStatus::Pass,
        (Some(c), None) if c == predicted => CheckStatus::Pass,
        (None, _) => CheckStatus::Skipped("no basis".into()),
        _ => CheckStatus::Fail,
    };
    checks.push(Check {
        id: "V4",
        detail: format!(
            "standard monomials = {}, |Sol(H_{n})| = {}, 4^n-3^n = {predicted}",
            fmt_opt(std_count),
            fmt_opt(sols)
        ),
        status,
    });
    Ok(checks)
}

pub fn cmd_verify(n: usize, common: &Common, caps: &Caps) -> Result<Report> {
    let caps = effective_caps(common, caps);
    let checks = verify_checks(n, common.order.into(), common.engine, &caps)?;
    let mut report = Report::default();
    for c in &checks {
        writeln!(report.stdout, "{} {}: {}", c.id, c.detail, c.status).unwrap();
    }
    if checks.iter().any(|c| c.status == CheckStatus::Fail) {
        report.exit = EXIT_VERIFY;
    }
    Ok(report)
}

pub fn csv_row(r: &GrowthRecord) -> String {
    let opt = |v: Option<String>| v.unwrap_or_else(|| "NA".to_string());
    format!(
        "{},{},{},{},{},{},{},{},{:.3}",
        r.n,
        r.input_count,
        r.input_bitsize,
        r.input_max_degree,
        opt(r.gb_count.map(|c| c.to_string())),
        r.predicted_gb_count,
        opt(r.solution_count.map(|c| c.to_string())),
        r.predicted_solution_count,
        r.wall_time.as_secs_f64() * 1e3
    )
}

fn json_row(r: &GrowthRecord) -> serde_json::Value {
    serde_json::json!({
        "n": r.n,
        "inputCount": r.input_count,
        "inputBitsize": r.input_bitsize,
        "inputMaxDegree": r.input_max_degree,
        "gbCount": r.gb_count,
        "predictedGbCount": r.predicted_gb_count as u64,
        "solutionCount": r.solution_count.map(|c| c as u64),
        "predictedSolutionCount": r.predicted_solution_count as u64,
        "wallTimeMs": r.wall_time.as_secs_f64() * 1e3,
        "complete": r.complete(),
    })
}

pub fn bench_records(
    n_min: usize,
    n_max: usize,
    order: MonomialOrder,
    caps: &Caps,
) -> Result<Vec<GrowthRecord>> {
    if n_min == 0 || n_max < n_min {
        return Err(Error::format(
            "arguments",
            format!("empty n range {n_min}..={n_max}"),
        ));
    }
    (n_min..=n_max)
        .map(|n| measure_growth(n, order, caps))
        .collect()
}

pub fn cmd_bench(n_min: usize, n_max: usize, common: &Common, caps: &Caps) -> Result<Report> {
    let caps = effective_caps(common, caps);
    let started = Instant::now();
    let records = bench_records(n_min, n_max, common.order.into(), &caps)?;
    let text = match common.format.unwrap_or(Format::Csv) {
        Format::Csv | Format::Text => {
            let mut s = format!("{CSV_HEADER}\n");
            for r in &records {
                s.push_str(&csv_row(r));
                s.push('\n');
            }
            s
        }
        Format::Json => {
            let rows: Vec<_> = records.iter().map(json_row).collect();
            serde_json::to_string_pretty(&rows).expect("plain data serializes") + "\n"
        }
    };
    let mut report = Report::default();
    emit(text, common.out.as_deref(), &mut report)?;
    if records.iter().any(|r| !r.complete()) {
        report.exit = EXIT_RESOURCE;
    }
    if records.iter().any(|r| {
        r.gb_count
            .is_some_and(|c| c as u128 != r.predicted_gb_count)
    }) {
        report.exit = EXIT_VERIFY;
    }
    if common.verbose > 0 {
        writeln!(report.stderr, "bench took {:.2?}", started.elapsed()).unwrap();
    }
    Ok(report)
}

fn basis_for_queries(
    path: &Path,
    common: &Common,
    caps: &Caps,
) -> Result<(GeneratorSet, GroebnerBasis)> {
    let caps = effective_caps(common, caps);
    let set = load_generators(path, common.order.into())?;
    let (basis, _) = reduced_basis(&set, &caps.limits)?;
    Ok((set, basis))
}

/// Normal form of `poly` against the reduced basis of the file's ideal.
pub fn cmd_nf(poly: &str, path: &Path, common: &Common, caps: &Caps) -> Result<Report> {
    let (set, basis) = basis_for_queries(path, common, caps)?;
    let f = parse_poly(poly, set.n(), set.mode())?;
    let nf = basis.normal_form(&f)?;
    Ok(Report {
        stdout: format!("{}\n", format_poly(&nf, basis.order())),
        ..Report::default()
    })
}

pub fn cmd_member(
    poly: &str,
    path: &Path,
    use_oracle: bool,
    common: &Common,
    caps: &Caps,
) -> Result<Report> {
    let (set, basis) = basis_for_queries(path, common, caps)?;
    let f = parse_poly(poly, set.n(), set.mode())?;
    let member = ideal_membership(&f, &basis)?;
    let mut report = Report {
        stdout: format!("{member}\n"),
        ..Report::default()
    };
    if use_oracle {
        let by_eval = oracle::membership_by_evaluation(&f, &set, caps.max_enum_vars)?;
        writeln!(report.stderr, "oracle: {by_eval}").unwrap();
        if by_eval != member {
            writeln!(report.stderr, "error: algebra and oracle disagree").unwrap();
            report.exit = EXIT_VERIFY;
        }
    }
    Ok(report)
}
