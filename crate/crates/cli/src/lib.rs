//! The `fplwb` command-line tool.
//!
//! Every verb writes its artifact (JSON or CSV) to standard output, or to
//! `--out` with a one-line summary on standard output instead. Exit codes:
//! 0 for success, 1 when a proved identity fails, 2 for usage and limit
//! errors.

pub mod cache;

use std::ffi::OsString;
use std::fmt;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use fplwb_core::algebra::{
    a_polynomial, a_polynomial_table, matrix_c, run_check, run_check_with, AlgebraError, CheckId,
    CheckParams, CheckReport, CheckStatus, ALL_CHECKS,
};
use fplwb_core::fpl::{
    count_fpl, enumerate_fpl, link_pattern, pattern_census, wieland, wieland_inverse, FplError,
    Parity, PatternCensus,
};
use fplwb_core::tfpl::{t_count, t_table, TTable, TfplError, DEFAULT_TABLE_LIMIT};
use fplwb_core::words::{BinaryWord, WordError};

use cache::{Cache, CacheKey};

/// Largest grid `count-fpl` and `census` will enumerate.
pub const MAX_GRID_SIZE: usize = 8;
/// Largest grid `wieland-check` walks configuration by configuration.
pub const MAX_WIELAND_SIZE: usize = 6;
/// Largest triangle `tfpl` counts.
pub const MAX_TRIANGLE_SIZE: usize = 6;

#[derive(Debug, Parser)]
#[command(
    name = "fplwb",
    version,
    about = "Exact enumeration of fully packed loops and TFPLs"
)]
pub struct Cli {
    /// Worker threads for the parallel searches (default: all cores).
    #[arg(long, global = true)]
    pub threads: Option<usize>,

    /// Directory for cached t-tables and censuses.
    #[arg(long, global = true, env = "FPLWB_CACHE")]
    pub cache_dir: Option<PathBuf>,

    /// Neither read nor write the cache.
    #[arg(long, global = true)]
    pub no_cache: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum ParityArg {
    Odd,
    Even,
}

impl From<ParityArg> for Parity {
    fn from(p: ParityArg) -> Parity {
        match p {
            ParityArg::Odd => Parity::Odd,
            ParityArg::Even => Parity::Even,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum MatrixFormat {
    Csv,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Count FPLs on the n x n grid.
    CountFpl {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "odd")]
        parity: ParityArg,
    },
    /// Count FPLs per link pattern (JSON).
    Census {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "odd")]
        parity: ParityArg,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check Wieland's rotation on every FPL of size n.
    WielandCheck {
        #[arg(long)]
        n: usize,
    },
    /// Count TFPLs with boundary (sigma, pi, tau).
    Tfpl {
        #[arg(long)]
        sigma: String,
        #[arg(long)]
        pi: String,
        #[arg(long)]
        tau: String,
    },
    /// Build every t_{sigma,tau}^pi for one n (JSON).
    TTable {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// The polynomials A_pi(m) (JSON).
    Apoly {
        #[arg(long)]
        n: usize,
        /// Only this Dyck word.
        #[arg(long)]
        pi: Option<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// The coefficient matrix c = t^{-1} b t.
    CMatrix {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "csv")]
        format: MatrixFormat,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run one check of the verification suite, or all of them.
    Verify {
        /// A check id such as COMMUTE, or "all".
        #[arg(long)]
        suite: String,
        #[arg(long)]
        n: usize,
        /// Largest grid enumerated by the grid-based checks.
        #[arg(long)]
        grid_limit: Option<usize>,
        /// Print the reports as a JSON array.
        #[arg(long)]
        json: bool,
    },
    /// Run the conjecture scans; findings never change the exit code.
    Conjectures {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        json: bool,
    },
}

/// Failures that end a run; each maps to an exit code.
#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Io(std::io::Error),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) => f.write_str(m),
            CliError::Io(e) => write!(f, "I/O error: {e}"),
        }
    }
}

macro_rules! usage_from {
    ($($t:ty),*) => {$(
        impl From<$t> for CliError {
            fn from(e: $t) -> Self {
                CliError::Usage(e.to_string())
            }
        }
    )*};
}
usage_from!(AlgebraError, FplError, TfplError, WordError);

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e)
    }
}

/// Outcome of a verb that ran to completion.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    TheoremFailure,
}

pub const EXIT_PASS: u8 = 0;
pub const EXIT_FAILURE: u8 = 1;
pub const EXIT_USAGE: u8 = 2;

struct Context<'a> {
    cache: Option<Cache>,
    out: &'a mut dyn Write,
}

/// Parses `args` (program name first) and runs the verb, writing to `out`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                EXIT_USAGE
            } else {
                EXIT_PASS
            };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(rendered.as_bytes())
            } else {
                out.write_all(rendered.as_bytes())
            };
            return code;
        }
    };
    match execute(cli, out) {
        Ok(Verdict::Pass) => EXIT_PASS,
        Ok(Verdict::TheoremFailure) => EXIT_FAILURE,
        // The reader went away (e.g. `| head`); nothing left to report to.
        Err(CliError::Io(e)) if e.kind() == std::io::ErrorKind::BrokenPipe => EXIT_PASS,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

/// Entry point used by the binary.
pub fn main_with_args(args: impl IntoIterator<Item = OsString>) -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    ExitCode::from(run(args, &mut stdout.lock(), &mut stderr.lock()))
}

pub fn execute(cli: Cli, out: &mut dyn Write) -> Result<Verdict, CliError> {
    if let Some(threads) = cli.threads {
        if threads == 0 {
            return Err(CliError::Usage("--threads must be positive".into()));
        }
        // Fails only when a pool already exists, e.g. a second call in one
        // process; the existing pool is then kept.
        if rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
            .is_err()
        {
            log::warn!("thread pool already initialized; --threads ignored");
        }
    }
    let cache = if cli.no_cache {
        None
    } else {
        Cache::default_dir(cli.cache_dir.as_deref()).map(Cache::new)
    };
    let mut ctx = Context { cache, out };
    match cli.command {
        Command::CountFpl { n, parity } => count_fpl_verb(&mut ctx, n, parity.into()),
        Command::Census { n, parity, out } => {
            census_verb(&mut ctx, n, parity.into(), out.as_deref())
        }
        Command::WielandCheck { n } => wieland_verb(&mut ctx, n),
        Command::Tfpl { sigma, pi, tau } => tfpl_verb(&mut ctx, &sigma, &pi, &tau),
        Command::TTable { n, out } => t_table_verb(&mut ctx, n, out.as_deref()),
        Command::Apoly { n, pi, out } => apoly_verb(&mut ctx, n, pi.as_deref(), out.as_deref()),
        Command::CMatrix { n, format, out } => c_matrix_verb(&mut ctx, n, format, out.as_deref()),
        Command::Verify {
            suite,
            n,
            grid_limit,
            json,
        } => verify_verb(&mut ctx, &suite, n, grid_limit, json),
        Command::Conjectures { n, json } => conjectures_verb(&mut ctx, n, json),
    }
}

fn check_size(what: &str, n: usize, limit: usize) -> Result<(), CliError> {
    if n == 0 || n > limit {
        Err(CliError::Usage(format!(
            "{what} needs 1 <= n <= {limit}, got {n}"
        )))
    } else {
        Ok(())
    }
}

fn parse_word(flag: &str, s: &str) -> Result<BinaryWord, CliError> {
    s.parse()
        .map_err(|e: WordError| CliError::Usage(format!("--{flag}: {e}")))
}

fn parse_dyck(flag: &str, s: &str) -> Result<BinaryWord, CliError> {
    BinaryWord::parse_dyck(s).map_err(|e| CliError::Usage(format!("--{flag}: {e}")))
}

/// Writes `artifact` to `path` (and `summary` to the output) or, without a
/// path, the artifact itself to the output.
fn emit(
    ctx: &mut Context,
    artifact: &str,
    path: Option<&Path>,
    summary: &str,
) -> Result<(), CliError> {
    match path {
        Some(p) => {
            std::fs::write(p, artifact)?;
            writeln!(ctx.out, "{summary}; written to {}", p.display())?;
        }
        None => writeln!(ctx.out, "{artifact}")?,
    }
    Ok(())
}

impl Context<'_> {
    fn cached<E>(
        &self,
        key: CacheKey,
        compute: impl FnOnce() -> Result<String, E>,
    ) -> Result<String, E> {
        match &self.cache {
            Some(c) => c.get_or_compute(&key, compute),
            None => compute(),
        }
    }

    fn census(&self, n: usize, parity: Parity) -> Result<PatternCensus, CliError> {
        let json = self.cached(CacheKey::new("census", n, parity.to_string()), || {
            Ok::<_, CliError>(pattern_census(n, parity).to_json())
        })?;
        Ok(PatternCensus::from_json(&json)?)
    }

    fn t_table(&self, n: usize) -> Result<TTable, CliError> {
        check_size("t-table", n, DEFAULT_TABLE_LIMIT)?;
        let json = self.cached(CacheKey::new("t-table", n, ""), || {
            Ok::<_, CliError>(t_table(n)?.to_json())
        })?;
        Ok(TTable::from_json(&json)?)
    }
}

fn count_fpl_verb(ctx: &mut Context, n: usize, parity: Parity) -> Result<Verdict, CliError> {
    check_size("count-fpl", n, MAX_GRID_SIZE)?;
    writeln!(ctx.out, "{}", count_fpl(n, parity))?;
    Ok(Verdict::Pass)
}

fn census_verb(
    ctx: &mut Context,
    n: usize,
    parity: Parity,
    out: Option<&Path>,
) -> Result<Verdict, CliError> {
    check_size("census", n, MAX_GRID_SIZE)?;
    let census = ctx.census(n, parity)?;
    let summary = format!(
        "n={n} parity={parity}: {} link patterns, {} FPLs",
        census.counts.len(),
        census.total()
    );
    emit(ctx, &census.to_json(), out, &summary)?;
    Ok(Verdict::Pass)
}

fn wieland_verb(ctx: &mut Context, n: usize) -> Result<Verdict, CliError> {
    check_size("wieland-check", n, MAX_WIELAND_SIZE)?;
    let modulus = 4 * n as u32;
    let mut failures = Vec::new();
    let mut checked = 0u64;
    for parity in [Parity::Odd, Parity::Even] {
        for f in enumerate_fpl(n, parity) {
            checked += 1;
            let w = wieland(&f);
            let rotated = link_pattern(&f).rotate(modulus);
            if w.parity() != parity.flip()
                || link_pattern(&w) != rotated
                || wieland_inverse(&w) != f
            {
                failures.push(format!("{parity} FPL with edges {:?}", f.chosen_edges()));
            }
        }
        let source = ctx.census(n, parity)?;
        let target = ctx.census(n, parity.flip())?;
        for (x, &c) in &source.counts {
            let r = x.rotate(modulus);
            if target.count(&r) != c {
                failures.push(format!("A_{x} = {c} but A_{r} = {}", target.count(&r)));
            }
        }
    }
    for f in failures.iter().take(10) {
        writeln!(ctx.out, "counterexample: {f}")?;
    }
    if failures.is_empty() {
        writeln!(ctx.out, "wieland-check n={n}: pass ({checked} FPLs)")?;
        Ok(Verdict::Pass)
    } else {
        writeln!(
            ctx.out,
            "wieland-check n={n}: FAIL ({} problems)",
            failures.len()
        )?;
        Ok(Verdict::TheoremFailure)
    }
}

fn tfpl_verb(ctx: &mut Context, sigma: &str, pi: &str, tau: &str) -> Result<Verdict, CliError> {
    let (sigma, pi, tau) = (
        parse_word("sigma", sigma)?,
        parse_word("pi", pi)?,
        parse_word("tau", tau)?,
    );
    check_size("tfpl", pi.len() / 2, MAX_TRIANGLE_SIZE)?;
    writeln!(ctx.out, "{}", t_count(&sigma, &pi, &tau)?)?;
    Ok(Verdict::Pass)
}

fn t_table_verb(ctx: &mut Context, n: usize, out: Option<&Path>) -> Result<Verdict, CliError> {
    let table = ctx.t_table(n)?;
    let nonzero = table
        .entries()
        .filter(|e| *e.3 != Default::default())
        .count();
    let summary = format!("t-table n={n}: {nonzero} nonzero entries");
    emit(ctx, &table.to_json(), out, &summary)?;
    Ok(Verdict::Pass)
}

fn apoly_verb(
    ctx: &mut Context,
    n: usize,
    pi: Option<&str>,
    out: Option<&Path>,
) -> Result<Verdict, CliError> {
    let table = ctx.t_table(n)?;
    match pi {
        Some(pi) => {
            let pi = parse_dyck("pi", pi)?;
            if pi.len() != 2 * n {
                return Err(CliError::Usage(format!(
                    "--pi {pi} does not have length {}",
                    2 * n
                )));
            }
            let p = a_polynomial(&pi, &table)?;
            let artifact = serde_json::json!({ "pi": pi, "polynomial": p }).to_string();
            emit(ctx, &artifact, out, &format!("A_{pi}(m) = {p}"))?;
        }
        None => {
            let polys = a_polynomial_table(&table);
            let summary = format!("{} polynomials for n={n}", polys.polynomials.len());
            emit(ctx, &polys.to_json(), out, &summary)?;
        }
    }
    Ok(Verdict::Pass)
}

fn c_matrix_verb(
    ctx: &mut Context,
    n: usize,
    format: MatrixFormat,
    out: Option<&Path>,
) -> Result<Verdict, CliError> {
    let c = matrix_c(&ctx.t_table(n)?)?;
    let artifact = match format {
        MatrixFormat::Csv => c.to_csv().trim_end().to_string(),
        MatrixFormat::Json => c.to_json(),
    };
    emit(
        ctx,
        &artifact,
        out,
        &format!("c-matrix n={n}: {0}x{0}", c.dim()),
    )?;
    Ok(Verdict::Pass)
}

fn run_suite(
    ctx: &Context,
    ids: &[CheckId],
    n: usize,
    params: &CheckParams,
) -> Result<Vec<CheckReport>, CliError> {
    let table = if ids
        .iter()
        .any(|id| !matches!(id, CheckId::Hook | CheckId::NLemma))
    {
        Some(ctx.t_table(n)?)
    } else {
        None
    };
    ids.iter()
        .map(|&id| match (&table, id) {
            (_, CheckId::Hook | CheckId::NLemma) | (None, _) => run_check(id, n, params),
            (Some(t), _) => run_check_with(id, t, params),
        })
        .collect::<Result<_, _>>()
        .map_err(CliError::from)
}

fn print_reports(ctx: &mut Context, reports: &[CheckReport], json: bool) -> Result<(), CliError> {
    if json {
        let text = serde_json::to_string_pretty(reports).expect("reports serialize");
        writeln!(ctx.out, "{text}")?;
        return Ok(());
    }
    for r in reports {
        let status = match r.status {
            CheckStatus::Pass => "pass",
            CheckStatus::Fail => "FAIL",
            CheckStatus::Counterexample => "counterexample",
        };
        writeln!(
            ctx.out,
            "{} n={}: {status} ({} cases, {} ms)",
            r.check, r.n, r.cases, r.elapsed_ms
        )?;
        for c in &r.counterexamples {
            writeln!(ctx.out, "  counterexample: {c}")?;
        }
        for note in &r.notes {
            writeln!(ctx.out, "  note: {note}")?;
        }
    }
    Ok(())
}

fn verify_verb(
    ctx: &mut Context,
    suite: &str,
    n: usize,
    grid_limit: Option<usize>,
    json: bool,
) -> Result<Verdict, CliError> {
    let ids: Vec<CheckId> = if suite.eq_ignore_ascii_case("all") {
        ALL_CHECKS.to_vec()
    } else {
        vec![suite.parse()?]
    };
    let mut params = CheckParams::default();
    if let Some(g) = grid_limit {
        params.grid_limit = g;
    }
    let reports = run_suite(ctx, &ids, n, &params)?;
    print_reports(ctx, &reports, json)?;
    if reports.iter().any(|r| r.status == CheckStatus::Fail) {
        Ok(Verdict::TheoremFailure)
    } else {
        Ok(Verdict::Pass)
    }
}

fn conjectures_verb(ctx: &mut Context, n: usize, json: bool) -> Result<Verdict, CliError> {
    let ids: Vec<CheckId> = ALL_CHECKS
        .into_iter()
        .filter(|c| c.is_conjecture())
        .collect();
    let reports = run_suite(ctx, &ids, n, &CheckParams::default())?;
    print_reports(ctx, &reports, json)?;
    Ok(Verdict::Pass)
}
