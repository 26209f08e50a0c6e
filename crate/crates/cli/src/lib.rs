//! Command line front end for `torus-spp`: argument parsing, command
//! dispatch, output formats and the result cache.

pub mod cache;
pub mod compute;
pub mod format;
pub mod verify;

use std::io::Write;
use std::ops::RangeInclusive;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, Subcommand};
use serde::Serialize;
use torus_spp::appendix::qt_catalan;
use torus_spp::poly::TermOrder;
use torus_spp::series::stable_series;
use torus_spp::{Error, Method, Semigroup, Superpoly};

use crate::cache::{Cache, CacheEntry, CacheError, CACHE_ENV};
use crate::format::{poly_to_json, render, Format, JsonTerm};
use crate::verify::{Status, DEFAULT_SEED};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;
pub const EXIT_MISMATCH: i32 = 4;

#[derive(Debug, Parser)]
#[command(name = "torus-spp", version, about = "Superpolynomials of torus knots T(n,k)")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Worker threads for the ideal enumeration (default: all cores).
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    /// Seed for randomized checks.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    /// Cache directory (default: $XDG_CACHE_HOME/torus-spp or ~/.cache/torus-spp).
    #[arg(long, global = true, env = CACHE_ENV)]
    pub cache_dir: Option<PathBuf>,
    /// Neither read nor write the cache.
    #[arg(long, global = true)]
    pub no_cache: bool,
    /// Progress and timing on stderr.
    #[arg(short, long, global = true, action = clap::ArgAction::Count)]
    pub verbose: u8,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the superpolynomial of T(n,k).
    Superpoly {
        #[arg(long)]
        n: i64,
        #[arg(long)]
        k: i64,
        /// cells, beta, diagrams, localization or closed.
        #[arg(long, default_value = "cells", value_parser = parse_method)]
        method: Method,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Also print the numerator of the unreduced series.
        #[arg(long)]
        uspp: bool,
        /// Largest ideal colength to enumerate (cells and beta only).
        #[arg(long)]
        truncation: Option<i64>,
    },
    /// Run every applicable cross-check for T(n,k).
    Verify {
        #[arg(long)]
        n: i64,
        #[arg(long)]
        k: i64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// The (q,t)-Catalan polynomial C_n^{(m)}.
    Catalan {
        #[arg(long)]
        n: i64,
        #[arg(long, default_value_t = 1)]
        m: i64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// The stable limit as k grows, truncated at q^order.
    Stable {
        #[arg(long)]
        n: i64,
        #[arg(long)]
        order: i32,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// One row per coprime pair n < k in the given ranges.
    Table {
        /// A number or an inclusive range such as 2..5.
        #[arg(long, value_parser = parse_range)]
        n: RangeInclusive<i64>,
        /// A number or an inclusive range.
        #[arg(long, value_parser = parse_range)]
        k: RangeInclusive<i64>,
        #[arg(long, default_value = "beta", value_parser = parse_method)]
        method: Method,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

fn parse_method(s: &str) -> Result<Method, String> {
    s.parse::<Method>().map_err(|_| {
        let names: Vec<&str> = Method::ALL.iter().map(|m| m.name()).collect();
        format!("unknown method {s:?}, expected one of {}", names.join(", "))
    })
}

/// `a..b` (inclusive) or a single number.
pub fn parse_range(s: &str) -> Result<RangeInclusive<i64>, String> {
    let bad = || format!("expected a number or a range a..b, got {s:?}");
    match s.split_once("..") {
        Some((a, b)) => {
            let a: i64 = a.trim().parse().map_err(|_| bad())?;
            let b: i64 = b.trim().trim_start_matches('=').parse().map_err(|_| bad())?;
            if a > b {
                return Err(format!("empty range {s:?}"));
            }
            Ok(a..=b)
        }
        None => {
            let a: i64 = s.trim().parse().map_err(|_| bad())?;
            Ok(a..=a)
        }
    }
}

#[derive(Debug)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError { code: exit_code(&e), message: e.to_string() }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError { code: EXIT_INTERNAL, message: e.to_string() }
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::NotCoprime { .. }
        | Error::Degenerate { .. }
        | Error::InvalidArgument(_)
        | Error::InvalidModule(_)
        | Error::NoFormula { .. } => EXIT_USAGE,
        e if e.is_conjecture_failure() => EXIT_MISMATCH,
        _ => EXIT_INTERNAL,
    }
}

struct Ctx {
    cache: Option<Cache>,
    verbose: u8,
    seed: u64,
}

impl Ctx {
    fn note(&self, msg: impl AsRef<str>) {
        if self.verbose > 0 {
            eprintln!("{}", msg.as_ref());
        }
    }

    fn load(&self, sg: &Semigroup) -> Option<CacheEntry> {
        let c = self.cache.as_ref()?;
        match c.load(sg) {
            Ok(e) => e,
            Err(e @ CacheError::Invalid(_)) => {
                eprintln!("warning: {e}; recomputing");
                None
            }
            Err(e) => {
                eprintln!("warning: {e}");
                None
            }
        }
    }

    fn store(&self, entry: &CacheEntry) {
        if let Some(c) = &self.cache {
            if let Err(e) = c.store(entry) {
                eprintln!("warning: could not write cache: {e}");
            }
        }
    }

    /// Cached value when this method already produced it, otherwise compute,
    /// compare with any cached value and record the method.
    fn superpoly(&self, n: i64, k: i64, method: Method, truncation: Option<i64>) -> Result<(Superpoly, CacheEntry), CliError> {
        let sg = Semigroup::new(n, k)?;
        let cached = self.load(&sg);
        if let Some(e) = &cached {
            if e.has_method(method.name()) {
                self.note(format!("cache hit for ({}, {})", sg.n(), sg.k()));
                let p = e.poly().map_err(|err| CliError { code: EXIT_INTERNAL, message: err.to_string() })?;
                return Ok((Superpoly::new(&sg, p, method, None), e.clone()));
            }
        }
        let t = Instant::now();
        let s = compute::superpoly(n, k, method, truncation)?;
        self.note(format!("({}, {}) by {method} in {:.2?}", sg.n(), sg.k(), t.elapsed()));
        let entry = match cached {
            Some(mut e) => {
                let p = e.poly().map_err(|err| CliError { code: EXIT_INTERNAL, message: err.to_string() })?;
                if p != s.spp {
                    return Err(CliError {
                        code: EXIT_MISMATCH,
                        message: format!(
                            "method {method} disagrees with the cached result (methods {})",
                            e.methods_checked.join(", ")
                        ),
                    });
                }
                e.add_method(method.name());
                e
            }
            None => CacheEntry::new(&sg, &s.spp, &[method.name()]),
        };
        self.store(&entry);
        Ok((s, entry))
    }
}

fn default_cache_dir() -> Option<PathBuf> {
    if let Some(x) = std::env::var_os("XDG_CACHE_HOME").filter(|x| !x.is_empty()) {
        return Some(PathBuf::from(x).join("torus-spp"));
    }
    std::env::var_os("HOME").filter(|x| !x.is_empty()).map(|h| PathBuf::from(h).join(".cache").join("torus-spp"))
}

#[derive(Serialize)]
struct SuperpolyJson<'a> {
    #[serde(flatten)]
    entry: &'a CacheEntry,
    #[serde(skip_serializing_if = "Option::is_none")]
    uspp_num: Option<Vec<JsonTerm>>,
}

#[derive(Serialize)]
struct TableRow {
    n: i64,
    k: i64,
    delta: i64,
    mu: i64,
    terms: usize,
    semimodules: String,
    spp: Vec<JsonTerm>,
}

/// Run a parsed command, writing results to `out` and diagnostics to
/// stderr. Returns the process exit code.
pub fn run(cli: Cli, out: &mut dyn Write) -> i32 {
    let pool = match cli.jobs {
        Some(0) => {
            eprintln!("error: --jobs must be at least 1");
            return EXIT_USAGE;
        }
        Some(j) => rayon::ThreadPoolBuilder::new().num_threads(j).build(),
        None => rayon::ThreadPoolBuilder::new().build(),
    };
    let pool = match pool {
        Ok(p) => p,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_INTERNAL;
        }
    };
    let cache = if cli.no_cache { None } else { cli.cache_dir.clone().or_else(default_cache_dir).map(Cache::new) };
    let ctx = Ctx { cache, verbose: cli.verbose, seed: cli.seed };
    let mut buf = Vec::new();
    let result = pool.install(|| dispatch(&ctx, cli.command, &mut buf));
    if let Err(e) = out.write_all(&buf).and_then(|_| out.flush()) {
        eprintln!("error: {e}");
        return EXIT_INTERNAL;
    }
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {}", e.message);
            e.code
        }
    }
}

fn dispatch(ctx: &Ctx, cmd: Command, out: &mut dyn Write) -> Result<i32, CliError> {
    match cmd {
        Command::Superpoly { n, k, method, format, uspp, truncation } => {
            let (s, entry) = ctx.superpoly(n, k, method, truncation)?;
            match format {
                Format::Json => {
                    let j = SuperpolyJson { entry: &entry, uspp_num: uspp.then(|| poly_to_json(&s.uspp_num)) };
                    writeln!(out, "{}", serde_json::to_string(&j).expect("serializes"))?;
                }
                _ => {
                    writeln!(out, "{}", render(&s.spp, format, TermOrder::Canonical))?;
                    if uspp {
                        writeln!(out, "{}", render(&s.uspp_num, format, TermOrder::Canonical))?;
                    }
                }
            }
            Ok(EXIT_OK)
        }
        Command::Verify { n, k, format } => cmd_verify(ctx, n, k, format, out),
        Command::Catalan { n, m, format } => {
            let c = qt_catalan(n, m)?;
            writeln!(out, "{}", render(&c, format, TermOrder::QDescending))?;
            Ok(EXIT_OK)
        }
        Command::Stable { n, order, format } => {
            if n < 1 || order < 0 {
                return Err(CliError { code: EXIT_USAGE, message: "need n >= 1 and order >= 0".into() });
            }
            let s = stable_series(n, order);
            match format {
                Format::Json => {
                    let j = serde_json::json!({ "n": n, "order": order, "series": poly_to_json(s.poly()) });
                    writeln!(out, "{j}")?;
                }
                Format::Text => writeln!(out, "{} + O(q^{order})", render(s.poly(), format, TermOrder::Canonical))?,
                Format::Latex => writeln!(out, "{} + O(q^{{{order}}})", render(s.poly(), format, TermOrder::Canonical))?,
            }
            Ok(EXIT_OK)
        }
        Command::Table { n, k, method, format } => cmd_table(ctx, n, k, method, format, out),
    }
}

fn cmd_verify(ctx: &Ctx, n: i64, k: i64, format: Format, out: &mut dyn Write) -> Result<i32, CliError> {
    let t = Instant::now();
    let report = verify::run(n, k, ctx.seed)?;
    let sg = Semigroup::new(n, k)?;
    match format {
        Format::Json => {
            let j = serde_json::json!({ "n": sg.n(), "k": sg.k(), "checks": report.rows, "passed": report.passed() });
            writeln!(out, "{j}")?;
        }
        _ => {
            writeln!(out, "T({}, {}): delta = {}, mu = {}", sg.n(), sg.k(), sg.delta(), sg.mu())?;
            for r in &report.rows {
                let status = match r.status {
                    Status::Pass => "pass",
                    Status::Fail => "FAIL",
                    Status::Skip => "skip",
                };
                writeln!(out, "  {:<22} {:<5} {}", r.check, status, r.detail)?;
            }
            let failed = report.rows.iter().filter(|r| r.status == Status::Fail).count();
            if failed == 0 {
                writeln!(out, "all checks passed")?;
            } else {
                writeln!(out, "{failed} check(s) failed")?;
            }
        }
    }
    eprintln!("verify ({}, {}) took {:.2?}", sg.n(), sg.k(), t.elapsed());
    if let Some(s) = &report.superpoly {
        if report.passed() {
            let names: Vec<&str> = report.agreeing.iter().map(|m| m.name()).collect();
            let mut entry = ctx.load(&sg).unwrap_or_else(|| CacheEntry::new(&sg, &s.spp, &names));
            for m in names {
                entry.add_method(m);
            }
            ctx.store(&entry);
        }
    }
    let errors: Vec<&Error> = report.rows.iter().filter_map(|r| r.error.as_ref()).collect();
    Ok(if errors.is_empty() {
        EXIT_OK
    } else if errors.iter().all(|e| e.is_conjecture_failure()) {
        EXIT_MISMATCH
    } else {
        EXIT_INTERNAL
    })
}

fn cmd_table(
    ctx: &Ctx,
    ns: RangeInclusive<i64>,
    ks: RangeInclusive<i64>,
    method: Method,
    format: Format,
    out: &mut dyn Write,
) -> Result<i32, CliError> {
    let mut rows = Vec::new();
    for n in ns.clone() {
        for k in ks.clone() {
            if n < 2 || n >= k || Semigroup::new(n, k).is_err() {
                continue;
            }
            let (s, _) = ctx.superpoly(n, k, method, None)?;
            rows.push(TableRow {
                n,
                k,
                delta: s.delta(),
                mu: s.mu(),
                terms: s.spp.len(),
                semimodules: s.spp_min().eval_ones().to_string(),
                spp: poly_to_json(&s.spp),
            });
        }
    }
    match format {
        Format::Json => writeln!(out, "{}", serde_json::to_string(&rows).expect("serializes"))?,
        _ => {
            writeln!(out, "{:>3} {:>3} {:>5} {:>5} {:>7} {:>12}", "n", "k", "delta", "mu", "terms", "semimodules")?;
            for r in &rows {
                writeln!(out, "{:>3} {:>3} {:>5} {:>5} {:>7} {:>12}", r.n, r.k, r.delta, r.mu, r.terms, r.semimodules)?;
            }
        }
    }
    Ok(EXIT_OK)
}
