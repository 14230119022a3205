//! The `mzvlab` command line.
//!
//! Exit codes: 0 on success, 1 when a verification fails, 2 on usage or
//! input errors.

pub mod config;
pub mod expr;

use std::ffi::OsString;
use std::io::{self, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::maps::{derivation, phi, s1, s1_inv, s_map, tau};
use crate::numerics::{
    c2_table, interpolation_table, kawashima_residuals, zeta_eval, NumericReport, DEFAULT_SERIES_CUTOFF,
};
use crate::products::{diamond, harmonic};
use crate::relations::{
    check_graded_equality, derivation_checks, duality_checks, format_reduction, graded_span, reduce_to_basis,
    ResidualCheck, SetId, SetSummary,
};
use crate::word::{Index, Word, WordPoly};

pub use config::Config;
pub use expr::{parse_expr, parse_poly, ExprAst};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "mzvlab", version, about = "Word algebra and numerics for multiple zeta values")]
struct Cli {
    /// Config file (default: ./mzvlab.conf when present).
    #[arg(long, global = true, value_name = "PATH")]
    config: Option<PathBuf>,

    /// Emit a single JSON document.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Diamond or harmonic product of two expressions.
    Product {
        #[arg(long, value_enum)]
        op: ProductOp,
        /// Left operand, e.g. "y z^2 x - 1/2*yx"
        #[arg(allow_hyphen_values = true)]
        left: String,
        #[arg(allow_hyphen_values = true)]
        right: String,
    },
    /// Apply tau, phi, s1, s1inv, smap or the derivation d<l>.
    Map {
        /// tau, phi, s1, s1inv, smap, or d1, d2, ...
        #[arg(long)]
        name: String,
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Coordinates of f(y w1, w2 x) in the basis f(y, u x).
    Reduce {
        /// Word in x and y; "" or "1" for the empty word
        #[arg(long)]
        w1: String,
        #[arg(long)]
        w2: String,
    },
    /// Dimension and pivots of a graded relation space.
    Span {
        /// One of A1, A2, A3, A4
        #[arg(long)]
        set: SetId,
        #[arg(long)]
        weight: usize,
    },
    /// Exact relation-space checks.
    Check(CheckArgs),
    /// Evaluate a multiple zeta value.
    Zeta {
        /// Comma-separated, last entry at least 2
        #[arg(long)]
        index: Index,
        /// Summation cutoff N
        #[arg(long)]
        cutoff: Option<u64>,
        #[arg(long)]
        tol: Option<f64>,
    },
    /// Numerical and exact identity checks.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ProductOp {
    Diamond,
    Harmonic,
}

#[derive(Debug, Args)]
struct CheckArgs {
    #[command(subcommand)]
    what: CheckCommand,
}

#[derive(Debug, Subcommand)]
enum CheckCommand {
    /// Mutual inclusion of A1..A4 in each weight from 3 up.
    Equality {
        #[arg(long)]
        max_weight: Option<usize>,
    },
    /// w - tau(w) lies in A4 for admissible w of the given weight.
    Duality {
        #[arg(long)]
        weight: usize,
    },
    /// d_l(w) lies in A4 for admissible w of the given weight.
    Derivation {
        #[arg(long)]
        weight: usize,
        #[arg(long, default_value_t = 1)]
        l: usize,
    },
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[command(subcommand)]
    what: VerifyCommand,
}

#[derive(Debug, Subcommand)]
enum VerifyCommand {
    /// Z(phi(u * v) x) vanishes numerically.
    Kawashima {
        #[arg(long)]
        max_weight: Option<usize>,
        #[arg(long)]
        cutoff: Option<u64>,
        #[arg(long)]
        tol: Option<f64>,
    },
    /// L1(s) + s L2(s) against Z(y (x+y)^s B).
    Interpolation {
        #[arg(long)]
        index: Index,
        #[arg(long)]
        smax: u32,
        #[arg(long)]
        cutoff: Option<u64>,
        #[arg(long)]
        tol: Option<f64>,
    },
    /// c2(w; N) = h_N(tau(S1^-1(w))) / N, exactly.
    C2 {
        #[arg(long)]
        max_weight: Option<usize>,
        #[arg(long = "max-N", alias = "max-n")]
        max_n: u64,
    },
}

/// Runs the CLI on `argv` (including the program name) against the process
/// environment and standard streams.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let env_cutoff = std::env::var(config::CUTOFF_ENV).ok();
    let cwd = std::env::current_dir().unwrap_or_else(|_| PathBuf::from("."));
    let stdout = io::stdout();
    let stderr = io::stderr();
    run_with(argv, &cwd, env_cutoff.as_deref(), &mut stdout.lock(), &mut stderr.lock())
}

/// [`run`] with explicit working directory, `MZVLAB_CUTOFF` value and
/// output streams.
pub fn run_with<I, T>(
    argv: I,
    cwd: &std::path::Path,
    env_cutoff: Option<&str>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    return EXIT_OK;
                }
                _ => EXIT_USAGE,
            };
            let _ = write!(err, "{}", e.render());
            return code;
        }
    };
    let cfg = match Config::load(cli.config.as_deref(), cwd, env_cutoff) {
        Ok(c) => c,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return EXIT_USAGE;
        }
    };
    let mut ctx = Ctx { cfg, json: cli.json, out };
    match ctx.dispatch(cli.command) {
        Ok(true) => EXIT_OK,
        Ok(false) => EXIT_FAILED,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

struct Ctx<'a> {
    cfg: Config,
    json: bool,
    out: &'a mut dyn Write,
}

fn parse_word(s: &str) -> Result<Word> {
    Word::parse(s.trim())
}

fn map_by_name(name: &str, p: &WordPoly) -> Result<WordPoly> {
    match name {
        "tau" => Ok(tau(p)),
        "phi" => Ok(phi(p)),
        "s1" => Ok(s1(p)),
        "s1inv" => Ok(s1_inv(p)),
        "smap" => s_map(p),
        _ => {
            let l = name
                .strip_prefix('d')
                .and_then(|l| l.parse::<usize>().ok())
                .ok_or_else(|| Error::Parse {
                    pos: 0,
                    msg: format!("unknown map {name:?}; expected tau, phi, s1, s1inv, smap or d<l>"),
                })?;
            derivation(l, p)
        }
    }
}

fn fmt_report(r: &NumericReport) -> String {
    format!(
        "{:.15} (cutoff {}, error estimate {:.2e}, {})",
        r.value,
        r.cutoff,
        r.error_estimate,
        if r.converged { "converged" } else { "not converged" }
    )
}

fn fmt_certificate(c: &ResidualCheck) -> String {
    if !c.certificate.member {
        let rest = c.certificate.residual.as_ref().map(|p| p.to_string()).unwrap_or_default();
        return format!("NOT A MEMBER, remainder {rest}");
    }
    if c.certificate.coordinates.is_empty() {
        return "zero".into();
    }
    let terms: Vec<String> = c
        .certificate
        .coordinates
        .iter()
        .map(|k| format!("{}*[{}]", k.coeff, k.label))
        .collect();
    format!(
        "{} = {}{}",
        c.residual,
        terms.join(" + "),
        if c.verified { "" } else { "  (FAILED re-check)" }
    )
}

impl Ctx<'_> {
    fn emit_json<T: Serialize>(&mut self, value: &T) -> Result<()> {
        let s = serde_json::to_string(value).map_err(|e| Error::Domain(e.to_string()))?;
        writeln!(self.out, "{s}")?;
        Ok(())
    }

    fn line(&mut self, s: impl AsRef<str>) -> Result<()> {
        writeln!(self.out, "{}", s.as_ref())?;
        Ok(())
    }

    /// Returns `Ok(false)` when a verification failed.
    fn dispatch(&mut self, cmd: Command) -> Result<bool> {
        match cmd {
            Command::Product { op, left, right } => {
                let (a, b) = (parse_poly(&left)?, parse_poly(&right)?);
                let p = match op {
                    ProductOp::Diamond => diamond(&a, &b),
                    ProductOp::Harmonic => harmonic(&a, &b),
                };
                self.poly_out(&p)?;
            }
            Command::Map { name, expr } => {
                let p = map_by_name(&name, &parse_poly(&expr)?)?;
                self.poly_out(&p)?;
            }
            Command::Reduce { w1, w2 } => {
                let (w1, w2) = (parse_word(&w1)?, parse_word(&w2)?);
                let reduced = reduce_to_basis(&w1, &w2);
                let statement = format_reduction(&w1, &w2, &reduced);
                if self.json {
                    #[derive(Serialize)]
                    struct Out {
                        w1: String,
                        w2: String,
                        reduced: String,
                        statement: String,
                    }
                    self.emit_json(&Out {
                        w1: w1.to_string(),
                        w2: w2.to_string(),
                        reduced: reduced.to_string(),
                        statement,
                    })?;
                } else {
                    self.line(reduced.to_string())?;
                    self.line(statement)?;
                }
            }
            Command::Span { set, weight } => {
                let summary = SetSummary::of(set, &graded_span(set, weight)?);
                if self.json {
                    #[derive(Serialize)]
                    struct Out<'a> {
                        weight: usize,
                        #[serde(flatten)]
                        summary: &'a SetSummary,
                    }
                    self.emit_json(&Out { weight, summary: &summary })?;
                } else {
                    self.line(format!(
                        "{set} weight {weight}: dim {} ({} generators)",
                        summary.dim, summary.generators
                    ))?;
                    self.line(format!("pivots: {}", summary.pivots.join(" ")))?;
                }
            }
            Command::Check(CheckArgs { what }) => return self.check(what),
            Command::Zeta { index, cutoff, tol } => {
                let r = zeta_eval(&index, cutoff.unwrap_or(self.cfg.cutoff), tol.unwrap_or(self.cfg.tol))?;
                if self.json {
                    self.emit_json(&r)?;
                } else {
                    self.line(format!("zeta{index} = {}", fmt_report(&r)))?;
                }
            }
            Command::Verify(VerifyArgs { what }) => return self.verify(what),
        }
        Ok(true)
    }

    fn poly_out(&mut self, p: &WordPoly) -> Result<()> {
        if self.json {
            self.emit_json(&p.to_string())
        } else {
            self.line(p.to_string())
        }
    }

    fn check(&mut self, what: CheckCommand) -> Result<bool> {
        match what {
            CheckCommand::Equality { max_weight } => {
                let max_weight = max_weight.unwrap_or(self.cfg.max_weight);
                let reports = (3..=max_weight)
                    .map(check_graded_equality)
                    .collect::<Result<Vec<_>>>()?;
                let ok = reports.iter().all(|r| r.equal);
                if self.json {
                    self.emit_json(&reports)?;
                } else {
                    for r in &reports {
                        let dims: Vec<String> = r.sets.iter().map(|s| format!("{}={}", s.id, s.dim)).collect();
                        let verdict = if r.equal { "equal" } else { "NOT EQUAL" };
                        self.line(format!("weight {}: {} {verdict}", r.weight, dims.join(" ")))?;
                        for w in r.witnesses.iter().filter(|w| !w.included) {
                            let ce = w.counterexample.as_ref().map(|p| p.to_string()).unwrap_or_default();
                            self.line(format!("  {} not in {}: {ce}", w.from, w.into))?;
                        }
                    }
                }
                Ok(ok)
            }
            CheckCommand::Duality { weight } => {
                let checks = duality_checks(weight)?;
                self.residual_table("duality", weight, &checks)
            }
            CheckCommand::Derivation { weight, l } => {
                let checks = derivation_checks(l, weight)?;
                self.residual_table(&format!("d{l}"), weight, &checks)
            }
        }
    }

    fn residual_table(&mut self, what: &str, weight: usize, checks: &[ResidualCheck]) -> Result<bool> {
        let ok = checks.iter().all(|c| c.certificate.member && c.verified);
        if self.json {
            self.emit_json(&checks)?;
        } else {
            self.line(format!("{what} residuals, weight {weight}, against A4:"))?;
            for c in checks {
                self.line(format!("  {}: {}", c.word, fmt_certificate(c)))?;
            }
            self.line(format!("{} of {} in A4", checks.iter().filter(|c| c.verified).count(), checks.len()))?;
        }
        Ok(ok)
    }

    fn verify(&mut self, what: VerifyCommand) -> Result<bool> {
        match what {
            VerifyCommand::Kawashima { max_weight, cutoff, tol } => {
                let rows = kawashima_residuals(
                    max_weight.unwrap_or(self.cfg.max_weight),
                    cutoff.unwrap_or(self.cfg.cutoff),
                    tol.unwrap_or(self.cfg.tol),
                )?;
                let ok = rows.iter().all(|r| r.passed);
                if self.json {
                    self.emit_json(&rows)?;
                } else {
                    self.line(format!("{:>3}  {:<10} {:<10} {:>12}  {:>10}", "wt", "u", "v", "residual", "estimate"))?;
                    for r in &rows {
                        self.line(format!(
                            "{:>3}  {:<10} {:<10} {:>12.3e}  {:>10.2e}{}",
                            r.weight,
                            r.u,
                            r.v,
                            r.residual.value,
                            r.residual.error_estimate,
                            if r.passed { "" } else { "  FAIL" }
                        ))?;
                    }
                    let failed = rows.iter().filter(|r| !r.passed).count();
                    self.line(format!("{} pairs, {failed} failures", rows.len()))?;
                }
                Ok(ok)
            }
            VerifyCommand::Interpolation { index, smax, cutoff, tol } => {
                let (z_cut, l_cut) = match cutoff {
                    Some(c) => (c, c),
                    None => (self.cfg.cutoff, DEFAULT_SERIES_CUTOFF),
                };
                let rows = interpolation_table(&index, smax, z_cut, l_cut, tol.unwrap_or(self.cfg.tol))?;
                let ok = rows.iter().all(|r| r.passed);
                if self.json {
                    self.emit_json(&rows)?;
                } else {
                    self.line(format!(
                        "{:>3}  {:>20} {:>20} {:>10} {:>10}",
                        "s", "L1+sL2", "Z", "|diff|", "budget"
                    ))?;
                    for r in &rows {
                        let mut flags = String::new();
                        if !r.passed {
                            flags.push_str("  FAIL");
                        }
                        if !r.combined.converged {
                            flags.push_str("  (series not converged)");
                        }
                        self.line(format!(
                            "{:>3}  {:>20.15} {:>20.15} {:>10.2e} {:>10.2e}{flags}",
                            r.s,
                            r.combined.value,
                            r.z.value,
                            r.difference,
                            r.combined.error_estimate + r.z.error_estimate
                        ))?;
                    }
                }
                Ok(ok)
            }
            VerifyCommand::C2 { max_weight, max_n } => {
                let rows = c2_table(max_weight.unwrap_or(self.cfg.max_weight), max_n)?;
                let ok = rows.iter().all(|r| r.equal);
                if self.json {
                    self.emit_json(&rows)?;
                } else {
                    for r in rows.iter().filter(|r| !r.equal) {
                        self.line(format!("MISMATCH {} N={}: {} vs {}", r.word, r.n, r.lhs, r.rhs))?;
                    }
                    let words = rows.iter().map(|r| r.word.as_str()).collect::<std::collections::BTreeSet<_>>();
                    self.line(format!(
                        "{} words, N <= {max_n}: {} of {} checks exact",
                        words.len(),
                        rows.iter().filter(|r| r.equal).count(),
                        rows.len()
                    ))?;
                }
                Ok(ok)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_capture(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("mzvlab").chain(args.iter().copied());
        let dir = std::env::temp_dir();
        let code = run_with(argv, &dir.join("mzvlab-no-config-here"), None, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn reduce_euler() {
        let (code, out, _) = run_capture(&["reduce", "--w1", "x", "--w2", ""]);
        assert_eq!(code, 0);
        let mut lines = out.lines();
        assert_eq!(lines.next(), Some("y"));
        assert_eq!(lines.next(), Some("f(yx, x) = f(y, yx)"));
    }

    #[test]
    fn usage_errors() {
        assert_eq!(run_capture(&["frobnicate"]).0, EXIT_USAGE);
        assert_eq!(run_capture(&["product", "--op", "diamond", "x", "x", "--bogus"]).0, EXIT_USAGE);
        assert_eq!(run_capture(&["product", "--op", "diamond", "x^", "x"]).0, EXIT_USAGE);
        assert_eq!(run_capture(&["map", "--name", "sigma", "x"]).0, EXIT_USAGE);
        assert_eq!(run_capture(&["--help"]).0, EXIT_OK);
    }

    #[test]
    fn maps_and_products() {
        let (code, out, _) = run_capture(&["map", "--name", "tau", "yxx"]);
        assert_eq!((code, out.trim()), (0, "yyx"));
        let (code, out, _) = run_capture(&["product", "--op", "harmonic", "y", "y"]);
        assert_eq!((code, out.trim()), (0, "2*yy + yx"));
        let (code, out, _) = run_capture(&["map", "--name", "d1", "yx"]);
        assert_eq!(code, 0);
        assert!(!out.trim().is_empty());
    }

    #[test]
    fn span_json() {
        let (code, out, _) = run_capture(&["span", "--set", "A2", "--weight", "3", "--json"]);
        assert_eq!(code, 0);
        assert!(out.ends_with('\n'));
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["dim"], 1);
        assert_eq!(v["pivots"][0], "yyx");
    }
}
