//! The `gvm` command line.
//!
//! Exit codes: 0 on success, 1 on a verification mismatch or an output
//! failure, 2 on a usage error (bad flags, scalars, ranks or indices).

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use gvm_core::harness::{standard_grid, GenericOffset, GridSpec, Pairing, ParameterGrid, RationalRange};
use gvm_core::verdict::evaluate;
use gvm_core::{gk, LieKind, ParabolicSetup, Rational, ScalarSequence};

use crate::diagram::{analyze, render_ascii, render_svg};
use crate::parse::{parse_scalar_list, ScalarArg};
use crate::record::{write_csv, write_json, VerdictRecord};
use crate::sweep::{par_sweep, par_verify_family, threads_from_env};

#[derive(Debug, Parser)]
#[command(name = "gvm", version, about = "Reducibility of scalar generalized Verma modules")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum KindArg {
    #[value(name = "A", alias = "a")]
    A,
    #[value(name = "D", alias = "d")]
    D,
}

impl From<KindArg> for LieKind {
    fn from(k: KindArg) -> Self {
        match k {
            KindArg::A => LieKind::A,
            KindArg::D => LieKind::D,
        }
    }
}

#[derive(Debug, Clone, Args)]
pub struct SetupArgs {
    /// Lie type: A for sl(n), D for so(2n).
    #[arg(long = "type", value_enum)]
    pub kind: KindArg,
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub p: usize,
    #[arg(long)]
    pub q: usize,
}

impl SetupArgs {
    fn setup(&self) -> Result<ParabolicSetup, CliError> {
        ParabolicSetup::of(self.kind.into(), self.n, self.p, self.q)
            .map_err(|e| CliError::Usage(format!("invalid setup: {e}")))
    }
}

#[derive(Debug, Clone, Args)]
pub struct PointArgs {
    /// Coefficient of the first fundamental weight, e.g. -2, 1/2+tau.
    #[arg(long, allow_hyphen_values = true)]
    pub z1: ScalarArg,
    /// Coefficient of the second fundamental weight.
    #[arg(long, allow_hyphen_values = true)]
    pub z2: ScalarArg,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GridKind {
    Standard,
    Custom,
}

#[derive(Debug, Clone, Args)]
pub struct GridArgs {
    #[arg(long, value_enum, default_value = "standard")]
    pub grid: GridKind,
    /// Custom grid: smallest rational value on each axis.
    #[arg(long, allow_hyphen_values = true)]
    pub lo: Option<ScalarArg>,
    /// Custom grid: largest rational value on each axis.
    #[arg(long, allow_hyphen_values = true)]
    pub hi: Option<ScalarArg>,
    /// Custom grid: positive rational step.
    #[arg(long)]
    pub step: Option<ScalarArg>,
    /// Custom grid: extra comma-separated axis values, e.g. "1/3,tau".
    #[arg(long, allow_hyphen_values = true)]
    pub extra: Option<String>,
    /// Custom grid: also sample the coupled points (a+tau, b-tau).
    #[arg(long)]
    pub coupled: bool,
    /// Custom grid: pair values index by index instead of all pairs.
    #[arg(long)]
    pub diagonal: bool,
}

fn rational_flag(name: &str, value: &Option<ScalarArg>) -> Result<Rational, CliError> {
    let v = value.as_ref().ok_or_else(|| CliError::Usage(format!("--grid custom requires --{name}")))?;
    v.0.as_rational().ok_or_else(|| CliError::Usage(format!("--{name} must be rational, got {}", v.0)))
}

impl GridArgs {
    fn grid(&self, setup: &ParabolicSetup) -> Result<ParameterGrid, CliError> {
        if self.grid == GridKind::Standard {
            return Ok(standard_grid(setup));
        }
        let extra_values = match &self.extra {
            Some(s) => parse_scalar_list(s).map_err(|e| CliError::Usage(format!("--extra: {e}")))?,
            None => Vec::new(),
        };
        let spec = GridSpec {
            range: RationalRange {
                lo: rational_flag("lo", &self.lo)?,
                hi: rational_flag("hi", &self.hi)?,
                step: rational_flag("step", &self.step)?,
            },
            extra_values,
            coupled_offsets: if self.coupled {
                vec![(GenericOffset::PlusTau, GenericOffset::MinusTau)]
            } else {
                Vec::new()
            },
            pairing: if self.diagonal { Pairing::Diagonal } else { Pairing::Cartesian },
        };
        spec.build().map_err(|e| CliError::Usage(format!("invalid grid: {e}")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ReduceFormat {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SweepFormat {
    Csv,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// GK dimension of the simple quotient and dim u.
    Gkdim {
        #[command(flatten)]
        setup: SetupArgs,
        #[command(flatten)]
        point: PointArgs,
    },
    /// Oracle verdict and closed-form criterion at one point.
    Reduce {
        #[command(flatten)]
        setup: SetupArgs,
        #[command(flatten)]
        point: PointArgs,
        #[arg(long, value_enum, default_value = "text")]
        format: ReduceFormat,
    },
    /// Insertion tableau and shape of a sequence.
    Rs {
        /// Comma-separated scalars, e.g. "5,3,3,1".
        #[arg(long, allow_hyphen_values = true)]
        seq: String,
    },
    /// Evaluate every point of a grid.
    Sweep {
        #[command(flatten)]
        setup: SetupArgs,
        #[command(flatten)]
        grid: GridArgs,
        /// Output file; stdout when absent.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Defaults to json for a .json output file, csv otherwise.
        #[arg(long, value_enum)]
        format: Option<SweepFormat>,
    },
    /// Check the closed-form criteria against the oracle for every setup.
    Verify {
        #[arg(long = "type", value_enum)]
        kind: KindArg,
        #[arg(long)]
        max_n: usize,
    },
    /// Plot reducible points of a grid.
    Diagram {
        #[command(flatten)]
        setup: SetupArgs,
        #[command(flatten)]
        grid: GridArgs,
        /// SVG output file; stdout when absent.
        #[arg(long, conflicts_with = "ascii")]
        out: Option<PathBuf>,
        /// Character grid on stdout instead of SVG.
        #[arg(long)]
        ascii: bool,
    },
}

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Failure(String),
    Mismatch,
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Failure(_) | CliError::Mismatch => 1,
        }
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Failure(e.to_string())
    }
}

fn threads() -> Result<Option<usize>, CliError> {
    threads_from_env().map_err(|e| CliError::Usage(e.to_string()))
}

fn create(path: &Path) -> Result<BufWriter<File>, CliError> {
    File::create(path)
        .map(BufWriter::new)
        .map_err(|e| CliError::Failure(format!("{}: {e}", path.display())))
}

fn execute(cli: Cli, out: &mut dyn Write) -> Result<(), CliError> {
    match cli.command {
        Command::Gkdim { setup, point } => {
            let s = setup.setup()?;
            let gk = gk::gk_dimension(&s, &point.z1.0, &point.z2.0);
            writeln!(out, "gk={gk} dim_u={}", s.dim_u())?;
        }
        Command::Reduce { setup, point, format } => {
            let s = setup.setup()?;
            let v = evaluate(&s, &point.z1.0, &point.z2.0).map_err(|e| CliError::Failure(e.to_string()))?;
            match format {
                ReduceFormat::Text => {
                    let opt = |b: Option<bool>| b.map_or_else(|| "-".to_string(), |b| b.to_string());
                    writeln!(
                        out,
                        "{} gk={} dim_u={} reducible={} criterion={} agree={}",
                        if v.reducible { "reducible" } else { "irreducible" },
                        v.gk,
                        v.dim_u,
                        v.reducible,
                        opt(v.criterion),
                        opt(v.agree)
                    )?;
                }
                ReduceFormat::Json => {
                    let text = serde_json::to_string(&VerdictRecord::from(&v))
                        .map_err(|e| CliError::Failure(e.to_string()))?;
                    writeln!(out, "{text}")?;
                }
            }
        }
        Command::Rs { seq } => {
            let items = parse_scalar_list(&seq).map_err(|e| CliError::Usage(format!("--seq: {e}")))?;
            let seq = ScalarSequence::new(items);
            let shape = seq.rs_shape().map_err(|e| CliError::Usage(format!("--seq: {e}")))?;
            let tableau = seq.render_tableau().map_err(|e| CliError::Usage(e.to_string()))?;
            write!(out, "{tableau}")?;
            writeln!(out, "shape: {shape}")?;
        }
        Command::Sweep { setup, grid, out: path, format } => {
            let s = setup.setup()?;
            let g = grid.grid(&s)?;
            let report = par_sweep(&s, &g, threads()?).map_err(|e| CliError::Failure(e.to_string()))?;
            let format = format.unwrap_or(match path.as_ref().and_then(|p| p.extension()) {
                Some(ext) if ext.eq_ignore_ascii_case("json") => SweepFormat::Json,
                _ => SweepFormat::Csv,
            });
            let write = |w: &mut dyn Write| -> Result<(), CliError> {
                match format {
                    SweepFormat::Csv => write_csv(&report, w).map_err(|e| CliError::Failure(e.to_string())),
                    SweepFormat::Json => {
                        write_json(&report, &mut *w).map_err(|e| CliError::Failure(e.to_string()))?;
                        writeln!(w)?;
                        Ok(())
                    }
                }
            };
            match &path {
                Some(p) => {
                    let mut f = create(p)?;
                    write(&mut f)?;
                    f.flush()?;
                    let sm = report.summary;
                    writeln!(
                        out,
                        "{s}: wrote {} rows to {} (reducible={} irreducible={} mismatches={} errors={})",
                        report.rows.len(),
                        p.display(),
                        sm.reducible,
                        sm.irreducible,
                        sm.mismatches,
                        sm.errors
                    )?;
                }
                None => write(out)?,
            }
        }
        Command::Verify { kind, max_n } => {
            let kind = LieKind::from(kind);
            let report = par_verify_family(kind, max_n, threads()?).map_err(|e| CliError::Failure(e.to_string()))?;
            if report.setups_checked == 0 {
                return Err(CliError::Usage(format!("no two-step non-maximal setups of type {kind} with n <= {max_n}")));
            }
            for v in &report.mismatches {
                writeln!(
                    out,
                    "mismatch {} z1={} z2={} gk={} dim_u={} oracle={} criterion={}",
                    v.setup,
                    v.z1,
                    v.z2,
                    v.gk,
                    v.dim_u,
                    v.reducible,
                    v.criterion.map_or("-".to_string(), |c| c.to_string())
                )?;
            }
            for (s, e) in &report.errors {
                writeln!(out, "error {s} z1={} z2={}: {}", e.z1, e.z2, e.error)?;
            }
            writeln!(
                out,
                "type {kind}, n <= {max_n}: setups={} points={} mismatches={} errors={}",
                report.setups_checked,
                report.points_checked,
                report.mismatches.len(),
                report.errors.len()
            )?;
            if !report.is_verified() {
                return Err(CliError::Mismatch);
            }
        }
        Command::Diagram { setup, grid, out: path, ascii } => {
            let s = setup.setup()?;
            let g = grid.grid(&s)?;
            let report = par_sweep(&s, &g, threads()?).map_err(|e| CliError::Failure(e.to_string()))?;
            let view = analyze(&report).map_err(|e| CliError::Usage(e.to_string()))?;
            let doc = if ascii { render_ascii(&view) } else { render_svg(&view) };
            match &path {
                Some(p) => {
                    let mut f = create(p)?;
                    f.write_all(doc.as_bytes())?;
                    f.flush()?;
                    writeln!(out, "{s}: wrote {}", p.display())?;
                }
                None => out.write_all(doc.as_bytes())?,
            }
        }
    }
    Ok(())
}

/// Parses `args` (program name first) and runs the command, writing
/// results to `out` and diagnostics to `err`. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let _ = if code == 0 { write!(out, "{}", e.render()) } else { write!(err, "{}", e.render()) };
            return if code == 0 { 0 } else { 2 };
        }
    };
    match execute(cli, out) {
        Ok(()) => 0,
        Err(e) => {
            match &e {
                CliError::Usage(msg) => {
                    let _ = writeln!(err, "error: {msg}");
                }
                CliError::Failure(msg) => {
                    let _ = writeln!(err, "error: {msg}");
                }
                CliError::Mismatch => {
                    let _ = writeln!(err, "verification failed");
                }
            }
            e.exit_code()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(std::iter::once("gvm").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn negative_scalars_are_values_not_flags() {
        let (code, out, _) =
            run_str(&["gkdim", "--type", "A", "--n", "8", "--p", "2", "--q", "5", "--z1", "-5/2", "--z2", "-5/2"]);
        assert_eq!(code, 0);
        assert_eq!(out, "gk=21 dim_u=21\n");
    }

    #[test]
    fn bad_scalar_is_a_usage_error() {
        let (code, _, err) =
            run_str(&["gkdim", "--type", "A", "--n", "8", "--p", "2", "--q", "5", "--z1", "x", "--z2", "0"]);
        assert_eq!(code, 2);
        assert!(err.contains("unknown symbol"));
    }

    #[test]
    fn help_exits_zero() {
        let (code, out, _) = run_str(&["--help"]);
        assert_eq!(code, 0);
        assert!(out.contains("verify"));
    }
}
