//! Command-line front end.
//!
//! Each subcommand writes one artifact in `plain`, `csv` or `json` form. JSON
//! output follows the serde types in this module; every integer that can
//! outgrow 64 bits (counts, polynomial and series coefficients) is a decimal
//! string.
//!
//! Exit codes: 0 on success, 1 when `verify` finds a failing identity (or the
//! output cannot be written), 2 on invalid arguments.

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::grassmann::{
    beta_partition, grassmannian_permutation, poincare_polynomial, BetaVector, Permutation,
};
use crate::polyring::{BiSeries, Polynomial};
use crate::simplex::{
    count_lattice_points, dilation_generating_series, dilation_polynomial,
    ehrhart_generating_series, slice_counts, weighted_polynomial, DilatedSimplex, LatticePoint,
    WeightVector,
};
use crate::tableaux::{point_to_tableau, RowTableau};
use crate::verify::{run_verification, Identity, VerifyOptions, VerifyReport};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, ValueEnum)]
pub enum OutputFormat {
    Json,
    Csv,
    Plain,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Command {
    Enumerate,
    Grade,
    DilationPoly,
    WeightedPoly,
    Poincare,
    Bijection,
    Series,
    Verify,
}

/// `ones`, `staircase`, or an explicit comma-separated list.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum WeightSpec {
    Ones,
    Staircase,
    Explicit(Vec<u32>),
}

impl WeightSpec {
    pub fn resolve(&self, d: usize) -> Result<WeightVector, Error> {
        match self {
            WeightSpec::Ones => Ok(WeightVector::ones(d)),
            WeightSpec::Staircase => Ok(WeightVector::staircase(d)),
            WeightSpec::Explicit(w) => {
                if w.len() != d {
                    return Err(Error::DimensionMismatch {
                        expected: d,
                        actual: w.len(),
                    });
                }
                WeightVector::new(w.clone())
            }
        }
    }
}

impl FromStr for WeightSpec {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "ones" => Ok(WeightSpec::Ones),
            "staircase" => Ok(WeightSpec::Staircase),
            list => list
                .split(',')
                .map(|w| w.trim().parse::<u32>())
                .collect::<Result<Vec<_>, _>>()
                .map(WeightSpec::Explicit)
                .map_err(|_| format!("expected `ones`, `staircase` or a comma-separated list of positive integers, got {list:?}")),
        }
    }
}

/// Fully resolved invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunConfig {
    pub command: Command,
    pub d: usize,
    pub r: u32,
    pub weight: WeightSpec,
    pub output_format: OutputFormat,
    /// `(max_t, max_z)` for `series`.
    pub max_orders: (usize, usize),
    /// `(d_max, r_max)` for `verify`.
    pub verify_bounds: (usize, u32),
    pub fault: Option<Identity>,
}

impl RunConfig {
    pub fn new(command: Command, d: usize, r: u32) -> Self {
        RunConfig {
            command,
            d,
            r,
            weight: match command {
                Command::WeightedPoly => WeightSpec::Staircase,
                _ => WeightSpec::Ones,
            },
            output_format: OutputFormat::Plain,
            max_orders: (r as usize, r as usize),
            verify_bounds: (4, 5),
            fault: None,
        }
    }

    pub fn with_format(mut self, format: OutputFormat) -> Self {
        self.output_format = format;
        self
    }

    pub fn validate(&self) -> Result<(), Error> {
        match self.command {
            Command::Verify => {
                if self.verify_bounds.0 == 0 {
                    return Err(Error::ZeroDimension);
                }
            }
            _ => {
                DilatedSimplex::new(self.d, self.r)?;
                if matches!(self.command, Command::Grade | Command::WeightedPoly) {
                    self.weight.resolve(self.d)?;
                }
            }
        }
        Ok(())
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "simplex-grassmann",
    version,
    about = "Lattice points of dilated simplices, one-row tableaux, box partitions and Grassmannian permutations"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: CliCommand,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Plain)]
    pub format: OutputFormat,

    /// Write to this file instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct Dims {
    /// Dimension of the simplex (at least 1).
    #[arg(long)]
    pub d: usize,
    /// Dilation factor.
    #[arg(long)]
    pub r: u32,
}

#[derive(Debug, Subcommand)]
pub enum CliCommand {
    /// List every lattice point of r·Δ_d in lexicographic order.
    Enumerate(Dims),
    /// Slice class sizes under a weight vector.
    Grade {
        #[command(flatten)]
        dims: Dims,
        /// `ones`, `staircase`, or comma-separated positive weights.
        #[arg(long, default_value = "ones")]
        weight: WeightSpec,
    },
    /// Dilation polynomial T_r(t).
    DilationPoly(Dims),
    /// Weighted polynomial; the staircase weight gives the q-binomial.
    WeightedPoly {
        #[command(flatten)]
        dims: Dims,
        #[arg(long, default_value = "staircase")]
        weight: WeightSpec,
    },
    /// Poincaré polynomial of Gr(d, d+r) from box partitions.
    Poincare(Dims),
    /// Lattice point, tableau, β-vector and Grassmannian permutation per row.
    Bijection(Dims),
    /// Truncated generating series G(t, z) and the Ehrhart series.
    Series {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        max_t: Option<usize>,
        #[arg(long)]
        max_z: usize,
    },
    /// Check every identity on the grid d ≤ d-max, r ≤ r-max.
    Verify {
        #[arg(long, default_value_t = 4)]
        d_max: usize,
        #[arg(long, default_value_t = 5)]
        r_max: u32,
        /// Corrupt the oracle of one identity (harness self-test).
        #[arg(long, hide = true, value_parser = parse_identity)]
        inject_fault: Option<Identity>,
    },
}

fn parse_identity(s: &str) -> Result<Identity, String> {
    Identity::from_name(s).ok_or_else(|| {
        let names: Vec<&str> = Identity::ALL.iter().map(|id| id.name()).collect();
        format!(
            "unknown identity {s:?}; expected one of {}",
            names.join(", ")
        )
    })
}

impl Cli {
    pub fn into_config(self) -> (RunConfig, Option<PathBuf>) {
        let dims = |cmd, dims: Dims| RunConfig::new(cmd, dims.d, dims.r);
        let mut config = match self.command {
            CliCommand::Enumerate(d) => dims(Command::Enumerate, d),
            CliCommand::Grade { dims: d, weight } => RunConfig {
                weight,
                ..dims(Command::Grade, d)
            },
            CliCommand::DilationPoly(d) => dims(Command::DilationPoly, d),
            CliCommand::WeightedPoly { dims: d, weight } => RunConfig {
                weight,
                ..dims(Command::WeightedPoly, d)
            },
            CliCommand::Poincare(d) => dims(Command::Poincare, d),
            CliCommand::Bijection(d) => dims(Command::Bijection, d),
            CliCommand::Series { d, max_t, max_z } => RunConfig {
                max_orders: (max_t.unwrap_or(max_z), max_z),
                ..RunConfig::new(Command::Series, d, 0)
            },
            CliCommand::Verify {
                d_max,
                r_max,
                inject_fault,
            } => RunConfig {
                verify_bounds: (d_max, r_max),
                fault: inject_fault,
                ..RunConfig::new(Command::Verify, 1, 0)
            },
        };
        config.output_format = self.format;
        (config, self.out)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumerateOutput {
    pub d: usize,
    pub r: u32,
    pub count: String,
    pub points: Vec<LatticePoint>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassCount {
    pub level: u64,
    pub count: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GradeOutput {
    pub d: usize,
    pub r: u32,
    pub weight: Vec<u32>,
    pub classes: Vec<ClassCount>,
    pub polynomial: Polynomial,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolynomialOutput {
    pub d: usize,
    pub r: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weight: Option<Vec<u32>>,
    pub polynomial: Polynomial,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesOutput {
    pub d: usize,
    pub max_t: usize,
    pub max_z: usize,
    /// Rows indexed by the power of `t`.
    pub dilation_series: BiSeries,
    pub ehrhart_series: Polynomial,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BijectionRow {
    pub point: LatticePoint,
    pub tableau: RowTableau,
    pub beta: BetaVector,
    pub permutation: Permutation,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BijectionOutput {
    pub d: usize,
    pub r: u32,
    pub n: usize,
    pub rows: Vec<BijectionRow>,
}

pub fn format_polynomial(p: &Polynomial, fmt: OutputFormat) -> String {
    format_polynomial_in(p, fmt, "t")
}

pub fn format_polynomial_in(p: &Polynomial, fmt: OutputFormat, var: &str) -> String {
    match fmt {
        OutputFormat::Plain => p.to_plain(var),
        OutputFormat::Json => serde_json::to_string(p).expect("polynomials always serialize"),
        OutputFormat::Csv => p
            .coeffs()
            .iter()
            .enumerate()
            .map(|(k, c)| format!("{k},{c}"))
            .collect::<Vec<_>>()
            .join("\n"),
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("output types always serialize")
}

fn join<T: ToString>(items: &[T], sep: &str) -> String {
    items
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(sep)
}

fn tuple<T: ToString>(items: &[T]) -> String {
    format!("({})", join(items, ","))
}

/// Renders the artifact for a validated config. Returns the text and whether
/// every check passed (always true outside `verify`).
pub fn render(config: &RunConfig) -> Result<(String, bool), Error> {
    config.validate()?;
    let fmt = config.output_format;
    let (d, r) = (config.d, config.r);
    let text = match config.command {
        Command::Enumerate => {
            let s = DilatedSimplex::new(d, r)?;
            let points: Vec<LatticePoint> = s.lattice_points().collect();
            match fmt {
                OutputFormat::Json => to_json(&EnumerateOutput {
                    d,
                    r,
                    count: count_lattice_points(&s).to_string(),
                    points,
                }),
                OutputFormat::Csv => points
                    .iter()
                    .map(|p| join(p.coords(), ","))
                    .collect::<Vec<_>>()
                    .join("\n"),
                OutputFormat::Plain => points
                    .iter()
                    .map(|p| tuple(p.coords()))
                    .collect::<Vec<_>>()
                    .join("\n"),
            }
        }
        Command::Grade => {
            let s = DilatedSimplex::new(d, r)?;
            let w = config.weight.resolve(d)?;
            let counts = slice_counts(&s, &w)?;
            let polynomial = Polynomial::new(counts.clone());
            match fmt {
                OutputFormat::Json => to_json(&GradeOutput {
                    d,
                    r,
                    weight: w.as_slice().to_vec(),
                    classes: counts
                        .iter()
                        .enumerate()
                        .map(|(level, c)| ClassCount {
                            level: level as u64,
                            count: c.to_string(),
                        })
                        .collect(),
                    polynomial,
                }),
                OutputFormat::Csv => {
                    let mut lines = vec!["level,count".to_string()];
                    lines.extend(counts.iter().enumerate().map(|(k, c)| format!("{k},{c}")));
                    lines.join("\n")
                }
                OutputFormat::Plain => {
                    let mut lines: Vec<String> = counts
                        .iter()
                        .enumerate()
                        .map(|(k, c)| format!("level {k}: {c}"))
                        .collect();
                    lines.push(format!("polynomial: {}", polynomial.to_plain("t")));
                    lines.join("\n")
                }
            }
        }
        Command::DilationPoly | Command::Poincare => {
            let polynomial = match config.command {
                Command::DilationPoly => dilation_polynomial(&DilatedSimplex::new(d, r)?),
                _ => poincare_polynomial(d, r)?,
            };
            match fmt {
                OutputFormat::Json => to_json(&PolynomialOutput {
                    d,
                    r,
                    weight: None,
                    polynomial,
                }),
                _ => format_polynomial(&polynomial, fmt),
            }
        }
        Command::WeightedPoly => {
            let w = config.weight.resolve(d)?;
            let polynomial = weighted_polynomial(&DilatedSimplex::new(d, r)?, &w)?;
            match fmt {
                OutputFormat::Json => to_json(&PolynomialOutput {
                    d,
                    r,
                    weight: Some(w.as_slice().to_vec()),
                    polynomial,
                }),
                _ => format_polynomial_in(&polynomial, fmt, "z"),
            }
        }
        Command::Bijection => render_bijection(d, r, fmt)?,
        Command::Series => {
            let (max_t, max_z) = config.max_orders;
            let series = dilation_generating_series(d, max_t, max_z)?;
            let ehrhart = ehrhart_generating_series(d, max_z)?;
            match fmt {
                OutputFormat::Json => to_json(&SeriesOutput {
                    d,
                    max_t,
                    max_z,
                    dilation_series: series,
                    ehrhart_series: ehrhart,
                }),
                OutputFormat::Csv => {
                    let mut lines = vec!["t_power,z_power,coefficient".to_string()];
                    for (i, row) in series.rows().iter().enumerate() {
                        lines.extend(row.iter().enumerate().map(|(j, c)| format!("{i},{j},{c}")));
                    }
                    lines.join("\n")
                }
                OutputFormat::Plain => {
                    let mut lines: Vec<String> = (0..=max_z)
                        .map(|j| format!("z^{j}: {}", series.z_coefficient(j).to_plain("t")))
                        .collect();
                    lines.push(format!("ehrhart: {}", ehrhart.to_plain("z")));
                    lines.join("\n")
                }
            }
        }
        Command::Verify => {
            let (d_max, r_max) = config.verify_bounds;
            let report = run_verification(&VerifyOptions {
                d_max,
                r_max,
                fault: config.fault,
            });
            let passed = report.all_passed();
            return Ok((render_report(&report, fmt), passed));
        }
    };
    Ok((text, true))
}

fn bijection_rows(d: usize, r: u32) -> Result<Vec<BijectionRow>, Error> {
    let s = DilatedSimplex::new(d, r)?;
    let n = d + r as usize;
    s.lattice_points()
        .map(|point| {
            let beta = beta_partition(point.coords());
            let permutation = grassmannian_permutation(&beta, n)?.permutation().clone();
            Ok(BijectionRow {
                tableau: point_to_tableau(&point),
                point,
                beta,
                permutation,
            })
        })
        .collect()
}

fn render_bijection(d: usize, r: u32, fmt: OutputFormat) -> Result<String, Error> {
    let rows = bijection_rows(d, r)?;
    let n = d + r as usize;
    Ok(match fmt {
        OutputFormat::Json => to_json(&BijectionOutput { d, r, n, rows }),
        OutputFormat::Csv => {
            let mut lines = vec!["point,tableau,beta,permutation".to_string()];
            lines.extend(rows.iter().map(|row| {
                format!(
                    "{},{},{},{}",
                    join(row.point.coords(), " "),
                    join(row.tableau.entries(), " "),
                    join(row.beta.entries(), " "),
                    join(row.permutation.one_line(), " "),
                )
            }));
            lines.join("\n")
        }
        OutputFormat::Plain => {
            let cells: Vec<[String; 4]> = rows
                .iter()
                .map(|row| {
                    let tableau = if row.tableau.is_empty() {
                        "∅".to_string()
                    } else {
                        join(row.tableau.entries(), "")
                    };
                    [
                        tuple(row.point.coords()),
                        tableau,
                        tuple(row.beta.entries()),
                        join(row.permutation.one_line(), " "),
                    ]
                })
                .collect();
            let header = ["point", "tableau", "beta", "permutation"].map(String::from);
            let mut widths = header.clone().map(|h| h.chars().count());
            for row in &cells {
                for (w, cell) in widths.iter_mut().zip(row) {
                    *w = (*w).max(cell.chars().count());
                }
            }
            std::iter::once(&header)
                .chain(&cells)
                .map(|row| {
                    let padded: Vec<String> = row
                        .iter()
                        .zip(widths)
                        .map(|(cell, w)| format!("{cell}{}", " ".repeat(w - cell.chars().count())))
                        .collect();
                    padded.join("  ").trim_end().to_string()
                })
                .collect::<Vec<_>>()
                .join("\n")
        }
    })
}

fn render_report(report: &VerifyReport, fmt: OutputFormat) -> String {
    match fmt {
        OutputFormat::Json => to_json(report),
        OutputFormat::Csv => {
            let mut lines = vec!["identity,status,cases,counterexample".to_string()];
            lines.extend(report.checks.iter().map(|c| {
                let counterexample = c
                    .counterexample
                    .as_deref()
                    .unwrap_or("")
                    .replace('"', "\"\"");
                format!(
                    "{},{},{},\"{}\"",
                    c.identity,
                    if c.passed { "PASS" } else { "FAIL" },
                    c.cases,
                    counterexample
                )
            }));
            lines.join("\n")
        }
        OutputFormat::Plain => {
            let width = report
                .checks
                .iter()
                .map(|c| c.identity.name().len())
                .max()
                .unwrap_or(0);
            let mut lines = vec![format!(
                "verify d <= {}, r <= {}",
                report.d_max, report.r_max
            )];
            for c in &report.checks {
                let status = if c.passed { "PASS" } else { "FAIL" };
                lines.push(format!(
                    "{status} {:<width$}  {:>6} cases  {}",
                    c.identity.name(),
                    c.cases,
                    c.statement
                ));
                if let Some(ce) = &c.counterexample {
                    lines.push(format!("     first counterexample: {ce}"));
                }
            }
            let passed = report.checks.iter().filter(|c| c.passed).count();
            lines.push(format!("{passed}/{} identities hold", report.checks.len()));
            lines.join("\n")
        }
    }
}

/// Writes the artifact for `config` to `out`; diagnostics go to `err`.
pub fn run(config: &RunConfig, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let (text, passed) = match render(config) {
        Ok(v) => v,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return EXIT_USAGE;
        }
    };
    if let Err(e) = writeln!(out, "{text}").and_then(|_| out.flush()) {
        let _ = writeln!(err, "error: cannot write output: {e}");
        return EXIT_VERIFY_FAILED;
    }
    if passed {
        EXIT_OK
    } else {
        let _ = writeln!(err, "verification failed");
        EXIT_VERIFY_FAILED
    }
}

/// Entry point shared by the binary: parse, validate, open the sink, run.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    let (config, out_path) = cli.into_config();
    let stderr = io::stderr();
    let mut err = stderr.lock();
    if let Err(e) = config.validate() {
        let _ = writeln!(err, "error: {e}");
        return EXIT_USAGE;
    }
    match out_path {
        Some(path) => match File::create(&path) {
            Ok(file) => run(&config, &mut BufWriter::new(file), &mut err),
            Err(e) => {
                let _ = writeln!(err, "error: cannot create {}: {e}", path.display());
                EXIT_USAGE
            }
        },
        None => run(&config, &mut io::stdout().lock(), &mut err),
    }
}
