//! Command-line front end. `main.rs` only parses arguments and calls [`run`].
//!
//! Exit codes: 0 on success or a passing report, 1 on a failing report, 2 on
//! usage or input errors.

pub mod report;
pub mod suites;

use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::algebra::{FMv, RMv};
use crate::error::{Error, Result};
use crate::integration::{
    ball_rule, cauchy_integral, greens_formula, mean_value, singular_cauchy, sphere_rule, BoundaryDensity,
    DEFAULT_RESOLUTION,
};
use crate::kernels::{iterated_kernel, kernel_constants};
use crate::moebius::{kernel_covariance_residual, ConformalWeight, VahlenMatrix};
use crate::sampling::ball_point;
use crate::series::{almansi_split, kmonogenic_split, taylor_coefficients};
use crate::symcalc::{CliffordPolynomial, VariableKind};
use report::{Check, Params, Report};
use suites::{run_suite, SuiteParams, DEFAULT_TOLERANCES};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Parser)]
#[command(name = "cliffan", version, about = "Clifford analysis: kernels, series, integral formulas and Möbius covariance")]
pub struct Cli {
    /// Dimension of the underlying space R^n.
    #[arg(long, global = true, default_value_t = 3)]
    pub n: usize,
    /// Seed for random test points.
    #[arg(long, global = true, default_value_t = 7)]
    pub seed: u64,
    /// Overrides every default tolerance.
    #[arg(long, global = true)]
    pub tol: Option<f64>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Gauss–Legendre nodes per polar angle for sphere rules.
    #[arg(long, global = true, default_value_t = DEFAULT_RESOLUTION)]
    pub resolution: usize,
    /// Records wall-clock time in reports.
    #[arg(long, global = true)]
    pub timing: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Runs a verification suite (`all` runs every suite).
    Verify {
        suite: String,
        /// Polynomial degree of the test data.
        #[arg(long, visible_alias = "maxdeg", default_value_t = 2)]
        degree: u32,
        /// Fewer sample points and a coarser rule.
        #[arg(long)]
        quick: bool,
    },
    /// Kernel evaluation and constants.
    Kernels {
        #[command(subcommand)]
        cmd: KernelsCmd,
    },
    /// Taylor expansions and decompositions of polynomials.
    Series {
        #[command(subcommand)]
        cmd: SeriesCmd,
    },
    /// Möbius transformations given by generator lists.
    Moebius {
        #[command(subcommand)]
        cmd: MoebiusCmd,
    },
    /// Evaluates an integral formula for polynomial data on a sphere.
    Integrate {
        #[arg(long, value_enum)]
        formula: Formula,
        /// Polynomial as text, e.g. `(1*e2) * x1 + (-1*1) * x2^2`, or `@file`
        /// holding text or JSON.
        #[arg(long)]
        poly: String,
        /// Comma-separated coordinates.
        #[arg(long)]
        point: String,
        /// Radius of the sphere (centred at the origin) or ball (centred at the point).
        #[arg(long, default_value_t = 1.0)]
        radius: f64,
    },
}

#[derive(Debug, Subcommand)]
pub enum KernelsCmd {
    /// Evaluates `G_k` at a point.
    Eval {
        #[arg(long, default_value_t = 1)]
        k: usize,
        #[arg(long)]
        point: String,
    },
    /// Exact constants `C(n,k)` and, in the logarithmic case, `A(n,k)`.
    Constants {
        #[arg(long)]
        k: usize,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum DecomposeKind {
    Almansi,
    Kmonogenic,
}

#[derive(Debug, Subcommand)]
pub enum SeriesCmd {
    /// Left Taylor coefficients of a monogenic polynomial from its values on a sphere.
    Taylor {
        #[arg(long)]
        poly: String,
        #[arg(long, default_value_t = 2)]
        order: u32,
        /// Centre of the unit sphere carrying the data.
        #[arg(long)]
        center: Option<String>,
    },
    /// `h = x f₁ + f₂` (almansi) or `p = Σ x^j f_j` (kmonogenic).
    Decompose {
        #[arg(long, value_enum)]
        kind: DecomposeKind,
        #[arg(long)]
        poly: String,
        /// Order `k` for the k-monogenic split; defaults to the degree plus one.
        #[arg(long)]
        k: Option<u32>,
        /// Writes each part as JSON to `<out>_f<j>.json`.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Subcommand)]
pub enum MoebiusCmd {
    /// `(ax + b)(cx + d)^{-1}`.
    Apply {
        #[arg(long)]
        gens: String,
        #[arg(long)]
        point: String,
    },
    /// `J(M, x)` or `J_k(M, x)`.
    Weight {
        #[arg(long)]
        gens: String,
        #[arg(long)]
        point: String,
        #[arg(long)]
        k: Option<u32>,
    },
    /// Kernel covariance residual at seeded random pairs of points.
    Covariance {
        #[arg(long)]
        gens: String,
        #[arg(long, default_value_t = 20)]
        samples: usize,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Formula {
    Cauchy,
    Green,
    Mean,
    Plemelj,
}

/// Name/value pairs printed by the evaluation commands.
#[derive(Debug, Serialize)]
struct Table {
    command: String,
    rows: Vec<Row>,
}

#[derive(Debug, Serialize)]
struct Row {
    name: String,
    value: String,
}

impl Table {
    fn new(command: &str) -> Self {
        Table {
            command: command.into(),
            rows: Vec::new(),
        }
    }

    fn row(&mut self, name: impl Into<String>, value: impl ToString) {
        self.rows.push(Row {
            name: name.into(),
            value: value.to_string(),
        });
    }

    fn render(&self, format: Format) -> String {
        match format {
            Format::Json => serde_json::to_string_pretty(self).expect("tables serialize") + "\n",
            Format::Csv => {
                let mut s = String::from("name,value\n");
                for r in &self.rows {
                    s.push_str(&format!("{},\"{}\"\n", r.name, r.value.replace('"', "\"\"")));
                }
                s
            }
            Format::Text => {
                let w = self.rows.iter().map(|r| r.name.len()).max().unwrap_or(0);
                self.rows.iter().map(|r| format!("{:<w$}  {}\n", r.name, r.value)).collect()
            }
        }
    }
}

enum Outcome {
    Report(Report),
    Table(Table),
}

fn render_report(r: &Report, format: Format) -> String {
    match format {
        Format::Json => r.to_json() + "\n",
        Format::Csv => r.to_csv(),
        Format::Text => r.to_text(),
    }
}

/// Runs a parsed command, writing its output to `out` and errors to `err`.
/// Returns the exit code.
pub fn run(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    match execute(cli) {
        Ok(Outcome::Report(r)) => {
            let _ = out.write_all(render_report(&r, cli.format).as_bytes());
            if cli.format == Format::Text {
                let _ = writeln!(out, "seed {}", cli.seed);
            }
            if r.pass {
                0
            } else {
                1
            }
        }
        Ok(Outcome::Table(t)) => {
            let _ = out.write_all(t.render(cli.format).as_bytes());
            0
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

fn parse_point(n: usize, s: &str) -> Result<Vec<f64>> {
    let v: Vec<f64> = s
        .split(',')
        .map(|t| t.trim().parse::<f64>().map_err(|_| Error::InvalidParameter(format!("bad coordinate `{t}`"))))
        .collect::<Result<_>>()?;
    if v.len() != n {
        return Err(Error::InvalidParameter(format!("expected {n} coordinates, got {}", v.len())));
    }
    if v.iter().any(|a| !a.is_finite()) {
        return Err(Error::InvalidParameter("coordinates must be finite".into()));
    }
    Ok(v)
}

/// Text or `@file`; files starting with `{` are read as JSON.
fn read_poly(n: usize, s: &str) -> Result<CliffordPolynomial> {
    let text = match s.strip_prefix('@') {
        Some(path) => fs::read_to_string(path).map_err(|e| Error::InvalidParameter(format!("{path}: {e}")))?,
        None => s.to_string(),
    };
    let p = if text.trim_start().starts_with('{') {
        CliffordPolynomial::from_json_str(&text)?
    } else {
        CliffordPolynomial::parse(n, VariableKind::Vector, 0, text.trim())?
    };
    if p.kind() != VariableKind::Vector || p.nparams() != 0 {
        return Err(Error::Unsupported("polynomials in x1…xn without parameters".into()));
    }
    Ok(p)
}

fn mv_text(m: &FMv) -> String {
    m.chop(1e-13).to_text()
}

fn execute(cli: &Cli) -> Result<Outcome> {
    let n = cli.n;
    crate::algebra::multivector::check_dim(n)?;
    match &cli.command {
        Command::Verify { suite, degree, quick } => {
            let params = SuiteParams {
                n,
                degree: *degree,
                resolution: cli.resolution,
                seed: cli.seed,
                tol: cli.tol,
                quick: *quick,
                timing: cli.timing,
            };
            Ok(Outcome::Report(run_suite(suite, &params)?))
        }
        Command::Kernels { cmd } => kernels(n, cmd).map(Outcome::Table),
        Command::Series { cmd } => series(cli, cmd).map(Outcome::Table),
        Command::Moebius { cmd } => moebius(cli, cmd),
        Command::Integrate { formula, poly, point, radius } => {
            integrate(cli, *formula, poly, point, *radius).map(Outcome::Table)
        }
    }
}

fn kernels(n: usize, cmd: &KernelsCmd) -> Result<Table> {
    match cmd {
        KernelsCmd::Eval { k, point } => {
            let x = parse_point(n, point)?;
            let g = iterated_kernel(n, *k)?;
            let mut t = Table::new("kernels eval");
            t.row("kernel", format!("G_{k} in R^{n}"));
            t.row("symbolic", &g.symbolic);
            t.row("value", mv_text(&g.symbolic.evaluate_f64(&x)?));
            Ok(t)
        }
        KernelsCmd::Constants { k } => {
            let (c, a) = kernel_constants(n, *k)?;
            let mut t = Table::new("kernels constants");
            t.row(format!("C({n},{k})"), &c);
            if let Some(a) = a {
                t.row(format!("A({n},{k})"), &a);
            }
            Ok(t)
        }
    }
}

fn series(cli: &Cli, cmd: &SeriesCmd) -> Result<Table> {
    match cmd {
        SeriesCmd::Taylor { poly, order, center } => {
            let p = read_poly(cli.n, poly)?;
            let n = p.dim();
            let c = match center {
                Some(s) => parse_point(n, s)?,
                None => vec![0.0; n],
            };
            let rule = sphere_rule(n, &c, 1.0, cli.resolution)?;
            let t = taylor_coefficients(&BoundaryDensity::from_polynomial(&p), *order, &rule)?;
            let mut out = Table::new("series taylor");
            for (idx, a) in &t.coefficients {
                let name: Vec<String> = idx.0.iter().map(|j| j.to_string()).collect();
                out.row(format!("a[{}]", name.join(",")), mv_text(a));
            }
            Ok(out)
        }
        SeriesCmd::Decompose { kind, poly, k, out } => {
            let p = read_poly(cli.n, poly)?;
            let parts = match kind {
                DecomposeKind::Almansi => {
                    let (f1, f2) = almansi_split(&p)?;
                    vec![("f1", f1), ("f2", f2)]
                }
                DecomposeKind::Kmonogenic => {
                    let k = k.unwrap_or_else(|| p.degree().map_or(1, |d| d + 1));
                    let names = ["f0", "f1", "f2", "f3", "f4", "f5", "f6", "f7", "f8", "f9"];
                    let parts = kmonogenic_split(&p, k)?;
                    if parts.len() > names.len() {
                        return Err(Error::InvalidParameter("k ≤ 10 supported".into()));
                    }
                    names.iter().copied().zip(parts).collect()
                }
            };
            let mut t = Table::new("series decompose");
            for (name, part) in parts {
                match out {
                    Some(prefix) => {
                        let path = PathBuf::from(format!("{}_{name}.json", prefix.display()));
                        fs::write(&path, part.to_json_string() + "\n")
                            .map_err(|e| Error::InvalidParameter(format!("{}: {e}", path.display())))?;
                        t.row(name, path.display());
                    }
                    None => t.row(name, part.to_text()),
                }
            }
            Ok(t)
        }
    }
}

fn moebius(cli: &Cli, cmd: &MoebiusCmd) -> Result<Outcome> {
    let n = cli.n;
    match cmd {
        MoebiusCmd::Apply { gens, point } => {
            let m = VahlenMatrix::parse(n, gens)?;
            let y = m.apply(&parse_point(n, point)?)?;
            let mut t = Table::new("moebius apply");
            t.row("generators", m.to_dsl());
            t.row("image", mv_text(&FMv::vector(n, &y)));
            Ok(Outcome::Table(t))
        }
        MoebiusCmd::Weight { gens, point, k } => {
            let m = VahlenMatrix::parse(n, gens)?;
            let kind = k.map_or(ConformalWeight::J, ConformalWeight::Jk);
            let w = m.weight(&parse_point(n, point)?, kind)?;
            let mut t = Table::new("moebius weight");
            t.row("generators", m.to_dsl());
            t.row(if k.is_some() { "J_k" } else { "J" }, mv_text(&w));
            Ok(Outcome::Table(t))
        }
        MoebiusCmd::Covariance { gens, samples } => {
            let m = VahlenMatrix::parse(n, gens)?;
            let mut rng = ChaCha8Rng::seed_from_u64(cli.seed);
            let mut worst: f64 = 0.0;
            let mut done = 0;
            let mut tries = 0;
            while done < *samples {
                tries += 1;
                if tries > 100 * samples.max(&1) {
                    return Err(Error::Pole("could not find sample points away from the poles".into()));
                }
                let (x, y) = (ball_point(&mut rng, n, 2.0), ball_point(&mut rng, n, 2.0));
                match kernel_covariance_residual(&m, &x, &y) {
                    Ok(v) => {
                        worst = worst.max(v);
                        done += 1;
                    }
                    Err(Error::Pole(_)) => {}
                    Err(e) => return Err(e),
                }
            }
            let mut r = Report::new(
                "moebius-covariance",
                Params {
                    n,
                    seed: cli.seed,
                    ..Default::default()
                },
            );
            r.push(Check::new(
                format!("kernel covariance of {} ({done} pairs)", m.to_dsl()),
                worst,
                cli.tol.unwrap_or(DEFAULT_TOLERANCES.covariance),
            ));
            Ok(Outcome::Report(r))
        }
    }
}

fn integrate(cli: &Cli, formula: Formula, poly: &str, point: &str, radius: f64) -> Result<Table> {
    let p = read_poly(cli.n, poly)?;
    let n = p.dim();
    let y = parse_point(n, point)?;
    let dens = BoundaryDensity::from_polynomial(&p);
    let origin = vec![0.0; n];
    let value = match formula {
        Formula::Cauchy => cauchy_integral(&dens, &y, &sphere_rule(n, &origin, radius, cli.resolution)?)?,
        Formula::Green => {
            if !p.laplacian().is_zero() {
                return Err(Error::Precondition("Green's formula needs harmonic data".into()));
            }
            let dh = BoundaryDensity::from_polynomial(&p.dirac_left()?);
            greens_formula(&dens, &dh, &y, &sphere_rule(n, &origin, radius, cli.resolution)?)?
        }
        Formula::Mean => mean_value(&dens, &y, radius, &ball_rule(n, &y, radius, cli.resolution.min(24))?)?,
        Formula::Plemelj => singular_cauchy(&dens, &y, &sphere_rule(n, &origin, radius, cli.resolution)?)?,
    };
    let direct = p.evaluate_f64(&y);
    let mut t = Table::new("integrate");
    t.row("formula", format!("{formula:?}").to_lowercase());
    t.row("value", mv_text(&value));
    t.row("direct evaluation", mv_text(&direct));
    t.row("difference", format!("{:e}", value.dist(&direct)));
    Ok(t)
}

/// `RMv` in text, used by tests of the decomposition output.
#[doc(hidden)]
pub fn rmv_text(m: &RMv) -> String {
    m.to_text()
}
