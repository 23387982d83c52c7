//! Command-line front end: sweeps, example families, near/far diagnostics,
//! fits of stored samples and canned reproduction recipes.

use crate::diagnostics::{CutoffSpec, DiagnosticError, DiagnosticReport, NearKind};
use crate::examples::{
    self, annulus_slp_example, dlo_curved_example, dlo_flat_example, flat_de_example, neumann_index_near_double, slo_sharpness_via_de,
    glancing_product, ExampleError, ExampleResult, FlatDensity, SharpGeometry,
};
use crate::geometry::{Budget, GeometryError, GeometrySpec};
use crate::operators::{OperatorError, OperatorKind};
use crate::scaling::{self, fit_power_law, geometric_grid, ScalingError, SweepResult, SweepSpec};
use clap::{Args, Parser, Subcommand};
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;
use std::fmt;
use std::io::Write;
use std::path::{Path, PathBuf};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("config error: {0}")]
    Config(String),
    #[error("refused: {0}")]
    Budget(String),
    #[error("verdict failed: {0}")]
    Verdict(String),
    #[error("{0}")]
    Compute(String),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Config(_) => 2,
            CliError::Budget(_) => 3,
            CliError::Verdict(_) | CliError::Compute(_) | CliError::Io(_) => 1,
        }
    }
}

fn geometry_budget(e: &GeometryError) -> bool {
    matches!(e, GeometryError::Budget { .. })
}

fn operator_budget(e: &OperatorError) -> bool {
    matches!(e, OperatorError::Geometry(g) if geometry_budget(g))
}

impl From<ScalingError> for CliError {
    fn from(e: ScalingError) -> Self {
        if e.is_budget() {
            CliError::Budget(e.to_string())
        } else if matches!(e, ScalingError::Config(_)) {
            CliError::Config(e.to_string())
        } else {
            CliError::Compute(e.to_string())
        }
    }
}

impl From<ExampleError> for CliError {
    fn from(e: ExampleError) -> Self {
        let budget = match &e {
            ExampleError::Geometry(g) => geometry_budget(g),
            ExampleError::Operator(o) => operator_budget(o),
            _ => false,
        };
        match e {
            _ if budget => CliError::Budget(e.to_string()),
            ExampleError::Invalid(_) => CliError::Config(e.to_string()),
            _ => CliError::Compute(e.to_string()),
        }
    }
}

impl From<DiagnosticError> for CliError {
    fn from(e: DiagnosticError) -> Self {
        let budget = match &e {
            DiagnosticError::GridBudget { .. } => true,
            DiagnosticError::Geometry(g) => geometry_budget(g),
            DiagnosticError::Operator(o) => operator_budget(o),
            _ => false,
        };
        match e {
            _ if budget => CliError::Budget(e.to_string()),
            DiagnosticError::Invalid(_) => CliError::Config(e.to_string()),
            _ => CliError::Compute(e.to_string()),
        }
    }
}

impl From<csv::Error> for CliError {
    fn from(e: csv::Error) -> Self {
        CliError::Compute(e.to_string())
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Compute(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, CliError>;

// ---------------------------------------------------------------------------
// config file

/// Settings read from `--config FILE` (TOML). Command-line flags win over
/// file values.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    pub command: Option<String>,
    pub geometry: Option<GeometrySpec>,
    pub kind: Option<OperatorKind>,
    pub lambdas: Option<Vec<f64>>,
    pub lmin: Option<f64>,
    pub lmax: Option<f64>,
    pub points: Option<usize>,
    pub p: Option<f64>,
    #[serde(rename = "M")]
    pub m: Option<f64>,
    pub output: Option<OutputPaths>,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OutputPaths {
    pub csv: Option<PathBuf>,
    pub json: Option<PathBuf>,
}

impl RunConfig {
    pub fn parse(text: &str) -> Result<Self> {
        let cfg: RunConfig = toml::from_str(text).map_err(|e| CliError::Config(e.to_string()))?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::Config(format!("{}: {e}", path.display())))?;
        Self::parse(&text)
    }

    fn validate(&self) -> Result<()> {
        if let Some(c) = &self.command {
            if !["sweep", "example", "diagnose", "fit", "reproduce"].contains(&c.as_str()) {
                return Err(CliError::Config(format!("unknown command '{c}'")));
            }
        }
        if self.lambdas.is_some() && (self.lmin.is_some() || self.lmax.is_some() || self.points.is_some()) {
            return Err(CliError::Config("give either lambdas or lmin/lmax/points, not both".into()));
        }
        if let Some(l) = &self.lambdas {
            if !l.iter().all(|v| v.is_finite() && *v > 0.0) {
                return Err(CliError::Config("lambdas must be positive".into()));
            }
        }
        if let Some(p) = self.p {
            if !(p >= 4.0) || !p.is_finite() {
                return Err(CliError::Config(format!("p must be at least 4, got {p}")));
            }
        }
        if let Some(m) = self.m {
            if !(m >= 1.0) || !m.is_finite() {
                return Err(CliError::Config(format!("M must be at least 1, got {m}")));
            }
        }
        Ok(())
    }

    fn check_command(&self, name: &str) -> Result<()> {
        match &self.command {
            Some(c) if c != name => Err(CliError::Config(format!("config is for '{c}', not '{name}'"))),
            _ => Ok(()),
        }
    }
}

/// Geometry by name with default parameters.
pub fn geometry_by_name(name: &str) -> Result<GeometrySpec> {
    Ok(match name {
        "circle" | "disc" => GeometrySpec::Circle { radius: 1.0 },
        "segment" => GeometrySpec::Segment { p: [-1.0, 0.0], q: [1.0, 0.0] },
        "square-boundary" | "square" | "box" => GeometrySpec::SquareBoundary,
        "segment-pair" => GeometrySpec::SegmentPair,
        "appendix-gamma" => GeometrySpec::AppendixGamma { eps: 0.3 },
        "appendix-sigma" => GeometrySpec::AppendixSigma { eps: 0.3 },
        "annulus-boundary" | "annulus" => GeometrySpec::AnnulusBoundary { inner: 1.0, outer: 2.0 },
        other => return Err(CliError::Config(format!("unknown geometry '{other}'"))),
    })
}

// ---------------------------------------------------------------------------
// arguments

#[derive(Debug, Parser)]
#[command(name = "layerlab", version, about = "Helmholtz layer potential norm laboratory")]
pub struct Cli {
    /// TOML run configuration.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Operator norm sweep over a geometric wavenumber grid.
    Sweep(SweepArgs),
    /// Evaluate a sharp-example family.
    Example(ExampleArgs),
    /// Near/far split norms and the quasimode residual.
    Diagnose(DiagnoseArgs),
    /// Power-law fit of a samples CSV.
    Fit(FitArgs),
    /// Run a canned recipe and print its verdict rows.
    Reproduce(ReproduceArgs),
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    #[arg(long)]
    pub kind: Option<OperatorKind>,
    #[arg(long)]
    pub geometry: Option<String>,
    #[arg(long)]
    pub lmin: Option<f64>,
    #[arg(long)]
    pub lmax: Option<f64>,
    #[arg(long)]
    pub points: Option<usize>,
    #[arg(long)]
    pub p: Option<f64>,
    /// CSV destination; stdout when absent.
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Family {
    AnnulusSlp,
    DiscNeumann,
    Glancing,
    FlatDe,
    FlatDePlain,
    DloFlat,
    DloCurved,
    SloSharpSegment,
    SloSharpCircle,
}

impl Family {
    fn indexed_by_k(self) -> bool {
        matches!(self, Family::AnnulusSlp | Family::DiscNeumann | Family::Glancing)
    }
}

#[derive(Debug, Args)]
pub struct ExampleArgs {
    #[arg(long, value_enum)]
    pub family: Family,
    /// Wavenumbers, comma separated.
    #[arg(long, value_delimiter = ',')]
    pub lambda: Vec<f64>,
    /// Angular orders, comma separated (disc and annulus families).
    #[arg(long, value_delimiter = ',')]
    pub k: Vec<u32>,
    #[arg(long = "M")]
    pub m: Option<f64>,
    #[arg(long)]
    pub p: Option<f64>,
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum DiagnoseKind {
    SlpNear,
    DlpNear,
}

#[derive(Debug, Args)]
pub struct DiagnoseArgs {
    #[arg(long, value_enum, default_value = "slp-near")]
    pub kind: DiagnoseKind,
    #[arg(long)]
    pub lambda: Option<f64>,
    #[arg(long = "M")]
    pub m: Option<f64>,
    #[arg(long)]
    pub p: Option<f64>,
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct FitArgs {
    #[arg(long)]
    pub input: PathBuf,
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ReproduceArgs {
    pub id: RecipeId,
    /// Directory for the samples CSV and verdict JSON.
    #[arg(long)]
    pub output_dir: Option<PathBuf>,
}

// ---------------------------------------------------------------------------
// verdicts

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Check {
    /// `|fitted − expected| ≤ tolerance`.
    Within,
    /// `fitted ≤ expected + tolerance`.
    AtMost,
    /// `fitted ≥ expected`.
    AtLeast,
    /// Reported only.
    Record,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Verdict {
    pub recipe: String,
    pub quantity: String,
    pub expected: f64,
    pub fitted: f64,
    pub tolerance: f64,
    pub check: Check,
    pub pass: bool,
}

impl Verdict {
    fn new(recipe: RecipeId, quantity: &str, expected: f64, fitted: f64, tolerance: f64, check: Check) -> Self {
        let pass = fitted.is_finite()
            && match check {
                Check::Within => (fitted - expected).abs() <= tolerance,
                Check::AtMost => fitted <= expected + tolerance,
                Check::AtLeast => fitted >= expected,
                Check::Record => true,
            };
        Self { recipe: recipe.to_string(), quantity: quantity.into(), expected, fitted, tolerance, check, pass }
    }

    pub const HEADER: &'static str = "recipe,quantity,expected,fitted,tolerance,check,pass";
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let check = match self.check {
            Check::Within => "within",
            Check::AtMost => "at-most",
            Check::AtLeast => "at-least",
            Check::Record => "record",
        };
        write!(
            f,
            "{},{},{:.6},{:.6},{},{},{}",
            self.recipe,
            self.quantity,
            self.expected,
            self.fitted,
            self.tolerance,
            check,
            if self.pass { "pass" } else { "fail" }
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, clap::ValueEnum, Serialize, Deserialize)]
pub enum RecipeId {
    #[value(name = "thm-SLP-flat")]
    #[serde(rename = "thm-SLP-flat")]
    SlpFlat,
    #[value(name = "thm-SLP-curved")]
    #[serde(rename = "thm-SLP-curved")]
    SlpCurved,
    #[value(name = "thm-DLP")]
    #[serde(rename = "thm-DLP")]
    Dlp,
    #[value(name = "prop-dE")]
    #[serde(rename = "prop-dE")]
    SpectralMeasure,
    #[value(name = "thm-A1-SLO-flat")]
    #[serde(rename = "thm-A1-SLO-flat")]
    SloFlat,
    #[value(name = "thm-A1-SLO-curved")]
    #[serde(rename = "thm-A1-SLO-curved")]
    SloCurved,
    #[value(name = "thm-A1-DLO-flat")]
    #[serde(rename = "thm-A1-DLO-flat")]
    DloFlat,
    #[value(name = "thm-A1-DLO-curved")]
    #[serde(rename = "thm-A1-DLO-curved")]
    DloCurved,
    #[value(name = "tataru-saturation")]
    #[serde(rename = "tataru-saturation")]
    Saturation,
    #[value(name = "conjecture-convex-probe")]
    #[serde(rename = "conjecture-convex-probe")]
    ConvexProbe,
}

impl RecipeId {
    pub const ALL: [RecipeId; 10] = [
        RecipeId::SlpFlat,
        RecipeId::SlpCurved,
        RecipeId::Dlp,
        RecipeId::SpectralMeasure,
        RecipeId::SloFlat,
        RecipeId::SloCurved,
        RecipeId::DloFlat,
        RecipeId::DloCurved,
        RecipeId::Saturation,
        RecipeId::ConvexProbe,
    ];

    pub fn name(self) -> &'static str {
        match self {
            RecipeId::SlpFlat => "thm-SLP-flat",
            RecipeId::SlpCurved => "thm-SLP-curved",
            RecipeId::Dlp => "thm-DLP",
            RecipeId::SpectralMeasure => "prop-dE",
            RecipeId::SloFlat => "thm-A1-SLO-flat",
            RecipeId::SloCurved => "thm-A1-SLO-curved",
            RecipeId::DloFlat => "thm-A1-DLO-flat",
            RecipeId::DloCurved => "thm-A1-DLO-curved",
            RecipeId::Saturation => "tataru-saturation",
            RecipeId::ConvexProbe => "conjecture-convex-probe",
        }
    }

    /// The norm sweep whose fitted exponent is the first verdict row, if the
    /// recipe has one. `layerlab sweep` with the same settings followed by
    /// `layerlab fit` reproduces that exponent exactly.
    pub fn sweep_spec(self) -> Option<SweepSpec> {
        let disc = [25.0, 50.0, 100.0, 200.0];
        let seg = [50.0, 100.0, 200.0, 400.0];
        let circle = GeometrySpec::Circle { radius: 1.0 };
        let (kind, geometry, lambdas, p) = match self {
            RecipeId::SlpFlat => (OperatorKind::Slp, GeometrySpec::SquareBoundary, disc, 8.0),
            RecipeId::SlpCurved | RecipeId::ConvexProbe => (OperatorKind::Slp, circle, disc, 8.0),
            RecipeId::Dlp => (OperatorKind::Dlp, circle, disc, 8.0),
            RecipeId::SpectralMeasure => return None,
            RecipeId::SloFlat => (OperatorKind::Slo, GeometrySpec::Segment { p: [-1.0, 0.0], q: [1.0, 0.0] }, seg, 10.0),
            RecipeId::SloCurved => (OperatorKind::Slo, circle, seg, 8.0),
            RecipeId::DloFlat => (OperatorKind::Dlo, GeometrySpec::SegmentPair, seg, 10.0),
            RecipeId::DloCurved | RecipeId::Saturation => return None,
        };
        Some(SweepSpec { kind, geometry, lambdas: lambdas.to_vec(), p })
    }
}

impl fmt::Display for RecipeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Default)]
pub struct RecipeOutcome {
    pub verdicts: Vec<Verdict>,
    pub sweeps: Vec<SweepResult>,
    pub examples: Vec<ExampleResult>,
}

impl RecipeOutcome {
    pub fn pass(&self) -> bool {
        self.verdicts.iter().all(|v| v.pass)
    }
}

const EXAMPLE_TOL: f64 = 0.08;
const SWEEP_TOL: f64 = 0.1;
const DLP_TOL: f64 = 0.05;
/// `√(π(1 − 1/1.9²))/√(2π)`: the Neumann ratio is at least this whenever
/// `λ/k ≥ 1.9`.
pub fn neumann_floor() -> f64 {
    ((1.0 - 1.0 / 3.61f64) / 2.0).sqrt()
}
/// Band for `ratio·λ^{1/3}` on the glancing Neumann modes.
pub const GLANCING_BAND: (f64, f64) = (0.8, 1.0);

fn run_sweep(id: RecipeId, budget: &Budget) -> Result<(SweepResult, f64)> {
    let spec = id.sweep_spec().expect("recipe has a sweep");
    let res = scaling::sweep(&spec, budget)?;
    if !res.all_ok() {
        let bad: Vec<String> = res.samples.iter().filter(|s| !s.is_ok()).map(|s| format!("λ={}: {}", s.lambda, s.status)).collect();
        let msg = bad.join("; ");
        return Err(if res.budget_refused { CliError::Budget(msg) } else { CliError::Compute(msg) });
    }
    let fit = fit_power_law(&res.points())?;
    Ok((res, fit.exponent))
}

fn example_exponent(rows: &[ExampleResult]) -> Result<f64> {
    let pts: Vec<(f64, f64)> = rows.iter().map(|r| (r.lambda, r.ratio)).collect();
    Ok(fit_power_law(&pts)?.exponent)
}

fn sweep_row(id: RecipeId, out: &mut RecipeOutcome, budget: &Budget, quantity: &str, expected: f64, tol: f64, check: Check) -> Result<()> {
    let (res, e) = run_sweep(id, budget)?;
    out.sweeps.push(res);
    out.verdicts.push(Verdict::new(id, quantity, expected, e, tol, check));
    Ok(())
}

fn example_row(id: RecipeId, out: &mut RecipeOutcome, rows: Vec<ExampleResult>, quantity: &str, expected: f64, tol: f64) -> Result<()> {
    let e = example_exponent(&rows)?;
    out.examples.extend(rows);
    out.verdicts.push(Verdict::new(id, quantity, expected, e, tol, Check::Within));
    Ok(())
}

const SHARP_LAMBDAS: [f64; 4] = [100.0, 200.0, 400.0, 800.0];

/// Runs one recipe. Verdict failures are reported in the outcome, not as
/// errors.
pub fn run_recipe(id: RecipeId, budget: &Budget) -> Result<RecipeOutcome> {
    let mut out = RecipeOutcome::default();
    match id {
        RecipeId::SlpFlat => {
            sweep_row(id, &mut out, budget, "slp-square-exponent", -0.75, SWEEP_TOL, Check::AtMost)?;
        }
        RecipeId::SlpCurved => {
            sweep_row(id, &mut out, budget, "slp-disc-exponent", -5.0 / 6.0, SWEEP_TOL, Check::AtMost)?;
            let rows = annulus_rows()?;
            example_row(id, &mut out, rows, "annulus-exponent", -5.0 / 6.0, EXAMPLE_TOL)?;
        }
        RecipeId::Dlp => {
            sweep_row(id, &mut out, budget, "dlp-disc-exponent", 0.0, DLP_TOL, Check::Within)?;
            let mut worst = f64::INFINITY;
            for k in [20, 50, 100] {
                let (l, _) = neumann_index_near_double(k)?;
                let r = examples::disc_neumann_dlp_example(k, l)?;
                worst = worst.min(r.ratio);
                out.examples.push(r);
            }
            out.verdicts.push(Verdict::new(id, "neumann-min-ratio", neumann_floor(), worst, 0.0, Check::AtLeast));
        }
        RecipeId::SpectralMeasure => {
            let rows = SEG_FLAT.iter().map(|&l| flat_de_example(l, FlatDensity::Modulated, 10.0, budget)).collect::<std::result::Result<Vec<_>, _>>()?;
            example_row(id, &mut out, rows, "flat-de-exponent", -0.75, EXAMPLE_TOL)?;
            let spec = SweepSpec { kind: OperatorKind::DE, geometry: GeometrySpec::Circle { radius: 1.0 }, lambdas: vec![25.0, 50.0, 100.0, 200.0], p: 8.0 };
            let res = scaling::sweep(&spec, budget)?;
            if res.budget_refused {
                return Err(CliError::Budget("disc spectral measure sweep".into()));
            }
            let e = fit_power_law(&res.points())?.exponent;
            out.sweeps.push(res);
            out.verdicts.push(Verdict::new(id, "de-disc-exponent", -5.0 / 6.0, e, SWEEP_TOL, Check::AtMost));
        }
        RecipeId::SloFlat => {
            sweep_row(id, &mut out, budget, "slo-segment-exponent", -0.5, SWEEP_TOL, Check::Within)?;
            let rows = SEG_FLAT.iter().map(|&l| slo_sharpness_via_de(SharpGeometry::Segment, l, 10.0, budget)).collect::<std::result::Result<Vec<_>, _>>()?;
            example_row(id, &mut out, rows, "trace-de-segment-exponent", -0.5, SWEEP_TOL)?;
        }
        RecipeId::SloCurved => {
            sweep_row(id, &mut out, budget, "slo-circle-exponent", -2.0 / 3.0, SWEEP_TOL, Check::Within)?;
            let rows = SHARP_LAMBDAS.iter().map(|&l| slo_sharpness_via_de(SharpGeometry::Circle, l, 10.0, budget)).collect::<std::result::Result<Vec<_>, _>>()?;
            example_row(id, &mut out, rows, "trace-de-circle-exponent", -2.0 / 3.0, SWEEP_TOL)?;
        }
        RecipeId::DloFlat => {
            sweep_row(id, &mut out, budget, "dlo-segment-pair-exponent", 0.25, SWEEP_TOL, Check::AtMost)?;
            let rows = SHARP_LAMBDAS.iter().map(|&l| dlo_flat_example(l, 1.0, 10.0, budget)).collect::<std::result::Result<Vec<_>, _>>()?;
            example_row(id, &mut out, rows, "dlo-flat-bump-exponent", 0.25, EXAMPLE_TOL)?;
        }
        RecipeId::DloCurved => {
            let rows = SHARP_LAMBDAS.iter().map(|&l| dlo_curved_example(l, 1.0, 10.0, budget)).collect::<std::result::Result<Vec<_>, _>>()?;
            example_row(id, &mut out, rows, "dlo-curved-bump-exponent", 1.0 / 6.0, EXAMPLE_TOL)?;
        }
        RecipeId::Saturation => {
            let mut rows = Vec::new();
            let (mut lo, mut hi) = (f64::INFINITY, f64::NEG_INFINITY);
            for k in GLANCING_KS {
                let (r, v) = glancing_product(k)?;
                lo = lo.min(v);
                hi = hi.max(v);
                rows.push(r);
            }
            example_row(id, &mut out, rows, "boundary-ratio-exponent", -1.0 / 3.0, 0.05)?;
            let (c1, c2) = GLANCING_BAND;
            out.verdicts.push(Verdict::new(id, "min-ratio-times-cbrt-lambda", c1, lo, 0.0, Check::AtLeast));
            out.verdicts.push(Verdict::new(id, "max-ratio-times-cbrt-lambda", c2, hi, 0.0, Check::AtMost));
        }
        RecipeId::ConvexProbe => {
            let mut worst: f64 = 0.0;
            for k in [20, 50, 100] {
                let n = examples::annulus_norms(k)?;
                worst = worst.max((n.ball * n.lambda / PI.sqrt() - 1.0).abs());
            }
            let (res, e) = run_sweep(id, budget)?;
            out.sweeps.push(res);
            out.verdicts.push(Verdict::new(id, "dirichlet-identity-error", 0.0, worst, 1e-10, Check::Within));
            out.verdicts.push(Verdict::new(id, "slp-disc-exponent", -1.0, e, f64::NAN, Check::Record));
        }
    }
    Ok(out)
}

const SEG_FLAT: [f64; 4] = [50.0, 100.0, 200.0, 400.0];
pub const GLANCING_KS: [u32; 6] = [20, 35, 50, 80, 120, 200];

/// Annulus family at the orders whose `j_{k,1}` spans `[50, 800]`.
pub fn annulus_rows() -> Result<Vec<ExampleResult>> {
    [45, 90, 180, 360, 720].iter().map(|&k| annulus_slp_example(k).map_err(CliError::from)).collect()
}

// ---------------------------------------------------------------------------
// commands

fn open_output(path: Option<&Path>) -> Result<Box<dyn Write>> {
    Ok(match path {
        Some(p) => Box::new(std::io::BufWriter::new(std::fs::File::create(p)?)),
        None => Box::new(std::io::stdout().lock()),
    })
}

fn resolve_sweep(args: &SweepArgs, cfg: &RunConfig) -> Result<SweepSpec> {
    let kind = args.kind.or(cfg.kind).ok_or_else(|| CliError::Config("missing --kind".into()))?;
    let geometry = match &args.geometry {
        Some(name) => geometry_by_name(name)?,
        None => cfg.geometry.clone().ok_or_else(|| CliError::Config("missing --geometry".into()))?,
    };
    let p = args.p.or(cfg.p).unwrap_or(10.0);
    let grid_flags = args.lmin.is_some() || args.lmax.is_some() || args.points.is_some();
    let lambdas = match (&cfg.lambdas, grid_flags) {
        (Some(l), false) => l.clone(),
        _ => {
            let lmin = args.lmin.or(cfg.lmin).ok_or_else(|| CliError::Config("missing --lmin".into()))?;
            let lmax = args.lmax.or(cfg.lmax).ok_or_else(|| CliError::Config("missing --lmax".into()))?;
            let points = args.points.or(cfg.points).unwrap_or(4);
            geometric_grid(lmin, lmax, points)?
        }
    };
    let spec = SweepSpec { kind, geometry, lambdas, p };
    spec.validate()?;
    Ok(spec)
}

fn cmd_sweep(args: &SweepArgs, cfg: &RunConfig, budget: &Budget) -> Result<()> {
    let spec = resolve_sweep(args, cfg)?;
    let res = scaling::sweep(&spec, budget)?;
    let path = args.output.clone().or_else(|| cfg.output.as_ref().and_then(|o| o.csv.clone()));
    scaling::write_samples_csv(open_output(path.as_deref())?, &res.samples)?;
    if let Ok(fit) = fit_power_law(&res.points()) {
        eprintln!("{} on {}: exponent {:.4} (stderr {:.2e}, r2 {:.6}), config {}", spec.kind, res.geometry, fit.exponent, fit.stderr, fit.r2, res.config_hash);
    }
    if let Some(j) = cfg.output.as_ref().and_then(|o| o.json.clone()) {
        std::fs::write(j, serde_json::to_string_pretty(&res)?)?;
    }
    if res.budget_refused {
        let failed: Vec<String> = res.samples.iter().filter(|s| s.status.starts_with("failed")).map(|s| s.status.clone()).collect();
        return Err(CliError::Budget(failed.join("; ")));
    }
    Ok(())
}

fn cmd_example(args: &ExampleArgs, cfg: &RunConfig, budget: &Budget) -> Result<()> {
    let p = args.p.or(cfg.p).unwrap_or(10.0);
    let m = args.m.or(cfg.m).unwrap_or(1.0);
    let lambdas: Vec<f64> = if args.lambda.is_empty() { cfg.lambdas.clone().unwrap_or_default() } else { args.lambda.clone() };
    if args.family.indexed_by_k() {
        if args.k.is_empty() {
            return Err(CliError::Config("this family needs --k".into()));
        }
    } else if lambdas.is_empty() {
        return Err(CliError::Config("this family needs --lambda".into()));
    }
    let mut rows = Vec::new();
    for &k in &args.k {
        rows.push(match args.family {
            Family::AnnulusSlp => annulus_slp_example(k)?,
            Family::DiscNeumann => {
                let (l, _) = neumann_index_near_double(k)?;
                examples::disc_neumann_dlp_example(k, l)?
            }
            Family::Glancing => glancing_product(k)?.0,
            _ => break,
        });
    }
    if !args.family.indexed_by_k() {
        for &l in &lambdas {
            rows.push(match args.family {
                Family::FlatDe => flat_de_example(l, FlatDensity::Modulated, p, budget)?,
                Family::FlatDePlain => flat_de_example(l, FlatDensity::Plain, p, budget)?,
                Family::DloFlat => dlo_flat_example(l, m, p, budget)?,
                Family::DloCurved => dlo_curved_example(l, m, p, budget)?,
                Family::SloSharpSegment => slo_sharpness_via_de(SharpGeometry::Segment, l, p, budget)?,
                Family::SloSharpCircle => slo_sharpness_via_de(SharpGeometry::Circle, l, p, budget)?,
                _ => unreachable!(),
            });
        }
    }
    let path = args.output.clone().or_else(|| cfg.output.as_ref().and_then(|o| o.csv.clone()));
    examples::write_csv(open_output(path.as_deref())?, &rows)?;
    if rows.len() >= 3 {
        if let Ok(e) = example_exponent(&rows) {
            eprintln!("ratio exponent in lambda: {e:.4}");
        }
    }
    Ok(())
}

fn cmd_diagnose(args: &DiagnoseArgs, cfg: &RunConfig, budget: &Budget) -> Result<()> {
    let lambda = args.lambda.or_else(|| cfg.lambdas.as_ref().and_then(|l| l.first().copied())).ok_or_else(|| CliError::Config("missing --lambda".into()))?;
    let cutoff = CutoffSpec { m: args.m.or(cfg.m).unwrap_or(CutoffSpec::default().m) };
    let p = args.p.or(cfg.p).unwrap_or(10.0);
    let kind = match args.kind {
        DiagnoseKind::SlpNear => NearKind::SlpNear,
        DiagnoseKind::DlpNear => NearKind::DlpNear,
    };
    let report = DiagnosticReport::on_circle_and_segment(kind, lambda, &cutoff, p, budget)?;
    let text = serde_json::to_string_pretty(&report)?;
    let path = args.output.clone().or_else(|| cfg.output.as_ref().and_then(|o| o.json.clone()));
    let mut w = open_output(path.as_deref())?;
    writeln!(w, "{text}")?;
    Ok(())
}

fn cmd_fit(args: &FitArgs) -> Result<()> {
    let file = std::fs::File::open(&args.input).map_err(|e| CliError::Config(format!("{}: {e}", args.input.display())))?;
    let pts = scaling::read_samples_csv(file)?;
    let fit = fit_power_law(&pts)?;
    let mut w = open_output(args.output.as_deref())?;
    writeln!(w, "{}", scaling::fit_report_json(&fit)?)?;
    Ok(())
}

fn cmd_reproduce(args: &ReproduceArgs, budget: &Budget) -> Result<()> {
    let out = run_recipe(args.id, budget)?;
    println!("{}", Verdict::HEADER);
    for v in &out.verdicts {
        println!("{v}");
    }
    if let Some(dir) = &args.output_dir {
        std::fs::create_dir_all(dir)?;
        let samples: Vec<_> = out.sweeps.iter().flat_map(|s| s.samples.clone()).collect();
        if !samples.is_empty() {
            scaling::write_samples_csv(std::fs::File::create(dir.join(format!("{}-samples.csv", args.id)))?, &samples)?;
        }
        if !out.examples.is_empty() {
            examples::write_csv(std::fs::File::create(dir.join(format!("{}-examples.csv", args.id)))?, &out.examples)?;
        }
        std::fs::write(dir.join(format!("{}-verdict.json", args.id)), serde_json::to_string_pretty(&out.verdicts)?)?;
    }
    if out.pass() {
        Ok(())
    } else {
        let failed: Vec<&str> = out.verdicts.iter().filter(|v| !v.pass).map(|v| v.quantity.as_str()).collect();
        Err(CliError::Verdict(failed.join(", ")))
    }
}

/// Parses `argv` and runs the command, returning the process exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match execute(&cli) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("layerlab: {e}");
            e.exit_code()
        }
    }
}

pub fn execute(cli: &Cli) -> Result<()> {
    let cfg = match &cli.config {
        Some(p) => RunConfig::load(p)?,
        None => RunConfig::default(),
    };
    let budget = Budget::from_env();
    match &cli.command {
        Command::Sweep(a) => {
            cfg.check_command("sweep")?;
            cmd_sweep(a, &cfg, &budget)
        }
        Command::Example(a) => {
            cfg.check_command("example")?;
            cmd_example(a, &cfg, &budget)
        }
        Command::Diagnose(a) => {
            cfg.check_command("diagnose")?;
            cmd_diagnose(a, &cfg, &budget)
        }
        Command::Fit(a) => {
            cfg.check_command("fit")?;
            cmd_fit(a)
        }
        Command::Reproduce(a) => {
            cfg.check_command("reproduce")?;
            cmd_reproduce(a, &budget)
        }
    }
}
