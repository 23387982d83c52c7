//! Near/far splitting of the layer kernels and the quasimode defect of the
//! far part.

use crate::geometry::{self, boundary_quadrature, domain_quadrature, BoundaryGeometry, Budget, DomainRegion, GeometryError, Point};
use crate::kernels;
use crate::operators::{
    assemble_weighted, lanczos_norm, smooth_step, NormEstimate, NormOptions, OperatorError, OperatorKind, RingOperator, C64,
    MAX_DENSE_ENTRIES,
};
use rayon::prelude::*;
use rustfft::FftPlanner;
use serde::{Deserialize, Serialize};

#[derive(Debug, thiserror::Error)]
pub enum DiagnosticError {
    #[error(transparent)]
    Geometry(#[from] GeometryError),
    #[error(transparent)]
    Operator(#[from] OperatorError),
    #[error("invalid diagnostic input: {0}")]
    Invalid(String),
    #[error("grid of {required} points exceeds the domain cap {cap} (h = {h:.3e})")]
    GridBudget { required: usize, cap: usize, h: f64 },
}

pub type Result<T> = std::result::Result<T, DiagnosticError>;

/// Cutoff `ζ(λ|x − y|/M)`: one on `|z| ≤ 1`, zero on `|z| ≥ 2`, smooth in between.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CutoffSpec {
    pub m: f64,
}

impl Default for CutoffSpec {
    fn default() -> Self {
        Self { m: 4.0 }
    }
}

impl CutoffSpec {
    pub fn new(m: f64) -> Result<Self> {
        if !(m > 0.0) || !m.is_finite() {
            return Err(DiagnosticError::Invalid(format!("M must be positive, got {m}")));
        }
        Ok(Self { m })
    }

    pub fn zeta(z: f64) -> f64 {
        1.0 - smooth_step(z.abs() - 1.0)
    }

    /// Near weight at distance `r`.
    pub fn near(&self, lambda: f64, r: f64) -> f64 {
        Self::zeta(lambda * r / self.m)
    }

    /// Distance beyond which the near weight vanishes, `2M/λ`.
    pub fn reach(&self, lambda: f64) -> f64 {
        2.0 * self.m / lambda
    }
}

/// `(ζ, 1 − ζ)` at the pair `(x, y)`.
pub fn split_weights(cutoff: &CutoffSpec, lambda: f64, x: Point, y: Point) -> Result<(f64, f64)> {
    if x == y {
        return Err(DiagnosticError::Invalid("split weights at coincident points".into()));
    }
    let near = cutoff.near(lambda, geometry::dist(x, y));
    Ok((near, 1.0 - near))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum NearKind {
    SlpNear,
    DlpNear,
}

impl NearKind {
    pub fn operator(self) -> OperatorKind {
        match self {
            NearKind::SlpNear => OperatorKind::Slp,
            NearKind::DlpNear => OperatorKind::Dlp,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Part {
    Near,
    Far,
    Full,
}

fn centred_circle(boundary: &BoundaryGeometry) -> Option<f64> {
    match boundary.as_circle() {
        Some(([cx, cy], r)) if cx == 0.0 && cy == 0.0 => Some(r),
        _ => None,
    }
}

/// Norm of one part of a potential from `boundary` into `region`. A circle
/// centred at the origin with a polar region uses the exact mode
/// decomposition; anything else is assembled densely.
#[allow(clippy::too_many_arguments)]
pub fn part_norm(
    kind: NearKind,
    part: Part,
    lambda: f64,
    cutoff: &CutoffSpec,
    boundary: &BoundaryGeometry,
    region: &DomainRegion,
    p: f64,
    budget: &Budget,
) -> Result<NormEstimate> {
    if !(lambda >= 20.0) {
        return Err(DiagnosticError::Invalid(format!("need lambda >= 20, got {lambda}")));
    }
    let c = *cutoff;
    let weight = move |r: f64| match part {
        Part::Near => c.near(lambda, r),
        Part::Far => 1.0 - c.near(lambda, r),
        Part::Full => 1.0,
    };
    let reach = (part == Part::Near).then(|| cutoff.reach(lambda));
    if let (Some(rho), false) = (centred_circle(boundary), matches!(region, DomainRegion::Box { .. })) {
        let op = RingOperator::with_weight(kind.operator(), lambda, rho, region, p, budget, &weight, reach)?;
        return Ok(op.norm());
    }
    let s = boundary_quadrature(boundary, p, lambda, budget)?;
    let t = domain_quadrature(region, p, lambda, budget)?;
    let a = assemble_weighted(kind.operator(), lambda, &s, &t, &weight, MAX_DENSE_ENTRIES)?;
    Ok(lanczos_norm(&a, &NormOptions { tol: 1e-10, max_iter: 1000, p })?)
}

pub fn near_diagonal_norm(
    kind: NearKind,
    lambda: f64,
    cutoff: &CutoffSpec,
    boundary: &BoundaryGeometry,
    region: &DomainRegion,
    p: f64,
    budget: &Budget,
) -> Result<NormEstimate> {
    part_norm(kind, Part::Near, lambda, cutoff, boundary, region, p, budget)
}

// ---------------------------------------------------------------------------
// quasimode defect on a grid

/// Uniform grid around the boundary segment `[−1, 1] × {0}`. The segment
/// nodes are the cell centres of the grid's own `x₁` lattice, so every grid
/// row sees a Toeplitz kernel.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SegmentGrid {
    pub h: f64,
    /// Extra grid cells on each side of the segment, in both directions.
    pub margin_cells: usize,
}

impl SegmentGrid {
    /// Spacing `1/(20λ)` (rounded so `1/h` is an integer) and margin `5M/λ`.
    pub fn standard(lambda: f64, cutoff: &CutoffSpec) -> Self {
        let per_unit = (20.0 * lambda).ceil();
        let h = 1.0 / per_unit;
        Self { h, margin_cells: (5.0 * cutoff.m / lambda / h).ceil() as usize }
    }

    pub fn segment_nodes(&self) -> usize {
        (2.0 / self.h).round() as usize
    }

    pub fn columns(&self) -> usize {
        self.segment_nodes() + 2 * self.margin_cells
    }

    /// Stored rows `x₂ = j h`, `0 ≤ j ≤ margin`; the field is even in `x₂`.
    pub fn rows(&self) -> usize {
        self.margin_cells + 1
    }

    pub fn x1(&self, i: usize) -> f64 {
        -1.0 + (i as f64 - self.margin_cells as f64 + 0.5) * self.h
    }

    pub fn segment_x1(&self, l: usize) -> f64 {
        -1.0 + (l as f64 + 0.5) * self.h
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct QuasimodeResult {
    pub lambda: f64,
    pub m: f64,
    pub h: f64,
    /// `‖(−Δ_h − λ²)v‖` farther than `4M/λ` from the segment.
    pub residual: f64,
    /// The same within the collar.
    pub collar: f64,
    pub total: f64,
    pub density_norm: f64,
}

impl QuasimodeResult {
    pub fn ratio(&self) -> f64 {
        self.total / self.density_norm
    }
}

/// Squared residual `|(−Δ_h − λ²)v|²` at the interior grid points of the
/// stored rows (`x₂ ≥ 0`), indexed `[j][i]`; zero on the outer frame.
fn residual_field(lambda: f64, cutoff: &CutoffSpec, density: &[C64], grid: &SegmentGrid, part: Part, budget: &Budget) -> Result<Vec<Vec<f64>>> {
    let ns = grid.segment_nodes();
    if density.len() != ns {
        return Err(DiagnosticError::Invalid(format!("density has {} values, grid segment has {ns}", density.len())));
    }
    if part == Part::Near {
        return Err(DiagnosticError::Invalid("the near part is not a quasimode".into()));
    }
    let h = grid.h;
    if !(h * lambda <= 0.05 + 1e-12) {
        return Err(DiagnosticError::Invalid(format!("grid spacing {h} exceeds 1/(20λ)")));
    }
    if !(grid.margin_cells as f64 * h >= cutoff.reach(lambda)) {
        return Err(DiagnosticError::Invalid("grid margin smaller than 2M/λ".into()));
    }
    let (cols, rows) = (grid.columns(), grid.rows());
    let required = cols * rows;
    if required > budget.domain {
        return Err(DiagnosticError::GridBudget { required, cap: budget.domain, h });
    }
    let len = cols + ns;
    let mut planner = FftPlanner::new();
    let fwd = planner.plan_fft_forward(len);
    let inv = planner.plan_fft_inverse(len);
    let mut g: Vec<C64> = vec![C64::new(0.0, 0.0); len];
    for (slot, f) in g.iter_mut().zip(density) {
        *slot = f * h;
    }
    fwd.process(&mut g);
    let mc = grid.margin_cells as i64;
    let weight = |r: f64| match part {
        Part::Far => 1.0 - cutoff.near(lambda, r),
        _ => 1.0,
    };
    // row j: v_i = Σ_l k(i − l) g_l with offsets i − l in [−(ns − 1), cols − 1]
    let field: Vec<Vec<C64>> = (0..rows)
        .into_par_iter()
        .map(|j| {
            let x2 = j as f64 * h;
            let mut k = vec![C64::new(0.0, 0.0); len];
            for o in -(ns as i64 - 1)..cols as i64 {
                let r = ((o - mc) as f64 * h).hypot(x2);
                let w = weight(r);
                if r > 0.0 && w != 0.0 {
                    k[o.rem_euclid(len as i64) as usize] = kernels::slp2(lambda, r) * w;
                }
            }
            fwd.process(&mut k);
            k.iter_mut().zip(&g).for_each(|(a, b)| *a *= b);
            inv.process(&mut k);
            k.truncate(cols);
            k.iter_mut().for_each(|v| *v /= len as f64);
            k
        })
        .collect();
    let at = |i: usize, j: i64| field[j.unsigned_abs() as usize][i];
    let lam2 = lambda * lambda;
    let mut out = vec![vec![0.0; cols]; rows];
    for (j, row) in out.iter_mut().enumerate().take(rows - 1) {
        let j = j as i64;
        for i in 1..cols - 1 {
            let lap = (at(i + 1, j) + at(i - 1, j) + at(i, j + 1) + at(i, j - 1) - at(i, j) * 4.0) / (h * h);
            row[i] = (-lap - at(i, j) * lam2).norm_sqr();
        }
    }
    Ok(out)
}

/// `Σ h² r_ij` over stored rows, counting rows `j > 0` twice for the mirror
/// half, split by `inside(x)`.
fn integrate(res: &[Vec<f64>], grid: &SegmentGrid, inside: impl Fn(Point) -> bool) -> (f64, f64) {
    let (mut a, mut b) = (0.0, 0.0);
    let hh = grid.h * grid.h;
    for (j, row) in res.iter().enumerate() {
        let mult = if j == 0 { 1.0 } else { 2.0 };
        for (i, r) in row.iter().enumerate() {
            if inside([grid.x1(i), j as f64 * grid.h]) {
                a += r * mult * hh;
            } else {
                b += r * mult * hh;
            }
        }
    }
    (a, b)
}

/// Residual of the 5-point `(−Δ − λ²)` applied to `v = S f` on the grid,
/// where `S` has the single-layer kernel times the far weight (`Part::Far`),
/// or the plain kernel (`Part::Full`). `f` holds nodal values at the segment
/// nodes; the collar is everything within `4M/λ` of the segment.
pub fn quasimode_error(
    lambda: f64,
    cutoff: &CutoffSpec,
    density: &[C64],
    grid: &SegmentGrid,
    part: Part,
    budget: &Budget,
) -> Result<QuasimodeResult> {
    let res = residual_field(lambda, cutoff, density, grid, part, budget)?;
    let width = 4.0 * cutoff.m / lambda;
    let (collar, away) = integrate(&res, grid, |x| (x[0].abs() - 1.0).max(0.0).hypot(x[1]) <= width);
    Ok(QuasimodeResult {
        lambda,
        m: cutoff.m,
        h: grid.h,
        residual: away.sqrt(),
        collar: collar.sqrt(),
        total: (away + collar).sqrt(),
        density_norm: (density.iter().map(|f| f.norm_sqr()).sum::<f64>() * grid.h).sqrt(),
    })
}

/// Fraction of the residual mass of a single-node density (at the middle
/// node) that lies in the shell `M/λ ≤ |x − y| ≤ 2M/λ`, widened by two
/// grid cells for the stencil.
pub fn point_source_annulus_fraction(lambda: f64, cutoff: &CutoffSpec, grid: &SegmentGrid, budget: &Budget) -> Result<f64> {
    let ns = grid.segment_nodes();
    let l0 = ns / 2;
    let mut f = vec![C64::new(0.0, 0.0); ns];
    f[l0] = C64::new(1.0 / grid.h, 0.0);
    let y = [grid.segment_x1(l0), 0.0];
    let res = residual_field(lambda, cutoff, &f, grid, Part::Far, budget)?;
    let (lo, hi) = (cutoff.m / lambda - 2.0 * grid.h, 2.0 * cutoff.m / lambda + 2.0 * grid.h);
    let (inside, outside) = integrate(&res, grid, |x| {
        let d = geometry::dist(x, y);
        d >= lo && d <= hi
    });
    Ok(inside / (inside + outside))
}

/// The bump `f₀` sampled at the segment nodes of `grid`.
pub fn segment_bump_density(grid: &SegmentGrid) -> Vec<C64> {
    (0..grid.segment_nodes()).map(|l| C64::new(crate::examples::bump(grid.segment_x1(l)), 0.0)).collect()
}

/// One diagnostic record.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DiagnosticReport {
    pub lambda: f64,
    #[serde(rename = "M")]
    pub m: f64,
    pub near_norm: f64,
    pub far_norm: f64,
    pub quasimode_residual: f64,
    pub collar_residual: f64,
}

impl DiagnosticReport {
    /// Near and far norms for a circle into the disc it bounds, plus the
    /// quasimode residual of the far part for the bump on a segment.
    pub fn on_circle_and_segment(kind: NearKind, lambda: f64, cutoff: &CutoffSpec, p: f64, budget: &Budget) -> Result<Self> {
        let circle = geometry::make_geometry(&geometry::GeometrySpec::Circle { radius: 1.0 })?;
        let disc = DomainRegion::Disc { radius: 1.0 };
        let near = part_norm(kind, Part::Near, lambda, cutoff, &circle, &disc, p, budget)?;
        let far = part_norm(kind, Part::Far, lambda, cutoff, &circle, &disc, p, budget)?;
        let grid = SegmentGrid::standard(lambda, cutoff);
        let q = quasimode_error(lambda, cutoff, &segment_bump_density(&grid), &grid, Part::Far, budget)?;
        Ok(Self {
            lambda,
            m: cutoff.m,
            near_norm: near.value,
            far_norm: far.value,
            quasimode_residual: q.total / q.density_norm,
            collar_residual: q.collar / q.density_norm,
        })
    }
}
