//! Sharp-example families. Each generator returns an [`ExampleResult`] whose
//! ratio is an output norm over an input norm; sweeping λ and fitting the
//! ratios exposes the exponent the family saturates.

use crate::geometry::{
    self, appendix_gamma, boundary_quadrature, dist, dot, osculating_locus, radial_panels, spacing, sub, BoundaryGeometry, BoundaryPiece,
    Budget, DomainRegion, GeometryError, ParamCurve, Point, QuadratureSet, Rule, Segment, Window,
};
use crate::operators::{
    assemble, lanczos_norm, BoxOperator, BoxSide, CirculantOperator, NormOptions, OperatorError, OperatorKind, OperatorMatrix,
    RingOperator, C64,
};
use crate::specfun::{self, bessel_j, bessel_j_deriv, bessel_zero, Order, SpecFunError, ZeroKind};
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;
use std::io::Write;
use std::sync::Arc;

#[derive(Debug, thiserror::Error)]
pub enum ExampleError {
    #[error(transparent)]
    SpecFun(#[from] SpecFunError),
    #[error(transparent)]
    Geometry(#[from] GeometryError),
    #[error(transparent)]
    Operator(#[from] OperatorError),
    #[error("invalid example input: {0}")]
    Invalid(String),
    #[error("{family}: closed form and quadrature disagree (relative {rel:.3e})")]
    Disagreement { family: String, rel: f64 },
    #[error(transparent)]
    Csv(#[from] csv::Error),
}

pub type Result<T> = std::result::Result<T, ExampleError>;

/// Largest relative gap tolerated between two evaluations of one ratio.
pub const AGREEMENT_TOL: f64 = 1e-4;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ExampleMethod {
    ClosedForm,
    Quadrature,
    Both,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExampleResult {
    pub family: String,
    pub lambda: f64,
    pub k: Option<u32>,
    pub numerator: f64,
    pub denominator: f64,
    pub ratio: f64,
    pub method: ExampleMethod,
    pub p: Option<f64>,
    /// Relative gap between the two evaluations when `method` is `Both`.
    #[serde(skip)]
    pub discrepancy: Option<f64>,
}

impl ExampleResult {
    fn new(family: &str, lambda: f64, k: Option<u32>, numerator: f64, denominator: f64, method: ExampleMethod, p: Option<f64>) -> Self {
        Self {
            family: family.to_string(),
            lambda,
            k,
            numerator,
            denominator,
            ratio: numerator / denominator,
            method,
            p,
            discrepancy: None,
        }
    }

    /// Checks a second evaluation of the numerator against the first.
    fn confirmed_by(mut self, other: f64) -> Result<Self> {
        let rel = (other - self.numerator).abs() / self.numerator.abs().max(f64::MIN_POSITIVE);
        if !(rel <= AGREEMENT_TOL) {
            return Err(ExampleError::Disagreement { family: self.family, rel });
        }
        self.method = ExampleMethod::Both;
        self.discrepancy = Some(rel);
        Ok(self)
    }
}

/// Writes results as CSV with columns
/// `family, lambda, k, numerator, denominator, ratio, method, p`.
pub fn write_csv<W: Write>(w: W, results: &[ExampleResult]) -> Result<()> {
    let mut out = csv::Writer::from_writer(w);
    for r in results {
        out.serialize(r)?;
    }
    out.flush().map_err(csv::Error::from)?;
    Ok(())
}

pub fn read_csv<R: std::io::Read>(r: R) -> Result<Vec<ExampleResult>> {
    let mut rd = csv::Reader::from_reader(r);
    Ok(rd.deserialize().collect::<std::result::Result<_, _>>()?)
}

// ---------------------------------------------------------------------------
// bump profiles

/// `1/‖exp(1 − 1/(1 − z²))‖_{L²(−1,1)}`.
pub const BUMP_L2_SCALE: f64 = 1.008_414_623_166_904_5;

/// The smooth bump `exp(1 − 1/(1 − z²))` on `|z| < 1`, scaled to unit L² norm.
pub fn bump(z: f64) -> f64 {
    if z.abs() >= 1.0 {
        0.0
    } else {
        BUMP_L2_SCALE * (1.0 - 1.0 / (1.0 - z * z)).exp()
    }
}

/// L² norm of `bump(c·s)`: `c^{-1/2}`.
pub fn scaled_bump_norm(c: f64) -> f64 {
    c.sqrt().recip()
}

// ---------------------------------------------------------------------------
// disc eigenfunctions

/// Squared L² norm of `a J_k(λr) e^{ikθ}` over `|x| < R`:
/// `a²πR²[(1 − k²/(λR)²) J_k(λR)² + J'_k(λR)²]`.
pub fn l2_ball_closed_form(a: f64, k: Order, lambda: f64, radius: f64) -> Result<f64> {
    if !(lambda > 0.0) || !(radius > 0.0) {
        return Err(ExampleError::Invalid(format!("need lambda > 0 and R > 0 (lambda={lambda}, R={radius})")));
    }
    let z = lambda * radius;
    let j = bessel_j(k, z)?;
    let dj = bessel_j_deriv(k, z)?;
    let kv = k.value();
    Ok(a * a * PI * radius * radius * ((1.0 - kv * kv / (z * z)) * j * j + dj * dj))
}

/// The same squared norm by order-16 radial panels at density `p`; the
/// angular integral of `|e^{ikθ}|²` is exact.
pub fn l2_ball_quadrature(a: f64, k: Order, lambda: f64, radius: f64, p: f64) -> Result<f64> {
    if !(lambda > 0.0) || !(radius > 0.0) || !(p >= 4.0) {
        return Err(ExampleError::Invalid(format!("need lambda, R > 0 and p >= 4 (lambda={lambda}, R={radius}, p={p})")));
    }
    let (r, w) = radial_panels(0.0, radius, spacing(p, lambda));
    let mut s = 0.0;
    for (ri, wi) in r.iter().zip(&w) {
        let j = specfun::bessel_j_or_zero(k, lambda * ri)?;
        s += wi * ri * j * j;
    }
    Ok(2.0 * PI * a * a * s)
}

/// Norms of the Dirichlet disc mode `u = a J_k(λr) e^{ikθ}`, `λ = j_{k,1}`,
/// `a = 1/(λ J'_k(λ))`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AnnulusNorms {
    pub k: u32,
    pub lambda: f64,
    pub amplitude: f64,
    /// `‖u‖_{L²(B₁)}`, equal to `√π/λ`.
    pub ball: f64,
    /// `‖u‖_{L²(B_{3/2})}`.
    pub ball_mid: f64,
    /// `‖u‖_{L²(B₂ \ B₁)}` from the difference of squared norms.
    pub annulus: f64,
    /// `‖e^{ikθ}‖` over both boundary circles, `√(6π)`.
    pub boundary: f64,
}

pub fn annulus_norms(k: u32) -> Result<AnnulusNorms> {
    if k < 10 {
        return Err(ExampleError::Invalid(format!("annulus family needs k >= 10, got {k}")));
    }
    let order = Order::integer(k);
    let lambda = bessel_zero(ZeroKind::J, order, 1)?.location;
    let amplitude = 1.0 / (lambda * bessel_j_deriv(order, lambda)?);
    let b1 = l2_ball_closed_form(amplitude, order, lambda, 1.0)?;
    let b15 = l2_ball_closed_form(amplitude, order, lambda, 1.5)?;
    let b2 = l2_ball_closed_form(amplitude, order, lambda, 2.0)?;
    Ok(AnnulusNorms {
        k,
        lambda,
        amplitude,
        ball: b1.sqrt(),
        ball_mid: b15.sqrt(),
        annulus: (b2 - b1).sqrt(),
        boundary: (6.0 * PI).sqrt(),
    })
}

/// Annulus `{1 < |x| < 2}` family from closed forms.
pub fn annulus_slp_example(k: u32) -> Result<ExampleResult> {
    let n = annulus_norms(k)?;
    Ok(ExampleResult::new("annulus-slp", n.lambda, Some(k), n.annulus, n.boundary, ExampleMethod::ClosedForm, None))
}

/// Annulus family with the annulus norm also computed by quadrature. The
/// field `u` is produced by the spectral measure from the outer circle: the
/// density `e^{ikθ}` on `|y| = 2` gives `J_k(2λ) J_k(λr) e^{ikθ}`.
pub fn annulus_slp_example_both(k: u32, p: f64, budget: &Budget) -> Result<ExampleResult> {
    let n = annulus_norms(k)?;
    let order = Order::integer(k);
    let jk2 = bessel_j(order, 2.0 * n.lambda)?;
    if jk2.abs() < 1e-6 {
        return Err(ExampleError::Invalid(format!("J_{k}(2λ) = {jk2:.3e} too close to a zero")));
    }
    let region = DomainRegion::Annulus { inner: 1.0, outer: 2.0 };
    let ring = RingOperator::new(OperatorKind::DE, n.lambda, 2.0, &region, p, budget)?;
    let scale = n.amplitude / jk2;
    let tau = ring.mode_transfer(k as i64);
    let sq: f64 = tau.iter().enumerate().map(|(j, t)| ring.target_weight(j) * ring.n as f64 * (t * scale).norm_sqr()).sum();
    let base = ExampleResult::new("annulus-slp", n.lambda, Some(k), n.annulus, n.boundary, ExampleMethod::ClosedForm, Some(p));
    base.confirmed_by(sq.sqrt())
}

/// `j'_{k,l}` for the `l` that puts it closest to `2k`.
pub fn neumann_index_near_double(k: u32) -> Result<(u32, f64)> {
    let order = Order::integer(k);
    let mut best = (1u32, f64::INFINITY, 0.0);
    for l in 1..=(2 * k + 8) {
        let z = bessel_zero(ZeroKind::JPrime, order, l)?.location;
        let gap = (z / k as f64 - 2.0).abs();
        if gap < best.1 {
            best = (l, gap, z);
        }
        if z > 2.2 * k as f64 {
            break;
        }
    }
    Ok((best.0, best.2))
}

/// Neumann disc mode `u = J_k(λr) e^{ikθ}/J_k(λ)`, `λ = j'_{k,l}`:
/// `‖u‖_{L²(B₁)} / ‖e^{ikθ}‖_{L²(∂B₁)}`, with the ball norm checked by quadrature.
pub fn disc_neumann_dlp_example(k: u32, l: u32) -> Result<ExampleResult> {
    if k < 5 || l < 1 {
        return Err(ExampleError::Invalid(format!("need k >= 5 and l >= 1, got k={k}, l={l}")));
    }
    let order = Order::integer(k);
    let lambda = bessel_zero(ZeroKind::JPrime, order, l)?.location;
    let a = 1.0 / bessel_j(order, lambda)?;
    let kk = k as f64 / lambda;
    let exact = (PI * (1.0 - kk * kk)).sqrt();
    let quad = l2_ball_quadrature(a, order, lambda, 1.0, 10.0)?.sqrt();
    let base = ExampleResult::new("disc-neumann-dlp", lambda, Some(k), exact, (2.0 * PI).sqrt(), ExampleMethod::ClosedForm, Some(10.0));
    base.confirmed_by(quad)
}

/// Glancing Neumann mode `λ = j'_{k,1}`: returns the example and
/// `ratio·λ^{1/3}`, which tends to `√(−a'₁/2^{1/3}) ≈ 0.899` (`a'₁` the
/// first zero of Ai').
pub fn glancing_product(k: u32) -> Result<(ExampleResult, f64)> {
    let r = disc_neumann_dlp_example(k, 1)?;
    let v = r.ratio * r.lambda.cbrt();
    Ok((r, v))
}

// ---------------------------------------------------------------------------
// flat spectral-measure example

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FlatDensity {
    /// `e^{iλx₁} f₀(x₁)`.
    Modulated,
    /// `f₀(x₁)`.
    Plain,
    Zero,
}

/// `‖dE_λ(f dσ)‖_{L²(Ω)}` for `Ω = [−1,1]×[0,1]` and `f` on the bottom side,
/// `f₀` the unit bump on `[−1, 1]`. The denominator is `‖f₀‖ = 1`.
pub fn flat_de_example(lambda: f64, density: FlatDensity, p: f64, budget: &Budget) -> Result<ExampleResult> {
    if !(lambda >= 20.0) {
        return Err(ExampleError::Invalid(format!("flat family needs lambda >= 20, got {lambda}")));
    }
    let op = BoxOperator::new(OperatorKind::DE, lambda, p, &[BoxSide::Bottom], budget)?;
    let f: Vec<C64> = op
        .source_nodes()
        .iter()
        .map(|y| match density {
            FlatDensity::Modulated => C64::from_polar(bump(y[0]), lambda * y[0]),
            FlatDensity::Plain => C64::new(bump(y[0]), 0.0),
            FlatDensity::Zero => C64::new(0.0, 0.0),
        })
        .collect();
    let u = op.apply(&f)?;
    let num = (u.iter().map(|v| v.norm_sqr()).sum::<f64>() * op.h * op.h).sqrt();
    let family = match density {
        FlatDensity::Modulated => "flat-de",
        FlatDensity::Plain => "flat-de-plain",
        FlatDensity::Zero => "flat-de-zero",
    };
    Ok(ExampleResult::new(family, lambda, None, num, 1.0, ExampleMethod::Quadrature, Some(p)))
}

// ---------------------------------------------------------------------------
// double layer operator examples

fn single_piece(name: &str, piece: BoundaryPiece) -> BoundaryGeometry {
    BoundaryGeometry { name: name.to_string(), pieces: vec![piece] }
}

fn panel_count(q: &QuadratureSet) -> usize {
    match &q.rule {
        Rule::GaussPanels { panels } => panels.len(),
        _ => 0,
    }
}

/// Boundary rule at density `p`, refined until the piece carries at least
/// `min_panels` panels so that narrow bumps are resolved.
fn resolved_rule(geom: &BoundaryGeometry, p: f64, lambda: f64, min_panels: usize, budget: &Budget) -> Result<QuadratureSet> {
    let mut pp = p;
    loop {
        let q = boundary_quadrature(geom, pp, lambda, budget)?;
        if panel_count(&q) >= min_panels {
            return Ok(q);
        }
        pp *= 2.0;
    }
}

const MIN_BUMP_PANELS: usize = 8;

fn dlp_ratio(family: &str, lambda: f64, p: f64, source: &QuadratureSet, target: &QuadratureSet, density: &[C64]) -> Result<ExampleResult> {
    let a: OperatorMatrix = assemble(OperatorKind::Dlp, lambda, source, target)?;
    let u = a.apply(density)?;
    let num = target.l2_norm(&u);
    let den = source.l2_norm(density);
    Ok(ExampleResult::new(family, lambda, None, num, den, ExampleMethod::Quadrature, Some(p)))
}

/// Half-width of the source window, `1/(M λ^γ)`.
pub fn bump_half_width(lambda: f64, m: f64, gamma: f64) -> f64 {
    1.0 / (m * lambda.powf(gamma))
}

fn flat_pieces(lambda: f64, m: f64) -> (BoundaryGeometry, BoundaryGeometry) {
    let w = bump_half_width(lambda, m, 0.5);
    // upward orientation puts the right-hand normal along +x₁
    let src = single_piece("flat-source", BoundaryPiece::new(Arc::new(Segment { p: [0.0, -w], q: [0.0, w] })));
    let tgt = single_piece("flat-target", BoundaryPiece::new(Arc::new(Segment { p: [0.5, 0.0], q: [1.5, 0.0] })));
    (src, tgt)
}

/// Source segment `{x₁ = 0}` with normal `(1, 0)` carrying `χ(Mλ^{1/2}x₂)`,
/// target segment `{x₂ = 0, 1/2 < x₁ < 3/2}`. Only the support of the bump
/// is discretized on the source.
pub fn dlo_flat_example(lambda: f64, m: f64, p: f64, budget: &Budget) -> Result<ExampleResult> {
    if !(lambda >= 50.0) || !(m >= 1.0) {
        return Err(ExampleError::Invalid(format!("need lambda >= 50 and M >= 1, got {lambda}, {m}")));
    }
    let (src, tgt) = flat_pieces(lambda, m);
    let s = resolved_rule(&src, p, lambda, MIN_BUMP_PANELS, budget)?;
    let t = boundary_quadrature(&tgt, p, lambda, budget)?;
    let c = m * lambda.sqrt();
    let f: Vec<C64> = s.nodes.iter().map(|y| C64::new(bump(c * y[1]), 0.0)).collect();
    dlp_ratio("dlo-flat", lambda, p, &s, &t, &f)
}

/// Quadrature norm of the flat source bump, expected `M^{-1/2} λ^{-1/4}`.
pub fn dlo_flat_bump_norm(lambda: f64, m: f64, p: f64) -> Result<f64> {
    let (src, _) = flat_pieces(lambda, m);
    let s = resolved_rule(&src, p, lambda, MIN_BUMP_PANELS, &Budget::unlimited())?;
    let c = m * lambda.sqrt();
    let f: Vec<C64> = s.nodes.iter().map(|y| C64::new(bump(c * y[1]), 0.0)).collect();
    Ok(s.l2_norm(&f))
}

/// Largest `|⟨x − y, ν_y⟩/|x − y| − 1|` over source and target nodes of the
/// flat construction.
pub fn dlo_flat_alignment(lambda: f64, m: f64, p: f64) -> Result<f64> {
    let (src, tgt) = flat_pieces(lambda, m);
    let s = resolved_rule(&src, p, lambda, MIN_BUMP_PANELS, &Budget::unlimited())?;
    let t = boundary_quadrature(&tgt, p, lambda, &Budget::unlimited())?;
    let mut worst = 0.0f64;
    for (y, nu) in s.nodes.iter().zip(&s.normals) {
        for x in &t.nodes {
            let d = sub(*x, *y);
            worst = worst.max((dot(d, *nu) / geometry::norm(d) - 1.0).abs());
        }
    }
    Ok(worst)
}

/// Base curve of the curved construction: the unit-speed parabola arc.
const CURVED_EPS: f64 = 0.3;

fn curved_pieces(lambda: f64, m: f64) -> Result<(BoundaryGeometry, BoundaryGeometry)> {
    let w = bump_half_width(lambda, m, 1.0 / 3.0);
    if !(w < CURVED_EPS) {
        return Err(ExampleError::Invalid(format!("window {w} exceeds the base arc {CURVED_EPS}")));
    }
    let base = appendix_gamma(CURVED_EPS)?;
    let arc: Arc<dyn ParamCurve> = Arc::new(Window { inner: base.curve.clone(), lo: -w, hi: w });
    let mut src = BoundaryPiece::new(arc.clone());
    src.flip = base.flip;
    let locus = osculating_locus(arc)?;
    Ok((single_piece("curved-source", src), single_piece("curved-target", BoundaryPiece::new(Arc::new(locus)))))
}

/// Source: the unit-speed parabola arc `γ(s)`, normal toward the centres of
/// curvature, carrying `χ(Mλ^{1/3}s)`. Target: the locus of osculating
/// centres `σ(s)` over the same window `|s| ≤ 1/(Mλ^{1/3})`.
pub fn dlo_curved_example(lambda: f64, m: f64, p: f64, budget: &Budget) -> Result<ExampleResult> {
    if !(lambda >= 50.0) || !(m >= 1.0) {
        return Err(ExampleError::Invalid(format!("need lambda >= 50 and M >= 1, got {lambda}, {m}")));
    }
    let (src, tgt) = curved_pieces(lambda, m)?;
    let s = resolved_rule(&src, p, lambda, MIN_BUMP_PANELS, budget)?;
    let t = resolved_rule(&tgt, p, lambda, MIN_BUMP_PANELS, budget)?;
    let c = m * lambda.powf(1.0 / 3.0);
    let f: Vec<C64> = s.params.iter().map(|q| C64::new(bump(c * q.t), 0.0)).collect();
    dlp_ratio("dlo-curved", lambda, p, &s, &t, &f)
}

/// Phase stationarity of the curved construction: for each centre `σ(x)`,
/// `|γ(y) − σ(x)| − |γ(x) − σ(x)|` is fitted by `a δ² + b δ³ + c δ⁴`,
/// `δ = y − x`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhaseCheck {
    pub pairs: usize,
    /// Largest `|a| δ_max²` over the sampled centres.
    pub quadratic: f64,
    /// Smallest `|b| δ_max³`.
    pub cubic: f64,
}

/// Least squares by normal equations with Gaussian elimination.
fn lstsq<const N: usize>(rows: &[([f64; N], f64)]) -> [f64; N] {
    let mut a = [[0.0; N]; N];
    let mut b = [0.0; N];
    for (x, y) in rows {
        for i in 0..N {
            b[i] += x[i] * y;
            for j in 0..N {
                a[i][j] += x[i] * x[j];
            }
        }
    }
    for c in 0..N {
        let piv = (c..N).max_by(|&i, &j| a[i][c].abs().total_cmp(&a[j][c].abs())).unwrap();
        a.swap(c, piv);
        b.swap(c, piv);
        for r in c + 1..N {
            let f = a[r][c] / a[c][c];
            for j in c..N {
                a[r][j] -= f * a[c][j];
            }
            b[r] -= f * b[c];
        }
    }
    let mut x = [0.0; N];
    for c in (0..N).rev() {
        let s: f64 = (c + 1..N).map(|j| a[c][j] * x[j]).sum();
        x[c] = (b[c] - s) / a[c][c];
    }
    x
}

pub fn dlo_curved_phase_check(lambda: f64, m: f64) -> Result<PhaseCheck> {
    let w = bump_half_width(lambda, m, 1.0 / 3.0);
    let (src, tgt) = curved_pieces(lambda, m)?;
    let gamma = &src.pieces[0].curve;
    let sigma = &tgt.pieces[0].curve;
    let dmax = 0.5 * w;
    let mut out = PhaseCheck { pairs: 0, quadratic: 0.0, cubic: f64::INFINITY };
    for i in 0..10 {
        let x = -0.5 * w + w * i as f64 / 9.0;
        let c: Point = sigma.eval(x);
        let r0 = dist(gamma.eval(x), c);
        let rows: Vec<([f64; 3], f64)> = (0..10)
            .map(|j| {
                let d = dmax * (j as f64 - 4.5) / 4.5;
                ([d * d, d * d * d, d.powi(4)], dist(gamma.eval(x + d), c) - r0)
            })
            .collect();
        out.pairs += rows.len();
        let [a, b, _] = lstsq(&rows);
        out.quadratic = out.quadratic.max(a.abs() * dmax * dmax);
        out.cubic = out.cubic.min(b.abs() * dmax.powi(3));
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// single layer operator through the spectral measure

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SharpGeometry {
    /// `[−1, 1] × {0}`.
    Segment,
    /// Unit circle.
    Circle,
}

/// `‖Im(𝒮⁺_λ)/π‖`, the boundary trace of the spectral measure, checked
/// against a direct assembly of the kernel `J₀(λ|x − y|)/(4π)`.
pub fn slo_sharpness_via_de(geom: SharpGeometry, lambda: f64, p: f64, budget: &Budget) -> Result<ExampleResult> {
    let (family, via, direct) = match geom {
        SharpGeometry::Circle => {
            let slo = CirculantOperator::circle(OperatorKind::Slo, lambda, 1.0, p, budget)?;
            let mut im = slo.first_row.iter().map(|z| C64::new(z.im / PI, 0.0)).collect::<Vec<_>>();
            rustfft::FftPlanner::new().plan_fft_inverse(im.len()).process(&mut im);
            let via = im.iter().map(|z| z.norm()).fold(0.0, f64::max);
            let de = CirculantOperator::circle(OperatorKind::DE, lambda, 1.0, p, budget)?;
            ("slo-sharp-circle", via, de.norm().value)
        }
        SharpGeometry::Segment => {
            let g = geometry::make_geometry(&geometry::GeometrySpec::Segment { p: [-1.0, 0.0], q: [1.0, 0.0] })?;
            let q = boundary_quadrature(&g, p, lambda, budget)?;
            let opts = NormOptions { tol: 1e-11, max_iter: 1000, p };
            let mut a = assemble(OperatorKind::Slo, lambda, &q, &q)?;
            a.entries.iter_mut().for_each(|z| *z = C64::new(z.im / PI, 0.0));
            let via = lanczos_norm(&a, &opts)?.value;
            drop(a);
            let de = assemble(OperatorKind::DE, lambda, &q, &q)?;
            ("slo-sharp-segment", via, lanczos_norm(&de, &opts)?.value)
        }
    };
    ExampleResult::new(family, lambda, None, via, 1.0, ExampleMethod::Quadrature, Some(p)).confirmed_by(direct)
}
