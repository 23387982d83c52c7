//! Boundary curves, domain regions and their quadrature rules.
//!
//! Closed curves carry periodic trapezoid nodes, open arcs carry
//! Gauss–Legendre panels, and domains carry polar (disc, annulus) or
//! tensor/midpoint (box) rules. Node counts are tied to `λ` through the
//! points-per-wavelength density `p`.

use serde::{Deserialize, Serialize};
use std::f64::consts::PI;
use std::fmt::Debug;
use std::sync::{Arc, OnceLock};

pub type Point = [f64; 2];

#[inline]
pub fn sub(a: Point, b: Point) -> Point {
    [a[0] - b[0], a[1] - b[1]]
}

#[inline]
pub fn dot(a: Point, b: Point) -> f64 {
    a[0] * b[0] + a[1] * b[1]
}

#[inline]
pub fn norm(a: Point) -> f64 {
    a[0].hypot(a[1])
}

#[inline]
pub fn dist(a: Point, b: Point) -> f64 {
    norm(sub(a, b))
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum GeometryError {
    #[error("invalid geometry parameters: {0}")]
    Invalid(String),
    #[error("arc-length inversion failed at s = {s}")]
    ArcLengthInversion { s: f64 },
    #[error("curvature vanishes near t = {t}")]
    VanishingCurvature { t: f64 },
    #[error("speed vanishes near t = {t}")]
    VanishingSpeed { t: f64 },
    #[error(
        "{what} quadrature needs {required} nodes but the budget allows {cap}; \
         at p = {p} the budget admits lambda <= {lambda_limit:.1}"
    )]
    Budget {
        what: &'static str,
        required: usize,
        cap: usize,
        p: f64,
        lambda_limit: f64,
    },
}

pub type Result<T> = std::result::Result<T, GeometryError>;

/// Node caps for quadrature construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Budget {
    pub boundary: usize,
    pub domain: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Self { boundary: 8000, domain: 4_000_000 }
    }
}

impl Budget {
    pub const ENV: &'static str = "LAYERLAB_BUDGET";

    /// Parses `"BOUNDARY,DOMAIN"`.
    pub fn parse(s: &str) -> Option<Self> {
        let (a, b) = s.split_once(',')?;
        let boundary = a.trim().parse::<f64>().ok()?;
        let domain = b.trim().parse::<f64>().ok()?;
        if boundary < 1.0 || domain < 1.0 {
            return None;
        }
        Some(Self { boundary: boundary as usize, domain: domain as usize })
    }

    /// The default caps, overridden by `LAYERLAB_BUDGET` when it is set and valid.
    pub fn from_env() -> Self {
        std::env::var(Self::ENV)
            .ok()
            .and_then(|s| Self::parse(&s))
            .unwrap_or_default()
    }

    pub fn unlimited() -> Self {
        Self { boundary: usize::MAX, domain: usize::MAX }
    }
}

/// A smooth parametrized planar curve on `[a, b]`.
pub trait ParamCurve: Debug + Send + Sync {
    fn domain(&self) -> (f64, f64);
    fn closed(&self) -> bool {
        false
    }
    fn eval(&self, t: f64) -> Point;
    fn d1(&self, t: f64) -> Point;
    fn d2(&self, t: f64) -> Point;

    fn speed(&self, t: f64) -> f64 {
        norm(self.d1(t))
    }

    /// Centre and radius when the curve is a counter-clockwise circle.
    fn as_circle(&self) -> Option<(Point, f64)> {
        None
    }

    /// Signed curvature, positive when the curve turns left.
    fn signed_curvature(&self, t: f64) -> f64 {
        let a = self.d1(t);
        let b = self.d2(t);
        (a[0] * b[1] - a[1] * b[0]) / norm(a).powi(3)
    }
}

#[derive(Debug, Clone)]
pub struct Circle {
    pub center: Point,
    pub radius: f64,
}

impl ParamCurve for Circle {
    fn domain(&self) -> (f64, f64) {
        (0.0, 2.0 * PI)
    }
    fn closed(&self) -> bool {
        true
    }
    fn as_circle(&self) -> Option<(Point, f64)> {
        Some((self.center, self.radius))
    }
    fn eval(&self, t: f64) -> Point {
        let (s, c) = t.sin_cos();
        [self.center[0] + self.radius * c, self.center[1] + self.radius * s]
    }
    fn d1(&self, t: f64) -> Point {
        let (s, c) = t.sin_cos();
        [-self.radius * s, self.radius * c]
    }
    fn d2(&self, t: f64) -> Point {
        let (s, c) = t.sin_cos();
        [-self.radius * c, -self.radius * s]
    }
}

#[derive(Debug, Clone)]
pub struct Ellipse {
    pub a: f64,
    pub b: f64,
}

impl ParamCurve for Ellipse {
    fn domain(&self) -> (f64, f64) {
        (0.0, 2.0 * PI)
    }
    fn closed(&self) -> bool {
        true
    }
    fn eval(&self, t: f64) -> Point {
        [self.a * t.cos(), self.b * t.sin()]
    }
    fn d1(&self, t: f64) -> Point {
        [-self.a * t.sin(), self.b * t.cos()]
    }
    fn d2(&self, t: f64) -> Point {
        [-self.a * t.cos(), -self.b * t.sin()]
    }
}

/// Straight segment parametrized by arclength on `[0, |q - p|]`.
#[derive(Debug, Clone)]
pub struct Segment {
    pub p: Point,
    pub q: Point,
}

impl Segment {
    fn dir(&self) -> Point {
        let d = sub(self.q, self.p);
        let l = norm(d);
        [d[0] / l, d[1] / l]
    }
}

impl ParamCurve for Segment {
    fn domain(&self) -> (f64, f64) {
        (0.0, dist(self.p, self.q))
    }
    fn eval(&self, t: f64) -> Point {
        let d = self.dir();
        [self.p[0] + t * d[0], self.p[1] + t * d[1]]
    }
    fn d1(&self, _t: f64) -> Point {
        self.dir()
    }
    fn d2(&self, _t: f64) -> Point {
        [0.0, 0.0]
    }
}

/// `t ↦ (t + 1, (t + 1)²)` on `[-ε, ε]`.
#[derive(Debug, Clone)]
pub struct Parabola {
    pub eps: f64,
}

impl ParamCurve for Parabola {
    fn domain(&self) -> (f64, f64) {
        (-self.eps, self.eps)
    }
    fn eval(&self, t: f64) -> Point {
        [t + 1.0, (t + 1.0).powi(2)]
    }
    fn d1(&self, t: f64) -> Point {
        [1.0, 2.0 * (t + 1.0)]
    }
    fn d2(&self, _t: f64) -> Point {
        [0.0, 2.0]
    }
}

/// `t ↦ (−4(t+1)³, 3(t+1)² + 1/2)`, the evolute of [`Parabola`] in its own parameter.
#[derive(Debug, Clone)]
pub struct ParabolaEvolute {
    pub eps: f64,
}

impl ParamCurve for ParabolaEvolute {
    fn domain(&self) -> (f64, f64) {
        (-self.eps, self.eps)
    }
    fn eval(&self, t: f64) -> Point {
        let u = t + 1.0;
        [-4.0 * u.powi(3), 3.0 * u * u + 0.5]
    }
    fn d1(&self, t: f64) -> Point {
        let u = t + 1.0;
        [-12.0 * u * u, 6.0 * u]
    }
    fn d2(&self, t: f64) -> Point {
        [-24.0 * (t + 1.0), 6.0]
    }
}

const ARC_PANELS: usize = 64;

/// Arclength reparametrization of a base curve.
///
/// `s = 0` sits at `t = 0` when the base domain contains 0, otherwise at the
/// start of the domain.
#[derive(Debug, Clone)]
pub struct UnitSpeed {
    base: Arc<dyn ParamCurve>,
    breaks: Vec<f64>,
    cumulative: Vec<f64>,
    anchor_s: f64,
}

impl UnitSpeed {
    pub fn base(&self) -> &Arc<dyn ParamCurve> {
        &self.base
    }

    fn partial(&self, k: usize, t: f64) -> f64 {
        let (x, w) = gauss_legendre(16);
        let a = self.breaks[k];
        let half = 0.5 * (t - a);
        let mut s = 0.0;
        for (xi, wi) in x.iter().zip(w) {
            s += wi * self.base.speed(a + half * (xi + 1.0));
        }
        self.cumulative[k] + half * s
    }

    fn panel_of(&self, t: f64) -> usize {
        let k = self.breaks.partition_point(|&b| b <= t);
        k.saturating_sub(1).min(ARC_PANELS - 1)
    }

    /// Arclength from the anchor to base parameter `t`.
    pub fn arclength(&self, t: f64) -> f64 {
        self.partial(self.panel_of(t), t) - self.anchor_s
    }

    /// Base parameter at arclength `s` from the anchor.
    pub fn param(&self, s: f64) -> Result<f64> {
        let target = s + self.anchor_s;
        let k = self.cumulative.partition_point(|&c| c <= target).saturating_sub(1).min(ARC_PANELS - 1);
        let (mut lo, mut hi) = (self.breaks[k], self.breaks[k + 1]);
        let span = self.cumulative[k + 1] - self.cumulative[k];
        let mut t = lo + (hi - lo) * (target - self.cumulative[k]) / span;
        for _ in 0..60 {
            let f = self.partial(k, t) - target;
            if f > 0.0 {
                hi = t;
            } else {
                lo = t;
            }
            let mut next = t - f / self.base.speed(t);
            if !(next >= lo && next <= hi) {
                next = 0.5 * (lo + hi);
            }
            if (next - t).abs() <= 1e-15 * (1.0 + t.abs()) {
                return Ok(next);
            }
            t = next;
        }
        if (hi - lo) < 1e-12 * (1.0 + t.abs()) {
            return Ok(t);
        }
        Err(GeometryError::ArcLengthInversion { s })
    }

    fn param_unchecked(&self, s: f64) -> f64 {
        self.param(s).unwrap_or(f64::NAN)
    }
}

impl ParamCurve for UnitSpeed {
    fn domain(&self) -> (f64, f64) {
        (self.cumulative[0] - self.anchor_s, self.cumulative[ARC_PANELS] - self.anchor_s)
    }
    fn closed(&self) -> bool {
        self.base.closed()
    }
    fn eval(&self, s: f64) -> Point {
        self.base.eval(self.param_unchecked(s))
    }
    fn d1(&self, s: f64) -> Point {
        let t = self.param_unchecked(s);
        let d = self.base.d1(t);
        let v = norm(d);
        [d[0] / v, d[1] / v]
    }
    fn d2(&self, s: f64) -> Point {
        let t = self.param_unchecked(s);
        let d = self.base.d1(t);
        let dd = self.base.d2(t);
        let v2 = dot(d, d);
        let tp = 1.0 / v2.sqrt();
        let tpp = -dot(d, dd) / (v2 * v2);
        [dd[0] * tp * tp + d[0] * tpp, dd[1] * tp * tp + d[1] * tpp]
    }
    fn speed(&self, _s: f64) -> f64 {
        1.0
    }
}

/// Reparametrizes `curve` by arclength.
pub fn unit_speed_reparam(curve: Arc<dyn ParamCurve>) -> Result<UnitSpeed> {
    let (a, b) = curve.domain();
    if !(b > a) {
        return Err(GeometryError::Invalid(format!("empty parameter domain [{a}, {b}]")));
    }
    let mut vmax = 0.0f64;
    let mut vmin = f64::INFINITY;
    let mut tmin = a;
    for i in 0..=256 {
        let t = a + (b - a) * i as f64 / 256.0;
        let v = curve.speed(t);
        vmax = vmax.max(v);
        if v < vmin {
            vmin = v;
            tmin = t;
        }
    }
    if !(vmin > 1e-12 * vmax) {
        return Err(GeometryError::VanishingSpeed { t: tmin });
    }
    let breaks: Vec<f64> = (0..=ARC_PANELS).map(|i| a + (b - a) * i as f64 / ARC_PANELS as f64).collect();
    let mut out = UnitSpeed { base: curve, breaks, cumulative: vec![0.0; ARC_PANELS + 1], anchor_s: 0.0 };
    for k in 0..ARC_PANELS {
        out.cumulative[k + 1] = out.partial(k, out.breaks[k + 1]);
    }
    if a < 0.0 && b > 0.0 && !out.base.closed() {
        out.anchor_s = out.partial(out.panel_of(0.0), 0.0);
    }
    Ok(out)
}

/// Locus of centres of osculating circles, `γ + N/κ`.
#[derive(Debug, Clone)]
pub struct OsculatingLocus {
    base: Arc<dyn ParamCurve>,
}

impl OsculatingLocus {
    const FD_STEP: f64 = 1e-3;
}

impl ParamCurve for OsculatingLocus {
    fn domain(&self) -> (f64, f64) {
        self.base.domain()
    }
    fn closed(&self) -> bool {
        self.base.closed()
    }
    fn eval(&self, t: f64) -> Point {
        let g = self.base.eval(t);
        let d = self.base.d1(t);
        let v = norm(d);
        let left = [-d[1] / v, d[0] / v];
        let k = self.base.signed_curvature(t);
        [g[0] + left[0] / k, g[1] + left[1] / k]
    }
    fn d1(&self, t: f64) -> Point {
        let h = Self::FD_STEP;
        let f = |s: f64| self.eval(t + s);
        let (a, b, c, d) = (f(-2.0 * h), f(-h), f(h), f(2.0 * h));
        let g = |i: usize| (a[i] - 8.0 * b[i] + 8.0 * c[i] - d[i]) / (12.0 * h);
        [g(0), g(1)]
    }
    fn d2(&self, t: f64) -> Point {
        let h = Self::FD_STEP;
        let f = |s: f64| self.eval(t + s);
        let (a, b, m, c, d) = (f(-2.0 * h), f(-h), f(0.0), f(h), f(2.0 * h));
        let g = |i: usize| (-a[i] + 16.0 * b[i] - 30.0 * m[i] + 16.0 * c[i] - d[i]) / (12.0 * h * h);
        [g(0), g(1)]
    }
}

/// Builds the osculating-circle locus of `curve`; fails if the curvature
/// vanishes on the parameter window.
pub fn osculating_locus(curve: Arc<dyn ParamCurve>) -> Result<OsculatingLocus> {
    let (a, b) = curve.domain();
    for i in 0..=256 {
        let t = a + (b - a) * i as f64 / 256.0;
        let k = curve.signed_curvature(t);
        if !(k.abs() > 1e-10) {
            return Err(GeometryError::VanishingCurvature { t });
        }
    }
    Ok(OsculatingLocus { base: curve })
}

/// One oriented piece of a boundary.
///
/// The normal is the right-hand normal of the parametrization (outward for
/// counter-clockwise closed curves), negated when `flip` is set.
#[derive(Debug, Clone)]
pub struct BoundaryPiece {
    pub curve: Arc<dyn ParamCurve>,
    pub flip: bool,
    pub grade_ends: bool,
}

impl BoundaryPiece {
    pub fn new(curve: Arc<dyn ParamCurve>) -> Self {
        Self { curve, flip: false, grade_ends: false }
    }

    pub fn flipped(mut self) -> Self {
        self.flip = !self.flip;
        self
    }

    pub fn normal(&self, t: f64) -> Point {
        let d = self.curve.d1(t);
        let v = norm(d);
        let s = if self.flip { -1.0 } else { 1.0 };
        [s * d[1] / v, -s * d[0] / v]
    }

    /// Curvature signed so that a circle with outward normal has `κ = 1/R`.
    pub fn curvature(&self, t: f64) -> f64 {
        let k = self.curve.signed_curvature(t);
        if self.flip {
            -k
        } else {
            k
        }
    }

    pub fn length(&self) -> f64 {
        let (a, b) = self.curve.domain();
        let (x, w) = gauss_legendre(16);
        let n = 64;
        let h = (b - a) / n as f64;
        let mut s = 0.0;
        for k in 0..n {
            let t0 = a + k as f64 * h;
            for (xi, wi) in x.iter().zip(w) {
                s += wi * 0.5 * h * self.curve.speed(t0 + 0.5 * h * (xi + 1.0));
            }
        }
        s
    }
}

/// A named boundary made of oriented pieces.
#[derive(Debug, Clone)]
pub struct BoundaryGeometry {
    pub name: String,
    pub pieces: Vec<BoundaryPiece>,
}

impl BoundaryGeometry {
    pub fn length(&self) -> f64 {
        self.pieces.iter().map(BoundaryPiece::length).sum()
    }

    /// The single circle this geometry consists of, if any.
    pub fn as_circle(&self) -> Option<(Point, f64)> {
        if self.pieces.len() != 1 || self.pieces[0].flip {
            return None;
        }
        self.pieces[0].curve.as_circle()
    }
}

fn default_eps() -> f64 {
    0.3
}

/// Named boundary descriptions accepted by [`make_geometry`].
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "name", rename_all = "kebab-case", deny_unknown_fields)]
pub enum GeometrySpec {
    Circle { radius: f64 },
    AnnulusBoundary { inner: f64, outer: f64 },
    Segment { p: Point, q: Point },
    /// Boundary of `[-1, 1] × [0, 1]`.
    SquareBoundary,
    AppendixGamma {
        #[serde(default = "default_eps")]
        eps: f64,
    },
    AppendixSigma {
        #[serde(default = "default_eps")]
        eps: f64,
    },
    Ellipse { a: f64, b: f64 },
    /// `{x₁ = 0, |x₂| < 1}` with normal `(1, 0)` and `{x₂ = 0, 1/2 < x₁ < 3/2}`.
    SegmentPair,
}

impl GeometrySpec {
    pub fn label(&self) -> &'static str {
        match self {
            GeometrySpec::Circle { .. } => "circle",
            GeometrySpec::AnnulusBoundary { .. } => "annulus-boundary",
            GeometrySpec::Segment { .. } => "segment",
            GeometrySpec::SquareBoundary => "square-boundary",
            GeometrySpec::AppendixGamma { .. } => "appendix-gamma",
            GeometrySpec::AppendixSigma { .. } => "appendix-sigma",
            GeometrySpec::Ellipse { .. } => "ellipse",
            GeometrySpec::SegmentPair => "segment-pair",
        }
    }
}

fn positive(name: &str, v: f64) -> Result<()> {
    if v > 0.0 && v.is_finite() {
        Ok(())
    } else {
        Err(GeometryError::Invalid(format!("{name} must be positive, got {v}")))
    }
}

/// The unit-speed appendix curve Γ₁ on `s ∈ [-ε, ε]`, normal toward its concave side.
pub fn appendix_gamma(eps: f64) -> Result<BoundaryPiece> {
    positive("eps", eps)?;
    // the parabola's speed is at least 1, so a base window of ±eps covers arclength ±eps
    let base = unit_speed_reparam(Arc::new(Parabola { eps }))?;
    let window = Window { inner: Arc::new(base), lo: -eps, hi: eps };
    Ok(BoundaryPiece::new(Arc::new(window)).flipped())
}

/// Restriction of a curve to a sub-window of its domain.
#[derive(Debug, Clone)]
pub struct Window {
    pub inner: Arc<dyn ParamCurve>,
    pub lo: f64,
    pub hi: f64,
}

impl ParamCurve for Window {
    fn domain(&self) -> (f64, f64) {
        (self.lo, self.hi)
    }
    fn eval(&self, t: f64) -> Point {
        self.inner.eval(t)
    }
    fn d1(&self, t: f64) -> Point {
        self.inner.d1(t)
    }
    fn d2(&self, t: f64) -> Point {
        self.inner.d2(t)
    }
    fn speed(&self, t: f64) -> f64 {
        self.inner.speed(t)
    }
}

pub fn make_geometry(spec: &GeometrySpec) -> Result<BoundaryGeometry> {
    let pieces = match *spec {
        GeometrySpec::Circle { radius } => {
            positive("radius", radius)?;
            vec![BoundaryPiece::new(Arc::new(Circle { center: [0.0, 0.0], radius }))]
        }
        GeometrySpec::AnnulusBoundary { inner, outer } => {
            positive("inner radius", inner)?;
            if !(outer > inner) {
                return Err(GeometryError::Invalid(format!("annulus needs inner < outer, got {inner} >= {outer}")));
            }
            vec![
                BoundaryPiece::new(Arc::new(Circle { center: [0.0, 0.0], radius: outer })),
                BoundaryPiece::new(Arc::new(Circle { center: [0.0, 0.0], radius: inner })).flipped(),
            ]
        }
        GeometrySpec::Segment { p, q } => {
            if !(dist(p, q) > 1e-14) || !p.iter().chain(q.iter()).all(|v| v.is_finite()) {
                return Err(GeometryError::Invalid("degenerate segment".into()));
            }
            vec![BoundaryPiece::new(Arc::new(Segment { p, q }))]
        }
        GeometrySpec::SquareBoundary => {
            let c = [[-1.0, 0.0], [1.0, 0.0], [1.0, 1.0], [-1.0, 1.0]];
            (0..4)
                .map(|i| {
                    let mut piece = BoundaryPiece::new(Arc::new(Segment { p: c[i], q: c[(i + 1) % 4] }));
                    piece.grade_ends = true;
                    piece
                })
                .collect()
        }
        GeometrySpec::AppendixGamma { eps } => vec![appendix_gamma(eps)?],
        GeometrySpec::AppendixSigma { eps } => {
            positive("eps", eps)?;
            vec![BoundaryPiece::new(Arc::new(ParabolaEvolute { eps }))]
        }
        GeometrySpec::Ellipse { a, b } => {
            positive("a", a)?;
            positive("b", b)?;
            vec![BoundaryPiece::new(Arc::new(Ellipse { a, b }))]
        }
        GeometrySpec::SegmentPair => vec![
            BoundaryPiece::new(Arc::new(Segment { p: [0.0, -1.0], q: [0.0, 1.0] })),
            BoundaryPiece::new(Arc::new(Segment { p: [0.5, 0.0], q: [1.5, 0.0] })),
        ],
    };
    Ok(BoundaryGeometry { name: spec.label().to_string(), pieces })
}

/// Gauss–Legendre nodes and weights on `[-1, 1]`; orders 16 and 64 are cached.
pub fn gauss_legendre(n: usize) -> (&'static [f64], &'static [f64]) {
    static GL16: OnceLock<(Vec<f64>, Vec<f64>)> = OnceLock::new();
    static GL64: OnceLock<(Vec<f64>, Vec<f64>)> = OnceLock::new();
    let cell = match n {
        16 => &GL16,
        64 => &GL64,
        _ => {
            let (x, w) = gauss_legendre_rule(n);
            return (Vec::leak(x), Vec::leak(w));
        }
    };
    let (x, w) = cell.get_or_init(|| gauss_legendre_rule(n));
    (x, w)
}

/// Newton iteration on the Legendre recurrence.
pub fn gauss_legendre_rule(n: usize) -> (Vec<f64>, Vec<f64>) {
    let mut x = vec![0.0; n];
    let mut w = vec![0.0; n];
    for i in 0..(n + 1) / 2 {
        let mut z = (PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (mut p0, mut p1) = (1.0, z);
            for k in 2..=n {
                let p2 = ((2 * k - 1) as f64 * z * p1 - (k - 1) as f64 * p0) / k as f64;
                p0 = p1;
                p1 = p2;
            }
            if n == 1 {
                p1 = z;
                p0 = 1.0;
            }
            dp = n as f64 * (z * p1 - p0) / (z * z - 1.0);
            let dz = p1 / dp;
            z -= dz;
            if dz.abs() < 1e-16 {
                break;
            }
        }
        x[i] = -z;
        x[n - 1 - i] = z;
        w[i] = 2.0 / ((1.0 - z * z) * dp * dp);
        w[n - 1 - i] = w[i];
    }
    (x, w)
}

pub const PANEL_ORDER: usize = 16;

/// Largest gap between consecutive nodes of a chain of order-16 panels, per unit panel length.
fn panel_gap_factor() -> f64 {
    let (x, _) = gauss_legendre(PANEL_ORDER);
    let mut g = 1.0 + x[0]; // across a panel break
    for i in 1..x.len() {
        g = g.max(x[i] - x[i - 1]);
    }
    0.5 * g
}

/// Where quadrature nodes live.
#[derive(Debug, Clone, PartialEq)]
pub enum Host {
    Boundary { name: String },
    Domain { name: String },
}

/// Per-node parametric data on a boundary.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NodeParam {
    pub piece: usize,
    pub t: f64,
    pub d1: Point,
    pub d2: Point,
}

/// Structure of a rule, used by the fast operator paths.
#[derive(Debug, Clone, PartialEq)]
pub enum Rule {
    /// `n` equispaced nodes per closed piece.
    PeriodicTrapezoid { n: Vec<usize> },
    /// Gauss–Legendre panels; `panels[i]` is the node range and parameter interval of panel `i`.
    GaussPanels { panels: Vec<Panel> },
    /// Ring-major polar nodes: `radii.len()` rings of `n_theta` angles each.
    Polar { radii: Vec<f64>, radial_weights: Vec<f64>, n_theta: usize },
    /// Tensor product of Gauss panels on a box.
    Tensor { nx: usize, ny: usize },
    /// Cell centres of a uniform grid of spacing `h` on a box.
    Midpoint { nx: usize, ny: usize, h: f64 },
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Panel {
    pub piece: usize,
    pub start: usize,
    pub t0: f64,
    pub t1: f64,
}

#[derive(Debug, Clone)]
pub struct QuadratureSet {
    pub host: Host,
    pub nodes: Vec<Point>,
    pub weights: Vec<f64>,
    /// Unit normals; empty for domain rules.
    pub normals: Vec<Point>,
    /// Curvature w.r.t. the normal; empty for domain rules.
    pub curvature: Vec<f64>,
    pub params: Vec<NodeParam>,
    pub rule: Rule,
    pub p: f64,
}

impl QuadratureSet {
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn total_weight(&self) -> f64 {
        self.weights.iter().sum()
    }

    /// Weighted L² norm of a nodal function.
    pub fn l2_norm(&self, f: &[num_complex::Complex64]) -> f64 {
        f.iter().zip(&self.weights).map(|(v, w)| w * v.norm_sqr()).sum::<f64>().sqrt()
    }
}

/// Target node spacing `2π/(pλ)`.
pub fn spacing(p: f64, lambda: f64) -> f64 {
    2.0 * PI / (p * lambda)
}

fn check_density(p: f64, lambda: f64) -> Result<()> {
    if !(p >= 4.0) || !p.is_finite() {
        return Err(GeometryError::Invalid(format!("points per wavelength must be >= 4, got {p}")));
    }
    positive("lambda", lambda)
}

fn refuse(what: &'static str, required: usize, cap: usize, p: f64, lambda: f64) -> GeometryError {
    GeometryError::Budget {
        what,
        required,
        cap,
        p,
        lambda_limit: lambda * cap as f64 / required as f64,
    }
}

fn max_speed(c: &dyn ParamCurve) -> f64 {
    let (a, b) = c.domain();
    (0..=512).map(|i| c.speed(a + (b - a) * i as f64 / 512.0)).fold(0.0, f64::max)
}

fn panel_breaks(piece: &BoundaryPiece, h: f64) -> Vec<f64> {
    let (a, b) = piece.curve.domain();
    let v = max_speed(piece.curve.as_ref());
    let n = ((b - a) * v * panel_gap_factor() / h).ceil().max(1.0) as usize;
    let mut breaks: Vec<f64> = (0..=n).map(|i| a + (b - a) * i as f64 / n as f64).collect();
    if piece.grade_ends {
        let w = (b - a) / n as f64;
        let mut extra = Vec::new();
        for level in 1..=3 {
            let d = w / 2f64.powi(level);
            extra.push(a + d);
            extra.push(b - d);
        }
        breaks.extend(extra);
        breaks.sort_by(f64::total_cmp);
    }
    breaks
}

/// Quadrature on a boundary: trapezoid on closed pieces, order-16 panels on open ones.
pub fn boundary_quadrature(geom: &BoundaryGeometry, p: f64, lambda: f64, budget: &Budget) -> Result<QuadratureSet> {
    check_density(p, lambda)?;
    let h = spacing(p, lambda);
    let all_closed = geom.pieces.iter().all(|pc| pc.curve.closed());
    let any_closed = geom.pieces.iter().any(|pc| pc.curve.closed());
    if any_closed && !all_closed {
        return Err(GeometryError::Invalid("mixed closed and open pieces".into()));
    }
    let mut q = QuadratureSet {
        host: Host::Boundary { name: geom.name.clone() },
        nodes: Vec::new(),
        weights: Vec::new(),
        normals: Vec::new(),
        curvature: Vec::new(),
        params: Vec::new(),
        rule: Rule::PeriodicTrapezoid { n: Vec::new() },
        p,
    };
    let mut plan: Vec<Vec<(f64, f64)>> = Vec::new();
    let mut panels = Vec::new();
    let mut required = 0usize;
    for (pi, piece) in geom.pieces.iter().enumerate() {
        let (a, b) = piece.curve.domain();
        let mut nodes = Vec::new();
        if all_closed {
            let v = max_speed(piece.curve.as_ref());
            let mut n = ((b - a) * v / h * (1.0 - 1e-12)).ceil().max(16.0) as usize;
            n += n % 2;
            let dt = (b - a) / n as f64;
            nodes.extend((0..n).map(|j| (a + j as f64 * dt, dt)));
        } else {
            let breaks = panel_breaks(piece, h);
            let (x, w) = gauss_legendre(PANEL_ORDER);
            for win in breaks.windows(2) {
                panels.push(Panel { piece: pi, start: required + nodes.len(), t0: win[0], t1: win[1] });
                let half = 0.5 * (win[1] - win[0]);
                for (xi, wi) in x.iter().zip(w) {
                    nodes.push((win[0] + half * (xi + 1.0), half * wi));
                }
            }
        }
        required += nodes.len();
        plan.push(nodes);
    }
    if required > budget.boundary {
        return Err(refuse("boundary", required, budget.boundary, p, lambda));
    }
    let mut counts = Vec::new();
    for (pi, (piece, nodes)) in geom.pieces.iter().zip(plan).enumerate() {
        counts.push(nodes.len());
        for &(t, dt) in &nodes {
            let d1 = piece.curve.d1(t);
            q.nodes.push(piece.curve.eval(t));
            q.weights.push(dt * norm(d1));
            q.normals.push(piece.normal(t));
            q.curvature.push(piece.curvature(t));
            q.params.push(NodeParam { piece: pi, t, d1, d2: piece.curve.d2(t) });
        }
    }
    q.rule = if all_closed {
        Rule::PeriodicTrapezoid { n: counts }
    } else {
        Rule::GaussPanels { panels }
    };
    Ok(q)
}

/// Box rule flavour.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum BoxRule {
    Tensor,
    Midpoint,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case", deny_unknown_fields)]
pub enum DomainRegion {
    Disc { radius: f64 },
    Annulus { inner: f64, outer: f64 },
    /// `[-1, 1] × [0, 1]`.
    Box { rule: BoxRule },
}

impl DomainRegion {
    pub fn label(&self) -> &'static str {
        match self {
            DomainRegion::Disc { .. } => "disc",
            DomainRegion::Annulus { .. } => "annulus",
            DomainRegion::Box { .. } => "box",
        }
    }

    pub fn area(&self) -> f64 {
        match *self {
            DomainRegion::Disc { radius } => PI * radius * radius,
            DomainRegion::Annulus { inner, outer } => PI * (outer * outer - inner * inner),
            DomainRegion::Box { .. } => 2.0,
        }
    }
}

/// Order-16 Gauss panels on `[r0, r1]` with node gaps at most `h`.
pub fn radial_panels(r0: f64, r1: f64, h: f64) -> (Vec<f64>, Vec<f64>) {
    let n = ((r1 - r0) * panel_gap_factor() / h).ceil().max(1.0) as usize;
    let (x, w) = gauss_legendre(PANEL_ORDER);
    let mut r = Vec::new();
    let mut wr = Vec::new();
    let d = (r1 - r0) / n as f64;
    for k in 0..n {
        let a = r0 + k as f64 * d;
        for (xi, wi) in x.iter().zip(w) {
            r.push(a + 0.5 * d * (xi + 1.0));
            wr.push(0.5 * d * wi);
        }
    }
    (r, wr)
}

/// Quadrature on a domain region at density `p`.
pub fn domain_quadrature(region: &DomainRegion, p: f64, lambda: f64, budget: &Budget) -> Result<QuadratureSet> {
    check_density(p, lambda)?;
    let h = spacing(p, lambda);
    let base = |nodes, weights, rule| QuadratureSet {
        host: Host::Domain { name: region.label().to_string() },
        nodes,
        weights,
        normals: Vec::new(),
        curvature: Vec::new(),
        params: Vec::new(),
        rule,
        p,
    };
    match *region {
        DomainRegion::Disc { .. } | DomainRegion::Annulus { .. } => {
            let (r0, r1) = match *region {
                DomainRegion::Disc { radius } => {
                    positive("radius", radius)?;
                    (0.0, radius)
                }
                DomainRegion::Annulus { inner, outer } => {
                    positive("inner radius", inner)?;
                    if !(outer > inner) {
                        return Err(GeometryError::Invalid("annulus needs inner < outer".into()));
                    }
                    (inner, outer)
                }
                DomainRegion::Box { .. } => unreachable!(),
            };
            let (radii, wr) = radial_panels(r0, r1, h);
            let mut n_theta = (2.0 * PI * r1 / h * (1.0 - 1e-12)).ceil().max(16.0) as usize;
            n_theta += n_theta % 2;
            let required = radii.len() * n_theta;
            if required > budget.domain {
                return Err(refuse("domain", required, budget.domain, p, lambda));
            }
            let dth = 2.0 * PI / n_theta as f64;
            let mut nodes = Vec::with_capacity(required);
            let mut weights = Vec::with_capacity(required);
            for (&r, &w) in radii.iter().zip(&wr) {
                for m in 0..n_theta {
                    let (s, c) = (m as f64 * dth).sin_cos();
                    nodes.push([r * c, r * s]);
                    weights.push(w * r * dth);
                }
            }
            Ok(base(nodes, weights, Rule::Polar { radii, radial_weights: wr, n_theta }))
        }
        DomainRegion::Box { rule: BoxRule::Tensor } => {
            let (xs, wx) = radial_panels(-1.0, 1.0, h);
            let (ys, wy) = radial_panels(0.0, 1.0, h);
            let required = xs.len() * ys.len();
            if required > budget.domain {
                return Err(refuse("domain", required, budget.domain, p, lambda));
            }
            let mut nodes = Vec::with_capacity(required);
            let mut weights = Vec::with_capacity(required);
            for (&y, &wyv) in ys.iter().zip(&wy) {
                for (&x, &wxv) in xs.iter().zip(&wx) {
                    nodes.push([x, y]);
                    weights.push(wxv * wyv);
                }
            }
            Ok(base(nodes, weights, Rule::Tensor { nx: xs.len(), ny: ys.len() }))
        }
        DomainRegion::Box { rule: BoxRule::Midpoint } => {
            let ny = (1.0 / h).ceil() as usize;
            let hh = 1.0 / ny as f64;
            let nx = 2 * ny;
            let required = nx * ny;
            if required > budget.domain {
                return Err(refuse("domain", required, budget.domain, p, lambda));
            }
            let mut nodes = Vec::with_capacity(required);
            for j in 0..ny {
                for i in 0..nx {
                    nodes.push([-1.0 + (i as f64 + 0.5) * hh, (j as f64 + 0.5) * hh]);
                }
            }
            Ok(base(nodes, vec![hh * hh; required], Rule::Midpoint { nx, ny, h: hh }))
        }
    }
}

/// Either kind of quadrature host.
#[derive(Debug, Clone, Copy)]
pub enum Target<'a> {
    Boundary(&'a BoundaryGeometry),
    Domain(&'a DomainRegion),
}

pub fn quadrature(target: Target<'_>, p: f64, lambda: f64, budget: &Budget) -> Result<QuadratureSet> {
    match target {
        Target::Boundary(g) => boundary_quadrature(g, p, lambda, budget),
        Target::Domain(d) => domain_quadrature(d, p, lambda, budget),
    }
}
