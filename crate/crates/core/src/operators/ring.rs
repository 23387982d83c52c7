use super::dense::graded_rule;
use super::{check_len, pair_kernel, smooth_step, LinearOperator, NormEstimate, NormMethod, OperatorError, OperatorKind, Result, C64};
use crate::geometry::{radial_panels, spacing, Budget, DomainRegion, GeometryError};
use rayon::prelude::*;
use rustfft::FftPlanner;
use std::f64::consts::PI;

/// Potential from a circle of radius `rho` (centred at the origin) into a
/// polar rule on a disc or annulus whose angular nodes are aligned with the
/// source nodes. Each target ring sees a circulant block, so the operator
/// is block-diagonal in angular Fourier modes.
#[derive(Debug, Clone)]
pub struct RingOperator {
    pub kind: OperatorKind,
    pub lambda: f64,
    pub rho: f64,
    pub p: f64,
    pub n: usize,
    pub radii: Vec<f64>,
    pub radial_weights: Vec<f64>,
    /// `transfer[j][k]`: field at angle 0 on ring `j` from the density
    /// `e^{ikθ}`, `k` in FFT order.
    pub transfer: Vec<Vec<C64>>,
}

/// Rings closer to the source circle than this many node spacings get
/// corrected near-field integrals. The correction uses a smooth window,
/// flat out to `PLATEAU_CELLS`, so the remaining lattice sum stays spectral.
const NEAR_CELLS: usize = 24;
const PLATEAU_CELLS: f64 = 4.0;

fn window(theta: f64, dth: f64) -> f64 {
    let a = PLATEAU_CELLS * dth;
    let b = NEAR_CELLS as f64 * dth;
    1.0 - smooth_step((theta.abs() - a) / (b - a))
}

impl RingOperator {
    pub fn new(kind: OperatorKind, lambda: f64, rho: f64, region: &DomainRegion, p: f64, budget: &Budget) -> Result<Self> {
        Self::with_weight(kind, lambda, rho, region, p, budget, &|_| 1.0, None)
    }

    /// Same operator with the kernel multiplied by `weight(|x - y|)`. When
    /// `reach` is given the weight must vanish beyond it, and rings farther
    /// than `reach` from the source circle are left at zero.
    #[allow(clippy::too_many_arguments)]
    pub fn with_weight(
        kind: OperatorKind,
        lambda: f64,
        rho: f64,
        region: &DomainRegion,
        p: f64,
        budget: &Budget,
        weight: &(dyn Fn(f64) -> f64 + Sync),
        reach: Option<f64>,
    ) -> Result<Self> {
        if !matches!(kind, OperatorKind::Slp | OperatorKind::Dlp | OperatorKind::DE) {
            return Err(OperatorError::Unsupported(format!("{kind} is not a potential")));
        }
        if !(p >= 4.0) || !(lambda > 0.0) || !(rho > 0.0) {
            return Err(GeometryError::Invalid(format!("need p >= 4, lambda > 0, rho > 0 (p={p}, lambda={lambda}, rho={rho})")).into());
        }
        let (r0, r1) = match *region {
            DomainRegion::Disc { radius } => (0.0, radius),
            DomainRegion::Annulus { inner, outer } => (inner, outer),
            DomainRegion::Box { .. } => return Err(OperatorError::Unsupported("ring operator needs a polar region".into())),
        };
        let h = spacing(p, lambda);
        let mut n = (2.0 * PI * rho.max(r1) / h * (1.0 - 1e-12)).ceil().max(16.0) as usize;
        n += n % 2;
        let (radii, radial_weights) = radial_panels(r0, r1, h);
        if n > budget.boundary {
            return Err(GeometryError::Budget { what: "boundary", required: n, cap: budget.boundary, p, lambda_limit: lambda * budget.boundary as f64 / n as f64 }.into());
        }
        let required = n * radii.len();
        if required > budget.domain {
            return Err(GeometryError::Budget { what: "domain", required, cap: budget.domain, p, lambda_limit: lambda * budget.domain as f64 / required as f64 }.into());
        }
        if radii.iter().any(|&r| r == rho) {
            return Err(OperatorError::Collision { target: 0, source_node: 0 });
        }
        let ws = 2.0 * PI * rho / n as f64;
        let dth = 2.0 * PI / n as f64;
        let fft = FftPlanner::new().plan_fft_inverse(n);
        let transfer: Vec<Vec<C64>> = radii
            .par_iter()
            .map(|&r| {
                let d = (r - rho).abs();
                if reach.is_some_and(|m| d >= m) {
                    return vec![C64::new(0.0, 0.0); n];
                }
                let x = [r, 0.0];
                let kern = |th: f64| {
                    let (s, c) = th.sin_cos();
                    let y = [rho * c, rho * s];
                    let w = weight(crate::geometry::dist(x, y));
                    if w == 0.0 {
                        C64::new(0.0, 0.0)
                    } else {
                        pair_kernel(kind, lambda, x, y, [c, s]) * w
                    }
                };
                let mut a: Vec<C64> = (0..n).map(|l| kern(l as f64 * dth) * ws).collect();
                let lattice = a.clone();
                fft.process(&mut a);
                if kind != OperatorKind::DE && d < NEAR_CELLS as f64 * rho * dth {
                    near_correction(&kern, rho, r, n, &lattice, &mut a);
                }
                a
            })
            .collect();
        Ok(Self { kind, lambda, rho, p, n, radii, radial_weights, transfer })
    }

    fn signed(&self, k: usize) -> i64 {
        if k < self.n / 2 {
            k as i64
        } else {
            k as i64 - self.n as i64
        }
    }

    /// Field values at angle 0 on every ring for the density `e^{ikθ}`.
    pub fn mode_transfer(&self, k: i64) -> Vec<C64> {
        let idx = k.rem_euclid(self.n as i64) as usize;
        self.transfer.iter().map(|t| t[idx]).collect()
    }

    pub fn source_weight(&self) -> f64 {
        2.0 * PI * self.rho / self.n as f64
    }

    pub fn target_weight(&self, ring: usize) -> f64 {
        self.radial_weights[ring] * self.radii[ring] * 2.0 * PI / self.n as f64
    }

    /// Squared gain of mode `k`: `Σ_j w_j |τ_j(k)|² / w_s`.
    pub fn mode_gain_sq(&self, k: usize) -> f64 {
        let ws = self.source_weight();
        (0..self.radii.len()).map(|j| self.target_weight(j) * self.transfer[j][k].norm_sqr()).sum::<f64>() / ws
    }

    /// Exact norm as the largest mode gain; also returns the maximizing mode.
    pub fn norm_with_mode(&self) -> (NormEstimate, i64) {
        let mut best = (0.0, 0usize);
        for k in 0..self.n {
            let g = self.mode_gain_sq(k);
            if g > best.0 {
                best = (g, k);
            }
        }
        (NormEstimate { value: best.0.sqrt(), iterations: 0, residual: 0.0, p: self.p, method: NormMethod::FourierModes }, self.signed(best.1))
    }

    pub fn norm(&self) -> NormEstimate {
        self.norm_with_mode().0
    }

    pub fn target_len(&self) -> usize {
        self.n * self.radii.len()
    }

    /// Target node coordinates, ring-major.
    pub fn target_nodes(&self) -> Vec<[f64; 2]> {
        let dth = 2.0 * PI / self.n as f64;
        self.radii
            .iter()
            .flat_map(|&r| (0..self.n).map(move |m| {
                let (s, c) = (m as f64 * dth).sin_cos();
                [r * c, r * s]
            }))
            .collect()
    }

    pub fn target_weights(&self) -> Vec<f64> {
        (0..self.radii.len()).flat_map(|j| std::iter::repeat(self.target_weight(j)).take(self.n)).collect()
    }

    fn forward(&self, f: &[C64], conj: bool) -> Vec<C64> {
        let n = self.n;
        let mut planner = FftPlanner::new();
        let fwd = planner.plan_fft_forward(n);
        let inv = planner.plan_fft_inverse(n);
        let mut spec = f.to_vec();
        fwd.process(&mut spec);
        let mut out = Vec::with_capacity(self.target_len());
        for t in &self.transfer {
            let mut buf: Vec<C64> = spec.iter().zip(t).map(|(a, b)| a * if conj { b.conj() } else { *b }).collect();
            inv.process(&mut buf);
            out.extend(buf.into_iter().map(|v| v / n as f64));
        }
        out
    }

    /// Field on the target nodes (ring-major) from nodal source values.
    pub fn apply(&self, density: &[C64]) -> Result<Vec<C64>> {
        check_len(self.n, density.len())?;
        Ok(self.forward(density, false))
    }
}

fn near_correction(kern: &dyn Fn(f64) -> C64, rho: f64, r: f64, n: usize, lattice: &[C64], out: &mut [C64]) {
    let dth = 2.0 * PI / n as f64;
    let d = (r - rho).abs() / rho;
    let levels = ((4.0 * dth / d).ln() / 5f64.ln()).ceil().max(1.0) as usize + 1;
    // ∫ χ K e^{ikθ}: one Gauss panel per cell, graded toward θ = 0 in the
    // central pair of cells; then minus the lattice sum of the same
    let mut nodes: Vec<(f64, C64)> = Vec::new();
    let mut push = |rule: Vec<(f64, f64)>| {
        for (th, w) in rule {
            nodes.push((th, kern(th) * (rho * w * window(th, dth))));
        }
    };
    push(graded_rule(-dth, dth, 0.0, levels));
    for m in 1..NEAR_CELLS {
        let (a, b) = (m as f64 * dth, (m + 1) as f64 * dth);
        push(graded_rule(a, b, a, 0));
        push(graded_rule(-b, -a, -b, 0));
    }
    for l in -(NEAR_CELLS as i64)..=(NEAR_CELLS as i64) {
        let idx = l.rem_euclid(n as i64) as usize;
        let th = l as f64 * dth;
        nodes.push((th, -lattice[idx] * window(th, dth)));
    }
    let half = (n / 2) as i64;
    for (th, v) in nodes {
        let step = C64::from_polar(1.0, th);
        let mut e = C64::from_polar(1.0, -(half as f64) * th);
        for k in -half..half {
            let idx = k.rem_euclid(n as i64) as usize;
            out[idx] += v * e;
            e *= step;
        }
    }
}

impl LinearOperator for RingOperator {
    fn shape(&self) -> (usize, usize) {
        (self.target_len(), self.n)
    }

    fn matvec(&self, x: &[C64]) -> Vec<C64> {
        let s = self.source_weight().sqrt().recip();
        let f: Vec<C64> = x.iter().map(|v| v * s).collect();
        let mut u = self.forward(&f, false);
        for (j, chunk) in u.chunks_mut(self.n).enumerate() {
            let w = self.target_weight(j).sqrt();
            chunk.iter_mut().for_each(|v| *v *= w);
        }
        u
    }

    fn matvec_adjoint(&self, y: &[C64]) -> Vec<C64> {
        let n = self.n;
        let mut planner = FftPlanner::new();
        let fwd = planner.plan_fft_forward(n);
        let inv = planner.plan_fft_inverse(n);
        let mut acc = vec![C64::new(0.0, 0.0); n];
        for (j, chunk) in y.chunks(n).enumerate() {
            let w = self.target_weight(j).sqrt();
            let mut buf: Vec<C64> = chunk.iter().map(|v| v * w).collect();
            fwd.process(&mut buf);
            for ((a, b), t) in acc.iter_mut().zip(&buf).zip(&self.transfer[j]) {
                *a += b * t.conj();
            }
        }
        inv.process(&mut acc);
        let s = self.source_weight().sqrt().recip() / n as f64;
        acc.iter_mut().for_each(|v| *v *= s);
        acc
    }
}
