use super::{check_len, pair_kernel, LinearOperator, OperatorError, OperatorKind, Result, C64};
use crate::geometry::{dist, gauss_legendre, Panel, Point, QuadratureSet, Rule, PANEL_ORDER};
use crate::kernels;
use crate::specfun;
use rayon::prelude::*;
use rustfft::FftPlanner;
use std::f64::consts::PI;

/// Default cap on dense entries (about 1.9 GB of complex doubles).
pub const MAX_DENSE_ENTRIES: usize = 120_000_000;

const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

/// Dense discretization; `entries[i * cols + j]` is `A_ij`.
#[derive(Debug, Clone, PartialEq)]
pub struct OperatorMatrix {
    pub kind: OperatorKind,
    pub lambda: f64,
    pub p: f64,
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<C64>,
    pub source_weights: Vec<f64>,
    pub target_weights: Vec<f64>,
}

impl OperatorMatrix {
    /// Builds `A` from the weighted entries `E = A W_s`.
    fn from_weighted(kind: OperatorKind, lambda: f64, p: f64, mut e: Vec<C64>, ws: Vec<f64>, wt: Vec<f64>) -> Self {
        let cols = ws.len();
        let rows = wt.len();
        for row in e.chunks_mut(cols) {
            for (v, w) in row.iter_mut().zip(&ws) {
                *v /= *w;
            }
        }
        Self { kind, lambda, p, rows, cols, entries: e, source_weights: ws, target_weights: wt }
    }

    pub fn entry(&self, i: usize, j: usize) -> C64 {
        self.entries[i * self.cols + j]
    }

    /// Field on the target nodes, `Σ_j A_ij w_j f_j`.
    pub fn apply(&self, density: &[C64]) -> Result<Vec<C64>> {
        check_len(self.cols, density.len())?;
        let g: Vec<C64> = density.iter().zip(&self.source_weights).map(|(f, w)| f * w).collect();
        Ok(self
            .entries
            .par_chunks(self.cols)
            .map(|row| row.iter().zip(&g).map(|(a, b)| a * b).sum())
            .collect())
    }

    /// Adjoint between the weighted spaces. With the weights applied inside,
    /// `(A W_s)* = A^H W_t`, so the stored entries are just `A^H`.
    pub fn adjoint(&self) -> OperatorMatrix {
        let mut e = vec![C64::new(0.0, 0.0); self.rows * self.cols];
        for i in 0..self.rows {
            for j in 0..self.cols {
                e[j * self.rows + i] = self.entries[i * self.cols + j].conj();
            }
        }
        OperatorMatrix {
            kind: self.kind,
            lambda: self.lambda,
            p: self.p,
            rows: self.cols,
            cols: self.rows,
            entries: e,
            source_weights: self.target_weights.clone(),
            target_weights: self.source_weights.clone(),
        }
    }
}

impl LinearOperator for OperatorMatrix {
    fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    fn matvec(&self, x: &[C64]) -> Vec<C64> {
        let g: Vec<C64> = x.iter().zip(&self.source_weights).map(|(v, w)| v * w.sqrt()).collect();
        self.entries
            .par_chunks(self.cols)
            .zip(self.target_weights.par_iter())
            .map(|(row, w)| row.iter().zip(&g).map(|(a, b)| a * b).sum::<C64>() * w.sqrt())
            .collect()
    }

    fn matvec_adjoint(&self, y: &[C64]) -> Vec<C64> {
        let mut z = vec![C64::new(0.0, 0.0); self.cols];
        for (i, row) in self.entries.chunks(self.cols).enumerate() {
            let yi = y[i] * self.target_weights[i].sqrt();
            for (zj, a) in z.iter_mut().zip(row) {
                *zj += a.conj() * yi;
            }
        }
        for (zj, w) in z.iter_mut().zip(&self.source_weights) {
            *zj *= w.sqrt();
        }
        z
    }
}

fn same_nodes(a: &QuadratureSet, b: &QuadratureSet) -> bool {
    a.nodes == b.nodes && a.weights == b.weights
}

/// Assembles `kind` from `source` (a boundary rule) to `target` with the default entry cap.
pub fn assemble(kind: OperatorKind, lambda: f64, source: &QuadratureSet, target: &QuadratureSet) -> Result<OperatorMatrix> {
    assemble_with_budget(kind, lambda, source, target, MAX_DENSE_ENTRIES)
}

pub fn assemble_with_budget(
    kind: OperatorKind,
    lambda: f64,
    source: &QuadratureSet,
    target: &QuadratureSet,
    max_entries: usize,
) -> Result<OperatorMatrix> {
    if !(lambda > 0.0) {
        return Err(OperatorError::Kernel(kernels::KernelError::Wavenumber(lambda)));
    }
    if source.normals.len() != source.len() {
        return Err(OperatorError::Unsupported("source must be a boundary quadrature".into()));
    }
    let (rows, cols) = (target.len(), source.len());
    if rows.saturating_mul(cols) > max_entries {
        return Err(OperatorError::Budget { rows, cols, cap: max_entries });
    }
    let same = same_nodes(source, target);
    let e = if kind.is_boundary_operator() {
        if !same {
            return Err(OperatorError::Unsupported(format!("{kind} needs the same source and target boundary rule")));
        }
        match &source.rule {
            Rule::PeriodicTrapezoid { n } => kress(kind, lambda, source, n)?,
            Rule::GaussPanels { panels } => panel_product(kind, lambda, source, panels),
            other => return Err(OperatorError::Unsupported(format!("boundary rule {other:?}"))),
        }
    } else if same && kind == OperatorKind::DE {
        plain(kind, lambda, source, target, true)?
    } else {
        plain(kind, lambda, source, target, false)?
    };
    Ok(OperatorMatrix::from_weighted(kind, lambda, source.p, e, source.weights.clone(), target.weights.clone()))
}

/// Potential with the kernel multiplied by `weight(|x - y|)`, by the plain
/// rule. Coincident nodes are skipped when the weight vanishes there.
pub fn assemble_weighted(
    kind: OperatorKind,
    lambda: f64,
    source: &QuadratureSet,
    target: &QuadratureSet,
    weight: &(dyn Fn(f64) -> f64 + Sync),
    max_entries: usize,
) -> Result<OperatorMatrix> {
    if kind.is_boundary_operator() {
        return Err(OperatorError::Unsupported(format!("weighted {kind} needs singular quadrature")));
    }
    let (rows, cols) = (target.len(), source.len());
    if rows.saturating_mul(cols) > max_entries {
        return Err(OperatorError::Budget { rows, cols, cap: max_entries });
    }
    let mut e = vec![C64::new(0.0, 0.0); rows * cols];
    e.par_chunks_mut(cols).enumerate().for_each(|(i, row)| {
        let x = target.nodes[i];
        for j in 0..cols {
            let y = source.nodes[j];
            let w = weight(dist(x, y));
            if w != 0.0 && x != y {
                row[j] = pair_kernel(kind, lambda, x, y, source.normals[j]) * (w * source.weights[j]);
            }
        }
    });
    Ok(OperatorMatrix::from_weighted(kind, lambda, source.p, e, source.weights.clone(), target.weights.clone()))
}

fn plain(kind: OperatorKind, lambda: f64, s: &QuadratureSet, t: &QuadratureSet, allow_diag: bool) -> Result<Vec<C64>> {
    let cols = s.len();
    let mut e = vec![C64::new(0.0, 0.0); t.len() * cols];
    let collision = std::sync::Mutex::new(None);
    e.par_chunks_mut(cols).enumerate().for_each(|(i, row)| {
        let x = t.nodes[i];
        for j in 0..cols {
            let y = s.nodes[j];
            if x == y {
                if allow_diag {
                    row[j] = C64::new(s.weights[j] / (4.0 * PI), 0.0);
                } else {
                    *collision.lock().unwrap() = Some((i, j));
                }
                continue;
            }
            row[j] = pair_kernel(kind, lambda, x, y, s.normals[j]) * s.weights[j];
        }
    });
    if let Some((target, source)) = collision.into_inner().unwrap() {
        return Err(OperatorError::Collision { target, source_node: source });
    }
    Ok(e)
}

/// `R_d` for the logarithmic product rule on `2n` equispaced nodes.
pub(crate) fn kress_weights(big_n: usize) -> Vec<f64> {
    let n = big_n / 2;
    let mut a = vec![C64::new(0.0, 0.0); big_n];
    for (m, v) in a.iter_mut().enumerate().take(n).skip(1) {
        *v = C64::new(1.0 / m as f64, 0.0);
    }
    let mut planner = FftPlanner::new();
    planner.plan_fft_inverse(big_n).process(&mut a);
    let nf = n as f64;
    (0..big_n)
        .map(|d| {
            let alt = if d % 2 == 0 { 1.0 } else { -1.0 };
            -(2.0 * PI / nf) * a[d].re - PI / (nf * nf) * alt
        })
        .collect()
}

/// Weighted entries `R_{i-j} M1_ij + (π/n) M2_ij` on one closed piece, plus
/// plain trapezoid blocks between distinct pieces.
fn kress(kind: OperatorKind, lambda: f64, q: &QuadratureSet, counts: &[usize]) -> Result<Vec<C64>> {
    let total = q.len();
    let mut offsets = vec![0];
    for c in counts {
        offsets.push(offsets.last().unwrap() + c);
    }
    let piece_of: Vec<usize> = (0..total).map(|i| offsets.partition_point(|&o| o <= i) - 1).collect();
    let rs: Vec<Vec<f64>> = counts.iter().map(|&n| kress_weights(n)).collect();
    let mut e = vec![C64::new(0.0, 0.0); total * total];
    e.par_chunks_mut(total).enumerate().for_each(|(i, row)| {
        let pi = piece_of[i];
        let x = q.nodes[i];
        let n_big = counts[pi];
        let half_n = (n_big / 2) as f64;
        let pi_over_n = PI / half_n;
        for j in 0..total {
            let y = q.nodes[j];
            if piece_of[j] != pi {
                row[j] = pair_kernel(kind, lambda, x, y, q.normals[j]) * q.weights[j];
                continue;
            }
            let li = i - offsets[pi];
            let lj = j - offsets[pi];
            // speed with respect to the rescaled parameter on [0, 2π)
            let speed_j = q.weights[j] / pi_over_n;
            if i == j {
                row[j] = kress_diagonal(kind, lambda, speed_j, q.curvature[i], rs[pi][0], pi_over_n);
                continue;
            }
            let d = (li as isize - lj as isize).rem_euclid(n_big as isize) as usize;
            let dt = 2.0 * PI * d as f64 / n_big as f64;
            row[j] = kress_offdiagonal(kind, lambda, x, y, q.normals[j], speed_j, dt, rs[pi][d], pi_over_n);
        }
    });
    Ok(e)
}

/// Diagonal weighted entry of the product rule; `speed` is taken with
/// respect to a parameter on `[0, 2π)`.
pub(crate) fn kress_diagonal(kind: OperatorKind, lambda: f64, speed: f64, curvature: f64, r0: f64, pi_over_n: f64) -> C64 {
    match kind {
        OperatorKind::Slo => {
            let m1 = -speed / (4.0 * PI);
            let m2 = C64::new(-EULER_GAMMA / (2.0 * PI) - (lambda * speed / 2.0).ln() / (2.0 * PI), 0.25) * speed;
            r0 * m1 + pi_over_n * m2
        }
        _ => C64::new(-curvature * speed / (4.0 * PI) * pi_over_n, 0.0),
    }
}

/// Off-diagonal weighted entry of the product rule at parameter offset `dt`.
#[allow(clippy::too_many_arguments)]
pub(crate) fn kress_offdiagonal(
    kind: OperatorKind,
    lambda: f64,
    x: Point,
    y: Point,
    nu_y: Point,
    speed: f64,
    dt: f64,
    r_d: f64,
    pi_over_n: f64,
) -> C64 {
    let log4s2 = (4.0 * (0.5 * dt).sin().powi(2)).ln();
    let r = dist(x, y);
    let (j0, j1, _, _) = specfun::jy01(lambda * r);
    let full = pair_kernel(kind, lambda, x, y, nu_y) * speed;
    let m1 = match kind {
        OperatorKind::Slo => -j0 / (4.0 * PI) * speed,
        _ => {
            let proj = (x[0] - y[0]) * nu_y[0] + (x[1] - y[1]) * nu_y[1];
            -lambda / (4.0 * PI) * proj * j1 / r * speed
        }
    };
    let m2 = full - m1 * log4s2;
    r_d * m1 + pi_over_n * m2
}

/// Barycentric weights for the order-16 Gauss nodes.
fn bary_weights(x: &[f64]) -> Vec<f64> {
    (0..x.len())
        .map(|j| {
            let mut p = 1.0;
            for k in 0..x.len() {
                if k != j {
                    p *= x[j] - x[k];
                }
            }
            1.0 / p
        })
        .collect()
}

fn lagrange(nodes: &[f64], bw: &[f64], t: f64, out: &mut [f64]) {
    let mut denom = 0.0;
    for k in 0..nodes.len() {
        let d = t - nodes[k];
        if d == 0.0 {
            out.iter_mut().for_each(|v| *v = 0.0);
            out[k] = 1.0;
            return;
        }
        out[k] = bw[k] / d;
        denom += out[k];
    }
    out.iter_mut().for_each(|v| *v /= denom);
}

/// Gauss nodes on `[a, b]` graded geometrically toward `c ∈ [a, b]`.
pub(crate) fn graded_rule(a: f64, b: f64, c: f64, levels: usize) -> Vec<(f64, f64)> {
    const RATIO: f64 = 0.2;
    let (x, w) = gauss_legendre(PANEL_ORDER);
    let mut out = Vec::with_capacity(2 * (levels + 1) * PANEL_ORDER);
    let mut push = |lo: f64, hi: f64| {
        let half = 0.5 * (hi - lo);
        for (xi, wi) in x.iter().zip(w) {
            out.push((lo + half * (xi + 1.0), half * wi));
        }
    };
    for (end, sign) in [(b, 1.0), (a, -1.0)] {
        let len = (end - c) * sign;
        if len <= 0.0 {
            continue;
        }
        let mut outer = len;
        for _ in 0..levels {
            let inner = outer * RATIO;
            let (lo, hi) = if sign > 0.0 { (c + inner, c + outer) } else { (c - outer, c - inner) };
            push(lo, hi);
            outer = inner;
        }
        let (lo, hi) = if sign > 0.0 { (c, c + outer) } else { (c - outer, c) };
        push(lo, hi);
    }
    out
}

/// Product integration against the panel's Lagrange basis on near panels,
/// plain Gauss weights elsewhere.
fn panel_product(kind: OperatorKind, lambda: f64, q: &QuadratureSet, panels: &[Panel]) -> Vec<C64> {
    let total = q.len();
    let (gx, _) = gauss_legendre(PANEL_ORDER);
    let bw = bary_weights(gx);
    let panel_len: Vec<f64> = panels.iter().map(|p| q.weights[p.start..p.start + PANEL_ORDER].iter().sum()).collect();
    let mut e = vec![C64::new(0.0, 0.0); total * total];
    e.par_chunks_mut(total).enumerate().for_each(|(i, row)| {
        let x = q.nodes[i];
        for j in 0..total {
            if i != j {
                row[j] = pair_kernel(kind, lambda, x, q.nodes[j], q.normals[j]) * q.weights[j];
            }
        }
        let mut basis = vec![0.0; PANEL_ORDER];
        for (pk, panel) in panels.iter().enumerate() {
            let range = panel.start..panel.start + PANEL_ORDER;
            let nearest = range.clone().map(|j| dist(x, q.nodes[j])).fold(f64::INFINITY, f64::min);
            if nearest >= 0.6 * panel_len[pk] {
                continue;
            }
            // local coordinate u in [-1, 1]
            let c = if range.contains(&i) {
                gx[i - panel.start]
            } else {
                let d0 = dist(x, interp_point(q, panel, gx, &bw, -1.0, &mut basis));
                let d1 = dist(x, interp_point(q, panel, gx, &bw, 1.0, &mut basis));
                if d0 < d1 {
                    -1.0
                } else {
                    1.0
                }
            };
            let half = 0.5 * (panel.t1 - panel.t0);
            let normal_sign = {
                let d1 = q.params[panel.start].d1;
                let right = [d1[1], -d1[0]];
                if right[0] * q.normals[panel.start][0] + right[1] * q.normals[panel.start][1] >= 0.0 {
                    1.0
                } else {
                    -1.0
                }
            };
            let mut acc = [C64::new(0.0, 0.0); PANEL_ORDER];
            for (u, wu) in graded_rule(-1.0, 1.0, c, 12) {
                lagrange(gx, &bw, u, &mut basis);
                let mut y = [0.0, 0.0];
                let mut d1 = [0.0, 0.0];
                for (k, &l) in basis.iter().enumerate() {
                    let node = q.nodes[panel.start + k];
                    let der = q.params[panel.start + k].d1;
                    y[0] += l * node[0];
                    y[1] += l * node[1];
                    d1[0] += l * der[0];
                    d1[1] += l * der[1];
                }
                let speed = d1[0].hypot(d1[1]);
                let nu = [normal_sign * d1[1] / speed, -normal_sign * d1[0] / speed];
                if y == x {
                    continue;
                }
                let kv = pair_kernel(kind, lambda, x, y, nu) * (speed * half * wu);
                for k in 0..PANEL_ORDER {
                    acc[k] += kv * basis[k];
                }
            }
            row[range].copy_from_slice(&acc);
        }
    });
    e
}

fn interp_point(q: &QuadratureSet, panel: &Panel, gx: &[f64], bw: &[f64], u: f64, basis: &mut [f64]) -> Point {
    lagrange(gx, bw, u, basis);
    let mut y = [0.0, 0.0];
    for (k, &l) in basis.iter().enumerate() {
        y[0] += l * q.nodes[panel.start + k][0];
        y[1] += l * q.nodes[panel.start + k][1];
    }
    y
}
