use super::{check_len, pair_kernel, LinearOperator, OperatorError, OperatorKind, Result, C64};
use crate::geometry::{gauss_legendre, spacing, Budget, GeometryError};
use rayon::prelude::*;
use rustfft::{Fft, FftPlanner};
use serde::{Deserialize, Serialize};
use std::sync::Arc;

/// A side of the box `[-1, 1] × [0, 1]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum BoxSide {
    Bottom,
    Right,
    Top,
    Left,
}

impl BoxSide {
    pub const ALL: [BoxSide; 4] = [BoxSide::Bottom, BoxSide::Right, BoxSide::Top, BoxSide::Left];

    fn horizontal(self) -> bool {
        matches!(self, BoxSide::Bottom | BoxSide::Top)
    }
}

/// Toeplitz convolution of length-`n` sequences with kernels given on
/// offsets `-(n-1)..=(n-1)`, done by zero-padded FFT.
#[derive(Clone)]
pub(crate) struct ToeplitzBank {
    pub n: usize,
    len: usize,
    fwd: Arc<dyn Fft<f64>>,
    inv: Arc<dyn Fft<f64>>,
    /// Transformed kernels, one per row.
    pub spectra: Vec<Vec<C64>>,
}

impl std::fmt::Debug for ToeplitzBank {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("ToeplitzBank").field("n", &self.n).field("rows", &self.spectra.len()).finish()
    }
}

impl ToeplitzBank {
    /// `kernel(row, d)` for `d` in `-(n-1)..=(n-1)`.
    pub fn new(n: usize, rows: usize, kernel: impl Fn(usize, i64) -> C64 + Sync) -> Self {
        let len = (2 * n).next_power_of_two();
        let mut planner = FftPlanner::new();
        let fwd = planner.plan_fft_forward(len);
        let inv = planner.plan_fft_inverse(len);
        let spectra = (0..rows)
            .into_par_iter()
            .map(|row| {
                let mut buf = vec![C64::new(0.0, 0.0); len];
                for d in -(n as i64 - 1)..=(n as i64 - 1) {
                    buf[d.rem_euclid(len as i64) as usize] = kernel(row, d);
                }
                fwd.process(&mut buf);
                buf
            })
            .collect();
        Self { n, len, fwd, inv, spectra }
    }

    pub fn transform(&self, f: &[C64]) -> Vec<C64> {
        let mut buf = vec![C64::new(0.0, 0.0); self.len];
        buf[..f.len()].copy_from_slice(f);
        self.fwd.process(&mut buf);
        buf
    }

    /// `out[i] += Σ_i' k_row[i - i'] f[i']` given the transform of `f`.
    pub fn accumulate(&self, row: usize, f_hat: &[C64], conj: bool, out: &mut [C64]) {
        let mut buf: Vec<C64> = f_hat
            .iter()
            .zip(&self.spectra[row])
            .map(|(a, b)| a * if conj { b.conj() } else { *b })
            .collect();
        self.inv.process(&mut buf);
        let s = 1.0 / self.len as f64;
        for (o, v) in out.iter_mut().zip(&buf[..self.n]) {
            *o += v * s;
        }
    }
}

/// A potential from selected sides of the box `[-1, 1] × [0, 1]` into the
/// cell centres of a uniform grid of spacing `h`. Sources sit at the cell
/// centres along each side.
#[derive(Debug, Clone)]
pub struct BoxOperator {
    pub kind: OperatorKind,
    pub lambda: f64,
    pub p: f64,
    pub h: f64,
    pub nx: usize,
    pub ny: usize,
    pub sides: Vec<BoxSide>,
    horiz: Option<ToeplitzBank>,
    vert: Option<ToeplitzBank>,
}

/// Offsets (in cells) treated with cell-averaged kernels.
const NEAR_OFFSET: i64 = 4;
const NEAR_DEPTH: usize = 4;

fn box_kernel(kind: OperatorKind, lambda: f64, h: f64, depth: usize, d: i64) -> C64 {
    let z = (depth as f64 + 0.5) * h;
    // target at (d h, z) above a source at the origin with outward normal (0, -1)
    let eval = |s: f64| pair_kernel(kind, lambda, [d as f64 * h - s, z], [0.0, 0.0], [0.0, -1.0]);
    if depth < NEAR_DEPTH && d.abs() <= NEAR_OFFSET && kind != OperatorKind::DE {
        let (x, w) = gauss_legendre(64);
        x.iter().zip(w).map(|(xi, wi)| eval(0.5 * h * xi) * (0.5 * h * wi)).sum()
    } else {
        eval(0.0) * h
    }
}

impl BoxOperator {
    pub fn new(kind: OperatorKind, lambda: f64, p: f64, sides: &[BoxSide], budget: &Budget) -> Result<Self> {
        if !matches!(kind, OperatorKind::Slp | OperatorKind::Dlp | OperatorKind::DE) {
            return Err(OperatorError::Unsupported(format!("{kind} is not a potential")));
        }
        if !(p >= 4.0) || !(lambda > 0.0) {
            return Err(GeometryError::Invalid(format!("need p >= 4 and lambda > 0 (p={p}, lambda={lambda})")).into());
        }
        if sides.is_empty() {
            return Err(OperatorError::Unsupported("no active sides".into()));
        }
        let ny = (1.0 / spacing(p, lambda)).ceil() as usize;
        let nx = 2 * ny;
        let h = 1.0 / ny as f64;
        let required = nx * ny;
        if required > budget.domain {
            return Err(GeometryError::Budget { what: "domain", required, cap: budget.domain, p, lambda_limit: lambda * (budget.domain as f64 / required as f64).sqrt() }.into());
        }
        let boundary: usize = sides.iter().map(|s| if s.horizontal() { nx } else { ny }).sum();
        if boundary > budget.boundary {
            return Err(GeometryError::Budget { what: "boundary", required: boundary, cap: budget.boundary, p, lambda_limit: lambda * budget.boundary as f64 / boundary as f64 }.into());
        }
        let horiz = sides
            .iter()
            .any(|s| s.horizontal())
            .then(|| ToeplitzBank::new(nx, ny, |c, d| box_kernel(kind, lambda, h, c, d)));
        let vert = sides
            .iter()
            .any(|s| !s.horizontal())
            .then(|| ToeplitzBank::new(ny, nx, |c, d| box_kernel(kind, lambda, h, c, d)));
        Ok(Self { kind, lambda, p, h, nx, ny, sides: sides.to_vec(), horiz, vert })
    }

    pub fn source_len(&self) -> usize {
        self.sides.iter().map(|s| if s.horizontal() { self.nx } else { self.ny }).sum()
    }

    pub fn target_len(&self) -> usize {
        self.nx * self.ny
    }

    /// Source node positions in the order used by densities.
    pub fn source_nodes(&self) -> Vec<[f64; 2]> {
        let h = self.h;
        let mut out = Vec::new();
        for s in &self.sides {
            match s {
                BoxSide::Bottom => out.extend((0..self.nx).map(|i| [-1.0 + (i as f64 + 0.5) * h, 0.0])),
                BoxSide::Top => out.extend((0..self.nx).map(|i| [-1.0 + (i as f64 + 0.5) * h, 1.0])),
                BoxSide::Left => out.extend((0..self.ny).map(|j| [-1.0, (j as f64 + 0.5) * h])),
                BoxSide::Right => out.extend((0..self.ny).map(|j| [1.0, (j as f64 + 0.5) * h])),
            }
        }
        out
    }

    /// Target cell centres, row-major in `y`.
    pub fn target_nodes(&self) -> Vec<[f64; 2]> {
        let h = self.h;
        (0..self.ny)
            .flat_map(|j| (0..self.nx).map(move |i| [-1.0 + (i as f64 + 0.5) * h, (j as f64 + 0.5) * h]))
            .collect()
    }

    /// `u = E f` with `E = A W_s`.
    fn field(&self, f: &[C64]) -> Vec<C64> {
        let (nx, ny) = (self.nx, self.ny);
        let mut u = vec![C64::new(0.0, 0.0); nx * ny];
        let mut offset = 0;
        for side in &self.sides {
            if side.horizontal() {
                let bank = self.horiz.as_ref().unwrap();
                let fh = bank.transform(&f[offset..offset + nx]);
                u.par_chunks_mut(nx).enumerate().for_each(|(j, row)| {
                    let c = if *side == BoxSide::Bottom { j } else { ny - 1 - j };
                    bank.accumulate(c, &fh, false, row);
                });
                offset += nx;
            } else {
                let bank = self.vert.as_ref().unwrap();
                let fh = bank.transform(&f[offset..offset + ny]);
                let cols: Vec<Vec<C64>> = (0..nx)
                    .into_par_iter()
                    .map(|i| {
                        let c = if *side == BoxSide::Left { i } else { nx - 1 - i };
                        let mut col = vec![C64::new(0.0, 0.0); ny];
                        bank.accumulate(c, &fh, false, &mut col);
                        col
                    })
                    .collect();
                for (i, col) in cols.iter().enumerate() {
                    for (j, v) in col.iter().enumerate() {
                        u[j * nx + i] += v;
                    }
                }
                offset += ny;
            }
        }
        u
    }

    /// `E^H g`.
    fn field_adjoint(&self, g: &[C64]) -> Vec<C64> {
        let (nx, ny) = (self.nx, self.ny);
        let mut out = Vec::with_capacity(self.source_len());
        for side in &self.sides {
            if side.horizontal() {
                let bank = self.horiz.as_ref().unwrap();
                let parts: Vec<Vec<C64>> = (0..ny)
                    .into_par_iter()
                    .map(|j| {
                        let c = if *side == BoxSide::Bottom { j } else { ny - 1 - j };
                        let gh = bank.transform(&g[j * nx..(j + 1) * nx]);
                        let mut acc = vec![C64::new(0.0, 0.0); nx];
                        bank.accumulate(c, &gh, true, &mut acc);
                        acc
                    })
                    .collect();
                let mut acc = vec![C64::new(0.0, 0.0); nx];
                for p in parts {
                    acc.iter_mut().zip(p).for_each(|(a, b)| *a += b);
                }
                out.extend(acc);
            } else {
                let bank = self.vert.as_ref().unwrap();
                let parts: Vec<Vec<C64>> = (0..nx)
                    .into_par_iter()
                    .map(|i| {
                        let c = if *side == BoxSide::Left { i } else { nx - 1 - i };
                        let col: Vec<C64> = (0..ny).map(|j| g[j * nx + i]).collect();
                        let gh = bank.transform(&col);
                        let mut acc = vec![C64::new(0.0, 0.0); ny];
                        bank.accumulate(c, &gh, true, &mut acc);
                        acc
                    })
                    .collect();
                let mut acc = vec![C64::new(0.0, 0.0); ny];
                for p in parts {
                    acc.iter_mut().zip(p).for_each(|(a, b)| *a += b);
                }
                out.extend(acc);
            }
        }
        out
    }

    /// Field at the target nodes from nodal densities on the active sides.
    pub fn apply(&self, density: &[C64]) -> Result<Vec<C64>> {
        check_len(self.source_len(), density.len())?;
        Ok(self.field(density))
    }
}

impl LinearOperator for BoxOperator {
    fn shape(&self) -> (usize, usize) {
        (self.target_len(), self.source_len())
    }

    fn matvec(&self, x: &[C64]) -> Vec<C64> {
        let s = self.h.sqrt().recip();
        let f: Vec<C64> = x.iter().map(|v| v * s).collect();
        let mut u = self.field(&f);
        u.iter_mut().for_each(|v| *v *= self.h);
        u
    }

    fn matvec_adjoint(&self, y: &[C64]) -> Vec<C64> {
        let g: Vec<C64> = y.iter().map(|v| v * self.h).collect();
        let mut z = self.field_adjoint(&g);
        let s = self.h.sqrt().recip();
        z.iter_mut().for_each(|v| *v *= s);
        z
    }
}
