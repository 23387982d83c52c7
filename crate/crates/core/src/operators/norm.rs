use super::{LinearOperator, OperatorError, Result, C64};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum NormMethod {
    PowerIteration,
    /// Lanczos on `B^H B` from the power-iteration start vector.
    Lanczos,
    /// Exact block-diagonalization by angular Fourier modes.
    FourierModes,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct NormEstimate {
    pub value: f64,
    pub iterations: usize,
    pub residual: f64,
    pub p: f64,
    pub method: NormMethod,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NormOptions {
    pub tol: f64,
    pub max_iter: usize,
    pub p: f64,
}

impl Default for NormOptions {
    fn default() -> Self {
        Self { tol: 1e-8, max_iter: 1000, p: f64::NAN }
    }
}

/// All-ones plus a fixed Weyl-sequence perturbation, so that no angular
/// mode of a symmetric geometry is missing from the start vector.
pub fn start_vector(n: usize) -> Vec<C64> {
    const GOLDEN: f64 = 0.618_033_988_749_894_8;
    const SILVER: f64 = 0.414_213_562_373_095_1;
    (0..n)
        .map(|i| {
            let a = (i as f64 * GOLDEN).fract() - 0.5;
            let b = (i as f64 * SILVER).fract() - 0.5;
            C64::new(1.0 + a, b)
        })
        .collect()
}

fn l2(v: &[C64]) -> f64 {
    v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

/// Largest singular value of `B` by power iteration on `B^H B`.
pub fn operator_norm(op: &dyn LinearOperator, opts: &NormOptions) -> Result<NormEstimate> {
    let (_, cols) = op.shape();
    let mut x = start_vector(cols);
    let n0 = l2(&x);
    x.iter_mut().for_each(|v| *v /= n0);
    let mut sigma = 0.0f64;
    let mut residual = f64::INFINITY;
    for it in 1..=opts.max_iter {
        let y = op.matvec(&x);
        let next = l2(&y);
        if next == 0.0 {
            return Ok(NormEstimate { value: 0.0, iterations: it, residual: 0.0, p: opts.p, method: NormMethod::PowerIteration });
        }
        residual = (next - sigma).abs() / next;
        sigma = next;
        if residual <= opts.tol && it > 1 {
            return Ok(NormEstimate { value: sigma, iterations: it, residual, p: opts.p, method: NormMethod::PowerIteration });
        }
        let mut z = op.matvec_adjoint(&y);
        let nz = l2(&z);
        z.iter_mut().for_each(|v| *v /= nz);
        x = z;
    }
    Err(OperatorError::NoConvergence { value: sigma, residual, iterations: opts.max_iter })
}

fn dotc(a: &[C64], b: &[C64]) -> C64 {
    a.iter().zip(b).map(|(x, y)| x.conj() * y).sum()
}

/// Number of eigenvalues of the symmetric tridiagonal `(a, b)` below `x`.
fn sturm_count(a: &[f64], b: &[f64], x: f64) -> usize {
    let mut count = 0;
    let mut q = 1.0;
    for i in 0..a.len() {
        let off = if i == 0 { 0.0 } else { b[i - 1] * b[i - 1] };
        q = a[i] - x - if i == 0 { 0.0 } else { off / q };
        if q == 0.0 {
            q = -f64::EPSILON * (a[i].abs() + x.abs()).max(f64::MIN_POSITIVE);
        }
        if q < 0.0 {
            count += 1;
        }
    }
    count
}

/// Largest eigenvalue of a symmetric tridiagonal matrix, by bisection.
fn tridiag_max(a: &[f64], b: &[f64]) -> f64 {
    let n = a.len();
    let mut hi = f64::NEG_INFINITY;
    let mut lo = f64::INFINITY;
    for i in 0..n {
        let r = if i > 0 { b[i - 1].abs() } else { 0.0 } + if i + 1 < n { b[i].abs() } else { 0.0 };
        hi = hi.max(a[i] + r);
        lo = lo.min(a[i] - r);
    }
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if sturm_count(a, b, mid) < n {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    hi
}

/// Largest singular value of `B` by Lanczos on `B^H B` with full
/// reorthogonalization. Clustered top singular values, which stall plain
/// power iteration, cost only a few extra steps here. `max_iter` caps the
/// Krylov dimension; the estimate is accepted once it changes by less than
/// `tol` (relative) over three consecutive steps.
pub fn lanczos_norm(op: &dyn LinearOperator, opts: &NormOptions) -> Result<NormEstimate> {
    let (_, cols) = op.shape();
    let mut v = start_vector(cols);
    let n0 = l2(&v);
    v.iter_mut().for_each(|z| *z /= n0);
    let mut basis: Vec<Vec<C64>> = Vec::new();
    let (mut alpha, mut beta) = (Vec::new(), Vec::new());
    let mut theta = 0.0f64;
    let mut calm = 0;
    let mut residual = f64::INFINITY;
    let done = |theta: f64, it: usize, residual: f64| NormEstimate {
        value: theta.max(0.0).sqrt(),
        iterations: it,
        residual,
        p: opts.p,
        method: NormMethod::Lanczos,
    };
    for it in 1..=opts.max_iter.min(cols) {
        let mut w = op.matvec_adjoint(&op.matvec(&v));
        let a = dotc(&v, &w).re;
        alpha.push(a);
        basis.push(v);
        // two passes of classical Gram-Schmidt against the whole basis
        for _ in 0..2 {
            for q in &basis {
                let c = dotc(q, &w);
                w.iter_mut().zip(q).for_each(|(x, y)| *x -= c * y);
            }
        }
        let next = tridiag_max(&alpha, &beta);
        if next > 0.0 {
            residual = (next - theta).abs() / next;
        }
        theta = next;
        calm = if residual <= opts.tol { calm + 1 } else { 0 };
        let b = l2(&w);
        if theta == 0.0 && it == 1 && b == 0.0 {
            return Ok(done(0.0, it, 0.0));
        }
        if calm >= 3 || b <= 1e-14 * theta.abs().sqrt().max(f64::MIN_POSITIVE) {
            return Ok(done(theta, it, residual));
        }
        beta.push(b);
        v = w.into_iter().map(|z| z / b).collect();
    }
    if opts.max_iter >= cols {
        return Ok(done(theta, cols, residual));
    }
    Err(OperatorError::NoConvergence { value: theta.max(0.0).sqrt(), residual, iterations: opts.max_iter })
}
