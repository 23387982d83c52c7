use super::dense::{kress_diagonal, kress_offdiagonal, kress_weights};
use super::{check_len, pair_kernel, LinearOperator, NormEstimate, NormMethod, OperatorError, OperatorKind, Result, C64};
use crate::geometry::{Budget, GeometryError};
use rustfft::FftPlanner;
use std::f64::consts::PI;

/// Boundary operator on a circle with `n` equispaced nodes. Every kind is
/// circulant there, so the weighted operator is diagonal in the discrete
/// Fourier basis with eigenvalues `symbol[k]`.
#[derive(Debug, Clone)]
pub struct CirculantOperator {
    pub kind: OperatorKind,
    pub lambda: f64,
    pub radius: f64,
    pub p: f64,
    /// Weighted first row `E_{0,d} = A_{0,d} w`.
    pub first_row: Vec<C64>,
    /// `symbol[k] = Σ_d E_{0,d} e^{2πi dk/n}`.
    pub symbol: Vec<C64>,
}

impl CirculantOperator {
    /// Node count for density `p` at wavenumber `lambda` on a circle of this radius.
    pub fn node_count(radius: f64, p: f64, lambda: f64) -> usize {
        let h = crate::geometry::spacing(p, lambda);
        let mut n = (2.0 * PI * radius / h * (1.0 - 1e-12)).ceil().max(16.0) as usize;
        n += n % 2;
        n
    }

    pub fn circle(kind: OperatorKind, lambda: f64, radius: f64, p: f64, budget: &Budget) -> Result<Self> {
        if !(p >= 4.0) {
            return Err(GeometryError::Invalid(format!("points per wavelength must be >= 4, got {p}")).into());
        }
        let n = Self::node_count(radius, p, lambda);
        if n > budget.boundary {
            return Err(GeometryError::Budget {
                what: "boundary",
                required: n,
                cap: budget.boundary,
                p,
                lambda_limit: lambda * budget.boundary as f64 / n as f64,
            }
            .into());
        }
        Self::with_nodes(kind, lambda, radius, n, p)
    }

    pub fn with_nodes(kind: OperatorKind, lambda: f64, radius: f64, n: usize, p: f64) -> Result<Self> {
        if n < 4 || n % 2 == 1 {
            return Err(OperatorError::Unsupported(format!("circulant rule needs an even node count, got {n}")));
        }
        let w = 2.0 * PI * radius / n as f64;
        let pi_over_n = 2.0 * PI / n as f64;
        let x = [radius, 0.0];
        let rs = kress_weights(n);
        let mut row = vec![C64::new(0.0, 0.0); n];
        for (d, slot) in row.iter_mut().enumerate() {
            let t = 2.0 * PI * d as f64 / n as f64;
            let (s, c) = t.sin_cos();
            let y = [radius * c, radius * s];
            let nu = [c, s];
            *slot = match kind {
                OperatorKind::Slo | OperatorKind::Dlo => {
                    if d == 0 {
                        kress_diagonal(kind, lambda, radius, 1.0 / radius, rs[0], pi_over_n)
                    } else {
                        kress_offdiagonal(kind, lambda, x, y, nu, radius, t, rs[d], pi_over_n)
                    }
                }
                OperatorKind::DE => {
                    if d == 0 {
                        C64::new(w / (4.0 * PI), 0.0)
                    } else {
                        pair_kernel(kind, lambda, x, y, nu) * w
                    }
                }
                _ => return Err(OperatorError::Unsupported(format!("{kind} is not a boundary operator"))),
            };
        }
        let mut symbol = row.clone();
        FftPlanner::new().plan_fft_inverse(n).process(&mut symbol);
        Ok(Self { kind, lambda, radius, p, first_row: row, symbol })
    }

    pub fn len(&self) -> usize {
        self.first_row.len()
    }

    pub fn is_empty(&self) -> bool {
        self.first_row.is_empty()
    }

    /// Eigenvalue on the mode `e^{ikθ}`, `k` taken modulo `n`.
    pub fn eigenvalue(&self, k: i64) -> C64 {
        self.symbol[k.rem_euclid(self.len() as i64) as usize]
    }

    /// Exact spectral norm: the operator is normal, so it is `max |symbol|`.
    pub fn norm(&self) -> NormEstimate {
        let value = self.symbol.iter().map(|z| z.norm()).fold(0.0, f64::max);
        NormEstimate { value, iterations: 0, residual: 0.0, p: self.p, method: NormMethod::FourierModes }
    }

    fn convolve(&self, x: &[C64], conj: bool) -> Vec<C64> {
        let n = self.len();
        let mut planner = FftPlanner::new();
        let mut buf = x.to_vec();
        planner.plan_fft_forward(n).process(&mut buf);
        for (b, s) in buf.iter_mut().zip(&self.symbol) {
            *b *= if conj { s.conj() } else { *s };
        }
        planner.plan_fft_inverse(n).process(&mut buf);
        buf.iter_mut().for_each(|v| *v /= n as f64);
        buf
    }

    /// Field on the nodes, `Σ_j A_ij w f_j`.
    pub fn apply(&self, density: &[C64]) -> Result<Vec<C64>> {
        check_len(self.len(), density.len())?;
        Ok(self.convolve(density, false))
    }

    /// Weighted entries as a dense row-major matrix.
    pub fn to_dense(&self) -> Vec<C64> {
        let n = self.len();
        let mut out = vec![C64::new(0.0, 0.0); n * n];
        for i in 0..n {
            for j in 0..n {
                out[i * n + j] = self.first_row[(j + n - i) % n];
            }
        }
        out
    }
}

impl LinearOperator for CirculantOperator {
    fn shape(&self) -> (usize, usize) {
        (self.len(), self.len())
    }
    fn matvec(&self, x: &[C64]) -> Vec<C64> {
        self.convolve(x, false)
    }
    fn matvec_adjoint(&self, y: &[C64]) -> Vec<C64> {
        self.convolve(y, true)
    }
}
