//! Nyström discretizations of the layer potentials, layer operators and the
//! spectral measure, plus operator-norm estimation between weighted L² spaces.
//!
//! A discretized operator `A` acts on nodal densities with the source weights
//! applied inside, `(Af)_i = Σ_j A_ij w_j f_j`. Norms are taken for the
//! symmetric form `B = W_t^{1/2} A W_s^{1/2}`, which is what every
//! [`LinearOperator`] exposes.

mod boxgrid;
mod circulant;
mod container;
mod dense;
mod norm;
mod ring;

pub use boxgrid::{BoxOperator, BoxSide};
pub use circulant::CirculantOperator;
pub use container::{read_matrix, write_matrix, MatrixHeader, MAGIC};
pub use dense::{assemble, assemble_weighted, assemble_with_budget, OperatorMatrix, MAX_DENSE_ENTRIES};
pub use norm::{lanczos_norm, operator_norm, start_vector, NormEstimate, NormMethod, NormOptions};
pub use ring::RingOperator;

use crate::geometry::{dot, sub, GeometryError, Point};
use crate::kernels::{self, KernelError};
use crate::specfun::SpecFunError;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::fmt;

pub type C64 = Complex64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum OperatorKind {
    /// Single layer potential, boundary to domain.
    Slp,
    /// Double layer potential, boundary to domain.
    Dlp,
    /// Single layer operator on the boundary.
    Slo,
    /// Double layer operator on the boundary.
    Dlo,
    /// Spectral measure applied to a boundary density.
    #[serde(rename = "de")]
    DE,
}

impl OperatorKind {
    pub fn code(self) -> u32 {
        match self {
            OperatorKind::Slp => 0,
            OperatorKind::Dlp => 1,
            OperatorKind::Slo => 2,
            OperatorKind::Dlo => 3,
            OperatorKind::DE => 4,
        }
    }

    pub fn from_code(code: u32) -> Option<Self> {
        Some(match code {
            0 => OperatorKind::Slp,
            1 => OperatorKind::Dlp,
            2 => OperatorKind::Slo,
            3 => OperatorKind::Dlo,
            4 => OperatorKind::DE,
            _ => return None,
        })
    }

    pub fn is_boundary_operator(self) -> bool {
        matches!(self, OperatorKind::Slo | OperatorKind::Dlo)
    }

    pub fn name(self) -> &'static str {
        match self {
            OperatorKind::Slp => "slp",
            OperatorKind::Dlp => "dlp",
            OperatorKind::Slo => "slo",
            OperatorKind::Dlo => "dlo",
            OperatorKind::DE => "de",
        }
    }
}

impl fmt::Display for OperatorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for OperatorKind {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Ok(match s.to_ascii_lowercase().as_str() {
            "slp" => OperatorKind::Slp,
            "dlp" => OperatorKind::Dlp,
            "slo" => OperatorKind::Slo,
            "dlo" => OperatorKind::Dlo,
            "de" | "spectral" => OperatorKind::DE,
            other => return Err(format!("unknown operator kind '{other}'")),
        })
    }
}

#[derive(Debug, thiserror::Error)]
pub enum OperatorError {
    #[error(transparent)]
    Geometry(#[from] GeometryError),
    #[error(transparent)]
    Kernel(#[from] KernelError),
    #[error(transparent)]
    SpecFun(#[from] SpecFunError),
    #[error("dense {rows}x{cols} matrix exceeds the {cap}-entry memory budget")]
    Budget { rows: usize, cols: usize, cap: usize },
    #[error("target node {target} coincides with source node {source_node}")]
    Collision { target: usize, source_node: usize },
    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("power iteration stopped after {iterations} iterations at {value} with residual {residual:e}")]
    NoConvergence { value: f64, residual: f64, iterations: usize },
    #[error("unsupported configuration: {0}")]
    Unsupported(String),
    #[error("matrix container: {0}")]
    Container(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, OperatorError>;

/// The weighted form `B = W_t^{1/2} A W_s^{1/2}` of a discretized operator.
pub trait LinearOperator: Sync {
    /// `(rows, cols)` of `B`.
    fn shape(&self) -> (usize, usize);
    fn matvec(&self, x: &[C64]) -> Vec<C64>;
    fn matvec_adjoint(&self, y: &[C64]) -> Vec<C64>;
}

/// Kernel of `kind` at the pair `(x, y)` with source normal `nu_y`.
#[inline]
pub fn pair_kernel(kind: OperatorKind, lambda: f64, x: Point, y: Point, nu_y: Point) -> C64 {
    let d = sub(x, y);
    let r = d[0].hypot(d[1]);
    match kind {
        OperatorKind::Slp | OperatorKind::Slo => kernels::slp2(lambda, r),
        OperatorKind::Dlp | OperatorKind::Dlo => {
            let proj = dot(d, nu_y);
            if proj == 0.0 {
                C64::new(0.0, 0.0)
            } else {
                kernels::dlp2_radial(lambda, r) * proj
            }
        }
        OperatorKind::DE => C64::new(kernels::spectral2(lambda, r), 0.0),
    }
}

/// C^∞ step: 0 for `t <= 0`, 1 for `t >= 1`, `g(t)/(g(t)+g(1-t))` with
/// `g(t) = e^{-1/t}` between.
pub fn smooth_step(t: f64) -> f64 {
    if t <= 0.0 {
        return 0.0;
    }
    if t >= 1.0 {
        return 1.0;
    }
    let a = (-1.0 / t).exp();
    let b = (-1.0 / (1.0 - t)).exp();
    a / (a + b)
}

pub(crate) fn check_len(expected: usize, got: usize) -> Result<()> {
    if expected == got {
        Ok(())
    } else {
        Err(OperatorError::LengthMismatch { expected, got })
    }
}
