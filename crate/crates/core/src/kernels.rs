//! Helmholtz kernels in two and three dimensions.
//!
//! The outgoing single-layer kernel is `(i/4) H_0^(1)(λr)` in the plane and
//! `e^{iλr}/(4πr)` in space; the incoming kernel is its complex conjugate.
//! The double-layer kernel differentiates in the source point `y` along `ν_y`.

use crate::specfun::{self, HankelKind, Order};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum KernelError {
    #[error("kernel evaluated at coincident points")]
    Coincident,
    #[error("dimension must be 2 or 3, got {0}")]
    Dimension(usize),
    #[error("wavenumber must be positive, got {0}")]
    Wavenumber(f64),
    #[error("normal must have unit length, got |ν| = {0}")]
    Normal(f64),
    #[error(transparent)]
    SpecFun(#[from] specfun::SpecFunError),
}

pub type Result<T> = std::result::Result<T, KernelError>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    Slp,
    Dlp,
    SpectralMeasure,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Sign {
    Outgoing,
    Incoming,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct KernelSpec {
    pub family: Family,
    pub sign: Sign,
    pub dimension: usize,
    pub lambda: f64,
}

impl KernelSpec {
    pub fn new(family: Family, sign: Sign, dimension: usize, lambda: f64) -> Result<Self> {
        if dimension != 2 && dimension != 3 {
            return Err(KernelError::Dimension(dimension));
        }
        if !(lambda > 0.0) || !lambda.is_finite() {
            return Err(KernelError::Wavenumber(lambda));
        }
        Ok(Self { family, sign, dimension, lambda })
    }
}

fn separation(x: &[f64], y: &[f64], dim: usize) -> Result<(Vec<f64>, f64)> {
    if x.len() != dim || y.len() != dim {
        return Err(KernelError::Dimension(x.len().max(y.len())));
    }
    let d: Vec<f64> = x.iter().zip(y).map(|(a, b)| a - b).collect();
    let r = d.iter().map(|v| v * v).sum::<f64>().sqrt();
    if r == 0.0 {
        return Err(KernelError::Coincident);
    }
    Ok((d, r))
}

fn orient(v: Complex64, sign: Sign) -> Complex64 {
    match sign {
        Sign::Outgoing => v,
        Sign::Incoming => v.conj(),
    }
}

/// `(i/4) H_0^(1)(λr)`.
#[inline]
pub fn slp2(lambda: f64, r: f64) -> Complex64 {
    let (h0, _) = specfun::hankel01(lambda * r);
    Complex64::new(-0.25 * h0.im, 0.25 * h0.re)
}

/// `(iλ/4) H_1^(1)(λr) / r`; multiply by `⟨x − y, ν_y⟩` for the double-layer kernel.
#[inline]
pub fn dlp2_radial(lambda: f64, r: f64) -> Complex64 {
    let (_, h1) = specfun::hankel01(lambda * r);
    let s = 0.25 * lambda / r;
    Complex64::new(-s * h1.im, s * h1.re)
}

/// `J_0(λr) / (4π)`.
#[inline]
pub fn spectral2(lambda: f64, r: f64) -> f64 {
    let (j0, _, _, _) = specfun::jy01(lambda * r);
    j0 / (4.0 * PI)
}

/// `J_1(λr) / (4π r)`.
#[inline]
pub fn spectral2_dlp_radial(lambda: f64, r: f64) -> f64 {
    let (_, j1, _, _) = specfun::jy01(lambda * r);
    lambda * j1 / (4.0 * PI * r)
}

/// Kernel value `K(x − y)` for the given family and sign.
///
/// For [`Family::Dlp`] this is the radial part only; use [`eval_dlp_kernel`]
/// for the full normal derivative.
pub fn eval_kernel(spec: &KernelSpec, x: &[f64], y: &[f64]) -> Result<Complex64> {
    let (_, r) = separation(x, y, spec.dimension)?;
    let l = spec.lambda;
    Ok(match (spec.family, spec.dimension) {
        (Family::Slp, 2) => orient(slp2(l, r), spec.sign),
        (Family::Slp, _) => orient(Complex64::from_polar(1.0, l * r) / (4.0 * PI * r), spec.sign),
        (Family::Dlp, 2) => orient(dlp2_radial(l, r), spec.sign),
        (Family::Dlp, _) => orient(
            Complex64::from_polar(1.0, l * r) * Complex64::new(1.0, -l * r) / (4.0 * PI * r.powi(3)),
            spec.sign,
        ),
        (Family::SpectralMeasure, 2) => Complex64::new(spectral2(l, r), 0.0),
        (Family::SpectralMeasure, _) => Complex64::new((l * r).sin() / (4.0 * PI * PI * r), 0.0),
    })
}

/// Single-layer kernel through the dimension-general Hankel form
/// `(i/4) (λ/(2πr))^{(n−2)/2} H^(1)_{(n−2)/2}(λr)`.
pub fn eval_kernel_hankel_form(lambda: f64, x: &[f64], y: &[f64], dimension: usize) -> Result<Complex64> {
    let (_, r) = separation(x, y, dimension)?;
    let order = Order::new((dimension as f64 - 2.0) / 2.0)?;
    let h = specfun::hankel(HankelKind::First, order, lambda * r)?;
    let pre = (lambda / (2.0 * PI * r)).powf((dimension as f64 - 2.0) / 2.0);
    Ok(Complex64::new(0.0, 0.25) * pre * h)
}

/// `∂_{ν_y} K(x − y)`: the normal derivative at the source point.
pub fn eval_dlp_kernel(
    lambda: f64,
    x: &[f64],
    y: &[f64],
    nu_y: &[f64],
    dimension: usize,
    sign: Sign,
) -> Result<Complex64> {
    let spec = KernelSpec::new(Family::Dlp, sign, dimension, lambda)?;
    let (d, _) = separation(x, y, dimension)?;
    if nu_y.len() != dimension {
        return Err(KernelError::Dimension(nu_y.len()));
    }
    let nn = nu_y.iter().map(|v| v * v).sum::<f64>().sqrt();
    if (nn - 1.0).abs() > 1e-10 {
        return Err(KernelError::Normal(nn));
    }
    let proj: f64 = d.iter().zip(nu_y).map(|(a, b)| a * b).sum();
    if proj == 0.0 {
        return Ok(Complex64::new(0.0, 0.0));
    }
    Ok(eval_kernel(&spec, x, y)? * proj)
}
