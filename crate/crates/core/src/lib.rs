//! Numerical laboratory for high-frequency Helmholtz layer potentials and
//! layer operators: kernels, Nyström discretizations, operator norms,
//! sharp-example families and log-log scaling fits.

pub mod specfun;
pub mod geometry;
pub mod kernels;
pub mod operators;
pub mod examples;
pub mod diagnostics;
pub mod scaling;
pub mod cli;
