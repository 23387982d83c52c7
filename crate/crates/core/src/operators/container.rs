//! Binary matrix container.
//!
//! Layout, all little-endian:
//!
//! | bytes | field |
//! |-------|-------|
//! | 8     | magic `LAYERMAT` |
//! | 4     | format version (u32, currently 1) |
//! | 4     | operator kind code (u32) |
//! | 8     | λ (f64) |
//! | 8     | rows (u64) |
//! | 8     | cols (u64) |
//! | 8     | points per wavelength p (f64) |
//! | 16·rows·cols | entries, row-major, each as (re, im) f64 |
//!
//! Only the unweighted entries `A_ij` are stored; quadrature weights are not.

use super::{OperatorError, OperatorKind, Result, C64};
use std::io::{Read, Write};

pub const MAGIC: &[u8; 8] = b"LAYERMAT";
const VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq)]
pub struct MatrixHeader {
    pub kind: OperatorKind,
    pub lambda: f64,
    pub rows: usize,
    pub cols: usize,
    pub p: f64,
}

pub fn write_matrix<W: Write>(mut w: W, header: &MatrixHeader, entries: &[C64]) -> Result<()> {
    if entries.len() != header.rows * header.cols {
        return Err(OperatorError::LengthMismatch { expected: header.rows * header.cols, got: entries.len() });
    }
    w.write_all(MAGIC)?;
    w.write_all(&VERSION.to_le_bytes())?;
    w.write_all(&header.kind.code().to_le_bytes())?;
    w.write_all(&header.lambda.to_le_bytes())?;
    w.write_all(&(header.rows as u64).to_le_bytes())?;
    w.write_all(&(header.cols as u64).to_le_bytes())?;
    w.write_all(&header.p.to_le_bytes())?;
    let mut buf = Vec::with_capacity(16 * entries.len());
    for z in entries {
        buf.extend_from_slice(&z.re.to_le_bytes());
        buf.extend_from_slice(&z.im.to_le_bytes());
    }
    w.write_all(&buf)?;
    Ok(())
}

fn take<const N: usize, R: Read>(r: &mut R) -> Result<[u8; N]> {
    let mut b = [0u8; N];
    r.read_exact(&mut b).map_err(|e| OperatorError::Container(format!("truncated header: {e}")))?;
    Ok(b)
}

pub fn read_matrix<R: Read>(mut r: R) -> Result<(MatrixHeader, Vec<C64>)> {
    let magic: [u8; 8] = take(&mut r)?;
    if &magic != MAGIC {
        return Err(OperatorError::Container("bad magic".into()));
    }
    let version = u32::from_le_bytes(take(&mut r)?);
    if version != VERSION {
        return Err(OperatorError::Container(format!("unsupported version {version}")));
    }
    let code = u32::from_le_bytes(take(&mut r)?);
    let kind = OperatorKind::from_code(code).ok_or_else(|| OperatorError::Container(format!("unknown kind code {code}")))?;
    let lambda = f64::from_le_bytes(take(&mut r)?);
    let rows = u64::from_le_bytes(take(&mut r)?) as usize;
    let cols = u64::from_le_bytes(take(&mut r)?) as usize;
    let p = f64::from_le_bytes(take(&mut r)?);
    let n = rows.checked_mul(cols).ok_or_else(|| OperatorError::Container("dimension overflow".into()))?;
    let mut raw = Vec::new();
    r.read_to_end(&mut raw)?;
    if raw.len() != 16 * n {
        return Err(OperatorError::Container(format!("expected {} payload bytes, found {}", 16 * n, raw.len())));
    }
    let entries = raw
        .chunks_exact(16)
        .map(|c| C64::new(f64::from_le_bytes(c[..8].try_into().unwrap()), f64::from_le_bytes(c[8..].try_into().unwrap())))
        .collect();
    Ok((MatrixHeader { kind, lambda, rows, cols, p }, entries))
}
