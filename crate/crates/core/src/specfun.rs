//! Bessel and Hankel functions of real argument for integer and half-integer order.
//!
//! Integer orders use Miller's backward recurrence normalized by
//! `J_0 + 2 Σ J_2k = 1`; the second kind is built from `Y_0`, `Y_1` and
//! forward recurrence. Half-integer orders use the same backward recurrence,
//! normalized against the closed trigonometric forms of `J_{±1/2}`.
//!
//! Orders 0 and 1 also have a fast path ([`hankel01`]) used by the kernels:
//! power series below 2, Miller plus Neumann series on `[2, 25)`, and the
//! Hankel asymptotic expansion above that.

use num_complex::Complex64;
use std::f64::consts::{FRAC_2_PI, PI};
use std::fmt;

const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

/// Largest order the engine has been validated for.
pub const MAX_ORDER: f64 = 2500.0;
/// Largest argument the engine has been validated for.
pub const MAX_ARG: f64 = 1.0e4;

/// Values below this magnitude are reported as underflow.
pub const UNDERFLOW: f64 = 1.0e-300;

const RESCALE: f64 = 1.0e-250;
const RESCALE_EXP10: i32 = -250;
const BIG: f64 = 1.0e250;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum SpecFunError {
    #[error("argument must be positive, got x = {x}")]
    Domain { x: f64 },
    #[error("order must be a non-negative integer or half-integer, got {value}")]
    InvalidOrder { value: f64 },
    #[error("|J_{order}({x})| underflows below 1e-300")]
    Underflow { order: f64, x: f64 },
    #[error("|Y_{order}({x})| overflows")]
    Overflow { order: f64, x: f64 },
    #[error("(order {order}, x {x}) lies outside the validated window (order <= {MAX_ORDER}, x <= {MAX_ARG})")]
    OutsideWindow { order: f64, x: f64 },
    #[error("root refinement did not converge in [{lo}, {hi}] after {iterations} iterations")]
    NoConvergence { lo: f64, hi: f64, iterations: usize },
}

pub type Result<T> = std::result::Result<T, SpecFunError>;

/// Non-negative integer or half-integer order, stored as twice its value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Order {
    twice: u32,
}

impl Order {
    pub fn new(value: f64) -> Result<Self> {
        let twice = 2.0 * value;
        if !value.is_finite() || value < 0.0 || twice.fract() != 0.0 || twice > u32::MAX as f64 {
            return Err(SpecFunError::InvalidOrder { value });
        }
        Ok(Self { twice: twice as u32 })
    }

    pub const fn integer(n: u32) -> Self {
        Self { twice: 2 * n }
    }

    /// The order `m + 1/2`.
    pub const fn half(m: u32) -> Self {
        Self { twice: 2 * m + 1 }
    }

    pub fn value(self) -> f64 {
        self.twice as f64 / 2.0
    }

    pub fn is_integer(self) -> bool {
        self.twice % 2 == 0
    }

    fn floor(self) -> u32 {
        self.twice / 2
    }
}

impl From<u32> for Order {
    fn from(n: u32) -> Self {
        Order::integer(n)
    }
}

impl fmt::Display for Order {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.floor())
        } else {
            write!(f, "{}/2", self.twice)
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HankelKind {
    First,
    Second,
}

/// `m · 10^exp10`, used to carry Miller values past the f64 range.
#[derive(Debug, Clone, Copy)]
struct Scaled {
    m: f64,
    exp10: i32,
}

impl Scaled {
    fn log10_abs(self) -> f64 {
        self.m.abs().log10() + self.exp10 as f64
    }

    /// `None` when the value underflows.
    fn to_f64(self) -> Option<f64> {
        if self.m == 0.0 {
            return Some(0.0);
        }
        if self.exp10 == 0 {
            return if self.m.abs() < UNDERFLOW { None } else { Some(self.m) };
        }
        if self.log10_abs() < UNDERFLOW.log10() {
            return None;
        }
        let mut v = self.m;
        let mut e = self.exp10;
        while e <= -100 {
            v *= 1e-100;
            e += 100;
        }
        Some(v * 10f64.powi(e))
    }
}

fn check(nu: Order, x: f64) -> Result<()> {
    if !(x > 0.0) || !x.is_finite() {
        return Err(SpecFunError::Domain { x });
    }
    if nu.value() > MAX_ORDER || x > MAX_ARG {
        return Err(SpecFunError::OutsideWindow { order: nu.value(), x });
    }
    Ok(())
}

fn miller_start(top: f64) -> usize {
    let top = top.max(1.0);
    (top + 20.0 + 10.0 * top.cbrt()).ceil() as usize
}

/// `J_ν` and `J_{ν+1}` by backward recurrence.
fn miller(nu: Order, x: f64) -> (Scaled, Scaled) {
    let n = nu.floor() as usize;
    let half = if nu.is_integer() { 0.0 } else { 0.5 };
    let mut start = miller_start((n + 1) as f64 + half).max(miller_start(x));
    if start % 2 == 1 {
        start += 1;
    }
    // index k stands for order k + half
    let mut above = 0.0f64;
    let mut cur = 1.0f64;
    let mut rescales = 0i32;
    let mut norm_sum = 0.0f64;
    let mut at_n = (0.0, 0i32);
    let mut at_n1 = (0.0, 0i32);
    if start == n + 1 {
        at_n1 = (cur, 0);
    }
    // cur holds index k; step produces index k - 1
    let mut k = start;
    let mut below_m1 = 0.0; // index -1 (order -1/2) for half-integer orders
    loop {
        if half == 0.0 && k % 2 == 0 {
            norm_sum += if k == 0 { cur } else { 2.0 * cur };
        }
        if k == 0 {
            if half != 0.0 {
                let mu = 0.5;
                below_m1 = (2.0 * mu / x) * cur - above;
            }
            break;
        }
        let mu = k as f64 + half;
        let next = (2.0 * mu / x) * cur - above;
        above = cur;
        cur = next;
        k -= 1;
        if k == n + 1 {
            at_n1 = (cur, rescales);
        }
        if k == n {
            at_n = (cur, rescales);
        }
        if cur.abs() > BIG {
            cur *= RESCALE;
            above *= RESCALE;
            norm_sum *= RESCALE;
            rescales += 1;
        }
    }
    if start == n {
        at_n = (1.0, 0);
    }
    let scale = if half == 0.0 {
        1.0 / norm_sum
    } else {
        let amp = (2.0 / (PI * x)).sqrt();
        let (s, c) = x.sin_cos();
        if s.abs() >= c.abs() {
            amp * s / cur
        } else {
            amp * c / below_m1
        }
    };
    let mk = |(v, r): (f64, i32)| Scaled {
        m: v * scale,
        exp10: RESCALE_EXP10 * (rescales - r),
    };
    (mk(at_n), mk(at_n1))
}

fn series_jy01(x: f64) -> (f64, f64, f64, f64) {
    // ascending series, used for x < 2
    let q = -0.25 * x * x;
    let half_x = 0.5 * x;
    let ln = half_x.ln();
    let mut j0 = 0.0;
    let mut j1 = 0.0;
    let mut s0 = 0.0;
    let mut s1 = 0.0;
    let mut t0 = 1.0; // q^k / (k!)^2
    let mut t1 = 1.0; // q^k / (k! (k+1)!)
    let mut psi_k1 = -EULER_GAMMA; // psi(k+1)
    for k in 0..40 {
        let psi_k2 = psi_k1 + 1.0 / (k as f64 + 1.0);
        j0 += t0;
        j1 += t1;
        s0 += psi_k1 * t0;
        s1 += (psi_k1 + psi_k2) * t1;
        if t0.abs() < 1e-18 * j0.abs() && k > 2 {
            break;
        }
        let kf = k as f64 + 1.0;
        t0 *= q / (kf * kf);
        t1 *= q / (kf * (kf + 1.0));
        psi_k1 = psi_k2;
    }
    let j1 = j1 * half_x;
    let y0 = FRAC_2_PI * ln * j0 - FRAC_2_PI * s0;
    let y1 = -FRAC_2_PI / x + FRAC_2_PI * ln * j1 - half_x / PI * s1;
    (j0, j1, y0, y1)
}

fn neumann_jy01(x: f64) -> (f64, f64, f64, f64) {
    // Miller table plus Neumann series for Y_0 and its derivative; x in [2, 25)
    let mut start = miller_start(x);
    if start % 2 == 1 {
        start += 1;
    }
    let mut table = vec![0.0f64; start + 2];
    table[start] = 1.0;
    for k in (1..=start).rev() {
        table[k - 1] = (2.0 * k as f64 / x) * table[k] - table[k + 1];
    }
    let mut norm = table[0];
    for k in (2..=start).step_by(2) {
        norm += 2.0 * table[k];
    }
    for v in table.iter_mut() {
        *v /= norm;
    }
    let j0 = table[0];
    let j1 = table[1];
    let lg = (0.5 * x).ln() + EULER_GAMMA;
    let mut s0 = 0.0;
    let mut s1 = 0.0;
    let mut sign = -1.0;
    let mut k = 1;
    while 2 * k + 1 <= start + 1 {
        let kf = k as f64;
        s0 += sign * table[2 * k] / kf;
        s1 += sign * (table[2 * k - 1] - table[2 * k + 1]) / kf;
        sign = -sign;
        k += 1;
    }
    let y0 = FRAC_2_PI * lg * j0 - 2.0 * FRAC_2_PI * s0;
    let y1 = FRAC_2_PI * (lg * j1 - j0 / x) + FRAC_2_PI * s1;
    (j0, j1, y0, y1)
}

fn asymptotic_pq(nu: f64, x: f64) -> (f64, f64) {
    let mu = 4.0 * nu * nu;
    let mut p = 1.0;
    let mut q = 0.0;
    let mut term = 1.0f64;
    let mut prev = f64::INFINITY;
    for k in 1..60 {
        let odd = (2 * k - 1) as f64;
        term *= (mu - odd * odd) / (8.0 * k as f64 * x);
        if term.abs() > prev || term == 0.0 {
            break;
        }
        prev = term.abs();
        match k % 4 {
            1 => q += term,
            2 => p -= term,
            3 => q -= term,
            _ => p += term,
        }
        if term.abs() < 1e-17 {
            break;
        }
    }
    (p, q)
}

fn asymptotic_jy01(x: f64) -> (f64, f64, f64, f64) {
    let amp = (2.0 / (PI * x)).sqrt();
    let (s, c) = x.sin_cos();
    let r = std::f64::consts::FRAC_1_SQRT_2;
    // chi_0 = x - pi/4, chi_1 = x - 3pi/4
    let (c0, s0) = (r * (c + s), r * (s - c));
    let (c1, s1) = (r * (s - c), -r * (c + s));
    let (p0, q0) = asymptotic_pq(0.0, x);
    let (p1, q1) = asymptotic_pq(1.0, x);
    (
        amp * (p0 * c0 - q0 * s0),
        amp * (p1 * c1 - q1 * s1),
        amp * (p0 * s0 + q0 * c0),
        amp * (p1 * s1 + q1 * c1),
    )
}

/// `(J_0, J_1, Y_0, Y_1)` at `x > 0` without validation.
pub fn jy01(x: f64) -> (f64, f64, f64, f64) {
    if x < 2.0 {
        series_jy01(x)
    } else if x < 25.0 {
        neumann_jy01(x)
    } else {
        asymptotic_jy01(x)
    }
}

/// `(H_0^(1)(x), H_1^(1)(x))` for `x > 0`. Hot path for kernel evaluation.
#[inline]
pub fn hankel01(x: f64) -> (Complex64, Complex64) {
    let (j0, j1, y0, y1) = jy01(x);
    (Complex64::new(j0, y0), Complex64::new(j1, y1))
}

/// `Y_ν` and `Y_{ν+1}` by forward recurrence.
fn y_forward(nu: Order, x: f64) -> Result<(f64, f64)> {
    let n = nu.floor() as usize;
    let (mut lo, mut hi, base) = if nu.is_integer() {
        let (_, _, y0, y1) = jy01(x);
        (y0, y1, 0.0)
    } else {
        let amp = (2.0 / (PI * x)).sqrt();
        let (s, c) = x.sin_cos();
        // Y_{-1/2} = J_{1/2}, Y_{1/2} = -J_{-1/2}
        let ym = amp * s;
        let yp = -amp * c;
        // shift so that lo is order 1/2 and hi is 3/2
        (yp, (0.5 / x) * yp * 2.0 - ym, 0.5)
    };
    for k in 0..n {
        let mu = k as f64 + 1.0 + base;
        let next = (2.0 * mu / x) * hi - lo;
        lo = hi;
        hi = next;
        if !hi.is_finite() || hi.abs() > 1e300 {
            return Err(SpecFunError::Overflow { order: nu.value(), x });
        }
    }
    Ok((lo, hi))
}

/// `J_ν(x)`.
pub fn bessel_j(nu: Order, x: f64) -> Result<f64> {
    check(nu, x)?;
    if nu.twice == 1 {
        return Ok((2.0 / (PI * x)).sqrt() * x.sin());
    }
    if nu.twice <= 2 && x >= 2.0 {
        let (j0, j1, _, _) = jy01(x);
        return Ok(if nu.twice == 0 { j0 } else { j1 });
    }
    let (jn, _) = miller(nu, x);
    jn.to_f64()
        .ok_or(SpecFunError::Underflow { order: nu.value(), x })
}

/// `J_ν(x)` with underflow flushed to zero. For integrands where a
/// vanishing contribution is the correct answer.
pub fn bessel_j_or_zero(nu: Order, x: f64) -> Result<f64> {
    match bessel_j(nu, x) {
        Err(SpecFunError::Underflow { .. }) => Ok(0.0),
        other => other,
    }
}

/// `J'_ν(x)`.
pub fn bessel_j_deriv(nu: Order, x: f64) -> Result<f64> {
    check(nu, x)?;
    let (jn, jn1) = miller(nu, x);
    // J'_ν = (ν/x) J_ν - J_{ν+1}
    let nu_over_x = nu.value() / x;
    let exp = jn.exp10.max(jn1.exp10);
    let a = Scaled { m: jn.m * 10f64.powi(jn.exp10 - exp), exp10: exp };
    let b = Scaled { m: jn1.m * 10f64.powi(jn1.exp10 - exp), exp10: exp };
    let d = Scaled { m: nu_over_x * a.m - b.m, exp10: exp };
    d.to_f64()
        .ok_or(SpecFunError::Underflow { order: nu.value(), x })
}

/// `Y_ν(x)`.
pub fn bessel_y(nu: Order, x: f64) -> Result<f64> {
    check(nu, x)?;
    Ok(y_forward(nu, x)?.0)
}

/// `Y'_ν(x)`.
pub fn bessel_y_deriv(nu: Order, x: f64) -> Result<f64> {
    check(nu, x)?;
    let (y, y1) = y_forward(nu, x)?;
    Ok(nu.value() / x * y - y1)
}

/// `H^(1)_ν(x)` or `H^(2)_ν(x)`.
pub fn hankel(kind: HankelKind, nu: Order, x: f64) -> Result<Complex64> {
    let j = bessel_j_or_zero(nu, x)?;
    let y = bessel_y(nu, x)?;
    Ok(match kind {
        HankelKind::First => Complex64::new(j, y),
        HankelKind::Second => Complex64::new(j, -y),
    })
}

/// Derivative of the Hankel function with respect to its argument.
pub fn hankel_deriv(kind: HankelKind, nu: Order, x: f64) -> Result<Complex64> {
    let jp = match bessel_j_deriv(nu, x) {
        Err(SpecFunError::Underflow { .. }) => 0.0,
        other => other?,
    };
    let yp = bessel_y_deriv(nu, x)?;
    Ok(match kind {
        HankelKind::First => Complex64::new(jp, yp),
        HankelKind::Second => Complex64::new(jp, -yp),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ZeroKind {
    /// Zero of `J_k`.
    J,
    /// Zero of `J'_k`.
    JPrime,
}

/// A located positive zero of `J_k` or `J'_k`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BesselZero {
    pub order: Order,
    pub index: u32,
    pub kind: ZeroKind,
    pub location: f64,
    /// `|f(x)| / (|f'(x)| x)` at the returned location.
    pub residual: f64,
}

fn zero_target(kind: ZeroKind, k: Order, x: f64) -> Result<(f64, f64)> {
    let j = bessel_j_or_zero(k, x)?;
    let jp = match bessel_j_deriv(k, x) {
        Err(SpecFunError::Underflow { .. }) => 0.0,
        other => other?,
    };
    Ok(match kind {
        ZeroKind::J => (j, jp),
        ZeroKind::JPrime => {
            let nu = k.value();
            let jpp = -jp / x - (1.0 - nu * nu / (x * x)) * j;
            (jp, jpp)
        }
    })
}

fn initial_guess(kind: ZeroKind, k: f64, s: u32) -> f64 {
    if s == 1 && k >= 1.0 {
        let c = k.cbrt();
        return match kind {
            ZeroKind::J => k + 1.855_757_1 * c + 1.033_150 / c - 0.003_97 / k,
            ZeroKind::JPrime => k + 0.808_616_5 * c + 0.072_490 / c,
        };
    }
    // McMahon
    let mu = 4.0 * k * k;
    match kind {
        ZeroKind::J => {
            let b = (s as f64 + 0.5 * k - 0.25) * PI;
            let e = 8.0 * b;
            b - (mu - 1.0) / e - 4.0 * (mu - 1.0) * (7.0 * mu - 31.0) / (3.0 * e.powi(3))
        }
        ZeroKind::JPrime => {
            let s = if k == 0.0 { s + 1 } else { s };
            let b = (s as f64 + 0.5 * k - 0.75) * PI;
            let e = 8.0 * b;
            b - (mu + 3.0) / e - 4.0 * (7.0 * mu * mu + 82.0 * mu - 9.0) / (3.0 * e.powi(3))
        }
    }
}

/// The `s`-th positive zero of `J_k` (or `J'_k`; `x = 0` is never counted).
///
/// The zero is bracketed by a sign scan started below the first zero, then
/// refined with safeguarded Newton from the McMahon or large-order guess.
pub fn bessel_zero(kind: ZeroKind, k: Order, s: u32) -> Result<BesselZero> {
    if s == 0 {
        return Err(SpecFunError::InvalidOrder { value: 0.0 });
    }
    let nu = k.value();
    if nu > MAX_ORDER {
        return Err(SpecFunError::OutsideWindow { order: nu, x: nu });
    }
    let step = 0.4;
    let mut lo = nu.max(0.5);
    let mut f_lo = zero_target(kind, k, lo)?.0;
    let mut found = 0;
    let mut hi = lo;
    let scan_limit = 100_000;
    for _ in 0..scan_limit {
        hi = lo + step;
        let f_hi = zero_target(kind, k, hi)?.0;
        if f_lo == 0.0 || f_lo.signum() != f_hi.signum() {
            found += 1;
            if found == s {
                break;
            }
        }
        lo = hi;
        f_lo = f_hi;
    }
    if found < s {
        return Err(SpecFunError::NoConvergence { lo, hi, iterations: scan_limit });
    }
    let (mut a, mut b) = (lo, hi);
    let fa_sign = zero_target(kind, k, a)?.0.signum();
    let guess = initial_guess(kind, nu, s);
    let mut x = if guess > a && guess < b { guess } else { 0.5 * (a + b) };
    let max_iter = 200;
    for _ in 0..max_iter {
        let (f, fp) = zero_target(kind, k, x)?;
        if f == 0.0 {
            return Ok(finish(kind, k, s, x, 0.0));
        }
        if f.signum() == fa_sign {
            a = x;
        } else {
            b = x;
        }
        let mut next = x - f / fp;
        if !(next > a && next < b) || !next.is_finite() {
            next = 0.5 * (a + b);
        }
        let dx = (next - x).abs();
        x = next;
        if dx < 1e-12 * x || (b - a) < 1e-14 * x {
            let (f, fp) = zero_target(kind, k, x)?;
            return Ok(finish(kind, k, s, x, (f / (fp * x)).abs()));
        }
    }
    Err(SpecFunError::NoConvergence { lo: a, hi: b, iterations: max_iter })
}

fn finish(kind: ZeroKind, order: Order, index: u32, location: f64, residual: f64) -> BesselZero {
    BesselZero { order, index, kind, location, residual }
}
