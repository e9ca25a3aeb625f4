//! Periodic spectral representation on [0, 2pi) and the elementary
//! Fourier-side operators: transforms, holomorphic projections, Hilbert
//! transform, derivatives, multipliers, sharp Littlewood-Paley blocks and
//! the frequency cutoff functions.
//!
//! Convention: `u_hat(k) = (1/2pi) \int_0^{2pi} u(a) e^{-ika} da`, so that
//! `u(a) = sum_k u_hat(k) e^{ika}` and Parseval reads
//! `\int |u|^2 da = 2pi sum_k |u_hat(k)|^2`. Coefficients are stored in
//! natural order for k = -n/2 .. n/2-1.

use std::cell::RefCell;
use std::f64::consts::PI;
use std::sync::Arc;

use num_complex::Complex64;
use rustfft::{Fft, FftPlanner};

use crate::error::{HwError, Result};

pub const TAU: f64 = 2.0 * PI;

thread_local! {
    static PLANNER: RefCell<FftPlanner<f64>> = RefCell::new(FftPlanner::new());
}

fn plan_forward(n: usize) -> Arc<dyn Fft<f64>> {
    PLANNER.with(|p| p.borrow_mut().plan_fft_forward(n))
}

fn plan_inverse(n: usize) -> Arc<dyn Fft<f64>> {
    PLANNER.with(|p| p.borrow_mut().plan_fft_inverse(n))
}

/// Collocation grid for 2pi-periodic fields.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GridSpec {
    pub n_modes: usize,
    /// Padding factor for pseudospectral products (2 is exact for quadratics).
    pub dealias_pad: usize,
}

impl GridSpec {
    pub fn new(n_modes: usize) -> Result<Self> {
        Self::with_pad(n_modes, 2)
    }

    pub fn with_pad(n_modes: usize, dealias_pad: usize) -> Result<Self> {
        if n_modes < 16 || !n_modes.is_power_of_two() {
            return Err(HwError::InvalidArgument(format!(
                "n_modes must be a power of two >= 16, got {n_modes}"
            )));
        }
        if !dealias_pad.is_power_of_two() || dealias_pad > 8 {
            return Err(HwError::InvalidArgument(format!(
                "dealias_pad must be 1, 2, 4 or 8, got {dealias_pad}"
            )));
        }
        Ok(GridSpec {
            n_modes,
            dealias_pad,
        })
    }

    pub fn k_min(&self) -> i64 {
        -(self.n_modes as i64) / 2
    }

    pub fn k_max(&self) -> i64 {
        self.n_modes as i64 / 2 - 1
    }

    /// Frequency represented by coefficient slot `i`.
    pub fn k_of(&self, i: usize) -> i64 {
        self.k_min() + i as i64
    }

    pub fn index_of(&self, k: i64) -> Option<usize> {
        if k < self.k_min() || k > self.k_max() {
            None
        } else {
            Some((k - self.k_min()) as usize)
        }
    }

    /// Number of sharp dyadic blocks: indices 0..=log2(n/2).
    pub fn n_blocks(&self) -> usize {
        (self.n_modes / 2).trailing_zeros() as usize + 1
    }
}

/// Complex 2pi-periodic field stored as Fourier coefficients.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectralField {
    pub grid: GridSpec,
    coeffs: Vec<Complex64>,
}

impl SpectralField {
    pub fn zeros(grid: GridSpec) -> Self {
        SpectralField {
            grid,
            coeffs: vec![Complex64::ZERO; grid.n_modes],
        }
    }

    pub fn from_coeffs(grid: GridSpec, coeffs: Vec<Complex64>) -> Result<Self> {
        if coeffs.len() != grid.n_modes {
            return Err(HwError::InvalidArgument(format!(
                "expected {} coefficients, got {}",
                grid.n_modes,
                coeffs.len()
            )));
        }
        Ok(SpectralField { grid, coeffs })
    }

    /// Field with a single mode `e^{ika}` of the given amplitude.
    pub fn single_mode(grid: GridSpec, k: i64, amp: Complex64) -> Result<Self> {
        let mut f = Self::zeros(grid);
        let i = grid
            .index_of(k)
            .ok_or_else(|| HwError::InvalidArgument(format!("mode {k} not representable")))?;
        f.coeffs[i] = amp;
        Ok(f)
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    pub fn coeffs_mut(&mut self) -> &mut [Complex64] {
        &mut self.coeffs
    }

    pub fn coeff(&self, k: i64) -> Complex64 {
        self.grid
            .index_of(k)
            .map_or(Complex64::ZERO, |i| self.coeffs[i])
    }

    pub fn set_coeff(&mut self, k: i64, v: Complex64) {
        if let Some(i) = self.grid.index_of(k) {
            self.coeffs[i] = v;
        }
    }

    pub fn check_same_grid(&self, other: &Self) -> Result<()> {
        if self.grid.n_modes != other.grid.n_modes {
            return Err(HwError::GridMismatch(self.grid.n_modes, other.grid.n_modes));
        }
        Ok(())
    }

    /// l2 norm of the coefficient vector, scaled so it equals the L2([0,2pi))
    /// norm of the field: sqrt(2pi sum |u_hat|^2).
    pub fn l2_norm(&self) -> f64 {
        (TAU * self.coeffs.iter().map(|c| c.norm_sqr()).sum::<f64>()).sqrt()
    }

    pub fn mean(&self) -> Complex64 {
        self.coeff(0)
    }

    pub fn is_finite(&self) -> bool {
        self.coeffs
            .iter()
            .all(|c| c.re.is_finite() && c.im.is_finite())
    }

    pub fn scale(&self, s: Complex64) -> Self {
        self.map_coeffs(|_, c| s * c)
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (a, b) in out.coeffs.iter_mut().zip(&other.coeffs) {
            *a += b;
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (a, b) in out.coeffs.iter_mut().zip(&other.coeffs) {
            *a -= b;
        }
        out
    }

    pub fn map_coeffs(&self, f: impl Fn(i64, Complex64) -> Complex64) -> Self {
        let grid = self.grid;
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, &c)| f(grid.k_of(i), c))
            .collect();
        SpectralField { grid, coeffs }
    }

    /// Complex conjugate field: out_hat(k) = conj(in_hat(-k)).
    /// The unpaired mode k = -n/2 has no mirror slot and is dropped.
    pub fn conj_field(&self) -> Self {
        let grid = self.grid;
        let mut out = Self::zeros(grid);
        for i in 0..grid.n_modes {
            let k = grid.k_of(i);
            if let Some(j) = grid.index_of(-k) {
                out.coeffs[j] = self.coeffs[i].conj();
            }
        }
        out
    }

    /// Zero-extend the spectrum onto a grid with `m >= n` modes.
    pub fn pad_to(&self, m: usize) -> Result<Self> {
        let big = GridSpec::with_pad(m, self.grid.dealias_pad)?;
        let mut out = Self::zeros(big);
        for i in 0..self.grid.n_modes {
            out.set_coeff(self.grid.k_of(i), self.coeffs[i]);
        }
        Ok(out)
    }

    /// Drop modes outside the target lattice.
    pub fn truncate_to(&self, grid: GridSpec) -> Self {
        let mut out = Self::zeros(grid);
        for i in 0..grid.n_modes {
            out.coeffs[i] = self.coeff(grid.k_of(i));
        }
        out
    }
}

/// Forward transform: physical samples on the collocation grid -> coefficients.
pub fn to_spectral(grid: GridSpec, values: &[Complex64]) -> Result<SpectralField> {
    let n = grid.n_modes;
    if values.len() != n {
        return Err(HwError::InvalidArgument(format!(
            "expected {} samples, got {}",
            n,
            values.len()
        )));
    }
    let mut buf = values.to_vec();
    plan_forward(n).process(&mut buf);
    let inv_n = 1.0 / n as f64;
    let mut coeffs = vec![Complex64::ZERO; n];
    for i in 0..n {
        let k = grid.k_of(i);
        coeffs[i] = buf[(k.rem_euclid(n as i64)) as usize] * inv_n;
    }
    Ok(SpectralField { grid, coeffs })
}

/// Inverse transform: coefficients -> samples at a_j = 2pi j / n.
pub fn to_physical(f: &SpectralField) -> Vec<Complex64> {
    let n = f.grid.n_modes;
    let mut buf = vec![Complex64::ZERO; n];
    for i in 0..n {
        let k = f.grid.k_of(i);
        buf[(k.rem_euclid(n as i64)) as usize] = f.coeffs[i];
    }
    plan_inverse(n).process(&mut buf);
    buf
}

/// Samples of `f` on an `m`-point grid (`m >= n_modes`), for oversampled
/// sup-norms and dealiased products.
pub fn to_physical_oversampled(f: &SpectralField, m: usize) -> Result<Vec<Complex64>> {
    Ok(to_physical(&f.pad_to(m)?))
}

/// Hilbert transform: (Hf)^(k) = -i sign(k) f_hat(k).
pub fn hilbert(f: &SpectralField) -> SpectralField {
    f.map_coeffs(|k, c| match k.cmp(&0) {
        std::cmp::Ordering::Less => Complex64::new(0.0, 1.0) * c,
        std::cmp::Ordering::Equal => Complex64::ZERO,
        std::cmp::Ordering::Greater => Complex64::new(0.0, -1.0) * c,
    })
}

/// P = (I - iH)/2: keeps k < 0, halves the zero mode, kills k > 0.
pub fn project_holo(f: &SpectralField) -> SpectralField {
    f.map_coeffs(|k, c| match k.cmp(&0) {
        std::cmp::Ordering::Less => c,
        std::cmp::Ordering::Equal => 0.5 * c,
        std::cmp::Ordering::Greater => Complex64::ZERO,
    })
}

/// Pbar = I - P.
pub fn project_anti(f: &SpectralField) -> SpectralField {
    f.map_coeffs(|k, c| match k.cmp(&0) {
        std::cmp::Ordering::Less => Complex64::ZERO,
        std::cmp::Ordering::Equal => 0.5 * c,
        std::cmp::Ordering::Greater => c,
    })
}

/// Spectral derivative: multiplies u_hat(k) by (ik)^order.
pub fn derivative(f: &SpectralField, order: u32) -> SpectralField {
    f.map_coeffs(|k, c| Complex64::new(0.0, k as f64).powu(order) * c)
}

/// Generic Fourier multiplier.
pub fn multiplier(f: &SpectralField, symbol: impl Fn(i64) -> Complex64) -> Result<SpectralField> {
    for i in 0..f.grid.n_modes {
        let k = f.grid.k_of(i);
        let m = symbol(k);
        if !(m.re.is_finite() && m.im.is_finite()) {
            return Err(HwError::Numeric(format!(
                "non-finite multiplier symbol at k = {k}"
            )));
        }
    }
    Ok(f.map_coeffs(|k, c| symbol(k) * c))
}

/// Bessel multiplier <D>^s = (1+k^2)^{s/2}.
pub fn bessel_pow(f: &SpectralField, s: f64) -> SpectralField {
    f.map_coeffs(|k, c| (1.0 + (k * k) as f64).powf(s / 2.0) * c)
}

/// |D|^s multiplier (|0|^s = 0 for s > 0, and also pinned to 0 at k = 0 for s <= 0).
pub fn abs_d_pow(f: &SpectralField, s: f64) -> SpectralField {
    f.map_coeffs(|k, c| {
        if k == 0 {
            Complex64::ZERO
        } else {
            (k.abs() as f64).powf(s) * c
        }
    })
}

/// Membership of |k| in the sharp dyadic block `j`:
/// block 0 is |k| <= 1, block j >= 1 is 2^{j-1} < |k| <= 2^j.
pub fn in_block(k: i64, j: usize) -> bool {
    let a = k.unsigned_abs();
    if j == 0 {
        a <= 1
    } else {
        (1u64 << (j - 1)) < a && a <= (1u64 << j)
    }
}

/// Sharp Littlewood-Paley block P_j.
pub fn lp_block(f: &SpectralField, j: usize) -> SpectralField {
    f.map_coeffs(|k, c| if in_block(k, j) { c } else { Complex64::ZERO })
}

fn smoothstep(order: u32, t: f64) -> f64 {
    let t = t.clamp(0.0, 1.0);
    match order {
        1 => t * t * (3.0 - 2.0 * t),
        2 => t * t * t * (10.0 + t * (-15.0 + 6.0 * t)),
        _ => t * t * (3.0 - 2.0 * t),
    }
}

/// Plateau and transition parameters for the quantization cutoff chi and the
/// bilinear cutoffs chi1/chi2.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CutoffParams {
    pub eps1: f64,
    pub eps2: f64,
    pub transition: u32,
}

impl Default for CutoffParams {
    fn default() -> Self {
        CutoffParams {
            eps1: 1.0 / 20.0,
            eps2: 1.0 / 10.0,
            transition: 1,
        }
    }
}

impl CutoffParams {
    pub fn new(eps1: f64, eps2: f64, transition: u32) -> Result<Self> {
        if !(0.0 < eps1 && eps1 < eps2 && eps2 < 1.0) {
            return Err(HwError::InvalidArgument(format!(
                "cutoff requires 0 < eps1 < eps2 < 1, got ({eps1}, {eps2})"
            )));
        }
        if transition < 1 {
            return Err(HwError::InvalidArgument(
                "smoothstep order must be >= 1".into(),
            ));
        }
        Ok(CutoffParams {
            eps1,
            eps2,
            transition,
        })
    }

    /// Quantization cutoff chi(theta, eta): 1 for |theta| <= eps1 (1+|eta|),
    /// 0 for |theta| >= eps2 (1+|eta|), smoothstep in the ratio between.
    pub fn chi_quant(&self, theta: f64, eta: f64) -> f64 {
        let rho = theta.abs() / (1.0 + eta.abs());
        if rho <= self.eps1 {
            1.0
        } else if rho >= self.eps2 {
            0.0
        } else {
            1.0 - smoothstep(self.transition, (rho - self.eps1) / (self.eps2 - self.eps1))
        }
    }

    /// Low-high selector chi1(t1, t2): 1 for |t1| <= eps1 |t2|, 0 for
    /// |t1| >= eps2 |t2|; the transition is a smoothstep in log|t1/t2|.
    pub fn chi1(&self, t1: f64, t2: f64) -> f64 {
        if t1 == 0.0 {
            // chi1(0,0) = 0 keeps the partition convention chi2(0,0) = 1
            return if t2 == 0.0 { 0.0 } else { 1.0 };
        }
        if t2 == 0.0 {
            return 0.0;
        }
        let r = (t1.abs() / t2.abs()).ln();
        let (lo, hi) = (self.eps1.ln(), self.eps2.ln());
        if r <= lo {
            1.0
        } else if r >= hi {
            0.0
        } else {
            1.0 - smoothstep(self.transition, (r - lo) / (hi - lo))
        }
    }

    /// Balanced selector chi2 = 1 - chi1(t1,t2) - chi1(t2,t1).
    pub fn chi2(&self, t1: f64, t2: f64) -> f64 {
        1.0 - self.chi1(t1, t2) - self.chi1(t2, t1)
    }
}

/// Lattice version of the quantization weight psi: kills the zero mode,
/// passes everything else (the continuum transition region 1/5 < |eta| < 1/4
/// contains no integers).
pub fn psi_lattice(eta: i64) -> f64 {
    if eta == 0 {
        0.0
    } else {
        1.0
    }
}

/// Pointwise function application via an oversampled physical grid.
pub fn pointwise1(
    f: &SpectralField,
    fun: impl Fn(Complex64) -> Complex64,
) -> Result<SpectralField> {
    let grid = f.grid;
    let m = grid.n_modes * grid.dealias_pad;
    let vals: Vec<Complex64> = to_physical_oversampled(f, m)?
        .into_iter()
        .map(fun)
        .collect();
    let big = to_spectral(GridSpec::with_pad(m, grid.dealias_pad)?, &vals)?;
    Ok(big.truncate_to(grid))
}

/// Pointwise function of several fields on the common oversampled grid.
pub fn pointwise_n(
    fields: &[&SpectralField],
    fun: impl Fn(&[Complex64]) -> Complex64,
) -> Result<SpectralField> {
    let grid = fields[0].grid;
    for f in fields {
        if f.grid.n_modes != grid.n_modes {
            return Err(HwError::GridMismatch(grid.n_modes, f.grid.n_modes));
        }
    }
    let m = grid.n_modes * grid.dealias_pad;
    let phys: Vec<Vec<Complex64>> = fields
        .iter()
        .map(|f| to_physical_oversampled(f, m))
        .collect::<Result<_>>()?;
    let mut vals = vec![Complex64::ZERO; m];
    let mut args = vec![Complex64::ZERO; fields.len()];
    for j in 0..m {
        for (a, p) in args.iter_mut().zip(&phys) {
            *a = p[j];
        }
        vals[j] = fun(&args);
    }
    let big = to_spectral(GridSpec::with_pad(m, grid.dealias_pad)?, &vals)?;
    Ok(big.truncate_to(grid))
}

/// Dealiased pseudospectral product of two fields.
pub fn product(a: &SpectralField, b: &SpectralField) -> Result<SpectralField> {
    pointwise_n(&[a, b], |v| v[0] * v[1])
}

/// Exact spectral quadrature of a field over [0, 2pi): 2pi * u_hat(0).
pub fn integral(f: &SpectralField) -> Complex64 {
    TAU * f.coeff(0)
}

/// 2pi sum_k f_hat(k) g_hat(-k) = \int f g da, evaluated on the lattice.
pub fn integral_product(f: &SpectralField, g: &SpectralField) -> Complex64 {
    let grid = f.grid;
    let mut acc = Complex64::ZERO;
    for i in 0..grid.n_modes {
        let k = grid.k_of(i);
        if let Some(j) = grid.index_of(-k) {
            acc += f.coeffs[i] * g.coeffs[j];
        }
    }
    TAU * acc
}

/// 2pi sum_k f_hat(k) conj(g_hat(k)) = \int f conj(g) da.
pub fn inner(f: &SpectralField, g: &SpectralField) -> Complex64 {
    let mut acc = Complex64::ZERO;
    for (a, b) in f.coeffs.iter().zip(g.coeffs.iter()) {
        acc += a * b.conj();
    }
    TAU * acc
}

/// Relative anti-holomorphic defect: the strictly-positive-frequency content
/// over the total. Constants count as holomorphic (spectrum in (-inf, 0]);
/// the zero mode is tracked separately as the mean.
pub fn holo_defect(f: &SpectralField) -> f64 {
    let n = f.l2_norm();
    if n == 0.0 {
        return 0.0;
    }
    let grid = f.grid;
    let pos: f64 = f
        .coeffs()
        .iter()
        .enumerate()
        .filter(|(i, _)| grid.k_of(*i) > 0)
        .map(|(_, c)| c.norm_sqr())
        .sum();
    (TAU * pos).sqrt() / n
}
