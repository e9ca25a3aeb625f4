//! Named initial-data presets used by the CLI scenarios and tests.

use num_complex::Complex64;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::dynamics::LinearizedState;
use crate::error::{HwError, Result};
use crate::fields::{DiffState, PhysicalParams, SurfaceState};
use crate::grid::{GridSpec, SpectralField};

fn check_mode(grid: GridSpec, k: i64) -> Result<()> {
    if k >= 0 {
        return Err(HwError::InvalidArgument(format!(
            "preset modes must be negative (holomorphic), got {k}"
        )));
    }
    if grid.index_of(k).is_none() {
        return Err(HwError::InvalidArgument(format!(
            "mode {k} not representable"
        )));
    }
    Ok(())
}

/// W = amp e^{ika}, Q = 0.
pub fn single_mode(
    grid: GridSpec,
    params: PhysicalParams,
    k: i64,
    amp: f64,
) -> Result<SurfaceState> {
    check_mode(grid, k)?;
    let w = SpectralField::single_mode(grid, k, Complex64::new(amp, 0.0))?;
    SurfaceState::new(w, SpectralField::zeros(grid), params)
}

/// W = amp e^{ik1 a}, Q = amp e^{ik2 a}.
pub fn two_mode(
    grid: GridSpec,
    params: PhysicalParams,
    k1: i64,
    k2: i64,
    amp: f64,
) -> Result<SurfaceState> {
    check_mode(grid, k1)?;
    check_mode(grid, k2)?;
    let w = SpectralField::single_mode(grid, k1, Complex64::new(amp, 0.0))?;
    let q = SpectralField::single_mode(grid, k2, Complex64::new(amp, 0.0))?;
    SurfaceState::new(w, q, params)
}

/// Random coefficients on modes kmin..=kmax (all negative), scaled so the
/// largest coefficient magnitude equals `amp`. Deterministic in the seed.
pub fn random_band(
    grid: GridSpec,
    params: PhysicalParams,
    kmin: i64,
    kmax: i64,
    amp: f64,
    seed: u64,
) -> Result<SurfaceState> {
    if kmin > kmax {
        return Err(HwError::InvalidArgument(format!(
            "empty band {kmin}..{kmax}"
        )));
    }
    check_mode(grid, kmin)?;
    check_mode(grid, kmax)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut w = SpectralField::zeros(grid);
    let mut q = SpectralField::zeros(grid);
    let mut maxc: f64 = 0.0;
    for k in kmin..=kmax {
        for f in [&mut w, &mut q] {
            let c = Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
            maxc = maxc.max(c.norm());
            f.set_coeff(k, c);
        }
    }
    let sc = Complex64::new(amp / maxc.max(1e-300), 0.0);
    SurfaceState::new(w.scale(sc), q.scale(sc), params)
}

/// Random differentiated state on a band, amplitude-scaled like
/// [`random_band`].
pub fn random_diff_band(
    grid: GridSpec,
    params: PhysicalParams,
    kmin: i64,
    kmax: i64,
    amp: f64,
    seed: u64,
) -> Result<DiffState> {
    let s = random_band(grid, params, kmin, kmax, amp, seed)?;
    DiffState::new(s.w, s.q, params)
}

/// Random linearized state on a band.
pub fn random_linearized_band(
    grid: GridSpec,
    kmin: i64,
    kmax: i64,
    amp: f64,
    seed: u64,
) -> Result<LinearizedState> {
    let params = PhysicalParams::new(0.0, 1.0)?;
    let s = random_band(grid, params, kmin, kmax, amp, seed)?;
    Ok(LinearizedState { w: s.w, r: s.q })
}

/// Eigenmode of the zero-background linearization for a single branch:
/// W = amp e^{ika}, Q = amp (tau/|k|) e^{ika} evolves as e^{i tau t} at
/// linear order.
pub fn dispersion_eigenmode(
    grid: GridSpec,
    params: PhysicalParams,
    k: i64,
    amp: f64,
) -> Result<SurfaceState> {
    check_mode(grid, k)?;
    let tau = crate::dynamics::dispersion_check(k, params)?;
    let w = SpectralField::single_mode(grid, k, Complex64::new(amp, 0.0))?;
    let q = SpectralField::single_mode(grid, k, Complex64::new(amp * tau / k.abs() as f64, 0.0))?;
    SurfaceState::new(w, q, params)
}
