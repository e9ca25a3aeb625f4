//! Paraproducts, balanced products, bilinear symbol operators and the norm
//! zoo (Sobolev, Zygmund, product norms).
//!
//! The paraproduct is the exact lattice quantization
//! `(T_a u)^(xi) = sum_eta chi(xi-eta, eta) a_hat(xi-eta) psi(eta) u_hat(eta)`
//! with the cutoff built from [`CutoffParams`] and the lattice psi that only
//! kills the zero mode. Bilinear forms are direct O(N^2) frequency
//! convolutions; at desk scale (N <= 512) this is affordable and removes
//! aliasing questions from symbol application.

use num_complex::Complex64;

use crate::error::{HwError, Result};
use crate::grid::{product, to_physical_oversampled, CutoffParams, SpectralField, TAU};

/// Frequency region of a bilinear symbol, fixing cutoff, conjugation and
/// output projection.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Region {
    /// chi1(xi, xi+eta) weight, plain inputs.
    HoloLowHigh,
    /// chi2(xi, xi+eta) weight, plain inputs.
    HoloBalanced,
    /// chi1(eta, zeta-eta) weight, first input conjugated, holomorphic output.
    MixedLowHigh,
    /// chi2(eta, zeta-eta) weight, first input conjugated, holomorphic output.
    MixedBalanced,
    /// No cutoff, plain inputs (the symbol 1 reproduces the product u*v).
    Full,
}

impl Region {
    pub fn is_mixed(self) -> bool {
        matches!(self, Region::MixedLowHigh | Region::MixedBalanced)
    }
}

/// A named closed-form bilinear symbol together with its region.
#[derive(Clone)]
pub struct BilinearSymbol {
    pub name: String,
    pub region: Region,
    pub eval: std::sync::Arc<dyn Fn(f64, f64) -> Complex64 + Send + Sync>,
}

impl BilinearSymbol {
    pub fn new(
        name: impl Into<String>,
        region: Region,
        eval: impl Fn(f64, f64) -> Complex64 + Send + Sync + 'static,
    ) -> Self {
        BilinearSymbol {
            name: name.into(),
            region,
            eval: std::sync::Arc::new(eval),
        }
    }

    /// Real rational symbol helper.
    pub fn real(
        name: impl Into<String>,
        region: Region,
        eval: impl Fn(f64, f64) -> f64 + Send + Sync + 'static,
    ) -> Self {
        Self::new(name, region, move |p, q| Complex64::new(eval(p, q), 0.0))
    }
}

impl std::fmt::Debug for BilinearSymbol {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("BilinearSymbol")
            .field("name", &self.name)
            .field("region", &self.region)
            .finish()
    }
}

/// Paraproduct T_a u with the default cutoff parameters.
pub fn paraproduct(a: &SpectralField, u: &SpectralField) -> Result<SpectralField> {
    paraproduct_with(a, u, &CutoffParams::default())
}

/// Paraproduct T_a u: exact double-sum quantization.
pub fn paraproduct_with(
    a: &SpectralField,
    u: &SpectralField,
    params: &CutoffParams,
) -> Result<SpectralField> {
    a.check_same_grid(u)?;
    let grid = a.grid;
    let n = grid.n_modes;
    let mut out = SpectralField::zeros(grid);
    for iu in 0..n {
        let eta = grid.k_of(iu);
        let uc = u.coeffs()[iu];
        if eta == 0 || uc == Complex64::ZERO {
            continue;
        }
        for ia in 0..n {
            let theta = grid.k_of(ia);
            let ac = a.coeffs()[ia];
            if ac == Complex64::ZERO {
                continue;
            }
            let chi = params.chi_quant(theta as f64, eta as f64);
            if chi == 0.0 {
                continue;
            }
            let xi = theta + eta;
            if let Some(io) = grid.index_of(xi) {
                out.coeffs_mut()[io] += chi * ac * uc;
            }
        }
    }
    Ok(out)
}

/// Balanced product Pi(a, u) := a*u - T_a u - T_u a (exact remainder, so the
/// Bony decomposition holds to round-off by construction).
pub fn balanced(a: &SpectralField, u: &SpectralField) -> Result<SpectralField> {
    balanced_with(a, u, &CutoffParams::default())
}

pub fn balanced_with(
    a: &SpectralField,
    u: &SpectralField,
    params: &CutoffParams,
) -> Result<SpectralField> {
    let au = product(a, u)?;
    Ok(au
        .sub(&paraproduct_with(a, u, params)?)
        .sub(&paraproduct_with(u, a, params)?))
}

/// Para-commutator [T_f, T_g] u.
pub fn para_commutator(
    f: &SpectralField,
    g: &SpectralField,
    u: &SpectralField,
) -> Result<SpectralField> {
    let fg = paraproduct(f, &paraproduct(g, u)?)?;
    let gf = paraproduct(g, &paraproduct(f, u)?)?;
    Ok(fg.sub(&gf))
}

/// Apply a bilinear symbol as a direct frequency convolution.
///
/// Holomorphic kinds: `B(u,v)^(zeta) = sum_{xi+eta=zeta} cutoff(xi,zeta)
/// m(xi,eta) u_hat(xi) v_hat(eta)`. Mixed kinds conjugate the first argument
/// (pass the pre-conjugation field `u`):
/// `B(u,v)^(k) = p(k) sum_{zeta-eta=k} cutoff(eta,k) m(eta,zeta)
/// conj(u_hat(eta)) v_hat(zeta)` with the holomorphic projection weight
/// p(k) = 1 (k<0), 1/2 (k=0), 0 (k>0).
pub fn bilinear_apply(
    m: &BilinearSymbol,
    u: &SpectralField,
    v: &SpectralField,
) -> Result<SpectralField> {
    bilinear_apply_with(m, u, v, &CutoffParams::default())
}

pub fn bilinear_apply_with(
    m: &BilinearSymbol,
    u: &SpectralField,
    v: &SpectralField,
    params: &CutoffParams,
) -> Result<SpectralField> {
    u.check_same_grid(v)?;
    let grid = u.grid;
    let n = grid.n_modes;
    let mut out = SpectralField::zeros(grid);
    let mixed = m.region.is_mixed();
    // like the psi weight of the paraproduct, the region-restricted forms act
    // on zero-mean holomorphic arguments: zero-frequency inputs are ignored
    // (their symbols are typically singular there)
    let filtered = m.region != Region::Full;
    for iu in 0..n {
        let p = grid.k_of(iu); // xi (holo) or eta (mixed, pre-conjugation)
        let ucoef = if mixed {
            u.coeffs()[iu].conj()
        } else {
            u.coeffs()[iu]
        };
        if ucoef == Complex64::ZERO || (filtered && p == 0) {
            continue;
        }
        for iv in 0..n {
            let q = grid.k_of(iv); // eta (holo) or zeta (mixed)
            let vcoef = v.coeffs()[iv];
            if vcoef == Complex64::ZERO || (filtered && q == 0) {
                continue;
            }
            let kout = if mixed { q - p } else { p + q };
            let Some(io) = grid.index_of(kout) else {
                continue;
            };
            // Holomorphic kinds use chi_i(xi, xi+eta); mixed kinds compare
            // the two input frequencies chi_i(eta, zeta), because the output
            // frequency of a mixed form is the *difference* of comparable
            // inputs (an (input, output) cutoff would make the balanced
            // mixed region empty).
            let cutoff = match m.region {
                Region::HoloLowHigh => params.chi1(p as f64, kout as f64),
                Region::HoloBalanced => params.chi2(p as f64, kout as f64),
                Region::MixedLowHigh => params.chi1(p as f64, q as f64),
                Region::MixedBalanced => params.chi2(p as f64, q as f64),
                Region::Full => 1.0,
            };
            let proj = if mixed {
                match kout.cmp(&0) {
                    std::cmp::Ordering::Less => 1.0,
                    std::cmp::Ordering::Equal => 0.5,
                    std::cmp::Ordering::Greater => 0.0,
                }
            } else {
                1.0
            };
            let weight = cutoff * proj;
            if weight == 0.0 {
                continue;
            }
            let sym = (m.eval)(p as f64, q as f64);
            if !(sym.re.is_finite() && sym.im.is_finite()) {
                return Err(HwError::Numeric(format!(
                    "symbol {} non-finite at ({p}, {q})",
                    m.name
                )));
            }
            out.coeffs_mut()[io] += weight * sym * ucoef * vcoef;
        }
    }
    Ok(out)
}

/// Sobolev norm ||u||_{H^s}^2 = 2pi sum (1+k^2)^s |u_hat(k)|^2.
pub fn sobolev_norm(u: &SpectralField, s: f64) -> f64 {
    let grid = u.grid;
    let sum: f64 = u
        .coeffs()
        .iter()
        .enumerate()
        .map(|(i, c)| {
            let k = grid.k_of(i) as f64;
            (1.0 + k * k).powf(s) * c.norm_sqr()
        })
        .sum();
    (TAU * sum).sqrt()
}

/// Zygmund norm ||u||_{C^s_*} = max_j 2^{js} ||P_j u||_{L^inf}, with the
/// sup-norm evaluated on a 4x oversampled grid.
pub fn zygmund_norm(u: &SpectralField, s: f64) -> f64 {
    let grid = u.grid;
    let m = 4 * grid.n_modes;
    let mut best: f64 = 0.0;
    for j in 0..grid.n_blocks() {
        let block = crate::grid::lp_block(u, j);
        if block.coeffs().iter().all(|c| *c == Complex64::ZERO) {
            continue;
        }
        let phys = to_physical_oversampled(&block, m).expect("oversample");
        let sup = phys.iter().map(|c| c.norm()).fold(0.0_f64, f64::max);
        best = best.max(2f64.powf(j as f64 * s) * sup);
    }
    best
}

/// Product norm ||(f,g)||_{H^{s+1/2} x H^s}.
pub fn product_norm(f: &SpectralField, g: &SpectralField, s: f64) -> f64 {
    let a = sobolev_norm(f, s + 0.5);
    let b = sobolev_norm(g, s);
    (a * a + b * b).sqrt()
}

/// L-infinity norm on the 4x oversampled grid.
pub fn sup_norm(u: &SpectralField) -> f64 {
    let m = 4 * u.grid.n_modes;
    to_physical_oversampled(u, m)
        .expect("oversample")
        .iter()
        .map(|c| c.norm())
        .fold(0.0_f64, f64::max)
}

/// Convenience: T_1 acting on a field (psi-filtered identity: kills the mean).
pub fn t_one(u: &SpectralField) -> SpectralField {
    u.map_coeffs(|k, c| if k == 0 { Complex64::ZERO } else { c })
}

/// Norm report for one field (or a pair): Sobolev and Zygmund values at the
/// requested exponents plus the product norm of the pair.
#[derive(Debug, Clone, serde::Serialize)]
pub struct NormReport {
    pub sobolev: std::collections::BTreeMap<String, f64>,
    pub zygmund: std::collections::BTreeMap<String, f64>,
    pub product_hs: f64,
}

pub fn norm_report(
    f: &SpectralField,
    g: &SpectralField,
    sobolev_exponents: &[f64],
    zygmund_exponents: &[f64],
    s: f64,
) -> NormReport {
    let key = |v: f64| format!("{v}");
    NormReport {
        sobolev: sobolev_exponents
            .iter()
            .map(|&e| (key(e), sobolev_norm(f, e)))
            .collect(),
        zygmund: zygmund_exponents
            .iter()
            .map(|&e| (key(e), zygmund_norm(f, e)))
            .collect(),
        product_hs: product_norm(f, g, s),
    }
}
