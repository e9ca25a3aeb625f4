//! Modified energies: the base quadratic functional E_s^1, the quadratic
//! normal-form corrections of the full system, the cubic corrections
//! I~_1..I~_4, the linearized energy E_lin with its cubic piece E^3_high,
//! the linearized normal-form corrections and the Z auxiliary variables.
//!
//! The quartic correction E_s^(4) and the cubic correction I_5^s are out of
//! scope (the source only sketches their form); reports carry that omission
//! explicitly, and the energy-growth acceptance is a boundedness property
//! rather than a rate match.

use num_complex::Complex64;
use serde::Serialize;

use crate::dynamics::{im_field, one_minus, re_field, LinearizedState};
use crate::error::Result;
use crate::fields::DiffState;
use crate::grid::{
    abs_d_pow, bessel_pow, derivative, integral_product, pointwise_n, SpectralField,
};
use crate::paracalc::{bilinear_apply, paraproduct, product_norm, BilinearSymbol, Region};
use crate::symbols::closed;

const I: Complex64 = Complex64::new(0.0, 1.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// Quadratic normal-form correction split into balanced and low-high parts.
#[derive(Debug, Clone)]
pub struct QuadCorrection {
    pub wd_bal: SpectralField,
    pub r_bal: SpectralField,
    pub wd_lh: SpectralField,
    pub r_lh: SpectralField,
}

/// Modified-energy report; `i5_omitted` records the scope cut.
#[derive(Debug, Clone, Serialize)]
pub struct EnergyReport {
    pub s: f64,
    pub base: f64,
    pub cubic: [f64; 4],
    pub total: f64,
    pub equivalence_ratio: f64,
    pub i5_omitted: bool,
}

/// Z_pm = R +- i |D|^{1/2} bW and z_pm = r +- i |D|^{1/2} w.
#[derive(Debug, Clone)]
pub struct ZVariables {
    pub zp: SpectralField,
    pub zm: SpectralField,
    pub zp_lin: SpectralField,
    pub zm_lin: SpectralField,
}

fn sym(region: Region, name: &str, f: fn(f64, f64) -> f64) -> BilinearSymbol {
    BilinearSymbol::real(name, region, f)
}

struct Dressings {
    /// T_{1-Y} bW
    t_1my_wd: SpectralField,
    /// T_{J^{1/2}(1+bW)^2(1-Ybar)} R
    t_cap_r: SpectralField,
    /// T_{1-Ybar} bW
    t_1myb_wd: SpectralField,
    /// T_{J^{1/2}(1+bW)} R
    t_jh_r: SpectralField,
    /// T_{1-Y} R
    t_1my_r: SpectralField,
    /// T_{(1+conj bW)(1-Y)^2} bW
    t_mix_wd: SpectralField,
    /// T_{1-Ybar} R
    t_1myb_r: SpectralField,
}

fn dressings(d: &DiffState) -> Result<Dressings> {
    let wd = &d.wd;
    let r = &d.r;
    let one_m_y = pointwise_n(&[wd], |v| ONE / (ONE + v[0]))?;
    let one_m_ybar = one_m_y.conj_field();
    // J^{1/2}(1+bW)^2(1-Ybar) = |1+bW| (1+bW)^2 / (1+conj bW)
    let cap = pointwise_n(&[wd], |v| {
        let z = ONE + v[0];
        z.norm() * z * z / z.conj()
    })?;
    // J^{1/2}(1+bW) = |1+bW|(1+bW)
    let jh = pointwise_n(&[wd], |v| {
        let z = ONE + v[0];
        z.norm() * z
    })?;
    // (1+conj bW)(1-Y)^2 = (1+conj bW)/(1+bW)^2
    let mix = pointwise_n(&[wd], |v| {
        let z = ONE + v[0];
        z.conj() / (z * z)
    })?;
    Ok(Dressings {
        t_1my_wd: paraproduct(&one_m_y, wd)?,
        t_cap_r: paraproduct(&cap, r)?,
        t_1myb_wd: paraproduct(&one_m_ybar, wd)?,
        t_jh_r: paraproduct(&jh, r)?,
        t_1my_r: paraproduct(&one_m_y, r)?,
        t_mix_wd: paraproduct(&mix, wd)?,
        t_1myb_r: paraproduct(&one_m_ybar, r)?,
    })
}

/// Quadratic normal-form corrections (bW_[2], R_[2]): the catalog bilinear
/// forms applied to the para-coefficient-dressed arguments.
pub fn quadratic_correction(d: &DiffState) -> Result<QuadCorrection> {
    d.check_nondegenerate()?;
    let dr = dressings(d)?;
    let wd = &d.wd;
    let r = &d.r;

    use Region::{HoloBalanced as HB, HoloLowHigh as HL, MixedBalanced as MB, MixedLowHigh as ML};

    // balanced part (no D^h in the symmetrized holomorphic family)
    let wd_bal = bilinear_apply(&sym(HB, "b_hhh", closed::hhh_b), wd, &dr.t_1my_wd)?
        .add(&bilinear_apply(
            &sym(HB, "c_hhh", closed::hhh_c),
            r,
            &dr.t_cap_r,
        )?)
        .add(&bilinear_apply(
            &sym(MB, "b_ahh", closed::ahh_b),
            wd,
            &dr.t_1myb_wd,
        )?)
        .add(&bilinear_apply(
            &sym(MB, "c_ahh", closed::ahh_c),
            r,
            &dr.t_jh_r,
        )?);
    let r_bal = bilinear_apply(&sym(HB, "a_hhh", closed::hhh_a), r, &dr.t_1my_wd)?
        .add(&bilinear_apply(
            &sym(MB, "a_ahh", closed::ahh_a),
            r,
            &dr.t_mix_wd,
        )?)
        .add(&bilinear_apply(
            &sym(MB, "d_ahh", closed::ahh_d),
            wd,
            &dr.t_1myb_r,
        )?);

    // low-high part
    let wd_lh = bilinear_apply(&sym(HL, "b_hlh", closed::hlh_b), wd, &dr.t_1my_wd)?
        .add(&bilinear_apply(
            &sym(HL, "c_hlh", closed::hlh_c),
            r,
            &dr.t_cap_r,
        )?)
        .add(&bilinear_apply(
            &sym(ML, "b_alh", closed::alh_b),
            wd,
            &dr.t_1myb_wd,
        )?)
        .add(&bilinear_apply(
            &sym(ML, "c_alh", closed::alh_c),
            r,
            &dr.t_jh_r,
        )?);
    let r_lh = bilinear_apply(&sym(HL, "a_hlh", closed::hlh_a), r, &dr.t_1my_wd)?
        .add(&bilinear_apply(
            &sym(HL, "d_hlh", closed::hlh_d),
            wd,
            &dr.t_1my_r,
        )?)
        .add(&bilinear_apply(
            &sym(ML, "a_alh", closed::alh_a),
            r,
            &dr.t_mix_wd,
        )?)
        .add(&bilinear_apply(
            &sym(ML, "d_alh", closed::alh_d),
            wd,
            &dr.t_1myb_r,
        )?);

    Ok(QuadCorrection {
        wd_bal,
        r_bal,
        wd_lh,
        r_lh,
    })
}

/// Base energy E^1_s = Re \int T_{J^{-3/2}} <D>^{s+1/2} bW . <D>^{s+1/2}
/// conj(bW) + |<D>^s R|^2 da, evaluated at the given pair.
pub fn base_energy(d: &DiffState, wd: &SpectralField, r: &SpectralField, s: f64) -> Result<f64> {
    let j32 = crate::dynamics::j_pow_field(&d.wd, -1.5)?;
    let x = bessel_pow(wd, s + 0.5);
    let term1 = integral_product(&paraproduct(&j32, &x)?, &x.conj_field()).re;
    let y = bessel_pow(r, s);
    let term2 = integral_product(&y, &y.conj_field()).re;
    Ok(term1 + term2)
}

/// Modified energy E_s^{(<=3)} without I_5^s:
/// E^1_s(bW + bW_[2]^hh, R + R_[2]^hh) + I~_1 + I~_2 + I~_3 + I~_4.
pub fn modified_energy(d: &DiffState, s: f64) -> Result<EnergyReport> {
    let corr = quadratic_correction(d)?;
    let wd_mod = d.wd.add(&corr.wd_bal);
    let r_mod = d.r.add(&corr.r_bal);
    let base = base_energy(d, &wd_mod, &r_mod, s)?;

    let wd = &d.wd;
    let r = &d.r;
    let wd_bar = wd.conj_field();
    let r_bar = r.conj_field();
    let one_m_ybar = pointwise_n(&[wd], |v| (ONE / (ONE + v[0])).conj())?;
    let j32 = crate::dynamics::j_pow_field(wd, -1.5)?;
    // (1+conj bW)(1-Y)^2
    let mix = pointwise_n(&[wd], |v| {
        let z = ONE + v[0];
        z.conj() / (z * z)
    })?;
    let mix_bar = mix.conj_field();

    // I~1 = -2 Re \int <D>^{s+1/2} T_{J^{-3/2}} bW . <D>^{s+1/2} T_{conj bW} T_{1-Ybar} conj(bW)
    let lhs1 = bessel_pow(&paraproduct(&j32, wd)?, s + 0.5);
    let rhs1 = bessel_pow(
        &paraproduct(&wd_bar, &paraproduct(&one_m_ybar, &wd_bar)?)?,
        s + 0.5,
    );
    let i1 = -2.0 * integral_product(&lhs1, &rhs1).re;

    // I~2 = -(2/3) Re \int <D>^{s+1/2} bW . <D>^{s-1/2} T_{conj R} T_{(1+conj bW)(1-Y)^2 conj} conj(R)
    let lhs2 = bessel_pow(wd, s + 0.5);
    let rhs2 = bessel_pow(
        &paraproduct(&r_bar, &paraproduct(&mix_bar, &r_bar)?)?,
        s - 0.5,
    );
    let i2 = -(2.0 / 3.0) * integral_product(&lhs2, &rhs2).re;

    // I~3 = (2/3) Re \int <D>^s R . <D>^s T_{conj R} T_{1-Ybar} conj(bW)
    let lhs3 = bessel_pow(r, s);
    let rhs3 = bessel_pow(
        &paraproduct(&r_bar, &paraproduct(&one_m_ybar, &wd_bar)?)?,
        s,
    );
    let i3 = (2.0 / 3.0) * integral_product(&lhs3, &rhs3).re;

    // I~4 = -2 Re \int <D>^s R . <D>^s T_{conj bW} T_{1-Ybar} conj(R)
    let rhs4 = bessel_pow(
        &paraproduct(&wd_bar, &paraproduct(&one_m_ybar, &r_bar)?)?,
        s,
    );
    let i4 = -2.0 * integral_product(&lhs3, &rhs4).re;

    let total = base + i1 + i2 + i3 + i4;
    let norm = product_norm(wd, r, s);
    let ratio = if norm == 0.0 {
        1.0
    } else {
        total / (norm * norm)
    };
    Ok(EnergyReport {
        s,
        base,
        cubic: [i1, i2, i3, i4],
        total,
        equivalence_ratio: ratio,
        i5_omitted: true,
    })
}

/// Paradifferential linearized energy E_lin plus the cubic correction
/// E^3_high; the capillary <calL w, w> part carries sigma.
pub fn linearized_energy(l: &LinearizedState, bg: &DiffState) -> Result<f64> {
    let (g, sig) = (bg.params.g, bg.params.sigma);
    let jmh = crate::dynamics::j_pow_field(&bg.wd, -0.5)?;
    let w = &l.w;
    let r = &l.r;
    let w_bar = w.conj_field();
    let r_bar = r.conj_field();
    let wa_bar = derivative(&w_bar, 1);
    let ra_bar = derivative(&r_bar, 1);

    // -sig Re \int calL w . conj w
    let clw = crate::dynamics::cal_l(&jmh, w)?;
    let e1 = -sig * integral_product(&clw, &w_bar).re;
    // Im \int w . T_{J^{-1/2}} conj(w)_a
    let e2 = integral_product(w, &paraproduct(&jmh, &wa_bar)?).im;
    // g \int |w|^2
    let e3 = g * integral_product(w, &w_bar).re;
    // Im \int r . conj(r)_a
    let e4 = integral_product(r, &ra_bar).im;
    // \int |r|^2
    let e5 = integral_product(r, &r_bar).re;

    // E^3_high = Im \int [ -(2/3) T_{Re R} w_a . conj r
    //                      -(1/3) T_{Im bW_a} w . T_{(1-Y)J^{-1/2}} conj(w)_a
    //                      +(1/3) T_{Im bW_a} r . T_{1-Y} conj r ] da
    let re_r = re_field(&bg.r);
    let im_wda = im_field(&derivative(&bg.wd, 1));
    let coef_w = pointwise_n(&[&bg.wd], |v| {
        let z = ONE + v[0];
        ONE / (z * z.norm())
    })?;
    let one_m_y = one_minus(&pointwise_n(&[&bg.wd], |v| v[0] / (ONE + v[0]))?);
    let c1 = integral_product(&paraproduct(&re_r, &derivative(w, 1))?, &r_bar).im;
    let c2 = integral_product(&paraproduct(&im_wda, w)?, &paraproduct(&coef_w, &wa_bar)?).im;
    let c3 = integral_product(&paraproduct(&im_wda, r)?, &paraproduct(&one_m_y, &r_bar)?).im;
    let e3_high = -(2.0 / 3.0) * c1 - (1.0 / 3.0) * c2 + (1.0 / 3.0) * c3;

    Ok(e1 + e2 + e3 + e4 + e5 + e3_high)
}

/// Summed quadratic normal-form correction (w_NF - w, r_NF - r) of the
/// linearized variables: the two balanced families plus the three low-high
/// families, applied to the displayed dressed arguments. The cubic (section
/// 4.5) part is out of scope.
pub fn linearized_nf_correction(
    l: &LinearizedState,
    bg: &DiffState,
) -> Result<(SpectralField, SpectralField)> {
    bg.check_nondegenerate()?;
    let wd = &bg.wd;
    let r_bg = &bg.r;
    let (w, r) = (&l.w, &l.r);

    use Region::{HoloBalanced as HB, HoloLowHigh as HL, MixedBalanced as MB, MixedLowHigh as ML};

    let one_m_y = pointwise_n(&[wd], |v| ONE / (ONE + v[0]))?;
    let one_m_ybar = one_m_y.conj_field();
    // T_{1-Y} bW, T_{1-Ybar} R
    let t_1my_wd = paraproduct(&one_m_y, wd)?;
    // J^{-1/2}(1+bW)^2 and J^{3/2}(1-Ybar)^2 = |1+bW|^3/(1+conj bW)^2... coefficients
    let jmh_sq = pointwise_n(&[wd], |v| {
        let z = ONE + v[0];
        z * z / z.norm()
    })?;
    let j32_coef = pointwise_n(&[wd], |v| {
        let z = ONE + v[0];
        let zb = z.conj();
        z.norm().powi(3) / (zb * zb)
    })?;
    let jh = pointwise_n(&[wd], |v| {
        let z = ONE + v[0];
        Complex64::new(z.norm(), 0.0)
    })?;
    // T_{(1-Ybar)(1+bW)} R = T_{(1+bW)/(1+conj bW)} R
    let ratio = pointwise_n(&[wd], |v| {
        let z = ONE + v[0];
        z / z.conj()
    })?;
    let t_ratio_r = paraproduct(&ratio, r_bg)?;
    let t_jmh_sq_r = paraproduct(&jmh_sq, r_bg)?;
    let t_j32_r = paraproduct(&j32_coef, r_bg)?;
    let t_jh_r = paraproduct(&jh, r_bg)?;

    // balanced family one: w1 = B(conj w, T_{1-Ybar} bW) + C(conj r, T_{J^{-1/2}(1+bW)^2} R)
    //             r1 = A(conj r, T_{1-Y} bW) + D(conj w, T_{(1-Ybar)(1+bW)} R)
    let t_1myb_wd = paraproduct(&one_m_ybar, wd)?;
    let w1 = bilinear_apply(&sym(MB, "b_bal1", closed::bal1_b), w, &t_1myb_wd)?.add(
        &bilinear_apply(&sym(MB, "c_bal1", closed::bal1_c), r, &t_jmh_sq_r)?,
    );
    let r1 = bilinear_apply(&sym(MB, "a_bal1", closed::bal1_a), r, &t_1my_wd)?.add(
        &bilinear_apply(&sym(MB, "d_bal1", closed::bal1_d), w, &t_ratio_r)?,
    );

    // balanced family two: holomorphic + mixed, linearized variables in the second slot
    let w2 = bilinear_apply(&sym(HB, "b_bal2h", closed::bal2h_b), &t_1my_wd, w)?
        .add(&bilinear_apply(
            &sym(HB, "c_bal2h", closed::bal2h_c),
            &t_j32_r,
            r,
        )?)
        .add(&bilinear_apply(
            &sym(MB, "b_bal2a", closed::bal2a_b),
            &t_1my_wd,
            w,
        )?)
        .add(&bilinear_apply(
            &sym(MB, "c_bal2a", closed::bal2a_c),
            &t_jh_r,
            r,
        )?);
    let r2 = bilinear_apply(&sym(HB, "a_bal2h", closed::bal2h_a), &t_1my_wd, r)?
        .add(&bilinear_apply(
            &sym(HB, "d_bal2h", closed::bal2h_d),
            r_bg,
            w,
        )?)
        .add(&bilinear_apply(
            &sym(MB, "a_bal2a", closed::bal2a_a),
            &t_1my_wd,
            r,
        )?)
        .add(&bilinear_apply(
            &sym(MB, "d_bal2a", closed::bal2a_d),
            &t_ratio_r,
            w,
        )?);

    // low-high part one (linearized variables at high frequency)
    let wl1 = bilinear_apply(&sym(HL, "b_lh1h", closed::lh1h_b), &t_1my_wd, w)?
        .add(&bilinear_apply(
            &sym(HL, "c_lh1h", closed::lh1h_c),
            &t_j32_r,
            r,
        )?)
        .add(&bilinear_apply(
            &sym(ML, "b_lh1a", closed::lh1a_b),
            &t_1my_wd,
            w,
        )?)
        .add(&bilinear_apply(
            &sym(ML, "c_lh1a", closed::lh1a_c),
            &t_jh_r,
            r,
        )?);
    let rl1 = bilinear_apply(&sym(HL, "a_lh1h", closed::lh1h_a), &t_1my_wd, r)?
        .add(&bilinear_apply(
            &sym(HL, "d_lh1h", closed::lh1h_d),
            r_bg,
            w,
        )?)
        .add(&bilinear_apply(
            &sym(ML, "a_lh1a", closed::lh1a_a),
            &t_1my_wd,
            r,
        )?)
        .add(&bilinear_apply(
            &sym(ML, "d_lh1a", closed::lh1a_d),
            &t_ratio_r,
            w,
        )?);

    // low-high part two (linearized variables at low frequency, holomorphic)
    let wl2 = bilinear_apply(&sym(HL, "b_lh2h", closed::lh2h_b), w, &t_1my_wd)?.add(
        &bilinear_apply(&sym(HL, "c_lh2h", closed::lh2h_c), r, &t_j32_r)?,
    );
    let rl2 = bilinear_apply(&sym(HL, "a_lh2h", closed::lh2h_a), r, &t_1my_wd)?.add(
        &bilinear_apply(&sym(HL, "d_lh2h", closed::lh2h_d), w, r_bg)?,
    );

    // low-high for (PG_0, PK_0) (conjugated linearized variables at low freq)
    let wl3 = bilinear_apply(&sym(ML, "b_lh2a", closed::lh2a_b), w, &t_1my_wd)?.add(
        &bilinear_apply(&sym(ML, "c_lh2a", closed::lh2a_c), r, &t_jmh_sq_r)?,
    );
    let rl3 = bilinear_apply(&sym(ML, "a_lh2a", closed::lh2a_a), r, &t_1my_wd)?.add(
        &bilinear_apply(&sym(ML, "d_lh2a", closed::lh2a_d), w, &t_ratio_r)?,
    );

    let w_corr = w1.add(&w2).add(&wl1).add(&wl2).add(&wl3);
    let r_corr = r1.add(&r2).add(&rl1).add(&rl2).add(&rl3);
    Ok((w_corr, r_corr))
}

/// Z_pm = R +- i|D|^{1/2} bW, z_pm = r +- i|D|^{1/2} w.
pub fn z_variables(d: &DiffState, l: &LinearizedState) -> ZVariables {
    let half_wd = abs_d_pow(&d.wd, 0.5);
    let half_w = abs_d_pow(&l.w, 0.5);
    ZVariables {
        zp: d.r.add(&half_wd.scale(I)),
        zm: d.r.sub(&half_wd.scale(I)),
        zp_lin: l.r.add(&half_w.scale(I)),
        zm_lin: l.r.sub(&half_w.scale(I)),
    }
}
