//! Right-hand sides for the full system, the differentiated system, the
//! linearized system and its paradifferential reduction; time integration
//! (RK4 and integrating-factor RK4); invariant monitors; and the leading-term
//! residual diagnostics for the para-material-derivative identities.

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{HwError, Result};
use crate::fields::{
    aux_fields, conserved_momentum, control_norms, differentiate_state, energy_variants, AuxFields,
    DiffState, PhysicalParams, SurfaceState, DEFAULT_CONTROL_EPS,
};
use crate::grid::{
    derivative, holo_defect, pointwise_n, project_anti, project_holo, GridSpec, SpectralField,
};
use crate::paracalc::{balanced, paraproduct, product_norm, sobolev_norm, sup_norm, zygmund_norm};

const I: Complex64 = Complex64::new(0.0, 1.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// Linearized unknowns (w, r) with r = q - R w.
#[derive(Debug, Clone)]
pub struct LinearizedState {
    pub w: SpectralField,
    pub r: SpectralField,
}

impl LinearizedState {
    pub fn zero(grid: GridSpec) -> Self {
        LinearizedState {
            w: SpectralField::zeros(grid),
            r: SpectralField::zeros(grid),
        }
    }
}

/// `1 - f` as a spectral field.
pub fn one_minus(f: &SpectralField) -> SpectralField {
    let mut out = f.scale(Complex64::new(-1.0, 0.0));
    let c0 = out.coeff(0);
    out.set_coeff(0, c0 + ONE);
    out
}

/// Re f = (f + conj f)/2.
pub fn re_field(f: &SpectralField) -> SpectralField {
    f.add(&f.conj_field()).scale(Complex64::new(0.5, 0.0))
}

/// Im f = (f - conj f)/(2i).
pub fn im_field(f: &SpectralField) -> SpectralField {
    f.sub(&f.conj_field()).scale(Complex64::new(0.0, -0.5))
}

// ---------------------------------------------------------------------------
// right-hand sides
// ---------------------------------------------------------------------------

/// Full water-wave right-hand side for the undifferentiated state (W, Q).
pub fn rhs_wq(s: &SurfaceState) -> Result<(SpectralField, SpectralField)> {
    let (g, sig) = (s.params.g, s.params.sigma);
    let wa = derivative(&s.w, 1);
    let waa = derivative(&s.w, 2);
    let qa = derivative(&s.q, 1);

    let probe = DiffState {
        wd: wa.clone(),
        r: SpectralField::zeros(s.grid()),
        params: s.params,
    };
    probe.check_nondegenerate()?;

    // F = P[(Q_a - conj(Q_a))/J]
    let f = project_holo(&pointwise_n(&[&qa, &wa], |v| {
        let j = (ONE + v[1]).norm_sqr();
        (v[0] - v[0].conj()) / j
    })?);

    let w_t = pointwise_n(&[&f, &wa], |v| -v[0] * (ONE + v[1]))?;

    let q_kin = project_holo(&pointwise_n(&[&qa, &wa], |v| {
        let j = (ONE + v[1]).norm_sqr();
        v[0] * v[0].conj() / j
    })?);
    let cap = project_holo(&pointwise_n(&[&waa, &wa], |v| {
        let z = ONE + v[1];
        let js = z.norm();
        v[0] / (js * z) - v[0].conj() / (js * z.conj())
    })?);
    let q_t = pointwise_n(&[&f, &qa], |v| -v[0] * v[1])?
        .add(&s.w.scale(I * g))
        .sub(&q_kin)
        .sub(&cap.scale(I * sig));
    Ok((w_t, q_t))
}

/// Differentiated-system right-hand side with the anti-holomorphic defect
/// of the output.
#[derive(Debug, Clone)]
pub struct WrRhs {
    pub wd_t: SpectralField,
    pub r_t: SpectralField,
    pub anti_defect: f64,
}

pub fn rhs_wr(d: &DiffState) -> Result<WrRhs> {
    d.check_nondegenerate()?;
    let (g, sig) = (d.params.g, d.params.sigma);
    let wd = &d.wd;
    let r = &d.r;
    let wda = derivative(wd, 1);
    let ra = derivative(r, 1);
    let aux = aux_fields(d)?;

    // capillary projections P[ d_a ( J^{-1/2} (1-Y) bW_a ) ] and its conjugate twin
    let cap_l_inner = pointwise_n(&[wd, &wda], |v| {
        let z = ONE + v[0];
        v[1] / (z.norm() * z)
    })?;
    let cap_l = project_holo(&derivative(&cap_l_inner, 1));
    let cap_r_inner = pointwise_n(&[wd, &wda], |v| {
        let z = ONE + v[0];
        (v[1] / (z.norm() * z)).conj()
    })?;
    let cap_r = project_holo(&derivative(&cap_r_inner, 1));

    // bW_t = -b bW_a - (1+bW)(1-conj Y) R_a + (1+bW) M
    let wd_t = pointwise_n(&[&aux.b, &wda, wd, &ra, &aux.m], |v| {
        let z = ONE + v[2];
        -v[0] * v[1] - z * v[3] / z.conj() + z * v[4]
    })?;

    // R_t = -b R_a + i (g bW - a)(1-Y) - i sig (1-Y) cap_l + i sig (1-Y) cap_r
    let r_t = pointwise_n(&[&aux.b, &ra, wd, &aux.a, &cap_l, &cap_r], |v| {
        let one_m_y = ONE / (ONE + v[2]);
        -v[0] * v[1] + I * (g * v[2] - v[3]) * one_m_y - I * sig * one_m_y * (v[4] - v[5])
    })?;

    let anti =
        (project_anti(&wd_t).l2_norm().powi(2) + project_anti(&r_t).l2_norm().powi(2)).sqrt();
    Ok(WrRhs {
        wd_t,
        r_t,
        anti_defect: anti,
    })
}

/// Self-adjoint operator L w = d_a(J^{-1/2} w_a) - i c w_a - i (P c_a) w.
pub fn l_operator(aux: &AuxFields, wd: &SpectralField, w: &SpectralField) -> Result<SpectralField> {
    let wa = derivative(w, 1);
    let t1 = derivative(&pointwise_n(&[wd, &wa], |v| v[1] / (ONE + v[0]).norm())?, 1);
    let pca = project_holo(&derivative(&aux.c, 1));
    let t2 = pointwise_n(&[&aux.c, &wa], |v| v[0] * v[1])?;
    let t3 = pointwise_n(&[&pca, w], |v| v[0] * v[1])?;
    Ok(t1.sub(&t2.scale(I)).sub(&t3.scale(I)))
}

/// Linearized flow around a background, in the good variables (w, r = q - Rw).
/// The derivation normalizes sigma = 1; for general sigma every capillary-origin term
/// (the L operator and the p source) is scaled by sigma.
pub fn rhs_linearized(
    l: &LinearizedState,
    bg: &DiffState,
) -> Result<(SpectralField, SpectralField)> {
    bg.check_nondegenerate()?;
    let (g, sig) = (bg.params.g, bg.params.sigma);
    let wd = &bg.wd;
    let r_bg = &bg.r;
    let aux = aux_fields(bg)?;
    let (w, r) = (&l.w, &l.r);
    let wa = derivative(w, 1);
    let waa = derivative(w, 2);
    let ra = derivative(r, 1);
    let ra_big = derivative(r_bg, 1);
    let wda = derivative(wd, 1);

    // m = (r_a + R_a w)/J + conj(R) w_a/(1+bW)^2
    let m = pointwise_n(&[&ra, &ra_big, w, wd, r_bg, &wa], |v| {
        let z = ONE + v[3];
        (v[0] + v[1] * v[2]) / z.norm_sqr() + v[4].conj() * v[5] / (z * z)
    })?;
    // n = conj(R)(r_a + R_a w)/(1+bW)
    let n = pointwise_n(&[r_bg, &ra, &ra_big, w, wd], |v| {
        v[0].conj() * (v[1] + v[2] * v[3]) / (ONE + v[4])
    })?;
    // p = w_aa/(J^{1/2}(1+bW)) - (3 bW_a/(2 J^{1/2}(1+bW)^2) - conj(bW)_a/(2 J^{3/2})) w_a.
    // The 3/2 coefficient is forced by the directional-derivative oracle
    // (a coefficient of 1 leaves an O(bW) residual against the nonlinear
    // flow).
    let p = pointwise_n(&[&waa, wd, &wda, &wa], |v| {
        let z = ONE + v[1];
        let js = z.norm();
        v[0] / (js * z) - (1.5 * v[2] / (js * z * z) - v[2].conj() / (2.0 * js.powi(3))) * v[3]
    })?;

    // R conj(Y)_a and P[R conj(Y)_a]
    let ybar_a = derivative(&aux.y.conj_field(), 1);
    let r_ybar_a = pointwise_n(&[r_bg, &ybar_a], |v| v[0] * v[1])?;
    let p_r_ybar_a = project_holo(&r_ybar_a);

    // G0 = (1+bW)(P conj(m) + Pbar m) + w Pbar[R_a conj(Y)] - T_{P[R Ybar_a]} w
    let pm_terms = project_holo(&m.conj_field()).add(&project_anti(&m));
    let ra_ybar = pointwise_n(&[&ra_big, &aux.y.conj_field()], |v| v[0] * v[1])?;
    let g0 = pointwise_n(&[wd, &pm_terms, w, &project_anti(&ra_ybar)], |v| {
        (ONE + v[0]) * v[1] + v[2] * v[3]
    })?
    .sub(&paraproduct(&p_r_ybar_a, w)?);

    // w-equation; note (P b_a) w multiplies w by the *projected* coefficient,
    // which is what turns into (1/2) T_{b_a} w in the paradifferential flow
    let trans_w = project_holo(&pointwise_n(&[&aux.b, &wa], |v| v[0] * v[1])?);
    let r_term = project_holo(&pointwise_n(&[&ra, wd], |v| v[0] / (ONE + v[1].conj()))?);
    let p_ba = project_holo(&derivative(&aux.b, 1));
    let ba_w = project_holo(&pointwise_n(&[&p_ba, w], |v| v[0] * v[1])?);
    let rhs_w_src = project_holo(
        &g0.sub(&paraproduct(w, &r_ybar_a)?)
            .sub(&balanced(w, &p_r_ybar_a)?),
    );
    let w_t = rhs_w_src.sub(&trans_w).sub(&r_term).sub(&ba_w);

    // K0 = Pbar n - P conj(n) + i sig P conj(p) + i T_{1-Y} T_a w
    let t_a_w = paraproduct(&aux.a, w)?;
    let t1y_taw = paraproduct(&one_minus(&aux.y), &t_a_w)?;
    let k0 = project_anti(&n)
        .sub(&project_holo(&n.conj_field()))
        .add(&project_holo(&p.conj_field()).scale(I * sig))
        .add(&t1y_taw.scale(I));

    let lw = l_operator(&aux, wd, w)?;
    let l_term = project_holo(&pointwise_n(&[&lw, wd], |v| v[0] / (ONE + v[1]))?);
    let g_term = project_holo(&pointwise_n(&[w, wd], |v| v[0] / (ONE + v[1]))?);
    let a_term = project_holo(&pointwise_n(&[&aux.a, w, wd], |v| {
        v[0] * v[1] / (ONE + v[2])
    })?);
    let trans_r = project_holo(&pointwise_n(&[&aux.b, &ra], |v| v[0] * v[1])?);

    let r_t = project_holo(&k0)
        .add(&a_term.scale(I))
        .sub(&t1y_taw.scale(I))
        .sub(&trans_r)
        .sub(&l_term.scale(I * sig))
        .add(&g_term.scale(I * g));
    Ok((w_t, r_t))
}

/// Leading paradifferential operator cal-L = d_a T_{J^{-1/2}} d_a.
pub fn cal_l(jmh: &SpectralField, w: &SpectralField) -> Result<SpectralField> {
    Ok(derivative(&paraproduct(jmh, &derivative(w, 1))?, 1))
}

/// J^{-1/2} as a spectral field, from the pointwise Jacobian.
pub fn j_pow_field(wd: &SpectralField, s: f64) -> Result<SpectralField> {
    pointwise_n(&[wd], |v| {
        Complex64::new((ONE + v[0]).norm_sqr().powf(s), 0.0)
    })
}

/// Homogeneous paradifferential flow:
/// `T_Dt w + T_{1-conj Y} r_a + 1/2 T_{b_a} w = 0`,
/// `T_Dt r + i sig T_{1-Y} calL w - i g T_{1-Y} w = 0`.
pub fn rhs_para_linear(
    l: &LinearizedState,
    bg: &DiffState,
) -> Result<(SpectralField, SpectralField)> {
    let (g, sig) = (bg.params.g, bg.params.sigma);
    let aux = aux_fields(bg)?;
    let one_m_y = one_minus(&aux.y);
    let one_m_ybar = one_m_y.conj_field();
    let jmh = j_pow_field(&bg.wd, -0.5)?;

    let w_t = paraproduct(&aux.b, &derivative(&l.w, 1))?
        .add(&paraproduct(&one_m_ybar, &derivative(&l.r, 1))?)
        .add(&paraproduct(&derivative(&aux.b, 1), &l.w)?.scale(Complex64::new(0.5, 0.0)))
        .scale(Complex64::new(-1.0, 0.0));
    let r_t = paraproduct(&aux.b, &derivative(&l.r, 1))?
        .scale(Complex64::new(-1.0, 0.0))
        .sub(&paraproduct(&one_m_y, &cal_l(&jmh, &l.w)?)?.scale(I * sig))
        .add(&paraproduct(&one_m_y, &l.w)?.scale(I * g));
    Ok((w_t, r_t))
}

// ---------------------------------------------------------------------------
// paradifferential reduction of the differentiated system and residuals
// ---------------------------------------------------------------------------

/// The non-perturbative source cal-G(bW, R) of the paradifferential
/// reformulation.
fn source_g(d: &DiffState, aux: &AuxFields) -> Result<SpectralField> {
    let wd = &d.wd;
    let r = &d.r;
    let wda = derivative(wd, 1);
    let ra = derivative(r, 1);
    let rbar = r.conj_field();
    let ra_bar = ra.conj_field();
    let wd_bar = wd.conj_field();
    let one_m_y = one_minus(&aux.y);
    let one_m_ybar = one_m_y.conj_field();

    // co1 = (1-Ybar) bW_a - (1-Ybar)^2 (1+bW) conj(bW)_a
    let co1 = pointwise_n(&[wd, &wda], |v| {
        let zb = (ONE + v[0]).conj();
        v[1] / zb - (ONE + v[0]) * v[1].conj() / (zb * zb)
    })?;
    // co2 = T_{1-Ybar} R_a + T_{1-Y} conj(R)_a
    let co2 = paraproduct(&one_m_ybar, &ra)?.add(&paraproduct(&one_m_y, &ra_bar)?);
    // co3 = T_{1-Ybar} R + T_{1-Y} conj(R)
    let co3 = paraproduct(&one_m_ybar, r)?.add(&paraproduct(&one_m_y, &rbar)?);
    // (1+bW)(1-Ybar)^2 = (1+bW)/(1+conj bW)^2
    let co4 = pointwise_n(&[wd], |v| {
        let zb = (ONE + v[0]).conj();
        (ONE + v[0]) / (zb * zb)
    })?;

    let t1 = paraproduct(&aux.b, &wda)?;
    let t2 = paraproduct(&co1, r)?;
    let t3 = paraproduct(&co2, wd)?;
    let t4 = paraproduct(&co4, &project_holo(&derivative(&balanced(&wd_bar, r)?, 1)))?;
    let t5 = project_holo(&derivative(&balanced(&co3, wd)?, 1));
    Ok(t4.sub(&t1).sub(&t2).sub(&t3).sub(&t5))
}

/// The non-perturbative source cal-K(bW, R) of the paradifferential
/// reformulation; the
/// capillary-origin terms carry sigma.
fn source_k(d: &DiffState, aux: &AuxFields) -> Result<SpectralField> {
    let sig = d.params.sigma;
    let wd = &d.wd;
    let r = &d.r;
    let wda = derivative(wd, 1);
    let wdaa = derivative(wd, 2);
    let ra = derivative(r, 1);
    let rbar = r.conj_field();
    let ra_bar = ra.conj_field();
    let wd_bar = wd.conj_field();
    let wdaa_bar = wdaa.conj_field();
    let one_m_y = one_minus(&aux.y);
    let one_m_ybar = one_m_y.conj_field();

    // j3 = J^{-1/2}(1-Y)^3, j32 = J^{-3/2}(1-Y)
    let j3 = pointwise_n(&[wd], |v| {
        let z = ONE + v[0];
        ONE / (z.norm() * z * z * z)
    })?;
    let j32 = pointwise_n(&[wd], |v| {
        let z = ONE + v[0];
        ONE / (z.norm().powi(3) * z)
    })?;
    let q1 = pointwise_n(&[&j3, &wda], |v| v[0] * v[1])?;
    let q2 = paraproduct(&j3, &wdaa)?;
    let q3 = paraproduct(&j32, &wdaa_bar)?;

    let cap = paraproduct(&q1, &wda)?
        .scale(I * 3.0)
        .add(&paraproduct(&q2, wd)?.scale(I * 2.5))
        .sub(&paraproduct(&q3, wd)?.scale(I * 0.5))
        .add(&paraproduct(&j3, &balanced(wd, &wdaa)?)?.scale(I * 2.5))
        .add(&paraproduct(&j3, &balanced(&wda, &wda)?)?.scale(I * 1.5))
        .add(&paraproduct(&j32, &project_holo(&balanced(&wd_bar, &wdaa)?))?.scale(I * 0.5))
        .sub(&paraproduct(&j32, &project_holo(&balanced(&wdaa_bar, wd)?))?.scale(I * 0.5))
        .scale(Complex64::new(sig, 0.0));

    let kin = paraproduct(&aux.b, &ra)?
        .add(&paraproduct(&paraproduct(&one_m_ybar, &ra)?, r)?)
        .add(&paraproduct(&paraproduct(&one_m_y, &ra_bar)?, r)?)
        .add(&balanced(&ra, &paraproduct(&one_m_ybar, r)?)?)
        .add(&paraproduct(
            &one_m_y,
            &project_holo(&derivative(&balanced(&rbar, r)?, 1)),
        )?);
    Ok(cap.sub(&kin))
}

/// Residual pair of the paradifferential reformulation:
/// G = bW_t + T_{(1-Ybar)(1+bW)} R_a - calG,
/// K = R_t + i sig T_{J^{-1/2}(1-Y)^2} bW_aa - i g Y - calK.
/// The igY subtraction keeps the gravity contribution (linear in amplitude,
/// and an exact identity ig bW/(1+bW) = igY) on the known side, so both
/// residuals scale quadratically.
pub fn para_reduction_wr(d: &DiffState) -> Result<(SpectralField, SpectralField)> {
    let aux = aux_fields(d)?;
    let rhs = rhs_wr(d)?;
    let (g, sig) = (d.params.g, d.params.sigma);

    let lead_w_coef = pointwise_n(&[&d.wd], |v| {
        let z = ONE + v[0];
        z / z.conj()
    })?;
    let lead_r_coef = pointwise_n(&[&d.wd], |v| {
        let z = ONE + v[0];
        ONE / (z.norm() * z * z)
    })?;

    let g_res = rhs
        .wd_t
        .add(&paraproduct(&lead_w_coef, &derivative(&d.r, 1))?)
        .sub(&source_g(d, &aux)?);
    let k_res = rhs
        .r_t
        .add(&paraproduct(&lead_r_coef, &derivative(&d.wd, 2))?.scale(I * sig))
        .sub(&aux.y.scale(I * g))
        .sub(&source_k(d, &aux)?);
    Ok((g_res, k_res))
}

/// Norms of the leading-term residuals of the para-material-derivative
/// identities.
#[derive(Debug, Clone, Serialize)]
pub struct ParaMaterialReport {
    /// T_Dt bW + T_{(1+bW)(1-Ybar)} R_a, in H^1 and C^{1/2}_*.
    pub w_h1: f64,
    pub w_c_half: f64,
    /// T_Dt R + i sig T_{J^{-1/2}(1-Y)^2} bW_aa - igY, in C^eps and L2.
    pub r_c_eps: f64,
    pub r_l2: f64,
    /// T_Dt J^s + s J^s b_a at s = -1/2 and s = -3/2, in C^{1/2}_*.
    pub js_mhalf_c_half: f64,
    pub js_m3half_c_half: f64,
    /// d_t J^s + s T_{J^s(1-Ybar)} R_a + s T_{J^s(1-Y)} conj(R)_a at
    /// s = -1/2, in L^inf.
    pub js_time_linf: f64,
}

/// d/dt of J^s from the differentiated right-hand side:
/// s J^s [(1-Y) bW_t + (1-Ybar) conj(bW_t)].
pub fn j_pow_time_derivative(d: &DiffState, wd_t: &SpectralField, s: f64) -> Result<SpectralField> {
    pointwise_n(&[&d.wd, wd_t], |v| {
        let z = ONE + v[0];
        let js = z.norm_sqr().powf(s);
        s * js * (v[1] / z + v[1].conj() / z.conj())
    })
}

pub fn para_material_residuals(d: &DiffState) -> Result<ParaMaterialReport> {
    let aux = aux_fields(d)?;
    let rhs = rhs_wr(d)?;
    let (g, sig) = (d.params.g, d.params.sigma);
    let ba = derivative(&aux.b, 1);

    // T_Dt bW + T_{(1+bW)(1-Ybar)} R_a
    let coef_w = pointwise_n(&[&d.wd], |v| {
        let z = ONE + v[0];
        z / z.conj()
    })?;
    let res_w = rhs
        .wd_t
        .add(&paraproduct(&aux.b, &derivative(&d.wd, 1))?)
        .add(&paraproduct(&coef_w, &derivative(&d.r, 1))?);

    // T_Dt R + i sig T_{J^{-1/2}(1-Y)^2} bW_aa - igY
    let coef_r = pointwise_n(&[&d.wd], |v| {
        let z = ONE + v[0];
        ONE / (z.norm() * z * z)
    })?;
    let res_r = rhs
        .r_t
        .add(&paraproduct(&aux.b, &derivative(&d.r, 1))?)
        .add(&paraproduct(&coef_r, &derivative(&d.wd, 2))?.scale(I * sig))
        .sub(&aux.y.scale(I * g));

    // J^s residuals
    let js_res = |s: f64| -> Result<SpectralField> {
        let js_t = j_pow_time_derivative(d, &rhs.wd_t, s)?;
        let js_field = j_pow_field(&d.wd, s)?;
        let transport = paraproduct(&aux.b, &derivative(&js_field, 1))?;
        let zeroth = pointwise_n(&[&js_field, &ba], |v| s * v[0] * v[1])?;
        Ok(js_t.add(&transport).add(&zeroth))
    };
    let js1 = js_res(-0.5)?;
    let js2 = js_res(-1.5)?;

    // d_t J^s against its paradifferential leading form, s = -1/2
    let s = -0.5;
    let js_field = j_pow_field(&d.wd, s)?;
    let co_a = pointwise_n(&[&js_field, &d.wd], |v| v[0] / (ONE + v[1]).conj())?;
    let co_b = pointwise_n(&[&js_field, &d.wd], |v| v[0] / (ONE + v[1]))?;
    let js_time = j_pow_time_derivative(d, &rhs.wd_t, s)?
        .add(&paraproduct(&co_a, &derivative(&d.r, 1))?.scale(Complex64::new(s, 0.0)))
        .add(&paraproduct(&co_b, &derivative(&d.r.conj_field(), 1))?.scale(Complex64::new(s, 0.0)));

    Ok(ParaMaterialReport {
        w_h1: sobolev_norm(&res_w, 1.0),
        w_c_half: zygmund_norm(&res_w, 0.5),
        r_c_eps: zygmund_norm(&res_r, DEFAULT_CONTROL_EPS),
        r_l2: sobolev_norm(&res_r, 0.0),
        js_mhalf_c_half: zygmund_norm(&js1, 0.5),
        js_m3half_c_half: zygmund_norm(&js2, 0.5),
        js_time_linf: sup_norm(&js_time),
    })
}

/// Residual of the leading-term identity for the commutator [T_Dt, calL].
///
/// Distributing T_Dt through d_a T_{J^{-1/2}} d_a gives three leading
/// pieces: d_a T_{d_t J^{-1/2}} d_a, -d_a T_{J^{-1/2}} T_{b_a} d_a and the
/// transport piece -T_{b_a} calL (dropping the last one leaves a residual
/// that is only linear in the data). With all three subtracted the remainder
/// is quadratic, which is what this measures:
/// `[T_Dt, calL] u - d_a T_{d_t J^{-1/2}} d_a u + d_a T_{J^{-1/2}} T_{b_a}
/// d_a u + T_{b_a} T_{J^{-1/2}} d_a^2 u`, in H^s.
pub fn commutator_residual(d: &DiffState, u: &SpectralField, s: f64) -> Result<f64> {
    let aux = aux_fields(d)?;
    let rhs = rhs_wr(d)?;
    let jmh = j_pow_field(&d.wd, -0.5)?;
    let ua = derivative(u, 1);
    let ba = derivative(&aux.b, 1);

    // [d_t, calL] u for a frozen test field: d_a T_{d_t J^{-1/2}} u_a
    let jmh_t = j_pow_time_derivative(d, &rhs.wd_t, -0.5)?;
    let time_part = derivative(&paraproduct(&jmh_t, &ua)?, 1);
    // [T_b d_a, calL] u
    let cl_u = cal_l(&jmh, u)?;
    let tb_cl = paraproduct(&aux.b, &derivative(&cl_u, 1))?;
    let cl_tb = cal_l(&jmh, &paraproduct(&aux.b, &ua)?)?;
    let comm = time_part.add(&tb_cl).sub(&cl_tb);

    let lead = derivative(&paraproduct(&jmh_t, &ua)?, 1)
        .sub(&derivative(&paraproduct(&jmh, &paraproduct(&ba, &ua)?)?, 1))
        .sub(&paraproduct(&ba, &paraproduct(&jmh, &derivative(u, 2))?)?);

    Ok(sobolev_norm(&comm.sub(&lead), s))
}

/// Dispersion relation tau^2 + g xi + sigma xi^3 = 0 for xi = k < 0:
/// tau = sqrt(g|k| + sigma |k|^3).
pub fn dispersion_check(k: i64, params: PhysicalParams) -> Result<f64> {
    if k >= 0 {
        return Err(HwError::InvalidArgument(format!(
            "dispersion is defined for negative modes, got k = {k}"
        )));
    }
    let a = k.unsigned_abs() as f64;
    Ok((params.g * a + params.sigma * a.powi(3)).sqrt())
}

// ---------------------------------------------------------------------------
// time stepping
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Scheme {
    Rk4,
    Ifrk4,
}

#[derive(Debug, Clone, Copy, Serialize, serde::Deserialize)]
pub struct StepperConfig {
    pub dt: f64,
    pub scheme: Scheme,
    /// Kill positive-frequency modes after each step.
    pub reproject: bool,
    /// Also remove the zero mode after each step (gauge fixing; breaks exact
    /// conservation of the gravity part of the energy).
    pub remove_mean: bool,
    pub t_end: f64,
    pub snapshot_every: usize,
    pub cfl_safety: f64,
}

impl StepperConfig {
    pub fn cfl_limit(grid: GridSpec, params: PhysicalParams, safety: f64) -> f64 {
        let kmax = (grid.n_modes / 2) as f64;
        safety / (params.sigma.sqrt() * kmax.powf(1.5) + params.g.sqrt() * kmax.sqrt())
    }

    pub fn check_cfl(&self, grid: GridSpec, params: PhysicalParams) -> Result<()> {
        let limit = Self::cfl_limit(grid, params, self.cfl_safety);
        if self.dt > limit {
            return Err(HwError::CflViolation { dt: self.dt, limit });
        }
        Ok(())
    }
}

/// Per-mode propagator exp(dt L_k) of the linearized system
/// (u, v)_t = (-ik v, i(g + sigma k^2) u), applied to consecutive field pairs.
fn if_propagate(fields: &mut [SpectralField], params: PhysicalParams, dt: f64) {
    for pair in fields.chunks_mut(2) {
        if pair.len() < 2 {
            continue;
        }
        let grid = pair[0].grid;
        for i in 0..grid.n_modes {
            let k = grid.k_of(i);
            if k >= 0 {
                // anti-holomorphic defect modes are not propagated by the factor
                continue;
            }
            let kf = k as f64;
            let disp = params.g + params.sigma * kf * kf;
            let om2 = -kf * disp;
            let om = om2.sqrt();
            let (cs, sn) = ((om * dt).cos(), (om * dt).sin());
            let a = pair[0].coeffs()[i];
            let b = pair[1].coeffs()[i];
            let na = cs * a + (-I * kf) * (sn / om) * b;
            let nb = (I * disp) * (sn / om) * a + cs * b;
            pair[0].coeffs_mut()[i] = na;
            pair[1].coeffs_mut()[i] = nb;
        }
    }
}

fn linear_rhs(fields: &[SpectralField], params: PhysicalParams) -> Vec<SpectralField> {
    let mut out = Vec::with_capacity(fields.len());
    for pair in fields.chunks(2) {
        let u = &pair[0];
        let v = &pair[1];
        out.push(v.map_coeffs(|k, c| {
            if k < 0 {
                -Complex64::new(0.0, k as f64) * c
            } else {
                Complex64::ZERO
            }
        }));
        out.push(u.map_coeffs(|k, c| {
            if k < 0 {
                I * (params.g + params.sigma * (k * k) as f64) * c
            } else {
                Complex64::ZERO
            }
        }));
    }
    out
}

fn axpy(base: &[SpectralField], k: &[SpectralField], h: f64) -> Vec<SpectralField> {
    base.iter()
        .zip(k)
        .map(|(b, d)| b.add(&d.scale(Complex64::new(h, 0.0))))
        .collect()
}

type RhsFn<'a> = dyn Fn(&[SpectralField]) -> Result<Vec<SpectralField>> + 'a;

/// One step of classical RK4 or Lawson (integrating-factor) RK4.
pub fn step_fields(
    fields: &[SpectralField],
    rhs: &RhsFn,
    params: PhysicalParams,
    scheme: Scheme,
    dt: f64,
) -> Result<Vec<SpectralField>> {
    match scheme {
        Scheme::Rk4 => {
            let k1 = rhs(fields)?;
            let k2 = rhs(&axpy(fields, &k1, dt / 2.0))?;
            let k3 = rhs(&axpy(fields, &k2, dt / 2.0))?;
            let k4 = rhs(&axpy(fields, &k3, dt))?;
            let mut out = fields.to_vec();
            for i in 0..out.len() {
                let incr = k1[i]
                    .add(&k2[i].scale(Complex64::new(2.0, 0.0)))
                    .add(&k3[i].scale(Complex64::new(2.0, 0.0)))
                    .add(&k4[i]);
                out[i] = out[i].add(&incr.scale(Complex64::new(dt / 6.0, 0.0)));
            }
            Ok(out)
        }
        Scheme::Ifrk4 => {
            // Lawson RK4: nonlinear remainder N(u) = rhs(u) - L u.
            let nl = |u: &[SpectralField]| -> Result<Vec<SpectralField>> {
                let full = rhs(u)?;
                let lin = linear_rhs(u, params);
                Ok(full.iter().zip(&lin).map(|(f, l)| f.sub(l)).collect())
            };
            let eh = |u: &[SpectralField]| {
                let mut v = u.to_vec();
                if_propagate(&mut v, params, dt / 2.0);
                v
            };
            let ef = |u: &[SpectralField]| {
                let mut v = u.to_vec();
                if_propagate(&mut v, params, dt);
                v
            };
            let k1 = nl(fields)?;
            let k2 = nl(&eh(&axpy(fields, &k1, dt / 2.0)))?;
            let k3 = nl(&axpy(&eh(fields), &k2, dt / 2.0))?;
            let k4 = nl(&axpy(&ef(fields), &eh(&k3), dt))?;
            let incr = |a: &[SpectralField]| -> Vec<SpectralField> { a.to_vec() };
            let ek1 = ef(&k1);
            let ek2 = eh(&k2);
            let ek3 = eh(&k3);
            let base = ef(fields);
            let mut out = base;
            for i in 0..out.len() {
                let sum = ek1[i]
                    .add(&ek2[i].scale(Complex64::new(2.0, 0.0)))
                    .add(&ek3[i].scale(Complex64::new(2.0, 0.0)))
                    .add(&incr(&k4)[i]);
                out[i] = out[i].add(&sum.scale(Complex64::new(dt / 6.0, 0.0)));
            }
            Ok(out)
        }
    }
}

fn postprocess(fields: &mut [SpectralField], cfg: &StepperConfig) {
    for f in fields.iter_mut() {
        if cfg.reproject {
            *f = f.map_coeffs(|k, c| if k > 0 { Complex64::ZERO } else { c });
        }
        if cfg.remove_mean {
            f.set_coeff(0, Complex64::ZERO);
        }
    }
}

/// Per-snapshot monitor row; `es`/`elin` stay empty unless the caller
/// computes modified energies.
#[derive(Debug, Clone, Serialize)]
pub struct MonitorRow {
    pub t: f64,
    pub energy: f64,
    pub momentum: f64,
    pub a0: f64,
    pub a1: f64,
    pub holo_defect_w: f64,
    pub holo_defect_r: f64,
    pub es: Option<f64>,
    pub elin: Option<f64>,
    pub energy_paper_literal: f64,
    pub energy_paper_minus_i: f64,
}

#[derive(Debug, Clone)]
pub struct Trajectory<S> {
    pub times: Vec<f64>,
    pub states: Vec<S>,
    pub monitors: Vec<MonitorRow>,
    /// Set when the run aborted (NaN or Jacobian degeneracy); the trajectory
    /// retains everything through the last valid snapshot.
    pub blow_up: Option<(f64, String)>,
}

fn fmt17(v: f64) -> String {
    format!("{:.16e}", v)
}

/// Render monitors as the trajectory CSV (fixed 17-significant-digit floats).
pub fn trajectory_csv(rows: &[MonitorRow]) -> String {
    let mut out = String::from("t,E,P,A0,A1,holo_defect_W,holo_defect_R,Es,Elin\n");
    for r in rows {
        let es = r.es.map(fmt17).unwrap_or_default();
        let elin = r.elin.map(fmt17).unwrap_or_default();
        out.push_str(&format!(
            "{},{},{},{},{},{},{},{},{}\n",
            fmt17(r.t),
            fmt17(r.energy),
            fmt17(r.momentum),
            fmt17(r.a0),
            fmt17(r.a1),
            fmt17(r.holo_defect_w),
            fmt17(r.holo_defect_r),
            es,
            elin
        ));
    }
    out
}

fn surface_monitor(s: &SurfaceState, t: f64) -> Result<MonitorRow> {
    let ev = energy_variants(s)?;
    let p = conserved_momentum(s)?;
    let (dw, dq) = s.holo_defects();
    let (a0, a1) = match differentiate_state(s) {
        Ok((d, _)) => {
            let c = control_norms(&d, DEFAULT_CONTROL_EPS)?;
            (c.a0, c.a1)
        }
        Err(_) => (f64::NAN, f64::NAN),
    };
    Ok(MonitorRow {
        t,
        energy: ev.conserved,
        momentum: p,
        a0,
        a1,
        holo_defect_w: dw,
        holo_defect_r: dq,
        es: None,
        elin: None,
        energy_paper_literal: ev.paper_literal,
        energy_paper_minus_i: ev.paper_minus_i,
    })
}

/// Evolve (W, Q) under the full water-wave system.
pub fn simulate_surface(
    s0: &SurfaceState,
    cfg: &StepperConfig,
) -> Result<Trajectory<SurfaceState>> {
    cfg.check_cfl(s0.grid(), s0.params)?;
    let params = s0.params;
    let n_steps = (cfg.t_end / cfg.dt).round() as usize;
    let mut fields = vec![s0.w.clone(), s0.q.clone()];
    let mut traj = Trajectory {
        times: vec![0.0],
        states: vec![s0.clone()],
        monitors: vec![],
        blow_up: None,
    };
    traj.monitors.push(surface_monitor(s0, 0.0)?);
    let rhs = |f: &[SpectralField]| -> Result<Vec<SpectralField>> {
        let s = SurfaceState {
            w: f[0].clone(),
            q: f[1].clone(),
            params,
        };
        let (wt, qt) = rhs_wq(&s)?;
        Ok(vec![wt, qt])
    };
    for step in 1..=n_steps {
        let t = step as f64 * cfg.dt;
        fields = match step_fields(&fields, &rhs, params, cfg.scheme, cfg.dt) {
            Ok(f) => f,
            Err(HwError::DegenerateJacobian { min_abs, limit }) => {
                traj.blow_up = Some((
                    t,
                    format!("jacobian degeneracy {min_abs:.3e} < {limit:.3e}"),
                ));
                break;
            }
            Err(e) => return Err(e),
        };
        postprocess(&mut fields, cfg);
        if !(fields[0].is_finite() && fields[1].is_finite()) {
            return Err(HwError::BlowUp {
                t,
                what: "non-finite coefficients".into(),
            });
        }
        if step % cfg.snapshot_every == 0 || step == n_steps {
            let s = SurfaceState {
                w: fields[0].clone(),
                q: fields[1].clone(),
                params,
            };
            traj.monitors.push(surface_monitor(&s, t)?);
            traj.times.push(t);
            traj.states.push(s);
        }
    }
    Ok(traj)
}

/// Evolve (bW, R) under the differentiated system; `es_index` requests the
/// modified-energy
/// monitor E_s at that Sobolev index.
pub fn simulate_diff(
    d0: &DiffState,
    cfg: &StepperConfig,
    es_index: Option<f64>,
) -> Result<Trajectory<DiffState>> {
    cfg.check_cfl(d0.grid(), d0.params)?;
    let params = d0.params;
    let n_steps = (cfg.t_end / cfg.dt).round() as usize;
    let mut fields = vec![d0.wd.clone(), d0.r.clone()];
    let monitor = |d: &DiffState, t: f64| -> Result<MonitorRow> {
        let c = control_norms(d, DEFAULT_CONTROL_EPS)?;
        let es = match es_index {
            Some(s) => Some(crate::energies::modified_energy(d, s)?.total),
            None => None,
        };
        Ok(MonitorRow {
            t,
            energy: f64::NAN,
            momentum: f64::NAN,
            a0: c.a0,
            a1: c.a1,
            holo_defect_w: holo_defect(&d.wd),
            holo_defect_r: holo_defect(&d.r),
            es,
            elin: None,
            energy_paper_literal: f64::NAN,
            energy_paper_minus_i: f64::NAN,
        })
    };
    let mut traj = Trajectory {
        times: vec![0.0],
        states: vec![d0.clone()],
        monitors: vec![],
        blow_up: None,
    };
    traj.monitors.push(monitor(d0, 0.0)?);
    let rhs = |f: &[SpectralField]| -> Result<Vec<SpectralField>> {
        let d = DiffState {
            wd: f[0].clone(),
            r: f[1].clone(),
            params,
        };
        let out = rhs_wr(&d)?;
        Ok(vec![out.wd_t, out.r_t])
    };
    for step in 1..=n_steps {
        let t = step as f64 * cfg.dt;
        fields = match step_fields(&fields, &rhs, params, cfg.scheme, cfg.dt) {
            Ok(f) => f,
            Err(HwError::DegenerateJacobian { min_abs, limit }) => {
                traj.blow_up = Some((
                    t,
                    format!("jacobian degeneracy {min_abs:.3e} < {limit:.3e}"),
                ));
                break;
            }
            Err(e) => return Err(e),
        };
        postprocess(&mut fields, cfg);
        if !(fields[0].is_finite() && fields[1].is_finite()) {
            return Err(HwError::BlowUp {
                t,
                what: "non-finite coefficients".into(),
            });
        }
        if step % cfg.snapshot_every == 0 || step == n_steps {
            let d = DiffState {
                wd: fields[0].clone(),
                r: fields[1].clone(),
                params,
            };
            traj.monitors.push(monitor(&d, t)?);
            traj.times.push(t);
            traj.states.push(d);
        }
    }
    Ok(traj)
}

/// Co-evolve a background (W, Q) and a linearized state (w, r)
/// under the linearized equations around its differentiated background.
///
/// The zero mode of w is a gauge direction of the good-variable formulation:
/// shifting w by a constant c leaves the underlying tangent unchanged only
/// together with r -> r - c R. Mean removal therefore applies that
/// compensation to r, instead of the plain truncation used for the
/// background fields.
pub fn simulate_linearized(
    s0: &SurfaceState,
    l0: &LinearizedState,
    cfg: &StepperConfig,
) -> Result<Trajectory<(SurfaceState, LinearizedState)>> {
    cfg.check_cfl(s0.grid(), s0.params)?;
    let params = s0.params;
    let n_steps = (cfg.t_end / cfg.dt).round() as usize;
    let mut fields = vec![s0.w.clone(), s0.q.clone(), l0.w.clone(), l0.r.clone()];
    let rhs = |f: &[SpectralField]| -> Result<Vec<SpectralField>> {
        let s = SurfaceState {
            w: f[0].clone(),
            q: f[1].clone(),
            params,
        };
        let (wt, qt) = rhs_wq(&s)?;
        let (bg, _) = differentiate_state(&s)?;
        let l = LinearizedState {
            w: f[2].clone(),
            r: f[3].clone(),
        };
        let (lwt, lrt) = rhs_linearized(&l, &bg)?;
        Ok(vec![wt, qt, lwt, lrt])
    };
    let mut traj = Trajectory {
        times: vec![0.0],
        states: vec![(s0.clone(), l0.clone())],
        monitors: vec![],
        blow_up: None,
    };
    for step in 1..=n_steps {
        let t = step as f64 * cfg.dt;
        fields = match step_fields(&fields, &rhs, params, cfg.scheme, cfg.dt) {
            Ok(f) => f,
            Err(HwError::DegenerateJacobian { min_abs, limit }) => {
                traj.blow_up = Some((
                    t,
                    format!("jacobian degeneracy {min_abs:.3e} < {limit:.3e}"),
                ));
                break;
            }
            Err(e) => return Err(e),
        };
        if cfg.remove_mean {
            let c = fields[2].coeff(0);
            if c != Complex64::ZERO {
                let s = SurfaceState {
                    w: fields[0].clone(),
                    q: fields[1].clone(),
                    params,
                };
                let (bg, _) = differentiate_state(&s)?;
                fields[3] = fields[3].add(&bg.r.scale(c));
            }
        }
        postprocess(&mut fields, cfg);
        if fields.iter().any(|f| !f.is_finite()) {
            return Err(HwError::BlowUp {
                t,
                what: "non-finite coefficients".into(),
            });
        }
        if step % cfg.snapshot_every == 0 || step == n_steps {
            traj.times.push(t);
            traj.states.push((
                SurfaceState {
                    w: fields[0].clone(),
                    q: fields[1].clone(),
                    params,
                },
                LinearizedState {
                    w: fields[2].clone(),
                    r: fields[3].clone(),
                },
            ));
        }
    }
    Ok(traj)
}

/// Co-evolve a (bW, R) background and a linearized pair under
/// the homogeneous paradifferential flow; monitors record
/// E_lin + E^3_high per snapshot.
pub fn simulate_para_linear(
    d0: &DiffState,
    l0: &LinearizedState,
    cfg: &StepperConfig,
) -> Result<Trajectory<(DiffState, LinearizedState)>> {
    cfg.check_cfl(d0.grid(), d0.params)?;
    let params = d0.params;
    let n_steps = (cfg.t_end / cfg.dt).round() as usize;
    let mut fields = vec![d0.wd.clone(), d0.r.clone(), l0.w.clone(), l0.r.clone()];
    let rhs = |f: &[SpectralField]| -> Result<Vec<SpectralField>> {
        let d = DiffState {
            wd: f[0].clone(),
            r: f[1].clone(),
            params,
        };
        let out = rhs_wr(&d)?;
        let l = LinearizedState {
            w: f[2].clone(),
            r: f[3].clone(),
        };
        let (lwt, lrt) = rhs_para_linear(&l, &d)?;
        Ok(vec![out.wd_t, out.r_t, lwt, lrt])
    };
    let monitor = |d: &DiffState, l: &LinearizedState, t: f64| -> Result<MonitorRow> {
        let c = control_norms(d, DEFAULT_CONTROL_EPS)?;
        Ok(MonitorRow {
            t,
            energy: f64::NAN,
            momentum: f64::NAN,
            a0: c.a0,
            a1: c.a1,
            holo_defect_w: holo_defect(&d.wd),
            holo_defect_r: holo_defect(&d.r),
            es: None,
            elin: Some(crate::energies::linearized_energy(l, d)?),
            energy_paper_literal: f64::NAN,
            energy_paper_minus_i: f64::NAN,
        })
    };
    let mut traj = Trajectory {
        times: vec![0.0],
        states: vec![(d0.clone(), l0.clone())],
        monitors: vec![monitor(d0, l0, 0.0)?],
        blow_up: None,
    };
    for step in 1..=n_steps {
        let t = step as f64 * cfg.dt;
        fields = match step_fields(&fields, &rhs, params, cfg.scheme, cfg.dt) {
            Ok(f) => f,
            Err(HwError::DegenerateJacobian { min_abs, limit }) => {
                traj.blow_up = Some((
                    t,
                    format!("jacobian degeneracy {min_abs:.3e} < {limit:.3e}"),
                ));
                break;
            }
            Err(e) => return Err(e),
        };
        postprocess(&mut fields, cfg);
        if fields.iter().any(|f| !f.is_finite()) {
            return Err(HwError::BlowUp {
                t,
                what: "non-finite coefficients".into(),
            });
        }
        if step % cfg.snapshot_every == 0 || step == n_steps {
            let d = DiffState {
                wd: fields[0].clone(),
                r: fields[1].clone(),
                params,
            };
            let l = LinearizedState {
                w: fields[2].clone(),
                r: fields[3].clone(),
            };
            traj.monitors.push(monitor(&d, &l, t)?);
            traj.times.push(t);
            traj.states.push((d, l));
        }
    }
    Ok(traj)
}

/// Residual norm pair for amplitude sweeps.
pub fn reduction_residual_norms(d: &DiffState, s: f64) -> Result<f64> {
    let (g_res, k_res) = para_reduction_wr(d)?;
    Ok(product_norm(&g_res, &k_res, s))
}

/// Residuals of the undifferentiated para-material identities, driven by the
/// (W, Q) right-hand side.
#[derive(Debug, Clone, Serialize)]
pub struct SurfaceParaReport {
    /// T_Dt W + T_{1+W_a} P[(1-Ybar)R] + P Pi(W_a, b): an identity up to
    /// zero-mode bookkeeping, so this sits at the quadratic-in-amplitude
    /// level of those corrections at worst.
    pub paraw_h1: f64,
    /// T_Dt W + T_{1+bW} T_{1-Ybar} R: leading-term residual, quadratic.
    pub w_material_h1: f64,
}

pub fn para_material_residuals_surface(s: &SurfaceState) -> Result<SurfaceParaReport> {
    let (w_t, _) = rhs_wq(s)?;
    let (d, _) = differentiate_state(s)?;
    let aux = aux_fields(&d)?;
    let wa = derivative(&s.w, 1);
    let one_plus_wa = {
        let mut f = wa.clone();
        f.set_coeff(0, f.coeff(0) + ONE);
        f
    };
    let one_m_ybar = pointwise_n(&[&d.wd], |v| (ONE / (ONE + v[0])).conj())?;
    let t_dt_w = w_t.add(&paraproduct(&aux.b, &wa)?);

    let p_term = project_holo(&pointwise_n(&[&one_m_ybar, &d.r], |v| v[0] * v[1])?);
    let paraw = t_dt_w
        .add(&paraproduct(&one_plus_wa, &p_term)?)
        .add(&project_holo(&balanced(&wa, &aux.b)?));

    let material = t_dt_w.add(&paraproduct(
        &one_plus_wa,
        &paraproduct(&one_m_ybar, &d.r)?,
    )?);

    Ok(SurfaceParaReport {
        paraw_h1: sobolev_norm(&paraw, 1.0),
        w_material_h1: sobolev_norm(&material, 1.0),
    })
}
