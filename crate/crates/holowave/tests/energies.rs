//! Modified and linearized energies, quadratic normal-form corrections and
//! the Z auxiliary variables.

use num_complex::Complex64;

use holowave::dynamics::LinearizedState;
use holowave::energies::*;
use holowave::fields::DiffState;
use holowave::grid::*;
use holowave::paracalc::{product_norm, BilinearSymbol, Region};
use holowave::presets;
use holowave::symbols::closed;
use holowave::PhysicalParams;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn grid(n: usize) -> GridSpec {
    GridSpec::new(n).unwrap()
}

fn params(g: f64, sigma: f64) -> PhysicalParams {
    PhysicalParams::new(g, sigma).unwrap()
}

/// Independent convolution oracle: plain double loop re-deriving the
/// quantization from the region rules.
fn conv_oracle(
    m: fn(f64, f64) -> f64,
    region: Region,
    u: &SpectralField,
    v: &SpectralField,
) -> SpectralField {
    let g = u.grid;
    let cut = CutoffParams::default();
    let mut out = SpectralField::zeros(g);
    for iu in 0..g.n_modes {
        for iv in 0..g.n_modes {
            let p = g.k_of(iu);
            let q = g.k_of(iv);
            let (kout, ucoef) = match region {
                Region::MixedLowHigh | Region::MixedBalanced => (q - p, u.coeffs()[iu].conj()),
                _ => (p + q, u.coeffs()[iu]),
            };
            if ucoef == Complex64::ZERO || v.coeffs()[iv] == Complex64::ZERO {
                continue;
            }
            let Some(io) = g.index_of(kout) else { continue };
            let weight = match region {
                Region::HoloLowHigh => cut.chi1(p as f64, kout as f64),
                Region::HoloBalanced => cut.chi2(p as f64, kout as f64),
                Region::MixedLowHigh => {
                    cut.chi1(p as f64, q as f64)
                        * if kout < 0 {
                            1.0
                        } else if kout == 0 {
                            0.5
                        } else {
                            0.0
                        }
                }
                Region::MixedBalanced => {
                    cut.chi2(p as f64, q as f64)
                        * if kout < 0 {
                            1.0
                        } else if kout == 0 {
                            0.5
                        } else {
                            0.0
                        }
                }
                Region::Full => 1.0,
            };
            if weight == 0.0 {
                continue;
            }
            let val = m(p as f64, q as f64);
            out.coeffs_mut()[io] += weight * val * ucoef * v.coeffs()[iv];
        }
    }
    out
}

#[test]
fn quadratic_correction_zero_state() {
    let g = grid(64);
    let d = DiffState::zero(g, params(1.0, 1.0));
    let corr = quadratic_correction(&d).unwrap();
    for f in [&corr.wd_bal, &corr.r_bal, &corr.wd_lh, &corr.r_lh] {
        assert_eq!(f.l2_norm(), 0.0);
    }
}

#[test]
fn quadratic_correction_two_mode_oracle() {
    // bW carries one low and one high mode, R = 0: the only surviving pieces
    // are B^h(bW, T_{1-Y} bW) and B^a(conj bW, T_{1-Ybar} bW); cross-check
    // against the independent convolution applied to the same dressed fields
    let g = grid(256);
    let pr = params(0.0, 1.0);
    let mut wd = SpectralField::zeros(g);
    wd.set_coeff(-2, c(0.01, 0.004));
    wd.set_coeff(-70, c(0.006, -0.009));
    let d = DiffState::new(wd.clone(), SpectralField::zeros(g), pr).unwrap();
    let corr = quadratic_correction(&d).unwrap();

    let one_m_y = pointwise_n(&[&d.wd], |v| Complex64::ONE / (Complex64::ONE + v[0])).unwrap();
    let t_1my_wd = holowave::paracalc::paraproduct(&one_m_y, &d.wd).unwrap();
    let t_1myb_wd = holowave::paracalc::paraproduct(&one_m_y.conj_field(), &d.wd).unwrap();
    let expect_lh = conv_oracle(closed::hlh_b, Region::HoloLowHigh, &d.wd, &t_1my_wd).add(
        &conv_oracle(closed::alh_b, Region::MixedLowHigh, &d.wd, &t_1myb_wd),
    );
    assert!(
        corr.wd_lh.sub(&expect_lh).l2_norm() <= 1e-12 * expect_lh.l2_norm().max(1e-12),
        "lh gap {:.3e}",
        corr.wd_lh.sub(&expect_lh).l2_norm()
    );
    let expect_bal = conv_oracle(closed::hhh_b, Region::HoloBalanced, &d.wd, &t_1my_wd).add(
        &conv_oracle(closed::ahh_b, Region::MixedBalanced, &d.wd, &t_1myb_wd),
    );
    assert!(corr.wd_bal.sub(&expect_bal).l2_norm() <= 1e-12 * expect_bal.l2_norm().max(1e-12));

    // outputs holomorphic
    for f in [&corr.wd_bal, &corr.r_bal, &corr.wd_lh, &corr.r_lh] {
        assert!(holo_defect(f) < 1e-13);
    }
}

#[test]
fn balanced_correction_bound_sweep() {
    let g = grid(64);
    let pr = params(0.0, 1.0);
    let s = 1.25;
    let mut max_ratio: f64 = 0.0;
    for seed in 0..25 {
        let d = presets::random_diff_band(g, pr, -10, -1, 0.02, 900 + seed).unwrap();
        let corr = quadratic_correction(&d).unwrap();
        let a0 = holowave::fields::control_norms(&d, 0.01).unwrap().a0;
        let num = product_norm(&corr.wd_bal, &corr.r_bal, s);
        let den = a0 * product_norm(&d.wd, &d.r, s);
        max_ratio = max_ratio.max(num / den);
    }
    println!("balanced normal-form bound constant: {max_ratio:.3}");
    assert!(max_ratio.is_finite() && max_ratio > 0.0);
}

#[test]
fn modified_energy_zero_and_small_amplitude() {
    let g = grid(64);
    let pr = params(0.0, 1.0);
    let zero = modified_energy(&DiffState::zero(g, pr), 1.25).unwrap();
    assert_eq!(zero.total, 0.0);
    assert_eq!(zero.equivalence_ratio, 1.0);
    assert!(zero.i5_omitted);

    // small amplitude: total / ||(bW, R)||^2_{H^s} = 1 + O(eps)
    let mut prev_gap = f64::INFINITY;
    for eps in [1e-2, 1e-3] {
        let d = presets::random_diff_band(g, pr, -6, -1, eps, 17).unwrap();
        let rep = modified_energy(&d, 1.25).unwrap();
        let gap = (rep.equivalence_ratio - 1.0).abs();
        assert!(
            gap < 10.0 * eps,
            "eps={eps}: ratio {}",
            rep.equivalence_ratio
        );
        assert!(gap < prev_gap);
        prev_gap = gap;
    }
}

#[test]
fn modified_energy_equivalence_band() {
    let g = grid(64);
    let pr = params(0.0, 1.0);
    for seed in 0..20 {
        // rescale each sample so A0 sits just inside the band
        let raw = presets::random_diff_band(g, pr, -12, -1, 0.03, 300 + seed).unwrap();
        let a0_raw = holowave::fields::control_norms(&raw, 0.01).unwrap().a0;
        let sc = c(0.09 / a0_raw, 0.0);
        let d = DiffState::new(raw.wd.scale(sc), raw.r.scale(sc), pr).unwrap();
        let a0 = holowave::fields::control_norms(&d, 0.01).unwrap().a0;
        assert!(a0 <= 0.1, "sample outside the band");
        let rep = modified_energy(&d, 1.25).unwrap();
        assert!(
            rep.equivalence_ratio > 0.5 && rep.equivalence_ratio < 2.0,
            "seed {seed}: ratio {}",
            rep.equivalence_ratio
        );
    }
}

#[test]
fn linearized_energy_examples() {
    let g = grid(64);
    let pr = params(0.0, 1.0);
    let bg = DiffState::zero(g, pr);
    assert_eq!(
        linearized_energy(&LinearizedState::zero(g), &bg).unwrap(),
        0.0
    );

    // zero background, w = eps e^{-ia}, r = 0, g = 0:
    // -Re(calL w . conj w) + Im(w . T_1 conj(w)_a) = 2 pi eps^2 + 2 pi eps^2
    let eps = 1e-3;
    let w = SpectralField::single_mode(g, -1, c(eps, 0.0)).unwrap();
    let l = LinearizedState {
        w,
        r: SpectralField::zeros(g),
    };
    let e = linearized_energy(&l, &bg).unwrap();
    let expect = 2.0 * TAU * eps * eps;
    assert!((e - expect).abs() < 1e-12 * expect, "{e} vs {expect}");
}

#[test]
fn linearized_energy_equivalence_band() {
    let g = grid(64);
    let pr = params(1.0, 1.0);
    for seed in 0..20 {
        let bg = presets::random_diff_band(g, pr, -4, -1, 0.02, 400 + seed).unwrap();
        let l = presets::random_linearized_band(g, -12, -1, 1.0, 500 + seed).unwrap();
        let e = linearized_energy(&l, &bg).unwrap();
        let n = product_norm(&l.w, &l.r, 0.5);
        let ratio = e / (n * n);
        assert!(ratio > 0.5 && ratio < 2.0, "seed {seed}: ratio {ratio}");
    }
}

#[test]
fn linearized_nf_zero_background_and_bounds() {
    let g = grid(64);
    let pr = params(0.0, 1.0);
    let l = presets::random_linearized_band(g, -10, -1, 1.0, 600).unwrap();
    let (wc, rc) = linearized_nf_correction(&l, &DiffState::zero(g, pr)).unwrap();
    assert!(wc.l2_norm() < 1e-14 && rc.l2_norm() < 1e-14);

    let mut max_ratio: f64 = 0.0;
    for seed in 0..15 {
        let bg = presets::random_diff_band(g, pr, -4, -1, 0.02, 700 + seed).unwrap();
        let l = presets::random_linearized_band(g, -12, -1, 1.0, 800 + seed).unwrap();
        let (wc, rc) = linearized_nf_correction(&l, &bg).unwrap();
        let a1 = holowave::fields::control_norms(&bg, 0.01).unwrap().a1;
        let ratio = product_norm(&wc, &rc, 0.5) / (a1 * product_norm(&l.w, &l.r, 0.5));
        max_ratio = max_ratio.max(ratio);
    }
    println!("linearized NF bound constant (A1-normalized): {max_ratio:.3}");
    assert!(max_ratio.is_finite());
}

#[test]
fn linearized_nf_single_pair_oracle() {
    // single low-mode background, single high-mode (w, r): pin one family
    // contribution against the independent convolution
    let g = grid(256);
    let pr = params(0.0, 1.0);
    let wd = SpectralField::single_mode(g, -2, c(0.01, 0.0)).unwrap();
    let bg = DiffState::new(wd, SpectralField::zeros(g), pr).unwrap();
    let w = SpectralField::single_mode(g, -90, c(1.0, 0.5)).unwrap();
    let l = LinearizedState {
        w: w.clone(),
        r: SpectralField::zeros(g),
    };
    let (wc, _rc) = linearized_nf_correction(&l, &bg).unwrap();

    // with R = 0 and r = 0, the only w-corrections come from
    // B^bal_{2,h}/B^lh_{h,1}(T_{1-Y} bW, w), B^bal_{2,a}/B^lh_{a,1}(conj, w),
    // and the second-slot families B^lh_{h,2}/B^lh_{a,2}(w, T_{1-Y} bW)
    let one_m_y = pointwise_n(&[&bg.wd], |v| Complex64::ONE / (Complex64::ONE + v[0])).unwrap();
    let t = holowave::paracalc::paraproduct(&one_m_y, &bg.wd).unwrap();
    let expect = conv_oracle(closed::bal2h_b, Region::HoloBalanced, &t, &w)
        .add(&conv_oracle(closed::bal2a_b, Region::MixedBalanced, &t, &w))
        .add(&conv_oracle(closed::lh1h_b, Region::HoloLowHigh, &t, &w))
        .add(&conv_oracle(closed::lh1a_b, Region::MixedLowHigh, &t, &w))
        .add(&conv_oracle(closed::lh2h_b, Region::HoloLowHigh, &w, &t))
        .add(&conv_oracle(closed::lh2a_b, Region::MixedLowHigh, &w, &t))
        .add(&conv_oracle(closed::bal1_b, Region::MixedBalanced, &w, &t));
    assert!(
        wc.sub(&expect).l2_norm() <= 1e-12 * expect.l2_norm().max(1e-12),
        "gap {:.3e} (|expect| {:.3e})",
        wc.sub(&expect).l2_norm(),
        expect.l2_norm()
    );
}

#[test]
fn z_variable_identities() {
    let g = grid(64);
    let pr = params(0.0, 1.0);
    let zero = z_variables(&DiffState::zero(g, pr), &LinearizedState::zero(g));
    assert_eq!(zero.zp.l2_norm(), 0.0);

    // bW = e^{-ia}, R = 0: Z_pm = +- i e^{-ia}
    let wd = SpectralField::single_mode(g, -1, Complex64::ONE).unwrap();
    let d = DiffState::new(wd, SpectralField::zeros(g), pr).unwrap();
    let z = z_variables(&d, &LinearizedState::zero(g));
    assert!((z.zp.coeff(-1) - c(0.0, 1.0)).norm() < 1e-15);
    assert!((z.zm.coeff(-1) - c(0.0, -1.0)).norm() < 1e-15);

    // Zp + Zm = 2R, Zp - Zm = 2 i |D|^{1/2} bW on random data
    let d = presets::random_diff_band(g, pr, -8, -1, 0.1, 12).unwrap();
    let l = presets::random_linearized_band(g, -8, -1, 1.0, 13).unwrap();
    let z = z_variables(&d, &l);
    let sum = z.zp.add(&z.zm);
    assert!(sum.sub(&d.r.scale(c(2.0, 0.0))).l2_norm() < 1e-14);
    let diff = z.zp_lin.sub(&z.zm_lin);
    let expect = abs_d_pow(&l.w, 0.5).scale(c(0.0, 2.0));
    assert!(diff.sub(&expect).l2_norm() < 1e-14);
}

#[test]
fn base_energy_positive_for_admissible_states() {
    let g = grid(64);
    let pr = params(0.0, 1.0);
    for seed in 0..10 {
        let d = presets::random_diff_band(g, pr, -8, -1, 0.05, 40 + seed).unwrap();
        let e = base_energy(&d, &d.wd, &d.r, 1.25).unwrap();
        assert!(e > 0.0);
    }
}
