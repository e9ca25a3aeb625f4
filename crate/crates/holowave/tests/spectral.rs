//! Spectral-core operator tests: transform pairs, projections, Hilbert
//! transform, multipliers, dyadic blocks and cutoff functions.

use num_complex::Complex64;
use proptest::prelude::*;

use holowave::grid::*;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn grid(n: usize) -> GridSpec {
    GridSpec::new(n).unwrap()
}

fn close(a: Complex64, b: Complex64, tol: f64) -> bool {
    (a - b).norm() <= tol
}

#[test]
fn transform_constant_and_single_mode() {
    let g = grid(32);
    let ones = vec![Complex64::ONE; 32];
    let f = to_spectral(g, &ones).unwrap();
    assert!(close(f.coeff(0), Complex64::ONE, 1e-14));
    for k in g.k_min()..=g.k_max() {
        if k != 0 {
            assert!(f.coeff(k).norm() < 1e-14);
        }
    }

    // e^{-ia} samples -> u_hat(-1) = 1
    let vals: Vec<Complex64> = (0..32)
        .map(|j| {
            let a = TAU * j as f64 / 32.0;
            c((-a).cos(), (-a).sin())
        })
        .collect();
    let f = to_spectral(g, &vals).unwrap();
    assert!(close(f.coeff(-1), Complex64::ONE, 1e-13));
    assert!(f.coeff(1).norm() < 1e-13 && f.coeff(0).norm() < 1e-13);
}

#[test]
fn transform_size_mismatch_is_error() {
    let g = grid(32);
    assert!(to_spectral(g, &vec![Complex64::ZERO; 31]).is_err());
}

#[test]
fn hilbert_examples() {
    let g = grid(32);
    // cos a = (e^{ia} + e^{-ia})/2 -> sin a = (e^{ia} - e^{-ia})/2i
    let mut f = SpectralField::zeros(g);
    f.set_coeff(1, c(0.5, 0.0));
    f.set_coeff(-1, c(0.5, 0.0));
    let h = hilbert(&f);
    assert!(close(h.coeff(1), c(0.0, -0.5), 1e-15)); // sin = -i/2 e^{ia} + i/2 e^{-ia}
    assert!(close(h.coeff(-1), c(0.0, 0.5), 1e-15));

    let constant = SpectralField::single_mode(g, 0, Complex64::ONE).unwrap();
    assert_eq!(hilbert(&constant).coeff(0), Complex64::ZERO);

    let f = SpectralField::single_mode(g, -3, Complex64::ONE).unwrap();
    assert!(close(hilbert(&f).coeff(-3), c(0.0, 1.0), 1e-15));
}

#[test]
fn projection_examples() {
    let g = grid(32);
    let mut f = SpectralField::zeros(g);
    f.set_coeff(-1, c(1.0, 0.0));
    f.set_coeff(0, c(2.0, 0.0));
    f.set_coeff(1, c(3.0, 0.0));
    let p = project_holo(&f);
    assert!(close(p.coeff(-1), c(1.0, 0.0), 0.0));
    assert!(close(p.coeff(0), c(1.0, 0.0), 0.0));
    assert!(close(p.coeff(1), c(0.0, 0.0), 0.0));

    // holomorphic fixed point
    let m = SpectralField::single_mode(g, -1, Complex64::ONE).unwrap();
    assert_eq!(project_holo(&m).coeff(-1), Complex64::ONE);

    // P + Pbar = I
    let sum = p.add(&project_anti(&f));
    for k in g.k_min()..=g.k_max() {
        assert!(close(sum.coeff(k), f.coeff(k), 1e-15));
    }
}

#[test]
fn derivative_examples() {
    let g = grid(32);
    let f = SpectralField::single_mode(g, -2, Complex64::ONE).unwrap();
    assert!(close(derivative(&f, 1).coeff(-2), c(0.0, -2.0), 1e-15));

    let constant = SpectralField::single_mode(g, 0, Complex64::ONE).unwrap();
    assert_eq!(derivative(&constant, 1).coeff(0), Complex64::ZERO);

    // sin a -> cos a
    let mut f = SpectralField::zeros(g);
    f.set_coeff(1, c(0.0, -0.5));
    f.set_coeff(-1, c(0.0, 0.5));
    let d = derivative(&f, 1);
    assert!(close(d.coeff(1), c(0.5, 0.0), 1e-15));
    assert!(close(d.coeff(-1), c(0.5, 0.0), 1e-15));
}

#[test]
fn multiplier_examples() {
    let g = grid(32);
    let f = SpectralField::single_mode(g, -2, Complex64::ONE).unwrap();
    assert!(close(
        bessel_pow(&f, 1.0).coeff(-2),
        c(5f64.sqrt(), 0.0),
        1e-14
    ));

    let constant = SpectralField::single_mode(g, 0, Complex64::ONE).unwrap();
    assert_eq!(abs_d_pow(&constant, 0.5).coeff(0), Complex64::ZERO);

    let id = bessel_pow(&f, 0.0);
    assert!(close(id.coeff(-2), Complex64::ONE, 0.0));

    // non-finite symbol -> numeric error
    let bad = multiplier(&f, |k| Complex64::new(1.0 / k as f64, 0.0));
    assert!(bad.is_err());
}

#[test]
fn lp_block_examples() {
    let g = grid(32);
    // |−4|: block 2 holds 2 < |k| <= 4
    let f = SpectralField::single_mode(g, -4, Complex64::ONE).unwrap();
    assert!(in_block(-4, 2) && !in_block(-4, 1) && !in_block(-4, 3));
    assert_eq!(lp_block(&f, 2).coeff(-4), Complex64::ONE);
    assert_eq!(lp_block(&f, 1).coeff(-4), Complex64::ZERO);

    let constant = SpectralField::single_mode(g, 0, Complex64::ONE).unwrap();
    assert_eq!(lp_block(&constant, 0).coeff(0), Complex64::ONE);

    // exact partition
    let mut f = SpectralField::zeros(g);
    for k in g.k_min()..=g.k_max() {
        f.set_coeff(k, c(k as f64 * 0.1 + 1.0, -0.3));
    }
    let mut sum = SpectralField::zeros(g);
    for j in 0..g.n_blocks() {
        sum = sum.add(&lp_block(&f, j));
    }
    for k in g.k_min()..=g.k_max() {
        assert!(close(sum.coeff(k), f.coeff(k), 1e-14));
    }
}

#[test]
fn chi_examples_and_partition() {
    let p = CutoffParams::default();
    assert_eq!(p.chi1(-1.0, -100.0), 1.0);
    assert_eq!(p.chi1(-50.0, -100.0), 0.0);
    for (a, b) in [(-3.0, -7.0), (2.0, 40.0), (-6.5, 6.5), (-1.0, -15.0)] {
        let total = p.chi1(a, b) + p.chi1(b, a) + p.chi2(a, b);
        assert!((total - 1.0).abs() < 1e-15);
        // symmetry and |.|-dependence
        assert!((p.chi2(a, b) - p.chi2(b, a)).abs() < 1e-15);
        assert!((p.chi1(a, b) - p.chi1(-a, -b)).abs() < 1e-15);
    }
    assert!(CutoffParams::new(0.3, 0.2, 1).is_err());
}

#[test]
fn psi_kills_only_the_mean() {
    assert_eq!(psi_lattice(0), 0.0);
    assert_eq!(psi_lattice(3), 1.0);
    assert_eq!(psi_lattice(-7), 1.0);
}

#[test]
fn operator_invariants_on_zero_mean_fields() {
    let g = grid(64);
    let mut f = SpectralField::zeros(g);
    for (k, re, im) in [
        (-9, 0.3, -0.1),
        (-2, -0.4, 0.9),
        (5, 0.2, 0.7),
        (13, -0.6, 0.05),
    ] {
        f.set_coeff(k, c(re, im));
    }
    // P^2 = P, Pbar^2 = Pbar, H^2 = -I on zero-mean fields
    let p1 = project_holo(&f);
    let p2 = project_holo(&p1);
    assert!(p2.sub(&p1).l2_norm() < 1e-15);
    let hh = hilbert(&hilbert(&f));
    assert!(hh.add(&f).l2_norm() < 1e-15);
    // Fourier multipliers commute
    let a = derivative(&project_holo(&f), 1);
    let b = project_holo(&derivative(&f, 1));
    assert!(a.sub(&b).l2_norm() < 1e-15);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn roundtrip_and_parseval(coeffs in proptest::collection::vec((-1.0..1.0f64, -1.0..1.0f64), 32)) {
        let g = grid(32);
        let f = SpectralField::from_coeffs(
            g,
            coeffs.iter().map(|&(re, im)| c(re, im)).collect(),
        ).unwrap();
        let phys = to_physical(&f);
        let back = to_spectral(g, &phys).unwrap();
        let scale = f.l2_norm().max(1e-12);
        prop_assert!(back.sub(&f).l2_norm() / scale < 1e-13);

        // Parseval: mean |u|^2 * 2pi = 2pi sum |u_hat|^2
        let lhs = TAU * phys.iter().map(|v| v.norm_sqr()).sum::<f64>() / 32.0;
        let rhs = f.l2_norm().powi(2);
        prop_assert!((lhs - rhs).abs() <= 1e-12 * rhs.max(1e-12));
    }
}
