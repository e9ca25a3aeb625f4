//! Catalog of the explicit normal-form symbol families and their defining
//! linear systems, with numerical verification.
//!
//! Each family stores both the closed-form rational symbols and the algebraic
//! system they solve; `verify_family` samples the cutoff support, evaluates
//! the residual `A(p,q) * s(p,q) - b(p,q)` and solves the system numerically
//! as an independent cross-check. Denominator positivity of the two
//! non-resonance quadratic forms 9x^2+14xy+9y^2 and 4x^2-4xy+9y^2
//! (discriminants 196-324 and 16-144, both negative) is checked on every
//! sample.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::paracalc::{BilinearSymbol, Region};

/// 9x^2 + 14xy + 9y^2, the holomorphic non-resonance form.
pub fn quad_d(x: f64, y: f64) -> f64 {
    9.0 * x * x + 14.0 * x * y + 9.0 * y * y
}

/// 4x^2 - 4xy + 9y^2, the mixed non-resonance form.
pub fn quad_e(x: f64, y: f64) -> f64 {
    4.0 * x * x - 4.0 * x * y + 9.0 * y * y
}

// ---------------------------------------------------------------------------
// closed forms (rational parts; the region cutoff is applied separately)
// ---------------------------------------------------------------------------

pub mod closed {
    use super::{quad_d as d, quad_e as e};

    // (i) low-high holomorphic, variables (xi, eta)
    pub fn hlh_a(x: f64, y: f64) -> f64 {
        (-9.0 * x.powi(4) - x.powi(3) * y
            + 26.0 * x * x * y * y
            + 28.0 * x * y.powi(3)
            + 12.0 * y.powi(4))
            / (2.0 * x * y * d(x, y))
    }
    pub fn hlh_b(x: f64, y: f64) -> f64 {
        -(9.0 * x.powi(3) + 28.0 * x * x * y + 27.0 * x * y * y + 4.0 * y.powi(3))
            / (2.0 * y * d(x, y))
    }
    pub fn hlh_c(x: f64, y: f64) -> f64 {
        -(3.0 * x.powi(3) + 6.0 * x * x * y + 11.0 * x * y * y + 6.0 * y.powi(3))
            / (x * y * d(x, y))
    }
    pub fn hlh_d(x: f64, y: f64) -> f64 {
        (6.0 * x.powi(3) + 15.0 * x * x * y + 7.0 * x * y * y - 4.0 * y.powi(3))
            / (2.0 * y * d(x, y))
    }

    // (ii) low-high mixed, variables (eta, zeta)
    pub fn alh_a(h: f64, z: f64) -> f64 {
        -(6.0 * h.powi(4) - 15.0 * h.powi(3) * z + 20.0 * h * h * z * z - 20.0 * h * z.powi(3)
            + 12.0 * z.powi(4))
            / (2.0 * h * (z - h) * e(h, z))
    }
    pub fn alh_b(h: f64, z: f64) -> f64 {
        (2.0 * h.powi(3) - 3.0 * h * h * z + 7.0 * h * z * z - 14.0 * z.powi(3))
            / (2.0 * (z - h) * e(h, z))
    }
    pub fn alh_c(h: f64, z: f64) -> f64 {
        z * (5.0 * h * h - 7.0 * h * z + 6.0 * z * z) / (h * (z - h) * e(h, z))
    }
    pub fn alh_d(h: f64, z: f64) -> f64 {
        (8.0 * h.powi(3) - 20.0 * h * h * z + 23.0 * h * z * z - 14.0 * z.powi(3))
            / (2.0 * (z - h) * e(h, z))
    }

    // (iii) balanced holomorphic, variables (xi, eta). These are the unique
    // solutions of the symmetrized system; beware the commonly quoted variant
    // of b with an extra overall factor 3 (and the a back-substituted from
    // it), which fails the system.
    pub fn hhh_a(x: f64, y: f64) -> f64 {
        -(9.0 * x.powi(4) + x.powi(3) * y
            - 15.0 * x * x * y * y
            - 21.0 * x * y.powi(3)
            - 6.0 * y.powi(4))
            / (2.0 * x * y * d(x, y))
    }
    pub fn hhh_b(x: f64, y: f64) -> f64 {
        -(x + y).powi(2) * (9.0 * x * x + 10.0 * x * y + 9.0 * y * y) / (4.0 * x * y * d(x, y))
    }
    pub fn hhh_c(x: f64, y: f64) -> f64 {
        -3.0 * (x + y).powi(3) / (2.0 * x * y * d(x, y))
    }

    // (iv) balanced mixed, variables (eta, zeta). The family equals
    // ((eta-zeta)/eta) times lin_bal1 (same matrix, proportional data), which
    // pins the (eta - zeta) factor in c.
    pub fn ahh_a(h: f64, z: f64) -> f64 {
        3.0 * (h - z) * (2.0 * h * h - h * z + 2.0 * z * z) / (2.0 * h * e(h, z))
    }
    pub fn ahh_b(h: f64, z: f64) -> f64 {
        -(h - z) * (2.0 * h * h + h * z + 9.0 * z * z) / (2.0 * h * e(h, z))
    }
    pub fn ahh_c(h: f64, z: f64) -> f64 {
        -3.0 * z * (h - z) / (h * e(h, z))
    }
    pub fn ahh_d(h: f64, z: f64) -> f64 {
        -(h - z) * (8.0 * h * h - 8.0 * h * z + 9.0 * z * z) / (2.0 * h * e(h, z))
    }

    // toy-model cubic energy symbols, variables (xi, eta), zeta = xi + eta
    pub fn toy_a(x: f64, y: f64) -> f64 {
        let z = x + y;
        -3.0 * z.powi(3) / (2.0 * d(x, y))
    }
    pub fn toy_b(x: f64, y: f64) -> f64 {
        let z = x + y;
        -z * (2.0 * x * x + 3.0 * x * y + 3.0 * y * y) / (2.0 * d(x, y))
    }
    pub fn toy_c(x: f64, y: f64) -> f64 {
        let z = x + y;
        x * z * (3.0 * x * x + 3.0 * x * y + 2.0 * y * y) / (2.0 * d(x, y))
    }
    pub fn toy_d(x: f64, y: f64) -> f64 {
        let z = x + y;
        -x * z * z / d(x, y)
    }

    // balanced linearized NF for (PG_0, PK_0), variables (eta, zeta)
    pub fn bal1_a(h: f64, z: f64) -> f64 {
        3.0 * (2.0 * h * h - h * z + 2.0 * z * z) / (2.0 * e(h, z))
    }
    pub fn bal1_b(h: f64, z: f64) -> f64 {
        -(2.0 * h * h + h * z + 9.0 * z * z) / (2.0 * e(h, z))
    }
    pub fn bal1_c(h: f64, z: f64) -> f64 {
        -3.0 * z / e(h, z)
    }
    pub fn bal1_d(h: f64, z: f64) -> f64 {
        -(8.0 * h * h - 8.0 * h * z + 9.0 * z * z) / (2.0 * e(h, z))
    }

    // balanced linearized NF for (PG_1, PK_1), holomorphic, variables (xi, eta)
    pub fn bal2h_a(x: f64, y: f64) -> f64 {
        (2.0 * x.powi(3) - 9.0 * x * x * y - 16.0 * x * y * y - 9.0 * y.powi(3))
            / (2.0 * x * d(x, y))
    }
    pub fn bal2h_b(x: f64, y: f64) -> f64 {
        -(15.0 * x.powi(3) + 31.0 * x * x * y + 25.0 * x * y * y + 9.0 * y.powi(3))
            / (2.0 * x * d(x, y))
    }
    pub fn bal2h_c(x: f64, y: f64) -> f64 {
        -(x * x + 4.0 * x * y + 3.0 * y * y) / (x * d(x, y))
    }
    pub fn bal2h_d(x: f64, y: f64) -> f64 {
        (3.0 * x.powi(3) + 12.0 * x * x * y + 11.0 * x * y * y + 6.0 * y.powi(3))
            / (2.0 * x * d(x, y))
    }

    // balanced linearized NF for (PG_1, PK_1), mixed, variables (eta, zeta)
    pub fn bal2a_a(h: f64, z: f64) -> f64 {
        z * (8.0 * h * h - 8.0 * h * z + 9.0 * z * z) / (2.0 * h * e(h, z))
    }
    pub fn bal2a_b(h: f64, z: f64) -> f64 {
        z * (2.0 * h * h + h * z + 9.0 * z * z) / (2.0 * h * e(h, z))
    }
    pub fn bal2a_c(h: f64, z: f64) -> f64 {
        3.0 * z * z / (h * e(h, z))
    }
    pub fn bal2a_d(h: f64, z: f64) -> f64 {
        -3.0 * z * (2.0 * h * h - h * z + 2.0 * z * z) / (2.0 * h * e(h, z))
    }

    // low-high linearized NF part one, holomorphic, variables (xi, eta)
    pub fn lh1h_a(x: f64, y: f64) -> f64 {
        -(x.powi(3) + 3.0 * x * x * y + 5.0 * x * y * y + 3.0 * y.powi(3)) / (y * d(x, y))
    }
    pub fn lh1h_b(x: f64, y: f64) -> f64 {
        -(3.0 * x.powi(3) + 15.0 * x * x * y + 16.0 * x * y * y + 6.0 * y.powi(3))
            / (2.0 * y * d(x, y))
    }
    pub fn lh1h_c(x: f64, y: f64) -> f64 {
        (2.0 * x * x + 5.0 * x * y + y * y) / (2.0 * y * d(x, y))
    }
    pub fn lh1h_d(x: f64, y: f64) -> f64 {
        -(3.0 * x.powi(3) + 3.0 * x * x * y + x * y * y + y.powi(3)) / (2.0 * y * d(x, y))
    }

    // low-high linearized NF part one, mixed, variables (eta, zeta); the
    // leading behavior is (a, b, c, d) -> (1/3, 1/3, -1/(18 zeta), 1/18).
    pub fn lh1a_a(h: f64, z: f64) -> f64 {
        -z * (h * h - h * z + 3.0 * z * z) / ((h - z) * e(h, z))
    }
    pub fn lh1a_b(h: f64, z: f64) -> f64 {
        (2.0 * h.powi(3) - 5.0 * h * h * z + 8.0 * h * z * z - 6.0 * z.powi(3))
            / (2.0 * (h - z) * e(h, z))
    }
    pub fn lh1a_c(h: f64, z: f64) -> f64 {
        z * z / (2.0 * (h - z) * e(h, z))
    }
    pub fn lh1a_d(h: f64, z: f64) -> f64 {
        -(2.0 * h.powi(3) - h * h * z + 4.0 * h * z * z + z.powi(3)) / (2.0 * (h - z) * e(h, z))
    }

    // low-high linearized NF part two, holomorphic, variables (xi, eta)
    pub fn lh2h_a(x: f64, y: f64) -> f64 {
        -(9.0 * x.powi(3) + 10.0 * x * x * y + 3.0 * x * y * y - 6.0 * y.powi(3))
            / (2.0 * y * d(x, y))
    }
    pub fn lh2h_b(x: f64, y: f64) -> f64 {
        -(9.0 * x.powi(3) + 19.0 * x * x * y + 19.0 * x * y * y + 9.0 * y.powi(3))
            / (2.0 * y * d(x, y))
    }
    pub fn lh2h_c(x: f64, y: f64) -> f64 {
        -3.0 * (x + y).powi(2) / (y * d(x, y))
    }
    pub fn lh2h_d(x: f64, y: f64) -> f64 {
        3.0 * (2.0 * x.powi(3) + 5.0 * x * x * y + 6.0 * x * y * y + 3.0 * y.powi(3))
            / (2.0 * y * d(x, y))
    }

    // low-high linearized NF for (PG_0, PK_0), mixed, variables (eta, zeta):
    // same rational parts as bal1 (identical system with chi1 data).
    pub use bal1_a as lh2a_a;
    pub use bal1_b as lh2a_b;
    pub use bal1_c as lh2a_c;
    pub use bal1_d as lh2a_d;
}

// ---------------------------------------------------------------------------
// systems
// ---------------------------------------------------------------------------

type Matrix = (Vec<Vec<f64>>, Vec<f64>);

fn sys_hlh_matrix(x: f64, y: f64, rhs: [f64; 4]) -> Matrix {
    let s = x + y;
    (
        vec![
            vec![s, -x, y * y, 0.0],
            vec![0.0, y, -x * x, -s],
            vec![y, 0.0, s * s, x],
            vec![x * x, -s * s, 0.0, y * y],
        ],
        rhs.to_vec(),
    )
}

fn sys_alh_matrix(h: f64, z: f64, rhs: [f64; 4]) -> Matrix {
    let s = z - h;
    (
        vec![
            vec![s, h, z * z, 0.0],
            vec![0.0, z, h * h, -s],
            vec![z, 0.0, s * s, -h],
            vec![h * h, s * s, 0.0, -z * z],
        ],
        rhs.to_vec(),
    )
}

fn sys_bal2h_matrix(x: f64, y: f64, rhs: [f64; 4]) -> Matrix {
    let s = x + y;
    (
        vec![
            vec![s, -y, x * x, 0.0],
            vec![0.0, x, -y * y, -s],
            vec![x, 0.0, s * s, y],
            vec![y * y, -s * s, 0.0, x * x],
        ],
        rhs.to_vec(),
    )
}

fn sys_bal2a_matrix(h: f64, z: f64, rhs: [f64; 4]) -> Matrix {
    let s = z - h;
    (
        vec![
            vec![s, -z, -h * h, 0.0],
            vec![0.0, h, z * z, s],
            vec![h, 0.0, -s * s, -z],
            vec![z * z, -s * s, 0.0, -h * h],
        ],
        rhs.to_vec(),
    )
}

fn sys_hlh(x: f64, y: f64) -> Matrix {
    sys_hlh_matrix(x, y, [x + y, -x, -(x + y), 3.0 * x * y + 2.5 * x * x])
}

fn sys_alh(h: f64, z: f64) -> Matrix {
    sys_alh_matrix(h, z, [z - h, -h, -(z - h), 0.5 * h * h])
}

/// Symmetrized 3-equation balanced-holomorphic system, written as a 4x4
/// system for (a(xi,eta), a(eta,xi), b, c).
fn sys_hhh(x: f64, y: f64) -> Matrix {
    let s = x + y;
    (
        vec![
            vec![s, 0.0, -2.0 * x, 2.0 * y * y],
            vec![0.0, s, -2.0 * y, 2.0 * x * x],
            vec![0.5 * y, 0.5 * x, 0.0, s * s],
            vec![0.5 * x * x, 0.5 * y * y, -s * s, 0.0],
        ],
        vec![
            s,
            s,
            -0.5 * s,
            0.25 * (5.0 * x * x + 6.0 * x * y + 5.0 * y * y),
        ],
    )
}

fn sys_ahh(h: f64, z: f64) -> Matrix {
    sys_alh_matrix(h, z, [z - h, z - h, -(z - h), 0.5 * (h * h - z * z)])
}

fn sys_toy(x: f64, y: f64) -> Matrix {
    let z = x + y;
    (
        vec![
            vec![z * z, -y * y, x, 0.0],
            vec![0.0, x * x, -y, -z * z],
            vec![x * x, 0.0, z, y * y],
            vec![-y, z, 0.0, -x],
        ],
        vec![-0.5 * x * y * z, 0.0, 0.0, 0.0],
    )
}

fn sys_bal1(h: f64, z: f64) -> Matrix {
    sys_alh_matrix(h, z, [-h, -h, h, 0.5 * h * (h + z)])
}

fn sys_bal2h(x: f64, y: f64) -> Matrix {
    sys_bal2h_matrix(x, y, [0.0, -(x + y), -y, (x + y) * (x + 1.5 * y)])
}

/// Second data entry is zeta (a zeta/2 variant is inconsistent with the
/// target source terms and makes the solutions singular on the diagonal).
fn sys_bal2a(h: f64, z: f64) -> Matrix {
    sys_bal2a_matrix(h, z, [-z, z, z, 0.5 * z * (h + z)])
}

fn sys_lh1h(x: f64, y: f64) -> Matrix {
    sys_bal2h_matrix(x, y, [0.0, -0.5 * x, 0.0, x * (x + y)])
}

fn sys_lh1a(h: f64, z: f64) -> Matrix {
    sys_bal2a_matrix(h, z, [0.0, 0.5 * h, 0.0, h * z])
}

fn sys_lh2h(x: f64, y: f64) -> Matrix {
    sys_hlh_matrix(x, y, [0.0, -(x + y), -x, 1.5 * x * (x + y) + y * y])
}

fn sys_lh2a(h: f64, z: f64) -> Matrix {
    sys_alh_matrix(h, z, [-h, -h, h, 0.5 * h * (h + z)])
}

// ---------------------------------------------------------------------------
// family/catalog types
// ---------------------------------------------------------------------------

/// How to draw verification samples for one system block.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sampling {
    /// First variable small, second large (both negative): |p| in [1/2, 5],
    /// |q| in [40|p|, 4000].
    LowHigh,
    /// Comparable magnitudes, ratio in [1/8, 8] (both negative).
    Balanced,
    /// Comparable magnitudes with |q| > |p| (the holomorphic output
    /// indicator region zeta < eta).
    BalancedOutputNeg,
}

/// One linear system together with its closed-form solution vector.
pub struct SystemBlock {
    pub label: &'static str,
    pub sampling: Sampling,
    pub symbols: Vec<BilinearSymbol>,
    pub system: fn(f64, f64) -> Matrix,
    pub closed: fn(f64, f64) -> Vec<f64>,
    /// Non-resonance quadratic form checked for positivity on samples.
    pub denom: fn(f64, f64) -> f64,
}

/// A named set of closed-form bilinear symbols with the system they solve.
pub struct SymbolFamily {
    pub name: &'static str,
    pub blocks: Vec<SystemBlock>,
}

fn sym4(
    region: Region,
    names: [&'static str; 4],
    fs: [fn(f64, f64) -> f64; 4],
) -> Vec<BilinearSymbol> {
    names
        .iter()
        .zip(fs)
        .map(|(n, f)| BilinearSymbol::real(*n, region, f))
        .collect()
}

/// The eleven symbol families of the catalog.
pub fn symbol_catalog() -> Vec<SymbolFamily> {
    use closed::*;
    vec![
        SymbolFamily {
            name: "full_hlh",
            blocks: vec![SystemBlock {
                label: "holo",
                sampling: Sampling::LowHigh,
                symbols: sym4(
                    Region::HoloLowHigh,
                    ["a", "b", "c", "d"],
                    [hlh_a, hlh_b, hlh_c, hlh_d],
                ),
                system: sys_hlh,
                closed: |x, y| vec![hlh_a(x, y), hlh_b(x, y), hlh_c(x, y), hlh_d(x, y)],
                denom: quad_d,
            }],
        },
        SymbolFamily {
            name: "full_alh",
            blocks: vec![SystemBlock {
                label: "mixed",
                sampling: Sampling::LowHigh,
                symbols: sym4(
                    Region::MixedLowHigh,
                    ["a", "b", "c", "d"],
                    [alh_a, alh_b, alh_c, alh_d],
                ),
                system: sys_alh,
                closed: |h, z| vec![alh_a(h, z), alh_b(h, z), alh_c(h, z), alh_d(h, z)],
                denom: quad_e,
            }],
        },
        SymbolFamily {
            name: "full_hhh",
            blocks: vec![SystemBlock {
                label: "holo",
                sampling: Sampling::Balanced,
                symbols: {
                    let mut v = sym4(
                        Region::HoloBalanced,
                        ["a", "b", "c", "a_swapped"],
                        [hhh_a, hhh_b, hhh_c, |x, y| hhh_a(y, x)],
                    );
                    v.truncate(3);
                    v
                },
                system: sys_hhh,
                closed: |x, y| vec![hhh_a(x, y), hhh_a(y, x), hhh_b(x, y), hhh_c(x, y)],
                denom: quad_d,
            }],
        },
        SymbolFamily {
            name: "full_ahh",
            blocks: vec![SystemBlock {
                label: "mixed",
                sampling: Sampling::BalancedOutputNeg,
                symbols: sym4(
                    Region::MixedBalanced,
                    ["a", "b", "c", "d"],
                    [ahh_a, ahh_b, ahh_c, ahh_d],
                ),
                system: sys_ahh,
                closed: |h, z| vec![ahh_a(h, z), ahh_b(h, z), ahh_c(h, z), ahh_d(h, z)],
                denom: quad_e,
            }],
        },
        SymbolFamily {
            name: "toy_cubic",
            blocks: vec![SystemBlock {
                label: "trilinear",
                sampling: Sampling::LowHigh,
                symbols: sym4(
                    Region::HoloLowHigh,
                    ["a", "b", "c", "d"],
                    [toy_a, toy_b, toy_c, toy_d],
                ),
                system: sys_toy,
                closed: |x, y| vec![toy_a(x, y), toy_b(x, y), toy_c(x, y), toy_d(x, y)],
                denom: quad_d,
            }],
        },
        SymbolFamily {
            name: "lin_bal1",
            blocks: vec![SystemBlock {
                label: "mixed",
                sampling: Sampling::BalancedOutputNeg,
                symbols: sym4(
                    Region::MixedBalanced,
                    ["a", "b", "c", "d"],
                    [bal1_a, bal1_b, bal1_c, bal1_d],
                ),
                system: sys_bal1,
                closed: |h, z| vec![bal1_a(h, z), bal1_b(h, z), bal1_c(h, z), bal1_d(h, z)],
                denom: quad_e,
            }],
        },
        SymbolFamily {
            name: "lin_bal2h",
            blocks: vec![SystemBlock {
                label: "holo",
                sampling: Sampling::Balanced,
                symbols: sym4(
                    Region::HoloBalanced,
                    ["a", "b", "c", "d"],
                    [bal2h_a, bal2h_b, bal2h_c, bal2h_d],
                ),
                system: sys_bal2h,
                closed: |x, y| vec![bal2h_a(x, y), bal2h_b(x, y), bal2h_c(x, y), bal2h_d(x, y)],
                denom: quad_d,
            }],
        },
        SymbolFamily {
            name: "lin_bal2a",
            blocks: vec![SystemBlock {
                label: "mixed",
                sampling: Sampling::BalancedOutputNeg,
                symbols: sym4(
                    Region::MixedBalanced,
                    ["a", "b", "c", "d"],
                    [bal2a_a, bal2a_b, bal2a_c, bal2a_d],
                ),
                system: sys_bal2a,
                closed: |h, z| vec![bal2a_a(h, z), bal2a_b(h, z), bal2a_c(h, z), bal2a_d(h, z)],
                denom: quad_e,
            }],
        },
        SymbolFamily {
            name: "lin_lh1",
            blocks: vec![
                SystemBlock {
                    label: "holo",
                    sampling: Sampling::LowHigh,
                    symbols: sym4(
                        Region::HoloLowHigh,
                        ["a", "b", "c", "d"],
                        [lh1h_a, lh1h_b, lh1h_c, lh1h_d],
                    ),
                    system: sys_lh1h,
                    closed: |x, y| vec![lh1h_a(x, y), lh1h_b(x, y), lh1h_c(x, y), lh1h_d(x, y)],
                    denom: quad_d,
                },
                SystemBlock {
                    label: "mixed",
                    sampling: Sampling::LowHigh,
                    symbols: sym4(
                        Region::MixedLowHigh,
                        ["a", "b", "c", "d"],
                        [lh1a_a, lh1a_b, lh1a_c, lh1a_d],
                    ),
                    system: sys_lh1a,
                    closed: |h, z| vec![lh1a_a(h, z), lh1a_b(h, z), lh1a_c(h, z), lh1a_d(h, z)],
                    denom: quad_e,
                },
            ],
        },
        SymbolFamily {
            name: "lin_lh2h",
            blocks: vec![SystemBlock {
                label: "holo",
                sampling: Sampling::LowHigh,
                symbols: sym4(
                    Region::HoloLowHigh,
                    ["a", "b", "c", "d"],
                    [lh2h_a, lh2h_b, lh2h_c, lh2h_d],
                ),
                system: sys_lh2h,
                closed: |x, y| vec![lh2h_a(x, y), lh2h_b(x, y), lh2h_c(x, y), lh2h_d(x, y)],
                denom: quad_d,
            }],
        },
        SymbolFamily {
            name: "lin_lh2a",
            blocks: vec![SystemBlock {
                label: "mixed",
                sampling: Sampling::LowHigh,
                symbols: sym4(
                    Region::MixedLowHigh,
                    ["a", "b", "c", "d"],
                    [lh2a_a, lh2a_b, lh2a_c, lh2a_d],
                ),
                system: sys_lh2a,
                closed: |h, z| vec![lh2a_a(h, z), lh2a_b(h, z), lh2a_c(h, z), lh2a_d(h, z)],
                denom: quad_e,
            }],
        },
    ]
}

/// Verification summary for one family.
#[derive(Debug, Clone, Serialize)]
pub struct FamilyReport {
    pub family: String,
    pub n_samples: usize,
    pub max_residual: f64,
    pub min_denominator: f64,
    /// Max relative gap between the closed forms and a numerically solved
    /// system (the independent oracle).
    pub max_solve_gap: f64,
}

fn draw_sample(rng: &mut ChaCha8Rng, sampling: Sampling) -> (f64, f64) {
    match sampling {
        Sampling::LowHigh => {
            let p = -rng.gen_range(0.5_f64..5.0);
            let q = -p.abs() * rng.gen_range(40.0_f64..800.0);
            (p, q)
        }
        Sampling::Balanced => {
            let p = -10f64.powf(rng.gen_range(0.0_f64..3.0));
            let ratio = 8f64.powf(rng.gen_range(-1.0_f64..1.0));
            (p, p.abs() * -ratio)
        }
        Sampling::BalancedOutputNeg => {
            let p = -10f64.powf(rng.gen_range(0.0_f64..3.0));
            let ratio = 8f64.powf(rng.gen_range(0.001_f64..1.0));
            (p, p.abs() * -ratio) // |q| > |p|, both negative => zeta < eta
        }
    }
}

/// Solve a small dense system by Gaussian elimination with partial pivoting.
pub fn solve_dense(a: &[Vec<f64>], b: &[f64]) -> Option<Vec<f64>> {
    let n = b.len();
    let mut m: Vec<Vec<f64>> = a.iter().cloned().collect();
    let mut rhs = b.to_vec();
    for col in 0..n {
        let (piv, &val) = m[col..]
            .iter()
            .map(|row| &row[col])
            .enumerate()
            .max_by(|a, b| a.1.abs().partial_cmp(&b.1.abs()).unwrap())?;
        if val.abs() < 1e-300 {
            return None;
        }
        m.swap(col, col + piv);
        rhs.swap(col, col + piv);
        for row in col + 1..n {
            let f = m[row][col] / m[col][col];
            for k in col..n {
                m[row][k] -= f * m[col][k];
            }
            rhs[row] -= f * rhs[col];
        }
    }
    let mut x = vec![0.0; n];
    for row in (0..n).rev() {
        let mut acc = rhs[row];
        for k in row + 1..n {
            acc -= m[row][k] * x[k];
        }
        x[row] = acc / m[row][row];
    }
    Some(x)
}

/// Check one family over `n_samples` random support points per block.
pub fn verify_family(family: &SymbolFamily, n_samples: usize, seed: u64) -> FamilyReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut max_residual: f64 = 0.0;
    let mut min_denominator = f64::INFINITY;
    let mut max_solve_gap: f64 = 0.0;
    let mut total = 0;
    for block in &family.blocks {
        for _ in 0..n_samples {
            let (p, q) = draw_sample(&mut rng, block.sampling);
            let den = (block.denom)(p, q);
            min_denominator = min_denominator.min(den);
            let (a, b) = (block.system)(p, q);
            let s = (block.closed)(p, q);
            // residual of the closed forms in the system
            let mut scale: f64 = 0.0;
            let mut resid: f64 = 0.0;
            for (row, &bi) in a.iter().zip(&b) {
                let ax: f64 = row.iter().zip(&s).map(|(m, x)| m * x).sum();
                resid = resid.max((ax - bi).abs());
                scale = scale.max(ax.abs()).max(bi.abs());
            }
            max_residual = max_residual.max(resid / scale.max(1e-300));
            // independent oracle: numeric solve
            if let Some(x) = solve_dense(&a, &b) {
                let snorm = s.iter().fold(0.0_f64, |m, v| m.max(v.abs())).max(1e-300);
                let gap = x
                    .iter()
                    .zip(&s)
                    .map(|(xi, si)| (xi - si).abs())
                    .fold(0.0_f64, f64::max);
                max_solve_gap = max_solve_gap.max(gap / snorm);
            }
            total += 1;
        }
    }
    FamilyReport {
        family: family.name.to_string(),
        n_samples: total,
        max_residual,
        min_denominator,
        max_solve_gap,
    }
}
