//! Kernel identities as plain checks, shared by the property suite and the
//! acceptance run.

use std::f64::consts::PI;

use num_complex::Complex64;
use proptest::prelude::*;

use super::c;
use extcauchy_core::special::{
    digamma, hurwitz_zeta_neg_int, lerch_phi, log_gamma, LerchArgs, LerchOrder,
};

pub type Check = std::result::Result<(), String>;

pub fn phi(z: Complex64, k: u32, a: Complex64) -> Complex64 {
    lerch_phi(&LerchArgs::new(z, LerchOrder::NegInt(k), a)).unwrap()
}

/// Largest of the magnitudes, at least one.
fn scale(xs: &[Complex64]) -> f64 {
    xs.iter().map(|x| x.norm()).fold(1.0, f64::max)
}

fn off_integers(x: f64, y: f64) -> bool {
    y.abs() > 1e-3 || (x - x.round()).abs() > 1e-3
}

fn check(ok: bool, detail: impl FnOnce() -> String) -> Check {
    if ok {
        Ok(())
    } else {
        Err(detail())
    }
}

/// (ρ, θ, k, Re a, Im a) with z = ρe^{iθ} kept off the positive axis.
pub fn lerch_args() -> impl Strategy<Value = (f64, f64, u32, f64, f64)> {
    (
        0.3f64..1.5,
        0.3f64..(2.0 * PI - 0.3),
        0u32..=32,
        0.05f64..3.0,
        -1.0f64..1.0,
    )
}

pub fn lerch_recurrence((rho, theta, k, a_re, a_im): (f64, f64, u32, f64, f64)) -> Check {
    let z = Complex64::from_polar(rho, theta);
    let a = c(a_re, a_im);
    let lhs = phi(z, k, a);
    let rhs = a.powu(k) + z * phi(z, k, a + 1.0);
    check((lhs - rhs).norm() <= 1e-10 * (1.0 + lhs.norm()), || {
        format!("z={z} k={k} a={a}: {lhs} vs {rhs}")
    })
}

pub fn hurwitz_args() -> impl Strategy<Value = (usize, f64, f64)> {
    (0usize..=32, 0.05f64..3.0, -1.0f64..1.0)
}

pub fn hurwitz_recurrence((k, a_re, a_im): (usize, f64, f64)) -> Check {
    let a = c(a_re, a_im);
    let lhs = hurwitz_zeta_neg_int(k, a).unwrap();
    let rhs = hurwitz_zeta_neg_int(k, a + 1.0).unwrap() + a.powu(k as u32);
    check((lhs - rhs).norm() <= 1e-10 * (1.0 + lhs.norm()), || {
        format!("k={k} a={a}: {lhs} vs {rhs}")
    })
}

/// Points with |z| ≤ 10, at least 1e-3 from the integers.
pub fn plane_args() -> impl Strategy<Value = (f64, f64)> {
    (-10.0f64..10.0, -10.0f64..10.0).prop_filter("on the disc, off the integers", |&(x, y)| {
        c(x, y).norm() <= 10.0 && off_integers(x, y)
    })
}

pub fn gamma_reflection((x, y): (f64, f64)) -> Check {
    let z = c(x, y);
    let product = log_gamma(z).unwrap().exp() * log_gamma(1.0 - z).unwrap().exp();
    let want = PI / (z * PI).sin();
    check((product - want).norm() <= 1e-10 * want.norm(), || {
        format!("{z}: {product} vs {want}")
    })
}

pub fn digamma_recurrence((x, y): (f64, f64)) -> Check {
    let z = c(x, y);
    let next = digamma(z + 1.0).unwrap();
    let here = digamma(z).unwrap();
    let step = z.inv();
    // relative to the largest term, so zeros of ψ do not dominate
    let err = (next - here - step).norm();
    check(err <= 1e-13 * scale(&[next, here, step]), || {
        format!("{z}: {err:e}")
    })
}

/// Worst relative deviation of Φ(e^{iθ}, −k, a) from the Abel sum over the
/// standard grid.
pub fn abel_worst() -> f64 {
    let mut worst: f64 = 0.0;
    for (p, q) in [(1, 3), (1, 2), (2, 3), (1, 1)] {
        let z = Complex64::from_polar(1.0, PI * p as f64 / q as f64);
        for k in 0..4 {
            for a in [0.25, 0.7, 1.3] {
                let want = super::abel_sum(p, q, k, a);
                let got = phi(z, k, c(a, 0.0));
                worst = worst.max((got - want).norm() / want.norm());
            }
        }
    }
    worst
}
