//! Complex log-Gamma and digamma.
//!
//! `log_gamma` is the analytic continuation of ln Γ from the positive real
//! axis, single-valued on ℂ∖(−∞, 0]. On the negative real axis it takes the
//! limit from the upper half-plane, so Im ln Γ(x) = −π on (−1, 0), −2π on
//! (−2, −1), and so on.

use std::f64::consts::{LN_2, PI};

use num_complex::Complex64;

use crate::error::{Error, Result};

const POLE_TOL: f64 = 1e-12;
const ASYMPTOTIC_RADIUS: f64 = 15.0;
const HALF_LN_2PI: f64 = 0.918_938_533_204_672_8;

// B_{2n} / (2n (2n - 1))
const STIRLING: [f64; 8] = [
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360_360.0,
    1.0 / 156.0,
    -3617.0 / 122_400.0,
];

// B_{2n} / (2n)
const DIGAMMA_ASYMPTOTIC: [f64; 7] = [
    1.0 / 12.0,
    -1.0 / 120.0,
    1.0 / 252.0,
    -1.0 / 240.0,
    1.0 / 132.0,
    -691.0 / 32_760.0,
    1.0 / 12.0,
];

pub(crate) fn check_pole(z: Complex64) -> Result<()> {
    if z.re <= 0.5 {
        let n = z.re.round();
        if n <= 0.0 && (z - n).norm() < POLE_TOL {
            return Err(Error::Pole { re: z.re, im: z.im });
        }
    }
    Ok(())
}

/// ln Γ(z), analytic on the plane cut along (−∞, 0].
pub fn log_gamma(z: Complex64) -> Result<Complex64> {
    if !(z.re.is_finite() && z.im.is_finite()) {
        return Err(Error::Domain(format!("non-finite argument {z}")));
    }
    check_pole(z)?;
    Ok(log_gamma_unchecked(z))
}

fn log_gamma_unchecked(z: Complex64) -> Complex64 {
    if z.re < 0.5 {
        if z.im < 0.0 {
            return log_gamma_unchecked(z.conj()).conj();
        }
        // ln Γ(z) = ln π − ln sin(πz) − ln Γ(1 − z), with the branch of
        // ln sin(πz) that is analytic on the closed upper half-plane.
        let reflected = log_gamma_right(Complex64::new(1.0, 0.0) - z);
        return Complex64::new(PI.ln(), 0.0) - log_sin_pi_upper(z) - reflected;
    }
    log_gamma_right(z)
}

/// Stirling series with upward recurrence; valid for Re(z) ≥ 1/2.
fn log_gamma_right(z: Complex64) -> Complex64 {
    let mut shifted = z;
    let mut correction = Complex64::new(0.0, 0.0);
    if z.norm() < ASYMPTOTIC_RADIUS {
        let steps = (ASYMPTOTIC_RADIUS - z.re).ceil().max(0.0) as usize;
        for _ in 0..steps {
            correction += shifted.ln();
            shifted += 1.0;
        }
    }
    let w = shifted;
    let inv = w.inv();
    let inv2 = inv * inv;
    let mut series = Complex64::new(0.0, 0.0);
    let mut p = inv;
    for c in STIRLING {
        series += p * c;
        p *= inv2;
    }
    (w - 0.5) * w.ln() - w + HALF_LN_2PI + series - correction
}

/// ln sin(πz) for Im(z) ≥ 0, continuous on the closed upper half-plane
/// minus the integers.
fn log_sin_pi_upper(z: Complex64) -> Complex64 {
    // sin(πz) = (i/2) e^{−iπz} (1 − e^{2πiz})
    let x = z.re - z.re.round();
    let (s, c) = (2.0 * PI * x).sin_cos();
    let w = Complex64::new(c, s) * (-2.0 * PI * z.im).exp();
    let one_minus = Complex64::new(1.0, 0.0) - w;
    Complex64::new(PI * z.im - LN_2, PI / 2.0 - PI * z.re) + one_minus.ln()
}

/// Principal logarithm of the value Γ(z), imaginary part in (−π, π].
pub fn log_gamma_principal(z: Complex64) -> Result<Complex64> {
    let lg = log_gamma(z)?;
    if z.im == 0.0 && z.re < 0.0 {
        // Γ is real here; the sign alternates between poles
        let negative = (z.re.floor() as i64).rem_euclid(2) == 1;
        return Ok(Complex64::new(lg.re, if negative { PI } else { 0.0 }));
    }
    Ok(Complex64::new(lg.re, wrap_angle(lg.im)))
}

/// Angle reduced to (−π, π].
pub(crate) fn wrap_angle(theta: f64) -> f64 {
    let two_pi = 2.0 * PI;
    let mut t = theta - two_pi * (theta / two_pi).round();
    if t <= -PI {
        t += two_pi;
    }
    t
}

pub fn gamma(z: Complex64) -> Result<Complex64> {
    Ok(log_gamma(z)?.exp())
}

/// ψ(z) = Γ'(z)/Γ(z).
pub fn digamma(z: Complex64) -> Result<Complex64> {
    if !(z.re.is_finite() && z.im.is_finite()) {
        return Err(Error::Domain(format!("non-finite argument {z}")));
    }
    check_pole(z)?;
    if z.re < 0.5 {
        let one = Complex64::new(1.0, 0.0);
        return Ok(digamma_right(one - z) - cot_pi(z) * PI);
    }
    Ok(digamma_right(z))
}

fn digamma_right(z: Complex64) -> Complex64 {
    let mut shifted = z;
    let mut correction = Complex64::new(0.0, 0.0);
    if z.norm() < ASYMPTOTIC_RADIUS {
        let steps = (ASYMPTOTIC_RADIUS - z.re).ceil().max(0.0) as usize;
        for _ in 0..steps {
            correction += shifted.inv();
            shifted += 1.0;
        }
    }
    let w = shifted;
    let inv = w.inv();
    let inv2 = inv * inv;
    let mut series = Complex64::new(0.0, 0.0);
    let mut p = inv2;
    for c in DIGAMMA_ASYMPTOTIC {
        series += p * c;
        p *= inv2;
    }
    w.ln() - inv * 0.5 - series - correction
}

/// cot(πz), stable for large |Im z|.
fn cot_pi(z: Complex64) -> Complex64 {
    let x = 2.0 * PI * (z.re - z.re.round());
    let y = 2.0 * PI * z.im;
    if y.abs() > 40.0 {
        return Complex64::new(0.0, -y.signum());
    }
    let d = y.cosh() - x.cos();
    Complex64::new(x.sin() / d, -y.sinh() / d)
}
