//! Lerch transcendent Φ(z, s, a) = Σ_{n≥0} zⁿ / (n + a)ˢ.

use num_complex::Complex64;

use super::bernoulli::apostol_bernoulli;
use super::gamma::log_gamma;
use super::zeta::hurwitz_zeta_neg_int;
use crate::error::{Error, Result};
use crate::quadrature::{exp_sinh, tanh_sinh, Direction};

const UNIT_TOL: f64 = 1e-12;
const SERIES_RADIUS: f64 = 0.5;
const INTEGRAL_TOL: f64 = 1e-14;
/// Beyond the unit circle and within this angle of the cut, the real-axis
/// integral has a pole too close to its path.
const NEAR_CUT_ANGLE: f64 = 0.5;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum LerchOrder {
    /// s = −k
    NegInt(u32),
    /// s = 1
    PosOne,
    /// any s with Re(s) > 0
    General(Complex64),
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LerchArgs {
    pub z: Complex64,
    pub s: LerchOrder,
    pub a: Complex64,
}

impl LerchArgs {
    pub fn new(z: Complex64, s: LerchOrder, a: Complex64) -> Self {
        Self { z, s, a }
    }

    fn validate(&self) -> Result<()> {
        if !(self.a.re > 0.0) {
            return Err(Error::Domain(format!(
                "Lerch shift needs Re(a) > 0, got {}",
                self.a
            )));
        }
        if !matches!(self.s, LerchOrder::NegInt(_)) && on_cut(self.z) {
            return Err(Error::BranchCut);
        }
        Ok(())
    }
}

fn on_cut(z: Complex64) -> bool {
    z.im.abs() < UNIT_TOL && z.re > 1.0 - UNIT_TOL
}

pub fn lerch_phi(args: &LerchArgs) -> Result<Complex64> {
    args.validate()?;
    let LerchArgs { z, s, a } = *args;
    match s {
        LerchOrder::NegInt(k) => {
            let k = k as usize;
            if (z - 1.0).norm() < UNIT_TOL {
                hurwitz_zeta_neg_int(k, a)
            } else {
                Ok(-apostol_bernoulli(k + 1, a, z)? / (k as f64 + 1.0))
            }
        }
        LerchOrder::PosOne => {
            if z.norm() < SERIES_RADIUS {
                Ok(order_one_series(z, a))
            } else if z.norm() > 1.0 && z.arg().abs() < NEAR_CUT_ANGLE {
                order_one_detour(z, a)
            } else {
                erdelyi_integral(z, Complex64::new(1.0, 0.0), a)
            }
        }
        LerchOrder::General(s) => {
            if !(s.re > 0.0) {
                return Err(Error::Domain(format!(
                    "general order needs Re(s) > 0, got {s}"
                )));
            }
            erdelyi_integral(z, s, a)
        }
    }
}

/// Σ zⁿ/(n + a) for |z| < 1/2, stopped once the geometric tail bound
/// |z|^N / ((N + Re a)(1 − |z|)) drops below machine precision.
fn order_one_series(z: Complex64, a: Complex64) -> Complex64 {
    let r = z.norm();
    let mut acc = crate::sum::ComplexSum::new();
    let mut zn = Complex64::new(1.0, 0.0);
    let mut n = 0.0;
    loop {
        let term = zn / (a + n);
        acc.add(term);
        zn *= z;
        n += 1.0;
        let tail = zn.norm() / ((n + a.re) * (1.0 - r));
        if tail <= f64::EPSILON * 0.25 * acc.value().norm() || zn.norm() == 0.0 {
            break;
        }
    }
    acc.value()
}

/// Φ(x + i0, 1, a) for real x > 1, the limit from the upper half plane.
pub(crate) fn order_one_above_cut(x: f64, a: Complex64) -> Result<Complex64> {
    if !(x > 1.0) {
        return Err(Error::Domain(format!(
            "expected a point on the cut, got {x}"
        )));
    }
    order_one_detour(Complex64::new(x, 0.0), a)
}

/// z^{−a} ∫ w^{a−1}/(1 − w) dw along 0 → 1 ± i → z, passing 1 on the side of z.
fn order_one_detour(z: Complex64, a: Complex64) -> Result<Complex64> {
    let one = Complex64::new(1.0, 0.0);
    let p = Complex64::new(1.0, if z.im >= 0.0 { 1.0 } else { -1.0 });
    let pa = p.powc(a);
    // s^{a−1}/(1 − ps) = s^{a−1} + p s^a/(1 − ps); the first part is 1/a
    let first = tanh_sinh(
        |s: f64| p * (s.ln() * a).exp() / (one - p * s),
        0.0,
        1.0,
        INTEGRAL_TOL,
    )?
    .into_converged()?;
    let step = z - p;
    let second = tanh_sinh(
        |s: f64| {
            let w = p + step * s;
            w.powc(a - 1.0) / (one - w) * step
        },
        0.0,
        1.0,
        INTEGRAL_TOL,
    )?
    .into_converged()?;
    Ok(z.powc(-a) * (pa * (first.value + 1.0 / a) + second.value))
}

/// (1/Γ(s)) ∫_0^∞ t^{s−1} e^{−at} / (1 − z e^{−t}) dt
fn erdelyi_integral(z: Complex64, s: Complex64, a: Complex64) -> Result<Complex64> {
    let sm1 = s - 1.0;
    let integrand = |t: f64| {
        let e = (-t).exp();
        let power = if sm1 == Complex64::new(0.0, 0.0) {
            Complex64::new(1.0, 0.0)
        } else {
            (sm1 * t.ln()).exp()
        };
        power * (-a * t).exp() / (Complex64::new(1.0, 0.0) - z * e)
    };
    let r = exp_sinh(integrand, 0.0, Direction::Up, INTEGRAL_TOL)?.into_converged()?;
    let norm = if s == Complex64::new(1.0, 0.0) {
        Complex64::new(0.0, 0.0)
    } else {
        log_gamma(s)?
    };
    Ok(r.value * (-norm).exp())
}
