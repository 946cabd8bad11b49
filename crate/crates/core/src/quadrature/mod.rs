//! Numerical oracle for the left-hand sides.

mod de;
mod integrand;

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::sum::ComplexSum;

pub use de::{exp_sinh, tanh_sinh, Direction, QuadratureResult, MAX_LEVEL};
pub use integrand::{build_lhs, example_lhs, kernel, Integrand};

pub const MIN_REL_TOL: f64 = 1e-12;
// half-width in t of the panel folded around a pole
const POLE_WINDOW: f64 = 0.5;
const MERGE_GAP: f64 = 1e-12;

/// ∫₀^∞ f(x) dx, computed as ∫ g(t) dt over the real line.
pub fn integrate_halfline(f: &Integrand, rel_tol: f64) -> Result<QuadratureResult> {
    if !(f.decay_exponent > 0.0) {
        return Err(Error::Domain(format!(
            "decay exponent must be positive, got {}",
            f.decay_exponent
        )));
    }
    integrate_range(f, f64::NEG_INFINITY, f64::INFINITY, rel_tol)
}

/// ∫ g(t) dt over [t_lo, t_hi], i.e. ∫ f(x) dx over [e^{t_lo}, e^{t_hi}].
pub fn integrate_window(
    f: &Integrand,
    t_lo: f64,
    t_hi: f64,
    rel_tol: f64,
) -> Result<QuadratureResult> {
    if !(t_lo.is_finite() && t_hi.is_finite() && t_lo < t_hi) {
        return Err(Error::Domain(format!("bad window [{t_lo}, {t_hi}]")));
    }
    integrate_range(f, t_lo, t_hi, rel_tol)
}

struct Totals {
    value: ComplexSum,
    error: f64,
    nodes: usize,
    converged: bool,
}

impl Totals {
    fn add(&mut self, r: QuadratureResult) {
        self.value.add(r.value);
        self.error += r.abs_error_estimate;
        self.nodes += r.nodes;
        self.converged &= r.converged;
    }
}

fn integrate_range(f: &Integrand, lo: f64, hi: f64, rel_tol: f64) -> Result<QuadratureResult> {
    if !(MIN_REL_TOL..1.0).contains(&rel_tol) {
        return Err(Error::Domain(format!(
            "rel_tol must lie in [1e-12, 1), got {rel_tol}"
        )));
    }
    let window = f.pole.map(|t0| (t0.re - POLE_WINDOW, t0.re + POLE_WINDOW));
    if let Some((w0, w1)) = window {
        if w0 < lo || w1 > hi {
            return Err(Error::Domain(
                "pole window must lie inside the range".into(),
            ));
        }
    }

    let mut cuts: Vec<f64> = std::iter::once(0.0)
        .chain(
            f.singular_points
                .iter()
                .filter(|&&x| x > 0.0)
                .map(|x| x.ln()),
        )
        .filter(|&t| t.is_finite() && t > lo && t < hi)
        .filter(|&t| window.is_none_or(|(w0, w1)| t < w0 || t > w1))
        .collect();
    if let Some((w0, w1)) = window {
        cuts.push(w0);
        cuts.push(w1);
    }
    cuts.sort_by(f64::total_cmp);
    cuts.dedup_by(|b, a| (*b - *a).abs() < MERGE_GAP);

    let g = |t: f64| f.eval_t(t);
    let mut totals = Totals {
        value: ComplexSum::new(),
        error: 0.0,
        nodes: 0,
        converged: true,
    };
    let mut edges = Vec::with_capacity(cuts.len() + 2);
    edges.push(lo);
    edges.extend(cuts.iter().copied());
    edges.push(hi);
    for pair in edges.windows(2) {
        let (a, b) = (pair[0], pair[1]);
        if window == Some((a, b)) {
            totals.add(pole_panel(f, rel_tol)?);
            continue;
        }
        let r = match (a.is_finite(), b.is_finite()) {
            (false, true) => exp_sinh(g, b, Direction::Down, rel_tol)?,
            (true, false) => exp_sinh(g, a, Direction::Up, rel_tol)?,
            (true, true) => tanh_sinh(g, a, b, rel_tol)?,
            (false, false) => {
                let down = exp_sinh(g, 0.0, Direction::Down, rel_tol)?;
                totals.add(down);
                exp_sinh(g, 0.0, Direction::Up, rel_tol)?
            }
        };
        totals.add(r);
    }
    QuadratureResult {
        value: totals.value.value(),
        abs_error_estimate: totals.error,
        nodes: totals.nodes,
        converged: totals.converged,
    }
    .into_converged()
}

/// ∫ h(t)/(t − t0) over the window around Re(t0). With c = Re(t0) and
/// d = Im(t0), h(c) is subtracted and integrated exactly; the rest is folded
/// onto [0, L]. A real pole gets the −iπ·h(c) of the t0 − i0 limit.
fn pole_panel(f: &Integrand, rel_tol: f64) -> Result<QuadratureResult> {
    let t0 = f.pole.expect("pole panel without a pole");
    let (c, d) = (t0.re, t0.im);
    let hc = f.eval_regular(c);
    let folded = if d == 0.0 {
        tanh_sinh(
            |s| (f.eval_regular(c + s) - f.eval_regular(c - s)) / s,
            0.0,
            POLE_WINDOW,
            rel_tol,
        )?
    } else {
        let id = Complex64::new(0.0, d);
        tanh_sinh(
            |s| (f.eval_regular(c + s) - hc) / (s - id) - (f.eval_regular(c - s) - hc) / (s + id),
            0.0,
            POLE_WINDOW,
            rel_tol,
        )?
    };
    let log_term = if d == 0.0 {
        Complex64::new(0.0, -PI)
    } else {
        let id = Complex64::new(0.0, d);
        (POLE_WINDOW - id).ln() - (-POLE_WINDOW - id).ln()
    };
    Ok(QuadratureResult {
        value: folded.value + hc * log_term,
        ..folded
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::closed_forms::{IntegralSpec, LogOrder};
    use std::f64::consts::FRAC_PI_2;

    fn re(x: f64) -> Complex64 {
        Complex64::new(x, 0.0)
    }

    #[test]
    fn arctan_integral() {
        let f = Integrand::from_x(|x| re(1.0 / (1.0 + x * x)), Vec::new(), 1.0);
        let r = integrate_halfline(&f, 1e-12).unwrap();
        assert!((r.value - re(FRAC_PI_2)).norm() < 1e-13);
        assert!(r.converged);
    }

    #[test]
    fn partial_fraction_value() {
        let f = build_lhs(&IntegralSpec::new(1.0, re(1.0), LogOrder::Power(0), 2, 4)).unwrap();
        let r = integrate_halfline(&f, 1e-12).unwrap();
        assert!((r.value - re(PI / 4.0)).norm() < 1e-13);
    }

    #[test]
    fn principal_value_with_residue() {
        // ∫ e^{-t²}/(t − 1 + i0) dt = PV − iπ e^{-1}
        let f = Integrand::with_pole(|t| re((-t * t).exp()), 1.0, 1.0);
        let r = integrate_range(&f, -40.0, 40.0, 1e-12).unwrap();
        // PV ∫ e^{-t²}/(t − 1) dt = −2√π·D(1), with D the Dawson function
        let dawson_1 = 0.538_079_506_912_768_4;
        let pv = -2.0 * PI.sqrt() * dawson_1;
        assert!(
            (r.value - Complex64::new(pv, -PI * (-1f64).exp())).norm() < 1e-11,
            "{}",
            r.value
        );
    }

    #[test]
    fn complex_pole_near_the_axis() {
        // ∫ e^{-t²}/(t − 1 + iε) dt tends to the real-pole value as ε → 0
        let real = Integrand::with_pole(|t| re((-t * t).exp()), 1.0, 1.0);
        let r0 = integrate_range(&real, -40.0, 40.0, 1e-12).unwrap().value;
        let near =
            Integrand::with_complex_pole(|t| re((-t * t).exp()), Complex64::new(1.0, -1e-9), 1.0);
        let r1 = integrate_range(&near, -40.0, 40.0, 1e-12).unwrap().value;
        assert!((r0 - r1).norm() < 1e-8);
        // and matches direct quadrature well away from it
        let p = Complex64::new(1.0, -0.3);
        let far = Integrand::with_complex_pole(|t| re((-t * t).exp()), p, 1.0);
        let plain =
            Integrand::from_log_scale(move |t| re((-t * t).exp()) / (t - p), Vec::new(), 1.0);
        let a = integrate_range(&far, -40.0, 40.0, 1e-12).unwrap().value;
        let b = integrate_range(&plain, -40.0, 40.0, 1e-12).unwrap().value;
        assert!((a - b).norm() < 1e-12, "{a} {b}");
    }

    #[test]
    fn tolerance_floor_enforced() {
        let f = Integrand::from_x(|x| re(1.0 / (1.0 + x * x)), Vec::new(), 1.0);
        assert!(matches!(
            integrate_halfline(&f, 1e-13),
            Err(Error::Domain(_))
        ));
        let flat = Integrand::from_x(|x| re(1.0 / (1.0 + x * x)), Vec::new(), 0.0);
        assert!(matches!(
            integrate_halfline(&flat, 1e-8),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn non_finite_interior_value_is_reported() {
        let f = Integrand::from_log_scale(
            |t| {
                if (t - 0.3).abs() < 0.05 {
                    re(f64::NAN)
                } else {
                    re((-t * t).exp())
                }
            },
            Vec::new(),
            1.0,
        );
        assert!(matches!(
            integrate_halfline(&f, 1e-10),
            Err(Error::SingularEvaluation(_))
        ));
    }

    #[test]
    fn window_matches_halfline_for_wide_windows() {
        let f = build_lhs(&IntegralSpec::new(1.0, re(0.5), LogOrder::Power(1), 2, 4)).unwrap();
        let full = integrate_halfline(&f, 1e-12).unwrap().value;
        let part = integrate_window(&f, -80.0, 20.0, 1e-12).unwrap().value;
        assert!((full - part).norm() < 1e-12);
    }
}
