//! Left-hand-side integrands, evaluated on the logarithmic scale t = log x.

use std::f64::consts::PI;
use std::fmt;
use std::sync::Arc;

use num_complex::Complex64;

use crate::closed_forms::{validate_exponent, validate_pair, Example, IntegralSpec, LogOrder};
use crate::error::{Error, Result};

type Eval = Arc<dyn Fn(f64) -> Complex64 + Send + Sync>;

// below this |z| the series of (e^z − 1)/z is used
const SERIES_RADIUS: f64 = 1e-4;

/// A function on (0, ∞), stored as g(t) = f(e^t)·e^t.
///
/// When `pole` is set the stored function is the regular part h and the
/// integrand is h(t)/(t − t0). A real t0 is read as the limit t0 − i0, so the
/// integral is the principal value minus iπ·h(t0).
#[derive(Clone)]
pub struct Integrand {
    evaluator: Eval,
    /// Points in x where the integrand is singular or needs a panel break.
    pub singular_points: Vec<f64>,
    /// Exponential decay rate in t as t → +∞, α + β − Re(m) for the kernel.
    pub decay_exponent: f64,
    pub pole: Option<Complex64>,
}

impl fmt::Debug for Integrand {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Integrand")
            .field("singular_points", &self.singular_points)
            .field("decay_exponent", &self.decay_exponent)
            .field("pole", &self.pole)
            .finish_non_exhaustive()
    }
}

impl Integrand {
    /// From g(t) = f(e^t)·e^t directly.
    pub fn from_log_scale<F>(g: F, singular_points: Vec<f64>, decay_exponent: f64) -> Self
    where
        F: Fn(f64) -> Complex64 + Send + Sync + 'static,
    {
        Integrand {
            evaluator: Arc::new(g),
            singular_points,
            decay_exponent,
            pole: None,
        }
    }

    /// From a function of x.
    pub fn from_x<F>(f: F, singular_points: Vec<f64>, decay_exponent: f64) -> Self
    where
        F: Fn(f64) -> Complex64 + Send + Sync + 'static,
    {
        Self::from_log_scale(
            move |t| {
                let x = t.exp();
                // x overflowed or underflowed: deep in a decaying tail
                if x == 0.0 || x.is_infinite() {
                    return Complex64::new(0.0, 0.0);
                }
                f(x) * x
            },
            singular_points,
            decay_exponent,
        )
    }

    /// h(t)/(t − t0), a real pole taken from below.
    pub fn with_pole<F>(h: F, t0: f64, decay_exponent: f64) -> Self
    where
        F: Fn(f64) -> Complex64 + Send + Sync + 'static,
    {
        Self::with_complex_pole(h, Complex64::new(t0, 0.0), decay_exponent)
    }

    /// h(t)/(t − t0) for complex t0.
    pub fn with_complex_pole<F>(h: F, t0: Complex64, decay_exponent: f64) -> Self
    where
        F: Fn(f64) -> Complex64 + Send + Sync + 'static,
    {
        Integrand {
            evaluator: Arc::new(h),
            singular_points: vec![t0.re.exp()],
            decay_exponent,
            pole: Some(t0),
        }
    }

    /// The stored function: g(t), or h(t) when there is a pole.
    pub fn eval_regular(&self, t: f64) -> Complex64 {
        (self.evaluator)(t)
    }

    /// The full integrand on the t scale.
    pub fn eval_t(&self, t: f64) -> Complex64 {
        let v = (self.evaluator)(t);
        match self.pole {
            Some(t0) => v / (t - t0),
            None => v,
        }
    }

    /// The integrand as a function of x.
    pub fn eval_x(&self, x: f64) -> Complex64 {
        self.eval_t(x.ln()) / x
    }

    /// c·f
    pub fn scaled(&self, c: Complex64) -> Integrand {
        let inner = self.evaluator.clone();
        Integrand {
            evaluator: Arc::new(move |t| c * inner(t)),
            singular_points: self.singular_points.clone(),
            decay_exponent: self.decay_exponent,
            pole: self.pole,
        }
    }
}

fn softplus(x: f64) -> f64 {
    x.max(0.0) + (-x.abs()).exp().ln_1p()
}

/// e^{mt}/((1 + e^{αt})(1 + e^{βt})), without overflow at either end.
pub fn kernel(m: Complex64, alpha: f64, beta: f64, t: f64) -> Complex64 {
    (m * t - softplus(alpha * t) - softplus(beta * t)).exp()
}

/// Principal log of a real number: log|y| + iπ for y < 0.
fn real_log(y: f64) -> Complex64 {
    Complex64::new(y.abs().ln(), if y < 0.0 { PI } else { 0.0 })
}

/// (e^z − 1)/z
fn exprel(z: Complex64) -> Complex64 {
    if z.norm() < SERIES_RADIUS {
        1.0 + z * (0.5 + z * (1.0 / 6.0 + z / 24.0))
    } else {
        (z.exp() - 1.0) / z
    }
}

fn exprel_re(t: f64) -> f64 {
    if t.abs() < SERIES_RADIUS {
        1.0 + t * (0.5 + t * (1.0 / 6.0 + t / 24.0))
    } else {
        t.exp_m1() / t
    }
}

/// x^{1/2}(x − 1) times the kernel, at x = e^t.
fn half_times_expm1(alpha: f64, beta: f64, t: f64) -> Complex64 {
    let half = Complex64::new(0.5, 0.0);
    if t > 1.0 {
        kernel(half + 1.0, alpha, beta, t) - kernel(half, alpha, beta, t)
    } else {
        kernel(half, alpha, beta, t) * t.exp_m1()
    }
}

/// Integrand of the theorem family named by `spec`.
pub fn build_lhs(spec: &IntegralSpec) -> Result<Integrand> {
    spec.validate()?;
    let IntegralSpec {
        a,
        m,
        k,
        alpha,
        beta,
    } = *spec;
    let (af, bf) = (alpha as f64, beta as f64);
    let decay = af + bf - m.re;
    let log_a = a.ln();
    Ok(match k {
        LogOrder::Power(k) => Integrand::from_log_scale(
            move |t| kernel(m, af, bf, t) * (t + log_a).powi(k as i32),
            Vec::new(),
            decay,
        ),
        LogOrder::LogLog => Integrand::from_log_scale(
            move |t| kernel(m, af, bf, t) * real_log(t + log_a),
            vec![1.0 / a],
            decay,
        ),
        LogOrder::Reciprocal => Integrand::with_pole(move |t| kernel(m, af, bf, t), -log_a, decay),
    })
}

fn half(alpha: u32, beta: u32) -> Result<(f64, f64, f64)> {
    validate_pair(alpha, beta)?;
    let (af, bf) = (alpha as f64, beta as f64);
    Ok((af, bf, af + bf - 0.5))
}

/// Integrand on the left of an example identity.
pub fn example_lhs(example: &Example) -> Result<Integrand> {
    let re = |x: f64| Complex64::new(x, 0.0);
    let theorem = |a: f64, m: f64, k: LogOrder, alpha: u32, beta: u32| {
        build_lhs(&IntegralSpec::new(a, re(m), k, alpha, beta))
    };
    match *example {
        Example::E1 { m, k, alpha, beta } => {
            build_lhs(&IntegralSpec::new(1.0, m, LogOrder::Power(k), alpha, beta))
        }
        Example::E2 { alpha, beta } => theorem(1.0, 0.5, LogOrder::LogLog, alpha, beta),
        Example::E3 { a, alpha, beta } => theorem(a, 0.25, LogOrder::LogLog, alpha, beta),
        Example::E4 { a, k, alpha, beta } => theorem(a, 1.0, LogOrder::Power(k), alpha, beta),
        Example::E5 { a, alpha, beta } => theorem(a, 1.0, LogOrder::LogLog, alpha, beta),
        Example::E6 | Example::E7 | Example::E11 => {
            let (alpha, beta) = example.pair();
            theorem(1.0, 1.0, LogOrder::LogLog, alpha, beta)
        }
        Example::E8 { u, v, alpha, beta } => {
            validate_pair(alpha, beta)?;
            validate_exponent(re(u), alpha, beta)?;
            let (af, bf) = (alpha as f64, beta as f64);
            let m = Complex64::new(u, -v);
            let iv2 = Complex64::new(0.0, 2.0 * v);
            // (1 − x^{2iv})/log x = −2iv·(e^{2ivt} − 1)/(2ivt)
            Ok(Integrand::from_log_scale(
                move |t| -iv2 * kernel(m, af, bf, t) * exprel(iv2 * t),
                vec![1.0],
                af + bf - u,
            ))
        }
        Example::E9 { a, alpha, beta } => {
            let (af, bf, decay) = half(alpha, beta)?;
            if a.im < 0.0 || !(a.re.is_finite() && a.im.is_finite()) {
                return Err(Error::Domain(format!("e9 needs Im(a) ≥ 0, got {a}")));
            }
            let m = re(0.5);
            Ok(Integrand::with_complex_pole(
                move |t| kernel(m, af, bf, t),
                -a * PI,
                decay,
            ))
        }
        Example::E10 { a, alpha, beta } => {
            let (af, bf, decay) = half(alpha, beta)?;
            if !(a.re > 0.0 && a.im > 0.0) {
                return Err(Error::Domain(format!(
                    "e10 needs Re(a) > 0 and Im(a) > 0, got {a}"
                )));
            }
            let m = re(0.5);
            let api = a * PI;
            Ok(Integrand::from_log_scale(
                move |t| kernel(m, af, bf, t) * 2.0 * api / (api * api - t * t),
                Vec::new(),
                decay,
            ))
        }
        Example::E12 { .. } | Example::E13 => {
            let (alpha, beta) = example.pair();
            let (af, bf, _) = half(alpha, beta)?;
            Ok(Integrand::from_log_scale(
                move |t| {
                    if t.abs() < SERIES_RADIUS {
                        kernel(re(0.5), af, bf, t) * exprel_re(t)
                    } else {
                        half_times_expm1(af, bf, t) / t
                    }
                },
                vec![1.0],
                af + bf - 1.5,
            ))
        }
        Example::E14 => {
            let (af, bf, _) = half(2, 4)?;
            Ok(Integrand::from_log_scale(
                move |t| half_times_expm1(af, bf, t) * real_log(t),
                vec![1.0],
                af + bf - 1.5,
            ))
        }
    }
}
