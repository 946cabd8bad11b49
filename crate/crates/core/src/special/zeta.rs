use std::f64::consts::PI;

use num_complex::Complex64;

use super::bernoulli::{bernoulli_poly, MAX_DEGREE};
use super::gamma::log_gamma;
use crate::error::{Error, Result};
use crate::sum::compensated_sum;

// beyond this many unit shifts the polynomial is evaluated directly
const MAX_SHIFT: f64 = 1e4;

/// ζ(−k, a) = −B_{k+1}(a)/(k+1).
///
/// The polynomial is evaluated with Re(a) moved into (0, 1] by
/// ζ(−k, a) = ζ(−k, a+1) + a^k; far from there its coefficients cancel badly.
pub fn hurwitz_zeta_neg_int(k: usize, a: Complex64) -> Result<Complex64> {
    if k >= MAX_DEGREE {
        return Err(Error::DegreeTooLarge(k));
    }
    let base =
        |b: Complex64| -> Result<Complex64> { Ok(-bernoulli_poly(k + 1, b)? / (k as f64 + 1.0)) };
    let power = |x: Complex64| x.powu(k as u32);
    if a.re > 1.0 && a.re <= MAX_SHIFT {
        let n = a.re.ceil() as usize - 1;
        let b = a - n as f64;
        let tail: Complex64 = compensated_sum((0..n).map(|j| power(b + j as f64)));
        Ok(base(b)? - tail)
    } else if a.re <= 0.0 && a.re >= -MAX_SHIFT {
        let n = (1.0 - a.re).floor() as usize;
        let head: Complex64 = compensated_sum((0..n).map(|j| power(a + j as f64)));
        Ok(base(a + n as f64)? + head)
    } else {
        base(a)
    }
}

/// ∂ζ(s, a)/∂s at s = 0, i.e. ln Γ(a) − ½ ln 2π.
pub fn hurwitz_zeta_sderiv0(a: Complex64) -> Result<Complex64> {
    Ok(log_gamma(a)? - 0.5 * (2.0 * PI).ln())
}
