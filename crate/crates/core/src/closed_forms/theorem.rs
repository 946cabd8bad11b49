use std::f64::consts::PI;

use num_complex::Complex64;

use super::{
    checked_pair, cis_pi, cis_pi_re, cos_denominator, validate_exponent, EvaluationResult,
    IntegralSpec, LogOrder, Method, MAX_LOG_POWER,
};
use crate::error::{Error, Result};
use crate::special::bernoulli::MAX_DEGREE;
use crate::special::{hurwitz_zeta_neg_int, lerch_phi, LerchArgs, LerchOrder};
use crate::sum::ComplexSum;

/// Below this distance from an integer, m is handled by the expansion of
/// Φ around z = 1 instead of the Apostol–Bernoulli closed form.
const NEAR_INTEGER: f64 = 0.1;

/// One summand K·e^{iπλm}·Φ(e^{2πim}, −k, shift).
#[derive(Debug, Clone, Copy)]
struct LerchTerm {
    coef: Complex64,
    rate: f64,
    shift: Complex64,
}

fn lerch_terms(spec: &IntegralSpec, k: u32) -> Vec<LerchTerm> {
    let i = Complex64::i();
    let log_a = spec.a.ln();
    let scale = (2.0 * i).powi(k as i32 - 1) * PI.powi(k as i32 + 1);
    let mut out = Vec::with_capacity(4 * (spec.alpha + spec.beta) as usize);
    for (outer, inner) in [(spec.beta, spec.alpha), (spec.alpha, spec.beta)] {
        let (af, bf) = (outer as f64, inner as f64);
        for j in 0..outer {
            let jf = j as f64;
            let c = scale / (af * cos_denominator(outer, inner, j));
            let g = (1.0 + 2.0 * jf - af) / af;
            // exp(−iπ(m(2+4j−3A) + B(−1−2j+A))/A)
            let base_rate = -(2.0 + 4.0 * jf - 3.0 * af) / af;
            let base = c * cis_pi_re(-bf * (af - 1.0 - 2.0 * jf) / af);
            // e^{iπmg} + e^{iπ(m−B)g}
            let pair = [Complex64::new(1.0, 0.0), cis_pi_re(-bf * g)];
            let shift_lo = Complex64::new((1.0 + 2.0 * jf) / (2.0 * af), -log_a / (2.0 * PI));
            let shift_hi = Complex64::new(
                (2.0 * af - 1.0 - 2.0 * jf) / (2.0 * af),
                -log_a / (2.0 * PI),
            );
            for p in pair {
                let coef = base * p;
                // e^{iπ(2m−B)g} Φ(·, shift_lo) + Φ(·, shift_hi)
                out.push(LerchTerm {
                    coef: coef * cis_pi_re(-bf * g),
                    rate: base_rate + g + 2.0 * g,
                    shift: shift_lo,
                });
                out.push(LerchTerm {
                    coef,
                    rate: base_rate + g,
                    shift: shift_hi,
                });
            }
        }
    }
    out
}

fn factorial(n: u32) -> f64 {
    (1..=n).map(f64::from).product()
}

/// Σ_{q≥p} x^{q−p}/q!, the remainder of e^x after p terms divided by x^p.
fn exp_remainder(p: u32, x: Complex64) -> Complex64 {
    if x.norm() > 1.0 {
        let mut head = Complex64::new(0.0, 0.0);
        let mut term = Complex64::new(1.0, 0.0);
        for q in 0..p {
            head += term;
            term *= x / (q as f64 + 1.0);
        }
        return (x.exp() - head) / x.powu(p);
    }
    let mut sum = Complex64::new(0.0, 0.0);
    let mut term = Complex64::new(1.0 / factorial(p), 0.0);
    for q in p.. {
        sum += term;
        term *= x / (q as f64 + 1.0);
        if term.norm() <= f64::EPSILON * 0.1 * sum.norm() {
            break;
        }
    }
    sum
}

/// Σ K e^{iπλm} Φ(z, −k, shift) for m within `NEAR_INTEGER` of the integer n,
/// using Φ(z, −k, a) = z^{−a}[k!(−log z)^{−k−1} + Σ_q ζ(−k−q, a)(log z)^q/q!]
/// with log z = 2πiδ, δ = m − n. The pole parts cancel across the sum, so
/// only their e^{rδ} remainders beyond order k survive.
fn near_integer_sum(terms: &[LerchTerm], m: Complex64, n: f64, k: u32) -> Option<Complex64> {
    let i = Complex64::i();
    let delta = m - n;
    let log_z = 2.0 * PI * i * delta;
    let mut pole = ComplexSum::new();
    let mut regular = ComplexSum::new();
    for t in terms {
        let rate = i * PI * t.rate - 2.0 * PI * i * t.shift;
        let at_n = t.coef * cis_pi_re(t.rate * n);
        pole.add(at_n * rate.powu(k + 1) * exp_remainder(k + 1, rate * delta));

        let weight = at_n * (rate * delta).exp();
        let mut series = Complex64::new(0.0, 0.0);
        let mut power = Complex64::new(1.0, 0.0);
        let mut converged = false;
        for q in 0..(MAX_DEGREE as u32 - k) {
            let z = hurwitz_zeta_neg_int((k + q) as usize, t.shift).ok()?;
            let term = z * power;
            series += term;
            if q > 0 && term.norm() <= f64::EPSILON * 0.01 * series.norm() {
                converged = true;
                break;
            }
            if power.norm() == 0.0 {
                converged = true;
                break;
            }
            power *= log_z / (q as f64 + 1.0);
        }
        if !converged {
            return None;
        }
        regular.add(weight * series);
    }
    let pole_scale = factorial(k) / (-2.0 * PI * i).powu(k + 1);
    Some(regular.value() + pole.value() * pole_scale)
}

/// Closed form of ∫₀^∞ x^{m−1} logᵏ(ax) / ((1 + x^α)(1 + x^β)) dx as two
/// finite sums of Lerch transcendents at order −k.
///
/// At integer m the base e^{2πim} equals 1 and the individual Lerch values
/// are singular; the sum is then taken as its (finite) limit in m.
pub fn theorem_rhs(spec: &IntegralSpec) -> Result<EvaluationResult> {
    spec.validate()?;
    let k = match spec.k {
        LogOrder::Power(k) => k,
        other => {
            return Err(Error::Domain(format!(
                "theorem_rhs needs an integer log power, got {other}"
            )))
        }
    };
    debug_assert!(k <= MAX_LOG_POWER);
    let min_denominator = checked_pair(spec.alpha, spec.beta)?;
    let terms = lerch_terms(spec, k);
    let m = spec.m;
    let n = m.re.round();

    let near = if (m - n).norm() < NEAR_INTEGER {
        near_integer_sum(&terms, m, n, k)
    } else {
        None
    };
    let value = match near {
        Some(v) => v,
        None => {
            let z = cis_pi(2.0 * m);
            let mut acc = ComplexSum::new();
            for t in &terms {
                let phi = lerch_phi(&LerchArgs::new(z, LerchOrder::NegInt(k), t.shift))?;
                acc.add(t.coef * cis_pi(t.rate * m) * phi);
            }
            acc.value()
        }
    };
    Ok(EvaluationResult {
        value,
        method: Method::Theorem,
        min_denominator,
        terms: terms.len(),
    })
}

/// The classical two cosine sums for ∫₀^∞ x^{p−1}/((1 + x^a)(1 + x^b)) dx.
pub fn eq1_rhs(p: Complex64, a: u32, b: u32) -> Result<Complex64> {
    validate_exponent(p, a, b)?;
    checked_pair(a, b)?;
    let n = p.re.round();
    if (p - n).norm() < 1e-12 {
        return Err(Error::DegenerateParameters(format!(
            "integer p = {p} puts sin(pπ) at zero"
        )));
    }
    let sin = (p * PI).sin();
    let mut total = ComplexSum::new();
    for (outer, inner) in [(a, b), (b, a)] {
        let (af, bf) = (outer as f64, inner as f64);
        let prefactor = PI / (2.0 * af * sin);
        for j in 0..outer {
            let c = (2.0 * j as f64 - af + 1.0) * PI / af;
            let num = (p * c).cos() + ((p - bf) * c).cos();
            total.add(prefactor * num / cos_denominator(outer, inner, j));
        }
    }
    Ok(total.value())
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::FRAC_PI_4;

    fn spec(a: f64, m: f64, k: u32, alpha: u32, beta: u32) -> IntegralSpec {
        IntegralSpec::new(a, Complex64::new(m, 0.0), LogOrder::Power(k), alpha, beta)
    }

    #[test]
    fn partial_fraction_value_at_m_one() {
        // 1/((1+x²)(1+x⁴)) = 1/(2(1+x²)) − (x²−1)/(2(1+x⁴)) integrates to π/4
        let r = theorem_rhs(&spec(1.0, 1.0, 0, 2, 4)).unwrap();
        assert!((r.value - Complex64::new(FRAC_PI_4, 0.0)).norm() < 1e-13);
        assert_eq!(r.method, Method::Theorem);
        assert_eq!(r.terms, 4 * 6);
        assert!(r.min_denominator > 0.29);
        let swapped = theorem_rhs(&spec(1.0, 1.0, 0, 4, 2)).unwrap();
        assert!((swapped.value - r.value).norm() < 1e-13);
    }

    #[test]
    fn paths_agree_at_the_switch_over() {
        // just inside and just outside the near-integer window
        for k in 0..4 {
            let inside = theorem_rhs(&spec(1.7, 1.1 - 1e-9, k, 4, 6)).unwrap().value;
            let outside = theorem_rhs(&spec(1.7, 1.1 + 1e-9, k, 4, 6)).unwrap().value;
            assert!(
                (inside - outside).norm() < 1e-8 * (1.0 + inside.norm()),
                "k={k}: {inside} vs {outside}"
            );
        }
    }

    #[test]
    fn exp_remainder_small_and_large() {
        let x = Complex64::new(0.3, -0.2);
        let direct = (x.exp() - 1.0 - x) / (x * x);
        assert!((exp_remainder(2, x) - direct).norm() < 1e-14);
        let x = Complex64::new(2.5, 1.0);
        let direct = (x.exp() - 1.0) / x;
        assert!((exp_remainder(1, x) - direct).norm() < 1e-14);
        assert!((exp_remainder(3, Complex64::new(0.0, 0.0)).re - 1.0 / 6.0).abs() < 1e-16);
    }

    #[test]
    fn eq1_rejects_integer_p_and_degenerate_pairs() {
        assert!(matches!(
            eq1_rhs(Complex64::new(1.0, 0.0), 2, 4),
            Err(Error::DegenerateParameters(_))
        ));
        assert!(matches!(
            eq1_rhs(Complex64::new(0.5, 0.0), 2, 6),
            Err(Error::DegenerateParameters(_))
        ));
        let a = eq1_rhs(Complex64::new(0.5, 0.0), 2, 4).unwrap();
        let b = eq1_rhs(Complex64::new(0.5, 0.0), 4, 2).unwrap();
        assert!((a - b).norm() < 1e-14);
    }

    #[test]
    fn degenerate_theorem_rejected() {
        assert!(matches!(
            theorem_rhs(&spec(1.0, 0.5, 1, 2, 6)),
            Err(Error::DegenerateParameters(_))
        ));
    }
}
