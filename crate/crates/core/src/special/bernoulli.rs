//! Bernoulli and Apostol–Bernoulli polynomials.

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};

pub const MAX_DEGREE: usize = 64;
const BASE_TOL: f64 = 1e-12;

/// Polynomial with complex coefficients in ascending powers.
#[derive(Debug, Clone, PartialEq)]
pub struct PolyCoeffs {
    coefficients: Vec<Complex64>,
}

impl PolyCoeffs {
    pub fn new(coefficients: Vec<Complex64>) -> Self {
        assert!(
            !coefficients.is_empty(),
            "polynomial needs at least one coefficient"
        );
        Self { coefficients }
    }

    pub fn degree(&self) -> usize {
        self.coefficients.len() - 1
    }

    pub fn coefficients(&self) -> &[Complex64] {
        &self.coefficients
    }

    pub fn eval(&self, x: Complex64) -> Complex64 {
        self.coefficients
            .iter()
            .rev()
            .fold(Complex64::new(0.0, 0.0), |acc, &c| acc * x + c)
    }
}

fn binomial_table() -> &'static Vec<Vec<f64>> {
    static TABLE: OnceLock<Vec<Vec<f64>>> = OnceLock::new();
    TABLE.get_or_init(|| {
        let mut rows: Vec<Vec<f64>> = Vec::with_capacity(MAX_DEGREE + 2);
        for n in 0..=MAX_DEGREE + 1 {
            let mut row = vec![1.0; n + 1];
            for k in 1..n {
                row[k] = rows[n - 1][k - 1] + rows[n - 1][k];
            }
            rows.push(row);
        }
        rows
    })
}

fn binomial(n: usize, k: usize) -> f64 {
    binomial_table()[n][k]
}

/// Bernoulli numbers B_0..=B_64 (B_1 = −1/2), computed exactly then rounded.
pub fn bernoulli_numbers() -> &'static [f64] {
    static NUMBERS: OnceLock<Vec<f64>> = OnceLock::new();
    NUMBERS.get_or_init(|| {
        let mut exact: Vec<BigRational> = Vec::with_capacity(MAX_DEGREE + 1);
        exact.push(BigRational::from_integer(BigInt::from(1)));
        for n in 1..=MAX_DEGREE {
            // sum_{k=0}^{n} C(n+1, k) B_k = 0
            let mut acc = BigRational::zero();
            let mut binom = BigInt::from(1);
            for (k, b) in exact.iter().enumerate() {
                acc += b * BigRational::from_integer(binom.clone());
                binom = binom * BigInt::from(n + 1 - k) / BigInt::from(k + 1);
            }
            exact.push(-acc / BigRational::from_integer(BigInt::from(n + 1)));
        }
        exact
            .iter()
            .map(|b| b.to_f64().expect("Bernoulli number fits in f64"))
            .collect()
    })
}

pub fn bernoulli_poly_coeffs(n: usize) -> Result<PolyCoeffs> {
    if n > MAX_DEGREE {
        return Err(Error::DegreeTooLarge(n));
    }
    let b = bernoulli_numbers();
    // B_n(x) = sum_j C(n, j) B_{n-j} x^j
    let coefficients = (0..=n)
        .map(|j| Complex64::new(binomial(n, j) * b[n - j], 0.0))
        .collect();
    Ok(PolyCoeffs::new(coefficients))
}

/// Classical Bernoulli polynomial B_n(x).
pub fn bernoulli_poly(n: usize, x: Complex64) -> Result<Complex64> {
    Ok(bernoulli_poly_coeffs(n)?.eval(x))
}

/// Apostol–Bernoulli numbers B_0(λ)..=B_n(λ) from
/// t / (λ e^t − 1) = Σ B_k(λ) t^k / k!.
fn apostol_numbers(n: usize, lambda: Complex64) -> Vec<Complex64> {
    let denom = lambda - 1.0;
    let mut nums = Vec::with_capacity(n + 1);
    nums.push(Complex64::new(0.0, 0.0));
    for j in 1..=n {
        // (λ − 1) B_j + λ Σ_{r=1}^{j} C(j, r) B_{j−r} = [j = 1]
        let mut acc = Complex64::new(0.0, 0.0);
        for r in 1..=j {
            acc += nums[j - r] * binomial(j, r);
        }
        let rhs = if j == 1 {
            Complex64::new(1.0, 0.0)
        } else {
            Complex64::new(0.0, 0.0)
        };
        nums.push((rhs - lambda * acc) / denom);
    }
    nums
}

pub fn apostol_bernoulli_coeffs(n: usize, lambda: Complex64) -> Result<PolyCoeffs> {
    if n > MAX_DEGREE {
        return Err(Error::DegreeTooLarge(n));
    }
    if (lambda - 1.0).norm() < BASE_TOL {
        return Err(Error::DegenerateBase);
    }
    let nums = apostol_numbers(n, lambda);
    let coefficients = (0..=n).map(|j| nums[n - j] * binomial(n, j)).collect();
    Ok(PolyCoeffs::new(coefficients))
}

/// Apostol–Bernoulli polynomial B_n(x; λ), λ ≠ 1.
pub fn apostol_bernoulli(n: usize, x: Complex64, lambda: Complex64) -> Result<Complex64> {
    Ok(apostol_bernoulli_coeffs(n, lambda)?.eval(x))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn bernoulli_numbers_low_order() {
        let b = bernoulli_numbers();
        assert_eq!(b[0], 1.0);
        assert_eq!(b[1], -0.5);
        assert!((b[2] - 1.0 / 6.0).abs() < 1e-17);
        assert_eq!(b[3], 0.0);
        assert!((b[4] + 1.0 / 30.0).abs() < 1e-17);
        assert!((b[12] + 691.0 / 2730.0).abs() < 1e-15);
        // B_64 ≈ −2.0938e38
        assert!((b[64] / -2.093_800_591_134_638e38 - 1.0).abs() < 1e-12);
    }

    #[test]
    fn bernoulli_poly_small_degree() {
        let x = c(0.3, -1.2);
        assert_eq!(bernoulli_poly(0, x).unwrap(), c(1.0, 0.0));
        assert!((bernoulli_poly(1, x).unwrap() - (x - 0.5)).norm() < 1e-15);
        assert!((bernoulli_poly(2, c(0.0, 0.0)).unwrap().re - 1.0 / 6.0).abs() < 1e-16);
        // B_2(x) = x² − x + 1/6
        let b2 = x * x - x + 1.0 / 6.0;
        assert!((bernoulli_poly(2, x).unwrap() - b2).norm() < 1e-15);
        assert!(matches!(
            bernoulli_poly(65, x),
            Err(Error::DegreeTooLarge(65))
        ));
    }

    #[test]
    fn bernoulli_poly_difference_identity() {
        // B_n(x + 1) − B_n(x) = n x^{n−1}
        let x = c(0.7, 0.4);
        for n in 1..12 {
            let d = bernoulli_poly(n, x + 1.0).unwrap() - bernoulli_poly(n, x).unwrap();
            let want = x.powu(n as u32 - 1) * n as f64;
            assert!((d - want).norm() < 1e-12 * (1.0 + want.norm()), "n={n}");
        }
    }

    #[test]
    fn apostol_low_order() {
        let x = c(0.2, 0.1);
        let lam = c(-1.0, 0.0);
        assert_eq!(apostol_bernoulli(0, x, lam).unwrap(), c(0.0, 0.0));
        assert!((apostol_bernoulli(1, x, lam).unwrap() - c(-0.5, 0.0)).norm() < 1e-16);
        // Φ(−1, −1, 1) = 1/4 = −B_2(1; −1)/2
        let b2 = apostol_bernoulli(2, c(1.0, 0.0), lam).unwrap();
        assert!((b2 + 0.5).norm() < 1e-15);
        assert!(matches!(
            apostol_bernoulli(2, x, c(1.0, 1e-13)),
            Err(Error::DegenerateBase)
        ));
    }

    #[test]
    fn apostol_difference_identity() {
        // λ B_n(x + 1; λ) − B_n(x; λ) = n x^{n−1}
        let lam = c(0.3, 0.8);
        let x = c(0.45, -0.2);
        for n in 1..10 {
            let hi = apostol_bernoulli(n, x + 1.0, lam).unwrap() * lam;
            let lo = apostol_bernoulli(n, x, lam).unwrap();
            let want = x.powu(n as u32 - 1) * n as f64;
            // the two terms are far larger than their difference
            let scale = hi.norm() + lo.norm() + 1.0;
            assert!((hi - lo - want).norm() < 1e-14 * scale, "n={n}");
        }
    }

    #[test]
    fn poly_coeffs_layout() {
        let p = bernoulli_poly_coeffs(3).unwrap();
        assert_eq!(p.degree(), 3);
        assert_eq!(p.coefficients().len(), 4);
    }
}
