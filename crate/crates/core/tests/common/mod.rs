#![allow(dead_code)]

pub mod identities;

use num_complex::Complex64;
use twofloat::TwoFloat;

pub fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// cos(uπ/6) for integer u, with the irrational entry carried in double-double.
fn cos_sixth(u: i64) -> TwoFloat {
    let half_root3 = TwoFloat::from(3.0).sqrt() / 2.0;
    let one = TwoFloat::from(1.0);
    let half = TwoFloat::from(0.5);
    let zero = TwoFloat::from(0.0);
    let table = [
        one,
        half_root3,
        half,
        zero,
        -half,
        -half_root3,
        -one,
        -half_root3,
        -half,
        zero,
        half,
        half_root3,
    ];
    table[u.rem_euclid(12) as usize]
}

/// Σ r^n e^{iπnp/q} (n + a)^k in double-double, for q dividing 6.
///
/// The terms grow like (k/(1−r))^k while the sum stays O(1), so plain f64
/// loses about that many digits. Terms are binned by phase (each bin is a
/// sum of positive reals) and the bins are combined at the end.
fn damped_sum(p: i64, q: i64, k: u32, a: f64, r: f64) -> Complex64 {
    assert!(6 % q == 0, "phase must be a multiple of π/6");
    let period = 2 * q;
    let mut bins = vec![TwoFloat::from(0.0); period as usize];
    let mut radial = TwoFloat::from(1.0);
    let mut n = 0i64;
    loop {
        let base = TwoFloat::new_add(n as f64, a);
        let mut term = radial;
        for _ in 0..k {
            term *= base;
        }
        bins[(n * p).rem_euclid(period) as usize] += term;
        n += 1;
        radial *= r;
        if term.hi() < 1e-34 && n as f64 > k as f64 / (1.0 - r) {
            break;
        }
    }
    let mut re = TwoFloat::from(0.0);
    let mut im = TwoFloat::from(0.0);
    for (turn, bin) in bins.iter().enumerate() {
        let u = turn as i64 * 6 / q;
        re += cos_sixth(u) * *bin;
        im += cos_sixth(u - 3) * *bin;
    }
    Complex64::new(re.hi(), im.hi())
}

/// lim_{r→1⁻} Σ (rz)^n (n + a)^k for z = e^{iπp/q}, by Richardson
/// extrapolation over r = 1 − 2^{−j}.
pub fn abel_sum(p: i64, q: i64, k: u32, a: f64) -> Complex64 {
    const LEVELS: usize = 8;
    let mut table: Vec<Complex64> = (1..=LEVELS)
        .map(|j| damped_sum(p, q, k, a, 1.0 - 0.5f64.powi(j as i32)))
        .collect();
    // h halves at each level; eliminate h, h², ... in turn
    for order in 1..LEVELS {
        let factor = 2f64.powi(order as i32);
        for i in (order..LEVELS).rev() {
            table[i] = (table[i] * factor - table[i - 1]) / (factor - 1.0);
        }
    }
    table[LEVELS - 1]
}

/// Σ z^n (n + a)^k on |z| = 1, z ≠ 1, through Euler's transform
/// Σ z^n f(n) = Σ_m z^m Δ^m f(0) / (1 − z)^{m+1}, which is regular (so it
/// agrees with the Abel limit) and terminates at m = k for polynomial f.
pub fn euler_sum(z: Complex64, k: u32, a: f64) -> Complex64 {
    let mut diffs: Vec<f64> = (0..=k).map(|n| (n as f64 + a).powi(k as i32)).collect();
    let q = 1.0 / (1.0 - z);
    let mut total = Complex64::new(0.0, 0.0);
    let mut weight = q;
    for _ in 0..=k {
        total += weight * diffs[0];
        for i in 0..diffs.len() - 1 {
            diffs[i] = diffs[i + 1] - diffs[i];
        }
        diffs.pop();
        weight *= z * q;
    }
    total
}
