//! Right-hand sides: the two finite Lerch sums for the general family, the
//! cosine-sum reduction at k = 0, and the worked example identities.

mod examples;
mod theorem;

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::sum::ComplexSum;

pub use examples::{example_rhs, Example, ExampleId};
pub use theorem::{eq1_rhs, theorem_rhs};

/// Denominators 1 + cos(·) below this magnitude are rejected.
pub const DEGENERACY_TOL: f64 = 1e-9;
/// Largest integer power of the logarithm accepted by `theorem_rhs`.
pub const MAX_LOG_POWER: u32 = 32;

/// Which logarithmic factor multiplies the rational kernel.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LogOrder {
    /// logᵏ(ax)
    Power(u32),
    /// log(log(ax)), the k-derivative at k = 0 ("dlog")
    LogLog,
    /// 1/log(ax), the k → −1 limit ("kneg1")
    Reciprocal,
}

impl fmt::Display for LogOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LogOrder::Power(k) => write!(f, "{k}"),
            LogOrder::LogLog => f.write_str("dlog"),
            LogOrder::Reciprocal => f.write_str("kneg1"),
        }
    }
}

impl FromStr for LogOrder {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "dlog" => Ok(LogOrder::LogLog),
            "kneg1" => Ok(LogOrder::Reciprocal),
            other => other
                .parse::<u32>()
                .map(LogOrder::Power)
                .map_err(|_| Error::Domain(format!("bad log order '{other}' (INT|dlog|kneg1)"))),
        }
    }
}

impl Serialize for LogOrder {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            LogOrder::Power(k) => s.serialize_u32(*k),
            other => s.serialize_str(&other.to_string()),
        }
    }
}

impl<'de> Deserialize<'de> for LogOrder {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Int(u32),
            Text(String),
        }
        match Raw::deserialize(d)? {
            Raw::Int(k) => Ok(LogOrder::Power(k)),
            Raw::Text(t) => t.parse().map_err(serde::de::Error::custom),
        }
    }
}

/// One member of the family ∫₀^∞ x^{m−1} L(ax) / ((1 + x^α)(1 + x^β)) dx.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct IntegralSpec {
    pub a: f64,
    pub m: Complex64,
    pub k: LogOrder,
    pub alpha: u32,
    pub beta: u32,
}

impl IntegralSpec {
    pub fn new(a: f64, m: Complex64, k: LogOrder, alpha: u32, beta: u32) -> Self {
        Self {
            a,
            m,
            k,
            alpha,
            beta,
        }
    }

    pub fn validate(&self) -> Result<()> {
        validate_pair(self.alpha, self.beta)?;
        if !(self.a > 0.0 && self.a.is_finite()) {
            return Err(Error::Domain(format!(
                "a must be a positive real, got {}",
                self.a
            )));
        }
        validate_exponent(self.m, self.alpha, self.beta)?;
        if let LogOrder::Power(k) = self.k {
            if k > MAX_LOG_POWER {
                return Err(Error::Domain(format!("k = {k} exceeds {MAX_LOG_POWER}")));
            }
        }
        Ok(())
    }
}

pub(crate) fn validate_pair(alpha: u32, beta: u32) -> Result<()> {
    if alpha < 2 || beta < 2 || !alpha.is_multiple_of(2) || !beta.is_multiple_of(2) {
        return Err(Error::Domain(format!(
            "alpha and beta must be even and at least 2, got ({alpha}, {beta})"
        )));
    }
    if alpha == beta {
        return Err(Error::Domain(format!(
            "alpha must differ from beta, got {alpha}"
        )));
    }
    Ok(())
}

/// 0 < Re(m) < α + β, so the integral converges at both ends.
pub(crate) fn validate_exponent(m: Complex64, alpha: u32, beta: u32) -> Result<()> {
    let top = (alpha + beta) as f64;
    if !(m.re > 0.0 && m.re < top && m.im.is_finite()) {
        return Err(Error::Domain(format!(
            "need 0 < Re(m) < {top}, got m = {m}"
        )));
    }
    Ok(())
}

/// Validated, nondegenerate pair; returns the smallest denominator.
pub(crate) fn checked_pair(alpha: u32, beta: u32) -> Result<f64> {
    validate_pair(alpha, beta)?;
    let min = check_degenerate(alpha, beta);
    if min < DEGENERACY_TOL {
        return Err(Error::DegenerateParameters(format!(
            "1 + cos((1+2j)π·α/β) vanishes for (α, β) = ({alpha}, {beta})"
        )));
    }
    Ok(min)
}

/// |1 + cos((1+2j)π·num/den)|, with the angle reduced exactly modulo 2π.
pub(crate) fn cos_denominator(den: u32, num: u32, j: u32) -> f64 {
    let r = ((1 + 2 * j as u64) * num as u64) % (2 * den as u64);
    1.0 + (PI * r as f64 / den as f64).cos()
}

/// Smallest |1 + cos((1+2j)πα/β)| (j < β) and |1 + cos((1+2j)πβ/α)| (j < α).
pub fn check_degenerate(alpha: u32, beta: u32) -> f64 {
    let over_beta = (0..beta).map(|j| cos_denominator(beta, alpha, j).abs());
    let over_alpha = (0..alpha).map(|j| cos_denominator(alpha, beta, j).abs());
    over_beta.chain(over_alpha).fold(f64::INFINITY, f64::min)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Theorem,
    #[serde(untagged)]
    Example(ExampleId),
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Method::Theorem => f.write_str("theorem"),
            Method::Example(id) => write!(f, "{id}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EvaluationResult {
    pub value: Complex64,
    pub method: Method,
    pub min_denominator: f64,
    pub terms: usize,
}

/// e^{iπx}
#[inline]
pub(crate) fn cis_pi(x: Complex64) -> Complex64 {
    (Complex64::i() * PI * x).exp()
}

#[inline]
pub(crate) fn cis_pi_re(x: f64) -> Complex64 {
    let (s, c) = (PI * x).sin_cos();
    Complex64::new(c, s)
}

/// Σ_{j<β} term(β, α, j) + Σ_{j<α} term(α, β, j), compensated.
/// The closure receives (A, B, j) where A is the length of the sum.
pub(crate) fn dual_sum<F>(alpha: u32, beta: u32, mut term: F) -> Result<(Complex64, usize)>
where
    F: FnMut(u32, u32, u32) -> Result<Complex64>,
{
    let mut acc = ComplexSum::new();
    let mut count = 0;
    for (outer, inner) in [(beta, alpha), (alpha, beta)] {
        for j in 0..outer {
            acc.add(term(outer, inner, j)?);
            count += 1;
        }
    }
    Ok((acc.value(), count))
}
