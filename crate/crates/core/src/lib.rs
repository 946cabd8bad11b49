//! Closed-form evaluation of ∫₀^∞ x^{m−1} logᵏ(ax) / ((1+x^α)(1+x^β)) dx and
//! related identities, with a quadrature oracle to check them.

// `!(x > 0.0)` style guards are meant to reject NaN as well
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod closed_forms;
pub mod error;
pub mod quadrature;
pub mod special;
pub mod sum;
pub mod verify;

pub use closed_forms::{
    check_degenerate, eq1_rhs, example_rhs, theorem_rhs, EvaluationResult, Example, ExampleId,
    IntegralSpec, LogOrder, Method,
};
pub use error::{Error, Result};
pub use quadrature::{build_lhs, example_lhs, integrate_halfline, Integrand, QuadratureResult};
pub use verify::{run_sweep, verify_example, verify_one, SweepConfig, VerificationRecord};
