//! Special-function kernels used by the closed forms.

pub mod bernoulli;
pub mod gamma;
pub mod lerch;
pub mod zeta;

pub use bernoulli::{apostol_bernoulli, bernoulli_poly, PolyCoeffs};
pub use gamma::{digamma, gamma, log_gamma, log_gamma_principal};
pub use lerch::{lerch_phi, LerchArgs, LerchOrder};
pub use zeta::{hurwitz_zeta_neg_int, hurwitz_zeta_sderiv0};
