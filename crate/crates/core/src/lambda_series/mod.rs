//! Power series in a formal parameter `λ` over `k<A>`, the bullet calculus
//! `f_•`, `exp_•`, `log_•`, and a checker for the generating-function
//! identities relating them.

mod identities;
mod series;

pub use identities::{
    check_identity, compose_bullet, Identity, IdentityInputs, IdentityKind, IdentityReport, Mismatch, PartReport,
    IDENTITY_NAMES,
};
pub use series::{
    apply_series, exp_bullet, f_bullet, geometric, log_bullet, log_diamond_coefficient, LambdaLinComb, LambdaSeries,
};
