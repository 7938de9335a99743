//! Numerical explorations: `s(n)` modulo small primes, the growth of `s(n)`,
//! and a differential equation satisfied by a specialization of `U`.
//!
//! Conjectural statements are measured and reported here; nothing in this
//! module turns them into assertions.

pub mod asympt;
pub mod modp;
pub mod ode;

pub use asympt::{
    alpha_error_report, asymptotic_report, AlphaErrorReport, AlphaErrorRow, AsymptoticReport, AsymptoticRow,
    PeakData, DEFAULT_PRECISION,
};
pub use modp::{
    find_period, find_period_mod_p, modular_alpha_check, reference_alphas, s_mod_p, CoefficientCheck,
    FoldedGamma, ModularAlphaReport, Period,
};
pub use ode::{ode_check_power_spec, OdeMismatch, OdeReport};
