//! Self-contained special functions: modified Bessel `K0`/`K1`, generalized
//! Laguerre polynomials, spherical harmonics and spherical spinors. No
//! external special-function dependency; the accuracy contracts are enforced
//! by quadrature oracles in the test suite.

mod bessel;
mod harmonics;
mod laguerre;
mod spinor;

pub use bessel::{bessel_k, KValue};
pub use harmonics::spherical_harmonic;
pub use laguerre::{laguerre, laguerre_exact};
pub use spinor::{spherical_spinor, SpinorValue};

use focksym_core::Rational;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SpecfunError {
    #[error("bessel_k requires z > 0, got {z}")]
    NonPositiveArgument { z: f64 },
    #[error("bessel_k order must be 0 or 1, got {order}")]
    InvalidOrder { order: u8 },
    #[error("spherical harmonic requires |m| <= l, got l={l}, m={m}")]
    InvalidHarmonic { l: u32, m: i32 },
    #[error("invalid spinor labels j={j}, l={l}, kappa={kappa}")]
    InvalidSpinorLabels {
        j: Rational,
        l: Rational,
        kappa: Rational,
    },
}
