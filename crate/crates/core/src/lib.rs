//! Exact operator algebra for three exactly solvable spin-1/2 models.
//!
//! Everything in this crate is exact: scalars are Gaussian rationals, model
//! parameters are central Laurent indeterminates, and every identity check
//! reduces to an empty term map rather than a small floating-point residual.
//! The crate is `no_std` (with `alloc`); numerical cross-checks, special
//! functions and the command line front end live in the companion `focksym`
//! crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod dirac;
pub mod models;
pub mod opalg;
pub mod scalar;
pub mod susy;
pub mod symcheck;

pub use scalar::{Rational, Scalar};
