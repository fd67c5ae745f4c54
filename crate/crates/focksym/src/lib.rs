//! Numerical companion to `focksym-core`: self-contained special functions,
//! analytic bound states, an independent finite-difference radial eigensolver,
//! the relativistic layer, and report/configuration plumbing for the CLI.

pub mod config;
pub mod dirac;
pub mod numoracle;
pub mod quad;
pub mod report;
pub mod specfun;
pub mod susy;
