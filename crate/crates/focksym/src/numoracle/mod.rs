//! Independent numerical verification: finite-difference discretization of
//! the 2x2 radial problems, a banded symmetric bound-state eigensolver,
//! Rayleigh quotients and pointwise 3D PDE residuals.

mod discretize;
mod eigen;
mod grid;
mod residual3d;

pub use discretize::{discretize, radial_matrix_at, DiscreteOperator};
pub use eigen::eigensolve;
pub use grid::{GridFunction, RadialGrid, StateLabel};
pub use residual3d::{residual_3d, sample_points, Residual3d};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum NumError {
    #[error("invalid radial grid: need 0 < r_min < r_max and at least 16 nodes (got r_min={r_min}, r_max={r_max}, m={m})")]
    InvalidGrid { r_min: f64, r_max: f64, m: usize },
    #[error("grid size mismatch between operands")]
    GridMismatch,
    #[error("operator has a d/dr term of order {order}; only orders 0 and 2 are discretizable")]
    UnsupportedDerivativeOrder { order: u32 },
    #[error("first-derivative terms with matrix coefficients break symmetry and are rejected")]
    FirstDerivative,
    #[error("operator coefficients must be numeric (no free alpha/m parameters)")]
    SymbolicParameters,
    #[error("operator is not a real symmetric matrix problem (sigma2 or imaginary coefficients present)")]
    NotRealSymmetric,
    #[error("second-derivative terms must be proportional to the identity")]
    MatrixKinetic,
    #[error("window [{lo}, {hi}] holds only {found} states, requested {requested}")]
    FewerThanRequested {
        lo: f64,
        hi: f64,
        found: usize,
        requested: usize,
    },
    #[error("inverse iteration did not reach the residual target after {iterations} iterations (last residual {residual:e})")]
    NoConvergence { iterations: usize, residual: f64 },
    #[error("zero function has no Rayleigh quotient")]
    ZeroFunction,
    #[error("sample point at radius {r} is too close to the origin (need |x| >= 0.5)")]
    PointTooCloseToOrigin { r: f64 },
    #[error("state amplitude {amplitude:e} at a sample point is below the floor {floor:e}")]
    AmplitudeBelowFloor { amplitude: f64, floor: f64 },
    #[error("{0}")]
    State(String),
}
