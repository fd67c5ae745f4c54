//! Exact noncommutative operator algebra over two coefficient rings.
//!
//! The three-dimensional ring holds polynomials in `x1, x2, x3` times Laurent
//! powers of `r` and of the central parameters `m, alpha, q, E`, modulo the
//! relation `r^2 = x1^2 + x2^2 + x3^2`. Operators append a Pauli basis element
//! and a normally ordered momentum monomial. The radial ring is single-variable
//! Laurent in `r` with `d/dr` powers and needs no ring relation.

mod coeff;
mod expr;
mod parse;
mod pauli;
mod print;
mod radial;

pub use coeff::{Coefficient3D, Monomial3D, Param3D};
pub use expr::OperatorExpr;
pub use parse::{parse_radial, parse_three_d, parse_three_d_with, ParseError, SymbolTable};
pub use pauli::Pauli;
pub use radial::{RadialOp, RadialParam};
