//! Exact pieces of the relativistic layer: the symbolic reduction of the
//! coupled two-spinor system to the rescaled eigenvalue problem, and the
//! rational-arithmetic energy identities. Floating-point evaluation lives in
//! the companion crate.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};

use num_traits::One;

use crate::models::ModelId;
use crate::opalg::{OperatorExpr, Param3D};
use crate::scalar::{rat, Rational, Scalar};
use crate::symcheck::{CheckReport, IdentityId};

/// `i sigma.p`.
fn i_sigma_p() -> OperatorExpr {
    let mut acc = OperatorExpr::zero();
    for a in 1..=3 {
        acc = &acc + &(&OperatorExpr::sigma(a) * &OperatorExpr::p(a));
    }
    acc.scale(&Scalar::i())
}

/// `sigma.x`.
fn sigma_x() -> OperatorExpr {
    let mut acc = OperatorExpr::zero();
    for a in 1..=3 {
        acc = &acc + &(&OperatorExpr::sigma(a) * &OperatorExpr::x(a));
    }
    acc
}

fn p_squared() -> OperatorExpr {
    let mut acc = OperatorExpr::zero();
    for a in 1..=3 {
        acc = &acc + &(&OperatorExpr::p(a) * &OperatorExpr::p(a));
    }
    acc
}

/// Residual operator of the two-spinor reduction, optionally with the sign
/// of the dipole coupling flipped (used by the mutation test).
pub fn reduction_residual(flip_coupling_sign: bool) -> OperatorExpr {
    let m = OperatorExpr::param(Param3D::Mass, 1);
    let e = OperatorExpr::param(Param3D::Energy, 1);
    let e_inv = OperatorExpr::param(Param3D::Energy, -1);
    let alpha = OperatorExpr::param(Param3D::Alpha, 1);
    let coupling = if flip_coupling_sign { -2 } else { 2 };

    // Substitute xi = E^-1 (m - i sigma.p) psi from the first equation into
    // the second: the operator acting on psi is
    //   S = (E - 2 alpha sigma.x r^-2) - E^-1 (m + i sigma.p)(m - i sigma.p).
    let pauli_term = (&(&alpha * &sigma_x()) * &OperatorExpr::r_pow(-2))
        .scale(&Scalar::from_int(coupling));
    let plus = &m + &i_sigma_p();
    let minus = &m - &i_sigma_p();
    let s = &(&e - &pauli_term) - &(&e_inv * &(&plus * &minus));

    // Claimed form: S = -E^-1 [ p^2 + 2 alpha E sigma.x r^-2 - (E^2 - m^2) ],
    // the rescaled eigenvalue problem with eps = (E^2 - m^2)/(4 alpha^2 E^2).
    let bracket = &(&p_squared()
        + &(&(&(&alpha * &e) * &sigma_x()) * &OperatorExpr::r_pow(-2)).scale(&Scalar::from_int(2)))
        - &(&(&e * &e) - &(&m * &m));
    let t = -&(&e_inv * &bracket);

    &s - &t
}

/// Symbolically verify that eliminating the lower spinor reproduces the
/// rescaled eigenvalue problem, with `E`, `m`, `alpha` free Laurent
/// parameters.
pub fn verify_reduction() -> CheckReport {
    let residual = reduction_residual(false).reduced_residual();
    let passed = residual.is_empty();
    let mut params = BTreeMap::new();
    params.insert(String::from("parameters"), String::from("m,alpha,E symbolic"));
    CheckReport {
        identity: IdentityId::DiracReduce,
        model: ModelId::Dipole,
        params,
        passed,
        residual_terms: residual.term_count(),
        witness: if passed {
            None
        } else {
            Some(residual.to_string())
        },
    }
}

/// `E^2 = m^2 / (1 + alpha^2 / N^2)`, exact.
pub fn rel_energy_squared(m: &Rational, alpha: &Rational, big_n: &Rational) -> Rational {
    let m2 = m * m;
    let ratio = (alpha * alpha) / (big_n * big_n);
    m2 / (Rational::one() + ratio)
}

/// The rescaled eigenvalue `eps = (E^2 - m^2) / (4 alpha^2 E^2)` evaluated on
/// the exact `E^2`, which collapses to `-1/(4 N^2)` identically.
pub fn epsilon_from_rel_energy(m: &Rational, alpha: &Rational, big_n: &Rational) -> Rational {
    let e2 = rel_energy_squared(m, alpha, big_n);
    (&e2 - &(m * m)) / (rat(4) * alpha * alpha * &e2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::ratio;

    #[test]
    fn sigma_p_contraction() {
        // (i sigma.p)(-i sigma.p) = p^2
        let prod = &i_sigma_p() * &(-&i_sigma_p());
        assert_eq!(prod, p_squared());
    }

    #[test]
    fn reduction_is_exact() {
        let report = verify_reduction();
        assert!(report.passed);
        assert_eq!(report.residual_terms, 0);
        assert!(report.witness.is_none());
    }

    #[test]
    fn flipped_coupling_leaves_witness() {
        let residual = reduction_residual(true).reduced_residual();
        assert!(!residual.is_empty());
    }

    #[test]
    fn epsilon_identity_is_exact() {
        for (m, alpha, n) in [
            (rat(1), rat(1), ratio(3, 2)),
            (rat(2), ratio(1, 3), ratio(5, 2)),
            (ratio(7, 5), ratio(9, 4), ratio(9, 2)),
        ] {
            let eps = epsilon_from_rel_energy(&m, &alpha, &n);
            let expected = ratio(-1, 4) / (&n * &n);
            assert_eq!(eps, expected);
        }
    }

    #[test]
    fn rel_energy_squared_values() {
        // m=1, alpha=1, N=3/2: E^2 = 1/(1+4/9) = 9/13
        assert_eq!(
            rel_energy_squared(&rat(1), &rat(1), &ratio(3, 2)),
            ratio(9, 13)
        );
        // m=2, alpha=1, N=5/2: E^2 = 4/(1+4/25) = 100/29
        assert_eq!(
            rel_energy_squared(&rat(2), &rat(1), &ratio(5, 2)),
            ratio(100, 29)
        );
    }
}
