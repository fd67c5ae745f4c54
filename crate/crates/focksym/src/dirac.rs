//! Numeric relativistic layer: discrete energies, the nonrelativistic
//! limit, and pointwise reconstruction of the lower spinor.
//!
//! The symbolic elimination of the lower spinor and the exact-rational
//! energy identities live in `focksym_core::dirac`; this module evaluates
//! the closed forms in floating point and checks the coupled first-order
//! system pointwise on assembled states.

use num_complex::Complex64;
use num_integer::Integer;
use num_traits::ToPrimitive;
use thiserror::Error;

use focksym_core::models::ModelId;
use focksym_core::scalar::{rat, Rational};

use crate::numoracle::NumError;
use crate::susy::{assemble, ground_state, AnalyticState, SusyNumError};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum DiracError {
    #[error("mass must be positive, got {m}")]
    NonPositiveMass { m: f64 },
    #[error("N = {n} is not representable as n + j + 1 with half-integer j >= 1/2")]
    UnrepresentableN { n: Rational },
    #[error("lower-spinor reconstruction needs the analytic ground sector (n = 0), got n = {n}")]
    ExcitedSectorUnsupported { n: u32 },
    #[error("energy is zero; the lower spinor is undefined")]
    ZeroEnergy,
    #[error(transparent)]
    State(#[from] SusyNumError),
    #[error(transparent)]
    Num(#[from] NumError),
}

fn check_big_n(big_n: &Rational) -> Result<(), DiracError> {
    let twice = big_n * rat(2);
    let ok = twice.is_integer()
        && twice.to_integer().is_odd()
        && *big_n >= Rational::new(3.into(), 2.into());
    if ok {
        Ok(())
    } else {
        Err(DiracError::UnrepresentableN { n: big_n.clone() })
    }
}

/// Positive-branch discrete energy `E = m / sqrt(1 + alpha^2 / N^2)`.
///
/// `N` is half-integer here because `N = n + j + 1` with half-integer `j`;
/// the "natural number" phrasing sometimes attached to this formula is not
/// representable by that sum and the sum is what the spectrum uses.
pub fn rel_energy(m: f64, alpha: f64, big_n: &Rational) -> Result<f64, DiracError> {
    if !(m > 0.0) {
        return Err(DiracError::NonPositiveMass { m });
    }
    check_big_n(big_n)?;
    let n = big_n.to_f64().unwrap();
    Ok(m / (1.0 + alpha * alpha / (n * n)).sqrt())
}

/// The negative-energy root, exposed separately from the physical branch.
pub fn rel_energy_negative_branch(m: f64, alpha: f64, big_n: &Rational) -> Result<f64, DiracError> {
    rel_energy(m, alpha, big_n).map(|e| -e)
}

/// `|E(m, alpha, N) - (m - m alpha^2 / (2 N^2))|`, the gap to the
/// nonrelativistic expansion. Scales as `alpha^4` for small coupling.
pub fn nonrel_limit_gap(m: f64, alpha: f64, big_n: &Rational) -> Result<f64, DiracError> {
    if !(m > 0.0) {
        return Err(DiracError::NonPositiveMass { m });
    }
    check_big_n(big_n)?;
    let n = big_n.to_f64().unwrap();
    let e = m / (1.0 + alpha * alpha / (n * n)).sqrt();
    let nonrel = m - m * alpha * alpha / (2.0 * n * n);
    Ok((e - nonrel).abs())
}

/// `gap(alpha) / gap(alpha/2)`; approximately 16 when the gap is `O(alpha^4)`.
pub fn gap_halving_ratio(m: f64, alpha: f64, big_n: &Rational) -> Result<f64, DiracError> {
    let g1 = nonrel_limit_gap(m, alpha, big_n)?;
    let g2 = nonrel_limit_gap(m, alpha / 2.0, big_n)?;
    Ok(g1 / g2)
}

/// A reconstructed two-spinor solution with its pointwise first-order-system
/// residual.
#[derive(Debug, Clone)]
pub struct DiracSolution {
    pub e: f64,
    pub m: f64,
    pub alpha: f64,
    pub state: AnalyticState,
    pub points: Vec<[f64; 3]>,
    pub xi: Vec<[Complex64; 2]>,
    pub per_point_residual: Vec<f64>,
    pub max_relative_residual: f64,
}

type Spinor = [Complex64; 2];

fn spinor_norm(v: &Spinor) -> f64 {
    (v[0].norm_sqr() + v[1].norm_sqr()).sqrt()
}

fn sigma_dot_complex(v: &[Complex64; 3], _unused: ()) -> [[Complex64; 2]; 2] {
    [[v[2], v[0] - Complex64::i() * v[1]], [
        v[0] + Complex64::i() * v[1],
        -v[2],
    ]]
}

fn sigma_grad(grad: &[Spinor; 3]) -> Spinor {
    // sigma . grad applied to the spinor gradients
    let gx = grad[0];
    let gy = grad[1];
    let gz = grad[2];
    [
        gz[0] + gx[1] - Complex64::i() * gy[1],
        gx[0] + Complex64::i() * gy[0] - gz[1],
    ]
}

/// Reconstruct the lower spinor `xi = E^-1 (m - i sigma.p) psi` by central
/// differences at each point and evaluate the residual of the second
/// first-order equation, `(E - 2 alpha sigma.x/x^2) psi - (m + i sigma.p) xi`,
/// normalized by `|E| |psi|` per point.
///
/// The upper spinor is the analytic ground-sector state of the dipole model
/// evaluated at the rescaled radius `2 alpha E |x|`, with `E` from the
/// discrete energy formula.
pub fn reconstruct_xi(
    m: f64,
    alpha: f64,
    j: &Rational,
    n: u32,
    kappa: &Rational,
    points: &[[f64; 3]],
    h: f64,
) -> Result<DiracSolution, DiracError> {
    if n != 0 {
        return Err(DiracError::ExcitedSectorUnsupported { n });
    }
    let big_n = j + rat(1);
    let e = rel_energy(m, alpha, &big_n)?;
    reconstruct_xi_with_energy(m, alpha, j, kappa, e, points, h)
}

/// Same as `reconstruct_xi` but with the energy supplied explicitly, which
/// makes the residual's sensitivity to a wrong `E` measurable.
pub fn reconstruct_xi_with_energy(
    m: f64,
    alpha: f64,
    j: &Rational,
    kappa: &Rational,
    e: f64,
    points: &[[f64; 3]],
    h: f64,
) -> Result<DiracSolution, DiracError> {
    if e == 0.0 {
        return Err(DiracError::ZeroEnergy);
    }
    let state = ground_state(ModelId::Dipole, j, kappa)?;
    let scale = 2.0 * alpha * e;

    let psi_at = |x: &[f64; 3]| -> Result<Spinor, DiracError> {
        let scaled = [scale * x[0], scale * x[1], scale * x[2]];
        Ok(assemble(&state, &scaled)?)
    };
    // xi(x) = (m psi - sigma.grad psi) / E
    let xi_at = |x: &[f64; 3]| -> Result<Spinor, DiracError> {
        let center = psi_at(x)?;
        let mut grad = [Spinor::default(); 3];
        for a in 0..3 {
            let mut xp = *x;
            xp[a] += h;
            let mut xm = *x;
            xm[a] -= h;
            let fp = psi_at(&xp)?;
            let fm = psi_at(&xm)?;
            for c in 0..2 {
                grad[a][c] = (fp[c] - fm[c]) / (2.0 * h);
            }
        }
        let sg = sigma_grad(&grad);
        Ok([(m * center[0] - sg[0]) / e, (m * center[1] - sg[1]) / e])
    };

    let mut xi = Vec::with_capacity(points.len());
    let mut per_point = Vec::with_capacity(points.len());
    for x in points {
        let r = (x[0] * x[0] + x[1] * x[1] + x[2] * x[2]).sqrt();
        if r < 0.5 {
            return Err(DiracError::Num(NumError::PointTooCloseToOrigin { r }));
        }
        let psi = psi_at(x)?;
        let xi_c = xi_at(x)?;
        // sigma.grad xi by nested central differences
        let mut grad_xi = [Spinor::default(); 3];
        for a in 0..3 {
            let mut xp = *x;
            xp[a] += h;
            let mut xm = *x;
            xm[a] -= h;
            let fp = xi_at(&xp)?;
            let fm = xi_at(&xm)?;
            for c in 0..2 {
                grad_xi[a][c] = (fp[c] - fm[c]) / (2.0 * h);
            }
        }
        let sg_xi = sigma_grad(&grad_xi);
        // (E - 2 alpha sigma.x / x^2) psi - m xi - sigma.grad xi
        let sx = sigma_dot_complex(
            &[
                Complex64::new(x[0], 0.0),
                Complex64::new(x[1], 0.0),
                Complex64::new(x[2], 0.0),
            ],
            (),
        );
        let r2 = r * r;
        let mut res = Spinor::default();
        for c in 0..2 {
            let pauli_term =
                (sx[c][0] * psi[0] + sx[c][1] * psi[1]) * (2.0 * alpha / r2);
            res[c] = e * psi[c] - pauli_term - m * xi_c[c] - sg_xi[c];
        }
        per_point.push(spinor_norm(&res) / (e.abs() * spinor_norm(&psi)));
        xi.push(xi_c);
    }
    let max_relative_residual = per_point.iter().fold(0.0f64, |acc, &v| acc.max(v));
    Ok(DiracSolution {
        e,
        m,
        alpha,
        state,
        points: points.to_vec(),
        xi,
        per_point_residual: per_point,
        max_relative_residual,
    })
}
