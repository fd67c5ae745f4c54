//! Closed-form spectra and degeneracy structure from the SUSY ladder,
//! in exact rational arithmetic.
//!
//! In rescaled units every model has `eps_n = -1/(4 N^2)` with
//! `N = n + j + 1`; the physical energy is `E = -m c_g^2 / (2 N^2)` where
//! the coupling `c_g` is `alpha` for the spin models and the charge for the
//! spinless Coulomb problem. Entries with equal `N` share `eps` exactly
//! across different `(n, j)` pairs, which is the degeneracy the hidden o(4)
//! symmetry produces.

use alloc::fmt;
use alloc::vec::Vec;

use num_traits::One;

use crate::models::{self, ModelId, ModelError};
use crate::scalar::{rat, ratio, Rational};

/// One bound-state record.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpectrumEntry {
    pub model: ModelId,
    pub j: Rational,
    pub n: u32,
    /// Rescaled eigenvalue, exactly `-1/(4 N^2)`.
    pub epsilon: Rational,
    /// Principal quantum number `N = n + j + 1`.
    pub big_n: Rational,
    /// Coefficient `-1/(2 N^2)` of `m * coupling^2` in the physical energy.
    pub e_phys_coeff: Rational,
    /// Multiplicity from the magnetic label: `2j + 1`.
    pub kappa_degeneracy: Rational,
}

impl SpectrumEntry {
    /// Physical energy `-m c^2 / (2 N^2)` for a concrete mass and coupling
    /// (`alpha` for the spin models, the charge for Ha), exactly.
    pub fn e_phys(&self, mass: &Rational, coupling: &Rational) -> Rational {
        &self.e_phys_coeff * mass * coupling * coupling
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SusyError {
    Model(ModelError),
    /// `N` is not reachable as `n + j + 1` with legal quantum numbers.
    UnreachableN(Rational),
}

impl fmt::Display for SusyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SusyError::Model(e) => write!(f, "{e}"),
            SusyError::UnreachableN(n) => {
                write!(f, "N = {n} is not reachable as n + j + 1")
            }
        }
    }
}

impl core::error::Error for SusyError {}

impl From<ModelError> for SusyError {
    fn from(e: ModelError) -> Self {
        SusyError::Model(e)
    }
}

fn check_j(model: ModelId, j: &Rational) -> Result<(), SusyError> {
    let ok = match model {
        ModelId::Ha => models::is_integer_l(j),
        _ => models::is_half_integer_j(j),
    };
    if ok {
        Ok(())
    } else {
        Err(SusyError::Model(ModelError::InvalidQuantumNumber {
            model,
            j: j.clone(),
        }))
    }
}

/// Exact bound-state ladder `n = 0 ..= n_max` for one `(model, j)` sector,
/// ascending in `n`.
pub fn spectrum(model: ModelId, j: &Rational, n_max: u32) -> Result<Vec<SpectrumEntry>, SusyError> {
    check_j(model, j)?;
    let mut out = Vec::with_capacity(n_max as usize + 1);
    for n in 0..=n_max {
        let big_n = j + rat(i64::from(n) + 1);
        let four_n2 = rat(4) * &big_n * &big_n;
        let epsilon = -Rational::one() / &four_n2;
        let e_phys_coeff = -Rational::one() / (rat(2) * &big_n * &big_n);
        out.push(SpectrumEntry {
            model,
            j: j.clone(),
            n,
            epsilon,
            big_n,
            e_phys_coeff,
            kappa_degeneracy: rat(2) * j + rat(1),
        });
    }
    Ok(out)
}

/// All `(n, j)` pairs of the spin models with `n + j + 1 = N`. `N` must be a
/// half-integer `>= 3/2`; the count is exactly `N - 1/2`.
pub fn degenerate_pairs(big_n: &Rational) -> Result<Vec<(u32, Rational)>, SusyError> {
    let twice = big_n * rat(2);
    let reachable = twice.is_integer()
        && num_integer::Integer::is_odd(&twice.to_integer())
        && *big_n >= ratio(3, 2);
    if !reachable {
        return Err(SusyError::UnreachableN(big_n.clone()));
    }
    let mut out = Vec::new();
    let mut n = 0u32;
    loop {
        let j = big_n - rat(i64::from(n) + 1);
        if j < ratio(1, 2) {
            break;
        }
        out.push((n, j));
        n += 1;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dipole_epsilons() {
        let entries = spectrum(ModelId::Dipole, &ratio(1, 2), 2).unwrap();
        let eps: Vec<Rational> = entries.iter().map(|e| e.epsilon.clone()).collect();
        assert_eq!(eps, alloc::vec![ratio(-1, 9), ratio(-1, 25), ratio(-1, 49)]);
        assert_eq!(entries[0].kappa_degeneracy, rat(2));
    }

    #[test]
    fn physical_energy() {
        let entries = spectrum(ModelId::Dipole, &ratio(1, 2), 0).unwrap();
        assert_eq!(entries[0].e_phys(&rat(1), &rat(1)), ratio(-2, 9));
        let entries = spectrum(ModelId::SpinOrbit, &ratio(3, 2), 0).unwrap();
        assert_eq!(entries[0].epsilon, ratio(-1, 25));
        assert_eq!(entries[0].e_phys(&rat(1), &rat(1)), ratio(-2, 25));
    }

    #[test]
    fn fock_degeneracy_exact() {
        // All sectors with n + j + 1 = N share the same exact epsilon.
        let n_big = ratio(7, 2);
        let pairs = degenerate_pairs(&n_big).unwrap();
        let mut eps = alloc::vec::Vec::new();
        for (n, j) in &pairs {
            let e = spectrum(ModelId::Dipole, j, *n).unwrap();
            eps.push(e[*n as usize].epsilon.clone());
        }
        assert!(eps.windows(2).all(|w| w[0] == w[1]));
        assert_eq!(eps[0], ratio(-1, 49));
    }

    #[test]
    fn degenerate_pair_counts() {
        assert_eq!(
            degenerate_pairs(&ratio(3, 2)).unwrap(),
            alloc::vec![(0, ratio(1, 2))]
        );
        assert_eq!(
            degenerate_pairs(&ratio(5, 2)).unwrap(),
            alloc::vec![(0, ratio(3, 2)), (1, ratio(1, 2))]
        );
        assert_eq!(degenerate_pairs(&ratio(7, 2)).unwrap().len(), 3);
        for half in [3i64, 5, 7, 9] {
            let n_big = ratio(half, 2);
            let count = degenerate_pairs(&n_big).unwrap().len();
            let expected = &n_big - ratio(1, 2);
            assert_eq!(rat(count as i64), expected);
        }
    }

    #[test]
    fn unreachable_n_rejected() {
        assert!(degenerate_pairs(&rat(2)).is_err());
        assert!(degenerate_pairs(&ratio(1, 2)).is_err());
        assert!(degenerate_pairs(&ratio(1, 3)).is_err());
    }

    #[test]
    fn ha_spectrum_uses_integer_l() {
        assert!(spectrum(ModelId::Ha, &ratio(1, 2), 1).is_err());
        let entries = spectrum(ModelId::Ha, &rat(0), 1).unwrap();
        assert_eq!(entries[0].epsilon, ratio(-1, 4));
        assert_eq!(entries[1].epsilon, ratio(-1, 16));
    }
}
