//! Pauli basis elements and their product table.

use crate::scalar::Scalar;

/// Basis element of the Pauli algebra: the identity or one of the three
/// Pauli matrices.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub enum Pauli {
    I,
    S1,
    S2,
    S3,
}

impl Pauli {
    /// Pauli matrix along axis `a` in `1..=3`.
    pub fn from_axis(a: usize) -> Pauli {
        match a {
            1 => Pauli::S1,
            2 => Pauli::S2,
            3 => Pauli::S3,
            _ => panic!("Pauli axis out of range: {a}"),
        }
    }

    pub fn index(self) -> usize {
        match self {
            Pauli::I => 0,
            Pauli::S1 => 1,
            Pauli::S2 => 2,
            Pauli::S3 => 3,
        }
    }

    /// Product of two basis elements as a power of `i` and a basis element:
    /// `sigma_a * sigma_b = i^phase * sigma_c`.
    ///
    /// Uses `sigma_a sigma_b = delta_ab + i eps_abc sigma_c`.
    pub fn mul(self, rhs: Pauli) -> (u8, Pauli) {
        use Pauli::*;
        match (self, rhs) {
            (I, b) => (0, b),
            (a, I) => (0, a),
            (a, b) if a == b => (0, I),
            (S1, S2) => (1, S3),
            (S2, S3) => (1, S1),
            (S3, S1) => (1, S2),
            (S2, S1) => (3, S3),
            (S3, S2) => (3, S1),
            (S1, S3) => (3, S2),
            _ => unreachable!(),
        }
    }

    /// Scalar form of the product phase.
    pub fn phase_scalar(phase: u8) -> Scalar {
        Scalar::one().mul_i_pow(phase)
    }
}
