//! Spherical spinors: two-component angular eigenfunctions of `J^2`, `L^2`
//! and `J_3` assembled from spherical harmonics,
//!
//! ```text
//! Omega_{j, j-1/2, k} = (  sqrt((j+k)/2j)     Y_{j-1/2, k-1/2}
//!                          sqrt((j-k)/2j)     Y_{j-1/2, k+1/2} )
//! Omega_{j, j+1/2, k} = ( -sqrt((j-k+1)/(2j+2)) Y_{j+1/2, k-1/2}
//!                          sqrt((j+k+1)/(2j+2)) Y_{j+1/2, k+1/2} )
//! ```

use num_complex::Complex64;
use num_traits::ToPrimitive;

use focksym_core::models::is_half_integer_j;
use focksym_core::scalar::{rat, ratio, Rational};

use super::{spherical_harmonic, SpecfunError};

/// A spinor value with its labels.
#[derive(Debug, Clone, PartialEq)]
pub struct SpinorValue {
    pub up: Complex64,
    pub down: Complex64,
    pub j: Rational,
    pub l: Rational,
    pub kappa: Rational,
}

fn harmonic_or_zero(
    coeff: f64,
    l: u32,
    m: i32,
    theta: f64,
    phi: f64,
) -> Result<Complex64, SpecfunError> {
    // A vanishing coefficient may sit in front of an out-of-range order.
    if coeff == 0.0 {
        return Ok(Complex64::new(0.0, 0.0));
    }
    Ok(coeff * spherical_harmonic(l, m, theta, phi)?)
}

/// Evaluate `Omega_{j, l, kappa}(theta, phi)`.
pub fn spherical_spinor(
    j: &Rational,
    l: &Rational,
    kappa: &Rational,
    theta: f64,
    phi: f64,
) -> Result<SpinorValue, SpecfunError> {
    let invalid = || SpecfunError::InvalidSpinorLabels {
        j: j.clone(),
        l: l.clone(),
        kappa: kappa.clone(),
    };
    if !is_half_integer_j(j) {
        return Err(invalid());
    }
    let lower = j - ratio(1, 2);
    let upper = j + ratio(1, 2);
    if *l != lower && *l != upper {
        return Err(invalid());
    }
    // kappa runs over -j ..= j in integer steps.
    if kappa > j || *kappa < -j.clone() || !(kappa - j).is_integer() {
        return Err(invalid());
    }

    let l_int = l.to_integer().to_u32().ok_or_else(invalid)?;
    let m_up = (kappa - ratio(1, 2)).to_integer().to_i32().ok_or_else(invalid)?;
    let m_down = (kappa + ratio(1, 2)).to_integer().to_i32().ok_or_else(invalid)?;

    let (c_up, c_down) = if *l == lower {
        let two_j = (rat(2) * j).to_f64().unwrap();
        let cu = ((j + kappa).to_f64().unwrap() / two_j).sqrt();
        let cd = ((j - kappa).to_f64().unwrap() / two_j).sqrt();
        (cu, cd)
    } else {
        let two_j_plus_2 = (rat(2) * j + rat(2)).to_f64().unwrap();
        let cu = -(((j - kappa + rat(1)).to_f64().unwrap()) / two_j_plus_2).sqrt();
        let cd = (((j + kappa + rat(1)).to_f64().unwrap()) / two_j_plus_2).sqrt();
        (cu, cd)
    };

    Ok(SpinorValue {
        up: harmonic_or_zero(c_up, l_int, m_up, theta, phi)?,
        down: harmonic_or_zero(c_down, l_int, m_down, theta, phi)?,
        j: j.clone(),
        l: l.clone(),
        kappa: kappa.clone(),
    })
}
