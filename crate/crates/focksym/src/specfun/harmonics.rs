//! Spherical harmonics in the orthonormal convention with the
//! Condon-Shortley phase.

use num_complex::Complex64;

use super::SpecfunError;

/// Ferrers associated Legendre `P_l^m(x)` for `0 <= m <= l`, without the
/// Condon-Shortley phase.
fn legendre_p(l: u32, m: u32, x: f64) -> f64 {
    // P_m^m = (2m-1)!! (1-x^2)^{m/2}
    let somx2 = ((1.0 - x) * (1.0 + x)).max(0.0).sqrt();
    let mut pmm = 1.0f64;
    let mut fact = 1.0f64;
    for _ in 0..m {
        pmm *= fact * somx2;
        fact += 2.0;
    }
    if l == m {
        return pmm;
    }
    // P_{m+1}^m = x (2m+1) P_m^m
    let mut pm1 = x * (2.0 * m as f64 + 1.0) * pmm;
    if l == m + 1 {
        return pm1;
    }
    let mut pm2 = pmm;
    let mut result = 0.0;
    for ll in (m + 2)..=l {
        let llf = ll as f64;
        let mf = m as f64;
        result = (x * (2.0 * llf - 1.0) * pm1 - (llf + mf - 1.0) * pm2) / (llf - mf);
        pm2 = pm1;
        pm1 = result;
    }
    result
}

fn factorial(n: u32) -> f64 {
    (1..=n).map(|k| k as f64).product()
}

/// Orthonormal spherical harmonic `Y_l^m(theta, phi)` with the
/// Condon-Shortley phase, so `Y_1^0 = sqrt(3/4pi) cos(theta)` and
/// `Y_1^1 = -sqrt(3/8pi) sin(theta) e^{i phi}`.
pub fn spherical_harmonic(
    l: u32,
    m: i32,
    theta: f64,
    phi: f64,
) -> Result<Complex64, SpecfunError> {
    if m.unsigned_abs() > l {
        return Err(SpecfunError::InvalidHarmonic { l, m });
    }
    let m_abs = m.unsigned_abs();
    let norm = ((2.0 * l as f64 + 1.0) / (4.0 * core::f64::consts::PI) * factorial(l - m_abs)
        / factorial(l + m_abs))
    .sqrt();
    let p = legendre_p(l, m_abs, theta.cos());
    let cs = if m_abs % 2 == 1 { -1.0 } else { 1.0 };
    let base = cs * norm * p;
    let phase = Complex64::new(0.0, m_abs as f64 * phi).exp();
    if m >= 0 {
        Ok(base * phase)
    } else {
        // Y_{l,-m} = (-1)^m conj(Y_{l,m})
        Ok(cs * (base * phase).conj())
    }
}
