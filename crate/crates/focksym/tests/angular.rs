//! Angular eigenrelation oracles: the spherical harmonics and spinors carry
//! the `L^2 = l(l+1)` and `J^2 = j(j+1)` eigenvalues of the angular
//! Laplace-Beltrami operator, checked by sixth-order differencing in theta
//! with the exact azimuthal order used spectrally.

use num_complex::Complex64;
use num_traits::ToPrimitive;

use focksym::specfun::{spherical_harmonic, spherical_spinor};
use focksym_core::scalar::{rat, ratio, Rational};

const H: f64 = 1e-2;

fn d1(g: &impl Fn(f64) -> Complex64, t: f64) -> Complex64 {
    (-g(t - 3.0 * H) + 9.0 * g(t - 2.0 * H) - 45.0 * g(t - H) + 45.0 * g(t + H)
        - 9.0 * g(t + 2.0 * H)
        + g(t + 3.0 * H))
        / (60.0 * H)
}

fn d2(g: &impl Fn(f64) -> Complex64, t: f64) -> Complex64 {
    (2.0 * g(t - 3.0 * H) - 27.0 * g(t - 2.0 * H) + 270.0 * g(t - H) - 490.0 * g(t)
        + 270.0 * g(t + H)
        - 27.0 * g(t + 2.0 * H)
        + 2.0 * g(t + 3.0 * H))
        / (180.0 * H * H)
}

/// `L^2 g = -g'' - cot(theta) g' + m^2 g / sin^2(theta)` for a fixed
/// azimuthal order `m`.
fn l_squared(g: &impl Fn(f64) -> Complex64, m: i32, t: f64) -> Complex64 {
    -d2(g, t) - d1(g, t) / t.tan() + (m * m) as f64 * g(t) / (t.sin() * t.sin())
}

#[test]
fn harmonics_are_laplace_beltrami_eigenfunctions() {
    for l in 0..=4u32 {
        for m in -(l as i32)..=(l as i32) {
            let g = |t: f64| spherical_harmonic(l, m, t, 0.0).unwrap();
            for t in [0.6, 1.1, 1.9, 2.5] {
                let lhs = l_squared(&g, m, t);
                let rhs = (l * (l + 1)) as f64 * g(t);
                assert!(
                    (lhs - rhs).norm() < 1e-6,
                    "Y_{l}^{m} at theta={t}: {lhs} vs {rhs}"
                );
            }
        }
    }
}

/// Ladder actions at phi = 0 on a component with azimuthal order `m`:
/// `L+ -> g' - m cot(theta) g`, `L- -> -g' - m cot(theta) g`.
fn l_plus(g: &impl Fn(f64) -> Complex64, m: i32, t: f64) -> Complex64 {
    d1(g, t) - m as f64 * g(t) / t.tan()
}

fn l_minus(g: &impl Fn(f64) -> Complex64, m: i32, t: f64) -> Complex64 {
    -d1(g, t) - m as f64 * g(t) / t.tan()
}

#[test]
fn spinors_are_total_angular_momentum_eigenfunctions() {
    let mut labels: Vec<(Rational, Rational, Rational)> = Vec::new();
    for j2 in [1i64, 3, 5] {
        let j = ratio(j2, 2);
        for l in [&j - ratio(1, 2), &j + ratio(1, 2)] {
            let mut kappa = -j.clone();
            while kappa <= j {
                labels.push((j.clone(), l.clone(), kappa.clone()));
                kappa = kappa + rat(1);
            }
        }
    }
    for (j, l, kappa) in labels {
        let m_up = (&kappa - ratio(1, 2)).to_integer().to_i32().unwrap();
        let m_down = (&kappa + ratio(1, 2)).to_integer().to_i32().unwrap();
        let up = |t: f64| spherical_spinor(&j, &l, &kappa, t, 0.0).unwrap().up;
        let down = |t: f64| spherical_spinor(&j, &l, &kappa, t, 0.0).unwrap().down;
        let jf = j.to_f64().unwrap();
        let lf = l.to_f64().unwrap();
        for t in [0.7, 1.3, 2.1] {
            // L^2 per component
            for (g, m) in [(&up as &dyn Fn(f64) -> Complex64, m_up), (&down, m_down)] {
                let lhs = l_squared(&g, m, t);
                let rhs = lf * (lf + 1.0) * g(t);
                assert!(
                    (lhs - rhs).norm() < 1e-6,
                    "L^2 on (j={j}, l={l}, kappa={kappa}) comp m={m} at theta={t}"
                );
            }
            // J^2 = L^2 + sigma.L + 3/4 with
            //   (sigma.L psi)_up   = m_up psi_up + L- psi_down
            //   (sigma.L psi)_down = L+ psi_up - m_down psi_down
            let j2_up = l_squared(&up, m_up, t)
                + m_up as f64 * up(t)
                + l_minus(&down, m_down, t)
                + 0.75 * up(t);
            let j2_down = l_squared(&down, m_down, t) + l_plus(&up, m_up, t)
                - m_down as f64 * down(t)
                + 0.75 * down(t);
            let want = jf * (jf + 1.0);
            assert!(
                (j2_up - want * up(t)).norm() < 1e-6,
                "J^2 up on (j={j}, l={l}, kappa={kappa}) at theta={t}: {j2_up} vs {}",
                want * up(t)
            );
            assert!(
                (j2_down - want * down(t)).norm() < 1e-6,
                "J^2 down on (j={j}, l={l}, kappa={kappa}) at theta={t}: {j2_down} vs {}",
                want * down(t)
            );
        }
    }
}
