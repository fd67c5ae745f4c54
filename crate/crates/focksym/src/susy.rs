//! Analytic bound states and the numerical SUSY ladder.
//!
//! The dipole ground state in each `(j, kappa)` sector is the
//! Bessel-function pair `r^{j+3/2} (K1(b r), K0(b r))` with `b = 1/(2(j+1))`;
//! excited states are produced numerically by applying the raising operators
//! `a^+ = -d/dr + W` down the sector ladder. The spin-orbit (and Ha) states
//! have the hydrogen-like Laguerre closed form. Everything here works in the
//! rescaled radial variable.

use num_complex::Complex64;
use num_traits::ToPrimitive;
use thiserror::Error;

use focksym_core::models::{
    build_superpotential, is_half_integer_j, is_integer_l, ModelError, ModelId,
};
use focksym_core::scalar::{rat, ratio, Rational};

use crate::numoracle::{radial_matrix_at, GridFunction, NumError, RadialGrid, StateLabel};
use crate::specfun::{bessel_k, laguerre, spherical_spinor, SpecfunError};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SusyNumError {
    #[error(transparent)]
    Model(#[from] ModelError),
    #[error("kappa = {kappa} is not a legal magnetic label for j = {j}")]
    InvalidKappa { j: Rational, kappa: Rational },
    #[error("{model}: {reason}")]
    WrongModel { model: ModelId, reason: &'static str },
    #[error("grid spacing {h} exceeds the 0.02 resolution bound for ladder application")]
    GridTooCoarse { h: f64 },
    #[error("grid extent r_max = {r_max} is below the required {required} (20 N) for this state")]
    GridTooShort { r_max: f64, required: f64 },
    #[error("under-resolved grid: step-halving derivative disagreement {disagreement:e} exceeds 1e-6")]
    UnderResolved { disagreement: f64 },
    #[error(transparent)]
    Num(#[from] NumError),
    #[error(transparent)]
    Specfun(#[from] SpecfunError),
}

/// How a state's radial profile is constructed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StateKind {
    /// Dipole seed state `(r^{j+3/2} K1(br), r^{j+3/2} K0(br))`.
    BesselGround,
    /// Hydrogen-like `y^{j+1} e^{-y/2} L_n^{2j+1}(y)` with `y = r/N`.
    Laguerre,
}

/// Spinor channel: `Upper` pairs with `l = j - 1/2`, `Lower` with
/// `l = j + 1/2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Channel {
    Upper,
    Lower,
}

/// A closed-form state with an exact radial evaluator.
#[derive(Debug, Clone, PartialEq)]
pub struct AnalyticState {
    pub model: ModelId,
    pub j: Rational,
    pub n: u32,
    pub kappa: Rational,
    pub kind: StateKind,
    /// Free normalization constants per component.
    pub weights: [f64; 2],
}

fn check_kappa(j: &Rational, kappa: &Rational) -> Result<(), SusyNumError> {
    let bad = kappa > j || *kappa < -j.clone() || !(kappa - j).is_integer();
    if bad {
        Err(SusyNumError::InvalidKappa {
            j: j.clone(),
            kappa: kappa.clone(),
        })
    } else {
        Ok(())
    }
}

impl AnalyticState {
    /// `N = n + j + 1`.
    pub fn big_n(&self) -> Rational {
        &self.j + rat(i64::from(self.n) + 1)
    }

    /// Rescaled eigenvalue `-1/(4 N^2)` as a float.
    pub fn epsilon(&self) -> f64 {
        let n = self.big_n().to_f64().unwrap();
        -1.0 / (4.0 * n * n)
    }

    /// Radial components at `r > 0`.
    pub fn eval(&self, r: f64) -> [f64; 2] {
        match self.kind {
            StateKind::BesselGround => {
                let j = self.j.to_f64().unwrap();
                let b = 1.0 / (2.0 * (j + 1.0));
                let pre = r.powf(j + 1.5);
                let k1 = bessel_k(1, b * r).map(|k| k.value).unwrap_or(0.0);
                let k0 = bessel_k(0, b * r).map(|k| k.value).unwrap_or(0.0);
                [self.weights[0] * pre * k1, self.weights[1] * pre * k0]
            }
            StateKind::Laguerre => {
                let j = self.j.to_f64().unwrap();
                let n_big = self.big_n().to_f64().unwrap();
                let y = r / n_big;
                let f = y.powf(j + 1.0) * (-y / 2.0).exp() * laguerre(self.n, 2.0 * j + 1.0, y);
                [self.weights[0] * f, self.weights[1] * f]
            }
        }
    }

    /// Analytic radial derivative, using `K0' = -K1` and
    /// `K1'(z) = -K0(z) - K1(z)/z` for the Bessel seed and
    /// `dL_n^a/dy = -L_{n-1}^{a+1}` otherwise.
    pub fn eval_derivative(&self, r: f64) -> [f64; 2] {
        match self.kind {
            StateKind::BesselGround => {
                let j = self.j.to_f64().unwrap();
                let b = 1.0 / (2.0 * (j + 1.0));
                let gamma = j + 1.5;
                let k1 = bessel_k(1, b * r).map(|k| k.value).unwrap_or(0.0);
                let k0 = bessel_k(0, b * r).map(|k| k.value).unwrap_or(0.0);
                let d_up = (gamma - 1.0) * r.powf(gamma - 1.0) * k1 - b * r.powf(gamma) * k0;
                let d_down = gamma * r.powf(gamma - 1.0) * k0 - b * r.powf(gamma) * k1;
                [self.weights[0] * d_up, self.weights[1] * d_down]
            }
            StateKind::Laguerre => {
                let j = self.j.to_f64().unwrap();
                let a = 2.0 * j + 1.0;
                let n_big = self.big_n().to_f64().unwrap();
                let y = r / n_big;
                let l = laguerre(self.n, a, y);
                let lp = if self.n == 0 {
                    0.0
                } else {
                    -laguerre(self.n - 1, a + 1.0, y)
                };
                let f = y.powf(j + 1.0) * (-y / 2.0).exp();
                let df_dy = ((j + 1.0) / y - 0.5) * f * l + f * lp;
                let d = df_dy / n_big;
                [self.weights[0] * d, self.weights[1] * d]
            }
        }
    }

    /// Sample onto a grid.
    pub fn sample(&self, grid: &RadialGrid) -> GridFunction {
        let mut gf = GridFunction::zeros(grid.clone());
        for i in 0..grid.len() {
            let [u, d] = self.eval(grid.node(i));
            gf.up[i] = Complex64::new(u, 0.0);
            gf.down[i] = Complex64::new(d, 0.0);
        }
        gf.label = Some(StateLabel {
            model: self.model,
            j: self.j.clone(),
            n: self.n,
            kappa: self.kappa.clone(),
        });
        gf
    }
}

/// The lowest state of a `(model, j)` sector.
///
/// Dipole gives the two-component Bessel seed annihilated by `a_j`;
/// SpinOrbit gives the `n = 0` Laguerre profile with equal channel weights
/// `1/sqrt(2)`; Ha gives the hydrogen profile in the upper component.
pub fn ground_state(
    model: ModelId,
    j: &Rational,
    kappa: &Rational,
) -> Result<AnalyticState, SusyNumError> {
    let bad_j = match model {
        ModelId::Ha => !is_integer_l(j),
        _ => !is_half_integer_j(j),
    };
    if bad_j {
        return Err(ModelError::InvalidQuantumNumber {
            model,
            j: j.clone(),
        }
        .into());
    }
    if model != ModelId::Ha {
        check_kappa(j, kappa)?;
    }
    let (kind, weights) = match model {
        ModelId::Dipole => (StateKind::BesselGround, [1.0, 1.0]),
        ModelId::SpinOrbit => {
            let w = 0.5f64.sqrt();
            (StateKind::Laguerre, [w, w])
        }
        ModelId::Ha => (StateKind::Laguerre, [1.0, 0.0]),
    };
    Ok(AnalyticState {
        model,
        j: j.clone(),
        n: 0,
        kappa: kappa.clone(),
        kind,
        weights,
    })
}

/// Closed-form spin-orbit state in one `lambda` channel.
pub fn laguerre_state(
    j: &Rational,
    n: u32,
    channel: Channel,
    kappa: &Rational,
) -> Result<AnalyticState, SusyNumError> {
    if !is_half_integer_j(j) {
        return Err(ModelError::InvalidQuantumNumber {
            model: ModelId::SpinOrbit,
            j: j.clone(),
        }
        .into());
    }
    check_kappa(j, kappa)?;
    let weights = match channel {
        Channel::Upper => [1.0, 0.0],
        Channel::Lower => [0.0, 1.0],
    };
    Ok(AnalyticState {
        model: ModelId::SpinOrbit,
        j: j.clone(),
        n,
        kappa: kappa.clone(),
        kind: StateKind::Laguerre,
        weights,
    })
}

/// Sixth-order central difference on zero-padded data with the given stride.
fn d6(values: &[f64], h: f64, stride: usize) -> Vec<f64> {
    let n = values.len();
    let get = |i: i64| -> f64 {
        if i < 0 || i >= n as i64 {
            0.0
        } else {
            values[i as usize]
        }
    };
    let s = stride as i64;
    let w = 60.0 * h * stride as f64;
    (0..n as i64)
        .map(|i| {
            (-get(i - 3 * s) + 9.0 * get(i - 2 * s) - 45.0 * get(i - s) + 45.0 * get(i + s)
                - 9.0 * get(i + 2 * s)
                + get(i + 3 * s))
                / w
        })
        .collect()
}

/// Relative L2 disagreement over the interior nodes. The first and last six
/// nodes are excluded: there the coarse-stride stencil reaches into the
/// zero-padding and into the boundary layer of the fractional-power
/// singularity, neither of which measures grid resolution.
fn rel_l2_disagreement(a: &[f64], b: &[f64]) -> f64 {
    let skip = 6usize;
    if a.len() <= 2 * skip {
        return f64::INFINITY;
    }
    let inner = skip..(a.len() - skip);
    let diff: f64 = inner
        .clone()
        .map(|i| (a[i] - b[i]) * (a[i] - b[i]))
        .sum();
    let norm: f64 = inner.map(|i| a[i] * a[i]).sum();
    if norm == 0.0 {
        0.0
    } else {
        (diff / norm).sqrt()
    }
}

/// Apply `a^+ = -d/dr + W_sector` to grid data. `derivative` supplies the
/// radial derivative values (analytic for the seed, finite differences for
/// later rungs).
fn apply_raising(
    model: ModelId,
    sector: &Rational,
    grid: &RadialGrid,
    values: &[Vec<f64>; 2],
    derivative: &[Vec<f64>; 2],
) -> Result<[Vec<f64>; 2], SusyNumError> {
    let w_op = build_superpotential(model, sector)?;
    let m = grid.len();
    let mut out = [vec![0.0; m], vec![0.0; m]];
    for i in 0..m {
        let w = radial_matrix_at(&w_op, grid.node(i))?;
        for c in 0..2 {
            out[c][i] = -derivative[c][i] + w[c][0] * values[0][i] + w[c][1] * values[1][i];
        }
    }
    Ok(out)
}

/// Excited dipole state `a_j^+ a_{j+1}^+ ... a_{j+n-1}^+ (seed at j+n)` on a
/// grid. The seed derivative is analytic; later rungs use sixth-order
/// central differences with a step-halving resolution check. `n = 0` simply
/// samples the ground state.
pub fn excited_state(
    model: ModelId,
    j: &Rational,
    n: u32,
    kappa: &Rational,
    grid: &RadialGrid,
) -> Result<GridFunction, SusyNumError> {
    if model != ModelId::Dipole {
        return Err(SusyNumError::WrongModel {
            model,
            reason: "the numerical ladder applies to the dipole model; spin-orbit excited states have the Laguerre closed form",
        });
    }
    if n == 0 {
        return Ok(ground_state(model, j, kappa)?.sample(grid));
    }
    let n_big = (j + rat(i64::from(n) + 1)).to_f64().unwrap();
    let h = grid.spacing();
    if h > 0.0205 {
        return Err(SusyNumError::GridTooCoarse { h });
    }
    let required = 20.0 * n_big;
    if grid.r_max() < required {
        return Err(SusyNumError::GridTooShort {
            r_max: grid.r_max(),
            required,
        });
    }

    let seed_j = j + rat(i64::from(n));
    let seed = ground_state(model, &seed_j, kappa)?;
    let m = grid.len();
    let mut values = [vec![0.0; m], vec![0.0; m]];
    let mut derivative = [vec![0.0; m], vec![0.0; m]];
    for i in 0..m {
        let r = grid.node(i);
        let v = seed.eval(r);
        let d = seed.eval_derivative(r);
        for c in 0..2 {
            values[c][i] = v[c];
            derivative[c][i] = d[c];
        }
    }

    // Highest sector first: a^+_{j+n-1} acts on the seed analytically.
    let mut sector = &seed_j - rat(1);
    let mut current = apply_raising(model, &sector, grid, &values, &derivative)?;

    while sector > *j {
        sector = &sector - rat(1);
        let mut deriv = [Vec::new(), Vec::new()];
        for c in 0..2 {
            let fine = d6(&current[c], h, 1);
            let coarse = d6(&current[c], h, 2);
            let disagreement = rel_l2_disagreement(&fine, &coarse);
            if disagreement > 1e-6 {
                return Err(SusyNumError::UnderResolved { disagreement });
            }
            deriv[c] = fine;
        }
        current = apply_raising(model, &sector, grid, &current, &deriv)?;
    }

    let mut gf = GridFunction::zeros(grid.clone());
    for i in 0..m {
        gf.up[i] = Complex64::new(current[0][i], 0.0);
        gf.down[i] = Complex64::new(current[1][i], 0.0);
    }
    gf.label = Some(StateLabel {
        model,
        j: j.clone(),
        n,
        kappa: kappa.clone(),
    });
    Ok(gf)
}

/// `|a_j state| / |state|` on a quadrature grid, with the derivative taken
/// analytically. For the seed states this is zero to rounding accuracy.
pub fn seed_annihilation_ratio(
    model: ModelId,
    j: &Rational,
    r_max: f64,
    samples: usize,
) -> Result<f64, SusyNumError> {
    let kappa = if model == ModelId::Ha { rat(0) } else { ratio(1, 2) };
    let state = ground_state(model, j, &kappa)?;
    let w_op = build_superpotential(model, j)?;
    let h = r_max / samples as f64;
    let mut num = 0.0f64;
    let mut den = 0.0f64;
    for i in 1..samples {
        let r = i as f64 * h;
        let v = state.eval(r);
        let d = state.eval_derivative(r);
        let w = radial_matrix_at(&w_op, r)?;
        for c in 0..2 {
            let a_v = d[c] + w[c][0] * v[0] + w[c][1] * v[1];
            num += a_v * a_v * h;
            den += v[c] * v[c] * h;
        }
    }
    Ok((num / den).sqrt())
}

/// Assemble the two-component 3D wavefunction
/// `psi(x) = (1/r) [u_0(r) Omega_{j,j-1/2,kappa} + u_1(r) Omega_{j,j+1/2,kappa}]`
/// at a Cartesian point.
pub fn assemble(state: &AnalyticState, x: &[f64; 3]) -> Result<[Complex64; 2], SusyNumError> {
    let r = (x[0] * x[0] + x[1] * x[1] + x[2] * x[2]).sqrt();
    let theta = (x[2] / r).clamp(-1.0, 1.0).acos();
    let phi = x[1].atan2(x[0]);
    let u = state.eval(r);
    let mut out = [Complex64::new(0.0, 0.0); 2];
    let ls = [&state.j - ratio(1, 2), &state.j + ratio(1, 2)];
    for (c, l) in ls.iter().enumerate() {
        if u[c] == 0.0 {
            continue;
        }
        let omega = spherical_spinor(&state.j, l, &state.kappa, theta, phi)?;
        let w = u[c] / r;
        out[0] += w * omega.up;
        out[1] += w * omega.down;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ground_state_values_match_bessel() {
        // At r = 3 the dipole j = 1/2 seed is (9 K1(1), 9 K0(1)).
        let s = ground_state(ModelId::Dipole, &ratio(1, 2), &ratio(1, 2)).unwrap();
        let [up, down] = s.eval(3.0);
        let k1 = bessel_k(1, 1.0).unwrap().value;
        let k0 = bessel_k(0, 1.0).unwrap().value;
        assert!((up - 9.0 * k1).abs() < 1e-12);
        assert!((down - 9.0 * k0).abs() < 1e-12);
        assert!((s.epsilon() + 1.0 / 9.0).abs() < 1e-15);
    }

    #[test]
    fn seed_annihilation_is_tiny() {
        for j2 in [1i64, 3, 5] {
            let j = ratio(j2, 2);
            let r = seed_annihilation_ratio(ModelId::Dipole, &j, 80.0, 4000).unwrap();
            assert!(r < 1e-10, "j = {j}: {r:e}");
        }
    }

    #[test]
    fn spin_orbit_and_ha_ground_annihilation() {
        let r = seed_annihilation_ratio(ModelId::SpinOrbit, &ratio(1, 2), 80.0, 4000).unwrap();
        assert!(r < 1e-10, "{r:e}");
        let r = seed_annihilation_ratio(ModelId::Ha, &rat(1), 80.0, 4000).unwrap();
        assert!(r < 1e-10, "{r:e}");
    }

    #[test]
    fn laguerre_state_epsilons_and_nodes() {
        let s = laguerre_state(&ratio(1, 2), 0, Channel::Upper, &ratio(1, 2)).unwrap();
        assert!((s.epsilon() + 1.0 / 9.0).abs() < 1e-15);
        let s1 = laguerre_state(&ratio(1, 2), 1, Channel::Upper, &ratio(1, 2)).unwrap();
        assert!((s1.epsilon() + 1.0 / 25.0).abs() < 1e-15);
        let grid = RadialGrid::new(1e-3, 120.0, 6000).unwrap();
        let gf = s1.sample(&grid);
        assert_eq!(gf.dominant_component_nodes(), 1);
        let s2 = laguerre_state(&ratio(1, 2), 2, Channel::Lower, &ratio(1, 2)).unwrap();
        let gf = s2.sample(&grid);
        assert_eq!(gf.dominant_component_nodes(), 2);
    }

    #[test]
    fn excited_state_has_expected_node_count() {
        let grid = RadialGrid::new(1e-3, 120.0, 6000).unwrap();
        let j = ratio(1, 2);
        let gf = excited_state(ModelId::Dipole, &j, 1, &j, &grid).unwrap();
        assert_eq!(gf.dominant_component_nodes(), 1);
        let gf0 = excited_state(ModelId::Dipole, &j, 0, &j, &grid).unwrap();
        assert_eq!(gf0.dominant_component_nodes(), 0);
    }

    #[test]
    fn guards() {
        let j = ratio(1, 2);
        let grid = RadialGrid::new(1e-3, 120.0, 6000).unwrap();
        assert!(matches!(
            excited_state(ModelId::SpinOrbit, &j, 1, &j, &grid),
            Err(SusyNumError::WrongModel { .. })
        ));
        let coarse = RadialGrid::new(1e-3, 120.0, 1000).unwrap();
        assert!(matches!(
            excited_state(ModelId::Dipole, &j, 1, &j, &coarse),
            Err(SusyNumError::GridTooCoarse { .. })
        ));
        let short = RadialGrid::new(1e-3, 30.0, 3000).unwrap();
        assert!(matches!(
            excited_state(ModelId::Dipole, &j, 1, &j, &short),
            Err(SusyNumError::GridTooShort { .. })
        ));
        assert!(ground_state(ModelId::Dipole, &j, &ratio(3, 2)).is_err());
        assert!(ground_state(ModelId::Dipole, &j, &rat(0)).is_err());
        assert!(ground_state(ModelId::Dipole, &rat(1), &ratio(1, 2)).is_err());
    }

    #[test]
    fn square_integrability_near_origin_for_low_j() {
        // The K0 component behaves like r^{j+3/2} ln r near zero; confirm
        // the norm over (0, 1/2) converges under grid refinement rather
        // than assuming it.
        let s = ground_state(ModelId::Dipole, &ratio(1, 2), &ratio(1, 2)).unwrap();
        let mut prev = 0.0f64;
        let mut diffs = Vec::new();
        for samples in [2000usize, 4000, 8000, 16000] {
            let h = 0.5 / samples as f64;
            let mut acc = 0.0;
            for i in 1..samples {
                let r = i as f64 * h;
                let [u, d] = s.eval(r);
                acc += (u * u + d * d) * h;
            }
            if prev > 0.0 {
                diffs.push((acc - prev).abs());
            }
            prev = acc;
        }
        assert!(diffs.windows(2).all(|w| w[1] < 0.6 * w[0]), "{diffs:?}");
        assert!(diffs.last().unwrap() < &1e-4);
    }

    #[test]
    fn assembled_state_is_finite_and_two_component() {
        let s = ground_state(ModelId::Dipole, &ratio(1, 2), &ratio(1, 2)).unwrap();
        let psi = assemble(&s, &[1.0, 0.5, -0.3]).unwrap();
        assert!(psi[0].norm() > 0.0 && psi[1].norm() > 0.0);
        assert!(psi[0].is_finite() && psi[1].is_finite());
    }
}
