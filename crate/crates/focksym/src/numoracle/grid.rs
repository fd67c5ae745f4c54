//! Uniform radial grids and two-component grid functions.

use num_complex::Complex64;

use focksym_core::models::ModelId;
use focksym_core::Rational;

use super::NumError;

/// Uniform grid of `m` interior nodes on `(r_min, r_max)` with Dirichlet
/// values pinned to zero at both ends: node `i` sits at
/// `r_min + (i+1) h` with `h = (r_max - r_min)/(m + 1)`.
#[derive(Debug, Clone, PartialEq)]
pub struct RadialGrid {
    r_min: f64,
    r_max: f64,
    m: usize,
}

impl RadialGrid {
    pub fn new(r_min: f64, r_max: f64, m: usize) -> Result<Self, NumError> {
        if !(r_min > 0.0 && r_max > r_min && m >= 16) {
            return Err(NumError::InvalidGrid { r_min, r_max, m });
        }
        Ok(RadialGrid { r_min, r_max, m })
    }

    pub fn r_min(&self) -> f64 {
        self.r_min
    }

    pub fn r_max(&self) -> f64 {
        self.r_max
    }

    pub fn len(&self) -> usize {
        self.m
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn spacing(&self) -> f64 {
        (self.r_max - self.r_min) / (self.m as f64 + 1.0)
    }

    pub fn node(&self, i: usize) -> f64 {
        debug_assert!(i < self.m);
        self.r_min + (i as f64 + 1.0) * self.spacing()
    }

    pub fn nodes(&self) -> Vec<f64> {
        (0..self.m).map(|i| self.node(i)).collect()
    }
}

/// Quantum-number label attached to a stored state.
#[derive(Debug, Clone, PartialEq)]
pub struct StateLabel {
    pub model: ModelId,
    pub j: Rational,
    pub n: u32,
    pub kappa: Rational,
}

/// Two-component complex values on a radial grid.
#[derive(Debug, Clone, PartialEq)]
pub struct GridFunction {
    pub grid: RadialGrid,
    pub up: Vec<Complex64>,
    pub down: Vec<Complex64>,
    pub label: Option<StateLabel>,
}

impl GridFunction {
    pub fn zeros(grid: RadialGrid) -> Self {
        let m = grid.len();
        GridFunction {
            grid,
            up: vec![Complex64::new(0.0, 0.0); m],
            down: vec![Complex64::new(0.0, 0.0); m],
            label: None,
        }
    }

    /// Trapezoid inner product (the boundary values are zero by the grid's
    /// Dirichlet convention, so the weight is uniformly `h`).
    pub fn inner(&self, other: &GridFunction) -> Result<Complex64, NumError> {
        if self.grid != other.grid {
            return Err(NumError::GridMismatch);
        }
        let h = self.grid.spacing();
        let mut acc = Complex64::new(0.0, 0.0);
        for i in 0..self.grid.len() {
            acc += self.up[i].conj() * other.up[i] + self.down[i].conj() * other.down[i];
        }
        Ok(acc * h)
    }

    pub fn norm(&self) -> f64 {
        self.inner(self).expect("same grid").re.max(0.0).sqrt()
    }

    /// `|<a, b>| / (|a| |b|)`.
    pub fn overlap(&self, other: &GridFunction) -> Result<f64, NumError> {
        let na = self.norm();
        let nb = other.norm();
        if na == 0.0 || nb == 0.0 {
            return Err(NumError::ZeroFunction);
        }
        Ok(self.inner(other)?.norm() / (na * nb))
    }

    pub fn normalized(mut self) -> Result<Self, NumError> {
        let n = self.norm();
        if n == 0.0 {
            return Err(NumError::ZeroFunction);
        }
        for v in self.up.iter_mut().chain(self.down.iter_mut()) {
            *v /= n;
        }
        Ok(self)
    }

    /// Number of radial sign changes of the dominant (larger-norm) real
    /// component, ignoring values below a relative amplitude floor.
    pub fn dominant_component_nodes(&self) -> usize {
        let norm_of = |v: &[Complex64]| v.iter().map(|z| z.norm_sqr()).sum::<f64>();
        let comp = if norm_of(&self.up) >= norm_of(&self.down) {
            &self.up
        } else {
            &self.down
        };
        let values: Vec<f64> = comp.iter().map(|z| z.re).collect();
        let peak = values.iter().fold(0.0f64, |m, v| m.max(v.abs()));
        let floor = peak * 1e-6;
        let mut count = 0;
        let mut prev = 0.0f64;
        for &v in &values {
            if v.abs() <= floor {
                continue;
            }
            if prev != 0.0 && v.signum() != prev.signum() {
                count += 1;
            }
            prev = v;
        }
        count
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_validation() {
        assert!(RadialGrid::new(0.0, 10.0, 100).is_err());
        assert!(RadialGrid::new(1.0, 1.0, 100).is_err());
        assert!(RadialGrid::new(0.1, 10.0, 8).is_err());
        let g = RadialGrid::new(1e-3, 240.0, 12000).unwrap();
        assert!((g.spacing() - (240.0 - 1e-3) / 12001.0).abs() < 1e-15);
        let nodes = g.nodes();
        assert!(nodes.windows(2).all(|w| w[0] < w[1]));
        assert!(nodes[0] > g.r_min() && nodes[nodes.len() - 1] < g.r_max());
    }

    #[test]
    fn node_counting() {
        let grid = RadialGrid::new(0.1, 10.0, 99).unwrap();
        let mut f = GridFunction::zeros(grid.clone());
        for i in 0..grid.len() {
            let r = grid.node(i);
            // one interior node at r = 5
            f.up[i] = Complex64::new((r - 5.0) * (-r).exp(), 0.0);
        }
        assert_eq!(f.dominant_component_nodes(), 1);
    }

    #[test]
    fn trapezoid_norm() {
        let grid = RadialGrid::new(0.5, 1.5, 999).unwrap();
        let mut f = GridFunction::zeros(grid.clone());
        for i in 0..grid.len() {
            f.up[i] = Complex64::new(1.0, 0.0);
        }
        // integral of 1 over (0.5, 1.5) is 1 up to the boundary cells
        assert!((f.norm() - 1.0).abs() < 1e-3);
    }
}
