//! Finite-difference discretization of radial operators.
//!
//! `-d^2/dr^2` becomes the second-order central stencil with Dirichlet
//! boundaries at both grid ends; potential terms are evaluated at the nodes.
//! Unknowns are ordered node-major with the two spinor components adjacent,
//! so the matrix is symmetric banded with scalar bandwidth at most 3.

use num_complex::Complex64;
use num_traits::ToPrimitive;

use focksym_core::opalg::{Pauli, RadialOp};

use super::{GridFunction, NumError, RadialGrid};

/// Real symmetric block-tridiagonal matrix stored as its diagonal and three
/// superdiagonals: `bands[k][i] = A[i][i+k]`.
#[derive(Debug, Clone)]
pub struct DiscreteOperator {
    pub grid: RadialGrid,
    n: usize,
    bands: [Vec<f64>; 4],
    /// Printed form of the radial operator this matrix discretizes.
    pub source: String,
}

/// Evaluate a derivative-free radial operator as a real symmetric 2x2
/// matrix at radius `r`.
pub fn radial_matrix_at(op: &RadialOp, r: f64) -> Result<[[f64; 2]; 2], NumError> {
    let mut out = [[0.0f64; 2]; 2];
    for (key, scalar) in op.terms() {
        if key.dr != 0 {
            return Err(NumError::UnsupportedDerivativeOrder { order: key.dr });
        }
        let c = real_coefficient(key.par, scalar, key.pauli)?;
        let v = c * r.powi(key.r);
        accumulate_block(&mut out, key.pauli, v);
    }
    Ok(out)
}

fn real_coefficient(
    par: [i32; 2],
    scalar: &focksym_core::Scalar,
    pauli: Pauli,
) -> Result<f64, NumError> {
    if par != [0, 0] {
        return Err(NumError::SymbolicParameters);
    }
    if pauli == Pauli::S2 || !scalar.is_real() {
        return Err(NumError::NotRealSymmetric);
    }
    scalar
        .re
        .to_f64()
        .ok_or(NumError::NotRealSymmetric)
}

fn accumulate_block(block: &mut [[f64; 2]; 2], pauli: Pauli, v: f64) {
    match pauli {
        Pauli::I => {
            block[0][0] += v;
            block[1][1] += v;
        }
        Pauli::S1 => {
            block[0][1] += v;
            block[1][0] += v;
        }
        Pauli::S3 => {
            block[0][0] += v;
            block[1][1] -= v;
        }
        Pauli::S2 => unreachable!("rejected by real_coefficient"),
    }
}

/// Assemble the symmetric banded matrix of `op` on `grid`.
pub fn discretize(op: &RadialOp, grid: &RadialGrid) -> Result<DiscreteOperator, NumError> {
    let m = grid.len();
    let n = 2 * m;
    let h = grid.spacing();
    let mut bands = [vec![0.0; n], vec![0.0; n], vec![0.0; n], vec![0.0; n]];

    for (key, scalar) in op.terms() {
        match key.dr {
            0 => {}
            2 => {
                if key.pauli != Pauli::I {
                    return Err(NumError::MatrixKinetic);
                }
            }
            1 => return Err(NumError::FirstDerivative),
            order => return Err(NumError::UnsupportedDerivativeOrder { order }),
        }
        let c = real_coefficient(key.par, scalar, key.pauli)?;
        if key.dr == 2 {
            // c d^2/dr^2 with r^k coefficient must still be constant in r
            // for symmetry; the model Hamiltonians only carry k = 0.
            if key.r != 0 {
                return Err(NumError::MatrixKinetic);
            }
            for i in 0..m {
                for comp in 0..2 {
                    let row = 2 * i + comp;
                    bands[0][row] += -2.0 * c / (h * h);
                    if i + 1 < m {
                        bands[2][row] += c / (h * h);
                    }
                }
            }
        } else {
            for i in 0..m {
                let v = c * grid.node(i).powi(key.r);
                let mut block = [[0.0f64; 2]; 2];
                accumulate_block(&mut block, key.pauli, v);
                let row = 2 * i;
                bands[0][row] += block[0][0];
                bands[0][row + 1] += block[1][1];
                bands[1][row] += block[0][1];
            }
        }
    }

    Ok(DiscreteOperator {
        grid: grid.clone(),
        n,
        bands,
        source: format!("{op}"),
    })
}

impl DiscreteOperator {
    pub fn size(&self) -> usize {
        self.n
    }

    pub fn bandwidth(&self) -> usize {
        3
    }

    pub fn band(&self, k: usize, i: usize) -> f64 {
        self.bands[k][i]
    }

    pub fn matvec(&self, v: &[f64]) -> Vec<f64> {
        debug_assert_eq!(v.len(), self.n);
        let mut y = vec![0.0; self.n];
        for i in 0..self.n {
            let mut acc = self.bands[0][i] * v[i];
            for k in 1..=3usize {
                if i + k < self.n {
                    acc += self.bands[k][i] * v[i + k];
                }
                if i >= k {
                    acc += self.bands[k][i - k] * v[i - k];
                }
            }
            y[i] = acc;
        }
        y
    }

    /// Apply to a two-component grid function (componentwise on real and
    /// imaginary parts).
    pub fn apply(&self, f: &GridFunction) -> Result<GridFunction, NumError> {
        if f.grid != self.grid {
            return Err(NumError::GridMismatch);
        }
        let m = self.grid.len();
        let mut re = vec![0.0; self.n];
        let mut im = vec![0.0; self.n];
        for i in 0..m {
            re[2 * i] = f.up[i].re;
            im[2 * i] = f.up[i].im;
            re[2 * i + 1] = f.down[i].re;
            im[2 * i + 1] = f.down[i].im;
        }
        let yre = self.matvec(&re);
        let yim = self.matvec(&im);
        let mut out = GridFunction::zeros(self.grid.clone());
        for i in 0..m {
            out.up[i] = Complex64::new(yre[2 * i], yim[2 * i]);
            out.down[i] = Complex64::new(yre[2 * i + 1], yim[2 * i + 1]);
        }
        out.label = f.label.clone();
        Ok(out)
    }

    /// `<f, A f> / <f, f>` with the trapezoid inner product.
    pub fn rayleigh_quotient(&self, f: &GridFunction) -> Result<f64, NumError> {
        let nf = f.norm();
        if nf == 0.0 {
            return Err(NumError::ZeroFunction);
        }
        let af = self.apply(f)?;
        Ok(f.inner(&af)?.re / (nf * nf))
    }

    /// Dense copy, for small-matrix tests.
    pub fn to_dense(&self) -> Vec<Vec<f64>> {
        let mut a = vec![vec![0.0; self.n]; self.n];
        for i in 0..self.n {
            a[i][i] = self.bands[0][i];
            for k in 1..=3usize {
                if i + k < self.n {
                    a[i][i + k] = self.bands[k][i];
                    a[i + k][i] = self.bands[k][i];
                }
            }
        }
        a
    }
}
