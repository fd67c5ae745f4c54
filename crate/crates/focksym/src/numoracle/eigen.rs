//! Bound-state eigensolver for the banded symmetric matrices produced by
//! `discretize`: Sturm-sequence bisection isolates each eigenvalue in the
//! requested window, inverse iteration with a partial-pivoting banded LU
//! recovers the eigenvectors, and a Rayleigh quotient polishes the values.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{DiscreteOperator, GridFunction, NumError};

const BW: usize = 3;
const RESIDUAL_TARGET: f64 = 1e-8;
const MAX_INVERSE_ITER: usize = 60;

/// Number of eigenvalues of `A` strictly below `sigma`, from the inertia of
/// the `L D L^T` factorization of `A - sigma I`.
fn sturm_count(a: &DiscreteOperator, sigma: f64) -> usize {
    let n = a.size();
    let mut d = vec![0.0f64; n];
    // lower[o][j] = L[j+o][j]
    let mut lower = [vec![0.0f64; n], vec![0.0f64; n], vec![0.0f64; n]];
    let mut negatives = 0usize;
    let tiny = 1e-300;
    for j in 0..n {
        let mut dj = a.band(0, j) - sigma;
        for o in 1..=BW {
            if j >= o {
                let l = lower[o - 1][j - o];
                dj -= l * l * d[j - o];
            }
        }
        if dj == 0.0 {
            dj = -tiny;
        }
        d[j] = dj;
        if dj < 0.0 {
            negatives += 1;
        }
        for o in 1..=BW {
            let i = j + o;
            if i >= n {
                break;
            }
            // A[i][j] lives on superdiagonal o of the symmetric storage.
            let mut acc = a.band(o, j);
            for k in i.saturating_sub(BW)..j {
                let li = lower[i - k - 1][k];
                let lj = lower[j - k - 1][k];
                acc -= li * lj * d[k];
            }
            lower[o - 1][j] = acc / dj;
        }
    }
    negatives
}

/// Banded LU with partial pivoting for `A - sigma I`, bandwidth `BW` on both
/// sides and fill-in up to `2 BW` above the diagonal.
struct BandedLu {
    n: usize,
    /// Entry `A[i][j]` lives at `ab[idx(i, j)]` for `j - 2BW <= i <= j + BW`.
    ab: Vec<f64>,
    ipiv: Vec<usize>,
}

const KU_EFF: usize = 2 * BW;
const LDAB: usize = KU_EFF + BW + 1;

#[inline]
fn ab_index(i: usize, j: usize) -> usize {
    // row offset KU_EFF + i - j in column j
    KU_EFF + i - j + j * LDAB
}

impl BandedLu {
    fn factor(a: &DiscreteOperator, sigma: f64) -> Option<BandedLu> {
        let n = a.size();
        let mut ab = vec![0.0f64; LDAB * n];
        for j in 0..n {
            ab[ab_index(j, j)] = a.band(0, j) - sigma;
            for o in 1..=BW {
                if j + o < n {
                    ab[ab_index(j + o, j)] = a.band(o, j);
                    ab[ab_index(j, j + o)] = a.band(o, j);
                }
            }
        }
        let mut ipiv = vec![0usize; n];
        for j in 0..n {
            // pivot among rows j ..= j+BW
            let i_hi = (j + BW).min(n - 1);
            let mut piv = j;
            let mut best = ab[ab_index(j, j)].abs();
            for i in (j + 1)..=i_hi {
                let v = ab[ab_index(i, j)].abs();
                if v > best {
                    best = v;
                    piv = i;
                }
            }
            if best == 0.0 {
                return None;
            }
            ipiv[j] = piv;
            let c_hi = (j + KU_EFF).min(n - 1);
            if piv != j {
                for c in j..=c_hi {
                    ab.swap(ab_index(j, c), ab_index(piv, c));
                }
            }
            let diag = ab[ab_index(j, j)];
            for i in (j + 1)..=i_hi {
                let l = ab[ab_index(i, j)] / diag;
                ab[ab_index(i, j)] = l;
                if l != 0.0 {
                    for c in (j + 1)..=c_hi {
                        ab[ab_index(i, c)] -= l * ab[ab_index(j, c)];
                    }
                }
            }
        }
        Some(BandedLu { n, ab, ipiv })
    }

    fn solve(&self, b: &mut [f64]) {
        let n = self.n;
        for j in 0..n {
            let piv = self.ipiv[j];
            if piv != j {
                b.swap(j, piv);
            }
            let bj = b[j];
            if bj != 0.0 {
                let i_hi = (j + BW).min(n - 1);
                for i in (j + 1)..=i_hi {
                    b[i] -= self.ab[ab_index(i, j)] * bj;
                }
            }
        }
        for j in (0..n).rev() {
            let mut acc = b[j];
            let c_hi = (j + KU_EFF).min(n - 1);
            for c in (j + 1)..=c_hi {
                acc -= self.ab[ab_index(j, c)] * b[c];
            }
            b[j] = acc / self.ab[ab_index(j, j)];
        }
    }
}

fn norm2(v: &[f64]) -> f64 {
    v.iter().map(|x| x * x).sum::<f64>().sqrt()
}

fn orthogonalize(v: &mut [f64], basis: &[Vec<f64>]) {
    for b in basis {
        let dot: f64 = v.iter().zip(b).map(|(x, y)| x * y).sum();
        for (x, y) in v.iter_mut().zip(b) {
            *x -= dot * y;
        }
    }
}

/// The `k` lowest eigenpairs inside `window`, each with
/// `|A v - eps v| <= 1e-8 |v|`, ordered by eigenvalue. The seed fixes the
/// inverse-iteration start vectors, making the output deterministic.
pub fn eigensolve(
    a: &DiscreteOperator,
    k: usize,
    window: (f64, f64),
    seed: u64,
) -> Result<Vec<(f64, GridFunction)>, NumError> {
    assert!(k >= 1, "eigensolve requires k >= 1");
    let (lo, hi) = window;
    assert!(lo < hi, "window must be a nonempty interval");
    let n = a.size();
    let count_lo = sturm_count(a, lo);
    let count_hi = sturm_count(a, hi);
    let available = count_hi.saturating_sub(count_lo);
    if available < k {
        return Err(NumError::FewerThanRequested {
            lo,
            hi,
            found: available,
            requested: k,
        });
    }

    let scale = lo.abs().max(hi.abs()).max(1.0);
    let tol = 1e-12 * scale;

    // Bisect each target index to a tight bracket.
    let mut brackets = Vec::with_capacity(k);
    for idx in 0..k {
        let target = count_lo + idx + 1;
        let (mut a_lo, mut a_hi) = (lo, hi);
        while a_hi - a_lo > tol {
            let mid = 0.5 * (a_lo + a_hi);
            if sturm_count(a, mid) >= target {
                a_hi = mid;
            } else {
                a_lo = mid;
            }
        }
        brackets.push(0.5 * (a_lo + a_hi));
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let cluster_tol = 1e-7 * scale;
    let mut results: Vec<(f64, Vec<f64>)> = Vec::with_capacity(k);

    for (idx, &lambda_hat) in brackets.iter().enumerate() {
        // Nudge the shift off the eigenvalue so the factorization stays
        // regular, and collect the cluster neighbors to orthogonalize
        // against.
        let shift = lambda_hat + 1e-11 * scale * (1.0 + idx as f64);
        let lu = match BandedLu::factor(a, shift) {
            Some(lu) => lu,
            None => BandedLu::factor(a, shift + 1e-9 * scale).ok_or(
                NumError::NoConvergence {
                    iterations: 0,
                    residual: f64::INFINITY,
                },
            )?,
        };
        let neighbors: Vec<Vec<f64>> = results
            .iter()
            .filter(|(e, _)| (e - lambda_hat).abs() < cluster_tol)
            .map(|(_, v)| v.clone())
            .collect();

        let mut v: Vec<f64> = (0..n).map(|_| rng.gen_range(-1.0..1.0)).collect();
        orthogonalize(&mut v, &neighbors);
        let nv = norm2(&v);
        v.iter_mut().for_each(|x| *x /= nv);

        let mut residual = f64::INFINITY;
        let mut eps = lambda_hat;
        let mut iterations = 0;
        for it in 0..MAX_INVERSE_ITER {
            iterations = it + 1;
            lu.solve(&mut v);
            orthogonalize(&mut v, &neighbors);
            let nv = norm2(&v);
            if nv == 0.0 {
                // re-seed if the start vector was in the neighbor span
                v = (0..n).map(|_| rng.gen_range(-1.0..1.0)).collect();
                orthogonalize(&mut v, &neighbors);
                let nv = norm2(&v);
                v.iter_mut().for_each(|x| *x /= nv);
                continue;
            }
            v.iter_mut().for_each(|x| *x /= nv);
            let av = a.matvec(&v);
            eps = v.iter().zip(&av).map(|(x, y)| x * y).sum::<f64>();
            residual = av
                .iter()
                .zip(&v)
                .map(|(y, x)| (y - eps * x) * (y - eps * x))
                .sum::<f64>()
                .sqrt();
            if residual <= RESIDUAL_TARGET {
                break;
            }
        }
        if residual > RESIDUAL_TARGET {
            return Err(NumError::NoConvergence {
                iterations,
                residual,
            });
        }
        // Deterministic sign: largest-magnitude entry positive.
        let mut imax = 0;
        let mut vmax = 0.0f64;
        for (i, &x) in v.iter().enumerate() {
            if x.abs() > vmax {
                vmax = x.abs();
                imax = i;
            }
        }
        if v[imax] < 0.0 {
            v.iter_mut().for_each(|x| *x = -*x);
        }
        results.push((eps, v));
    }

    results.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap());

    let m = a.grid.len();
    let h = a.grid.spacing();
    let out = results
        .into_iter()
        .map(|(eps, v)| {
            let mut gf = GridFunction::zeros(a.grid.clone());
            // trapezoid-normalize: euclidean norm 1 -> divide by sqrt(h)
            let scale = 1.0 / h.sqrt();
            for i in 0..m {
                gf.up[i] = Complex64::new(v[2 * i] * scale, 0.0);
                gf.down[i] = Complex64::new(v[2 * i + 1] * scale, 0.0);
            }
            (eps, gf)
        })
        .collect();
    Ok(out)
}
