//! Modified Bessel functions `K0` and `K1`.
//!
//! Small arguments use the ascending series paired with `I0`/`I1`; large
//! arguments use Temme's continued-fraction evaluation. The switch point is
//! `z = 2`, where both branches agree to full double precision.

use super::SpecfunError;

const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;
const SWITCH: f64 = 2.0;
const UNDERFLOW_EDGE: f64 = 700.0;
const EPS: f64 = 1.0e-16;
const MAX_ITER: usize = 10_000;

/// Result of a `K` evaluation. `underflow` marks arguments beyond the
/// supported range where the true value is below ~1e-306 and zero is
/// returned instead.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KValue {
    pub value: f64,
    pub underflow: bool,
}

/// `K_order(z)` for order 0 or 1, relative accuracy better than 1e-12 on
/// `z` in `[1e-6, 700]`.
pub fn bessel_k(order: u8, z: f64) -> Result<KValue, SpecfunError> {
    if order > 1 {
        return Err(SpecfunError::InvalidOrder { order });
    }
    if !(z > 0.0) {
        return Err(SpecfunError::NonPositiveArgument { z });
    }
    if z > UNDERFLOW_EDGE {
        return Ok(KValue {
            value: 0.0,
            underflow: true,
        });
    }
    let (k0, k1) = if z <= SWITCH {
        k_series(z)
    } else {
        k_continued_fraction(z)
    };
    Ok(KValue {
        value: if order == 0 { k0 } else { k1 },
        underflow: false,
    })
}

/// Ascending series for `K0`, `K1` (z <= 2):
/// `K0 = -(ln(z/2)+gamma) I0 + sum_k (z^2/4)^k / (k!)^2 * H_k` and
/// `K1 = 1/z + ln(z/2) I1 - (z/4) sum_k (psi(k+1)+psi(k+2)) (z^2/4)^k / (k!(k+1)!)`.
fn k_series(z: f64) -> (f64, f64) {
    let x = z * z / 4.0;
    let log_half_z = (z / 2.0).ln();

    // I0 and the harmonic-weighted companion sum.
    let mut term = 1.0f64; // x^k / (k!)^2
    let mut i0 = 1.0;
    let mut h = 0.0f64; // H_k
    let mut k0_sum = 0.0;
    for k in 1..MAX_ITER {
        let kf = k as f64;
        term *= x / (kf * kf);
        i0 += term;
        h += 1.0 / kf;
        k0_sum += term * h;
        if term * (h + 1.0) < EPS * (i0.abs() + k0_sum.abs()) {
            break;
        }
    }
    let k0 = -(log_half_z + EULER_GAMMA) * i0 + k0_sum;

    // I1 and the digamma-weighted sum for K1.
    let mut term = 1.0f64; // x^k / (k!(k+1)!)
    let mut i1_sum = 1.0;
    let mut psi_sum = -2.0 * EULER_GAMMA + 1.0; // psi(1) + psi(2)
    let mut k1_sum = psi_sum;
    let mut h = 0.0f64;
    for k in 1..MAX_ITER {
        let kf = k as f64;
        term *= x / (kf * (kf + 1.0));
        i1_sum += term;
        h += 1.0 / kf;
        psi_sum = -2.0 * EULER_GAMMA + 2.0 * h + 1.0 / (kf + 1.0);
        k1_sum += term * psi_sum;
        if term * (psi_sum.abs() + 1.0) < EPS * (i1_sum.abs() + k1_sum.abs()) {
            break;
        }
    }
    let i1 = (z / 2.0) * i1_sum;
    let k1 = 1.0 / z + log_half_z * i1 - (z / 4.0) * k1_sum;
    (k0, k1)
}

/// Temme's continued fraction for `K0`, `K1` (z > 2).
fn k_continued_fraction(z: f64) -> (f64, f64) {
    let mut b = 2.0 * (1.0 + z);
    let mut d = 1.0 / b;
    let mut h = d;
    let mut delh = d;
    let mut q1 = 0.0f64;
    let mut q2 = 1.0f64;
    let a1 = 0.25f64;
    let mut q = a1;
    let mut c = a1;
    let mut a = -a1;
    let mut s = 1.0 + q * delh;
    for i in 2..=MAX_ITER {
        a -= 2.0 * (i as f64 - 1.0);
        c = -a * c / i as f64;
        let qnew = (q1 - b * q2) / a;
        q1 = q2;
        q2 = qnew;
        q += c * qnew;
        b += 2.0;
        d = 1.0 / (b + a * d);
        delh = (b * d - 1.0) * delh;
        h += delh;
        let dels = q * delh;
        s += dels;
        if (dels / s).abs() <= EPS {
            break;
        }
    }
    h *= a1;
    let k0 = (core::f64::consts::PI / (2.0 * z)).sqrt() * (-z).exp() / s;
    let k1 = k0 * (z + 0.5 - h) / z;
    (k0, k1)
}
