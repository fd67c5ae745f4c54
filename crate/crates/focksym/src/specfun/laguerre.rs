//! Generalized Laguerre polynomials by the stable three-term recurrence
//! `(k+1) L_{k+1} = (2k+1+a-y) L_k - (k+a) L_{k-1}`.

use focksym_core::scalar::{rat, Rational};

/// `L_n^{(a)}(y)` in floating point.
pub fn laguerre(n: u32, a: f64, y: f64) -> f64 {
    if n == 0 {
        return 1.0;
    }
    let mut prev = 1.0f64;
    let mut cur = 1.0 + a - y;
    for k in 1..n {
        let kf = k as f64;
        let next = ((2.0 * kf + 1.0 + a - y) * cur - (kf + a) * prev) / (kf + 1.0);
        prev = cur;
        cur = next;
    }
    cur
}

/// `L_n^{(a)}(y)` in exact rational arithmetic.
pub fn laguerre_exact(n: u32, a: &Rational, y: &Rational) -> Rational {
    if n == 0 {
        return rat(1);
    }
    let mut prev = rat(1);
    let mut cur = rat(1) + a - y;
    for k in 1..n {
        let kf = rat(i64::from(k));
        let next = ((rat(2) * &kf + rat(1) + a - y) * &cur - (&kf + a) * &prev) / (&kf + rat(1));
        prev = cur;
        cur = next;
    }
    cur
}
