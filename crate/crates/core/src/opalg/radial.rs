//! 2x2-matrix-valued one-dimensional differential operators in `r`.
//!
//! Terms are `scalar * r^k * alpha^e0 m^e1 * sigma * d_r^d` with exact
//! Laurent-in-`r` coefficients. The quantum number `j` is always instantiated
//! to a concrete rational before a radial operator is built, so no ring
//! relation is needed and the zero test is plain term-map emptiness.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;

use super::pauli::Pauli;
use crate::scalar::{Rational, Scalar};

/// Central invertible parameters of the radial ring, in storage order.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum RadialParam {
    Alpha,
    Mass,
}

impl RadialParam {
    pub fn index(self) -> usize {
        match self {
            RadialParam::Alpha => 0,
            RadialParam::Mass => 1,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            RadialParam::Alpha => "alpha",
            RadialParam::Mass => "m",
        }
    }
}

/// Term key: Laurent `r` exponent, parameter exponents, Pauli element and
/// `d/dr` power, ordered for deterministic printing.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct RadialKey {
    pub r: i32,
    pub par: [i32; 2],
    pub pauli: Pauli,
    pub dr: u32,
}

impl RadialKey {
    fn one() -> Self {
        RadialKey {
            r: 0,
            par: [0; 2],
            pauli: Pauli::I,
            dr: 0,
        }
    }
}

/// A canonical radial operator.
#[derive(Clone, Debug, Default)]
pub struct RadialOp {
    terms: BTreeMap<RadialKey, Scalar>,
}

fn accumulate(map: &mut BTreeMap<RadialKey, Scalar>, key: RadialKey, scalar: Scalar) {
    use alloc::collections::btree_map::Entry;
    if scalar.is_zero() {
        return;
    }
    match map.entry(key) {
        Entry::Vacant(v) => {
            v.insert(scalar);
        }
        Entry::Occupied(mut o) => {
            *o.get_mut() += &scalar;
            if o.get().is_zero() {
                o.remove();
            }
        }
    }
}

impl RadialOp {
    pub fn zero() -> Self {
        RadialOp::default()
    }

    pub fn one() -> Self {
        RadialOp::scalar(Scalar::one())
    }

    pub fn scalar(s: Scalar) -> Self {
        RadialOp::from_term(RadialKey::one(), s)
    }

    pub fn from_rational(r: Rational) -> Self {
        RadialOp::scalar(Scalar::from_rational(r))
    }

    pub fn from_term(key: RadialKey, scalar: Scalar) -> Self {
        let mut terms = BTreeMap::new();
        accumulate(&mut terms, key, scalar);
        RadialOp { terms }
    }

    /// `r^k`.
    pub fn r_pow(k: i32) -> Self {
        RadialOp::from_term(
            RadialKey {
                r: k,
                ..RadialKey::one()
            },
            Scalar::one(),
        )
    }

    /// `d/dr`.
    pub fn d_r() -> Self {
        RadialOp::from_term(
            RadialKey {
                dr: 1,
                ..RadialKey::one()
            },
            Scalar::one(),
        )
    }

    pub fn sigma(a: usize) -> Self {
        RadialOp::from_term(
            RadialKey {
                pauli: Pauli::from_axis(a),
                ..RadialKey::one()
            },
            Scalar::one(),
        )
    }

    pub fn param(p: RadialParam, k: i32) -> Self {
        let mut key = RadialKey::one();
        key.par[p.index()] = k;
        RadialOp::from_term(key, Scalar::one())
    }

    pub fn terms(&self) -> &BTreeMap<RadialKey, Scalar> {
        &self.terms
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Single-variable Laurent coefficients need no ring relation, so the
    /// zero element is exactly the empty term map.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Highest `d/dr` power.
    pub fn derivative_order(&self) -> u32 {
        self.terms.keys().map(|k| k.dr).max().unwrap_or(0)
    }

    pub fn scale(&self, s: &Scalar) -> RadialOp {
        if s.is_zero() {
            return RadialOp::zero();
        }
        let terms = self.terms.iter().map(|(k, c)| (k.clone(), c * s)).collect();
        RadialOp { terms }
    }

    pub fn scale_rational(&self, r: &Rational) -> RadialOp {
        self.scale(&Scalar::from_rational(r.clone()))
    }

    pub fn commutator(&self, rhs: &RadialOp) -> RadialOp {
        &(self * rhs) - &(rhs * self)
    }

    /// Formal adjoint with `d/dr -> -d/dr`, `r`, parameters and `sigma`
    /// self-adjoint, scalars conjugated, products reversed.
    pub fn adjoint(&self) -> RadialOp {
        let mut terms = BTreeMap::new();
        for (k, c) in &self.terms {
            let sign = if k.dr % 2 == 0 { 1 } else { -1 };
            let cc = if sign == 1 { c.conj() } else { -c.conj() };
            // (d_r)^d r^k via Leibniz, sigma commutes with both.
            for (key, s) in leibniz(k.dr, k.r, k.par, k.pauli) {
                accumulate(&mut terms, key, &cc * &s);
            }
        }
        RadialOp { terms }
    }

    pub fn pow(&self, n: i32) -> Option<RadialOp> {
        if n >= 0 {
            let mut acc = RadialOp::one();
            for _ in 0..n {
                acc = &acc * self;
            }
            return Some(acc);
        }
        let inv = self.invert_monomial()?;
        inv.pow(-n)
    }

    /// Inverse of a single invertible monomial term (`r` and parameters only).
    pub fn invert_monomial(&self) -> Option<RadialOp> {
        if self.terms.len() != 1 {
            return None;
        }
        let (k, c) = self.terms.iter().next().unwrap();
        if k.pauli != Pauli::I || k.dr != 0 {
            return None;
        }
        let key = RadialKey {
            r: -k.r,
            par: [-k.par[0], -k.par[1]],
            pauli: Pauli::I,
            dr: 0,
        };
        Some(RadialOp::from_term(
            key,
            c.inv().expect("stored scalars are nonzero"),
        ))
    }
}

/// Falling factorial `k (k-1) ... (k-s+1)` as a rational.
fn falling(k: i32, s: u32) -> Rational {
    let mut acc = BigInt::from(1);
    for t in 0..s {
        acc *= BigInt::from(k - t as i32);
    }
    Rational::from_integer(acc)
}

fn binomial(n: u32, k: u32) -> Rational {
    let mut acc = BigInt::from(1);
    for t in 1..=k {
        acc = acc * BigInt::from(n - t + 1) / BigInt::from(t);
    }
    Rational::from_integer(acc)
}

/// Normal order `d_r^d * r^k` (with fixed parameter exponents and Pauli
/// element) via Leibniz: `sum_s C(d,s) k^(s)_falling r^(k-s) d_r^(d-s)`.
fn leibniz(d: u32, k: i32, par: [i32; 2], pauli: Pauli) -> Vec<(RadialKey, Scalar)> {
    let mut out = Vec::with_capacity(d as usize + 1);
    for s in 0..=d {
        let w = binomial(d, s) * falling(k, s);
        let key = RadialKey {
            r: k - s as i32,
            par,
            pauli,
            dr: d - s,
        };
        out.push((key, Scalar::from_rational(w)));
    }
    out
}

impl Add for &RadialOp {
    type Output = RadialOp;
    fn add(self, rhs: &RadialOp) -> RadialOp {
        let mut terms = self.terms.clone();
        for (k, c) in &rhs.terms {
            accumulate(&mut terms, k.clone(), c.clone());
        }
        RadialOp { terms }
    }
}

impl Sub for &RadialOp {
    type Output = RadialOp;
    fn sub(self, rhs: &RadialOp) -> RadialOp {
        let mut terms = self.terms.clone();
        for (k, c) in &rhs.terms {
            accumulate(&mut terms, k.clone(), -c);
        }
        RadialOp { terms }
    }
}

impl Neg for &RadialOp {
    type Output = RadialOp;
    fn neg(self) -> RadialOp {
        let terms = self.terms.iter().map(|(k, c)| (k.clone(), -c)).collect();
        RadialOp { terms }
    }
}

impl Mul for &RadialOp {
    type Output = RadialOp;
    fn mul(self, rhs: &RadialOp) -> RadialOp {
        let mut terms = BTreeMap::new();
        for (k1, c1) in &self.terms {
            for (k2, c2) in &rhs.terms {
                let (phase, pauli) = k1.pauli.mul(k2.pauli);
                let base = (c1 * c2).mul_i_pow(phase);
                if base.is_zero() {
                    continue;
                }
                // move d_r^{d1} past r^{k2}
                for (mid, s) in leibniz(k1.dr, k2.r, [0; 2], Pauli::I) {
                    let key = RadialKey {
                        r: k1.r + mid.r,
                        par: [
                            k1.par[0] + k2.par[0],
                            k1.par[1] + k2.par[1],
                        ],
                        pauli,
                        dr: mid.dr + k2.dr,
                    };
                    accumulate(&mut terms, key, &base * &s);
                }
            }
        }
        RadialOp { terms }
    }
}

impl PartialEq for RadialOp {
    fn eq(&self, other: &Self) -> bool {
        (self - other).is_zero()
    }
}

impl Eq for RadialOp {}

impl Add for RadialOp {
    type Output = RadialOp;
    fn add(self, rhs: RadialOp) -> RadialOp {
        &self + &rhs
    }
}

impl Sub for RadialOp {
    type Output = RadialOp;
    fn sub(self, rhs: RadialOp) -> RadialOp {
        &self - &rhs
    }
}

impl Mul for RadialOp {
    type Output = RadialOp;
    fn mul(self, rhs: RadialOp) -> RadialOp {
        &self * &rhs
    }
}

impl Neg for RadialOp {
    type Output = RadialOp;
    fn neg(self) -> RadialOp {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn derivative_reorders_past_r() {
        // d_r * r = r d_r + 1
        let lhs = &RadialOp::d_r() * &RadialOp::r_pow(1);
        let rhs = &(&RadialOp::r_pow(1) * &RadialOp::d_r()) + &RadialOp::one();
        assert_eq!(lhs, rhs);
        // [d_r, r^-1] = -r^-2
        let comm = RadialOp::d_r().commutator(&RadialOp::r_pow(-1));
        assert_eq!(comm, -&RadialOp::r_pow(-2));
    }

    #[test]
    fn second_derivative_leibniz() {
        // d_r^2 r^2 = r^2 d_r^2 + 4 r d_r + 2
        let lhs = &RadialOp::d_r().pow(2).unwrap() * &RadialOp::r_pow(2);
        let rhs = &(&(&RadialOp::r_pow(2) * &RadialOp::d_r().pow(2).unwrap())
            + &(&RadialOp::r_pow(1) * &RadialOp::d_r()).scale(&Scalar::from_int(4)))
            + &RadialOp::scalar(Scalar::from_int(2));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn adjoint_flips_derivative_sign() {
        // (d_r + W)^dagger = -d_r + W for W = r^-1 sigma3
        let w = &RadialOp::r_pow(-1) * &RadialOp::sigma(3);
        let a = &RadialOp::d_r() + &w;
        let expected = &(-&RadialOp::d_r()) + &w;
        assert_eq!(a.adjoint(), expected);
    }

    #[test]
    fn laurent_cancellation() {
        assert_eq!(&RadialOp::r_pow(-2) * &RadialOp::r_pow(2), RadialOp::one());
    }

    #[test]
    fn pauli_in_radial_ring() {
        let s1s2 = &RadialOp::sigma(1) * &RadialOp::sigma(2);
        assert_eq!(s1s2, RadialOp::sigma(3).scale(&Scalar::i()));
    }
}
