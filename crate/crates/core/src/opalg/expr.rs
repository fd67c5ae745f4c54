//! Canonical operators of the three-dimensional algebra.
//!
//! Every operator is a finite sum of terms `scalar * monomial * sigma * p^b`
//! with all coefficient factors to the left of all momentum factors. Products
//! are normally ordered with `p_a f = f p_a - i df/dx_a` and the Pauli product
//! table; the ring relation keeps stored `r` exponents at most 1.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;

use super::coeff::{insert_reduced, Monomial3D, Param3D, TermPos};
use super::pauli::Pauli;
use crate::scalar::{Rational, Scalar};

/// A canonical noncommutative operator polynomial.
#[derive(Clone, Debug, Default)]
pub struct OperatorExpr {
    terms: BTreeMap<TermPos, Scalar>,
}

impl OperatorExpr {
    pub fn zero() -> Self {
        OperatorExpr::default()
    }

    pub fn one() -> Self {
        OperatorExpr::scalar(Scalar::one())
    }

    pub fn imaginary() -> Self {
        OperatorExpr::scalar(Scalar::i())
    }

    pub fn scalar(s: Scalar) -> Self {
        let mut terms = BTreeMap::new();
        insert_reduced(&mut terms, TermPos::scalar_key(), s);
        OperatorExpr { terms }
    }

    pub fn from_rational(r: Rational) -> Self {
        OperatorExpr::scalar(Scalar::from_rational(r))
    }

    pub fn from_term(mono: Monomial3D, pauli: Pauli, mom: [u32; 3], scalar: Scalar) -> Self {
        let mut terms = BTreeMap::new();
        insert_reduced(&mut terms, TermPos { mono, pauli, mom }, scalar);
        OperatorExpr { terms }
    }

    /// Position operator `x_a`, `a` in `1..=3`.
    pub fn x(a: usize) -> Self {
        OperatorExpr::from_term(Monomial3D::x_axis(a), Pauli::I, [0; 3], Scalar::one())
    }

    /// Momentum operator `p_a`, `a` in `1..=3`.
    pub fn p(a: usize) -> Self {
        let mut mom = [0u32; 3];
        mom[a - 1] = 1;
        OperatorExpr::from_term(Monomial3D::one(), Pauli::I, mom, Scalar::one())
    }

    /// Pauli matrix `sigma_a`, `a` in `1..=3`.
    pub fn sigma(a: usize) -> Self {
        OperatorExpr::from_term(Monomial3D::one(), Pauli::from_axis(a), [0; 3], Scalar::one())
    }

    /// Laurent power `r^k`.
    pub fn r_pow(k: i32) -> Self {
        OperatorExpr::from_term(Monomial3D::r_pow(k), Pauli::I, [0; 3], Scalar::one())
    }

    /// Laurent power of a central parameter.
    pub fn param(p: Param3D, k: i32) -> Self {
        OperatorExpr::from_term(Monomial3D::param(p, k), Pauli::I, [0; 3], Scalar::one())
    }

    pub fn terms(&self) -> &BTreeMap<TermPos, Scalar> {
        &self.terms
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, s: &Scalar) -> OperatorExpr {
        if s.is_zero() {
            return OperatorExpr::zero();
        }
        let mut terms = BTreeMap::new();
        for (k, c) in &self.terms {
            insert_reduced(&mut terms, k.clone(), c * s);
        }
        OperatorExpr { terms }
    }

    pub fn scale_rational(&self, r: &Rational) -> OperatorExpr {
        self.scale(&Scalar::from_rational(r.clone()))
    }

    /// Rebuild the term map through the reduction path. By construction this
    /// is the identity on any operator produced by this module.
    pub fn canonicalize(&self) -> OperatorExpr {
        let mut terms = BTreeMap::new();
        for (k, c) in &self.terms {
            insert_reduced(&mut terms, k.clone(), c.clone());
        }
        OperatorExpr { terms }
    }

    /// `AB - BA`.
    pub fn commutator(&self, rhs: &OperatorExpr) -> OperatorExpr {
        &(self * rhs) - &(rhs * self)
    }

    /// Formal adjoint: reverse each term, conjugate scalars, with
    /// `x`, `p` and `sigma` self-adjoint, then re-normal-order.
    pub fn adjoint(&self) -> OperatorExpr {
        let mut terms = BTreeMap::new();
        for (k, c) in &self.terms {
            let cc = c.conj();
            for (g, q, s) in normal_order(k.mom, &k.mono) {
                insert_reduced(
                    &mut terms,
                    TermPos {
                        mono: g,
                        pauli: k.pauli,
                        mom: q,
                    },
                    &cc * &s,
                );
            }
        }
        OperatorExpr { terms }
    }

    /// Integer power. Negative powers are defined only for invertible single
    /// monomials (no `x`, momentum or Pauli content).
    pub fn pow(&self, n: i32) -> Option<OperatorExpr> {
        if n >= 0 {
            let mut acc = OperatorExpr::one();
            for _ in 0..n {
                acc = &acc * self;
            }
            return Some(acc);
        }
        let inv = self.invert_monomial()?;
        inv.pow(-n)
    }

    /// Inverse of a single invertible monomial term: only `r`, parameters and
    /// a nonzero scalar may appear.
    pub fn invert_monomial(&self) -> Option<OperatorExpr> {
        if self.terms.len() != 1 {
            return None;
        }
        let (k, c) = self.terms.iter().next().unwrap();
        if k.pauli != Pauli::I || k.mom != [0; 3] || k.mono.x != [0; 3] {
            return None;
        }
        let mut mono = Monomial3D::one();
        mono.r = -k.mono.r;
        for i in 0..4 {
            mono.par[i] = -k.mono.par[i];
        }
        Some(OperatorExpr::from_term(
            mono,
            Pauli::I,
            [0; 3],
            c.inv().expect("stored scalars are nonzero"),
        ))
    }

    /// Clear negative `r` powers by an even left factor `r^K` and reduce.
    /// The result is empty exactly when the operator is the zero element of
    /// the quotient ring (multiplication by `r` is injective because
    /// `r^2 - x1^2 - x2^2 - x3^2` is irreducible).
    pub fn reduced_residual(&self) -> OperatorExpr {
        let min_r = self.terms.keys().map(|k| k.mono.r).min().unwrap_or(0);
        if min_r >= 0 {
            return self.clone();
        }
        let mut shift = (-min_r) as u32;
        if shift % 2 == 1 {
            shift += 1;
        }
        let mut terms = BTreeMap::new();
        for (k, c) in &self.terms {
            let mut k2 = k.clone();
            k2.mono.r += shift as i32;
            insert_reduced(&mut terms, k2, c.clone());
        }
        OperatorExpr { terms }
    }

    /// True exactly when this operator is the zero element of the quotient
    /// ring.
    pub fn is_zero(&self) -> bool {
        self.reduced_residual().terms.is_empty()
    }

    /// The coefficient of the empty monomial / Pauli identity / empty
    /// momentum term, if the operator is a plain scalar.
    pub fn as_scalar(&self) -> Option<Scalar> {
        if self.terms.is_empty() {
            return Some(Scalar::zero());
        }
        if self.terms.len() == 1 {
            let (k, c) = self.terms.iter().next().unwrap();
            if k.mono.is_one() && k.pauli == Pauli::I && k.mom == [0; 3] {
                return Some(c.clone());
            }
        }
        None
    }
}

/// Move a momentum monomial leftward past a coefficient monomial:
/// `p^mom * mono = sum scalar * mono' * p^mom'`.
fn normal_order(mom: [u32; 3], mono: &Monomial3D) -> Vec<(Monomial3D, [u32; 3], Scalar)> {
    let axis = match (0..3).rev().find(|&a| mom[a] > 0) {
        Some(a) => a,
        None => return vec![(mono.clone(), [0; 3], Scalar::one())],
    };
    let mut rest = mom;
    rest[axis] -= 1;
    let mut out = Vec::new();
    for (g, mut q, s) in normal_order(rest, mono) {
        q[axis] += 1;
        out.push((g, q, s));
    }
    for (dm, w) in mono.derivative(axis + 1) {
        // p_a f = f p_a - i df/dx_a
        let factor = Scalar::new(Rational::zero(), -w);
        for (g, q, s) in normal_order(rest, &dm) {
            out.push((g, q, &s * &factor));
        }
    }
    out
}

impl PartialEq for OperatorExpr {
    /// Semantic equality in the quotient ring.
    fn eq(&self, other: &Self) -> bool {
        (self - other).is_zero()
    }
}

impl Eq for OperatorExpr {}

impl Add for &OperatorExpr {
    type Output = OperatorExpr;
    fn add(self, rhs: &OperatorExpr) -> OperatorExpr {
        let mut terms = self.terms.clone();
        for (k, c) in &rhs.terms {
            insert_reduced(&mut terms, k.clone(), c.clone());
        }
        OperatorExpr { terms }
    }
}

impl Sub for &OperatorExpr {
    type Output = OperatorExpr;
    fn sub(self, rhs: &OperatorExpr) -> OperatorExpr {
        let mut terms = self.terms.clone();
        for (k, c) in &rhs.terms {
            insert_reduced(&mut terms, k.clone(), -c);
        }
        OperatorExpr { terms }
    }
}

impl Neg for &OperatorExpr {
    type Output = OperatorExpr;
    fn neg(self) -> OperatorExpr {
        let terms = self.terms.iter().map(|(k, c)| (k.clone(), -c)).collect();
        OperatorExpr { terms }
    }
}

impl Mul for &OperatorExpr {
    type Output = OperatorExpr;
    fn mul(self, rhs: &OperatorExpr) -> OperatorExpr {
        let mut terms = BTreeMap::new();
        for (k1, c1) in &self.terms {
            for (k2, c2) in &rhs.terms {
                let (phase, pauli) = k1.pauli.mul(k2.pauli);
                let base = (c1 * c2).mul_i_pow(phase);
                if base.is_zero() {
                    continue;
                }
                for (g, q, s) in normal_order(k1.mom, &k2.mono) {
                    let key = TermPos {
                        mono: k1.mono.mul(&g),
                        pauli,
                        mom: [
                            q[0] + k2.mom[0],
                            q[1] + k2.mom[1],
                            q[2] + k2.mom[2],
                        ],
                    };
                    insert_reduced(&mut terms, key, &base * &s);
                }
            }
        }
        OperatorExpr { terms }
    }
}

impl Add for OperatorExpr {
    type Output = OperatorExpr;
    fn add(self, rhs: OperatorExpr) -> OperatorExpr {
        &self + &rhs
    }
}

impl Sub for OperatorExpr {
    type Output = OperatorExpr;
    fn sub(self, rhs: OperatorExpr) -> OperatorExpr {
        &self - &rhs
    }
}

impl Mul for OperatorExpr {
    type Output = OperatorExpr;
    fn mul(self, rhs: OperatorExpr) -> OperatorExpr {
        &self * &rhs
    }
}

impl Neg for OperatorExpr {
    type Output = OperatorExpr;
    fn neg(self) -> OperatorExpr {
        -&self
    }
}
