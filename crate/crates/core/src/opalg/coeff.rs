//! Coefficient ring of the three-dimensional algebra.
//!
//! A monomial is `x1^a1 x2^a2 x3^a3 * r^k * m^e0 alpha^e1 q^e2 E^e3` with
//! `a` in N^3 and `k`, `e` in Z. Stored operators keep every monomial reduced
//! so that nonnegative `r` exponents lie in `{0, 1}`; the defining relation
//! `r^2 = x1^2 + x2^2 + x3^2` is applied eagerly on exponents >= 2.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::One;

use crate::scalar::{Rational, Scalar};

/// Central invertible parameters of the 3D ring, in storage order.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Param3D {
    Mass,
    Alpha,
    Charge,
    Energy,
}

impl Param3D {
    pub const ALL: [Param3D; 4] = [
        Param3D::Mass,
        Param3D::Alpha,
        Param3D::Charge,
        Param3D::Energy,
    ];

    pub fn index(self) -> usize {
        match self {
            Param3D::Mass => 0,
            Param3D::Alpha => 1,
            Param3D::Charge => 2,
            Param3D::Energy => 3,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Param3D::Mass => "m",
            Param3D::Alpha => "alpha",
            Param3D::Charge => "q",
            Param3D::Energy => "E",
        }
    }
}

/// A single coefficient monomial.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct Monomial3D {
    /// Exponents of `x1, x2, x3`.
    pub x: [u32; 3],
    /// Laurent exponent of `r`.
    pub r: i32,
    /// Laurent exponents of `m, alpha, q, E`.
    pub par: [i32; 4],
}

impl Monomial3D {
    pub fn one() -> Self {
        Monomial3D {
            x: [0; 3],
            r: 0,
            par: [0; 4],
        }
    }

    pub fn x_axis(a: usize) -> Self {
        let mut m = Monomial3D::one();
        m.x[a - 1] = 1;
        m
    }

    pub fn r_pow(k: i32) -> Self {
        let mut m = Monomial3D::one();
        m.r = k;
        m
    }

    pub fn param(p: Param3D, k: i32) -> Self {
        let mut m = Monomial3D::one();
        m.par[p.index()] = k;
        m
    }

    pub fn is_one(&self) -> bool {
        self.x == [0; 3] && self.r == 0 && self.par == [0; 4]
    }

    /// Exponent-wise product.
    pub fn mul(&self, rhs: &Monomial3D) -> Monomial3D {
        Monomial3D {
            x: [
                self.x[0] + rhs.x[0],
                self.x[1] + rhs.x[1],
                self.x[2] + rhs.x[2],
            ],
            r: self.r + rhs.r,
            par: [
                self.par[0] + rhs.par[0],
                self.par[1] + rhs.par[1],
                self.par[2] + rhs.par[2],
                self.par[3] + rhs.par[3],
            ],
        }
    }

    /// Partial derivative with respect to `x_a` (`a` in `1..=3`).
    ///
    /// Returns up to two monomials with rational weights, using
    /// `d r^k / d x_a = k x_a r^(k-2)`.
    pub fn derivative(&self, a: usize) -> Vec<(Monomial3D, Rational)> {
        let ax = a - 1;
        let mut out = Vec::with_capacity(2);
        if self.x[ax] > 0 {
            let mut m = self.clone();
            m.x[ax] -= 1;
            out.push((m, Rational::from_integer(BigInt::from(self.x[ax]))));
        }
        if self.r != 0 {
            let mut m = self.clone();
            m.x[ax] += 1;
            let k = m.r;
            m.r -= 2;
            out.push((m, Rational::from_integer(BigInt::from(k))));
        }
        out
    }
}

/// Multinomial coefficient `t! / (t1! t2! t3!)`.
fn multinomial(t1: u32, t2: u32, t3: u32) -> BigInt {
    let mut num = BigInt::one();
    let mut k = 0u32;
    for &part in &[t1, t2, t3] {
        for j in 1..=part {
            k += 1;
            num = num * BigInt::from(k) / BigInt::from(j);
        }
    }
    num
}

/// Reduce `key * scalar` with the relation `r^2 = x1^2 + x2^2 + x3^2` until
/// the nonnegative part of the `r` exponent is at most 1, accumulating the
/// expansion into `map`. Entries that cancel to zero are removed.
pub(crate) fn insert_reduced(map: &mut BTreeMap<TermPos, Scalar>, key: TermPos, scalar: Scalar) {
    if scalar.is_zero() {
        return;
    }
    if key.mono.r < 2 {
        accumulate(map, key, scalar);
        return;
    }
    let t = (key.mono.r / 2) as u32;
    let rem = key.mono.r % 2;
    for t1 in 0..=t {
        for t2 in 0..=(t - t1) {
            let t3 = t - t1 - t2;
            let c = multinomial(t1, t2, t3);
            let mut k = key.clone();
            k.mono.x[0] += 2 * t1;
            k.mono.x[1] += 2 * t2;
            k.mono.x[2] += 2 * t3;
            k.mono.r = rem;
            let w = &scalar * &Scalar::from_rational(Rational::from_integer(c));
            accumulate(map, k, w);
        }
    }
}

fn accumulate(map: &mut BTreeMap<TermPos, Scalar>, key: TermPos, scalar: Scalar) {
    use alloc::collections::btree_map::Entry;
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

/// Full term key of an operator: coefficient monomial, Pauli basis element
/// and normally ordered momentum monomial. The derived order (monomial, then
/// Pauli, then momentum) fixes the printing order.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct TermPos {
    pub mono: Monomial3D,
    pub pauli: super::Pauli,
    pub mom: [u32; 3],
}

impl TermPos {
    pub fn scalar_key() -> Self {
        TermPos {
            mono: Monomial3D::one(),
            pauli: super::Pauli::I,
            mom: [0; 3],
        }
    }
}

/// An element of the coefficient ring: a finite sum of monomials with
/// Gaussian-rational weights, kept in reduced form with no zero terms.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Coefficient3D {
    terms: BTreeMap<Monomial3D, Scalar>,
}

impl Coefficient3D {
    pub fn zero() -> Self {
        Coefficient3D::default()
    }

    pub fn from_monomial(mono: Monomial3D, scalar: Scalar) -> Self {
        let mut c = Coefficient3D::zero();
        c.add_term(mono, scalar);
        c
    }

    pub fn add_term(&mut self, mono: Monomial3D, scalar: Scalar) {
        // Route through the operator-level reduction with trivial Pauli and
        // momentum parts so the ring relation is applied uniformly.
        let mut tmp = BTreeMap::new();
        insert_reduced(
            &mut tmp,
            TermPos {
                mono,
                pauli: super::Pauli::I,
                mom: [0; 3],
            },
            scalar,
        );
        for (k, v) in tmp {
            accumulate_mono(&mut self.terms, k.mono, v);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial3D, &Scalar)> {
        self.terms.iter()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }
}

fn accumulate_mono(map: &mut BTreeMap<Monomial3D, Scalar>, key: Monomial3D, scalar: Scalar) {
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
