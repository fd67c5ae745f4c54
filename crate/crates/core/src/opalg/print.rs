//! Pretty-printer emitting the expression grammar. Parsing the printed form
//! reproduces the term map exactly.

use alloc::fmt;
use alloc::string::String;
use alloc::vec::Vec;


use super::coeff::Param3D;
use super::expr::OperatorExpr;
use super::pauli::Pauli;
use super::radial::{RadialOp, RadialParam};
use crate::scalar::Scalar;

fn push_pow(out: &mut Vec<String>, name: &str, exp: i64) {
    if exp == 0 {
        return;
    }
    if exp == 1 {
        out.push(String::from(name));
    } else {
        out.push(alloc::format!("{name}^{exp}"));
    }
}

fn push_pauli(out: &mut Vec<String>, pauli: Pauli) {
    if pauli != Pauli::I {
        out.push(alloc::format!("s{}", pauli.index()));
    }
}

/// Render `scalar * factors` with the sign pulled out; returns (is_negative, body).
fn render_term(scalar: &Scalar, factors: Vec<String>) -> (bool, String) {
    let neg = scalar.is_display_negative();
    let mag = if neg { -scalar } else { scalar.clone() };
    let coeff = alloc::format!("{mag}");
    let body = if factors.is_empty() {
        coeff
    } else if mag == Scalar::one() {
        factors.join("*")
    } else {
        alloc::format!("{}*{}", coeff, factors.join("*"))
    };
    (neg, body)
}

fn join_terms(parts: Vec<(bool, String)>) -> String {
    let mut s = String::new();
    for (i, (neg, body)) in parts.into_iter().enumerate() {
        if i == 0 {
            if neg {
                s.push('-');
            }
        } else if neg {
            s.push_str(" - ");
        } else {
            s.push_str(" + ");
        }
        s.push_str(&body);
    }
    s
}

impl fmt::Display for OperatorExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        for (key, scalar) in self.terms() {
            let mut factors = Vec::new();
            for a in 0..3 {
                push_pow(&mut factors, &alloc::format!("x{}", a + 1), key.mono.x[a] as i64);
            }
            push_pow(&mut factors, "r", key.mono.r as i64);
            for p in Param3D::ALL {
                push_pow(&mut factors, p.name(), key.mono.par[p.index()] as i64);
            }
            push_pauli(&mut factors, key.pauli);
            for a in 0..3 {
                push_pow(&mut factors, &alloc::format!("p{}", a + 1), key.mom[a] as i64);
            }
            parts.push(render_term(scalar, factors));
        }
        write!(f, "{}", join_terms(parts))
    }
}

impl fmt::Display for RadialOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        for (key, scalar) in self.terms() {
            let mut factors = Vec::new();
            push_pow(&mut factors, "r", key.r as i64);
            for p in [RadialParam::Alpha, RadialParam::Mass] {
                push_pow(&mut factors, p.name(), key.par[p.index()] as i64);
            }
            push_pauli(&mut factors, key.pauli);
            push_pow(&mut factors, "dr", key.dr as i64);
            parts.push(render_term(scalar, factors));
        }
        write!(f, "{}", join_terms(parts))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::ratio;

    #[test]
    fn display_simple_operators() {
        assert_eq!(alloc::format!("{}", OperatorExpr::zero()), "0");
        assert_eq!(alloc::format!("{}", OperatorExpr::one()), "1");
        let l1 = &(&OperatorExpr::x(2) * &OperatorExpr::p(3))
            - &(&OperatorExpr::x(3) * &OperatorExpr::p(2));
        assert_eq!(alloc::format!("{l1}"), "-x3*p2 + x2*p3");
        let c = OperatorExpr::p(1).commutator(&OperatorExpr::x(1));
        assert_eq!(alloc::format!("{c}"), "-i");
    }

    #[test]
    fn display_radial() {
        let w = &(&RadialOp::sigma(3).scale(&Scalar::from_ratio(1, 2))
            - &RadialOp::scalar(Scalar::from_ratio(3, 2)))
            * &RadialOp::r_pow(-1);
        let w = &w + &RadialOp::sigma(1).scale(&Scalar::from_rational(ratio(1, 3)));
        assert_eq!(alloc::format!("{w}"), "-3/2*r^-1 + 1/2*r^-1*s3 + 1/3*s1");
    }
}
