//! Property tests for the operator algebra: ring axioms, canonical-form
//! idempotence, the derivation property of momenta, zero-test soundness and
//! printer/parser round trips, all on randomly generated operators.

use focksym_core::opalg::{
    parse_radial, parse_three_d, Monomial3D, OperatorExpr, Pauli, Param3D, RadialOp,
};
use focksym_core::scalar::{ratio, Scalar};
use proptest::prelude::*;

fn arb_scalar() -> impl Strategy<Value = Scalar> {
    (-4i64..=4, 1i64..=3, -4i64..=4, 1i64..=3)
        .prop_map(|(rn, rd, in_, id)| Scalar::new(ratio(rn, rd), ratio(in_, id)))
}

fn arb_monomial() -> impl Strategy<Value = Monomial3D> {
    (
        prop::array::uniform3(0u32..=2),
        -2i32..=1,
        prop::array::uniform4(-1i32..=1),
    )
        .prop_map(|(x, r, par)| {
            let mut m = Monomial3D::one();
            m.x = x;
            m.r = r;
            m.par = par;
            m
        })
}

fn arb_pauli() -> impl Strategy<Value = Pauli> {
    prop_oneof![
        Just(Pauli::I),
        Just(Pauli::S1),
        Just(Pauli::S2),
        Just(Pauli::S3)
    ]
}

fn arb_term() -> impl Strategy<Value = OperatorExpr> {
    (
        arb_monomial(),
        arb_pauli(),
        prop::array::uniform3(0u32..=1),
        arb_scalar(),
    )
        .prop_map(|(mono, pauli, mom, s)| OperatorExpr::from_term(mono, pauli, mom, s))
}

fn arb_operator() -> impl Strategy<Value = OperatorExpr> {
    prop::collection::vec(arb_term(), 1..=4).prop_map(|terms| {
        terms
            .into_iter()
            .fold(OperatorExpr::zero(), |acc, t| &acc + &t)
    })
}

/// Momentum-free random coefficient (an element of the coefficient ring).
fn arb_coefficient() -> impl Strategy<Value = OperatorExpr> {
    prop::collection::vec((arb_monomial(), arb_scalar()), 1..=4).prop_map(|terms| {
        terms.into_iter().fold(OperatorExpr::zero(), |acc, (m, s)| {
            &acc + &OperatorExpr::from_term(m, Pauli::I, [0; 3], s)
        })
    })
}

fn arb_radial() -> impl Strategy<Value = RadialOp> {
    prop::collection::vec(
        ((-3i32..=3), prop::array::uniform2(-1i32..=1), arb_pauli(), 0u32..=2, arb_scalar()),
        1..=5,
    )
    .prop_map(|terms| {
        terms
            .into_iter()
            .fold(RadialOp::zero(), |acc, (r, par, pauli, dr, s)| {
                use focksym_core::opalg::RadialParam;
                let mut t = RadialOp::r_pow(r).scale(&s);
                t = &t * &RadialOp::param(RadialParam::Alpha, par[0]);
                t = &t * &RadialOp::param(RadialParam::Mass, par[1]);
                t = &t
                    * &match pauli {
                        Pauli::I => RadialOp::one(),
                        p => RadialOp::sigma(p.index()),
                    };
                for _ in 0..dr {
                    t = &t * &RadialOp::d_r();
                }
                &acc + &t
            })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn canonicalization_is_idempotent(a in arb_operator()) {
        let once = a.canonicalize();
        let twice = once.canonicalize();
        prop_assert_eq!(once.terms(), twice.terms());
        prop_assert_eq!(a.terms(), once.terms());
    }

    #[test]
    fn multiplication_is_associative(a in arb_operator(), b in arb_operator(), c in arb_operator()) {
        let left = &(&a * &b) * &c;
        let right = &a * &(&b * &c);
        prop_assert!((&left - &right).is_zero());
    }

    #[test]
    fn multiplication_distributes(a in arb_operator(), b in arb_operator(), c in arb_operator()) {
        let left = &a * &(&b + &c);
        let right = &(&a * &b) + &(&a * &c);
        prop_assert!((&left - &right).is_zero());
    }

    #[test]
    fn momenta_act_as_derivations(f in arb_coefficient(), g in arb_coefficient()) {
        for axis in 1..=3 {
            let p = OperatorExpr::p(axis);
            let fg = &f * &g;
            let lhs = p.commutator(&fg);
            let rhs = &(&p.commutator(&f) * &g) + &(&f * &p.commutator(&g));
            prop_assert!((&lhs - &rhs).is_zero());
        }
    }

    #[test]
    fn zero_test_soundness(a in arb_operator()) {
        prop_assert!((&a - &a).is_zero());
        prop_assert!(!(&a.scale(&Scalar::zero()) + &OperatorExpr::one()).is_zero());
    }

    #[test]
    fn adjoint_is_an_involution(a in arb_operator()) {
        prop_assert!((&a.adjoint().adjoint() - &a).is_zero());
    }

    #[test]
    fn adjoint_reverses_products(a in arb_operator(), b in arb_operator()) {
        let lhs = (&a * &b).adjoint();
        let rhs = &b.adjoint() * &a.adjoint();
        prop_assert!((&lhs - &rhs).is_zero());
    }

    #[test]
    fn print_parse_round_trip(a in arb_operator()) {
        let printed = format!("{a}");
        let reparsed = parse_three_d(&printed).unwrap();
        prop_assert_eq!(a.terms(), reparsed.terms(), "printed: {}", printed);
    }

    #[test]
    fn radial_ring_axioms(a in arb_radial(), b in arb_radial(), c in arb_radial()) {
        let assoc = &(&(&a * &b) * &c) - &(&a * &(&b * &c));
        prop_assert!(assoc.is_zero());
        let dist = &(&a * &(&b + &c)) - &(&(&a * &b) + &(&a * &c));
        prop_assert!(dist.is_zero());
    }

    #[test]
    fn radial_print_parse_round_trip(a in arb_radial()) {
        let printed = format!("{a}");
        let j = ratio(1, 2);
        let reparsed = parse_radial(&printed, &j).unwrap();
        prop_assert_eq!(a.terms(), reparsed.terms(), "printed: {}", printed);
    }

    #[test]
    fn commutator_antisymmetry(a in arb_operator(), b in arb_operator()) {
        let ab = a.commutator(&b);
        let ba = b.commutator(&a);
        prop_assert!((&ab + &ba).is_zero());
    }
}

#[test]
fn ccr_completeness() {
    for a in 1..=3 {
        for b in 1..=3 {
            let c = OperatorExpr::x(a).commutator(&OperatorExpr::p(b));
            if a == b {
                assert_eq!(c, OperatorExpr::imaginary());
            } else {
                assert!(c.is_zero());
            }
        }
    }
}

#[test]
fn pauli_closure() {
    for a in 1..=3 {
        for b in 1..=3 {
            let anti = &(&OperatorExpr::sigma(a) * &OperatorExpr::sigma(b))
                + &(&OperatorExpr::sigma(b) * &OperatorExpr::sigma(a));
            let expected = if a == b {
                OperatorExpr::scalar(Scalar::from_int(2))
            } else {
                OperatorExpr::zero()
            };
            assert_eq!(anti, expected);
        }
    }
}

#[test]
fn parameters_are_central() {
    for p in Param3D::ALL {
        let op = OperatorExpr::param(p, -1);
        for other in [OperatorExpr::x(1), OperatorExpr::p(2), OperatorExpr::sigma(3)] {
            assert!(op.commutator(&other).is_zero());
        }
    }
}
