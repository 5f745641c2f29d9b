mod common;

use common::{pauli, sized};
use num_complex::Complex64;
use pauli_ramsey::f2::twisted_dot;
use pauli_ramsey::PauliOperator;
use proptest::prelude::*;

fn pair(n: usize) -> impl Strategy<Value = (PauliOperator, PauliOperator)> {
    (pauli(n), pauli(n))
}

fn nonzero(c: Complex64) -> bool {
    c.norm() > 0.5
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn multiplication_matches_dense((_, (g, h)) in sized(1, 3, pair)) {
        let prod = g.multiply(&h).unwrap();
        prop_assert_eq!(prod.to_dense().unwrap(), g.to_dense().unwrap() * h.to_dense().unwrap());
        prop_assert_eq!(prod.check_vector(), g.check_vector() + h.check_vector());
    }

    #[test]
    fn adjoint_matches_dense((_, g) in sized(1, 3, pauli)) {
        let a = g.adjoint();
        prop_assert_eq!(a.to_dense().unwrap(), g.to_dense().unwrap().adjoint());
        prop_assert_eq!(a.check_vector(), g.check_vector());
        let id = a * g;
        prop_assert!(id.is_scalar());
        prop_assert_eq!(id.phase(), 0);
    }

    #[test]
    fn predicates_match_dense((_, (g, h)) in sized(1, 3, pair)) {
        let (dg, dh) = (g.to_dense().unwrap(), h.to_dense().unwrap());
        let commute = &dg * &dh == &dh * &dg;
        prop_assert_eq!(g.commutes(&h).unwrap(), commute);
        prop_assert_eq!(commute, !twisted_dot(&g.check_vector(), &h.check_vector()).unwrap());
        prop_assert_eq!(g.is_hermitian(), dg == dg.adjoint());
    }

    #[test]
    fn trace_lemmas((_, (g, h)) in sized(1, 3, pair)) {
        let (dg, dh) = (g.to_dense().unwrap(), h.to_dense().unwrap());
        prop_assert_eq!(nonzero(dg.trace()), g.is_scalar());
        prop_assert_eq!(nonzero((&dg * &dh).trace()), g.check_vector() == h.check_vector());
    }

    #[test]
    fn trace_similar_on_equal_vectors((_, (g, k)) in sized(1, 3, |n| (pauli(n), 0u8..4))) {
        let h = PauliOperator::new(k, g.check_vector());
        prop_assert!(nonzero((g.to_dense().unwrap() * h.to_dense().unwrap()).trace()));
    }

    #[test]
    fn multiplication_is_associative((_, (f, g, h)) in sized(1, 4, |n| (pauli(n), pauli(n), pauli(n)))) {
        prop_assert_eq!((f * g) * h, f * (g * h));
    }

    #[test]
    fn format_parse_round_trip((_, g) in sized(1, 6, pauli)) {
        let text = g.to_string();
        prop_assert_eq!(text.parse::<PauliOperator>().unwrap(), g);
    }

    #[test]
    fn tensor_matches_kronecker((_, (g, h)) in sized(1, 2, pair)) {
        let t = g.tensor(&h).unwrap();
        prop_assert_eq!(t.to_dense().unwrap(), g.to_dense().unwrap().kronecker(&h.to_dense().unwrap()));
    }

    #[test]
    fn hermitian_representative((_, g) in sized(1, 4, pauli)) {
        let rep = PauliOperator::from_check_vector(g.check_vector());
        prop_assert!(rep.is_hermitian());
        prop_assert!(!rep.to_string().starts_with(['-', 'i']));
    }
}
