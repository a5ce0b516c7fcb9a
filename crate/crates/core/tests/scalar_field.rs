mod common;

use awdaha::parse::parse_scalar;
use awdaha::QScalar;
use common::{nonzero_scalar, scalar};
use proptest::prelude::*;

fn s(text: &str) -> QScalar {
    parse_scalar(text).unwrap()
}

#[test]
fn quotient_of_cyclotomic_differences() {
    // (q^2 + 1)(q^2 - 1) expands to q^4 - 1
    let num = s("q^4 - 1");
    let den = s("q^2 - 1");
    let expanded = s("q^2 + 1").mul(&den);
    assert_eq!(expanded, num);
    assert_eq!(num.div(&den).unwrap(), s("q^2 + 1"));
}

#[test]
fn inverting_q_on_a_scaled_difference() {
    // q (q^2 - q^-2) = q^3 - q^-1  ->  q^-3 - q = -(q^4 - 1)/q^3
    let x = s("q*(q^2 - q^-2)");
    let hand = QScalar::laurent(&[(1, -3), (-1, 1)]);
    assert_eq!(x.invert_q(), hand);
    assert_eq!(x.invert_q(), s("-(q^4 - 1)/q^3"));
}

#[test]
fn symmetric_scalars_are_fixed() {
    assert_eq!(s("q + q^-1").invert_q(), s("q + q^-1"));
    assert_eq!(s("q^2").invert_q(), s("1/q^2"));
}

#[test]
fn canonical_denominator_is_monic_up_to_sign() {
    let x = s("(2*q + 2)/(-4*q^2 - 4*q)");
    assert_eq!(x, s("-1/(2*q)"));
    assert!(x.denominator().lead() > 0.into());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn addition_and_multiplication_are_associative(a in scalar(), b in scalar(), c in scalar()) {
        prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
    }

    #[test]
    fn operations_commute(a in scalar(), b in scalar()) {
        prop_assert_eq!(a.add(&b), b.add(&a));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
    }

    #[test]
    fn multiplication_distributes(a in scalar(), b in scalar(), c in scalar()) {
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
    }

    #[test]
    fn nonzero_elements_are_invertible(a in nonzero_scalar()) {
        prop_assert!(a.mul(&a.inv().unwrap()).is_one());
    }

    #[test]
    fn zero_difference_iff_equal(a in scalar(), b in scalar()) {
        prop_assert_eq!(a.sub(&b).is_zero(), a == b);
        prop_assert!(a.sub(&a).is_zero());
    }

    #[test]
    fn invert_q_is_an_involution(a in scalar()) {
        prop_assert_eq!(a.invert_q().invert_q(), a);
    }

    #[test]
    fn invert_q_is_a_field_homomorphism(a in scalar(), b in scalar()) {
        prop_assert_eq!(a.mul(&b).invert_q(), a.invert_q().mul(&b.invert_q()));
        prop_assert_eq!(a.add(&b).invert_q(), a.invert_q().add(&b.invert_q()));
    }

    #[test]
    fn display_parses_back(a in scalar()) {
        prop_assert_eq!(parse_scalar(&a.to_string()).unwrap(), a);
    }
}
