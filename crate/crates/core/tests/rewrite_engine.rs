mod common;

use awdaha::algebras::{delta_q, hhat_q, Algebra};
use awdaha::parse::parse_word;
use awdaha::{NCPoly, QScalar, Word};
use common::{laurent, poly};
use proptest::prelude::*;

fn word(alg: &Algebra, text: &str) -> Word {
    parse_word(text, alg.alphabet()).unwrap()
}

#[test]
fn single_step_reductions() {
    let d = delta_q();
    assert_eq!(
        d.eval("B*A").unwrap(),
        d.parse("q^2*A*B + q*(q^2 - q^-2)*C - q*(q - q^-1)*gamma").unwrap()
    );
    let h = hhat_q();
    assert_eq!(h.eval("t0*X").unwrap(), h.parse("X^-1*t0 + X*T0 - T3").unwrap());
}

#[test]
fn irreducible_words_are_fixed() {
    for alg in [delta_q(), hhat_q()] {
        let one = NCPoly::one(alg.alphabet());
        assert_eq!(alg.normalize(&one).unwrap(), one);
        for w in alg.enumerate_basis(3) {
            let p = NCPoly::word(alg.alphabet(), w);
            assert_eq!(alg.normalize(&p).unwrap(), p);
        }
    }
}

#[test]
fn irreducibility_examples() {
    let d = delta_q();
    assert!(d.system().is_irreducible(&word(&d, "A*C*B")));
    assert!(!d.system().is_irreducible(&word(&d, "C*C")));
    let h = hhat_q();
    assert!(h.system().is_irreducible(&word(&h, "Y*X*t0*T0")));
}

#[test]
fn every_rule_holds_in_its_algebra() {
    for alg in [delta_q(), hhat_q()] {
        for r in alg.system().rules() {
            let lhs = NCPoly::word(alg.alphabet(), r.lhs_word());
            let diff = lhs.try_sub(&r.rhs).unwrap();
            assert!(alg.normalize(&diff).unwrap().is_zero());
        }
    }
}

#[test]
fn listed_overlaps_are_found() {
    let d = delta_q();
    let overlaps = d.system().overlaps();
    for w in ["B*C*A", "B*C*C", "C*C*A"] {
        assert!(overlaps.contains(&word(&d, w)), "{w}");
    }
    let h = hhat_q();
    let overlaps = h.system().overlaps();
    for (w, _) in awdaha::expected::HHAT_RESOLUTIONS {
        assert!(overlaps.contains(&word(&h, w)), "{w}");
    }
}

#[test]
fn shipped_systems_are_confluent() {
    assert!(delta_q().system().check_confluence().unwrap().all_resolved());
    assert!(hhat_q().system().check_confluence().unwrap().all_resolved());
}

#[test]
fn perturbed_coefficient_breaks_confluence() {
    let h = hhat_q();
    let xy = [h.id("X"), h.id("Y")];
    let rule = h.system().rule_for(xy[0], xy[1]).unwrap();
    let q2 = QScalar::q_pow(2);
    let terms = rule
        .rhs
        .terms()
        .iter()
        .map(|(w, c)| (w.clone(), if *c == q2 { QScalar::q_pow(3) } else { c.clone() }))
        .collect();
    let mutated = h.system().with_rule(xy, NCPoly::from_terms(h.alphabet(), terms)).unwrap();
    let report = mutated.check_confluence().unwrap();
    assert!(report.unresolved().count() > 0);
}

#[test]
fn fuel_limit_is_reported() {
    let h = hhat_q();
    let p = h.parse("X^-1*Y^-1*t0*X*Y").unwrap();
    let err = h.system().normalize_with_fuel(&p, 2).unwrap_err();
    assert!(matches!(err, awdaha::Error::NonTermination { fuel: 2, .. }));
}

#[test]
fn spec_export_round_trips() {
    for alg in [delta_q(), hhat_q()] {
        let text = awdaha::specfile::export(alg.system());
        let back = awdaha::specfile::import(&text).unwrap();
        assert_eq!(back.rules().len(), alg.system().rules().len());
        assert!(back.check_confluence().unwrap().all_resolved());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn normalization_is_idempotent(p in poly(hhat_q(), 4, 4)) {
        let h = hhat_q();
        let n = h.normalize(&p).unwrap();
        prop_assert_eq!(h.normalize(&n).unwrap(), n);
    }

    #[test]
    fn normalization_is_linear(
        p in poly(delta_q(), 4, 3), r in poly(delta_q(), 4, 3), a in laurent(), b in laurent()
    ) {
        let d = delta_q();
        let combined = p.scale(&a).try_add(&r.scale(&b)).unwrap();
        let separate = d.normalize(&p).unwrap().scale(&a).try_add(&d.normalize(&r).unwrap().scale(&b)).unwrap();
        prop_assert_eq!(d.normalize(&combined).unwrap(), separate);
    }

    #[test]
    fn normal_forms_use_only_irreducible_words(p in poly(hhat_q(), 4, 4)) {
        let h = hhat_q();
        let n = h.normalize(&p).unwrap();
        prop_assert!(n.terms().keys().all(|w| h.system().is_irreducible(w)));
    }

    #[test]
    fn normal_form_multiplication_is_associative(
        a in poly(delta_q(), 2, 2), b in poly(delta_q(), 2, 2), c in poly(delta_q(), 2, 2)
    ) {
        let d = delta_q();
        let left = d.mul(&d.mul(&a, &b).unwrap(), &c).unwrap();
        let right = d.mul(&a, &d.mul(&b, &c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }
}
