mod common;

use std::collections::HashMap;

use awdaha::algebras::{delta_q, hhat_q};
use awdaha::{Alphabet, GenId, NCPoly, QScalar};
use common::poly;
use proptest::prelude::*;

#[test]
fn noncommutative_expansion() {
    let d = delta_q();
    let a = d.letter("A");
    let b = d.letter("B");
    let p = a.try_add(&b).unwrap().try_mul(&a.try_sub(&b).unwrap()).unwrap();
    // A*A - A*B + B*A - B*B, with BA kept distinct from AB
    assert_eq!(p, d.parse("A*A + B*A - A*B - B*B").unwrap());
    assert_ne!(p, d.parse("A*A - B*B").unwrap());
}

#[test]
fn reversal_of_words() {
    let d = delta_q();
    assert_eq!(d.parse("A*C*B").unwrap().reverse(), d.parse("B*C*A").unwrap());
    let short = d.parse("3*A + q").unwrap();
    assert_eq!(short.reverse(), short);
}

#[test]
fn substitution_of_letters() {
    let d = delta_q();
    let h = hhat_q();
    let image = h.parse("Y + Y^-1").unwrap();
    let a = d.letter("A");
    let id_a = d.id("A");
    let got = a.substitute(h.alphabet(), |g| (g == id_a).then_some(&image), false).unwrap();
    assert_eq!(got, image);
    let one = NCPoly::one(d.alphabet());
    let got = one.substitute(h.alphabet(), |_| None, false).unwrap();
    assert_eq!(got, NCPoly::one(h.alphabet()));
    let (ga, gb) = (d.id("A"), d.id("B"));
    let (pa, pb) = (d.letter("A"), d.letter("B"));
    let swapped = d
        .parse("A*B")
        .unwrap()
        .substitute(d.alphabet(), |g| if g == ga { Some(&pb) } else if g == gb { Some(&pa) } else { None }, false)
        .unwrap();
    assert_eq!(swapped, d.parse("B*A").unwrap());
}

#[test]
fn missing_image_is_reported() {
    let d = delta_q();
    let err = d.letter("C").substitute(d.alphabet(), |_| None, false).unwrap_err();
    assert!(matches!(err, awdaha::Error::MissingImage(name) if name == "C"));
}

#[test]
fn duplicate_generator_names_are_rejected() {
    assert!(Alphabet::new(&["a", "b", "a"]).is_err());
}

fn images_for(alg: &awdaha::algebras::Algebra) -> HashMap<GenId, NCPoly> {
    // Each letter goes to a two-term element built from other letters.
    let n = alg.alphabet().len() as GenId;
    (0..n)
        .map(|g| {
            let a = NCPoly::letter(alg.alphabet(), (g + 1) % n);
            let b = NCPoly::monomial(alg.alphabet(), awdaha::Word(vec![g, (g + 2) % n]), QScalar::q());
            (g, a.try_add(&b).unwrap())
        })
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn multiplication_is_associative_and_unital(
        a in poly(delta_q(), 2, 3), b in poly(delta_q(), 2, 3), c in poly(delta_q(), 2, 3)
    ) {
        prop_assert_eq!(a.try_mul(&b).unwrap().try_mul(&c).unwrap(), a.try_mul(&b.try_mul(&c).unwrap()).unwrap());
        let one = NCPoly::one(a.alphabet());
        prop_assert_eq!(one.try_mul(&a).unwrap(), a.clone());
        prop_assert_eq!(a.try_mul(&one).unwrap(), a);
    }

    #[test]
    fn reverse_is_an_antihomomorphism(a in poly(hhat_q(), 3, 3), b in poly(hhat_q(), 3, 3)) {
        prop_assert_eq!(a.try_mul(&b).unwrap().reverse(), b.reverse().try_mul(&a.reverse()).unwrap());
    }

    #[test]
    fn substitution_is_multiplicative(a in poly(delta_q(), 2, 3), b in poly(delta_q(), 2, 3)) {
        let d = delta_q();
        let imgs = images_for(&d);
        let sub = |p: &NCPoly| p.substitute(d.alphabet(), |g| imgs.get(&g), false).unwrap();
        prop_assert_eq!(sub(&a.try_mul(&b).unwrap()), sub(&a).try_mul(&sub(&b)).unwrap());
    }

    #[test]
    fn printed_form_parses_back(p in poly(hhat_q(), 3, 4)) {
        let h = hhat_q();
        let once = h.parse(&p.to_string()).unwrap();
        prop_assert_eq!(&once, &p);
        prop_assert_eq!(h.parse(&once.to_string()).unwrap(), once);
    }
}
