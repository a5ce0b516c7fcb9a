mod common;

use awdaha::algebras::{delta_q, hhat_q};
use awdaha::coeff_matrix::{
    center_domain_size, center_kernel, centralizer_relation_residuals, commutes_with_t0, is_central, project_pi,
    t0_commutator, verify_centralizer_presentation, CenterBounds, CoeffMatrix, Nu,
};
use awdaha::morphisms::psi;
use awdaha::tbasis::TElement;
use awdaha::NCPoly;
use common::poly;
use proptest::prelude::*;

fn matrix(text: &str) -> CoeffMatrix {
    CoeffMatrix::of(&hhat_q().eval(text).unwrap()).unwrap()
}

#[test]
fn matrices_of_small_elements() {
    for (name, entries) in awdaha::expected::SMALL_MATRICES {
        assert_eq!(matrix(name), CoeffMatrix::from_entries(entries).unwrap(), "{name}");
    }
    assert_eq!(matrix("1"), CoeffMatrix::from_entries(&[(0, 0, "1")]).unwrap());
    assert!(matrix("0").is_zero());
}

#[test]
fn xc_entry_after_basis_conversion() {
    let m = matrix("X*C");
    assert_eq!(m.get(-1, 0), TElement::parse("-q^-1*T3^2 - q^-3*t0^2 - q^-3").unwrap());
}

#[test]
fn triples_and_table() {
    let m = matrix("A");
    let t = m.triples();
    assert_eq!(t, vec![(-1, 0, "1".to_string()), (1, 0, "1".to_string())]);
    let table = m.to_table();
    assert!(table.lines().next().unwrap().contains('1'));
    assert_eq!(m.to_json().as_array().unwrap().len(), 2);
}

#[test]
fn casimir_combination_vanishes() {
    let mut total = CoeffMatrix::default();
    for term in &awdaha::expected::CASIMIR_COMBINATION {
        let m = matrix(term.element);
        assert_eq!(m, CoeffMatrix::from_entries(term.entries).unwrap());
        total = total.add(&m.times(&TElement::parse(term.factor).unwrap()));
    }
    assert!(total.is_zero(), "{}", total.to_table());
}

#[test]
fn projections_of_c_and_a() {
    let h = hhat_q();
    let c = h.derived("C").unwrap();
    assert_eq!(project_pi(Nu::YX, &c).unwrap(), h.eval("q^-1*Y*X*(1 - t0^-2)").unwrap());
    assert_eq!(
        project_pi(Nu::One, &c).unwrap(),
        h.eval("q^-1*gamma - q^-2*t0*T2 - q^-1*A*t0^-1*T3").unwrap()
    );
    assert!(project_pi(Nu::X, &h.derived("A").unwrap()).unwrap().is_zero());
}

#[test]
fn commuting_with_t0() {
    let h = hhat_q();
    let p = psi().unwrap();
    assert!(commutes_with_t0(&p.apply(&delta_q().letter("C")).unwrap()).unwrap());
    assert!(commutes_with_t0(&h.letter("T1")).unwrap());
    assert!(!commutes_with_t0(&h.letter("X")).unwrap());
    assert_eq!(t0_commutator(&h.letter("X")).unwrap(), h.eval("X^-1*t0 + X*T0 - T3 - X*t0").unwrap());
}

#[test]
fn centralizer_presentation() {
    for r in verify_centralizer_presentation().unwrap() {
        assert!(r.residual.is_zero(), "{}", r.name);
    }
    let mutated = centralizer_relation_residuals("A", "X", "C").unwrap();
    assert!(!mutated[0].residual.is_zero());
}

#[test]
fn center_windows() {
    let h = hhat_q();
    let k0 = center_kernel(CenterBounds { n: 1, m: 0 }).unwrap();
    assert_eq!(k0, vec![NCPoly::one(h.alphabet())]);
    assert_eq!(center_domain_size(CenterBounds { n: 2, m: 1 }), 25 * 2 * 5);
    // B commutes with t0 but not with Y
    let b = h.derived("B").unwrap();
    assert!(commutes_with_t0(&b).unwrap());
    assert!(!h.eval("Y*(X + X^-1) - (X + X^-1)*Y").unwrap().is_zero());
    assert!(!is_central(&h, &b).unwrap());
}

#[test]
fn central_elements() {
    let d = delta_q();
    let h = hhat_q();
    assert!(is_central(&d, &d.letter("Omega")).unwrap());
    assert!(is_central(&h, &h.letter("T2")).unwrap());
    assert!(!is_central(&d, &d.letter("A")).unwrap());
    assert!(!d.eval("B*A - A*B").unwrap().is_zero());
}

fn element() -> impl Strategy<Value = NCPoly> {
    poly(hhat_q(), 3, 3).prop_map(|p| hhat_q().normalize(&p).unwrap())
}

fn t_element() -> impl Strategy<Value = NCPoly> {
    prop::sample::select(vec!["T1", "t0", "T0 - t0", "q*T2*T3 + 1", "t0*T3 - T0"])
        .prop_map(|s| hhat_q().eval(s).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn unfolding_the_matrix_restores_the_element(h in element()) {
        prop_assert_eq!(CoeffMatrix::of(&h).unwrap().unfold().unwrap(), h);
    }

    #[test]
    fn projections_sum_to_the_element(h in element()) {
        let alg = hhat_q();
        let mut sum = NCPoly::zero(alg.alphabet());
        for nu in Nu::ALL {
            sum = sum.try_add(&project_pi(nu, &h).unwrap()).unwrap();
        }
        prop_assert_eq!(alg.normalize(&sum).unwrap(), h);
    }

    #[test]
    fn projections_are_bimodule_maps(h in element(), v in t_element()) {
        let alg = hhat_q();
        let a = alg.derived("A").unwrap();
        let b = alg.derived("B").unwrap();
        for nu in Nu::ALL {
            let p = project_pi(nu, &h).unwrap();
            prop_assert_eq!(project_pi(nu, &alg.mul(&a, &h).unwrap()).unwrap(), alg.mul(&a, &p).unwrap());
            prop_assert_eq!(project_pi(nu, &alg.mul(&h, &b).unwrap()).unwrap(), alg.mul(&p, &b).unwrap());
            prop_assert_eq!(project_pi(nu, &alg.mul(&h, &v).unwrap()).unwrap(), alg.mul(&p, &v).unwrap());
        }
    }
}
