use awdaha::algebras::{algebra, delta_q, fold_laurent, hhat_q, unfold_laurent, Axis, Family};
use awdaha::parse::parse_word;
use awdaha::tbasis::{TBasis, TElement};
use awdaha::verify::{brute_force_irreducible, parameterized_count};
use awdaha::{NCPoly, RuleKind};

#[test]
fn rule_counts() {
    assert_eq!(delta_q().system().rules().len(), 22);
    assert_eq!(hhat_q().system().rules().len(), 39);
    let third = hhat_q().system().rules().iter().filter(|r| r.kind == RuleKind::Third).count();
    // inverse pairs, T_i past X^{+-1}, Y^{+-1}, t0, and T_i T_j with i > j
    assert_eq!(third, 4 + 20 + 6);
}

#[test]
fn selected_rule_right_hand_sides() {
    let d = delta_q();
    let cc = d.system().rule_for(d.id("C"), d.id("C")).unwrap();
    assert_eq!(
        cc.rhs,
        d.parse("q^-2*Omega - q^-3*A*C*B - q^-4*A^2 - q^-4*B^2 + q^-3*A*alpha + q^-3*B*beta + q^-1*C*gamma")
            .unwrap()
    );
    let gb = d.system().rule_for(d.id("gamma"), d.id("beta")).unwrap();
    assert_eq!(gb.rhs, d.parse("beta*gamma").unwrap());

    let h = hhat_q();
    let xy = h.system().rule_for(h.id("X^-1"), h.id("Y^-1")).unwrap();
    assert_eq!(
        xy.rhs,
        h.parse(
            "q^2*Y^-1*X^-1 - q^2*Y^-1*T0*T3 + q^2*Y^-1*t0*T3 + q*T0*T2 - q*t0*T2 - q^2*X*T0*T1 \
             + q^2*X*t0*T1 + q^2*Y^-1*X*T0^2 - q^2*Y^-1*X*t0*T0"
        )
        .unwrap()
    );
    let tt = h.system().rule_for(h.id("t0"), h.id("t0")).unwrap();
    assert_eq!(tt.rhs, h.parse("t0*T0 - 1").unwrap());
}

#[test]
fn derived_elements() {
    let h = hhat_q();
    assert_eq!(h.derived("t2").unwrap(), h.eval("q^-1*Y^-1*t0*X^-1").unwrap());
    assert_eq!(h.derived("gamma").unwrap(), h.parse("q*T0*T2 - (q - q^-1)*t0*T2 + T1*T3").unwrap());
    assert_eq!(h.derived("C0").unwrap(), h.eval("q*(q*Y*X - q^-1*X*Y)").unwrap());
    assert_eq!(
        h.derived("C0").unwrap(),
        h.eval("q*T2*t0 + T3*t1 + q^-1*T0*t2 + T1*t3 - q^-1*T0*T2 - T1*T3").unwrap()
    );
    assert!(h.derived("nonsense").is_err());
}

#[test]
fn theta_parses_before_normalization() {
    let h = hhat_q();
    let raw = h.parse("theta").unwrap();
    assert_eq!(raw, h.parse("Y*X^-1*t0 - Y^-1*X*(T0 - t0) + Y^-1*T3 + X*T1 + q^-1*t0^2*T2").unwrap());
    assert_eq!(h.parse("t0*X").unwrap(), NCPoly::word(h.alphabet(), parse_word("t0*X", h.alphabet()).unwrap()));
}

#[test]
fn casimir_commutes_with_generators() {
    let d = delta_q();
    for g in ["A", "B", "C"] {
        assert!(d.eval(&format!("Omega*{g} - {g}*Omega")).unwrap().is_zero());
    }
}

#[test]
fn cyclic_t_products() {
    let h = hhat_q();
    for w in ["t0*t1*t2*t3", "t1*t2*t3*t0", "t2*t3*t0*t1", "t3*t0*t1*t2"] {
        assert!(h.eval(&format!("{w} - q^-1")).unwrap().is_zero(), "{w}");
    }
}

#[test]
fn basis_counts_match_shape_and_brute_force() {
    for family in [Family::Delta, Family::Hhat] {
        let a = algebra(family, false);
        for len in 0..=4 {
            assert_eq!(a.enumerate_basis_exact(len).len(), parameterized_count(a.basis_shape(), len));
        }
        for len in 0..=3 {
            assert_eq!(a.enumerate_basis_exact(len).len(), brute_force_irreducible(&a, len));
        }
    }
    assert_eq!(hhat_q().enumerate_basis_exact(2).len(), 42);
    assert_eq!(delta_q().enumerate_basis_exact(1).len(), 7);
    assert_eq!(delta_q().enumerate_basis(0), vec![awdaha::Word::empty()]);
}

#[test]
fn axis_folding() {
    let h = hhat_q();
    let a = h.derived("A").unwrap();
    let fold = fold_laurent(Axis::Y, &h.parse("Y + Y^-1").unwrap()).unwrap();
    assert_eq!(fold.to_laurent(), awdaha::algebras::LaurentFold::power(1).add_scaled(&awdaha::algebras::LaurentFold::power(-1), &awdaha::QScalar::one()).to_laurent());
    // Y^-2 = A^2 - 1 - Y A, checked by expanding (A - Y)(A - Y)
    let lhs = h.eval("Y^-2").unwrap();
    let ay = h.mul(&a, &h.letter("Y")).unwrap();
    let sq = h.eval("(Y + Y^-1 - Y)*(Y + Y^-1 - Y)").unwrap();
    assert_eq!(lhs, sq);
    let rhs = h.eval("(Y + Y^-1)^2 - 1").unwrap().try_sub(&ay).unwrap();
    assert_eq!(lhs, h.normalize(&rhs).unwrap());
    let f2 = fold_laurent(Axis::Y, &h.parse("Y^-2").unwrap()).unwrap();
    assert_eq!(unfold_laurent(Axis::Y, &f2).unwrap(), lhs);
    assert!(fold_laurent(Axis::X, &h.parse("X + Y").unwrap()).is_err());
}

#[test]
fn t_basis_conversions() {
    let inv = TElement::parse("t0^-1").unwrap();
    assert_eq!(inv.to_basis(TBasis::Hecke).to_poly(), hhat_q().parse("T0 - t0").unwrap());
    let sym = TElement::parse("q^-1*t0 + q*t0^-1").unwrap();
    assert_eq!(sym.to_poly(), hhat_q().parse("q*T0 - (q - q^-1)*t0").unwrap());
    let t12 = TElement::parse("T1*T2").unwrap();
    assert_eq!(t12.to_basis(TBasis::Laurent).terms(), t12.to_basis(TBasis::Hecke).terms());
    assert!(TElement::parse("X*T1").is_err());
}

#[test]
fn q_inverted_siblings() {
    let d = delta_q();
    let s = d.sibling();
    assert!(s.is_q_inverted());
    assert_eq!(s.sibling().name(), d.name());
    let ba = s.system().rule_for(s.id("B"), s.id("A")).unwrap();
    assert_eq!(ba.rhs.coeff(&parse_word("A*B", s.alphabet()).unwrap()), awdaha::QScalar::q_pow(-2));
    assert!(s.system().check_confluence().unwrap().all_resolved());
    assert!(hhat_q().sibling().system().check_confluence().unwrap().all_resolved());
}
