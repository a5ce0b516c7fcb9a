//! The commutative subalgebra generated by `t0^{+-1}, T1, T2, T3` inside the
//! DAHA, in its two bases: `t0^k T0^l T1^r T2^s T3^t` with `k` in {0,1}
//! (the normal-form basis) and `t0^k T1^r T2^s T3^t` with `k` in Z.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;

use crate::algebras::{hhat_q, LaurentFold};
use crate::error::{Error, Result};
use crate::free_algebra::{format_term, join_terms, NCPoly, Word};
use crate::scalar::QScalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TBasis {
    /// `t0^k T0^l T1^r T2^s T3^t`, `k` in {0,1}.
    Hecke,
    /// `t0^k T1^r T2^s T3^t`, `k` in Z.
    Laurent,
}

/// Exponents of one basis monomial. `t[0]` is the exponent of `T0` and is
/// always 0 in the Laurent basis.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TMonomial {
    pub t: [u32; 4],
    pub k: i32,
}

impl TMonomial {
    pub fn one() -> Self {
        TMonomial { t: [0; 4], k: 0 }
    }

    fn mul(&self, o: &TMonomial) -> TMonomial {
        let mut t = self.t;
        for (a, b) in t.iter_mut().zip(o.t) {
            *a += b;
        }
        TMonomial { t, k: self.k + o.k }
    }

    fn display_word(&self) -> String {
        let mut parts = Vec::new();
        match self.k {
            0 => {}
            1 => parts.push("t0".to_string()),
            k => parts.push(format!("t0^{k}")),
        }
        for (i, &e) in self.t.iter().enumerate() {
            match e {
                0 => {}
                1 => parts.push(format!("T{i}")),
                e => parts.push(format!("T{i}^{e}")),
            }
        }
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }
}

/// An element of the commutative subalgebra, stored in one of its bases.
#[derive(Clone)]
pub struct TElement {
    basis: TBasis,
    terms: BTreeMap<TMonomial, QScalar>,
}

fn add_into(map: &mut BTreeMap<TMonomial, QScalar>, m: TMonomial, c: QScalar) {
    if c.is_zero() {
        return;
    }
    let s = map.get(&m).map(|x| x.add(&c)).unwrap_or(c);
    if s.is_zero() {
        map.remove(&m);
    } else {
        map.insert(m, s);
    }
}

impl TElement {
    pub fn zero(basis: TBasis) -> Self {
        TElement { basis, terms: BTreeMap::new() }
    }

    pub fn scalar(c: QScalar) -> Self {
        let mut e = TElement::zero(TBasis::Laurent);
        add_into(&mut e.terms, TMonomial::one(), c);
        e
    }

    /// `c * t0^k`.
    pub fn t0_power(k: i32, c: QScalar) -> Self {
        let mut e = TElement::zero(TBasis::Laurent);
        add_into(&mut e.terms, TMonomial { t: [0; 4], k }, c);
        e
    }

    pub fn basis(&self) -> TBasis {
        self.basis
    }

    pub fn terms(&self) -> &BTreeMap<TMonomial, QScalar> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Reads a normalized DAHA element supported on `t0, T0..T3` words.
    pub fn from_poly(p: &NCPoly) -> Result<Self> {
        let h = hhat_q();
        let p = h.normalize(&p.rebase(h.alphabet())?)?;
        let t0 = h.id("t0");
        let caps = [h.id("T0"), h.id("T1"), h.id("T2"), h.id("T3")];
        let mut out = TElement::zero(TBasis::Hecke);
        for (w, c) in p.terms() {
            let mut m = TMonomial::one();
            for &g in w.letters() {
                if g == t0 {
                    m.k += 1;
                } else if let Some(i) = caps.iter().position(|&x| x == g) {
                    m.t[i] += 1;
                } else {
                    return Err(Error::NotInT(w.display(h.alphabet())));
                }
            }
            add_into(&mut out.terms, m, c.clone());
        }
        Ok(out)
    }

    /// Parses an expression in the DAHA naming scope.
    pub fn parse(text: &str) -> Result<Self> {
        Self::from_poly(&hhat_q().parse(text)?)
    }

    /// The same element in the requested basis.
    pub fn to_basis(&self, target: TBasis) -> TElement {
        if self.basis == target {
            return self.clone();
        }
        let mut out = TElement::zero(target);
        match target {
            TBasis::Laurent => {
                // T0^l = (t0 + t0^-1)^l
                for (m, c) in &self.terms {
                    let l = m.t[0];
                    let mut binom = BigInt::from(1);
                    for j in 0..=l {
                        let k = m.k + l as i32 - 2 * j as i32;
                        let mono = TMonomial { t: [0, m.t[1], m.t[2], m.t[3]], k };
                        add_into(&mut out.terms, mono, c.mul(&QScalar::from_bigint(binom.clone())));
                        binom = binom * (l - j) / (j + 1);
                    }
                }
            }
            TBasis::Hecke => {
                // t0^k = f(T0) + t0 g(T0)
                for (m, c) in &self.terms {
                    let fold = LaurentFold::power(m.k as i64);
                    for (parity, coeffs) in [(0, &fold.even), (1, &fold.odd)] {
                        for (l, f) in coeffs.iter().enumerate() {
                            let mono = TMonomial { t: [l as u32, m.t[1], m.t[2], m.t[3]], k: parity };
                            add_into(&mut out.terms, mono, c.mul(f));
                        }
                    }
                }
            }
        }
        out
    }

    /// Normalized DAHA element.
    pub fn to_poly(&self) -> NCPoly {
        let h = hhat_q();
        let al = h.alphabet();
        let t0 = h.id("t0");
        let caps = [h.id("T0"), h.id("T1"), h.id("T2"), h.id("T3")];
        let hecke = self.to_basis(TBasis::Hecke);
        let mut terms = BTreeMap::new();
        for (m, c) in &hecke.terms {
            let mut w = vec![t0; m.k as usize];
            for (i, &e) in m.t.iter().enumerate() {
                w.extend(std::iter::repeat(caps[i]).take(e as usize));
            }
            terms.insert(Word(w), c.clone());
        }
        NCPoly::from_terms(al, terms)
    }

    pub fn add(&self, o: &TElement) -> TElement {
        let mut out = self.to_basis(TBasis::Laurent);
        for (m, c) in &o.to_basis(TBasis::Laurent).terms {
            add_into(&mut out.terms, *m, c.clone());
        }
        out
    }

    pub fn sub(&self, o: &TElement) -> TElement {
        self.add(&o.scale(&QScalar::from_int(-1)))
    }

    pub fn scale(&self, c: &QScalar) -> TElement {
        let mut out = TElement::zero(self.basis);
        for (m, x) in &self.terms {
            add_into(&mut out.terms, *m, x.mul(c));
        }
        out
    }

    pub fn mul(&self, o: &TElement) -> TElement {
        let a = self.to_basis(TBasis::Laurent);
        let b = o.to_basis(TBasis::Laurent);
        let mut out = TElement::zero(TBasis::Laurent);
        for (ma, ca) in &a.terms {
            for (mb, cb) in &b.terms {
                add_into(&mut out.terms, ma.mul(mb), ca.mul(cb));
            }
        }
        out
    }
}

impl PartialEq for TElement {
    fn eq(&self, other: &Self) -> bool {
        self.to_basis(TBasis::Laurent).terms == other.to_basis(TBasis::Laurent).terms
    }
}

impl Eq for TElement {}

impl fmt::Display for TElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(m, c)| format_term(c, &m.display_word(), *m == TMonomial::one())).collect();
        write!(f, "{}", join_terms(&parts))
    }
}

impl fmt::Debug for TElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TElement({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn t0_inverse_in_hecke_basis() {
        let e = TElement::t0_power(-1, QScalar::one()).to_basis(TBasis::Hecke);
        assert_eq!(e.to_poly(), hhat_q().parse("T0 - t0").unwrap());
    }

    #[test]
    fn symmetric_combination() {
        let e = TElement::parse("q^-1*t0 + q*t0^-1").unwrap();
        assert_eq!(e.basis(), TBasis::Hecke);
        assert_eq!(e.to_poly(), hhat_q().parse("q*T0 - (q - q^-1)*t0").unwrap());
    }

    #[test]
    fn basis_round_trip() {
        let e = TElement::parse("t0^3*T1 - 2*T0^2*T3 + q*t0*T0").unwrap();
        let l = e.to_basis(TBasis::Laurent);
        assert!(l.terms().keys().all(|m| m.t[0] == 0));
        assert_eq!(l.to_basis(TBasis::Hecke).terms(), e.terms());
        let t12 = TElement::parse("T1*T2").unwrap();
        assert_eq!(t12.to_basis(TBasis::Laurent).terms(), t12.terms());
    }

    #[test]
    fn rejects_non_t_support() {
        assert!(matches!(TElement::parse("t0*X"), Err(Error::NotInT(_))));
    }

    #[test]
    fn display_laurent() {
        let e = TElement::parse("q^-1*t0^-2").unwrap().to_basis(TBasis::Laurent);
        assert_eq!(e.to_string(), "q^-1*t0^-2");
    }
}
