//! The universal Askey-Wilson algebra and the universal DAHA of type
//! (C1v, C1), each as a confluent length-two rewriting system, together with
//! their named elements and PBW bases.
//!
//! Four instances exist per process: each algebra at `q` and at `1/q`. They
//! are built once and shared so the normal-form memo tables are reused.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};
use crate::free_algebra::{Alphabet, GenId, NCPoly, Word};
use crate::parse::{parse_expr, Scope};
use crate::rewrite::{RewriteRule, RewriteSystem, RuleKind};
use crate::scalar::QScalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    /// The universal Askey-Wilson algebra.
    Delta,
    /// The universal DAHA of type (C1v, C1) with t0 t1 t2 t3 = 1/q.
    Hhat,
}

impl Family {
    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "delta" | "delta-q" => Some(Family::Delta),
            "hhat" | "hhat-q" => Some(Family::Hhat),
            _ => None,
        }
    }
}

pub const DELTA_LETTERS: [&str; 7] = ["A", "C", "B", "Omega", "alpha", "beta", "gamma"];
pub const HHAT_LETTERS: [&str; 9] = ["Y", "Y^-1", "X", "X^-1", "t0", "T0", "T1", "T2", "T3"];

const DELTA_FIRST_KIND: [(&str, &str); 4] = [
    ("B*A", "q^2*A*B + q*(q^2 - q^-2)*C - q*(q - q^-1)*gamma"),
    ("B*C", "q^-2*C*B - q^-1*(q^2 - q^-2)*A + q^-1*(q - q^-1)*alpha"),
    ("C*A", "q^-2*A*C - q^-1*(q^2 - q^-2)*B + q^-1*(q - q^-1)*beta"),
    (
        "C*C",
        "q^-2*Omega - q^-3*A*C*B - q^-4*A^2 - q^-4*B^2 + q^-3*A*alpha + q^-3*B*beta + q^-1*C*gamma",
    ),
];

const HHAT_SECOND_KIND: [(&str, &str); 5] = [
    ("t0*t0", "t0*T0 - 1"),
    ("t0*X", "X^-1*t0 + X*T0 - T3"),
    ("t0*X^-1", "X*t0 - X*T0 + T3"),
    ("t0*Y", "Y^-1*t0 + Y*T0 - T1"),
    ("t0*Y^-1", "Y*t0 - Y*T0 + T1"),
];

const HHAT_FIRST_KIND: [(&str, &str); 4] = [
    (
        "X*Y",
        "q^2*Y*X - q*t0*T2 + q^-1*T0*T2 + Y^-1*t0*T3 - q^-2*Y^-1*T0*T3 \
         + q^-2*Y^-1*X*T0^2 - q^-2*Y^-1*X*t0*T0 - X*T0*T1 + X*t0*T1",
    ),
    (
        "X^-1*Y",
        "q^-2*Y*X^-1 + (q - q^-1)*q^-1*T1*T3 - q^-1*T0*T2 + q^-1*t0*T2 - Y^-1*t0*T3 \
         + q^-2*X*T0*T1 - q^-2*X*t0*T1 + q^-2*Y^-1*T0*T3 - q^-2*Y^-1*X*T0^2 + q^-2*Y^-1*X*t0*T0",
    ),
    (
        "X^-1*Y^-1",
        "q^2*Y^-1*X^-1 - q^2*Y^-1*T0*T3 + q^2*Y^-1*t0*T3 + q*T0*T2 - q*t0*T2 \
         - q^2*X*T0*T1 + q^2*X*t0*T1 + q^2*Y^-1*X*T0^2 - q^2*Y^-1*X*t0*T0",
    ),
    (
        "X*Y^-1",
        "q^-2*Y^-1*X + X*T0*T1 - X*t0*T1 - q^-2*Y^-1*X*T0^2 + q^-2*Y^-1*X*t0*T0 \
         + q^-2*Y^-1*T0*T3 - q^-2*Y^-1*t0*T3 - q^-1*T0*T2 + q^-1*t0*T2",
    ),
];

/// Exponent pattern of the PBW basis of an algebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BasisShape {
    /// `A^i C^j B^k Omega^l alpha^r beta^s gamma^t`, `j` in {0,1}.
    Delta,
    /// `Y^i X^j t0^k T0^l T1^r T2^s T3^t`, `i, j` in Z, `k` in {0,1}.
    Hhat,
}

/// A presented algebra: alphabet, rewriting system and basis description.
pub struct Algebra {
    family: Family,
    q_inverted: bool,
    system: RewriteSystem,
}

impl fmt::Debug for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Algebra({})", self.name())
    }
}

static DELTA: OnceLock<Arc<Algebra>> = OnceLock::new();
static DELTA_INV: OnceLock<Arc<Algebra>> = OnceLock::new();
static HHAT: OnceLock<Arc<Algebra>> = OnceLock::new();
static HHAT_INV: OnceLock<Arc<Algebra>> = OnceLock::new();

/// The universal Askey-Wilson algebra: 4 first-kind and 18 second-kind rules.
pub fn delta_q() -> Arc<Algebra> {
    DELTA.get_or_init(|| Arc::new(build_delta().expect("built-in rules parse"))).clone()
}

/// The universal DAHA: 39 forbidden words.
pub fn hhat_q() -> Arc<Algebra> {
    HHAT.get_or_init(|| Arc::new(build_hhat().expect("built-in rules parse"))).clone()
}

/// Instance of `family` at `q` or at `1/q`.
pub fn algebra(family: Family, q_inverted: bool) -> Arc<Algebra> {
    match (family, q_inverted) {
        (Family::Delta, false) => delta_q(),
        (Family::Hhat, false) => hhat_q(),
        (Family::Delta, true) => DELTA_INV.get_or_init(|| Arc::new(delta_q().inverted_copy())).clone(),
        (Family::Hhat, true) => HHAT_INV.get_or_init(|| Arc::new(hhat_q().inverted_copy())).clone(),
    }
}

fn rules_from_text(alphabet: &Arc<Alphabet>, rules: &[(&str, &str)], kind: RuleKind) -> Result<Vec<RewriteRule>> {
    let scope = crate::parse::LetterScope(alphabet.clone());
    rules
        .iter()
        .map(|(lhs, rhs)| {
            let w = crate::parse::parse_word(lhs, alphabet)?;
            Ok(RewriteRule { lhs: [w.0[0], w.0[1]], rhs: parse_expr(rhs, &scope)?, kind })
        })
        .collect()
}

fn swap_rule(al: &Arc<Alphabet>, a: &str, b: &str, kind: RuleKind) -> RewriteRule {
    let (x, y) = (al.id(a).expect("letter"), al.id(b).expect("letter"));
    RewriteRule { lhs: [x, y], rhs: NCPoly::word(al, Word(vec![y, x])), kind }
}

fn build_delta() -> Result<Algebra> {
    let al = Alphabet::new(&DELTA_LETTERS)?;
    let mut rules = rules_from_text(&al, &DELTA_FIRST_KIND, RuleKind::First)?;
    for central in ["Omega", "alpha", "beta", "gamma"] {
        for g in ["A", "B", "C"] {
            rules.push(swap_rule(&al, central, g, RuleKind::Second));
        }
    }
    for (a, b) in [("alpha", "Omega"), ("beta", "Omega"), ("gamma", "Omega"), ("beta", "alpha"), ("gamma", "alpha"), ("gamma", "beta")] {
        rules.push(swap_rule(&al, a, b, RuleKind::Second));
    }
    Ok(Algebra { family: Family::Delta, q_inverted: false, system: RewriteSystem::new(al, rules)? })
}

fn build_hhat() -> Result<Algebra> {
    let al = Alphabet::new(&HHAT_LETTERS)?;
    let mut rules = rules_from_text(&al, &HHAT_FIRST_KIND, RuleKind::First)?;
    rules.extend(rules_from_text(&al, &HHAT_SECOND_KIND, RuleKind::Second)?);
    for (a, b) in [("X", "X^-1"), ("X^-1", "X"), ("Y", "Y^-1"), ("Y^-1", "Y")] {
        let lhs = [al.id(a)?, al.id(b)?];
        rules.push(RewriteRule { lhs, rhs: NCPoly::one(&al), kind: RuleKind::Third });
    }
    for t in ["T0", "T1", "T2", "T3"] {
        for g in ["X", "X^-1", "Y", "Y^-1", "t0"] {
            rules.push(swap_rule(&al, t, g, RuleKind::Third));
        }
    }
    for (i, j) in [(1, 0), (2, 0), (3, 0), (2, 1), (3, 1), (3, 2)] {
        rules.push(swap_rule(&al, &format!("T{i}"), &format!("T{j}"), RuleKind::Third));
    }
    Ok(Algebra { family: Family::Hhat, q_inverted: false, system: RewriteSystem::new(al, rules)? })
}

impl Algebra {
    pub fn family(&self) -> Family {
        self.family
    }

    pub fn is_q_inverted(&self) -> bool {
        self.q_inverted
    }

    pub fn name(&self) -> &'static str {
        match (self.family, self.q_inverted) {
            (Family::Delta, false) => "delta-q",
            (Family::Delta, true) => "delta-q^-1",
            (Family::Hhat, false) => "hhat-q",
            (Family::Hhat, true) => "hhat-q^-1",
        }
    }

    pub fn system(&self) -> &RewriteSystem {
        &self.system
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        self.system.alphabet()
    }

    pub fn basis_shape(&self) -> BasisShape {
        match self.family {
            Family::Delta => BasisShape::Delta,
            Family::Hhat => BasisShape::Hhat,
        }
    }

    fn inverted_copy(&self) -> Algebra {
        Algebra { family: self.family, q_inverted: !self.q_inverted, system: self.system.invert_q() }
    }

    /// The same family at the inverted parameter.
    pub fn sibling(&self) -> Arc<Algebra> {
        algebra(self.family, !self.q_inverted)
    }

    pub fn letter(&self, name: &str) -> NCPoly {
        NCPoly::letter(self.alphabet(), self.alphabet().id(name).expect("known letter"))
    }

    pub fn id(&self, name: &str) -> GenId {
        self.alphabet().id(name).expect("known letter")
    }

    pub fn scalar(&self, c: QScalar) -> NCPoly {
        NCPoly::constant(self.alphabet(), c)
    }

    pub fn normalize(&self, p: &NCPoly) -> Result<NCPoly> {
        self.system.normalize(p)
    }

    pub fn mul(&self, a: &NCPoly, b: &NCPoly) -> Result<NCPoly> {
        self.system.mul(a, b)
    }

    /// Parses an expression in this algebra's naming scope (without
    /// normalizing). Named elements expand to their defining expressions.
    pub fn parse(&self, text: &str) -> Result<NCPoly> {
        parse_expr(text, &AlgebraScope { algebra: self })
    }

    /// Parses and normalizes.
    pub fn eval(&self, text: &str) -> Result<NCPoly> {
        self.normalize(&self.parse(text)?)
    }

    /// Normal form of a named element.
    pub fn derived(&self, name: &str) -> Result<NCPoly> {
        if self.alphabet().lookup(name).is_some() {
            return Ok(self.letter(name));
        }
        let def = self.definition(name).ok_or_else(|| Error::UnknownName(name.to_string()))?;
        self.eval(&def)
    }

    /// Names understood by [`Algebra::derived`] beyond the letters.
    pub fn derived_names(&self) -> &'static [&'static str] {
        match self.family {
            Family::Delta => &[],
            Family::Hhat => &[
                "t1", "t2", "t3", "A", "B", "C", "alpha", "beta", "gamma", "Omega", "theta", "C0", "C1", "C2", "C3",
            ],
        }
    }

    /// Defining expression of a named element, written in terms of letters
    /// and other named elements. In the q-inverted sibling every `q` is read
    /// as `1/q`.
    fn definition(&self, name: &str) -> Option<String> {
        if self.family != Family::Hhat {
            return None;
        }
        let d = match name {
            "t1" => "t0^-1*Y",
            "t2" => "q^-1*Y^-1*t0*X^-1",
            "t3" => "X*t0^-1",
            "A" => "Y + Y^-1",
            "B" => "X + X^-1",
            "C" => "t0*t2 + t2^-1*t0^-1",
            "alpha" => "(q^-1*t0 + q*t0^-1)*T1 + T2*T3",
            "beta" => "(q^-1*t0 + q*t0^-1)*T3 + T1*T2",
            "gamma" => "(q^-1*t0 + q*t0^-1)*T2 + T3*T1",
            "Omega" => {
                "(q + q^-1)^2 - (q^-1*t0 + q*t0^-1)^2 - T1^2 - T2^2 - T3^2 - (q^-1*t0 + q*t0^-1)*T1*T2*T3"
            }
            "theta" => "Y*X^-1*t0 - Y^-1*X*t0^-1 + Y^-1*T3 + X*T1 + q^-1*t0^2*T2",
            "C0" => "q*(q*Y*X - q^-1*X*Y)",
            "C1" => "-(q^-1*Y*X^-1 - q*X^-1*Y)",
            "C2" => "q^-1*(q*Y^-1*X^-1 - q^-1*X^-1*Y^-1)",
            "C3" => "-(q^-1*Y^-1*X - q*X*Y^-1)",
            _ => return None,
        };
        Some(d.to_string())
    }

    /// All irreducible words of length at most `max_len`, in word order.
    pub fn enumerate_basis(&self, max_len: usize) -> Vec<Word> {
        let mut out = vec![Word::empty()];
        let mut layer = vec![Word::empty()];
        for _ in 0..max_len {
            layer = self.extend_layer(&layer);
            out.extend(layer.iter().cloned());
        }
        out
    }

    /// Irreducible words of length exactly `len`, in word order.
    pub fn enumerate_basis_exact(&self, len: usize) -> Vec<Word> {
        let mut layer = vec![Word::empty()];
        for _ in 0..len {
            layer = self.extend_layer(&layer);
        }
        layer
    }

    fn extend_layer(&self, layer: &[Word]) -> Vec<Word> {
        let n = self.alphabet().len() as GenId;
        let mut next = Vec::new();
        for w in layer {
            for g in 0..n {
                if w.letters().last().is_some_and(|&last| self.system.is_forbidden(last, g)) {
                    continue;
                }
                let mut v = w.0.clone();
                v.push(g);
                next.push(Word(v));
            }
        }
        next.sort();
        next
    }
}

/// Name resolution for parsing inside an algebra: letters, `t0^-1 = T0 - t0`,
/// and the named elements of the DAHA.
struct AlgebraScope<'a> {
    algebra: &'a Algebra,
}

impl AlgebraScope<'_> {
    fn reparse(&self, def: &str) -> Option<NCPoly> {
        if self.algebra.q_inverted {
            // expand at q, then invert the parameter once
            let base = algebra(self.algebra.family, false);
            let p = parse_expr(def, &AlgebraScope { algebra: &base }).ok()?;
            return p.rebase(self.alphabet()).ok().map(|p| p.invert_q());
        }
        parse_expr(def, self).ok()
    }
}

impl Scope for AlgebraScope<'_> {
    fn alphabet(&self) -> &Arc<Alphabet> {
        self.algebra.alphabet()
    }

    fn lookup(&self, name: &str) -> Option<NCPoly> {
        let al = self.alphabet();
        if let Some(g) = al.lookup(name) {
            return Some(NCPoly::letter(al, g));
        }
        self.algebra.definition(name).and_then(|d| self.reparse(&d))
    }

    fn lookup_inverse(&self, name: &str) -> Option<NCPoly> {
        let al = self.alphabet();
        if let Some(g) = al.lookup(&format!("{name}^-1")) {
            return Some(NCPoly::letter(al, g));
        }
        if self.algebra.family != Family::Hhat {
            return None;
        }
        // t_i^-1 = T_i - t_i
        let def = match name {
            "t0" => "T0 - t0",
            "t1" => "T1 - t1",
            "t2" => "T2 - t2",
            "t3" => "T3 - t3",
            _ => return None,
        };
        parse_expr(def, self).ok()
    }
}

/// Result of writing an element of `<Y^{+-1}>` as `f(A) + Y g(A)` with
/// `A = Y + Y^-1` (or the X/B analogue). Coefficient vectors are indexed by
/// the power of `A`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentFold {
    pub even: Vec<QScalar>,
    pub odd: Vec<QScalar>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Axis {
    X,
    Y,
}

impl Axis {
    pub fn letters(self) -> (&'static str, &'static str) {
        match self {
            Axis::X => ("X", "X^-1"),
            Axis::Y => ("Y", "Y^-1"),
        }
    }

    /// Name of the symmetric element `Y + Y^-1` or `X + X^-1`.
    pub fn symmetric_name(self) -> &'static str {
        match self {
            Axis::X => "B",
            Axis::Y => "A",
        }
    }
}

fn trim(mut v: Vec<QScalar>) -> Vec<QScalar> {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
    v
}

fn poly_add(a: &[QScalar], b: &[QScalar]) -> Vec<QScalar> {
    let n = a.len().max(b.len());
    trim((0..n).map(|i| {
        let x = a.get(i).cloned().unwrap_or_default();
        let y = b.get(i).cloned().unwrap_or_default();
        x.add(&y)
    }).collect())
}

fn poly_shift(a: &[QScalar]) -> Vec<QScalar> {
    if a.is_empty() {
        return Vec::new();
    }
    let mut v = vec![QScalar::zero()];
    v.extend(a.iter().cloned());
    v
}

fn poly_neg(a: &[QScalar]) -> Vec<QScalar> {
    a.iter().map(QScalar::neg).collect()
}

fn poly_scale(a: &[QScalar], c: &QScalar) -> Vec<QScalar> {
    trim(a.iter().map(|x| x.mul(c)).collect())
}

impl LaurentFold {
    pub fn zero() -> Self {
        LaurentFold { even: Vec::new(), odd: Vec::new() }
    }

    /// `lambda^n = f(L) + lambda g(L)` with `L = lambda + 1/lambda`, using
    /// `lambda^(n+1) = L lambda^n - lambda^(n-1)`.
    pub fn power(n: i64) -> Self {
        let mut cur = LaurentFold { even: vec![QScalar::one()], odd: Vec::new() };
        for _ in 0..n.unsigned_abs() {
            cur = if n > 0 { cur.times_lambda() } else { cur.times_lambda_inv() };
        }
        cur
    }

    /// `lambda (f + lambda g) = -g + lambda (f + L g)`.
    fn times_lambda(&self) -> Self {
        LaurentFold { even: poly_neg(&self.odd), odd: poly_add(&self.even, &poly_shift(&self.odd)) }
    }

    /// `(L - lambda)(f + lambda g) = (L f + g) - lambda f`.
    fn times_lambda_inv(&self) -> Self {
        LaurentFold { even: poly_add(&poly_shift(&self.even), &self.odd), odd: poly_neg(&self.even) }
    }

    pub fn add_scaled(&self, other: &LaurentFold, c: &QScalar) -> Self {
        LaurentFold {
            even: poly_add(&self.even, &poly_scale(&other.even, c)),
            odd: poly_add(&self.odd, &poly_scale(&other.odd, c)),
        }
    }

    /// Expands `f(L) + lambda g(L)` back into Laurent coefficients
    /// `exponent -> coefficient`.
    pub fn to_laurent(&self) -> BTreeMap<i64, QScalar> {
        let mut out: BTreeMap<i64, QScalar> = BTreeMap::new();
        let mut push = |e: i64, c: QScalar| {
            let s = out.get(&e).cloned().unwrap_or_default().add(&c);
            if s.is_zero() {
                out.remove(&e);
            } else {
                out.insert(e, s);
            }
        };
        for (parity, coeffs) in [(0i64, &self.even), (1i64, &self.odd)] {
            for (l, c) in coeffs.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                // (lambda + 1/lambda)^l = sum_m binom(l, m) lambda^(l - 2m)
                let mut binom = num_bigint::BigInt::from(1);
                for m in 0..=l {
                    let e = l as i64 - 2 * m as i64 + parity;
                    push(e, c.mul(&QScalar::from_bigint(binom.clone())));
                    binom = binom * (l - m) / (m + 1);
                }
            }
        }
        out
    }
}

/// Splits an element supported on powers of one axis letter as
/// `f(A) + Y g(A)` (or `f(B) + X g(B)`).
pub fn fold_laurent(axis: Axis, p: &NCPoly) -> Result<LaurentFold> {
    let al = p.alphabet();
    let (pos, neg) = axis.letters();
    let (pos, neg) = (al.id(pos)?, al.id(neg)?);
    let mut acc = LaurentFold::zero();
    for (w, c) in p.terms() {
        let l = w.letters();
        let n = if l.iter().all(|&g| g == pos) {
            l.len() as i64
        } else if l.iter().all(|&g| g == neg) {
            -(l.len() as i64)
        } else {
            return Err(Error::AxisError(w.display(al)));
        };
        acc = acc.add_scaled(&LaurentFold::power(n), c);
    }
    Ok(acc)
}

/// Rebuilds `f(A) + Y g(A)` as a normalized element of the DAHA.
pub fn unfold_laurent(axis: Axis, fold: &LaurentFold) -> Result<NCPoly> {
    let h = hhat_q();
    let sym = h.derived(axis.symmetric_name())?;
    let lam = h.letter(axis.letters().0);
    let poly = |coeffs: &[QScalar]| -> Result<NCPoly> {
        let mut acc = NCPoly::zero(h.alphabet());
        let mut pow = NCPoly::one(h.alphabet());
        for c in coeffs {
            acc = acc.try_add(&pow.scale(c))?;
            pow = h.mul(&pow, &sym)?;
        }
        Ok(acc)
    };
    let even = poly(&fold.even)?;
    let odd = h.mul(&lam, &poly(&fold.odd)?)?;
    h.normalize(&even.try_add(&odd)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rule_counts() {
        assert_eq!(delta_q().system().rules().len(), 22);
        assert_eq!(hhat_q().system().rules().len(), 39);
    }

    #[test]
    fn c_squared_rule() {
        let d = delta_q();
        let rule = d.system().rule_for(d.id("C"), d.id("C")).unwrap();
        let expected = d
            .parse("q^-2*Omega - q^-3*A*C*B - q^-4*A^2 - q^-4*B^2 + q^-3*A*alpha + q^-3*B*beta + q^-1*C*gamma")
            .unwrap();
        assert_eq!(rule.rhs, expected);
        assert_eq!(rule.kind, RuleKind::First);
        let gb = d.system().rule_for(d.id("gamma"), d.id("beta")).unwrap();
        assert_eq!(gb.rhs, d.parse("beta*gamma").unwrap());
        assert_eq!(gb.kind, RuleKind::Second);
    }

    #[test]
    fn t0_squared_rule() {
        let h = hhat_q();
        let r = h.system().rule_for(h.id("t0"), h.id("t0")).unwrap();
        assert_eq!(r.rhs, h.parse("t0*T0 - 1").unwrap());
    }

    #[test]
    fn basis_small_lengths() {
        for alg in [delta_q(), hhat_q()] {
            assert_eq!(alg.enumerate_basis_exact(0), vec![Word::empty()]);
            assert_eq!(alg.enumerate_basis_exact(1).len(), alg.alphabet().len());
        }
    }

    #[test]
    fn fold_examples() {
        let h = hhat_q();
        let a = LaurentFold::power(1).add_scaled(&LaurentFold::power(-1), &QScalar::one());
        assert_eq!(a, LaurentFold { even: vec![QScalar::zero(), QScalar::one()], odd: vec![] });
        assert_eq!(fold_laurent(Axis::Y, &h.parse("Y + Y^-1").unwrap()).unwrap(), a);
        // Y^2 = A Y - 1
        let y2 = fold_laurent(Axis::Y, &h.parse("Y^2").unwrap()).unwrap();
        assert_eq!(y2, LaurentFold { even: vec![QScalar::from_int(-1)], odd: vec![QScalar::zero(), QScalar::one()] });
        // Y^-2 = A^2 - 1 - Y A
        let ym2 = fold_laurent(Axis::Y, &h.parse("Y^-2").unwrap()).unwrap();
        assert_eq!(
            ym2,
            LaurentFold {
                even: vec![QScalar::from_int(-1), QScalar::zero(), QScalar::one()],
                odd: vec![QScalar::zero(), QScalar::from_int(-1)],
            }
        );
        assert!(matches!(fold_laurent(Axis::Y, &h.parse("Y*X").unwrap()), Err(Error::AxisError(_))));
    }

    #[test]
    fn fold_round_trip() {
        let h = hhat_q();
        for n in -4i64..=4 {
            let p = h.parse(&format!("Y^{n}")).unwrap();
            let f = fold_laurent(Axis::Y, &p).unwrap();
            assert_eq!(unfold_laurent(Axis::Y, &f).unwrap(), h.normalize(&p).unwrap());
            let laurent = f.to_laurent();
            assert_eq!(laurent.len(), 1);
            assert_eq!(laurent.get(&n), Some(&QScalar::one()));
        }
    }

    #[test]
    fn unknown_derived_name() {
        assert!(matches!(hhat_q().derived("zeta"), Err(Error::UnknownName(_))));
        assert!(matches!(delta_q().derived("t1"), Err(Error::UnknownName(_))));
    }
}
