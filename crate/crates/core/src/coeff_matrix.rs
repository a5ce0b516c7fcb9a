//! Coefficient matrices of DAHA elements, the projections onto the four
//! summands `<A> nu <B> T` (nu in {1, X, Y, YX}), centralizer checks and the
//! bounded-degree center computation.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;

use crate::algebras::{fold_laurent, hhat_q, Algebra, Axis, LaurentFold};
use crate::error::Result;
use crate::free_algebra::{GenId, NCPoly, Word};
use crate::linalg::{rref, Echelon, Indexer, SparseVec};
use crate::scalar::QScalar;
use crate::tbasis::{TBasis, TElement};

/// `h = sum over (i, j) of Y^i X^j t_ij` with `t_ij` in the commutative
/// subalgebra. Entries are kept in the `t0^k`, `k` in Z, basis.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct CoeffMatrix {
    entries: BTreeMap<(i32, i32), TElement>,
}

struct Letters {
    y: GenId,
    yi: GenId,
    x: GenId,
    xi: GenId,
}

fn letters(h: &Algebra) -> Letters {
    Letters { y: h.id("Y"), yi: h.id("Y^-1"), x: h.id("X"), xi: h.id("X^-1") }
}

/// Splits a normal-form word into `(i, j, rest)`.
fn split_word(l: &Letters, w: &Word) -> (i32, i32, Word) {
    let s = w.letters();
    let mut pos = 0;
    let mut i = 0;
    while pos < s.len() && (s[pos] == l.y || s[pos] == l.yi) {
        i += if s[pos] == l.y { 1 } else { -1 };
        pos += 1;
    }
    let mut j = 0;
    while pos < s.len() && (s[pos] == l.x || s[pos] == l.xi) {
        j += if s[pos] == l.x { 1 } else { -1 };
        pos += 1;
    }
    (i, j, Word(s[pos..].to_vec()))
}

fn axis_power(h: &Algebra, pos: &str, neg: &str, n: i32) -> NCPoly {
    let g = if n >= 0 { h.id(pos) } else { h.id(neg) };
    NCPoly::word(h.alphabet(), Word(vec![g; n.unsigned_abs() as usize]))
}

impl CoeffMatrix {
    pub fn of(h: &NCPoly) -> Result<Self> {
        let alg = hhat_q();
        let p = alg.normalize(&h.rebase(alg.alphabet())?)?;
        let l = letters(&alg);
        let mut grouped: BTreeMap<(i32, i32), BTreeMap<Word, QScalar>> = BTreeMap::new();
        for (w, c) in p.terms() {
            let (i, j, rest) = split_word(&l, w);
            grouped.entry((i, j)).or_default().insert(rest, c.clone());
        }
        let mut entries = BTreeMap::new();
        for (ij, terms) in grouped {
            let t = TElement::from_poly(&NCPoly::from_terms(alg.alphabet(), terms))?;
            entries.insert(ij, t.to_basis(TBasis::Laurent));
        }
        Ok(CoeffMatrix { entries })
    }

    /// Builds a matrix from `(i, j, entry expression)` triples.
    pub fn from_entries(entries: &[(i32, i32, &str)]) -> Result<Self> {
        let mut m = CoeffMatrix::default();
        for &(i, j, text) in entries {
            let t = TElement::parse(text)?.to_basis(TBasis::Laurent);
            if !t.is_zero() {
                m.entries.insert((i, j), t);
            }
        }
        Ok(m)
    }

    pub fn entries(&self) -> &BTreeMap<(i32, i32), TElement> {
        &self.entries
    }

    pub fn get(&self, i: i32, j: i32) -> TElement {
        self.entries.get(&(i, j)).cloned().unwrap_or_else(|| TElement::zero(TBasis::Laurent))
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    /// Reassembles `sum Y^i X^j t_ij` and normalizes.
    pub fn unfold(&self) -> Result<NCPoly> {
        let h = hhat_q();
        let mut acc = NCPoly::zero(h.alphabet());
        for (&(i, j), t) in &self.entries {
            let yx = axis_power(&h, "Y", "Y^-1", i).try_mul(&axis_power(&h, "X", "X^-1", j))?;
            acc = acc.try_add(&h.mul(&yx, &t.to_poly())?)?;
        }
        Ok(acc)
    }

    pub fn add(&self, o: &CoeffMatrix) -> CoeffMatrix {
        let mut entries = self.entries.clone();
        for (k, t) in &o.entries {
            let s = match entries.get(k) {
                Some(cur) => cur.add(t),
                None => t.to_basis(TBasis::Laurent),
            };
            if s.is_zero() {
                entries.remove(k);
            } else {
                entries.insert(*k, s);
            }
        }
        CoeffMatrix { entries }
    }

    /// Matrix of `h v` for `v` in the commutative subalgebra.
    pub fn times(&self, v: &TElement) -> CoeffMatrix {
        let entries = self
            .entries
            .iter()
            .map(|(k, t)| (*k, t.mul(v)))
            .filter(|(_, t)| !t.is_zero())
            .collect();
        CoeffMatrix { entries }
    }

    /// `(i, j, entry)` triples in row-major order.
    pub fn triples(&self) -> Vec<(i32, i32, String)> {
        self.entries.iter().map(|(&(i, j), t)| (i, j, t.to_string())).collect()
    }

    pub fn to_json(&self) -> serde_json::Value {
        #[derive(Serialize)]
        struct Entry {
            i: i32,
            j: i32,
            entry: String,
        }
        let v: Vec<Entry> = self.triples().into_iter().map(|(i, j, entry)| Entry { i, j, entry }).collect();
        serde_json::to_value(v).expect("plain data")
    }

    /// Table with rows indexed by powers of Y (increasing downward) and
    /// columns by powers of X (increasing rightward).
    pub fn to_table(&self) -> String {
        if self.entries.is_empty() {
            return "0\n".to_string();
        }
        let imin = self.entries.keys().map(|k| k.0).min().unwrap_or(0);
        let imax = self.entries.keys().map(|k| k.0).max().unwrap_or(0);
        let jmin = self.entries.keys().map(|k| k.1).min().unwrap_or(0);
        let jmax = self.entries.keys().map(|k| k.1).max().unwrap_or(0);
        let label = |letter: &str, n: i32| match n {
            0 => "1".to_string(),
            1 => letter.to_string(),
            n => format!("{letter}^{n}"),
        };
        let mut rows: Vec<Vec<String>> = Vec::new();
        let mut header = vec![String::new()];
        header.extend((jmin..=jmax).map(|j| label("X", j)));
        rows.push(header);
        for i in imin..=imax {
            let mut r = vec![label("Y", i)];
            r.extend((jmin..=jmax).map(|j| self.get(i, j).to_string()));
            rows.push(r);
        }
        let ncol = rows[0].len();
        let widths: Vec<usize> = (0..ncol).map(|c| rows.iter().map(|r| r[c].len()).max().unwrap_or(0)).collect();
        let mut out = String::new();
        for r in rows {
            let line: Vec<String> = r.iter().zip(&widths).map(|(s, w)| format!("{s:<w$}")).collect();
            let _ = writeln!(out, "{}", line.join("  ").trim_end());
        }
        out
    }
}

/// The summands of the four-part decomposition.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Nu {
    One,
    X,
    Y,
    YX,
}

impl Nu {
    pub const ALL: [Nu; 4] = [Nu::One, Nu::X, Nu::Y, Nu::YX];

    pub fn parse(s: &str) -> Option<Nu> {
        match s {
            "1" => Some(Nu::One),
            "X" => Some(Nu::X),
            "Y" => Some(Nu::Y),
            "YX" | "Y*X" => Some(Nu::YX),
            _ => None,
        }
    }
}

fn poly_in(h: &Algebra, sym: &NCPoly, coeffs: &[QScalar]) -> Result<NCPoly> {
    let mut acc = NCPoly::zero(h.alphabet());
    let mut pow = NCPoly::one(h.alphabet());
    for c in coeffs {
        if !c.is_zero() {
            acc = acc.try_add(&pow.scale(c))?;
        }
        pow = h.mul(&pow, sym)?;
    }
    Ok(acc)
}

/// Component of `h` in `<A> nu <B> T`, from `Y^i = f(A) + Y g(A)` and
/// `X^j = u(B) + X v(B)`.
pub fn project_pi(nu: Nu, h: &NCPoly) -> Result<NCPoly> {
    let alg = hhat_q();
    let m = CoeffMatrix::of(h)?;
    let a = alg.derived("A")?;
    let b = alg.derived("B")?;
    let mut acc = NCPoly::zero(alg.alphabet());
    for (&(i, j), t) in m.entries() {
        let fy = LaurentFold::power(i as i64);
        let fx = LaurentFold::power(j as i64);
        let (left, left_letter, right, right_letter) = match nu {
            Nu::One => (&fy.even, None, &fx.even, None),
            Nu::X => (&fy.even, None, &fx.odd, Some("X")),
            Nu::Y => (&fy.odd, Some("Y"), &fx.even, None),
            Nu::YX => (&fy.odd, Some("Y"), &fx.odd, Some("X")),
        };
        if left.is_empty() || right.is_empty() {
            continue;
        }
        let mut term = poly_in(&alg, &a, left)?;
        if let Some(l) = left_letter {
            term = alg.mul(&alg.letter(l), &term)?;
        }
        if let Some(l) = right_letter {
            term = alg.mul(&term, &alg.letter(l))?;
        }
        term = alg.mul(&term, &poly_in(&alg, &b, right)?)?;
        term = alg.mul(&term, &t.to_poly())?;
        acc = acc.try_add(&term)?;
    }
    Ok(acc)
}

/// Checks that an element lies on one axis and returns its fold; exposed for
/// the CLI.
pub fn fold_axis(axis: Axis, h: &NCPoly) -> Result<LaurentFold> {
    let alg = hhat_q();
    fold_laurent(axis, &alg.normalize(&h.rebase(alg.alphabet())?)?)
}

/// `t0 h - h t0`, normalized.
pub fn t0_commutator(h: &NCPoly) -> Result<NCPoly> {
    commutator(&hhat_q(), &hhat_q().letter("t0"), h)
}

pub fn commutes_with_t0(h: &NCPoly) -> Result<bool> {
    Ok(t0_commutator(h)?.is_zero())
}

/// `g h - h g`, normalized.
pub fn commutator(alg: &Algebra, g: &NCPoly, h: &NCPoly) -> Result<NCPoly> {
    alg.mul(g, h)?.try_sub(&alg.mul(h, g)?).and_then(|d| alg.normalize(&d))
}

/// True iff `h` commutes with every letter of the algebra.
pub fn is_central(alg: &Algebra, h: &NCPoly) -> Result<bool> {
    for g in 0..alg.alphabet().len() as GenId {
        let letter = NCPoly::letter(alg.alphabet(), g);
        if !commutator(alg, &letter, h)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// One relation checked by [`verify_centralizer_presentation`].
#[derive(Clone, Debug)]
pub struct NamedResidual {
    pub name: String,
    pub residual: NCPoly,
}

/// Relations of the presentation of `<A, B, C, T>`, with `{A}`, `{B}`, `{C}`
/// standing for the realizations being tested.
pub const CENTRALIZER_RELATIONS: [(&str, &str); 4] = [
    ("alpha", "{A} + (q*{B}*{C} - q^-1*{C}*{B})/(q^2 - q^-2) - ((q^-1*t0 + q*t0^-1)*T1 + T2*T3)/(q + q^-1)"),
    ("beta", "{B} + (q*{C}*{A} - q^-1*{A}*{C})/(q^2 - q^-2) - ((q^-1*t0 + q*t0^-1)*T3 + T1*T2)/(q + q^-1)"),
    ("gamma", "{C} + (q*{A}*{B} - q^-1*{B}*{A})/(q^2 - q^-2) - ((q^-1*t0 + q*t0^-1)*T2 + T3*T1)/(q + q^-1)"),
    (
        "Omega",
        "q^-1*{A}*{C}*{B} + q^-2*{A}^2 + q^-2*{B}^2 + q^2*{C}^2 - q^-1*{A}*((q^-1*t0 + q*t0^-1)*T1 + T2*T3) \
         - q^-1*{B}*((q^-1*t0 + q*t0^-1)*T3 + T1*T2) - q*{C}*((q^-1*t0 + q*t0^-1)*T2 + T3*T1) \
         - ((q + q^-1)^2 - (q^-1*t0 + q*t0^-1)^2 - T1^2 - T2^2 - T3^2 - (q^-1*t0 + q*t0^-1)*T1*T2*T3)",
    ),
];

/// Residuals of the four relations with `A, B, C` replaced by the given
/// expressions (parsed in the DAHA naming scope).
pub fn centralizer_relation_residuals(a: &str, b: &str, c: &str) -> Result<Vec<NamedResidual>> {
    let alg = hhat_q();
    let mut out = Vec::new();
    for (name, rel) in CENTRALIZER_RELATIONS {
        let text = rel.replace("{A}", &format!("({a})")).replace("{B}", &format!("({b})")).replace("{C}", &format!("({c})"));
        out.push(NamedResidual { name: format!("{name}-relation"), residual: alg.eval(&text)? });
    }
    Ok(out)
}

/// Substitutes the DAHA realizations into each relation and the centrality
/// conditions of `t0^{+-1}, T1, T2, T3` against `A, B, C`.
pub fn verify_centralizer_presentation() -> Result<Vec<NamedResidual>> {
    let alg = hhat_q();
    let mut out = centralizer_relation_residuals("A", "B", "C")?;
    for t in ["t0", "t0^-1", "T1", "T2", "T3"] {
        for g in ["A", "B", "C"] {
            let residual = commutator(&alg, &alg.eval(t)?, &alg.derived(g)?)?;
            out.push(NamedResidual { name: format!("[{t},{g}]"), residual });
        }
    }
    Ok(out)
}

/// Bounds of the window used by [`center_kernel`].
#[derive(Clone, Copy, Debug)]
pub struct CenterBounds {
    /// `|i|, |j| <= n` for the exponents of `Y` and `X`.
    pub n: i32,
    /// Total degree in `T0..T3` at most `m`.
    pub m: u32,
}

/// Basis words `Y^i X^j t0^k T0^l T1^r T2^s T3^t` inside the window.
pub fn center_domain(b: CenterBounds) -> Vec<NCPoly> {
    let h = hhat_q();
    let caps = ["T0", "T1", "T2", "T3"].map(|n| h.id(n));
    // nondecreasing sequences of T letters, degree <= m
    let mut t_words: Vec<Vec<GenId>> = vec![vec![]];
    let mut layer: Vec<Vec<GenId>> = vec![vec![]];
    for _ in 0..b.m {
        let mut next = Vec::new();
        for w in &layer {
            for &c in &caps {
                if w.last().is_none_or(|&l| l <= c) {
                    let mut v = w.clone();
                    v.push(c);
                    next.push(v);
                }
            }
        }
        t_words.extend(next.iter().cloned());
        layer = next;
    }
    let mut out = Vec::new();
    for i in -b.n..=b.n {
        for j in -b.n..=b.n {
            for k in 0..=1usize {
                for tw in &t_words {
                    let mut w = axis_power(&h, "Y", "Y^-1", i).terms().keys().next().expect("word").0.clone();
                    w.extend(axis_power(&h, "X", "X^-1", j).terms().keys().next().expect("word").0.iter());
                    w.extend(std::iter::repeat(h.id("t0")).take(k));
                    w.extend(tw.iter());
                    out.push(NCPoly::word(h.alphabet(), Word(w)));
                }
            }
        }
    }
    out
}

/// Kernel of `h -> ([X,h], [Y,h], [t0,h])` on the window, as reduced
/// combinations of the window's basis words.
pub fn center_kernel(b: CenterBounds) -> Result<Vec<NCPoly>> {
    let h = hhat_q();
    let domain = center_domain(b);
    let gens = [h.letter("X"), h.letter("Y"), h.letter("t0")];
    let mut cols: Indexer<(usize, Word)> = Indexer::default();
    let mut ech = Echelon::new();
    for w in &domain {
        let mut row = SparseVec::new();
        for (gi, g) in gens.iter().enumerate() {
            for (word, c) in commutator(&h, g, w)?.terms() {
                row.insert(cols.index((gi, word.clone())), c.clone());
            }
        }
        ech.insert(row);
    }
    let kernel = rref(ech.kernel());
    let mut out = Vec::new();
    for v in kernel {
        let mut acc = NCPoly::zero(h.alphabet());
        for (idx, c) in v {
            acc = acc.try_add(&domain[idx].scale(&c))?;
        }
        out.push(acc);
    }
    Ok(out)
}

/// Number of window words, `(2n+1)^2 * 2 * C(m+4, 4)`.
pub fn center_domain_size(b: CenterBounds) -> usize {
    let side = (2 * b.n + 1) as usize;
    let mut t = 1usize;
    for i in 1..=b.m as usize {
        t = t * (i + 4) / i;
    }
    side * side * 2 * t
}
