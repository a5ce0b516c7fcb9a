//! Words over a finite alphabet and their Q(q)-linear combinations.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::scalar::QScalar;

/// Index of a letter inside its [`Alphabet`].
pub type GenId = u8;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generator {
    pub id: GenId,
    pub name: String,
}

/// An ordered set of generators. The order is the basis order used when
/// printing normal forms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Alphabet {
    generators: Vec<Generator>,
}

impl Alphabet {
    pub fn new<S: AsRef<str>>(names: &[S]) -> Result<Arc<Self>> {
        let mut generators = Vec::with_capacity(names.len());
        for (i, name) in names.iter().enumerate() {
            let name = name.as_ref();
            if name.is_empty() || generators.iter().any(|g: &Generator| g.name == name) {
                return Err(Error::UnknownName(format!("duplicate or empty generator name {name:?}")));
            }
            generators.push(Generator { id: i as GenId, name: name.to_string() });
        }
        Ok(Arc::new(Alphabet { generators }))
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn name(&self, id: GenId) -> &str {
        &self.generators[id as usize].name
    }

    pub fn lookup(&self, name: &str) -> Option<GenId> {
        self.generators.iter().find(|g| g.name == name).map(|g| g.id)
    }

    pub fn id(&self, name: &str) -> Result<GenId> {
        self.lookup(name).ok_or_else(|| Error::UnknownName(name.to_string()))
    }
}

/// A finite sequence of letters. Ordered by length first, then
/// lexicographically by alphabet position.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Word(pub Vec<GenId>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letter(g: GenId) -> Self {
        Word(vec![g])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[GenId] {
        &self.0
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.len() + other.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn reversed(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }

    pub fn display(&self, alphabet: &Alphabet) -> String {
        if self.is_empty() {
            return "1".to_string();
        }
        self.0.iter().map(|&g| alphabet.name(g)).collect::<Vec<_>>().join("*")
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len().cmp(&other.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse coefficient map; zero coefficients are never stored.
pub type Terms = BTreeMap<Word, QScalar>;

pub(crate) fn add_term(terms: &mut Terms, w: Word, c: QScalar) {
    if c.is_zero() {
        return;
    }
    match terms.entry(w) {
        std::collections::btree_map::Entry::Vacant(e) => {
            e.insert(c);
        }
        std::collections::btree_map::Entry::Occupied(mut e) => {
            let s = e.get().add(&c);
            if s.is_zero() {
                e.remove();
            } else {
                *e.get_mut() = s;
            }
        }
    }
}

/// An element of the free algebra over an alphabet with coefficients in Q(q).
#[derive(Clone)]
pub struct NCPoly {
    alphabet: Arc<Alphabet>,
    terms: Terms,
}

impl PartialEq for NCPoly {
    fn eq(&self, other: &Self) -> bool {
        same_alphabet(&self.alphabet, &other.alphabet) && self.terms == other.terms
    }
}

impl Eq for NCPoly {}

fn same_alphabet(a: &Arc<Alphabet>, b: &Arc<Alphabet>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

impl NCPoly {
    pub fn zero(alphabet: &Arc<Alphabet>) -> Self {
        NCPoly { alphabet: alphabet.clone(), terms: Terms::new() }
    }

    pub fn constant(alphabet: &Arc<Alphabet>, c: QScalar) -> Self {
        Self::monomial(alphabet, Word::empty(), c)
    }

    pub fn one(alphabet: &Arc<Alphabet>) -> Self {
        Self::constant(alphabet, QScalar::one())
    }

    pub fn monomial(alphabet: &Arc<Alphabet>, w: Word, c: QScalar) -> Self {
        let mut terms = Terms::new();
        add_term(&mut terms, w, c);
        NCPoly { alphabet: alphabet.clone(), terms }
    }

    pub fn word(alphabet: &Arc<Alphabet>, w: Word) -> Self {
        Self::monomial(alphabet, w, QScalar::one())
    }

    pub fn letter(alphabet: &Arc<Alphabet>, g: GenId) -> Self {
        Self::word(alphabet, Word::letter(g))
    }

    pub fn from_terms(alphabet: &Arc<Alphabet>, terms: Terms) -> Self {
        let terms = terms.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        NCPoly { alphabet: alphabet.clone(), terms }
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.alphabet
    }

    pub fn terms(&self) -> &Terms {
        &self.terms
    }

    pub fn into_terms(self) -> Terms {
        self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, w: &Word) -> QScalar {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    /// The scalar value if this element is a multiple of the empty word.
    pub fn as_scalar(&self) -> Option<QScalar> {
        match self.terms.len() {
            0 => Some(QScalar::zero()),
            1 => self.terms.get(&Word::empty()).cloned(),
            _ => None,
        }
    }

    fn check(&self, other: &NCPoly) -> Result<()> {
        if same_alphabet(&self.alphabet, &other.alphabet) {
            Ok(())
        } else {
            Err(Error::AlphabetMismatch)
        }
    }

    pub fn try_add(&self, other: &NCPoly) -> Result<NCPoly> {
        self.check(other)?;
        let mut terms = self.terms.clone();
        for (w, c) in &other.terms {
            add_term(&mut terms, w.clone(), c.clone());
        }
        Ok(NCPoly { alphabet: self.alphabet.clone(), terms })
    }

    pub fn try_sub(&self, other: &NCPoly) -> Result<NCPoly> {
        self.try_add(&other.neg())
    }

    pub fn neg(&self) -> NCPoly {
        self.scale(&QScalar::from_int(-1))
    }

    pub fn scale(&self, c: &QScalar) -> NCPoly {
        if c.is_zero() {
            return NCPoly::zero(&self.alphabet);
        }
        let terms = self.terms.iter().map(|(w, a)| (w.clone(), a.mul(c))).collect();
        NCPoly { alphabet: self.alphabet.clone(), terms }
    }

    /// Bilinear extension of concatenation. No relations are applied.
    pub fn try_mul(&self, other: &NCPoly) -> Result<NCPoly> {
        self.check(other)?;
        let mut terms = Terms::new();
        for (u, a) in &self.terms {
            for (v, b) in &other.terms {
                add_term(&mut terms, u.concat(v), a.mul(b));
            }
        }
        Ok(NCPoly { alphabet: self.alphabet.clone(), terms })
    }

    /// Reverses the letters of every word.
    pub fn reverse(&self) -> NCPoly {
        let terms = self.terms.iter().map(|(w, c)| (w.reversed(), c.clone())).collect();
        NCPoly { alphabet: self.alphabet.clone(), terms }
    }

    /// Applies `q -> 1/q` to every coefficient.
    pub fn invert_q(&self) -> NCPoly {
        let terms = self.terms.iter().map(|(w, c)| (w.clone(), c.invert_q())).collect();
        NCPoly { alphabet: self.alphabet.clone(), terms }
    }

    /// Replaces each letter `g` by `images(g)` and multiplies out in the free
    /// algebra of `target`. With `twist`, coefficients pass through `q -> 1/q`.
    pub fn substitute<'a, F>(&self, target: &Arc<Alphabet>, images: F, twist: bool) -> Result<NCPoly>
    where
        F: Fn(GenId) -> Option<&'a NCPoly>,
    {
        let mut out = NCPoly::zero(target);
        for (w, c) in &self.terms {
            let c = if twist { c.invert_q() } else { c.clone() };
            let mut acc = NCPoly::constant(target, c);
            for &g in w.letters() {
                let img = images(g).ok_or_else(|| Error::MissingImage(self.alphabet.name(g).to_string()))?;
                acc = acc.try_mul(img)?;
            }
            out = out.try_add(&acc)?;
        }
        Ok(out)
    }

    /// Same element viewed over another alphabet with identical letter names
    /// in the same order (for instance an algebra and its q-inverted sibling).
    pub fn rebase(&self, alphabet: &Arc<Alphabet>) -> Result<NCPoly> {
        if self.alphabet.len() != alphabet.len()
            || self.alphabet.generators().iter().zip(alphabet.generators()).any(|(a, b)| a.name != b.name)
        {
            return Err(Error::AlphabetMismatch);
        }
        Ok(NCPoly { alphabet: alphabet.clone(), terms: self.terms.clone() })
    }

    pub fn to_json(&self) -> serde_json::Value {
        #[derive(Serialize)]
        struct Term<'a> {
            coeff: String,
            word: Vec<&'a str>,
        }
        let terms: Vec<Term> = self
            .terms
            .iter()
            .map(|(w, c)| Term {
                coeff: c.to_string(),
                word: w.letters().iter().map(|&g| self.alphabet.name(g)).collect(),
            })
            .collect();
        serde_json::to_value(terms).expect("terms serialize")
    }
}

/// Formats `c * w` in the parser's grammar.
pub(crate) fn format_term(c: &QScalar, word: &str, word_is_empty: bool) -> String {
    if word_is_empty {
        return if c.display_is_atomic() { c.to_string() } else { format!("({c})") };
    }
    if c.is_one() {
        return word.to_string();
    }
    if c.neg().is_one() {
        return format!("-{word}");
    }
    if c.display_is_atomic() {
        format!("{c}*{word}")
    } else {
        format!("({c})*{word}")
    }
}

/// Joins formatted terms, writing a leading minus as a subtraction.
pub(crate) fn join_terms(parts: &[String]) -> String {
    let mut out = String::new();
    for (i, p) in parts.iter().enumerate() {
        match (i, p.strip_prefix('-')) {
            (0, _) => out.push_str(p),
            (_, Some(rest)) => {
                out.push_str(" - ");
                out.push_str(rest);
            }
            (_, None) => {
                out.push_str(" + ");
                out.push_str(p);
            }
        }
    }
    out
}

impl fmt::Display for NCPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(w, c)| format_term(c, &w.display(&self.alphabet), w.is_empty()))
            .collect();
        write!(f, "{}", join_terms(&parts))
    }
}

impl fmt::Debug for NCPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NCPoly({self})")
    }
}
