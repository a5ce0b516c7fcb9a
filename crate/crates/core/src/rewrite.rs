//! Length-two rewriting systems, normal forms and Diamond Lemma ambiguity
//! checks.
//!
//! Normal forms are computed word by word and memoized per system. For a word
//! `g w` the suffix `w` is normalized first; every irreducible word `v` of the
//! result can then only be reducible at its front pair `g v[0]`. This keeps
//! the memo table small and highly shared. Once the system is known to be
//! confluent every reduction order reaches the same normal form.

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::sync::{Arc, Mutex};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::free_algebra::{add_term, Alphabet, GenId, NCPoly, Terms, Word};
use crate::scalar::QScalar;

/// Default bound on rule applications per `normalize` call.
pub const DEFAULT_FUEL: usize = 1_000_000;

/// Recursion bound; a chain this long means the rules do not terminate.
const MAX_DEPTH: usize = 20_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum RuleKind {
    First,
    Second,
    Third,
}

impl RuleKind {
    pub fn as_str(self) -> &'static str {
        match self {
            RuleKind::First => "first",
            RuleKind::Second => "second",
            RuleKind::Third => "third",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "first" => Some(RuleKind::First),
            "second" => Some(RuleKind::Second),
            "third" => Some(RuleKind::Third),
            _ => None,
        }
    }
}

#[derive(Clone, Debug)]
pub struct RewriteRule {
    pub lhs: [GenId; 2],
    pub rhs: NCPoly,
    pub kind: RuleKind,
}

impl RewriteRule {
    pub fn lhs_word(&self) -> Word {
        Word(self.lhs.to_vec())
    }
}

/// A set of reduction rules `g h -> rhs`, at most one per forbidden pair.
pub struct RewriteSystem {
    alphabet: Arc<Alphabet>,
    rules: Vec<RewriteRule>,
    table: Vec<Option<usize>>,
    memo: Mutex<HashMap<Word, Arc<Terms>>>,
}

impl Clone for RewriteSystem {
    fn clone(&self) -> Self {
        RewriteSystem::new(self.alphabet.clone(), self.rules.clone()).expect("rules already validated")
    }
}

impl fmt::Debug for RewriteSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("RewriteSystem")
            .field("alphabet", &self.alphabet.generators().iter().map(|g| &g.name).collect::<Vec<_>>())
            .field("rules", &self.rules.len())
            .finish()
    }
}

/// Outcome of reducing one overlap ambiguity both ways.
#[derive(Clone, Debug)]
pub struct Ambiguity {
    pub word: Word,
    pub left: NCPoly,
    pub right: NCPoly,
    pub resolved: bool,
}

#[derive(Clone, Debug, Default)]
pub struct ConfluenceReport {
    pub ambiguities: Vec<Ambiguity>,
}

impl ConfluenceReport {
    pub fn all_resolved(&self) -> bool {
        self.ambiguities.iter().all(|a| a.resolved)
    }

    pub fn unresolved(&self) -> impl Iterator<Item = &Ambiguity> {
        self.ambiguities.iter().filter(|a| !a.resolved)
    }

    pub fn find(&self, w: &Word) -> Option<&Ambiguity> {
        self.ambiguities.iter().find(|a| &a.word == w)
    }
}

struct Budget {
    fuel: usize,
    left: usize,
    active: HashSet<Word>,
    depth: usize,
}

impl RewriteSystem {
    pub fn new(alphabet: Arc<Alphabet>, rules: Vec<RewriteRule>) -> Result<Self> {
        let n = alphabet.len();
        let mut table = vec![None; n * n];
        for (i, r) in rules.iter().enumerate() {
            let [a, b] = r.lhs;
            if a as usize >= n || b as usize >= n {
                return Err(Error::UnknownName(format!("rule letter outside alphabet in rule {i}")));
            }
            if r.rhs.alphabet().as_ref() != alphabet.as_ref() {
                return Err(Error::AlphabetMismatch);
            }
            let slot = &mut table[a as usize * n + b as usize];
            if slot.is_some() {
                let w = r.lhs_word().display(&alphabet);
                return Err(Error::UnknownName(format!("two rules share the left-hand side {w}")));
            }
            *slot = Some(i);
        }
        Ok(RewriteSystem { alphabet, rules, table, memo: Mutex::new(HashMap::new()) })
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.alphabet
    }

    pub fn rules(&self) -> &[RewriteRule] {
        &self.rules
    }

    pub fn rule_for(&self, a: GenId, b: GenId) -> Option<&RewriteRule> {
        let n = self.alphabet.len();
        self.table[a as usize * n + b as usize].map(|i| &self.rules[i])
    }

    pub fn is_forbidden(&self, a: GenId, b: GenId) -> bool {
        self.rule_for(a, b).is_some()
    }

    /// True iff no adjacent pair of letters is a rule left-hand side.
    pub fn is_irreducible(&self, w: &Word) -> bool {
        w.letters().windows(2).all(|p| !self.is_forbidden(p[0], p[1]))
    }

    /// Same system with every rule coefficient passed through `q -> 1/q`.
    pub fn invert_q(&self) -> RewriteSystem {
        let rules = self
            .rules
            .iter()
            .map(|r| RewriteRule { lhs: r.lhs, rhs: r.rhs.invert_q(), kind: r.kind })
            .collect();
        RewriteSystem::new(self.alphabet.clone(), rules).expect("same shape as a valid system")
    }

    /// Copy of the system with the rule for `lhs` replaced.
    pub fn with_rule(&self, lhs: [GenId; 2], rhs: NCPoly) -> Result<RewriteSystem> {
        let mut rules = self.rules.clone();
        let r = rules
            .iter_mut()
            .find(|r| r.lhs == lhs)
            .ok_or_else(|| Error::UnknownName(Word(lhs.to_vec()).display(&self.alphabet)))?;
        r.rhs = rhs;
        RewriteSystem::new(self.alphabet.clone(), rules)
    }

    pub fn normalize(&self, p: &NCPoly) -> Result<NCPoly> {
        self.normalize_with_fuel(p, DEFAULT_FUEL)
    }

    /// Reduces `p` to its normal form, failing after `fuel` rule applications.
    pub fn normalize_with_fuel(&self, p: &NCPoly, fuel: usize) -> Result<NCPoly> {
        if p.alphabet().as_ref() != self.alphabet.as_ref() {
            return Err(Error::AlphabetMismatch);
        }
        let mut budget = Budget { fuel, left: fuel, active: HashSet::new(), depth: 0 };
        let mut out = Terms::new();
        for (w, c) in p.terms() {
            let nf = self.word_nf(w, &mut budget)?;
            for (v, d) in nf.iter() {
                add_term(&mut out, v.clone(), c.mul(d));
            }
        }
        Ok(NCPoly::from_terms(&self.alphabet, out))
    }

    /// Normal form of a product; both factors are normalized first.
    pub fn mul(&self, a: &NCPoly, b: &NCPoly) -> Result<NCPoly> {
        let a = self.normalize(a)?;
        let b = self.normalize(b)?;
        let mut budget = Budget { fuel: DEFAULT_FUEL, left: DEFAULT_FUEL, active: HashSet::new(), depth: 0 };
        let mut out = Terms::new();
        for (u, c) in a.terms() {
            for (v, d) in b.terms() {
                let cd = c.mul(d);
                let nf = self.word_nf(&u.concat(v), &mut budget)?;
                for (w, e) in nf.iter() {
                    add_term(&mut out, w.clone(), cd.mul(e));
                }
            }
        }
        Ok(NCPoly::from_terms(&self.alphabet, out))
    }

    /// Normal form of a product of several factors, reduced after each step.
    pub fn product(&self, factors: &[&NCPoly]) -> Result<NCPoly> {
        let mut acc = NCPoly::one(&self.alphabet);
        for f in factors {
            acc = self.mul(&acc, f)?;
        }
        Ok(acc)
    }

    fn word_nf(&self, w: &Word, budget: &mut Budget) -> Result<Arc<Terms>> {
        if w.len() < 2 {
            return Ok(Arc::new(std::iter::once((w.clone(), QScalar::one())).collect()));
        }
        if let Some(hit) = self.memo.lock().expect("memo lock").get(w) {
            return Ok(hit.clone());
        }
        if !budget.active.insert(w.clone()) || budget.depth > MAX_DEPTH {
            return Err(self.stalled(budget, w));
        }
        budget.depth += 1;
        let res = self.word_nf_uncached(w, budget);
        budget.depth -= 1;
        budget.active.remove(w);
        let res = Arc::new(res?);
        self.memo.lock().expect("memo lock").insert(w.clone(), res.clone());
        Ok(res)
    }

    fn stalled(&self, budget: &Budget, w: &Word) -> Error {
        Error::NonTermination { fuel: budget.fuel, word: w.display(&self.alphabet) }
    }

    fn word_nf_uncached(&self, w: &Word, budget: &mut Budget) -> Result<Terms> {
        let head = w.letters()[0];
        let tail = Word(w.letters()[1..].to_vec());
        let tail_nf = self.word_nf(&tail, budget)?;
        let mut out = Terms::new();
        for (v, c) in tail_nf.iter() {
            match v.letters().first().and_then(|&b| self.rule_for(head, b)) {
                None => {
                    let mut letters = Vec::with_capacity(v.len() + 1);
                    letters.push(head);
                    letters.extend_from_slice(v.letters());
                    add_term(&mut out, Word(letters), c.clone());
                }
                Some(rule) => {
                    if budget.left == 0 {
                        return Err(self.stalled(budget, w));
                    }
                    budget.left -= 1;
                    let rest = &v.letters()[1..];
                    for (r, d) in rule.rhs.terms() {
                        let mut letters = Vec::with_capacity(r.len() + rest.len());
                        letters.extend_from_slice(r.letters());
                        letters.extend_from_slice(rest);
                        let cd = c.mul(d);
                        for (x, e) in self.word_nf(&Word(letters), budget)?.iter() {
                            add_term(&mut out, x.clone(), cd.mul(e));
                        }
                    }
                }
            }
        }
        Ok(out)
    }

    /// All words `a b c` with both `a b` and `b c` forbidden, in word order.
    pub fn overlaps(&self) -> Vec<Word> {
        let mut out = Vec::new();
        for r in &self.rules {
            let [a, b] = r.lhs;
            for s in &self.rules {
                if s.lhs[0] == b {
                    out.push(Word(vec![a, b, s.lhs[1]]));
                }
            }
        }
        out.sort();
        out
    }

    /// Reduces an overlap `a b c` starting from the left pair and from the
    /// right pair, then compares the two normal forms.
    pub fn resolve(&self, w: &Word) -> Result<Ambiguity> {
        let l = w.letters();
        let (left_rule, right_rule) = match l {
            [a, b, c] => (self.rule_for(*a, *b), self.rule_for(*b, *c)),
            _ => (None, None),
        };
        let (Some(left_rule), Some(right_rule)) = (left_rule, right_rule) else {
            return Err(Error::UnknownName(format!("{} is not an overlap ambiguity", w.display(&self.alphabet))));
        };
        let last = NCPoly::letter(&self.alphabet, l[2]);
        let first = NCPoly::letter(&self.alphabet, l[0]);
        let left = self.normalize(&left_rule.rhs.try_mul(&last)?)?;
        let right = self.normalize(&first.try_mul(&right_rule.rhs)?)?;
        let resolved = left == right;
        Ok(Ambiguity { word: w.clone(), left, right, resolved })
    }

    pub fn check_confluence(&self) -> Result<ConfluenceReport> {
        let ambiguities = self.overlaps().iter().map(|w| self.resolve(w)).collect::<Result<Vec<_>>>()?;
        Ok(ConfluenceReport { ambiguities })
    }

    /// Drops the memo table.
    pub fn clear_cache(&self) {
        self.memo.lock().expect("memo lock").clear();
    }
}
