//! Sparse exact linear algebra over Q(q): fraction-free row echelon form for
//! ranks and kernels.

use std::collections::{BTreeMap, HashMap};
use std::hash::Hash;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::scalar::QScalar;

pub type SparseVec = BTreeMap<usize, QScalar>;

/// Assigns dense column indices to keys in first-seen order.
#[derive(Debug)]
pub struct Indexer<K> {
    map: HashMap<K, usize>,
}

impl<K: Eq + Hash> Default for Indexer<K> {
    fn default() -> Self {
        Indexer { map: HashMap::new() }
    }
}

impl<K: Eq + Hash> Indexer<K> {
    pub fn index(&mut self, k: K) -> usize {
        let n = self.map.len();
        *self.map.entry(k).or_insert(n)
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }
}

fn axpy(a: &QScalar, x: &SparseVec, b: &QScalar, y: &SparseVec) -> SparseVec {
    // a*x - b*y
    let mut out = SparseVec::new();
    for (&i, v) in x {
        out.insert(i, a.mul(v));
    }
    for (&i, v) in y {
        let t = b.mul(v);
        let s = match out.get(&i) {
            Some(cur) => cur.sub(&t),
            None => t.neg(),
        };
        if s.is_zero() {
            out.remove(&i);
        } else {
            out.insert(i, s);
        }
    }
    out
}

/// Divides out the common Laurent-monomial and integer content when every
/// entry is a Laurent polynomial. Keeps fraction-free updates from growing.
fn remove_content(row: &mut SparseVec, aux: &mut SparseVec) {
    let mut min_exp: Option<i32> = None;
    let mut g = BigInt::zero();
    for v in row.values().chain(aux.values()) {
        let Some(terms) = v.laurent_terms() else { return };
        for (e, c) in terms {
            min_exp = Some(min_exp.map_or(e, |m| m.min(e)));
            g = g.gcd(&c);
        }
    }
    let Some(e) = min_exp else { return };
    if e == 0 && g.is_one() {
        return;
    }
    let factor = QScalar::laurent_term(g, e).inv().expect("nonzero content");
    for v in row.values_mut().chain(aux.values_mut()) {
        *v = v.mul(&factor);
    }
}

/// A row together with a record of how it was combined from the input rows.
#[derive(Clone, Debug)]
struct Row {
    main: SparseVec,
    aux: SparseVec,
}

/// Incremental row echelon form with pivot on the first nonzero column.
#[derive(Default, Debug)]
pub struct Echelon {
    pivots: BTreeMap<usize, Row>,
    kernel: Vec<SparseVec>,
    inserted: usize,
}

impl Echelon {
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds the next input row. Returns true if it increased the rank.
    pub fn insert(&mut self, row: SparseVec) -> bool {
        let id = self.inserted;
        self.inserted += 1;
        let mut r = Row { main: row, aux: SparseVec::from([(id, QScalar::one())]) };
        while let Some((&lead, lv)) = r.main.iter().next() {
            let Some(p) = self.pivots.get(&lead) else {
                remove_content(&mut r.main, &mut r.aux);
                self.pivots.insert(lead, r);
                return true;
            };
            let pv = &p.main[&lead];
            let lv = lv.clone();
            r.main = axpy(pv, &r.main, &lv, &p.main);
            r.aux = axpy(pv, &r.aux, &lv, &p.aux);
            remove_content(&mut r.main, &mut r.aux);
        }
        self.kernel.push(r.aux);
        false
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Coefficient vectors (over input row numbers) of a spanning set of
    /// the left kernel.
    pub fn kernel(&self) -> &[SparseVec] {
        &self.kernel
    }
}

pub fn rank(rows: impl IntoIterator<Item = SparseVec>) -> usize {
    let mut e = Echelon::new();
    for r in rows {
        e.insert(r);
    }
    e.rank()
}

/// Reduced row echelon form with monic pivots. Zero rows are dropped.
pub fn rref(rows: &[SparseVec]) -> Vec<SparseVec> {
    let mut basis: Vec<SparseVec> = Vec::new();
    for r in rows {
        let mut r = r.clone();
        for b in &basis {
            let lead = *b.keys().next().expect("nonzero basis row");
            if let Some(c) = r.get(&lead).cloned() {
                r = axpy(&QScalar::one(), &r, &c, b);
            }
        }
        let Some((&lead, lv)) = r.iter().next() else { continue };
        let inv = lv.inv().expect("nonzero pivot");
        let r: SparseVec = r.iter().map(|(&i, v)| (i, v.mul(&inv))).collect();
        for b in basis.iter_mut() {
            if let Some(c) = b.get(&lead).cloned() {
                *b = axpy(&QScalar::one(), b, &c, &r);
            }
        }
        basis.push(r);
    }
    basis.sort_by_key(|r| *r.keys().next().expect("nonzero"));
    basis
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(entries: &[(usize, QScalar)]) -> SparseVec {
        entries.iter().cloned().collect()
    }

    #[test]
    fn rank_of_dependent_rows() {
        let q = QScalar::q();
        let a = v(&[(0, q.clone()), (1, QScalar::one())]);
        let b = v(&[(0, q.mul(&q)), (1, q.clone())]);
        let c = v(&[(1, QScalar::one())]);
        assert_eq!(rank([a.clone(), b.clone()]), 1);
        assert_eq!(rank([a, b, c]), 2);
    }

    #[test]
    fn kernel_records_combination() {
        let q = QScalar::q();
        let a = v(&[(0, QScalar::one()), (1, q.clone())]);
        let b = v(&[(0, q.clone()), (1, q.mul(&q))]);
        let mut e = Echelon::new();
        assert!(e.insert(a));
        assert!(!e.insert(b));
        let k = rref(e.kernel());
        // a - b/q = 0
        assert_eq!(k, vec![v(&[(0, QScalar::one()), (1, QScalar::q_pow(-1).neg())])]);
    }

    #[test]
    fn rref_identity() {
        let rows = vec![v(&[(1, QScalar::from_int(2))]), v(&[(0, QScalar::one()), (1, QScalar::one())])];
        let r = rref(&rows);
        assert_eq!(r, vec![v(&[(0, QScalar::one())]), v(&[(1, QScalar::one())])]);
    }
}
