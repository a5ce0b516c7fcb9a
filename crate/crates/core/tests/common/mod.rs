#![allow(dead_code)]

use std::collections::BTreeMap;
use std::sync::Arc;

use awdaha::algebras::Algebra;
use awdaha::{NCPoly, QScalar, Word};
use proptest::prelude::*;

/// Small Laurent polynomials in q.
pub fn laurent() -> impl Strategy<Value = QScalar> {
    prop::collection::vec((-3i64..=3, -3i32..=3), 0..4).prop_map(|t| QScalar::laurent(&t))
}

/// Ratios of small Laurent polynomials.
pub fn scalar() -> impl Strategy<Value = QScalar> {
    (laurent(), laurent()).prop_map(|(a, b)| if b.is_zero() { a } else { a.div(&b).unwrap() })
}

pub fn nonzero_scalar() -> impl Strategy<Value = QScalar> {
    scalar().prop_filter("nonzero", |s| !s.is_zero())
}

/// Random element of the free algebra on the algebra's alphabet.
pub fn poly(alg: Arc<Algebra>, max_len: usize, max_terms: usize) -> impl Strategy<Value = NCPoly> {
    let n = alg.alphabet().len() as u8;
    prop::collection::vec((laurent(), prop::collection::vec(0..n, 0..=max_len)), 0..=max_terms).prop_map(
        move |terms| {
            let mut map: BTreeMap<Word, QScalar> = BTreeMap::new();
            for (c, w) in terms {
                let w = Word(w);
                let s = map.get(&w).map(|x| x.add(&c)).unwrap_or(c);
                map.insert(w, s);
            }
            map.retain(|_, c| !c.is_zero());
            NCPoly::from_terms(alg.alphabet(), map)
        },
    )
}
