//! Recursive-descent parser for scalar and noncommutative expressions.
//!
//! ```text
//! expr   := ['+'|'-'] term (('+'|'-') term)*
//! term   := factor (('*' | '/' | <juxtaposition>) factor)*
//! factor := atom ['^' ['-'] integer]
//! atom   := integer | identifier | '(' expr ')'
//! ```
//!
//! The identifier `q` is the field parameter. Every other identifier is
//! resolved through a [`Scope`]. Products are formed in the free algebra; no
//! relations are applied while parsing.

use std::sync::Arc;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::free_algebra::{Alphabet, NCPoly, Word};
use crate::scalar::QScalar;

/// Resolves identifiers to elements of the free algebra on an alphabet.
pub trait Scope {
    fn alphabet(&self) -> &Arc<Alphabet>;

    /// Value bound to `name`.
    fn lookup(&self, name: &str) -> Option<NCPoly> {
        let al = self.alphabet();
        al.lookup(name).map(|g| NCPoly::letter(al, g))
    }

    /// Value of `name^-1`, when `name` is invertible.
    fn lookup_inverse(&self, name: &str) -> Option<NCPoly> {
        let al = self.alphabet();
        al.lookup(&format!("{name}^-1")).map(|g| NCPoly::letter(al, g))
    }
}

/// Scope whose only names are the letters of an alphabet; `g^-1` resolves to
/// the letter named `g^-1` when the alphabet has one.
pub struct LetterScope(pub Arc<Alphabet>);

impl Scope for LetterScope {
    fn alphabet(&self) -> &Arc<Alphabet> {
        &self.0
    }
}

pub fn parse_expr(text: &str, scope: &dyn Scope) -> Result<NCPoly> {
    let mut p = Parser { src: text.as_bytes(), pos: 0, scope };
    let out = p.expr()?;
    p.skip_ws();
    if p.pos < p.src.len() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(out)
}

/// Parses a Laurent expression or quotient in `q` into canonical form.
pub fn parse_scalar(text: &str) -> Result<QScalar> {
    let empty = Alphabet::new::<&str>(&[])?;
    let p = parse_expr(text, &LetterScope(empty))?;
    Ok(p.as_scalar().expect("an empty alphabet only yields scalars"))
}

/// Parses a word written as letter names separated by `*` (`1` is the empty
/// word). Used for rule left-hand sides in spec files.
pub fn parse_word(text: &str, alphabet: &Alphabet) -> Result<Word> {
    let t = text.trim();
    if t == "1" {
        return Ok(Word::empty());
    }
    t.split('*')
        .map(|s| alphabet.id(s.trim()))
        .collect::<Result<Vec<_>>>()
        .map(Word)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    scope: &'a dyn Scope,
}

impl Parser<'_> {
    fn error(&self, msg: impl Into<String>) -> Error {
        Error::Parse { offset: self.pos, message: msg.into() }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn alphabet(&self) -> &Arc<Alphabet> {
        self.scope.alphabet()
    }

    fn expr(&mut self) -> Result<NCPoly> {
        let mut neg = false;
        match self.peek() {
            Some(b'-') => {
                neg = true;
                self.pos += 1;
            }
            Some(b'+') => self.pos += 1,
            _ => {}
        }
        let mut acc = self.term()?;
        if neg {
            acc = acc.neg();
        }
        loop {
            match self.peek() {
                Some(op @ (b'+' | b'-')) => {
                    self.pos += 1;
                    let mut negate = op == b'-';
                    // canonical output writes `a + -b`
                    while let Some(sign @ (b'+' | b'-')) = self.peek() {
                        self.pos += 1;
                        negate ^= sign == b'-';
                    }
                    let t = self.term()?;
                    acc = if negate { acc.try_sub(&t)? } else { acc.try_add(&t)? };
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<NCPoly> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    acc = acc.try_mul(&self.factor()?)?;
                }
                Some(b'/') => {
                    self.pos += 1;
                    let at = self.pos;
                    let d = self.factor()?;
                    let Some(s) = d.as_scalar() else {
                        return Err(Error::Parse { offset: at, message: "can only divide by a scalar".into() });
                    };
                    let inv = s.inv().map_err(|_| Error::Parse { offset: at, message: "division by zero".into() })?;
                    acc = acc.scale(&inv);
                }
                Some(c) if c.is_ascii_alphanumeric() || c == b'_' || c == b'(' => {
                    acc = acc.try_mul(&self.factor()?)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<NCPoly> {
        let start = self.pos;
        let (base, name) = self.atom()?;
        if self.peek() != Some(b'^') {
            return Ok(base);
        }
        self.pos += 1;
        let exp = self.signed_int()?;
        if exp >= 0 {
            let mut acc = NCPoly::one(self.alphabet());
            for _ in 0..exp {
                acc = acc.try_mul(&base)?;
            }
            return Ok(acc);
        }
        let inverse = if let Some(s) = base.as_scalar() {
            let inv = s.inv().map_err(|_| Error::Parse { offset: start, message: "zero to a negative power".into() })?;
            NCPoly::constant(self.alphabet(), inv)
        } else {
            let name = name.ok_or_else(|| Error::Parse {
                offset: start,
                message: "negative power of a non-invertible expression".into(),
            })?;
            self.scope.lookup_inverse(&name).ok_or_else(|| Error::Parse {
                offset: start,
                message: format!("negative power of non-invertible {name}"),
            })?
        };
        let mut acc = NCPoly::one(self.alphabet());
        for _ in 0..exp.unsigned_abs() {
            acc = acc.try_mul(&inverse)?;
        }
        Ok(acc)
    }

    fn signed_int(&mut self) -> Result<i64> {
        let neg = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                true
            }
            Some(b'+') => {
                self.pos += 1;
                false
            }
            _ => false,
        };
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected an integer exponent"));
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        let v: i64 = digits.parse().map_err(|_| Error::Parse { offset: start, message: "exponent out of range".into() })?;
        if v > 10_000 {
            return Err(Error::Parse { offset: start, message: "exponent out of range".into() });
        }
        Ok(if neg { -v } else { v })
    }

    /// Returns the parsed atom and, for identifiers, the name.
    fn atom(&mut self) -> Result<(NCPoly, Option<String>)> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.error("expected ')'"));
                }
                self.pos += 1;
                Ok((inner, None))
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
                let n: BigInt = digits.parse().expect("digits parse");
                Ok((NCPoly::constant(self.alphabet(), QScalar::from_bigint(n)), None))
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self.pos < self.src.len() && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_') {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii identifier").to_string();
                if name == "q" {
                    return Ok((NCPoly::constant(self.alphabet(), QScalar::q()), Some(name)));
                }
                match self.scope.lookup(&name) {
                    Some(v) => Ok((v, Some(name))),
                    None => Err(Error::Parse { offset: start, message: format!("unknown identifier {name}") }),
                }
            }
            Some(_) => Err(self.error("unexpected character")),
            None => Err(self.error("unexpected end of input")),
        }
    }
}
