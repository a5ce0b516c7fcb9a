//! Exact arithmetic in the rational function field Q(q).
//!
//! Every coefficient the engine touches is a [`QScalar`]: a reduced quotient of
//! two integer polynomials in the formal parameter `q`. The canonical form is
//! unique, so `==` on values is mathematical equality.
//!
//! Nearly all coefficients that show up in practice are Laurent polynomials
//! (denominator a pure power of `q`). Those take a fast path that never runs a
//! polynomial gcd.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Dense integer polynomial in `q`, coefficients stored from degree 0 upward.
/// Trailing zeros are never stored, so the zero polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// `c * q^exp`.
    pub fn monomial(c: BigInt, exp: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); exp + 1];
        coeffs[exp] = c;
        IntPoly { coeffs }
    }

    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial reports 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn lead(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    /// Exponent of the lowest nonzero term.
    pub fn valuation(&self) -> usize {
        self.coeffs.iter().position(|c| !c.is_zero()).unwrap_or(0)
    }

    /// True for `c * q^k` with `c != 0`.
    pub fn is_monomial(&self) -> bool {
        !self.is_zero() && self.coeffs[..self.coeffs.len() - 1].iter().all(Zero::is_zero)
    }

    pub fn shift_up(&self, by: usize) -> Self {
        if self.is_zero() || by == 0 {
            return self.clone();
        }
        let mut coeffs = vec![BigInt::zero(); by];
        coeffs.extend(self.coeffs.iter().cloned());
        IntPoly { coeffs }
    }

    pub fn shift_down(&self, by: usize) -> Self {
        debug_assert!(by <= self.valuation() || self.is_zero());
        IntPoly::from_coeffs(self.coeffs.iter().skip(by).cloned().collect())
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        IntPoly { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    pub fn div_scalar_exact(&self, c: &BigInt) -> Self {
        IntPoly { coeffs: self.coeffs.iter().map(|a| a / c).collect() }
    }

    /// Gcd of the coefficients (nonnegative).
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut c = self.content();
        if self.lead().is_negative() {
            c = -c;
        }
        self.div_scalar_exact(&c)
    }

    /// Pseudo-remainder of `self` by `d`.
    fn pseudo_rem(&self, d: &IntPoly) -> IntPoly {
        let mut r = self.clone();
        let dl = d.lead();
        let dd = d.degree();
        while !r.is_zero() && r.degree() >= dd {
            let shift = r.degree() - dd;
            let rl = r.lead();
            // r <- dl * r - rl * q^shift * d
            let mut next = r.scale(&dl);
            for (i, c) in d.coeffs.iter().enumerate() {
                next.coeffs[i + shift] -= &rl * c;
            }
            r = IntPoly::from_coeffs(next.coeffs);
        }
        r
    }

    /// Primitive gcd with positive leading coefficient (primitive PRS).
    pub fn gcd(&self, other: &IntPoly) -> IntPoly {
        let (mut a, mut b) = if self.degree() >= other.degree() {
            (self.primitive_part(), other.primitive_part())
        } else {
            (other.primitive_part(), self.primitive_part())
        };
        while !b.is_zero() {
            let r = a.pseudo_rem(&b);
            a = b;
            b = r.primitive_part();
        }
        a
    }

    /// Exact division in Z[q]. The caller guarantees divisibility; a
    /// primitive divisor that divides over Q also divides over Z.
    pub fn div_exact(&self, d: &IntPoly) -> IntPoly {
        assert!(!d.is_zero(), "division by the zero polynomial");
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut r = self.clone();
        let dd = d.degree();
        let dl = d.lead();
        let mut quot = vec![BigInt::zero(); self.degree().saturating_sub(dd) + 1];
        while !r.is_zero() && r.degree() >= dd {
            let shift = r.degree() - dd;
            let (c, rem) = r.lead().div_rem(&dl);
            debug_assert!(rem.is_zero(), "inexact polynomial division");
            for (i, dc) in d.coeffs.iter().enumerate() {
                r.coeffs[i + shift] -= &c * dc;
            }
            quot[shift] = c;
            r = IntPoly::from_coeffs(r.coeffs);
        }
        debug_assert!(r.is_zero(), "inexact polynomial division");
        IntPoly::from_coeffs(quot)
    }

    /// Coefficients in reverse order: `q^deg * p(1/q)`.
    fn reversed(&self) -> IntPoly {
        let mut c = self.coeffs.clone();
        c.reverse();
        IntPoly::from_coeffs(c)
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (a, b) in coeffs.iter_mut().zip(&short.coeffs) {
            *a += b;
        }
        IntPoly::from_coeffs(coeffs)
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        self + &(-rhs)
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        IntPoly::from_coeffs(coeffs)
    }
}

/// An element of Q(q) in canonical form.
///
/// Invariants: the denominator is nonzero with positive leading coefficient,
/// numerator and denominator are coprime over Q, and the combined integer
/// content of the pair is 1. Zero is stored as `0/1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QScalar {
    num: IntPoly,
    den: IntPoly,
}

impl QScalar {
    pub fn zero() -> Self {
        QScalar { num: IntPoly::zero(), den: IntPoly::one() }
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_bigint(BigInt::from(n))
    }

    pub fn from_bigint(n: BigInt) -> Self {
        QScalar { num: IntPoly::constant(n), den: IntPoly::one() }
    }

    /// The parameter `q` itself.
    pub fn q() -> Self {
        Self::q_pow(1)
    }

    /// `q^e` for any integer `e`.
    pub fn q_pow(e: i32) -> Self {
        Self::laurent_term(BigInt::one(), e)
    }

    /// `c * q^e`.
    pub fn laurent_term(c: BigInt, e: i32) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        if e >= 0 {
            QScalar { num: IntPoly::monomial(c, e as usize), den: IntPoly::one() }
        } else {
            QScalar { num: IntPoly::constant(c), den: IntPoly::monomial(BigInt::one(), (-e) as usize) }
        }
    }

    /// Builds a Laurent polynomial from `(coefficient, exponent)` pairs.
    pub fn laurent(terms: &[(i64, i32)]) -> Self {
        terms
            .iter()
            .fold(Self::zero(), |acc, &(c, e)| &acc + &Self::laurent_term(BigInt::from(c), e))
    }

    /// Canonical quotient `num / den`.
    pub fn from_parts(num: IntPoly, den: IntPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::canonical(num, den))
    }

    pub fn numerator(&self) -> &IntPoly {
        &self.num
    }

    pub fn denominator(&self) -> &IntPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_monomial() && self.num.degree() == 0 && self.num.lead().is_one() && self.den == IntPoly::one()
    }

    /// True when the denominator is a pure power of `q`.
    pub fn is_laurent(&self) -> bool {
        self.den.is_monomial() && self.den.lead().is_one()
    }

    /// Laurent coefficients `(exponent, coefficient)` in increasing exponent
    /// order, or `None` if the value is not a Laurent polynomial.
    pub fn laurent_terms(&self) -> Option<Vec<(i32, BigInt)>> {
        if !self.is_laurent() {
            return None;
        }
        let shift = self.den.degree() as i32;
        Some(
            self.num
                .coeffs()
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (i as i32 - shift, c.clone()))
                .collect(),
        )
    }

    fn canonical(num: IntPoly, den: IntPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let (mut num, mut den) = if den.is_monomial() {
            let k = den.degree().min(num.valuation());
            (num.shift_down(k), den.shift_down(k))
        } else {
            let g = num.gcd(&den);
            if g.degree() > 0 {
                (num.div_exact(&g), den.div_exact(&g))
            } else {
                (num, den)
            }
        };
        let c = {
            let cd = den.content();
            if cd.is_one() {
                cd
            } else {
                cd.gcd(&num.content())
            }
        };
        let c = if den.lead().is_negative() { -c } else { c };
        if !c.is_one() {
            num = num.div_scalar_exact(&c);
            den = den.div_scalar_exact(&c);
        }
        QScalar { num, den }
    }

    pub fn add(&self, rhs: &QScalar) -> QScalar {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.is_laurent() && rhs.is_laurent() {
            let (m, n) = (self.den.degree(), rhs.den.degree());
            let top = m.max(n);
            let num = &self.num.shift_up(top - m) + &rhs.num.shift_up(top - n);
            return Self::canonical(num, IntPoly::monomial(BigInt::one(), top));
        }
        if self.den == rhs.den {
            return Self::canonical(&self.num + &rhs.num, self.den.clone());
        }
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        Self::canonical(num, &self.den * &rhs.den)
    }

    pub fn sub(&self, rhs: &QScalar) -> QScalar {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> QScalar {
        QScalar { num: -&self.num, den: self.den.clone() }
    }

    pub fn mul(&self, rhs: &QScalar) -> QScalar {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        if self.is_laurent() && rhs.is_laurent() {
            let den = IntPoly::monomial(BigInt::one(), self.den.degree() + rhs.den.degree());
            return Self::canonical(&self.num * &rhs.num, den);
        }
        Self::canonical(&self.num * &rhs.num, &self.den * &rhs.den)
    }

    pub fn inv(&self) -> Result<QScalar> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::canonical(self.den.clone(), self.num.clone()))
    }

    pub fn div(&self, rhs: &QScalar) -> Result<QScalar> {
        Ok(self.mul(&rhs.inv()?))
    }

    pub fn pow(&self, e: i32) -> Result<QScalar> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut acc = QScalar::one();
        let mut sq = base;
        let mut k = e.unsigned_abs();
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&sq);
            }
            k >>= 1;
            if k > 0 {
                sq = sq.mul(&sq);
            }
        }
        Ok(acc)
    }

    /// Substitutes `q -> 1/q`. An involutive field automorphism.
    pub fn invert_q(&self) -> QScalar {
        if self.is_zero() {
            return Self::zero();
        }
        // N(1/q) / D(1/q) = q^(dD - dN) * rev(N) / rev(D)
        let (dn, dd) = (self.num.degree(), self.den.degree());
        let mut num = self.num.reversed();
        let mut den = self.den.reversed();
        match dd.cmp(&dn) {
            Ordering::Greater => num = num.shift_up(dd - dn),
            Ordering::Less => den = den.shift_up(dn - dd),
            Ordering::Equal => {}
        }
        Self::canonical(num, den)
    }
}

impl Default for QScalar {
    fn default() -> Self {
        Self::zero()
    }
}

impl Add for &QScalar {
    type Output = QScalar;
    fn add(self, rhs: &QScalar) -> QScalar {
        QScalar::add(self, rhs)
    }
}

impl Sub for &QScalar {
    type Output = QScalar;
    fn sub(self, rhs: &QScalar) -> QScalar {
        QScalar::sub(self, rhs)
    }
}

impl Mul for &QScalar {
    type Output = QScalar;
    fn mul(self, rhs: &QScalar) -> QScalar {
        QScalar::mul(self, rhs)
    }
}

impl Neg for &QScalar {
    type Output = QScalar;
    fn neg(self) -> QScalar {
        QScalar::neg(self)
    }
}

impl From<i64> for QScalar {
    fn from(n: i64) -> Self {
        QScalar::from_int(n)
    }
}

/// Writes `sum c_e q^e` with exponents descending, e.g. `q^2 - 1 + 3*q^-1`.
fn write_laurent(f: &mut fmt::Formatter<'_>, terms: &[(i32, BigInt)]) -> fmt::Result {
    if terms.is_empty() {
        return write!(f, "0");
    }
    for (idx, (e, c)) in terms.iter().rev().enumerate() {
        let neg = c.is_negative();
        let mag = c.abs();
        if idx == 0 {
            if neg {
                write!(f, "-")?;
            }
        } else {
            write!(f, "{}", if neg { " - " } else { " + " })?;
        }
        match (*e, mag.is_one()) {
            (0, _) => write!(f, "{mag}")?,
            (1, true) => write!(f, "q")?,
            (1, false) => write!(f, "{mag}*q")?,
            (e, true) => write!(f, "q^{e}")?,
            (e, false) => write!(f, "{mag}*q^{e}")?,
        }
    }
    Ok(())
}

fn poly_terms(p: &IntPoly) -> Vec<(i32, BigInt)> {
    p.coeffs()
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| (i as i32, c.clone()))
        .collect()
}

impl QScalar {
    /// Number of Laurent terms when displayed, used to decide parenthesization.
    pub fn display_is_atomic(&self) -> bool {
        self.laurent_terms().is_some_and(|t| t.len() <= 1)
    }
}

impl fmt::Display for QScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(terms) = self.laurent_terms() {
            return write_laurent(f, &terms);
        }
        let num = poly_terms(&self.num);
        let den = poly_terms(&self.den);
        let wrap = |t: &[(i32, BigInt)]| t.len() > 1 || t.first().is_some_and(|(e, c)| *e != 0 && !c.is_one());
        if wrap(&num) || num.first().is_some_and(|(_, c)| c.is_negative()) {
            write!(f, "(")?;
            write_laurent(f, &num)?;
            write!(f, ")")?;
        } else {
            write_laurent(f, &num)?;
        }
        write!(f, "/")?;
        if wrap(&den) {
            write!(f, "(")?;
            write_laurent(f, &den)?;
            write!(f, ")")
        } else {
            write_laurent(f, &den)
        }
    }
}

impl fmt::Debug for QScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QScalar({self})")
    }
}

impl serde::Serialize for QScalar {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}
