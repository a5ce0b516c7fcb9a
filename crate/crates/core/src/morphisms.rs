//! Maps between and on the two algebras: the embedding `psi`, the braid
//! group actions, the order-four automorphism, the antiautomorphism
//! `dagger` and the parameter-inverting isomorphism `xi`.

use std::collections::HashMap;
use std::sync::Arc;

use serde::Serialize;

use crate::algebras::{algebra, delta_q, hhat_q, Algebra, Family};
use crate::error::{Error, Result};
use crate::free_algebra::{GenId, NCPoly, Word};
use crate::linalg::{Echelon, SparseVec};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Direction {
    Homomorphism,
    Antihomomorphism,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BraidGen {
    Rho,
    Sigma,
    Tau,
}

impl BraidGen {
    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "rho" => Some(BraidGen::Rho),
            "sigma" => Some(BraidGen::Sigma),
            "tau" => Some(BraidGen::Tau),
            _ => None,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            BraidGen::Rho => "rho",
            BraidGen::Sigma => "sigma",
            BraidGen::Tau => "tau",
        }
    }
}

/// A map given on generators and extended (anti)multiplicatively.
#[derive(Clone, Debug)]
pub struct Morphism {
    name: String,
    source: Arc<Algebra>,
    target: Arc<Algebra>,
    images: Vec<NCPoly>,
    direction: Direction,
    twist: bool,
    conjugator: Option<(NCPoly, NCPoly)>,
}

impl Morphism {
    /// Builds a morphism from image expressions written in the target's
    /// naming scope. Images are normalized in the target.
    pub fn from_texts(
        name: &str,
        source: Arc<Algebra>,
        target: Arc<Algebra>,
        images: &[(&str, &str)],
        direction: Direction,
        twist: bool,
    ) -> Result<Self> {
        let mut slots: Vec<Option<NCPoly>> = vec![None; source.alphabet().len()];
        for (g, text) in images {
            slots[source.alphabet().id(g)? as usize] = Some(target.eval(text)?);
        }
        let images = slots
            .into_iter()
            .enumerate()
            .map(|(i, s)| s.ok_or_else(|| Error::MissingImage(source.alphabet().name(i as GenId).to_string())))
            .collect::<Result<Vec<_>>>()?;
        Ok(Morphism { name: name.to_string(), source, target, images, direction, twist, conjugator: None })
    }

    pub fn identity(alg: Arc<Algebra>) -> Self {
        let images = (0..alg.alphabet().len() as GenId).map(|g| NCPoly::letter(alg.alphabet(), g)).collect();
        Morphism {
            name: "id".into(),
            source: alg.clone(),
            target: alg,
            images,
            direction: Direction::Homomorphism,
            twist: false,
            conjugator: None,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn source(&self) -> &Arc<Algebra> {
        &self.source
    }

    pub fn target(&self) -> &Arc<Algebra> {
        &self.target
    }

    pub fn direction(&self) -> Direction {
        self.direction
    }

    pub fn twist(&self) -> bool {
        self.twist
    }

    pub fn conjugator(&self) -> Option<&(NCPoly, NCPoly)> {
        self.conjugator.as_ref()
    }

    pub fn image(&self, g: GenId) -> &NCPoly {
        &self.images[g as usize]
    }

    pub fn image_of(&self, name: &str) -> Result<&NCPoly> {
        Ok(self.image(self.source.alphabet().id(name)?))
    }

    /// Copy with one generator image replaced (used for mutation checks).
    pub fn with_image(&self, g: &str, image: NCPoly) -> Result<Self> {
        let mut m = self.clone();
        m.images[self.source.alphabet().id(g)? as usize] = self.target.normalize(&image)?;
        m.conjugator = None;
        Ok(m)
    }

    /// Normal form of the image of `p`. Inner maps `h -> u^-1 h u` are
    /// evaluated through their conjugator.
    pub fn apply(&self, p: &NCPoly) -> Result<NCPoly> {
        if let Some((u, u_inv)) = &self.conjugator {
            let p = p.rebase(self.target.alphabet())?;
            return self.target.system().product(&[u_inv, &p, u]);
        }
        self.apply_raw(p)
    }

    /// Substitutes generator images word by word without assuming the map is
    /// well defined, then normalizes.
    pub fn apply_raw(&self, p: &NCPoly) -> Result<NCPoly> {
        let tgt = &self.target;
        let mut cache: HashMap<Word, NCPoly> = HashMap::new();
        let mut acc = NCPoly::zero(tgt.alphabet());
        for (w, c) in p.terms() {
            let img = self.word_image(w, &mut cache)?;
            let c = if self.twist { c.invert_q() } else { c.clone() };
            acc = acc.try_add(&img.scale(&c))?;
        }
        Ok(acc)
    }

    fn word_image(&self, w: &Word, cache: &mut HashMap<Word, NCPoly>) -> Result<NCPoly> {
        if let Some(v) = cache.get(w) {
            return Ok(v.clone());
        }
        let tgt = &self.target;
        let l = w.letters();
        let v = match l.len() {
            0 => NCPoly::one(tgt.alphabet()),
            1 => self.images[l[0] as usize].clone(),
            n => {
                let head = self.word_image(&Word(l[..n - 1].to_vec()), cache)?;
                let last = &self.images[l[n - 1] as usize];
                match self.direction {
                    Direction::Homomorphism => tgt.mul(&head, last)?,
                    Direction::Antihomomorphism => tgt.mul(last, &head)?,
                }
            }
        };
        cache.insert(w.clone(), v.clone());
        Ok(v)
    }

    /// `self` after `first`.
    pub fn after(&self, first: &Morphism) -> Result<Morphism> {
        if !Arc::ptr_eq(first.target(), &self.source) {
            return Err(Error::AlphabetMismatch);
        }
        let images = first.images.iter().map(|p| self.apply(p)).collect::<Result<Vec<_>>>()?;
        let direction = if first.direction == self.direction { Direction::Homomorphism } else { Direction::Antihomomorphism };
        Ok(Morphism {
            name: format!("{}.{}", self.name, first.name),
            source: first.source.clone(),
            target: self.target.clone(),
            images,
            direction,
            twist: first.twist != self.twist,
            conjugator: None,
        })
    }
}

fn same(family: Family, q_inverted: bool) -> (Arc<Algebra>, Arc<Algebra>) {
    let a = algebra(family, q_inverted);
    (a.clone(), a)
}

const PSI_NAMES: [&str; 7] = ["A", "C", "B", "Omega", "alpha", "beta", "gamma"];

/// The embedding of the Askey-Wilson algebra into the DAHA.
pub fn psi() -> Result<Morphism> {
    psi_at(false)
}

/// `psi` between the instances at `q` or at `1/q`.
pub fn psi_at(q_inverted: bool) -> Result<Morphism> {
    let src = algebra(Family::Delta, q_inverted);
    let tgt = algebra(Family::Hhat, q_inverted);
    let images: Vec<(&str, &str)> = PSI_NAMES.iter().map(|n| (*n, *n)).collect();
    Morphism::from_texts("psi", src, tgt, &images, Direction::Homomorphism, false)
}

pub fn braid(gen: BraidGen, family: Family) -> Result<Morphism> {
    braid_at(gen, family, false)
}

pub fn braid_at(gen: BraidGen, family: Family, q_inverted: bool) -> Result<Morphism> {
    let (src, tgt) = same(family, q_inverted);
    let name = gen.name();
    let hom = Direction::Homomorphism;
    match (family, gen) {
        (Family::Delta, BraidGen::Rho) => Morphism::from_texts(
            name,
            src,
            tgt,
            &[("A", "B"), ("B", "C"), ("C", "A"), ("Omega", "Omega"), ("alpha", "beta"), ("beta", "gamma"), ("gamma", "alpha")],
            hom,
            false,
        ),
        (Family::Delta, BraidGen::Sigma) => Morphism::from_texts(
            name,
            src,
            tgt,
            &[
                ("A", "B"),
                ("B", "A"),
                ("C", "C + (A*B - B*A)/(q - q^-1)"),
                ("Omega", "Omega"),
                ("alpha", "beta"),
                ("beta", "alpha"),
                ("gamma", "gamma"),
            ],
            hom,
            false,
        ),
        (Family::Delta, BraidGen::Tau) => Ok(Morphism { name: name.into(), ..Morphism::identity(src) }),
        (Family::Hhat, BraidGen::Rho) => Morphism::from_texts(
            name,
            src,
            tgt,
            &[
                ("Y", "X"),
                ("Y^-1", "X^-1"),
                ("X", "q^-1*Y^-1*t0*X^-1*t0"),
                ("X^-1", "q*t0^-1*X*t0^-1*Y"),
                ("t0", "t0"),
                ("T0", "T0"),
                ("T1", "T3"),
                ("T2", "T1"),
                ("T3", "T2"),
            ],
            hom,
            false,
        ),
        (Family::Hhat, BraidGen::Sigma) => Morphism::from_texts(
            name,
            src,
            tgt,
            &[
                ("Y", "X"),
                ("Y^-1", "X^-1"),
                ("X", "t0^-1*Y*t0"),
                ("X^-1", "t0^-1*Y^-1*t0"),
                ("t0", "t0"),
                ("T0", "T0"),
                ("T1", "T3"),
                ("T2", "T2"),
                ("T3", "T1"),
            ],
            hom,
            false,
        ),
        (Family::Hhat, BraidGen::Tau) => {
            let names: Vec<String> = src.alphabet().generators().iter().map(|g| g.name.clone()).collect();
            let texts: Vec<String> = names.iter().map(|n| format!("t0^-1*{n}*t0")).collect();
            let images: Vec<(&str, &str)> = names.iter().map(String::as_str).zip(texts.iter().map(String::as_str)).collect();
            let mut m = Morphism::from_texts(name, src, tgt.clone(), &images, hom, false)?;
            m.conjugator = Some((tgt.letter("t0"), tgt.eval("t0^-1")?));
            Ok(m)
        }
    }
}

/// The order-four automorphism `t0 -> t1 -> t2 -> t3 -> t0` of the DAHA.
pub fn z4() -> Result<Morphism> {
    let (src, tgt) = same(Family::Hhat, false);
    Morphism::from_texts(
        "z4",
        src,
        tgt,
        &[
            ("Y", "q^-1*X^-1"),
            ("Y^-1", "q*X"),
            ("X", "Y"),
            ("X^-1", "Y^-1"),
            ("t0", "t1"),
            ("T0", "T1"),
            ("T1", "T2"),
            ("T2", "T3"),
            ("T3", "T0"),
        ],
        Direction::Homomorphism,
        false,
    )
}

/// The antiautomorphism swapping `A, B` (and `X, Y`).
pub fn dagger(family: Family) -> Result<Morphism> {
    dagger_at(family, false)
}

pub fn dagger_at(family: Family, q_inverted: bool) -> Result<Morphism> {
    let (src, tgt) = same(family, q_inverted);
    let anti = Direction::Antihomomorphism;
    match family {
        Family::Delta => Morphism::from_texts(
            "dagger",
            src,
            tgt,
            &[("A", "B"), ("B", "A"), ("C", "C"), ("Omega", "Omega"), ("alpha", "beta"), ("beta", "alpha"), ("gamma", "gamma")],
            anti,
            false,
        ),
        Family::Hhat => Morphism::from_texts(
            "dagger",
            src,
            tgt,
            &[
                ("Y", "X"),
                ("Y^-1", "X^-1"),
                ("X", "Y"),
                ("X^-1", "Y^-1"),
                ("t0", "t0"),
                ("T0", "T0"),
                ("T1", "T3"),
                ("T2", "T2"),
                ("T3", "T1"),
            ],
            anti,
            false,
        ),
    }
}

/// The isomorphism onto the sibling algebra at the inverted parameter. It is
/// linear: scalars are not inverted, the target's relations are.
pub fn xi(family: Family) -> Result<Morphism> {
    xi_at(family, false)
}

pub fn xi_at(family: Family, q_inverted: bool) -> Result<Morphism> {
    let src = algebra(family, q_inverted);
    let tgt = algebra(family, !q_inverted);
    let hom = Direction::Homomorphism;
    match family {
        Family::Delta => Morphism::from_texts(
            "xi",
            src,
            tgt,
            &[("A", "B"), ("B", "A"), ("C", "C"), ("Omega", "Omega"), ("alpha", "beta"), ("beta", "alpha"), ("gamma", "gamma")],
            hom,
            false,
        ),
        Family::Hhat => Morphism::from_texts(
            "xi",
            src,
            tgt,
            &[
                ("Y", "X^-1"),
                ("Y^-1", "X"),
                ("X", "Y^-1"),
                ("X^-1", "Y"),
                ("t0", "t0^-1"),
                ("T0", "T0"),
                ("T1", "T3"),
                ("T2", "T2"),
                ("T3", "T1"),
            ],
            hom,
            false,
        ),
    }
}

/// `xi` read back into the source algebra through `q -> 1/q`: a
/// semilinear automorphism that inverts every scalar coefficient.
pub fn xi_twisted(family: Family) -> Result<Morphism> {
    let linear = xi(family)?;
    let src = linear.source().clone();
    let images = linear.images.iter().map(|p| src.normalize(&p.invert_q())).collect::<Result<Vec<_>>>()?;
    Ok(Morphism { name: "xi-twisted".into(), target: src.clone(), source: src, images, twist: true, ..linear })
}

/// One line of a verification report.
#[derive(Clone, Debug, Serialize)]
pub struct CheckItem {
    pub item: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub residual: Option<String>,
}

impl CheckItem {
    pub fn from_residual(item: impl Into<String>, residual: &NCPoly) -> Self {
        let pass = residual.is_zero();
        CheckItem { item: item.into(), pass, residual: (!pass).then(|| residual.to_string()) }
    }

    pub fn from_bool(item: impl Into<String>, pass: bool, detail: Option<String>) -> Self {
        CheckItem { item: item.into(), pass, residual: if pass { None } else { detail } }
    }
}

/// A named list of checks.
#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub name: String,
    pub items: Vec<CheckItem>,
}

impl Report {
    pub fn new(name: impl Into<String>) -> Self {
        Report { name: name.into(), items: Vec::new() }
    }

    pub fn push(&mut self, item: CheckItem) {
        self.items.push(item);
    }

    pub fn passed(&self) -> bool {
        self.items.iter().all(|i| i.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckItem> {
        self.items.iter().filter(|i| !i.pass)
    }

    pub fn extend(&mut self, other: Report) {
        for mut it in other.items {
            it.item = format!("{}: {}", other.name, it.item);
            self.items.push(it);
        }
    }
}

/// Checks every defining rule of the source is sent to a relation of the
/// target.
pub fn verify_hom(m: &Morphism) -> Result<Report> {
    let mut report = Report::new(format!("verify-hom {}", m.name()));
    let src = m.source();
    for rule in src.system().rules() {
        let lhs = NCPoly::word(src.alphabet(), rule.lhs_word());
        let diff = m.apply_raw(&lhs)?.try_sub(&m.apply_raw(&rule.rhs)?)?;
        let residual = m.target().normalize(&diff)?;
        report.push(CheckItem::from_residual(rule.lhs_word().display(src.alphabet()), &residual));
    }
    Ok(report)
}

/// Square types for [`verify_square`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SquareKind {
    Braid(BraidGen),
    Dagger,
    Xi,
}

impl SquareKind {
    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "dagger" => Some(SquareKind::Dagger),
            "xi" => Some(SquareKind::Xi),
            _ => BraidGen::parse(s).map(SquareKind::Braid),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            SquareKind::Braid(g) => g.name(),
            SquareKind::Dagger => "dagger",
            SquareKind::Xi => "xi",
        }
    }
}

/// `g_H(psi(u)) = psi'(g_D(u))` for every generator `u` of the Askey-Wilson
/// algebra.
pub fn verify_square(kind: SquareKind) -> Result<Report> {
    let (g_h, g_d, psi2) = match kind {
        SquareKind::Braid(g) => (braid(g, Family::Hhat)?, braid(g, Family::Delta)?, psi()?),
        SquareKind::Dagger => (dagger(Family::Hhat)?, dagger(Family::Delta)?, psi()?),
        SquareKind::Xi => (xi(Family::Hhat)?, xi(Family::Delta)?, psi_at(true)?),
    };
    let p = psi()?;
    let d = delta_q();
    let mut report = Report::new(format!("verify-square {}", kind.name()));
    for g in d.alphabet().generators() {
        let u = d.letter(&g.name);
        let left = g_h.apply(&p.apply(&u)?)?;
        let right = psi2.apply(&g_d.apply(&u)?)?;
        let residual = g_h.target().normalize(&left.try_sub(&right)?)?;
        report.push(CheckItem::from_residual(g.name.clone(), &residual));
    }
    Ok(report)
}

fn iterate(m: &Morphism, times: usize, p: &NCPoly) -> Result<NCPoly> {
    let mut v = p.clone();
    for _ in 0..times {
        v = m.apply(&v)?;
    }
    Ok(v)
}

/// `rho^3 = sigma^2 = tau` on each DAHA generator, and `z4^4 = id`.
pub fn verify_braid_relation() -> Result<Report> {
    let h = hhat_q();
    let rho = braid(BraidGen::Rho, Family::Hhat)?;
    let sigma = braid(BraidGen::Sigma, Family::Hhat)?;
    let tau = braid(BraidGen::Tau, Family::Hhat)?;
    let z = z4()?;
    let mut report = Report::new("verify-braid-relation");
    for g in h.alphabet().generators() {
        let x = h.letter(&g.name);
        let t = tau.apply(&x)?;
        let r3 = iterate(&rho, 3, &x)?;
        let s2 = iterate(&sigma, 2, &x)?;
        report.push(CheckItem::from_residual(format!("rho^3 = tau on {}", g.name), &r3.try_sub(&t)?));
        report.push(CheckItem::from_residual(format!("sigma^2 = tau on {}", g.name), &s2.try_sub(&t)?));
        let z4 = iterate(&z, 4, &x)?;
        report.push(CheckItem::from_residual(format!("z4^4 = id on {}", g.name), &z4.try_sub(&x)?));
    }
    Ok(report)
}

/// `dagger^2 = id` and `xi` composed with its sibling is the identity, on
/// every generator of both algebras.
pub fn verify_involutions() -> Result<Report> {
    let mut report = Report::new("involutions");
    for family in [Family::Delta, Family::Hhat] {
        let a = algebra(family, false);
        let d = dagger(family)?;
        let x1 = xi_at(family, false)?;
        let x2 = xi_at(family, true)?;
        for g in a.alphabet().generators() {
            let u = a.letter(&g.name);
            let dd = d.apply(&d.apply(&u)?)?;
            report.push(CheckItem::from_residual(format!("{} dagger^2 on {}", a.name(), g.name), &dd.try_sub(&u)?));
            let xx = x2.apply(&x1.apply(&u)?)?;
            report.push(CheckItem::from_residual(format!("{} xi.xi on {}", a.name(), g.name), &xx.try_sub(&u)?));
        }
    }
    Ok(report)
}

/// Number of Askey-Wilson basis words of degree at most `bound`, and the
/// rank of their images in the DAHA.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct RankResult {
    pub word_count: usize,
    pub rank: usize,
}

pub fn injectivity_rank(bound: usize) -> Result<RankResult> {
    let d = delta_q();
    let p = psi()?;
    let words = d.enumerate_basis(bound);
    let mut cache = HashMap::new();
    let images = words.iter().map(|w| p.word_image(w, &mut cache)).collect::<Result<Vec<_>>>()?;
    // Columns in descending word order, so each row pivots on its leading word.
    let mut all: Vec<&Word> = images.iter().flat_map(|i| i.terms().keys()).collect();
    all.sort_by(|a, b| b.cmp(a));
    all.dedup();
    let cols: HashMap<&Word, usize> = all.into_iter().enumerate().map(|(i, w)| (w, i)).collect();
    let mut ech = Echelon::new();
    for img in &images {
        let row: SparseVec = img.terms().iter().map(|(w, c)| (cols[w], c.clone())).collect();
        ech.insert(row);
    }
    Ok(RankResult { word_count: words.len(), rank: ech.rank() })
}
