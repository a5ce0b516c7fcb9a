//! Verification suites. Each suite returns a [`Report`]; `all` runs the
//! twelve of them in a fixed order.

use std::collections::BTreeSet;

use crate::algebras::{algebra, delta_q, hhat_q, Algebra, BasisShape, Family};
use crate::coeff_matrix::{
    center_kernel, commutes_with_t0, is_central, t0_commutator, verify_centralizer_presentation, CenterBounds,
    CoeffMatrix,
};
use crate::error::{Error, Result};
use crate::expected::{
    Identity, CASIMIR_COMBINATION, DELTA_RESOLUTIONS, HHAT_RESOLUTIONS, IDENTITIES, MORPHISM_IDENTITIES,
    SMALL_MATRICES,
};
use crate::free_algebra::{NCPoly, Word};
use crate::morphisms::{
    braid, dagger, injectivity_rank, psi, verify_braid_relation, verify_hom, verify_involutions, verify_square,
    xi, z4, BraidGen, CheckItem, Morphism, Report, SquareKind,
};
use crate::parse::parse_word;
use crate::tbasis::TElement;

/// Suite names in the order `all` runs them.
pub const SUITES: [&str; 12] = [
    "confluence-delta",
    "confluence-hhat",
    "psi",
    "d-zero",
    "injectivity",
    "braid",
    "dagger-xi",
    "coeff-matrices",
    "centralizer",
    "center",
    "identities",
    "basis-count",
];

pub fn run_suite(name: &str) -> Result<Report> {
    match name {
        "confluence-delta" => confluence_delta(),
        "confluence-hhat" => confluence_hhat(),
        "psi" => psi_suite(),
        "d-zero" => d_zero(),
        "injectivity" => injectivity(),
        "braid" => braid_suite(),
        "dagger-xi" => dagger_xi(),
        "coeff-matrices" => coeff_matrices(),
        "centralizer" => centralizer(),
        "center" => center(),
        "identities" => identities(),
        "basis-count" => basis_count(),
        _ => Err(Error::UnknownName(name.to_string())),
    }
}

pub fn run_all() -> Result<Vec<Report>> {
    SUITES.iter().map(|s| run_suite(s)).collect()
}

fn check_resolutions(alg: &Algebra, table: &[(&str, &str)], report: &mut Report) -> Result<()> {
    let conf = alg.system().check_confluence()?;
    report.push(CheckItem::from_bool(
        format!("all {} overlaps resolve", conf.ambiguities.len()),
        conf.all_resolved(),
        Some(conf.unresolved().map(|a| a.word.display(alg.alphabet())).collect::<Vec<_>>().join(", ")),
    ));
    for (word, expected) in table {
        let w = parse_word(word, alg.alphabet())?;
        let Some(amb) = conf.find(&w) else {
            report.push(CheckItem::from_bool(format!("{word} is an overlap"), false, Some("missing".into())));
            continue;
        };
        let exp = alg.parse(expected)?;
        let pass = amb.resolved && amb.left == exp;
        report.push(CheckItem::from_bool(format!("{word} resolution"), pass, Some(format!("got {}", amb.left))));
    }
    Ok(())
}

fn confluence_delta() -> Result<Report> {
    let mut r = Report::new("confluence-delta");
    check_resolutions(&delta_q(), &DELTA_RESOLUTIONS, &mut r)?;
    Ok(r)
}

fn confluence_hhat() -> Result<Report> {
    let mut r = Report::new("confluence-hhat");
    check_resolutions(&hhat_q(), &HHAT_RESOLUTIONS, &mut r)?;
    Ok(r)
}

fn psi_suite() -> Result<Report> {
    let p = psi()?;
    let mut r = verify_hom(&p)?;
    r.name = "psi".into();
    let h = hhat_q();
    let omega = p.apply(&delta_q().letter("Omega"))?;
    r.push(CheckItem::from_residual("psi(Omega) = Omega'", &omega.try_sub(&h.derived("Omega")?)?));
    // A perturbed image must be caught.
    let bumped = p.image_of("C")?.try_add(&NCPoly::one(h.alphabet()))?;
    let broken = verify_hom(&p.with_image("C", bumped)?)?;
    r.push(CheckItem::from_bool("perturbed C image is rejected", !broken.passed(), None));
    Ok(r)
}

fn d_zero() -> Result<Report> {
    let h = hhat_q();
    let mut r = Report::new("d-zero");
    let mut total = CoeffMatrix::default();
    for term in &CASIMIR_COMBINATION {
        let got = CoeffMatrix::of(&h.eval(term.element)?)?;
        let want = CoeffMatrix::from_entries(term.entries)?;
        let label = if term.element.len() > 20 { "G" } else { term.element };
        r.push(CheckItem::from_bool(format!("matrix of {label}"), got == want, Some(got.to_table())));
        total = total.add(&got.times(&TElement::parse(term.factor)?));
    }
    r.push(CheckItem::from_bool("combination vanishes", total.is_zero(), Some(total.to_table())));
    Ok(r)
}

fn injectivity() -> Result<Report> {
    let mut r = Report::new("injectivity");
    for (bound, words) in [(2usize, 35usize), (3, 112)] {
        let got = injectivity_rank(bound)?;
        r.push(CheckItem::from_bool(
            format!("rank at bound {bound} = {words}"),
            got.word_count == words && got.rank == words,
            Some(format!("words {}, rank {}", got.word_count, got.rank)),
        ));
    }
    Ok(r)
}

fn braid_suite() -> Result<Report> {
    let mut r = Report::new("braid");
    for g in [BraidGen::Rho, BraidGen::Sigma, BraidGen::Tau] {
        r.extend(verify_square(SquareKind::Braid(g))?);
        for family in [Family::Delta, Family::Hhat] {
            r.extend(verify_hom(&braid(g, family)?)?);
        }
    }
    r.extend(verify_braid_relation()?);
    r.extend(verify_hom(&z4()?)?);
    Ok(r)
}

fn dagger_xi() -> Result<Report> {
    let mut r = Report::new("dagger-xi");
    r.extend(verify_square(SquareKind::Dagger)?);
    r.extend(verify_square(SquareKind::Xi)?);
    for family in [Family::Delta, Family::Hhat] {
        r.extend(verify_hom(&dagger(family)?)?);
        r.extend(verify_hom(&xi(family)?)?);
    }
    r.extend(verify_involutions()?);
    Ok(r)
}

fn coeff_matrices() -> Result<Report> {
    let h = hhat_q();
    let mut r = Report::new("coeff-matrices");
    for (name, entries) in SMALL_MATRICES {
        let el = h.eval(name)?;
        let got = CoeffMatrix::of(&el)?;
        let want = CoeffMatrix::from_entries(entries)?;
        r.push(CheckItem::from_bool(format!("matrix of {name}"), got == want, Some(got.to_table())));
        r.push(CheckItem::from_residual(format!("unfold of {name}"), &got.unfold()?.try_sub(&el)?));
    }
    Ok(r)
}

fn centralizer() -> Result<Report> {
    let d = delta_q();
    let h = hhat_q();
    let p = psi()?;
    let mut r = Report::new("centralizer");
    let words = d.enumerate_basis(3);
    let mut bad = Vec::new();
    for w in &words {
        if !commutes_with_t0(&p.apply(&NCPoly::word(d.alphabet(), w.clone()))?)? {
            bad.push(w.display(d.alphabet()));
        }
    }
    r.push(CheckItem::from_bool(
        format!("psi images of {} basis words commute with t0", words.len()),
        bad.is_empty(),
        Some(bad.join(", ")),
    ));
    for (g, expected) in [("X", "X^-1*t0 + X*T0 - T3 - X*t0"), ("Y", "Y^-1*t0 + Y*T0 - T1 - Y*t0")] {
        let res = t0_commutator(&h.letter(g))?;
        r.push(CheckItem::from_residual(format!("[t0,{g}] residual"), &res.try_sub(&h.eval(expected)?)?));
    }
    for g in ["X", "Y", "Y*X"] {
        let c = commutes_with_t0(&h.eval(g)?)?;
        r.push(CheckItem::from_bool(format!("{g} does not commute with t0"), !c, None));
    }
    for nr in verify_centralizer_presentation()? {
        r.push(CheckItem::from_residual(nr.name, &nr.residual));
    }
    Ok(r)
}

fn center() -> Result<Report> {
    let h = hhat_q();
    let d = delta_q();
    let mut r = Report::new("center");
    let kernel: BTreeSet<String> =
        center_kernel(CenterBounds { n: 2, m: 1 })?.iter().map(|p| p.to_string()).collect();
    let want: BTreeSet<String> =
        ["1", "T0", "T1", "T2", "T3"].iter().map(|s| h.eval(s).map(|p| p.to_string())).collect::<Result<_>>()?;
    r.push(CheckItem::from_bool(
        "center window spanned by 1, T0..T3",
        kernel == want,
        Some(kernel.into_iter().collect::<Vec<_>>().join("; ")),
    ));
    for g in ["Omega", "alpha", "beta", "gamma"] {
        r.push(CheckItem::from_bool(format!("{g} central"), is_central(&d, &d.letter(g))?, None));
    }
    for g in ["A", "B", "C"] {
        r.push(CheckItem::from_bool(format!("{g} not central"), !is_central(&d, &d.letter(g))?, None));
    }
    Ok(r)
}

fn morphism_named(name: &str) -> Result<Morphism> {
    match name {
        "z4" => z4(),
        "psi" => psi(),
        _ => match BraidGen::parse(name) {
            Some(g) => braid(g, Family::Hhat),
            None => Err(Error::UnknownName(name.to_string())),
        },
    }
}

/// Residual `lhs - rhs` of one catalogued identity.
pub fn identity_residual(id: &Identity) -> Result<NCPoly> {
    let a = algebra(id.family, false);
    a.eval(&format!("({}) - ({})", id.lhs, id.rhs))
}

fn identities() -> Result<Report> {
    let h = hhat_q();
    let mut r = Report::new("identities");
    for id in IDENTITIES {
        let res = identity_residual(id)?;
        r.push(CheckItem::from_residual(format!("{}: {} = {}", id.group, id.lhs, id.rhs), &res));
    }
    for mi in MORPHISM_IDENTITIES {
        let m = morphism_named(mi.morphism)?;
        let got = m.apply(&h.eval(mi.arg)?)?;
        let res = got.try_sub(&h.eval(mi.image)?)?;
        r.push(CheckItem::from_residual(format!("{}: {}({}) = {}", mi.group, mi.morphism, mi.arg, mi.image), &res));
    }
    let d = delta_q();
    for g in ["A", "B", "C"] {
        r.push(CheckItem::from_residual(
            format!("Omega commutes with {g}"),
            &d.eval(&format!("Omega*{g} - {g}*Omega"))?,
        ));
    }
    for name in ["C0", "C1", "C2", "C3"] {
        let p = h.derived(name)?;
        r.push(CheckItem::from_bool(format!("{name} is normalized"), h.normalize(&p)? == p, None));
    }
    Ok(r)
}

/// Words of length exactly `len` over the alphabet that avoid every
/// forbidden pair, by exhaustive filtering.
pub fn brute_force_irreducible(alg: &Algebra, len: usize) -> usize {
    let n = alg.alphabet().len();
    let mut count = 0;
    let mut idx = vec![0usize; len];
    loop {
        let w = Word(idx.iter().map(|&i| i as u8).collect());
        if alg.system().is_irreducible(&w) {
            count += 1;
        }
        let mut k = 0;
        while k < len {
            idx[k] += 1;
            if idx[k] < n {
                break;
            }
            idx[k] = 0;
            k += 1;
        }
        if k == len {
            return count;
        }
    }
}

/// Number of basis words of length exactly `len` read off the exponent
/// pattern of the basis.
pub fn parameterized_count(shape: BasisShape, len: usize) -> usize {
    // Compositions of `len` into `free` unrestricted parts plus one part in {0,1}.
    fn compositions(total: usize, parts: usize) -> usize {
        if parts == 0 {
            return usize::from(total == 0);
        }
        (0..=total).map(|a| compositions(total - a, parts - 1)).sum()
    }
    let with_binary = |total: usize, free: usize| (0..=total.min(1)).map(|b| compositions(total - b, free)).sum::<usize>();
    match shape {
        // A^i C^j B^k Omega^l alpha^r beta^s gamma^t, j in {0,1}
        BasisShape::Delta => with_binary(len, 6),
        // Y^i X^j t0^k T0^l T1^r T2^s T3^t, i,j in Z, k in {0,1}
        BasisShape::Hhat => {
            let mut total = 0;
            for a in 0..=len {
                for b in 0..=len - a {
                    let signs = (if a > 0 { 2 } else { 1 }) * (if b > 0 { 2 } else { 1 });
                    total += signs * with_binary(len - a - b, 4);
                }
            }
            total
        }
    }
}

fn basis_count() -> Result<Report> {
    let mut r = Report::new("basis-count");
    for (family, expected) in [(Family::Hhat, 42usize), (Family::Delta, 27)] {
        let a = algebra(family, false);
        let got = a.enumerate_basis_exact(2).len();
        let brute = brute_force_irreducible(&a, 2);
        r.push(CheckItem::from_bool(
            format!("{} length-2 count = {expected}", a.name()),
            got == expected && brute == expected,
            Some(format!("enumerated {got}, brute force {brute}")),
        ));
        for len in 0..=4 {
            let got = a.enumerate_basis_exact(len).len();
            let want = parameterized_count(a.basis_shape(), len);
            r.push(CheckItem::from_bool(
                format!("{} length-{len} count matches basis shape", a.name()),
                got == want,
                Some(format!("enumerated {got}, shape {want}")),
            ));
        }
    }
    Ok(r)
}
