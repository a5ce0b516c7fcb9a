//! Line-oriented text format for rewriting systems:
//!
//! ```text
//! alphabet: A C B Omega alpha beta gamma
//! B*A -> q^2*A*B + q*(q^2 - q^-2)*C - q*(q - q^-1)*gamma ; kind=first
//! ```
//!
//! Blank lines and lines starting with `#` are ignored.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::free_algebra::{Alphabet, NCPoly};
use crate::parse::{parse_expr, parse_word, LetterScope};
use crate::rewrite::{RewriteRule, RewriteSystem, RuleKind};

pub fn export(sys: &RewriteSystem) -> String {
    let al = sys.alphabet();
    let names: Vec<&str> = al.generators().iter().map(|g| g.name.as_str()).collect();
    let mut out = format!("alphabet: {}\n", names.join(" "));
    for r in sys.rules() {
        let _ = writeln!(out, "{} -> {} ; kind={}", r.lhs_word().display(al), r.rhs, r.kind.as_str());
    }
    out
}

pub fn import(text: &str) -> Result<RewriteSystem> {
    let err = |line: usize, message: &str| Error::SpecFormat { line, message: message.to_string() };
    let mut alphabet = None;
    let mut rules = Vec::new();
    for (n, raw) in text.lines().enumerate() {
        let line_no = n + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if let Some(rest) = line.strip_prefix("alphabet:") {
            if alphabet.is_some() {
                return Err(err(line_no, "duplicate alphabet header"));
            }
            let names: Vec<&str> = rest.split_whitespace().collect();
            alphabet = Some(Alphabet::new(&names).map_err(|e| err(line_no, &e.to_string()))?);
            continue;
        }
        let al = alphabet.as_ref().ok_or_else(|| err(line_no, "rule before alphabet header"))?;
        let (body, kind) = match line.rsplit_once(';') {
            Some((body, meta)) => {
                let k = meta.trim().strip_prefix("kind=").ok_or_else(|| err(line_no, "expected kind=K"))?;
                (body, RuleKind::parse(k.trim()).ok_or_else(|| err(line_no, "unknown rule kind"))?)
            }
            None => return Err(err(line_no, "missing ; kind=K")),
        };
        let (lhs, rhs) = body.split_once("->").ok_or_else(|| err(line_no, "expected LHS -> RHS"))?;
        let w = parse_word(lhs, al).map_err(|e| err(line_no, &e.to_string()))?;
        if w.len() != 2 {
            return Err(err(line_no, "left-hand side must have length 2"));
        }
        let rhs: NCPoly = parse_expr(rhs, &LetterScope(al.clone())).map_err(|e| err(line_no, &e.to_string()))?;
        rules.push(RewriteRule { lhs: [w.0[0], w.0[1]], rhs, kind });
    }
    let al = alphabet.ok_or_else(|| err(0, "missing alphabet header"))?;
    RewriteSystem::new(al, rules).map_err(|e| err(0, &e.to_string()))
}
