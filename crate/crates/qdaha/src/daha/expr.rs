//! Linear combinations of words in the generators `T_i`, `T_i^{-1}`, `e^λ`
//! (and, outside the algebra proper, bare `s_i` and `D^μ`), with the
//! Iwahori–Matsumoto involution acting on them.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::context::DahaContext;
use super::dl::{dl_operator, kappa, t};
use super::operator::Operator;
use crate::error::{Error, Result};
use crate::scalars::json::{frac_from_json, frac_to_json, FracJson};
use crate::scalars::Frac;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Gen {
    /// `T_i`; node `0` is affine.
    T(usize),
    TInv(usize),
    /// Multiplication by `e^λ`.
    X(Vec<i64>),
    /// Bare reflection `s_i` (not an algebra generator).
    S(usize),
    /// Bare shift `D^μ` (not an algebra generator).
    D(Vec<i64>),
}

impl Gen {
    fn is_hecke(&self) -> bool {
        matches!(self, Gen::T(_) | Gen::TInv(_) | Gen::X(_))
    }
}

impl fmt::Display for Gen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list = |v: &[i64]| {
            v.iter()
                .map(|c| c.to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        match self {
            Gen::T(i) => write!(f, "T{i}"),
            Gen::TInv(i) => write!(f, "T{i}^-1"),
            Gen::X(l) => write!(f, "X({})", list(l)),
            Gen::S(i) => write!(f, "s{i}"),
            Gen::D(m) => write!(f, "D({})", list(m)),
        }
    }
}

fn parse_vec(s: &str) -> Result<Vec<i64>> {
    let inner = s
        .strip_prefix('(')
        .and_then(|r| r.strip_suffix(')'))
        .ok_or_else(|| Error::Parse(format!("expected (a,b,...) in {s:?}")))?;
    inner
        .split(',')
        .map(|p| {
            p.trim()
                .parse::<i64>()
                .map_err(|e| Error::Parse(format!("{p:?}: {e}")))
        })
        .collect()
}

impl FromStr for Gen {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("unknown generator {s:?}"));
        let index = |r: &str| r.parse::<usize>().map_err(|_| bad());
        if let Some(r) = s.strip_prefix('T') {
            return match r.strip_suffix("^-1") {
                Some(i) => Ok(Gen::TInv(index(i)?)),
                None => Ok(Gen::T(index(r)?)),
            };
        }
        if let Some(r) = s.strip_prefix('s') {
            return Ok(Gen::S(index(r)?));
        }
        if let Some(r) = s.strip_prefix('X').or_else(|| s.strip_prefix('e')) {
            return Ok(Gen::X(parse_vec(r)?));
        }
        if let Some(r) = s.strip_prefix('D') {
            return Ok(Gen::D(parse_vec(r)?));
        }
        Err(bad())
    }
}

pub fn parse_word(s: &str) -> Result<Vec<Gen>> {
    s.split_whitespace().map(Gen::from_str).collect()
}

/// Byte offset of the `]` closing an already-consumed `[`.
fn matching_bracket(s: &str) -> Option<usize> {
    let mut depth = 1usize;
    for (i, ch) in s.char_indices() {
        match ch {
            '[' => depth += 1,
            ']' => {
                depth -= 1;
                if depth == 0 {
                    return Some(i);
                }
            }
            _ => {}
        }
    }
    None
}

/// Splits at standalone `+`/`-` tokens outside brackets; `true` marks a positive term.
fn split_terms(s: &str) -> Result<Vec<(bool, String)>> {
    let mut terms = Vec::new();
    let mut sign = true;
    let mut cur = String::new();
    let mut depth = 0i32;
    let mut prev = ' ';
    let chars: Vec<char> = s.chars().collect();
    for (i, &ch) in chars.iter().enumerate() {
        match ch {
            '(' | '[' => depth += 1,
            ')' | ']' => depth -= 1,
            _ => {}
        }
        let next = chars.get(i + 1).copied().unwrap_or(' ');
        if depth == 0 && (ch == '+' || ch == '-') && prev.is_whitespace() && next.is_whitespace() {
            if !cur.trim().is_empty() {
                terms.push((sign, std::mem::take(&mut cur)));
            } else if !terms.is_empty() {
                return Err(Error::Parse(format!("dangling operator in {s:?}")));
            }
            sign = ch == '+';
        } else {
            cur.push(ch);
        }
        prev = ch;
    }
    if depth != 0 {
        return Err(Error::Parse(format!("unbalanced brackets in {s:?}")));
    }
    if cur.trim().is_empty() {
        if !terms.is_empty() || !sign {
            return Err(Error::Parse(format!("dangling operator in {s:?}")));
        }
        // The empty word: the identity.
        terms.push((true, String::new()));
    } else {
        terms.push((sign, cur));
    }
    Ok(terms)
}

/// A finite linear combination of generator words.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Expr {
    pub terms: BTreeMap<Vec<Gen>, Frac>,
}

impl Expr {
    pub fn zero() -> Self {
        Expr::default()
    }

    pub fn word(w: Vec<Gen>) -> Self {
        Self::term(Frac::one(), w)
    }

    pub fn scalar(c: Frac) -> Self {
        Self::term(c, Vec::new())
    }

    pub fn term(c: Frac, w: Vec<Gen>) -> Self {
        let mut e = Expr::zero();
        e.add_term(w, c);
        e
    }

    /// Parses sums of words such as `T1 X(1) - [t^2]·T0 + [1/2]`, the form
    /// that `Display` prints. A bare `+` or `-` token separates terms.
    pub fn parse(s: &str) -> Result<Self> {
        let mut out = Expr::zero();
        for (sign, term) in split_terms(s)? {
            let term = term.trim();
            let (coeff, word) = match term.strip_prefix('[') {
                Some(rest) => {
                    let close = matching_bracket(rest)
                        .ok_or_else(|| Error::Parse(format!("unclosed '[' in {term:?}")))?;
                    let c = crate::scalars::parse_frac(&rest[..close])?;
                    let w = rest[close + 1..].trim_start();
                    (
                        c,
                        w.strip_prefix('·')
                            .or_else(|| w.strip_prefix('*'))
                            .unwrap_or(w),
                    )
                }
                None => (Frac::one(), term),
            };
            let coeff = if sign {
                coeff
            } else {
                Frac::zero().sub(&coeff)
            };
            out.add_term(parse_word(word)?, coeff);
        }
        Ok(out)
    }

    pub fn add_term(&mut self, w: Vec<Gen>, c: Frac) {
        if c.is_zero() {
            return;
        }
        let s = match self.terms.remove(&w) {
            Some(old) => old.add(&c),
            None => c,
        };
        if !s.is_zero() {
            self.terms.insert(w, s);
        }
    }

    pub fn add(&self, o: &Expr) -> Expr {
        let mut out = self.clone();
        for (w, c) in &o.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Frac) -> Expr {
        let mut out = Expr::zero();
        for (w, d) in &self.terms {
            out.add_term(w.clone(), c.mul(d));
        }
        out
    }

    pub fn mul(&self, o: &Expr) -> Expr {
        let mut out = Expr::zero();
        for (a, c) in &self.terms {
            for (b, d) in &o.terms {
                let mut w = a.clone();
                w.extend(b.iter().cloned());
                out.add_term(w, c.mul(d));
            }
        }
        out
    }

    /// Whether every word uses only `T_i^{±1}` and `e^λ`.
    pub fn is_hecke(&self) -> bool {
        self.terms.keys().all(|w| w.iter().all(Gen::is_hecke))
    }

    pub fn to_operator(&self, ctx: &DahaContext, v: &Frac) -> Result<Operator> {
        let mut cache: BTreeMap<Gen, Operator> = BTreeMap::new();
        let mut out = Operator::zero();
        for (w, c) in &self.terms {
            let mut acc = Operator::mult(ctx, c.clone());
            for g in w {
                if !cache.contains_key(g) {
                    cache.insert(g.clone(), gen_operator(ctx, g, v)?);
                }
                acc = acc.compose(ctx, &cache[g])?;
            }
            out = out.add(&acc);
        }
        Ok(out)
    }

    /// The Iwahori–Matsumoto involution: `T_i ↦ v(t - t^{-1}) - T_i`,
    /// `e^λ ↦ e^{-λ}`, extended multiplicatively.
    pub fn xi(&self, v: &Frac) -> Result<Expr> {
        let k = kappa(v);
        // T^{-1} = (T - k)/c with c = t y = v + t^2(1 - v), so Ξ(T^{-1}) = -T/c.
        let c = v.add(&t().mul(&t()).mul(&Frac::one().sub(v)));
        let cinv = c.inv()?;
        let mut out = Expr::zero();
        for (w, coeff) in &self.terms {
            let mut acc = Expr::scalar(coeff.clone());
            for g in w {
                let img = match g {
                    Gen::T(i) => {
                        Expr::scalar(k.clone()).add(&Expr::term(Frac::int(-1), vec![Gen::T(*i)]))
                    }
                    Gen::TInv(i) => Expr::term(cinv.neg(), vec![Gen::T(*i)]),
                    Gen::X(l) => Expr::word(vec![Gen::X(l.iter().map(|c| -c).collect())]),
                    other => {
                        return Err(Error::NotInClass(format!(
                            "{other} is not an algebra generator"
                        )));
                    }
                };
                acc = acc.mul(&img);
            }
            out = out.add(&acc);
        }
        Ok(out)
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (w, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            let ws: Vec<String> = w.iter().map(|g| g.to_string()).collect();
            write!(f, "[{c}]")?;
            if !ws.is_empty() {
                write!(f, "·{}", ws.join(" "))?;
            }
        }
        Ok(())
    }
}

pub fn gen_operator(ctx: &DahaContext, g: &Gen, v: &Frac) -> Result<Operator> {
    match g {
        Gen::T(i) => dl_operator(ctx, *i, v),
        Gen::TInv(i) => {
            let tt = dl_operator(ctx, *i, v)?;
            let c = v.add(&t().mul(&t()).mul(&Frac::one().sub(v)));
            Ok(tt.sub(&Operator::mult(ctx, kappa(v))).scale(&c.inv()?))
        }
        Gen::X(l) => {
            check_dim(ctx, l)?;
            Ok(Operator::x(ctx, l))
        }
        Gen::S(i) => Operator::node(ctx, *i),
        Gen::D(m) => {
            check_dim(ctx, m)?;
            Ok(Operator::shift(m.clone()))
        }
    }
}

fn check_dim(ctx: &DahaContext, v: &[i64]) -> Result<()> {
    if v.len() != ctx.dim() {
        return Err(Error::Dimension(format!(
            "expected {} coordinates, got {}",
            ctx.dim(),
            v.len()
        )));
    }
    Ok(())
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ExprTermJson {
    pub coeff: FracJson,
    pub word: String,
}

pub fn expr_to_json(e: &Expr) -> Vec<ExprTermJson> {
    e.terms
        .iter()
        .map(|(w, c)| ExprTermJson {
            coeff: frac_to_json(c),
            word: w
                .iter()
                .map(|g| g.to_string())
                .collect::<Vec<_>>()
                .join(" "),
        })
        .collect()
}

pub fn expr_from_json(j: &[ExprTermJson]) -> Result<Expr> {
    let mut e = Expr::zero();
    for t in j {
        e.add_term(parse_word(&t.word)?, frac_from_json(&t.coeff)?);
    }
    Ok(e)
}
