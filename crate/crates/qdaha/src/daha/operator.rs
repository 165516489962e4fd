//! Difference-reflection operators `Σ h_{w,μ} D^μ [w]` in left-normal form.
//!
//! Composition moves coefficients to the left:
//! `(h D^μ[w]) ∘ (g D^ν[u]) = h · (D^μ[w] g) · D^{μ + wν}[wu]`.

use std::collections::BTreeMap;
use std::fmt;

use super::context::DahaContext;
use crate::error::Result;
use crate::par;
use crate::scalars::{Frac, Poly};

pub type OpKey = (usize, Vec<i64>);

#[derive(Clone, Debug, Default)]
pub struct Operator {
    pub terms: BTreeMap<OpKey, Frac>,
}

impl Operator {
    pub fn zero() -> Self {
        Operator::default()
    }

    pub fn term(w: usize, mu: Vec<i64>, h: Frac) -> Self {
        let mut o = Operator::zero();
        o.add_term((w, mu), h);
        o
    }

    pub fn identity(ctx: &DahaContext) -> Self {
        Self::term(0, vec![0; ctx.dim()], Frac::one())
    }

    /// Multiplication by a function.
    pub fn mult(ctx: &DahaContext, f: Frac) -> Self {
        Self::term(0, vec![0; ctx.dim()], f)
    }

    /// Multiplication by `e^λ`.
    pub fn x(ctx: &DahaContext, lambda: &[i64]) -> Self {
        Self::mult(ctx, Frac::from_poly(Poly::x_int(lambda)))
    }

    pub fn shift(mu: Vec<i64>) -> Self {
        Self::term(0, mu, Frac::one())
    }

    pub fn reflection(ctx: &DahaContext, w: usize) -> Self {
        Self::term(w, vec![0; ctx.dim()], Frac::one())
    }

    /// The affine reflection `s_i` (node `0` is `D^{-θ^∨}[s_θ]`).
    pub fn node(ctx: &DahaContext, i: usize) -> Result<Self> {
        let (mu, w) = ctx.node_reflection(i)?;
        Ok(Self::term(w, mu, Frac::one()))
    }

    pub fn add_term(&mut self, key: OpKey, h: Frac) {
        if h.is_zero() {
            return;
        }
        match self.terms.remove(&key) {
            Some(old) => {
                let s = old.add(&h);
                if !s.is_zero() {
                    self.terms.insert(key, s);
                }
            }
            None => {
                self.terms.insert(key, h);
            }
        }
    }

    pub fn coeff(&self, w: usize, mu: &[i64]) -> Frac {
        self.terms
            .get(&(w, mu.to_vec()))
            .cloned()
            .unwrap_or_else(Frac::zero)
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

    pub fn add(&self, o: &Operator) -> Operator {
        let mut out = self.clone();
        for (k, h) in &o.terms {
            out.add_term(k.clone(), h.clone());
        }
        out
    }

    pub fn neg(&self) -> Operator {
        Operator {
            terms: self
                .terms
                .iter()
                .map(|(k, h)| (k.clone(), h.neg()))
                .collect(),
        }
    }

    pub fn sub(&self, o: &Operator) -> Operator {
        self.add(&o.neg())
    }

    /// Left multiplication by a function.
    pub fn scale(&self, f: &Frac) -> Operator {
        let mut out = Operator::zero();
        for (k, h) in &self.terms {
            out.add_term(k.clone(), f.mul(h));
        }
        out
    }

    pub fn compose(&self, ctx: &DahaContext, o: &Operator) -> Result<Operator> {
        let pairs: Vec<(&OpKey, &Frac, &OpKey, &Frac)> = self
            .terms
            .iter()
            .flat_map(|(a, h)| o.terms.iter().map(move |(b, g)| (a, h, b, g)))
            .collect();
        let products = par::map(&pairs, |(a, h, b, g)| -> Result<(OpKey, Frac)> {
            let (w, mu) = a;
            let (u, nu) = b;
            let moved = ctx.subst(*w, mu, g)?;
            let wnu = ctx.g.get(*w).act_y(nu);
            let key = (
                ctx.g.mul(*w, *u),
                mu.iter().zip(&wnu).map(|(x, y)| x + y).collect(),
            );
            Ok((key, h.mul(&moved)))
        });
        let mut grouped: BTreeMap<OpKey, Vec<Frac>> = BTreeMap::new();
        for p in products {
            let (k, f) = p?;
            grouped.entry(k).or_default().push(f);
        }
        let groups: Vec<(OpKey, Vec<Frac>)> = grouped.into_iter().collect();
        let sums = par::map(&groups, |(k, fs)| {
            let s = fs.iter().skip(1).fold(fs[0].clone(), |acc, f| acc.add(f));
            (k.clone(), s)
        });
        Ok(Operator {
            terms: sums.into_iter().filter(|(_, s)| !s.is_zero()).collect(),
        })
    }

    /// Composition of a sequence, left to right.
    pub fn product(ctx: &DahaContext, ops: &[Operator]) -> Result<Operator> {
        let mut acc = Operator::identity(ctx);
        for o in ops {
            acc = acc.compose(ctx, o)?;
        }
        Ok(acc)
    }

    pub fn apply(&self, ctx: &DahaContext, f: &Frac) -> Result<Frac> {
        let mut out = Frac::zero();
        for ((w, mu), h) in &self.terms {
            out = out.add(&h.mul(&ctx.subst(*w, mu, f)?));
        }
        Ok(out)
    }

    /// Coefficientwise equality.
    pub fn equals(&self, o: &Operator) -> bool {
        self.terms
            .iter()
            .all(|(k, h)| o.terms.get(k).is_some_and(|g| g == h))
            && o.terms.keys().all(|k| self.terms.contains_key(k))
    }

    /// Equality tested pointwise on monomials `e^λ`.
    pub fn agree_on(&self, ctx: &DahaContext, o: &Operator, lambdas: &[Vec<i64>]) -> Result<bool> {
        for l in lambdas {
            let f = Frac::from_poly(Poly::x_int(l));
            if self.apply(ctx, &f)? != o.apply(ctx, &f)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn display(&self, ctx: &DahaContext) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|((w, mu), h)| {
                let word: Vec<String> = ctx
                    .g
                    .get(*w)
                    .word
                    .iter()
                    .map(|i| format!("s{}", i + 1))
                    .collect();
                let w = if word.is_empty() {
                    "e".to_string()
                } else {
                    word.join("")
                };
                if mu.iter().all(|c| *c == 0) {
                    format!("[{h}]·[{w}]")
                } else {
                    format!("[{h}]·D^{mu:?}·[{w}]")
                }
            })
            .collect();
        parts.join(" + ")
    }
}

impl fmt::Display for Operator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, ((w, mu), h)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "[{h}]·D^{mu:?}·[w{w}]")?;
        }
        Ok(())
    }
}

/// One term `coeff · D^mu · [w]` with `w` given by a 1-based word.
#[derive(Clone, Debug, serde::Serialize, serde::Deserialize)]
pub struct OpTermJson {
    pub w: Vec<usize>,
    pub mu: Vec<i64>,
    pub coeff: crate::scalars::json::FracJson,
}

pub fn operator_to_json(ctx: &DahaContext, op: &Operator) -> Vec<OpTermJson> {
    op.terms
        .iter()
        .map(|((w, mu), h)| OpTermJson {
            w: ctx.g.get(*w).word.iter().map(|i| i + 1).collect(),
            mu: mu.clone(),
            coeff: crate::scalars::json::frac_to_json(h),
        })
        .collect()
}

pub fn operator_from_json(ctx: &DahaContext, terms: &[OpTermJson]) -> Result<Operator> {
    let mut op = Operator::zero();
    for t in terms {
        if t.mu.len() != ctx.dim() || t.w.iter().any(|i| *i == 0 || *i > ctx.rank()) {
            return Err(crate::Error::Schema(format!(
                "bad operator term w={:?} mu={:?}",
                t.w, t.mu
            )));
        }
        let word: Vec<usize> = t.w.iter().map(|i| i - 1).collect();
        op.add_term(
            (ctx.g.from_word(&word), t.mu.clone()),
            crate::scalars::json::frac_from_json(&t.coeff)?,
        );
    }
    Ok(op)
}
