//! Sparse Laurent polynomials over Q in the variables q, t, v and x_1..x_n.
//!
//! Exponents are stored as integers in fixed units: q exponents in units of
//! `1/Q_UNIT` (so every root index dividing `Q_UNIT` is available at once),
//! x exponents in units of `1/X_UNIT` to allow half-weights, and t, v with
//! unit 1. Terms are kept sorted by a lexicographic monomial order, which is a
//! group order on the exponent lattice, so leading terms are multiplicative.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use num_traits::{One, Signed, Zero};
use smallvec::SmallVec;

use super::rational::{fmt_rational, Rational};
use crate::error::{Error, Result};

pub const Q_UNIT: i32 = 2520;
pub const X_UNIT: i32 = 2;
pub const VAR_Q: usize = 0;
pub const VAR_T: usize = 1;
pub const VAR_V: usize = 2;
pub const VAR_X0: usize = 3;

/// Exponent vector with trailing zeros trimmed.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Mono(SmallVec<[i32; 8]>);

impl Mono {
    pub fn one() -> Self {
        Mono(SmallVec::new())
    }

    pub fn from_exps(e: &[i32]) -> Self {
        let mut m = Mono(SmallVec::from_slice(e));
        m.trim();
        m
    }

    pub fn var(i: usize, e: i32) -> Self {
        let mut v = SmallVec::from_elem(0, i + 1);
        v[i] = e;
        let mut m = Mono(v);
        m.trim();
        m
    }

    fn trim(&mut self) {
        while self.0.last() == Some(&0) {
            self.0.pop();
        }
    }

    pub fn get(&self, i: usize) -> i32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn exps(&self) -> &[i32] {
        &self.0
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    fn zip_with(&self, o: &Mono, f: impl Fn(i32, i32) -> i32) -> Mono {
        let n = self.0.len().max(o.0.len());
        let mut v = SmallVec::with_capacity(n);
        for i in 0..n {
            v.push(f(self.get(i), o.get(i)));
        }
        let mut m = Mono(v);
        m.trim();
        m
    }

    pub fn mul(&self, o: &Mono) -> Mono {
        self.zip_with(o, |a, b| a + b)
    }

    pub fn div(&self, o: &Mono) -> Mono {
        self.zip_with(o, |a, b| a - b)
    }

    pub fn meet(&self, o: &Mono) -> Mono {
        self.zip_with(o, i32::min)
    }

    pub fn join(&self, o: &Mono) -> Mono {
        self.zip_with(o, i32::max)
    }

    pub fn inv(&self) -> Mono {
        Mono(self.0.iter().map(|e| -e).collect())
    }

    pub fn pow(&self, k: i32) -> Mono {
        let mut m = Mono(self.0.iter().map(|e| e * k).collect());
        m.trim();
        m
    }

    pub fn is_nonneg(&self) -> bool {
        self.0.iter().all(|e| *e >= 0)
    }

    pub fn has_x(&self) -> bool {
        self.0.len() > VAR_X0
    }

    /// The part in q, t, v.
    pub fn scalar_part(&self) -> Mono {
        Mono::from_exps(&self.0[..self.0.len().min(VAR_X0)])
    }

    /// The part in the x variables.
    pub fn x_part(&self) -> Mono {
        let mut v: SmallVec<[i32; 8]> = SmallVec::from_elem(0, self.0.len().min(VAR_X0));
        if self.0.len() > VAR_X0 {
            v.extend_from_slice(&self.0[VAR_X0..]);
        }
        let mut m = Mono(v);
        m.trim();
        m
    }

    /// x exponents in half units, padded to length `n`.
    pub fn x_exps(&self, n: usize) -> Vec<i32> {
        (0..n).map(|i| self.get(VAR_X0 + i)).collect()
    }
}

impl Ord for Mono {
    fn cmp(&self, o: &Self) -> Ordering {
        let n = self.0.len().max(o.0.len());
        for i in 0..n {
            match self.get(i).cmp(&o.get(i)) {
                Ordering::Equal => continue,
                c => return c,
            }
        }
        Ordering::Equal
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

/// Laurent polynomial; terms sorted by decreasing monomial, no zero coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Poly {
    terms: Vec<(Mono, Rational)>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(Mono::one(), c)
    }

    pub fn int(n: i64) -> Self {
        Self::constant(super::rational::rat(n))
    }

    pub fn monomial(m: Mono, c: Rational) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            Poly {
                terms: vec![(m, c)],
            }
        }
    }

    pub fn mono(m: Mono) -> Self {
        Self::monomial(m, Rational::one())
    }

    /// `q^e` for a rational exponent representable in units of `1/Q_UNIT`.
    pub fn q_pow(e: &Rational) -> Result<Self> {
        Ok(Self::mono(Mono::var(VAR_Q, q_units(e)?)))
    }

    pub fn t_pow(e: i32) -> Self {
        Self::mono(Mono::var(VAR_T, e))
    }

    pub fn v_pow(e: i32) -> Self {
        Self::mono(Mono::var(VAR_V, e))
    }

    /// `e^λ` for λ given by integer coordinates.
    pub fn x_int(exps: &[i64]) -> Self {
        Self::mono(x_mono_int(exps))
    }

    pub fn from_terms(it: impl IntoIterator<Item = (Mono, Rational)>) -> Self {
        let mut map: HashMap<Mono, Rational> = HashMap::new();
        for (m, c) in it {
            *map.entry(m).or_insert_with(Rational::zero) += c;
        }
        Self::from_map(map)
    }

    fn from_map(map: HashMap<Mono, Rational>) -> Self {
        let mut terms: Vec<_> = map.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_by(|a, b| b.0.cmp(&a.0));
        Poly { terms }
    }

    pub fn terms(&self) -> &[(Mono, Rational)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1.is_one()
    }

    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.as_slice() {
            [] => Some(Rational::zero()),
            [(m, c)] if m.is_one() => Some(c.clone()),
            _ => None,
        }
    }

    pub fn as_monomial(&self) -> Option<(&Mono, &Rational)> {
        match self.terms.as_slice() {
            [(m, c)] => Some((m, c)),
            _ => None,
        }
    }

    pub fn leading(&self) -> Option<&(Mono, Rational)> {
        self.terms.first()
    }

    pub fn has_x(&self) -> bool {
        self.terms.iter().any(|(m, _)| m.has_x())
    }

    /// Componentwise minimum exponent over all terms.
    pub fn min_mono(&self) -> Mono {
        let mut it = self.terms.iter();
        match it.next() {
            None => Mono::one(),
            Some((m, _)) => it.fold(m.clone(), |acc, (m, _)| acc.meet(m)),
        }
    }

    pub fn neg(&self) -> Poly {
        Poly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn scale(&self, r: &Rational) -> Poly {
        if r.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c * r)).collect(),
        }
    }

    pub fn mul_mono(&self, m: &Mono, r: &Rational) -> Poly {
        if r.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self.terms.iter().map(|(a, c)| (a.mul(m), c * r)).collect(),
        }
    }

    fn merge(&self, o: &Poly, sign: bool) -> Poly {
        let mut out = Vec::with_capacity(self.terms.len() + o.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() || j < o.terms.len() {
            let ord = match (self.terms.get(i), o.terms.get(j)) {
                (Some(a), Some(b)) => a.0.cmp(&b.0),
                (Some(_), None) => Ordering::Greater,
                _ => Ordering::Less,
            };
            match ord {
                Ordering::Greater => {
                    out.push(self.terms[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    let (m, c) = &o.terms[j];
                    out.push((m.clone(), if sign { -c } else { c.clone() }));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if sign {
                        &self.terms[i].1 - &o.terms[j].1
                    } else {
                        &self.terms[i].1 + &o.terms[j].1
                    };
                    if !c.is_zero() {
                        out.push((self.terms[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        Poly { terms: out }
    }

    pub fn add(&self, o: &Poly) -> Poly {
        self.merge(o, false)
    }

    pub fn sub(&self, o: &Poly) -> Poly {
        self.merge(o, true)
    }

    pub fn mul(&self, o: &Poly) -> Poly {
        if self.is_zero() || o.is_zero() {
            return Poly::zero();
        }
        if let Some((m, c)) = o.as_monomial() {
            return self.mul_mono(m, c);
        }
        if let Some((m, c)) = self.as_monomial() {
            return o.mul_mono(m, c);
        }
        let mut map: HashMap<Mono, Rational> = HashMap::with_capacity(self.len() * o.len());
        for (a, ca) in &self.terms {
            for (b, cb) in &o.terms {
                *map.entry(a.mul(b)).or_insert_with(Rational::zero) += ca * cb;
            }
        }
        Self::from_map(map)
    }

    pub fn pow(&self, k: u32) -> Poly {
        let mut acc = Poly::one();
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Applies a monomial map termwise, summing collisions.
    pub fn map_monos<F>(&self, mut f: F) -> Result<Poly>
    where
        F: FnMut(&Mono) -> Result<(Mono, Rational)>,
    {
        let mut map: HashMap<Mono, Rational> = HashMap::with_capacity(self.len());
        for (m, c) in &self.terms {
            let (m2, r) = f(m)?;
            *map.entry(m2).or_insert_with(Rational::zero) += c * r;
        }
        Ok(Self::from_map(map))
    }

    /// Exact quotient `self / d` in the Laurent ring, or `None` if `d` does not divide.
    pub fn div_exact(&self, d: &Poly) -> Option<Poly> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Poly::zero());
        }
        if let Some((m, c)) = d.as_monomial() {
            return Some(self.mul_mono(&m.inv(), &c.recip()));
        }
        // Shift both to honest polynomials with minimal exponents zero; the
        // valuation in each variable is additive, so the quotient is then a
        // polynomial too.
        let sd = d.min_mono();
        let sf = self.min_mono();
        let d0 = d.mul_mono(&sd.inv(), &Rational::one());
        let mut r = self.mul_mono(&sf.inv(), &Rational::one());
        let (dl, dc) = d0.terms[0].clone();
        let mut quot: Vec<(Mono, Rational)> = Vec::new();
        while let Some((rl, rc)) = r.terms.first().cloned() {
            let qm = rl.div(&dl);
            if !qm.is_nonneg() {
                return None;
            }
            let qc = rc / &dc;
            r = r.sub(&d0.mul_mono(&qm, &qc));
            quot.push((qm, qc));
        }
        let q = Poly::from_terms(quot);
        Some(q.mul_mono(&sf.div(&sd), &Rational::one()))
    }

    /// Splits `self = shift * lc * norm` with `norm` having componentwise
    /// minimal exponent zero and leading coefficient one.
    pub fn normalize(&self) -> (Mono, Rational, Poly) {
        let shift = self.min_mono();
        let p = self.mul_mono(&shift.inv(), &Rational::one());
        let lc = p.terms[0].1.clone();
        let norm = p.scale(&lc.recip());
        (shift, lc, norm)
    }
}

/// Converts a rational q exponent to internal units.
pub fn q_units(e: &Rational) -> Result<i32> {
    let u = e * Rational::from_integer(Q_UNIT.into());
    super::rational::to_i64(&u)
        .and_then(|v| i32::try_from(v).ok())
        .ok_or_else(|| {
            Error::Exponent(format!(
                "q^{} needs a root index dividing {Q_UNIT}",
                fmt_rational(e)
            ))
        })
}

pub fn q_exp_of(units: i32) -> Rational {
    Rational::new(units.into(), Q_UNIT.into())
}

pub fn x_mono_int(exps: &[i64]) -> Mono {
    let mut v = vec![0i32; VAR_X0 + exps.len()];
    for (i, e) in exps.iter().enumerate() {
        v[VAR_X0 + i] = (*e as i32) * X_UNIT;
    }
    Mono::from_exps(&v)
}

/// `e^λ` for λ with coordinates in half units.
pub fn x_mono_half(half: &[i32]) -> Mono {
    let mut v = vec![0i32; VAR_X0 + half.len()];
    v[VAR_X0..].copy_from_slice(half);
    Mono::from_exps(&v)
}

fn fmt_exp(e: &Rational) -> String {
    if e.is_integer() {
        e.to_string()
    } else {
        format!("({})", fmt_rational(e))
    }
}

impl fmt::Display for Mono {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (i, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            let (name, ex) = match i {
                VAR_Q => ("q".to_string(), q_exp_of(e)),
                VAR_T => ("t".to_string(), Rational::from_integer(e.into())),
                VAR_V => ("v".to_string(), Rational::from_integer(e.into())),
                _ => (
                    format!("x{}", i - VAR_X0 + 1),
                    Rational::new(e.into(), X_UNIT.into()),
                ),
            };
            if ex.is_one() {
                parts.push(name);
            } else {
                parts.push(format!("{name}^{}", fmt_exp(&ex)));
            }
        }
        write!(f, "{}", parts.join("*"))
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            if m.is_one() {
                write!(f, "{}", fmt_rational(&a))?;
            } else if a.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{}*{m}", fmt_rational(&a))?;
            }
        }
        Ok(())
    }
}
