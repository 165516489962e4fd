//! Laurent polynomials in a loop variable `z` with scalar coefficients.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::Result;
use crate::scalars::{rat, Frac, Poly};

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ZPoly {
    pub coeffs: BTreeMap<i64, Frac>,
}

/// `q^m` as a scalar.
pub fn q_int(m: i64) -> Frac {
    Frac::from_poly(Poly::q_pow(&rat(m)).expect("integral q power"))
}

impl ZPoly {
    pub fn zero() -> Self {
        ZPoly::default()
    }

    pub fn one() -> Self {
        Self::constant(Frac::one())
    }

    pub fn constant(c: Frac) -> Self {
        Self::monomial(c, 0)
    }

    pub fn monomial(c: Frac, m: i64) -> Self {
        let mut p = ZPoly::zero();
        p.add_term(m, c);
        p
    }

    pub fn add_term(&mut self, m: i64, c: Frac) {
        if c.is_zero() {
            return;
        }
        let s = match self.coeffs.remove(&m) {
            Some(old) => old.add(&c),
            None => c,
        };
        if !s.is_zero() {
            self.coeffs.insert(m, s);
        }
    }

    pub fn coeff(&self, m: i64) -> Frac {
        self.coeffs.get(&m).cloned().unwrap_or_else(Frac::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs.get(&0).is_some_and(Frac::is_one)
    }

    pub fn as_monomial(&self) -> Option<(i64, &Frac)> {
        if self.coeffs.len() == 1 {
            self.coeffs.iter().next().map(|(m, c)| (*m, c))
        } else {
            None
        }
    }

    /// Highest z power, if nonzero.
    pub fn degree(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn add(&self, o: &ZPoly) -> ZPoly {
        let mut out = self.clone();
        for (m, c) in &o.coeffs {
            out.add_term(*m, c.clone());
        }
        out
    }

    pub fn neg(&self) -> ZPoly {
        ZPoly {
            coeffs: self.coeffs.iter().map(|(m, c)| (*m, c.neg())).collect(),
        }
    }

    pub fn sub(&self, o: &ZPoly) -> ZPoly {
        self.add(&o.neg())
    }

    pub fn scale(&self, c: &Frac) -> ZPoly {
        let mut out = ZPoly::zero();
        for (m, d) in &self.coeffs {
            out.add_term(*m, c.mul(d));
        }
        out
    }

    pub fn mul(&self, o: &ZPoly) -> ZPoly {
        let mut out = ZPoly::zero();
        for (a, c) in &self.coeffs {
            for (b, d) in &o.coeffs {
                out.add_term(a + b, c.mul(d));
            }
        }
        out
    }

    /// `p(qz)`.
    pub fn q_shift(&self) -> ZPoly {
        ZPoly {
            coeffs: self
                .coeffs
                .iter()
                .map(|(m, c)| (*m, c.mul(&q_int(*m))))
                .collect(),
        }
    }

    /// `p(1)`.
    pub fn eval_one(&self) -> Frac {
        self.coeffs.values().fold(Frac::zero(), |acc, c| acc.add(c))
    }

    pub fn div_scalar(&self, c: &Frac) -> Result<ZPoly> {
        Ok(self.scale(&c.inv()?))
    }
}

impl fmt::Display for ZPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .map(|(m, c)| match m {
                0 => format!("({c})"),
                1 => format!("({c})*z"),
                _ => format!("({c})*z^{m}"),
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}
