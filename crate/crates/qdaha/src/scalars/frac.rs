//! Exact rational functions: a Laurent numerator over a multiset of
//! normalized polynomial factors.
//!
//! The same type serves as the scalar field Q(q^{1/n}, t, v) and as the
//! function field of the torus, where the x variables also occur. Factors are
//! normalized (see [`Poly::normalize`]), so `e^{-b} - c^{-1}` and `e^b - c`
//! are recognized as the same factor.

use std::fmt;

use num_traits::{One, Zero};

use super::poly::{Mono, Poly};
use super::rational::Rational;
use crate::error::{Error, Result};

#[derive(Clone, Debug, Default)]
pub struct Frac {
    num: Poly,
    den: Vec<(Poly, u32)>,
}

pub type Scalar = Frac;

impl Frac {
    pub fn zero() -> Self {
        Frac {
            num: Poly::zero(),
            den: Vec::new(),
        }
    }

    pub fn one() -> Self {
        Self::from_poly(Poly::one())
    }

    pub fn int(n: i64) -> Self {
        Self::from_poly(Poly::int(n))
    }

    pub fn rational(r: Rational) -> Self {
        Self::from_poly(Poly::constant(r))
    }

    pub fn from_poly(p: Poly) -> Self {
        Frac {
            num: p,
            den: Vec::new(),
        }
    }

    pub fn mono(m: Mono) -> Self {
        Self::from_poly(Poly::mono(m))
    }

    /// `num / den` with `den` treated as a single factor.
    pub fn ratio(num: Poly, den: &Poly) -> Result<Self> {
        Ok(Self::from_poly(num).mul(&Self::inv_poly(den)?))
    }

    /// `1/p` for a nonzero Laurent polynomial.
    pub fn inv_poly(p: &Poly) -> Result<Self> {
        if p.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let (shift, lc, norm) = p.normalize();
        let num = Poly::monomial(shift.inv(), lc.recip());
        if norm.is_one() {
            Ok(Frac {
                num,
                den: Vec::new(),
            })
        } else {
            Ok(Frac {
                num,
                den: vec![(norm, 1)],
            })
        }
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den_factors(&self) -> &[(Poly, u32)] {
        &self.den
    }

    /// The expanded denominator.
    pub fn den_poly(&self) -> Poly {
        self.den
            .iter()
            .fold(Poly::one(), |acc, (f, m)| acc.mul(&f.pow(*m)))
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.den.is_empty() && self.num.is_one()
    }

    pub fn is_poly(&self) -> bool {
        self.den.is_empty()
    }

    pub fn has_x(&self) -> bool {
        self.num.has_x() || self.den.iter().any(|(f, _)| f.has_x())
    }

    pub fn as_constant(&self) -> Option<Rational> {
        if self.den.is_empty() {
            self.num.as_constant()
        } else {
            None
        }
    }

    /// Returns `(monomial, coefficient)` when the value is a single monomial.
    pub fn as_monomial(&self) -> Option<(Mono, Rational)> {
        if !self.den.is_empty() {
            return None;
        }
        self.num.as_monomial().map(|(m, c)| (m.clone(), c.clone()))
    }

    pub fn neg(&self) -> Frac {
        Frac {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn scale(&self, r: &Rational) -> Frac {
        if r.is_zero() {
            return Frac::zero();
        }
        Frac {
            num: self.num.scale(r),
            den: self.den.clone(),
        }
    }

    pub fn mul_mono(&self, m: &Mono, r: &Rational) -> Frac {
        if r.is_zero() {
            return Frac::zero();
        }
        Frac {
            num: self.num.mul_mono(m, r),
            den: self.den.clone(),
        }
    }

    fn lcm(a: &[(Poly, u32)], b: &[(Poly, u32)]) -> Vec<(Poly, u32)> {
        let mut out = a.to_vec();
        for (f, m) in b {
            match out.iter_mut().find(|(g, _)| g == f) {
                Some(e) => e.1 = e.1.max(*m),
                None => out.push((f.clone(), *m)),
            }
        }
        out.sort();
        out
    }

    /// Numerator multiplied up to the given common denominator.
    fn lift(&self, l: &[(Poly, u32)]) -> Poly {
        let mut p = self.num.clone();
        for (f, m) in l {
            let have = self.den.iter().find(|(g, _)| g == f).map_or(0, |e| e.1);
            if m > &have {
                p = p.mul(&f.pow(m - have));
            }
        }
        p
    }

    fn cancel(mut self) -> Frac {
        if self.num.is_zero() {
            return Frac::zero();
        }
        for (f, m) in self.den.iter_mut() {
            while *m > 0 {
                match self.num.div_exact(f) {
                    Some(q) => {
                        self.num = q;
                        *m -= 1;
                    }
                    None => break,
                }
            }
        }
        self.den.retain(|(_, m)| *m > 0);
        self
    }

    pub fn add(&self, o: &Frac) -> Frac {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        if self.den == o.den {
            return Frac {
                num: self.num.add(&o.num),
                den: self.den.clone(),
            }
            .cancel();
        }
        let l = Self::lcm(&self.den, &o.den);
        Frac {
            num: self.lift(&l).add(&o.lift(&l)),
            den: l,
        }
        .cancel()
    }

    pub fn sub(&self, o: &Frac) -> Frac {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Frac) -> Frac {
        if self.is_zero() || o.is_zero() {
            return Frac::zero();
        }
        let num = self.num.mul(&o.num);
        if o.den.is_empty() && self.den.is_empty() {
            return Frac {
                num,
                den: Vec::new(),
            };
        }
        let mut den = self.den.clone();
        for (f, m) in &o.den {
            match den.iter_mut().find(|(g, _)| g == f) {
                Some(e) => e.1 += m,
                None => den.push((f.clone(), *m)),
            }
        }
        den.sort();
        Frac { num, den }.cancel()
    }

    pub fn inv(&self) -> Result<Frac> {
        let mut out = Self::inv_poly(&self.num)?;
        let d = self.den_poly();
        out.num = out.num.mul(&d);
        Ok(out.cancel())
    }

    pub fn div(&self, o: &Frac) -> Result<Frac> {
        Ok(self.mul(&o.inv()?))
    }

    pub fn pow(&self, k: i32) -> Result<Frac> {
        let base = if k < 0 { self.inv()? } else { self.clone() };
        let mut acc = Frac::one();
        for _ in 0..k.unsigned_abs() {
            acc = acc.mul(&base);
        }
        Ok(acc)
    }

    /// Applies a monomial substitution to numerator and every factor.
    /// A factor that maps to zero yields [`Error::Pole`].
    pub fn map_monos<F>(&self, mut f: F) -> Result<Frac>
    where
        F: FnMut(&Mono) -> Result<(Mono, Rational)>,
    {
        let mut out = Frac::from_poly(self.num.map_monos(&mut f)?);
        if out.is_zero() {
            return Ok(out);
        }
        for (g, m) in &self.den {
            let g2 = g.map_monos(&mut f)?;
            if g2.is_zero() {
                return Err(Error::Pole(format!(
                    "factor {g} vanishes under substitution"
                )));
            }
            let inv = Self::inv_poly(&g2)?;
            for _ in 0..*m {
                out = out.mul(&inv);
            }
        }
        Ok(out)
    }
}

impl Frac {
    /// Like [`Frac::map_monos`] for an invertible monomial map, which keeps
    /// numerator and factors coprime, so no cancellation pass is needed.
    pub fn map_automorphism<F>(&self, mut f: F) -> Result<Frac>
    where
        F: FnMut(&Mono) -> Result<Mono>,
    {
        let mut num = self.num.map_monos(|m| Ok((f(m)?, Rational::one())))?;
        let mut den: Vec<(Poly, u32)> = Vec::with_capacity(self.den.len());
        for (g, m) in &self.den {
            let g2 = g.map_monos(|x| Ok((f(x)?, Rational::one())))?;
            let (shift, lc, norm) = g2.normalize();
            let k = *m as i32;
            num = num.mul_mono(&shift.pow(-k), &super::rational::pow_i(&lc, -k));
            if norm.is_one() {
                continue;
            }
            match den.iter_mut().find(|(h, _)| *h == norm) {
                Some(e) => e.1 += m,
                None => den.push((norm, *m)),
            }
        }
        den.sort();
        Ok(Frac { num, den })
    }
}

impl Frac {
    /// Splits every denominator factor divisible by the normalized factor `f`
    /// into powers of `f` times a cofactor, so `f` shows up in [`Frac::den_factors`].
    pub fn split_factor(&self, f: &Poly) -> Frac {
        let mut num = self.num.clone();
        let mut den: Vec<(Poly, u32)> = Vec::with_capacity(self.den.len() + 1);
        let push = |den: &mut Vec<(Poly, u32)>, g: Poly, m: u32| match den
            .iter_mut()
            .find(|(h, _)| *h == g)
        {
            Some(e) => e.1 += m,
            None => den.push((g, m)),
        };
        for (g, m) in &self.den {
            let mut rest = g.clone();
            let mut c = 0;
            if g != f {
                while let Some(q) = rest.div_exact(f) {
                    rest = q;
                    c += 1;
                }
            }
            if c == 0 {
                push(&mut den, g.clone(), *m);
                continue;
            }
            push(&mut den, f.clone(), c * m);
            let (shift, lc, norm) = rest.normalize();
            let k = *m as i32;
            num = num.mul_mono(&shift.pow(-k), &super::rational::pow_i(&lc, -k));
            if !norm.is_one() {
                push(&mut den, norm, *m);
            }
        }
        den.sort();
        Frac { num, den }
    }
}

impl PartialEq for Frac {
    fn eq(&self, o: &Self) -> bool {
        if self.den == o.den {
            return self.num == o.num;
        }
        let l = Self::lcm(&self.den, &o.den);
        self.lift(&l) == o.lift(&l)
    }
}

impl Eq for Frac {}

impl From<Poly> for Frac {
    fn from(p: Poly) -> Self {
        Frac::from_poly(p)
    }
}

impl fmt::Display for Frac {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_empty() {
            return write!(f, "{}", self.num);
        }
        let den: Vec<String> = self
            .den
            .iter()
            .map(|(g, m)| {
                if *m == 1 {
                    format!("({g})")
                } else {
                    format!("({g})^{m}")
                }
            })
            .collect();
        if den.len() == 1 {
            write!(f, "({}) / {}", self.num, den[0])
        } else {
            write!(f, "({}) / ({})", self.num, den.join("*"))
        }
    }
}

impl One for Frac {
    fn one() -> Self {
        Frac::one()
    }
}

impl std::ops::Mul for Frac {
    type Output = Frac;
    fn mul(self, o: Frac) -> Frac {
        Frac::mul(&self, &o)
    }
}
