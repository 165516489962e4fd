//! Divisors `T_{α,τ} = {e^α = τ}` and residues of simple poles along them.
//!
//! Coordinates are changed unimodularly so that `u_1 = e^α`; the residue of
//! `h` in `u_1` is `(h·(e^α - τ))|_{u_1 = τ}`, a function of the transverse
//! coordinates `u_2, …, u_n`.

use std::fmt;

use num_traits::One;

use crate::error::{Error, Result};
use crate::linalg::{unimodular_to_e1, IMat};
use crate::rootdata::RootDatum;
use crate::scalars::poly::{Mono, VAR_Q, VAR_T, VAR_V, VAR_X0};
use crate::scalars::{Frac, Poly, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Divisor {
    /// The character `α`, in integer X coordinates.
    pub alpha: Vec<i64>,
    /// A scalar monomial in q, t, v with coefficient one.
    pub tau: Mono,
}

impl Divisor {
    pub fn new(alpha: Vec<i64>, tau: Mono) -> Result<Self> {
        if tau.has_x() {
            return Err(Error::Parse(format!(
                "divisor value {} is not a scalar",
                Poly::mono(tau)
            )));
        }
        Ok(Divisor { alpha, tau })
    }

    /// `e^α - τ`.
    pub fn equation(&self) -> Poly {
        Poly::x_int(&self.alpha).sub(&Poly::mono(self.tau.clone()))
    }

    /// The same divisor written as `e^{-α} = τ^{-1}`.
    pub fn flipped(&self) -> Divisor {
        Divisor {
            alpha: self.alpha.iter().map(|c| -c).collect(),
            tau: self.tau.inv(),
        }
    }

    fn factor(&self) -> Poly {
        self.equation().normalize().2
    }

    /// Pole order of `h` along the divisor.
    pub fn pole_order(&self, h: &Frac) -> u32 {
        let f = self.factor();
        h.split_factor(&f)
            .den_factors()
            .iter()
            .find(|(g, _)| *g == f)
            .map_or(0, |(_, m)| *m)
    }

    /// Restriction `h|_{e^α = τ}` in transverse coordinates. Fails with
    /// [`Error::Pole`] if `h` has a pole along the divisor.
    pub fn restrict(&self, h: &Frac) -> Result<Frac> {
        let n = self.alpha.len();
        let e = unimodular_to_e1(&self.alpha).ok_or_else(|| {
            Error::NonIntegral(format!(
                "{:?} is not primitive in the character lattice",
                self.alpha
            ))
        })?;
        h.map_monos(|m| restrict_mono(&e, n, &self.tau, m))
    }

    /// Residue of a function with at most a simple pole along the divisor.
    pub fn residue(&self, h: &Frac) -> Result<Frac> {
        match self.pole_order(h) {
            0 => Ok(Frac::zero()),
            1 => self.restrict(
                &h.split_factor(&self.factor())
                    .mul(&Frac::from_poly(self.equation())),
            ),
            k => Err(Error::HigherOrderPole(format!("order {k} along {self}"))),
        }
    }

    /// Whether `h` vanishes identically on the divisor (false at a pole).
    pub fn vanishes(&self, h: &Frac) -> Result<bool> {
        if h.is_zero() {
            return Ok(true);
        }
        if self.pole_order(h) > 0 {
            return Ok(false);
        }
        match self.restrict(h) {
            Ok(r) => Ok(r.is_zero()),
            Err(Error::Pole(_)) => Ok(false),
            Err(e) => Err(e),
        }
    }
}

impl fmt::Display for Divisor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "T[{:?}, {}]", self.alpha, Poly::mono(self.tau.clone()))
    }
}

fn restrict_mono(e: &IMat, n: usize, tau: &Mono, m: &Mono) -> Result<(Mono, Rational)> {
    let half: Vec<i64> = m.x_exps(n).iter().map(|x| *x as i64).collect();
    let c = e.apply(&half);
    let mut out: Vec<i32> = (0..VAR_X0).map(|i| m.get(i)).collect();
    if c[0] != 0 {
        for v in [VAR_Q, VAR_T, VAR_V] {
            let prod = tau.get(v) as i64 * c[0];
            if prod % 2 != 0 {
                return Err(Error::Irrational(format!(
                    "square root of {} on a divisor",
                    Poly::mono(tau.clone())
                )));
            }
            out[v] += (prod / 2) as i32;
        }
    }
    out.resize(VAR_X0 + n, 0);
    for i in 1..n {
        out[VAR_X0 + i] = c[i] as i32;
    }
    Ok((Mono::from_exps(&out), Rational::one()))
}

/// A denominator factor read as a root divisor `e^β = τ` with `β > 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PoleKind {
    /// `β` is the root with the given index and `τ` is a monomial.
    Root { root: usize, divisor: Divisor },
    /// A factor without x variables (a constant of the base field).
    Scalar,
    /// Anything else, described for reporting.
    Other(String),
}

/// Classifies a normalized denominator factor.
pub fn classify_factor(d: &RootDatum, f: &Poly) -> PoleKind {
    if !f.has_x() {
        return PoleKind::Scalar;
    }
    if f.len() != 2 {
        return PoleKind::Other(format!("non-binomial factor {f}"));
    }
    let (m1, c1) = &f.terms()[0];
    let (m2, c2) = &f.terms()[1];
    // m1 c1 + m2 c2 = 0  <=>  m1/m2 = -c2/c1.
    let ratio = m1.div(m2);
    let coeff = -(c2 / c1);
    let n = d.dim;
    let half = ratio.x_exps(n);
    if half.iter().any(|h| h % 2 != 0) {
        return PoleKind::Other(format!("factor {f} along a half character"));
    }
    let mut beta: Vec<i64> = half.iter().map(|h| (*h / 2) as i64).collect();
    // x^β σ = coeff  =>  e^β = coeff · σ^{-1}
    let mut tau = ratio.scalar_part().inv();
    if !coeff.is_one() {
        return PoleKind::Other(format!("factor {f} with non-monomial value"));
    }
    let Some(mut k) = d.root_index(&beta) else {
        return PoleKind::Other(format!("factor {f}: {beta:?} is not a root"));
    };
    if !d.roots[k].is_positive() {
        beta = beta.iter().map(|c| -c).collect();
        tau = tau.inv();
        k = d.negate(k);
    }
    PoleKind::Root {
        root: k,
        divisor: Divisor { alpha: beta, tau },
    }
}
