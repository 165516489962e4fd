//! Nonzero scalars of the form `ζ · m · q^a` with ζ a root of unity,
//! `m` a positive rational and `a` rational.
//!
//! These are the coordinates of torus points and the diagonal entries of
//! constant loops. Textual form: `[-][m*][z(r)*]q^a`, for example `-q^1/2`,
//! `2*q^3`, `z(1/3)*q^-1` or `-1`.

use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::frac::Scalar;
use super::poly::{Mono, Poly, VAR_Q};
use super::rational::{fmt_rational, parse_rational, pow_i, ratio, Rational};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QPower {
    /// Angle of the root of unity as a fraction of a full turn, in `[0, 1)`.
    pub rot: Rational,
    pub mag: Rational,
    pub qexp: Rational,
}

fn frac_part(r: &Rational) -> Rational {
    r - r.floor()
}

impl QPower {
    pub fn new(rot: Rational, mag: Rational, qexp: Rational) -> Result<Self> {
        if !mag.is_positive() {
            return Err(Error::Parse("magnitude must be positive".into()));
        }
        Ok(QPower {
            rot: frac_part(&rot),
            mag,
            qexp,
        })
    }

    pub fn one() -> Self {
        QPower {
            rot: Rational::zero(),
            mag: Rational::one(),
            qexp: Rational::zero(),
        }
    }

    pub fn q(e: Rational) -> Self {
        QPower {
            qexp: e,
            ..Self::one()
        }
    }

    pub fn minus_one() -> Self {
        QPower {
            rot: ratio(1, 2),
            ..Self::one()
        }
    }

    /// A nonzero rational constant.
    pub fn constant(c: &Rational) -> Result<Self> {
        if c.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let rot = if c.is_negative() {
            ratio(1, 2)
        } else {
            Rational::zero()
        };
        Ok(QPower {
            rot,
            mag: c.abs(),
            qexp: Rational::zero(),
        })
    }

    pub fn mul(&self, o: &QPower) -> QPower {
        QPower {
            rot: frac_part(&(&self.rot + &o.rot)),
            mag: &self.mag * &o.mag,
            qexp: &self.qexp + &o.qexp,
        }
    }

    pub fn inv(&self) -> QPower {
        QPower {
            rot: frac_part(&-&self.rot),
            mag: self.mag.recip(),
            qexp: -&self.qexp,
        }
    }

    pub fn div(&self, o: &QPower) -> QPower {
        self.mul(&o.inv())
    }

    pub fn pow(&self, k: i64) -> QPower {
        let kr = Rational::from_integer(k.into());
        QPower {
            rot: frac_part(&(&self.rot * &kr)),
            mag: pow_i(&self.mag, k as i32),
            qexp: &self.qexp * &kr,
        }
    }

    /// Rational power; the magnitude must stay rational.
    pub fn pow_rational(&self, e: &Rational) -> Result<QPower> {
        let mag = super::rational::rational_pow(&self.mag, e)
            .ok_or_else(|| Error::Irrational(format!("({self})^{}", fmt_rational(e))))?;
        Ok(QPower {
            rot: frac_part(&(&self.rot * e)),
            mag,
            qexp: &self.qexp * e,
        })
    }

    pub fn is_one(&self) -> bool {
        self.rot.is_zero() && self.mag.is_one() && self.qexp.is_zero()
    }

    /// `Some(k)` when the value is exactly `q^k`.
    pub fn as_q_power(&self) -> Option<Rational> {
        if self.rot.is_zero() && self.mag.is_one() {
            Some(self.qexp.clone())
        } else {
            None
        }
    }

    /// `Some(k)` when the value is `q^k` with `k` an integer.
    pub fn as_integral_q_power(&self) -> Option<i64> {
        self.as_q_power().and_then(|k| super::rational::to_i64(&k))
    }

    /// Whether `self / o` lies in `q^Z`.
    pub fn same_q_class(&self, o: &QPower) -> bool {
        self.div(o).as_integral_q_power().is_some()
    }

    /// Embeds into the scalar field; only the roots of unity ±1 are available there.
    pub fn to_scalar(&self) -> Result<Scalar> {
        let sign = if self.rot.is_zero() {
            Rational::one()
        } else if self.rot == ratio(1, 2) {
            -Rational::one()
        } else {
            return Err(Error::RootOfUnity(format!(
                "{self} is not expressible over Q(q^(1/n))"
            )));
        };
        let p = Poly::q_pow(&self.qexp)?;
        Ok(Scalar::from_poly(p.scale(&(sign * &self.mag))))
    }

    /// Inverse of [`Self::to_scalar`] for monomials `c q^a`.
    pub fn from_scalar(s: &Scalar) -> Result<QPower> {
        let (m, c) = s
            .as_monomial()
            .ok_or_else(|| Error::NotInClass(format!("{s} is not a monomial in q")))?;
        if m.exps()
            .iter()
            .enumerate()
            .any(|(i, e)| i != VAR_Q && *e != 0)
        {
            return Err(Error::NotInClass(format!(
                "{s} involves variables other than q"
            )));
        }
        let mut p = QPower::constant(&c)?;
        p.qexp = super::poly::q_exp_of(m.get(VAR_Q));
        Ok(p)
    }

    pub fn parse(s: &str) -> Result<QPower> {
        let src = s;
        let mut s = s.trim().replace(' ', "");
        let bad = || Error::Parse(format!("bad q-power '{src}'"));
        let mut out = QPower::one();
        if let Some(r) = s.strip_prefix('-') {
            out = QPower::minus_one();
            s = r.to_string();
        }
        for part in s.split('*').filter(|p| !p.is_empty()) {
            if let Some(r) = part.strip_prefix("z(").and_then(|r| r.strip_suffix(')')) {
                let rot = parse_rational(r)?;
                out = out.mul(&QPower {
                    rot: frac_part(&rot),
                    ..QPower::one()
                });
            } else if let Some(r) = part.strip_prefix('q') {
                let e = if r.is_empty() {
                    Rational::one()
                } else {
                    let r = r.strip_prefix('^').ok_or_else(bad)?;
                    let r = r
                        .trim_start_matches(['(', '{'])
                        .trim_end_matches([')', '}']);
                    parse_rational(r)?
                };
                out = out.mul(&QPower::q(e));
            } else {
                let c = parse_rational(part)?;
                out = out.mul(&QPower::constant(&c)?);
            }
        }
        Ok(out)
    }
}

impl fmt::Display for QPower {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        let mut sign = "";
        if self.rot == ratio(1, 2) {
            sign = "-";
        } else if !self.rot.is_zero() {
            parts.push(format!("z({})", fmt_rational(&self.rot)));
        }
        if !self.mag.is_one() || (self.qexp.is_zero() && parts.is_empty()) {
            parts.insert(0, fmt_rational(&self.mag));
        }
        if !self.qexp.is_zero() {
            parts.push(if self.qexp.is_one() {
                "q".into()
            } else {
                format!("q^{}", fmt_rational(&self.qexp))
            });
        }
        write!(f, "{sign}{}", parts.join("*"))
    }
}

impl Serialize for QPower {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for QPower {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        QPower::parse(&s).map_err(serde::de::Error::custom)
    }
}

/// The monomial `q^a` as a [`Mono`].
pub fn q_mono(a: &Rational) -> Result<Mono> {
    Ok(Mono::var(VAR_Q, super::poly::q_units(a)?))
}
