use crate::error::{Error, Result};
use crate::linalg::solve;
use crate::rootdata::{RootDatum, WeylGroup};
use crate::scalars::QPower;

/// A point of `T = Hom(X, C^*)`, given by its values on the basis of X.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TorusPoint {
    pub coords: Vec<QPower>,
}

impl TorusPoint {
    pub fn new(coords: Vec<QPower>) -> Self {
        TorusPoint { coords }
    }

    pub fn identity(dim: usize) -> Self {
        TorusPoint {
            coords: vec![QPower::one(); dim],
        }
    }

    pub fn parse(parts: &[&str]) -> Result<Self> {
        Ok(TorusPoint {
            coords: parts
                .iter()
                .map(|s| QPower::parse(s))
                .collect::<Result<_>>()?,
        })
    }

    /// `λ(x) = Π coords_i^{x_i}`.
    pub fn eval(&self, x: &[i64]) -> QPower {
        self.coords
            .iter()
            .zip(x)
            .fold(QPower::one(), |acc, (c, e)| acc.mul(&c.pow(*e)))
    }

    pub fn mul(&self, o: &TorusPoint) -> TorusPoint {
        TorusPoint {
            coords: self
                .coords
                .iter()
                .zip(&o.coords)
                .map(|(a, b)| a.mul(b))
                .collect(),
        }
    }

    pub fn div(&self, o: &TorusPoint) -> TorusPoint {
        TorusPoint {
            coords: self
                .coords
                .iter()
                .zip(&o.coords)
                .map(|(a, b)| a.div(b))
                .collect(),
        }
    }

    /// The point `q^y`: `x ↦ q^{<x,y>}`.
    pub fn q_point(d: &RootDatum, y: &[i64]) -> TorusPoint {
        TorusPoint {
            coords: (0..d.dim)
                .map(|i| {
                    let mut e = vec![0; d.dim];
                    e[i] = 1;
                    QPower::q(d.pair(&e, y))
                })
                .collect(),
        }
    }

    pub fn shift(&self, d: &RootDatum, y: &[i64]) -> TorusPoint {
        self.mul(&Self::q_point(d, y))
    }

    /// `(wλ)(x) = λ(w^{-1} x)`.
    pub fn weyl_act(&self, g: &WeylGroup, w: usize) -> TorusPoint {
        let winv = g.get(g.inv(w));
        TorusPoint {
            coords: (0..self.coords.len())
                .map(|i| self.eval(&winv.x.column(i)))
                .collect(),
        }
    }

    /// The unique `y` with `self = o · q^y`, if any.
    pub fn q_ratio(&self, d: &RootDatum, o: &TorusPoint) -> Option<Vec<i64>> {
        let r = self.div(o);
        let mut target = Vec::with_capacity(d.dim);
        for c in &r.coords {
            target.push(c.as_q_power()?);
        }
        let y = solve(&d.pairing, &target)?;
        y.iter().map(crate::scalars::rational::to_i64).collect()
    }

    /// The value of a root `α` at this point.
    pub fn root_value(&self, d: &RootDatum, k: usize) -> QPower {
        self.eval(&d.roots[k].x)
    }
}

/// Parses a point from strings, checking the dimension.
pub fn parse_point(d: &RootDatum, parts: &[String]) -> Result<TorusPoint> {
    if parts.len() != d.dim {
        return Err(Error::Dimension(format!(
            "expected {} coordinates, got {}",
            d.dim,
            parts.len()
        )));
    }
    let p: Vec<&str> = parts.iter().map(String::as_str).collect();
    TorusPoint::parse(&p)
}
