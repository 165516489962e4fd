//! The skew form on `X ⊕ Y` and real affine roots.

use num_traits::Zero;

use super::datum::RootDatum;
use super::weyl::WeylGroup;
use crate::error::{Error, Result};
use crate::scalars::{rat, Rational};

/// A skew-symmetric rational form on `Z^k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkewForm {
    pub matrix: Vec<Vec<Rational>>,
}

impl SkewForm {
    pub fn new(matrix: Vec<Vec<Rational>>) -> Result<Self> {
        let k = matrix.len();
        for i in 0..k {
            if matrix[i].len() != k {
                return Err(Error::Dimension("skew form must be square".into()));
            }
            for j in 0..k {
                if matrix[i][j] != -matrix[j][i].clone() {
                    return Err(Error::Dimension("form is not skew-symmetric".into()));
                }
            }
        }
        Ok(SkewForm { matrix })
    }

    /// `ω((x,y),(x',y')) = <x,y'> - <x',y>` on `X ⊕ Y`.
    pub fn from_datum(d: &RootDatum) -> Self {
        let n = d.dim;
        let mut m = vec![vec![Rational::zero(); 2 * n]; 2 * n];
        for a in 0..n {
            for b in 0..n {
                m[a][n + b] = d.pairing[a][b].clone();
                m[n + b][a] = -d.pairing[a][b].clone();
            }
        }
        SkewForm { matrix: m }
    }

    pub fn dim(&self) -> usize {
        self.matrix.len()
    }

    pub fn eval(&self, u: &[i64], v: &[i64]) -> Rational {
        let mut s = Rational::zero();
        for (i, a) in u.iter().enumerate() {
            if *a == 0 {
                continue;
            }
            for (j, b) in v.iter().enumerate() {
                if *b != 0 {
                    s += &self.matrix[i][j] * rat(a * b);
                }
            }
        }
        s
    }

    /// Whether `ω(·, v)` vanishes identically.
    pub fn is_radical(&self, v: &[i64]) -> bool {
        (0..self.dim()).all(|i| {
            let mut e = vec![0; self.dim()];
            e[i] = 1;
            self.eval(&e, v).is_zero()
        })
    }
}

/// The real affine root `α + kδ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AffineRoot {
    /// Index into `RootDatum::roots`.
    pub root: usize,
    pub level: i64,
}

impl AffineRoot {
    /// The affine simple root `α_0 = δ - θ`.
    pub fn alpha0(d: &RootDatum) -> Self {
        AffineRoot {
            root: d.negate(d.highest_root),
            level: 1,
        }
    }

    pub fn is_positive(&self, d: &RootDatum) -> bool {
        self.level > 0 || (self.level == 0 && self.root < d.n_positive)
    }

    /// Image under the extended affine Weyl group element `t_μ w`:
    /// `wβ + (k + <wβ, μ>)δ`.
    pub fn act(&self, d: &RootDatum, g: &WeylGroup, mu: &[i64], w: usize) -> Result<AffineRoot> {
        let r = g.act_root(d, w, self.root);
        let shift = d.pair_int(&d.roots[r].x, mu)?;
        Ok(AffineRoot {
            root: r,
            level: self.level + shift,
        })
    }

    /// `s_{α+kδ} = t_{kα^∨} s_α` as a pair `(μ, w)`.
    pub fn reflection(&self, d: &RootDatum, g: &WeylGroup) -> (Vec<i64>, usize) {
        let mu = d.roots[self.root]
            .coroot
            .iter()
            .map(|c| c * self.level)
            .collect();
        (mu, g.reflection(d, self.root))
    }
}

/// Product in the extended affine Weyl group: `(μ, w)(ν, u) = (μ + wν, wu)`.
pub fn ext_affine_mul(g: &WeylGroup, a: (&[i64], usize), b: (&[i64], usize)) -> (Vec<i64>, usize) {
    let wn = g.get(a.1).act_y(b.0);
    (
        a.0.iter().zip(&wn).map(|(x, y)| x + y).collect(),
        g.mul(a.1, b.1),
    )
}
