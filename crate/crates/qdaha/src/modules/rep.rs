use super::isotropy::IsotropyGroup;
use crate::error::{Error, Result};
use crate::linalg::Field;
use crate::rootdata::WeylGroup;
use crate::scalars::{Rational, Scalar};

pub type Matrix = Vec<Vec<Scalar>>;

pub fn mat_mul(a: &Matrix, b: &Matrix) -> Matrix {
    let n = a.len();
    let m = b.first().map_or(0, |r| r.len());
    let mut out = vec![vec![Scalar::zero(); m]; n];
    for i in 0..n {
        for (k, bk) in b.iter().enumerate() {
            if a[i][k].is_zero() {
                continue;
            }
            for j in 0..m {
                out[i][j] = Field::add(&out[i][j], &a[i][k].mul(&bk[j]));
            }
        }
    }
    out
}

pub fn mat_identity(n: usize) -> Matrix {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        Scalar::one()
                    } else {
                        Scalar::zero()
                    }
                })
                .collect()
        })
        .collect()
}

/// A matrix representation of an isotropy group, indexed like its elements.
#[derive(Clone, Debug)]
pub struct IsoRep {
    pub label: String,
    pub dim: usize,
    pub mats: Vec<Matrix>,
}

impl IsoRep {
    pub fn trivial(iso: &IsotropyGroup) -> Self {
        IsoRep {
            label: "trivial".into(),
            dim: 1,
            mats: vec![mat_identity(1); iso.len()],
        }
    }

    /// Restriction of the sign character `(-1)^{l(w)}` of W.
    pub fn sign(iso: &IsotropyGroup, g: &WeylGroup) -> Self {
        let mats = iso
            .elements
            .iter()
            .map(|(w, _)| {
                vec![vec![Scalar::int(if g.length(*w).is_multiple_of(2) {
                    1
                } else {
                    -1
                })]]
            })
            .collect();
        IsoRep {
            label: "sign".into(),
            dim: 1,
            mats,
        }
    }

    /// A linear character with rational values listed in element order.
    pub fn linear(label: &str, values: &[Rational]) -> Self {
        IsoRep {
            label: label.into(),
            dim: 1,
            mats: values
                .iter()
                .map(|v| vec![vec![Scalar::rational(v.clone())]])
                .collect(),
        }
    }

    pub fn by_label(label: &str, iso: &IsotropyGroup, g: &WeylGroup) -> Result<Self> {
        match label {
            "trivial" | "triv" => Ok(Self::trivial(iso)),
            "sign" => Ok(Self::sign(iso, g)),
            _ => Err(Error::Parse(format!(
                "unknown character '{label}' (use trivial or sign)"
            ))),
        }
    }

    /// Checks `ρ(w1 w2) = ρ(w1) ρ(w2)` on all pairs.
    pub fn is_homomorphism(&self, iso: &IsotropyGroup, g: &WeylGroup) -> bool {
        iso.elements.iter().enumerate().all(|(a, (w1, _))| {
            iso.elements.iter().enumerate().all(|(b, (w2, _))| {
                let Some(c) = iso.position(g.mul(*w1, *w2)) else {
                    return false;
                };
                mat_mul(&self.mats[a], &self.mats[b]) == self.mats[c]
            })
        })
    }

    pub fn character(&self) -> Vec<Scalar> {
        self.mats
            .iter()
            .map(|m| (0..self.dim).fold(Scalar::zero(), |acc, i| Field::add(&acc, &m[i][i])))
            .collect()
    }
}
