//! Square matrices of z-Laurent polynomials (polynomial loops in `GL_n`) and
//! q-conjugation `h ↦ g(qz) h(z) g(z)^{-1}`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::zpoly::ZPoly;
use crate::error::{Error, Result};
use crate::scalars::json::{frac_from_json, frac_to_json, FracJson};
use crate::scalars::Frac;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixLoop {
    pub n: usize,
    entries: Vec<ZPoly>,
}

impl MatrixLoop {
    pub fn zero(n: usize) -> Self {
        MatrixLoop {
            n,
            entries: vec![ZPoly::zero(); n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n);
        for i in 0..n {
            m.set(i, i, ZPoly::one());
        }
        m
    }

    pub fn diag(d: &[ZPoly]) -> Self {
        let mut m = Self::zero(d.len());
        for (i, x) in d.iter().enumerate() {
            m.set(i, i, x.clone());
        }
        m
    }

    pub fn constant_diag(d: &[Frac]) -> Self {
        Self::diag(
            &d.iter()
                .map(|c| ZPoly::constant(c.clone()))
                .collect::<Vec<_>>(),
        )
    }

    pub fn from_rows(rows: Vec<Vec<ZPoly>>) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::Dimension("matrix loop must be square".into()));
        }
        Ok(MatrixLoop {
            n,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    /// A constant permutation matrix sending `e_j` to `e_{p[j]}`.
    pub fn permutation(p: &[usize]) -> Self {
        let mut m = Self::zero(p.len());
        for (j, &i) in p.iter().enumerate() {
            m.set(i, j, ZPoly::one());
        }
        m
    }

    pub fn get(&self, i: usize, j: usize) -> &ZPoly {
        &self.entries[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: ZPoly) {
        self.entries[i * self.n + j] = v;
    }

    pub fn map(&self, f: impl Fn(&ZPoly) -> ZPoly) -> Self {
        MatrixLoop {
            n: self.n,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    pub fn mul(&self, o: &MatrixLoop) -> MatrixLoop {
        let n = self.n;
        let mut out = Self::zero(n);
        for i in 0..n {
            for j in 0..n {
                let mut acc = ZPoly::zero();
                for k in 0..n {
                    let a = self.get(i, k);
                    let b = o.get(k, j);
                    if !a.is_zero() && !b.is_zero() {
                        acc = acc.add(&a.mul(b));
                    }
                }
                out.set(i, j, acc);
            }
        }
        out
    }

    pub fn sub(&self, o: &MatrixLoop) -> MatrixLoop {
        MatrixLoop {
            n: self.n,
            entries: self
                .entries
                .iter()
                .zip(&o.entries)
                .map(|(a, b)| a.sub(b))
                .collect(),
        }
    }

    /// `g(qz)`.
    pub fn q_shift(&self) -> MatrixLoop {
        self.map(ZPoly::q_shift)
    }

    pub fn eval_one(&self) -> Vec<Vec<Frac>> {
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self.get(i, j).eval_one()).collect())
            .collect()
    }

    pub fn is_upper_triangular(&self) -> bool {
        (0..self.n).all(|i| (0..i).all(|j| self.get(i, j).is_zero()))
    }

    pub fn is_unitriangular(&self) -> bool {
        self.is_upper_triangular() && (0..self.n).all(|i| self.get(i, i).is_one())
    }

    pub fn det(&self) -> ZPoly {
        let idx: Vec<usize> = (0..self.n).collect();
        self.minor_det(&idx, &idx)
    }

    fn minor_det(&self, rows: &[usize], cols: &[usize]) -> ZPoly {
        match rows.len() {
            0 => ZPoly::one(),
            1 => self.get(rows[0], cols[0]).clone(),
            _ => {
                let mut acc = ZPoly::zero();
                let r0 = rows[0];
                for (k, &c) in cols.iter().enumerate() {
                    let e = self.get(r0, c);
                    if e.is_zero() {
                        continue;
                    }
                    let sub_cols: Vec<usize> = cols.iter().copied().filter(|x| *x != c).collect();
                    let m = e.mul(&self.minor_det(&rows[1..], &sub_cols));
                    acc = if k % 2 == 0 { acc.add(&m) } else { acc.sub(&m) };
                }
                acc
            }
        }
    }

    /// Inverse as a loop; requires the determinant to be a unit `c z^m`.
    pub fn inverse(&self) -> Result<MatrixLoop> {
        let det = self.det();
        let (m, c) = det
            .as_monomial()
            .ok_or_else(|| Error::Singular(format!("determinant {det} is not a unit")))?;
        let dinv = ZPoly::monomial(c.inv()?, -m);
        let n = self.n;
        let mut out = Self::zero(n);
        for i in 0..n {
            for j in 0..n {
                let rows: Vec<usize> = (0..n).filter(|r| *r != j).collect();
                let cols: Vec<usize> = (0..n).filter(|c| *c != i).collect();
                let cof = self.minor_det(&rows, &cols);
                let cof = if (i + j) % 2 == 0 { cof } else { cof.neg() };
                out.set(i, j, cof.mul(&dinv));
            }
        }
        Ok(out)
    }
}

/// `g(qz) h(z) g(z)^{-1}`.
pub fn q_conjugate(g: &MatrixLoop, h: &MatrixLoop) -> Result<MatrixLoop> {
    Ok(g.q_shift().mul(h).mul(&g.inverse()?))
}

/// Entry encoding: z exponent (as a string key) to scalar.
pub type EntryJson = BTreeMap<String, FracJson>;

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct MatrixJson {
    pub n: usize,
    pub entries: Vec<Vec<EntryJson>>,
}

pub fn matrix_to_json(m: &MatrixLoop) -> MatrixJson {
    let entries = (0..m.n)
        .map(|i| {
            (0..m.n)
                .map(|j| {
                    m.get(i, j)
                        .coeffs
                        .iter()
                        .map(|(k, c)| (k.to_string(), frac_to_json(c)))
                        .collect()
                })
                .collect()
        })
        .collect();
    MatrixJson { n: m.n, entries }
}

pub fn matrix_from_json(j: &MatrixJson) -> Result<MatrixLoop> {
    if j.entries.len() != j.n {
        return Err(Error::Schema(format!("expected {} rows", j.n)));
    }
    let mut rows = Vec::with_capacity(j.n);
    for r in &j.entries {
        let mut row = Vec::with_capacity(j.n);
        for e in r {
            let mut p = ZPoly::zero();
            for (k, c) in e {
                let m: i64 = k
                    .parse()
                    .map_err(|_| Error::Schema(format!("z exponent {k:?}")))?;
                p.add_term(m, frac_from_json(c)?);
            }
            row.push(p);
        }
        rows.push(row);
    }
    MatrixLoop::from_rows(rows)
}

#[cfg(test)]
mod tests {
    use super::super::zpoly::q_int;
    use super::*;

    #[test]
    fn diag_conjugation() {
        let g = MatrixLoop::diag(&[ZPoly::monomial(Frac::one(), 1), ZPoly::one()]);
        let h = MatrixLoop::constant_diag(&[Frac::int(2), Frac::int(3)]);
        let c = q_conjugate(&g, &h).unwrap();
        assert_eq!(
            c,
            MatrixLoop::constant_diag(&[q_int(1).mul(&Frac::int(2)), Frac::int(3)])
        );
        assert_eq!(q_conjugate(&MatrixLoop::identity(2), &h).unwrap(), h);
    }

    #[test]
    fn inverse_and_json() {
        let mut g = MatrixLoop::identity(3);
        g.set(0, 2, ZPoly::monomial(Frac::int(5), 2).add(&ZPoly::one()));
        g.set(1, 2, ZPoly::monomial(q_int(1), 1));
        g.set(0, 0, ZPoly::monomial(Frac::int(2), -1));
        let inv = g.inverse().unwrap();
        assert_eq!(g.mul(&inv), MatrixLoop::identity(3));
        let back = matrix_from_json(&matrix_to_json(&g)).unwrap();
        assert_eq!(back, g);
        let mut sing = MatrixLoop::identity(2);
        sing.set(1, 1, ZPoly::one().add(&ZPoly::monomial(Frac::one(), 1)));
        assert!(sing.inverse().is_err());
    }
}
