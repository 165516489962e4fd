//! The weight module `M_λ` on a finite window of shifts, tensored with a
//! multiplicity space carrying a representation of `W^λ`.
//!
//! The action is `e^y v_μ = v_{μ q^y}` and `e^x v_μ = x(μ) v_μ`. On `M_λ`
//! these satisfy `e^x e^y = q^{<x,y>} e^y e^x`, the relation of the opposite
//! torus; a monomial `e^{(x,y)}` acts by `q^{<x,y>/2} e^y e^x`.

use std::collections::{BTreeMap, BTreeSet};

use super::isotropy::IsotropyGroup;
use super::rep::IsoRep;
use super::torus_point::TorusPoint;
use crate::error::{Error, Result};
use crate::linalg::Field;
use crate::qtorus::HElement;
use crate::rootdata::{RootDatum, WeylGroup};
use crate::scalars::{ratio, Poly, QPower, Scalar};

pub type Window = BTreeSet<Vec<i64>>;

/// Vector in a windowed module: `(shift y, component) ↦ coefficient`.
pub type ModVec = BTreeMap<(Vec<i64>, usize), Scalar>;

pub fn box_window(dim: usize, radius: i64) -> Window {
    let side = 2 * radius + 1;
    let total = (side as u64).pow(dim as u32);
    (0..total)
        .map(|mut k| {
            (0..dim)
                .map(|_| {
                    let c = (k % side as u64) as i64 - radius;
                    k /= side as u64;
                    c
                })
                .collect()
        })
        .collect()
}

pub fn add_to(v: &mut ModVec, key: (Vec<i64>, usize), c: Scalar) {
    if c.is_zero() {
        return;
    }
    match v.remove(&key) {
        Some(old) => {
            let s = Field::add(&old, &c);
            if !s.is_zero() {
                v.insert(key, s);
            }
        }
        None => {
            v.insert(key, c);
        }
    }
}

pub fn basis_vec(y: Vec<i64>, comp: usize) -> ModVec {
    let mut v = ModVec::new();
    v.insert((y, comp), Scalar::one());
    v
}

/// `x(μ)` lifted into the scalar field.
pub fn weight_scalar(p: &QPower) -> Result<Scalar> {
    p.to_scalar()
}

#[derive(Clone, Debug)]
pub struct MLambda {
    pub lambda: TorusPoint,
    pub window: Window,
    pub mult: usize,
}

impl MLambda {
    pub fn new(lambda: TorusPoint, window: Window, mult: usize) -> Self {
        MLambda {
            lambda,
            window,
            mult,
        }
    }

    pub fn dim(&self) -> usize {
        self.window.len() * self.mult
    }

    pub fn weight(&self, d: &RootDatum, y: &[i64]) -> TorusPoint {
        self.lambda.shift(d, y)
    }

    fn check(&self, y: &[i64]) -> Result<()> {
        if self.window.contains(y) {
            Ok(())
        } else {
            Err(Error::WindowOverflow(y.to_vec()))
        }
    }

    /// `e^x`: diagonal by `x(λ q^y)`.
    pub fn act_x(&self, d: &RootDatum, x: &[i64], v: &ModVec) -> Result<ModVec> {
        let mut out = ModVec::new();
        for ((y, c), a) in v {
            let s = weight_scalar(&self.weight(d, y).eval(x))?;
            add_to(&mut out, (y.clone(), *c), a.mul(&s));
        }
        Ok(out)
    }

    /// `e^{y'}`: shift, failing if the result leaves the window.
    pub fn act_y(&self, shift: &[i64], v: &ModVec) -> Result<ModVec> {
        let mut out = ModVec::new();
        for ((y, c), a) in v {
            let ny: Vec<i64> = y.iter().zip(shift).map(|(p, q)| p + q).collect();
            self.check(&ny)?;
            add_to(&mut out, (ny, *c), a.clone());
        }
        Ok(out)
    }

    /// A torus element; `e^{(x,y)}` acts by `q^{<x,y>/2} e^y e^x`.
    pub fn act_h(&self, d: &RootDatum, h: &HElement, v: &ModVec) -> Result<ModVec> {
        let n = d.dim;
        let mut out = ModVec::new();
        for (key, c) in &h.terms {
            let (x, y) = key.split_at(n);
            let half = Scalar::from_poly(Poly::q_pow(&(d.pair(x, y) * ratio(1, 2)))?);
            let w = self.act_y(y, &self.act_x(d, x, v)?)?;
            for (k, a) in w {
                add_to(&mut out, k, a.mul(c).mul(&half));
            }
        }
        Ok(out)
    }

    /// `W^λ` action `v_μ ⊗ n ↦ v_{wμ} ⊗ ρ(w) n` with `w(λ q^y) = λ q^{y_w + w y}`.
    pub fn act_iso(
        &self,
        g: &WeylGroup,
        iso: &IsotropyGroup,
        rep: &IsoRep,
        w: usize,
        v: &ModVec,
    ) -> Result<ModVec> {
        let pos = iso
            .position(w)
            .ok_or_else(|| Error::NotFound(format!("{w} not in W^λ")))?;
        let m = &rep.mats[pos];
        let mut out = ModVec::new();
        for ((y, c), a) in v {
            let ny = iso.act_shift(g, w, y)?;
            self.check(&ny)?;
            for (r, row) in m.iter().enumerate() {
                add_to(&mut out, (ny.clone(), r), a.mul(&row[*c]));
            }
        }
        Ok(out)
    }

    /// Corrected dot-action `w·m = e^{-y_w} w(m)` on the λ-weight space.
    pub fn dot_action(
        &self,
        g: &WeylGroup,
        iso: &IsotropyGroup,
        rep: &IsoRep,
        w: usize,
        v: &ModVec,
    ) -> Result<ModVec> {
        if v.keys().any(|(y, _)| y.iter().any(|c| *c != 0)) {
            return Err(Error::NotInClass(
                "dot-action is defined on the λ-weight space".into(),
            ));
        }
        let yw: Vec<i64> = iso.shift(w)?.iter().map(|c| -c).collect();
        let moved = self.act_iso(g, iso, rep, w, v)?;
        self.act_y(&yw, &moved)
    }

    /// Closure of the window under the affine `W^λ` action on shifts.
    pub fn saturate(&self, g: &WeylGroup, iso: &IsotropyGroup) -> Result<Window> {
        saturate_under(&self.window, |y| {
            iso.elements
                .iter()
                .map(|(w, _)| iso.act_shift(g, *w, y))
                .collect()
        })
    }

    /// `L = (M_λ ⊗ ρ)^{W^λ}` on the window, as a basis of fixed vectors.
    pub fn fixed_space(
        &self,
        g: &WeylGroup,
        iso: &IsotropyGroup,
        rep: &IsoRep,
    ) -> Result<Vec<ModVec>> {
        let basis: Vec<(Vec<i64>, usize)> = self
            .window
            .iter()
            .flat_map(|y| (0..self.mult).map(move |c| (y.clone(), c)))
            .collect();
        fixed_vectors(&basis, |b| {
            iso.elements
                .iter()
                .map(|(w, _)| self.act_iso(g, iso, rep, *w, &basis_vec(b.0.clone(), b.1)))
                .collect()
        })
    }
}

pub(crate) fn saturate_under<F>(start: &Window, images: F) -> Result<Window>
where
    F: Fn(&[i64]) -> Result<Vec<Vec<i64>>>,
{
    let mut out = start.clone();
    let mut frontier: Vec<Vec<i64>> = start.iter().cloned().collect();
    while let Some(y) = frontier.pop() {
        for ny in images(&y)? {
            if out.insert(ny.clone()) {
                frontier.push(ny);
            }
        }
    }
    Ok(out)
}

/// Common fixed vectors of a family of linear maps given on a finite basis.
pub(crate) fn fixed_vectors<K, F>(basis: &[K], images: F) -> Result<Vec<BTreeMap<K, Scalar>>>
where
    K: Ord + Clone,
    F: Fn(&K) -> Result<Vec<BTreeMap<K, Scalar>>>,
{
    let index: BTreeMap<&K, usize> = basis.iter().enumerate().map(|(i, k)| (k, i)).collect();
    let n = basis.len();
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    let mut cols: Vec<Vec<BTreeMap<K, Scalar>>> = Vec::with_capacity(n);
    for b in basis {
        cols.push(images(b)?);
    }
    let ngen = cols.first().map_or(0, |c| c.len());
    for gi in 0..ngen {
        let mut m = vec![vec![Scalar::zero(); n]; n];
        for (j, c) in cols.iter().enumerate() {
            for (k, a) in &c[gi] {
                let i = *index
                    .get(k)
                    .ok_or_else(|| Error::NotInClass("window is not saturated".into()))?;
                m[i][j] = a.clone();
            }
            m[j][j] = Field::sub(&m[j][j], &Scalar::one());
        }
        rows.extend(m);
    }
    let null = crate::linalg::nullspace(&rows, n);
    Ok(null
        .into_iter()
        .map(|x| {
            basis
                .iter()
                .cloned()
                .zip(x)
                .filter(|(_, c)| !c.is_zero())
                .collect()
        })
        .collect())
}
