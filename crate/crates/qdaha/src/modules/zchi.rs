//! Induced modules `Z_χ = H[W] ⊗_{H[W^λ]} (M_λ ⊗ χ)` on a window.
//!
//! The basis is `g_j ⊗ v_{λ q^y} ⊗ n_k` for coset representatives `g_j` of
//! `W/W^λ`. A torus element `h` acts on the `j`-th summand through
//! `^{g_j^{-1}} h`, and `w g_j = g_{j'} u` with `u ∈ W^λ` moves the summand.

use std::collections::BTreeMap;

use super::isotropy::IsotropyGroup;
use super::mlambda::{fixed_vectors, saturate_under, weight_scalar, Window};
use super::rep::IsoRep;
use super::torus_point::TorusPoint;
use crate::error::{Error, Result};
use crate::linalg::Field;
use crate::qtorus::HElement;
use crate::rootdata::{RootDatum, WeylGroup};
use crate::scalars::{ratio, Poly, Scalar};

/// Basis key `(coset j, shift y, component k)`.
pub type ZKey = (usize, Vec<i64>, usize);
pub type ZVec = BTreeMap<ZKey, Scalar>;

pub fn add_z(v: &mut ZVec, key: ZKey, c: Scalar) {
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

#[derive(Clone, Debug)]
pub struct InducedModule {
    pub iso: IsotropyGroup,
    pub rep: IsoRep,
    pub reps: Vec<usize>,
    pub window: Window,
    /// `table[w][j] = (j', position of u in W^λ)` with `w g_j = g_{j'} u`.
    table: Vec<Vec<(usize, usize)>>,
}

impl InducedModule {
    pub fn new(g: &WeylGroup, iso: IsotropyGroup, rep: IsoRep, window: Window) -> Result<Self> {
        if rep.mats.len() != iso.len() {
            return Err(Error::Dimension(
                "representation does not match the isotropy group".into(),
            ));
        }
        let reps = iso.coset_reps(g);
        let mut table = vec![Vec::with_capacity(reps.len()); g.len()];
        for (w, row) in table.iter_mut().enumerate() {
            for &gj in &reps {
                let wg = g.mul(w, gj);
                let hit = reps
                    .iter()
                    .enumerate()
                    .find_map(|(jp, &gp)| iso.position(g.mul(g.inv(gp), wg)).map(|u| (jp, u)));
                row.push(hit.expect("cosets cover W"));
            }
        }
        Ok(InducedModule {
            iso,
            rep,
            reps,
            window,
            table,
        })
    }

    pub fn lambda(&self) -> &TorusPoint {
        &self.iso.lambda
    }

    pub fn basis(&self) -> Vec<ZKey> {
        let mut out = Vec::new();
        for j in 0..self.reps.len() {
            for y in &self.window {
                for k in 0..self.rep.dim {
                    out.push((j, y.clone(), k));
                }
            }
        }
        out
    }

    pub fn dim(&self) -> usize {
        self.reps.len() * self.window.len() * self.rep.dim
    }

    /// Weight `g_j(λ q^y)` of a basis vector.
    pub fn weight(&self, d: &RootDatum, g: &WeylGroup, j: usize, y: &[i64]) -> TorusPoint {
        self.lambda().shift(d, y).weyl_act(g, self.reps[j])
    }

    fn check(&self, y: &[i64]) -> Result<()> {
        if self.window.contains(y) {
            Ok(())
        } else {
            Err(Error::WindowOverflow(y.to_vec()))
        }
    }

    pub fn act_x(&self, d: &RootDatum, g: &WeylGroup, x: &[i64], v: &ZVec) -> Result<ZVec> {
        let mut out = ZVec::new();
        for ((j, y, k), a) in v {
            let xj = g.get(g.inv(self.reps[*j])).act_x(x);
            let s = weight_scalar(&self.lambda().shift(d, y).eval(&xj))?;
            add_z(&mut out, (*j, y.clone(), *k), a.mul(&s));
        }
        Ok(out)
    }

    pub fn act_y(&self, g: &WeylGroup, shift: &[i64], v: &ZVec) -> Result<ZVec> {
        let mut out = ZVec::new();
        for ((j, y, k), a) in v {
            let sj = g.get(g.inv(self.reps[*j])).act_y(shift);
            let ny: Vec<i64> = y.iter().zip(&sj).map(|(p, q)| p + q).collect();
            self.check(&ny)?;
            add_z(&mut out, (*j, ny, *k), a.clone());
        }
        Ok(out)
    }

    /// A torus element, with `e^{(x,y)}` acting as `q^{<x,y>/2} e^y e^x`.
    pub fn act_h(&self, d: &RootDatum, g: &WeylGroup, h: &HElement, v: &ZVec) -> Result<ZVec> {
        let mut out = ZVec::new();
        for (key, c) in &h.terms {
            let (x, y) = key.split_at(d.dim);
            let half = Scalar::from_poly(Poly::q_pow(&(d.pair(x, y) * ratio(1, 2)))?);
            for (k, a) in self.act_y(g, y, &self.act_x(d, g, x, v)?)? {
                add_z(&mut out, k, a.mul(c).mul(&half));
            }
        }
        Ok(out)
    }

    pub fn act_weyl(&self, g: &WeylGroup, w: usize, v: &ZVec) -> Result<ZVec> {
        let mut out = ZVec::new();
        for ((j, y, k), a) in v {
            let (jp, upos) = self.table[w][*j];
            let u = self.iso.elements[upos].0;
            let ny = self.iso.act_shift(g, u, y)?;
            self.check(&ny)?;
            for (r, row) in self.rep.mats[upos].iter().enumerate() {
                add_z(&mut out, (jp, ny.clone(), r), a.mul(&row[*k]));
            }
        }
        Ok(out)
    }

    /// `w·m = e^{-y_w} w(m)` for `w ∈ W^λ`.
    pub fn dot_action(&self, g: &WeylGroup, w: usize, v: &ZVec) -> Result<ZVec> {
        let yw: Vec<i64> = self.iso.shift(w)?.iter().map(|c| -c).collect();
        self.act_y(g, &yw, &self.act_weyl(g, w, v)?)
    }

    /// Basis of the λ-weight space: identity coset, zero shift.
    pub fn lambda_weight_space(&self) -> Vec<ZKey> {
        (0..self.rep.dim)
            .map(|k| (0, vec![0; self.window.first().map_or(0, |y| y.len())], k))
            .collect()
    }

    /// Closure of the window under the shift action of every `w g_j = g_{j'} u`.
    pub fn saturate(&self, g: &WeylGroup) -> Result<Window> {
        let us: Vec<usize> = self.iso.elements.iter().map(|(u, _)| *u).collect();
        saturate_under(&self.window, |y| {
            us.iter().map(|&u| self.iso.act_shift(g, u, y)).collect()
        })
    }

    pub fn is_saturated(&self, g: &WeylGroup) -> Result<bool> {
        Ok(self.saturate(g)?.len() == self.window.len())
    }

    /// The W-invariants `M^W`, computed on a saturated window.
    pub fn invariants(&self, g: &WeylGroup, rank: usize) -> Result<Vec<ZVec>> {
        if !self.is_saturated(g)? {
            return Err(Error::NotInClass("window is not W^λ-saturated".into()));
        }
        let basis = self.basis();
        fixed_vectors(&basis, |b| {
            let mut e = ZVec::new();
            e.insert(b.clone(), Scalar::one());
            (0..rank)
                .map(|i| self.act_weyl(g, g.simple(i), &e))
                .collect()
        })
    }
}

/// `dim M = Σ_χ d_χ dim (M ⊗ χ)^{W^λ}` on a saturated window: returns both sides.
pub fn dimension_bookkeeping(
    m: &super::mlambda::MLambda,
    g: &WeylGroup,
    iso: &IsotropyGroup,
    irreps: &[IsoRep],
) -> Result<(usize, usize)> {
    let lhs = m.window.len();
    let mut rhs = 0;
    for rep in irreps {
        let mm = super::mlambda::MLambda::new(m.lambda.clone(), m.window.clone(), rep.dim);
        rhs += rep.dim * mm.fixed_space(g, iso, rep)?.len();
    }
    Ok((lhs, rhs))
}
