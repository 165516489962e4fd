use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::rootdata::{RootDatum, SkewForm, WeylGroup};
use crate::scalars::{ratio, Poly, Rational, Scalar};

/// A quantum torus: a lattice `Z^k` with a skew form, optionally split as `X ⊕ Y`.
#[derive(Clone, Debug)]
pub struct QuantumTorus {
    pub form: SkewForm,
    /// `dim X` when the lattice is `X ⊕ Y`.
    pub split: Option<usize>,
}

impl QuantumTorus {
    pub fn from_datum(d: &RootDatum) -> Self {
        QuantumTorus {
            form: SkewForm::from_datum(d),
            split: Some(d.dim),
        }
    }

    pub fn from_form(form: SkewForm) -> Self {
        QuantumTorus { form, split: None }
    }

    pub fn dim(&self) -> usize {
        self.form.dim()
    }

    /// Structure constant `c(a,b)` with `e^a e^b = c(a,b) e^{a+b}`.
    pub fn cocycle(&self, a: &[i64], b: &[i64]) -> Result<Scalar> {
        let e = -self.form.eval(a, b) * ratio(1, 2);
        Ok(Scalar::from_poly(Poly::q_pow(&e)?))
    }

    pub fn key(&self, x: &[i64], y: &[i64]) -> Vec<i64> {
        x.iter().chain(y).copied().collect()
    }
}

/// Element of the quantum torus: lattice vector to coefficient.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct HElement {
    pub terms: BTreeMap<Vec<i64>, Scalar>,
}

impl HElement {
    pub fn zero() -> Self {
        HElement {
            terms: BTreeMap::new(),
        }
    }

    pub fn monomial(v: Vec<i64>, c: Scalar) -> Self {
        let mut h = Self::zero();
        h.add_term(v, c);
        h
    }

    pub fn one(dim: usize) -> Self {
        Self::monomial(vec![0; dim], Scalar::one())
    }

    pub fn add_term(&mut self, v: Vec<i64>, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&v) {
            Some(old) => {
                let s = old.add(&c);
                if !s.is_zero() {
                    self.terms.insert(v, s);
                }
            }
            None => {
                self.terms.insert(v, c);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, o: &HElement) -> HElement {
        let mut out = self.clone();
        for (v, c) in &o.terms {
            out.add_term(v.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, o: &HElement) -> HElement {
        self.add(&o.scale(&Scalar::int(-1)))
    }

    pub fn scale(&self, c: &Scalar) -> HElement {
        let mut out = HElement::zero();
        for (v, a) in &self.terms {
            out.add_term(v.clone(), a.mul(c));
        }
        out
    }

    pub fn mul(&self, t: &QuantumTorus, o: &HElement) -> Result<HElement> {
        let mut out = HElement::zero();
        for (a, ca) in &self.terms {
            for (b, cb) in &o.terms {
                let v: Vec<i64> = a.iter().zip(b).map(|(p, q)| p + q).collect();
                out.add_term(v, ca.mul(cb).mul(&t.cocycle(a, b)?));
            }
        }
        Ok(out)
    }

    /// `^w h`: the diagonal action `e^{(x,y)} ↦ e^{(wx, wy)}`.
    pub fn weyl_act(&self, t: &QuantumTorus, g: &WeylGroup, w: usize) -> Result<HElement> {
        let n = t
            .split
            .ok_or_else(|| Error::Dimension("W acts only on X ⊕ Y tori".into()))?;
        let e = g.get(w);
        let mut out = HElement::zero();
        for (v, c) in &self.terms {
            let x = e.act_x(&v[..n]);
            let y = e.act_y(&v[n..]);
            out.add_term(t.key(&x, &y), c.clone());
        }
        Ok(out)
    }

    /// `(1/|W|) Σ_w ^w h`.
    pub fn project_invariants(&self, t: &QuantumTorus, g: &WeylGroup) -> Result<HElement> {
        let mut out = HElement::zero();
        for w in 0..g.len() {
            out = out.add(&self.weyl_act(t, g, w)?);
        }
        Ok(out.scale(&Scalar::rational(Rational::new(
            1.into(),
            (g.len() as i64).into(),
        ))))
    }

    /// Invariance under the simple reflections, hence under W.
    pub fn is_invariant(&self, t: &QuantumTorus, g: &WeylGroup, rank: usize) -> Result<bool> {
        for i in 0..rank {
            if self.weyl_act(t, g, g.simple(i))? != *self {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Element of `H[W]`: Weyl element index to torus coefficient.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct HWElement {
    pub terms: BTreeMap<usize, HElement>,
}

impl HWElement {
    pub fn from_h(h: HElement) -> Self {
        let mut out = HWElement::default();
        if !h.is_zero() {
            out.terms.insert(0, h);
        }
        out
    }

    pub fn from_weyl(t: &QuantumTorus, w: usize) -> Self {
        let mut out = HWElement::default();
        out.terms.insert(w, HElement::one(t.dim()));
        out
    }

    pub fn add(&self, o: &HWElement) -> HWElement {
        let mut out = self.clone();
        for (w, h) in &o.terms {
            let s = out.terms.get(w).map_or_else(|| h.clone(), |a| a.add(h));
            if s.is_zero() {
                out.terms.remove(w);
            } else {
                out.terms.insert(*w, s);
            }
        }
        out
    }

    /// `(f⊗w)(g⊗u) = (f · ^w g) ⊗ wu`.
    pub fn mul(&self, t: &QuantumTorus, g: &WeylGroup, o: &HWElement) -> Result<HWElement> {
        let mut out = HWElement::default();
        for (w, f) in &self.terms {
            for (u, h) in &o.terms {
                let prod = f.mul(t, &h.weyl_act(t, g, *w)?)?;
                let mut single = HWElement::default();
                if !prod.is_zero() {
                    single.terms.insert(g.mul(*w, *u), prod);
                }
                out = out.add(&single);
            }
        }
        Ok(out)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.values().all(HElement::is_zero)
    }
}

impl HElement {
    /// Coefficient of `e^v`, zero if absent.
    pub fn coeff(&self, v: &[i64]) -> Scalar {
        self.terms.get(v).cloned().unwrap_or_else(Scalar::zero)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootdata::LatticeChoice;
    use crate::scalars::rat;

    fn a1() -> (RootDatum, QuantumTorus, WeylGroup) {
        let d = RootDatum::builtin("A1", LatticeChoice::Weight).unwrap();
        let t = QuantumTorus::from_datum(&d);
        let g = WeylGroup::new(&d).unwrap();
        (d, t, g)
    }

    fn mono(v: &[i64]) -> HElement {
        HElement::monomial(v.to_vec(), Scalar::one())
    }

    #[test]
    fn relation_y_then_x() {
        let (_, t, _) = a1();
        // <x, y> = 1 for x = ω, y = α^∨.
        let ex = mono(&[1, 0]);
        let ey = mono(&[0, 1]);
        let yx = ey.mul(&t, &ex).unwrap();
        let xy = ex.mul(&t, &ey).unwrap();
        let q = Scalar::from_poly(Poly::q_pow(&rat(1)).unwrap());
        assert_eq!(yx, xy.scale(&q));
    }

    #[test]
    fn twisted_product_rule() {
        let (d, t, g) = a1();
        let s = g.simple(0);
        let lhs = HWElement::from_weyl(&t, s)
            .mul(&t, &g, &HWElement::from_h(mono(&[1, 0])))
            .unwrap();
        let sx = g.get(s).act_x(&[1]);
        let mut rhs = HWElement::default();
        rhs.terms.insert(s, mono(&t.key(&sx, &[0])));
        assert_eq!(lhs, rhs);
        assert_eq!(d.rank, 1);
        let back = HWElement::from_weyl(&t, s)
            .mul(&t, &g, &HWElement::from_weyl(&t, g.inv(s)))
            .unwrap();
        assert_eq!(back, HWElement::from_weyl(&t, 0));
    }

    #[test]
    fn invariants_of_orbit_sums() {
        let (d, t, g) = a1();
        let h = mono(&[1, 0]).add(&mono(&[-1, 0]));
        assert!(h.is_invariant(&t, &g, d.rank).unwrap());
        assert!(!mono(&[1, 0]).is_invariant(&t, &g, d.rank).unwrap());
        let p = mono(&[1, 1]).project_invariants(&t, &g).unwrap();
        assert!(p.is_invariant(&t, &g, d.rank).unwrap());
        assert_eq!(p.project_invariants(&t, &g).unwrap(), p);
    }
}
