//! Jordan q-normal form `h ~ s·b(z)` for upper-triangular polynomial loops in
//! `GL_n` with constant diagonal.
//!
//! The conjugator is built in three steps: a constant permutation making `h`
//! upper triangular, a diagonal `diag(z^{k_i})` ordering q-exponents within
//! each q-class (condition (J2)), and a unitriangular `F` found superdiagonal
//! by superdiagonal from `F(qz)·h = s·b·F(z)`. On the entry `(i, j)` this is
//! the shift equation `F(qz) - r F(z) = r b + K` with `r = s_i/s_j`: a
//! resonant coefficient goes into `b`, every other one into `F`.

use std::collections::BTreeMap;

use super::matrix::{q_conjugate, MatrixLoop};
use super::zpoly::{q_int, ZPoly};
use crate::error::{Error, Result};
use crate::linalg::inverse;
use crate::scalars::{Frac, QPower};

/// Largest size for which a permutation to triangular form is searched.
pub const MAX_PERMUTATION_SEARCH: usize = 4;

#[derive(Clone, Debug)]
pub struct QNormalForm {
    pub s: Vec<QPower>,
    pub b: MatrixLoop,
    /// `q_conjugate(f, h) = s·b`.
    pub f: MatrixLoop,
}

impl QNormalForm {
    pub fn s_matrix(&self) -> Result<MatrixLoop> {
        Ok(MatrixLoop::constant_diag(&scalars(&self.s)?))
    }

    pub fn product(&self) -> Result<MatrixLoop> {
        Ok(self.s_matrix()?.mul(&self.b))
    }
}

fn scalars(s: &[QPower]) -> Result<Vec<Frac>> {
    s.iter().map(QPower::to_scalar).collect()
}

/// (J1): `b(qz)·s = s·b(z)`.
pub fn check_j1(s: &[QPower], b: &MatrixLoop) -> Result<bool> {
    let sm = MatrixLoop::constant_diag(&scalars(s)?);
    Ok(b.is_unitriangular() && b.q_shift().mul(&sm) == sm.mul(b))
}

/// (J2): no `Ad s`-eigenvalue `q^m`, `m > 0`, on a lower-triangular position.
pub fn check_j2(s: &[QPower]) -> bool {
    (0..s.len())
        .all(|i| (0..i).all(|j| s[i].div(&s[j]).as_integral_q_power().is_none_or(|m| m <= 0)))
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

fn triangularize(h: &MatrixLoop) -> Result<(MatrixLoop, MatrixLoop)> {
    if h.is_upper_triangular() {
        return Ok((MatrixLoop::identity(h.n), h.clone()));
    }
    if h.n > MAX_PERMUTATION_SEARCH {
        return Err(Error::NotInClass("loop is not upper triangular".into()));
    }
    for p in permutations(h.n) {
        let pm = MatrixLoop::permutation(&p);
        let c = q_conjugate(&pm, h)?;
        if c.is_upper_triangular() {
            return Ok((pm, c));
        }
    }
    Err(Error::NotInClass(
        "no basis permutation makes the loop upper triangular".into(),
    ))
}

pub fn q_normal_form(h: &MatrixLoop) -> Result<QNormalForm> {
    let n = h.n;
    let (perm, h1) = triangularize(h)?;
    let mut diag = Vec::with_capacity(n);
    for i in 0..n {
        let e = h1.get(i, i);
        let (m, c) = e
            .as_monomial()
            .ok_or_else(|| Error::NotInClass(format!("diagonal entry {e} is not a constant")))?;
        if m != 0 {
            return Err(Error::NonIntegral(format!(
                "diagonal entry {e} depends on z"
            )));
        }
        diag.push(QPower::from_scalar(c)?);
    }

    // Order q-exponents within each class.
    let mut k = vec![0i64; n];
    let mut class_min: Vec<(QPower, i64)> = Vec::new();
    for i in 0..n {
        match class_min
            .iter_mut()
            .find(|(base, _)| diag[i].same_q_class(base))
        {
            Some((base, lo)) => {
                let m = diag[i].div(base).as_integral_q_power().expect("same class");
                if m > *lo {
                    k[i] = *lo - m;
                } else {
                    *lo = m;
                }
            }
            None => class_min.push((diag[i].clone(), 0)),
        }
    }
    let dz = MatrixLoop::diag(
        &k.iter()
            .map(|e| ZPoly::monomial(Frac::one(), *e))
            .collect::<Vec<_>>(),
    );
    let h2 = q_conjugate(&dz, &h1)?;
    let s: Vec<QPower> = diag
        .iter()
        .zip(&k)
        .map(|(d, e)| d.mul(&QPower::q(crate::scalars::rat(*e))))
        .collect();
    let sf = scalars(&s)?;

    // n(z) = s^{-1} h2.
    let mut nm = MatrixLoop::zero(n);
    for i in 0..n {
        let inv = sf[i].inv()?;
        for j in 0..n {
            nm.set(i, j, h2.get(i, j).scale(&inv));
        }
    }
    let mut f = MatrixLoop::identity(n);
    let mut b = MatrixLoop::identity(n);
    let mut f_shift: BTreeMap<(usize, usize), ZPoly> = BTreeMap::new();
    for d in 1..n {
        for i in 0..n - d {
            let j = i + d;
            let r = s[i].div(&s[j]);
            let rf = r.to_scalar()?;
            let mut inner = nm.get(i, j).neg();
            let mut outer = ZPoly::zero();
            for kk in i + 1..j {
                inner = inner.add(&b.get(i, kk).mul(f.get(kk, j)));
                let fq = f_shift
                    .get(&(i, kk))
                    .cloned()
                    .unwrap_or_else(|| f.get(i, kk).q_shift());
                outer = outer.add(&fq.mul(nm.get(kk, j)).scale(&sf[kk].div(&sf[j])?));
            }
            let kpoly = inner.scale(&rf).sub(&outer);
            let resonant = r.as_integral_q_power();
            let mut fij = ZPoly::zero();
            let mut bij = ZPoly::zero();
            for (m, c) in &kpoly.coeffs {
                if resonant == Some(*m) {
                    bij.add_term(*m, c.neg().div(&rf)?);
                } else {
                    fij.add_term(*m, c.div(&q_int(*m).sub(&rf))?);
                }
            }
            f_shift.insert((i, j), fij.q_shift());
            f.set(i, j, fij);
            b.set(i, j, bij);
        }
    }
    let total = f.mul(&dz).mul(&perm);
    let nf = QNormalForm { s, b, f: total };
    verify_normal_form(h, &nf)?;
    Ok(nf)
}

/// Checks (J1), (J2) and `q_conjugate(f, h) = s·b`.
pub fn verify_normal_form(h: &MatrixLoop, nf: &QNormalForm) -> Result<()> {
    if !check_j2(&nf.s) {
        return Err(Error::Verification("(J2) fails".into()));
    }
    if !check_j1(&nf.s, &nf.b)? {
        return Err(Error::Verification("(J1) fails".into()));
    }
    if q_conjugate(&nf.f, h)? != nf.product()? {
        return Err(Error::Verification(
            "conjugator does not produce s·b".into(),
        ));
    }
    Ok(())
}

/// Whether `x b1 x^{-1} = b2` for the constant matrix `x`.
pub fn conjugate_by(x: &[Vec<Frac>], b1: &[Vec<Frac>], b2: &[Vec<Frac>]) -> Result<bool> {
    let xi = inverse(x).ok_or_else(|| Error::Singular("conjugating matrix".into()))?;
    let mul = |a: &[Vec<Frac>], b: &[Vec<Frac>]| -> Vec<Vec<Frac>> {
        let n = a.len();
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| (0..n).fold(Frac::zero(), |acc, k| acc.add(&a[i][k].mul(&b[k][j]))))
                    .collect()
            })
            .collect()
    };
    Ok(mul(&mul(x, b1), &xi) == b2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::rat;

    fn qp(e: i64) -> QPower {
        QPower::q(rat(e))
    }

    #[test]
    fn already_normal_diagonal() {
        let s = vec![
            QPower::constant(&rat(2)).unwrap(),
            QPower::constant(&rat(3)).unwrap(),
        ];
        let h = MatrixLoop::constant_diag(&scalars(&s).unwrap());
        let nf = q_normal_form(&h).unwrap();
        assert_eq!(nf.s, s);
        assert!(nf.b == MatrixLoop::identity(2) && nf.f == MatrixLoop::identity(2));
    }

    #[test]
    fn two_by_two_example() {
        let mut h = MatrixLoop::constant_diag(&[Frac::one(), q_int(-1)]);
        h.set(0, 1, ZPoly::monomial(Frac::int(7), 1));
        let nf = q_normal_form(&h).unwrap();
        assert_eq!(nf.s, vec![qp(0), qp(-1)]);
        assert_eq!(nf.b.get(0, 1), &ZPoly::monomial(Frac::int(7), 1));
        assert!(check_j1(&nf.s, &nf.b).unwrap() && check_j2(&nf.s));
    }

    #[test]
    fn misordered_exponents_are_shifted() {
        // diag(1, q) violates (J2) until the second entry moves to q^0.
        let mut h = MatrixLoop::constant_diag(&[Frac::one(), q_int(1)]);
        h.set(0, 1, ZPoly::monomial(Frac::int(1), 2));
        let nf = q_normal_form(&h).unwrap();
        assert!(check_j2(&nf.s));
        assert!(nf.s[0].same_q_class(&nf.s[1]));
    }

    #[test]
    fn lower_triangular_input_is_permuted() {
        let mut h = MatrixLoop::constant_diag(&[Frac::int(2), Frac::int(5)]);
        h.set(1, 0, ZPoly::monomial(Frac::int(1), 1));
        let nf = q_normal_form(&h).unwrap();
        verify_normal_form(&h, &nf).unwrap();
    }
}
