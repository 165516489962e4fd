//! Constructive simplicity: from any nonzero `h` recover each monomial of its
//! support as an explicit combination of conjugates `e^{kv} h e^{-kv}`.
//!
//! Conjugation scales `e^{v_i}` by `z_i^k` with `z_i = q^{-ω(v,v_i)}`, so a
//! separating `v` turns the recovery into a Vandermonde system.

use std::collections::BTreeSet;

use super::element::{HElement, QuantumTorus};
use crate::error::{Error, Result};
use crate::linalg::inverse;
use crate::scalars::{Poly, Rational, Scalar};

pub const DEFAULT_SEARCH_BOUND: i64 = 16;

#[derive(Clone, Debug)]
pub struct Witness {
    /// Separating vector.
    pub v: Vec<i64>,
    /// Support of `h`, in order.
    pub support: Vec<Vec<i64>>,
    /// `ω(v, v_i)` for each support vector.
    pub exponents: Vec<Rational>,
    /// `coeffs[i][k]`: `e^{v_i} = Σ_k coeffs[i][k] · u_k`.
    pub coeffs: Vec<Vec<Scalar>>,
}

/// Points of the box of sup-radius `r` that are not in the box of radius `inner`.
fn shell(dim: usize, r: i64, inner: i64) -> impl Iterator<Item = Vec<i64>> {
    let side = (2 * r + 1) as u64;
    let total = side.pow(dim as u32);
    (0..total).filter_map(move |mut k| {
        let mut v = Vec::with_capacity(dim);
        for _ in 0..dim {
            v.push((k % side) as i64 - r);
            k /= side;
        }
        if v.iter().all(|c| c.abs() <= inner) {
            None
        } else {
            Some(v)
        }
    })
}

fn separates(t: &QuantumTorus, v: &[i64], support: &[Vec<i64>]) -> bool {
    let vals: BTreeSet<Rational> = support.iter().map(|s| t.form.eval(v, s)).collect();
    vals.len() == support.len()
}

/// `u_k = e^{kv} h e^{-kv}`.
pub fn conjugate(t: &QuantumTorus, h: &HElement, v: &[i64], k: i64) -> Result<HElement> {
    let kv: Vec<i64> = v.iter().map(|c| c * k).collect();
    let neg: Vec<i64> = kv.iter().map(|c| -c).collect();
    let a = HElement::monomial(kv, Scalar::one());
    let b = HElement::monomial(neg, Scalar::one());
    a.mul(t, h)?.mul(t, &b)
}

pub fn simplicity_witness(t: &QuantumTorus, h: &HElement, bound: i64) -> Result<Witness> {
    if h.is_zero() {
        return Err(Error::Verification("h must be nonzero".into()));
    }
    let support: Vec<Vec<i64>> = h.terms.keys().cloned().collect();
    let s = support.len();
    // A difference in the radical of ω can never be separated.
    for i in 0..s {
        for j in i + 1..s {
            let d: Vec<i64> = support[i]
                .iter()
                .zip(&support[j])
                .map(|(a, b)| a - b)
                .collect();
            if t.form.is_radical(&d) {
                return Err(Error::DegenerateForm(format!(
                    "ω vanishes on {:?} - {:?}",
                    support[i], support[j]
                )));
            }
        }
    }
    let mut found = None;
    let mut inner = 0;
    let mut r = 1;
    'search: while r <= bound {
        for v in shell(t.dim(), r, inner) {
            if separates(t, &v, &support) {
                found = Some(v);
                break 'search;
            }
        }
        inner = r;
        r *= 2;
    }
    let v = found.ok_or_else(|| {
        Error::DegenerateForm(format!("no separating vector within radius {bound}"))
    })?;
    let exponents: Vec<Rational> = support.iter().map(|sv| t.form.eval(&v, sv)).collect();
    // a[k][i] = z_i^k with z_i = q^{-ω(v, v_i)}.
    let mut a = vec![vec![Scalar::zero(); s]; s];
    for (k, row) in a.iter_mut().enumerate() {
        for (i, e) in exponents.iter().enumerate() {
            let ex = -e * Rational::from_integer((k as i64).into());
            row[i] = Scalar::from_poly(Poly::q_pow(&ex)?);
        }
    }
    let ainv = inverse(&a).ok_or_else(|| Error::Singular("Vandermonde matrix".into()))?;
    let mut coeffs = Vec::with_capacity(s);
    for (i, sv) in support.iter().enumerate() {
        let c = h.coeff(sv).inv()?;
        coeffs.push((0..s).map(|k| ainv[i][k].mul(&c)).collect());
    }
    let w = Witness {
        v,
        support,
        exponents,
        coeffs,
    };
    verify(t, h, &w)?;
    Ok(w)
}

/// Re-multiplies the certificate and checks every recovered monomial.
pub fn verify(t: &QuantumTorus, h: &HElement, w: &Witness) -> Result<()> {
    let s = w.support.len();
    let us: Vec<HElement> = (0..s as i64)
        .map(|k| conjugate(t, h, &w.v, k))
        .collect::<Result<_>>()?;
    for (i, sv) in w.support.iter().enumerate() {
        let mut acc = HElement::zero();
        for (k, u) in us.iter().enumerate() {
            acc = acc.add(&u.scale(&w.coeffs[i][k]));
        }
        if acc != HElement::monomial(sv.clone(), Scalar::one()) {
            return Err(Error::Verification(format!(
                "monomial {sv:?} not recovered"
            )));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootdata::SkewForm;
    use crate::scalars::rat;

    fn rank_one() -> QuantumTorus {
        // X = Y = Z with <1,1> = 1.
        QuantumTorus::from_form(
            SkewForm::new(vec![vec![rat(0), rat(1)], vec![rat(-1), rat(0)]]).unwrap(),
        )
    }

    #[test]
    fn single_term_certificate() {
        let t = rank_one();
        let h = HElement::monomial(vec![2, -1], Scalar::int(3));
        let w = simplicity_witness(&t, &h, DEFAULT_SEARCH_BOUND).unwrap();
        assert_eq!(
            w.coeffs[0][0],
            Scalar::rational(Rational::new(1.into(), 3.into()))
        );
    }

    #[test]
    fn two_terms_rank_one() {
        let t = rank_one();
        let h = HElement::monomial(vec![1, 0], Scalar::one())
            .add(&HElement::monomial(vec![0, 1], Scalar::one()));
        assert!(separates(&t, &[1, 1], &[vec![1, 0], vec![0, 1]]));
        assert_eq!(t.form.eval(&[1, 1], &[1, 0]), rat(-1));
        assert_eq!(t.form.eval(&[1, 1], &[0, 1]), rat(1));
        let w = simplicity_witness(&t, &h, DEFAULT_SEARCH_BOUND).unwrap();
        assert_eq!(w.support.len(), 2);
    }

    #[test]
    fn degenerate_form_is_reported() {
        // Rank-2 form on Z^3 with radical spanned by e_3.
        let z = rat(0);
        let f = SkewForm::new(vec![
            vec![z.clone(), rat(1), z.clone()],
            vec![rat(-1), z.clone(), z.clone()],
            vec![z.clone(), z.clone(), z.clone()],
        ])
        .unwrap();
        let t = QuantumTorus::from_form(f);
        let h = HElement::monomial(vec![1, 0, 0], Scalar::one())
            .add(&HElement::monomial(vec![1, 0, 1], Scalar::one()));
        assert!(matches!(
            simplicity_witness(&t, &h, DEFAULT_SEARCH_BOUND),
            Err(Error::DegenerateForm(_))
        ));
    }
}
