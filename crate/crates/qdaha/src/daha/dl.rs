//! Demazure–Lusztig operators and the Hecke relations they satisfy.
//!
//! `T_{i,v} = t s_i + k/(e^{α_i} - 1) (s_i - 1)` with `k = v(t - t^{-1})`;
//! at `v = 1` these are the usual Demazure–Lusztig operators.

use super::context::DahaContext;
use super::operator::Operator;
use crate::error::Result;
use crate::scalars::{Frac, Poly};

/// `k = v(t - t^{-1})`.
pub fn kappa(v: &Frac) -> Frac {
    v.mul(&Frac::from_poly(Poly::t_pow(1).sub(&Poly::t_pow(-1))))
}

/// The symbolic parameter `v`.
pub fn v_symbolic() -> Frac {
    Frac::from_poly(Poly::v_pow(1))
}

pub fn t() -> Frac {
    Frac::from_poly(Poly::t_pow(1))
}

pub fn dl_operator(ctx: &DahaContext, i: usize, v: &Frac) -> Result<Operator> {
    let (mu, w) = ctx.node_reflection(i)?;
    let e = ctx.node_root_poly(i)?;
    let c = kappa(v).mul(&Frac::inv_poly(&e.sub(&Poly::one()))?);
    let mut op = Operator::term(w, mu, t().add(&c));
    op.add_term((0, vec![0; ctx.dim()]), c.neg());
    Ok(op)
}

/// `T² - k T - (v + t²(1 - v))`, which vanishes.
pub fn quadratic_defect(ctx: &DahaContext, i: usize, v: &Frac) -> Result<Operator> {
    let tt = dl_operator(ctx, i, v)?;
    let sq = tt.compose(ctx, &tt)?;
    let c = v.add(&t().mul(&t()).mul(&Frac::one().sub(v)));
    Ok(sq.sub(&tt.scale(&kappa(v))).sub(&Operator::mult(ctx, c)))
}

pub fn check_quadratic(ctx: &DahaContext, i: usize, v: &Frac) -> Result<bool> {
    Ok(quadratic_defect(ctx, i, v)?.is_zero())
}

/// Eigenvalue relation `(T - t)(T - (k - t)) = 0`.
pub fn check_eigenvalues(ctx: &DahaContext, i: usize, v: &Frac) -> Result<bool> {
    let tt = dl_operator(ctx, i, v)?;
    let a = tt.sub(&Operator::mult(ctx, t()));
    let b = tt.sub(&Operator::mult(ctx, kappa(v).sub(&t())));
    Ok(a.compose(ctx, &b)?.is_zero())
}

/// Braid relation of length `m_ij`; `None` when the nodes have no relation.
pub fn check_braid(ctx: &DahaContext, i: usize, j: usize, v: &Frac) -> Result<Option<bool>> {
    let Some(m) = ctx.d.affine_coxeter_m(i, j) else {
        return Ok(None);
    };
    let ti = dl_operator(ctx, i, v)?;
    let tj = dl_operator(ctx, j, v)?;
    let word = |a: &Operator, b: &Operator| -> Vec<Operator> {
        (0..m)
            .map(|k| if k % 2 == 0 { a.clone() } else { b.clone() })
            .collect()
    };
    let lhs = Operator::product(ctx, &word(&ti, &tj))?;
    let rhs = Operator::product(ctx, &word(&tj, &ti))?;
    Ok(Some(lhs.equals(&rhs)))
}

/// `T_{w,v}` along a given word of finite nodes (1-based).
pub fn t_word(ctx: &DahaContext, word: &[usize], v: &Frac) -> Result<Operator> {
    let ops: Vec<Operator> = word
        .iter()
        .map(|&i| dl_operator(ctx, i, v))
        .collect::<Result<_>>()?;
    Operator::product(ctx, &ops)
}

/// `T_{w,v}` along the stored reduced word of `w`.
pub fn t_element(ctx: &DahaContext, w: usize, v: &Frac) -> Result<Operator> {
    let word: Vec<usize> = ctx.g.get(w).word.iter().map(|i| i + 1).collect();
    t_word(ctx, &word, v)
}
