//! The rank-one module `M_frac = C(T)·m` over the affine Weyl group, where
//! `ŝ_i(f·m) = s_i(f)·c(α_i)·m` with
//! `c(a) = (q^{-1}e^{a/2} - q e^{-a/2}) / (q^{-1}e^{-a/2} - q e^{a/2})`.
//!
//! Half characters are needed; `e^{α_0/2} = q e^{-θ/2}`.

use super::context::DahaContext;
use crate::error::Result;
use crate::scalars::poly::x_mono_half;
use crate::scalars::{rat, Frac, Poly};

/// `e^{α_i/2}` as a monomial.
pub fn half_root(ctx: &DahaContext, i: usize) -> Result<Poly> {
    if i == 0 {
        let th: Vec<i32> = ctx.d.theta().x.iter().map(|c| -(*c as i32)).collect();
        Ok(Poly::mono(x_mono_half(&th)).mul(&Poly::q_pow(&rat(1))?))
    } else {
        let a: Vec<i32> = ctx.d.simple_roots[i - 1]
            .iter()
            .map(|c| *c as i32)
            .collect();
        Ok(Poly::mono(x_mono_half(&a)))
    }
}

/// The cocycle factor `c(α_i)`.
pub fn cocycle(ctx: &DahaContext, i: usize) -> Result<Frac> {
    let h = Frac::from_poly(half_root(ctx, i)?);
    let hi = h.inv()?;
    let q = Frac::from_poly(Poly::q_pow(&rat(1))?);
    let qi = q.inv()?;
    let num = qi.mul(&h).sub(&q.mul(&hi));
    let den = qi.mul(&hi).sub(&q.mul(&h));
    num.div(&den)
}

/// `ŝ_i` applied to `f·m`, returning the new coefficient.
pub fn mfrac_act(ctx: &DahaContext, i: usize, f: &Frac) -> Result<Frac> {
    let (mu, w) = ctx.node_reflection(i)?;
    Ok(ctx.subst(w, &mu, f)?.mul(&cocycle(ctx, i)?))
}

/// Applies `ŝ_{i_1} ⋯ ŝ_{i_k}` (rightmost first).
pub fn mfrac_word(ctx: &DahaContext, word: &[usize], f: &Frac) -> Result<Frac> {
    word.iter()
        .rev()
        .try_fold(f.clone(), |acc, &i| mfrac_act(ctx, i, &acc))
}
