//! Finite Hecke elements `T_{w,v}`, the sums `W(t,v)`, and the idempotents
//! `e_v` and `ε_v`.

use crate::daha::{dl_operator, kappa, DahaContext, Expr, Gen, Operator};
use crate::error::{Error, Result};
use crate::scalars::{Frac, Poly};

pub fn t() -> Frac {
    Frac::from_poly(Poly::t_pow(1))
}

/// `y = t - v(t - t^{-1})`.
pub fn y_param(v: &Frac) -> Frac {
    t().sub(&kappa(v))
}

/// `W(t, v) = Σ_w (t/y)^{l(w)}`; at `v = 1` this is `W(t) = Σ t^{2l(w)}`.
pub fn poincare(ctx: &DahaContext, v: &Frac) -> Result<Frac> {
    let ratio = t().div(&y_param(v))?;
    let mut acc = Frac::zero();
    for (l, n) in ctx.g.length_counts().iter().enumerate() {
        acc = acc.add(&ratio.pow(l as i32)?.scale(&crate::scalars::rat(*n as i64)));
    }
    Ok(acc)
}

/// `T_{w,v}` for every `w`, indexed like the Weyl group.
pub fn hecke_elements(ctx: &DahaContext, v: &Frac) -> Result<Vec<Operator>> {
    let g = &ctx.g;
    let gens: Vec<Operator> = (1..=ctx.rank())
        .map(|i| dl_operator(ctx, i, v))
        .collect::<Result<_>>()?;
    let mut order: Vec<usize> = (0..g.len()).collect();
    order.sort_by_key(|&w| g.length(w));
    let mut out: Vec<Option<Operator>> = vec![None; g.len()];
    for w in order {
        let op = match g.get(w).word.last() {
            None => Operator::identity(ctx),
            Some(&i) => {
                let parent = g.mul_simple_right(w, i);
                let p = out[parent].as_ref().expect("shorter elements come first");
                p.compose(ctx, &gens[i])?
            }
        };
        out[w] = Some(op);
    }
    Ok(out.into_iter().map(|o| o.expect("filled")).collect())
}

/// `T_{w,v}` evaluated along every reduced word of `w`; all must agree.
pub fn reduced_word_independent(ctx: &DahaContext, w: usize, v: &Frac) -> Result<bool> {
    let words = ctx.g.all_reduced_words(w);
    let mut first: Option<Operator> = None;
    for word in words {
        let one_based: Vec<usize> = word.iter().map(|i| i + 1).collect();
        let op = crate::daha::t_word(ctx, &one_based, v)?;
        match &first {
            None => first = Some(op),
            Some(f) if !f.equals(&op) => return Ok(false),
            Some(_) => {}
        }
    }
    Ok(true)
}

fn weighted_sum(
    ctx: &DahaContext,
    ts: &[Operator],
    weight: &Frac,
    norm: &Frac,
) -> Result<Operator> {
    if norm.is_zero() {
        return Err(Error::DivisionByZero);
    }
    let inv = norm.inv()?;
    let mut acc = Operator::zero();
    for (w, tw) in ts.iter().enumerate() {
        acc = acc.add(&tw.scale(&weight.pow(ctx.g.length(w) as i32)?.mul(&inv)));
    }
    Ok(acc)
}

/// `e_v = (1/W(t,v)) Σ_w y^{-l(w)} T_{w,v}`.
pub fn idempotent_e_v(ctx: &DahaContext, v: &Frac) -> Result<Operator> {
    let ts = hecke_elements(ctx, v)?;
    weighted_sum(ctx, &ts, &y_param(v).inv()?, &poincare(ctx, v)?)
}

/// `e_v` as a combination of generator words (the stored reduced words).
pub fn idempotent_e_v_expr(ctx: &DahaContext, v: &Frac) -> Result<Expr> {
    let yinv = y_param(v).inv()?;
    let winv = poincare(ctx, v)?.inv()?;
    let mut e = Expr::zero();
    for w in 0..ctx.g.len() {
        let word: Vec<Gen> = ctx.g.get(w).word.iter().map(|i| Gen::T(i + 1)).collect();
        e.add_term(word, yinv.pow(ctx.g.length(w) as i32)?.mul(&winv));
    }
    Ok(e)
}

/// The antisymmetrizer normalized as the image of `e_v` under the
/// Iwahori–Matsumoto involution:
/// `ε_v = Σ_w (-t)^{-l(w)} T_{w,v} / Σ_w (y/t)^{l(w)}`.
pub fn antisymmetrizer(ctx: &DahaContext, v: &Frac) -> Result<Operator> {
    let ts = hecke_elements(ctx, v)?;
    let ratio = y_param(v).div(&t())?;
    let mut norm = Frac::zero();
    for (l, n) in ctx.g.length_counts().iter().enumerate() {
        norm = norm.add(&ratio.pow(l as i32)?.scale(&crate::scalars::rat(*n as i64)));
    }
    weighted_sum(ctx, &ts, &t().neg().inv()?, &norm)
}

/// `Σ_w (-1)^{l(w)} T_{w,v}` without any normalization.
pub fn signed_sum(ctx: &DahaContext, v: &Frac) -> Result<Operator> {
    let ts = hecke_elements(ctx, v)?;
    weighted_sum(ctx, &ts, &Frac::int(-1), &Frac::one())
}

/// `T_{i,v} e_v = t e_v`.
pub fn check_absorption(ctx: &DahaContext, i: usize, v: &Frac) -> Result<bool> {
    let e = idempotent_e_v(ctx, v)?;
    let lhs = dl_operator(ctx, i, v)?.compose(ctx, &e)?;
    Ok(lhs.equals(&e.scale(&t())))
}

/// `x² = c·x` for some scalar `c`; returns `c` (the experimental hook for
/// other symmetrizers).
pub fn quasi_idempotent_constant(ctx: &DahaContext, x: &Operator) -> Result<Option<Frac>> {
    let Some(((w, mu), h)) = x.terms.iter().next() else {
        return Ok(Some(Frac::zero()));
    };
    let sq = x.compose(ctx, x)?;
    let c = sq.coeff(*w, mu).div(h)?;
    if c.has_x() {
        return Ok(None);
    }
    Ok(sq.equals(&x.scale(&c)).then_some(c))
}

/// The rank-one closed form `e = a·[s] + b` at `v = 1`.
pub fn sl2_closed_form() -> Result<(Frac, Frac)> {
    let u = Poly::x_int(&[1]);
    let t2 = Poly::t_pow(2);
    // 1/((1 + t^2)(u - 1))
    let den = Frac::inv_poly(&Poly::one().add(&t2))?.mul(&Frac::inv_poly(&u.sub(&Poly::one()))?);
    let a = Frac::from_poly(t2.mul(&u).sub(&Poly::one())).mul(&den);
    let b = Frac::from_poly(u.sub(&t2)).mul(&den);
    Ok((a, b))
}
