//! The sign representation of the spherical subalgebra: `A` acts on
//! `ε_v C[T]` through `Ξ(A)`.

use super::hecke::antisymmetrizer;
use crate::daha::{DahaContext, Expr};
use crate::error::{Error, Result};
use crate::scalars::Frac;

/// Whether `f` lies in `ε_v C[T]`, i.e. is fixed by the projector.
pub fn in_sign_space(ctx: &DahaContext, f: &Frac, v: &Frac) -> Result<bool> {
    Ok(antisymmetrizer(ctx, v)?.apply(ctx, f)? == *f)
}

pub fn sign_rep_apply(ctx: &DahaContext, a: &Expr, f: &Frac, v: &Frac) -> Result<Frac> {
    let eps = antisymmetrizer(ctx, v)?;
    if eps.apply(ctx, f)? != *f {
        return Err(Error::NotInClass(format!(
            "{f} is not in the image of the antisymmetrizer"
        )));
    }
    let out = a.xi(v)?.to_operator(ctx, v)?.apply(ctx, f)?;
    if eps.apply(ctx, &out)? != out {
        return Err(Error::Verification(
            "image left the sign space; is the element spherical?".into(),
        ));
    }
    Ok(out)
}
