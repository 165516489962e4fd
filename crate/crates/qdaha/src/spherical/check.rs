//! Operator criterion for membership in the spherical subalgebra `eĤe`.
//!
//! For every finite node `i` and term `(w, μ)`:
//! (i) `h_{s_i w, s_i μ} = s_i(h_{w,μ})`, and
//! (ii) `h_{w s_i, μ} = h_{w,μ} · D^μ w(φ_i)` with
//! `φ_i = (t² e^{α_i} - 1)/(e^{α_i} - t²)`.

use serde::Serialize;

use crate::daha::{DahaContext, Operator};
use crate::error::Result;
use crate::scalars::json::{frac_to_json, FracJson};
use crate::scalars::{Frac, Poly};

#[derive(Clone, Debug, Serialize)]
pub struct SphericalFailure {
    /// `1` or `2`.
    pub condition: u8,
    /// Finite node, 1-based.
    pub node: usize,
    pub w: Vec<usize>,
    pub mu: Vec<i64>,
    pub lhs: FracJson,
    pub rhs: FracJson,
}

#[derive(Clone, Debug, Serialize)]
pub struct SphericalReport {
    pub ok: bool,
    pub condition_i_ok: bool,
    pub condition_ii_ok: bool,
    pub checked: usize,
    pub failures: Vec<SphericalFailure>,
}

/// `φ_i = (t² e^{α_i} - 1)/(e^{α_i} - t²)`.
pub fn phi(ctx: &DahaContext, i: usize) -> Result<Frac> {
    let u = Poly::x_int(&ctx.d.simple_roots[i - 1]);
    let t2 = Poly::t_pow(2);
    Frac::ratio(t2.mul(&u).sub(&Poly::one()), &u.sub(&t2))
}

pub fn check_spherical(ctx: &DahaContext, h: &Operator) -> Result<SphericalReport> {
    let g = &ctx.g;
    let word = |w: usize| g.get(w).word.iter().map(|i| i + 1).collect::<Vec<_>>();
    let mut failures = Vec::new();
    let mut checked = 0;
    for i in 1..=ctx.rank() {
        let si = g.simple(i - 1);
        let root = ctx.d.simple_index(i - 1);
        let phi_i = phi(ctx, i)?;
        for ((w, mu), hw) in &h.terms {
            checked += 1;
            let lhs = h.coeff(g.mul(si, *w), &ctx.d.reflect_y(root, mu));
            let rhs = ctx.subst(si, &vec![0; ctx.dim()], hw)?;
            if lhs != rhs {
                failures.push(SphericalFailure {
                    condition: 1,
                    node: i,
                    w: word(*w),
                    mu: mu.clone(),
                    lhs: frac_to_json(&lhs),
                    rhs: frac_to_json(&rhs),
                });
            }
            let lhs = h.coeff(g.mul(*w, si), mu);
            let rhs = hw.mul(&ctx.subst(*w, mu, &phi_i)?);
            if lhs != rhs {
                failures.push(SphericalFailure {
                    condition: 2,
                    node: i,
                    w: word(*w),
                    mu: mu.clone(),
                    lhs: frac_to_json(&lhs),
                    rhs: frac_to_json(&rhs),
                });
            }
        }
    }
    let condition_i_ok = failures.iter().all(|f| f.condition != 1);
    let condition_ii_ok = failures.iter().all(|f| f.condition != 2);
    Ok(SphericalReport {
        ok: failures.is_empty(),
        condition_i_ok,
        condition_ii_ok,
        checked,
        failures,
    })
}
