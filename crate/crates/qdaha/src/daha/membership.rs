//! Membership test for the operator realization of the double affine Hecke
//! algebra: pole, residue-cancellation and vanishing conditions on the
//! coefficients `h_{w,μ}`.

use serde::Serialize;

use super::context::DahaContext;
use super::operator::Operator;
use super::residue::{classify_factor, Divisor, PoleKind};
use crate::error::Result;
use crate::scalars::poly::{q_units, Mono, VAR_Q, VAR_T};
use crate::scalars::{rat, Frac};

/// Reading of the index ranges in the vanishing condition.
///
/// `Derived` is the range obtained by translating the affine condition
/// "`f_w` vanishes on `e^γ = t^{-2}` when `γ > 0` and `w^{-1}γ < 0`" through
/// `μ·w` with `e^δ = q^2`; `Printed` follows the displayed ranges verbatim.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub enum VanishingConvention {
    #[default]
    Derived,
    Printed,
}

impl std::str::FromStr for VanishingConvention {
    type Err = crate::Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "derived" => Ok(Self::Derived),
            "printed" => Ok(Self::Printed),
            _ => Err(crate::Error::Parse(format!("unknown convention {s:?}"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Clause {
    /// Only simple poles along `e^α = q^{2k}`.
    Poles,
    /// Paired residues cancel.
    Residues,
    /// Vanishing along `e^α = q^{2k} t^{∓2}`.
    Vanishing,
}

#[derive(Clone, Debug, Serialize)]
pub struct Violation {
    pub clause: Clause,
    /// Reduced word of `w`, 1-based.
    pub w: Vec<usize>,
    pub mu: Vec<i64>,
    pub divisor: String,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct MembershipReport {
    pub ok: bool,
    pub convention: VanishingConvention,
    pub checked_terms: usize,
    pub violations: Vec<Violation>,
}

impl MembershipReport {
    pub fn fails(&self, c: Clause) -> bool {
        self.violations.iter().any(|v| v.clause == c)
    }
}

fn q2t(k: i64, t: i32) -> Result<Mono> {
    let mut e = vec![0i32; VAR_T + 1];
    e[VAR_Q] = q_units(&rat(2 * k))?;
    e[VAR_T] = t;
    Ok(Mono::from_exps(&e))
}

/// Divisors `T_{α,p}` on which `h_{w,μ}` must vanish, for `α > 0`.
pub fn vanishing_divisors(
    ctx: &DahaContext,
    w: usize,
    mu: &[i64],
    conv: VanishingConvention,
) -> Result<Vec<Divisor>> {
    let d = &ctx.d;
    let winv = ctx.g.get(ctx.g.inv(w));
    let mut out = Vec::new();
    for r in d.positive_roots() {
        let n = d.pair_int(&r.x, mu)?;
        let walpha = winv.act_x(&r.x);
        let eps =
            i64::from(!d.roots[d.root_index(&walpha).expect("W permutes roots")].is_positive());
        let mut push = |k: i64, t: i32| -> Result<()> {
            out.push(Divisor::new(r.x.clone(), q2t(k, t)?)?);
            Ok(())
        };
        match conv {
            VanishingConvention::Derived => {
                if n > 0 {
                    for k in 0..=(n - 1 + eps) {
                        push(-k, -2)?;
                    }
                } else if n == 0 {
                    if eps == 1 {
                        push(0, -2)?;
                    }
                } else {
                    for k in 1..=(-n - eps) {
                        push(k, 2)?;
                    }
                }
            }
            VanishingConvention::Printed => {
                if n < 0 {
                    for k in 0..=(n + 1 - eps).abs() {
                        push(k, -2)?;
                    }
                } else if n == 0 {
                    if eps == 1 {
                        push(0, -2)?;
                    }
                } else {
                    for k in 1..=(n - eps).abs() {
                        push(-k, 2)?;
                    }
                }
            }
        }
    }
    Ok(out)
}

/// `m` with `τ = q^{2m}`.
fn even_q_power(tau: &Mono) -> Option<i64> {
    let e = tau.exps();
    if e.iter().skip(VAR_Q + 1).any(|x| *x != 0) {
        return None;
    }
    let units = i64::from(tau.get(VAR_Q));
    let step = i64::from(q_units(&rat(2)).ok()?);
    (units % step == 0).then_some(units / step)
}

fn word(ctx: &DahaContext, w: usize) -> Vec<usize> {
    ctx.g.get(w).word.iter().map(|i| i + 1).collect()
}

pub fn check_membership(
    ctx: &DahaContext,
    a: &Operator,
    conv: VanishingConvention,
) -> Result<MembershipReport> {
    let d = &ctx.d;
    let mut violations = Vec::new();
    for ((w, mu), h) in &a.terms {
        let mut violate = |clause, divisor: String, detail: String| {
            violations.push(Violation {
                clause,
                w: word(ctx, *w),
                mu: mu.clone(),
                divisor,
                detail,
            });
        };
        for (f, mult) in h.den_factors() {
            match classify_factor(d, f) {
                PoleKind::Scalar => {}
                PoleKind::Other(why) => violate(Clause::Poles, format!("{f} = 0"), why),
                PoleKind::Root { root, divisor } => {
                    let Some(m) = even_q_power(&divisor.tau) else {
                        violate(
                            Clause::Poles,
                            divisor.to_string(),
                            "value is not an integral power of q^2".into(),
                        );
                        continue;
                    };
                    if *mult > 1 {
                        violate(
                            Clause::Poles,
                            divisor.to_string(),
                            format!("pole of order {mult}"),
                        );
                        continue;
                    }
                    // e^α = q^{-2k} with k = -m; partner (s_α w, k α^∨ + s_α μ).
                    let k = -m;
                    let sa = ctx.g.reflection(d, root);
                    let smu = d.reflect_y(root, mu);
                    let coroot = &d.roots[root].coroot;
                    let pmu: Vec<i64> = smu.iter().zip(coroot).map(|(s, c)| s + k * c).collect();
                    let pw = ctx.g.mul(sa, *w);
                    let partner = a.coeff(pw, &pmu);
                    let total = divisor.residue(h)?.add(&divisor.residue(&partner)?);
                    if !total.is_zero() {
                        violate(
                            Clause::Residues,
                            divisor.to_string(),
                            format!(
                                "residue sum with (w={:?}, mu={pmu:?}) is {total}",
                                word(ctx, pw)
                            ),
                        );
                    }
                }
            }
        }
        for div in vanishing_divisors(ctx, *w, mu, conv)? {
            if !div.vanishes(h)? {
                violate(Clause::Vanishing, div.to_string(), "does not vanish".into());
            }
        }
    }
    Ok(MembershipReport {
        ok: violations.is_empty(),
        convention: conv,
        checked_terms: a.len(),
        violations,
    })
}

/// Residues of the two coefficients paired along `e^α = q^{-2k}` for the
/// term `(w, μ)`; returns `(Res h_{w,μ}, Res h_partner)`.
pub fn paired_residues(
    ctx: &DahaContext,
    a: &Operator,
    w: usize,
    mu: &[i64],
    root: usize,
    k: i64,
) -> Result<(Frac, Frac)> {
    let d = &ctx.d;
    let div = Divisor::new(d.roots[root].x.clone(), q2t(-k, 0)?)?;
    let sa = ctx.g.reflection(d, root);
    let smu = d.reflect_y(root, mu);
    let pmu: Vec<i64> = smu
        .iter()
        .zip(&d.roots[root].coroot)
        .map(|(s, c)| s + k * c)
        .collect();
    let pw = ctx.g.mul(sa, w);
    Ok((
        div.residue(&a.coeff(w, mu))?,
        div.residue(&a.coeff(pw, &pmu))?,
    ))
}
