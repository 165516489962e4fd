//! Serializable reports for each front-end command. Every report carries a
//! versioned `schema` string; scalars are printed in the text syntax that
//! [`crate::scalars::parse_frac`] reads back.

use serde::{Deserialize, Serialize};

use crate::clifford::{
    builtin_group, clifford_count, semidirect_structure, weyl_pair, CharacterTable,
    CharacterTableJson, CliffordCount, FiniteGroup, GroupSpec, NormalPair, SemidirectReport,
};
use crate::daha::{
    check_braid, check_membership, check_quadratic, operator_from_json, operator_to_json,
    DahaContext, Expr, MembershipReport, OpTermJson, Operator, VanishingConvention,
};
use crate::error::{Error, Result};
use crate::loops::{
    component_weyl, matrix_to_json, q_conjugate, q_normal_form, MatrixJson, MatrixLoop,
};
use crate::modules::{
    basis_vec, box_window, dimension_bookkeeping, InducedModule, IsoRep, IsotropyGroup, MLambda,
    ModVec, TorusPoint,
};
use crate::qtorus::{simplicity_witness, HElement, QuantumTorus};
use crate::rootdata::{RootDatum, WeylGroup};
use crate::scalars::json::{frac_from_json, FracJson};
use crate::scalars::{fmt_rational, parse_frac, Frac, QPower};
use crate::spherical::{check_spherical, idempotent_e_v, idempotent_e_v_expr, SphericalReport};

/// One monomial `c·e^{x⊕y}`; `y` is empty when the torus has no `X ⊕ Y` split.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HTermJson {
    pub x: Vec<i64>,
    #[serde(default)]
    pub y: Vec<i64>,
    pub coeff: String,
}

fn split_at(t: &QuantumTorus) -> usize {
    t.split.unwrap_or(t.dim())
}

pub fn helement_to_json(t: &QuantumTorus, h: &HElement) -> Vec<HTermJson> {
    let k = split_at(t);
    h.terms
        .iter()
        .map(|(v, c)| HTermJson {
            x: v[..k].to_vec(),
            y: v[k..].to_vec(),
            coeff: c.to_string(),
        })
        .collect()
}

/// Reads `[{"x": [...], "y": [...], "coeff": "..."}]`, checking both ranks.
pub fn helement_from_json(t: &QuantumTorus, text: &str) -> Result<HElement> {
    let terms: Vec<HTermJson> =
        serde_json::from_str(text).map_err(|e| Error::Schema(e.to_string()))?;
    let k = split_at(t);
    let mut h = HElement::zero();
    for term in terms {
        if term.x.len() != k || term.y.len() != t.dim() - k {
            return Err(Error::Dimension(format!(
                "monomial ({:?}, {:?}) should have {} + {} entries",
                term.x,
                term.y,
                k,
                t.dim() - k
            )));
        }
        h.add_term(t.key(&term.x, &term.y), parse_frac(&term.coeff)?);
    }
    Ok(h)
}

#[derive(Clone, Debug, Serialize)]
pub struct ElementReport {
    pub schema: &'static str,
    pub terms: Vec<HTermJson>,
}

pub fn qtorus_mul(t: &QuantumTorus, a: &HElement, b: &HElement) -> Result<ElementReport> {
    Ok(ElementReport {
        schema: "qdaha.qtorus.element/1",
        terms: helement_to_json(t, &a.mul(t, b)?),
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct InvariantReport {
    pub schema: &'static str,
    pub invariant: bool,
    /// `(1/|W|) Σ_w ^w h`.
    pub symmetrized: Vec<HTermJson>,
}

pub fn qtorus_invariant(
    t: &QuantumTorus,
    g: &WeylGroup,
    rank: usize,
    h: &HElement,
) -> Result<InvariantReport> {
    Ok(InvariantReport {
        schema: "qdaha.qtorus.invariant/1",
        invariant: h.is_invariant(t, g, rank)?,
        symmetrized: helement_to_json(t, &h.project_invariants(t, g)?),
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct WitnessReport {
    pub schema: &'static str,
    pub separating_vector: Vec<i64>,
    pub support: Vec<Vec<i64>>,
    pub exponents: Vec<String>,
    /// `coefficients[i][k]`: the weight of `e^{kv} h e^{-kv}` in `e^{v_i}`.
    pub coefficients: Vec<Vec<String>>,
    pub verified: bool,
}

pub fn qtorus_witness(t: &QuantumTorus, h: &HElement, bound: i64) -> Result<WitnessReport> {
    let w = simplicity_witness(t, h, bound)?;
    Ok(WitnessReport {
        schema: "qdaha.qtorus.witness/1",
        separating_vector: w.v,
        support: w.support,
        exponents: w.exponents.iter().map(fmt_rational).collect(),
        coefficients: w
            .coeffs
            .iter()
            .map(|r| r.iter().map(ToString::to_string).collect())
            .collect(),
        verified: true,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct IsoElementJson {
    /// Reduced word, 1-based.
    pub word: Vec<usize>,
    pub shift: Vec<i64>,
}

#[derive(Clone, Debug, Serialize)]
pub struct IsotropyReport {
    pub schema: &'static str,
    pub lambda: Vec<QPower>,
    pub order: usize,
    pub elements: Vec<IsoElementJson>,
    pub cocycle_ok: bool,
    pub centralizer_roots: usize,
    pub connected_order: usize,
    pub component_order: usize,
}

fn word1(g: &WeylGroup, w: usize) -> Vec<usize> {
    g.get(w).word.iter().map(|i| i + 1).collect()
}

pub fn isotropy_report(d: &RootDatum, g: &WeylGroup, lambda: &TorusPoint) -> IsotropyReport {
    let iso = IsotropyGroup::compute(d, g, lambda);
    let comp = component_weyl(d, g, lambda);
    IsotropyReport {
        schema: "qdaha.module.isotropy/1",
        lambda: lambda.coords.clone(),
        order: iso.len(),
        elements: iso
            .elements
            .iter()
            .map(|(w, y)| IsoElementJson {
                word: word1(g, *w),
                shift: y.clone(),
            })
            .collect(),
        cocycle_ok: iso.check_cocycle(g),
        centralizer_roots: comp.centralizer_roots.len(),
        connected_order: comp.connected.len(),
        component_order: comp.component_order(),
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ModTermJson {
    pub y: Vec<i64>,
    pub comp: usize,
    pub coeff: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct ActReport {
    pub schema: &'static str,
    pub input: Vec<i64>,
    pub result: Vec<ModTermJson>,
    /// Weight of each resulting basis vector.
    pub weights: Vec<Vec<QPower>>,
}

fn modvec_json(v: &ModVec) -> Vec<ModTermJson> {
    v.iter()
        .map(|((y, comp), c)| ModTermJson {
            y: y.clone(),
            comp: *comp,
            coeff: c.to_string(),
        })
        .collect()
}

/// Applies `e^x` (if given) and then the shift `q^y` (if given) to `v_{λ q^at}`.
pub fn module_act(
    d: &RootDatum,
    lambda: &TorusPoint,
    radius: i64,
    at: &[i64],
    x: Option<&[i64]>,
    shift: Option<&[i64]>,
) -> Result<ActReport> {
    let m = MLambda::new(lambda.clone(), box_window(d.dim, radius), 1);
    let mut v = basis_vec(at.to_vec(), 0);
    if let Some(x) = x {
        v = m.act_x(d, x, &v)?;
    }
    if let Some(y) = shift {
        v = m.act_y(y, &v)?;
    }
    Ok(ActReport {
        schema: "qdaha.module.act/1",
        input: at.to_vec(),
        weights: v.keys().map(|(y, _)| m.weight(d, y).coords).collect(),
        result: modvec_json(&v),
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct ZchiReport {
    pub schema: &'static str,
    pub character: String,
    pub isotropy_order: usize,
    pub cosets: usize,
    pub window: usize,
    pub dim: usize,
    pub invariants_dim: usize,
    /// `(dim M_λ, Σ_χ d_χ dim (M_λ ⊗ χ)^{W^λ})` when `W^λ` has order at most two.
    pub bookkeeping: Option<(usize, usize)>,
}

pub fn zchi_report(
    d: &RootDatum,
    g: &WeylGroup,
    lambda: &TorusPoint,
    radius: i64,
    chi: &str,
) -> Result<ZchiReport> {
    let iso = IsotropyGroup::compute(d, g, lambda);
    let rep = IsoRep::by_label(chi, &iso, g)?;
    let start = MLambda::new(lambda.clone(), box_window(d.dim, radius), 1);
    let window = start.saturate(g, &iso)?;
    let m = MLambda::new(lambda.clone(), window.clone(), 1);
    let bookkeeping = match iso.len() {
        1 => Some(dimension_bookkeeping(
            &m,
            g,
            &iso,
            &[IsoRep::trivial(&iso)],
        )?),
        2 => {
            let sign = IsoRep::linear("sign", &[crate::scalars::rat(1), crate::scalars::rat(-1)]);
            Some(dimension_bookkeeping(
                &m,
                g,
                &iso,
                &[IsoRep::trivial(&iso), sign],
            )?)
        }
        _ => None,
    };
    let z = InducedModule::new(g, iso.clone(), rep, window.clone())?;
    let inv = z.invariants(g, d.rank)?;
    Ok(ZchiReport {
        schema: "qdaha.module.zchi/1",
        character: chi.to_string(),
        isotropy_order: iso.len(),
        cosets: z.reps.len(),
        window: window.len(),
        dim: z.dim(),
        invariants_dim: inv.len(),
        bookkeeping,
    })
}

/// Where an operator comes from: a generator expression or operator JSON.
#[derive(Clone, Debug)]
pub enum OpSource {
    Word(String),
    Json(String),
}

impl OpSource {
    pub fn resolve(&self, ctx: &DahaContext, v: &Frac) -> Result<(String, Operator)> {
        match self {
            OpSource::Word(w) => Ok((w.clone(), Expr::parse(w)?.to_operator(ctx, v)?)),
            OpSource::Json(text) => {
                let terms: Vec<OpTermJson> =
                    serde_json::from_str(text).map_err(|e| Error::Schema(e.to_string()))?;
                Ok(("<json>".into(), operator_from_json(ctx, &terms)?))
            }
        }
    }
}

/// A scalar given either as text (`"t^2 - 1"`) or as fraction JSON.
pub fn parse_frac_arg(text: &str) -> Result<Frac> {
    let t = text.trim();
    if t.starts_with('{') {
        let j: FracJson = serde_json::from_str(t).map_err(|e| Error::Schema(e.to_string()))?;
        frac_from_json(&j)
    } else if t.starts_with('"') {
        let s: String = serde_json::from_str(t).map_err(|e| Error::Schema(e.to_string()))?;
        parse_frac(&s)
    } else {
        parse_frac(t)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct OperatorReport {
    pub schema: &'static str,
    pub expression: String,
    pub terms: Vec<OpTermJson>,
    pub display: String,
}

pub fn daha_op(ctx: &DahaContext, src: &OpSource, v: &Frac) -> Result<OperatorReport> {
    let (expression, op) = src.resolve(ctx, v)?;
    Ok(OperatorReport {
        schema: "qdaha.daha.operator/1",
        expression,
        terms: operator_to_json(ctx, &op),
        display: op.display(ctx),
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct ApplyReport {
    pub schema: &'static str,
    pub expression: String,
    pub input: String,
    pub result: String,
}

pub fn daha_apply(ctx: &DahaContext, src: &OpSource, f: &str, v: &Frac) -> Result<ApplyReport> {
    let (expression, op) = src.resolve(ctx, v)?;
    let input = parse_frac_arg(f)?;
    Ok(ApplyReport {
        schema: "qdaha.daha.apply/1",
        expression,
        input: input.to_string(),
        result: op.apply(ctx, &input)?.to_string(),
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct MemberReport {
    pub schema: &'static str,
    pub expression: String,
    pub report: MembershipReport,
}

pub fn daha_member(
    ctx: &DahaContext,
    src: &OpSource,
    v: &Frac,
    conv: VanishingConvention,
) -> Result<MemberReport> {
    let (expression, op) = src.resolve(ctx, v)?;
    Ok(MemberReport {
        schema: "qdaha.daha.member/1",
        expression,
        report: check_membership(ctx, &op, conv)?,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct IdempotentReport {
    pub schema: &'static str,
    pub v: String,
    /// `e_v` as a combination of Hecke words.
    pub expression: Vec<crate::daha::ExprTermJson>,
    pub terms: Vec<OpTermJson>,
    pub idempotent: bool,
}

pub fn spherical_e(ctx: &DahaContext, v: &Frac) -> Result<IdempotentReport> {
    let e = idempotent_e_v(ctx, v)?;
    let sq = e.compose(ctx, &e)?;
    Ok(IdempotentReport {
        schema: "qdaha.spherical.e/1",
        v: v.to_string(),
        expression: crate::daha::expr_to_json(&idempotent_e_v_expr(ctx, v)?),
        terms: operator_to_json(ctx, &e),
        idempotent: sq.equals(&e),
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct SphericalCheckReport {
    pub schema: &'static str,
    pub expression: String,
    /// Whether the operator was sandwiched as `e·h·e` first.
    pub sandwiched: bool,
    pub report: SphericalReport,
}

/// The spherical test runs at `v = 1`.
pub fn spherical_check(
    ctx: &DahaContext,
    src: &OpSource,
    sandwich: bool,
) -> Result<SphericalCheckReport> {
    let one = Frac::one();
    let (expression, mut op) = src.resolve(ctx, &one)?;
    if sandwich {
        let e = idempotent_e_v(ctx, &one)?;
        op = e.compose(ctx, &op)?.compose(ctx, &e)?;
    }
    Ok(SphericalCheckReport {
        schema: "qdaha.spherical.check/1",
        expression,
        sandwiched: sandwich,
        report: check_spherical(ctx, &op)?,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct ExprReport {
    pub schema: &'static str,
    pub input: String,
    pub terms: Vec<crate::daha::ExprTermJson>,
    pub display: String,
}

pub fn spherical_xi(word: &str, v: &Frac) -> Result<ExprReport> {
    let x = Expr::parse(word)?.xi(v)?;
    Ok(ExprReport {
        schema: "qdaha.spherical.xi/1",
        input: word.to_string(),
        terms: crate::daha::expr_to_json(&x),
        display: x.to_string(),
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct NormalFormReport {
    pub schema: &'static str,
    pub s: Vec<QPower>,
    pub b: MatrixJson,
    pub f: MatrixJson,
    /// Checks run on the result, in order.
    pub transcript: Vec<String>,
    pub verified: bool,
}

pub fn normal_form_report(h: &MatrixLoop) -> Result<NormalFormReport> {
    let nf = q_normal_form(h)?;
    let conj = q_conjugate(&nf.f, h)?;
    let checks = [
        ("f(qz)·h·f(z)^-1 = s·b", conj == nf.product()?),
        ("b is unitriangular", nf.b.is_unitriangular()),
        ("det f is a unit", nf.f.inverse().is_ok()),
    ];
    Ok(NormalFormReport {
        schema: "qdaha.loop.normal_form/1",
        s: nf.s,
        b: matrix_to_json(&nf.b),
        f: matrix_to_json(&nf.f),
        transcript: checks
            .iter()
            .map(|(c, ok)| format!("{c}: {}", if *ok { "ok" } else { "FAILED" }))
            .collect(),
        verified: checks.iter().all(|(_, ok)| *ok),
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct RelationCheck {
    pub relation: String,
    pub nodes: Vec<usize>,
    /// `None` for a pair with no braid relation.
    pub holds: Option<bool>,
}

#[derive(Clone, Debug, Serialize)]
pub struct RelationsReport {
    pub schema: &'static str,
    pub checks: Vec<RelationCheck>,
    pub ok: bool,
}

pub fn relations_report(ctx: &DahaContext, v: &Frac) -> Result<RelationsReport> {
    let r = ctx.rank();
    let mut tasks: Vec<(usize, usize)> = (0..=r).map(|i| (i, i)).collect();
    tasks.extend((0..=r).flat_map(|i| (i + 1..=r).map(move |j| (i, j))));
    let checks = crate::par::map(&tasks, |&(i, j)| -> Result<RelationCheck> {
        Ok(if i == j {
            RelationCheck {
                relation: "quadratic".into(),
                nodes: vec![i],
                holds: Some(check_quadratic(ctx, i, v)?),
            }
        } else {
            RelationCheck {
                relation: "braid".into(),
                nodes: vec![i, j],
                holds: check_braid(ctx, i, j, v)?,
            }
        })
    })
    .into_iter()
    .collect::<Result<Vec<_>>>()?;
    let ok = checks.iter().all(|c| c.holds != Some(false));
    Ok(RelationsReport {
        schema: "qdaha.relations/1",
        checks,
        ok,
    })
}

/// A built-in group name or a JSON permutation spec.
pub fn parse_group_spec(text: &str) -> Result<GroupSpec> {
    let t = text.trim();
    if t.starts_with('{') {
        serde_json::from_str(t).map_err(|e| Error::Schema(e.to_string()))
    } else {
        builtin_group(t)
    }
}

pub fn clifford_table(spec: &GroupSpec, bound: usize) -> Result<CharacterTableJson> {
    let g = FiniteGroup::from_spec(spec, bound)?;
    Ok(CharacterTable::compute(&g, bound)?.to_json())
}

#[derive(Clone, Debug, Serialize)]
pub struct CliffordReport {
    pub schema: &'static str,
    pub count: CliffordCount,
    pub semidirect: SemidirectReport,
}

pub fn clifford_report(
    pair: &NormalPair,
    bound: usize,
    candidate: Option<&[usize]>,
) -> Result<CliffordReport> {
    Ok(CliffordReport {
        schema: "qdaha.clifford.count/1",
        count: clifford_count(pair, bound)?,
        semidirect: semidirect_structure(pair, candidate),
    })
}

pub fn clifford_count_spec(
    group: &GroupSpec,
    normal: &GroupSpec,
    bound: usize,
) -> Result<CliffordReport> {
    let g = FiniteGroup::from_spec(group, bound)?;
    let pair = NormalPair::from_generators(g, &normal.generators)?;
    clifford_report(&pair, bound, None)
}

/// The pair `W^λ ⊃ W(Δ_{q,s})` of a torus point, with the Borel complement.
pub fn clifford_count_weyl(
    d: &RootDatum,
    g: &WeylGroup,
    lambda: &TorusPoint,
    bound: usize,
) -> Result<CliffordReport> {
    let wp = weyl_pair(d, g, lambda)?;
    let b = crate::clifford::borel_complement(d, g, &wp);
    clifford_report(&wp.pair, bound, Some(&b))
}
