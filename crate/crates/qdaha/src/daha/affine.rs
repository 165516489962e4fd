//! Passage between `Σ f_w [w]` over the extended affine Weyl group
//! `Y ⋊ W` and the finite normal form `Σ h_{w,μ} D^μ [w]`.

use std::collections::BTreeMap;

use super::operator::Operator;
use crate::scalars::Frac;

/// Coefficients indexed by affine elements `(μ, w)`, meaning `[μ·w]`.
pub type AffineSum = BTreeMap<(Vec<i64>, usize), Frac>;

/// `[μ·w]` is realized as `D^μ [w]`; coefficients are carried over.
pub fn affine_to_finite(f: &AffineSum) -> Operator {
    let mut op = Operator::zero();
    for ((mu, w), h) in f {
        op.add_term((*w, mu.clone()), h.clone());
    }
    op
}

pub fn finite_to_affine(op: &Operator) -> AffineSum {
    op.terms
        .iter()
        .map(|((w, mu), h)| ((mu.clone(), *w), h.clone()))
        .collect()
}
