//! Difference-reflection operators, the Demazure–Lusztig representation and
//! the membership criterion for the image of the affine Hecke algebra.

pub mod affine;
pub mod context;
pub mod dl;
pub mod expr;
pub mod membership;
pub mod mfrac;
pub mod operator;
pub mod residue;

pub use affine::{affine_to_finite, finite_to_affine, AffineSum};
pub use context::DahaContext;
pub use dl::{
    check_braid, check_eigenvalues, check_quadratic, dl_operator, kappa, t_element, t_word,
    v_symbolic,
};
pub use expr::{expr_from_json, expr_to_json, gen_operator, parse_word, Expr, ExprTermJson, Gen};
pub use membership::{
    check_membership, paired_residues, vanishing_divisors, Clause, MembershipReport,
    VanishingConvention, Violation,
};
pub use mfrac::{cocycle, mfrac_act, mfrac_word};
pub use operator::{operator_from_json, operator_to_json, OpKey, OpTermJson, Operator};
pub use residue::{classify_factor, Divisor, PoleKind};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootdata::LatticeChoice;
    use crate::scalars::{Frac, Poly};

    #[test]
    fn a1_quadratic_and_braid() {
        let ctx = DahaContext::builtin("A1", LatticeChoice::Root).unwrap();
        let v = v_symbolic();
        for i in 0..=1 {
            assert!(check_quadratic(&ctx, i, &v).unwrap());
            assert!(check_quadratic(&ctx, i, &Frac::one()).unwrap());
        }
        assert_eq!(check_braid(&ctx, 0, 1, &v).unwrap(), None);
    }

    #[test]
    fn a2_braid() {
        let ctx = DahaContext::builtin("A2", LatticeChoice::Root).unwrap();
        let v = v_symbolic();
        for (i, j) in [(0, 1), (1, 2), (0, 2)] {
            assert_eq!(check_braid(&ctx, i, j, &v).unwrap(), Some(true), "{i},{j}");
        }
    }

    #[test]
    fn b2_affine_relations() {
        let ctx = DahaContext::builtin("B2", LatticeChoice::Root).unwrap();
        let v = v_symbolic();
        for i in 0..=2 {
            assert!(check_quadratic(&ctx, i, &v).unwrap());
        }
        for (i, j) in [(0, 1), (1, 2), (0, 2)] {
            assert_ne!(check_braid(&ctx, i, j, &v).unwrap(), Some(false));
        }
    }

    fn a1_generators(ctx: &DahaContext) -> Vec<Operator> {
        let one = Frac::one();
        let t1 = dl_operator(ctx, 1, &one).unwrap();
        let t1_inv = t1.sub(&Operator::mult(ctx, kappa(&one)));
        vec![
            dl_operator(ctx, 0, &one).unwrap(),
            t1,
            t1_inv,
            Operator::x(ctx, &[1]),
            Operator::x(ctx, &[-1]),
        ]
    }

    #[test]
    fn a1_products_are_members() {
        let ctx = DahaContext::builtin("A1", LatticeChoice::Root).unwrap();
        let gens = a1_generators(&ctx);
        let mut layer = vec![Operator::identity(&ctx)];
        let mut printed_failures = 0;
        for _ in 0..3 {
            layer = layer
                .iter()
                .flat_map(|w| gens.iter().map(|g| w.compose(&ctx, g).unwrap()))
                .collect();
            for o in &layer {
                let r = check_membership(&ctx, o, VanishingConvention::Derived).unwrap();
                assert!(r.ok, "{}: {:?}", o.display(&ctx), r.violations);
                if !check_membership(&ctx, o, VanishingConvention::Printed)
                    .unwrap()
                    .ok
                {
                    printed_failures += 1;
                }
            }
        }
        // The verbatim ranges reject genuine elements such as T_0.
        assert!(printed_failures > 0);
    }

    #[test]
    fn a1_violators() {
        let ctx = DahaContext::builtin("A1", LatticeChoice::Root).unwrap();
        let pole = |tau: Poly| Frac::inv_poly(&Poly::x_int(&[1]).sub(&tau)).unwrap();
        let off = Operator::mult(&ctx, pole(Poly::t_pow(4)));
        let r = check_membership(&ctx, &off, VanishingConvention::Derived).unwrap();
        assert!(r.fails(Clause::Poles) && !r.ok);
        let unpaired = Operator::mult(&ctx, pole(Poly::one()));
        let r = check_membership(&ctx, &unpaired, VanishingConvention::Derived).unwrap();
        assert!(r.fails(Clause::Residues) && !r.fails(Clause::Poles));
        let bare = Operator::reflection(&ctx, ctx.g.simple(0)).scale(&dl::t());
        let r = check_membership(&ctx, &bare, VanishingConvention::Derived).unwrap();
        assert!(r.fails(Clause::Vanishing) && !r.fails(Clause::Residues));
    }

    #[test]
    fn a1_generator_residues() {
        let ctx = DahaContext::builtin("A1", LatticeChoice::Root).unwrap();
        let t1 = dl_operator(&ctx, 1, &Frac::one()).unwrap();
        let (a, b) = paired_residues(&ctx, &t1, 0, &[0], 0, 0).unwrap();
        let k = kappa(&Frac::one());
        assert_eq!(a, k.neg());
        assert_eq!(b, k);
    }
}
