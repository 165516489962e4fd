//! Spherical subalgebra: Hecke idempotents, the operator criterion for
//! `eĤe`, the Iwahori–Matsumoto involution and the sign representation.

pub mod check;
pub mod hecke;
pub mod sign;

pub use check::{check_spherical, phi, SphericalFailure, SphericalReport};
pub use hecke::{
    antisymmetrizer, check_absorption, hecke_elements, idempotent_e_v, idempotent_e_v_expr,
    poincare, quasi_idempotent_constant, reduced_word_independent, signed_sum, sl2_closed_form,
    y_param,
};
pub use sign::{in_sign_space, sign_rep_apply};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::daha::{v_symbolic, DahaContext, Expr, Operator};
    use crate::rootdata::LatticeChoice;
    use crate::scalars::{Frac, Poly};

    fn a1() -> DahaContext {
        DahaContext::builtin("A1", LatticeChoice::Root).unwrap()
    }

    #[test]
    fn idempotents_a1_a2() {
        for label in ["A1", "A2"] {
            let ctx = DahaContext::builtin(label, LatticeChoice::Root).unwrap();
            let v = v_symbolic();
            let e = idempotent_e_v(&ctx, &v).unwrap();
            assert!(e.compose(&ctx, &e).unwrap().equals(&e), "{label}");
            for i in 1..=ctx.rank() {
                assert!(check_absorption(&ctx, i, &v).unwrap());
            }
            let ex = idempotent_e_v_expr(&ctx, &v)
                .unwrap()
                .to_operator(&ctx, &v)
                .unwrap();
            assert!(ex.equals(&e));
            let eps = antisymmetrizer(&ctx, &v).unwrap();
            let xi_e = idempotent_e_v_expr(&ctx, &v)
                .unwrap()
                .xi(&v)
                .unwrap()
                .to_operator(&ctx, &v)
                .unwrap();
            assert!(xi_e.equals(&eps), "{label}");
            assert!(eps.compose(&ctx, &eps).unwrap().equals(&eps));
        }
    }

    #[test]
    fn classical_symmetrizer_at_v0() {
        let ctx = a1();
        let e0 = idempotent_e_v(&ctx, &Frac::zero()).unwrap();
        let s = Operator::reflection(&ctx, ctx.g.simple(0));
        let half = Frac::rational(crate::scalars::ratio(1, 2));
        assert!(e0.equals(&Operator::identity(&ctx).add(&s).scale(&half)));
    }

    #[test]
    fn sl2_form() {
        let ctx = a1();
        let e = idempotent_e_v(&ctx, &Frac::one()).unwrap();
        let (a, b) = sl2_closed_form().unwrap();
        assert_eq!(e.coeff(ctx.g.simple(0), &[0]), a);
        assert_eq!(e.coeff(0, &[0]), b);
        assert_eq!(ctx.subst(ctx.g.simple(0), &[0], &a).unwrap(), b);
        assert_eq!(a, Frac::one().sub(&b));
    }

    #[test]
    fn spherical_criterion() {
        let ctx = a1();
        let one = Frac::one();
        let e = idempotent_e_v(&ctx, &one).unwrap();
        assert!(check_spherical(&ctx, &e).unwrap().ok);
        let h = Expr::parse("T0 X(1) T1")
            .unwrap()
            .to_operator(&ctx, &one)
            .unwrap();
        let ehe = e.compose(&ctx, &h).unwrap().compose(&ctx, &e).unwrap();
        assert!(check_spherical(&ctx, &ehe).unwrap().ok);
        assert!(e
            .compose(&ctx, &ehe)
            .unwrap()
            .compose(&ctx, &e)
            .unwrap()
            .equals(&ehe));
        let t1 = Expr::parse("T1").unwrap().to_operator(&ctx, &one).unwrap();
        let r = check_spherical(&ctx, &t1).unwrap();
        assert!(!r.condition_ii_ok && !r.failures.is_empty());
    }

    #[test]
    fn sign_representation_v0() {
        let ctx = a1();
        let v = Frac::zero();
        let f = Frac::from_poly(Poly::x_int(&[1]).sub(&Poly::x_int(&[-1])));
        assert!(in_sign_space(&ctx, &f, &v).unwrap());
        let e = idempotent_e_v_expr(&ctx, &v).unwrap();
        let a = e.mul(&Expr::parse("X(1)").unwrap()).mul(&e);
        let out = sign_rep_apply(&ctx, &a, &f, &v).unwrap();
        let s = ctx.g.simple(0);
        assert_eq!(ctx.subst(s, &[0], &out).unwrap(), out.neg());
        assert!(sign_rep_apply(&ctx, &a, &Frac::one(), &v).is_err());
    }
}
