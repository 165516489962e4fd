use proptest::prelude::*;

use qdaha::daha::{dl_operator, kappa, t_word, v_symbolic, DahaContext, Expr, Operator};
use qdaha::rootdata::LatticeChoice;
use qdaha::scalars::{parse_frac, ratio, Frac};
use qdaha::spherical::{
    antisymmetrizer, check_absorption, check_spherical, hecke_elements, idempotent_e_v,
    idempotent_e_v_expr, in_sign_space, reduced_word_independent, sign_rep_apply,
};

fn ctx(label: &str) -> DahaContext {
    DahaContext::builtin(label, LatticeChoice::Root).unwrap()
}

fn f(s: &str) -> Frac {
    parse_frac(s).unwrap()
}

fn op(c: &DahaContext, word: &str, v: &Frac) -> Operator {
    Expr::parse(word).unwrap().to_operator(c, v).unwrap()
}

fn is_idempotent(c: &DahaContext, e: &Operator) -> bool {
    e.compose(c, e).unwrap().equals(e)
}

#[test]
fn idempotents_square_to_themselves() {
    for label in ["A1", "A2"] {
        let c = ctx(label);
        assert!(
            is_idempotent(&c, &idempotent_e_v(&c, &v_symbolic()).unwrap()),
            "{label}"
        );
    }
    let c = ctx("B2");
    for v in [
        Frac::zero(),
        Frac::one(),
        Frac::rational(ratio(1, 2)),
        Frac::int(3),
    ] {
        assert!(
            is_idempotent(&c, &idempotent_e_v(&c, &v).unwrap()),
            "B2 v={v}"
        );
    }
}

#[test]
fn rank_one_idempotents() {
    let c = ctx("A1");
    let s = c.g.simple(0);
    // v = 0: T_{w,0} = t^{l(w)} w and y = t, so e_0 = (1 + s)/2.
    let e0 = idempotent_e_v(&c, &Frac::zero()).unwrap();
    assert_eq!(e0.len(), 2);
    assert_eq!(e0.coeff(0, &[0]), Frac::rational(ratio(1, 2)));
    assert_eq!(e0.coeff(s, &[0]), Frac::rational(ratio(1, 2)));
    // v = 1: e = a [s] + b.
    let e = idempotent_e_v(&c, &Frac::one()).unwrap();
    let a = f("(t^2*x1 - 1) / ((1 + t^2)*(x1 - 1))");
    let b = f("(x1 - t^2) / ((1 + t^2)*(x1 - 1))");
    assert_eq!(e.coeff(s, &[0]), a);
    assert_eq!(e.coeff(0, &[0]), b);
    assert_eq!(Operator::reflection(&c, s).apply(&c, &a).unwrap(), b);
    assert_eq!(a, Frac::one().sub(&b));
}

#[test]
fn absorption_examples() {
    let a1 = ctx("A1");
    assert!(check_absorption(&a1, 1, &v_symbolic()).unwrap());
    // v = 0: t s e_0 = t e_0.
    let e0 = idempotent_e_v(&a1, &Frac::zero()).unwrap();
    let ts = Operator::reflection(&a1, a1.g.simple(0)).scale(&f("t"));
    assert!(ts.compose(&a1, &e0).unwrap().equals(&e0.scale(&f("t"))));
    let a2 = ctx("A2");
    for i in 1..=2 {
        assert!(check_absorption(&a2, i, &Frac::one()).unwrap());
    }
}

/// All words of length `l(w)` in the simple reflections that multiply to `w`.
fn reduced_words(c: &DahaContext, w: usize) -> Vec<Vec<usize>> {
    let len = c.g.length(w);
    let mut words = vec![vec![]];
    for _ in 0..len {
        words = words
            .into_iter()
            .flat_map(|p: Vec<usize>| (0..c.rank()).map(move |i| [p.clone(), vec![i]].concat()))
            .collect();
    }
    words
        .into_iter()
        .filter(|word| c.g.from_word(word) == w)
        .collect()
}

#[test]
fn hecke_elements_ignore_the_reduced_word() {
    for label in ["A2", "B2", "A3"] {
        let c = ctx(label);
        let v = if label == "A3" {
            Frac::int(2)
        } else {
            v_symbolic()
        };
        let ts = hecke_elements(&c, &v).unwrap();
        for w in 0..c.g.len() {
            let words = reduced_words(&c, w);
            assert!(!words.is_empty());
            for word in &words {
                let one_based: Vec<usize> = word.iter().map(|i| i + 1).collect();
                assert!(
                    t_word(&c, &one_based, &v).unwrap().equals(&ts[w]),
                    "{label} {word:?}"
                );
            }
            assert!(reduced_word_independent(&c, w, &v).unwrap());
        }
        let w0 = c.g.longest();
        let expected = match label {
            "A2" | "B2" => 2,
            _ => 16,
        };
        assert_eq!(reduced_words(&c, w0).len(), expected, "{label}");
    }
}

#[test]
fn criterion_examples() {
    let c = ctx("A1");
    let one = Frac::one();
    let e = idempotent_e_v(&c, &one).unwrap();
    assert!(check_spherical(&c, &e).unwrap().ok);
    let r = check_spherical(&c, &op(&c, "T1", &one)).unwrap();
    assert!(!r.ok && !r.condition_ii_ok);
    assert!(r.failures.iter().any(|fl| fl.condition == 2));
}

#[test]
fn sandwiches_of_short_products_are_spherical() {
    let c = ctx("A1");
    let one = Frac::one();
    let e = idempotent_e_v(&c, &one).unwrap();
    let gens = ["T0", "T1", "X(1)", "T1^-1"];
    let mut words = vec![String::new()];
    for _ in 0..3 {
        words = words
            .iter()
            .flat_map(|w| {
                gens.iter()
                    .map(move |g| format!("{w} {g}").trim().to_string())
            })
            .collect();
        for w in &words {
            let h = op(&c, w, &one);
            let ehe = e.compose(&c, &h).unwrap().compose(&c, &e).unwrap();
            let r = check_spherical(&c, &ehe).unwrap();
            assert!(r.ok, "{w}: {:?}", r.failures.first());
            assert!(
                e.compose(&c, &ehe)
                    .unwrap()
                    .compose(&c, &e)
                    .unwrap()
                    .equals(&ehe),
                "{w}"
            );
        }
    }
}

#[test]
fn involution_examples() {
    let c = ctx("A2");
    let v = v_symbolic();
    let k = kappa(&v);
    let quad_const = v.add(&f("t^2").mul(&Frac::one().sub(&v)));
    for i in 1..=2 {
        let t_i = Expr::parse(&format!("T{i}")).unwrap();
        let img = t_i.xi(&v).unwrap();
        assert_eq!(img.xi(&v).unwrap(), t_i);
        // Same quadratic relation: X² = k X + (v + t²(1 − v)).
        let x = img.to_operator(&c, &v).unwrap();
        let rhs = x.scale(&k).add(&Operator::mult(&c, quad_const.clone()));
        assert!(x.compose(&c, &x).unwrap().equals(&rhs));
    }
    let lhs = Expr::parse("T1 T2 T1")
        .unwrap()
        .xi(&v)
        .unwrap()
        .to_operator(&c, &v)
        .unwrap();
    let rhs = Expr::parse("T2 T1 T2")
        .unwrap()
        .xi(&v)
        .unwrap()
        .to_operator(&c, &v)
        .unwrap();
    assert!(lhs.equals(&rhs));
    let x = Expr::parse("X(1,-1)").unwrap();
    assert_eq!(x.xi(&v).unwrap(), Expr::parse("X(-1,1)").unwrap());
    assert!(Expr::parse("s1").unwrap().xi(&v).is_err());

    let a1 = ctx("A1");
    let xi_e = idempotent_e_v_expr(&a1, &v)
        .unwrap()
        .xi(&v)
        .unwrap()
        .to_operator(&a1, &v)
        .unwrap();
    assert!(xi_e.equals(&antisymmetrizer(&a1, &v).unwrap()));
}

#[test]
fn eigenvalue_identity() {
    let v = v_symbolic();
    let k = kappa(&v);
    for label in ["A1", "A2", "B2"] {
        let c = ctx(label);
        for i in 0..=c.rank() {
            let t_i = dl_operator(&c, i, &v).unwrap();
            let a = t_i.sub(&Operator::mult(&c, f("t")));
            let b = t_i.sub(&Operator::mult(&c, k.sub(&f("t"))));
            assert!(a.compose(&c, &b).unwrap().is_zero(), "{label} T{i}");
        }
    }
}

#[test]
fn sign_representation() {
    let c = ctx("A1");
    let s = c.g.simple(0);
    let v = Frac::zero();
    let odd = f("x1 - x1^-1");
    assert_eq!(
        Operator::reflection(&c, s).apply(&c, &odd).unwrap(),
        odd.neg()
    );
    assert!(in_sign_space(&c, &odd, &v).unwrap());
    let e = idempotent_e_v_expr(&c, &v).unwrap();
    let a = e.mul(&Expr::parse("X(1) + X(-1)").unwrap()).mul(&e);
    let out = sign_rep_apply(&c, &a, &odd, &v).unwrap();
    assert!(!out.is_zero());
    assert_eq!(
        Operator::reflection(&c, s).apply(&c, &out).unwrap(),
        out.neg()
    );

    // ε_v of a monomial is fixed by ε_v.
    for v in [v_symbolic(), Frac::one()] {
        let eps = antisymmetrizer(&c, &v).unwrap();
        let p = eps.apply(&c, &f("x1^2")).unwrap();
        assert_eq!(eps.apply(&c, &p).unwrap(), p);
        assert!(in_sign_space(&c, &p, &v).unwrap());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(6))]

    #[test]
    fn a2_sandwiches_are_spherical(picks in prop::collection::vec(0usize..5, 1..=3)) {
        let c = ctx("A2");
        let one = Frac::one();
        let gens = ["T0", "T1", "T2", "X(1,0)", "X(0,-1)"];
        let word = picks.iter().map(|&p| gens[p]).collect::<Vec<_>>().join(" ");
        let e = idempotent_e_v(&c, &one).unwrap();
        let ehe = e.compose(&c, &op(&c, &word, &one)).unwrap().compose(&c, &e).unwrap();
        prop_assert!(check_spherical(&c, &ehe).unwrap().ok, "{}", word);
    }
}
