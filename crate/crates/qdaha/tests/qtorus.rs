use proptest::prelude::*;

use qdaha::qtorus::{simplicity_witness, verify_witness, HElement, HWElement, QuantumTorus};
use qdaha::rootdata::{LatticeChoice, RootDatum, SkewForm, WeylGroup, BUILTIN_TYPES};
use qdaha::scalars::{rat, ratio, Frac, Poly, Rational, Scalar};

fn setup(label: &str, lattice: LatticeChoice) -> (RootDatum, QuantumTorus, WeylGroup) {
    let d = RootDatum::builtin(label, lattice).unwrap();
    let t = QuantumTorus::from_datum(&d);
    let g = WeylGroup::new(&d).unwrap();
    (d, t, g)
}

fn q_pow(e: Rational) -> Scalar {
    Frac::from_poly(Poly::q_pow(&e).unwrap())
}

fn mono(v: Vec<i64>) -> HElement {
    HElement::monomial(v, Scalar::one())
}

/// `ω((x,y),(x',y')) = ⟨x,y'⟩ − ⟨x',y⟩`, straight from the pairing.
fn omega(d: &RootDatum, a: &[i64], b: &[i64]) -> Rational {
    let n = d.dim;
    d.pair(&a[..n], &b[n..]) - d.pair(&b[..n], &a[n..])
}

fn unit(n: usize, i: usize) -> Vec<i64> {
    (0..n).map(|j| i64::from(i == j)).collect()
}

#[test]
fn relation_holds_for_all_basis_pairs() {
    for label in BUILTIN_TYPES {
        let (d, t, _) = setup(label, LatticeChoice::Weight);
        for a in 0..d.dim {
            for b in 0..d.dim {
                let x = t.key(&unit(d.dim, a), &vec![0; d.dim]);
                let y = t.key(&vec![0; d.dim], &unit(d.dim, b));
                let yx = mono(y.clone()).mul(&t, &mono(x.clone())).unwrap();
                let xy = mono(x.clone()).mul(&t, &mono(y.clone())).unwrap();
                let sum: Vec<i64> = x.iter().zip(&y).map(|(p, q)| p + q).collect();
                let pairing = d.pair(&unit(d.dim, a), &unit(d.dim, b));
                assert_eq!(
                    yx.coeff(&sum),
                    xy.coeff(&sum).mul(&q_pow(pairing)),
                    "{label} ({a},{b})"
                );
            }
        }
    }
}

#[test]
fn ratio_example_and_four_term_expansion() {
    let (d, t, _) = setup("A1", LatticeChoice::Root);
    let (x, y) = (vec![1, 0], vec![0, 1]);
    // X is the root lattice and Y its dual, so ⟨x, y⟩ = 1.
    assert_eq!(d.pair(&[1], &[1]), rat(1));
    let xy = mono(x.clone()).mul(&t, &mono(y.clone())).unwrap();
    let yx = mono(y.clone()).mul(&t, &mono(x.clone())).unwrap();
    assert_eq!(
        yx.coeff(&[1, 1]).div(&xy.coeff(&[1, 1])).unwrap(),
        q_pow(rat(1))
    );

    // Oracle: e^a e^b = q^{-ω(a,b)/2} e^{a+b}, expanded term by term.
    let lhs = mono(x.clone()).add(&mono(y.clone()));
    let rhs = mono(x.clone()).sub(&mono(y.clone()));
    let mut expected = HElement::zero();
    for (a, ca) in [(&x, 1), (&y, 1)] {
        for (b, cb) in [(&x, 1), (&y, -1)] {
            let s: Vec<i64> = a.iter().zip(b).map(|(p, q)| p + q).collect();
            let c = q_pow(-omega(&d, a, b) * ratio(1, 2)).scale(&rat(ca * cb));
            expected.add_term(s, c);
        }
    }
    assert_eq!(lhs.mul(&t, &rhs).unwrap(), expected);
    // e^{2x} − e^{2y} + (q^{1/2} − q^{-1/2}) e^{x+y}.
    assert_eq!(
        expected.coeff(&[1, 1]),
        q_pow(ratio(1, 2)).sub(&q_pow(ratio(-1, 2)))
    );
    assert_eq!(expected.terms.len(), 3);
}

#[test]
fn twisted_group_algebra_examples() {
    let (d, t, g) = setup("A2", LatticeChoice::Weight);
    let x = t.key(&[1, 0], &[0, 0]);
    let s1 = g.simple(0);
    let lhs = HWElement::from_weyl(&t, s1)
        .mul(&t, &g, &HWElement::from_h(mono(x)))
        .unwrap();
    let sx = g.get(s1).act_x(&[1, 0]);
    assert_eq!(lhs.terms.len(), 1);
    assert_eq!(lhs.terms[&s1], mono(t.key(&sx, &[0, 0])));
    assert_eq!(sx, vec![-1, 1]);
    for w in 0..g.len() {
        let p = HWElement::from_weyl(&t, w)
            .mul(&t, &g, &HWElement::from_weyl(&t, g.inv(w)))
            .unwrap();
        assert_eq!(p, HWElement::from_weyl(&t, g.identity()));
    }
    assert_eq!(d.rank, 2);
}

#[test]
fn projection_example_a2() {
    let (_, t, g) = setup("A2", LatticeChoice::Weight);
    let p = mono(t.key(&[1, 0], &[0, 0]))
        .project_invariants(&t, &g)
        .unwrap();
    // Oracle: (1/6) Σ_w e^{w x}; the orbit of a fundamental weight has three points.
    let mut expected = HElement::zero();
    for w in 0..g.len() {
        expected.add_term(
            t.key(&g.get(w).act_x(&[1, 0]), &[0, 0]),
            Frac::rational(ratio(1, 6)),
        );
    }
    assert_eq!(p, expected);
    assert_eq!(p.terms.len(), 3);
    assert!(p.terms.values().all(|c| *c == Frac::rational(ratio(1, 3))));
    assert!(!mono(t.key(&[1, 0], &[0, 0]))
        .is_invariant(&t, &g, 2)
        .unwrap());
}

#[test]
fn witness_examples() {
    let (_, t, _) = setup("A1", LatticeChoice::Weight);
    let c = Frac::int(5);
    let single = HElement::monomial(vec![1, 0], c.clone());
    let w = simplicity_witness(&t, &single, 16).unwrap();
    assert_eq!(w.coeffs, vec![vec![c.inv().unwrap()]]);

    let h = mono(vec![1, 0]).add(&mono(vec![0, 1]));
    let w = simplicity_witness(&t, &h, 16).unwrap();
    assert_eq!(w.exponents.len(), 2);
    assert_ne!(w.exponents[0], w.exponents[1]);
    check_recombination(&t, &h, &w.v, &w.support, &w.coeffs);
}

#[test]
fn degenerate_form_has_no_witness() {
    let zero = SkewForm::new(vec![vec![rat(0); 2]; 2]).unwrap();
    let t = QuantumTorus::from_form(zero);
    let h = mono(vec![1, 0]).add(&mono(vec![0, 1]));
    assert!(simplicity_witness(&t, &h, 4).is_err());
}

/// Recomputes `Σ_k c[i][k] e^{kv} h e^{-kv}` from scratch and compares with `e^{v_i}`.
fn check_recombination(
    t: &QuantumTorus,
    h: &HElement,
    v: &[i64],
    support: &[Vec<i64>],
    coeffs: &[Vec<Scalar>],
) {
    let conj = |k: i64| {
        let kv: Vec<i64> = v.iter().map(|c| c * k).collect();
        let neg: Vec<i64> = kv.iter().map(|c| -c).collect();
        mono(kv).mul(t, h).unwrap().mul(t, &mono(neg)).unwrap()
    };
    for (i, s) in support.iter().enumerate() {
        let mut sum = HElement::zero();
        for (k, c) in coeffs[i].iter().enumerate() {
            sum = sum.add(&conj(k as i64).scale(c));
        }
        assert_eq!(sum, mono(s.clone()));
    }
}

fn vec_in(dim: usize) -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-2i64..=2, dim)
}

fn element(dim: usize) -> impl Strategy<Value = HElement> {
    prop::collection::vec((vec_in(dim), -3i64..=3), 1..4).prop_map(|terms| {
        let mut h = HElement::zero();
        for (v, c) in terms {
            h.add_term(v, Frac::int(c));
        }
        h
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn associative_with_unit(a in vec_in(4), b in vec_in(4), c in vec_in(4), h in element(4)) {
        let (_, t, _) = setup("A2", LatticeChoice::Weight);
        let (a, b, c) = (mono(a), mono(b), mono(c));
        let left = a.mul(&t, &b).unwrap().mul(&t, &c).unwrap();
        let right = a.mul(&t, &b.mul(&t, &c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
        let one = HElement::one(4);
        prop_assert_eq!(one.mul(&t, &h).unwrap(), h.clone());
        prop_assert_eq!(h.mul(&t, &one).unwrap(), h);
    }

    #[test]
    fn x_and_y_parts_commute(x1 in vec_in(2), x2 in vec_in(2), y1 in vec_in(2), y2 in vec_in(2)) {
        let (_, t, _) = setup("A2", LatticeChoice::Weight);
        let z = vec![0; 2];
        let (a, b) = (mono(t.key(&x1, &z)), mono(t.key(&x2, &z)));
        prop_assert_eq!(a.mul(&t, &b).unwrap(), b.mul(&t, &a).unwrap());
        let (a, b) = (mono(t.key(&z, &y1)), mono(t.key(&z, &y2)));
        prop_assert_eq!(a.mul(&t, &b).unwrap(), b.mul(&t, &a).unwrap());
    }

    #[test]
    fn hw_product_is_associative(
        v in prop::collection::vec(vec_in(4), 3),
        w in prop::collection::vec(0usize..6, 3),
    ) {
        let (_, t, g) = setup("A2", LatticeChoice::Weight);
        let el: Vec<HWElement> = v
            .iter()
            .zip(&w)
            .map(|(v, w)| HWElement::from_h(mono(v.clone())).mul(&t, &g, &HWElement::from_weyl(&t, *w)).unwrap())
            .collect();
        let left = el[0].mul(&t, &g, &el[1]).unwrap().mul(&t, &g, &el[2]).unwrap();
        let right = el[0].mul(&t, &g, &el[1].mul(&t, &g, &el[2]).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn projection_is_idempotent(h in element(4)) {
        let (d, t, g) = setup("A2", LatticeChoice::Weight);
        let p = h.project_invariants(&t, &g).unwrap();
        prop_assert!(p.is_invariant(&t, &g, d.rank).unwrap());
        prop_assert_eq!(p.project_invariants(&t, &g).unwrap(), p);
    }

    #[test]
    fn witnesses_recombine(h in element(2)) {
        let (_, t, _) = setup("A1", LatticeChoice::Weight);
        prop_assume!(!h.is_zero());
        let w = simplicity_witness(&t, &h, 16).unwrap();
        prop_assert!(verify_witness(&t, &h, &w).is_ok());
        check_recombination(&t, &h, &w.v, &w.support, &w.coeffs);
    }
}
