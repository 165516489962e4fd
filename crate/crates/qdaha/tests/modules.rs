use std::collections::{BTreeSet, VecDeque};

use proptest::prelude::*;

use qdaha::modules::{
    basis_vec, box_window, dimension_bookkeeping, InducedModule, IsoRep, IsotropyGroup, MLambda,
    TorusPoint, ZVec,
};
use qdaha::qtorus::{HElement, QuantumTorus};
use qdaha::rootdata::{LatticeChoice, RootDatum, WeylGroup};
use qdaha::scalars::{rat, Frac, Poly, Rational, Scalar};
use qdaha::Error;

fn setup(label: &str) -> (RootDatum, WeylGroup) {
    let d = RootDatum::builtin(label, LatticeChoice::Weight).unwrap();
    let g = WeylGroup::new(&d).unwrap();
    (d, g)
}

fn point(coords: &[&str]) -> TorusPoint {
    TorusPoint::parse(coords).unwrap()
}

fn q_pow(e: Rational) -> Scalar {
    Frac::from_poly(Poly::q_pow(&e).unwrap())
}

fn unit(n: usize, i: usize, s: i64) -> Vec<i64> {
    (0..n).map(|j| if i == j { s } else { 0 }).collect()
}

fn z_basis(key: (usize, Vec<i64>, usize)) -> ZVec {
    ZVec::from([(key, Scalar::one())])
}

#[test]
fn zero_acts_as_identity_and_shifts_move_weights() {
    let (d, _) = setup("A2");
    let lam = point(&["q^1/2", "2"]);
    let m = MLambda::new(lam.clone(), box_window(2, 1), 1);
    let v = basis_vec(vec![0, 0], 0);
    assert_eq!(m.act_x(&d, &[0, 0], &v).unwrap(), v);
    assert_eq!(m.act_y(&[0, 0], &v).unwrap(), v);
    let moved = m.act_y(&[1, -1], &v).unwrap();
    assert_eq!(moved, basis_vec(vec![1, -1], 0));
    // The new weight is λ q^y, evaluated coordinate by coordinate.
    let w = m.weight(&d, &[1, -1]);
    for i in 0..2 {
        let e = unit(2, i, 1);
        let expect = lam
            .eval(&e)
            .mul(&qdaha::scalars::QPower::q(d.pair(&e, &[1, -1])));
        assert_eq!(w.eval(&e), expect);
    }
}

#[test]
fn commutation_on_three_point_window() {
    let (d, _) = setup("A1");
    let m = MLambda::new(point(&["q^1/2"]), box_window(1, 1), 1);
    for start in [-1i64, 0] {
        for x in -2i64..=2 {
            let v = basis_vec(vec![start], 0);
            let xy = m.act_x(&d, &[x], &m.act_y(&[1], &v).unwrap()).unwrap();
            let yx = m.act_y(&[1], &m.act_x(&d, &[x], &v).unwrap()).unwrap();
            let key = (vec![start + 1], 0);
            assert_eq!(xy[&key], yx[&key].mul(&q_pow(d.pair(&[x], &[1]))));
        }
    }
}

#[test]
fn window_overflow_names_the_shift() {
    let m = MLambda::new(point(&["2"]), box_window(1, 1), 1);
    let err = m.act_y(&[2], &basis_vec(vec![0], 0)).unwrap_err();
    assert!(matches!(err, Error::WindowOverflow(ref y) if y == &vec![2]));
}

#[test]
fn identity_point_has_full_isotropy() {
    for label in ["A1", "A2", "B2"] {
        let (d, g) = setup(label);
        let iso = IsotropyGroup::compute(&d, &g, &TorusPoint::identity(d.dim));
        assert_eq!(iso.len(), g.len());
        assert!(iso.elements.iter().all(|(_, y)| y.iter().all(|c| *c == 0)));
        assert_eq!(iso.elements[0].0, g.identity());
    }
}

#[test]
fn a2_isotropy_by_brute_force() {
    let (d, g) = setup("A2");
    let lam = point(&["q^1/2", "1"]);
    // λ(x) = q^{x_1 / 2}; the pairing of X with Y is the identity matrix.
    for i in 0..2 {
        for j in 0..2 {
            assert_eq!(
                d.pair(&unit(2, i, 1), &unit(2, j, 1)),
                rat(i64::from(i == j))
            );
        }
    }
    let mut expected = BTreeSet::new();
    for w in 0..g.len() {
        let winv = g.get(g.inv(w));
        let diff: Vec<i64> = (0..2)
            .map(|i| winv.act_x(&unit(2, i, 1))[0] - i64::from(i == 0))
            .collect();
        if diff.iter().all(|c| c % 2 == 0) {
            expected.insert((w, diff.iter().map(|c| c / 2).collect::<Vec<i64>>()));
        }
    }
    let iso = IsotropyGroup::compute(&d, &g, &lam);
    let got: BTreeSet<(usize, Vec<i64>)> = iso.elements.iter().cloned().collect();
    assert_eq!(got, expected);
    assert_eq!(iso.len(), 2);
    assert!(iso.check_cocycle(&g));
}

#[test]
fn d4_isotropy_has_order_two() {
    let (d, g) = setup("D4");
    let iso = IsotropyGroup::compute(&d, &g, &point(&["-1", "q^1/2", "-1", "-q^1/2"]));
    assert_eq!(iso.len(), 2);
    assert!(iso.check_cocycle(&g));
}

#[test]
fn a1_dot_action_is_an_involution() {
    let (d, g) = setup("A1");
    let lam = point(&["q^1/2"]);
    let iso = IsotropyGroup::compute(&d, &g, &lam);
    let s = g.simple(0);
    // s(λ)(ω) = λ(−ω) = q^{-1/2} = λ(ω) q^{-1}.
    assert_eq!(iso.shift(s).unwrap(), &[-1]);
    let rep = IsoRep::trivial(&iso);
    let m = MLambda::new(lam, box_window(1, 1), 1);
    let v = basis_vec(vec![0], 0);
    let once = m.dot_action(&g, &iso, &rep, s, &v).unwrap();
    assert_eq!(once.keys().next().unwrap().0, vec![0]);
    assert_eq!(m.dot_action(&g, &iso, &rep, s, &once).unwrap(), v);
    assert_eq!(m.dot_action(&g, &iso, &rep, g.identity(), &v).unwrap(), v);
    assert!(m
        .dot_action(&g, &iso, &rep, s, &basis_vec(vec![1], 0))
        .is_err());
}

fn special_points() -> Vec<(&'static str, Vec<&'static str>)> {
    vec![
        ("A1", vec!["q^1/2"]),
        ("A1", vec!["-1"]),
        ("A2", vec!["q^1/2", "1"]),
        ("A2", vec!["1", "1"]),
        ("B2", vec!["-1", "q^1/2"]),
        ("D4", vec!["-1", "q^1/2", "-1", "-q^1/2"]),
    ]
}

#[test]
fn dot_action_is_a_group_action() {
    for (label, coords) in special_points() {
        let (d, g) = setup(label);
        let lam = point(&coords);
        let iso = IsotropyGroup::compute(&d, &g, &lam);
        assert!(iso.check_cocycle(&g), "{label}");
        let m = MLambda::new(lam, box_window(d.dim, 2), 1);
        for rep in [IsoRep::trivial(&iso), IsoRep::sign(&iso, &g)] {
            assert!(rep.is_homomorphism(&iso, &g));
            let v = basis_vec(vec![0; d.dim], 0);
            for (w1, _) in &iso.elements {
                for (w2, _) in &iso.elements {
                    let inner = m.dot_action(&g, &iso, &rep, *w2, &v).unwrap();
                    let lhs = m.dot_action(&g, &iso, &rep, *w1, &inner).unwrap();
                    let rhs = m.dot_action(&g, &iso, &rep, g.mul(*w1, *w2), &v).unwrap();
                    assert_eq!(lhs, rhs, "{label} {}", rep.label);
                }
            }
        }
    }
}

#[test]
fn lambda_weight_space_of_zchi_carries_chi() {
    for (label, coords) in special_points() {
        let (d, g) = setup(label);
        let lam = point(&coords);
        let iso = IsotropyGroup::compute(&d, &g, &lam);
        for rep in [IsoRep::trivial(&iso), IsoRep::sign(&iso, &g)] {
            let window = MLambda::new(lam.clone(), BTreeSet::from([vec![0; d.dim]]), 1)
                .saturate(&g, &iso)
                .unwrap();
            let z = InducedModule::new(&g, iso.clone(), rep.clone(), window).unwrap();
            let chi = rep.character();
            for key in z.lambda_weight_space() {
                let v = z_basis(key);
                for (pos, (w, _)) in iso.elements.iter().enumerate() {
                    let got = z.dot_action(&g, *w, &v).unwrap();
                    let expect: ZVec = v
                        .iter()
                        .map(|(k, c)| (k.clone(), c.mul(&chi[pos])))
                        .collect();
                    assert_eq!(got, expect, "{label} {}", rep.label);
                }
            }
        }
    }
}

#[test]
fn zchi_examples() {
    // W^λ = W, trivial χ, one point: a line on which e^x acts by λ(x).
    let (d, g) = setup("A1");
    let lam = point(&["-1"]);
    let iso = IsotropyGroup::compute(&d, &g, &lam);
    assert_eq!(iso.len(), 2);
    let z = InducedModule::new(
        &g,
        iso.clone(),
        IsoRep::trivial(&iso),
        BTreeSet::from([vec![0]]),
    )
    .unwrap();
    assert_eq!(z.dim(), 1);
    let v = z_basis((0, vec![0], 0));
    for x in -2i64..=2 {
        let sign = if x % 2 == 0 { 1 } else { -1 };
        assert_eq!(
            z.act_x(&d, &g, &[x], &v).unwrap(),
            z_basis((0, vec![0], 0))
                .into_keys()
                .map(|k| (k, Scalar::int(sign)))
                .collect()
        );
    }

    // Regular-type induction: two basis vectors per window point.
    let lam = point(&["2"]);
    let iso = IsotropyGroup::compute(&d, &g, &lam);
    assert_eq!(iso.len(), 1);
    let z = InducedModule::new(&g, iso.clone(), IsoRep::trivial(&iso), box_window(1, 1)).unwrap();
    assert_eq!(z.reps.len(), 2);
    assert_eq!(z.dim(), 2 * 3);
    assert_eq!(z.basis().len(), z.dim());
}

/// Brute-force multiplicity of a linear character in the permutation action
/// of `W^λ` on window points: `(1/|G|) Σ_w χ(w) #fix(w)`.
fn multiplicity(
    g: &WeylGroup,
    iso: &IsotropyGroup,
    window: &BTreeSet<Vec<i64>>,
    chi: &[i64],
) -> i64 {
    let mut total = 0;
    for ((w, _), c) in iso.elements.iter().zip(chi) {
        let fixed = window
            .iter()
            .filter(|y| iso.act_shift(g, *w, y).unwrap() == **y)
            .count() as i64;
        total += c * fixed;
    }
    assert_eq!(total % iso.len() as i64, 0);
    total / iso.len() as i64
}

#[test]
fn a2_sign_induction_matches_character_decomposition() {
    let (d, g) = setup("A2");
    let lam = point(&["q^1/2", "1"]);
    let iso = IsotropyGroup::compute(&d, &g, &lam);
    assert_eq!(iso.len(), 2);
    let m0 = MLambda::new(lam.clone(), box_window(2, 1), 1);
    let window = m0.saturate(&g, &iso).unwrap();
    let m = MLambda::new(lam, window.clone(), 1);
    let triv = IsoRep::trivial(&iso);
    let sign = IsoRep::linear("sign", &[rat(1), rat(-1)]);
    assert!(sign.is_homomorphism(&iso, &g));
    let l_triv = m.fixed_space(&g, &iso, &triv).unwrap().len() as i64;
    let l_sign = m.fixed_space(&g, &iso, &sign).unwrap().len() as i64;
    assert_eq!(l_triv, multiplicity(&g, &iso, &window, &[1, 1]));
    assert_eq!(l_sign, multiplicity(&g, &iso, &window, &[1, -1]));
    assert_eq!((l_triv + l_sign) as usize, window.len());
    let (lhs, rhs) = dimension_bookkeeping(&m, &g, &iso, &[triv, sign.clone()]).unwrap();
    assert_eq!(lhs, rhs);

    let z = InducedModule::new(&g, iso.clone(), IsoRep::sign(&iso, &g), window.clone()).unwrap();
    assert_eq!(z.reps.len(), 3);
    assert_eq!(z.dim(), 3 * window.len());
}

#[test]
fn invariants_functor_examples() {
    let (d, g) = setup("A1");
    let lam = point(&["-1"]);
    let iso = IsotropyGroup::compute(&d, &g, &lam);
    let one = BTreeSet::from([vec![0]]);
    let triv = InducedModule::new(&g, iso.clone(), IsoRep::trivial(&iso), one.clone()).unwrap();
    assert_eq!(triv.invariants(&g, d.rank).unwrap().len(), 1);
    let sign = InducedModule::new(&g, iso.clone(), IsoRep::sign(&iso, &g), one).unwrap();
    assert!(sign.invariants(&g, d.rank).unwrap().is_empty());

    // (q^{1/2}) has y_s = −1, so {0} is not saturated.
    let lam = point(&["q^1/2"]);
    let iso = IsotropyGroup::compute(&d, &g, &lam);
    let z = InducedModule::new(
        &g,
        iso.clone(),
        IsoRep::trivial(&iso),
        BTreeSet::from([vec![0]]),
    )
    .unwrap();
    assert!(!z.is_saturated(&g).unwrap());
    assert!(matches!(
        z.invariants(&g, d.rank),
        Err(Error::NotInClass(_))
    ));
    let sat = z.saturate(&g).unwrap();
    assert_eq!(sat, BTreeSet::from([vec![-1], vec![0]]));
    let z = InducedModule::new(
        &g,
        iso,
        IsoRep::trivial(&IsotropyGroup::compute(&d, &g, &lam)),
        sat,
    )
    .unwrap();
    assert_eq!(z.invariants(&g, d.rank).unwrap().len(), 1);
}

#[test]
fn bookkeeping_on_saturated_windows() {
    for (label, coords) in special_points() {
        let (d, g) = setup(label);
        let lam = point(&coords);
        let iso = IsotropyGroup::compute(&d, &g, &lam);
        if iso.len() > 2 {
            continue;
        }
        let window = MLambda::new(lam.clone(), box_window(d.dim, 1), 1)
            .saturate(&g, &iso)
            .unwrap();
        let m = MLambda::new(lam, window, 1);
        let mut irreps = vec![IsoRep::trivial(&iso)];
        if iso.len() == 2 {
            irreps.push(IsoRep::linear("sign", &[rat(1), rat(-1)]));
        }
        let (lhs, rhs) = dimension_bookkeeping(&m, &g, &iso, &irreps).unwrap();
        assert_eq!(lhs, rhs, "{label}");
    }
}

fn coord() -> impl Strategy<Value = &'static str> {
    prop::sample::select(vec![
        "1", "-1", "2", "q^1/2", "-q^1/2", "q^1/3", "3*q^1/4", "1/2",
    ])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn weights_are_distinct_and_the_window_is_cyclic(c in prop::collection::vec(coord(), 2)) {
        let (d, _) = setup("A2");
        let m = MLambda::new(point(&c), box_window(2, 2), 1);
        let weights: BTreeSet<TorusPoint> = m.window.iter().map(|y| m.weight(&d, y)).collect();
        prop_assert_eq!(weights.len(), m.window.len());
        prop_assert_eq!(m.dim(), m.window.len());
        // Every window vector is reached from v_λ by unit shifts inside the window.
        let mut seen = BTreeSet::from([vec![0, 0]]);
        let mut queue = VecDeque::from([basis_vec(vec![0, 0], 0)]);
        while let Some(v) = queue.pop_front() {
            for i in 0..2 {
                for s in [1, -1] {
                    if let Ok(w) = m.act_y(&unit(2, i, s), &v) {
                        let key = w.keys().next().unwrap().0.clone();
                        if seen.insert(key) {
                            queue.push_back(w);
                        }
                    }
                }
            }
        }
        prop_assert_eq!(seen.len(), m.window.len());
    }

    #[test]
    fn torus_acts_through_the_opposite_product(
        a in prop::collection::vec(-1i64..=1, 4),
        b in prop::collection::vec(-1i64..=1, 4),
        c in prop::collection::vec(coord(), 2),
    ) {
        let (d, _) = setup("A2");
        let t = QuantumTorus::from_datum(&d);
        let m = MLambda::new(point(&c), box_window(2, 2), 1);
        let (ea, eb) = (HElement::monomial(a, Scalar::one()), HElement::monomial(b, Scalar::one()));
        let v = basis_vec(vec![0, 0], 0);
        let lhs = m.act_h(&d, &ea.mul(&t, &eb).unwrap(), &v).unwrap();
        let rhs = m.act_h(&d, &eb, &m.act_h(&d, &ea, &v).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn induced_module_respects_cross_relations(
        x in prop::collection::vec(-1i64..=1, 2),
        y in prop::collection::vec(-1i64..=1, 2),
        w in 0usize..6,
        start in 0usize..3,
    ) {
        let (d, g) = setup("A2");
        let lam = point(&["q^1/2", "1"]);
        let iso = IsotropyGroup::compute(&d, &g, &lam);
        let window = MLambda::new(lam, box_window(2, 3), 1).saturate(&g, &iso).unwrap();
        let z = InducedModule::new(&g, iso.clone(), IsoRep::sign(&iso, &g), window).unwrap();
        let v = z_basis((start, vec![0, 0], 0));
        // w e^x w^{-1} = e^{w x}
        let lhs = z.act_weyl(&g, w, &z.act_x(&d, &g, &x, &z.act_weyl(&g, g.inv(w), &v).unwrap()).unwrap()).unwrap();
        prop_assert_eq!(lhs, z.act_x(&d, &g, &g.get(w).act_x(&x), &v).unwrap());
        // w e^y w^{-1} = e^{w y}
        let lhs = z.act_weyl(&g, w, &z.act_y(&g, &y, &z.act_weyl(&g, g.inv(w), &v).unwrap()).unwrap()).unwrap();
        prop_assert_eq!(lhs, z.act_y(&g, &g.get(w).act_y(&y), &v).unwrap());
        // W acts through a group action.
        for u in 0..g.len() {
            let lhs = z.act_weyl(&g, u, &z.act_weyl(&g, w, &v).unwrap()).unwrap();
            prop_assert_eq!(lhs, z.act_weyl(&g, g.mul(u, w), &v).unwrap());
        }
    }
}
