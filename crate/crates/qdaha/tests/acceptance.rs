//! Acceptance battery: one PASS/FAIL line per criterion, then independent
//! spot checks of the values each criterion relies on.

use qdaha::clifford::{
    builtin_group, clifford_count, CharacterTable, FiniteGroup, NormalPair, DEFAULT_GROUP_BOUND,
};
use qdaha::daha::{dl_operator, kappa, paired_residues, DahaContext};
use qdaha::loops::component_weyl;
use qdaha::modules::parse_point;
use qdaha::rootdata::{LatticeChoice, RootDatum, WeylGroup};
use qdaha::scalars::{Frac, Poly};
use qdaha::suite::{run_suite, SuiteConfig, CRITERIA};

#[test]
fn acceptance_criteria() {
    let report = run_suite(&SuiteConfig::default(), &CRITERIA);
    for r in &report.results {
        println!(
            "criterion {:>2} {:<26} {} ({} ms) {}",
            r.id,
            r.name,
            if r.pass { "PASS" } else { "FAIL" },
            r.millis,
            r.detail
        );
    }
    assert_eq!(report.results.len(), 10);
    let failed: Vec<u8> = report
        .results
        .iter()
        .filter(|r| !r.pass)
        .map(|r| r.id)
        .collect();
    assert!(failed.is_empty(), "failing criteria: {failed:?}");
}

#[test]
fn residue_values_are_plus_minus_t_minus_inverse() {
    // t - t^{-1}, written out directly rather than through kappa.
    let ctx = DahaContext::builtin("A1", LatticeChoice::Root).unwrap();
    let k = Frac::from_poly(Poly::t_pow(1).sub(&Poly::t_pow(-1)));
    assert_eq!(kappa(&Frac::one()), k);
    let t1 = dl_operator(&ctx, 1, &Frac::one()).unwrap();
    let (a, b) = paired_residues(&ctx, &t1, 0, &[0], 0, 0).unwrap();
    assert_eq!((a, b), (k.neg(), k));
}

#[test]
fn d4_component_group_has_order_two() {
    let d = RootDatum::builtin("D4", LatticeChoice::Weight).unwrap();
    let g = WeylGroup::new(&d).unwrap();
    let s = parse_point(&d, &["-1", "q^1/2", "-1", "-q^1/2"].map(String::from)).unwrap();
    let c = component_weyl(&d, &g, &s);
    assert_eq!(
        (
            c.isotropy.len(),
            c.centralizer_roots.len(),
            c.component_order()
        ),
        (2, 0, 2)
    );
    // The nontrivial element is -1 on the weight lattice.
    let w = c
        .isotropy
        .iter()
        .copied()
        .find(|&w| w != g.identity())
        .unwrap();
    assert_eq!(w, g.longest());
}

#[test]
fn classical_clifford_counts() {
    let named =
        |n: &str| FiniteGroup::from_spec(&builtin_group(n).unwrap(), DEFAULT_GROUP_BOUND).unwrap();
    // #Irr(S3) = 3, #Irr(S3 wr C2) = 9: classical values.
    let s3 = NormalPair::from_generators(named("S3"), &[vec![1, 2, 0]]).unwrap();
    assert_eq!(
        clifford_count(&s3, DEFAULT_GROUP_BOUND).unwrap().predicted,
        Some(3)
    );
    let wr =
        NormalPair::from_generators(named("S3wrC2"), &builtin_group("S3xS3").unwrap().generators)
            .unwrap();
    let c = clifford_count(&wr, DEFAULT_GROUP_BOUND).unwrap();
    assert_eq!((c.predicted, c.orbits.len()), (Some(9), 6));
    // Degrees of S3 wr C2: four linear characters, the induced 2 from
    // triv⊗sgn, two extensions of ρ⊗ρ and two induced from triv⊗ρ, sgn⊗ρ.
    let mut degs = CharacterTable::compute(&named("S3wrC2"), DEFAULT_GROUP_BOUND)
        .unwrap()
        .degrees();
    degs.sort();
    assert_eq!(degs, vec![1, 1, 1, 1, 2, 4, 4, 4, 4]);
}
