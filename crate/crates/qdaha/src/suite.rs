//! The acceptance battery: ten self-contained checks covering every module,
//! each reporting pass/fail with a short detail line. Randomized checks draw
//! from a seeded ChaCha stream, so a seed fixes the whole run.

use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::clifford::{
    builtin_group, clifford_count, weyl_pair, CharacterTable, FiniteGroup, NormalPair,
    DEFAULT_GROUP_BOUND,
};
use crate::daha::{
    check_braid, check_membership, check_quadratic, dl_operator, kappa, paired_residues,
    v_symbolic, Clause, DahaContext, Expr, Operator, VanishingConvention,
};
use crate::error::{Error, Result};
use crate::linalg::rank;
use crate::loops::{
    check_j1, check_j2, constants_equivalent, q_centralizer_roots, q_conjugate, q_normal_form,
    shift_operator, solve_shift_equation, MatrixLoop, ZPoly,
};
use crate::modules::{
    box_window, dimension_bookkeeping, parse_point, IsoRep, IsotropyGroup, MLambda, TorusPoint,
};
use crate::qtorus::{
    simplicity_witness, verify_witness, HElement, QuantumTorus, DEFAULT_SEARCH_BOUND,
};
use crate::rootdata::{LatticeChoice, RootDatum, SkewForm, WeylGroup};
use crate::scalars::{rat, Frac, Poly, QPower, Scalar};
use crate::spherical::{check_absorption, check_spherical, idempotent_e_v, sl2_closed_form};

pub const DEFAULT_SEED: u64 = 20_240_611;
pub const CRITERIA: [u8; 10] = [1, 2, 3, 4, 5, 6, 7, 8, 9, 10];

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SuiteConfig {
    pub seed: u64,
    /// Random instances for the q-Jordan round trips.
    pub jordan_instances: usize,
    /// Random instances for the shift-equation law.
    pub shift_instances: usize,
    /// Random words for the spherical round trip.
    pub spherical_words: usize,
    /// Random elements for the simplicity certificates.
    pub witness_instances: usize,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            seed: DEFAULT_SEED,
            jordan_instances: 100,
            shift_instances: 1000,
            spherical_words: 50,
            witness_instances: 100,
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CriterionResult {
    pub id: u8,
    pub name: String,
    pub pass: bool,
    pub detail: String,
    #[serde(skip)]
    pub millis: u128,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SuiteReport {
    pub schema: String,
    pub seed: u64,
    pub results: Vec<CriterionResult>,
    pub pass: bool,
}

pub fn criterion_name(id: u8) -> &'static str {
    match id {
        1 => "relation suite",
        2 => "idempotent suite",
        3 => "spherical round trip",
        4 => "operator membership",
        5 => "D4 isotropy example",
        6 => "q-Jordan round trips",
        7 => "shift-equation law",
        8 => "module suite",
        9 => "Clifford suite",
        10 => "simplicity certificates",
        _ => "unknown",
    }
}

fn ensure(cond: bool, msg: impl Into<String>) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::Verification(msg.into()))
    }
}

fn rng_for(cfg: &SuiteConfig, id: u8) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(cfg.seed ^ (u64::from(id) << 32))
}

/// Runs one criterion, converting errors into a failing result.
pub fn run_criterion(id: u8, cfg: &SuiteConfig) -> CriterionResult {
    let start = Instant::now();
    let outcome = match id {
        1 => relations(),
        2 => idempotents(),
        3 => spherical_round_trip(cfg),
        4 => membership(),
        5 => d4_example(),
        6 => jordan_round_trips(cfg),
        7 => shift_law(cfg),
        8 => module_suite(),
        9 => clifford_suite(),
        10 => simplicity(cfg),
        _ => Err(Error::NotFound(format!("criterion {id}"))),
    };
    let (pass, detail) = match outcome {
        Ok(d) => (true, d),
        Err(e) => (false, e.to_string()),
    };
    CriterionResult {
        id,
        name: criterion_name(id).into(),
        pass,
        detail,
        millis: start.elapsed().as_millis(),
    }
}

/// Runs the selected criteria on the worker pool; results come back in id order.
pub fn run_suite(cfg: &SuiteConfig, ids: &[u8]) -> SuiteReport {
    let mut results = crate::par::map(ids, |&id| run_criterion(id, cfg));
    results.sort_by_key(|r| r.id);
    SuiteReport {
        schema: "qdaha.suite/1".into(),
        seed: cfg.seed,
        pass: results.iter().all(|r| r.pass),
        results,
    }
}

fn relations() -> Result<String> {
    let v = v_symbolic();
    let mut count = 0;
    for label in ["A1", "A2", "B2"] {
        let ctx = DahaContext::builtin(label, LatticeChoice::Root)?;
        let r = ctx.rank();
        for i in 0..=r {
            ensure(
                check_quadratic(&ctx, i, &v)?,
                format!("{label}: quadratic relation fails at node {i}"),
            )?;
            count += 1;
            for j in i + 1..=r {
                ensure(
                    check_braid(&ctx, i, j, &v)? != Some(false),
                    format!("{label}: braid ({i},{j}) fails"),
                )?;
                count += 1;
            }
        }
    }
    Ok(format!(
        "{count} quadratic and braid identities hold for symbolic v"
    ))
}

fn idempotents() -> Result<String> {
    let v = v_symbolic();
    for label in ["A1", "A2"] {
        let ctx = DahaContext::builtin(label, LatticeChoice::Root)?;
        let e = idempotent_e_v(&ctx, &v)?;
        ensure(
            e.compose(&ctx, &e)?.equals(&e),
            format!("{label}: e_v is not idempotent"),
        )?;
        for i in 1..=ctx.rank() {
            ensure(
                check_absorption(&ctx, i, &v)?,
                format!("{label}: T_{i} e_v ≠ t e_v"),
            )?;
        }
    }
    let ctx = DahaContext::builtin("A1", LatticeChoice::Root)?;
    let e = idempotent_e_v(&ctx, &Frac::one())?;
    let (a, b) = sl2_closed_form()?;
    let s = ctx.g.simple(0);
    ensure(
        e.coeff(s, &[0]) == a && e.coeff(0, &[0]) == b,
        "e does not match the closed form",
    )?;
    ensure(e.len() == 2, "e has extra terms")?;
    ensure(ctx.subst(s, &[0], &a)? == b, "s_α(a) ≠ b")?;
    ensure(a == Frac::one().sub(&b), "a ≠ 1 - b")?;
    Ok("e_v idempotent and absorbing in A1, A2; SL2 closed form matches".into())
}

const A1_GENERATORS: [&str; 5] = ["T0", "T1", "T1^-1", "X(1)", "X(-1)"];

fn spherical_round_trip(cfg: &SuiteConfig) -> Result<String> {
    let ctx = DahaContext::builtin("A1", LatticeChoice::Root)?;
    let one = Frac::one();
    let e = idempotent_e_v(&ctx, &one)?;
    let mut rng = rng_for(cfg, 3);
    for k in 0..cfg.spherical_words {
        let len = rng.gen_range(1..=4);
        let word: Vec<&str> = (0..len)
            .map(|_| A1_GENERATORS[rng.gen_range(0..A1_GENERATORS.len())])
            .collect();
        let word = word.join(" ");
        let h = Expr::parse(&word)?.to_operator(&ctx, &one)?;
        let ehe = e.compose(&ctx, &h)?.compose(&ctx, &e)?;
        let r = check_spherical(&ctx, &ehe)?;
        ensure(
            r.ok,
            format!("word {k} ({word}): e h e fails the spherical test"),
        )?;
        ensure(
            e.compose(&ctx, &ehe)?.compose(&ctx, &e)?.equals(&ehe),
            format!("word {k} ({word}): e(ehe)e ≠ ehe"),
        )?;
    }
    let t1 = Expr::parse("T1")?.to_operator(&ctx, &one)?;
    let r = check_spherical(&ctx, &t1)?;
    ensure(
        !r.ok && !r.failures.is_empty(),
        "T1 should fail with a witness",
    )?;
    let f = &r.failures[0];
    Ok(format!(
        "{} random words pass; T1 fails condition {} at node {} (w={:?}, mu={:?})",
        cfg.spherical_words, f.condition, f.node, f.w, f.mu
    ))
}

fn membership() -> Result<String> {
    let ctx = DahaContext::builtin("A1", LatticeChoice::Root)?;
    let one = Frac::one();
    let gens: Vec<Operator> = A1_GENERATORS
        .iter()
        .map(|w| Expr::parse(w)?.to_operator(&ctx, &one))
        .collect::<Result<_>>()?;
    let mut layer = vec![Operator::identity(&ctx)];
    let mut checked = 0;
    for _ in 0..3 {
        layer = layer
            .iter()
            .flat_map(|w| gens.iter().map(move |g| (w, g)))
            .map(|(w, g)| w.compose(&ctx, g))
            .collect::<Result<_>>()?;
        for o in &layer {
            let r = check_membership(&ctx, o, VanishingConvention::Derived)?;
            ensure(
                r.ok,
                format!("{} fails: {:?}", o.display(&ctx), r.violations),
            )?;
            checked += 1;
        }
    }
    let t1 = dl_operator(&ctx, 1, &one)?;
    let (ra, rb) = paired_residues(&ctx, &t1, 0, &[0], 0, 0)?;
    let k = kappa(&one);
    ensure(
        ra == k.neg() && rb == k && ra.add(&rb).is_zero(),
        "residues of T1 do not cancel as -(t-1/t) + (t-1/t)",
    )?;

    let pole = |tau: Poly| Frac::inv_poly(&Poly::x_int(&[1]).sub(&tau));
    let off = Operator::mult(&ctx, pole(Poly::t_pow(4))?);
    let r = check_membership(&ctx, &off, VanishingConvention::Derived)?;
    ensure(
        r.fails(Clause::Poles),
        "pole off the allowed divisors not detected",
    )?;
    let unpaired = Operator::mult(&ctx, pole(Poly::one())?);
    let r = check_membership(&ctx, &unpaired, VanishingConvention::Derived)?;
    ensure(
        r.fails(Clause::Residues) && !r.fails(Clause::Poles),
        "uncancelled residue not detected",
    )?;
    let bare = Operator::reflection(&ctx, ctx.g.simple(0)).scale(&Frac::from_poly(Poly::t_pow(1)));
    let r = check_membership(&ctx, &bare, VanishingConvention::Derived)?;
    ensure(
        r.fails(Clause::Vanishing) && !r.fails(Clause::Residues),
        "missing vanishing not detected",
    )?;
    Ok(format!(
        "{checked} products pass; residues cancel; three violators fail poles, residues, vanishing"
    ))
}

fn d4_example() -> Result<String> {
    let start = Instant::now();
    let d = RootDatum::builtin("D4", LatticeChoice::Weight)?;
    let g = WeylGroup::new(&d)?;
    let s = parse_point(&d, &["-1", "q^1/2", "-1", "-q^1/2"].map(String::from))?;
    let iso = IsotropyGroup::compute(&d, &g, &s);
    let delta = q_centralizer_roots(&d, &s);
    let secs = start.elapsed().as_secs_f64();
    ensure(iso.len() == 2, format!("|W^λ| = {}", iso.len()))?;
    ensure(delta.is_empty(), format!("|Δ_q,s| = {}", delta.len()))?;
    ensure(secs < 10.0, format!("took {secs:.1}s"))?;
    // Timing stays out of the detail so reports are reproducible.
    Ok("|W^λ| = 2, Δ_q,s empty, under 10 s".into())
}

fn random_qpower(rng: &mut ChaCha8Rng) -> QPower {
    let base = [1, 2, -1, 3][rng.gen_range(0..4)];
    let e = rng.gen_range(-2..=1);
    QPower::constant(&rat(base))
        .expect("nonzero")
        .mul(&QPower::q(rat(e)))
}

fn small_int(rng: &mut ChaCha8Rng) -> Frac {
    Frac::int(rng.gen_range(-3..=3))
}

fn unipotent_rank_profile(b: &[Vec<Frac>]) -> Vec<usize> {
    let n = b.len();
    let nmat: Vec<Vec<Frac>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        b[i][j].sub(&Frac::one())
                    } else {
                        b[i][j].clone()
                    }
                })
                .collect()
        })
        .collect();
    let mut p = nmat.clone();
    let mut out = Vec::new();
    for _ in 0..n {
        out.push(rank(&p));
        p = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| (0..n).fold(Frac::zero(), |acc, k| acc.add(&p[i][k].mul(&nmat[k][j]))))
                    .collect()
            })
            .collect();
    }
    out
}

fn jordan_instance(rng: &mut ChaCha8Rng, d: &RootDatum, g: &WeylGroup) -> Result<()> {
    let s = loop {
        let s: Vec<QPower> = (0..3).map(|_| random_qpower(rng)).collect();
        if check_j2(&s) {
            break s;
        }
    };
    let sf: Vec<Frac> = s.iter().map(QPower::to_scalar).collect::<Result<_>>()?;
    let mut b = MatrixLoop::identity(3);
    for i in 0..3 {
        for j in i + 1..3 {
            if let Some(m) = s[i].div(&s[j]).as_integral_q_power() {
                b.set(i, j, ZPoly::monomial(small_int(rng), m));
            }
        }
    }
    ensure(check_j1(&s, &b)?, "constructed b violates (J1)")?;
    let mut gl = MatrixLoop::identity(3);
    for i in 0..3 {
        for j in i + 1..3 {
            let mut p = ZPoly::zero();
            for m in 0..=3 {
                p.add_term(m, small_int(rng));
            }
            gl.set(i, j, p);
        }
    }
    let sb = MatrixLoop::constant_diag(&sf).mul(&b);
    let h = q_conjugate(&gl, &sb)?;
    let nf = q_normal_form(&h)?;
    let p1 = TorusPoint::new(s.clone());
    let p2 = TorusPoint::new(nf.s.clone());
    ensure(
        constants_equivalent(d, g, &p1, &p2).is_some(),
        "semisimple parts are not equivalent",
    )?;
    let b1 = b.eval_one();
    let b2 = nf.b.eval_one();
    ensure(
        unipotent_rank_profile(&b1) == unipotent_rank_profile(&b2),
        "unipotent parts have different Jordan types",
    )?;
    if nf.s == s {
        let f = nf.f.mul(&gl).eval_one();
        ensure(
            crate::loops::conjugate_by(&f, &b1, &b2)?,
            "F(1) does not conjugate b(1) to b'(1)",
        )?;
    }
    Ok(())
}

fn jordan_round_trips(cfg: &SuiteConfig) -> Result<String> {
    let d = RootDatum::gl(3)?;
    let g = WeylGroup::new(&d)?;
    let mut rng = rng_for(cfg, 6);
    let seeds: Vec<u64> = (0..cfg.jordan_instances).map(|_| rng.gen()).collect();
    let outcomes = crate::par::map(&seeds, |&sd| {
        jordan_instance(&mut ChaCha8Rng::seed_from_u64(sd), &d, &g)
    });
    let failures: Vec<String> = outcomes
        .iter()
        .enumerate()
        .filter_map(|(k, o)| o.as_ref().err().map(|e| format!("#{k}: {e}")))
        .collect();
    ensure(
        failures.is_empty(),
        format!(
            "{} failures; first {}",
            failures.len(),
            failures.first().cloned().unwrap_or_default()
        ),
    )?;
    Ok(format!(
        "{} GL3 instances re-normalized, zero failures",
        cfg.jordan_instances
    ))
}

fn shift_law(cfg: &SuiteConfig) -> Result<String> {
    let mut rng = rng_for(cfg, 7);
    let mut solvable = 0;
    for k in 0..cfg.shift_instances {
        let l = rng.gen_range(-3..=3);
        let mut target = ZPoly::zero();
        for m in -4..=4 {
            if rng.gen_bool(0.5) {
                target.add_term(m, small_int(&mut rng));
            }
        }
        if rng.gen_bool(0.5) {
            let c = target.coeff(l);
            target.add_term(l, c.neg());
        }
        let resonant_zero = target.coeff(l).is_zero();
        let sol = solve_shift_equation(l, &target)?;
        ensure(
            sol.solvable() == resonant_zero,
            format!("instance {k}: solvability disagrees with the resonant coefficient"),
        )?;
        match &sol.solution {
            Some(x) => {
                solvable += 1;
                ensure(
                    shift_operator(l, x) == target,
                    format!("instance {k}: substitution fails"),
                )?;
            }
            None => {
                // The image of the shift operator never meets z^l.
                let mut probe = ZPoly::zero();
                for m in -4..=4 {
                    probe.add_term(m, small_int(&mut rng));
                }
                ensure(
                    shift_operator(l, &probe).coeff(l).is_zero(),
                    format!("instance {k}: image meets z^l"),
                )?;
            }
        }
    }
    Ok(format!(
        "{} instances, {solvable} solvable, law holds",
        cfg.shift_instances
    ))
}

fn module_suite() -> Result<String> {
    let d = RootDatum::builtin("A2", LatticeChoice::Weight)?;
    let g = WeylGroup::new(&d)?;
    let lam = TorusPoint::parse(&["q^1/2", "1"])?;
    let m = MLambda::new(lam.clone(), box_window(2, 2), 1);
    let weights: std::collections::BTreeSet<TorusPoint> =
        m.window.iter().map(|y| m.weight(&d, y)).collect();
    ensure(
        weights.len() == m.window.len(),
        "weights in the window are not pairwise distinct",
    )?;
    let iso = IsotropyGroup::compute(&d, &g, &lam);
    ensure(iso.len() == 2, format!("|W^λ| = {}", iso.len()))?;
    ensure(iso.check_cocycle(&g), "shift cocycle identity fails")?;
    let window = m.saturate(&g, &iso)?;
    let sat = MLambda::new(lam, window, 1);
    let triv = IsoRep::trivial(&iso);
    let sign = IsoRep::linear("sign", &[rat(1), rat(-1)]);
    ensure(sign.is_homomorphism(&iso, &g), "sign is not a character")?;
    let origin = crate::modules::basis_vec(vec![0, 0], 0);
    for rep in [&triv, &sign] {
        for (w1, _) in &iso.elements {
            for (w2, _) in &iso.elements {
                let lhs = sat.dot_action(
                    &g,
                    &iso,
                    rep,
                    *w1,
                    &sat.dot_action(&g, &iso, rep, *w2, &origin)?,
                )?;
                let rhs = sat.dot_action(&g, &iso, rep, g.mul(*w1, *w2), &origin)?;
                ensure(
                    lhs == rhs,
                    format!("dot-action twisted by {} is not a group action", rep.label),
                )?;
            }
        }
    }
    let (lhs, rhs) = dimension_bookkeeping(&sat, &g, &iso, &[triv, sign])?;
    ensure(lhs == rhs, format!("bookkeeping {lhs} ≠ {rhs}"))?;
    Ok(format!(
        "{} distinct weights; dot-action verified; bookkeeping {lhs} = {rhs}",
        weights.len()
    ))
}

fn clifford_suite() -> Result<String> {
    let named = |n: &str| FiniteGroup::from_spec(&builtin_group(n)?, DEFAULT_GROUP_BOUND);
    let mut pairs = vec![
        (
            "S3 > C3",
            NormalPair::from_generators(named("S3")?, &[vec![1, 2, 0]])?,
        ),
        (
            "S3 wr C2 > S3xS3",
            NormalPair::from_generators(named("S3wrC2")?, &builtin_group("S3xS3")?.generators)?,
        ),
    ];
    let d = RootDatum::builtin("D4", LatticeChoice::Weight)?;
    let g = WeylGroup::new(&d)?;
    let s = parse_point(&d, &["-1", "q^1/2", "-1", "-q^1/2"].map(String::from))?;
    pairs.push(("D4 W^λ > W(Δ)", weyl_pair(&d, &g, &s)?.pair));
    let mut parts = Vec::new();
    for (name, pair) in &pairs {
        let c = clifford_count(pair, DEFAULT_GROUP_BOUND)?;
        ensure(
            c.matches,
            format!("{name}: predicted {:?}, direct {}", c.predicted, c.direct),
        )?;
        for grp in [&pair.group, &pair.group.subgroup(&pair.normal)?.0] {
            ensure(
                CharacterTable::compute(grp, DEFAULT_GROUP_BOUND)?.check_orthogonality(),
                format!("{name}: orthogonality"),
            )?;
        }
        parts.push(format!("{name}: {}", c.direct));
    }
    Ok(parts.join("; "))
}

fn random_element(rng: &mut ChaCha8Rng, dim: usize) -> HElement {
    let terms = rng.gen_range(2..=4);
    let mut h = HElement::zero();
    while h.terms.len() < terms {
        let v: Vec<i64> = (0..dim).map(|_| rng.gen_range(-3..=3)).collect();
        let c = loop {
            let c = rng.gen_range(-5..=5);
            if c != 0 {
                break c;
            }
        };
        if !h.terms.contains_key(&v) {
            h.add_term(v, Scalar::int(c));
        }
    }
    h
}

fn simplicity(cfg: &SuiteConfig) -> Result<String> {
    let d = RootDatum::builtin("A2", LatticeChoice::Weight)?;
    let t = QuantumTorus::from_datum(&d);
    let mut rng = rng_for(cfg, 10);
    for k in 0..cfg.witness_instances {
        let h = random_element(&mut rng, t.dim());
        let w = simplicity_witness(&t, &h, DEFAULT_SEARCH_BOUND)?;
        verify_witness(&t, &h, &w)
            .map_err(|e| Error::Verification(format!("instance {k}: {e}")))?;
    }
    let z = rat(0);
    let degenerate = QuantumTorus::from_form(SkewForm::new(vec![
        vec![z.clone(), rat(1), z.clone()],
        vec![rat(-1), z.clone(), z.clone()],
        vec![z.clone(), z.clone(), z],
    ])?);
    let h = HElement::monomial(vec![1, 0, 0], Scalar::one())
        .add(&HElement::monomial(vec![1, 0, 1], Scalar::one()));
    ensure(
        matches!(
            simplicity_witness(&degenerate, &h, DEFAULT_SEARCH_BOUND),
            Err(Error::DegenerateForm(_))
        ),
        "degenerate form not reported",
    )?;
    Ok(format!(
        "{} certificates verified; degenerate form rejected",
        cfg.witness_instances
    ))
}
