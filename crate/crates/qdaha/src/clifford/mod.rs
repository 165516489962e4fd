//! Finite-group character theory and Clifford-theory counting for a group
//! relative to a normal subgroup: orbits of the group on the irreducible
//! characters of the subgroup, their stabilizers, the extension test, and
//! the predicted number of irreducible characters of the whole group.
//!
//! Everything here is group-theoretic and "pre-admissibility": no geometric
//! input is used.

mod character;
mod cyclotomic;
mod group;
mod weyl;

pub use character::{CharacterTable, CharacterTableJson, ClassInfo};
pub use cyclotomic::{cyclotomic_poly, Cyc};
pub use group::{builtin_group, FiniteGroup, GroupSpec, BUILTIN_GROUPS, DEFAULT_GROUP_BOUND};
pub use weyl::{borel_complement, conjugation_action_matches, weyl_pair, WeylPair};

use std::collections::BTreeSet;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A group together with a subgroup declared normal.
#[derive(Clone, Debug)]
pub struct NormalPair {
    pub group: FiniteGroup,
    /// Elements of the normal subgroup, as indices into `group`.
    pub normal: Vec<usize>,
}

impl NormalPair {
    pub fn new(group: FiniteGroup, normal: Vec<usize>) -> Result<Self> {
        let mut normal = normal;
        normal.sort_unstable();
        normal.dedup();
        if !group.is_subgroup(&normal) {
            return Err(Error::Verification(
                "declared subgroup is not closed".into(),
            ));
        }
        if !group.is_normal(&normal) {
            return Err(Error::Verification(
                "declared subgroup is not normal".into(),
            ));
        }
        Ok(NormalPair { group, normal })
    }

    /// The normal subgroup generated by permutations inside a permutation group.
    pub fn from_generators(group: FiniteGroup, gens: &[Vec<usize>]) -> Result<Self> {
        let idx = gens
            .iter()
            .map(|p| {
                group
                    .find_perm(p)
                    .ok_or_else(|| Error::Verification(format!("{p:?} is not in the group")))
            })
            .collect::<Result<Vec<_>>>()?;
        let normal = group.generated(&idx);
        Self::new(group, normal)
    }
}

#[derive(Clone, Debug)]
pub struct CliffordOrbits {
    pub normal_table: CharacterTable,
    /// Each orbit lists row indices of `normal_table`.
    pub orbits: Vec<Vec<usize>>,
    /// Stabilizer in the big group of the first character of each orbit.
    pub stabilizers: Vec<Vec<usize>>,
}

/// Orbits of `G` on `Irr(N)` under `φ^g(x) = φ(g x g^{-1})`.
pub fn clifford_orbits(pair: &NormalPair, bound: usize) -> Result<CliffordOrbits> {
    let g = &pair.group;
    let (nsub, emb) = g.subgroup(&pair.normal)?;
    let table = CharacterTable::compute(&nsub, bound)?;
    let back = |x: usize| emb.binary_search(&x).expect("element of N");
    let k = table.len();
    // action[g][φ] = index of φ^g
    let mut action = vec![vec![0usize; k]; g.order()];
    for (h, row) in action.iter_mut().enumerate() {
        let perm: Vec<usize> = table
            .classes
            .iter()
            .map(|c| table.class_of[back(g.conj(h, emb[c.rep]))])
            .collect();
        for (phi, slot) in row.iter_mut().enumerate() {
            let image: Vec<&Cyc> = perm.iter().map(|&c| &table.chars[phi][c]).collect();
            *slot = (0..k)
                .find(|&psi| table.chars[psi].iter().zip(&image).all(|(a, b)| a == *b))
                .ok_or_else(|| {
                    Error::Verification("conjugate character not in the table".into())
                })?;
        }
    }
    let mut seen = BTreeSet::new();
    let mut orbits = Vec::new();
    let mut stabilizers = Vec::new();
    for phi in 0..k {
        if seen.contains(&phi) {
            continue;
        }
        let orbit: BTreeSet<usize> = action.iter().map(|row| row[phi]).collect();
        seen.extend(orbit.iter().copied());
        orbits.push(orbit.into_iter().collect());
        stabilizers.push((0..g.order()).filter(|&h| action[h][phi] == phi).collect());
    }
    Ok(CliffordOrbits {
        normal_table: table,
        orbits,
        stabilizers,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitReport {
    pub size: usize,
    pub representative_degree: usize,
    pub stabilizer_order: usize,
    /// Whether the representative extends to its stabilizer.
    pub extends: bool,
    /// `#Irr(W^φ / W∘)`, counted only for extendable orbits.
    pub contribution: Option<usize>,
    /// `#{χ ∈ Irr(G) : ⟨χ|_N, φ⟩ ≠ 0}` from the direct table.
    pub direct: usize,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CliffordCount {
    pub schema: String,
    pub group_order: usize,
    pub normal_order: usize,
    pub orbits: Vec<OrbitReport>,
    /// Sum of contributions; `None` when some orbit is projective.
    pub predicted: Option<usize>,
    pub direct: usize,
    pub matches: bool,
    pub projective_orbits: usize,
    pub note: String,
}

/// Clifford-theory prediction for `#Irr(G)` compared with the direct table.
pub fn clifford_count(pair: &NormalPair, bound: usize) -> Result<CliffordCount> {
    let g = &pair.group;
    let co = clifford_orbits(pair, bound)?;
    let big = CharacterTable::compute(g, bound)?;
    let nt = &co.normal_table;
    let (_, emb) = g.subgroup(&pair.normal)?;
    let m = big.conductor;
    // Restrictions of big characters to N, lifted to the big conductor.
    let restricted: Vec<Vec<Cyc>> = (0..big.len())
        .map(|i| emb.iter().map(|&x| big.value(i, x).clone()).collect())
        .collect();
    let phi_values =
        |phi: usize| -> Vec<Cyc> { (0..emb.len()).map(|x| nt.value(phi, x).lift(m)).collect() };
    let mut orbits = Vec::new();
    for (orbit, stab) in co.orbits.iter().zip(&co.stabilizers) {
        let phi = orbit[0];
        let pv = phi_values(phi);
        let direct = restricted
            .iter()
            .filter(|r| !big.inner_on(r, &pv).is_zero())
            .count();
        let (sg, semb) = g.subgroup(stab)?;
        let st = CharacterTable::compute(&sg, bound)?;
        let ms = st.conductor;
        let extends = (0..st.len()).any(|i| {
            emb.iter().enumerate().all(|(xi, &x)| {
                let pos = semb.binary_search(&x).expect("N lies in the stabilizer");
                st.value(i, pos).lift(num_integer::lcm(ms, m))
                    == pv[xi].lift(num_integer::lcm(ms, m))
            })
        });
        let nin: Vec<usize> = pair
            .normal
            .iter()
            .map(|x| semb.binary_search(x).expect("N in stabilizer"))
            .collect();
        let contribution = if extends {
            Some(sg.quotient(&nin)?.0.class_number())
        } else {
            None
        };
        orbits.push(OrbitReport {
            size: orbit.len(),
            representative_degree: nt.degree(phi),
            stabilizer_order: stab.len(),
            extends,
            contribution,
            direct,
        });
    }
    let projective_orbits = orbits.iter().filter(|o| !o.extends).count();
    let predicted = orbits.iter().map(|o| o.contribution).sum::<Option<usize>>();
    let direct = big.len();
    Ok(CliffordCount {
        schema: "qdaha.clifford_count/1".into(),
        group_order: g.order(),
        normal_order: pair.normal.len(),
        matches: predicted == Some(direct),
        orbits,
        predicted,
        direct,
        projective_orbits,
        note: "pre-admissibility: group-theoretic counts only".into(),
    })
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SemidirectReport {
    pub schema: String,
    pub quotient_order: usize,
    /// One representative per coset of the normal subgroup.
    pub transversal: Vec<usize>,
    /// A complement, when one is found.
    pub complement: Option<Vec<usize>>,
    pub split: bool,
    /// Element orders occurring in each nontrivial coset, reported when no
    /// complement is found.
    pub extension_data: Vec<Vec<usize>>,
}

fn is_complement(g: &FiniteGroup, normal: &BTreeSet<usize>, q: usize, h: &[usize]) -> bool {
    h.len() == q && h.iter().filter(|x| normal.contains(x)).count() == 1 && g.is_subgroup(h)
}

/// A complement to the normal subgroup, checking `candidate` first and then
/// searching subgroups generated by at most two elements.
pub fn semidirect_structure(pair: &NormalPair, candidate: Option<&[usize]>) -> SemidirectReport {
    let g = &pair.group;
    let nset: BTreeSet<usize> = pair.normal.iter().copied().collect();
    let q = g.order() / pair.normal.len();
    let (_, coset_of) = g.quotient(&pair.normal).expect("pair is normal");
    let mut transversal = vec![usize::MAX; q];
    for x in 0..g.order() {
        if transversal[coset_of[x]] == usize::MAX {
            transversal[coset_of[x]] = x;
        }
    }
    let mut complement = candidate
        .map(|c| {
            let mut c = c.to_vec();
            c.sort_unstable();
            c.dedup();
            c
        })
        .filter(|c| is_complement(g, &nset, q, c));
    if complement.is_none() {
        let cands: Vec<usize> = (0..g.order())
            .filter(|&x| q.is_multiple_of(g.element_order(x)))
            .collect();
        'search: for (i, &a) in cands.iter().enumerate() {
            let h = g.generated(&[a]);
            if is_complement(g, &nset, q, &h) {
                complement = Some(h);
                break;
            }
            if h.len() >= q || h.iter().filter(|x| nset.contains(x)).count() > 1 {
                continue;
            }
            for &b in &cands[i + 1..] {
                let h = g.generated(&[a, b]);
                if is_complement(g, &nset, q, &h) {
                    complement = Some(h);
                    break 'search;
                }
            }
        }
    }
    if let Some(h) = &complement {
        for &x in h {
            transversal[coset_of[x]] = x;
        }
    }
    let extension_data = if complement.is_some() {
        Vec::new()
    } else {
        (1..q)
            .map(|c| {
                (0..g.order())
                    .filter(|&x| coset_of[x] == c)
                    .map(|x| g.element_order(x))
                    .collect::<BTreeSet<_>>()
                    .into_iter()
                    .collect()
            })
            .collect()
    };
    SemidirectReport {
        schema: "qdaha.semidirect/1".into(),
        quotient_order: q,
        transversal,
        split: complement.is_some(),
        complement,
        extension_data,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn group(name: &str) -> FiniteGroup {
        FiniteGroup::from_spec(&builtin_group(name).unwrap(), DEFAULT_GROUP_BOUND).unwrap()
    }

    fn s3_c3() -> NormalPair {
        NormalPair::from_generators(group("S3"), &[vec![1, 2, 0]]).unwrap()
    }

    #[test]
    fn s3_over_c3() {
        let pair = s3_c3();
        let o = clifford_orbits(&pair, DEFAULT_GROUP_BOUND).unwrap();
        let mut sizes: Vec<usize> = o.orbits.iter().map(Vec::len).collect();
        sizes.sort();
        assert_eq!(sizes, vec![1, 2]);
        let c = clifford_count(&pair, DEFAULT_GROUP_BOUND).unwrap();
        assert_eq!(c.predicted, Some(3));
        assert!(c.matches);
        let fixed = c.orbits.iter().find(|o| o.size == 1).unwrap();
        assert_eq!((fixed.contribution, fixed.stabilizer_order), (Some(2), 6));
        let moved = c.orbits.iter().find(|o| o.size == 2).unwrap();
        assert_eq!((moved.contribution, moved.stabilizer_order), (Some(1), 3));
        let s = semidirect_structure(&pair, None);
        assert!(s.split);
        assert_eq!(s.complement.unwrap().len(), 2);
    }

    #[test]
    fn wreath_product() {
        let gens = builtin_group("S3xS3").unwrap().generators;
        let pair = NormalPair::from_generators(group("S3wrC2"), &gens).unwrap();
        let o = clifford_orbits(&pair, DEFAULT_GROUP_BOUND).unwrap();
        assert_eq!(o.orbits.len(), 6);
        assert_eq!(o.orbits.iter().filter(|x| x.len() == 1).count(), 3);
        let c = clifford_count(&pair, DEFAULT_GROUP_BOUND).unwrap();
        assert_eq!((c.predicted, c.direct), (Some(9), 9));
    }

    #[test]
    fn trivial_quotient() {
        let g = group("S4");
        let all: Vec<usize> = (0..g.order()).collect();
        let pair = NormalPair::new(g, all).unwrap();
        let o = clifford_orbits(&pair, DEFAULT_GROUP_BOUND).unwrap();
        assert!(o.orbits.iter().all(|x| x.len() == 1));
        assert!(o.stabilizers.iter().all(|s| s.len() == 24));
        let c = clifford_count(&pair, DEFAULT_GROUP_BOUND).unwrap();
        assert_eq!(c.predicted, Some(5));
        let s = semidirect_structure(&pair, None);
        assert_eq!(s.complement, Some(vec![0]));
    }

    #[test]
    fn non_normal_rejected() {
        assert!(NormalPair::from_generators(group("S3"), &[vec![1, 0, 2]]).is_err());
    }

    #[test]
    fn projective_case_detected() {
        // Q8 ⊂ ... : the quaternion group over its centre has C2×C2 quotient;
        // a faithful character of the centre does not extend.
        let q8 = FiniteGroup::from_permutations(
            8,
            &[vec![1, 2, 3, 0, 5, 6, 7, 4], vec![4, 7, 6, 5, 2, 1, 0, 3]],
            DEFAULT_GROUP_BOUND,
        )
        .unwrap();
        assert_eq!(q8.order(), 8);
        let centre: Vec<usize> = (0..8)
            .filter(|&z| (0..8).all(|g| q8.mul(g, z) == q8.mul(z, g)))
            .collect();
        assert_eq!(centre.len(), 2);
        let pair = NormalPair::new(q8, centre).unwrap();
        let c = clifford_count(&pair, DEFAULT_GROUP_BOUND).unwrap();
        assert_eq!(c.projective_orbits, 1);
        assert_eq!(c.predicted, None);
        assert!(!c.matches);
        assert_eq!(c.direct, 5);
        let s = semidirect_structure(&pair, None);
        assert!(!s.split);
    }
}
