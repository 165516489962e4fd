//! Finite groups given by a full multiplication table.

use std::collections::{BTreeSet, HashMap, VecDeque};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rootdata::WeylGroup;

/// Default cap on group orders handled by the character machinery.
pub const DEFAULT_GROUP_BOUND: usize = 2000;

/// A finite group with elements `0..order`, identity `0`.
#[derive(Clone, Debug)]
pub struct FiniteGroup {
    order: usize,
    table: Vec<u32>,
    inverse: Vec<usize>,
    /// Optional permutation realization, one image list per element.
    pub perms: Option<Vec<Vec<usize>>>,
}

/// JSON group description: permutation generators on `0..degree`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GroupSpec {
    #[serde(default)]
    pub degree: Option<usize>,
    pub generators: Vec<Vec<usize>>,
}

fn compose(a: &[usize], b: &[usize]) -> Vec<usize> {
    // (a·b)(x) = a(b(x)): apply b first.
    b.iter().map(|&x| a[x]).collect()
}

impl FiniteGroup {
    /// Builds the group from a multiplication table, validating the axioms.
    pub fn from_table(order: usize, table: Vec<u32>) -> Result<Self> {
        if order == 0 || table.len() != order * order {
            return Err(Error::Dimension(format!(
                "table of size {} for order {order}",
                table.len()
            )));
        }
        if table.iter().any(|&x| x as usize >= order) {
            return Err(Error::Verification("table entry out of range".into()));
        }
        let m = |a: usize, b: usize| table[a * order + b] as usize;
        if (0..order).any(|a| m(0, a) != a || m(a, 0) != a) {
            return Err(Error::Verification("element 0 is not the identity".into()));
        }
        let mut inverse = vec![usize::MAX; order];
        for a in 0..order {
            inverse[a] = (0..order)
                .find(|&b| m(a, b) == 0)
                .ok_or_else(|| Error::Verification(format!("element {a} has no inverse")))?;
        }
        for a in 0..order {
            for b in 0..order {
                for c in 0..order {
                    if m(m(a, b), c) != m(a, m(b, c)) {
                        return Err(Error::Verification("table is not associative".into()));
                    }
                }
            }
        }
        Ok(FiniteGroup {
            order,
            table,
            inverse,
            perms: None,
        })
    }

    fn from_table_unchecked(order: usize, table: Vec<u32>) -> Self {
        let mut inverse = vec![0; order];
        for a in 0..order {
            for b in 0..order {
                if table[a * order + b] == 0 {
                    inverse[a] = b;
                    break;
                }
            }
        }
        FiniteGroup {
            order,
            table,
            inverse,
            perms: None,
        }
    }

    /// Closure of permutation generators, refusing groups above `bound`.
    pub fn from_permutations(degree: usize, gens: &[Vec<usize>], bound: usize) -> Result<Self> {
        for p in gens {
            let set: BTreeSet<usize> = p.iter().copied().collect();
            if p.len() != degree || set.len() != degree || set.iter().any(|&x| x >= degree) {
                return Err(Error::Parse(format!(
                    "{p:?} is not a permutation of 0..{degree}"
                )));
            }
        }
        let id: Vec<usize> = (0..degree).collect();
        let mut elems = vec![id.clone()];
        let mut index: HashMap<Vec<usize>, usize> = HashMap::from([(id, 0)]);
        let mut queue = VecDeque::from([0usize]);
        while let Some(k) = queue.pop_front() {
            for s in gens {
                let p = compose(&elems[k], s);
                if !index.contains_key(&p) {
                    if elems.len() >= bound {
                        return Err(Error::TooLarge(bound));
                    }
                    index.insert(p.clone(), elems.len());
                    queue.push_back(elems.len());
                    elems.push(p);
                }
            }
        }
        let n = elems.len();
        let mut table = vec![0u32; n * n];
        for a in 0..n {
            for b in 0..n {
                table[a * n + b] = index[&compose(&elems[a], &elems[b])] as u32;
            }
        }
        let mut g = Self::from_table_unchecked(n, table);
        g.perms = Some(elems);
        Ok(g)
    }

    pub fn from_spec(spec: &GroupSpec, bound: usize) -> Result<Self> {
        let degree = spec
            .degree
            .or_else(|| spec.generators.first().map(Vec::len))
            .unwrap_or(1);
        Self::from_permutations(degree, &spec.generators, bound)
    }

    /// The subgroup of a Weyl group on the given element indices; returns the
    /// group and, for each new element, the Weyl index it came from.
    pub fn from_weyl_subset(g: &WeylGroup, subset: &[usize]) -> Result<(Self, Vec<usize>)> {
        let mut elems: Vec<usize> = subset.to_vec();
        elems.sort_unstable();
        elems.dedup();
        let id = g.identity();
        let pos = elems
            .iter()
            .position(|&w| w == id)
            .ok_or_else(|| Error::Verification("subset lacks the identity".into()))?;
        elems.swap(0, pos);
        let index: HashMap<usize, usize> = elems.iter().enumerate().map(|(i, &w)| (w, i)).collect();
        let n = elems.len();
        let mut table = vec![0u32; n * n];
        for a in 0..n {
            for b in 0..n {
                let p = g.mul(elems[a], elems[b]);
                table[a * n + b] = *index
                    .get(&p)
                    .ok_or_else(|| Error::Verification("subset is not closed".into()))?
                    as u32;
            }
        }
        Ok((Self::from_table_unchecked(n, table), elems))
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b] as usize
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn conj(&self, g: usize, x: usize) -> usize {
        self.mul(self.mul(g, x), self.inv(g))
    }

    pub fn pow(&self, a: usize, k: usize) -> usize {
        (0..k).fold(0, |acc, _| self.mul(acc, a))
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn exponent(&self) -> usize {
        (0..self.order).fold(1, |e, a| num_integer::lcm(e, self.element_order(a)))
    }

    /// Subgroup generated by `gens`, as a sorted element list.
    pub fn generated(&self, gens: &[usize]) -> Vec<usize> {
        let mut seen = BTreeSet::from([0usize]);
        let mut queue = VecDeque::from([0usize]);
        while let Some(x) = queue.pop_front() {
            for &s in gens {
                let y = self.mul(x, s);
                if seen.insert(y) {
                    queue.push_back(y);
                }
            }
        }
        seen.into_iter().collect()
    }

    pub fn is_subgroup(&self, elems: &[usize]) -> bool {
        let set: BTreeSet<usize> = elems.iter().copied().collect();
        set.contains(&0)
            && set
                .iter()
                .all(|&a| set.iter().all(|&b| set.contains(&self.mul(a, b))))
    }

    pub fn is_normal(&self, elems: &[usize]) -> bool {
        let set: BTreeSet<usize> = elems.iter().copied().collect();
        self.is_subgroup(elems)
            && (0..self.order).all(|g| set.iter().all(|&x| set.contains(&self.conj(g, x))))
    }

    /// Restriction of the table to a subgroup, with the identity first.
    /// Returns the subgroup and the embedding into `self`.
    pub fn subgroup(&self, elems: &[usize]) -> Result<(FiniteGroup, Vec<usize>)> {
        if !self.is_subgroup(elems) {
            return Err(Error::Verification(
                "elements do not form a subgroup".into(),
            ));
        }
        let mut emb: Vec<usize> = elems
            .iter()
            .copied()
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        // 0 is the smallest index, so it is already first.
        debug_assert_eq!(emb[0], 0);
        emb.dedup();
        let back: HashMap<usize, usize> = emb.iter().enumerate().map(|(i, &x)| (x, i)).collect();
        let n = emb.len();
        let mut table = vec![0u32; n * n];
        for a in 0..n {
            for b in 0..n {
                table[a * n + b] = back[&self.mul(emb[a], emb[b])] as u32;
            }
        }
        let mut h = Self::from_table_unchecked(n, table);
        h.perms = self
            .perms
            .as_ref()
            .map(|p| emb.iter().map(|&x| p[x].clone()).collect());
        Ok((h, emb))
    }

    /// Locates a permutation among the elements, if a realization is known.
    pub fn find_perm(&self, p: &[usize]) -> Option<usize> {
        self.perms.as_ref()?.iter().position(|q| q == p)
    }

    /// Conjugacy classes, sorted by their smallest element (so the identity
    /// class comes first), together with the class index of every element.
    pub fn conjugacy_classes(&self) -> (Vec<Vec<usize>>, Vec<usize>) {
        let mut class_of = vec![usize::MAX; self.order];
        let mut classes = Vec::new();
        for x in 0..self.order {
            if class_of[x] != usize::MAX {
                continue;
            }
            let c: BTreeSet<usize> = (0..self.order).map(|g| self.conj(g, x)).collect();
            for &y in &c {
                class_of[y] = classes.len();
            }
            classes.push(c.into_iter().collect());
        }
        (classes, class_of)
    }

    /// Number of conjugacy classes, by counting commuting pairs.
    pub fn class_number(&self) -> usize {
        let pairs = (0..self.order)
            .map(|a| {
                (0..self.order)
                    .filter(|&b| self.mul(a, b) == self.mul(b, a))
                    .count()
            })
            .sum::<usize>();
        pairs / self.order
    }

    /// The quotient by a normal subgroup, with the coset index of each element.
    pub fn quotient(&self, normal: &[usize]) -> Result<(FiniteGroup, Vec<usize>)> {
        if !self.is_normal(normal) {
            return Err(Error::Verification("subgroup is not normal".into()));
        }
        let mut coset_of = vec![usize::MAX; self.order];
        let mut reps = Vec::new();
        for g in 0..self.order {
            if coset_of[g] != usize::MAX {
                continue;
            }
            for &n in normal {
                coset_of[self.mul(g, n)] = reps.len();
            }
            reps.push(g);
        }
        let k = reps.len();
        let mut table = vec![0u32; k * k];
        for a in 0..k {
            for b in 0..k {
                table[a * k + b] = coset_of[self.mul(reps[a], reps[b])] as u32;
            }
        }
        Ok((Self::from_table_unchecked(k, table), coset_of))
    }
}

/// Built-in permutation groups by name.
pub fn builtin_group(name: &str) -> Result<GroupSpec> {
    let spec = |degree: usize, gens: Vec<Vec<usize>>| GroupSpec {
        degree: Some(degree),
        generators: gens,
    };
    Ok(match name {
        "C1" => spec(1, vec![]),
        "C2" => spec(2, vec![vec![1, 0]]),
        "C3" => spec(3, vec![vec![1, 2, 0]]),
        "S3" => spec(3, vec![vec![1, 0, 2], vec![1, 2, 0]]),
        "S4" => spec(4, vec![vec![1, 0, 2, 3], vec![1, 2, 3, 0]]),
        "S3xS3" => spec(
            6,
            vec![
                vec![1, 0, 2, 3, 4, 5],
                vec![1, 2, 0, 3, 4, 5],
                vec![0, 1, 2, 4, 3, 5],
                vec![0, 1, 2, 4, 5, 3],
            ],
        ),
        "S3wrC2" => spec(
            6,
            vec![
                vec![1, 0, 2, 3, 4, 5],
                vec![1, 2, 0, 3, 4, 5],
                vec![0, 1, 2, 4, 3, 5],
                vec![0, 1, 2, 4, 5, 3],
                vec![3, 4, 5, 0, 1, 2],
            ],
        ),
        // Hyperoctahedral group of rank 4 acting on ±e_i; the even-sign
        // subgroup is W(D4).
        "WB4" => spec(
            8,
            vec![
                vec![1, 0, 2, 3, 5, 4, 6, 7],
                vec![1, 2, 3, 0, 5, 6, 7, 4],
                vec![4, 1, 2, 3, 0, 5, 6, 7],
            ],
        ),
        "WD4" => spec(
            8,
            vec![
                vec![1, 0, 2, 3, 5, 4, 6, 7],
                vec![0, 2, 1, 3, 4, 6, 5, 7],
                vec![0, 1, 3, 2, 4, 5, 7, 6],
                vec![0, 1, 7, 6, 4, 5, 3, 2],
            ],
        ),
        other => return Err(Error::NotFound(format!("built-in group {other}"))),
    })
}

pub const BUILTIN_GROUPS: &[&str] = &[
    "C1", "C2", "C3", "S3", "S4", "S3xS3", "S3wrC2", "WB4", "WD4",
];

#[cfg(test)]
mod tests {
    use super::*;

    fn named(name: &str) -> FiniteGroup {
        FiniteGroup::from_spec(&builtin_group(name).unwrap(), DEFAULT_GROUP_BOUND).unwrap()
    }

    #[test]
    fn orders() {
        assert_eq!(named("S3").order(), 6);
        assert_eq!(named("S3wrC2").order(), 72);
        assert_eq!(named("WB4").order(), 384);
        assert_eq!(named("WD4").order(), 192);
    }

    #[test]
    fn classes_and_quotients() {
        let g = named("S3");
        let (classes, _) = g.conjugacy_classes();
        assert_eq!(classes.len(), 3);
        assert_eq!(g.class_number(), 3);
        let c3 = g.generated(&[g.find_perm(&[1, 2, 0]).unwrap()]);
        assert!(g.is_normal(&c3));
        let (q, _) = g.quotient(&c3).unwrap();
        assert_eq!(q.order(), 2);
        let c2 = g.generated(&[g.find_perm(&[1, 0, 2]).unwrap()]);
        assert!(g.is_subgroup(&c2) && !g.is_normal(&c2));
    }

    #[test]
    fn bad_tables_rejected() {
        assert!(FiniteGroup::from_table(2, vec![0, 1, 1, 1]).is_err());
        assert!(FiniteGroup::from_table(2, vec![0, 1, 1, 0]).is_ok());
    }
}
