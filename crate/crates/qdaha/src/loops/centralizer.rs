//! The q-centralizer root subsystem `Δ_{q,s}`, the component group
//! `W^λ / W(Δ_{q,s})`, and q-conjugacy of constant loops.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::modules::{IsotropyGroup, TorusPoint};
use crate::rootdata::{RootDatum, WeylGroup};

/// Roots `α` with `α(s) ∈ q^Z`.
pub fn q_centralizer_roots(d: &RootDatum, s: &TorusPoint) -> Vec<usize> {
    (0..d.roots.len())
        .filter(|&k| s.root_value(d, k).as_integral_q_power().is_some())
        .collect()
}

/// The subgroup generated by the reflections in the given roots.
pub fn reflection_subgroup(d: &RootDatum, g: &WeylGroup, roots: &[usize]) -> Vec<usize> {
    let gens: Vec<usize> = roots.iter().map(|&k| g.reflection(d, k)).collect();
    let mut seen = BTreeSet::from([g.identity()]);
    let mut frontier = vec![g.identity()];
    while let Some(w) = frontier.pop() {
        for &r in &gens {
            let u = g.mul(w, r);
            if seen.insert(u) {
                frontier.push(u);
            }
        }
    }
    seen.into_iter().collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct ComponentData {
    /// `W^λ` as Weyl group indices.
    pub isotropy: Vec<usize>,
    pub centralizer_roots: Vec<usize>,
    /// `W(Δ_{q,s})`.
    pub connected: Vec<usize>,
    pub connected_is_normal: bool,
    /// One representative per coset of `W(Δ_{q,s})` in `W^λ`.
    pub transversal: Vec<usize>,
}

impl ComponentData {
    pub fn component_order(&self) -> usize {
        self.transversal.len()
    }
}

pub fn component_weyl(d: &RootDatum, g: &WeylGroup, s: &TorusPoint) -> ComponentData {
    let iso = IsotropyGroup::compute(d, g, s);
    let isotropy: Vec<usize> = iso.elements.iter().map(|(w, _)| *w).collect();
    let centralizer_roots = q_centralizer_roots(d, s);
    let connected = reflection_subgroup(d, g, &centralizer_roots);
    let cset: BTreeSet<usize> = connected.iter().copied().collect();
    let connected_is_normal = isotropy.iter().all(|&w| {
        connected
            .iter()
            .all(|&c| cset.contains(&g.mul(g.mul(w, c), g.inv(w))))
    });
    let mut covered = BTreeSet::new();
    let mut transversal = Vec::new();
    let mut order = isotropy.clone();
    order.sort_by_key(|&w| (g.length(w), w));
    for w in order {
        if covered.contains(&w) {
            continue;
        }
        transversal.push(w);
        for &c in &connected {
            covered.insert(g.mul(w, c));
        }
    }
    ComponentData {
        isotropy,
        centralizer_roots,
        connected,
        connected_is_normal,
        transversal,
    }
}

/// A witness `(w, y)` with `s2 = w(s1)·q^y`, searched over all of `W`.
pub fn constants_equivalent(
    d: &RootDatum,
    g: &WeylGroup,
    s1: &TorusPoint,
    s2: &TorusPoint,
) -> Option<(usize, Vec<i64>)> {
    (0..g.len()).find_map(|w| s2.q_ratio(d, &s1.weyl_act(g, w)).map(|y| (w, y)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::modules::parse_point;
    use crate::rootdata::LatticeChoice;

    #[test]
    fn d4_example() {
        let d = RootDatum::builtin("D4", LatticeChoice::Weight).unwrap();
        let g = WeylGroup::new(&d).unwrap();
        let s = parse_point(&d, &["-1", "q^1/2", "-1", "-q^1/2"].map(String::from)).unwrap();
        let c = component_weyl(&d, &g, &s);
        assert_eq!(c.isotropy.len(), 2);
        assert!(c.centralizer_roots.is_empty());
        assert_eq!(c.connected, vec![g.identity()]);
        assert_eq!(c.component_order(), 2);
    }

    #[test]
    fn identity_point() {
        let d = RootDatum::builtin("A2", LatticeChoice::Weight).unwrap();
        let g = WeylGroup::new(&d).unwrap();
        let s = TorusPoint::identity(2);
        let c = component_weyl(&d, &g, &s);
        assert_eq!(c.centralizer_roots.len(), d.roots.len());
        assert_eq!(c.connected.len(), g.len());
        assert_eq!(c.component_order(), 1);
    }

    #[test]
    fn equivalence_witnesses() {
        let d = RootDatum::builtin("A1", LatticeChoice::Weight).unwrap();
        let g = WeylGroup::new(&d).unwrap();
        let s1 = parse_point(&d, &["q^1/2".to_string()]).unwrap();
        assert_eq!(constants_equivalent(&d, &g, &s1, &s1), Some((0, vec![0])));
        let s2 = parse_point(&d, &["q^1/3".to_string()]).unwrap();
        assert_eq!(constants_equivalent(&d, &g, &s1, &s2), None);
        let s3 = s1.weyl_act(&g, 1).shift(&d, &[2]);
        let (w, y) = constants_equivalent(&d, &g, &s1, &s3).unwrap();
        assert_eq!(s1.weyl_act(&g, w).shift(&d, &y), s3);
    }
}
