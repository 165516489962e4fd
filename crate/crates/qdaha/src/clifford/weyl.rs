//! The pair `W^λ ⊃ W(Δ_{q,s})` coming from a torus point, viewed as an
//! abstract finite group with a normal subgroup.

use std::collections::BTreeSet;

use super::group::FiniteGroup;
use super::NormalPair;
use crate::error::{Error, Result};
use crate::loops::{component_weyl, ComponentData};
use crate::modules::TorusPoint;
use crate::rootdata::{RootDatum, WeylGroup};

#[derive(Clone, Debug)]
pub struct WeylPair {
    pub pair: NormalPair,
    /// Weyl index of each element of `pair.group`.
    pub weyl_index: Vec<usize>,
    pub component: ComponentData,
}

/// `W^λ` with its normal subgroup `W(Δ_{q,s})`.
pub fn weyl_pair(d: &RootDatum, g: &WeylGroup, s: &TorusPoint) -> Result<WeylPair> {
    let component = component_weyl(d, g, s);
    let (group, weyl_index) = FiniteGroup::from_weyl_subset(g, &component.isotropy)?;
    let normal = component
        .connected
        .iter()
        .map(|w| {
            weyl_index
                .iter()
                .position(|x| x == w)
                .ok_or_else(|| Error::Verification("W(Δ) is not inside W^λ".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    let pair = NormalPair::new(group, normal)?;
    Ok(WeylPair {
        pair,
        weyl_index,
        component,
    })
}

/// The stabilizer in `W^λ` of the positive system `Δ_{q,s} ∩ Δ^+`, as
/// indices into the pair's group; this is the complement singled out by a
/// choice of Borel subgroup.
pub fn borel_complement(d: &RootDatum, g: &WeylGroup, wp: &WeylPair) -> Vec<usize> {
    let pos: BTreeSet<usize> = wp
        .component
        .centralizer_roots
        .iter()
        .copied()
        .filter(|&r| d.roots[r].is_positive())
        .collect();
    (0..wp.weyl_index.len())
        .filter(|&i| {
            pos.iter()
                .all(|&r| pos.contains(&g.act_root(d, wp.weyl_index[i], r)))
        })
        .collect()
}

/// For every transversal element `w`, compares conjugation `s_α ↦ w s_α w^{-1}`
/// with the permutation `α ↦ ±wα` of the positive roots of `Δ_{q,s}`.
pub fn conjugation_action_matches(d: &RootDatum, g: &WeylGroup, comp: &ComponentData) -> bool {
    let delta: BTreeSet<usize> = comp.centralizer_roots.iter().copied().collect();
    let pos: Vec<usize> = delta
        .iter()
        .copied()
        .filter(|&r| d.roots[r].is_positive())
        .collect();
    let positive = |r: usize| {
        if d.roots[r].is_positive() {
            r
        } else {
            d.negate(r)
        }
    };
    comp.transversal.iter().all(|&w| {
        let winv = g.inv(w);
        pos.iter().all(|&r| {
            let by_roots = positive(g.act_root(d, w, r));
            if !delta.contains(&by_roots) {
                return false;
            }
            let conj = g.mul(g.mul(w, g.reflection(d, r)), winv);
            let by_group = pos.iter().copied().find(|&t| g.reflection(d, t) == conj);
            by_group == Some(by_roots)
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clifford::{clifford_count, semidirect_structure, DEFAULT_GROUP_BOUND};
    use crate::modules::parse_point;
    use crate::rootdata::LatticeChoice;

    #[test]
    fn d4_pair() {
        let d = RootDatum::builtin("D4", LatticeChoice::Weight).unwrap();
        let g = WeylGroup::new(&d).unwrap();
        let s = parse_point(&d, &["-1", "q^1/2", "-1", "-q^1/2"].map(String::from)).unwrap();
        let wp = weyl_pair(&d, &g, &s).unwrap();
        assert_eq!((wp.pair.group.order(), wp.pair.normal.len()), (2, 1));
        let c = clifford_count(&wp.pair, DEFAULT_GROUP_BOUND).unwrap();
        assert_eq!((c.predicted, c.direct), (Some(2), 2));
        let b = borel_complement(&d, &g, &wp);
        assert!(semidirect_structure(&wp.pair, Some(&b)).split);
        assert!(conjugation_action_matches(&d, &g, &wp.component));
    }

    #[test]
    fn disconnected_examples() {
        for (ty, pt, comp) in [
            ("A3", vec!["1", "-1", "1"], 2),
            ("D4", vec!["1", "-1", "1", "1"], 4),
            ("D4", vec!["q^1/2", "-1", "1", "1"], 4),
        ] {
            let d = RootDatum::builtin(ty, LatticeChoice::Root).unwrap();
            let g = WeylGroup::new(&d).unwrap();
            let pt: Vec<String> = pt.into_iter().map(String::from).collect();
            let s = parse_point(&d, &pt).unwrap();
            let wp = weyl_pair(&d, &g, &s).unwrap();
            assert!(!wp.component.centralizer_roots.is_empty());
            assert_eq!(wp.component.component_order(), comp);
            assert!(conjugation_action_matches(&d, &g, &wp.component));
            let b = borel_complement(&d, &g, &wp);
            let sd = semidirect_structure(&wp.pair, Some(&b));
            assert_eq!(sd.complement.as_deref(), Some(&b[..]));
            let c = clifford_count(&wp.pair, DEFAULT_GROUP_BOUND).unwrap();
            assert!(c.matches, "{ty} {pt:?}: {c:?}");
        }
    }
}
