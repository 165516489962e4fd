//! Finite Weyl groups as integer matrices on X and Y.

use std::collections::HashMap;

use super::datum::RootDatum;
use crate::error::{Error, Result};
use crate::linalg::IMat;

pub const DEFAULT_WEYL_BOUND: usize = 10_000;

#[derive(Clone, Debug)]
pub struct WeylElement {
    /// Matrix of the action on X coordinates.
    pub x: IMat,
    /// Matrix of the contragredient action on Y coordinates.
    pub y: IMat,
    /// A reduced word; `word[0]` acts last.
    pub word: Vec<usize>,
}

impl WeylElement {
    pub fn length(&self) -> usize {
        self.word.len()
    }

    pub fn act_x(&self, v: &[i64]) -> Vec<i64> {
        self.x.apply(v)
    }

    pub fn act_y(&self, v: &[i64]) -> Vec<i64> {
        self.y.apply(v)
    }
}

/// Complete enumeration with multiplication by lookup.
#[derive(Clone, Debug)]
pub struct WeylGroup {
    pub elements: Vec<WeylElement>,
    index: HashMap<IMat, usize>,
    inverse: Vec<usize>,
    /// `right[i][w]` is the index of `w s_i`.
    right: Vec<Vec<usize>>,
    /// `left[i][w]` is the index of `s_i w`.
    left: Vec<Vec<usize>>,
}

impl WeylGroup {
    pub fn new(d: &RootDatum) -> Result<Self> {
        Self::with_bound(d, DEFAULT_WEYL_BOUND)
    }

    /// Breadth-first enumeration by right multiplication with simple
    /// reflections; the BFS depth is the length and the BFS path a reduced word.
    pub fn with_bound(d: &RootDatum, bound: usize) -> Result<Self> {
        let id = WeylElement {
            x: IMat::identity(d.dim),
            y: IMat::identity(d.dim),
            word: vec![],
        };
        let mut elements = vec![id.clone()];
        let mut index = HashMap::new();
        index.insert(id.x.clone(), 0);
        let mut k = 0;
        while k < elements.len() {
            for i in 0..d.rank {
                let w = &elements[k];
                let x = w.x.mul(&d.refl_x[i]);
                if index.contains_key(&x) {
                    continue;
                }
                if elements.len() >= bound {
                    return Err(Error::TooLarge(bound));
                }
                let mut word = w.word.clone();
                word.push(i);
                let y = w.y.mul(&d.refl_y[i]);
                index.insert(x.clone(), elements.len());
                elements.push(WeylElement { x, y, word });
            }
            k += 1;
        }
        let n = elements.len();
        let mut right = vec![vec![0; n]; d.rank];
        let mut left = vec![vec![0; n]; d.rank];
        for i in 0..d.rank {
            for (w, e) in elements.iter().enumerate() {
                right[i][w] = index[&e.x.mul(&d.refl_x[i])];
                left[i][w] = index[&d.refl_x[i].mul(&e.x)];
            }
        }
        let mut inverse = vec![0; n];
        for (w, e) in elements.iter().enumerate() {
            let mut v = 0;
            for &i in e.word.iter().rev() {
                v = right[i][v];
            }
            inverse[w] = v;
        }
        Ok(WeylGroup {
            elements,
            index,
            inverse,
            right,
            left,
        })
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn get(&self, w: usize) -> &WeylElement {
        &self.elements[w]
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn index_of(&self, x: &IMat) -> Option<usize> {
        self.index.get(x).copied()
    }

    pub fn inv(&self, w: usize) -> usize {
        self.inverse[w]
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        let mut v = a;
        for &i in &self.elements[b].word {
            v = self.right[i][v];
        }
        v
    }

    pub fn mul_simple_right(&self, w: usize, i: usize) -> usize {
        self.right[i][w]
    }

    pub fn mul_simple_left(&self, i: usize, w: usize) -> usize {
        self.left[i][w]
    }

    pub fn simple(&self, i: usize) -> usize {
        self.right[i][0]
    }

    pub fn length(&self, w: usize) -> usize {
        self.elements[w].word.len()
    }

    pub fn from_word(&self, word: &[usize]) -> usize {
        word.iter().fold(0, |v, &i| self.right[i][v])
    }

    pub fn longest(&self) -> usize {
        (0..self.len()).max_by_key(|&w| self.length(w)).unwrap_or(0)
    }

    /// The reflection `s_β` for the root with index `k`.
    pub fn reflection(&self, d: &RootDatum, k: usize) -> usize {
        let r = &d.roots[k];
        let mut m = IMat::identity(d.dim);
        for c in 0..d.dim {
            let mut e = vec![0i64; d.dim];
            e[c] = 1;
            let n = d.pair_int(&e, &r.coroot).expect("W-stable lattice");
            for row in 0..d.dim {
                m.set(row, c, m.get(row, c) - r.x[row] * n);
            }
        }
        self.index[&m]
    }

    /// Number of positive roots sent to negative roots.
    pub fn inversions(&self, d: &RootDatum, w: usize) -> usize {
        let e = &self.elements[w];
        d.positive_roots()
            .iter()
            .filter(|r| {
                let k = d.root_index(&e.act_x(&r.x)).expect("W permutes roots");
                k >= d.n_positive
            })
            .count()
    }

    /// Action on root indices.
    pub fn act_root(&self, d: &RootDatum, w: usize, k: usize) -> usize {
        d.root_index(&self.elements[w].act_x(&d.roots[k].x))
            .expect("W permutes roots")
    }

    /// Every reduced word of `w`.
    pub fn all_reduced_words(&self, w: usize) -> Vec<Vec<usize>> {
        if w == 0 {
            return vec![vec![]];
        }
        let l = self.length(w);
        let mut out = Vec::new();
        for i in 0..self.right.len() {
            let u = self.right[i][w];
            if self.length(u) + 1 == l {
                for mut word in self.all_reduced_words(u) {
                    word.push(i);
                    out.push(word);
                }
            }
        }
        out
    }

    /// Poincaré series coefficients: `counts[k]` elements of length `k`.
    pub fn length_counts(&self) -> Vec<usize> {
        let mut c = vec![0; self.length(self.longest()) + 1];
        for w in 0..self.len() {
            c[self.length(w)] += 1;
        }
        c
    }
}

#[cfg(test)]
mod tests {
    use super::super::datum::LatticeChoice;
    use super::*;

    fn group(label: &str) -> (RootDatum, WeylGroup) {
        let d = RootDatum::builtin(label, LatticeChoice::Weight).unwrap();
        let w = WeylGroup::new(&d).unwrap();
        (d, w)
    }

    #[test]
    fn orders_and_lengths() {
        for (label, n, lmax) in [
            ("A1", 2, 1),
            ("A2", 6, 3),
            ("A3", 24, 6),
            ("B2", 8, 4),
            ("G2", 12, 6),
            ("D4", 192, 12),
        ] {
            let (d, w) = group(label);
            assert_eq!(w.len(), n, "{label}");
            assert_eq!(w.length(w.longest()), lmax);
            for e in 0..w.len() {
                assert_eq!(w.inversions(&d, e), w.length(e));
                assert_eq!(w.mul(e, w.inv(e)), 0);
            }
        }
    }

    #[test]
    fn a2_length_multiset() {
        let (_, w) = group("A2");
        assert_eq!(w.length_counts(), vec![1, 2, 2, 1]);
    }

    #[test]
    fn s1s2s1_sends_alpha1_to_minus_alpha2() {
        let (d, w) = group("A2");
        let e = w.from_word(&[0, 1, 0]);
        let a2: Vec<i64> = d.simple_roots[1].iter().map(|v| -v).collect();
        assert_eq!(w.get(e).act_x(&d.simple_roots[0]), a2);
    }

    #[test]
    fn bound_enforced() {
        let d = RootDatum::builtin("D4", LatticeChoice::Root).unwrap();
        assert!(matches!(
            WeylGroup::with_bound(&d, 100),
            Err(Error::TooLarge(100))
        ));
    }

    #[test]
    fn reduced_words_multiply_out() {
        let (_, w) = group("B2");
        let l = w.longest();
        let words = w.all_reduced_words(l);
        assert_eq!(words.len(), 2);
        for word in words {
            assert_eq!(w.from_word(&word), l);
        }
    }
}
