use super::torus_point::TorusPoint;
use crate::error::{Error, Result};
use crate::rootdata::{RootDatum, WeylGroup};

/// `W^λ = {w : w(λ) ∈ λ q^Y}` with the shifts `w(λ) = λ q^{y_w}`.
#[derive(Clone, Debug)]
pub struct IsotropyGroup {
    pub lambda: TorusPoint,
    /// `(w, y_w)`, identity first.
    pub elements: Vec<(usize, Vec<i64>)>,
}

impl IsotropyGroup {
    pub fn compute(d: &RootDatum, g: &WeylGroup, lambda: &TorusPoint) -> Self {
        let elements = (0..g.len())
            .filter_map(|w| lambda.weyl_act(g, w).q_ratio(d, lambda).map(|y| (w, y)))
            .collect();
        IsotropyGroup {
            lambda: lambda.clone(),
            elements,
        }
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, w: usize) -> bool {
        self.position(w).is_some()
    }

    pub fn position(&self, w: usize) -> Option<usize> {
        self.elements.iter().position(|(u, _)| *u == w)
    }

    pub fn shift(&self, w: usize) -> Result<&[i64]> {
        self.elements
            .iter()
            .find(|(u, _)| *u == w)
            .map(|(_, y)| y.as_slice())
            .ok_or_else(|| {
                Error::NotFound(format!("Weyl element {w} is not in the isotropy group"))
            })
    }

    /// `y_{w1 w2} = y_{w1} + w1(y_{w2})` for all pairs.
    pub fn check_cocycle(&self, g: &WeylGroup) -> bool {
        self.elements.iter().all(|(w1, y1)| {
            self.elements.iter().all(|(w2, y2)| {
                let w = g.mul(*w1, *w2);
                let expect: Vec<i64> = y1
                    .iter()
                    .zip(g.get(*w1).act_y(y2))
                    .map(|(a, b)| a + b)
                    .collect();
                self.shift(w)
                    .map(|y| y == expect.as_slice())
                    .unwrap_or(false)
            })
        })
    }

    /// The affine action `y ↦ y_w + w(y)` on shift exponents.
    pub fn act_shift(&self, g: &WeylGroup, w: usize, y: &[i64]) -> Result<Vec<i64>> {
        let yw = self.shift(w)?;
        Ok(yw
            .iter()
            .zip(g.get(w).act_y(y))
            .map(|(a, b)| a + b)
            .collect())
    }

    /// Left coset representatives of `W / W^λ`, shortest first, identity first.
    pub fn coset_reps(&self, g: &WeylGroup) -> Vec<usize> {
        let mut seen = vec![false; g.len()];
        let mut reps = Vec::new();
        let mut order: Vec<usize> = (0..g.len()).collect();
        order.sort_by_key(|&w| (g.length(w), w));
        for w in order {
            if seen[w] {
                continue;
            }
            reps.push(w);
            for (u, _) in &self.elements {
                seen[g.mul(w, *u)] = true;
            }
        }
        reps
    }
}
