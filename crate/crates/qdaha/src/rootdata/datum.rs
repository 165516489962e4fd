//! Root data: a pair of lattices with a pairing and a finite reduced root system.

use std::collections::HashMap;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{det_rational, is_positive_definite, IMat};
use crate::scalars::{rat, Rational};

/// Which lattices to attach to a Cartan matrix.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum LatticeChoice {
    /// X spanned by the simple roots, Y by the fundamental coweights.
    Root,
    /// X spanned by the fundamental weights, Y by the simple coroots.
    Weight,
}

impl std::str::FromStr for LatticeChoice {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "root" => Ok(LatticeChoice::Root),
            "weight" => Ok(LatticeChoice::Weight),
            _ => Err(Error::Parse(format!("unknown lattice choice '{s}'"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Root {
    /// Coordinates in the basis of X.
    pub x: Vec<i64>,
    /// Coordinates of the coroot in the basis of Y.
    pub coroot: Vec<i64>,
    /// Expansion in the simple roots.
    pub simple: Vec<i64>,
}

impl Root {
    pub fn is_positive(&self) -> bool {
        self.simple.iter().all(|c| *c >= 0)
    }

    pub fn height(&self) -> i64 {
        self.simple.iter().sum()
    }
}

/// Custom datum description: explicit simple (co)roots and pairing matrix.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CustomDatum {
    pub simple_roots: Vec<Vec<i64>>,
    pub simple_coroots: Vec<Vec<i64>>,
    /// Pairing matrix `P[a][b] = <e_a, f_b>` as rational strings.
    pub pairing: Vec<Vec<String>>,
}

#[derive(Clone, Debug)]
pub struct RootDatum {
    pub label: String,
    pub rank: usize,
    /// Dimension of X (and Y).
    pub dim: usize,
    /// `cartan[i][j] = <α_j, α_i^∨>`.
    pub cartan: Vec<Vec<i64>>,
    pub pairing: Vec<Vec<Rational>>,
    pub simple_roots: Vec<Vec<i64>>,
    pub simple_coroots: Vec<Vec<i64>>,
    /// Positive roots first (by height), then their negatives in the same order.
    pub roots: Vec<Root>,
    pub n_positive: usize,
    pub highest_root: usize,
    root_index: HashMap<Vec<i64>, usize>,
    pub(crate) refl_x: Vec<IMat>,
    pub(crate) refl_y: Vec<IMat>,
}

pub fn builtin_cartan(label: &str) -> Result<Vec<Vec<i64>>> {
    let a_n = |n: usize| {
        let mut m = vec![vec![0i64; n]; n];
        for i in 0..n {
            m[i][i] = 2;
            if i + 1 < n {
                m[i][i + 1] = -1;
                m[i + 1][i] = -1;
            }
        }
        m
    };
    Ok(match label {
        "A1" => a_n(1),
        "A2" => a_n(2),
        "A3" => a_n(3),
        "A4" => a_n(4),
        "B2" => vec![vec![2, -1], vec![-2, 2]],
        "C2" => vec![vec![2, -2], vec![-1, 2]],
        "G2" => vec![vec![2, -3], vec![-1, 2]],
        "D4" => vec![
            vec![2, -1, 0, 0],
            vec![-1, 2, -1, -1],
            vec![0, -1, 2, 0],
            vec![0, -1, 0, 2],
        ],
        _ => {
            return Err(Error::InvalidDatum(format!(
                "unknown root system '{label}'"
            )))
        }
    })
}

pub const BUILTIN_TYPES: [&str; 8] = ["A1", "A2", "A3", "A4", "B2", "C2", "D4", "G2"];

fn check_finite_type(a: &[Vec<i64>]) -> Result<()> {
    let l = a.len();
    if a.iter().any(|r| r.len() != l) {
        return Err(Error::InvalidDatum("Cartan matrix must be square".into()));
    }
    for i in 0..l {
        if a[i][i] != 2 {
            return Err(Error::InvalidDatum("Cartan diagonal must be 2".into()));
        }
        for j in 0..l {
            if i != j && (a[i][j] > 0 || (a[i][j] == 0) != (a[j][i] == 0)) {
                return Err(Error::InvalidDatum(
                    "off-diagonal sign pattern invalid".into(),
                ));
            }
        }
    }
    // Symmetrize: d_i a[i][j] = d_j a[j][i], propagated along the Dynkin graph.
    let mut d: Vec<Option<Rational>> = vec![None; l];
    for start in 0..l {
        if d[start].is_some() {
            continue;
        }
        d[start] = Some(Rational::one());
        let mut stack = vec![start];
        while let Some(i) = stack.pop() {
            for j in 0..l {
                if i != j && a[i][j] != 0 {
                    let dj = d[i].clone().unwrap() * rat(a[i][j]) / rat(a[j][i]);
                    match &d[j] {
                        None => {
                            d[j] = Some(dj);
                            stack.push(j);
                        }
                        Some(x) if *x != dj => {
                            return Err(Error::InvalidDatum(
                                "Cartan matrix is not symmetrizable".into(),
                            ))
                        }
                        _ => {}
                    }
                }
            }
        }
    }
    let sym: Vec<Vec<Rational>> = (0..l)
        .map(|i| {
            (0..l)
                .map(|j| d[i].clone().unwrap() * rat(a[i][j]))
                .collect()
        })
        .collect();
    if !is_positive_definite(&sym) {
        return Err(Error::InvalidDatum(
            "Cartan matrix is not of finite type".into(),
        ));
    }
    Ok(())
}

impl RootDatum {
    pub fn builtin(label: &str, lattice: LatticeChoice) -> Result<Self> {
        let mut d = Self::from_cartan(&builtin_cartan(label)?, lattice)?;
        d.label = label.to_string();
        Ok(d)
    }

    pub fn from_cartan(a: &[Vec<i64>], lattice: LatticeChoice) -> Result<Self> {
        check_finite_type(a)?;
        let l = a.len();
        let unit = |i: usize| (0..l).map(|j| i64::from(i == j)).collect::<Vec<_>>();
        let (roots, coroots): (Vec<Vec<i64>>, Vec<Vec<i64>>) = match lattice {
            LatticeChoice::Root => ((0..l).map(unit).collect(), a.to_vec()),
            LatticeChoice::Weight => (
                (0..l).map(|j| (0..l).map(|i| a[i][j]).collect()).collect(),
                (0..l).map(unit).collect(),
            ),
        };
        let pairing = (0..l)
            .map(|i| (0..l).map(|j| rat(i64::from(i == j))).collect())
            .collect();
        let mut d = Self::build(roots, coroots, pairing)?;
        d.label = format!("cartan-{lattice:?}").to_lowercase();
        Ok(d)
    }

    /// `GL_n`: X = Y = Z^n, simple roots `e_i - e_{i+1}`.
    pub fn gl(n: usize) -> Result<Self> {
        let simple: Vec<Vec<i64>> = (0..n - 1)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        if j == i {
                            1
                        } else if j == i + 1 {
                            -1
                        } else {
                            0
                        }
                    })
                    .collect()
            })
            .collect();
        let pairing = (0..n)
            .map(|i| (0..n).map(|j| rat(i64::from(i == j))).collect())
            .collect();
        let mut d = Self::build(simple.clone(), simple, pairing)?;
        d.label = format!("GL{n}");
        Ok(d)
    }

    pub fn custom(c: &CustomDatum) -> Result<Self> {
        let pairing = c
            .pairing
            .iter()
            .map(|r| {
                r.iter()
                    .map(|s| crate::scalars::parse_rational(s))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        let mut d = Self::build(c.simple_roots.clone(), c.simple_coroots.clone(), pairing)?;
        d.label = "custom".into();
        Ok(d)
    }

    /// Builds a datum from explicit simple roots (X coordinates), simple
    /// coroots (Y coordinates) and the pairing matrix.
    pub fn build(
        simple_roots: Vec<Vec<i64>>,
        simple_coroots: Vec<Vec<i64>>,
        pairing: Vec<Vec<Rational>>,
    ) -> Result<Self> {
        let l = simple_roots.len();
        let dim = pairing.len();
        if simple_coroots.len() != l
            || pairing.iter().any(|r| r.len() != dim)
            || simple_roots
                .iter()
                .chain(&simple_coroots)
                .any(|v| v.len() != dim)
        {
            return Err(Error::Dimension("root datum shapes disagree".into()));
        }
        if det_rational(&pairing).is_zero() {
            return Err(Error::InvalidDatum("pairing is degenerate".into()));
        }
        let pair = |x: &[i64], y: &[i64]| -> Rational {
            let mut s = Rational::zero();
            for a in 0..dim {
                for b in 0..dim {
                    if x[a] != 0 && y[b] != 0 {
                        s += &pairing[a][b] * rat(x[a] * y[b]);
                    }
                }
            }
            s
        };
        let mut cartan = vec![vec![0i64; l]; l];
        for i in 0..l {
            for j in 0..l {
                let v = pair(&simple_roots[j], &simple_coroots[i]);
                cartan[i][j] = crate::scalars::rational::to_i64(&v)
                    .ok_or_else(|| Error::InvalidDatum("Cartan entries must be integers".into()))?;
            }
        }
        check_finite_type(&cartan)?;

        // Simple reflections on X and Y; integrality is W-stability of the lattices.
        let mut refl_x = Vec::with_capacity(l);
        let mut refl_y = Vec::with_capacity(l);
        for i in 0..l {
            let mut mx = IMat::identity(dim);
            let mut my = IMat::identity(dim);
            for c in 0..dim {
                let mut e = vec![0i64; dim];
                e[c] = 1;
                let px = pair(&e, &simple_coroots[i]);
                let py = pair(&simple_roots[i], &e);
                let (Some(px), Some(py)) = (
                    crate::scalars::rational::to_i64(&px),
                    crate::scalars::rational::to_i64(&py),
                ) else {
                    return Err(Error::InvalidDatum("lattices are not W-stable".into()));
                };
                for r in 0..dim {
                    mx.set(r, c, mx.get(r, c) - simple_roots[i][r] * px);
                    my.set(r, c, my.get(r, c) - simple_coroots[i][r] * py);
                }
            }
            refl_x.push(mx);
            refl_y.push(my);
        }

        // Orbit of the simple roots, tracked with coroots and simple-root expansions.
        let mut roots: Vec<Root> = (0..l)
            .map(|i| Root {
                x: simple_roots[i].clone(),
                coroot: simple_coroots[i].clone(),
                simple: (0..l).map(|j| i64::from(i == j)).collect(),
            })
            .collect();
        let mut seen: HashMap<Vec<i64>, usize> = roots
            .iter()
            .enumerate()
            .map(|(k, r)| (r.simple.clone(), k))
            .collect();
        let mut k = 0;
        while k < roots.len() {
            for i in 0..l {
                let r = &roots[k];
                let n: i64 = (0..l).map(|j| r.simple[j] * cartan[i][j]).sum();
                let mut simple = r.simple.clone();
                simple[i] -= n;
                if seen.contains_key(&simple) {
                    continue;
                }
                let nr = Root {
                    x: refl_x[i].apply(&r.x),
                    coroot: refl_y[i].apply(&r.coroot),
                    simple,
                };
                if roots.len() > 10_000 {
                    return Err(Error::TooLarge(10_000));
                }
                seen.insert(nr.simple.clone(), roots.len());
                roots.push(nr);
            }
            k += 1;
        }
        let mut pos: Vec<Root> = roots.iter().filter(|r| r.is_positive()).cloned().collect();
        pos.sort_by(|a, b| {
            a.height()
                .cmp(&b.height())
                .then_with(|| b.simple.cmp(&a.simple))
        });
        let n_positive = pos.len();
        if 2 * n_positive != roots.len() {
            return Err(Error::InvalidDatum(
                "root system is not closed under negation".into(),
            ));
        }
        let neg: Vec<Root> = pos
            .iter()
            .map(|r| Root {
                x: r.x.iter().map(|v| -v).collect(),
                coroot: r.coroot.iter().map(|v| -v).collect(),
                simple: r.simple.iter().map(|v| -v).collect(),
            })
            .collect();
        let roots: Vec<Root> = pos.into_iter().chain(neg).collect();
        let root_index = roots
            .iter()
            .enumerate()
            .map(|(k, r)| (r.x.clone(), k))
            .collect::<HashMap<_, _>>();
        if root_index.len() != roots.len() {
            return Err(Error::InvalidDatum("roots are not distinct in X".into()));
        }
        Ok(RootDatum {
            label: String::new(),
            rank: l,
            dim,
            cartan,
            pairing,
            simple_roots,
            simple_coroots,
            highest_root: n_positive - 1,
            n_positive,
            roots,
            root_index,
            refl_x,
            refl_y,
        })
    }

    /// `<x, y>` for X and Y coordinate vectors.
    pub fn pair(&self, x: &[i64], y: &[i64]) -> Rational {
        let mut s = Rational::zero();
        for a in 0..self.dim {
            if x[a] == 0 {
                continue;
            }
            for b in 0..self.dim {
                if y[b] != 0 {
                    s += &self.pairing[a][b] * rat(x[a] * y[b]);
                }
            }
        }
        s
    }

    /// Pairing with rational X coordinates (used for half-weights).
    pub fn pair_q(&self, x: &[Rational], y: &[i64]) -> Rational {
        let mut s = Rational::zero();
        for a in 0..self.dim {
            for b in 0..self.dim {
                if y[b] != 0 {
                    s += &self.pairing[a][b] * &x[a] * rat(y[b]);
                }
            }
        }
        s
    }

    /// The integer `<x, y>`, or an error if the pairing value is fractional.
    pub fn pair_int(&self, x: &[i64], y: &[i64]) -> Result<i64> {
        let v = self.pair(x, y);
        crate::scalars::rational::to_i64(&v).ok_or_else(|| {
            Error::NonIntegral(format!(
                "<{x:?}, {y:?}> = {}",
                crate::scalars::fmt_rational(&v)
            ))
        })
    }

    pub fn root_index(&self, x: &[i64]) -> Option<usize> {
        self.root_index.get(x).copied()
    }

    /// Index of `-roots[k]`.
    pub fn negate(&self, k: usize) -> usize {
        if k < self.n_positive {
            k + self.n_positive
        } else {
            k - self.n_positive
        }
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.roots[..self.n_positive]
    }

    pub fn theta(&self) -> &Root {
        &self.roots[self.highest_root]
    }

    /// Index of the simple root `i` in `roots`.
    pub fn simple_index(&self, i: usize) -> usize {
        self.root_index(&self.simple_roots[i])
            .expect("simple root present")
    }

    /// Reflection in the root `k` on X: `x - <x, β^∨> β`.
    pub fn reflect_x(&self, k: usize, x: &[i64]) -> Vec<i64> {
        let r = &self.roots[k];
        let n = self.pair_int(x, &r.coroot).expect("W-stable lattice");
        x.iter().zip(&r.x).map(|(a, b)| a - n * b).collect()
    }

    /// Reflection in the root `k` on Y: `y - <β, y> β^∨`.
    pub fn reflect_y(&self, k: usize, y: &[i64]) -> Vec<i64> {
        let r = &self.roots[k];
        let n = self.pair_int(&r.x, y).expect("W-stable lattice");
        y.iter().zip(&r.coroot).map(|(a, b)| a - n * b).collect()
    }

    /// Coxeter order `m_ij` of the finite simple reflections.
    pub fn coxeter_m(&self, i: usize, j: usize) -> Option<u32> {
        if i == j {
            return Some(1);
        }
        coxeter_from_product(self.cartan[i][j] * self.cartan[j][i])
    }

    /// Coxeter order including the affine node 0; finite nodes are `1..=rank`.
    /// `None` means no braid relation (affine A1).
    pub fn affine_coxeter_m(&self, i: usize, j: usize) -> Option<u32> {
        if i == j {
            return Some(1);
        }
        if i > 0 && j > 0 {
            return self.coxeter_m(i - 1, j - 1);
        }
        let k = if i == 0 { j - 1 } else { i - 1 };
        let th = self.theta();
        let a = self.pair_int(&th.x, &self.simple_coroots[k]).unwrap();
        let b = self.pair_int(&self.simple_roots[k], &th.coroot).unwrap();
        coxeter_from_product(a * b)
    }
}

fn coxeter_from_product(p: i64) -> Option<u32> {
    match p {
        0 => Some(2),
        1 => Some(3),
        2 => Some(4),
        3 => Some(6),
        _ => None,
    }
}
