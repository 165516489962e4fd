//! Small exact linear algebra: integer matrices, Gaussian elimination over
//! any exact field, and unimodular basis changes.

use num_traits::{One, Signed, Zero};

use crate::scalars::{Frac, Rational};

/// Square integer matrix, row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IMat {
    pub n: usize,
    pub data: Vec<i64>,
}

impl IMat {
    pub fn identity(n: usize) -> Self {
        let mut data = vec![0; n * n];
        for i in 0..n {
            data[i * n + i] = 1;
        }
        IMat { n, data }
    }

    pub fn get(&self, r: usize, c: usize) -> i64 {
        self.data[r * self.n + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: i64) {
        self.data[r * self.n + c] = v;
    }

    pub fn mul(&self, o: &IMat) -> IMat {
        let n = self.n;
        let mut data = vec![0; n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..n {
                    data[i * n + j] += a * o.get(k, j);
                }
            }
        }
        IMat { n, data }
    }

    pub fn apply(&self, v: &[i64]) -> Vec<i64> {
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self.get(i, j) * v[j]).sum())
            .collect()
    }

    pub fn transpose(&self) -> IMat {
        let mut t = self.clone();
        for i in 0..self.n {
            for j in 0..self.n {
                t.set(i, j, self.get(j, i));
            }
        }
        t
    }

    pub fn column(&self, c: usize) -> Vec<i64> {
        (0..self.n).map(|r| self.get(r, c)).collect()
    }

    pub fn is_identity(&self) -> bool {
        *self == IMat::identity(self.n)
    }
}

/// Returns a unimodular `E` with `E v = e_1` when `v` is primitive.
pub fn unimodular_to_e1(v: &[i64]) -> Option<IMat> {
    let n = v.len();
    let mut w = v.to_vec();
    let mut e = IMat::identity(n);
    let row_op = |e: &mut IMat, dst: usize, src: usize, k: i64| {
        for c in 0..n {
            let val = e.get(dst, c) - k * e.get(src, c);
            e.set(dst, c, val);
        }
    };
    loop {
        let nz: Vec<usize> = (0..n).filter(|&i| w[i] != 0).collect();
        if nz.is_empty() {
            return None;
        }
        let p = *nz.iter().min_by_key(|&&i| w[i].abs()).unwrap();
        if nz.len() == 1 {
            if w[p].abs() != 1 {
                return None;
            }
            if p != 0 {
                // swap rows p and 0
                for c in 0..n {
                    let a = e.get(0, c);
                    e.set(0, c, e.get(p, c));
                    e.set(p, c, a);
                }
                w.swap(0, p);
            }
            if w[0] < 0 {
                for c in 0..n {
                    e.set(0, c, -e.get(0, c));
                }
            }
            return Some(e);
        }
        for &i in &nz {
            if i != p {
                let k = w[i].div_euclid(w[p]);
                w[i] -= k * w[p];
                row_op(&mut e, i, p, k);
            }
        }
    }
}

/// Operations needed for Gaussian elimination.
pub trait Field: Clone + PartialEq {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    /// Division by a nonzero element.
    fn div(&self, o: &Self) -> Self;
}

impl Field for Rational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn div(&self, o: &Self) -> Self {
        self / o
    }
}

impl Field for Frac {
    fn zero() -> Self {
        Frac::zero()
    }
    fn one() -> Self {
        Frac::one()
    }
    fn is_zero(&self) -> bool {
        Frac::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        Frac::add(self, o)
    }
    fn sub(&self, o: &Self) -> Self {
        Frac::sub(self, o)
    }
    fn mul(&self, o: &Self) -> Self {
        Frac::mul(self, o)
    }
    fn div(&self, o: &Self) -> Self {
        Frac::div(self, o).expect("nonzero pivot")
    }
}

/// Reduced row echelon form in place; returns the pivot columns.
pub fn rref<F: Field>(m: &mut [Vec<F>]) -> Vec<usize> {
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = F::one().div(&m[r][c]);
        for j in c..cols {
            m[r][j] = m[r][j].mul(&inv);
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in c..cols {
                    let d = f.mul(&m[r][j]);
                    m[i][j] = m[i][j].sub(&d);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank<F: Field>(m: &[Vec<F>]) -> usize {
    let mut a = m.to_vec();
    rref(&mut a).len()
}

/// Basis of the right kernel `{x : m x = 0}`.
pub fn nullspace<F: Field>(m: &[Vec<F>], cols: usize) -> Vec<Vec<F>> {
    let mut a = m.to_vec();
    let pivots = rref(&mut a);
    let mut basis = Vec::new();
    for free in (0..cols).filter(|c| !pivots.contains(c)) {
        let mut x = vec![F::zero(); cols];
        x[free] = F::one();
        for (r, &pc) in pivots.iter().enumerate() {
            x[pc] = F::zero().sub(&a[r][free]);
        }
        basis.push(x);
    }
    basis
}

/// Solves `m x = b`, returning one solution if consistent.
pub fn solve<F: Field>(m: &[Vec<F>], b: &[F]) -> Option<Vec<F>> {
    let cols = m.first().map_or(0, |r| r.len());
    let mut a: Vec<Vec<F>> = m
        .iter()
        .zip(b)
        .map(|(row, bi)| {
            let mut r = row.clone();
            r.push(bi.clone());
            r
        })
        .collect();
    let pivots = rref(&mut a);
    if pivots.contains(&cols) {
        return None;
    }
    let mut x = vec![F::zero(); cols];
    for (r, &pc) in pivots.iter().enumerate() {
        x[pc] = a[r][cols].clone();
    }
    Some(x)
}

/// Inverse of a square matrix, if it exists.
pub fn inverse<F: Field>(m: &[Vec<F>]) -> Option<Vec<Vec<F>>> {
    let n = m.len();
    let mut a: Vec<Vec<F>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { F::one() } else { F::zero() }));
            r
        })
        .collect();
    let pivots = rref(&mut a);
    if pivots.len() < n || pivots[n - 1] != n - 1 {
        return None;
    }
    Some(a.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// Determinant of a rational matrix.
pub fn det_rational(m: &[Vec<Rational>]) -> Rational {
    let n = m.len();
    let mut a = m.to_vec();
    let mut det = <Rational as One>::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !Zero::is_zero(&a[i][c])) else {
            return <Rational as Zero>::zero();
        };
        if p != c {
            a.swap(p, c);
            det = -det;
        }
        det *= &a[c][c];
        for i in c + 1..n {
            let f = &a[i][c] / &a[c][c];
            for j in c..n {
                let d = &f * &a[c][j];
                a[i][j] -= d;
            }
        }
    }
    det
}

pub fn is_positive_definite(m: &[Vec<Rational>]) -> bool {
    (1..=m.len()).all(|k| {
        let minor: Vec<Vec<Rational>> = m[..k].iter().map(|r| r[..k].to_vec()).collect();
        det_rational(&minor).is_positive()
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::rat;

    #[test]
    fn unimodular_completion() {
        for v in [vec![2, 3], vec![-1, 0, 0], vec![4, 6, 9], vec![0, 0, -1]] {
            let e = unimodular_to_e1(&v).unwrap();
            let mut e1 = vec![0; v.len()];
            e1[0] = 1;
            assert_eq!(e.apply(&v), e1);
        }
        assert!(unimodular_to_e1(&[2, 4]).is_none());
    }

    #[test]
    fn nullspace_and_inverse() {
        let m = vec![vec![rat(1), rat(2), rat(3)], vec![rat(2), rat(4), rat(6)]];
        assert_eq!(nullspace(&m, 3).len(), 2);
        let a = vec![vec![rat(2), rat(1)], vec![rat(1), rat(1)]];
        let inv = inverse(&a).unwrap();
        assert_eq!(inv, vec![vec![rat(1), rat(-1)], vec![rat(-1), rat(2)]]);
        assert_eq!(det_rational(&a), rat(1));
    }
}
