//! Character tables by Dixon's method: common eigenvectors of the class
//! multiplication matrices are found over a prime field `F_p` with
//! `p ≡ 1 (mod exp G)`, then lifted to exact values in `Q(ζ_e)` through the
//! eigenvalue multiplicities of each group element.

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::cyclotomic::Cyc;
use super::group::FiniteGroup;
use crate::error::{Error, Result};
use crate::scalars::Rational;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassInfo {
    pub rep: usize,
    pub size: usize,
    pub element_order: usize,
}

#[derive(Clone, Debug)]
pub struct CharacterTable {
    pub group_order: usize,
    /// Conductor of the value field `Q(ζ_e)`; the group exponent.
    pub conductor: usize,
    pub classes: Vec<ClassInfo>,
    /// Class index of every group element.
    pub class_of: Vec<usize>,
    /// Rows are irreducible characters, columns are classes.
    pub chars: Vec<Vec<Cyc>>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CharacterTableJson {
    pub schema: String,
    pub group_order: usize,
    pub conductor: usize,
    pub classes: Vec<ClassInfo>,
    pub degrees: Vec<usize>,
    pub characters: Vec<Vec<String>>,
    pub orthogonality: bool,
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

fn is_prime(n: u64) -> bool {
    n >= 2
        && (2..)
            .take_while(|d| d * d <= n)
            .all(|d| !n.is_multiple_of(d))
}

/// Smallest prime `p ≡ 1 (mod e)` with `p > lower`.
fn choose_prime(e: u64, lower: u64) -> u64 {
    let mut p = (lower / e + 1) * e + 1;
    while !is_prime(p) {
        p += e;
    }
    p
}

fn primitive_root_of_unity(e: u64, p: u64) -> u64 {
    let m = p - 1;
    let mut factors = Vec::new();
    let mut r = m;
    let mut d = 2;
    while d * d <= r {
        if r.is_multiple_of(d) {
            factors.push(d);
            while r.is_multiple_of(d) {
                r /= d;
            }
        }
        d += 1;
    }
    if r > 1 {
        factors.push(r);
    }
    let g = (2..p)
        .find(|&g| factors.iter().all(|&f| pow_mod(g, m / f, p) != 1))
        .expect("F_p^* is cyclic");
    pow_mod(g, m / e, p)
}

/// Characteristic polynomial mod `p` via Hessenberg reduction, lowest degree
/// first.
fn char_poly_mod(mut h: Vec<Vec<u64>>, p: u64) -> Vec<u64> {
    let n = h.len();
    for m in 1..n.saturating_sub(1) {
        let Some(i) = (m..n).find(|&i| h[i][m - 1] != 0) else {
            continue;
        };
        if i != m {
            h.swap(i, m);
            for row in h.iter_mut() {
                row.swap(i, m);
            }
        }
        let tinv = inv_mod(h[m][m - 1], p);
        for j in m + 1..n {
            let u = h[j][m - 1] * tinv % p;
            if u == 0 {
                continue;
            }
            for k in 0..n {
                h[j][k] = (h[j][k] + p - u * h[m][k] % p) % p;
            }
            for row in h.iter_mut() {
                row[m] = (row[m] + u * row[j]) % p;
            }
        }
    }
    // p_{m+1} = (x - h_mm) p_m - Σ_i (Π subdiag) h_{m-i,m} p_{m-i}
    let mut polys: Vec<Vec<u64>> = vec![vec![1]];
    for m in 0..n {
        let pm = &polys[m];
        let mut next = vec![0u64; m + 2];
        for (k, c) in pm.iter().enumerate() {
            next[k + 1] = (next[k + 1] + c) % p;
            next[k] = (next[k] + p - c * h[m][m] % p) % p;
        }
        let mut t = 1u64;
        for i in 1..=m {
            t = t * h[m - i + 1][m - i] % p;
            let coef = t * h[m - i][m] % p;
            if coef == 0 {
                continue;
            }
            for (k, c) in polys[m - i].iter().enumerate() {
                next[k] = (next[k] + p - coef * c % p) % p;
            }
        }
        polys.push(next);
    }
    polys.pop().unwrap()
}

fn eval_mod(poly: &[u64], x: u64, p: u64) -> u64 {
    poly.iter().rev().fold(0, |acc, c| (acc * x + c) % p)
}

/// A nonzero kernel vector of a matrix that has one-dimensional kernel.
fn kernel_vector(mut a: Vec<Vec<u64>>, p: u64) -> Option<Vec<u64>> {
    let n = a.len();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..n {
        let Some(r) = (row..n).find(|&r| a[r][col] != 0) else {
            continue;
        };
        a.swap(row, r);
        let inv = inv_mod(a[row][col], p);
        for k in 0..n {
            a[row][k] = a[row][k] * inv % p;
        }
        for r2 in 0..n {
            if r2 != row && a[r2][col] != 0 {
                let f = a[r2][col];
                for k in 0..n {
                    a[r2][k] = (a[r2][k] + p - f * a[row][k] % p) % p;
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    if pivots.len() != n - 1 {
        return None;
    }
    let free = (0..n).find(|c| !pivots.contains(c))?;
    let mut v = vec![0u64; n];
    v[free] = 1;
    for (r, &c) in pivots.iter().enumerate() {
        v[c] = (p - a[r][free]) % p;
    }
    Some(v)
}

impl CharacterTable {
    /// Computes the table, refusing groups larger than `bound`.
    pub fn compute(g: &FiniteGroup, bound: usize) -> Result<Self> {
        let n = g.order();
        if n > bound {
            return Err(Error::TooLarge(bound));
        }
        let (classes, class_of) = g.conjugacy_classes();
        let k = classes.len();
        let e = g.exponent();
        let infos: Vec<ClassInfo> = classes
            .iter()
            .map(|c| ClassInfo {
                rep: c[0],
                size: c.len(),
                element_order: g.element_order(c[0]),
            })
            .collect();
        let inv_class: Vec<usize> = infos.iter().map(|c| class_of[g.inv(c.rep)]).collect();

        // c[i][j][l] = #{x ∈ C_i : x^{-1} z_l ∈ C_j}
        let mut coeff = vec![vec![vec![0u64; k]; k]; k];
        for (l, cl) in infos.iter().enumerate() {
            for x in 0..n {
                let j = class_of[g.mul(g.inv(x), cl.rep)];
                coeff[class_of[x]][j][l] += 1;
            }
        }

        let sqrt_n = (n as f64).sqrt().ceil() as u64;
        let mut p = choose_prime(e as u64, (2 * sqrt_n).max(4 * (k * k) as u64).max(100));
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
        let mut vectors = None;
        'primes: for _ in 0..8 {
            for _ in 0..32 {
                let r: Vec<u64> = (0..k).map(|_| rng.gen_range(0..p)).collect();
                let mut m = vec![vec![0u64; k]; k];
                for (i, ri) in r.iter().enumerate() {
                    for j in 0..k {
                        for l in 0..k {
                            m[j][l] = (m[j][l] + ri * (coeff[i][j][l] % p)) % p;
                        }
                    }
                }
                let cp = char_poly_mod(m.clone(), p);
                let roots: Vec<u64> = (0..p).filter(|&x| eval_mod(&cp, x, p) == 0).collect();
                if roots.len() != k {
                    continue;
                }
                let mut vs = Vec::with_capacity(k);
                for lam in roots {
                    let mut a = m.clone();
                    for (i, row) in a.iter_mut().enumerate() {
                        row[i] = (row[i] + p - lam) % p;
                    }
                    match kernel_vector(a, p) {
                        Some(v) if v[0] != 0 => {
                            let s = inv_mod(v[0], p);
                            vs.push(v.iter().map(|x| x * s % p).collect::<Vec<u64>>());
                        }
                        _ => continue,
                    }
                }
                if vs.len() == k {
                    vectors = Some(vs);
                    break 'primes;
                }
            }
            p = choose_prime(e as u64, p);
        }
        let omegas = vectors.ok_or_else(|| {
            Error::Verification("no separating class-algebra element found".into())
        })?;

        let z = primitive_root_of_unity(e as u64, p);
        // powers[l][j] = class of rep_l^j
        let powers: Vec<Vec<usize>> = infos
            .iter()
            .map(|c| {
                let mut x = 0;
                (0..e)
                    .map(|_| {
                        let cls = class_of[x];
                        x = g.mul(x, c.rep);
                        cls
                    })
                    .collect()
            })
            .collect();
        let einv = inv_mod(e as u64, p);
        let mut chars = Vec::with_capacity(k);
        for w in omegas {
            let s = (0..k).fold(0u64, |acc, l| {
                (acc + w[l] * w[inv_class[l]] % p * inv_mod(infos[l].size as u64 % p, p)) % p
            });
            if s == 0 {
                return Err(Error::Verification(
                    "degenerate class-algebra eigenvector".into(),
                ));
            }
            let d2 = (n as u64 % p) * inv_mod(s, p) % p;
            let deg = (1..=sqrt_n)
                .find(|d| d * d % p == d2)
                .ok_or_else(|| Error::Verification("character degree not recovered".into()))?;
            let chi_p: Vec<u64> = (0..k)
                .map(|l| w[l] * deg % p * inv_mod(infos[l].size as u64 % p, p) % p)
                .collect();
            let mut row = Vec::with_capacity(k);
            for l in 0..k {
                let mut mult = vec![0i64; e];
                for (j, m) in mult.iter_mut().enumerate() {
                    let mut acc = 0u64;
                    for t in 0..e {
                        let zi = pow_mod(z, ((e - (j * t) % e) % e) as u64, p);
                        acc = (acc + chi_p[powers[l][t]] * zi) % p;
                    }
                    let val = acc * einv % p;
                    if val > deg {
                        return Err(Error::Verification(
                            "eigenvalue multiplicity out of range".into(),
                        ));
                    }
                    *m = val as i64;
                }
                if mult.iter().sum::<i64>() != deg as i64 {
                    return Err(Error::Verification(
                        "multiplicities do not sum to the degree".into(),
                    ));
                }
                row.push(Cyc::from_powers(e, &mult));
            }
            chars.push(row);
        }
        chars.sort_by_key(|r| {
            (
                r[0].as_rational(),
                r.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
            )
        });
        // Trivial character first.
        if let Some(pos) = chars
            .iter()
            .position(|r| r.iter().all(|c| *c == Cyc::int(e, 1)))
        {
            let t = chars.remove(pos);
            chars.insert(0, t);
        }
        let table = CharacterTable {
            group_order: n,
            conductor: e,
            classes: infos,
            class_of,
            chars,
        };
        if !table.check_orthogonality() {
            return Err(Error::Verification(
                "character table fails orthogonality".into(),
            ));
        }
        Ok(table)
    }

    pub fn len(&self) -> usize {
        self.chars.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chars.is_empty()
    }

    pub fn degree(&self, i: usize) -> usize {
        let r = self.chars[i][0]
            .as_rational()
            .expect("degrees are rational");
        r.to_integer().try_into().expect("degree fits")
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.len()).map(|i| self.degree(i)).collect()
    }

    /// Value of character `i` at group element `x`.
    pub fn value(&self, i: usize, x: usize) -> &Cyc {
        &self.chars[i][self.class_of[x]]
    }

    /// Row and column orthogonality and `Σ deg² = |G|`, all checked exactly.
    pub fn check_orthogonality(&self) -> bool {
        let k = self.len();
        let n = self.group_order as i64;
        let e = self.conductor;
        if k != self.classes.len() {
            return false;
        }
        for a in 0..k {
            for b in a..k {
                let mut s = Cyc::zero(e);
                for (l, c) in self.classes.iter().enumerate() {
                    let t = self.chars[a][l].mul(&self.chars[b][l].conj());
                    s = s.add(&t.scale(&Rational::from_integer(c.size.into())));
                }
                if s != Cyc::int(e, if a == b { n } else { 0 }) {
                    return false;
                }
            }
        }
        for l in 0..k {
            for m in l..k {
                let mut s = Cyc::zero(e);
                for row in &self.chars {
                    s = s.add(&row[l].mul(&row[m].conj()));
                }
                let target = if l == m {
                    n / self.classes[l].size as i64
                } else {
                    0
                };
                if s != Cyc::int(e, target) {
                    return false;
                }
            }
        }
        self.degrees().iter().map(|d| d * d).sum::<usize>() == self.group_order
    }

    /// `⟨χ, ψ⟩` restricted to the listed elements (a subgroup), as a rational.
    pub fn inner_on(&self, values_a: &[Cyc], values_b: &[Cyc]) -> Rational {
        let mut s = Cyc::zero(values_a[0].n);
        for (a, b) in values_a.iter().zip(values_b) {
            s = s.add(&a.mul(&b.conj()));
        }
        let r = s.as_rational().expect("inner products are rational");
        if r.is_zero() {
            r
        } else {
            r / Rational::from_integer((values_a.len() as i64).into())
        }
    }

    pub fn to_json(&self) -> CharacterTableJson {
        CharacterTableJson {
            schema: "qdaha.character_table/1".into(),
            group_order: self.group_order,
            conductor: self.conductor,
            classes: self.classes.clone(),
            degrees: self.degrees(),
            characters: self
                .chars
                .iter()
                .map(|r| r.iter().map(ToString::to_string).collect())
                .collect(),
            orthogonality: self.check_orthogonality(),
        }
    }
}
