//! Exact elements of the cyclotomic field `Q(ζ_n)`, stored as coefficient
//! vectors reduced modulo the cyclotomic polynomial `Φ_n`.

use std::fmt;
use std::sync::Arc;

use num_traits::{One, Zero};

use crate::scalars::Rational;

/// Integer coefficients of `Φ_n`, lowest degree first.
pub fn cyclotomic_poly(n: usize) -> Vec<i64> {
    // x^n - 1 divided by Φ_d for every proper divisor d.
    let mut p = vec![0i64; n + 1];
    p[0] = -1;
    p[n] = 1;
    for d in 1..n {
        if n.is_multiple_of(d) {
            p = div_monic(&p, &cyclotomic_poly(d));
        }
    }
    p
}

fn div_monic(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let dq = r.len() - 1 - db;
    let mut q = vec![0i64; dq + 1];
    for k in (0..=dq).rev() {
        let c = r[k + db];
        q[k] = c;
        for (i, bi) in b.iter().enumerate() {
            r[k + i] -= c * bi;
        }
    }
    debug_assert!(r.iter().all(|x| *x == 0));
    q
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Cyc {
    /// Conductor `n`.
    pub n: usize,
    /// Coefficients of `1, ζ, …, ζ^{φ(n)-1}`.
    pub coeffs: Vec<Rational>,
    modulus: Arc<Vec<i64>>,
}

impl fmt::Debug for Cyc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Cyc {
    pub fn zero(n: usize) -> Self {
        let modulus = Arc::new(cyclotomic_poly(n));
        let deg = modulus.len() - 1;
        Cyc {
            n,
            coeffs: vec![Rational::zero(); deg],
            modulus,
        }
    }

    pub fn int(n: usize, k: i64) -> Self {
        let mut c = Self::zero(n);
        c.coeffs[0] = Rational::from_integer(k.into());
        c
    }

    /// `Σ m_j ζ^j` for integer multiplicities.
    pub fn from_powers(n: usize, mult: &[i64]) -> Self {
        let mut c = Self::zero(n);
        let mut raw = vec![Rational::zero(); n.max(1)];
        for (j, m) in mult.iter().enumerate() {
            raw[j % n] += Rational::from_integer((*m).into());
        }
        c.coeffs = c.reduce(raw);
        c
    }

    fn deg(&self) -> usize {
        self.modulus.len() - 1
    }

    fn reduce(&self, mut raw: Vec<Rational>) -> Vec<Rational> {
        let d = self.deg();
        for k in (d..raw.len()).rev() {
            let c = std::mem::take(&mut raw[k]);
            if c.is_zero() {
                continue;
            }
            for (i, m) in self.modulus.iter().enumerate().take(d) {
                raw[k - d + i] -= &c * Rational::from_integer((*m).into());
            }
        }
        raw.truncate(d);
        raw.resize(d, Rational::zero());
        raw
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn add(&self, o: &Cyc) -> Cyc {
        let mut c = self.clone();
        for (a, b) in c.coeffs.iter_mut().zip(&o.coeffs) {
            *a += b;
        }
        c
    }

    pub fn sub(&self, o: &Cyc) -> Cyc {
        self.add(&o.scale(&-Rational::one()))
    }

    pub fn scale(&self, r: &Rational) -> Cyc {
        let mut c = self.clone();
        for a in c.coeffs.iter_mut() {
            *a *= r;
        }
        c
    }

    pub fn mul(&self, o: &Cyc) -> Cyc {
        let d = self.deg();
        let mut raw = vec![Rational::zero(); 2 * d.max(1)];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                raw[i + j] += a * b;
            }
        }
        Cyc {
            coeffs: self.reduce(raw),
            ..self.clone()
        }
    }

    /// Complex conjugation `ζ ↦ ζ^{-1}`.
    pub fn conj(&self) -> Cyc {
        let mut raw = vec![Rational::zero(); self.n.max(1)];
        for (j, a) in self.coeffs.iter().enumerate() {
            raw[(self.n - j) % self.n] += a;
        }
        Cyc {
            coeffs: self.reduce(raw),
            ..self.clone()
        }
    }

    /// The same number inside `Q(ζ_m)`; requires `n | m`.
    pub fn lift(&self, m: usize) -> Cyc {
        assert!(
            m.is_multiple_of(self.n),
            "conductor {} does not divide {m}",
            self.n
        );
        let step = m / self.n;
        let mut out = Cyc::zero(m);
        let mut raw = vec![Rational::zero(); m];
        for (j, a) in self.coeffs.iter().enumerate() {
            raw[(j * step) % m] += a;
        }
        out.coeffs = out.reduce(raw);
        out
    }

    pub fn as_rational(&self) -> Option<Rational> {
        self.coeffs[1..]
            .iter()
            .all(Zero::is_zero)
            .then(|| self.coeffs[0].clone())
    }
}

impl fmt::Display for Cyc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(j, c)| match j {
                0 => c.to_string(),
                1 => format!("{c}*z{}", self.n),
                _ => format!("{c}*z{}^{j}", self.n),
            })
            .collect();
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}
