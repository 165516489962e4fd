use crate::error::{Error, Result};
use crate::rootdata::{LatticeChoice, RootDatum, WeylGroup};
use crate::scalars::poly::{q_units, Mono, VAR_Q, VAR_X0};
use crate::scalars::{Frac, Poly};

/// Root datum with its enumerated Weyl group; nodes are numbered `0` (affine)
/// and `1..=rank` (finite).
#[derive(Clone, Debug)]
pub struct DahaContext {
    pub d: RootDatum,
    pub g: WeylGroup,
}

impl DahaContext {
    pub fn new(d: RootDatum) -> Result<Self> {
        let g = WeylGroup::new(&d)?;
        Ok(DahaContext { d, g })
    }

    pub fn builtin(label: &str, lattice: LatticeChoice) -> Result<Self> {
        Self::new(RootDatum::builtin(label, lattice)?)
    }

    pub fn rank(&self) -> usize {
        self.d.rank
    }

    pub fn dim(&self) -> usize {
        self.d.dim
    }

    /// `(μ, w)` with `s_i = D^μ [w]` on functions.
    pub fn node_reflection(&self, i: usize) -> Result<(Vec<i64>, usize)> {
        if i == 0 {
            let th = self.d.theta();
            Ok((
                th.coroot.iter().map(|c| -c).collect(),
                self.g.reflection(&self.d, self.d.highest_root),
            ))
        } else if i <= self.rank() {
            Ok((vec![0; self.dim()], self.g.simple(i - 1)))
        } else {
            Err(Error::NotFound(format!("node {i} out of range")))
        }
    }

    /// `e^{α_i}` as a Laurent polynomial, with `e^{α_0} = q^2 e^{-θ}`.
    pub fn node_root_poly(&self, i: usize) -> Result<Poly> {
        if i == 0 {
            let th: Vec<i64> = self.d.theta().x.iter().map(|c| -c).collect();
            Ok(Poly::x_int(&th).mul(&Poly::q_pow(&crate::scalars::rat(2))?))
        } else if i <= self.rank() {
            Ok(Poly::x_int(&self.d.simple_roots[i - 1]))
        } else {
            Err(Error::NotFound(format!("node {i} out of range")))
        }
    }

    /// The monomial map of `D^μ [w]`: `e^λ ↦ q^{2<wλ,μ>} e^{wλ}`.
    pub fn subst_mono(&self, w: usize, mu: &[i64], m: &Mono) -> Result<Mono> {
        let n = self.dim();
        let half = m.x_exps(n);
        if half.iter().all(|e| *e == 0) {
            return Ok(m.clone());
        }
        let wx = self
            .g
            .get(w)
            .x
            .apply(&half.iter().map(|e| *e as i64).collect::<Vec<_>>());
        let mut e = m.exps()[..m.exps().len().min(VAR_X0)].to_vec();
        e.resize(VAR_X0 + n, 0);
        for i in 0..n {
            e[VAR_X0 + i] = wx[i] as i32;
        }
        if mu.iter().any(|c| *c != 0) {
            // 2<wλ, μ> with λ in half units is <wλ_half, μ>.
            let shift = self.d.pair(&wx, mu);
            e[VAR_Q] += q_units(&shift)?;
        }
        Ok(Mono::from_exps(&e))
    }

    /// `(D^μ [w]) f`.
    pub fn subst(&self, w: usize, mu: &[i64], f: &Frac) -> Result<Frac> {
        if w == 0 && mu.iter().all(|c| *c == 0) {
            return Ok(f.clone());
        }
        f.map_automorphism(|m| self.subst_mono(w, mu, m))
    }
}
