//! The scalar shift equation `x(qz) - q^l x(z) = target(z)`.
//!
//! On `z^m` it reads `(q^m - q^l) x_m = target_m`, so it is solvable iff the
//! resonant coefficient `target_l` vanishes, and then `x` is unique up to
//! the kernel `c·z^l`.

use super::zpoly::{q_int, ZPoly};
use crate::error::Result;
use crate::scalars::Frac;

#[derive(Clone, Debug)]
pub struct ShiftSolution {
    pub l: i64,
    /// The particular solution with zero `z^l` coefficient.
    pub solution: Option<ZPoly>,
    /// `target_l`; nonzero exactly when there is no solution.
    pub obstruction: Frac,
}

impl ShiftSolution {
    pub fn solvable(&self) -> bool {
        self.solution.is_some()
    }

    /// The homogeneous solutions are `c·z^l`.
    pub fn kernel_degree(&self) -> i64 {
        self.l
    }
}

pub fn solve_shift_equation(l: i64, target: &ZPoly) -> Result<ShiftSolution> {
    let obstruction = target.coeff(l);
    if !obstruction.is_zero() {
        return Ok(ShiftSolution {
            l,
            solution: None,
            obstruction,
        });
    }
    let ql = q_int(l);
    let mut x = ZPoly::zero();
    for (m, c) in &target.coeffs {
        x.add_term(*m, c.div(&q_int(*m).sub(&ql))?);
    }
    Ok(ShiftSolution {
        l,
        solution: Some(x),
        obstruction,
    })
}

/// `x(qz) - q^l x(z)`.
pub fn shift_operator(l: i64, x: &ZPoly) -> ZPoly {
    x.q_shift().sub(&x.scale(&q_int(l)))
}
