use num_traits::{One, Signed, Zero};

use super::frac::Frac;
use super::poly::{q_exp_of, Mono, VAR_Q, VAR_T, VAR_V};
use super::rational::{fmt_rational, pow_i, rational_pow, Rational};
use crate::error::{Error, Result};

/// Numerical values for some of q, t, v; unset variables stay symbolic.
#[derive(Clone, Debug, Default)]
pub struct Specialization {
    pub q: Option<Rational>,
    pub t: Option<Rational>,
    pub v: Option<Rational>,
}

/// Substitutes the given values exactly. Fractional powers of q must come
/// out rational, q may not be a root of unity, and a vanishing denominator
/// is reported as a pole.
pub fn specialize(f: &Frac, at: &Specialization) -> Result<Frac> {
    if let Some(q) = &at.q {
        if q.is_zero() || q.abs().is_one() {
            return Err(Error::RootOfUnity(format!("q = {}", fmt_rational(q))));
        }
    }
    for (name, val) in [("t", &at.t), ("v", &at.v)] {
        if let Some(x) = val {
            if x.is_zero() && name == "t" {
                return Err(Error::DivisionByZero);
            }
        }
    }
    f.map_monos(|m| {
        let mut e = m.exps().to_vec();
        let mut c = Rational::one();
        if let Some(q) = &at.q {
            if m.get(VAR_Q) != 0 {
                let ex = q_exp_of(m.get(VAR_Q));
                c *= rational_pow(q, &ex).ok_or_else(|| {
                    Error::Irrational(format!("{}^{}", fmt_rational(q), fmt_rational(&ex)))
                })?;
                e[VAR_Q] = 0;
            }
        }
        for (var, val) in [(VAR_T, &at.t), (VAR_V, &at.v)] {
            if let Some(x) = val {
                let k = m.get(var);
                if k != 0 {
                    if x.is_zero() && k < 0 {
                        return Err(Error::DivisionByZero);
                    }
                    c *= pow_i(x, k);
                    e[var] = 0;
                }
            }
        }
        Ok((Mono::from_exps(&e), c))
    })
}
