//! JSON encodings for polynomials and scalars.
//!
//! A polynomial is a list of terms `{qexp, texp, vexp, coeff}` with optional
//! `x` (rational exponents of the torus coordinates); a fraction is
//! `{num, den}` with `den` a list of factors (repeated per multiplicity), so
//! the factored form survives a round trip.

use serde::{Deserialize, Serialize};

use super::frac::Frac;
use super::poly::{q_exp_of, q_units, Mono, Poly, VAR_Q, VAR_T, VAR_V, VAR_X0, X_UNIT};
use super::rational::{fmt_rational, parse_rational, Rational};
use crate::error::{Error, Result};

fn zero_exp() -> String {
    "0".into()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    #[serde(default = "zero_exp")]
    pub qexp: String,
    #[serde(default)]
    pub texp: i32,
    #[serde(default)]
    pub vexp: i32,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub x: Vec<String>,
    pub coeff: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FracJson {
    pub num: Vec<TermJson>,
    #[serde(default)]
    pub den: Vec<Vec<TermJson>>,
}

pub fn poly_to_json(p: &Poly) -> Vec<TermJson> {
    p.terms()
        .iter()
        .map(|(m, c)| {
            let nx = m.exps().len().saturating_sub(VAR_X0);
            TermJson {
                qexp: fmt_rational(&q_exp_of(m.get(VAR_Q))),
                texp: m.get(VAR_T),
                vexp: m.get(VAR_V),
                x: m.x_exps(nx)
                    .iter()
                    .map(|e| fmt_rational(&Rational::new((*e).into(), X_UNIT.into())))
                    .collect(),
                coeff: fmt_rational(c),
            }
        })
        .collect()
}

pub fn poly_from_json(terms: &[TermJson]) -> Result<Poly> {
    let mut out = Vec::with_capacity(terms.len());
    for t in terms {
        let mut e = vec![q_units(&parse_rational(&t.qexp)?)?, t.texp, t.vexp];
        for x in &t.x {
            let r = parse_rational(x)? * Rational::from_integer(X_UNIT.into());
            let v = super::rational::to_i64(&r)
                .ok_or_else(|| Error::Exponent(format!("x exponent {x} must be half-integral")))?;
            e.push(v as i32);
        }
        out.push((Mono::from_exps(&e), parse_rational(&t.coeff)?));
    }
    Ok(Poly::from_terms(out))
}

pub fn frac_to_json(f: &Frac) -> FracJson {
    let den = f
        .den_factors()
        .iter()
        .flat_map(|(g, m)| std::iter::repeat_n(poly_to_json(g), *m as usize))
        .collect();
    FracJson {
        num: poly_to_json(f.num()),
        den,
    }
}

pub fn frac_from_json(j: &FracJson) -> Result<Frac> {
    let mut out = Frac::from_poly(poly_from_json(&j.num)?);
    for d in &j.den {
        out = out.mul(&Frac::inv_poly(&poly_from_json(d)?)?);
    }
    Ok(out)
}

pub fn frac_to_value(f: &Frac) -> serde_json::Value {
    serde_json::to_value(frac_to_json(f)).expect("serializable")
}

pub fn frac_from_value(v: &serde_json::Value) -> Result<Frac> {
    let j: FracJson =
        serde_json::from_value(v.clone()).map_err(|e| Error::Schema(e.to_string()))?;
    frac_from_json(&j)
}

#[cfg(test)]
mod tests {
    use super::super::rational::ratio;
    use super::*;

    #[test]
    fn frac_round_trip() {
        let num = Poly::q_pow(&ratio(1, 2))
            .unwrap()
            .add(&Poly::x_int(&[0, -1]));
        let den = Poly::t_pow(1).sub(&Poly::v_pow(2));
        let f = Frac::ratio(num, &den)
            .unwrap()
            .mul(&Frac::inv_poly(&Poly::x_int(&[1, 0]).sub(&Poly::one())).unwrap());
        let j = serde_json::to_string(&frac_to_json(&f)).unwrap();
        let back: FracJson = serde_json::from_str(&j).unwrap();
        let g = frac_from_json(&back).unwrap();
        assert_eq!(g, f);
        assert_eq!(g.den_factors().len(), 2);
    }
}
