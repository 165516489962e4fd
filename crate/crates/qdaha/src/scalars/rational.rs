//! Helpers around arbitrary precision rationals.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Formats as `p` or `p/q`.
pub fn fmt_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("bad rational '{s}'"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(Error::DivisionByZero);
            }
            Ok(Rational::new(n, d))
        }
        None => Ok(Rational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

pub fn to_i64(r: &Rational) -> Option<i64> {
    if r.is_integer() {
        r.numer().to_i64()
    } else {
        None
    }
}

/// Exact integer `k`-th root of a non-negative big integer, if it exists.
fn int_root(n: &BigInt, k: u32) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let r = n.nth_root(k);
    if num_traits::pow(r.clone(), k as usize) == *n {
        Some(r)
    } else {
        None
    }
}

/// Exact rational power `base^e`; `None` when the result is irrational.
pub fn rational_pow(base: &Rational, e: &Rational) -> Option<Rational> {
    if base.is_zero() {
        return if e.is_positive() {
            Some(Rational::zero())
        } else {
            None
        };
    }
    let den = e.denom().to_u32()?;
    let num = e.numer().to_i32()?;
    let mut b = base.clone();
    if den != 1 {
        let neg = b.is_negative();
        if neg && den % 2 == 0 {
            return None;
        }
        let n = int_root(&b.numer().abs(), den)?;
        let d = int_root(b.denom(), den)?;
        b = Rational::new(if neg { -n } else { n }, d);
    }
    Some(pow_i(&b, num))
}

pub fn pow_i(b: &Rational, e: i32) -> Rational {
    let p = num_traits::pow(b.clone(), e.unsigned_abs() as usize);
    if e < 0 {
        p.recip()
    } else {
        p
    }
}

/// Floor of a rational as an integer.
pub fn floor_i64(r: &Rational) -> Option<i64> {
    r.floor().to_integer().to_i64()
}

pub fn is_unit_sign(r: &Rational) -> bool {
    r.abs().is_one()
}

pub fn gcd_i64(a: i64, b: i64) -> i64 {
    a.gcd(&b)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format_round_trip() {
        for s in ["0", "3", "-7/4", "12/5"] {
            assert_eq!(fmt_rational(&parse_rational(s).unwrap()), s);
        }
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn exact_powers() {
        assert_eq!(rational_pow(&ratio(4, 9), &ratio(1, 2)), Some(ratio(2, 3)));
        assert_eq!(rational_pow(&rat(2), &ratio(1, 2)), None);
        assert_eq!(rational_pow(&rat(-8), &ratio(-1, 3)), Some(ratio(-1, 2)));
        assert_eq!(rational_pow(&rat(-4), &ratio(1, 2)), None);
    }
}
