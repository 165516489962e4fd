//! Text syntax for scalars, accepting what `Display` prints: sums and
//! products of rationals and the variables `q, t, v, x1, x2, …`, powers
//! `^k`, `^-k`, `^(a/b)` (also `q^1/2` for a rational exponent), parentheses
//! and division.

use super::frac::Frac;
use super::poly::{Mono, Poly, VAR_T, VAR_V, VAR_X0, X_UNIT};
use super::rational::{parse_rational, Rational};
use crate::error::{Error, Result};

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
    src: &'a str,
}

impl Parser<'_> {
    fn err(&self, what: &str) -> Error {
        Error::Parse(format!("{what} at offset {} in '{}'", self.pos, self.src))
    }

    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn digits(&mut self) -> &str {
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        &self.src[start..self.pos]
    }

    fn expr(&mut self) -> Result<Frac> {
        let mut acc = if self.eat(b'-') {
            self.term()?.neg()
        } else {
            self.term()?
        };
        loop {
            if self.eat(b'+') {
                acc = acc.add(&self.term()?);
            } else if self.eat(b'-') {
                acc = acc.sub(&self.term()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Frac> {
        let mut acc = self.factor()?;
        loop {
            if self.eat(b'*') {
                acc = acc.mul(&self.factor()?);
            } else if self.eat(b'/') {
                acc = acc.div(&self.factor()?)?;
            } else {
                return Ok(acc);
            }
        }
    }

    /// `k`, `-k`, `a/b`, or any of these in parentheses.
    fn exponent(&mut self) -> Result<Rational> {
        let paren = self.eat(b'(');
        self.skip_ws();
        let neg = self.eat(b'-');
        self.skip_ws();
        let num = self.digits().to_string();
        if num.is_empty() {
            return Err(self.err("expected an exponent"));
        }
        let mut text = num;
        if self.s.get(self.pos) == Some(&b'/')
            && self.s.get(self.pos + 1).is_some_and(u8::is_ascii_digit)
        {
            self.pos += 1;
            text = format!("{text}/{}", self.digits());
        }
        if paren && !self.eat(b')') {
            return Err(self.err("expected ')'"));
        }
        let r = parse_rational(&text)?;
        Ok(if neg { -r } else { r })
    }

    fn int_exponent(&mut self) -> Result<i32> {
        let r = self.exponent()?;
        if !r.is_integer() {
            return Err(self.err("expected an integer exponent"));
        }
        i32::try_from(r.to_integer()).map_err(|_| self.err("exponent too large"))
    }

    fn factor(&mut self) -> Result<Frac> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(b')') {
                    return Err(self.err("expected ')'"));
                }
                if self.eat(b'^') {
                    let k = self.int_exponent()?;
                    return inner.pow(k);
                }
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.digits().to_string();
                Ok(Frac::rational(parse_rational(&n)?))
            }
            Some(b'q') => {
                self.pos += 1;
                let e = if self.eat(b'^') {
                    self.exponent()?
                } else {
                    Rational::from_integer(1.into())
                };
                Ok(Frac::from_poly(Poly::q_pow(&e)?))
            }
            Some(c @ (b't' | b'v')) => {
                self.pos += 1;
                let e = if self.eat(b'^') {
                    self.int_exponent()?
                } else {
                    1
                };
                let var = if c == b't' { VAR_T } else { VAR_V };
                Ok(Frac::mono(Mono::var(var, e)))
            }
            Some(b'x') => {
                self.pos += 1;
                let idx: usize = self
                    .digits()
                    .parse()
                    .map_err(|_| self.err("expected a coordinate index"))?;
                if idx == 0 {
                    return Err(self.err("coordinates are numbered from 1"));
                }
                let e = if self.eat(b'^') {
                    self.exponent()?
                } else {
                    Rational::from_integer(1.into())
                };
                let units = e * Rational::from_integer(X_UNIT.into());
                if !units.is_integer() {
                    return Err(self.err("x exponents must be half-integral"));
                }
                let u = i32::try_from(units.to_integer())
                    .map_err(|_| self.err("exponent too large"))?;
                Ok(Frac::mono(Mono::var(VAR_X0 + idx - 1, u)))
            }
            _ => Err(self.err("unexpected input")),
        }
    }
}

/// Parses a scalar such as `(t - t^-1) / (x1 - 1)` or `2*q^(1/2)*v`.
pub fn parse_frac(s: &str) -> Result<Frac> {
    let mut p = Parser {
        s: s.as_bytes(),
        pos: 0,
        src: s,
    };
    let out = p.expr()?;
    if p.peek().is_some() {
        return Err(p.err("trailing input"));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::super::rational::{rat, ratio};
    use super::*;

    #[test]
    fn display_round_trips() {
        let k = Frac::from_poly(Poly::t_pow(1).sub(&Poly::t_pow(-1)));
        let f = k.mul(
            &Frac::inv_poly(&Poly::x_int(&[1]).sub(&Poly::q_pow(&ratio(1, 2)).unwrap())).unwrap(),
        );
        for x in [
            k.clone(),
            f,
            Frac::zero(),
            Frac::int(-3),
            Frac::rational(ratio(-5, 7)),
        ] {
            assert_eq!(parse_frac(&x.to_string()).unwrap(), x, "{x}");
        }
    }

    #[test]
    fn exponent_forms() {
        let half = Frac::from_poly(Poly::q_pow(&ratio(1, 2)).unwrap());
        assert_eq!(parse_frac("q^1/2").unwrap(), half);
        assert_eq!(parse_frac("q^(1/2)").unwrap(), half);
        assert_eq!(parse_frac("q^-1/2 * q^1/2").unwrap(), Frac::one());
        assert_eq!(parse_frac("6/4").unwrap(), Frac::rational(ratio(3, 2)));
        assert_eq!(
            parse_frac("(1 + t)^2").unwrap(),
            parse_frac("1 + 2*t + t^2").unwrap()
        );
        assert!(parse_frac("x2^(1/2)^2").is_err());
        assert_eq!(parse_frac("2*x1 - x1 - x1").unwrap(), Frac::zero());
        assert_eq!(parse_frac("t/t").unwrap(), Frac::rational(rat(1)));
    }

    #[test]
    fn errors() {
        for bad in ["", "q^", "x0", "t^1/2", "(1 + t", "1 +", "y"] {
            assert!(parse_frac(bad).is_err(), "{bad}");
        }
    }
}
