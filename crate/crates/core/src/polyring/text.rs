//! Plain-text polynomial format.
//!
//! Printed form: terms in descending degrevlex order joined by ` + `, each
//! term written `c * x1^a1 x3^a3` (zero exponents omitted, coefficient always
//! present as `p` or `p/q` in lowest terms, constant terms as bare `c`). The
//! zero polynomial prints as `0`.
//!
//! The parser accepts that form bit-exactly and is lenient otherwise: `-`
//! between terms, implicit unit coefficients, `*` or whitespace between
//! factors, and `x2` for `x2^1`.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{Monomial, MonomialOrder, PolyError, Polynomial, MAX_VARS};

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.sorted_terms(MonomialOrder::DegRevLex).iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{c}")?;
            if !m.is_one() {
                f.write_str(" *")?;
                for v in m.support() {
                    write!(f, " x{}^{}", v + 1, m.exponent(v))?;
                }
            }
        }
        Ok(())
    }
}

impl Polynomial {
    /// Parses a polynomial in a ring with exactly `nvars` variables.
    pub fn parse(s: &str, nvars: usize) -> Result<Polynomial, PolyError> {
        let terms = parse_terms(s)?;
        let needed = terms.iter().map(|(m, _)| m.span()).max().unwrap_or(0);
        if needed > nvars {
            return Err(PolyError::Parse(format!(
                "variable x{needed} outside ring of {nvars} variables"
            )));
        }
        let mut p = Polynomial::zero(nvars);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        Ok(p)
    }

    /// Parses with the ring size inferred from the highest variable index.
    pub fn parse_auto(s: &str) -> Result<Polynomial, PolyError> {
        let terms = parse_terms(s)?;
        let nvars = terms.iter().map(|(m, _)| m.span()).max().unwrap_or(0);
        let mut p = Polynomial::zero(nvars);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        Ok(p)
    }
}

struct Lexer<'a> {
    s: &'a [u8],
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.pos).copied()
    }

    fn digits(&mut self) -> Option<&'a str> {
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        (self.pos > start).then(|| std::str::from_utf8(&self.s[start..self.pos]).unwrap())
    }

    fn err(&self, what: &str) -> PolyError {
        PolyError::Parse(format!("{what} at byte {}", self.pos))
    }
}

fn parse_terms(s: &str) -> Result<Vec<(Monomial, BigRational)>, PolyError> {
    let mut lx = Lexer { s: s.as_bytes(), pos: 0 };
    let mut out = Vec::new();
    let mut first = true;
    loop {
        let mut sign = BigRational::one();
        match lx.peek() {
            None if first => return Err(lx.err("empty polynomial")),
            None => break,
            Some(b'+') if !first => lx.pos += 1,
            Some(b'-') => {
                lx.pos += 1;
                sign = -sign;
            }
            Some(_) if first => {}
            Some(_) => return Err(lx.err("expected `+` or `-`")),
        }
        // a printed negative coefficient follows `+`, as in `+ -3 * x1^1`
        if lx.peek() == Some(b'-') {
            lx.pos += 1;
            sign = -sign;
        }
        let (m, c) = parse_term(&mut lx)?;
        out.push((m, c * sign));
        first = false;
    }
    Ok(out)
}

fn parse_term(lx: &mut Lexer<'_>) -> Result<(Monomial, BigRational), PolyError> {
    let mut coeff = BigRational::one();
    let mut exps = [0u32; MAX_VARS];
    let mut factors = 0;
    loop {
        match lx.peek() {
            Some(c) if c.is_ascii_digit() => {
                let num: BigInt = lx.digits().unwrap().parse().unwrap();
                let mut value = BigRational::from_integer(num);
                if lx.s.get(lx.pos) == Some(&b'/') {
                    lx.pos += 1;
                    let den: BigInt = lx
                        .digits()
                        .ok_or_else(|| lx.err("expected denominator"))?
                        .parse()
                        .unwrap();
                    if den.is_zero() {
                        return Err(lx.err("zero denominator"));
                    }
                    value = BigRational::new(value.numer().clone(), den);
                }
                coeff *= value;
            }
            Some(b'x') => {
                lx.pos += 1;
                let idx: usize = lx
                    .digits()
                    .ok_or_else(|| lx.err("expected variable index"))?
                    .parse()
                    .map_err(|_| lx.err("bad variable index"))?;
                if idx == 0 || idx > MAX_VARS {
                    return Err(lx.err("variable index out of range"));
                }
                let mut e = 1u32;
                if lx.peek() == Some(b'^') {
                    lx.pos += 1;
                    lx.skip_ws();
                    e = lx
                        .digits()
                        .ok_or_else(|| lx.err("expected exponent"))?
                        .parse()
                        .map_err(|_| lx.err("bad exponent"))?;
                }
                exps[idx - 1] += e;
            }
            _ => return Err(lx.err("expected coefficient or variable")),
        }
        factors += 1;
        match lx.peek() {
            Some(b'*') => {
                lx.pos += 1;
            }
            Some(c) if c == b'x' || c.is_ascii_digit() => {}
            _ => break,
        }
    }
    debug_assert!(factors > 0);
    Ok((Monomial::from_exponents(&exps)?, coeff))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prints_canonical_form() {
        let p = Polynomial::parse("x1^2 - x2^2 + 3/6", 2).unwrap();
        assert_eq!(p.to_string(), "1 * x1^2 + -1 * x2^2 + 1/2");
        assert_eq!(Polynomial::zero(3).to_string(), "0");
    }

    #[test]
    fn lenient_input() {
        let a = Polynomial::parse("x1+x2", 2).unwrap();
        let b = Polynomial::parse("1 * x1^1 + 1 * x2^1", 2).unwrap();
        assert_eq!(a, b);
        let c = Polynomial::parse("2 x1 x2^3 - x1*x1", 2).unwrap();
        assert_eq!(c.to_string(), "2 * x1^1 x2^3 + -1 * x1^2");
    }

    #[test]
    fn round_trip_printed_form() {
        let s = "-3/4 * x1^2 x3^5 + 7 * x2^1 + -1";
        let p = Polynomial::parse(s, 3).unwrap();
        assert_eq!(p.to_string(), s);
    }

    #[test]
    fn rejects_out_of_ring_variable() {
        assert!(Polynomial::parse("x3", 2).is_err());
        assert!(Polynomial::parse("", 2).is_err());
        assert!(Polynomial::parse("x1 +", 2).is_err());
        assert!(Polynomial::parse("1/0", 2).is_err());
    }
}
