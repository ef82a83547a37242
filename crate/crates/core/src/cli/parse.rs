//! Reader for polynomial expressions such as `1/2 z^4 - x*y*z^2 + 3`.
//!
//! ```text
//! expression := ['+'|'-'] term (('+'|'-') term)*
//! term       := [rational] ('*'? factor)*
//! factor     := variable ('^' integer)?
//! rational   := integer ('/' integer)?
//! ```

use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::{Exponent, Polynomial, Rational, Ring};

pub fn parse_polynomial(src: &str, ring: &Arc<Ring>) -> Result<Polynomial> {
    let mut p = Parser { src: src.as_bytes(), pos: 0 };
    let poly = p.expression(ring)?;
    p.skip_ws();
    if p.pos < p.src.len() {
        return Err(Error::parse(p.pos, format!("unexpected `{}`", p.src[p.pos] as char)));
    }
    Ok(poly)
}

/// Parses `p`, `-p` or `p/q`.
pub fn parse_rational(src: &str) -> Result<Rational> {
    let mut p = Parser { src: src.as_bytes(), pos: 0 };
    p.skip_ws();
    let negative = p.eat(b'-');
    if !negative {
        p.eat(b'+');
    }
    p.skip_ws();
    if !p.peek().is_some_and(|c| c.is_ascii_digit()) {
        return Err(Error::parse(p.pos, "expected a number"));
    }
    let r = p.rational()?;
    p.skip_ws();
    if p.pos < p.src.len() {
        return Err(Error::parse(p.pos, "trailing characters after number"));
    }
    Ok(if negative { -r } else { r })
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(|c| c.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expression(&mut self, ring: &Arc<Ring>) -> Result<Polynomial> {
        let mut out = Polynomial::zero(ring);
        self.skip_ws();
        let mut negative = if self.eat(b'-') {
            true
        } else {
            self.eat(b'+');
            false
        };
        loop {
            let (c, e) = self.term(ring)?;
            out.add_term(e, if negative { -c } else { c });
            self.skip_ws();
            match self.peek() {
                Some(b'+') => negative = false,
                Some(b'-') => negative = true,
                _ => break,
            }
            self.pos += 1;
        }
        Ok(out)
    }

    fn term(&mut self, ring: &Arc<Ring>) -> Result<(Rational, Exponent)> {
        self.skip_ws();
        let start = self.pos;
        let mut coeff = Rational::one();
        let mut exps = vec![0u32; ring.nvars()];
        let mut seen = false;
        if self.peek().is_some_and(|c| c.is_ascii_digit()) {
            coeff = self.rational()?;
            seen = true;
        }
        loop {
            self.skip_ws();
            let explicit = self.eat(b'*');
            if explicit {
                self.skip_ws();
            }
            match self.peek() {
                Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                    let (var, k) = self.factor(ring)?;
                    exps[var] = exps[var]
                        .checked_add(k)
                        .ok_or_else(|| Error::parse(self.pos, "exponent overflow"))?;
                    seen = true;
                }
                _ if explicit => return Err(Error::parse(self.pos, "expected a variable after `*`")),
                _ => break,
            }
        }
        if !seen {
            return Err(Error::parse(start, "expected a term"));
        }
        Ok((coeff, Exponent::new(exps)))
    }

    fn factor(&mut self, ring: &Arc<Ring>) -> Result<(usize, u32)> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_alphanumeric() || c == b'_') {
            self.pos += 1;
        }
        let name = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
        let var = ring.index_of(name).ok_or_else(|| Error::UnknownVariable(name.to_string()))?;
        self.skip_ws();
        let mut k = 1;
        if self.eat(b'^') {
            self.skip_ws();
            let at = self.pos;
            let digits = self.digits()?;
            k = digits.parse::<u32>().map_err(|_| Error::parse(at, "exponent out of range"))?;
        }
        Ok((var, k))
    }

    fn digits(&mut self) -> Result<&str> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(Error::parse(start, "expected digits"));
        }
        Ok(std::str::from_utf8(&self.src[start..self.pos]).expect("ascii"))
    }

    fn rational(&mut self) -> Result<Rational> {
        let num: BigInt = self.digits()?.parse().expect("digits");
        let save = self.pos;
        self.skip_ws();
        if self.eat(b'/') {
            self.skip_ws();
            let den: BigInt = self.digits()?.parse().expect("digits");
            if den.is_zero() {
                return Err(Error::ZeroDenominator);
            }
            Ok(Rational::new(num, den))
        } else {
            self.pos = save;
            Ok(Rational::from_integer(num))
        }
    }
}
