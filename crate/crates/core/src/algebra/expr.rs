//! Parser for exact polynomial strings such as `i*f*eta - 1/2*mu^2` or
//! `(1/2+3/4*i)*hbar`. Accepts everything `ParamPoly`'s `Display` writes.

use num_bigint::BigInt;
use num_traits::One;

use super::poly::{ParamPoly, Var};
use super::scalar::{GaussRational, Rational};
use crate::error::{Error, Result};

const MAX_DEPTH: usize = 64;
const MAX_EXPONENT: u32 = 32;
const MAX_TERMS: usize = 4096;
const MAX_DIGITS: usize = 4096;

pub fn parse_poly(s: &str) -> Result<ParamPoly> {
    let mut p = Parser {
        src: s.as_bytes(),
        pos: 0,
        depth: 0,
    };
    let v = p.expr()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(Error::parse(p.pos, "trailing input"));
    }
    Ok(v)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    depth: usize,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn check(&self, p: ParamPoly) -> Result<ParamPoly> {
        if p.num_terms() > MAX_TERMS {
            return Err(Error::parse(self.pos, "expression too large"));
        }
        Ok(p)
    }

    fn expr(&mut self) -> Result<ParamPoly> {
        self.depth += 1;
        if self.depth > MAX_DEPTH {
            return Err(Error::parse(self.pos, "nesting too deep"));
        }
        let mut acc = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                -self.term()?
            }
            Some(b'+') => {
                self.pos += 1;
                self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc = self.check(&acc + &t)?;
                }
                Some(b'-') => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc = self.check(&acc - &t)?;
                }
                _ => break,
            }
        }
        self.depth -= 1;
        Ok(acc)
    }

    fn term(&mut self) -> Result<ParamPoly> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    let t = self.factor()?;
                    acc = self.check(&acc * &t)?;
                }
                Some(b'/') => {
                    self.pos += 1;
                    let at = self.pos;
                    let d = self
                        .factor()?
                        .as_constant()
                        .and_then(|c| c.inv())
                        .ok_or_else(|| Error::parse(at, "divisor must be a nonzero constant"))?;
                    acc = acc.scale(&d);
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<ParamPoly> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let start = self.pos;
            while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                self.pos += 1;
            }
            let e: u32 = std::str::from_utf8(&self.src[start..self.pos])
                .ok()
                .and_then(|t| t.parse().ok())
                .filter(|&e| e <= MAX_EXPONENT)
                .ok_or_else(|| Error::parse(start, "bad exponent"))?;
            let mut r = ParamPoly::one();
            for _ in 0..e {
                r = self.check(&r * &base)?;
            }
            return Ok(r);
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<ParamPoly> {
        let at = self.pos;
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let v = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(Error::parse(self.pos, "expected `)`"));
                }
                self.pos += 1;
                Ok(v)
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                if self.pos - start > MAX_DIGITS {
                    return Err(Error::parse(start, "integer literal too long"));
                }
                let n: BigInt = std::str::from_utf8(&self.src[start..self.pos])
                    .unwrap()
                    .parse()
                    .map_err(|_| Error::parse(start, "bad integer"))?;
                Ok(ParamPoly::from(Rational::from_integer(n)))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                while self.pos < self.src.len() && self.src[self.pos].is_ascii_alphanumeric() {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                if name == "i" {
                    return Ok(ParamPoly::constant(GaussRational::i()));
                }
                Var::from_name(name)
                    .map(ParamPoly::var)
                    .ok_or_else(|| Error::parse(start, format!("unknown symbol `{name}`")))
            }
            _ => Err(Error::parse(at, "expected a number, symbol or `(`")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::scalar::rat;
    use num_traits::Zero;
    use proptest::prelude::*;

    #[test]
    fn parses_displayed_forms() {
        let p = parse_poly("i*f*eta - 1/2").unwrap();
        assert_eq!(p.to_string(), "i*f*eta - 1/2");
        assert_eq!(
            parse_poly("1/2+3/4*i").unwrap().as_constant().unwrap(),
            GaussRational::new(rat(1, 2), rat(3, 4))
        );
        assert_eq!(parse_poly("-i").unwrap().to_string(), "-i");
        assert_eq!(
            parse_poly("(1+2*i)*f^2").unwrap().to_string(),
            "(1+2*i)*f^2"
        );
        assert_eq!(parse_poly("0").unwrap(), ParamPoly::zero());
    }

    #[test]
    fn rejects_garbage() {
        for bad in [
            "", "1/0", "f/eta", "x", "(1", "1 2", "f^", "f^999", "q15", "*",
        ] {
            assert!(parse_poly(bad).is_err(), "{bad}");
        }
    }

    fn arb_poly() -> impl Strategy<Value = ParamPoly> {
        let coeff = (-5i64..5, 1i64..4, -5i64..5, 1i64..4)
            .prop_map(|(a, b, c, d)| GaussRational::new(rat(a, b), rat(c, d)));
        let mono = proptest::collection::vec(0usize..20, 0..4);
        proptest::collection::vec((coeff, mono), 0..5).prop_map(|ts| {
            let mut p = ParamPoly::zero();
            for (c, vars) in ts {
                let mut t = ParamPoly::constant(c);
                for v in vars {
                    t = &t * &ParamPoly::var(Var::from_index(v));
                }
                p = &p + &t;
            }
            p
        })
    }

    proptest! {
        #[test]
        fn display_parse_round_trip(p in arb_poly()) {
            let s = p.to_string();
            prop_assert_eq!(parse_poly(&s).unwrap(), p);
        }
    }
}
