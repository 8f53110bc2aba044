//! Reading polynomial text such as `e1*(e1^4 + e2^2) - 1/12*t2` into a class.

use crate::chow::{Class, Ring};
use crate::rational::Rat;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("polynomial syntax error at byte {pos}: {msg}")]
pub struct ExprError {
    pub pos: usize,
    pub msg: String,
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    ring: &'a Ring,
}

/// Parses `text` as a polynomial in the variables of `ring`. Supports `+ - *`,
/// division by integer constants, `^` with a nonnegative integer exponent and
/// parentheses.
pub fn parse_class(ring: &Ring, text: &str) -> Result<Class, ExprError> {
    let mut p = Parser { src: text.as_bytes(), pos: 0, ring };
    let c = p.sum()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.err("trailing input"));
    }
    Ok(c)
}

impl Parser<'_> {
    fn err(&self, msg: &str) -> ExprError {
        ExprError { pos: self.pos, msg: msg.to_string() }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn sum(&mut self) -> Result<Class, ExprError> {
        let mut acc = self.ring.zero();
        let mut sign = 1;
        match self.peek() {
            Some(b'-') => {
                sign = -1;
                self.pos += 1;
            }
            Some(b'+') => self.pos += 1,
            _ => {}
        }
        loop {
            let t = self.product()?;
            acc = if sign > 0 { acc.add(&t) } else { acc.sub(&t) };
            match self.peek() {
                Some(b'+') => sign = 1,
                Some(b'-') => sign = -1,
                _ => return Ok(acc),
            }
            self.pos += 1;
        }
    }

    fn product(&mut self) -> Result<Class, ExprError> {
        let mut acc = self.power()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    let f = self.power()?;
                    acc = acc.mul(&f);
                }
                Some(b'/') => {
                    self.pos += 1;
                    let d = self.integer()?;
                    if d == 0 {
                        return Err(self.err("division by zero"));
                    }
                    acc = acc.scale(&Rat::new(1, d));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn power(&mut self) -> Result<Class, ExprError> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let e = self.integer()?;
            if e < 0 {
                return Err(self.err("negative exponent"));
            }
            return Ok(base.pow(e as u32));
        }
        Ok(base)
    }

    fn integer(&mut self) -> Result<i64, ExprError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected an integer"));
        }
        std::str::from_utf8(&self.src[start..self.pos]).unwrap().parse().map_err(|_| self.err("integer overflow"))
    }

    fn atom(&mut self) -> Result<Class, ExprError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let c = self.sum()?;
                if self.peek() != Some(b')') {
                    return Err(self.err("expected ')'"));
                }
                self.pos += 1;
                Ok(c)
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.integer()?;
                Ok(self.ring.constant(Rat::int(n)))
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_alphanumeric()
                        || self.src[self.pos] == b'_'
                        || self.src[self.pos] == b'\'')
                {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                match self.ring.var_index(name) {
                    Some(i) => Ok(self.ring.var_at(i)),
                    None => {
                        self.pos = start;
                        Err(self.err(&format!("unknown variable {name}")))
                    }
                }
            }
            _ => Err(self.err("expected a term")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chow::Var;

    #[test]
    fn parses_rational_polynomials() {
        let r = Ring::free(vec![Var { name: "e1".into(), degree: 1 }, Var { name: "e2".into(), degree: 2 }], 6);
        let a = parse_class(&r, "e1*(e1 + 2*e2) - 1/12*e2^2").unwrap();
        let e1 = r.var("e1");
        let e2 = r.var("e2");
        let b = e1.pow(2).add(&e1.mul(&e2).scale_int(2)).sub(&e2.pow(2).scale(&Rat::new(1, 12)));
        assert_eq!(a, b);
        assert_eq!(parse_class(&r, "-e1^7").unwrap(), r.zero());
        assert!(parse_class(&r, "e3").is_err());
        assert!(parse_class(&r, "e1 +").is_err());
    }
}
