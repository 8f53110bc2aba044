//! Bundle expressions such as `dual(U) + 4*O` or `wedge(Q,2) * O(1)`.
//!
//! An expression evaluates to a [`SheafClass`] on any variety carrying the
//! named tautological bundles, and to a blockwise character on a product of
//! type-A flag factors.

use std::fmt;

use crate::chow::{ChowError, FlagFactor, Variety};
use crate::sheaves::SheafClass;
use crate::symfun::{lambda_powers, schur_of_character, GlCharacter, Partition};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BundleExpr {
    /// `O`, `O(a)` or `O(a,b,...)`.
    Line(Vec<i64>),
    Taut(String),
    Dual(Box<BundleExpr>),
    Det(Box<BundleExpr>),
    Wedge(Box<BundleExpr>, usize),
    Sym(Box<BundleExpr>, usize),
    Schur(Box<BundleExpr>, Partition),
    Sum(Vec<(i64, BundleExpr)>),
    Tensor(Vec<BundleExpr>),
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("bundle expression error at byte {pos}: {msg}")]
pub struct BundleSyntaxError {
    pub pos: usize,
    pub msg: String,
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum BundleEvalError {
    #[error("{0}")]
    Chow(#[from] ChowError),
    #[error("unknown tautological bundle {0} on this ambient")]
    Unknown(String),
    #[error("{0} has no character: only U and Q of Grassmannian factors are homogeneous here")]
    NotHomogeneous(String),
    #[error("O{0:?} does not match the {1} factor(s) of the ambient")]
    LineArity(Vec<i64>, usize),
    #[error("negative multiplicity in an exterior or symmetric power")]
    Virtual,
}

impl BundleExpr {
    pub fn trivial(r: i64) -> BundleExpr {
        BundleExpr::Sum(vec![(r, BundleExpr::Line(vec![0]))])
    }

    pub fn taut(name: &str) -> BundleExpr {
        BundleExpr::Taut(name.to_string())
    }

    pub fn dual(self) -> BundleExpr {
        BundleExpr::Dual(Box::new(self))
    }

    pub fn plus(self, k: i64, other: BundleExpr) -> BundleExpr {
        let mut parts = match self {
            BundleExpr::Sum(p) => p,
            e => vec![(1, e)],
        };
        parts.push((k, other));
        BundleExpr::Sum(parts)
    }

    pub fn to_sheaf(&self, x: &Variety) -> Result<SheafClass, BundleEvalError> {
        Ok(match self {
            BundleExpr::Line(a) => {
                if a.iter().all(|&v| v == 0) {
                    x.trivial(1)
                } else {
                    x.line(a)?
                }
            }
            BundleExpr::Taut(name) => x.bundle(name).map_err(|_| BundleEvalError::Unknown(name.clone()))?,
            BundleExpr::Dual(e) => e.to_sheaf(x)?.dual(),
            BundleExpr::Det(e) => e.to_sheaf(x)?.det(),
            BundleExpr::Wedge(e, k) => e.to_sheaf(x)?.wedge(*k),
            BundleExpr::Sym(e, k) => e.to_sheaf(x)?.sym(*k),
            BundleExpr::Schur(e, l) => e.to_sheaf(x)?.schur(l),
            BundleExpr::Sum(parts) => {
                let mut acc = SheafClass::zero(&x.ring);
                for (k, e) in parts {
                    acc = acc.add(&e.to_sheaf(x)?.scale(*k));
                }
                acc
            }
            BundleExpr::Tensor(parts) => {
                let mut acc = x.trivial(1);
                for e in parts {
                    acc = acc.tensor(&e.to_sheaf(x)?);
                }
                acc
            }
        })
    }

    /// Character on `flag`, the concatenation of the factors' variables.
    /// Block `j` of a factor carries the weights of `G_j^*`, where `G_j`
    /// are the graded pieces of the tautological flag (`U`, `Q` for a
    /// Grassmannian).
    pub fn to_character(&self, flag: &[FlagFactor]) -> Result<GlCharacter, BundleEvalError> {
        let n: usize = flag.iter().map(|f| f.n).sum();
        Ok(match self {
            BundleExpr::Line(a) => {
                let a: Vec<i64> = if a.len() == 1 {
                    vec![a[0]; flag.len()]
                } else if a.len() == flag.len() {
                    a.clone()
                } else {
                    return Err(BundleEvalError::LineArity(a.clone(), flag.len()));
                };
                let mut w = vec![0; n];
                let mut off = 0;
                for (f, &k) in flag.iter().zip(&a) {
                    for v in w.iter_mut().skip(off).take(f.blocks[0]) {
                        *v = k;
                    }
                    off += f.n;
                }
                GlCharacter::monomial(w, 1)
            }
            BundleExpr::Taut(name) => taut_character(flag, name)?,
            BundleExpr::Dual(e) => e.to_character(flag)?.dual(),
            BundleExpr::Det(e) => {
                let c = e.to_character(flag)?;
                let mut w = vec![0; n];
                for (v, m) in c.terms() {
                    for (a, b) in w.iter_mut().zip(v) {
                        *a += m * b;
                    }
                }
                GlCharacter::monomial(w, 1)
            }
            BundleExpr::Wedge(e, k) => {
                let c = e.to_character(flag)?;
                c.check_nonnegative().map_err(|_| BundleEvalError::Virtual)?;
                lambda_powers(&c, *k, true).pop().unwrap()
            }
            BundleExpr::Sym(e, k) => {
                let c = e.to_character(flag)?;
                c.check_nonnegative().map_err(|_| BundleEvalError::Virtual)?;
                lambda_powers(&c, *k, false).pop().unwrap()
            }
            BundleExpr::Schur(e, l) => schur_of_character(&e.to_character(flag)?, l),
            BundleExpr::Sum(parts) => {
                let mut acc = GlCharacter::zero(n);
                for (k, e) in parts {
                    acc = acc.add(&e.to_character(flag)?.scale(*k));
                }
                acc
            }
            BundleExpr::Tensor(parts) => {
                let mut acc = GlCharacter::trivial(n);
                for e in parts {
                    acc = acc.mul(&e.to_character(flag)?);
                }
                acc
            }
        })
    }
}

/// Weights of `G_j^*` for block `j` of factor `f`, placed in the full vector.
pub fn block_standard(flag: &[FlagFactor], factor: usize, block: usize) -> GlCharacter {
    let n: usize = flag.iter().map(|f| f.n).sum();
    let off: usize =
        flag[..factor].iter().map(|f| f.n).sum::<usize>() + flag[factor].blocks[..block].iter().sum::<usize>();
    let mut c = GlCharacter::zero(n);
    for i in 0..flag[factor].blocks[block] {
        let mut w = vec![0; n];
        w[off + i] = 1;
        c.add_term(w, 1);
    }
    c
}

fn taut_character(flag: &[FlagFactor], name: &str) -> Result<GlCharacter, BundleEvalError> {
    let (stem, idx) = match name.find(|c: char| c.is_ascii_digit()) {
        Some(p) => (&name[..p], name[p..].parse::<usize>().ok()),
        None => (name, None),
    };
    let factor = match (idx, flag.len()) {
        (None, 1) => 0,
        (Some(i), m) if i >= 1 && i <= m => i - 1,
        _ => return Err(BundleEvalError::Unknown(name.into())),
    };
    if flag[factor].blocks.len() != 2 {
        return Err(BundleEvalError::NotHomogeneous(name.into()));
    }
    match stem {
        "U" => Ok(block_standard(flag, factor, 0).dual()),
        "Q" => Ok(block_standard(flag, factor, 1).dual()),
        _ => Err(BundleEvalError::NotHomogeneous(name.into())),
    }
}

impl fmt::Display for BundleExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BundleExpr::Line(a) if a.iter().all(|&v| v == 0) && a.len() == 1 => write!(f, "O"),
            BundleExpr::Line(a) => {
                let s: Vec<String> = a.iter().map(|v| v.to_string()).collect();
                write!(f, "O({})", s.join(","))
            }
            BundleExpr::Taut(n) => write!(f, "{n}"),
            BundleExpr::Dual(e) => write!(f, "dual({e})"),
            BundleExpr::Det(e) => write!(f, "det({e})"),
            BundleExpr::Wedge(e, k) => write!(f, "wedge({e},{k})"),
            BundleExpr::Sym(e, k) => write!(f, "sym({e},{k})"),
            BundleExpr::Schur(e, l) => {
                let s: Vec<String> = l.parts().iter().map(|v| v.to_string()).collect();
                write!(f, "schur({e},{})", s.join(","))
            }
            BundleExpr::Sum(parts) => {
                for (i, (k, e)) in parts.iter().enumerate() {
                    let (sign, k) = if *k < 0 { ("-", -k) } else { ("+", *k) };
                    if i > 0 {
                        write!(f, " {sign} ")?;
                    } else if sign == "-" {
                        write!(f, "-")?;
                    }
                    let wrap = matches!(e, BundleExpr::Sum(_));
                    if k != 1 {
                        write!(f, "{k}*")?;
                    }
                    if wrap {
                        write!(f, "({e})")?;
                    } else {
                        write!(f, "{e}")?;
                    }
                }
                Ok(())
            }
            BundleExpr::Tensor(parts) => {
                for (i, e) in parts.iter().enumerate() {
                    if i > 0 {
                        write!(f, "*")?;
                    }
                    if matches!(e, BundleExpr::Sum(_)) {
                        write!(f, "({e})")?;
                    } else {
                        write!(f, "{e}")?;
                    }
                }
                Ok(())
            }
        }
    }
}

/// Parses a bundle expression. `*` is the tensor product, an integer factor
/// is a multiplicity, `+`/`-` are (virtual) sums.
pub fn parse_bundle(text: &str) -> Result<BundleExpr, BundleSyntaxError> {
    let mut p = Parser { s: text.as_bytes(), pos: 0 };
    let e = p.sum()?;
    p.ws();
    if p.pos != p.s.len() {
        return Err(p.err("trailing input"));
    }
    Ok(e)
}

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
}

enum Factor {
    Int(i64),
    Expr(BundleExpr),
}

impl Parser<'_> {
    fn err(&self, msg: &str) -> BundleSyntaxError {
        BundleSyntaxError { pos: self.pos, msg: msg.into() }
    }

    fn ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.ws();
        self.s.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> Result<(), BundleSyntaxError> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.err(&format!("expected '{}'", c as char)))
        }
    }

    fn sum(&mut self) -> Result<BundleExpr, BundleSyntaxError> {
        let mut parts = Vec::new();
        let mut sign = 1;
        if self.peek() == Some(b'-') {
            sign = -1;
            self.pos += 1;
        }
        loop {
            let (k, e) = self.term()?;
            parts.push((sign * k, e));
            match self.peek() {
                Some(b'+') => sign = 1,
                Some(b'-') => sign = -1,
                _ => break,
            }
            self.pos += 1;
        }
        if parts.len() == 1 && parts[0].0 == 1 {
            return Ok(parts.pop().unwrap().1);
        }
        Ok(BundleExpr::Sum(parts))
    }

    fn term(&mut self) -> Result<(i64, BundleExpr), BundleSyntaxError> {
        let mut mult = 1i64;
        let mut factors = Vec::new();
        loop {
            match self.factor()? {
                Factor::Int(k) => mult *= k,
                Factor::Expr(e) => factors.push(e),
            }
            if self.peek() == Some(b'*') {
                self.pos += 1;
            } else {
                break;
            }
        }
        let e = match factors.len() {
            0 => return Err(self.err("a multiplicity needs a bundle")),
            1 => factors.pop().unwrap(),
            _ => BundleExpr::Tensor(factors),
        };
        Ok((mult, e))
    }

    fn int(&mut self) -> Result<i64, BundleSyntaxError> {
        self.ws();
        let start = self.pos;
        if self.s.get(self.pos) == Some(&b'-') {
            self.pos += 1;
        }
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        std::str::from_utf8(&self.s[start..self.pos]).unwrap().parse().map_err(|_| {
            self.pos = start;
            self.err("expected an integer")
        })
    }

    fn ident(&mut self) -> String {
        let start = self.pos;
        while self.pos < self.s.len() && (self.s[self.pos].is_ascii_alphanumeric() || self.s[self.pos] == b'_') {
            self.pos += 1;
        }
        String::from_utf8(self.s[start..self.pos].to_vec()).unwrap()
    }

    fn factor(&mut self) -> Result<Factor, BundleSyntaxError> {
        match self.peek() {
            Some(c) if c.is_ascii_digit() => Ok(Factor::Int(self.int()?)),
            Some(b'(') => {
                self.pos += 1;
                let e = self.sum()?;
                self.eat(b')')?;
                Ok(Factor::Expr(e))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                let name = self.ident();
                let call = self.peek() == Some(b'(');
                let e = match (name.as_str(), call) {
                    ("O", false) => BundleExpr::Line(vec![0]),
                    ("O", true) => {
                        self.pos += 1;
                        let mut a = vec![self.int()?];
                        while self.peek() == Some(b',') {
                            self.pos += 1;
                            a.push(self.int()?);
                        }
                        self.eat(b')')?;
                        BundleExpr::Line(a)
                    }
                    ("dual" | "det" | "wedge" | "sym" | "schur" | "tensor", true) => {
                        self.pos += 1;
                        let inner = self.sum()?;
                        let mut args = Vec::new();
                        let mut more = Vec::new();
                        while self.peek() == Some(b',') {
                            self.pos += 1;
                            if name == "tensor" {
                                more.push(self.sum()?);
                            } else {
                                args.push(self.int()?);
                            }
                        }
                        self.eat(b')')?;
                        let b = Box::new(inner.clone());
                        let arity = |n: usize, p: &Parser| -> Result<(), BundleSyntaxError> {
                            if args.len() == n {
                                Ok(())
                            } else {
                                Err(BundleSyntaxError {
                                    pos: p.pos,
                                    msg: format!("{name} takes {n} integer argument(s)"),
                                })
                            }
                        };
                        match name.as_str() {
                            "dual" => {
                                arity(0, self)?;
                                BundleExpr::Dual(b)
                            }
                            "det" => {
                                arity(0, self)?;
                                BundleExpr::Det(b)
                            }
                            "wedge" | "sym" => {
                                arity(1, self)?;
                                if args[0] < 0 {
                                    return Err(self.err("negative power"));
                                }
                                if name == "wedge" {
                                    BundleExpr::Wedge(b, args[0] as usize)
                                } else {
                                    BundleExpr::Sym(b, args[0] as usize)
                                }
                            }
                            "schur" => {
                                let p =
                                    Partition::from_signed(&args).map_err(|_| self.err("schur needs a partition"))?;
                                BundleExpr::Schur(b, p)
                            }
                            _ => {
                                let mut all = vec![inner];
                                all.extend(more);
                                BundleExpr::Tensor(all)
                            }
                        }
                    }
                    (_, true) => {
                        self.pos = start;
                        return Err(self.err(&format!("unknown function {name}")));
                    }
                    _ => BundleExpr::Taut(name),
                };
                Ok(Factor::Expr(e))
            }
            _ => Err(self.err("expected a bundle")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chow::grassmannian;

    #[test]
    fn parse_and_print() {
        let e = parse_bundle("dual(U) + 4*O").unwrap();
        assert_eq!(e.to_string(), "dual(U) + 4*O");
        assert_eq!(parse_bundle(&e.to_string()).unwrap(), e);
        let e = parse_bundle("U1*U2 + 3*O + wedge(Q,2)*O(1,-1)").unwrap();
        assert_eq!(parse_bundle(&e.to_string()).unwrap(), e);
        assert!(parse_bundle("dual(U,2)").is_err());
        assert!(parse_bundle("foo(U)").is_err());
        assert!(parse_bundle("U +").is_err());
    }

    #[test]
    fn character_and_class_agree_on_rank() {
        let g = grassmannian(2, 7).unwrap();
        let flag = g.flag.clone().unwrap();
        for text in ["dual(U) + 4*O", "Q + O", "sym(dual(U),2)", "wedge(Q,3)*O(1)", "det(Q)"] {
            let e = parse_bundle(text).unwrap();
            let c = e.to_character(&flag).unwrap();
            let s = e.to_sheaf(&g).unwrap();
            assert_eq!(crate::Rat::int(c.dim()), s.rank(), "{text}");
        }
        let det = parse_bundle("det(dual(U))").unwrap().to_character(&flag).unwrap();
        assert_eq!(det, parse_bundle("O(1)").unwrap().to_character(&flag).unwrap());
    }
}
