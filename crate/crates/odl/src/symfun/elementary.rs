use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use crate::rational::Rat;

use super::{Partition, SchurVector};

/// A polynomial in abstract symbols `e_1, e_2, ...`; each monomial is keyed by
/// the partition of its indices (`e_2 e_1^2` is `(2,1,1)`).
#[derive(Clone, PartialEq, Eq, Default)]
pub struct EPoly {
    terms: BTreeMap<Partition, Rat>,
}

impl EPoly {
    pub fn zero() -> EPoly {
        EPoly::default()
    }

    pub fn one() -> EPoly {
        EPoly::monomial(Partition::empty(), Rat::int(1))
    }

    pub fn monomial(p: Partition, c: Rat) -> EPoly {
        let mut out = EPoly::zero();
        out.add_term(p, c);
        out
    }

    /// The symbol `e_i` (`e_0 = 1`, negative indices vanish).
    pub fn e(i: i64) -> EPoly {
        match i {
            i if i < 0 => EPoly::zero(),
            0 => EPoly::one(),
            i => EPoly::monomial(Partition::new(&[i as u32]).unwrap(), Rat::int(1)),
        }
    }

    pub fn add_term(&mut self, p: Partition, c: Rat) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(p) {
            Entry::Occupied(mut o) => {
                *o.get_mut() += &c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
            Entry::Vacant(v) => {
                v.insert(c);
            }
        }
    }

    pub fn terms(&self) -> &BTreeMap<Partition, Rat> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &EPoly) -> EPoly {
        let mut out = self.clone();
        for (p, c) in &other.terms {
            out.add_term(p.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &EPoly) -> EPoly {
        self.add(&other.scale(&Rat::int(-1)))
    }

    pub fn scale(&self, k: &Rat) -> EPoly {
        let mut out = EPoly::zero();
        for (p, c) in &self.terms {
            out.add_term(p.clone(), c * k);
        }
        out
    }

    pub fn mul(&self, other: &EPoly) -> EPoly {
        let mut out = EPoly::zero();
        for (p, a) in &self.terms {
            for (q, b) in &other.terms {
                let mut parts: Vec<u32> = p.parts().to_vec();
                parts.extend_from_slice(q.parts());
                out.add_term(Partition::from_unsorted(&parts), a * b);
            }
        }
        out
    }

    /// Drops every monomial containing `e_i` with `i > n`.
    pub fn truncate_symbols(&self, n: u32) -> EPoly {
        let mut out = EPoly::zero();
        for (p, c) in &self.terms {
            if p.get(0) <= n {
                out.add_term(p.clone(), c.clone());
            }
        }
        out
    }

    /// Evaluates with `e_i := vals[i-1]` (symbols past the end are zero).
    pub fn eval(&self, vals: &[Rat]) -> Rat {
        self.terms
            .iter()
            .map(|(p, c)| {
                let mut acc = c.clone();
                for &i in p.parts() {
                    acc *= &vals.get(i as usize - 1).cloned().unwrap_or_default();
                }
                acc
            })
            .sum()
    }

    /// Expansion in Schur functions, where `s_λ = det(e_{λ*_i - i + j})`.
    ///
    /// Returns `None` when a coefficient is not an integer.
    pub fn to_schur(&self) -> Option<SchurVector> {
        let mut rest = self.clone();
        let mut out = SchurVector::zero();
        // e_μ = s_{μ*} + (terms e_ν with ν lexicographically larger)
        while let Some((mu, c)) = rest.terms.iter().next().map(|(p, c)| (p.clone(), c.clone())) {
            let lam = mu.conjugate();
            out.add_term(lam.clone(), c.to_i64()?);
            rest = rest.sub(&schur_in_elementary(&lam, u32::MAX).scale(&c));
        }
        Some(out)
    }
}

/// Dual Jacobi–Trudi: `s_λ = det(e_{λ*_i − i + j})` with `e_k = 0` for `k > n_max`.
pub fn schur_in_elementary(lambda: &Partition, n_max: u32) -> EPoly {
    let conj = lambda.conjugate();
    let m = conj.len();
    let entry = |i: usize, j: usize| -> EPoly {
        let k = conj.get(i) as i64 - i as i64 + j as i64;
        if k > n_max as i64 {
            EPoly::zero()
        } else {
            EPoly::e(k)
        }
    };
    let matrix: Vec<Vec<EPoly>> = (0..m).map(|i| (0..m).map(|j| entry(i, j)).collect()).collect();
    determinant(&matrix)
}

/// Expands a Schur vector into elementary symbols.
pub fn schur_vector_in_elementary(v: &SchurVector, n_max: u32) -> EPoly {
    let mut out = EPoly::zero();
    for (p, &m) in v.terms() {
        out = out.add(&schur_in_elementary(p, n_max).scale(&Rat::int(m)));
    }
    out
}

/// Cofactor expansion along the first row; matrices here are at most about 10×10
/// and mostly banded, so zero entries prune the recursion heavily.
fn determinant(m: &[Vec<EPoly>]) -> EPoly {
    let n = m.len();
    if n == 0 {
        return EPoly::one();
    }
    let cols: Vec<usize> = (0..n).collect();
    det_rec(m, 0, &cols)
}

fn det_rec(m: &[Vec<EPoly>], row: usize, cols: &[usize]) -> EPoly {
    if cols.is_empty() {
        return EPoly::one();
    }
    let mut out = EPoly::zero();
    for (pos, &c) in cols.iter().enumerate() {
        let a = &m[row][c];
        if a.is_zero() {
            continue;
        }
        let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
        let minor = det_rec(m, row + 1, &rest);
        let term = a.mul(&minor);
        out = if pos % 2 == 0 { out.add(&term) } else { out.sub(&term) };
    }
    out
}

impl fmt::Display for EPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (p, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            match (i, neg) {
                (0, false) => {}
                (0, true) => write!(f, "-")?,
                (_, false) => write!(f, " + ")?,
                (_, true) => write!(f, " - ")?,
            }
            let a = c.abs();
            let mono = monomial_string(p);
            if mono.is_empty() {
                write!(f, "{a}")?;
            } else if a.is_one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{a}*{mono}")?;
            }
        }
        Ok(())
    }
}

fn monomial_string(p: &Partition) -> String {
    let mut out = Vec::new();
    let mut parts = p.parts().to_vec();
    parts.sort_unstable();
    let mut i = 0;
    while i < parts.len() {
        let k = parts[i];
        let mut e = 0;
        while i < parts.len() && parts[i] == k {
            e += 1;
            i += 1;
        }
        out.push(if e == 1 { format!("e{k}") } else { format!("e{k}^{e}") });
    }
    out.join("*")
}

impl fmt::Debug for EPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::part;

    #[test]
    fn small_schur_polynomials() {
        assert_eq!(schur_in_elementary(&part![1, 1], 6), EPoly::e(2));
        let s2 = EPoly::e(1).mul(&EPoly::e(1)).sub(&EPoly::e(2));
        assert_eq!(schur_in_elementary(&part![2], 6), s2);
        assert_eq!(schur_in_elementary(&part![1, 1, 1], 2), EPoly::zero());
    }

    #[test]
    fn schur_round_trip() {
        for n in 1..=6 {
            for p in Partition::all_of(n) {
                let e = schur_in_elementary(&p, u32::MAX);
                assert_eq!(e.to_schur().unwrap(), SchurVector::single(p.clone()), "{p}");
            }
        }
    }

    #[test]
    fn display_is_readable() {
        let p = EPoly::e(1).mul(&EPoly::e(2)).scale(&Rat::int(-2)).add(&EPoly::e(3));
        assert_eq!(p.to_string(), "e3 - 2*e1*e2");
    }
}
