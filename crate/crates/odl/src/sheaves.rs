//! Formal (possibly virtual) sheaf classes, stored through their Chern
//! character so that sums, tensor products and λ-operations are ring
//! operations.

use std::sync::OnceLock;

use crate::chow::{Class, Ring, RingError};
use crate::rational::Rat;
use crate::symfun::Partition;

#[derive(Clone, PartialEq)]
pub struct SheafClass {
    ch: Class,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SheafError {
    #[error("expected a line bundle class, got rank {0}")]
    NotALine(Rat),
    #[error("rank {0} is not a nonnegative integer")]
    BadRank(Rat),
    #[error("the adjoint bundle needs rank at least 2")]
    AdjointRank,
}

impl SheafClass {
    pub fn from_ch(ch: Class) -> SheafClass {
        SheafClass { ch }
    }

    /// From a rank and a total Chern class `1 + c_1 + c_2 + ...`.
    pub fn from_chern(rank: i64, c: &Class) -> SheafClass {
        let l = c.log();
        let ring = c.ring();
        let mut ch = ring.constant(Rat::int(rank));
        for (k, part) in l.components().into_iter().enumerate().skip(1) {
            if part.is_zero() {
                continue;
            }
            let mut f = Rat::factorial(k as u32 - 1).recip();
            if k % 2 == 0 {
                f = -f;
            }
            ch = ch.add(&part.scale(&f));
        }
        SheafClass { ch }
    }

    pub fn trivial(ring: &Ring, r: i64) -> SheafClass {
        SheafClass { ch: ring.constant(Rat::int(r)) }
    }

    pub fn zero(ring: &Ring) -> SheafClass {
        SheafClass::trivial(ring, 0)
    }

    /// The line bundle with first Chern class `c1`.
    pub fn line(c1: &Class) -> SheafClass {
        SheafClass { ch: c1.exp() }
    }

    pub fn ring(&self) -> &Ring {
        self.ch.ring()
    }

    pub fn ch(&self) -> &Class {
        &self.ch
    }

    pub fn rank(&self) -> Rat {
        self.ch.constant_term()
    }

    pub fn rank_i64(&self) -> i64 {
        self.rank().to_i64().expect("integral rank")
    }

    /// Total Chern class.
    pub fn chern(&self) -> Class {
        let ring = self.ring();
        let mut x = ring.zero();
        for (k, part) in self.ch.components().into_iter().enumerate().skip(1) {
            if part.is_zero() {
                continue;
            }
            let mut f = Rat::factorial(k as u32 - 1);
            if k % 2 == 0 {
                f = -f;
            }
            x = x.add(&part.scale(&f));
        }
        x.exp()
    }

    pub fn c(&self, i: u32) -> Class {
        if i == 0 {
            return self.ring().one();
        }
        // cheaper than the full Chern class for i = 1
        if i == 1 {
            return self.ch.component(1);
        }
        self.chern().component(i)
    }

    /// `c_r` for `r` the rank; the rank must be a nonnegative integer.
    pub fn c_top(&self) -> Result<Class, SheafError> {
        let r = self.rank();
        match r.to_i64() {
            Some(k) if k >= 0 => Ok(self.c(k as u32)),
            _ => Err(SheafError::BadRank(r)),
        }
    }

    pub fn todd(&self) -> Class {
        let ring = self.ring();
        let a = todd_log_coefficients(ring.dim() as usize);
        let mut x = ring.zero();
        for (j, part) in self.ch.components().into_iter().enumerate().skip(1) {
            if part.is_zero() {
                continue;
            }
            x = x.add(&part.scale(&(&a[j] * &Rat::factorial(j as u32))));
        }
        x.exp()
    }

    pub fn add(&self, other: &SheafClass) -> SheafClass {
        SheafClass { ch: self.ch.add(&other.ch) }
    }

    pub fn sub(&self, other: &SheafClass) -> SheafClass {
        SheafClass { ch: self.ch.sub(&other.ch) }
    }

    pub fn scale(&self, k: i64) -> SheafClass {
        SheafClass { ch: self.ch.scale_int(k) }
    }

    pub fn tensor(&self, other: &SheafClass) -> SheafClass {
        SheafClass { ch: self.ch.mul(&other.ch) }
    }

    /// Twist by a rank-one class.
    pub fn tensor_line(&self, line: &SheafClass) -> Result<SheafClass, SheafError> {
        if !line.rank().is_one() {
            return Err(SheafError::NotALine(line.rank()));
        }
        Ok(self.tensor(line))
    }

    /// Adams operation `ψ^k`: the degree-`d` part of `ch` scales by `k^d`.
    pub fn adams(&self, k: i64) -> SheafClass {
        let parts = self.ch.components();
        let mut ch = self.ring().zero();
        let mut f = Rat::int(1);
        for part in parts {
            if !part.is_zero() {
                ch = ch.add(&part.scale(&f));
            }
            f = &f * &Rat::int(k);
        }
        SheafClass { ch }
    }

    pub fn dual(&self) -> SheafClass {
        self.adams(-1)
    }

    pub fn det(&self) -> SheafClass {
        SheafClass::line(&self.c(1))
    }

    /// `[λ^0, ..., λ^k]` by Newton's recursion.
    pub fn wedge_powers(&self, k: usize) -> Vec<SheafClass> {
        self.newton_powers(k, true)
    }

    fn newton_powers(&self, k: usize, alternating: bool) -> Vec<SheafClass> {
        let ring = self.ring();
        let psi: Vec<Class> = (0..=k).map(|j| self.adams(j as i64).ch).collect();
        let mut out: Vec<Class> = vec![ring.one()];
        for i in 1..=k {
            let mut acc = ring.zero();
            for j in 1..=i {
                let t = out[i - j].mul(&psi[j]);
                acc = if alternating && j % 2 == 0 { acc.sub(&t) } else { acc.add(&t) };
            }
            out.push(acc.scale(&Rat::new(1, i as i64)));
        }
        out.into_iter().map(|ch| SheafClass { ch }).collect()
    }

    pub fn wedge(&self, k: usize) -> SheafClass {
        self.wedge_powers(k).pop().unwrap()
    }

    pub fn sym(&self, k: usize) -> SheafClass {
        self.newton_powers(k, false).pop().unwrap()
    }

    /// `S_λ` via the dual Jacobi–Trudi determinant in the wedge powers.
    pub fn schur(&self, lambda: &Partition) -> SheafClass {
        let conj = lambda.conjugate();
        let m = conj.len();
        let ring = self.ring().clone();
        if m == 0 {
            return SheafClass::trivial(&ring, 1);
        }
        let e = self.wedge_powers(conj.get(0) as usize + m);
        let entry = |i: usize, j: usize| -> Option<&Class> {
            let k = conj.get(i) as i64 - i as i64 + j as i64;
            if k < 0 {
                None
            } else {
                e.get(k as usize).map(|s| &s.ch)
            }
        };
        fn det<'a>(
            row: usize,
            cols: &[usize],
            entry: &dyn Fn(usize, usize) -> Option<&'a Class>,
            ring: &Ring,
        ) -> Class {
            if cols.is_empty() {
                return ring.one();
            }
            let mut out = ring.zero();
            for (pos, &c) in cols.iter().enumerate() {
                let Some(a) = entry(row, c) else { continue };
                if a.is_zero() {
                    continue;
                }
                let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
                let t = a.mul(&det(row + 1, &rest, entry, ring));
                out = if pos % 2 == 0 { out.add(&t) } else { out.sub(&t) };
            }
            out
        }
        let cols: Vec<usize> = (0..m).collect();
        SheafClass { ch: det(0, &cols, &entry, &ring) }
    }

    pub fn lift(&self, ring: &Ring) -> Result<SheafClass, RingError> {
        Ok(SheafClass { ch: self.ch.lift(ring)? })
    }
}

impl std::fmt::Debug for SheafClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "SheafClass(ch = {})", self.ch)
    }
}

/// `E ⊗ E^* − O`.
pub fn adjoint_sl(e: &SheafClass) -> Result<SheafClass, SheafError> {
    let r = e.rank();
    if r < Rat::int(2) {
        return Err(SheafError::AdjointRank);
    }
    Ok(e.tensor(&e.dual()).sub(&SheafClass::trivial(e.ring(), 1)))
}

/// K-class of `Ω^p` of the zero locus of a section of `normal` inside an
/// ambient with the given tangent class.
pub fn cotangent_of_zero_locus(ambient_tangent: &SheafClass, normal: &SheafClass, p: usize) -> SheafClass {
    let omega = ambient_tangent.dual().sub(&normal.dual());
    omega.wedge(p)
}

/// Coefficients `a_j` of `log(x / (1 − e^{−x})) = Σ a_j x^j`.
pub fn todd_log_coefficients(n: usize) -> Vec<Rat> {
    static CACHE: OnceLock<Vec<Rat>> = OnceLock::new();
    let cached = CACHE.get_or_init(|| compute_todd_log(40));
    if n < cached.len() {
        return cached[..=n].to_vec();
    }
    compute_todd_log(n)
}

fn compute_todd_log(n: usize) -> Vec<Rat> {
    // (1 − e^{−x})/x = Σ (−1)^k x^k/(k+1)!
    let g: Vec<Rat> = (0..=n)
        .map(|k| {
            let v = Rat::factorial(k as u32 + 1).recip();
            if k % 2 == 1 {
                -v
            } else {
                v
            }
        })
        .collect();
    // log(x/(1−e^{−x})) = −log(g)
    let lg = series_log(&g);
    lg.into_iter().map(|c| -c).collect()
}

/// Power-series logarithm of a series with constant term 1.
pub fn series_log(c: &[Rat]) -> Vec<Rat> {
    assert!(c[0].is_one());
    let n = c.len() - 1;
    let mut y = vec![Rat::int(0); n + 1];
    for d in 1..=n {
        let mut acc = &c[d] * &Rat::int(d as i64);
        for k in 1..d {
            acc -= &(&(&y[k] * &c[d - k]) * &Rat::int(k as i64));
        }
        y[d] = acc / Rat::int(d as i64);
    }
    y
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chow::Var;

    fn generic(rank: u32, dim: u32) -> (Ring, SheafClass) {
        let vars: Vec<Var> = (1..=rank).map(|i| Var { name: format!("e{i}"), degree: i }).collect();
        let ring = Ring::free(vars, dim);
        let mut c = ring.one();
        for i in 1..=rank {
            c = c.add(&ring.var(&format!("e{i}")));
        }
        let e = SheafClass::from_chern(rank as i64, &c);
        (ring, e)
    }

    #[test]
    fn todd_series() {
        let a = todd_log_coefficients(4);
        assert_eq!(a[1], Rat::new(1, 2));
        assert_eq!(a[2], Rat::new(-1, 24));
        assert_eq!(a[3], Rat::int(0));
        assert_eq!(a[4], Rat::new(1, 2880));
    }

    #[test]
    fn chern_round_trip_and_todd() {
        let (ring, e) = generic(3, 6);
        let mut c = ring.one();
        for i in 1..=3 {
            c = c.add(&ring.var(&format!("e{i}")));
        }
        assert_eq!(e.chern(), c);
        let e1 = ring.var("e1");
        let e2 = ring.var("e2");
        let td = e.todd();
        assert_eq!(td.component(1), e1.scale(&Rat::new(1, 2)));
        assert_eq!(td.component(2), e1.mul(&e1).add(&e2).scale(&Rat::new(1, 12)));
    }

    #[test]
    fn wedge_ranks_and_first_chern() {
        let (ring, e) = generic(6, 4);
        let w = e.wedge(3);
        assert_eq!(w.rank(), Rat::int(20));
        assert_eq!(w.c(1), ring.var("e1").scale_int(10));
        let s = generic(3, 3).1.schur(&crate::part![2, 1]);
        assert_eq!(s.rank(), Rat::int(8));
        let ad = adjoint_sl(&generic(4, 4).1).unwrap();
        assert_eq!(ad.rank(), Rat::int(15));
        assert!(ad.c(1).is_zero());
    }

    #[test]
    fn dual_and_det() {
        let (ring, e) = generic(3, 4);
        assert_eq!(e.dual().c(1), ring.var("e1").neg());
        assert_eq!(e.dual().c(2), ring.var("e2"));
        assert_eq!(e.det().c(1), ring.var("e1"));
        assert!(e.tensor_line(&e).is_err());
    }
}
