//! Graded rings presented as towers of monic relations over a free base.
//!
//! Every variable either is free (a Chern class symbol of a generic base) or
//! carries a monic relation `v^r = -Σ c_i v^{r-i}` with coefficients in the
//! variables before it. Monomials with all exponents below their relation
//! degree form a basis, so normal forms are unique.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::{Arc, RwLock};

use rustc_hash::FxHashMap;
use smallvec::SmallVec;

use crate::rational::Rat;

pub type Mono = SmallVec<[u8; 16]>;
type Terms = FxHashMap<Mono, Rat>;

static NEXT_RING_ID: AtomicU64 = AtomicU64::new(1);

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Var {
    pub name: String,
    pub degree: u32,
}

struct Relation {
    rank: u8,
    /// `coeffs[i-1]` is `c_i`, already in normal form.
    coeffs: Vec<Vec<(Mono, Rat)>>,
}

struct RingInner {
    id: u64,
    vars: Vec<Var>,
    relations: Vec<Option<Relation>>,
    dim: u32,
    free_dim: Option<u32>,
    /// `(ancestor id, variable offset)` for every ring whose classes lift here.
    ancestors: Vec<(u64, usize, usize)>,
    cache: RwLock<FxHashMap<Mono, Arc<Vec<(Mono, Rat)>>>>,
}

#[derive(Clone)]
pub struct Ring(Arc<RingInner>);

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RingError {
    #[error("class lives in a ring that does not embed into the target ring")]
    NotAnAncestor,
    #[error("the ring has free variables and no integration functional")]
    NoIntegration,
    #[error("pushforward requires the last variable to carry a relation")]
    NotABundle,
    #[error("too many variables ({0}); at most 255 are supported")]
    TooManyVars(usize),
}

impl Ring {
    fn build(
        vars: Vec<Var>,
        relations: Vec<Option<Relation>>,
        dim: u32,
        free_dim: Option<u32>,
        ancestors: Vec<(u64, usize, usize)>,
    ) -> Ring {
        let id = NEXT_RING_ID.fetch_add(1, Ordering::Relaxed);
        let mut ancestors = ancestors;
        ancestors.push((id, 0, vars.len()));
        Ring(Arc::new(RingInner {
            id,
            vars,
            relations,
            dim,
            free_dim,
            ancestors,
            cache: RwLock::new(FxHashMap::default()),
        }))
    }

    /// The ring of a point: just the rationals.
    pub fn point() -> Ring {
        Ring::build(Vec::new(), Vec::new(), 0, None, Vec::new())
    }

    /// Free polynomial ring truncated above degree `dim`.
    pub fn free(vars: Vec<Var>, dim: u32) -> Ring {
        let n = vars.len();
        Ring::build(vars, (0..n).map(|_| None).collect(), dim, Some(dim), Vec::new())
    }

    pub fn id(&self) -> u64 {
        self.0.id
    }

    pub fn nvars(&self) -> usize {
        self.0.vars.len()
    }

    pub fn vars(&self) -> &[Var] {
        &self.0.vars
    }

    pub fn dim(&self) -> u32 {
        self.0.dim
    }

    pub fn has_free_vars(&self) -> bool {
        self.0.relations.iter().any(|r| r.is_none())
    }

    pub fn same(&self, other: &Ring) -> bool {
        self.0.id == other.0.id
    }

    /// Whether some ring embeds into both.
    pub fn shares_ancestor(&self, other: &Ring) -> bool {
        other.0.ancestors.iter().any(|(id, _, _)| self.0.ancestors.iter().any(|(j, _, _)| j == id))
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.0.vars.iter().position(|v| v.name == name)
    }

    /// Relation degree of variable `i`, if it has one.
    pub fn relation_rank(&self, i: usize) -> Option<u32> {
        self.0.relations[i].as_ref().map(|r| r.rank as u32)
    }

    pub fn mono_degree(&self, m: &[u8]) -> u32 {
        m.iter().zip(&self.0.vars).map(|(&e, v)| e as u32 * v.degree).sum()
    }

    fn free_degree(&self, m: &[u8]) -> u32 {
        m.iter()
            .zip(&self.0.vars)
            .zip(&self.0.relations)
            .filter(|(_, r)| r.is_none())
            .map(|((&e, v), _)| e as u32 * v.degree)
            .sum()
    }

    fn vanishes(&self, m: &[u8]) -> bool {
        if self.mono_degree(m) > self.0.dim {
            return true;
        }
        match self.0.free_dim {
            Some(fd) => self.free_degree(m) > fd,
            None => false,
        }
    }

    fn is_normal(&self, m: &[u8]) -> bool {
        m.iter().zip(&self.0.relations).all(|(&e, r)| r.as_ref().is_none_or(|r| e < r.rank))
    }

    /// Normal form of a monomial that does not vanish by degree.
    fn normal_form(&self, m: &Mono) -> Arc<Vec<(Mono, Rat)>> {
        if let Some(hit) = self.0.cache.read().unwrap().get(m) {
            return hit.clone();
        }
        // reduce the highest variable that violates its relation
        let j = (0..m.len())
            .rev()
            .find(|&j| self.0.relations[j].as_ref().is_some_and(|r| m[j] >= r.rank))
            .expect("called on a non-normal monomial");
        let rel = self.0.relations[j].as_ref().unwrap();
        let mut acc: Terms = FxHashMap::default();
        for (i, ci) in rel.coeffs.iter().enumerate() {
            let i = i + 1;
            for (cm, cc) in ci {
                let mut nm = m.clone();
                nm[j] -= i as u8;
                for (a, b) in nm.iter_mut().zip(cm.iter()) {
                    *a += *b;
                }
                if self.vanishes(&nm) {
                    continue;
                }
                let coeff = -cc.clone();
                if self.is_normal(&nm) {
                    add_to(&mut acc, nm, coeff);
                } else {
                    for (rm, rc) in self.normal_form(&nm).iter() {
                        add_to(&mut acc, rm.clone(), &coeff * rc);
                    }
                }
            }
        }
        let out: Arc<Vec<(Mono, Rat)>> = Arc::new(acc.into_iter().collect());
        self.0.cache.write().unwrap().insert(m.clone(), out.clone());
        out
    }

    /// Adds `coeff · m` (reduced) into `acc`.
    fn accumulate(&self, acc: &mut Terms, m: Mono, coeff: Rat) {
        if self.vanishes(&m) {
            return;
        }
        if self.is_normal(&m) {
            add_to(acc, m, coeff);
        } else {
            for (rm, rc) in self.normal_form(&m).iter() {
                add_to(acc, rm.clone(), &coeff * rc);
            }
        }
    }

    /// Adjoins `h` with `h^r + c_1 h^{r-1} + ... + c_r = 0`, where `chern[i]`
    /// is `c_{i+1}` (missing entries are zero).
    pub fn extend_projective(&self, name: &str, r: u32, chern: &[Class]) -> Ring {
        assert!(r >= 1, "projective bundle of rank 0");
        let n = self.nvars();
        let mut vars = self.0.vars.clone();
        vars.push(Var { name: name.to_string(), degree: 1 });
        let mut relations: Vec<Option<Relation>> =
            self.0.relations.iter().map(|r| r.as_ref().map(|r| pad_relation(r, 0, n + 1))).collect();
        let coeffs = (1..=r as usize)
            .map(|i| match chern.get(i - 1) {
                Some(c) => {
                    assert!(c.ring.same(self), "relation coefficient from a foreign ring");
                    let mut v: Vec<(Mono, Rat)> = c.terms.iter().map(|(m, c)| (pad(m, 0, n + 1), c.clone())).collect();
                    v.sort_by(|a, b| a.0.cmp(&b.0));
                    v
                }
                None => Vec::new(),
            })
            .collect();
        relations.push(Some(Relation { rank: r as u8, coeffs }));
        Ring::build(vars, relations, self.0.dim + r - 1, self.0.free_dim, self.0.ancestors.clone())
    }

    /// Tensor product of two rings (independent towers); variable names get
    /// the given suffixes.
    pub fn product(&self, other: &Ring, suffixes: (&str, &str)) -> Ring {
        let n1 = self.nvars();
        let n = n1 + other.nvars();
        let rename = |v: &Var, s: &str| Var { name: format!("{}{}", v.name, s), degree: v.degree };
        let mut vars: Vec<Var> = self.0.vars.iter().map(|v| rename(v, suffixes.0)).collect();
        vars.extend(other.0.vars.iter().map(|v| rename(v, suffixes.1)));
        let mut relations: Vec<Option<Relation>> =
            self.0.relations.iter().map(|r| r.as_ref().map(|r| pad_relation(r, 0, n))).collect();
        relations.extend(other.0.relations.iter().map(|r| r.as_ref().map(|r| pad_relation(r, n1, n))));
        let mut anc = self.0.ancestors.clone();
        anc.extend(other.0.ancestors.iter().map(|&(id, off, len)| (id, off + n1, len)));
        let free_dim = match (self.0.free_dim, other.0.free_dim) {
            (None, None) => None,
            (a, b) => Some(a.unwrap_or(0) + b.unwrap_or(0)),
        };
        Ring::build(vars, relations, self.0.dim + other.0.dim, free_dim, anc)
    }

    /// The same presentation under a new identity, so that a variety can be
    /// multiplied with itself without its factors being confused.
    pub fn fresh_copy(&self) -> Ring {
        let n = self.nvars();
        let relations = self.0.relations.iter().map(|r| r.as_ref().map(|r| pad_relation(r, 0, n))).collect();
        Ring::build(self.0.vars.clone(), relations, self.0.dim, self.0.free_dim, Vec::new())
    }

    /// The monomial with every exponent one below its relation degree.
    pub fn top_monomial(&self) -> Result<Mono, RingError> {
        self.0.relations.iter().map(|r| r.as_ref().map(|r| r.rank - 1).ok_or(RingError::NoIntegration)).collect()
    }

    fn offset_of(&self, ancestor: &Ring) -> Option<usize> {
        self.0
            .ancestors
            .iter()
            .find(|(id, _, len)| *id == ancestor.0.id && *len == ancestor.nvars())
            .map(|&(_, off, _)| off)
    }

    pub fn zero(&self) -> Class {
        Class { ring: self.clone(), terms: FxHashMap::default() }
    }

    pub fn one(&self) -> Class {
        self.constant(Rat::int(1))
    }

    pub fn constant(&self, c: Rat) -> Class {
        let mut terms = FxHashMap::default();
        if !c.is_zero() {
            terms.insert(Mono::from_elem(0, self.nvars()), c);
        }
        Class { ring: self.clone(), terms }
    }

    /// The generator with the given name.
    pub fn var(&self, name: &str) -> Class {
        let i = self.var_index(name).unwrap_or_else(|| panic!("no variable {name}"));
        self.var_at(i)
    }

    pub fn var_at(&self, i: usize) -> Class {
        let mut m = Mono::from_elem(0, self.nvars());
        m[i] = 1;
        self.monomial(m, Rat::int(1))
    }

    pub fn monomial(&self, m: Mono, c: Rat) -> Class {
        let mut acc = FxHashMap::default();
        self.accumulate(&mut acc, m, c);
        Class { ring: self.clone(), terms: acc }
    }

    /// Number of basis monomials in each degree (for rings over a point).
    pub fn betti(&self) -> Vec<usize> {
        let mut out = vec![0usize; self.0.dim as usize + 1];
        let ranks: Vec<u8> = self.0.relations.iter().map(|r| r.as_ref().map_or(0, |r| r.rank)).collect();
        if ranks.contains(&0) {
            return out;
        }
        let mut m = vec![0u8; ranks.len()];
        loop {
            out[self.mono_degree(&m) as usize] += 1;
            let mut i = 0;
            loop {
                if i == m.len() {
                    return out;
                }
                m[i] += 1;
                if m[i] < ranks[i] {
                    break;
                }
                m[i] = 0;
                i += 1;
            }
        }
    }
}

impl fmt::Debug for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<&str> = self.0.vars.iter().map(|v| v.name.as_str()).collect();
        write!(f, "Ring#{}[{}; dim {}]", self.0.id, names.join(","), self.0.dim)
    }
}

fn pad(m: &[u8], offset: usize, len: usize) -> Mono {
    let mut out = Mono::from_elem(0, len);
    out[offset..offset + m.len()].copy_from_slice(m);
    out
}

fn pad_relation(r: &Relation, offset: usize, len: usize) -> Relation {
    Relation {
        rank: r.rank,
        coeffs: r.coeffs.iter().map(|c| c.iter().map(|(m, x)| (pad(m, offset, len), x.clone())).collect()).collect(),
    }
}

fn add_to(acc: &mut Terms, m: Mono, c: Rat) {
    use std::collections::hash_map::Entry;
    if c.is_zero() {
        return;
    }
    match acc.entry(m) {
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

/// An element of a [`Ring`], always in normal form.
#[derive(Clone)]
pub struct Class {
    ring: Ring,
    terms: Terms,
}

impl Class {
    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &Rat)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms sorted by (degree, monomial), for stable output.
    pub fn sorted_terms(&self) -> Vec<(Mono, Rat)> {
        let mut v: Vec<(Mono, Rat)> = self.terms.iter().map(|(m, c)| (m.clone(), c.clone())).collect();
        v.sort_by(|a, b| {
            let da = self.ring.mono_degree(&a.0);
            let db = self.ring.mono_degree(&b.0);
            da.cmp(&db).then_with(|| b.0.cmp(&a.0))
        });
        v
    }

    pub fn coeff(&self, m: &[u8]) -> Rat {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn constant_term(&self) -> Rat {
        self.coeff(&Mono::from_elem(0, self.ring.nvars()))
    }

    pub fn add(&self, other: &Class) -> Class {
        self.check_ring(other);
        let mut out = self.terms.clone();
        for (m, c) in &other.terms {
            add_to(&mut out, m.clone(), c.clone());
        }
        Class { ring: self.ring.clone(), terms: out }
    }

    pub fn sub(&self, other: &Class) -> Class {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Class {
        self.scale(&Rat::int(-1))
    }

    pub fn scale(&self, k: &Rat) -> Class {
        if k.is_zero() {
            return self.ring.zero();
        }
        Class { ring: self.ring.clone(), terms: self.terms.iter().map(|(m, c)| (m.clone(), c * k)).collect() }
    }

    pub fn scale_int(&self, k: i64) -> Class {
        self.scale(&Rat::int(k))
    }

    fn check_ring(&self, other: &Class) {
        assert!(
            self.ring.same(&other.ring),
            "mixing classes from different rings: {:?} vs {:?}",
            self.ring,
            other.ring
        );
    }

    pub fn mul(&self, other: &Class) -> Class {
        self.check_ring(other);
        let ring = &self.ring;
        let dim = ring.dim();
        let (a, b) = if self.terms.len() <= other.terms.len() { (self, other) } else { (other, self) };
        let bd: Vec<(&Mono, &Rat, u32)> = b.terms.iter().map(|(m, c)| (m, c, ring.mono_degree(m))).collect();
        let mut acc: Terms = FxHashMap::default();
        for (m1, c1) in &a.terms {
            let d1 = ring.mono_degree(m1);
            for &(m2, c2, d2) in &bd {
                if d1 + d2 > dim {
                    continue;
                }
                let mut m = m1.clone();
                for (x, y) in m.iter_mut().zip(m2.iter()) {
                    *x += *y;
                }
                ring.accumulate(&mut acc, m, c1 * c2);
            }
        }
        Class { ring: ring.clone(), terms: acc }
    }

    pub fn pow(&self, e: u32) -> Class {
        let mut out = self.ring.one();
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    /// Degree-`d` component.
    pub fn component(&self, d: u32) -> Class {
        Class {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| self.ring.mono_degree(m) == d)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Homogeneous components `0..=dim`.
    pub fn components(&self) -> Vec<Class> {
        let dim = self.ring.dim() as usize;
        let mut parts: Vec<Terms> = vec![FxHashMap::default(); dim + 1];
        for (m, c) in &self.terms {
            parts[self.ring.mono_degree(m) as usize].insert(m.clone(), c.clone());
        }
        parts.into_iter().map(|terms| Class { ring: self.ring.clone(), terms }).collect()
    }

    pub fn max_degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| self.ring.mono_degree(m)).max()
    }

    pub fn is_homogeneous(&self, d: u32) -> bool {
        self.terms.keys().all(|m| self.ring.mono_degree(m) == d)
    }

    /// Drops components above degree `d`.
    pub fn truncate(&self, d: u32) -> Class {
        Class {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| self.ring.mono_degree(m) <= d)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// `exp(x)` for `x` without constant term, via `d·y_d = Σ_k k·x_k·y_{d−k}`.
    pub fn exp(&self) -> Class {
        assert!(self.constant_term().is_zero(), "exp needs a nilpotent argument");
        let x = self.components();
        let dim = x.len() - 1;
        let mut y: Vec<Class> = vec![self.ring.one()];
        for d in 1..=dim {
            let mut acc = self.ring.zero();
            for k in 1..=d {
                if x[k].is_zero() || y[d - k].is_zero() {
                    continue;
                }
                acc = acc.add(&x[k].mul(&y[d - k]).scale_int(k as i64));
            }
            y.push(acc.scale(&Rat::new(1, d as i64)));
        }
        sum_classes(&self.ring, y)
    }

    /// `log(c)` for `c` with constant term 1.
    pub fn log(&self) -> Class {
        assert!(self.constant_term().is_one(), "log needs constant term 1");
        let c = self.components();
        let dim = c.len() - 1;
        let mut y: Vec<Class> = vec![self.ring.zero()];
        for d in 1..=dim {
            // d·c_d = Σ_{k=1..d} k·y_k·c_{d−k}
            let mut acc = c[d].scale_int(d as i64);
            for k in 1..d {
                if y[k].is_zero() || c[d - k].is_zero() {
                    continue;
                }
                acc = acc.sub(&y[k].mul(&c[d - k]).scale_int(k as i64));
            }
            y.push(acc.scale(&Rat::new(1, d as i64)));
        }
        sum_classes(&self.ring, y)
    }

    /// Multiplicative inverse of a class with constant term 1... or any unit constant.
    pub fn inverse(&self) -> Class {
        let c0 = self.constant_term();
        assert!(!c0.is_zero(), "not a unit");
        let inv0 = c0.recip();
        let c = self.components();
        let dim = c.len() - 1;
        let mut y: Vec<Class> = vec![self.ring.constant(inv0.clone())];
        for d in 1..=dim {
            let mut acc = self.ring.zero();
            for k in 1..=d {
                if c[k].is_zero() || y[d - k].is_zero() {
                    continue;
                }
                acc = acc.add(&c[k].mul(&y[d - k]));
            }
            y.push(acc.scale(&(-inv0.clone())));
        }
        sum_classes(&self.ring, y)
    }

    /// Image in a ring that contains this one (a bundle over it or a product).
    pub fn lift(&self, target: &Ring) -> Result<Class, RingError> {
        if self.ring.same(target) {
            return Ok(self.clone());
        }
        let off = target.offset_of(&self.ring).ok_or(RingError::NotAnAncestor)?;
        let n = target.nvars();
        let mut acc = FxHashMap::default();
        for (m, c) in &self.terms {
            target.accumulate(&mut acc, pad(m, off, n), c.clone());
        }
        Ok(Class { ring: target.clone(), terms: acc })
    }

    /// Coefficient of `v^{r-1}` for the last variable `v` (fibre integration
    /// along the last projective bundle), as a class of `base`.
    pub fn pushforward_last(&self, base: &Ring) -> Result<Class, RingError> {
        let n = self.ring.nvars();
        if n == 0 || base.nvars() != n - 1 {
            return Err(RingError::NotABundle);
        }
        if self.ring.offset_of(base) != Some(0) {
            return Err(RingError::NotAnAncestor);
        }
        let r = self.ring.relation_rank(n - 1).ok_or(RingError::NotABundle)?;
        let mut acc = FxHashMap::default();
        for (m, c) in &self.terms {
            if m[n - 1] as u32 == r - 1 {
                add_to(&mut acc, Mono::from_slice(&m[..n - 1]), c.clone());
            }
        }
        Ok(Class { ring: base.clone(), terms: acc })
    }

    /// Coefficient of the top monomial.
    pub fn top_coefficient(&self) -> Result<Rat, RingError> {
        let top = self.ring.top_monomial()?;
        Ok(self.coeff(&top))
    }

    /// Evaluates a polynomial in free variables: every variable is replaced by
    /// the class given by `subst` in the target ring.
    pub fn substitute(&self, target: &Ring, subst: &dyn Fn(usize) -> Class) -> Class {
        let n = self.ring.nvars();
        let images: Vec<Class> = (0..n).map(subst).collect();
        let mut powers: Vec<Vec<Class>> = images.iter().map(|c| vec![target.one(), c.clone()]).collect();
        let mut out = target.zero();
        for (m, c) in self.sorted_terms() {
            let mut t = target.constant(c);
            for (i, &e) in m.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while powers[i].len() <= e as usize {
                    let next = powers[i].last().unwrap().mul(&images[i]);
                    powers[i].push(next);
                }
                t = t.mul(&powers[i][e as usize]);
                if t.is_zero() {
                    break;
                }
            }
            out = out.add(&t);
        }
        out
    }
}

pub fn sum_classes(ring: &Ring, parts: impl IntoIterator<Item = Class>) -> Class {
    let mut acc = ring.zero().terms;
    for p in parts {
        for (m, c) in p.terms {
            add_to(&mut acc, m, c);
        }
    }
    Class { ring: ring.clone(), terms: acc }
}

impl PartialEq for Class {
    fn eq(&self, other: &Class) -> bool {
        self.ring.same(&other.ring) && self.terms == other.terms
    }
}

impl fmt::Display for Class {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.sorted_terms();
        if terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in terms.iter().enumerate() {
            match (i, c.is_negative()) {
                (0, false) => {}
                (0, true) => write!(f, "-")?,
                (_, false) => write!(f, " + ")?,
                (_, true) => write!(f, " - ")?,
            }
            let a = c.abs();
            let mono = mono_string(&self.ring, m);
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

impl fmt::Debug for Class {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

pub fn mono_string(ring: &Ring, m: &[u8]) -> String {
    let mut parts = Vec::new();
    for (i, &e) in m.iter().enumerate() {
        match e {
            0 => {}
            1 => parts.push(ring.vars()[i].name.clone()),
            e => parts.push(format!("{}^{}", ring.vars()[i].name, e)),
        }
    }
    parts.join("*")
}

/// Coefficients keyed by monomial strings (sorted), handy for comparisons.
pub fn named_terms(c: &Class) -> BTreeMap<String, Rat> {
    c.terms().map(|(m, x)| (mono_string(c.ring(), m), x.clone())).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pn(n: u32) -> Ring {
        Ring::point().extend_projective("h", n + 1, &[])
    }

    #[test]
    fn projective_space_relations() {
        let r = pn(5);
        let h = r.var("h");
        assert_eq!(h.pow(5).top_coefficient().unwrap(), Rat::int(1));
        assert!(h.pow(6).is_zero());
        assert_eq!(r.betti(), vec![1, 1, 1, 1, 1, 1]);
    }

    #[test]
    fn relation_over_a_generic_base() {
        let vars: Vec<Var> = (1..=6).map(|i| Var { name: format!("e{i}"), degree: i }).collect();
        let base = Ring::free(vars, 9);
        let chern: Vec<Class> = (1..=6).map(|i| base.var(&format!("e{i}"))).collect();
        let pe = base.extend_projective("H", 6, &chern);
        let h = pe.var("H");
        let pushed = h.pow(6).pushforward_last(&base).unwrap();
        assert_eq!(pushed, base.var("e1").neg());
        assert_eq!(h.pow(5).pushforward_last(&base).unwrap(), base.one());
        assert!(h.pow(4).pushforward_last(&base).unwrap().is_zero());
        assert!(base.var("e1").pow(10).is_zero());
    }

    #[test]
    fn exp_log_inverse() {
        let r = pn(6);
        let h = r.var("h");
        let e = h.scale_int(3).exp();
        assert_eq!(e.log(), h.scale_int(3));
        let u = r.one().add(&h.scale_int(2));
        assert_eq!(u.mul(&u.inverse()), r.one());
        assert_eq!(e.mul(&h.scale_int(-3).exp()), r.one());
    }

    #[test]
    fn lifting_into_products() {
        let a = pn(2);
        let b = pn(3);
        let ab = a.product(&b, ("", "'"));
        let h1 = a.var("h").lift(&ab).unwrap();
        let h2 = b.var("h").lift(&ab).unwrap();
        let top = h1.pow(2).mul(&h2.pow(3));
        assert_eq!(top.top_coefficient().unwrap(), Rat::int(1));
        assert_eq!(h1.add(&h2).pow(5).top_coefficient().unwrap(), Rat::int(10));
    }
}
