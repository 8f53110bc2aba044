use std::collections::BTreeMap;
use std::sync::Arc;

use crate::chow::{Class, Ring, RingError, Var};
use crate::rational::Rat;
use crate::sheaves::{SheafClass, SheafError};
use crate::symfun::Partition;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ChowError {
    #[error("unsupported variety: {0}")]
    Unsupported(String),
    #[error("dimension bounds violated: {0}")]
    Dimension(String),
    #[error("{0}")]
    Ring(#[from] RingError),
    #[error("{0}")]
    Sheaf(#[from] SheafError),
    #[error("Euler characteristic {0} is not an integer")]
    NonIntegral(Rat),
    #[error("unknown tautological bundle {0:?}")]
    UnknownBundle(String),
}

/// One factor `GL(n)/P` of a homogeneous ambient; `blocks` are the ranks of
/// the successive graded pieces of the tautological flag.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlagFactor {
    pub n: usize,
    pub blocks: Vec<usize>,
}

#[derive(Clone)]
pub struct Variety {
    pub name: String,
    pub ring: Ring,
    pub dim: u32,
    /// `∫_X α = coefficient of the top monomial in α · weight`.
    pub weight: Class,
    pub tangent: SheafClass,
    pub taut: BTreeMap<String, SheafClass>,
    /// Degree-one classes `c_1(O(1))` of each factor.
    pub hyperplanes: Vec<Class>,
    /// Bundles whose general sections cut this variety out of its ambient.
    pub cuts: Vec<SheafClass>,
    /// Type-A flag description of the homogeneous ambient, when there is one.
    pub flag: Option<Vec<FlagFactor>>,
    pub base: Option<Arc<Variety>>,
    /// Relative tangent over `base` (bundles only).
    pub relative_tangent: Option<SheafClass>,
    /// Extra integration weight of the last relative step over `base`.
    pub relative_weight: Option<Class>,
    /// Rings of the projective levels from `base` up to this variety.
    pub levels: Vec<Ring>,
    pub generic: bool,
}

impl std::fmt::Debug for Variety {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Variety({}, dim {})", self.name, self.dim)
    }
}

impl Variety {
    pub fn point() -> Variety {
        let ring = Ring::point();
        Variety {
            name: "pt".into(),
            weight: ring.one(),
            tangent: SheafClass::zero(&ring),
            ring,
            dim: 0,
            taut: BTreeMap::new(),
            hyperplanes: Vec::new(),
            cuts: Vec::new(),
            flag: Some(Vec::new()),
            base: None,
            relative_tangent: None,
            relative_weight: None,
            levels: Vec::new(),
            generic: false,
        }
    }

    pub fn bundle(&self, name: &str) -> Result<SheafClass, ChowError> {
        self.taut.get(name).cloned().ok_or_else(|| ChowError::UnknownBundle(name.to_string()))
    }

    pub fn trivial(&self, r: i64) -> SheafClass {
        SheafClass::trivial(&self.ring, r)
    }

    /// `O(a_1, ..., a_k)` in terms of the factor hyperplane classes; a single
    /// entry is applied to the product of all factors.
    pub fn line(&self, a: &[i64]) -> Result<SheafClass, ChowError> {
        let hs = &self.hyperplanes;
        if hs.is_empty() {
            return Err(ChowError::Unsupported(format!("{} has no hyperplane class", self.name)));
        }
        let c1 = if a.len() == 1 {
            hs.iter().fold(self.ring.zero(), |acc, h| acc.add(h)).scale_int(a[0])
        } else if a.len() == hs.len() {
            hs.iter().zip(a).fold(self.ring.zero(), |acc, (h, &k)| acc.add(&h.scale_int(k)))
        } else {
            return Err(ChowError::Unsupported(format!("O{a:?} on a product of {} factors", hs.len())));
        };
        Ok(SheafClass::line(&c1))
    }

    /// The sum of the hyperplane classes.
    pub fn hyperplane(&self) -> Class {
        self.hyperplanes.iter().fold(self.ring.zero(), |acc, h| acc.add(h))
    }

    pub fn canonical(&self) -> SheafClass {
        self.tangent.det().dual()
    }

    pub fn integrate(&self, alpha: &Class) -> Result<Rat, ChowError> {
        if self.generic {
            return Err(RingError::NoIntegration.into());
        }
        let a = alpha.lift(&self.ring)?;
        Ok(a.mul(&self.weight).top_coefficient()?)
    }

    /// `∫ ch(F)·td(T_X)`, which must be an integer.
    pub fn euler_characteristic(&self, f: &SheafClass) -> Result<Rat, ChowError> {
        let f = f.lift(&self.ring)?;
        let v = self.integrate(&f.ch().mul(&self.tangent.todd()))?;
        if !v.is_integer() {
            return Err(ChowError::NonIntegral(v));
        }
        Ok(v)
    }

    /// A degree-`dim` class integrating to 1.
    pub fn point_class(&self) -> Result<Class, ChowError> {
        if self.generic {
            return Err(RingError::NoIntegration.into());
        }
        let h = self.hyperplane();
        let candidates: Vec<Class> = if self.hyperplanes.is_empty() { Vec::new() } else { vec![h.pow(self.dim)] };
        for c in candidates {
            let d = self.integrate(&c)?;
            if !d.is_zero() {
                return Ok(c.scale(&d.recip()));
            }
        }
        // fall back to basis monomials of the right degree
        let top = self.ring.top_monomial()?;
        let n = top.len();
        let mut m = vec![0u8; n];
        loop {
            if self.ring.mono_degree(&m) == self.dim {
                let c = self.ring.monomial(m.iter().copied().collect(), Rat::int(1));
                let d = self.integrate(&c)?;
                if !d.is_zero() {
                    return Ok(c.scale(&d.recip()));
                }
            }
            let mut i = 0;
            loop {
                if i == n {
                    return Err(ChowError::Dimension("no class of top degree integrates nontrivially".into()));
                }
                m[i] += 1;
                if m[i] <= top[i] {
                    break;
                }
                m[i] = 0;
                i += 1;
            }
        }
    }

    fn lift_all(&self, ring: &Ring) -> Result<Variety, ChowError> {
        let mut out = self.clone();
        out.ring = ring.clone();
        out.weight = self.weight.lift(ring)?;
        out.tangent = self.tangent.lift(ring)?;
        out.taut = self.taut.iter().map(|(k, v)| Ok((k.clone(), v.lift(ring)?))).collect::<Result<_, RingError>>()?;
        out.hyperplanes = self.hyperplanes.iter().map(|h| h.lift(ring)).collect::<Result<_, _>>()?;
        out.cuts = self.cuts.iter().map(|c| c.lift(ring)).collect::<Result<_, _>>()?;
        out.relative_tangent = None;
        out.relative_weight = None;
        out.levels = Vec::new();
        Ok(out)
    }

    /// A copy over a ring with a new identity; every class is carried over
    /// variable by variable.
    fn fresh(&self) -> Variety {
        let ring = self.ring.fresh_copy();
        let map = |c: &Class| c.substitute(&ring, &|i| ring.var_at(i));
        let sheaf = |s: &SheafClass| SheafClass::from_ch(map(s.ch()));
        let mut out = self.clone();
        out.weight = map(&self.weight);
        out.tangent = sheaf(&self.tangent);
        out.taut = self.taut.iter().map(|(k, v)| (k.clone(), sheaf(v))).collect();
        out.hyperplanes = self.hyperplanes.iter().map(map).collect();
        out.cuts = self.cuts.iter().map(sheaf).collect();
        out.relative_tangent = None;
        out.relative_weight = None;
        out.levels = Vec::new();
        out.base = None;
        out.ring = ring;
        out
    }

    /// Fibre integration over `base` for bundles built by this module.
    pub fn pushforward(&self, alpha: &Class) -> Result<Class, ChowError> {
        if self.base.is_none() || self.levels.len() < 2 {
            return Err(RingError::NotABundle.into());
        }
        let mut cur = alpha.lift(&self.ring)?;
        if let Some(w) = &self.relative_weight {
            cur = cur.mul(w);
        }
        for r in self.levels.iter().rev().skip(1) {
            cur = cur.pushforward_last(r)?;
        }
        Ok(cur)
    }
}

fn chern_list(e: &SheafClass) -> Result<(u32, Vec<Class>), ChowError> {
    let r = e.rank();
    let r = match r.to_i64() {
        Some(k) if k >= 1 => k as u32,
        _ => return Err(SheafError::BadRank(r).into()),
    };
    let c = e.chern();
    Ok((r, (1..=r).map(|i| c.component(i)).collect()))
}

pub fn projective_space(n: u32) -> Result<Variety, ChowError> {
    if n < 1 {
        return Err(ChowError::Dimension("projective space needs n ≥ 1".into()));
    }
    let ring = Ring::point().extend_projective("h", n + 1, &[]);
    let h = ring.var("h");
    let u = SheafClass::line(&h.neg());
    let q = SheafClass::trivial(&ring, n as i64 + 1).sub(&u);
    let tangent = q.tensor(&u.dual());
    let mut taut = BTreeMap::new();
    taut.insert("U".to_string(), u);
    taut.insert("Q".to_string(), q);
    Ok(Variety {
        name: format!("P^{n}"),
        weight: ring.one(),
        tangent,
        ring,
        dim: n,
        taut,
        hyperplanes: vec![h],
        cuts: Vec::new(),
        flag: Some(vec![FlagFactor { n: n as usize + 1, blocks: vec![1, n as usize] }]),
        base: None,
        relative_tangent: None,
        relative_weight: None,
        levels: Vec::new(),
        generic: false,
    })
}

pub fn grassmannian(k: u32, n: u32) -> Result<Variety, ChowError> {
    if k < 1 || k >= n {
        return Err(ChowError::Dimension(format!("Gr({k},{n}) needs 1 ≤ k < n")));
    }
    let pt = Variety::point();
    let f = pt.trivial(n as i64);
    let mut g = grassmann_bundle_named(&pt, &f, k, ("U", "Q"), "x")?;
    g.name = format!("Gr({k},{n})");
    g.base = None;
    g.relative_tangent = None;
    g.relative_weight = None;
    g.levels = Vec::new();
    let sigma1 = g.taut["U"].dual().c(1);
    g.hyperplanes = vec![sigma1];
    g.flag = Some(vec![FlagFactor { n: n as usize, blocks: vec![k as usize, (n - k) as usize] }]);
    Ok(g)
}

pub fn quadric(n: u32) -> Result<Variety, ChowError> {
    if n == 4 {
        let mut g = grassmannian(2, 4)?;
        g.name = "Q^4".into();
        return Ok(g);
    }
    if n.is_multiple_of(2) {
        return Err(ChowError::Unsupported(format!("even-dimensional quadric Q^{n}")));
    }
    let p = projective_space(n + 1)?;
    let o2 = p.line(&[2])?;
    let mut q = zero_locus(&p, &o2)?;
    q.name = format!("Q^{n}");
    q.flag = None;
    q.cuts.clear();
    Ok(q)
}

pub fn product(a: &Variety, b: &Variety) -> Result<Variety, ChowError> {
    if a.generic || b.generic {
        return Err(ChowError::Unsupported("products of generic bases".into()));
    }
    // a factor sharing a ring with `a` would lift ambiguously
    let fresh;
    let b = if a.ring.shares_ancestor(&b.ring) {
        fresh = b.fresh();
        &fresh
    } else {
        b
    };
    let na = a.hyperplanes.len().max(1);
    let suffix = "'".repeat(na);
    let ring = a.ring.product(&b.ring, ("", &suffix));
    let la = a.lift_all(&ring)?;
    let lb = b.lift_all(&ring)?;
    let mut taut = BTreeMap::new();
    for (k, v) in &la.taut {
        taut.insert(factor_name(k, 1, na), v.clone());
    }
    for (k, v) in &lb.taut {
        taut.insert(factor_name(k, na + 1, 0), v.clone());
    }
    let flag = match (&a.flag, &b.flag) {
        (Some(x), Some(y)) if a.cuts.is_empty() && b.cuts.is_empty() => {
            Some(x.iter().chain(y.iter()).cloned().collect())
        }
        _ => None,
    };
    let mut hyperplanes = la.hyperplanes.clone();
    hyperplanes.extend(lb.hyperplanes.iter().cloned());
    let mut cuts = la.cuts.clone();
    cuts.extend(lb.cuts.iter().cloned());
    Ok(Variety {
        name: format!("{}x{}", a.name, b.name),
        weight: la.weight.mul(&lb.weight),
        tangent: la.tangent.add(&lb.tangent),
        ring,
        dim: a.dim + b.dim,
        taut,
        hyperplanes,
        cuts,
        flag,
        base: None,
        relative_tangent: None,
        relative_weight: None,
        levels: Vec::new(),
        generic: false,
    })
}

/// `U` on the first factor becomes `U1`; names that already carry a factor
/// index are shifted.
fn factor_name(k: &str, first: usize, count_if_indexed: usize) -> String {
    let (stem, idx) = split_index(k);
    match idx {
        Some(i) => format!("{stem}{}", i + first - 1),
        None => {
            let _ = count_if_indexed;
            format!("{stem}{first}")
        }
    }
}

fn split_index(k: &str) -> (&str, Option<usize>) {
    let digits = k.chars().rev().take_while(|c| c.is_ascii_digit()).count();
    if digits == 0 || digits == k.len() {
        (k, None)
    } else {
        let (s, d) = k.split_at(k.len() - digits);
        (s, d.parse().ok())
    }
}

pub fn zero_locus(x: &Variety, v: &SheafClass) -> Result<Variety, ChowError> {
    let v = v.lift(&x.ring)?;
    let r = v.rank().to_i64().filter(|&r| r >= 0).ok_or_else(|| SheafError::BadRank(v.rank()))? as u32;
    if r > x.dim {
        return Err(ChowError::Dimension(format!("rank {r} exceeds dimension {}", x.dim)));
    }
    let mut out = x.clone();
    out.weight = x.weight.mul(&v.c_top()?);
    out.dim = x.dim - r;
    out.tangent = x.tangent.sub(&v);
    out.cuts.push(v);
    out.name = format!("Z({})", x.name);
    out.relative_tangent = None;
    out.relative_weight = None;
    Ok(out)
}

pub fn projective_bundle(x: &Variety, e: &SheafClass) -> Result<Variety, ChowError> {
    projective_bundle_named(x, e, "H")
}

pub fn projective_bundle_named(x: &Variety, e: &SheafClass, var: &str) -> Result<Variety, ChowError> {
    let e = e.lift(&x.ring)?;
    let (r, chern) = chern_list(&e)?;
    let ring = x.ring.extend_projective(var, r, &chern);
    let mut out = x.lift_all(&ring)?;
    let h = ring.var(var);
    let e = e.lift(&ring)?;
    let sub = SheafClass::line(&h.neg());
    let quot = e.sub(&sub);
    let trel = quot.tensor(&sub.dual());
    out.taut.insert("O_rel(-1)".into(), sub.clone());
    out.taut.insert("O_rel(1)".into(), sub.dual());
    out.taut.insert("Q_rel".into(), quot);
    out.tangent = out.tangent.add(&trel);
    out.relative_tangent = Some(trel);
    out.relative_weight = None;
    out.levels = vec![x.ring.clone(), ring.clone()];
    out.dim = x.dim + r - 1;
    out.name = format!("P({})", x.name);
    out.base = Some(Arc::new(x.clone()));
    out.flag = None;
    Ok(out)
}

/// `Gr(k, F)`: rank-`k` subbundles of `F`, exposed as `U_rel` and `Q_rel`.
pub fn grassmann_bundle(x: &Variety, f: &SheafClass, k: u32) -> Result<Variety, ChowError> {
    grassmann_bundle_named(x, f, k, ("U_rel", "Q_rel"), "g")
}

pub fn grassmann_bundle_named(
    x: &Variety,
    f: &SheafClass,
    k: u32,
    names: (&str, &str),
    var_prefix: &str,
) -> Result<Variety, ChowError> {
    let f = f.lift(&x.ring)?;
    let n = match f.rank().to_i64() {
        Some(n) if n >= 1 => n as u32,
        _ => return Err(SheafError::BadRank(f.rank()).into()),
    };
    if k < 1 || k >= n {
        return Err(ChowError::Dimension(format!("Gr({k}, rank {n}) needs 1 ≤ k < rank")));
    }
    // realise Gr(k,F) through the flag of m lines, using the dual side when shorter
    let dualize = k > n - k;
    let m = if dualize { n - k } else { k };
    let g = if dualize { f.dual() } else { f.clone() };
    let mut ring = x.ring.clone();
    let mut rest = g.clone();
    let mut lines: Vec<SheafClass> = Vec::new();
    let mut hs: Vec<String> = Vec::new();
    let mut levels = vec![x.ring.clone()];
    let start = x.ring.nvars();
    for i in 0..m {
        let (r, chern) = chern_list(&rest)?;
        let name = format!("{var_prefix}{}", start + i as usize + 1);
        let next = ring.extend_projective(&name, r, &chern);
        levels.push(next.clone());
        rest = rest.lift(&next)?;
        lines = lines.into_iter().map(|l| l.lift(&next)).collect::<Result<_, _>>()?;
        let h = next.var(&name);
        let l = SheafClass::line(&h.neg());
        rest = rest.sub(&l);
        lines.push(l);
        hs.push(name);
        ring = next;
    }
    let mut omega = ring.one();
    for (i, name) in hs.iter().enumerate() {
        omega = omega.mul(&ring.var(name).pow(m - 1 - i as u32));
    }
    let sub_g = lines.iter().fold(SheafClass::zero(&ring), |acc, l| acc.add(l));
    let f = f.lift(&ring)?;
    let (u, q) = if dualize {
        let qq = sub_g.dual();
        (f.sub(&qq), qq)
    } else {
        (sub_g.clone(), f.sub(&sub_g))
    };
    let trel = u.dual().tensor(&q);
    let mut out = x.lift_all(&ring)?;
    out.weight = out.weight.mul(&omega);
    out.tangent = out.tangent.add(&trel);
    out.taut.insert(names.0.to_string(), u);
    out.taut.insert(names.1.to_string(), q);
    out.relative_tangent = Some(trel);
    out.relative_weight = Some(omega);
    out.levels = levels;
    out.dim = x.dim + k * (n - k);
    out.name = format!("Gr({k},{})", x.name);
    out.base = Some(Arc::new(x.clone()));
    out.flag = None;
    Ok(out)
}

/// Partial flags `U_1 ⊂ ... ⊂ U_m ⊂ E` with `rank U_i = dims[i]`, built as
/// a chain of Grassmann bundles. Exposes `U1..Um` and the graded pieces
/// `G1..G{m+1}`; `relative_tangent` is the tangent along the whole flag.
pub fn flag_bundle(x: &Variety, e: &SheafClass, dims: &[u32]) -> Result<Variety, ChowError> {
    let e = e.lift(&x.ring)?;
    let n = e.rank().to_i64().unwrap_or(0) as u32;
    if dims.is_empty() || dims.windows(2).any(|w| w[0] >= w[1]) || dims[0] == 0 || *dims.last().unwrap() >= n {
        return Err(ChowError::Dimension(format!("flag dimensions {dims:?} in rank {n}")));
    }
    let mut cur = x.clone();
    let mut prev = 0;
    let mut subs: Vec<SheafClass> = Vec::new();
    let mut pieces: Vec<SheafClass> = Vec::new();
    let mut rel_weight: Option<Class> = None;
    let mut levels = vec![x.ring.clone()];
    for (i, &d) in dims.iter().enumerate() {
        let rest = if let Some(last) = subs.last() { e.lift(&cur.ring)?.sub(last) } else { e.clone() };
        let next = grassmann_bundle_named(&cur, &rest, d - prev, ("_sub", "_quot"), &format!("f{}_", i + 1))?;
        levels.extend(next.levels.iter().skip(1).cloned());
        let piece = next.taut["_sub"].clone();
        subs = subs.into_iter().map(|s| s.lift(&next.ring)).collect::<Result<_, _>>()?;
        pieces = pieces.into_iter().map(|s| s.lift(&next.ring)).collect::<Result<_, _>>()?;
        let cumulative = match subs.last() {
            Some(s) => s.add(&piece),
            None => piece.clone(),
        };
        subs.push(cumulative);
        pieces.push(piece);
        let w = next.relative_weight.clone().unwrap();
        rel_weight = Some(match rel_weight {
            Some(r) => r.lift(&next.ring)?.mul(&w),
            None => w,
        });
        cur = next;
        cur.taut.remove("_sub");
        cur.taut.remove("_quot");
        prev = d;
    }
    let ring = cur.ring.clone();
    let e = e.lift(&ring)?;
    pieces.push(e.sub(subs.last().unwrap()));
    let mut out = cur;
    for (i, s) in subs.iter().enumerate() {
        out.taut.insert(format!("U{}", i + 1), s.clone());
    }
    for (i, p) in pieces.iter().enumerate() {
        out.taut.insert(format!("G{}", i + 1), p.clone());
    }
    let base_t = x.tangent.lift(&ring)?;
    out.relative_tangent = Some(out.tangent.sub(&base_t));
    out.relative_weight = rel_weight;
    out.levels = levels;
    out.base = Some(Arc::new(x.clone()));
    out.name = format!("F{dims:?}({})", x.name);
    Ok(out)
}

/// Free model: symbols `(E, 6)` become Chern classes `e1..e6` of degrees
/// `1..6`, truncated at `dim`.
pub fn generic_base(dim: u32, symbols: &[(&str, u32)]) -> Result<Variety, ChowError> {
    if dim > 12 {
        return Err(ChowError::Dimension(format!("generic base of dimension {dim} > 12")));
    }
    let mut vars = Vec::new();
    for (name, rank) in symbols {
        let stem = name.to_lowercase();
        for i in 1..=(*rank).min(dim) {
            vars.push(Var { name: format!("{stem}{i}"), degree: i });
        }
    }
    let ring = Ring::free(vars, dim);
    let mut taut = BTreeMap::new();
    for (name, rank) in symbols {
        let stem = name.to_lowercase();
        let mut c = ring.one();
        for i in 1..=(*rank).min(dim) {
            c = c.add(&ring.var(&format!("{stem}{i}")));
        }
        taut.insert(name.to_string(), SheafClass::from_chern(*rank as i64, &c));
    }
    let tangent = taut.get("T").cloned().unwrap_or_else(|| SheafClass::zero(&ring));
    Ok(Variety {
        name: format!("generic({dim})"),
        weight: ring.one(),
        tangent,
        ring,
        dim,
        taut,
        hyperplanes: Vec::new(),
        cuts: Vec::new(),
        flag: None,
        base: None,
        relative_tangent: None,
        relative_weight: None,
        levels: Vec::new(),
        generic: true,
    })
}

/// Schubert class `σ_λ = det(c_{λ_i + j − i}(Q))` on a Grassmannian.
pub fn schubert_class(g: &Variety, lambda: &Partition) -> Result<Class, ChowError> {
    let q = g.bundle("Q")?;
    let c = q.chern();
    let m = lambda.len();
    let entry = |i: usize, j: usize| -> Class {
        let k = lambda.get(i) as i64 + j as i64 - i as i64;
        if k < 0 {
            g.ring.zero()
        } else {
            c.component(k as u32)
        }
    };
    let mat: Vec<Vec<Class>> = (0..m).map(|i| (0..m).map(|j| entry(i, j)).collect()).collect();
    Ok(class_det(&g.ring, &mat))
}

pub fn class_det(ring: &Ring, mat: &[Vec<Class>]) -> Class {
    fn go(ring: &Ring, mat: &[Vec<Class>], row: usize, cols: &[usize]) -> Class {
        if cols.is_empty() {
            return ring.one();
        }
        let mut out = ring.zero();
        for (pos, &c) in cols.iter().enumerate() {
            let a = &mat[row][c];
            if a.is_zero() {
                continue;
            }
            let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
            let t = a.mul(&go(ring, mat, row + 1, &rest));
            out = if pos % 2 == 0 { out.add(&t) } else { out.sub(&t) };
        }
        out
    }
    let cols: Vec<usize> = (0..mat.len()).collect();
    go(ring, mat, 0, &cols)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::part;

    #[test]
    fn basic_integrals() {
        let p5 = projective_space(5).unwrap();
        assert_eq!(p5.integrate(&p5.hyperplane().pow(5)).unwrap(), Rat::int(1));
        let q7 = quadric(7).unwrap();
        assert_eq!(q7.integrate(&q7.hyperplane().pow(7)).unwrap(), Rat::int(2));
        let g = grassmannian(2, 4).unwrap();
        assert_eq!(g.integrate(&g.hyperplane().pow(4)).unwrap(), Rat::int(2));
        assert_eq!(g.integrate(&g.tangent.c_top().unwrap()).unwrap(), Rat::int(6));
        assert!(quadric(6).is_err());
    }

    #[test]
    fn todd_integrals() {
        for v in [
            projective_space(2).unwrap(),
            grassmannian(2, 5).unwrap(),
            quadric(5).unwrap(),
            grassmannian(3, 6).unwrap(),
        ] {
            assert_eq!(v.integrate(&v.tangent.todd()).unwrap(), Rat::int(1), "{}", v.name);
        }
        let p3 = projective_space(3).unwrap();
        assert_eq!(p3.euler_characteristic(&p3.line(&[1]).unwrap()).unwrap(), Rat::int(4));
        let p5 = projective_space(5).unwrap();
        assert_eq!(p5.euler_characteristic(&p5.line(&[-3]).unwrap()).unwrap(), Rat::int(0));
        let g = grassmannian(2, 5).unwrap();
        assert_eq!(g.euler_characteristic(&g.bundle("U").unwrap().dual()).unwrap(), Rat::int(5));
    }

    #[test]
    fn zero_loci() {
        let g = grassmannian(2, 7).unwrap();
        let x = zero_locus(&g, &g.line(&[1]).unwrap().scale(2)).unwrap();
        assert_eq!(x.dim, 8);
        assert_eq!(x.tangent.c(1), g.hyperplane().scale_int(5));
        let p5 = projective_space(5).unwrap();
        let cubic = zero_locus(&p5, &p5.line(&[3]).unwrap()).unwrap();
        assert_eq!(cubic.integrate(&cubic.hyperplane().pow(4)).unwrap(), Rat::int(3));
        assert_eq!(zero_locus(&g, &g.line(&[1]).unwrap()).unwrap().dim, 9);
    }

    #[test]
    fn schubert_duality_on_gr25() {
        let g = grassmannian(2, 5).unwrap();
        let parts: Vec<Partition> = (0..=6).flat_map(|n| Partition::bounded(n, 2, 3)).collect();
        for a in &parts {
            for b in &parts {
                if a.size() + b.size() != 6 {
                    continue;
                }
                let comp = Partition::new(&[3 - b.get(1), 3 - b.get(0)]).unwrap();
                let v = g.integrate(&schubert_class(&g, a).unwrap().mul(&schubert_class(&g, b).unwrap())).unwrap();
                assert_eq!(v, Rat::int(if *a == comp { 1 } else { 0 }), "{a} {b}");
            }
        }
        let s1 = schubert_class(&g, &part![1]).unwrap();
        assert_eq!(s1, g.hyperplane());
    }

    #[test]
    fn bundles_over_bases() {
        let base = generic_base(9, &[("E", 6), ("T", 9)]).unwrap();
        let pe = projective_bundle(&base, &base.bundle("E").unwrap()).unwrap();
        let h = pe.ring.var("H");
        assert_eq!(pe.pushforward(&h.pow(6)).unwrap(), base.ring.var("e1").neg());
        assert!(base.integrate(&base.ring.one()).is_err());

        let p2 = projective_space(2).unwrap();
        let f = p2.trivial(5);
        let gb = grassmann_bundle(&p2, &f, 2).unwrap();
        let s = gb.bundle("Q_rel").unwrap().c(3).pow(2);
        assert_eq!(gb.pushforward(&s).unwrap(), p2.ring.one());

        let pt = Variety::point();
        let g24 = grassmann_bundle(&pt, &pt.trivial(4), 2).unwrap();
        let s1 = g24.bundle("U_rel").unwrap().dual().c(1);
        assert_eq!(g24.integrate(&s1.pow(4)).unwrap(), Rat::int(2));

        let fl = flag_bundle(&p2, &p2.trivial(3), &[1, 2]).unwrap();
        assert_eq!(fl.dim - p2.dim, 3);
        assert_eq!(fl.integrate(&fl.tangent.todd()).unwrap(), Rat::int(1));
    }
}
