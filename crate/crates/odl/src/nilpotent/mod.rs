//! Degeneracy loci attached to Richardson nilpotent orbits.
//!
//! For `φ: E → E ⊗ L` with `rank E = e` and a parabolic `P ⊂ SL_e` with
//! block sizes `λ^*`, the locus where the traceless part of `φ` lies in the
//! closure of the orbit of type `λ` is resolved by the zero locus of
//! `θ^*(ad_E ⊗ L) / (Ω_rel ⊗ L)` on the relative flag variety `F_d(E)`.

pub mod catalog;

use serde::Serialize;

use crate::chow::{flag_bundle, projective_bundle, zero_locus, ChowError, Class, Variety};
use crate::forms::hyperplane_coordinates;
use crate::rational::Rat;
use crate::report::LocusReport;
use crate::sheaves::{adjoint_sl, SheafClass, SheafError};
use crate::symfun::Partition;

pub use catalog::{fourfold_catalog, table5, table6_nilpotent, NilpotentRow};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum NilpotentError {
    #[error("orbit ({0}) is not in the catalog")]
    UnknownOrbit(u32),
    #[error("orbit ({0}) needs an isotropic flag bundle, which is not implemented")]
    NotTypeA(u32),
    #[error("orbit ({id}) lives in sl_{expected}, but E has rank {got}")]
    Rank { id: u32, expected: u32, got: Rat },
    #[error("flag dimensions {dims:?} do not match the partition {lambda}")]
    Flag { dims: Vec<u32>, lambda: String },
    #[error("L must be a line bundle class")]
    Twist,
    #[error("expected dimension {0} is negative")]
    Dimension(i64),
    #[error("canonical class mismatch: adjunction gives {adjunction}, the formula gives {formula}")]
    Canonical { adjunction: String, formula: String },
    #[error("{0}")]
    Chow(#[from] ChowError),
    #[error("{0}")]
    Sheaf(#[from] SheafError),
}

impl From<crate::chow::RingError> for NilpotentError {
    fn from(e: crate::chow::RingError) -> Self {
        NilpotentError::Chow(e.into())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Group {
    SL(u32),
    Sp(u32),
    SO(u32),
    G2,
}

impl Group {
    pub fn dim(&self) -> i64 {
        match *self {
            Group::SL(n) => (n * n) as i64 - 1,
            Group::Sp(n) => {
                let m = (n / 2) as i64;
                m * (2 * m + 1)
            }
            Group::SO(n) => (n * (n - 1) / 2) as i64,
            Group::G2 => 14,
        }
    }
}

impl std::fmt::Display for Group {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Group::SL(n) => write!(f, "SL{n}"),
            Group::Sp(n) => write!(f, "Sp{n}"),
            Group::SO(n) => write!(f, "SO{n}"),
            Group::G2 => write!(f, "G2"),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct RichardsonOrbit {
    pub id: u32,
    pub space: &'static str,
    pub group: Group,
    pub dim_gp: u32,
    /// As printed; compare with [`RichardsonOrbit::ell_p`].
    pub ell_p_stored: i64,
    pub codim_sing: u32,
    /// Degree of the collapsing `T^*(G/P) → Ō`.
    pub delta: u32,
    /// Block sizes of the parabolic in `SL_e`, for type-A rows.
    pub blocks: Option<Vec<u32>>,
}

impl RichardsonOrbit {
    pub fn dim_g(&self) -> i64 {
        self.group.dim()
    }

    pub fn dim_p(&self) -> i64 {
        self.dim_g() - self.dim_gp as i64
    }

    /// `2 dim P − dim G`, the codimension of the locus.
    pub fn ell_p(&self) -> i64 {
        2 * self.dim_p() - self.dim_g()
    }

    pub fn computable(&self) -> bool {
        self.blocks.is_some() || self.symplectic_line()
    }

    pub fn birational(&self) -> bool {
        self.delta == 1
    }

    /// `Sp_4` acting on `P^3 = P(E)`: every line is isotropic, so no
    /// isotropic flag bundle is needed.
    pub fn symplectic_line(&self) -> bool {
        self.group == Group::Sp(4) && self.space == "P3"
    }

    /// `λ`, the conjugate of the sorted block sizes.
    pub fn partition(&self) -> Option<Partition> {
        self.blocks.as_ref().map(|b| Partition::from_unsorted(b).conjugate())
    }

    pub fn flag_dims(&self) -> Option<Vec<u32>> {
        self.blocks.as_ref().map(|b| partial_sums(b))
    }
}

fn partial_sums(blocks: &[u32]) -> Vec<u32> {
    let mut out = Vec::new();
    let mut acc = 0;
    for &b in &blocks[..blocks.len() - 1] {
        acc += b;
        out.push(acc);
    }
    out
}

fn orbit(
    id: u32,
    space: &'static str,
    group: Group,
    dim_gp: u32,
    ell_p: i64,
    codim_sing: u32,
    delta: u32,
    blocks: Option<&[u32]>,
) -> RichardsonOrbit {
    RichardsonOrbit {
        id,
        space,
        group,
        dim_gp,
        ell_p_stored: ell_p,
        codim_sing,
        delta,
        blocks: blocks.map(|b| b.to_vec()),
    }
}

/// The sixteen orbits with `dim G/P ≤ 5`.
pub fn orbit_catalog() -> Vec<RichardsonOrbit> {
    use Group::*;
    vec![
        orbit(1, "P1", SL(2), 1, 1, 2, 1, Some(&[1, 1])),
        orbit(2, "P2", SL(3), 2, 4, 4, 1, Some(&[1, 2])),
        orbit(3, "P3", SL(4), 3, 9, 6, 1, Some(&[1, 3])),
        orbit(4, "P3", Sp(4), 3, 4, 2, 2, None),
        orbit(5, "Q3", SO(5), 3, 4, 2, 1, None),
        orbit(6, "F12", SL(3), 3, 2, 2, 1, Some(&[1, 1, 1])),
        orbit(7, "P4", SL(5), 4, 16, 8, 1, Some(&[1, 4])),
        // Q^4 = Gr(2,4)
        orbit(8, "Q4", SL(4), 4, 7, 2, 1, Some(&[2, 2])),
        orbit(9, "OF12", SO(5), 4, 2, 2, 1, None),
        orbit(10, "P5", SL(6), 5, 25, 10, 1, Some(&[1, 5])),
        orbit(11, "P5", Sp(6), 5, 11, 2, 2, None),
        orbit(12, "Q5", SO(7), 5, 11, 2, 1, None),
        orbit(13, "F12", SL(4), 5, 5, 2, 1, Some(&[1, 1, 2])),
        orbit(14, "F13", SL(4), 5, 5, 2, 1, Some(&[1, 2, 1])),
        orbit(15, "Q5", G2, 5, 4, 2, 2, None),
        orbit(16, "G2ad", G2, 5, 4, 2, 1, None),
    ]
}

pub fn find_orbit(id: u32) -> Result<RichardsonOrbit, NilpotentError> {
    orbit_catalog().into_iter().find(|o| o.id == id).ok_or(NilpotentError::UnknownOrbit(id))
}

/// Codimension of the singular locus of the closure of the orbit of type
/// `λ` in `sl_e`: move a corner down to the first row where it fits; the
/// codimension is twice the number of rows crossed. `None` for `λ = 1^e`.
pub fn singular_codimension(lambda: &Partition) -> Option<u32> {
    let p = lambda.parts();
    let at = |i: usize| p.get(i).copied().unwrap_or(0);
    let mut best: Option<u32> = None;
    for r in 0..p.len() {
        if at(r) <= at(r + 1) || at(r) < 2 {
            continue;
        }
        let target = (r + 1..=p.len()).find(|&s| at(s) + 2 <= at(r)).unwrap();
        let c = 2 * (target - r) as u32;
        best = Some(best.map_or(c, |b| b.min(c)));
    }
    best
}

/// Relative dimension of `F_d(C^e)`, `Σ_{i<j} b_i b_j`.
pub fn flag_dimension(blocks: &[u32]) -> u32 {
    let mut d = 0;
    for i in 0..blocks.len() {
        for j in i + 1..blocks.len() {
            d += blocks[i] * blocks[j];
        }
    }
    d
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Target {
    /// `K_Z` trivial.
    CalabiYau,
    /// `K_Z = θ^*O_X(−1)`.
    Fano,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum Verdict {
    Impossible,
    ProjectiveSpace,
    Quadric,
    /// Any `X` of the required dimension and index.
    Any {
        coindex: i64,
    },
}

#[derive(Debug, Clone, Serialize)]
pub struct Feasibility {
    pub orbit: u32,
    pub target: Target,
    pub d: i64,
    pub dim_x: i64,
    /// Required index of `X`, with `L = O_X(1)`.
    pub index: i64,
    pub verdict: Verdict,
}

impl std::fmt::Display for Feasibility {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match &self.verdict {
            Verdict::Impossible => {
                write!(f, "impossible (index {} exceeds dim X + 1 = {})", self.index, self.dim_x + 1)
            }
            Verdict::ProjectiveSpace => write!(f, "P^{}", self.dim_x),
            Verdict::Quadric => write!(f, "Q^{}", self.dim_x),
            Verdict::Any { coindex } => {
                write!(f, "X of dimension {} and index {} (coindex {coindex})", self.dim_x, self.index)
            }
        }
    }
}

/// Constraints on `X` for a `d`-dimensional locus with `L = O_X(1)`.
/// `dim X = d + ℓ_P` and the index is `dim P` (plus one for Fano loci);
/// Kobayashi–Ochiai bounds it by `dim X + 1`, with equality only for
/// projective spaces and `dim X` only for quadrics.
pub fn feasibility(orbit: &RichardsonOrbit, d: i64, target: Target) -> Feasibility {
    let dim_x = d + orbit.ell_p();
    let index = orbit.dim_p() + if target == Target::Fano { 1 } else { 0 };
    let verdict = if index > dim_x + 1 {
        Verdict::Impossible
    } else if index == dim_x + 1 {
        Verdict::ProjectiveSpace
    } else if index == dim_x {
        Verdict::Quadric
    } else {
        Verdict::Any { coindex: dim_x + 1 - index }
    };
    Feasibility { orbit: orbit.id, target, d, dim_x, index, verdict }
}

#[derive(Debug, Clone)]
pub enum OrbitChoice {
    Catalog(u32),
    /// A type-A orbit in `sl_e`, `e = |λ|`.
    Partition(Partition),
}

#[derive(Debug, Clone)]
pub struct NilpotentLocusConfig {
    pub label: String,
    pub x: Variety,
    pub e: SheafClass,
    pub l: SheafClass,
    pub orbit: OrbitChoice,
    /// Block order of the parabolic; defaults to the sorted dual partition.
    pub blocks: Option<Vec<u32>>,
}

/// What the configuration resolves to.
#[derive(Debug, Clone, Serialize)]
pub struct Construction {
    pub rank: u32,
    pub partition: Option<String>,
    pub blocks: Vec<u32>,
    /// `dim G/P`, the relative dimension of the flag bundle.
    pub dim_gp: u32,
    pub dim_p: i64,
    pub codim_sing: Option<u32>,
    pub delta: u32,
    pub symplectic: bool,
}

pub struct Resolution {
    pub f: Variety,
    pub q: SheafClass,
    pub z: Variety,
}

impl NilpotentLocusConfig {
    pub fn new(
        label: &str,
        x: Variety,
        e: SheafClass,
        l: SheafClass,
        orbit: OrbitChoice,
    ) -> Result<NilpotentLocusConfig, NilpotentError> {
        let e = e.lift(&x.ring)?;
        let l = l.lift(&x.ring)?;
        if !l.rank().is_one() {
            return Err(NilpotentError::Twist);
        }
        let cfg = NilpotentLocusConfig { label: label.into(), x, e, l, orbit, blocks: None };
        cfg.construction()?;
        Ok(cfg)
    }

    pub fn with_blocks(mut self, blocks: &[u32]) -> Result<NilpotentLocusConfig, NilpotentError> {
        self.blocks = Some(blocks.to_vec());
        self.construction()?;
        Ok(self)
    }

    pub fn construction(&self) -> Result<Construction, NilpotentError> {
        let rank = self.e.rank();
        match &self.orbit {
            OrbitChoice::Catalog(id) => {
                let o = find_orbit(*id)?;
                let expected = match o.group {
                    Group::SL(n) | Group::Sp(n) => n,
                    _ => return Err(NilpotentError::NotTypeA(o.id)),
                };
                if rank != Rat::int(expected as i64) {
                    return Err(NilpotentError::Rank { id: o.id, expected, got: rank });
                }
                if o.symplectic_line() {
                    return Ok(Construction {
                        rank: 4,
                        partition: None,
                        blocks: vec![1, 3],
                        dim_gp: 3,
                        dim_p: o.dim_p(),
                        codim_sing: Some(o.codim_sing),
                        delta: o.delta,
                        symplectic: true,
                    });
                }
                let blocks = o.blocks.clone().ok_or(NilpotentError::NotTypeA(o.id))?;
                let blocks = self.check_blocks(&o.partition().unwrap(), blocks)?;
                Ok(Construction {
                    rank: expected,
                    partition: o.partition().map(|p| p.to_string()),
                    dim_gp: flag_dimension(&blocks),
                    blocks,
                    dim_p: o.dim_p(),
                    codim_sing: Some(o.codim_sing),
                    delta: o.delta,
                    symplectic: false,
                })
            }
            OrbitChoice::Partition(lambda) => {
                let e = lambda.size();
                if rank != Rat::int(e as i64) || e < 2 {
                    return Err(NilpotentError::Flag { dims: vec![], lambda: lambda.to_string() });
                }
                let blocks = self.check_blocks(lambda, lambda.conjugate().parts().to_vec())?;
                let dim_gp = flag_dimension(&blocks);
                Ok(Construction {
                    rank: e,
                    partition: Some(lambda.to_string()),
                    dim_gp,
                    blocks,
                    dim_p: (e * e) as i64 - 1 - dim_gp as i64,
                    codim_sing: singular_codimension(lambda),
                    delta: 1,
                    symplectic: false,
                })
            }
        }
    }

    fn check_blocks(&self, lambda: &Partition, default: Vec<u32>) -> Result<Vec<u32>, NilpotentError> {
        let Some(b) = &self.blocks else { return Ok(default) };
        if Partition::from_unsorted(b).conjugate() != *lambda || b.contains(&0) {
            return Err(NilpotentError::Flag { dims: partial_sums(b), lambda: lambda.to_string() });
        }
        Ok(b.clone())
    }

    /// `c_1(K_X ⊗ L^{dim P})`; the canonical class of the resolution is its
    /// pullback.
    pub fn canonical_class(&self) -> Result<Class, NilpotentError> {
        let c = self.construction()?;
        Ok(self.x.canonical().c(1).add(&self.l.c(1).scale_int(c.dim_p)))
    }

    pub fn expected_dim(&self) -> Result<i64, NilpotentError> {
        let c = self.construction()?;
        // dim X − ℓ_P with ℓ_P = 2 dim P − dim G = dim P − dim G/P
        Ok(self.x.dim as i64 - (c.dim_p - c.dim_gp as i64))
    }

    /// The flag bundle, the bundle `Q = (g_E − Ω_rel) ⊗ L` on it and its
    /// zero locus. `g_E` is `ad_E = E ⊗ E^* − O`, or `S²E ⊗ M^{-1}` for a
    /// symplectic form `∧²E → M`, with `c_1(M) = c_1(E)/2`.
    pub fn flag_and_bundle(&self) -> Result<(Variety, SheafClass), NilpotentError> {
        let c = self.construction()?;
        let (f, g) = if c.symplectic {
            let f = projective_bundle(&self.x, &self.e)?;
            let e = self.e.lift(&f.ring)?;
            let m = SheafClass::line(&e.c(1).scale(&Rat::new(1, 2)));
            (f, e.sym(2).tensor_line(&m.dual())?)
        } else {
            let f = flag_bundle(&self.x, &self.e, &partial_sums(&c.blocks))?;
            let ad = adjoint_sl(&self.e.lift(&f.ring)?)?;
            (f, ad)
        };
        let omega_rel = f.relative_tangent.clone().expect("bundle construction sets the relative tangent").dual();
        let l = self.l.lift(&f.ring)?;
        let q = g.sub(&omega_rel).tensor_line(&l)?;
        Ok((f, q))
    }

    pub fn resolution(&self) -> Result<Resolution, NilpotentError> {
        let d = self.expected_dim()?;
        if d < 0 {
            return Err(NilpotentError::Dimension(d));
        }
        let (f, q) = self.flag_and_bundle()?;
        let z = zero_locus(&f, &q)?;
        Ok(Resolution { f, q, z })
    }
}

/// Checks `K_F + c_1(Q) = θ^*(K_X + dim P · L)` in the ring of the flag bundle.
pub fn check_canonical(cfg: &NilpotentLocusConfig, f: &Variety, q: &SheafClass) -> Result<(), NilpotentError> {
    let adjunction = f.canonical().c(1).add(&q.c(1));
    let formula = cfg.canonical_class()?.lift(&f.ring)?;
    if adjunction != formula {
        return Err(NilpotentError::Canonical { adjunction: adjunction.to_string(), formula: formula.to_string() });
    }
    Ok(())
}

/// `m` with `c_1(K_F) + c_1(Q) = θ^*K_X + m·θ^*c_1(L)`, read off from the
/// construction rather than from the formula.
pub fn canonical_exponent(cfg: &NilpotentLocusConfig) -> Result<Option<Rat>, NilpotentError> {
    let (f, q) = cfg.flag_and_bundle()?;
    let rest = f.canonical().c(1).add(&q.c(1)).sub(&cfg.x.canonical().c(1).lift(&f.ring)?);
    let l = cfg.l.c(1).lift(&f.ring)?;
    if l.is_zero() {
        return Ok(None);
    }
    // compare coefficients on any monomial where c_1(L) is nonzero
    let (m, c) = l.terms().next().map(|(m, c)| (m.clone(), c.clone())).unwrap();
    let ratio = &rest.coeff(&m) / &c;
    Ok((rest == l.scale(&ratio)).then_some(ratio))
}

fn positive(x: &Rat) -> bool {
    !x.is_negative() && !x.is_zero()
}

fn condition(cfg: &NilpotentLocusConfig, kappa: &Class, dim: u32, codim_sing: Option<u32>) -> String {
    if kappa.is_zero() {
        return "cy".into();
    }
    match hyperplane_coordinates(&cfg.x, &kappa.neg()) {
        Some(a) if !a.is_empty() && a.iter().all(positive) => {
            if codim_sing.is_some_and(|c| c <= dim) {
                "almost-fano".into()
            } else {
                "fano".into()
            }
        }
        _ => match hyperplane_coordinates(&cfg.x, kappa) {
            Some(a) if !a.is_empty() && a.iter().all(positive) => "general-type".into(),
            _ => "other".into(),
        },
    }
}

pub fn invariants(cfg: &NilpotentLocusConfig) -> Result<LocusReport, NilpotentError> {
    let c = cfg.construction()?;
    let res = cfg.resolution()?;
    check_canonical(cfg, &res.f, &res.q)?;
    let z = &res.z;
    let dim = z.dim;
    let ctop = res.q.c_top()?;
    let nonempty = !ctop.mul(&res.f.weight).is_zero();
    let fundamental = res.f.pushforward(&ctop)?;
    let omega = z.tangent.dual();
    let mut chi_omega = Vec::new();
    for p in 0..=dim as usize {
        chi_omega.push(z.euler_characteristic(&omega.wedge(p))?);
    }
    let kappa = cfg.canonical_class()?;
    let cond = condition(cfg, &kappa, dim, c.codim_sing);
    let mut notes = Vec::new();
    if c.symplectic {
        notes.push("symplectic form ∧²E → M with c1(M) = c1(E)/2; g_E = S²E ⊗ M^-1".to_string());
    } else {
        notes.push("ad_E = E ⊗ E* − O, computed without torsion".to_string());
        notes.push(format!("parabolic blocks {:?}; other block orders give the same invariants", c.blocks));
    }
    if c.delta > 1 {
        notes.push(format!("the collapsing has degree {}: Z(s̃) → D is not birational", c.delta));
    }
    let (deg, h0) = if kappa.is_zero() {
        (None, None)
    } else {
        let minus_k = kappa.neg().lift(&z.ring)?;
        let deg = z.integrate(&minus_k.pow(dim))?;
        let h0 = z.euler_characteristic(&SheafClass::line(&minus_k))?;
        if cond.ends_with("fano") {
            notes.push("h0(-K) reported as χ(-K); Kawamata–Viehweg vanishing assumed".into());
        }
        (Some(deg), Some(h0))
    };
    Ok(LocusReport {
        label: cfg.label.clone(),
        ambient: cfg.x.name.clone(),
        dim,
        condition: cond,
        canonical: kappa.to_string(),
        nonempty,
        fundamental_class: fundamental.to_string(),
        chi_o: chi_omega[0].clone(),
        chi_omega,
        anticanonical_degree: deg,
        h0_anticanonical: h0,
        hodge: None,
        notes,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct CiCheck {
    pub label: String,
    pub rank: u32,
    pub dim: u32,
    pub chi_resolution: Rat,
    pub chi_complete_intersection: Rat,
    pub degree_resolution: Rat,
    pub degree_complete_intersection: Rat,
}

impl CiCheck {
    pub fn agrees(&self) -> bool {
        self.chi_resolution == self.chi_complete_intersection
            && self.degree_resolution == self.degree_complete_intersection
    }
}

/// The full nilpotent cone of `sl_e` is cut out by the coefficients of the
/// characteristic polynomial, so the locus is also the complete
/// intersection of `L^2, ..., L^e`. Computes `χ(O)` and `∫(−K)^dim` both
/// ways, with `E = eO`.
pub fn full_cone_ci_check(label: &str, x: &Variety, e: u32, l: &SheafClass) -> Result<CiCheck, NilpotentError> {
    let lambda = Partition::new(&[e]).map_err(|_| NilpotentError::Flag { dims: vec![], lambda: format!("({e})") })?;
    let cfg =
        NilpotentLocusConfig::new(label, x.clone(), x.trivial(e as i64), l.clone(), OrbitChoice::Partition(lambda))?;
    let r = invariants(&cfg)?;
    let l = l.lift(&x.ring)?;
    let mut ci = x.clone();
    let mut kappa = x.canonical().c(1);
    for d in 2..=e as i64 {
        let ld = SheafClass::line(&l.c(1).scale_int(d));
        ci = zero_locus(&ci, &ld)?;
        kappa = kappa.add(&l.c(1).scale_int(d));
    }
    let minus_k = kappa.neg().lift(&ci.ring)?;
    Ok(CiCheck {
        label: label.into(),
        rank: e,
        dim: ci.dim,
        chi_resolution: r.chi_o.clone(),
        chi_complete_intersection: ci.euler_characteristic(&ci.trivial(1))?,
        degree_resolution: r.anticanonical_degree.clone().unwrap_or_else(|| Rat::int(0)),
        degree_complete_intersection: ci.integrate(&minus_k.pow(ci.dim))?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chow::projective_space;

    #[test]
    fn catalog_arithmetic() {
        let cat = orbit_catalog();
        assert_eq!(cat.len(), 16);
        for o in &cat {
            assert_eq!(o.ell_p(), o.ell_p_stored, "orbit {}", o.id);
            if let Some(l) = o.partition() {
                assert_eq!(singular_codimension(&l), Some(o.codim_sing), "orbit {}", o.id);
                assert_eq!(flag_dimension(o.blocks.as_ref().unwrap()), o.dim_gp);
            }
        }
        let delta2: Vec<u32> = cat.iter().filter(|o| !o.birational()).map(|o| o.id).collect();
        assert_eq!(delta2, vec![4, 11, 15]);
    }

    #[test]
    fn feasibility_examples() {
        let f = feasibility(&find_orbit(7).unwrap(), 3, Target::CalabiYau);
        assert_eq!((f.verdict.clone(), f.dim_x), (Verdict::ProjectiveSpace, 19));
        let f = feasibility(&find_orbit(3).unwrap(), 4, Target::Fano);
        assert_eq!((f.verdict.clone(), f.dim_x), (Verdict::Quadric, 13));
        let f = feasibility(&find_orbit(10).unwrap(), 3, Target::CalabiYau);
        assert_eq!(f.verdict, Verdict::Impossible);
        let f = feasibility(&find_orbit(3).unwrap(), 4, Target::CalabiYau);
        assert_eq!(f.verdict, Verdict::Any { coindex: 2 });
    }

    #[test]
    fn singular_codimension_of_small_partitions() {
        let p = |v: &[u32]| Partition::new(v).unwrap();
        assert_eq!(singular_codimension(&p(&[2, 1])), Some(4));
        assert_eq!(singular_codimension(&p(&[3])), Some(2));
        assert_eq!(singular_codimension(&p(&[2, 2])), Some(2));
        assert_eq!(singular_codimension(&p(&[1, 1])), None);
    }

    #[test]
    fn minimal_orbit_exponent() {
        let x = projective_space(6).unwrap();
        for e in 2..=4u32 {
            let mut parts = vec![2];
            parts.extend(std::iter::repeat_n(1, e as usize - 2));
            let cfg = NilpotentLocusConfig::new(
                "min",
                x.clone(),
                x.trivial(e as i64),
                x.line(&[1]).unwrap(),
                OrbitChoice::Partition(Partition::new(&parts).unwrap()),
            )
            .unwrap();
            assert_eq!(canonical_exponent(&cfg).unwrap(), Some(Rat::int((e * (e - 1)) as i64)));
        }
    }
}
