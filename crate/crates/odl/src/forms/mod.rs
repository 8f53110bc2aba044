//! Degeneracy loci of partially decomposable three-forms in six variables.
//!
//! For a rank-6 bundle `E` on `X` and a general section of `∧³E` (or
//! `∧³E ⊗ L`), the locus is resolved by the zero locus of `Q_W = ∧³Q` (resp.
//! `∧³Q ⊗ L`) on `P(E)`, where `Q` is the rank-5 tautological quotient.

pub mod catalog;
pub mod generic;
pub mod hodge;

use std::sync::OnceLock;

use crate::bott::{parse_bundle, BundleEvalError, BundleExpr, HomogeneousAmbient};
use crate::chow::{projective_bundle, zero_locus, ChowError, Class, Variety};
use crate::rational::Rat;
use crate::report::LocusReport;
use crate::sheaves::{SheafClass, SheafError};
use crate::symfun::{EPoly, Partition, SchurVector};

pub use catalog::{grassmann_bundle_catalog, GrassmannBundleRow};
pub use generic::{generic_checks, CoefficientDiff, GenericChecks};
pub use hodge::hodge_numbers;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum FormsError {
    #[error("E must have rank 6, got {0}")]
    Rank(Rat),
    #[error("the twist must be a line bundle class")]
    Twist,
    #[error("expected dimension {0} is negative")]
    Dimension(i64),
    #[error("fundamental class mismatch: pushforward {pushforward} vs closed form {closed}")]
    ClassMismatch { pushforward: String, closed: String },
    #[error("{0}")]
    Chow(#[from] ChowError),
    #[error("{0}")]
    Sheaf(#[from] SheafError),
    #[error("{0}")]
    Unsupported(String),
}

impl From<crate::chow::RingError> for FormsError {
    fn from(e: crate::chow::RingError) -> Self {
        FormsError::Chow(e.into())
    }
}

/// A rank-6 bundle `E` on `X`, optionally with a twisting line bundle `L`.
#[derive(Clone, Debug)]
pub struct FormsLocus {
    pub label: String,
    pub x: Variety,
    pub e: SheafClass,
    pub twist: Option<SheafClass>,
    /// Description of `X`, `E` by homogeneous bundles on a flag variety,
    /// needed for Hodge numbers.
    pub model: Option<HomogeneousModel>,
}

#[derive(Clone, Debug)]
pub struct HomogeneousModel {
    pub ambient: HomogeneousAmbient,
    pub e: BundleExpr,
}

/// `P(E)`, the bundle `Q_W` on it and the zero locus `Z(s̃)`.
#[derive(Clone, Debug)]
pub struct Resolution {
    pub pe: Variety,
    pub qw: SheafClass,
    pub z: Variety,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ConditionKind {
    CalabiYau,
    Twisted,
    /// `−K` of the resolution is the pullback of `Σ a_i h_i`, all `a_i > 0`.
    Fano {
        multiples: Vec<i64>,
        coindex: Option<i64>,
    },
    Violated,
}

#[derive(Debug, Clone)]
pub struct ConditionReport {
    pub kind: ConditionKind,
    /// `E` has the class of `L' ⊕ 5O`; the locus is then cut out by `5L'`.
    pub degenerate_split: bool,
    pub diagnostics: Vec<String>,
}

impl ConditionReport {
    pub fn label(&self) -> String {
        if self.degenerate_split {
            return "degenerate-split".into();
        }
        match &self.kind {
            ConditionKind::CalabiYau => "cy".into(),
            ConditionKind::Twisted => "twisted".into(),
            ConditionKind::Fano { coindex: Some(c), .. } => format!("fano(coindex {c})"),
            ConditionKind::Fano { .. } => "fano".into(),
            ConditionKind::Violated => "violated".into(),
        }
    }
}

#[derive(Debug, Clone)]
pub struct FundamentalClass {
    /// The class on `X`, homogeneous of degree 5.
    pub class: Class,
    /// The same class written through the Chern classes `e_i` of `E`, when
    /// the locus is untwisted.
    pub e_poly: Option<EPoly>,
}

impl FormsLocus {
    pub fn new(label: &str, x: Variety, e: SheafClass, twist: Option<SheafClass>) -> Result<FormsLocus, FormsError> {
        let e = e.lift(&x.ring)?;
        if e.rank() != Rat::int(6) {
            return Err(FormsError::Rank(e.rank()));
        }
        let twist = match twist {
            Some(l) => {
                let l = l.lift(&x.ring)?;
                if !l.rank().is_one() {
                    return Err(FormsError::Twist);
                }
                Some(l)
            }
            None => None,
        };
        Ok(FormsLocus { label: label.to_string(), x, e, twist, model: None })
    }

    /// `X = Z(cuts) ⊂ ambient` and `E` given by bundle expressions on the
    /// homogeneous variety `ambient`, whose flag type must be known.
    pub fn homogeneous(label: &str, ambient: &Variety, cuts: &[&str], e: &str) -> Result<FormsLocus, FormsError> {
        let flag = ambient
            .flag
            .clone()
            .ok_or_else(|| FormsError::Unsupported(format!("{} is not a flag variety", ambient.name)))?;
        let parse = |t: &str| parse_bundle(t).map_err(|err| FormsError::Unsupported(err.to_string()));
        let eval = |err: BundleEvalError| FormsError::Unsupported(err.to_string());
        let cuts: Vec<BundleExpr> = cuts.iter().map(|t| parse(t)).collect::<Result<_, _>>()?;
        let e = parse(e)?;
        let mut x = ambient.clone();
        for c in &cuts {
            x = zero_locus(&x, &c.to_sheaf(ambient).map_err(eval)?)?;
        }
        let e_class = e.to_sheaf(&x).map_err(eval)?;
        let ambient = HomogeneousAmbient::new(flag, cuts).map_err(|err| FormsError::Unsupported(err.to_string()))?;
        let mut cfg = FormsLocus::new(label, x, e_class, None)?;
        cfg.model = Some(HomogeneousModel { ambient, e });
        Ok(cfg)
    }

    pub fn expected_dim(&self) -> i64 {
        self.x.dim as i64 - 5
    }

    fn twist_c1(&self) -> Class {
        match &self.twist {
            Some(l) => l.c(1),
            None => self.x.ring.zero(),
        }
    }

    pub fn resolution(&self) -> Result<Resolution, FormsError> {
        if self.expected_dim() < 0 {
            return Err(FormsError::Dimension(self.expected_dim()));
        }
        let pe = projective_bundle(&self.x, &self.e)?;
        let q = pe.bundle("Q_rel")?;
        let mut qw = q.wedge(3);
        if let Some(l) = &self.twist {
            qw = qw.tensor(&l.lift(&pe.ring)?);
        }
        let z = zero_locus(&pe, &qw)?;
        Ok(Resolution { pe, qw, z })
    }

    /// `c_1(K_X ⊗ det(E)^5 ⊗ L^{10})`; the canonical class of the resolution
    /// is its pullback.
    pub fn canonical_class(&self) -> Class {
        self.x.canonical().c(1).add(&self.e.c(1).scale_int(5)).add(&self.twist_c1().scale_int(10))
    }
}

pub fn check_conditions(cfg: &FormsLocus) -> ConditionReport {
    let mut diagnostics = Vec::new();
    let kappa = cfg.canonical_class();
    let kx = cfg.x.canonical().c(1);
    diagnostics.push(format!("c1(K_X) = {kx}"));
    diagnostics.push(format!("c1(det E) = {}", cfg.e.c(1)));
    if cfg.twist.is_some() {
        diagnostics.push(format!("c1(L) = {}", cfg.twist_c1()));
    }
    diagnostics.push(format!("c1(K_X ⊗ det(E)^5 ⊗ L^10) = {kappa}"));
    if let Some(index) = picard_one_index(&cfg.x) {
        let bound = cfg.x.dim as i64 + 1;
        diagnostics.push(format!("index of X = {index} (Kobayashi–Ochiai bound {bound})"));
    }
    let kind = if kappa.is_zero() {
        if cfg.twist_c1().is_zero() {
            ConditionKind::CalabiYau
        } else {
            ConditionKind::Twisted
        }
    } else {
        match hyperplane_coordinates(&cfg.x, &kappa.neg()) {
            Some(a) if !a.is_empty() && a.iter().all(|x| x.is_integer() && !x.is_negative() && !x.is_zero()) => {
                let multiples: Vec<i64> = a.iter().map(|x| x.to_i64().unwrap()).collect();
                let coindex = if multiples.len() == 1 { Some(cfg.expected_dim() + 1 - multiples[0]) } else { None };
                ConditionKind::Fano { multiples, coindex }
            }
            _ => ConditionKind::Violated,
        }
    };
    let c1 = cfg.e.c(1);
    let split_shape = SheafClass::line(&c1).add(&SheafClass::trivial(&cfg.x.ring, 5));
    let degenerate_split = !c1.is_zero() && split_shape.ch() == cfg.e.ch();
    if degenerate_split {
        diagnostics.push("E has the class of L' ⊕ 5O: the locus is the zero locus of a general section of 5L'".into());
    }
    ConditionReport { kind, degenerate_split, diagnostics }
}

/// Index of `X` with respect to its hyperplane class, for a single factor.
fn picard_one_index(x: &Variety) -> Option<i64> {
    if x.hyperplanes.len() != 1 {
        return None;
    }
    let a = hyperplane_coordinates(x, &x.canonical().c(1).neg())?;
    a[0].to_i64()
}

/// Writes a degree-one class as `Σ a_i h_i` in the hyperplane classes of `X`.
pub fn hyperplane_coordinates(x: &Variety, c: &Class) -> Option<Vec<Rat>> {
    let hs = &x.hyperplanes;
    if hs.is_empty() {
        return if c.is_zero() { Some(Vec::new()) } else { None };
    }
    let c = c.lift(&x.ring).ok()?;
    let mut monos: Vec<crate::chow::Mono> = Vec::new();
    for v in hs.iter().chain(std::iter::once(&c)) {
        for (m, _) in v.terms() {
            if !monos.contains(m) {
                monos.push(m.clone());
            }
        }
    }
    // columns: hyperplanes, augmented by c
    let ncols = hs.len();
    let mut rows: Vec<Vec<Rat>> = monos
        .iter()
        .map(|m| {
            let mut r: Vec<Rat> = hs.iter().map(|h| h.coeff(m)).collect();
            r.push(c.coeff(m));
            r
        })
        .collect();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..ncols {
        let Some(p) = (row..rows.len()).find(|&r| !rows[r][col].is_zero()) else { continue };
        rows.swap(row, p);
        let inv = rows[row][col].recip();
        for k in 0..=ncols {
            rows[row][k] = &rows[row][k] * &inv;
        }
        for r in 0..rows.len() {
            if r != row && !rows[r][col].is_zero() {
                let f = rows[r][col].clone();
                for k in 0..=ncols {
                    let t = &rows[row][k] * &f;
                    rows[r][k] -= &t;
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    if rows[row..].iter().any(|r| !r[ncols].is_zero()) {
        return None;
    }
    let mut out = vec![Rat::int(0); ncols];
    for (i, &col) in pivots.iter().enumerate() {
        out[col] = rows[i][ncols].clone();
    }
    Some(out)
}

/// `e1*(e1^4 + e2^2 + 2*e1*e3 - 4*e4)`.
pub fn closed_form_class() -> EPoly {
    let e = EPoly::e;
    let inner = e(1)
        .mul(&e(1))
        .mul(&e(1))
        .mul(&e(1))
        .add(&e(2).mul(&e(2)))
        .add(&e(1).mul(&e(3)).scale(&Rat::int(2)))
        .sub(&e(4).scale(&Rat::int(4)));
    e(1).mul(&inner)
}

/// Schur expansion of `[D] / e_1`, i.e. `s(4) + 3s(3,1) + 3s(2,2) + 6s(2,1,1)`.
pub fn closed_form_schur_cofactor() -> SchurVector {
    let e1 = EPoly::e(1);
    let full = closed_form_class();
    let quotient = divide_by_e1(&full).expect("divisible by e1");
    debug_assert_eq!(quotient.mul(&e1), full);
    quotient.to_schur().expect("integral Schur coefficients")
}

fn divide_by_e1(p: &EPoly) -> Option<EPoly> {
    let mut out = EPoly::zero();
    for (mu, c) in p.terms() {
        let parts = mu.parts();
        let pos = parts.iter().rposition(|&x| x == 1)?;
        let mut rest = parts.to_vec();
        rest.remove(pos);
        out.add_term(Partition::from_unsorted(&rest), c.clone());
    }
    Some(out)
}

/// Evaluates a polynomial in `e_i` at the Chern classes of `e`.
pub fn eval_epoly(p: &EPoly, e: &SheafClass) -> Class {
    let ring = e.ring();
    let c = e.chern();
    let mut out = ring.zero();
    for (mu, k) in p.terms() {
        let mut t = ring.constant(k.clone());
        for &i in mu.parts() {
            t = t.mul(&c.component(i));
        }
        out = out.add(&t);
    }
    out
}

/// `θ_*(c_top(∧³Q ⊗ L))` over a generic base, in `e1..e6, l1`.
fn universal_twisted_class() -> &'static Class {
    static CELL: OnceLock<Class> = OnceLock::new();
    CELL.get_or_init(|| {
        let g = crate::chow::generic_base(5, &[("E", 6), ("L", 1)]).unwrap();
        let pe = projective_bundle(&g, &g.taut["E"]).unwrap();
        let l = g.taut["L"].lift(&pe.ring).unwrap();
        let qw = pe.taut["Q_rel"].wedge(3).tensor(&l);
        pe.pushforward(&qw.c_top().unwrap()).unwrap()
    })
}

pub fn fundamental_class(cfg: &FormsLocus) -> Result<FundamentalClass, FormsError> {
    let res = cfg.resolution()?;
    let pushed = res.pe.pushforward(&res.qw.c_top()?)?;
    let (closed, e_poly) = match &cfg.twist {
        None => {
            let p = closed_form_class();
            (eval_epoly(&p, &cfg.e), Some(p))
        }
        Some(l) => {
            let u = universal_twisted_class();
            let c = cfg.e.chern();
            let l1 = l.c(1);
            let ring = cfg.x.ring.clone();
            let names = u.ring().vars();
            let sub = |i: usize| -> Class {
                let v = &names[i];
                if v.name.starts_with('l') {
                    l1.clone()
                } else {
                    c.component(v.degree)
                }
            };
            (u.substitute(&ring, &sub), None)
        }
    };
    if !pushed.is_homogeneous(5) {
        return Err(FormsError::Unsupported(format!("fundamental class {pushed} is not of pure degree 5")));
    }
    if pushed != closed {
        return Err(FormsError::ClassMismatch { pushforward: pushed.to_string(), closed: closed.to_string() });
    }
    Ok(FundamentalClass { class: pushed, e_poly })
}

pub fn invariants(cfg: &FormsLocus) -> Result<LocusReport, FormsError> {
    let cond = check_conditions(cfg);
    let res = cfg.resolution()?;
    let z = &res.z;
    let dim = z.dim;
    let fc = fundamental_class(cfg)?;
    let ctop = res.qw.c_top()?;
    let nonempty = !ctop.mul(&res.pe.weight).is_zero();
    let omega = z.tangent.dual();
    let mut chi_omega = Vec::new();
    for p in 0..=dim as usize {
        chi_omega.push(z.euler_characteristic(&omega.wedge(p))?);
    }
    let kappa = cfg.canonical_class();
    let mut notes = vec!["assumes a general section; D is smooth and isomorphic to Z(s̃) when dim D ≤ 4".to_string()];
    let (deg, h0) = if kappa.is_zero() {
        (None, None)
    } else {
        let minus_k = kappa.neg().lift(&z.ring)?;
        let deg = z.integrate(&minus_k.pow(dim))?;
        let h0 = z.euler_characteristic(&SheafClass::line(&minus_k))?;
        if matches!(cond.kind, ConditionKind::Fano { .. }) {
            notes.push("h0(-K) reported as χ(-K); Kodaira vanishing assumed".into());
        }
        (Some(deg), Some(h0))
    };
    if cond.degenerate_split {
        notes.push("E ≅ L' ⊕ 5O: the locus is a zero locus of 5L'".into());
    }
    let hodge = if dim == 3 && cfg.model.is_some() && cfg.twist.is_none() {
        let h = hodge_numbers(cfg)?;
        if h.candidates.len() > 1 {
            notes.push("Hodge numbers ambiguous: some Koszul differential may or may not have maximal rank".into());
        }
        Some(h)
    } else {
        None
    };
    Ok(LocusReport {
        label: cfg.label.clone(),
        ambient: cfg.x.name.clone(),
        dim,
        condition: cond.label(),
        canonical: kappa.to_string(),
        nonempty,
        fundamental_class: match &fc.e_poly {
            Some(p) => format!("{p} = {}", fc.class),
            None => fc.class.to_string(),
        },
        chi_o: chi_omega[0].clone(),
        chi_omega,
        anticanonical_degree: deg,
        h0_anticanonical: h0,
        hodge,
        notes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chow::{generic_base, grassmannian, parse_class, projective_space};

    #[test]
    fn closed_form_matches_schur_cofactor() {
        let s = closed_form_schur_cofactor();
        assert_eq!(s.to_string(), "s(4) + 3s(3,1) + 3s(2,2) + 6s(2,1,1)");
    }

    #[test]
    fn generic_class_is_closed_form() {
        let g = generic_base(5, &[("E", 6)]).unwrap();
        let cfg = FormsLocus::new("generic", g.clone(), g.taut["E"].clone(), None).unwrap();
        let res = cfg.resolution().unwrap();
        let pushed = res.pe.pushforward(&res.qw.c_top().unwrap()).unwrap();
        let expected = parse_class(&g.ring, "e1*(e1^4+e2^2+2*e1*e3-4*e4)").unwrap();
        assert_eq!(pushed, expected);
    }

    #[test]
    fn p9_fourfold() {
        let p9 = projective_space(9).unwrap();
        let e = p9.line(&[1]).unwrap().scale(2).add(&p9.trivial(4));
        let cfg = FormsLocus::new("f.1", p9, e, None).unwrap();
        assert_eq!(check_conditions(&cfg).kind, ConditionKind::CalabiYau);
        let r = invariants(&cfg).unwrap();
        assert_eq!(r.chi_o, Rat::int(2));
        assert!(r.nonempty);
    }

    #[test]
    fn trivial_bundle_has_zero_class() {
        let g = grassmannian(2, 5).unwrap();
        let cfg = FormsLocus::new("triv", g.clone(), g.trivial(6), None).unwrap();
        assert!(fundamental_class(&cfg).unwrap().class.is_zero());
    }
}
