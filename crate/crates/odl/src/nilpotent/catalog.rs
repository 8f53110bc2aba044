//! Concrete nilpotent configurations: almost Fano threefolds, Fano
//! threefolds and fourfolds, and fourfolds with trivial canonical class.

use serde::Serialize;

use crate::bott::parse_bundle;
use crate::chow::{grassmannian, product, projective_space, quadric, zero_locus, Variety};
use crate::rational::Rat;
use crate::report::LocusReport;
use crate::sheaves::SheafClass;

use super::{NilpotentError, NilpotentLocusConfig, OrbitChoice};

#[derive(Debug, Clone, Default, Serialize)]
pub struct NilExpected {
    pub chi_o: Option<i64>,
    /// `(−K)^dim`.
    pub degree: Option<i64>,
    /// `((−K)^4, χ(Ω¹), χ(Ω²), h⁰(−K))`.
    pub fano4: Option<[i64; 4]>,
}

#[derive(Debug, Clone)]
pub struct NilpotentRow {
    pub label: String,
    pub orbit: u32,
    pub ambient: String,
    pub bundle: String,
    pub config: Option<NilpotentLocusConfig>,
    pub skipped: Option<String>,
    pub expected: NilExpected,
}

impl NilpotentRow {
    fn new(orbit: u32, ambient: &str, x: &Variety, bundle: &str, expected: NilExpected) -> NilpotentRow {
        let label = format!("({orbit}) {ambient}, {bundle}");
        let cfg = config(&label, x, bundle, OrbitChoice::Catalog(orbit)).unwrap_or_else(|e| panic!("row {label}: {e}"));
        NilpotentRow {
            label,
            orbit,
            ambient: ambient.into(),
            bundle: bundle.into(),
            config: Some(cfg),
            skipped: None,
            expected,
        }
    }

    fn skip(orbit: u32, ambient: &str, bundle: &str, reason: &str) -> NilpotentRow {
        NilpotentRow {
            label: format!("({orbit}) {ambient}, {bundle}"),
            orbit,
            ambient: ambient.into(),
            bundle: bundle.into(),
            config: None,
            skipped: Some(reason.into()),
            expected: NilExpected::default(),
        }
    }

    /// Differences between a report and the expected values.
    pub fn mismatches(&self, r: &LocusReport) -> Vec<String> {
        let mut out = Vec::new();
        let mut cmp = |what: &str, got: Option<&Rat>, want: i64| {
            if got != Some(&Rat::int(want)) {
                out.push(format!("{what}: expected {want}, got {}", got.map_or("none".into(), |v| v.to_string())));
            }
        };
        if let Some(c) = self.expected.chi_o {
            cmp("χ(O)", Some(&r.chi_o), c);
        }
        if let Some(d) = self.expected.degree {
            cmp("(-K)^dim", r.anticanonical_degree.as_ref(), d);
        }
        if let Some([deg, o1, o2, h0]) = self.expected.fano4 {
            cmp("(-K)^4", r.anticanonical_degree.as_ref(), deg);
            cmp("χ(Ω¹)", r.chi_omega.get(1), o1);
            cmp("χ(Ω²)", r.chi_omega.get(2), o2);
            cmp("h0(-K)", r.h0_anticanonical.as_ref(), h0);
        }
        out
    }
}

/// `E` parsed as a bundle expression on `x`, with `L = O(1)`.
pub fn config(
    label: &str,
    x: &Variety,
    bundle: &str,
    orbit: OrbitChoice,
) -> Result<NilpotentLocusConfig, NilpotentError> {
    let e = sheaf(x, bundle);
    let l = x.line(&[1])?;
    NilpotentLocusConfig::new(label, x.clone(), e, l, orbit)
}

fn sheaf(x: &Variety, text: &str) -> SheafClass {
    parse_bundle(text).expect("catalog expressions parse").to_sheaf(x).expect("catalog expressions evaluate")
}

fn pn(n: u32) -> Variety {
    projective_space(n).expect("projective space")
}

/// Complete intersection of hypersurfaces of the given degrees.
fn ci(x: &Variety, degrees: &[i64], name: &str) -> Variety {
    let mut v = SheafClass::zero(&x.ring);
    for &d in degrees {
        v = v.add(&x.line(&[d]).expect("hyperplane class"));
    }
    let mut z = zero_locus(x, &v).expect("cut fits");
    z.name = name.into();
    z
}

pub fn p2xp2() -> Variety {
    let mut x = product(&pn(2), &pn(2)).expect("product");
    x.name = "P2xP2".into();
    x
}

fn almost_fano(deg: i64) -> NilExpected {
    NilExpected { chi_o: Some(1), degree: Some(deg), fano4: None }
}

const WEIGHTED: &str = "weighted projective ambient";
const NOT_TYPE_A: &str = "non-type-A orbit: needs an isotropic flag bundle";

/// Almost Fano threefolds from the full cones of `sl_2`, `sl_3` and the
/// subregular orbit of `sp_4`.
pub fn table5() -> Vec<NilpotentRow> {
    let mut rows = Vec::new();
    let x = p2xp2();
    for e in ["2*O", "O + O(1,1)", "O(1,0) + O(0,1)"] {
        rows.push(NilpotentRow::new(1, "P2xP2", &x, e, almost_fano(12)));
    }
    let x = ci(&grassmannian(2, 5).unwrap(), &[1, 1], "Gr(2,5)_1,1");
    for e in ["2*O", "O + O(1)", "dual(U)"] {
        rows.push(NilpotentRow::new(1, "Gr(2,5)_1,1", &x, e, almost_fano(10)));
    }
    let x = ci(&pn(6), &[2, 2], "P6_2,2");
    for e in ["2*O", "O + O(1)"] {
        rows.push(NilpotentRow::new(1, "P6_2,2", &x, e, almost_fano(8)));
    }
    let x = ci(&pn(5), &[3], "P5_3");
    for e in ["2*O", "O + O(1)"] {
        rows.push(NilpotentRow::new(1, "P5_3", &x, e, almost_fano(6)));
    }
    for e in ["2*O", "O + O(1)"] {
        rows.push(NilpotentRow::skip(1, "P(2,1,1,1,1,1)_4", e, WEIGHTED));
        rows.push(NilpotentRow::skip(1, "P(3,2,1,1,1,1)_6", e, WEIGHTED));
    }
    for e in ["4*O", "2*O + 2*O(1)"] {
        rows.push(NilpotentRow::skip(5, "P7", e, NOT_TYPE_A));
    }
    let x = pn(5);
    for e in ["3*O", "2*O + O(1)"] {
        rows.push(NilpotentRow::new(6, "P5", &x, e, almost_fano(6)));
    }
    rows
}

/// The orbit-(4) loci on `P^7`: `Z(s̃)` is a double cover of the orbit-(5)
/// locus, so its degree is twice 10, resp. 8.
pub fn symplectic_rows() -> Vec<NilpotentRow> {
    let x = pn(7);
    vec![
        NilpotentRow::new(4, "P7", &x, "4*O", NilExpected { chi_o: None, degree: Some(20), fano4: None }),
        NilpotentRow::new(4, "P7", &x, "2*O + 2*O(1)", NilExpected { chi_o: Some(2), degree: Some(16), fano4: None }),
    ]
}

/// Fano threefolds from the orbits (2) and (3).
pub fn fano3_nilpotent() -> Vec<NilpotentRow> {
    let q7 = quadric(7).expect("odd quadric");
    let p12 = pn(12);
    let expected = |deg| NilExpected { chi_o: Some(1), degree: Some(deg), fano4: None };
    vec![
        // divisor of bidegree (2,2) in P2xP2
        NilpotentRow::new(2, "Q7", &q7, "3*O", expected(12)),
        // three quadrics in P6
        NilpotentRow::new(2, "Q7", &q7, "O(-1) + 2*O", expected(8)),
        // blow-up of P3 along a curve of degree 6 and genus 3
        NilpotentRow::new(3, "P12", &p12, "4*O", expected(20)),
        NilpotentRow::new(3, "P12", &p12, "O(-1) + 3*O", expected(8)),
    ]
}

/// Fano fourfolds from the orbits (3) and (7).
pub fn table6_nilpotent() -> Vec<NilpotentRow> {
    let fano4 = |v| NilExpected { chi_o: Some(1), degree: None, fano4: Some(v) };
    vec![
        NilpotentRow::new(3, "Q13", &quadric(13).expect("odd quadric"), "4*O", fano4([40, -18, 114, 15])),
        NilpotentRow::new(7, "P20", &pn(20), "5*O", fano4([70, -6, 46, 21])),
    ]
}

/// Fourfolds with trivial canonical class on `Gr(2,5)` (orbit 6) and
/// `Gr(2,6)` (orbit 2).
pub fn fourfold_catalog() -> Vec<NilpotentRow> {
    let cy = NilExpected { chi_o: Some(2), degree: None, fano4: None };
    let mut rows = Vec::new();
    let g25 = grassmannian(2, 5).unwrap();
    for e in ["3*O", "2*O + O(-1)", "U + O", "U + O(-1)", "Q"] {
        rows.push(NilpotentRow::new(6, "Gr(2,5)", &g25, e, cy.clone()));
    }
    let g26 = grassmannian(2, 6).unwrap();
    for e in ["3*O", "2*O + O(-1)", "U + O", "U + O(-1)"] {
        rows.push(NilpotentRow::new(2, "Gr(2,6)", &g26, e, cy.clone()));
    }
    rows
}
