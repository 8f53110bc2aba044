//! Concrete configurations: threefolds, fourfolds in Grassmannians and in
//! Grassmann bundles, and Fano fourfolds.

use serde::Serialize;

use crate::chow::{grassmann_bundle, grassmannian, product, projective_space, zero_locus, Class, Variety};
use crate::rational::Rat;
use crate::report::Bounds;
use crate::sheaves::SheafClass;

use super::{hyperplane_coordinates, FormsError, FormsLocus};

/// Expected values attached to a row.
#[derive(Debug, Clone, Default, Serialize)]
pub struct Expected {
    pub chi_o: i64,
    /// `(h^{1,1}, h^{2,1})`, possibly as ranges.
    pub hodge: Option<(Bounds, Bounds)>,
    /// `((−K)^4, χ(Ω¹), χ(Ω²), h⁰(−K))`.
    pub fano: Option<[i64; 4]>,
}

#[derive(Debug, Clone)]
pub struct FormsRow {
    pub label: String,
    pub ambient: String,
    pub bundle: String,
    pub config: Option<FormsLocus>,
    pub skipped: Option<String>,
    pub expected: Expected,
}

impl FormsRow {
    fn new(
        label: &str,
        ambient: &str,
        bundle: &str,
        cfg: Result<FormsLocus, FormsError>,
        expected: Expected,
    ) -> FormsRow {
        FormsRow {
            label: label.into(),
            ambient: ambient.into(),
            bundle: bundle.into(),
            config: Some(cfg.unwrap_or_else(|e| panic!("row {label}: {e}"))),
            skipped: None,
            expected,
        }
    }

    fn skip(label: &str, ambient: &str, bundle: &str, reason: &str) -> FormsRow {
        FormsRow {
            label: label.into(),
            ambient: ambient.into(),
            bundle: bundle.into(),
            config: None,
            skipped: Some(reason.into()),
            expected: Expected::default(),
        }
    }
}

fn cy(chi: i64) -> Expected {
    Expected { chi_o: chi, ..Default::default() }
}

fn cy3(h11: Bounds, h21: Bounds) -> Expected {
    Expected { chi_o: 0, hodge: Some((h11, h21)), fano: None }
}

fn fano4(v: [i64; 4]) -> Expected {
    Expected { chi_o: 1, hodge: None, fano: Some(v) }
}

fn cut(x: &Variety, v: &SheafClass) -> Variety {
    zero_locus(x, v).expect("cut fits")
}

fn line(x: &Variety, a: &[i64]) -> SheafClass {
    x.line(a).expect("hyperplane class")
}

fn b(x: &Variety, name: &str) -> SheafClass {
    x.bundle(name).expect("tautological bundle")
}

fn gr(k: u32, n: u32) -> Variety {
    grassmannian(k, n).unwrap()
}

fn pn(n: u32) -> Variety {
    projective_space(n).unwrap()
}

fn locus(label: &str, x: &Variety, e: SheafClass) -> Result<FormsLocus, FormsError> {
    FormsLocus::new(label, x.clone(), e, None)
}

/// Threefolds with trivial canonical class.
pub fn table1() -> Vec<FormsRow> {
    let g27 = gr(2, 7);
    let g36 = gr(3, 6);
    let p4p4 = product(&pn(4), &pn(4)).unwrap();
    let h = FormsLocus::homogeneous;
    vec![
        FormsRow::new(
            "t.1",
            "Gr(2,7) ∩ 2O(1)",
            "U* + 4O",
            h("t.1", &g27, &["2*O(1)"], "dual(U) + 4*O"),
            cy3(Bounds::exact(2), Bounds::exact(49)),
        ),
        FormsRow::new(
            "t.2",
            "Gr(2,7) ∩ 2O(1)",
            "Q + O",
            h("t.2", &g27, &["2*O(1)"], "Q + O"),
            cy3(Bounds { min: 3, max: 4 }, Bounds { min: 36, max: 37 }),
        ),
        FormsRow::new(
            "t.3",
            "Gr(3,6) ∩ O(1)",
            "U* + 3O",
            h("t.3", &g36, &["O(1)"], "dual(U) + 3*O"),
            cy3(Bounds::exact(2), Bounds::exact(38)),
        ),
        FormsRow::new(
            "t.4",
            "P4 x P4",
            "p1*O(1) + p2*O(1) + 4O",
            h("t.4", &p4p4, &[], "O(1,0) + O(0,1) + 4*O"),
            cy3(Bounds::exact(3), Bounds::exact(48)),
        ),
        FormsRow::new(
            "t.5",
            "P4 x P4",
            "p1*Q + p2*O(1) + O",
            h("t.5", &p4p4, &[], "Q1 + O(0,1) + O"),
            cy3(Bounds::exact(4), Bounds::exact(32)),
        ),
    ]
}

/// Fourfolds with trivial canonical class in classical Grassmannians.
pub fn table2() -> Vec<FormsRow> {
    let p9 = pn(9);
    let g27 = gr(2, 7);
    let x2 = cut(&g27, &line(&g27, &[2]));
    let g28 = gr(2, 8);
    let x4 = cut(&g28, &line(&g28, &[1]).scale(3));
    let x6 = cut(&g28, &b(&g28, "U").dual().sym(2));
    let g37 = gr(3, 7);
    let x8 = cut(&g37, &b(&g37, "U").dual().wedge(2));
    let u_star_plus = |x: &Variety, k: i64| b(x, "U").dual().add(&x.trivial(k));
    vec![
        FormsRow::new(
            "f.1",
            "P9",
            "2O(1) + 4O",
            locus("f.1", &p9, line(&p9, &[1]).scale(2).add(&p9.trivial(4))),
            cy(2),
        ),
        FormsRow::new("f.2", "Gr(2,7) ∩ O(2)", "U* + 4O", locus("f.2", &x2, u_star_plus(&x2, 4)), cy(2)),
        FormsRow::new("f.3", "Gr(2,7) ∩ O(2)", "Q + O", locus("f.3", &x2, b(&x2, "Q").add(&x2.trivial(1))), cy(2)),
        FormsRow::new("f.4", "Gr(2,8) ∩ 3O(1)", "U* + 4O", locus("f.4", &x4, u_star_plus(&x4, 4)), cy(2)),
        FormsRow::new("f.5", "Gr(2,8) ∩ 3O(1)", "Q", locus("f.5", &x4, b(&x4, "Q")), cy(2)),
        FormsRow::new("f.6", "Gr(2,8) ∩ S²U*", "U* + 4O", locus("f.6", &x6, u_star_plus(&x6, 4)), cy(2)),
        FormsRow::new("f.7", "Gr(2,8) ∩ S²U*", "Q", locus("f.7", &x6, b(&x6, "Q")), cy(2)),
        FormsRow::new("f.8", "Gr(3,7) ∩ ∧²U*", "U* + 3O", locus("f.8", &x8, u_star_plus(&x8, 3)), cy(2)),
        FormsRow::new("f.9", "Gr(3,7) ∩ ∧²U*", "Q + 2O", locus("f.9", &x8, b(&x8, "Q").add(&x8.trivial(2))), cy(2)),
        FormsRow::skip("f.10", "OGr(2,10) ∩ spinor twist", "U* + 4O", "orthogonal Grassmannian with a spin bundle"),
        FormsRow::skip("f.11", "OGr(2,12) ∩ spinor twist", "U* + 4O", "orthogonal Grassmannian with a spin bundle"),
    ]
}

/// How `K_Z ⊗ det(F*)^k` fails or succeeds to be trivial.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub enum GrassmannCondition {
    /// `K_Z ⊗ det(F*)^k = O`; `E = U* ⊕ (6−k)O` works.
    Trivial,
    /// `K_Z ⊗ det(F*)^k = L^5` with `c_1(L)` given in hyperplane coordinates.
    FifthPower(Vec<i64>),
}

#[derive(Debug, Clone, Serialize)]
pub struct GrassmannBundleRow {
    pub label: String,
    pub base: String,
    pub f: String,
    pub k: u32,
    pub condition: GrassmannCondition,
    /// `c_1(K_Z) + k c_1(F*)`.
    pub twist_class: String,
    pub dim: u32,
    #[serde(skip)]
    pub config: FormsLocus,
}

/// Checks that `Gr(k, F)` over `Z` carries a rank-6 bundle with the right
/// determinant. `F` must have rank 5.
pub fn grassmann_admissible(z: &Variety, f: &SheafClass, k: u32) -> Result<(GrassmannCondition, Class), FormsError> {
    let f = f.lift(&z.ring)?;
    if f.rank() != Rat::int(5) {
        return Err(FormsError::Unsupported(format!("F must have rank 5, got {}", f.rank())));
    }
    if !(1..=4).contains(&k) {
        return Err(FormsError::Unsupported(format!("k = {k} outside 1..4")));
    }
    let c = z.canonical().c(1).add(&f.dual().c(1).scale_int(k as i64));
    if c.is_zero() {
        return Ok((GrassmannCondition::Trivial, c));
    }
    let coords = hyperplane_coordinates(z, &c).ok_or_else(|| {
        FormsError::Unsupported(format!("K_Z ⊗ det(F*)^{k} = {c} is not a combination of hyperplanes"))
    })?;
    let mut fifth = Vec::new();
    for a in coords {
        let q = &a * &Rat::new(1, 5);
        match q.to_i64() {
            Some(v) if q.is_integer() => fifth.push(v),
            _ => {
                return Err(FormsError::Unsupported(format!("K_Z ⊗ det(F*)^{k} = {c} is not divisible by 5")));
            }
        }
    }
    Ok((GrassmannCondition::FifthPower(fifth), c))
}

/// Builds `X = Gr(k, F)` over `Z` and `E`: `U* ⊕ (6−k)O` in the trivial case,
/// `U* ⊕ π*L* ⊕ (5−k)O` otherwise, unless `e` overrides it.
#[allow(clippy::too_many_arguments)]
fn grassmann_row(
    label: &str,
    base_name: &str,
    z: &Variety,
    f_name: &str,
    f: &SheafClass,
    k: u32,
    e: Option<&dyn Fn(&Variety, &SheafClass) -> SheafClass>,
) -> Result<GrassmannBundleRow, FormsError> {
    let (condition, c) = grassmann_admissible(z, f, k)?;
    let x = grassmann_bundle(z, f, k)?;
    let u_star = x.bundle("U_rel")?.dual();
    let l = match &condition {
        GrassmannCondition::Trivial => None,
        GrassmannCondition::FifthPower(a) => Some(line(z, a).lift(&x.ring)?),
    };
    let e = match (e, &l) {
        (Some(build), Some(l)) => build(&x, l),
        (Some(build), None) => build(&x, &SheafClass::trivial(&x.ring, 1)),
        (None, None) => u_star.add(&x.trivial(6 - k as i64)),
        (None, Some(l)) => u_star.add(&l.dual()).add(&x.trivial(5 - k as i64)),
    };
    let mut x = x;
    x.name = format!("Gr({k},{f_name}) over {base_name}");
    let dim = x.dim;
    let config = FormsLocus::new(label, x, e, None)?;
    Ok(GrassmannBundleRow {
        label: label.into(),
        base: base_name.into(),
        f: f_name.into(),
        k,
        condition,
        twist_class: c.to_string(),
        dim,
        config,
    })
}

/// Fourfolds inside Grassmann bundles `Gr(k, F) → Z` with `E = U* ⊕ (6−k)O`.
pub fn grassmann_bundle_catalog() -> Vec<GrassmannBundleRow> {
    let mut out = Vec::new();
    let mut push = |label: &str, base: &str, z: &Variety, f_name: &str, f: SheafClass, k: u32| {
        out.push(grassmann_row(label, base, z, f_name, &f, k, None).unwrap_or_else(|e| panic!("row {label}: {e}")));
    };

    let g25 = gr(2, 5);
    let z = cut(&g25, &b(&g25, "U").dual().sym(2));
    push("f.12", "Gr(2,5) ∩ S²U*", &z, "U + 3O", b(&z, "U").add(&z.trivial(3)), 2);

    let p3 = pn(3);
    push("f.13", "P3", &p3, "∧²Q* + 2O", b(&p3, "Q").dual().wedge(2).add(&p3.trivial(2)), 2);
    push("f.14", "P3", &p3, "2O(-1) + 3O", line(&p3, &[-1]).scale(2).add(&p3.trivial(3)), 2);
    push("f.15", "P3", &p3, "O(-2) + 4O", line(&p3, &[-2]).add(&p3.trivial(4)), 2);

    let p4 = pn(4);
    let z = cut(&p4, &line(&p4, &[3]));
    push("f.16", "P4 ∩ O(3)", &z, "Q* + O", b(&z, "Q").dual().add(&z.trivial(1)), 2);
    push("f.17", "P4 ∩ O(3)", &z, "O(-1) + 4O", line(&z, &[-1]).add(&z.trivial(4)), 2);

    let p2p2 = product(&pn(2), &pn(2)).unwrap();
    let z = cut(&p2p2, &line(&p2p2, &[1, 1]));
    let (u1, u2, q1, q2) = (b(&z, "U1"), b(&z, "U2"), b(&z, "Q1"), b(&z, "Q2"));
    push("f.20", "P2 x P2 ∩ O(1,1)", &z, "Q1* + Q2* + O", q1.dual().add(&q2.dual()).add(&z.trivial(1)), 2);
    push("f.21", "P2 x P2 ∩ O(1,1)", &z, "Q1* + U2 + 2O", q1.dual().add(&u2).add(&z.trivial(2)), 2);
    push("f.22", "P2 x P2 ∩ O(1,1)", &z, "U1 + U2 + 3O", u1.add(&u2).add(&z.trivial(3)), 2);
    push("f.23", "P2 x P2 ∩ O(1,1)", &z, "U1 ⊗ U2 + 4O", u1.tensor(&u2).add(&z.trivial(4)), 2);

    let g24 = gr(2, 4);
    let z = cut(&g24, &line(&g24, &[2]));
    push("f.24", "Gr(2,4) ∩ O(2)", &z, "U + 3O", b(&z, "U").add(&z.trivial(3)), 2);
    push("f.25", "Gr(2,4) ∩ O(2)", &z, "O(-1) + 4O", line(&z, &[-1]).add(&z.trivial(4)), 2);

    let z = cut(&g25, &line(&g25, &[1]).scale(3));
    push("f.26", "Gr(2,5) ∩ 3O(1)", &z, "Q* + 2O", b(&z, "Q").dual().add(&z.trivial(2)), 2);
    push("f.27", "Gr(2,5) ∩ 3O(1)", &z, "U + 3O", b(&z, "U").add(&z.trivial(3)), 2);
    push("f.28", "Gr(2,5) ∩ 3O(1)", &z, "O(-1) + 4O", line(&z, &[-1]).add(&z.trivial(4)), 2);

    let p1 = pn(1);
    let z = product(&product(&p1, &p1).unwrap(), &p1).unwrap();
    let (u1, u2, u3) = (b(&z, "U1"), b(&z, "U2"), b(&z, "U3"));
    push("f.29", "P1 x P1 x P1", &z, "U1 + U2 + U3 + 2O", u1.add(&u2).add(&u3).add(&z.trivial(2)), 2);
    push("f.30", "P1 x P1 x P1", &z, "U1 ⊗ U2 + U3 + 3O", u1.tensor(&u2).add(&u3).add(&z.trivial(3)), 2);
    push("f.31", "P1 x P1 x P1", &z, "U1 ⊗ U2 ⊗ U3 + 4O", u1.tensor(&u2).tensor(&u3).add(&z.trivial(4)), 2);

    let z = cut(&g24, &line(&g24, &[1]));
    push("f.32", "Gr(2,4) ∩ O(1)", &z, "U + 3O", b(&z, "U").add(&z.trivial(3)), 3);
    push("f.33", "Gr(2,4) ∩ O(1)", &z, "O(-1) + 4O", line(&z, &[-1]).add(&z.trivial(4)), 3);

    let p6 = pn(6);
    let z = cut(&p6, &line(&p6, &[3]));
    push("f.34", "P6 ∩ O(3)", &z, "O(-1) + 4O", line(&z, &[-1]).add(&z.trivial(4)), 4);
    let p7 = pn(7);
    let z = cut(&p7, &line(&p7, &[2]).scale(2));
    push("f.35", "P7 ∩ 2O(2)", &z, "O(-1) + 4O", line(&z, &[-1]).add(&z.trivial(4)), 4);

    let z = cut(&g25, &line(&g25, &[1]));
    push("f.36", "Gr(2,5) ∩ O(1)", &z, "Q* + 2O", b(&z, "Q").dual().add(&z.trivial(2)), 4);
    push("f.37", "Gr(2,5) ∩ O(1)", &z, "U + 3O", b(&z, "U").add(&z.trivial(3)), 4);
    push("f.38", "Gr(2,5) ∩ O(1)", &z, "O(-1) + 4O", line(&z, &[-1]).add(&z.trivial(4)), 4);
    out
}

/// Fourfolds in Grassmann bundles, in row order, with the two blow-up rows
/// marked as skipped.
pub fn table3() -> Vec<FormsRow> {
    let mut rows: Vec<FormsRow> = grassmann_bundle_catalog()
        .into_iter()
        .map(|r| FormsRow {
            label: r.label.clone(),
            ambient: r.config.x.name.clone(),
            bundle: "U_rel* + trivial".into(),
            config: Some(r.config),
            skipped: None,
            expected: cy(2),
        })
        .collect();
    let pos = rows.iter().position(|r| r.label == "f.20").unwrap_or(rows.len());
    rows.insert(pos, FormsRow::skip("f.19", "Gr(2,F) over Bl_pt P3", "F = Exc(-2) + 4O", "blow-up of P3 at a point"));
    rows.insert(
        pos,
        FormsRow::skip("f.18", "Gr(2,F) over Bl_pt P3", "F = Exc(-1) + O(-1) + 3O", "blow-up of P3 at a point"),
    );
    rows
}

/// Further fourfolds: Grassmann bundles twisted by a fifth root, the flag
/// variety `F(1,5,6)` and a twisted locus in `P9`.
pub fn sporadic() -> Vec<FormsRow> {
    let mut rows = Vec::new();
    let p5 = pn(5);
    for (label, fname, f) in
        [("s.1", "O(-1) + 4O", line(&p5, &[-1]).add(&p5.trivial(4))), ("s.2", "Q*", b(&p5, "Q").dual())]
    {
        let r = grassmann_row(label, "P5", &p5, fname, &f, 1, None).unwrap();
        rows.push(FormsRow {
            label: label.into(),
            ambient: r.config.x.name.clone(),
            bundle: "U_rel* + π*L* + 4O".into(),
            config: Some(r.config),
            skipped: None,
            expected: cy(2),
        });
    }
    let p6 = pn(6);
    let q5 = cut(&p6, &line(&p6, &[2]));
    let five = q5.trivial(5);
    let alt = |x: &Variety, l: &SheafClass| b(x, "Q_rel").add(&l.dual()).add(&x.trivial(1));
    for (label, bundle, e) in [
        ("s.3", "U_rel* + π*L* + 4O", None),
        ("s.4", "Q_rel + π*L* + O", Some(&alt as &dyn Fn(&Variety, &SheafClass) -> SheafClass)),
    ] {
        let r = grassmann_row(label, "P6 ∩ O(2)", &q5, "5O", &five, 1, e).unwrap();
        rows.push(FormsRow {
            label: label.into(),
            ambient: r.config.x.name.clone(),
            bundle: bundle.into(),
            config: Some(r.config),
            skipped: None,
            expected: cy(2),
        });
    }

    let p5p5 = product(&p5, &p5).unwrap();
    let f156 = cut(&p5p5, &line(&p5p5, &[1, 1]));
    let (u1, u2, q1) = (b(&f156, "U1"), b(&f156, "U2"), b(&f156, "Q1"));
    rows.push(FormsRow::new(
        "s.5",
        "F(1,5,6) = P5 x P5 ∩ O(1,1)",
        "U1* + U2* + 4O",
        locus("s.5", &f156, u1.dual().add(&u2.dual()).add(&f156.trivial(4))),
        cy(2),
    ));
    rows.push(FormsRow::new(
        "s.6",
        "F(1,5,6) = P5 x P5 ∩ O(1,1)",
        "Q1 + U2*",
        locus("s.6", &f156, q1.add(&u2.dual())),
        cy(2),
    ));

    let p9 = pn(9);
    rows.push(FormsRow::new(
        "s.7",
        "P9",
        "4O(1) + 2O, L = O(-1)",
        FormsLocus::new("s.7", p9.clone(), line(&p9, &[1]).scale(4).add(&p9.trivial(2)), Some(line(&p9, &[-1]))),
        cy(2),
    ));
    rows
}

/// Fano fourfolds from partially decomposable forms.
pub fn table6_forms() -> Vec<FormsRow> {
    let g36 = gr(3, 6);
    let g27 = gr(2, 7);
    let ig = cut(&g27, &line(&g27, &[1]));
    vec![
        FormsRow::new(
            "fano.1",
            "Gr(3,6)",
            "U* + 3O",
            locus("fano.1", &g36, b(&g36, "U").dual().add(&g36.trivial(3))),
            fano4([63, -2, 21, 19]),
        ),
        FormsRow::new(
            "fano.2",
            "IGr(2,7) = Gr(2,7) ∩ O(1)",
            "Q + O",
            locus("fano.2", &ig, b(&ig, "Q").add(&ig.trivial(1))),
            fano4([69, -4, 26, 20]),
        ),
        FormsRow::new(
            "fano.3",
            "IGr(2,7) = Gr(2,7) ∩ O(1)",
            "U* + 4O",
            locus("fano.3", &ig, b(&ig, "U").dual().add(&ig.trivial(4))),
            fano4([47, -7, 54, 16]),
        ),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forms::{check_conditions, ConditionKind};

    #[test]
    fn rank_four_f_is_rejected() {
        let p3 = pn(3);
        let f = p3.trivial(4);
        assert!(grassmann_admissible(&p3, &f, 2).is_err());
    }

    #[test]
    fn quintic_twist_on_p5() {
        let p5 = pn(5);
        let f = line(&p5, &[-1]).add(&p5.trivial(4));
        let (c, _) = grassmann_admissible(&p5, &f, 1).unwrap();
        assert_eq!(c, GrassmannCondition::FifthPower(vec![-1]));
    }

    #[test]
    fn catalog_rows_are_calabi_yau() {
        for r in grassmann_bundle_catalog() {
            assert_eq!(r.condition, GrassmannCondition::Trivial, "{}", r.label);
            assert_eq!(r.dim, 9, "{}", r.label);
            assert_eq!(check_conditions(&r.config).kind, ConditionKind::CalabiYau, "{}", r.label);
        }
        assert_eq!(grassmann_bundle_catalog().len(), 25);
    }

    #[test]
    fn table1_rows_are_calabi_yau() {
        for r in table1() {
            let cfg = r.config.unwrap();
            assert_eq!(cfg.x.dim, 8);
            assert_eq!(check_conditions(&cfg).kind, ConditionKind::CalabiYau, "{}", r.label);
        }
    }
}
