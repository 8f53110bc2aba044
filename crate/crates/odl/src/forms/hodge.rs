//! Hodge numbers of threefold loci through Koszul complexes and Bott's theorem.
//!
//! `Z ⊂ P(E)` is the zero locus of `Q_W`, and `X ⊂ X'` the zero locus of
//! `V` in a flag variety. Cohomology of `O_Z` and `Ω¹_Z` is reduced to
//! `P(E)` by the Koszul complex of `Q_W`, to `X` by the direct images of
//! [`relative_pushforward`], and to `X'` by the Koszul complex of `V`, where
//! Bott's theorem applies. `Ω¹_Z` is assembled from the conormal sequences
//! `Q_W^* → Ω_{P(E)} → Ω_Z`, `θ^*Ω_X → Ω_{P(E)} → Ω_rel` and
//! `V^* → Ω_{X'} → Ω_X`.

use std::collections::HashMap;

use serde::Serialize;

use crate::bott::relative::FiberBundle;
use crate::bott::{cotangent_character, relative_pushforward, BottError, CohomologyTable, HomogeneousAmbient};
use crate::report::{Bounds, HodgeNumbers};
use crate::symfun::{lambda_powers, schur_of_character, GlCharacter, Partition};

use super::{FormsError, FormsLocus};

#[derive(Debug, Clone, Serialize)]
pub struct HodgeTables {
    pub structure_sheaf: CohomologyTable,
    pub cotangent: CohomologyTable,
}

impl From<BottError> for FormsError {
    fn from(e: BottError) -> Self {
        FormsError::Unsupported(e.to_string())
    }
}

struct SchurCache {
    e_dual: GlCharacter,
    det_dual: GlCharacter,
    memo: HashMap<Vec<i64>, GlCharacter>,
}

impl SchurCache {
    /// `S_λE^* = (det E^*)^{λ_6} ⊗ S_{λ − λ_6}E^*`.
    fn get(&mut self, lambda: &[i64]) -> GlCharacter {
        if let Some(c) = self.memo.get(lambda) {
            return c.clone();
        }
        let m = lambda[5];
        let reduced: Vec<i64> = lambda.iter().map(|x| x - m).collect();
        let p = Partition::from_signed(&reduced).expect("direct images are polynomial");
        let mut c = schur_of_character(&self.e_dual, &p);
        for _ in 0..m {
            c = c.mul(&self.det_dual);
        }
        self.memo.insert(lambda.to_vec(), c.clone());
        c
    }
}

fn label(i: usize, g: &str, q: usize, lambda: &[i64], w: &str) -> String {
    let l: Vec<String> = lambda.iter().map(|x| x.to_string()).collect();
    format!("∧^{i}Qw*{g}: R^{q} S({})E*{w}", l.join(","))
}

/// Filtration key, outermost first: the Koszul complex of `Q_W` (a
/// differential lowers `i`), the pieces `Q_W^* < Ω_rel < θ^*Ω_X` of `Ω¹_Z`,
/// the Leray sequence (lowers `q`), and `V^* < Ω_{X'}` inside `Ω_X`. The
/// Koszul index of `V` is appended by the ambient.
fn key(i: usize, part: i64, q: usize, inner: i64) -> Vec<i64> {
    vec![-(i as i64), part, -(q as i64), inner]
}

pub fn hodge_tables(cfg: &FormsLocus) -> Result<HodgeTables, FormsError> {
    let model = cfg.model.as_ref().ok_or_else(|| FormsError::Unsupported("no homogeneous model".into()))?;
    if cfg.twist.is_some() {
        return Err(FormsError::Unsupported("Hodge numbers of twisted loci".into()));
    }
    let amb: &HomogeneousAmbient = &model.ambient;
    let dz = amb.dim() - 5;
    if dz != 3 {
        return Err(FormsError::Unsupported(format!("Hodge pipeline needs a threefold, got dimension {dz}")));
    }
    let e = model.e.to_character(&amb.flag).map_err(BottError::from)?;
    if e.dim() != 6 {
        return Err(FormsError::Rank(crate::Rat::int(e.dim())));
    }
    let e_dual = e.dual();
    let det_dual = lambda_powers(&e_dual, 6, true).pop().unwrap();
    let mut schur = SchurCache { e_dual, det_dual, memo: HashMap::new() };
    let omega_xp = cotangent_character(&amb.flag);
    let conormal = amb.conormal();

    let mut o_z = CohomologyTable::new(0, dz);
    let mut om_z = CohomologyTable::new(0, dz);
    for i in 0..=10usize {
        for p in relative_pushforward(i, FiberBundle::Trivial) {
            let s = schur.get(&p.lambda).scale(p.mult);
            let shift = p.q as i64 - i as i64;
            for t in amb.terms(&s, shift, &label(i, "", p.q, &p.lambda, ""), &key(i, 0, p.q, 0))? {
                o_z.push(t);
            }
            // θ^*Ω_X, with Ω_X = [V^* → Ω_{X'}]
            for t in amb.terms(&s.mul(&omega_xp), shift, &label(i, "", p.q, &p.lambda, "⊗Ω_X'"), &key(i, 2, p.q, 1))?
            {
                om_z.push(t);
            }
            if !conormal.is_zero() {
                let src = label(i, "", p.q, &p.lambda, "⊗V*");
                for t in amb.terms(&s.mul(&conormal), shift - 1, &src, &key(i, 2, p.q, 0))? {
                    om_z.push(t);
                }
            }
        }
        for p in relative_pushforward(i, FiberBundle::OmegaRel) {
            let s = schur.get(&p.lambda).scale(p.mult);
            let src = label(i, "⊗Ω_rel", p.q, &p.lambda, "");
            for t in amb.terms(&s, p.q as i64 - i as i64, &src, &key(i, 1, p.q, 0))? {
                om_z.push(t);
            }
        }
        for p in relative_pushforward(i, FiberBundle::QwDual) {
            let s = schur.get(&p.lambda).scale(p.mult);
            let src = label(i, "⊗Qw*", p.q, &p.lambda, "");
            for t in amb.terms(&s, p.q as i64 - i as i64 - 1, &src, &key(i, 0, p.q, 0))? {
                om_z.push(t);
            }
        }
    }
    // h^0(Ω¹) = h^{0,1} and h^3(Ω¹) = h^{0,2} by Hodge symmetry and Serre duality
    let cand = o_z.candidates();
    if cand.len() == 1 {
        let h = cand.into_iter().next().unwrap();
        om_z.fix(0, h[1]);
        om_z.fix(3, h[2]);
    }
    Ok(HodgeTables { structure_sheaf: o_z, cotangent: om_z })
}

pub fn hodge_from_tables(t: &HodgeTables) -> HodgeNumbers {
    let bo = t.structure_sheaf.bounds();
    let cand = t.cotangent.candidates();
    let mut pairs: Vec<(i64, i64)> = cand.iter().map(|h| (h[1], h[2])).collect();
    pairs.sort();
    pairs.dedup();
    let span = |k: usize| -> Bounds {
        let vals = cand.iter().map(|h| h[k]);
        Bounds { min: vals.clone().min().unwrap_or(0), max: vals.max().unwrap_or(0) }
    };
    HodgeNumbers { h10: bo[1].clone(), h20: bo[2].clone(), h11: span(1), h21: span(2), candidates: pairs }
}

pub fn hodge_numbers(cfg: &FormsLocus) -> Result<HodgeNumbers, FormsError> {
    Ok(hodge_from_tables(&hodge_tables(cfg)?))
}
