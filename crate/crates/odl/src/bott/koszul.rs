//! Cohomology on a zero locus `X = Z(V) ⊂ X'` of a homogeneous bundle on a
//! flag variety, through the Koszul resolution `∧^k V^* → ... → O_{X'}`.

use crate::chow::FlagFactor;
use crate::symfun::{lambda_powers, GlCharacter};

use super::table::{CohomologyTable, Term};
use super::{bott_cohomology, decompose, flag_dim, flag_len, module_dim, BottError, BundleExpr};

#[derive(Debug, Clone)]
pub struct HomogeneousAmbient {
    pub flag: Vec<FlagFactor>,
    pub cuts: Vec<BundleExpr>,
    /// `∧^k V^*` for `k = 0..=rank V`.
    koszul: Vec<GlCharacter>,
}

impl HomogeneousAmbient {
    pub fn new(flag: Vec<FlagFactor>, cuts: Vec<BundleExpr>) -> Result<HomogeneousAmbient, BottError> {
        let n = flag_len(&flag);
        let mut v = GlCharacter::zero(n);
        for c in &cuts {
            v = v.add(&c.to_character(&flag)?);
        }
        v.check_nonnegative()?;
        let r = v.dim() as usize;
        let koszul = lambda_powers(&v.dual(), r, true);
        Ok(HomogeneousAmbient { flag, cuts, koszul })
    }

    pub fn dim(&self) -> i64 {
        flag_dim(&self.flag) as i64 - (self.koszul.len() as i64 - 1)
    }

    pub fn nvars(&self) -> usize {
        flag_len(&self.flag)
    }

    /// `V^*` restricted to `X`.
    pub fn conormal(&self) -> GlCharacter {
        self.koszul.get(1).cloned().unwrap_or_else(|| GlCharacter::zero(self.nvars()))
    }

    /// First-page terms for `H^•(X, F|_X)`: `H^b(X', ∧^k V^* ⊗ F)` lands in
    /// degree `b − k + shift`, with filtration key `key` followed by `−k`.
    pub fn terms(&self, chi: &GlCharacter, shift: i64, source: &str, key: &[i64]) -> Result<Vec<Term>, BottError> {
        let mut out = Vec::new();
        for (k, wk) in self.koszul.iter().enumerate() {
            let full = if k == 0 { chi.clone() } else { chi.mul(wk) };
            for (w, m) in decompose(&full, &self.flag)? {
                if let Some((b, l)) = bott_cohomology(&self.flag, &w)? {
                    let dim = m * module_dim(&self.flag, &l);
                    out.push(Term {
                        degree: b as i64 - k as i64 + shift,
                        weight: l,
                        mult: m,
                        dim,
                        source: if self.cuts.is_empty() { source.to_string() } else { format!("{source}; k={k}") },
                        key: key.iter().copied().chain(std::iter::once(-(k as i64))).collect(),
                    });
                }
            }
        }
        Ok(out)
    }
}

/// `H^•(X, F|_X)` for `X` cut out of the flag variety by `cuts`.
pub fn cohomology_on_ambient(amb: &HomogeneousAmbient, f: &BundleExpr) -> Result<CohomologyTable, BottError> {
    let chi = f.to_character(&amb.flag)?;
    let mut t = CohomologyTable::new(0, amb.dim());
    for term in amb.terms(&chi, 0, &f.to_string(), &[])? {
        t.push(term);
    }
    Ok(t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bott::{parse_bundle, parse_flag};

    #[test]
    fn fano_complete_intersection_has_only_h0() {
        let amb =
            HomogeneousAmbient::new(parse_flag("Gr(2,7)").unwrap(), vec![parse_bundle("2*O(1)").unwrap()]).unwrap();
        assert_eq!(amb.dim(), 8);
        let t = cohomology_on_ambient(&amb, &parse_bundle("O").unwrap()).unwrap();
        assert!(t.is_exact());
        let b = t.bounds();
        assert_eq!(b[0].min, 1);
        assert!(b[1..].iter().all(|x| x.max == 0));
    }

    #[test]
    fn quintic_threefold_structure_sheaf() {
        let amb = HomogeneousAmbient::new(parse_flag("P4").unwrap(), vec![parse_bundle("O(5)").unwrap()]).unwrap();
        let t = cohomology_on_ambient(&amb, &parse_bundle("O").unwrap()).unwrap();
        assert_eq!(t.candidates().into_iter().collect::<Vec<_>>(), vec![vec![1, 0, 0, 1]]);
    }
}
