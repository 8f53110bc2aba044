//! Result records shared by the forms and nilpotent pipelines.

use serde::Serialize;

use crate::rational::Rat;

/// Interval of possible values; exact when `min == max`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Bounds {
    pub min: i64,
    pub max: i64,
}

impl Bounds {
    pub fn exact(v: i64) -> Bounds {
        Bounds { min: v, max: v }
    }

    pub fn is_exact(&self) -> bool {
        self.min == self.max
    }

    pub fn contains(&self, v: i64) -> bool {
        self.min <= v && v <= self.max
    }
}

impl std::fmt::Display for Bounds {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_exact() {
            write!(f, "{}", self.min)
        } else {
            write!(f, "{}..{}", self.min, self.max)
        }
    }
}

/// Hodge numbers of a threefold with trivial canonical class, as far as the
/// Koszul/Bott bookkeeping determines them.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HodgeNumbers {
    pub h10: Bounds,
    pub h20: Bounds,
    pub h11: Bounds,
    pub h21: Bounds,
    /// Pairs `(h11, h21)` compatible with the bounds and with `h11 − h21 = χ(Ω¹)`.
    pub candidates: Vec<(i64, i64)>,
}

#[derive(Debug, Clone, Serialize)]
pub struct LocusReport {
    pub label: String,
    pub ambient: String,
    pub dim: u32,
    /// Condition verdict, e.g. `cy`, `fano`, `twisted`, `violated`.
    pub condition: String,
    /// `c_1(K)` of the resolution as a class pulled back from the base.
    pub canonical: String,
    pub nonempty: bool,
    /// Fundamental class of the locus in the base, in Chern classes of the base ring.
    pub fundamental_class: String,
    pub chi_o: Rat,
    /// `χ(Ω^p)` for `p = 0..=dim`.
    pub chi_omega: Vec<Rat>,
    pub anticanonical_degree: Option<Rat>,
    /// `χ(−K)`; equals `h⁰(−K)` under Kodaira vanishing.
    pub h0_anticanonical: Option<Rat>,
    pub hodge: Option<HodgeNumbers>,
    pub notes: Vec<String>,
}
