//! Borel–Weil–Bott on products of type-A flag varieties `GL(n)/P`.
//!
//! A weight on a factor with blocks `(b_1 | ... | b_m)` is the highest weight
//! of `S_{α_1}G_1^* ⊗ ... ⊗ S_{α_m}G_m^*`, where `G_j` are the graded pieces
//! of the tautological flag. On `Gr(k,n)` the weight `(α|β)` is
//! `S_αU^* ⊗ S_βQ^*`, so `O(1) = (1^k|0^{n-k})`. Cohomology comes out as
//! `S_λV^*` for the trivial bundle `V = C^n`.

pub mod expr;
pub mod koszul;
pub mod relative;
pub mod table;

use num_traits::ToPrimitive;

use crate::chow::FlagFactor;
use crate::symfun::{decompose_blockwise, weyl_dim_weight, CharacterError, GlCharacter};

pub use expr::{parse_bundle, BundleEvalError, BundleExpr, BundleSyntaxError};
pub use koszul::{cohomology_on_ambient, HomogeneousAmbient};
pub use relative::{relative_pushforward, tables78_check, FiberBundle, PushforwardEntry};
pub use table::{CohomologyTable, Term};

pub type Weight = Vec<i64>;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum BottError {
    #[error("weight {weight:?} has length {got}, expected {expected}")]
    Length { weight: Weight, got: usize, expected: usize },
    #[error("weight {0:?} is not dominant in each block")]
    NotDominant(Weight),
    #[error("character of dimension {0} exceeds the decomposition bound {1}")]
    TooLarge(i64, i64),
    #[error("{0}")]
    Character(#[from] CharacterError),
    #[error("{0}")]
    Expr(#[from] BundleEvalError),
    #[error("cannot parse {0:?}")]
    Parse(String),
}

/// Characters beyond this dimension are refused by [`decompose`].
pub const DECOMPOSE_LIMIT: i64 = 2_000_000;

pub fn flag_len(flag: &[FlagFactor]) -> usize {
    flag.iter().map(|f| f.n).sum()
}

pub fn flag_blocks(flag: &[FlagFactor]) -> Vec<usize> {
    flag.iter().flat_map(|f| f.blocks.iter().copied()).collect()
}

pub fn flag_dim(flag: &[FlagFactor]) -> usize {
    flag.iter()
        .map(|f| {
            let sq: usize = f.blocks.iter().map(|b| b * b).sum();
            (f.n * f.n - sq) / 2
        })
        .sum()
}

pub fn is_dominant(flag: &[FlagFactor], w: &[i64]) -> bool {
    let mut start = 0;
    for b in flag_blocks(flag) {
        if w[start..start + b].windows(2).any(|p| p[0] < p[1]) {
            return false;
        }
        start += b;
    }
    true
}

fn check(flag: &[FlagFactor], w: &[i64]) -> Result<(), BottError> {
    let n = flag_len(flag);
    if w.len() != n {
        return Err(BottError::Length { weight: w.to_vec(), got: w.len(), expected: n });
    }
    if !is_dominant(flag, w) {
        return Err(BottError::NotDominant(w.to_vec()));
    }
    Ok(())
}

/// Bott's algorithm on one `GL(n)` weight: `None` when `w + ρ` has a
/// repeated entry, otherwise the number of inversions and the dominant
/// weight `sort(w + ρ) − ρ`.
pub fn bott_single(w: &[i64]) -> Option<(usize, Weight)> {
    let n = w.len();
    let shifted: Vec<i64> = w.iter().enumerate().map(|(i, &x)| x + (n - 1 - i) as i64).collect();
    let mut inv = 0;
    for i in 0..n {
        for j in i + 1..n {
            match shifted[i].cmp(&shifted[j]) {
                std::cmp::Ordering::Equal => return None,
                std::cmp::Ordering::Less => inv += 1,
                _ => {}
            }
        }
    }
    let mut sorted = shifted;
    sorted.sort_unstable_by(|a, b| b.cmp(a));
    Some((inv, sorted.iter().enumerate().map(|(i, &x)| x - (n - 1 - i) as i64).collect()))
}

/// Cohomology of the irreducible bundle with weight `w` on the product
/// `flag`: the single nonzero degree and the concatenated `GL(n_f)`
/// weights of the resulting representation `⊗_f S_{λ_f}V_f^*`.
pub fn bott_cohomology(flag: &[FlagFactor], w: &[i64]) -> Result<Option<(usize, Weight)>, BottError> {
    check(flag, w)?;
    let mut q = 0;
    let mut out = Vec::with_capacity(w.len());
    let mut start = 0;
    for f in flag {
        match bott_single(&w[start..start + f.n]) {
            None => return Ok(None),
            Some((d, l)) => {
                q += d;
                out.extend(l);
            }
        }
        start += f.n;
    }
    Ok(Some((q, out)))
}

/// `dim ⊗_f S_{λ_f}C^{n_f}`.
pub fn module_dim(flag: &[FlagFactor], lambda: &[i64]) -> i64 {
    let mut d = 1i64;
    let mut start = 0;
    for f in flag {
        let v = weyl_dim_weight(&lambda[start..start + f.n]).to_i64().expect("dimension fits in i64");
        d = d.checked_mul(v).expect("dimension fits in i64");
        start += f.n;
    }
    d
}

/// Rank of the irreducible bundle with weight `w`.
pub fn bundle_rank(flag: &[FlagFactor], w: &[i64]) -> i64 {
    let mut d = 1i64;
    let mut start = 0;
    for b in flag_blocks(flag) {
        d *= weyl_dim_weight(&w[start..start + b]).to_i64().expect("rank fits in i64");
        start += b;
    }
    d
}

/// Irreducible summands of a blockwise character, highest weight first.
pub fn decompose(chi: &GlCharacter, flag: &[FlagFactor]) -> Result<Vec<(Weight, i64)>, BottError> {
    let d = chi.dim();
    if d.abs() > DECOMPOSE_LIMIT {
        return Err(BottError::TooLarge(d, DECOMPOSE_LIMIT));
    }
    let parts = decompose_blockwise(chi, &flag_blocks(flag))?;
    Ok(parts.into_iter().rev().collect())
}

pub fn decompose_expr(e: &BundleExpr, flag: &[FlagFactor]) -> Result<Vec<(Weight, i64)>, BottError> {
    decompose(&e.to_character(flag)?, flag)
}

/// Cohomology of a (possibly reducible) character, degree by degree, as
/// lists of `(λ, multiplicity)`.
pub fn character_cohomology(
    chi: &GlCharacter,
    flag: &[FlagFactor],
) -> Result<std::collections::BTreeMap<usize, Vec<(Weight, i64)>>, BottError> {
    let mut out: std::collections::BTreeMap<usize, Vec<(Weight, i64)>> = Default::default();
    for (w, m) in decompose(chi, flag)? {
        if let Some((q, l)) = bott_cohomology(flag, &w)? {
            out.entry(q).or_default().push((l, m));
        }
    }
    Ok(out)
}

/// Weight of the canonical bundle: on a factor with blocks `b`, block `i`
/// carries `Σ_{j<i} b_j − Σ_{j>i} b_j`.
pub fn canonical_weight(flag: &[FlagFactor]) -> Weight {
    let mut out = Vec::new();
    for f in flag {
        for i in 0..f.blocks.len() {
            let before: usize = f.blocks[..i].iter().sum();
            let after: usize = f.blocks[i + 1..].iter().sum();
            out.extend(std::iter::repeat_n(before as i64 - after as i64, f.blocks[i]));
        }
    }
    out
}

/// Weight of `K ⊗ F^*` for `F` irreducible of weight `w`.
pub fn serre_dual_weight(flag: &[FlagFactor], w: &[i64]) -> Weight {
    let k = canonical_weight(flag);
    let mut out = Vec::with_capacity(w.len());
    let mut start = 0;
    for b in flag_blocks(flag) {
        for i in 0..b {
            out.push(-w[start + b - 1 - i]);
        }
        start += b;
    }
    out.iter().zip(&k).map(|(a, b)| a + b).collect()
}

/// Character of the cotangent bundle, `⊕_{i<j} G_i ⊗ G_j^*` on each factor.
pub fn cotangent_character(flag: &[FlagFactor]) -> GlCharacter {
    let n = flag_len(flag);
    let mut out = GlCharacter::zero(n);
    let mut off = 0;
    for f in flag {
        let mut starts = Vec::new();
        let mut s = off;
        for &b in &f.blocks {
            starts.push(s);
            s += b;
        }
        for i in 0..f.blocks.len() {
            for j in i + 1..f.blocks.len() {
                for a in starts[i]..starts[i] + f.blocks[i] {
                    for b in starts[j]..starts[j] + f.blocks[j] {
                        let mut w = vec![0; n];
                        w[a] = -1;
                        w[b] = 1;
                        out.add_term(w, 1);
                    }
                }
            }
        }
        off += f.n;
    }
    out
}

/// Parses `P5`, `Gr(2,7)`, `Fl(1,3;5)` (dimensions of the subspaces, then
/// `n`) and products joined by `x`.
pub fn parse_flag(text: &str) -> Result<Vec<FlagFactor>, BottError> {
    let err = || BottError::Parse(text.to_string());
    let mut out = Vec::new();
    for part in text.split(['x', '×']) {
        let p = part.trim();
        if let Some(n) = p.strip_prefix('P') {
            let n: usize = n.trim_start_matches('^').parse().map_err(|_| err())?;
            if n == 0 {
                return Err(err());
            }
            out.push(FlagFactor { n: n + 1, blocks: vec![1, n] });
        } else if let Some(args) = p.strip_prefix("Gr(").and_then(|s| s.strip_suffix(')')) {
            let v: Vec<usize> =
                args.split(',').map(|s| s.trim().parse()).collect::<Result<_, _>>().map_err(|_| err())?;
            if v.len() != 2 || v[0] == 0 || v[0] >= v[1] {
                return Err(err());
            }
            out.push(FlagFactor { n: v[1], blocks: vec![v[0], v[1] - v[0]] });
        } else if let Some(args) = p.strip_prefix("Fl(").and_then(|s| s.strip_suffix(')')) {
            let (dims, n) = args.split_once(';').ok_or_else(err)?;
            let n: usize = n.trim().parse().map_err(|_| err())?;
            let dims: Vec<usize> =
                dims.split(',').map(|s| s.trim().parse()).collect::<Result<_, _>>().map_err(|_| err())?;
            let mut blocks = Vec::new();
            let mut prev = 0;
            for &d in dims.iter().chain(std::iter::once(&n)) {
                if d <= prev {
                    return Err(err());
                }
                blocks.push(d - prev);
                prev = d;
            }
            out.push(FlagFactor { n, blocks });
        } else {
            return Err(err());
        }
    }
    Ok(out)
}

/// Parses a weight with blocks separated by `|` and factors by `;`, e.g.
/// `1,0|0,0,0` or `1|0,0;0|0,0`.
pub fn parse_weight(text: &str) -> Result<Weight, BottError> {
    text.split([',', '|', ';'])
        .map(|s| s.trim().parse::<i64>().map_err(|_| BottError::Parse(text.to_string())))
        .collect()
}

pub fn format_weight(flag: &[FlagFactor], w: &[i64]) -> String {
    let mut out = String::new();
    let mut start = 0;
    for (fi, f) in flag.iter().enumerate() {
        if fi > 0 {
            out.push(';');
        }
        for (bi, &b) in f.blocks.iter().enumerate() {
            if bi > 0 {
                out.push('|');
            }
            let s: Vec<String> = w[start..start + b].iter().map(|x| x.to_string()).collect();
            out.push_str(&s.join(","));
            start += b;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(n: usize) -> Vec<FlagFactor> {
        vec![FlagFactor { n: n + 1, blocks: vec![1, n] }]
    }

    #[test]
    fn projective_space_line_bundles() {
        let p5 = p(5);
        // O(-6): Serre dual of O
        let (q, l) = bott_cohomology(&p5, &[-6, 0, 0, 0, 0, 0]).unwrap().unwrap();
        assert_eq!(q, 5);
        assert_eq!(module_dim(&p5, &l), 1);
        for a in -5..=-1 {
            assert_eq!(bott_cohomology(&p5, &[a, 0, 0, 0, 0, 0]).unwrap(), None);
        }
        let (q, l) = bott_cohomology(&p5, &[2, 0, 0, 0, 0, 0]).unwrap().unwrap();
        assert_eq!((q, module_dim(&p5, &l)), (0, 21));
    }

    #[test]
    fn grassmannian_tautological() {
        let g = parse_flag("Gr(2,5)").unwrap();
        let (q, l) = bott_cohomology(&g, &[1, 0, 0, 0, 0]).unwrap().unwrap();
        assert_eq!((q, module_dim(&g, &l)), (0, 5));
        assert_eq!(bott_cohomology(&g, &[0, 0, 1, 0, 0]).unwrap(), None);
        assert_eq!(canonical_weight(&g), vec![-3, -3, 2, 2, 2]);
        let k = cotangent_character(&g);
        let det = crate::symfun::lambda_powers(&k, 6, true).pop().unwrap();
        assert_eq!(det, GlCharacter::monomial(vec![-3, -3, 2, 2, 2], 1));
    }

    #[test]
    fn parse_flags_and_weights() {
        assert_eq!(parse_flag("P4 x P4").unwrap(), [p(4), p(4)].concat());
        assert_eq!(parse_flag("Fl(1,3;5)").unwrap(), vec![FlagFactor { n: 5, blocks: vec![1, 2, 2] }]);
        assert!(parse_flag("Gr(5,5)").is_err());
        let g = parse_flag("Gr(2,4)").unwrap();
        let w = parse_weight("1,0|0,-1").unwrap();
        assert_eq!(format_weight(&g, &w), "1,0|0,-1");
        assert!(bott_cohomology(&g, &[0, 1, 0, 0]).is_err());
    }

    #[test]
    fn symmetric_square_is_irreducible() {
        let g = parse_flag("Gr(2,8)").unwrap();
        let d = decompose_expr(&parse_bundle("sym(dual(U),2)").unwrap(), &g).unwrap();
        assert_eq!(d, vec![(vec![2, 0, 0, 0, 0, 0, 0, 0], 1)]);
    }
}
