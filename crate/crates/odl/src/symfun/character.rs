use std::collections::hash_map::Entry;
use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive};

use super::{Partition, SchurVector};

/// Weight multiset of a (virtual) representation of `GL(n_1) × ... × GL(n_k)`;
/// each exponent vector has length `n_1 + ... + n_k`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct GlCharacter {
    n: usize,
    terms: HashMap<Vec<i64>, i64>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CharacterError {
    #[error("character is not symmetric under the Weyl group")]
    NotSymmetric,
    #[error("negative multiplicity {mult} at weight {weight:?}")]
    NegativeMultiplicity { weight: Vec<i64>, mult: i64 },
    #[error("block sizes {blocks:?} do not add up to {n}")]
    BadBlocks { blocks: Vec<usize>, n: usize },
}

impl GlCharacter {
    pub fn zero(n: usize) -> GlCharacter {
        GlCharacter { n, terms: HashMap::new() }
    }

    pub fn trivial(n: usize) -> GlCharacter {
        GlCharacter::monomial(vec![0; n], 1)
    }

    pub fn monomial(w: Vec<i64>, m: i64) -> GlCharacter {
        let mut c = GlCharacter::zero(w.len());
        c.add_term(w, m);
        c
    }

    /// The standard representation `C^n`: weights `ε_1, ..., ε_n`.
    pub fn standard(n: usize) -> GlCharacter {
        let mut c = GlCharacter::zero(n);
        for i in 0..n {
            let mut w = vec![0; n];
            w[i] = 1;
            c.add_term(w, 1);
        }
        c
    }

    pub fn nvars(&self) -> usize {
        self.n
    }

    pub fn add_term(&mut self, w: Vec<i64>, m: i64) {
        debug_assert_eq!(w.len(), self.n);
        if m == 0 {
            return;
        }
        match self.terms.entry(w) {
            Entry::Occupied(mut o) => {
                *o.get_mut() += m;
                if *o.get() == 0 {
                    o.remove();
                }
            }
            Entry::Vacant(v) => {
                v.insert(m);
            }
        }
    }

    pub fn terms(&self) -> &HashMap<Vec<i64>, i64> {
        &self.terms
    }

    /// Terms in sorted order, for stable output.
    pub fn sorted_terms(&self) -> BTreeMap<Vec<i64>, i64> {
        self.terms.iter().map(|(k, v)| (k.clone(), *v)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Virtual dimension: the sum of all multiplicities.
    pub fn dim(&self) -> i64 {
        self.terms.values().sum()
    }

    pub fn add(&self, other: &GlCharacter) -> GlCharacter {
        assert_eq!(self.n, other.n);
        let mut out = self.clone();
        for (w, &m) in &other.terms {
            *out.terms.entry(w.clone()).or_insert(0) += m;
        }
        out.terms.retain(|_, v| *v != 0);
        out
    }

    pub fn scale(&self, k: i64) -> GlCharacter {
        let mut out = GlCharacter::zero(self.n);
        if k != 0 {
            for (w, &m) in &self.terms {
                out.terms.insert(w.clone(), m * k);
            }
        }
        out
    }

    pub fn sub(&self, other: &GlCharacter) -> GlCharacter {
        self.add(&other.scale(-1))
    }

    pub fn mul(&self, other: &GlCharacter) -> GlCharacter {
        assert_eq!(self.n, other.n);
        let mut acc: HashMap<Vec<i64>, i64> = HashMap::with_capacity(self.terms.len() * other.terms.len());
        for (a, &ma) in &self.terms {
            for (b, &mb) in &other.terms {
                let w: Vec<i64> = a.iter().zip(b).map(|(x, y)| x + y).collect();
                *acc.entry(w).or_insert(0) += ma * mb;
            }
        }
        acc.retain(|_, v| *v != 0);
        GlCharacter { n: self.n, terms: acc }
    }

    /// Contragredient: negates every weight.
    pub fn dual(&self) -> GlCharacter {
        GlCharacter { n: self.n, terms: self.terms.iter().map(|(w, &m)| (w.iter().map(|x| -x).collect(), m)).collect() }
    }

    /// Adams operation `ψ^j`: scales every weight by `j`.
    pub fn adams(&self, j: i64) -> GlCharacter {
        let mut out = GlCharacter::zero(self.n);
        for (w, &m) in &self.terms {
            out.add_term(w.iter().map(|x| x * j).collect(), m);
        }
        out
    }

    pub fn check_nonnegative(&self) -> Result<(), CharacterError> {
        match self.terms.iter().find(|(_, &m)| m < 0) {
            Some((w, &m)) => Err(CharacterError::NegativeMultiplicity { weight: w.clone(), mult: m }),
            None => Ok(()),
        }
    }

    /// Symmetry under permutations inside each block.
    pub fn is_symmetric(&self, blocks: &[usize]) -> bool {
        self.terms.iter().all(|(w, &m)| {
            let mut start = 0;
            for &b in blocks {
                for i in start..start + b.saturating_sub(1) {
                    let mut s = w.clone();
                    s.swap(i, i + 1);
                    if self.terms.get(&s).copied().unwrap_or(0) != m {
                        return false;
                    }
                }
                start += b;
            }
            true
        })
    }

    /// Splits a weight into its blocks.
    pub fn restrict_block(w: &[i64], blocks: &[usize], b: usize) -> Vec<i64> {
        let start: usize = blocks[..b].iter().sum();
        w[start..start + blocks[b]].to_vec()
    }
}

/// `e_i ∘ χ` by the Newton recursion `i e_i = Σ_j (−1)^{j−1} e_{i−j} ψ^j`.
pub fn wedge_of_character(chi: &GlCharacter, i: usize) -> Result<GlCharacter, CharacterError> {
    chi.check_nonnegative()?;
    Ok(lambda_powers(chi, i, true).pop().unwrap())
}

/// `h_i ∘ χ` by the same recursion without signs.
pub fn sym_of_character(chi: &GlCharacter, i: usize) -> Result<GlCharacter, CharacterError> {
    chi.check_nonnegative()?;
    Ok(lambda_powers(chi, i, false).pop().unwrap())
}

/// `[e_0∘χ, ..., e_k∘χ]` (or `h` when `alternating` is false). Valid for
/// virtual characters too.
pub fn lambda_powers(chi: &GlCharacter, k: usize, alternating: bool) -> Vec<GlCharacter> {
    let n = chi.nvars();
    let psi: Vec<GlCharacter> = (0..=k).map(|j| chi.adams(j as i64)).collect();
    let mut out = vec![GlCharacter::trivial(n)];
    for i in 1..=k {
        let mut acc = GlCharacter::zero(n);
        for j in 1..=i {
            let sign = if alternating && j % 2 == 0 { -1 } else { 1 };
            acc = acc.add(&out[i - j].mul(&psi[j]).scale(sign));
        }
        let mut div = GlCharacter::zero(n);
        for (w, m) in acc.terms {
            assert!(m % i as i64 == 0, "Newton recursion left a remainder");
            div.add_term(w, m / i as i64);
        }
        out.push(div);
    }
    out
}

/// Schur functor `S_λ(χ)` through the dual Jacobi–Trudi determinant in the
/// `e_i ∘ χ`.
pub fn schur_of_character(chi: &GlCharacter, lambda: &Partition) -> GlCharacter {
    let conj = lambda.conjugate();
    let m = conj.len();
    let top = conj.get(0) as usize + m;
    let e = lambda_powers(chi, top, true);
    let entry = |i: usize, j: usize| -> Option<&GlCharacter> {
        let k = conj.get(i) as i64 - i as i64 + j as i64;
        if k < 0 {
            None
        } else {
            e.get(k as usize)
        }
    };
    fn det<'a>(
        row: usize,
        cols: &[usize],
        entry: &dyn Fn(usize, usize) -> Option<&'a GlCharacter>,
        n: usize,
    ) -> GlCharacter {
        if cols.is_empty() {
            return GlCharacter::trivial(n);
        }
        let mut out = GlCharacter::zero(n);
        for (pos, &c) in cols.iter().enumerate() {
            let Some(a) = entry(row, c) else { continue };
            if a.is_zero() {
                continue;
            }
            let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
            let t = a.mul(&det(row + 1, &rest, entry, n));
            out = if pos % 2 == 0 { out.add(&t) } else { out.sub(&t) };
        }
        out
    }
    let cols: Vec<usize> = (0..m).collect();
    det(0, &cols, &entry, chi.nvars())
}

/// Character of the irreducible `GL(n)` module with dominant weight `lambda`
/// (entries may be negative), by semistandard tableau enumeration.
pub fn irreducible_character(lambda: &[i64]) -> GlCharacter {
    let n = lambda.len();
    if n == 0 {
        return GlCharacter::trivial(0);
    }
    let shift = lambda[n - 1];
    let parts: Vec<u32> = lambda.iter().map(|&x| (x - shift) as u32).collect();
    let shape = Partition::new(&parts).expect("dominant weight");
    let mut out = GlCharacter::zero(n);
    let rows = shape.len();
    let mut tab: Vec<Vec<usize>> = (0..rows).map(|r| vec![0; shape.get(r) as usize]).collect();
    let cells: Vec<(usize, usize)> = shape.cells().collect();

    fn fill(
        idx: usize,
        cells: &[(usize, usize)],
        tab: &mut Vec<Vec<usize>>,
        n: usize,
        shift: i64,
        out: &mut GlCharacter,
    ) {
        if idx == cells.len() {
            let mut w = vec![shift; n];
            for row in tab.iter() {
                for &v in row {
                    w[v] += 1;
                }
            }
            out.add_term(w, 1);
            return;
        }
        let (r, c) = cells[idx];
        let lo_row = if c > 0 { tab[r][c - 1] } else { 0 };
        let lo_col = if r > 0 { tab[r - 1][c] + 1 } else { 0 };
        for v in lo_row.max(lo_col)..n {
            tab[r][c] = v;
            fill(idx + 1, cells, tab, n, shift, out);
        }
    }
    fill(0, &cells, &mut tab, n, shift, &mut out);
    out
}

/// Blockwise character of `⊗_b S_{λ_b}` for a weight split into blocks.
pub fn block_irreducible_character(weight: &[i64], blocks: &[usize]) -> GlCharacter {
    let mut acc = GlCharacter::trivial(0);
    let mut start = 0;
    for &b in blocks {
        let piece = irreducible_character(&weight[start..start + b]);
        acc = concat_product(&acc, &piece);
        start += b;
    }
    acc
}

fn concat_product(a: &GlCharacter, b: &GlCharacter) -> GlCharacter {
    let mut out = GlCharacter::zero(a.nvars() + b.nvars());
    for (x, &mx) in a.terms() {
        for (y, &my) in b.terms() {
            let mut w = x.clone();
            w.extend_from_slice(y);
            out.add_term(w, mx * my);
        }
    }
    out
}

fn is_block_dominant(w: &[i64], blocks: &[usize]) -> bool {
    let mut start = 0;
    for &b in blocks {
        if w[start..start + b].windows(2).any(|p| p[0] < p[1]) {
            return false;
        }
        start += b;
    }
    true
}

/// Decomposes into irreducibles of `GL(blocks[0]) × GL(blocks[1]) × ...`,
/// keyed by the concatenated dominant weight.
pub fn decompose_blockwise(chi: &GlCharacter, blocks: &[usize]) -> Result<BTreeMap<Vec<i64>, i64>, CharacterError> {
    if blocks.iter().sum::<usize>() != chi.nvars() {
        return Err(CharacterError::BadBlocks { blocks: blocks.to_vec(), n: chi.nvars() });
    }
    if !chi.is_symmetric(blocks) {
        return Err(CharacterError::NotSymmetric);
    }
    let mut rest = chi.clone();
    let mut out = BTreeMap::new();
    while !rest.is_zero() {
        // the lexicographically largest weight is the highest weight of a summand
        let (w, m) = rest
            .terms()
            .iter()
            .filter(|(w, _)| is_block_dominant(w, blocks))
            .max_by(|a, b| a.0.cmp(b.0))
            .map(|(w, &m)| (w.clone(), m))
            .ok_or(CharacterError::NotSymmetric)?;
        if m < 0 {
            return Err(CharacterError::NegativeMultiplicity { weight: w, mult: m });
        }
        rest = rest.sub(&block_irreducible_character(&w, blocks).scale(m));
        out.insert(w, m);
    }
    Ok(out)
}

/// Decomposition of a polynomial `GL(n)` character into Schur functions.
pub fn schur_decompose(chi: &GlCharacter) -> Result<SchurVector, CharacterError> {
    let parts = decompose_blockwise(chi, &[chi.nvars()])?;
    let mut out = SchurVector::zero();
    for (w, m) in parts {
        let p = Partition::from_signed(&w)
            .map_err(|_| CharacterError::NegativeMultiplicity { weight: w.clone(), mult: m })?;
        out.add_term(p, m);
    }
    Ok(out)
}

/// `dim S_λ C^n` by the Weyl dimension formula; `λ` may have negative
/// entries and must be weakly decreasing.
pub fn weyl_dim_weight(lambda: &[i64]) -> BigInt {
    let n = lambda.len();
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..n {
        for j in i + 1..n {
            num *= lambda[i] - lambda[j] + (j - i) as i64;
            den *= (j - i) as i64;
        }
    }
    num / den
}

/// `dim S_λ C^n` by the hook-content formula; 0 when `λ` has more than `n` rows.
pub fn weyl_dim(lambda: &Partition, n: usize) -> u64 {
    if lambda.len() > n {
        return 0;
    }
    let mut num = BigInt::one();
    for (i, j) in lambda.cells() {
        num *= n as i64 + j as i64 - i as i64;
    }
    (num / BigInt::from(lambda.hook_product())).to_u64().expect("dimension fits in u64")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::part;

    #[test]
    fn wedge_extremes() {
        let v = GlCharacter::standard(4);
        assert_eq!(wedge_of_character(&v, 0).unwrap(), GlCharacter::trivial(4));
        assert_eq!(wedge_of_character(&v, 4).unwrap(), GlCharacter::monomial(vec![1, 1, 1, 1], 1));
        assert!(wedge_of_character(&v, 5).unwrap().is_zero());
    }

    #[test]
    fn decompositions() {
        let v = GlCharacter::standard(3);
        assert_eq!(schur_decompose(&v).unwrap(), SchurVector::single(part![1]));
        let vv = v.mul(&v);
        assert_eq!(schur_decompose(&vv).unwrap(), SchurVector::from_terms([(part![2], 1), (part![1, 1], 1)]));
        let l2 = wedge_of_character(&GlCharacter::standard(4), 2).unwrap();
        let l2l2 = wedge_of_character(&l2, 2).unwrap();
        assert_eq!(schur_decompose(&l2l2).unwrap(), SchurVector::single(part![2, 1, 1]));
    }

    #[test]
    fn dims() {
        assert_eq!(weyl_dim(&part![1], 6), 6);
        assert_eq!(weyl_dim(&part![2, 1, 1], 4), 15);
        assert_eq!(weyl_dim(&part![2, 1], 3), 8);
        assert_eq!(weyl_dim(&part![1, 1, 1], 2), 0);
        assert_eq!(weyl_dim_weight(&[0, -1, -1]), BigInt::from(3));
    }

    #[test]
    fn negative_weights_are_handled() {
        let ch = irreducible_character(&[0, -1]);
        assert_eq!(ch.sorted_terms(), BTreeMap::from([(vec![-1, 0], 1), (vec![0, -1], 1)]));
        let dec = decompose_blockwise(&GlCharacter::standard(3).dual(), &[3]).unwrap();
        assert_eq!(dec, BTreeMap::from([(vec![0, 0, -1], 1)]));
        assert!(schur_decompose(&GlCharacter::standard(3).dual()).is_err());
    }

    #[test]
    fn virtual_characters_are_rejected() {
        let v = GlCharacter::standard(2).scale(-1);
        assert!(matches!(schur_decompose(&v), Err(CharacterError::NegativeMultiplicity { .. })));
        let asym = GlCharacter::monomial(vec![1, 0], 1);
        assert_eq!(schur_decompose(&asym), Err(CharacterError::NotSymmetric));
    }
}
