use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use super::Partition;

/// Littlewood–Richardson coefficient `c^λ_{μν}`: the number of LR tableaux of
/// skew shape `λ/μ` and content `ν`.
pub fn lr_coefficient(lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    if lambda.size() != mu.size() + nu.size() || !lambda.contains(mu) {
        return 0;
    }
    if nu.len() > lambda.len() {
        return 0;
    }
    // skew cells in reading order: rows top to bottom, right to left
    let mut cells = Vec::new();
    for r in 0..lambda.len() {
        for c in (mu.get(r) as usize..lambda.get(r) as usize).rev() {
            cells.push((r, c));
        }
    }
    let rows = lambda.len();
    let width = lambda.get(0) as usize;
    let mut grid = vec![vec![0u32; width]; rows];
    let mut count = vec![0u32; nu.len() + 1];
    let content: Vec<u32> = (0..nu.len()).map(|i| nu.get(i)).collect();

    fn go(
        idx: usize,
        cells: &[(usize, usize)],
        lambda: &Partition,
        mu: &Partition,
        grid: &mut Vec<Vec<u32>>,
        count: &mut Vec<u32>,
        content: &[u32],
    ) -> u64 {
        if idx == cells.len() {
            return 1;
        }
        let (r, c) = cells[idx];
        let right = if c + 1 < lambda.get(r) as usize { grid[r][c + 1] } else { u32::MAX };
        let above = if r > 0 && c >= mu.get(r - 1) as usize { grid[r - 1][c] } else { 0 };
        let mut total = 0;
        let hi = right.min(content.len() as u32);
        for v in (above + 1)..=hi {
            let k = v as usize;
            if count[k] >= content[k - 1] {
                continue;
            }
            if k > 1 && count[k] + 1 > count[k - 1] {
                continue;
            }
            count[k] += 1;
            grid[r][c] = v;
            total += go(idx + 1, cells, lambda, mu, grid, count, content);
            count[k] -= 1;
        }
        grid[r][c] = 0;
        total
    }

    go(0, &cells, lambda, mu, &mut grid, &mut count, &content)
}

/// A formal integer combination of Schur functions.
#[derive(Clone, PartialEq, Eq, Default, Serialize)]
pub struct SchurVector {
    terms: BTreeMap<Partition, i64>,
}

impl SchurVector {
    pub fn zero() -> SchurVector {
        SchurVector::default()
    }

    pub fn single(p: Partition) -> SchurVector {
        SchurVector::from_terms([(p, 1)])
    }

    pub fn from_terms(iter: impl IntoIterator<Item = (Partition, i64)>) -> SchurVector {
        let mut v = SchurVector::zero();
        for (p, m) in iter {
            v.add_term(p, m);
        }
        v
    }

    pub fn add_term(&mut self, p: Partition, m: i64) {
        if m == 0 {
            return;
        }
        match self.terms.entry(p) {
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

    pub fn add(&self, other: &SchurVector) -> SchurVector {
        let mut out = self.clone();
        for (p, &m) in &other.terms {
            out.add_term(p.clone(), m);
        }
        out
    }

    pub fn scale(&self, k: i64) -> SchurVector {
        SchurVector::from_terms(self.terms.iter().map(|(p, &m)| (p.clone(), m * k)))
    }

    pub fn terms(&self) -> &BTreeMap<Partition, i64> {
        &self.terms
    }

    pub fn get(&self, p: &Partition) -> i64 {
        self.terms.get(p).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl fmt::Display for SchurVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        // largest partitions first reads more naturally
        for (i, (p, &m)) in self.terms.iter().rev().enumerate() {
            match (i, m < 0) {
                (0, false) => {}
                (0, true) => write!(f, "-")?,
                (_, false) => write!(f, " + ")?,
                (_, true) => write!(f, " - ")?,
            }
            if m.abs() != 1 {
                write!(f, "{}", m.abs())?;
            }
            write!(f, "s{p}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for SchurVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// LR-expanded product; with `bx = Some((k, m))` partitions outside the
/// `k × m` box are dropped.
pub fn schur_product(a: &SchurVector, b: &SchurVector, bx: Option<(usize, u32)>) -> SchurVector {
    let mut out = SchurVector::zero();
    for (mu, &ma) in &a.terms {
        for (nu, &mb) in &b.terms {
            let n = mu.size() + nu.size();
            let (rows, cols) = match bx {
                Some((k, m)) => (k, m),
                None => ((mu.len() + nu.len()), mu.get(0) + nu.get(0)),
            };
            let rows = rows.min(mu.len() + nu.len());
            let cols = cols.min(mu.get(0) + nu.get(0));
            for lam in Partition::bounded(n, rows, cols) {
                let c = lr_coefficient(&lam, mu, nu);
                if c > 0 {
                    out.add_term(lam, ma * mb * c as i64);
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::part;

    #[test]
    fn small_coefficients() {
        assert_eq!(lr_coefficient(&part![2, 1], &part![1], &part![1, 1]), 1);
        assert_eq!(lr_coefficient(&part![2, 2], &part![2], &part![1]), 0);
        assert_eq!(lr_coefficient(&part![3, 2, 1], &part![2, 1], &part![2, 1]), 2);
        assert_eq!(lr_coefficient(&part![3, 1], &part![2], &part![2]), 1);
        assert_eq!(lr_coefficient(&part![2, 2], &part![2], &part![2]), 1);
        assert_eq!(lr_coefficient(&part![4, 2], &part![2, 1], &part![2, 1]), 1);
        assert_eq!(lr_coefficient(&part![2, 2], &part![1], &part![1]), 0);
    }

    #[test]
    fn products() {
        let s1 = SchurVector::single(part![1]);
        let sq = schur_product(&s1, &s1, None);
        assert_eq!(sq, SchurVector::from_terms([(part![2], 1), (part![1, 1], 1)]));
        let mut acc = s1.clone();
        for _ in 0..3 {
            acc = schur_product(&acc, &s1, Some((2, 2)));
        }
        assert_eq!(acc, SchurVector::from_terms([(part![2, 2], 2)]));
        let top = schur_product(&SchurVector::single(part![2, 2]), &s1, Some((2, 2)));
        assert!(top.is_zero());
    }

    #[test]
    fn display() {
        let v = SchurVector::from_terms([(part![2, 1], 2), (part![3], 1), (part![1, 1, 1], -1)]);
        assert_eq!(v.to_string(), "s(3) + 2s(2,1) - s(1,1,1)");
    }
}
