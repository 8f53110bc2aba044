use std::fmt;

use serde::{Deserialize, Serialize};

/// A partition, stored without trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition(Vec<u32>);

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("parts must be weakly decreasing and nonnegative: {0:?}")]
pub struct InvalidPartition(pub Vec<i64>);

impl Partition {
    pub fn new(parts: &[u32]) -> Result<Partition, InvalidPartition> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(InvalidPartition(parts.iter().map(|&p| p as i64).collect()));
        }
        let mut v = parts.to_vec();
        while v.last() == Some(&0) {
            v.pop();
        }
        Ok(Partition(v))
    }

    /// Accepts signed parts, rejecting negatives.
    pub fn from_signed(parts: &[i64]) -> Result<Partition, InvalidPartition> {
        if parts.iter().any(|&p| p < 0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(InvalidPartition(parts.to_vec()));
        }
        let v: Vec<u32> = parts.iter().map(|&p| p as u32).collect();
        Partition::new(&v)
    }

    /// Sorts the parts first.
    pub fn from_unsorted(parts: &[u32]) -> Partition {
        let mut v = parts.to_vec();
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(&v).expect("sorted")
    }

    pub fn empty() -> Partition {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Part `i` (0-based), zero past the end.
    pub fn get(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let w = self.get(0) as usize;
        let mut out = Vec::with_capacity(w);
        for j in 0..w {
            out.push(self.0.iter().filter(|&&p| p as usize > j).count() as u32);
        }
        Partition(out)
    }

    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.0.iter().enumerate().all(|(i, &p)| p <= self.0[i])
    }

    pub fn fits_box(&self, rows: usize, cols: u32) -> bool {
        self.len() <= rows && self.get(0) <= cols
    }

    /// Cells `(row, col)` of the Young diagram.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.0.iter().enumerate().flat_map(|(i, &p)| (0..p as usize).map(move |j| (i, j)))
    }

    /// Product of hook lengths.
    pub fn hook_product(&self) -> u128 {
        let conj = self.conjugate();
        self.cells()
            .map(|(i, j)| {
                let arm = self.0[i] as usize - j - 1;
                let leg = conj.0[j] as usize - i - 1;
                (arm + leg + 1) as u128
            })
            .product()
    }

    /// All partitions of `n`, in reverse lexicographic order.
    pub fn all_of(n: u32) -> Vec<Partition> {
        Partition::bounded(n, n as usize, n)
    }

    /// Partitions of `n` with at most `rows` parts, each at most `max_part`.
    pub fn bounded(n: u32, rows: usize, max_part: u32) -> Vec<Partition> {
        fn go(n: u32, rows: usize, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if n == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            if rows == 0 {
                return;
            }
            for p in (1..=max.min(n)).rev() {
                cur.push(p);
                go(n - p, rows - 1, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(n, rows, max_part, &mut Vec::new(), &mut out);
        out
    }

    /// Parts padded with zeros to length `n`.
    pub fn padded(&self, n: usize) -> Vec<i64> {
        (0..n).map(|i| self.get(i) as i64).collect()
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = InvalidPartition;
    fn try_from(v: Vec<u32>) -> Result<Partition, InvalidPartition> {
        Partition::new(&v)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Vec<u32> {
        p.0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Shorthand for tests and tables: panics on invalid input.
#[macro_export]
macro_rules! part {
    ($($p:expr),* $(,)?) => {
        $crate::symfun::Partition::new(&[$($p),*]).expect("valid partition")
    };
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalizes_and_validates() {
        assert_eq!(Partition::new(&[2, 1, 0, 0]).unwrap().parts(), &[2, 1]);
        assert!(Partition::new(&[1, 2]).is_err());
        assert!(Partition::from_signed(&[1, -1]).is_err());
    }

    #[test]
    fn conjugate_and_hooks() {
        let p = part![4, 2, 1];
        assert_eq!(p.conjugate(), part![3, 2, 1, 1]);
        assert_eq!(p.conjugate().conjugate(), p);
        assert_eq!(part![2, 1].hook_product(), 3);
        assert_eq!(part![3, 3].hook_product(), 144);
    }

    #[test]
    fn enumeration_counts() {
        let counts: Vec<usize> = (0..10).map(|n| Partition::all_of(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30]);
        assert_eq!(Partition::bounded(4, 2, 2), vec![part![2, 2]]);
    }
}
