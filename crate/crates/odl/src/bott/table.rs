//! First-page bookkeeping for hypercohomology spectral sequences.
//!
//! Every term is a vector space sitting in a total degree. Differentials
//! are never computed: adjacent degrees may cancel, and the table reports
//! what survives under every admissible pattern of cancellations.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::report::Bounds;

use super::Weight;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Term {
    pub degree: i64,
    /// Highest weight of the representation computing this piece.
    pub weight: Weight,
    pub mult: i64,
    /// Total dimension, multiplicity included.
    pub dim: i64,
    pub source: String,
    /// Filtration position, compared lexicographically: a differential can
    /// only map a term to one of higher key in the next degree.
    pub key: Vec<i64>,
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct CohomologyTable {
    pub terms: Vec<Term>,
    /// Degrees outside `[lo, hi]` are known to vanish.
    pub lo: i64,
    pub hi: i64,
    /// Degrees whose value is known independently.
    pub fixed: BTreeMap<i64, i64>,
}

impl CohomologyTable {
    pub fn new(lo: i64, hi: i64) -> CohomologyTable {
        CohomologyTable { terms: Vec::new(), lo, hi, fixed: BTreeMap::new() }
    }

    pub fn push(&mut self, t: Term) {
        if t.dim != 0 {
            self.terms.push(t);
        }
    }

    pub fn fix(&mut self, degree: i64, value: i64) {
        self.fixed.insert(degree, value);
    }

    /// `c^t`, the sum of dimensions landing in degree `t`.
    pub fn totals(&self) -> BTreeMap<i64, i64> {
        let mut out = BTreeMap::new();
        for t in &self.terms {
            *out.entry(t.degree).or_insert(0) += t.dim;
        }
        out.retain(|_, v| *v != 0);
        out
    }

    pub fn euler(&self) -> i64 {
        self.totals().iter().map(|(d, v)| if d.rem_euclid(2) == 0 { *v } else { -v }).sum()
    }

    fn span(&self) -> (i64, i64) {
        let c = self.totals();
        let lo = c.keys().next().copied().unwrap_or(self.lo).min(self.lo);
        let hi = c.keys().next_back().copied().unwrap_or(self.hi).max(self.hi);
        (lo, hi)
    }

    /// Largest number of pairs between degrees `t` and `t+1` that a
    /// differential could cancel, respecting the filtration keys. Terms
    /// without a key may cancel against anything.
    pub fn max_cancellation(&self, t: i64) -> i64 {
        let layer = |d: i64| self.terms.iter().filter(move |x| x.degree == d);
        if layer(t).chain(layer(t + 1)).any(|x| x.key.is_empty()) {
            return layer(t).map(|x| x.dim).sum::<i64>().min(layer(t + 1).map(|x| x.dim).sum());
        }
        // sources in degree t, targets in degree t+1; a source matches any
        // target of strictly larger key, so a greedy sweep from the top is optimal
        let mut nodes: Vec<(&Vec<i64>, bool, i64)> = self
            .terms
            .iter()
            .filter(|x| x.degree == t || x.degree == t + 1)
            .map(|x| (&x.key, x.degree == t + 1, x.dim))
            .collect();
        nodes.sort_by(|a, b| b.0.cmp(a.0));
        let mut avail = 0;
        let mut matched = 0;
        let mut i = 0;
        while i < nodes.len() {
            let mut j = i;
            while j < nodes.len() && nodes[j].0 == nodes[i].0 {
                j += 1;
            }
            for n in &nodes[i..j] {
                if !n.1 {
                    let m = avail.min(n.2);
                    matched += m;
                    avail -= m;
                }
            }
            avail += nodes[i..j].iter().filter(|n| n.1).map(|n| n.2).sum::<i64>();
            i = j;
        }
        matched
    }

    /// All cohomology vectors `h^lo..h^hi` reachable by cancelling `r_t`
    /// pairs between degrees `t` and `t+1`, with `r_t` at most
    /// [`max_cancellation`](Self::max_cancellation). Each `r_t` is bounded
    /// separately, so the set may be larger than the true one but always
    /// contains it.
    pub fn candidates(&self) -> BTreeSet<Vec<i64>> {
        let c = self.totals();
        let (lo, hi) = self.span();
        let cs: Vec<i64> = (lo..=hi).map(|t| c.get(&t).copied().unwrap_or(0)).collect();
        let caps: Vec<i64> = (lo..=hi).map(|t| self.max_cancellation(t)).collect();
        let target = |t: i64| -> Option<i64> {
            if t < self.lo || t > self.hi {
                Some(0)
            } else {
                self.fixed.get(&t).copied()
            }
        };
        let mut out = BTreeSet::new();
        let mut h = Vec::with_capacity(cs.len());
        self.walk(&cs, &caps, lo, 0, 0, &target, &mut h, &mut out);
        out.into_iter().map(|v| v[(self.lo - lo) as usize..=(self.hi - lo) as usize].to_vec()).collect()
    }

    #[allow(clippy::too_many_arguments)]
    fn walk(
        &self,
        cs: &[i64],
        caps: &[i64],
        lo: i64,
        i: usize,
        incoming: i64,
        target: &dyn Fn(i64) -> Option<i64>,
        h: &mut Vec<i64>,
        out: &mut BTreeSet<Vec<i64>>,
    ) {
        if i == cs.len() {
            out.insert(h.clone());
            return;
        }
        let avail = cs[i] - incoming;
        let next = caps[i];
        let t = lo + i as i64;
        let range: Vec<i64> = match target(t) {
            Some(v) => {
                let r = avail - v;
                if r < 0 || r > next {
                    return;
                }
                vec![r]
            }
            None => (0..=avail.min(next)).collect(),
        };
        for r in range {
            h.push(avail - r);
            self.walk(cs, caps, lo, i + 1, r, target, h, out);
            h.pop();
        }
    }

    /// Per-degree interval over all candidates, `lo..=hi`.
    pub fn bounds(&self) -> Vec<Bounds> {
        let cand = self.candidates();
        let n = (self.hi - self.lo + 1) as usize;
        (0..n)
            .map(|i| {
                let vals = cand.iter().map(|v| v[i]);
                Bounds { min: vals.clone().min().unwrap_or(0), max: vals.max().unwrap_or(0) }
            })
            .collect()
    }

    pub fn is_exact(&self) -> bool {
        self.candidates().len() == 1
    }

    /// Shifts every term by `d`.
    pub fn shifted(mut self, d: i64) -> CohomologyTable {
        for t in &mut self.terms {
            t.degree += d;
        }
        self
    }

    pub fn extend(&mut self, other: CohomologyTable) {
        self.terms.extend(other.terms);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn term(degree: i64, dim: i64) -> Term {
        Term { degree, weight: vec![], mult: 1, dim, source: String::new(), key: vec![] }
    }

    fn keyed(degree: i64, dim: i64, key: i64) -> Term {
        Term { key: vec![key], ..term(degree, dim) }
    }

    #[test]
    fn differentials_only_raise_the_key() {
        let mut t = CohomologyTable::new(0, 3);
        t.push(keyed(1, 2, 5));
        t.push(keyed(2, 50, 0));
        t.push(keyed(2, 1, 6));
        assert_eq!(t.max_cancellation(1), 1);
        assert_eq!(t.bounds()[1], Bounds { min: 1, max: 2 });
        t.push(keyed(1, 3, 6));
        assert_eq!(t.max_cancellation(1), 1);
    }

    #[test]
    fn isolated_terms_are_exact() {
        let mut t = CohomologyTable::new(0, 3);
        t.push(term(0, 1));
        t.push(term(2, 5));
        assert!(t.is_exact());
        assert_eq!(t.bounds()[2], Bounds::exact(5));
        assert_eq!(t.euler(), 6);
    }

    #[test]
    fn adjacent_terms_may_cancel() {
        let mut t = CohomologyTable::new(0, 3);
        t.push(term(1, 3));
        t.push(term(2, 50));
        assert_eq!(t.bounds()[1], Bounds { min: 0, max: 3 });
        t.fix(1, 2);
        assert_eq!(t.candidates().into_iter().collect::<Vec<_>>(), vec![vec![0, 2, 49, 0]]);
    }

    #[test]
    fn out_of_range_terms_are_forced_to_cancel() {
        let mut t = CohomologyTable::new(0, 3);
        t.push(term(-1, 4));
        t.push(term(0, 5));
        assert_eq!(t.candidates().into_iter().collect::<Vec<_>>(), vec![vec![1, 0, 0, 0]]);
        assert_eq!(t.euler(), 1);
    }
}
