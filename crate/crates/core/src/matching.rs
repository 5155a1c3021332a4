//! Integral (possibly partial) matchings and their cost.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::error::{invalid, Result};
use crate::metric::Metric;
use crate::rational::Rational;

/// Injective partial map from agents `0..n` to items.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Matching {
    assign: Vec<Option<usize>>,
}

impl Matching {
    /// The empty matching on `n` agents.
    pub fn empty(n: usize) -> Self {
        Matching {
            assign: vec![None; n],
        }
    }

    /// Checks injectivity and that every item index is below `n`.
    pub fn new(assign: Vec<Option<usize>>) -> Result<Self> {
        let n = assign.len();
        let mut seen = vec![false; n];
        for (agent, item) in assign.iter().enumerate() {
            if let Some(j) = *item {
                if j >= n {
                    return Err(invalid(format!("agent {agent} matched to item {j} >= {n}")));
                }
                if core::mem::replace(&mut seen[j], true) {
                    return Err(invalid(format!("item {j} matched twice")));
                }
            }
        }
        Ok(Matching { assign })
    }

    /// Perfect matching `agent i -> perm[i]`.
    pub fn from_permutation(perm: &[usize]) -> Result<Self> {
        Matching::new(perm.iter().map(|&j| Some(j)).collect())
    }

    /// Number of agents (matched or not).
    pub fn n(&self) -> usize {
        self.assign.len()
    }

    pub fn get(&self, agent: usize) -> Option<usize> {
        self.assign.get(agent).copied().flatten()
    }

    /// Number of matched pairs.
    pub fn len(&self) -> usize {
        self.assign.iter().filter(|a| a.is_some()).count()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn is_perfect(&self) -> bool {
        self.assign.iter().all(Option::is_some)
    }

    pub fn assignment(&self) -> &[Option<usize>] {
        &self.assign
    }

    /// Matched `(agent, item)` pairs in agent order.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.assign
            .iter()
            .enumerate()
            .filter_map(|(i, j)| j.map(|j| (i, j)))
    }

    /// `Some(perm)` with `perm[i]` the item of agent `i` when perfect.
    pub fn as_permutation(&self) -> Option<Vec<usize>> {
        self.assign.iter().copied().collect()
    }

    /// Agent matched to each item.
    pub fn inverse(&self) -> Vec<Option<usize>> {
        let mut inv = vec![None; self.n()];
        for (i, j) in self.pairs() {
            inv[j] = Some(i);
        }
        inv
    }

    pub(crate) fn set(&mut self, agent: usize, item: usize) {
        debug_assert!(self.assign[agent].is_none());
        self.assign[agent] = Some(item);
    }
}

/// Sum of `d(a_i, b_j)` over matched pairs.
pub fn cost(m: &Matching, d: &Metric) -> Result<Rational> {
    let n = d.n();
    m.pairs().try_fold(Rational::zero(), |acc, (i, j)| {
        if i >= n || j >= n {
            return Err(invalid(format!(
                "pair ({i},{j}) out of range for a metric on {n}+{n} points"
            )));
        }
        Ok(acc + d.agent_item(i, j))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    fn diag_metric(ds: &[i64]) -> Metric {
        // agents at 0, items spread so that d(a_i, b_i) = ds[i] via a star.
        let n = ds.len();
        let mut rows = vec![vec![int(0); 2 * n]; 2 * n];
        let big = ds.iter().copied().max().unwrap_or(0) * 2 + 2;
        for x in 0..2 * n {
            for y in 0..2 * n {
                if x != y {
                    rows[x][y] = int(big);
                }
            }
        }
        for (i, &v) in ds.iter().enumerate() {
            rows[i][n + i] = int(v + big / 2);
            rows[n + i][i] = int(v + big / 2);
        }
        Metric::new(n, rows).unwrap()
    }

    #[test]
    fn injectivity_enforced() {
        assert!(Matching::new(vec![Some(0), Some(0)]).is_err());
        assert!(Matching::new(vec![Some(2), None]).is_err());
        let m = Matching::new(vec![None, Some(0)]).unwrap();
        assert!(!m.is_perfect());
        assert_eq!(m.len(), 1);
    }

    #[test]
    fn empty_matching_costs_nothing() {
        let d = diag_metric(&[3, 4]);
        assert_eq!(cost(&Matching::empty(2), &d).unwrap(), int(0));
    }

    #[test]
    fn identity_on_zero_diagonal_costs_nothing() {
        let d = Metric::from_line(2, &[int(0), int(5), int(0), int(5)]).unwrap();
        let m = Matching::from_permutation(&[0, 1]).unwrap();
        assert_eq!(cost(&m, &d).unwrap(), int(0));
    }

    #[test]
    fn two_pair_sum() {
        // d(a_1,b_1) = 1, d(a_2,b_2) = 2 on a line: a at 0 and 10, b at 1 and 12.
        let d = Metric::from_line(2, &[int(0), int(10), int(1), int(12)]).unwrap();
        let m = Matching::from_permutation(&[0, 1]).unwrap();
        let brute: Rational = m.pairs().map(|(i, j)| d.agent_item(i, j).clone()).sum();
        assert_eq!(cost(&m, &d).unwrap(), int(3));
        assert_eq!(brute, int(3));
    }

    #[test]
    fn out_of_range_pair_is_an_error() {
        let d = Metric::from_line(1, &[int(0), int(1)]).unwrap();
        let m = Matching::from_permutation(&[1, 0]).unwrap();
        assert!(cost(&m, &d).is_err());
    }
}
