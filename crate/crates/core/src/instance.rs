//! Ordinal instances: every agent ranks all `n` items.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{invalid, Result};
use crate::metric::Metric;

/// `n` agents with full preference lists over `n` items, most preferred
/// first. Item indices are `0..n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Instance {
    prefs: Vec<Vec<usize>>,
    // rank[i][j] = position of item j in agent i's list
    rank: Vec<Vec<usize>>,
}

impl Instance {
    pub fn new(prefs: Vec<Vec<usize>>) -> Result<Self> {
        let n = prefs.len();
        if n == 0 {
            return Err(invalid("an instance needs at least one agent"));
        }
        let mut rank = vec![vec![usize::MAX; n]; n];
        for (i, list) in prefs.iter().enumerate() {
            if list.len() != n {
                return Err(invalid(format!(
                    "agent {i} ranks {} items, expected {n}",
                    list.len()
                )));
            }
            for (pos, &item) in list.iter().enumerate() {
                if item >= n || rank[i][item] != usize::MAX {
                    return Err(invalid(format!(
                        "agent {i}'s list is not a permutation of 0..{n}"
                    )));
                }
                rank[i][item] = pos;
            }
        }
        Ok(Instance { prefs, rank })
    }

    pub fn n(&self) -> usize {
        self.prefs.len()
    }

    pub fn prefs(&self) -> &[Vec<usize>] {
        &self.prefs
    }

    /// Agent `i`'s list, most preferred first.
    pub fn list(&self, i: usize) -> &[usize] {
        &self.prefs[i]
    }

    /// Position of `item` in agent `i`'s list (0 = favorite).
    pub fn rank(&self, i: usize, item: usize) -> usize {
        self.rank[i][item]
    }

    /// Whether agent `i` ranks item `a` strictly ahead of item `b`.
    pub fn prefers(&self, i: usize, a: usize, b: usize) -> bool {
        self.rank[i][a] < self.rank[i][b]
    }

    pub fn into_prefs(self) -> Vec<Vec<usize>> {
        self.prefs
    }
}

/// Ranks each agent's items by increasing distance; exact ties go to the
/// lower item index.
pub fn prefs_from_metric(d: &Metric) -> Instance {
    let n = d.n();
    let prefs = (0..n)
        .map(|i| {
            let mut items: Vec<usize> = (0..n).collect();
            items.sort_by(|&a, &b| d.agent_item(i, a).cmp(d.agent_item(i, b)).then(a.cmp(&b)));
            items
        })
        .collect();
    Instance::new(prefs).expect("sorted index lists are permutations")
}

/// Whether `d` weakly agrees with every list: along each agent's list the
/// distances never decrease. Mismatched sizes are never consistent.
pub fn consistent(inst: &Instance, d: &Metric) -> bool {
    if inst.n() != d.n() {
        return false;
    }
    inst.prefs().iter().enumerate().all(|(i, list)| {
        list.windows(2)
            .all(|w| d.agent_item(i, w[0]) <= d.agent_item(i, w[1]))
    })
}
