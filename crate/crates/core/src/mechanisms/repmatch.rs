//! RepMatch: merge agent groups whose representatives' top windows overlap,
//! then hand each group its representative's top items.

use alloc::vec;
use alloc::vec::Vec;

use crate::instance::Instance;
use crate::matching::Matching;

/// Partition of the agents into groups `sets[j]`, each with representative
/// `reps[j]` and level `levels[j]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RepMatchState {
    pub sets: Vec<Vec<usize>>,
    pub reps: Vec<usize>,
    pub levels: Vec<u32>,
}

/// One merge: group `absorbed` was folded into group `into` (indices before
/// the merge).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Merge {
    pub into: usize,
    pub absorbed: usize,
    pub rep: usize,
    pub level: u32,
}

impl RepMatchState {
    pub fn singletons(n: usize) -> Self {
        RepMatchState {
            sets: (0..n).map(|a| vec![a]).collect(),
            reps: (0..n).collect(),
            levels: vec![0; n],
        }
    }

    fn window<'a>(&self, inst: &'a Instance, j: usize) -> &'a [usize] {
        &inst.list(self.reps[j])[..self.sets[j].len()]
    }

    fn overlapping_pair(&self, inst: &Instance) -> Option<(usize, usize)> {
        let n = inst.n();
        let mut mark = vec![usize::MAX; n];
        for i in 0..self.sets.len() {
            for &b in self.window(inst, i) {
                mark[b] = i;
            }
            for j in i + 1..self.sets.len() {
                if self.window(inst, j).iter().any(|&b| mark[b] == i) {
                    return Some((i, j));
                }
            }
        }
        None
    }

    fn merge(&mut self, i: usize, j: usize) -> Merge {
        let (li, lj) = (self.levels[i], self.levels[j]);
        let rep = if li >= lj { self.reps[i] } else { self.reps[j] };
        let level = if li == lj { li + 1 } else { li.max(lj) };
        let absorbed = self.sets.remove(j);
        self.reps.remove(j);
        self.levels.remove(j);
        self.sets[i].extend(absorbed);
        self.sets[i].sort_unstable();
        self.reps[i] = rep;
        self.levels[i] = level;
        assert!(
            self.sets[i].len() >= 1usize << level,
            "group of size {} at level {level}",
            self.sets[i].len()
        );
        Merge {
            into: i,
            absorbed: j,
            rep,
            level,
        }
    }
}

/// Runs the merge loop to completion, returning the final state and the
/// merges in order.
pub fn rep_match_trace(inst: &Instance) -> (RepMatchState, Vec<Merge>) {
    let mut state = RepMatchState::singletons(inst.n());
    let mut merges = Vec::new();
    while let Some((i, j)) = state.overlapping_pair(inst) {
        merges.push(state.merge(i, j));
    }
    (state, merges)
}

/// RepMatch. Within a group, agents in ascending index take the
/// representative's top items in list order.
pub fn rep_match(inst: &Instance) -> Matching {
    let (state, _) = rep_match_trace(inst);
    let mut out = Matching::empty(inst.n());
    for j in 0..state.sets.len() {
        for (&a, &b) in state.sets[j].iter().zip(state.window(inst, j)) {
            out.set(a, b);
        }
    }
    debug_assert!(out.is_perfect());
    out
}
