//! The Boston mechanism: rounds of proposals, items commit irrevocably.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{invalid, Result};
use crate::instance::Instance;
use crate::matching::Matching;
use crate::perm::PriorityOrder;

/// An item accepting a proposer in a given round (rounds count from 1).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BostonEvent {
    pub round: usize,
    pub agent: usize,
    pub item: usize,
}

/// Each round, every unmatched agent proposes to the best item on its list
/// that is still unmatched; each item with proposers keeps the one earliest
/// in `priority`. Matched items take no further proposals.
pub fn boston_trace(inst: &Instance, priority: &PriorityOrder) -> Result<(Matching, Vec<BostonEvent>)> {
    let n = inst.n();
    if priority.len() != n {
        return Err(invalid("priority order does not cover the agents"));
    }
    let pos = priority.positions();
    let mut out = Matching::empty(n);
    let mut item_taken = vec![false; n];
    let mut events = Vec::with_capacity(n);
    let mut round = 0;
    while out.len() < n {
        round += 1;
        let mut best: Vec<Option<usize>> = vec![None; n];
        for a in (0..n).filter(|&a| out.get(a).is_none()) {
            let j = *inst.list(a).iter().find(|&&j| !item_taken[j]).unwrap();
            if best[j].map_or(true, |c| pos[a] < pos[c]) {
                best[j] = Some(a);
            }
        }
        for (j, a) in best.iter().enumerate() {
            if let Some(a) = *a {
                item_taken[j] = true;
                out.set(a, j);
                events.push(BostonEvent { round, agent: a, item: j });
            }
        }
    }
    Ok((out, events))
}

pub fn boston(inst: &Instance, priority: &PriorityOrder) -> Result<Matching> {
    boston_trace(inst, priority).map(|(m, _)| m)
}
