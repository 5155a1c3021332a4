use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{invalid, Result};
use crate::instance::Instance;
use crate::matching::Matching;
use crate::perm::{inverse, is_permutation};

/// Per-item rankings over agents, most preferred first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ItemPriorities {
    prefs: Vec<Vec<usize>>,
    rank: Vec<Vec<usize>>,
}

impl ItemPriorities {
    pub fn new(prefs: Vec<Vec<usize>>) -> Result<Self> {
        let n = prefs.len();
        for (j, p) in prefs.iter().enumerate() {
            if p.len() != n || !is_permutation(p) {
                return Err(invalid(format!("item {j}'s priority is not a permutation of 0..{n}")));
            }
        }
        let rank = prefs.iter().map(|p| inverse(p)).collect();
        Ok(ItemPriorities { prefs, rank })
    }

    /// Every item uses the same agent order.
    pub fn uniform(order: &[usize]) -> Result<Self> {
        ItemPriorities::new(vec![order.to_vec(); order.len()])
    }

    pub fn n(&self) -> usize {
        self.prefs.len()
    }

    pub fn list(&self, item: usize) -> &[usize] {
        &self.prefs[item]
    }

    pub fn prefs(&self) -> &[Vec<usize>] {
        &self.prefs
    }

    /// Whether `item` ranks agent `a` above agent `b`.
    pub fn prefers(&self, item: usize, a: usize, b: usize) -> bool {
        self.rank[item][a] < self.rank[item][b]
    }
}

fn check_sizes(inst: &Instance, items: &ItemPriorities) -> Result<()> {
    if inst.n() != items.n() {
        return Err(invalid("instance and item priorities disagree on n"));
    }
    Ok(())
}

/// Agent-proposing deferred acceptance, in simultaneous rounds.
pub fn deferred_acceptance(inst: &Instance, items: &ItemPriorities) -> Result<Matching> {
    check_sizes(inst, items)?;
    let n = inst.n();
    let mut next = vec![0usize; n];
    let mut held: Vec<Option<usize>> = vec![None; n];
    let mut free: Vec<usize> = (0..n).collect();
    while !free.is_empty() {
        let mut rejected = Vec::new();
        for &a in &free {
            let j = inst.list(a)[next[a]];
            next[a] += 1;
            match held[j] {
                None => held[j] = Some(a),
                Some(c) if items.prefers(j, a, c) => {
                    held[j] = Some(a);
                    rejected.push(c);
                }
                Some(_) => rejected.push(a),
            }
        }
        free = rejected;
    }
    let mut assign = vec![None; n];
    for (j, a) in held.iter().enumerate() {
        assign[a.expect("every item is held")] = Some(j);
    }
    Matching::new(assign)
}

/// Serial dictatorship on the items `0, 1, ..., n-1`: each takes its
/// favourite remaining agent. Entry `i` is the agent item `i` picks.
pub fn item_serial_order(items: &ItemPriorities) -> Vec<usize> {
    let n = items.n();
    let mut taken = vec![false; n];
    (0..n)
        .map(|j| {
            let a = *items.list(j).iter().find(|&&a| !taken[a]).unwrap();
            taken[a] = true;
            a
        })
        .collect()
}

/// No agent–item pair prefer each other to their partners in `m`.
pub fn is_stable(inst: &Instance, items: &ItemPriorities, m: &Matching) -> bool {
    if !m.is_perfect() || m.n() != inst.n() || items.n() != inst.n() {
        return false;
    }
    let holder = m.inverse();
    (0..inst.n()).all(|a| {
        let mine = m.get(a).unwrap();
        inst.list(a)
            .iter()
            .take_while(|&&j| j != mine)
            .all(|&j| !items.prefers(j, a, holder[j].unwrap()))
    })
}
