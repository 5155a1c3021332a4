//! Unweighted bipartite matching on agent/item support graphs.

use alloc::vec;
use alloc::vec::Vec;

/// Maximum matching by augmenting paths, scanning neighbours in the given
/// order. `adj[i]` lists the items agent `i` may take. Returns the item of
/// each agent.
pub fn maximum_matching(n_items: usize, adj: &[Vec<usize>]) -> Vec<Option<usize>> {
    let mut item_owner: Vec<Option<usize>> = vec![None; n_items];
    for agent in 0..adj.len() {
        let mut visited = vec![false; n_items];
        augment(agent, adj, &mut item_owner, &mut visited);
    }
    let mut assign = vec![None; adj.len()];
    for (item, owner) in item_owner.iter().enumerate() {
        if let Some(a) = owner {
            assign[*a] = Some(item);
        }
    }
    assign
}

fn augment(
    agent: usize,
    adj: &[Vec<usize>],
    item_owner: &mut [Option<usize>],
    visited: &mut [bool],
) -> bool {
    for &item in &adj[agent] {
        if core::mem::replace(&mut visited[item], true) {
            continue;
        }
        let free = match item_owner[item] {
            None => true,
            Some(other) => augment(other, adj, item_owner, visited),
        };
        if free {
            item_owner[item] = Some(agent);
            return true;
        }
    }
    false
}

/// Size of a maximum matching.
pub fn matching_number(n_items: usize, adj: &[Vec<usize>]) -> usize {
    maximum_matching(n_items, adj)
        .iter()
        .filter(|a| a.is_some())
        .count()
}

/// Lexicographically smallest perfect matching on an `n x n` support, as
/// `perm[agent] = item`: agent 0 takes the lowest item that still leaves a
/// perfect matching, then agent 1, and so on.
pub fn lex_min_perfect_matching(
    n: usize,
    allowed: impl Fn(usize, usize) -> bool,
) -> Option<Vec<usize>> {
    let adj: Vec<Vec<usize>> = (0..n)
        .map(|i| (0..n).filter(|&j| allowed(i, j)).collect())
        .collect();
    if matching_number(n, &adj) < n {
        return None;
    }
    let mut perm = Vec::with_capacity(n);
    let mut used = vec![false; n];
    for agent in 0..n {
        let choice = adj[agent].iter().copied().find(|&item| {
            if used[item] {
                return false;
            }
            used[item] = true;
            let rest: Vec<Vec<usize>> = adj[agent + 1..]
                .iter()
                .map(|l| l.iter().copied().filter(|&j| !used[j]).collect())
                .collect();
            let ok = matching_number(n, &rest) == n - agent - 1;
            used[item] = false;
            ok
        })?;
        used[choice] = true;
        perm.push(choice);
    }
    Some(perm)
}
