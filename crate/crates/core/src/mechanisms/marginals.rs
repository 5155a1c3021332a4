use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::fractional::FractionalMatching;
use crate::instance::Instance;
use crate::perm::{random_permutation, substream_rng};
use crate::rational::Rational;

use super::serial::serial_prefix;

/// Largest `n` for which marginals are computed by enumerating orders.
pub const EXACT_MARGINALS_CAP: usize = 8;

fn check_m(inst: &Instance, m: usize) -> Result<()> {
    if m > inst.n() {
        return Err(crate::error::invalid("m exceeds n"));
    }
    Ok(())
}

/// Exact `P[agent i gets item j]` under TruncatedRSD with `m` picks.
///
/// Only the first `m` agents of an order matter, so the enumeration runs over
/// ordered `m`-prefixes, each standing for `(n - m)!` full orders.
pub fn exact_rsd_marginals(inst: &Instance, m: usize) -> Result<FractionalMatching> {
    let n = inst.n();
    if n > EXACT_MARGINALS_CAP {
        return Err(Error::AboveCap {
            what: "exact_rsd_marginals",
            size: n,
            cap: EXACT_MARGINALS_CAP,
            hint: "use monte_carlo_marginals",
        });
    }
    check_m(inst, m)?;
    let mut counts = vec![0u64; n * n];
    let mut taken = vec![false; n];
    let mut used = vec![false; n];
    let mut stack: Vec<(usize, usize)> = Vec::with_capacity(m);
    let mut prefixes = 0u64;
    prefix_dfs(inst, m, &mut taken, &mut used, &mut stack, &mut counts, &mut prefixes);
    let denom = BigInt::from(prefixes);
    let p = counts
        .into_iter()
        .map(|c| Rational::new(BigInt::from(c), denom.clone()))
        .collect();
    Ok(FractionalMatching::from_flat_unchecked(n, p))
}

fn prefix_dfs(
    inst: &Instance,
    m: usize,
    taken: &mut [bool],
    used: &mut [bool],
    stack: &mut Vec<(usize, usize)>,
    counts: &mut [u64],
    prefixes: &mut u64,
) {
    let n = inst.n();
    if stack.len() == m {
        *prefixes += 1;
        for &(a, j) in stack.iter() {
            counts[a * n + j] += 1;
        }
        return;
    }
    for a in 0..n {
        if used[a] {
            continue;
        }
        let j = *inst.list(a).iter().find(|&&j| !taken[j]).unwrap();
        used[a] = true;
        taken[j] = true;
        stack.push((a, j));
        prefix_dfs(inst, m, taken, used, stack, counts, prefixes);
        stack.pop();
        taken[j] = false;
        used[a] = false;
    }
}

/// Match counts `c[i * n + j]` over trials `trials` (trial `t` draws its order
/// from sub-stream `t` of `seed`). Summing over a partition of the trial
/// range gives the same counts however the range is split.
pub fn monte_carlo_counts(
    inst: &Instance,
    m: usize,
    seed: u64,
    trials: core::ops::Range<u64>,
) -> Result<Vec<u64>> {
    check_m(inst, m)?;
    let n = inst.n();
    let mut counts = vec![0u64; n * n];
    for t in trials {
        let order = random_permutation(n, &mut substream_rng(seed, t));
        for (a, j) in serial_prefix(inst, &order, m).pairs() {
            counts[a * n + j] += 1;
        }
    }
    Ok(counts)
}

/// Turns match counts from `trials` runs into the averaged marginal matrix.
pub fn marginals_from_counts(n: usize, counts: &[u64], trials: u64) -> Result<FractionalMatching> {
    if trials == 0 || counts.len() != n * n {
        return Err(crate::error::invalid("need at least one trial and n*n counts"));
    }
    let h = BigInt::from(trials);
    let p = counts
        .iter()
        .map(|&c| Rational::new(BigInt::from(c), h.clone()))
        .collect();
    Ok(FractionalMatching::from_flat_unchecked(n, p))
}

/// Average of `trials` TruncatedRSD indicator matrices.
pub fn monte_carlo_marginals(
    inst: &Instance,
    m: usize,
    trials: u64,
    seed: u64,
) -> Result<FractionalMatching> {
    let counts = monte_carlo_counts(inst, m, seed, 0..trials)?;
    marginals_from_counts(inst.n(), &counts, trials)
}
