use crate::bipartite::lex_min_perfect_matching;
use crate::error::Result;
use crate::fractional::FractionalMatching;
use crate::instance::Instance;
use crate::matching::Matching;
use crate::mechanisms::{exact_rsd_marginals, monte_carlo_marginals};
use crate::rational::Rational;

/// A perfect matching using only entries `p[i][j] >= 1/n^2`, the
/// lexicographically smallest one.
///
/// Such a matching always exists: if some agent set `A` had fewer than `|A|`
/// threshold neighbours, the mass `A` sends outside them would be below
/// `|A| * n * 1/n^2 <= 1`, yet it must be at least 1. Every edge used costs at
/// most `n^2` times its share of `fractional_cost(p, d)`, for every metric `d`.
pub fn hall_round(p: &FractionalMatching) -> Result<Matching> {
    p.require_doubly_stochastic()?;
    let n = p.n();
    let t = Rational::new(1.into(), ((n * n) as i64).into());
    let perm = lex_min_perfect_matching(n, |i, j| *p.get(i, j) >= t)
        .expect("the threshold support of a doubly stochastic matrix is Hall");
    Matching::from_permutation(&perm)
}

/// Threshold rounding of the exact RSD marginals.
pub fn derandomized_rsd(inst: &Instance) -> Result<Matching> {
    hall_round(&exact_rsd_marginals(inst, inst.n())?)
}

/// Threshold rounding of RSD marginals estimated from `trials` sampled
/// orders.
pub fn derandomized_rsd_monte_carlo(inst: &Instance, trials: u64, seed: u64) -> Result<Matching> {
    hall_round(&monte_carlo_marginals(inst, inst.n(), trials, seed)?)
}
