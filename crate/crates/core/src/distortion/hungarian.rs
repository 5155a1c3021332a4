//! Exact minimum-cost perfect matching (Hungarian method with potentials).

use alloc::vec;
use alloc::vec::Vec;
use core::ops::{Add, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::bipartite::lex_min_perfect_matching;
use crate::matching::Matching;
use crate::metric::Metric;
use crate::rational::Rational;

/// Runs the O(n^3) shortest-augmenting-path method on an integer cost
/// matrix and returns the row potentials `u` and column potentials `v`
/// (`u[i] + v[j] <= c[i][j]`, equality on an optimal assignment).
fn potentials<T>(c: &[Vec<T>]) -> (Vec<T>, Vec<T>)
where
    T: Clone + Ord + Zero + Add<Output = T> + Sub<Output = T>,
{
    let n = c.len();
    // 1-based columns; column 0 is the virtual start
    let mut u = vec![T::zero(); n + 1];
    let mut v = vec![T::zero(); n + 1];
    let mut p = vec![0usize; n + 1];
    let mut way = vec![0usize; n + 1];
    for i in 1..=n {
        p[0] = i;
        let mut j0 = 0;
        let mut minv: Vec<Option<T>> = vec![None; n + 1];
        let mut used = vec![false; n + 1];
        loop {
            used[j0] = true;
            let i0 = p[j0];
            let mut delta: Option<T> = None;
            let mut j1 = 0;
            for j in 1..=n {
                if used[j] {
                    continue;
                }
                let cur = c[i0 - 1][j - 1].clone() - u[i0].clone() - v[j].clone();
                if minv[j].as_ref().map_or(true, |m| cur < *m) {
                    minv[j] = Some(cur);
                    way[j] = j0;
                }
                let mj = minv[j].as_ref().unwrap();
                if delta.as_ref().map_or(true, |d| mj < d) {
                    delta = Some(mj.clone());
                    j1 = j;
                }
            }
            let delta = delta.expect("an unused column remains");
            for j in 0..=n {
                if used[j] {
                    u[p[j]] = u[p[j]].clone() + delta.clone();
                    v[j] = v[j].clone() - delta.clone();
                } else if let Some(m) = minv[j].as_mut() {
                    *m = m.clone() - delta.clone();
                }
            }
            j0 = j1;
            if p[j0] == 0 {
                break;
            }
        }
        loop {
            let j1 = way[j0];
            p[j0] = p[j1];
            j0 = j1;
            if j0 == 0 {
                break;
            }
        }
    }
    (u[1..].to_vec(), v[1..].to_vec())
}

/// Lexicographically smallest optimal assignment: by complementary
/// slackness the optimal assignments are exactly the perfect matchings on
/// tight edges.
fn lex_optimal<T>(c: &[Vec<T>]) -> Vec<usize>
where
    T: Clone + Ord + Zero + Add<Output = T> + Sub<Output = T>,
{
    let n = c.len();
    let (u, v) = potentials(c);
    lex_min_perfect_matching(n, |i, j| u[i].clone() + v[j].clone() == c[i][j])
        .expect("tight edges carry an optimal assignment")
}

/// Minimum-cost assignment for an exact cost matrix, ties broken toward the
/// lexicographically smallest `perm[agent] = item`.
pub fn min_cost_assignment(cost: &[Vec<Rational>]) -> (Vec<usize>, Rational) {
    let n = cost.len();
    if n == 0 {
        return (Vec::new(), Rational::zero());
    }
    let l = cost
        .iter()
        .flatten()
        .fold(BigInt::one(), |a, x| a.lcm(x.denom()));
    let scaled: Vec<Vec<BigInt>> = cost
        .iter()
        .map(|r| r.iter().map(|x| x.numer() * (&l / x.denom())).collect())
        .collect();
    // potentials stay within a small multiple of n times the largest entry,
    // far inside i128 when the entries fit in i64
    let small = scaled.iter().flatten().all(|x| x.to_i64().is_some());
    let perm = if small {
        let c: Vec<Vec<i128>> = scaled
            .iter()
            .map(|r| r.iter().map(|x| x.to_i128().unwrap()).collect())
            .collect();
        lex_optimal(&c)
    } else {
        lex_optimal(&scaled)
    };
    let total = perm.iter().enumerate().map(|(i, &j)| &cost[i][j]).sum();
    (perm, total)
}

/// Minimum-cost perfect matching between agents and items under `d`.
pub fn min_cost_matching(d: &Metric) -> (Matching, Rational) {
    let (perm, total) = min_cost_assignment(&d.agent_item_matrix());
    (Matching::from_permutation(&perm).expect("assignment is a permutation"), total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::euclidean_random;
    use crate::matching::cost;
    use crate::perm::permutations;
    use crate::rational::{frac, int};
    use proptest::prelude::*;

    /// Exhaustive minimum with the first (lexicographically smallest)
    /// optimal permutation.
    fn brute(c: &[Vec<Rational>]) -> (Vec<usize>, Rational) {
        let mut best: Option<(Vec<usize>, Rational)> = None;
        for p in permutations(c.len()) {
            let t: Rational = p.iter().enumerate().map(|(i, &j)| &c[i][j]).sum();
            if best.as_ref().map_or(true, |(_, b)| t < *b) {
                best = Some((p, t));
            }
        }
        best.unwrap()
    }

    #[test]
    fn zero_diagonal() {
        let c: Vec<Vec<Rational>> = (0..3)
            .map(|i| (0..3).map(|j| if i == j { int(0) } else { int(1) }).collect())
            .collect();
        assert_eq!(min_cost_assignment(&c), (vec![0, 1, 2], int(0)));
    }

    #[test]
    fn ties_break_lexicographically() {
        let c = vec![vec![int(1); 3]; 3];
        assert_eq!(min_cost_assignment(&c).0, vec![0, 1, 2]);
        let c = vec![vec![int(2), int(1)], vec![int(1), int(0)]];
        // both assignments cost 2
        assert_eq!(min_cost_assignment(&c), (vec![0, 1], int(2)));
    }

    #[test]
    fn euclidean_metrics_match_brute_force() {
        for seed in 0..30 {
            let n = 1 + (seed as usize % 5);
            let (_, d) = euclidean_random(n, 2, seed).unwrap();
            let (m, v) = min_cost_matching(&d);
            assert_eq!(cost(&m, &d).unwrap(), v);
            let (bp, bv) = brute(&d.agent_item_matrix());
            assert_eq!(v, bv);
            assert_eq!(m.as_permutation().unwrap(), bp);
        }
    }

    #[test]
    fn huge_entries_use_big_integers() {
        let big = Rational::from_integer(BigInt::from(10).pow(30));
        let c = vec![vec![big.clone(), frac(1, 3)], vec![frac(1, 7), big.clone()]];
        assert_eq!(min_cost_assignment(&c), (vec![1, 0], frac(10, 21)));
    }

    proptest! {
        #[test]
        fn matches_brute_force(n in 1usize..=5, cells in proptest::collection::vec((0i64..6, 1i64..4), 25)) {
            let c: Vec<Vec<Rational>> = (0..n)
                .map(|i| (0..n).map(|j| { let (a, b) = cells[i * 5 + j]; frac(a, b) }).collect())
                .collect();
            prop_assert_eq!(min_cost_assignment(&c), brute(&c));
        }
    }
}
