//! Checking that a mechanism serializes `(pi, sigma)`: on every instance in
//! which agent `pi[i]` ranks `sigma[i]` ahead of each `sigma[j]`, `j > i`,
//! it must output `pi[i] -> sigma[i]`.

use alloc::vec;
use alloc::vec::Vec;

use rand::Rng;

use crate::error::{invalid, Error, Result};
use crate::instance::Instance;
use crate::matching::Matching;
use crate::perm::{is_permutation, permutations, random_permutation, seeded_rng};

/// Above this `n` the hypothesis-satisfying instances are sampled.
pub const EXHAUSTIVE_SERIAL_CAP: usize = 4;
/// Largest `n` accepted at all.
pub const SAMPLED_SERIAL_CAP: usize = 7;
pub const SERIAL_SAMPLES: u64 = 10_000;
/// Fixed seed for the sampled regime, so a check is reproducible.
pub const SERIAL_SAMPLE_SEED: u64 = 0x5e71_a115;

/// `pi[i] -> sigma[i]` for all `i`.
pub fn serialized_matching(pi: &[usize], sigma: &[usize]) -> Result<Matching> {
    check_perms(pi, sigma)?;
    let mut assign = vec![None; pi.len()];
    for (&a, &b) in pi.iter().zip(sigma) {
        assign[a] = Some(b);
    }
    Matching::new(assign)
}

fn check_perms(pi: &[usize], sigma: &[usize]) -> Result<()> {
    if pi.len() != sigma.len() || !is_permutation(pi) || !is_permutation(sigma) {
        return Err(invalid("pi and sigma must be permutations of the same size"));
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SerializabilityReport {
    pub instances_checked: u64,
    pub exhaustive: bool,
    pub counterexample: Option<Instance>,
}

impl SerializabilityReport {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }
}

/// All lists for the agent at position `i`: `sigma[i]` precedes every
/// `sigma[j]`, `j > i`; the other items are unconstrained.
fn admissible_lists(n: usize, sigma: &[usize], i: usize) -> Vec<Vec<usize>> {
    let later = &sigma[i + 1..];
    permutations(n)
        .filter(|l| {
            let first = l.iter().position(|&b| b == sigma[i]).unwrap();
            l[..first].iter().all(|b| !later.contains(b))
        })
        .collect()
}

/// A uniform admissible list: shuffle, then swap `sigma[i]` into the first
/// slot held by `{sigma[i], sigma[i+1], ...}`.
fn sample_list<R: Rng>(n: usize, sigma: &[usize], i: usize, rng: &mut R) -> Vec<usize> {
    let constrained = &sigma[i..];
    let mut l = random_permutation(n, rng);
    let first = l.iter().position(|b| constrained.contains(b)).unwrap();
    let at = l.iter().position(|&b| b == sigma[i]).unwrap();
    l.swap(first, at);
    l
}

/// Runs `mech` on every hypothesis-satisfying instance for `(pi, sigma)`
/// when `n <= 4`, otherwise on `SERIAL_SAMPLES` uniform ones, stopping at the
/// first instance where the output is not the serialized matching.
pub fn serializability_search<F>(mech: F, pi: &[usize], sigma: &[usize]) -> Result<SerializabilityReport>
where
    F: Fn(&Instance) -> Result<Matching>,
{
    check_perms(pi, sigma)?;
    let n = pi.len();
    if n == 0 {
        return Err(invalid("n must be positive"));
    }
    if n > SAMPLED_SERIAL_CAP {
        return Err(Error::AboveCap {
            what: "serializability_check",
            size: n,
            cap: SAMPLED_SERIAL_CAP,
            hint: "check serialization on specific instances instead",
        });
    }
    let target = serialized_matching(pi, sigma)?;
    let mut checked = 0u64;
    let mut prefs = vec![Vec::new(); n];
    let mut test = |prefs: &[Vec<usize>]| -> Result<Option<Instance>> {
        let inst = Instance::new(prefs.to_vec())?;
        checked += 1;
        Ok((mech(&inst)? != target).then_some(inst))
    };
    if n <= EXHAUSTIVE_SERIAL_CAP {
        let options: Vec<Vec<Vec<usize>>> = (0..n).map(|i| admissible_lists(n, sigma, i)).collect();
        let mut idx = vec![0usize; n];
        loop {
            for i in 0..n {
                prefs[pi[i]] = options[i][idx[i]].clone();
            }
            if let Some(bad) = test(&prefs)? {
                return Ok(report(checked, true, Some(bad)));
            }
            // mixed-radix increment
            let mut i = 0;
            while i < n {
                idx[i] += 1;
                if idx[i] < options[i].len() {
                    break;
                }
                idx[i] = 0;
                i += 1;
            }
            if i == n {
                return Ok(report(checked, true, None));
            }
        }
    }
    let mut rng = seeded_rng(SERIAL_SAMPLE_SEED);
    for _ in 0..SERIAL_SAMPLES {
        for i in 0..n {
            prefs[pi[i]] = sample_list(n, sigma, i, &mut rng);
        }
        if let Some(bad) = test(&prefs)? {
            return Ok(report(checked, false, Some(bad)));
        }
    }
    Ok(report(checked, false, None))
}

fn report(instances_checked: u64, exhaustive: bool, counterexample: Option<Instance>) -> SerializabilityReport {
    SerializabilityReport {
        instances_checked,
        exhaustive,
        counterexample,
    }
}

/// Whether no counterexample to serialization was found.
pub fn serializability_check<F>(mech: F, pi: &[usize], sigma: &[usize], n: usize) -> Result<bool>
where
    F: Fn(&Instance) -> Result<Matching>,
{
    if pi.len() != n {
        return Err(invalid("pi has the wrong length"));
    }
    Ok(serializability_search(mech, pi, sigma)?.passed())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mechanisms::serial_dictatorship;
    use crate::perm::{factorial, PriorityOrder};

    #[test]
    fn list_counts() {
        // n!/(n-i) admissible lists for position i
        let sigma = [2, 0, 3, 1];
        for i in 0..4 {
            assert_eq!(admissible_lists(4, &sigma, i).len() as u64, factorial(4) / (4 - i) as u64);
        }
    }

    #[test]
    fn sampled_lists_are_admissible_and_spread() {
        let sigma = [1, 3, 0, 2, 4];
        let mut rng = seeded_rng(1);
        let allowed = admissible_lists(5, &sigma, 1);
        let mut hits = alloc::collections::BTreeMap::new();
        for _ in 0..6000 {
            let l = sample_list(5, &sigma, 1, &mut rng);
            assert!(allowed.contains(&l));
            *hits.entry(l).or_insert(0u32) += 1;
        }
        // 30 admissible lists, ~200 each
        assert_eq!(hits.len(), allowed.len());
        assert!(hits.values().all(|&c| (120..=290).contains(&c)));
    }

    #[test]
    fn sd_serializes_and_reverse_does_not() {
        let pi = [2, 0, 1];
        let sigma = [1, 2, 0];
        let order = PriorityOrder::new(pi.to_vec()).unwrap();
        let r = serializability_search(|i: &Instance| serial_dictatorship(i, &order), &pi, &sigma).unwrap();
        assert!(r.passed() && r.exhaustive);
        assert_eq!(r.instances_checked, 2 * 3 * 6);
        let reversed = serialized_matching(&pi, &[0, 2, 1]).unwrap();
        assert!(!serializability_check(|_: &Instance| Ok(reversed.clone()), &pi, &sigma, 3).unwrap());
    }

    #[test]
    fn sampling_regime() {
        let pi = [4, 3, 2, 1, 0];
        let sigma = [0, 1, 2, 3, 4];
        let order = PriorityOrder::new(pi.to_vec()).unwrap();
        let r = serializability_search(|i: &Instance| serial_dictatorship(i, &order), &pi, &sigma).unwrap();
        assert!(r.passed());
        assert!(!r.exhaustive);
        assert_eq!(r.instances_checked, SERIAL_SAMPLES);
    }
}
