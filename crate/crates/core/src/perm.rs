//! Permutations: priority orders, lexicographic enumeration, seeded shuffles.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{invalid, Result};

/// A permutation of `0..n`, read as "first entry goes first".
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PriorityOrder(Vec<usize>);

impl PriorityOrder {
    pub fn new(order: Vec<usize>) -> Result<Self> {
        if !is_permutation(&order) {
            return Err(invalid(format!("{order:?} is not a permutation")));
        }
        Ok(PriorityOrder(order))
    }

    pub fn identity(n: usize) -> Self {
        PriorityOrder((0..n).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    /// `position[x]` = index of `x` in the order.
    pub fn positions(&self) -> Vec<usize> {
        inverse(&self.0)
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }
}

pub fn is_permutation(v: &[usize]) -> bool {
    let mut seen = vec![false; v.len()];
    v.iter()
        .all(|&x| x < v.len() && !core::mem::replace(&mut seen[x], true))
}

pub fn inverse(perm: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; perm.len()];
    for (pos, &x) in perm.iter().enumerate() {
        inv[x] = pos;
    }
    inv
}

pub fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

/// Rearranges `v` into the next permutation in lexicographic order; returns
/// `false` (leaving `v` sorted ascending) after the last one.
pub fn next_permutation(v: &mut [usize]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        v.reverse();
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// All permutations of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Permutations {
    Permutations {
        next: Some((0..n).collect()),
    }
}

pub struct Permutations {
    next: Option<Vec<usize>>,
}

impl Iterator for Permutations {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let cur = self.next.take()?;
        let mut succ = cur.clone();
        if next_permutation(&mut succ) {
            self.next = Some(succ);
        }
        Some(cur)
    }
}

/// RNG for a seed. Every randomized routine in the crate draws from this.
pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Independent sub-stream `stream` of `seed`, used to make per-trial draws
/// independent of how trials are scheduled.
pub fn substream_rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

/// Uniform permutation of `0..n`.
pub fn random_permutation<R: rand::Rng + ?Sized>(n: usize, rng: &mut R) -> Vec<usize> {
    let mut v: Vec<usize> = (0..n).collect();
    v.shuffle(rng);
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumerates_in_lex_order() {
        let all: Vec<_> = permutations(3).collect();
        assert_eq!(
            all,
            vec![
                vec![0, 1, 2],
                vec![0, 2, 1],
                vec![1, 0, 2],
                vec![1, 2, 0],
                vec![2, 0, 1],
                vec![2, 1, 0]
            ]
        );
        assert_eq!(permutations(0).count(), 1);
        assert_eq!(permutations(5).count() as u64, factorial(5));
    }

    #[test]
    fn priority_order_validation() {
        assert!(PriorityOrder::new(vec![1, 0, 2]).is_ok());
        assert!(PriorityOrder::new(vec![1, 1]).is_err());
        assert_eq!(PriorityOrder::new(vec![2, 0, 1]).unwrap().positions(), vec![1, 2, 0]);
    }

    #[test]
    fn seeded_shuffles_repeat() {
        let a = random_permutation(10, &mut seeded_rng(3));
        let b = random_permutation(10, &mut seeded_rng(3));
        assert_eq!(a, b);
        assert!(is_permutation(&a));
        let s0 = random_permutation(10, &mut substream_rng(3, 0));
        let s1 = random_permutation(10, &mut substream_rng(3, 1));
        assert_ne!(s0, s1);
    }
}
