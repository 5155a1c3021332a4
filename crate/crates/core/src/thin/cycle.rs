use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::error::{invalid, Result};
use crate::fractional::FractionalMatching;
use crate::matching::Matching;
use crate::rational::Rational;

/// `copies` disjoint cycles of length `4k` whose edge weights alternate
/// `q, 1-q`, as a fractional matching on `n = 2k * copies` agents.
///
/// Cycle vertices are numbered `1..=4k`; in copy `c`, odd vertex `v` is agent
/// `2kc + (v-1)/2` and even vertex `v` is item `2kc + v/2 - 1`. Edge
/// `(v, v+1)` for odd `v` carries `q`, for even `v` carries `1 - q`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleCounterexample {
    pub k: usize,
    pub q: Rational,
    pub copies: usize,
    pub p: FractionalMatching,
    /// The perfect matching on the `q` edges (identity).
    pub m_odd: Matching,
    /// The perfect matching on the `1 - q` edges.
    pub m_even: Matching,
    /// Per copy `{v : v mod 4 in {2, 3}}`; crossed by every `q` edge and no
    /// other, so `m_odd` has ratio `1/q` there.
    pub cut_odd: Vec<bool>,
    /// Per copy `{v : v mod 4 in {1, 2}}`; crossed by every `1 - q` edge and
    /// no other, so `m_even` has ratio `1/(1-q)` there.
    pub cut_even: Vec<bool>,
}

impl CycleCounterexample {
    pub fn n(&self) -> usize {
        2 * self.k * self.copies
    }

    /// Point index (agents `0..n`, items `n..2n`) of cycle vertex `v` in
    /// copy `c`.
    pub fn point(&self, c: usize, v: usize) -> usize {
        let base = 2 * self.k * c;
        if v % 2 == 1 {
            base + (v - 1) / 2
        } else {
            self.n() + base + v / 2 - 1
        }
    }
}

pub fn cycle_counterexample(k: usize, q: &Rational, copies: usize) -> Result<CycleCounterexample> {
    if k == 0 || copies == 0 {
        return Err(invalid("need k >= 1 and at least one copy"));
    }
    if *q <= Rational::zero() || *q >= Rational::one() {
        return Err(invalid("q must lie strictly between 0 and 1"));
    }
    let len = 2 * k;
    let n = len * copies;
    let mut rows = vec![vec![Rational::zero(); n]; n];
    let mut even = vec![0usize; n];
    for c in 0..copies {
        let base = len * c;
        for i in 0..len {
            let a = base + i;
            rows[a][a] = q.clone();
            // vertex 2i+1 meets item i-1 through the edge (2i, 2i+1)
            let b = base + (i + len - 1) % len;
            rows[a][b] = Rational::one() - q;
            even[a] = b;
        }
    }
    let mut ce = CycleCounterexample {
        k,
        q: q.clone(),
        copies,
        p: FractionalMatching::new(rows)?,
        m_odd: Matching::from_permutation(&(0..n).collect::<Vec<_>>())?,
        m_even: Matching::from_permutation(&even)?,
        cut_odd: vec![false; 2 * n],
        cut_even: vec![false; 2 * n],
    };
    for c in 0..copies {
        for v in 1..=4 * k {
            let x = ce.point(c, v);
            ce.cut_odd[x] = matches!(v % 4, 2 | 3);
            ce.cut_even[x] = matches!(v % 4, 1 | 2);
        }
    }
    Ok(ce)
}

/// Probability that at least one of `copies` independent components picks
/// its `q`-side matching: `1 - (1-q)^copies`.
pub fn q_side_probability(q: &Rational, copies: usize) -> Rational {
    let miss = Rational::one() - q;
    let mut all_miss = Rational::one();
    for _ in 0..copies {
        all_miss *= &miss;
    }
    Rational::one() - all_miss
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int, Extended};
    use crate::thin::{bvn_decompose, cut_values, thinness};

    #[test]
    fn four_cycle_layout() {
        let ce = cycle_counterexample(1, &frac(1, 2), 1).unwrap();
        assert_eq!(ce.p, FractionalMatching::uniform(2));
        assert_eq!(ce.m_even.as_permutation().unwrap(), vec![1, 0]);
        // S = {1, 2}: agent 0 and item 0
        assert_eq!(ce.cut_even, vec![true, false, true, false]);
        assert_eq!(cut_values(&ce.p, &ce.m_even, &ce.cut_even).unwrap(), (2, int(1)));
        assert_eq!(cut_values(&ce.p, &ce.m_odd, &ce.cut_even).unwrap(), (0, int(1)));
    }

    #[test]
    fn cut_values_scale_with_k() {
        for k in 1..=3 {
            let ce = cycle_counterexample(k, &frac(1, 2), 1).unwrap();
            let (c, w) = cut_values(&ce.p, &ce.m_even, &ce.cut_even).unwrap();
            assert_eq!((c, w), (2 * k, int(k as i64)));
            for q in [frac(1, 4), frac(1, 8)] {
                let ce = cycle_counterexample(k, &q, 2).unwrap();
                let (c, w) = cut_values(&ce.p, &ce.m_odd, &ce.cut_odd).unwrap();
                assert_eq!(Rational::from_integer(c.into()) / w, int(1) / &q);
            }
        }
    }

    #[test]
    fn thinness_of_the_q_side() {
        let q = frac(1, 4);
        let ce = cycle_counterexample(1, &q, 1).unwrap();
        assert_eq!(thinness(&ce.p, &ce.m_odd).unwrap().beta, Extended::Finite(int(4)));
        let ce = cycle_counterexample(1, &frac(1, 2), 1).unwrap();
        let r = thinness(&ce.p, &ce.m_even).unwrap();
        assert_eq!(r.beta, Extended::Finite(int(2)));
        assert_eq!(r.witness_cut, ce.cut_even);
    }

    #[test]
    fn each_copy_decomposes_into_its_two_matchings() {
        let ce = cycle_counterexample(2, &frac(1, 3), 1).unwrap();
        let d = bvn_decompose(&ce.p).unwrap();
        assert_eq!(d.terms, vec![(frac(1, 3), ce.m_odd.clone()), (frac(2, 3), ce.m_even.clone())]);
    }

    #[test]
    fn q_side_probability_by_enumeration() {
        let q = frac(1, 8);
        let c = 8;
        // each component independently takes the q side with probability q
        let mut hit = Rational::zero();
        for mask in 0u32..(1 << c) {
            let mut pr = int(1);
            for t in 0..c {
                pr *= if mask >> t & 1 == 1 { q.clone() } else { int(1) - &q };
            }
            if mask != 0 {
                hit += pr;
            }
        }
        assert_eq!(q_side_probability(&q, c), hit);
        assert_eq!(hit, int(1) - frac(7, 8).pow(8));
    }

    #[test]
    fn bad_parameters() {
        assert!(cycle_counterexample(0, &frac(1, 2), 1).is_err());
        assert!(cycle_counterexample(1, &int(1), 1).is_err());
        assert!(cycle_counterexample(1, &frac(1, 2), 0).is_err());
    }
}
