use alloc::vec::Vec;

use num_traits::Zero;

use crate::bipartite::lex_min_perfect_matching;
use crate::error::Result;
use crate::fractional::FractionalMatching;
use crate::matching::Matching;
use crate::rational::Rational;

/// `p` as a convex combination of perfect matchings.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BvnDecomposition {
    pub n: usize,
    /// `(weight, matching)` in extraction order; weights are positive.
    pub terms: Vec<(Rational, Matching)>,
}

impl BvnDecomposition {
    /// `sum_t w_t * indicator(M_t)`.
    pub fn reassemble(&self) -> Result<FractionalMatching> {
        FractionalMatching::mixture(self.n, &self.terms)
    }

    pub fn total_weight(&self) -> Rational {
        self.terms.iter().map(|(w, _)| w).sum()
    }
}

/// Peels off the lexicographically smallest perfect matching of the residual
/// support, weighted by its smallest residual entry, until nothing is left.
/// Each step zeroes at least one entry, so there are at most `n^2` terms.
pub fn bvn_decompose(p: &FractionalMatching) -> Result<BvnDecomposition> {
    p.require_doubly_stochastic()?;
    let n = p.n();
    let mut r: Vec<Vec<Rational>> = p.rows();
    let mut terms = Vec::new();
    while r.iter().flatten().any(|x| !x.is_zero()) {
        // the residual is a positive multiple of a doubly stochastic matrix
        let perm = lex_min_perfect_matching(n, |i, j| !r[i][j].is_zero())
            .expect("residual support carries a perfect matching");
        let w = perm
            .iter()
            .enumerate()
            .map(|(i, &j)| &r[i][j])
            .min()
            .expect("n >= 1")
            .clone();
        for (i, &j) in perm.iter().enumerate() {
            r[i][j] -= &w;
        }
        terms.push((w, Matching::from_permutation(&perm)?));
        assert!(terms.len() <= n * n, "decomposition exceeded n^2 terms");
    }
    Ok(BvnDecomposition { n, terms })
}
