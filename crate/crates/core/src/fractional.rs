//! Fractional matchings: `n x n` doubly sub-stochastic matrices.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::error::{invalid, Result};
use crate::matching::Matching;
use crate::metric::Metric;
use crate::rational::{is_nonneg, Rational};

/// `p[i][j]` is the probability that agent `i` receives item `j`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FractionalMatching {
    n: usize,
    p: Vec<Rational>,
}

impl FractionalMatching {
    /// Checks entries lie in `[0, 1]` and every row and column sums to at
    /// most 1.
    pub fn new(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 || rows.iter().any(|r| r.len() != n) {
            return Err(invalid("fractional matching must be a nonempty square matrix"));
        }
        let fm = FractionalMatching {
            n,
            p: rows.into_iter().flatten().collect(),
        };
        let one = Rational::one();
        for (idx, v) in fm.p.iter().enumerate() {
            if !is_nonneg(v) || v > &one {
                return Err(invalid(format!(
                    "entry ({},{}) outside [0,1]",
                    idx / n,
                    idx % n
                )));
            }
        }
        for k in 0..n {
            if fm.row_sum(k) > one || fm.col_sum(k) > one {
                return Err(invalid(format!("row or column {k} sums above 1")));
            }
        }
        Ok(fm)
    }

    pub(crate) fn from_flat_unchecked(n: usize, p: Vec<Rational>) -> Self {
        FractionalMatching { n, p }
    }

    pub fn zeros(n: usize) -> Self {
        FractionalMatching {
            n,
            p: vec![Rational::zero(); n * n],
        }
    }

    /// All entries `1/n`.
    pub fn uniform(n: usize) -> Self {
        let v = Rational::new(1.into(), (n as i64).into());
        FractionalMatching {
            n,
            p: vec![v; n * n],
        }
    }

    /// Indicator matrix of a (possibly partial) matching.
    pub fn indicator(m: &Matching) -> Self {
        let mut fm = FractionalMatching::zeros(m.n());
        for (i, j) in m.pairs() {
            fm.p[i * fm.n + j] = Rational::one();
        }
        fm
    }

    /// `sum_t w_t * indicator(M_t)`; the result must again be a fractional
    /// matching.
    pub fn mixture(n: usize, terms: &[(Rational, Matching)]) -> Result<Self> {
        let mut p = vec![Rational::zero(); n * n];
        for (w, m) in terms {
            if m.n() != n {
                return Err(invalid("mixture term has the wrong size"));
            }
            for (i, j) in m.pairs() {
                p[i * n + j] += w;
            }
        }
        FractionalMatching::new(p.chunks(n).map(|r| r.to_vec()).collect())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.p[i * self.n + j]
    }

    pub fn row_sum(&self, i: usize) -> Rational {
        self.p[i * self.n..(i + 1) * self.n].iter().sum()
    }

    pub fn col_sum(&self, j: usize) -> Rational {
        (0..self.n).map(|i| self.get(i, j)).sum()
    }

    /// Sum of all entries, i.e. the expected matching size.
    pub fn total(&self) -> Rational {
        self.p.iter().sum()
    }

    /// Every row and column sums to exactly 1.
    pub fn is_doubly_stochastic(&self) -> bool {
        let one = Rational::one();
        (0..self.n).all(|k| self.row_sum(k) == one && self.col_sum(k) == one)
    }

    pub(crate) fn require_doubly_stochastic(&self) -> Result<()> {
        if self.is_doubly_stochastic() {
            Ok(())
        } else {
            Err(invalid("fractional matching is not doubly stochastic"))
        }
    }

    pub fn rows(&self) -> Vec<Vec<Rational>> {
        self.p.chunks(self.n).map(|r| r.to_vec()).collect()
    }

    /// Positive entries as `(agent, item)` pairs in row-major order.
    pub fn support(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.p
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(move |(idx, _)| (idx / self.n, idx % self.n))
    }
}

/// `sum_{i,j} p[i][j] * d(a_i, b_j)`.
pub fn fractional_cost(p: &FractionalMatching, d: &Metric) -> Result<Rational> {
    if p.n() != d.n() {
        return Err(invalid(format!(
            "fractional matching has n = {} but the metric has n = {}",
            p.n(),
            d.n()
        )));
    }
    Ok(p.support()
        .map(|(i, j)| p.get(i, j) * d.agent_item(i, j))
        .sum())
}
