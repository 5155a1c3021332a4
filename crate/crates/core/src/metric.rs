//! Exact (pseudo)metrics over the 2n points of an instance.
//!
//! Agents and items share one index space: points `0..n` are the agents and
//! points `n..2n` are the items. Distinct points may sit at distance zero.

use alloc::format;
use alloc::vec::Vec;

use num_traits::{Signed, Zero};

use crate::error::{invalid, Result};
use crate::rational::{is_nonneg, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Metric {
    n: usize,
    dist: Vec<Rational>,
}

impl Metric {
    /// Builds a metric from a `(2n) x (2n)` matrix, checking zero diagonal,
    /// nonnegativity, symmetry and the triangle inequality.
    pub fn new(n: usize, rows: Vec<Vec<Rational>>) -> Result<Self> {
        if n == 0 {
            return Err(invalid("metric needs n >= 1"));
        }
        let size = 2 * n;
        if rows.len() != size || rows.iter().any(|r| r.len() != size) {
            return Err(invalid(format!("metric must be {size}x{size}")));
        }
        let metric = Metric {
            n,
            dist: rows.into_iter().flatten().collect(),
        };
        metric.validate()?;
        Ok(metric)
    }

    /// Caller guarantees the metric axioms (e.g. shortest-path closures).
    pub(crate) fn from_flat_unchecked(n: usize, dist: Vec<Rational>) -> Self {
        debug_assert_eq!(dist.len(), 4 * n * n);
        Metric { n, dist }
    }

    /// Checks every metric axiom, naming the first violation.
    pub fn validate(&self) -> Result<()> {
        let size = self.points();
        for x in 0..size {
            if !self.get(x, x).is_zero() {
                return Err(invalid(format!("d({x},{x}) is nonzero")));
            }
            for y in 0..size {
                let dxy = self.get(x, y);
                if !is_nonneg(dxy) {
                    return Err(invalid(format!("d({x},{y}) is negative")));
                }
                if dxy != self.get(y, x) {
                    return Err(invalid(format!("d({x},{y}) != d({y},{x})")));
                }
            }
        }
        for x in 0..size {
            for y in 0..size {
                for z in 0..size {
                    if self.get(x, z) > &(self.get(x, y) + self.get(y, z)) {
                        return Err(invalid(format!(
                            "triangle inequality fails: d({x},{z}) > d({x},{y}) + d({y},{z})"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// Points on the real line; `positions` lists agents first, then items.
    pub fn from_line(n: usize, positions: &[Rational]) -> Result<Self> {
        if positions.len() != 2 * n || n == 0 {
            return Err(invalid("line metric needs 2n positions"));
        }
        let dist = positions
            .iter()
            .flat_map(|x| positions.iter().map(move |y| (x - y).abs()))
            .collect();
        Ok(Metric::from_flat_unchecked(n, dist))
    }

    /// L1 distances between coordinate vectors; agents first, then items.
    pub fn from_l1(n: usize, coords: &[Vec<Rational>]) -> Result<Self> {
        if coords.len() != 2 * n || n == 0 {
            return Err(invalid("L1 metric needs 2n points"));
        }
        let dim = coords[0].len();
        if coords.iter().any(|c| c.len() != dim) {
            return Err(invalid("all points need the same dimension"));
        }
        let dist = coords
            .iter()
            .flat_map(|x| {
                coords.iter().map(move |y| {
                    x.iter()
                        .zip(y)
                        .fold(Rational::zero(), |acc, (a, b)| acc + (a - b).abs())
                })
            })
            .collect();
        Ok(Metric::from_flat_unchecked(n, dist))
    }

    /// Cut pseudo-metric: distance 1 between points on different sides of
    /// the cut, 0 otherwise. `in_cut[x]` marks the points of `S`.
    pub fn cut(n: usize, in_cut: &[bool]) -> Result<Self> {
        if in_cut.len() != 2 * n || n == 0 {
            return Err(invalid("cut metric needs a side for each of the 2n points"));
        }
        let one = Rational::from_integer(1.into());
        let dist = in_cut
            .iter()
            .flat_map(|&a| {
                let one = one.clone();
                in_cut
                    .iter()
                    .map(move |&b| if a != b { one.clone() } else { Rational::zero() })
            })
            .collect();
        Ok(Metric::from_flat_unchecked(n, dist))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of points, `2n`.
    pub fn points(&self) -> usize {
        2 * self.n
    }

    /// Point index of item `j`.
    pub fn item_point(&self, j: usize) -> usize {
        self.n + j
    }

    pub fn get(&self, x: usize, y: usize) -> &Rational {
        &self.dist[x * self.points() + y]
    }

    /// `d(a_i, b_j)`.
    pub fn agent_item(&self, i: usize, j: usize) -> &Rational {
        self.get(i, self.n + j)
    }

    /// Row-major copy of the full matrix.
    pub fn rows(&self) -> Vec<Vec<Rational>> {
        self.dist.chunks(self.points()).map(|r| r.to_vec()).collect()
    }

    /// The `n x n` block of agent-item distances.
    pub fn agent_item_matrix(&self) -> Vec<Vec<Rational>> {
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self.agent_item(i, j).clone()).collect())
            .collect()
    }

    /// The same metric multiplied by a nonnegative factor.
    pub fn scaled(&self, factor: &Rational) -> Result<Self> {
        if factor.is_negative() {
            return Err(invalid("scale factor must be nonnegative"));
        }
        Ok(Metric::from_flat_unchecked(
            self.n,
            self.dist.iter().map(|d| d * factor).collect(),
        ))
    }
}
