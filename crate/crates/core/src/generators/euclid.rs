use alloc::vec::Vec;

use rand::Rng;

use crate::error::{invalid, Result};
use crate::instance::{prefs_from_metric, Instance};
use crate::metric::Metric;
use crate::perm::seeded_rng;
use crate::rational::Rational;

/// Coordinates are multiples of `1 / GRID` in `[0, 1]`.
pub const GRID: i64 = 64;

/// `2n` points with coordinates drawn uniformly from the grid
/// `{0, 1/GRID, ..., 1}^dim` (agents first), under the L1 metric, and the
/// instance those distances induce.
pub fn euclidean_random(n: usize, dim: usize, seed: u64) -> Result<(Instance, Metric)> {
    if n == 0 || dim == 0 {
        return Err(invalid("euclidean_random needs n >= 1 and dim >= 1"));
    }
    let mut rng = seeded_rng(seed);
    let coords: Vec<Vec<Rational>> = (0..2 * n)
        .map(|_| {
            (0..dim)
                .map(|_| Rational::new(rng.gen_range(0..=GRID).into(), GRID.into()))
                .collect()
        })
        .collect();
    let metric = Metric::from_l1(n, &coords)?;
    Ok((prefs_from_metric(&metric), metric))
}
