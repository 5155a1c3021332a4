//! Thin matchings: cut-ratio measurement, threshold rounding of fractional
//! matchings, Birkhoff-von Neumann decomposition, exhaustive search and the
//! alternating-cycle counterexamples.

mod bvn;
mod cuts;
mod cycle;
mod hall;
mod search;

pub use bvn::{bvn_decompose, BvnDecomposition};
pub use cuts::{cut_ratio, cut_values, thinness, ThinnessReport, CUT_POINTS_CAP};
pub use cycle::{cycle_counterexample, q_side_probability, CycleCounterexample};
pub use hall::{derandomized_rsd, derandomized_rsd_monte_carlo, hall_round};
pub use search::{thin_search, THIN_SEARCH_CAP};
