//! Exact distortion: optimal matchings under a known metric and the
//! adversary's worst consistent metric.

mod adversary;
mod expected;
mod hungarian;
pub mod lp;

pub use adversary::{
    adversarial_distortion, adversarial_distortion_fractional, adversarial_distortion_fractional_with,
    adversarial_distortion_with, select, Adversary, AdversaryOptions, CandidateOutcome, DistortionReport,
    Formulation, OrdinalMode, Payoff, ADVERSARY_CAP,
};
pub use expected::{
    expected_distortion_known_metric, monte_carlo_costs, summarize, ExpectationMode, ExpectedReport,
};
pub use hungarian::{min_cost_assignment, min_cost_matching};
pub use lp::{lp_solve, Constraint, LinearProgram, LpOutcome, Relation, ScaledRows};
