//! Matching mechanisms and the marginals of the randomized ones.

mod boston;
mod da;
mod marginals;
mod repmatch;
mod serial;
mod serializable;

use alloc::vec::Vec;

pub use boston::{boston, boston_trace, BostonEvent};
pub use da::{deferred_acceptance, is_stable, item_serial_order, ItemPriorities};
pub use marginals::{
    exact_rsd_marginals, marginals_from_counts, monte_carlo_counts, monte_carlo_marginals,
    EXACT_MARGINALS_CAP,
};
pub use repmatch::{rep_match, rep_match_trace, Merge, RepMatchState};
pub use serial::{rsd, serial_dictatorship, truncated_rsd, truncated_serial_dictatorship};
pub use serializable::{
    serializability_check, serializability_search, serialized_matching, SerializabilityReport,
    EXHAUSTIVE_SERIAL_CAP, SAMPLED_SERIAL_CAP, SERIAL_SAMPLES, SERIAL_SAMPLE_SEED,
};

use crate::error::Result;
use crate::instance::Instance;
use crate::matching::Matching;
use crate::perm::PriorityOrder;

/// A deterministic mechanism with its parameters fixed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Mechanism {
    SerialDictatorship(PriorityOrder),
    RepMatch,
    DeferredAcceptance(ItemPriorities),
    Boston(PriorityOrder),
}

impl Mechanism {
    pub fn run(&self, inst: &Instance) -> Result<Matching> {
        match self {
            Mechanism::SerialDictatorship(o) => serial_dictatorship(inst, o),
            Mechanism::RepMatch => Ok(rep_match(inst)),
            Mechanism::DeferredAcceptance(p) => deferred_acceptance(inst, p),
            Mechanism::Boston(o) => boston(inst, o),
        }
    }
}

/// A mechanism whose output may depend on a uniformly random agent order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Randomized {
    Deterministic(Mechanism),
    Rsd,
    /// RSD halted after `m` matches.
    TruncatedRsd(usize),
}

impl Randomized {
    /// Number of agents matched by a run on `n` agents.
    pub fn picks(&self, n: usize) -> usize {
        match self {
            Randomized::TruncatedRsd(m) => *m,
            _ => n,
        }
    }

    /// The outcome for a given agent order (ignored when deterministic).
    pub fn run_with_order(&self, inst: &Instance, order: &[usize]) -> Result<Matching> {
        match self {
            Randomized::Deterministic(m) => m.run(inst),
            Randomized::Rsd => Ok(serial::serial_prefix(inst, order, inst.n())),
            Randomized::TruncatedRsd(m) => {
                if *m > inst.n() {
                    return Err(crate::error::invalid("m exceeds n"));
                }
                Ok(serial::serial_prefix(inst, order, *m))
            }
        }
    }

    pub fn run(&self, inst: &Instance, seed: u64) -> Result<Matching> {
        let order: Vec<usize> =
            crate::perm::random_permutation(inst.n(), &mut crate::perm::seeded_rng(seed));
        self.run_with_order(inst, &order)
    }
}
