//! Line instance on which the Boston mechanism cascades.
//!
//! One agent sits at 1 and one item at `-ε`; for `t = 1..k-1` there are `t`
//! agents and `t` items at `2^t`. Agents are listed (and prioritised) by
//! their distance to 0; co-located agents have identical lists.

use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::error::{invalid, Result};
use crate::instance::Instance;
use crate::metric::Metric;
use crate::perm::PriorityOrder;
use crate::rational::pow2;

use super::line::{line_instance, Epsilon, LinePoint};

pub const MAX_BOSTON_K: u32 = 40;

#[derive(Debug, Clone)]
pub struct BostonInstance {
    pub instance: Instance,
    pub metric: Metric,
    /// Agents by increasing distance to 0.
    pub priority: PriorityOrder,
}

/// Number of agents for parameter `k`: `1 + k(k-1)/2`.
pub fn boston_size(k: u32) -> usize {
    1 + (k as usize) * (k as usize - 1) / 2
}

pub fn boston_instance(k: u32) -> Result<BostonInstance> {
    boston_instance_with(k, &Epsilon::Zero)
}

pub fn boston_instance_with(k: u32, eps: &Epsilon) -> Result<BostonInstance> {
    if !(2..=MAX_BOSTON_K).contains(&k) {
        return Err(invalid("boston instance needs 2 <= k <= 40"));
    }
    let mut agents = Vec::with_capacity(boston_size(k));
    let mut items = Vec::with_capacity(boston_size(k));
    agents.push(LinePoint::at(crate::rational::Rational::one()));
    items.push(LinePoint::minus_eps(crate::rational::Rational::zero()));
    for t in 1..k {
        for _ in 0..t {
            agents.push(LinePoint::at(pow2(t)));
            items.push(LinePoint::at(pow2(t)));
        }
    }
    let (instance, metric) = line_instance(&agents, &items, eps)?;
    let priority = PriorityOrder::identity(instance.n());
    Ok(BostonInstance {
        instance,
        metric,
        priority,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    #[test]
    fn k2_layout() {
        let b = boston_instance(2).unwrap();
        assert_eq!(b.instance.n(), 2);
        // agent at 1: item at 2 (dist 1) before item at -eps (dist 1 + eps)
        assert_eq!(b.metric.agent_item(0, 0), &int(1));
        assert_eq!(b.metric.agent_item(0, 1), &int(1));
        assert_eq!(b.instance.list(0), &[1, 0]);
        assert_eq!(b.instance.list(1), &[1, 0]);
    }

    #[test]
    fn sizes_and_colocated_lists() {
        for k in 2..=6 {
            let b = boston_instance(k).unwrap();
            assert_eq!(b.instance.n(), boston_size(k));
        }
        let b = boston_instance(4).unwrap();
        // agents 4, 5, 6 sit at 8
        assert_eq!(b.instance.list(4), b.instance.list(5));
        assert_eq!(b.instance.list(5), b.instance.list(6));
        assert!(boston_instance(1).is_err());
    }
}
