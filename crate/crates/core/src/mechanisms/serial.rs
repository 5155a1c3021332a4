use alloc::format;
use alloc::vec;

use crate::error::{invalid, Result};
use crate::instance::Instance;
use crate::matching::Matching;
use crate::perm::{random_permutation, seeded_rng, PriorityOrder};

/// Lets the first `m` agents of `order` pick, in turn, their favourite item
/// not yet taken. `order` may be any sequence of distinct agents.
pub(crate) fn serial_prefix(inst: &Instance, order: &[usize], m: usize) -> Matching {
    let n = inst.n();
    let mut taken = vec![false; n];
    let mut out = Matching::empty(n);
    for &a in order.iter().take(m) {
        let j = *inst
            .list(a)
            .iter()
            .find(|&&j| !taken[j])
            .expect("fewer agents than items");
        taken[j] = true;
        out.set(a, j);
    }
    out
}

fn check_order(inst: &Instance, order: &PriorityOrder) -> Result<()> {
    if order.len() != inst.n() {
        return Err(invalid(format!(
            "priority order has {} agents, instance has {}",
            order.len(),
            inst.n()
        )));
    }
    Ok(())
}

pub fn serial_dictatorship(inst: &Instance, order: &PriorityOrder) -> Result<Matching> {
    check_order(inst, order)?;
    Ok(serial_prefix(inst, order.as_slice(), inst.n()))
}

/// Serial dictatorship stopped after the first `m` agents of `order`.
pub fn truncated_serial_dictatorship(
    inst: &Instance,
    order: &PriorityOrder,
    m: usize,
) -> Result<Matching> {
    check_order(inst, order)?;
    check_m(inst, m)?;
    Ok(serial_prefix(inst, order.as_slice(), m))
}

fn check_m(inst: &Instance, m: usize) -> Result<()> {
    if m > inst.n() {
        return Err(invalid(format!("m = {m} exceeds n = {}", inst.n())));
    }
    Ok(())
}

/// Random serial dictatorship: a uniform order drawn from `seed`.
pub fn rsd(inst: &Instance, seed: u64) -> Matching {
    let order = random_permutation(inst.n(), &mut seeded_rng(seed));
    serial_prefix(inst, &order, inst.n())
}

/// RSD halted once `m` agents are matched.
pub fn truncated_rsd(inst: &Instance, m: usize, seed: u64) -> Result<Matching> {
    check_m(inst, m)?;
    let order = random_permutation(inst.n(), &mut seeded_rng(seed));
    Ok(serial_prefix(inst, &order, m))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::line_sd_instance;
    use crate::matching::cost;
    use crate::rational::int;
    use alloc::vec::Vec;

    #[test]
    fn single_agent() {
        let inst = Instance::new(vec![vec![0]]).unwrap();
        let m = serial_dictatorship(&inst, &PriorityOrder::identity(1)).unwrap();
        assert_eq!(m.get(0), Some(0));
        assert_eq!(rsd(&inst, 3), m);
    }

    #[test]
    fn identical_lists_follow_the_order() {
        let inst = Instance::new(vec![vec![2, 0, 1]; 3]).unwrap();
        let m = serial_dictatorship(&inst, &PriorityOrder::new(vec![1, 2, 0]).unwrap()).unwrap();
        assert_eq!(m.get(1), Some(2));
        assert_eq!(m.get(2), Some(0));
        assert_eq!(m.get(0), Some(1));
    }

    #[test]
    fn line_instance_cascade() {
        let pi = [1, 2, 0];
        let sigma = [2, 0, 1];
        let (inst, d) = line_sd_instance(3, &pi, &sigma).unwrap();
        let m = serial_dictatorship(&inst, &PriorityOrder::new(pi.to_vec()).unwrap()).unwrap();
        for i in 0..3 {
            assert_eq!(m.get(pi[i]), Some(sigma[i]));
        }
        assert_eq!(cost(&m, &d).unwrap(), int(7));
    }

    #[test]
    fn truncation() {
        let inst = Instance::new(vec![vec![0, 1], vec![0, 1]]).unwrap();
        assert!(truncated_rsd(&inst, 0, 1).unwrap().is_empty());
        assert_eq!(truncated_rsd(&inst, 1, 1).unwrap().len(), 1);
        assert!(truncated_rsd(&inst, 3, 1).is_err());
        let full: Vec<_> = (0..5).map(|s| truncated_rsd(&inst, 2, s).unwrap()).collect();
        let plain: Vec<_> = (0..5).map(|s| rsd(&inst, s)).collect();
        assert_eq!(full, plain);
        assert!(serial_dictatorship(&inst, &PriorityOrder::identity(3)).is_err());
    }
}
