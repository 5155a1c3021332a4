use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use crate::error::{invalid, Result};
use crate::fractional::fractional_cost;
use crate::instance::{consistent, Instance};
use crate::matching::cost;
use crate::mechanisms::{exact_rsd_marginals, Randomized};
use crate::metric::Metric;
use crate::perm::{random_permutation, substream_rng};
use crate::rational::{Extended, Rational};

use super::hungarian::min_cost_matching;

/// Two-sided 95% normal quantile.
const Z95: f64 = 1.959_963_984_540_054;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExpectationMode {
    /// Average over all `n!` agent orders (through exact marginals).
    Exact,
    /// Sample mean over `trials` orders; trial `t` uses sub-stream `t` of
    /// `seed`.
    MonteCarlo { trials: u64, seed: u64 },
}

#[derive(Debug, Clone, PartialEq)]
pub struct ExpectedReport {
    pub expected_cost: Rational,
    pub opt_cost: Rational,
    /// `expected_cost / opt_cost`; `1` when both vanish.
    pub ratio: Extended,
    /// 95% half-width of `ratio` (Monte Carlo only).
    pub half_width: Option<f64>,
}

/// Cost of every trial in `trials`, in order.
pub fn monte_carlo_costs(
    mech: &Randomized,
    inst: &Instance,
    d: &Metric,
    seed: u64,
    trials: core::ops::Range<u64>,
) -> Result<Vec<Rational>> {
    trials
        .map(|t| {
            let order = random_permutation(inst.n(), &mut substream_rng(seed, t));
            cost(&mech.run_with_order(inst, &order)?, d)
        })
        .collect()
}

/// Mean and 95% half-width of the sample mean.
pub fn summarize(costs: &[Rational]) -> Result<(Rational, f64)> {
    if costs.is_empty() {
        return Err(invalid("need at least one trial"));
    }
    let h = costs.len();
    let mean = costs.iter().sum::<Rational>() / Rational::from_integer(BigInt::from(h));
    if h == 1 {
        return Ok((mean, 0.0));
    }
    let m = mean.to_f64().unwrap_or(f64::NAN);
    let ss: f64 = costs
        .iter()
        .map(|c| {
            let x = c.to_f64().unwrap_or(f64::NAN) - m;
            x * x
        })
        .sum();
    let sd = libm::sqrt(ss / (h - 1) as f64);
    Ok((mean, Z95 * sd / libm::sqrt(h as f64)))
}

fn ratio_or_one(num: &Rational, den: &Rational) -> Extended {
    Extended::ratio(num, den).unwrap_or_else(|| Extended::Finite(Rational::from_integer(1.into())))
}

/// `E[cost(M)] / cost(OPT)` under the known metric `d`.
pub fn expected_distortion_known_metric(
    mech: &Randomized,
    inst: &Instance,
    d: &Metric,
    mode: ExpectationMode,
) -> Result<ExpectedReport> {
    if d.n() != inst.n() || !consistent(inst, d) {
        return Err(invalid("metric is not consistent with the instance"));
    }
    let (_, opt_cost) = min_cost_matching(d);
    let (expected_cost, half_width) = match (mech, mode) {
        (Randomized::Deterministic(m), _) => (cost(&m.run(inst)?, d)?, None),
        (_, ExpectationMode::Exact) => {
            let p = exact_rsd_marginals(inst, mech.picks(inst.n()))?;
            (fractional_cost(&p, d)?, None)
        }
        (_, ExpectationMode::MonteCarlo { trials, seed }) => {
            let costs = monte_carlo_costs(mech, inst, d, seed, 0..trials)?;
            let (mean, hw) = summarize(&costs)?;
            (mean, Some(hw))
        }
    };
    let ratio = ratio_or_one(&expected_cost, &opt_cost);
    let half_width = half_width.map(|hw| {
        if opt_cost.is_zero() {
            f64::INFINITY
        } else {
            hw / opt_cost.to_f64().unwrap_or(f64::NAN)
        }
    });
    Ok(ExpectedReport {
        expected_cost,
        opt_cost,
        ratio,
        half_width,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::euclidean_random;
    use crate::mechanisms::{serial_dictatorship, Mechanism};
    use crate::perm::{factorial, permutations, PriorityOrder};
    use crate::rational::{frac, int};
    use alloc::vec;

    #[test]
    fn deterministic_is_single_run() {
        let (inst, d) = euclidean_random(4, 2, 3).unwrap();
        let mech = Randomized::Deterministic(Mechanism::SerialDictatorship(PriorityOrder::identity(4)));
        let r = expected_distortion_known_metric(&mech, &inst, &d, ExpectationMode::Exact).unwrap();
        let m = serial_dictatorship(&inst, &PriorityOrder::identity(4)).unwrap();
        assert_eq!(r.expected_cost, cost(&m, &d).unwrap());
    }

    #[test]
    fn exact_rsd_equals_order_average() {
        let (inst, d) = euclidean_random(4, 2, 8).unwrap();
        let total: Rational = permutations(4)
            .map(|o| cost(&serial_dictatorship(&inst, &PriorityOrder::new(o).unwrap()).unwrap(), &d).unwrap())
            .sum();
        let avg = total / int(factorial(4) as i64);
        let r = expected_distortion_known_metric(&Randomized::Rsd, &inst, &d, ExpectationMode::Exact).unwrap();
        assert_eq!(r.expected_cost, avg);
    }

    #[test]
    fn rsd_within_n_on_random_plane() {
        let (inst, d) = euclidean_random(5, 2, 1).unwrap();
        let r = expected_distortion_known_metric(&Randomized::Rsd, &inst, &d, ExpectationMode::Exact).unwrap();
        assert!(r.ratio <= Extended::Finite(int(5)));
    }

    #[test]
    fn monte_carlo_brackets_exact() {
        let (inst, d) = euclidean_random(5, 2, 4).unwrap();
        let exact = expected_distortion_known_metric(&Randomized::Rsd, &inst, &d, ExpectationMode::Exact).unwrap();
        let mc = expected_distortion_known_metric(
            &Randomized::Rsd,
            &inst,
            &d,
            ExpectationMode::MonteCarlo { trials: 4000, seed: 5 },
        )
        .unwrap();
        let hw = mc.half_width.unwrap();
        assert!(hw > 0.0);
        assert!((mc.ratio.to_f64() - exact.ratio.to_f64()).abs() <= 2.0 * hw);
    }

    #[test]
    fn summary_of_constant_samples() {
        let (mean, hw) = summarize(&alloc::vec![frac(1, 2); 10]).unwrap();
        assert_eq!(mean, frac(1, 2));
        assert_eq!(hw, 0.0);
    }

    #[test]
    fn inconsistent_metric_rejected() {
        let inst = Instance::new(vec![vec![0, 1], vec![0, 1]]).unwrap();
        let d = Metric::from_line(2, &[int(0), int(0), int(5), int(1)]).unwrap();
        assert!(expected_distortion_known_metric(&Randomized::Rsd, &inst, &d, ExpectationMode::Exact).is_err());
    }
}
