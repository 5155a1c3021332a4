//! Instances on the real line, including the serial-dictatorship lower bound.

use alloc::format;
use alloc::vec::Vec;

use num_traits::{Signed, Zero};

use crate::error::{invalid, Result};
use crate::instance::{prefs_from_metric, Instance};
use crate::metric::Metric;
use crate::perm::{inverse, is_permutation};
use crate::rational::{pow2, Rational};

/// How the small offset `ε` in the line constructions is realised.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub enum Epsilon {
    /// `ε = 0` in the metric, with preferences ordered as for an
    /// infinitesimally small positive `ε`.
    #[default]
    Zero,
    /// An explicit positive `ε`; preferences follow the exact distances.
    Value(Rational),
}

/// A point `base + eps_coeff * ε` on the line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct LinePoint {
    pub base: Rational,
    pub eps_coeff: i64,
}

impl LinePoint {
    pub fn at(base: Rational) -> Self {
        LinePoint { base, eps_coeff: 0 }
    }

    pub fn minus_eps(base: Rational) -> Self {
        LinePoint { base, eps_coeff: -1 }
    }
}

/// `|x - y|` as `(base, eps_coeff)`, taking the sign from the base unless
/// the bases coincide.
fn symbolic_distance(x: &LinePoint, y: &LinePoint) -> (Rational, i64) {
    let base = &x.base - &y.base;
    let coeff = x.eps_coeff - y.eps_coeff;
    let negative = base.is_negative() || (base.is_zero() && coeff < 0);
    if negative {
        (-base, -coeff)
    } else {
        (base, coeff)
    }
}

/// Builds `(Instance, Metric)` from agent and item positions on the line.
/// Under [`Epsilon::Zero`] each list orders items by symbolic distance and
/// then by index.
pub(crate) fn line_instance(
    agents: &[LinePoint],
    items: &[LinePoint],
    eps: &Epsilon,
) -> Result<(Instance, Metric)> {
    let n = agents.len();
    if n == 0 || items.len() != n {
        return Err(invalid("line instance needs n agents and n items"));
    }
    let resolve = |p: &LinePoint| match eps {
        Epsilon::Zero => p.base.clone(),
        Epsilon::Value(e) => &p.base + e * Rational::from_integer(p.eps_coeff.into()),
    };
    let positions: Vec<Rational> = agents.iter().chain(items).map(resolve).collect();
    let metric = Metric::from_line(n, &positions)?;
    let instance = match eps {
        Epsilon::Value(_) => prefs_from_metric(&metric),
        Epsilon::Zero => {
            let prefs = agents
                .iter()
                .map(|a| {
                    let keys: Vec<_> = items.iter().map(|b| symbolic_distance(a, b)).collect();
                    let mut order: Vec<usize> = (0..n).collect();
                    order.sort_by(|&x, &y| {
                        keys[x]
                            .0
                            .cmp(&keys[y].0)
                            .then(keys[x].1.cmp(&keys[y].1))
                            .then(x.cmp(&y))
                    });
                    order
                })
                .collect();
            Instance::new(prefs)?
        }
    };
    Ok((instance, metric))
}

fn check_eps(eps: &Epsilon) -> Result<()> {
    match eps {
        Epsilon::Value(e) if !e.is_positive() => Err(invalid("explicit epsilon must be positive")),
        _ => Ok(()),
    }
}

/// Serial-dictatorship hard instance with `ε = 0`: agent `pi[i]` sits at
/// `2^i`, item `sigma[i]` at `2^(i+1)` for `i < n-1`, and item `sigma[n-1]`
/// at `-ε`. Agent `pi[i]` ranks `sigma[i]` ahead of every `sigma[j]`, `j > i`.
pub fn line_sd_instance(n: usize, pi: &[usize], sigma: &[usize]) -> Result<(Instance, Metric)> {
    line_sd_instance_with(n, pi, sigma, &Epsilon::Zero)
}

pub fn line_sd_instance_with(
    n: usize,
    pi: &[usize],
    sigma: &[usize],
    eps: &Epsilon,
) -> Result<(Instance, Metric)> {
    check_eps(eps)?;
    if n == 0 || n > 62 {
        return Err(invalid("line instance needs 1 <= n <= 62"));
    }
    if pi.len() != n || sigma.len() != n || !is_permutation(pi) || !is_permutation(sigma) {
        return Err(invalid(format!("pi and sigma must be permutations of 0..{n}")));
    }
    let pi_pos = inverse(pi);
    let sigma_pos = inverse(sigma);
    let agents: Vec<LinePoint> = (0..n)
        .map(|a| LinePoint::at(pow2(pi_pos[a] as u32)))
        .collect();
    let items: Vec<LinePoint> = (0..n)
        .map(|b| {
            let i = sigma_pos[b];
            if i + 1 == n {
                LinePoint::minus_eps(Rational::zero())
            } else {
                LinePoint::at(pow2(i as u32 + 1))
            }
        })
        .collect();
    line_instance(&agents, &items, eps)
}

/// Whether `a_{pi[i]}` ranks `b_{sigma[i]}` ahead of `b_{sigma[j]}` for all
/// `i < j`.
pub fn serial_hypothesis_holds(inst: &Instance, pi: &[usize], sigma: &[usize]) -> bool {
    let n = inst.n();
    pi.len() == n
        && sigma.len() == n
        && (0..n).all(|i| (i + 1..n).all(|j| inst.prefers(pi[i], sigma[i], sigma[j])))
}
