//! The adversary's problem: over all metrics consistent with an instance,
//! maximize `cost(M) / cost(OPT)`.
//!
//! For each candidate optimum `M*` the adversary solves
//! `max cost(M)` subject to consistency, the metric conditions and
//! `cost(M*) = 1`; the largest of these values over all `n!` candidates is
//! the distortion. Because every constraint except the normalisation is
//! homogeneous, an unbounded program means some consistent metric has
//! `cost(M*) = 0 < cost(M)`, i.e. infinite distortion.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::error::{invalid, Error, Result};
use crate::fractional::{fractional_cost, FractionalMatching};
use crate::graph::{metric_from_graph, WeightedGraph};
use crate::instance::{consistent, Instance};
use crate::matching::{cost, Matching};
use crate::metric::Metric;
use crate::perm::{permutations, Permutations};
use crate::rational::{Extended, Rational};

use super::hungarian::min_cost_matching;
use super::lp::{Constraint, LinearProgram, LpOutcome, Relation, ScaledRows};

/// Default cap on `n` for the `n!` candidate enumeration.
pub const ADVERSARY_CAP: usize = 6;

/// How the metric conditions are written.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Formulation {
    /// Only agent–item distances are variables; any such table extends to a
    /// metric iff `x[a][b] <= x[a][b'] + x[a'][b'] + x[a'][b]` for all
    /// `a != a'`, `b != b'`. The witness is its shortest-path completion.
    #[default]
    Bipartite,
    /// Every pair of the `2n` points is a variable, with all triangle rows.
    FullMetric,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OrdinalMode {
    /// `d(a, b) <= d(a, b')` whenever `a` lists `b` first.
    #[default]
    Weak,
    /// As `Weak`, plus a margin `delta <= 1` added to every ordinal row and
    /// maximized after the main objective, so the witness separates listed
    /// items wherever the optimum allows.
    Strict,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AdversaryOptions {
    pub formulation: Formulation,
    pub ordinal: OrdinalMode,
    pub cap: usize,
}

impl Default for AdversaryOptions {
    fn default() -> Self {
        AdversaryOptions {
            formulation: Formulation::Bipartite,
            ordinal: OrdinalMode::Weak,
            cap: ADVERSARY_CAP,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistortionReport {
    pub value: Extended,
    pub witness_metric: Metric,
    /// The candidate optimum the value was attained for.
    pub witness_opt: Matching,
    pub mechanism_cost: Rational,
    pub opt_cost: Rational,
    /// Ordinal margin of the witness (strict mode only).
    pub margin: Option<Rational>,
}

/// Result of one candidate's program.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CandidateOutcome {
    Finite {
        value: Rational,
        vars: Vec<Rational>,
        margin: Option<Rational>,
    },
    /// `vars` is a consistent point with `cost(M*) = 0` and payoff 1.
    Infinite {
        vars: Vec<Rational>,
        margin: Option<Rational>,
    },
}

impl CandidateOutcome {
    pub fn value(&self) -> Extended {
        match self {
            CandidateOutcome::Finite { value, .. } => Extended::Finite(value.clone()),
            CandidateOutcome::Infinite { .. } => Extended::Infinite,
        }
    }
}

/// What the mechanism pays, as coefficients on agent–item distances.
#[derive(Debug, Clone, Copy)]
pub enum Payoff<'a> {
    Integral(&'a Matching),
    Fractional(&'a FractionalMatching),
}

/// The adversary's programs for one instance and payoff, sharing the
/// consistency and metric rows across candidates.
#[derive(Debug, Clone)]
pub struct Adversary<'a> {
    inst: &'a Instance,
    payoff: Payoff<'a>,
    opts: AdversaryOptions,
    rows: ScaledRows,
    objective: Vec<(usize, Rational)>,
    delta: Option<usize>,
}

impl<'a> Adversary<'a> {
    pub fn new(inst: &'a Instance, payoff: Payoff<'a>, opts: AdversaryOptions) -> Result<Self> {
        let n = inst.n();
        if n > opts.cap {
            return Err(Error::AboveCap {
                what: "adversarial distortion",
                size: n,
                cap: opts.cap,
                hint: "evaluate against a known metric instead",
            });
        }
        let coeffs: Vec<(usize, usize, Rational)> = match payoff {
            Payoff::Integral(m) => {
                if m.n() != n || !m.is_perfect() {
                    return Err(invalid("matching must be perfect on the instance's agents"));
                }
                m.pairs().map(|(a, b)| (a, b, Rational::one())).collect()
            }
            Payoff::Fractional(p) => {
                if p.n() != n {
                    return Err(invalid("fractional matching has the wrong size"));
                }
                p.require_doubly_stochastic()?;
                p.support().map(|(a, b)| (a, b, p.get(a, b).clone())).collect()
            }
        };
        let mut adv = Adversary {
            inst,
            payoff,
            opts,
            rows: ScaledRows::new(&LinearProgram::new(0)),
            objective: Vec::new(),
            delta: None,
        };
        adv.objective = coeffs.into_iter().map(|(a, b, c)| (adv.var(a, b), c)).collect();
        adv.rows = ScaledRows::new(&adv.base_program()?);
        Ok(adv)
    }

    fn n(&self) -> usize {
        self.inst.n()
    }

    fn metric_vars(&self) -> usize {
        let n = self.n();
        match self.opts.formulation {
            Formulation::Bipartite => n * n,
            Formulation::FullMetric => n * (2 * n - 1),
        }
    }

    /// Variable of the unordered point pair `{u, v}`, `u != v`.
    fn pair(&self, u: usize, v: usize) -> usize {
        let (u, v) = if u < v { (u, v) } else { (v, u) };
        let p = 2 * self.n();
        // pairs (0,1), (0,2), ..., (1,2), ...
        u * p - u * (u + 1) / 2 + (v - u - 1)
    }

    /// Variable holding `d(agent a, item b)`.
    fn var(&self, a: usize, b: usize) -> usize {
        match self.opts.formulation {
            Formulation::Bipartite => a * self.n() + b,
            Formulation::FullMetric => self.pair(a, self.n() + b),
        }
    }

    fn base_program(&mut self) -> Result<LinearProgram> {
        let n = self.n();
        let nv = self.metric_vars();
        let strict = self.opts.ordinal == OrdinalMode::Strict;
        self.delta = strict.then_some(nv);
        let mut lp = LinearProgram::new(nv + usize::from(strict));
        let one = Rational::one;
        let neg = || -Rational::one();
        for a in 0..n {
            for w in self.inst.list(a).windows(2) {
                let mut row = vec![(self.var(a, w[0]), one()), (self.var(a, w[1]), neg())];
                if let Some(d) = self.delta {
                    row.push((d, one()));
                }
                lp.add_constraint(row, Relation::Le, Rational::zero())?;
            }
        }
        if let Some(d) = self.delta {
            lp.add_constraint(vec![(d, one())], Relation::Le, one())?;
        }
        match self.opts.formulation {
            Formulation::Bipartite => {
                for a in 0..n {
                    for b in 0..n {
                        // rows with b2 ranked below b follow from the ordinal
                        // row x[a][b] <= x[a][b2] and nonnegativity
                        for a2 in (0..n).filter(|&x| x != a) {
                            for b2 in (0..n).filter(|&x| self.inst.prefers(a, x, b)) {
                                lp.add_constraint(
                                    vec![
                                        (self.var(a, b), one()),
                                        (self.var(a, b2), neg()),
                                        (self.var(a2, b2), neg()),
                                        (self.var(a2, b), neg()),
                                    ],
                                    Relation::Le,
                                    Rational::zero(),
                                )?;
                            }
                        }
                    }
                }
            }
            Formulation::FullMetric => {
                let p = 2 * n;
                for x in 0..p {
                    for z in x + 1..p {
                        for y in (0..p).filter(|&y| y != x && y != z) {
                            lp.add_constraint(
                                vec![(self.pair(x, z), one()), (self.pair(x, y), neg()), (self.pair(y, z), neg())],
                                Relation::Le,
                                Rational::zero(),
                            )?;
                        }
                    }
                }
            }
        }
        Ok(lp)
    }

    fn normalization(&self, m_star: &[usize]) -> Vec<(usize, Rational)> {
        m_star.iter().enumerate().map(|(a, &b)| (self.var(a, b), Rational::one())).collect()
    }

    /// Candidate optima in the order they are compared.
    pub fn candidates(&self) -> Permutations {
        permutations(self.n())
    }

    fn row(coeffs: Vec<(usize, Rational)>, relation: Relation, rhs: Rational) -> Constraint {
        Constraint {
            coeffs,
            relation,
            rhs,
        }
    }

    /// Solves the program for candidate optimum `m_star` (`m_star[a]` is the
    /// item of agent `a`).
    pub fn solve_candidate(&self, m_star: &[usize]) -> Result<CandidateOutcome> {
        if m_star.len() != self.n() || !crate::perm::is_permutation(m_star) {
            return Err(invalid("candidate optimum must be a permutation"));
        }
        let norm = Self::row(self.normalization(m_star), Relation::Eq, Rational::one());
        match self.rows.solve(core::slice::from_ref(&norm), &self.objective)? {
            LpOutcome::Optimal { value, x } => {
                let (vars, margin) = match self.delta {
                    None => (x, None),
                    Some(d) => {
                        // pin the objective at its optimum, then widen the margin
                        let pin = Self::row(self.objective.clone(), Relation::Ge, value.clone());
                        match self.rows.solve(&[norm, pin], &[(d, Rational::one())])? {
                            LpOutcome::Optimal { value, x } => (x, Some(value)),
                            other => return Err(probe_failed(other)),
                        }
                    }
                };
                Ok(CandidateOutcome::Finite { value, vars, margin })
            }
            LpOutcome::Unbounded => {
                let probe = [
                    Self::row(self.normalization(m_star), Relation::Eq, Rational::zero()),
                    Self::row(self.objective.clone(), Relation::Eq, Rational::one()),
                ];
                let goal: Vec<(usize, Rational)> = self.delta.map(|d| (d, Rational::one())).into_iter().collect();
                match self.rows.solve(&probe, &goal)? {
                    LpOutcome::Optimal { value, x } => Ok(CandidateOutcome::Infinite {
                        vars: x,
                        margin: self.delta.map(|_| value),
                    }),
                    other => Err(probe_failed(other)),
                }
            }
            LpOutcome::Infeasible => {
                // the all-ones table is always feasible after scaling
                Err(invalid("adversary program infeasible; instance rows are contradictory"))
            }
        }
    }

    /// Builds the witness metric from a candidate's variables.
    pub fn witness_metric(&self, vars: &[Rational]) -> Result<Metric> {
        let n = self.n();
        match self.opts.formulation {
            Formulation::Bipartite => {
                let mut g = WeightedGraph::with_points(n);
                for a in 0..n {
                    for b in 0..n {
                        g.add_edge(a, n + b, vars[self.var(a, b)].clone())?;
                    }
                }
                metric_from_graph(&g)
            }
            Formulation::FullMetric => {
                let p = 2 * n;
                let rows = (0..p)
                    .map(|u| {
                        (0..p)
                            .map(|v| if u == v { Rational::zero() } else { vars[self.pair(u, v)].clone() })
                            .collect()
                    })
                    .collect();
                Metric::new(n, rows)
            }
        }
    }

    fn payoff_cost(&self, d: &Metric) -> Result<Rational> {
        match self.payoff {
            Payoff::Integral(m) => cost(m, d),
            Payoff::Fractional(p) => fractional_cost(p, d),
        }
    }

    /// Turns the winning candidate into a report, re-evaluating the ratio on
    /// the witness metric.
    pub fn report(&self, m_star: &[usize], outcome: &CandidateOutcome) -> Result<DistortionReport> {
        let (vars, margin) = match outcome {
            CandidateOutcome::Finite { vars, margin, .. } | CandidateOutcome::Infinite { vars, margin } => {
                (vars, margin.clone())
            }
        };
        let witness_metric = self.witness_metric(vars)?;
        debug_assert!(consistent(self.inst, &witness_metric));
        let mechanism_cost = self.payoff_cost(&witness_metric)?;
        let (_, opt_cost) = min_cost_matching(&witness_metric);
        let value = Extended::ratio(&mechanism_cost, &opt_cost)
            .ok_or_else(|| invalid("witness metric has zero payoff and zero optimum"))?;
        if value != outcome.value() {
            return Err(invalid("witness metric does not reproduce the program value"));
        }
        Ok(DistortionReport {
            value,
            witness_metric,
            witness_opt: Matching::from_permutation(m_star)?,
            mechanism_cost,
            opt_cost,
            margin,
        })
    }

    /// Runs every candidate in order and reports the first maximal one.
    pub fn run(&self) -> Result<DistortionReport> {
        let mut best: Option<(Vec<usize>, CandidateOutcome)> = None;
        for m_star in self.candidates() {
            let out = self.solve_candidate(&m_star)?;
            best = select(best, (m_star, out));
            if matches!(best, Some((_, CandidateOutcome::Infinite { .. }))) {
                break;
            }
        }
        let (m_star, out) = best.expect("at least one candidate");
        self.report(&m_star, &out)
    }
}

fn probe_failed(out: LpOutcome) -> Error {
    invalid(alloc::format!("adversary follow-up program ended {out:?}"))
}

/// Keeps the larger value; on ties, the lexicographically smaller candidate.
pub fn select(
    best: Option<(Vec<usize>, CandidateOutcome)>,
    next: (Vec<usize>, CandidateOutcome),
) -> Option<(Vec<usize>, CandidateOutcome)> {
    match best {
        None => Some(next),
        Some(b) => {
            let (bv, nv) = (b.1.value(), next.1.value());
            if nv > bv || (nv == bv && next.0 < b.0) {
                Some(next)
            } else {
                Some(b)
            }
        }
    }
}

pub fn adversarial_distortion(inst: &Instance, m: &Matching) -> Result<DistortionReport> {
    adversarial_distortion_with(inst, m, &AdversaryOptions::default())
}

pub fn adversarial_distortion_with(
    inst: &Instance,
    m: &Matching,
    opts: &AdversaryOptions,
) -> Result<DistortionReport> {
    Adversary::new(inst, Payoff::Integral(m), *opts)?.run()
}

pub fn adversarial_distortion_fractional(
    inst: &Instance,
    p: &FractionalMatching,
) -> Result<DistortionReport> {
    adversarial_distortion_fractional_with(inst, p, &AdversaryOptions::default())
}

pub fn adversarial_distortion_fractional_with(
    inst: &Instance,
    p: &FractionalMatching,
    opts: &AdversaryOptions,
) -> Result<DistortionReport> {
    Adversary::new(inst, Payoff::Fractional(p), *opts)?.run()
}
