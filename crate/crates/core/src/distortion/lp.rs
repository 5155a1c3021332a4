//! Exact linear programming: `maximize c·x` subject to linear rows and
//! `x >= 0`, solved by a two-phase simplex with Bland's rule.
//!
//! The tableau is kept fraction-free: all entries are integers over one
//! shared positive denominator, updated by integer-preserving (Bareiss)
//! pivots. Entries are subdeterminants of the scaled input, so they stay
//! small; the solver runs on `i128` and restarts on `BigInt` if a checked
//! operation overflows.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{invalid, Result};
use crate::rational::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    Le,
    Ge,
    Eq,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Constraint {
    pub coeffs: Vec<(usize, Rational)>,
    pub relation: Relation,
    pub rhs: Rational,
}

impl Constraint {
    pub fn lhs(&self, x: &[Rational]) -> Rational {
        self.coeffs.iter().map(|(v, c)| c * &x[*v]).sum()
    }

    pub fn holds(&self, x: &[Rational]) -> bool {
        let l = self.lhs(x);
        match self.relation {
            Relation::Le => l <= self.rhs,
            Relation::Ge => l >= self.rhs,
            Relation::Eq => l == self.rhs,
        }
    }
}

/// `maximize objective·x` over `x >= 0` and the constraints.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LinearProgram {
    num_vars: usize,
    objective: Vec<(usize, Rational)>,
    constraints: Vec<Constraint>,
}

impl LinearProgram {
    pub fn new(num_vars: usize) -> Self {
        LinearProgram {
            num_vars,
            objective: Vec::new(),
            constraints: Vec::new(),
        }
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn objective(&self) -> &[(usize, Rational)] {
        &self.objective
    }

    pub fn constraints(&self) -> &[Constraint] {
        &self.constraints
    }

    fn check_vars(&self, coeffs: &[(usize, Rational)]) -> Result<()> {
        match coeffs.iter().find(|(v, _)| *v >= self.num_vars) {
            Some((v, _)) => Err(invalid(format!(
                "variable {v} out of range (program has {})",
                self.num_vars
            ))),
            None => Ok(()),
        }
    }

    pub fn set_objective(&mut self, coeffs: Vec<(usize, Rational)>) -> Result<()> {
        self.check_vars(&coeffs)?;
        self.objective = coeffs;
        Ok(())
    }

    pub fn add_constraint(
        &mut self,
        coeffs: Vec<(usize, Rational)>,
        relation: Relation,
        rhs: Rational,
    ) -> Result<()> {
        self.check_vars(&coeffs)?;
        self.constraints.push(Constraint {
            coeffs,
            relation,
            rhs,
        });
        Ok(())
    }

    pub fn evaluate(&self, x: &[Rational]) -> Rational {
        self.objective.iter().map(|(v, c)| c * &x[*v]).sum()
    }

    /// Whether `x` satisfies every row and nonnegativity.
    pub fn is_feasible(&self, x: &[Rational]) -> bool {
        x.len() == self.num_vars
            && x.iter().all(|v| !v.is_negative())
            && self.constraints.iter().all(|c| c.holds(x))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LpOutcome {
    Optimal { value: Rational, x: Vec<Rational> },
    Unbounded,
    Infeasible,
}

/// Scales `coeffs` and `rhs` by the lcm of their denominators.
fn integer_row(coeffs: &[(usize, Rational)], rhs: &Rational, nv: usize, negate: bool) -> (Vec<BigInt>, BigInt) {
    let l = coeffs
        .iter()
        .map(|(_, c)| c.denom().clone())
        .fold(rhs.denom().clone(), |a, d| a.lcm(&d));
    let mut row = vec![<BigInt as Zero>::zero(); nv];
    for (v, c) in coeffs {
        row[*v] += c.numer() * (&l / c.denom());
    }
    let mut b = rhs.numer() * (&l / rhs.denom());
    if negate {
        row.iter_mut().for_each(|x| *x = -&*x);
        b = -b;
    }
    (row, b)
}

fn push_rows(rows: &mut Vec<(Vec<BigInt>, BigInt)>, c: &Constraint, nv: usize) {
    match c.relation {
        Relation::Le => rows.push(integer_row(&c.coeffs, &c.rhs, nv, false)),
        Relation::Ge => rows.push(integer_row(&c.coeffs, &c.rhs, nv, true)),
        Relation::Eq => {
            rows.push(integer_row(&c.coeffs, &c.rhs, nv, false));
            rows.push(integer_row(&c.coeffs, &c.rhs, nv, true));
        }
    }
}

/// The constraint rows of a program, scaled once to integer rows
/// `a·x <= b`, so that many programs sharing them can be solved cheaply.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScaledRows {
    nv: usize,
    rows: Vec<(Vec<BigInt>, BigInt)>,
}

impl ScaledRows {
    /// The constraints of `lp` (its objective is ignored).
    pub fn new(lp: &LinearProgram) -> Self {
        let mut rows = Vec::with_capacity(lp.constraints.len());
        for c in &lp.constraints {
            push_rows(&mut rows, c, lp.num_vars);
        }
        ScaledRows { nv: lp.num_vars, rows }
    }

    /// Solves `maximize objective·x` over these rows plus `extra`.
    pub fn solve(&self, extra: &[Constraint], objective: &[(usize, Rational)]) -> Result<LpOutcome> {
        let mut more = Vec::new();
        for c in extra {
            if c.coeffs.iter().any(|(v, _)| *v >= self.nv) {
                return Err(invalid("extra row refers to an unknown variable"));
            }
            push_rows(&mut more, c, self.nv);
        }
        if objective.iter().any(|(v, _)| *v >= self.nv) {
            return Err(invalid("objective refers to an unknown variable"));
        }
        let zero = Rational::zero();
        let (obj, _) = integer_row(objective, &zero, self.nv, false);
        let scale = objective
            .iter()
            .map(|(_, c)| c.denom().clone())
            .fold(BigInt::one(), |a, d| a.lcm(&d));
        let job = Job {
            nv: self.nv,
            base: &self.rows,
            extra: &more,
            obj,
            scale,
        };
        Ok(job.run())
    }
}

/// One solve: rows `a·x <= b` and an integer objective (the true objective
/// divided by `scale`).
struct Job<'a> {
    nv: usize,
    base: &'a [(Vec<BigInt>, BigInt)],
    extra: &'a [(Vec<BigInt>, BigInt)],
    obj: Vec<BigInt>,
    scale: BigInt,
}

impl Job<'_> {
    fn rows(&self) -> impl Iterator<Item = &(Vec<BigInt>, BigInt)> {
        self.base.iter().chain(self.extra)
    }

    fn m(&self) -> usize {
        self.base.len() + self.extra.len()
    }

    fn run(&self) -> LpOutcome {
        match Tableau::<i128>::build(self).and_then(|t| t.solve(self)) {
            Ok(out) => out,
            Err(Overflow) => self.run_big(),
        }
    }

    fn run_big(&self) -> LpOutcome {
        match Tableau::<BigInt>::build(self).and_then(|t| t.solve(self)) {
            Ok(out) => out,
            Err(Overflow) => unreachable!("BigInt arithmetic does not overflow"),
        }
    }
}

/// Integer arithmetic used by the tableau; `None` signals overflow.
trait Entry: Clone + Ord + Sized {
    fn from_big(b: &BigInt) -> Option<Self>;
    fn to_big(&self) -> BigInt;
    fn zero() -> Self;
    fn neg(&self) -> Option<Self>;
    /// `(a * p - f * g) / d`, the division being exact.
    fn bareiss(a: &Self, p: &Self, f: &Self, g: &Self, d: &Self) -> Option<Self>;
    /// `a * p / d`, exact.
    fn rescale(a: &Self, p: &Self, d: &Self) -> Option<Self>;
    fn mul(&self, o: &Self) -> Option<Self>;
}

impl Entry for i128 {
    fn from_big(b: &BigInt) -> Option<Self> {
        b.to_i128()
    }
    fn to_big(&self) -> BigInt {
        BigInt::from(*self)
    }
    fn zero() -> Self {
        0
    }
    fn neg(&self) -> Option<Self> {
        self.checked_neg()
    }
    fn bareiss(a: &Self, p: &Self, f: &Self, g: &Self, d: &Self) -> Option<Self> {
        let v = a.checked_mul(*p)?.checked_sub(f.checked_mul(*g)?)?;
        Some(if *d == 1 { v } else { v / d })
    }
    fn rescale(a: &Self, p: &Self, d: &Self) -> Option<Self> {
        if *a == 0 {
            return Some(0);
        }
        let v = a.checked_mul(*p)?;
        Some(if *d == 1 { v } else { v / d })
    }
    fn mul(&self, o: &Self) -> Option<Self> {
        self.checked_mul(*o)
    }
}

impl Entry for BigInt {
    fn from_big(b: &BigInt) -> Option<Self> {
        Some(b.clone())
    }
    fn to_big(&self) -> BigInt {
        self.clone()
    }
    fn zero() -> Self {
        Zero::zero()
    }
    fn neg(&self) -> Option<Self> {
        Some(-self)
    }
    fn bareiss(a: &Self, p: &Self, f: &Self, g: &Self, d: &Self) -> Option<Self> {
        Some((a * p - f * g) / d)
    }
    fn rescale(a: &Self, p: &Self, d: &Self) -> Option<Self> {
        Some(a * p / d)
    }
    fn mul(&self, o: &Self) -> Option<Self> {
        Some(self * o)
    }
}

struct Overflow;

/// Condensed tableau. Row `i < m` reads `basic[i] = (t[i][0] - sum_j
/// t[i][j] * nonbasic[j]) / den`; rows `m` and `m + 1` hold the real and the
/// auxiliary objective as `z = (t[o][0] - sum_j t[o][j] * nonbasic[j]) / den`.
/// Column `width - 1` is the auxiliary variable of phase one.
struct Tableau<T> {
    m: usize,
    width: usize,
    t: Vec<T>,
    den: T,
    basic: Vec<usize>,
    nonbasic: Vec<usize>,
}

fn ck<T>(v: Option<T>) -> Result<T, Overflow> {
    v.ok_or(Overflow)
}

impl<T: Entry> Tableau<T> {
    fn build(s: &Job) -> Result<Self, Overflow> {
        let m = s.m();
        let nv = s.nv;
        let width = nv + 2;
        let mut t = vec![T::zero(); (m + 2) * width];
        for (i, (row, b)) in s.rows().enumerate() {
            t[i * width] = ck(T::from_big(b))?;
            for (j, a) in row.iter().enumerate() {
                t[i * width + 1 + j] = ck(T::from_big(a))?;
            }
            t[i * width + width - 1] = ck(T::from_big(&-BigInt::one()))?;
        }
        for (j, c) in s.obj.iter().enumerate() {
            t[m * width + 1 + j] = ck(T::from_big(&-c))?;
        }
        // auxiliary objective: maximize -x0
        t[(m + 1) * width + width - 1] = ck(T::from_big(&BigInt::one()))?;
        let mut nonbasic = vec![usize::MAX; width];
        for (j, slot) in nonbasic.iter_mut().enumerate().skip(1) {
            *slot = j - 1;
        }
        // label nv + m is the auxiliary variable; slacks are nv..nv+m
        nonbasic[width - 1] = nv + m;
        Ok(Tableau {
            m,
            width,
            t,
            den: ck(T::from_big(&BigInt::one()))?,
            basic: (nv..nv + m).collect(),
            nonbasic,
        })
    }

    fn at(&self, i: usize, j: usize) -> &T {
        &self.t[i * self.width + j]
    }

    fn pivot(&mut self, r: usize, s: usize) -> Result<(), Overflow> {
        let w = self.width;
        let p = self.at(r, s).clone();
        let d = self.den.clone();
        let rows = self.m + 2;
        let pivot_row: Vec<T> = self.t[r * w..(r + 1) * w].to_vec();
        for i in 0..rows {
            if i == r {
                continue;
            }
            let f = self.t[i * w + s].clone();
            let row = &mut self.t[i * w..(i + 1) * w];
            if f == T::zero() {
                if p != d {
                    for x in row.iter_mut() {
                        *x = ck(T::rescale(x, &p, &d))?;
                    }
                }
            } else {
                for (j, x) in row.iter_mut().enumerate() {
                    if j != s {
                        *x = ck(T::bareiss(x, &p, &f, &pivot_row[j], &d))?;
                    }
                }
                row[s] = ck(f.neg())?;
            }
        }
        self.t[r * w + s] = d;
        self.den = p;
        core::mem::swap(&mut self.basic[r], &mut self.nonbasic[s]);
        if self.den < T::zero() {
            for x in self.t.iter_mut() {
                *x = ck(x.neg())?;
            }
            self.den = ck(self.den.neg())?;
        }
        Ok(())
    }

    /// Bland's rule on objective row `o`; columns in `skip` never enter.
    /// Returns `false` when the objective is unbounded.
    fn optimize(&mut self, o: usize, skip: Option<usize>) -> Result<bool, Overflow> {
        let zero = T::zero();
        loop {
            let entering = (1..self.width)
                .filter(|&j| Some(j) != skip && *self.at(o, j) < zero)
                .min_by_key(|&j| self.nonbasic[j]);
            let Some(s) = entering else {
                return Ok(true);
            };
            let mut best: Option<usize> = None;
            for i in 0..self.m {
                if *self.at(i, s) <= zero {
                    continue;
                }
                best = Some(match best {
                    None => i,
                    Some(k) => {
                        // compare t[i][0] / t[i][s] with t[k][0] / t[k][s]
                        let lhs = ck(self.at(i, 0).mul(self.at(k, s)))?;
                        let rhs = ck(self.at(k, 0).mul(self.at(i, s)))?;
                        if lhs < rhs || (lhs == rhs && self.basic[i] < self.basic[k]) {
                            i
                        } else {
                            k
                        }
                    }
                });
            }
            let Some(r) = best else {
                return Ok(false);
            };
            self.pivot(r, s)?;
        }
    }

    fn solve(mut self, s: &Job) -> Result<LpOutcome, Overflow> {
        let m = self.m;
        let aux = self.width - 1;
        let zero = T::zero();
        let most_negative = (0..m)
            .filter(|&i| *self.at(i, 0) < zero)
            .min_by(|&a, &b| self.at(a, 0).cmp(self.at(b, 0)).then(a.cmp(&b)));
        if let Some(r) = most_negative {
            self.pivot(r, aux)?;
            self.optimize(m + 1, None)?;
            if *self.at(m + 1, 0) < zero {
                return Ok(LpOutcome::Infeasible);
            }
            let aux_label = s.nv + m;
            if let Some(r) = self.basic.iter().position(|&b| b == aux_label) {
                // degenerate: the auxiliary variable sits at zero in the basis.
                // An all-zero row pins it at zero for good and can stay.
                if let Some(j) = (1..self.width).find(|&j| *self.at(r, j) != zero) {
                    self.pivot(r, j)?;
                }
            }
        }
        let aux_col = self.nonbasic.iter().position(|&l| l == s.nv + m);
        if !self.optimize(m, aux_col)? {
            return Ok(LpOutcome::Unbounded);
        }
        let den = self.den.to_big();
        let mut x = vec![Rational::zero(); s.nv];
        for (i, &b) in self.basic.iter().enumerate() {
            if b < s.nv {
                x[b] = Rational::new(self.at(i, 0).to_big(), den.clone());
            }
        }
        let value = Rational::new(self.at(m, 0).to_big(), &den * &s.scale);
        Ok(LpOutcome::Optimal { value, x })
    }
}

pub fn lp_solve(lp: &LinearProgram) -> LpOutcome {
    ScaledRows::new(lp)
        .solve(&[], &lp.objective)
        .expect("rows were validated when added")
}

/// Solves on the `BigInt` path only; used to cross-check the fast path.
#[cfg(test)]
fn lp_solve_big(lp: &LinearProgram) -> LpOutcome {
    let rows = ScaledRows::new(lp);
    let zero = Rational::zero();
    let (obj, _) = integer_row(&lp.objective, &zero, lp.num_vars, false);
    let scale = lp
        .objective
        .iter()
        .map(|(_, c)| c.denom().clone())
        .fold(BigInt::one(), |a, d| a.lcm(&d));
    Job {
        nv: rows.nv,
        base: &rows.rows,
        extra: &[],
        obj,
        scale,
    }
    .run_big()
}
