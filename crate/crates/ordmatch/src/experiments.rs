//! The reproducible experiments behind `ordmatch reproduce`. Each one runs a
//! pipeline at the configured sizes and checks its bound exactly.

use std::collections::BTreeMap;
use std::fmt::Display;
use std::str::FromStr;
use std::time::Instant;

use anyhow::{anyhow, bail, Context, Result};
use ordmatch_core::distortion::{adversarial_distortion, min_cost_matching, Adversary, AdversaryOptions, Payoff};
use ordmatch_core::generators::{
    boston_instance, euclidean_random, line_sd_instance, tree_adversary_metric, tree_instance, unlucky_walk,
    unlucky_walk_fractional,
};
use ordmatch_core::mechanisms::{
    boston, deferred_acceptance, exact_rsd_marginals, item_serial_order, rep_match, serial_dictatorship,
    serializability_check, ItemPriorities,
};
use ordmatch_core::perm::{permutations, random_permutation, substream_rng};
use ordmatch_core::rational::{format_rational, frac, int, parse_rational, pow2};
use ordmatch_core::thin::{bvn_decompose, cut_ratio, cut_values, cycle_counterexample, hall_round, thinness};
use ordmatch_core::{
    consistent, cost, fractional_cost, Extended, FractionalMatching, Instance, Matching, PriorityOrder, Rational,
};
use rand::Rng;

use crate::config::Config;
use crate::parallel;
use crate::records::ReproductionRecord;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ExperimentId {
    SdLine,
    TreeDet,
    TreeFrac,
    RepmatchBound,
    TrsdBound,
    Boston,
    ThinCycle,
    HallRound,
    DaSerializable,
}

impl ExperimentId {
    pub const ALL: [ExperimentId; 9] = [
        ExperimentId::SdLine,
        ExperimentId::TreeDet,
        ExperimentId::TreeFrac,
        ExperimentId::RepmatchBound,
        ExperimentId::TrsdBound,
        ExperimentId::Boston,
        ExperimentId::ThinCycle,
        ExperimentId::HallRound,
        ExperimentId::DaSerializable,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ExperimentId::SdLine => "sd-line",
            ExperimentId::TreeDet => "tree-det",
            ExperimentId::TreeFrac => "tree-frac",
            ExperimentId::RepmatchBound => "repmatch-bound",
            ExperimentId::TrsdBound => "trsd-bound",
            ExperimentId::Boston => "boston",
            ExperimentId::ThinCycle => "thin-cycle",
            ExperimentId::HallRound => "hall-round",
            ExperimentId::DaSerializable => "da-serializable",
        }
    }

    /// Whether the experiment draws random inputs and so needs a seed.
    /// `tree-det` only samples beyond the exhaustive depth.
    pub fn randomized(self, cfg: &Config, ov: &Overrides) -> bool {
        match self {
            ExperimentId::SdLine | ExperimentId::Boston | ExperimentId::ThinCycle => false,
            ExperimentId::TreeDet => tree_det_ks(cfg, ov).any(|k| k > cfg.tree_det.exhaustive_k),
            _ => true,
        }
    }
}

impl Display for ExperimentId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ExperimentId {
    type Err = anyhow::Error;

    fn from_str(s: &str) -> Result<Self> {
        ExperimentId::ALL
            .into_iter()
            .find(|e| e.name() == s)
            .ok_or_else(|| {
                let names: Vec<_> = ExperimentId::ALL.iter().map(|e| e.name()).collect();
                anyhow!("unknown experiment {s:?}; expected one of {}", names.join(", "))
            })
    }
}

/// Command-line narrowing of the configured sizes.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Overrides {
    /// Run a single `n` instead of the configured range.
    pub n: Option<usize>,
    /// Run a single `k` (for `boston`, the largest `k`).
    pub k: Option<u32>,
    pub seed: Option<u64>,
}

/// Accumulates parameters and measured values for a record.
#[derive(Default)]
struct Rec {
    params: BTreeMap<String, String>,
    measured: BTreeMap<String, String>,
}

impl Rec {
    fn param(&mut self, k: impl Into<String>, v: impl Display) {
        self.params.insert(k.into(), v.to_string());
    }

    fn measure(&mut self, k: impl Into<String>, v: impl Display) {
        self.measured.insert(k.into(), v.to_string());
    }

    fn measure_q(&mut self, k: impl Into<String>, v: &Rational) {
        self.measure(k, format_rational(v));
    }
}

/// Runs one experiment and times it.
pub fn reproduce(id: ExperimentId, cfg: &Config, ov: &Overrides) -> Result<ReproductionRecord> {
    if id.randomized(cfg, ov) && ov.seed.is_none() {
        bail!("experiment {id} draws random inputs; pass --seed");
    }
    let pool = parallel::pool()?;
    let start = Instant::now();
    let mut rec = Rec::default();
    if let Some(s) = ov.seed {
        rec.param("seed", s);
    }
    let seed = ov.seed.unwrap_or(0);
    let (bound, passed) = match id {
        ExperimentId::SdLine => sd_line(cfg, ov, &pool, &mut rec)?,
        ExperimentId::TreeDet => tree_det(cfg, ov, seed, &pool, &mut rec)?,
        ExperimentId::TreeFrac => tree_frac(cfg, ov, seed, &pool, &mut rec)?,
        ExperimentId::RepmatchBound => repmatch_bound(cfg, ov, seed, &pool, &mut rec)?,
        ExperimentId::TrsdBound => trsd_bound(cfg, ov, seed, &pool, &mut rec)?,
        ExperimentId::Boston => boston_cascade(cfg, ov, &mut rec)?,
        ExperimentId::ThinCycle => thin_cycle(cfg, ov, &mut rec)?,
        ExperimentId::HallRound => hall_rounding(cfg, ov, seed, &pool, &mut rec)?,
        ExperimentId::DaSerializable => da_serializable(cfg, ov, seed, &pool, &mut rec)?,
    };
    Ok(ReproductionRecord {
        id: id.name().to_string(),
        params: rec.params,
        measured: rec.measured,
        bound: bound.to_string(),
        passed,
        wall_clock_ms: start.elapsed().as_millis() as u64,
    })
}

/// Adversarial distortion with the candidate programs spread over the pool;
/// the winner is picked in candidate order, as in the sequential run.
pub fn adversarial_parallel(
    pool: &rayon::ThreadPool,
    inst: &Instance,
    payoff: Payoff<'_>,
    opts: AdversaryOptions,
) -> Result<ordmatch_core::distortion::DistortionReport> {
    let adv = Adversary::new(inst, payoff, opts)?;
    let cands: Vec<Vec<usize>> = adv.candidates().collect();
    let outs = parallel::map(pool, &cands, |c| adv.solve_candidate(c));
    let mut best = None;
    for (c, o) in cands.into_iter().zip(outs) {
        best = ordmatch_core::distortion::select(best, (c, o?));
    }
    let (m, o) = best.context("no candidate optima")?;
    Ok(adv.report(&m, &o)?)
}

/// Sub-stream index for item `i` of part `part`.
fn stream(part: u64, i: u64) -> u64 {
    (part << 40) | i
}

fn random_instance<R: Rng>(n: usize, rng: &mut R) -> Instance {
    Instance::new((0..n).map(|_| random_permutation(n, rng)).collect()).expect("random lists are permutations")
}

/// Doubly stochastic matrix mixing up to `n + 2` random permutations with
/// random integer weights.
pub fn random_bvn_mixture<R: Rng>(n: usize, rng: &mut R) -> FractionalMatching {
    let terms = rng.gen_range(1..=n + 2);
    let raw: Vec<(i64, Vec<usize>)> = (0..terms)
        .map(|_| (rng.gen_range(1..=100), random_permutation(n, rng)))
        .collect();
    let total: i64 = raw.iter().map(|t| t.0).sum();
    let terms: Vec<(Rational, Matching)> = raw
        .into_iter()
        .map(|(w, p)| (frac(w, total), Matching::from_permutation(&p).expect("permutation")))
        .collect();
    FractionalMatching::mixture(n, &terms).expect("mixture of perfect matchings")
}

fn ks(min: u32, max: u32, single: Option<u32>) -> std::ops::RangeInclusive<u32> {
    match single {
        Some(k) => k..=k,
        None => min..=max,
    }
}

fn ns(min: usize, max: usize, single: Option<usize>) -> std::ops::RangeInclusive<usize> {
    match single {
        Some(n) => n..=n,
        None => min..=max,
    }
}

fn tree_det_ks(cfg: &Config, ov: &Overrides) -> std::ops::RangeInclusive<u32> {
    ks(cfg.tree_det.k_min, cfg.tree_det.k_max, ov.k)
}

fn sd_line(cfg: &Config, ov: &Overrides, pool: &rayon::ThreadPool, rec: &mut Rec) -> Result<(&'static str, bool)> {
    let c = &cfg.sd_line;
    let range = ns(c.n_min, c.n_max, ov.n);
    rec.param("n", format!("{}..={}", range.start(), range.end()));
    rec.param("oracle_max", c.oracle_max);
    let mut ok = true;
    for n in range {
        let id: Vec<usize> = (0..n).collect();
        let (inst, d) = line_sd_instance(n, &id, &id)?;
        let m = serial_dictatorship(&inst, &PriorityOrder::identity(n))?;
        let target = pow2(n as u32) - int(1);
        let c_m = cost(&m, &d)?;
        let (_, opt) = min_cost_matching(&d);
        ok &= c_m == target && opt == int(1);
        rec.measure_q(format!("cost_n{n}"), &c_m);
        rec.measure_q(format!("opt_n{n}"), &opt);
        if n <= c.oracle_max {
            let r = adversarial_parallel(pool, &inst, Payoff::Integral(&m), AdversaryOptions::default())?;
            ok &= r.value == Extended::Finite(target);
            rec.measure(format!("distortion_n{n}"), r.value.to_text());
        }
    }
    Ok(("SD cost = adversarial distortion = 2^n - 1 with OPT = 1", ok))
}

fn tree_det(
    cfg: &Config,
    ov: &Overrides,
    seed: u64,
    pool: &rayon::ThreadPool,
    rec: &mut Rec,
) -> Result<(&'static str, bool)> {
    let c = &cfg.tree_det;
    let range = tree_det_ks(cfg, ov);
    rec.param("k", format!("{}..={}", range.start(), range.end()));
    rec.param("exhaustive_k", c.exhaustive_k);
    rec.param("samples", c.samples);
    let mut ok = true;
    for k in range {
        let t = tree_instance(k)?;
        let n = t.n();
        let matchings: Vec<Vec<usize>> = if k <= c.exhaustive_k {
            permutations(n).collect()
        } else {
            (0..c.samples)
                .map(|i| random_permutation(n, &mut substream_rng(seed, stream(u64::from(k), i))))
                .collect()
        };
        // one adversary metric per agent, shared by every matching
        let metrics = (0..n).map(|a| tree_adversary_metric(&t, a)).collect::<Result<Vec<_>, _>>()?;
        let opts: Vec<Rational> = metrics.iter().map(|d| min_cost_matching(d).1).collect();
        let all_consistent = metrics.iter().all(|d| consistent(t.instance(), d));
        let costs = parallel::map(pool, &matchings, |p| -> Result<(Rational, usize)> {
            let m = Matching::from_permutation(p)?;
            let a = unlucky_walk(&t, &m)?.chosen_agent;
            Ok((cost(&m, &metrics[a])?, a))
        });
        let mut min_cost: Option<Rational> = None;
        for r in costs {
            let (cm, a) = r?;
            ok &= opts[a] == int(1);
            if min_cost.as_ref().map_or(true, |b| cm < *b) {
                min_cost = Some(cm);
            }
        }
        let min_cost = min_cost.context("no matchings")?;
        ok &= all_consistent && min_cost >= int(2 * i64::from(k) + 1);
        rec.measure(format!("matchings_k{k}"), matchings.len());
        rec.measure_q(format!("min_cost_k{k}"), &min_cost);
        rec.measure(format!("consistent_k{k}"), all_consistent);
    }
    Ok(("cost under the walk's metric >= 2k + 1 with OPT = 1", ok))
}

fn tree_frac(
    cfg: &Config,
    ov: &Overrides,
    seed: u64,
    pool: &rayon::ThreadPool,
    rec: &mut Rec,
) -> Result<(&'static str, bool)> {
    let c = &cfg.tree_frac;
    let range = ks(c.k_min, c.k_max, ov.k);
    rec.param("k", format!("{}..={}", range.start(), range.end()));
    rec.param("mixtures", c.mixtures);
    let mut ok = true;
    for k in range {
        let t = tree_instance(k)?;
        let n = t.n();
        let mut ps = vec![exact_rsd_marginals(t.instance(), n)?];
        ps.extend((0..c.mixtures).map(|i| random_bvn_mixture(n, &mut substream_rng(seed, stream(u64::from(k), i)))));
        let costs = parallel::map(pool, &ps, |p| -> Result<Rational> {
            let a = unlucky_walk_fractional(&t, p)?.chosen_agent;
            Ok(fractional_cost(p, &tree_adversary_metric(&t, a)?)?)
        });
        let costs = costs.into_iter().collect::<Result<Vec<_>>>()?;
        let min = costs.iter().min().context("no fractional matchings")?;
        ok &= *min >= int(i64::from(k) + 1);
        rec.measure_q(format!("rsd_cost_k{k}"), &costs[0]);
        rec.measure_q(format!("min_cost_k{k}"), min);
    }
    Ok(("fractional cost under the walk's metric >= k + 1", ok))
}

fn repmatch_bound(
    cfg: &Config,
    ov: &Overrides,
    seed: u64,
    pool: &rayon::ThreadPool,
    rec: &mut Rec,
) -> Result<(&'static str, bool)> {
    let c = &cfg.repmatch_bound;
    let range = ns(1, c.n_max, ov.n);
    rec.param("n", format!("{}..={}", range.start(), range.end()));
    rec.param("random_instances", c.random_instances);
    rec.param("line_instances", c.line_instances);
    rec.param("tree_instances", c.tree_instances);
    let sizes: Vec<usize> = range.clone().collect();
    let mut corpus: Vec<Instance> = (0..c.random_instances)
        .map(|i| {
            let n = sizes[i as usize % sizes.len()];
            random_instance(n, &mut substream_rng(seed, i))
        })
        .collect();
    let random_count = corpus.len();
    if c.line_instances {
        for &n in &sizes {
            let all: Vec<Vec<usize>> = permutations(n).collect();
            for pi in &all {
                for sigma in &all {
                    corpus.push(line_sd_instance(n, pi, sigma)?.0);
                }
            }
        }
    }
    let line_count = corpus.len() - random_count;
    if c.tree_instances {
        for k in 1..usize::BITS {
            let n = 1usize << k;
            if n > *range.end() {
                break;
            }
            if n >= *range.start() {
                corpus.push(tree_instance(k)?.instance().clone());
            }
        }
    }
    rec.measure("random_instances", random_count);
    rec.measure("line_instances", line_count);
    rec.measure("tree_instances", corpus.len() - random_count - line_count);
    let values = parallel::map(pool, &corpus, |inst| -> Result<Extended> {
        Ok(adversarial_distortion(inst, &rep_match(inst))?.value)
    });
    let mut worst: BTreeMap<usize, Extended> = BTreeMap::new();
    let mut ok = true;
    for (inst, v) in corpus.iter().zip(values) {
        let v = v?;
        let n = inst.n();
        ok &= v <= Extended::Finite(int(2 * (n * n) as i64));
        let w = worst.entry(n).or_insert_with(|| Extended::Finite(int(0)));
        if v > *w {
            *w = v;
        }
    }
    for (n, w) in worst {
        rec.measure(format!("max_distortion_n{n}"), w.to_text());
    }
    Ok(("adversarial distortion of RepMatch <= 2n^2", ok))
}

fn trsd_bound(
    cfg: &Config,
    ov: &Overrides,
    seed: u64,
    pool: &rayon::ThreadPool,
    rec: &mut Rec,
) -> Result<(&'static str, bool)> {
    let c = &cfg.trsd_bound;
    let range = ns(1, c.n_max, ov.n);
    rec.param("n", format!("{}..={}", range.start(), range.end()));
    rec.param("pairs", c.pairs);
    let mut ok = true;
    for n in range {
        let jobs: Vec<u64> = (0..c.pairs).collect();
        let results = parallel::map(pool, &jobs, |&t| -> Result<(bool, Option<Rational>)> {
            let mut rng = substream_rng(seed, stream(n as u64, t));
            let dim = 1 + (t % 3) as usize;
            let (inst, d) = euclidean_random(n, dim, rng.gen())?;
            let (_, opt) = min_cost_matching(&d);
            let mut good = true;
            let mut worst: Option<Rational> = None;
            for m in 1..=n {
                let e = fractional_cost(&exact_rsd_marginals(&inst, m)?, &d)?;
                let bound = frac(m as i64, (n + 1 - m) as i64) * &opt;
                good &= e <= bound;
                if bound != int(0) {
                    let r = e / bound;
                    if worst.as_ref().map_or(true, |w| r > *w) {
                        worst = Some(r);
                    }
                }
            }
            Ok((good, worst))
        });
        let mut worst: Option<Rational> = None;
        for r in results {
            let (good, w) = r?;
            ok &= good;
            if let Some(w) = w {
                if worst.as_ref().map_or(true, |b| w > *b) {
                    worst = Some(w);
                }
            }
        }
        if let Some(w) = worst {
            rec.measure_q(format!("max_ratio_to_bound_n{n}"), &w);
        }
    }
    Ok(("exact E[cost] of TruncatedRSD(m) <= m/(n+1-m) * OPT for every m", ok))
}

fn boston_cascade(cfg: &Config, ov: &Overrides, rec: &mut Rec) -> Result<(&'static str, bool)> {
    let c = &cfg.boston;
    let k_max = ov.k.unwrap_or(c.k_max);
    let (gmin, gmax) = (parse_rational(&c.growth_min)?, parse_rational(&c.growth_max)?);
    rec.param("k", format!("{}..={}", c.k_min, k_max));
    rec.param("growth_min", &c.growth_min);
    rec.param("growth_max", &c.growth_max);
    let mut ok = true;
    let mut prev: Option<Rational> = None;
    for k in c.k_min..=k_max {
        let b = boston_instance(k)?;
        let m = boston(&b.instance, &b.priority)?;
        let cm = cost(&m, &b.metric)?;
        let (_, opt) = min_cost_matching(&b.metric);
        ok &= opt == int(1) && cm >= pow2(k - 1);
        rec.measure_q(format!("cost_k{k}"), &cm);
        rec.measure_q(format!("opt_k{k}"), &opt);
        if let Some(p) = prev {
            let g = &cm / p;
            ok &= g >= gmin && g <= gmax;
            rec.measure_q(format!("growth_k{k}"), &g);
        }
        prev = Some(cm);
    }
    Ok(("OPT = 1, cost >= 2^(k-1), consecutive growth within [growth_min, growth_max]", ok))
}

fn thin_cycle(cfg: &Config, ov: &Overrides, rec: &mut Rec) -> Result<(&'static str, bool)> {
    let c = &cfg.thin_cycle;
    let range = ns(c.k_min, c.k_max, ov.k.map(|k| k as usize));
    rec.param("k", format!("{}..={}", range.start(), range.end()));
    rec.param("q", c.q.join(","));
    rec.param("copies", c.copies);
    let half = frac(1, 2);
    let mut ok = true;
    for k in range {
        for qs in &c.q {
            let q = parse_rational(qs)?;
            let ce = cycle_counterexample(k, &q, c.copies)?;
            let tag = format!("k{k}_q{}", format_rational(&q));
            let (m, cut, expect) = if q == half {
                (&ce.m_even, &ce.cut_even, int(2))
            } else {
                (&ce.m_odd, &ce.cut_odd, int(1) / &q)
            };
            let ratio = cut_ratio(&ce.p, m, cut)?.context("distinguished cut carries weight")?;
            ok &= ratio == Extended::Finite(expect);
            rec.measure(format!("cut_ratio_{tag}"), ratio.to_text());
            if q == half {
                // the other matching misses the cut entirely
                let (c0, w) = cut_values(&ce.p, &ce.m_odd, cut)?;
                ok &= c0 == 0 && w == int((k * c.copies) as i64);
                rec.measure(format!("cut_values_{tag}"), format!("0,{}", 2 * k * c.copies));
            }
            if 4 * k <= ordmatch_core::thin::CUT_POINTS_CAP {
                rec.measure(format!("thinness_{tag}"), thinness(&ce.p, m)?.beta.to_text());
            }
        }
    }
    let four = cycle_counterexample(1, &half, 1)?;
    let dec = bvn_decompose(&four.p)?;
    let expect = vec![(half.clone(), four.m_odd.clone()), (half, four.m_even.clone())];
    ok &= dec.terms == expect;
    rec.measure(
        "bvn_four_cycle",
        dec.terms.iter().map(|(w, _)| format_rational(w)).collect::<Vec<_>>().join(","),
    );
    Ok(("distinguished cut ratio 2 at q = 1/2 and 1/q otherwise; 4-cycle BvN = 1/2 M_odd + 1/2 M_even", ok))
}

fn hall_rounding(
    cfg: &Config,
    ov: &Overrides,
    seed: u64,
    pool: &rayon::ThreadPool,
    rec: &mut Rec,
) -> Result<(&'static str, bool)> {
    let c = &cfg.hall_round;
    let sizes: Vec<usize> = ns(1, c.n_max, ov.n).collect();
    rec.param("n", format!("{}..={}", sizes[0], sizes[sizes.len() - 1]));
    rec.param("matrices", c.matrices);
    rec.param("metrics", c.metrics);
    let jobs: Vec<u64> = (0..c.matrices).collect();
    let results = parallel::map(pool, &jobs, |&i| -> Result<(bool, Rational)> {
        let n = sizes[i as usize % sizes.len()];
        let mut rng = substream_rng(seed, i);
        let p = random_bvn_mixture(n, &mut rng);
        let m = hall_round(&p)?;
        let n2 = int((n * n) as i64);
        let t = int(1) / &n2;
        let mut good = m.is_perfect() && m.pairs().all(|(a, b)| *p.get(a, b) >= t);
        let mut worst = int(0);
        for j in 0..c.metrics {
            let (_, d) = euclidean_random(n, 1 + (j % 3) as usize, rng.gen())?;
            let (cm, fc) = (cost(&m, &d)?, fractional_cost(&p, &d)?);
            good &= cm <= &n2 * &fc;
            if fc != int(0) {
                worst = worst.max(cm / (&n2 * fc));
            }
        }
        Ok((good, worst))
    });
    let mut ok = true;
    let mut worst = int(0);
    for r in results {
        let (good, w) = r?;
        ok &= good;
        worst = worst.max(w);
    }
    rec.measure_q("max_cost_over_n2_fractional", &worst);
    Ok(("hall_round succeeds and cost <= n^2 * fractional cost on every metric", ok))
}

fn da_serializable(
    cfg: &Config,
    ov: &Overrides,
    seed: u64,
    pool: &rayon::ThreadPool,
    rec: &mut Rec,
) -> Result<(&'static str, bool)> {
    let c = &cfg.da_serializable;
    let range = ns(1, c.n_max, ov.n);
    rec.param("n", format!("{}..={}", range.start(), range.end()));
    rec.param("profiles", c.profiles);
    let jobs: Vec<(usize, u64)> = range.clone().flat_map(|n| (0..c.profiles).map(move |t| (n, t))).collect();
    let results = parallel::map(pool, &jobs, |&(n, t)| -> Result<(bool, bool)> {
        let mut rng = substream_rng(seed, stream(n as u64, t));
        let items = ItemPriorities::new((0..n).map(|_| random_permutation(n, &mut rng)).collect())?;
        let pi = item_serial_order(&items);
        let sigma: Vec<usize> = (0..n).collect();
        let da = |inst: &Instance| deferred_acceptance(inst, &items);
        let serial = serializability_check(da, &pi, &sigma, n)?;
        let (inst, d) = line_sd_instance(n, &pi, &sigma)?;
        let cm = cost(&da(&inst)?, &d)?;
        let (_, opt) = min_cost_matching(&d);
        Ok((serial, cm == pow2(n as u32) - int(1) && opt == int(1)))
    });
    let mut ok = true;
    let (mut serial_pass, mut cost_pass) = (0usize, 0usize);
    for r in results {
        let (s, c2) = r?;
        serial_pass += usize::from(s);
        cost_pass += usize::from(c2);
        ok &= s && c2;
    }
    rec.measure("profiles_checked", jobs.len());
    rec.measure("serializable", serial_pass);
    rec.measure("line_cost_2n_minus_1", cost_pass);
    Ok(("DA with item priorities serializes (pi = items' SD order, sigma = id); line cost 2^n - 1", ok))
}
