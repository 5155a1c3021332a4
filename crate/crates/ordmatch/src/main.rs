use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use ordmatch::experiments::{adversarial_parallel, reproduce, ExperimentId, Overrides};
use ordmatch::formats::{
    read_json, to_json, write_json, CounterexampleFile, DistortionFile, FractionalFile, InstanceFile, MatchingFile,
    MetricFile, ThinnessFile,
};
use ordmatch::records::{export, Format, ReproductionRecord};
use ordmatch::{parallel, Config};
use ordmatch_core::distortion::{AdversaryOptions, Formulation, OrdinalMode, Payoff};
use ordmatch_core::generators::{boston_instance, euclidean_random, line_sd_instance, tree_instance};
use ordmatch_core::mechanisms::{
    boston, deferred_acceptance, exact_rsd_marginals, monte_carlo_marginals, rep_match, rsd, serial_dictatorship,
    truncated_rsd, ItemPriorities, EXACT_MARGINALS_CAP,
};
use ordmatch_core::rational::parse_rational;
use ordmatch_core::thin::{cut_ratio, cycle_counterexample, thin_search, thinness};
use ordmatch_core::{Instance, PriorityOrder};
use serde::Serialize;

/// Ordinal metric matching: mechanisms, exact distortion and thin matchings.
#[derive(Parser)]
#[command(name = "ordmatch", version, about)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Generate an instance (and optionally its metric).
    Gen(GenArgs),
    /// Run a mechanism on an instance.
    Run(RunArgs),
    /// Exact adversarial distortion of a matching or fractional matching.
    Distortion(DistortionArgs),
    /// Thinness of a perfect matching against a fractional matching.
    Thin {
        #[arg(long)]
        p: PathBuf,
        #[arg(long = "match")]
        matching: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// First perfect matching (lexicographically) with thinness <= beta.
    ThinSearch {
        #[arg(long)]
        p: PathBuf,
        /// Rational bound, e.g. `2` or `3/2`.
        #[arg(long)]
        beta: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Alternating-weight cycle family with its distinguished cuts.
    Counterexample {
        #[arg(long)]
        k: usize,
        /// Rational in (0, 1), e.g. `1/4`.
        #[arg(long)]
        q: String,
        #[arg(long, default_value_t = 1)]
        copies: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Rerun an experiment (or `all`) and check its bound.
    Reproduce(ReproduceArgs),
    /// Convert a JSON list of records to JSON or CSV.
    Export {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum)]
        format: Format,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Tree,
    Line,
    Boston,
    Euclid,
}

#[derive(clap::Args)]
struct GenArgs {
    #[arg(long, value_enum)]
    family: Family,
    /// Depth for `tree` and `boston`.
    #[arg(long)]
    k: Option<u32>,
    /// Size for `line` and `euclid`.
    #[arg(long)]
    n: Option<usize>,
    /// Agent order for `line` (comma-separated; default identity).
    #[arg(long, value_delimiter = ',')]
    pi: Option<Vec<usize>>,
    /// Item order for `line` (comma-separated; default identity).
    #[arg(long, value_delimiter = ',')]
    sigma: Option<Vec<usize>>,
    /// Dimension for `euclid`.
    #[arg(long, default_value_t = 2)]
    dim: usize,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    out: PathBuf,
    #[arg(long)]
    metric_out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mech {
    Sd,
    Rsd,
    Trsd,
    Repmatch,
    Da,
    Boston,
}

#[derive(clap::Args)]
struct RunArgs {
    #[arg(long, value_enum)]
    mech: Mech,
    #[arg(long)]
    inst: PathBuf,
    /// Priority order for `sd`, `boston` and uniform `da` (default identity).
    #[arg(long, value_delimiter = ',')]
    order: Option<Vec<usize>>,
    /// Item preference lists for `da`, in the instance format.
    #[arg(long)]
    item_prefs: Option<PathBuf>,
    /// Agents matched by `trsd`.
    #[arg(long)]
    m: Option<usize>,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    out: PathBuf,
    /// Also write the (T)RSD marginal matrix: exact up to n = 8, otherwise
    /// Monte Carlo (needs --seed).
    #[arg(long)]
    marginals_out: Option<PathBuf>,
    /// Config file for the Monte Carlo trial count.
    #[arg(long)]
    config: Option<PathBuf>,
}

#[derive(clap::Args)]
struct DistortionArgs {
    #[arg(long)]
    inst: PathBuf,
    #[arg(long = "match")]
    matching: Option<PathBuf>,
    /// Evaluate a fractional matching instead of `--match`.
    #[arg(long)]
    fractional: Option<PathBuf>,
    /// Widen ordinal gaps in the witness where the optimum allows.
    #[arg(long)]
    strict: bool,
    /// Use every pair distance as a variable rather than only agent-item ones.
    #[arg(long)]
    full_metric: bool,
    /// Largest n to attempt (n! programs).
    #[arg(long, default_value_t = ordmatch_core::distortion::ADVERSARY_CAP)]
    cap: usize,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(clap::Args)]
struct ReproduceArgs {
    /// Experiment id, or `all`.
    id: String,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    k: Option<u32>,
    /// Required by experiments that draw random inputs.
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    config: Option<PathBuf>,
    /// JSON list of records.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    csv: Option<PathBuf>,
}

fn emit<T: Serialize>(value: &T, out: Option<&Path>) -> Result<()> {
    match out {
        Some(p) => write_json(p, value),
        None => {
            print!("{}", to_json(value)?);
            Ok(())
        }
    }
}

fn need<T>(v: Option<T>, what: &str) -> Result<T> {
    v.with_context(|| format!("missing {what}"))
}

fn gen(a: GenArgs) -> Result<()> {
    let (inst, d) = match a.family {
        Family::Tree => {
            let t = tree_instance(need(a.k, "--k")?)?;
            (t.instance().clone(), t.metric().clone())
        }
        Family::Boston => {
            let b = boston_instance(need(a.k, "--k")?)?;
            (b.instance, b.metric)
        }
        Family::Line => {
            let n = need(a.n, "--n")?;
            let id: Vec<usize> = (0..n).collect();
            line_sd_instance(n, a.pi.as_deref().unwrap_or(&id), a.sigma.as_deref().unwrap_or(&id))?
        }
        Family::Euclid => euclidean_random(need(a.n, "--n")?, a.dim, need(a.seed, "--seed (euclid is random)")?)?,
    };
    write_json(&a.out, &InstanceFile::from(&inst))?;
    if let Some(p) = a.metric_out {
        write_json(&p, &MetricFile::from(&d))?;
    }
    Ok(())
}

fn order(v: Option<Vec<usize>>, n: usize) -> Result<PriorityOrder> {
    Ok(match v {
        Some(o) => PriorityOrder::new(o)?,
        None => PriorityOrder::identity(n),
    })
}

fn run(a: RunArgs) -> Result<()> {
    let inst = read_json::<InstanceFile>(&a.inst)?.to_instance()?;
    let n = inst.n();
    let randomized = matches!(a.mech, Mech::Rsd | Mech::Trsd);
    if randomized && a.seed.is_none() {
        bail!("--seed is required for randomized mechanisms");
    }
    let m_picks = match a.mech {
        Mech::Trsd => need(a.m, "--m")?,
        _ => n,
    };
    let out = match a.mech {
        Mech::Sd => serial_dictatorship(&inst, &order(a.order, n)?)?,
        Mech::Boston => boston(&inst, &order(a.order, n)?)?,
        Mech::Repmatch => rep_match(&inst),
        Mech::Rsd => rsd(&inst, a.seed.unwrap()),
        Mech::Trsd => truncated_rsd(&inst, m_picks, a.seed.unwrap())?,
        Mech::Da => {
            let items = match (&a.item_prefs, a.order) {
                (Some(p), _) => ItemPriorities::new(read_json::<InstanceFile>(p)?.prefs)?,
                (None, o) => ItemPriorities::uniform(order(o, n)?.as_slice())?,
            };
            deferred_acceptance(&inst, &items)?
        }
    };
    write_json(&a.out, &MatchingFile::from(&out))?;
    if let Some(p) = a.marginals_out {
        if !randomized {
            bail!("--marginals-out applies to rsd and trsd");
        }
        let marg = if n <= EXACT_MARGINALS_CAP {
            exact_rsd_marginals(&inst, m_picks)?
        } else {
            let trials = Config::load(a.config.as_deref())?.marginals.monte_carlo_trials;
            monte_carlo_marginals(&inst, m_picks, trials, a.seed.unwrap())?
        };
        write_json(&p, &FractionalFile::from(&marg))?;
    }
    Ok(())
}

fn distortion(a: DistortionArgs) -> Result<()> {
    let inst: Instance = read_json::<InstanceFile>(&a.inst)?.to_instance()?;
    let opts = AdversaryOptions {
        formulation: if a.full_metric { Formulation::FullMetric } else { Formulation::Bipartite },
        ordinal: if a.strict { OrdinalMode::Strict } else { OrdinalMode::Weak },
        cap: a.cap,
    };
    let pool = parallel::pool()?;
    let report = match (&a.matching, &a.fractional) {
        (Some(m), None) => {
            let m = read_json::<MatchingFile>(m)?.to_matching()?;
            adversarial_parallel(&pool, &inst, Payoff::Integral(&m), opts)?
        }
        (None, Some(p)) => {
            let p = read_json::<FractionalFile>(p)?.to_fractional()?;
            adversarial_parallel(&pool, &inst, Payoff::Fractional(&p), opts)?
        }
        _ => bail!("pass exactly one of --match and --fractional"),
    };
    emit(&DistortionFile::from(&report), a.out.as_deref())
}

fn reproduce_cmd(a: ReproduceArgs) -> Result<bool> {
    let cfg = Config::load(a.config.as_deref())?;
    let ids: Vec<ExperimentId> = if a.id == "all" {
        ExperimentId::ALL.to_vec()
    } else {
        vec![a.id.parse()?]
    };
    let ov = Overrides {
        n: a.n,
        k: a.k,
        seed: a.seed,
    };
    let mut records: Vec<ReproductionRecord> = Vec::new();
    for id in ids {
        let r = reproduce(id, &cfg, &ov)?;
        eprintln!(
            "{:<16} {}  {} ms",
            r.id,
            if r.passed { "PASS" } else { "FAIL" },
            r.wall_clock_ms
        );
        records.push(r);
    }
    if let Some(p) = &a.csv {
        export(&records, Format::Csv, p)?;
    }
    emit(&records, a.out.as_deref())?;
    Ok(records.iter().all(|r| r.passed))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.cmd {
        Cmd::Gen(a) => gen(a).map(|_| true),
        Cmd::Run(a) => run(a).map(|_| true),
        Cmd::Distortion(a) => distortion(a).map(|_| true),
        Cmd::Thin { p, matching, out } => (|| {
            let p = read_json::<FractionalFile>(&p)?.to_fractional()?;
            let m = read_json::<MatchingFile>(&matching)?.to_matching()?;
            emit(&ThinnessFile::from(&thinness(&p, &m)?), out.as_deref())
        })()
        .map(|_| true),
        Cmd::ThinSearch { p, beta, out } => (|| {
            let p = read_json::<FractionalFile>(&p)?.to_fractional()?;
            let found = thin_search(&p, &parse_rational(&beta)?)?;
            emit(&found.as_ref().map(MatchingFile::from), out.as_deref())
        })()
        .map(|_| true),
        Cmd::Counterexample { k, q, copies, out } => (|| {
            let ce = cycle_counterexample(k, &parse_rational(&q)?, copies)?;
            let odd = cut_ratio(&ce.p, &ce.m_odd, &ce.cut_odd)?.context("empty cut")?;
            let even = cut_ratio(&ce.p, &ce.m_even, &ce.cut_even)?.context("empty cut")?;
            emit(&CounterexampleFile::new(&ce, &odd, &even), out.as_deref())
        })()
        .map(|_| true),
        Cmd::Reproduce(a) => reproduce_cmd(a),
        Cmd::Export { input, format, out } => (|| {
            let records: Vec<ReproductionRecord> = read_json(&input)?;
            export(&records, format, &out)
        })()
        .map(|_| true),
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
