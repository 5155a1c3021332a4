use num_traits::Zero;
use ordmatch_core::distortion::{adversarial_distortion, min_cost_matching};
use ordmatch_core::generators::{euclidean_random, line_sd_instance};
use ordmatch_core::mechanisms::{
    boston_trace, deferred_acceptance, exact_rsd_marginals, is_stable, rep_match, rep_match_trace,
    serial_dictatorship, ItemPriorities,
};
use ordmatch_core::rational::{frac, int};
use ordmatch_core::thin::{bvn_decompose, cut_values, hall_round, thin_search, thinness};
use ordmatch_core::{
    consistent, cost, fractional_cost, metric_from_graph, prefs_from_metric, Extended, FractionalMatching, Instance,
    Matching, Metric, PriorityOrder, Rational, WeightedGraph,
};
use proptest::prelude::*;

fn perm(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}

fn instance(n: usize) -> impl Strategy<Value = Instance> {
    proptest::collection::vec(perm(n), n).prop_map(|p| Instance::new(p).unwrap())
}

fn sized_instance(max: usize) -> impl Strategy<Value = Instance> {
    (1..=max).prop_flat_map(instance)
}

/// Random doubly stochastic matrix: a positive mixture of random permutations.
fn bvn_mix(max_n: usize) -> impl Strategy<Value = FractionalMatching> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec((perm(n), 1i64..20), 1..6).prop_map(move |terms| {
            let total: i64 = terms.iter().map(|t| t.1).sum();
            let terms: Vec<(Rational, Matching)> = terms
                .into_iter()
                .map(|(p, w)| (frac(w, total), Matching::from_permutation(&p).unwrap()))
                .collect();
            FractionalMatching::mixture(n, &terms).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn graph_distances_form_a_metric(
        n in 1usize..5,
        extra in proptest::collection::vec((0usize..8, 0usize..8, 0i64..10, 1i64..4), 0..12),
        path in proptest::collection::vec((0i64..10, 1i64..4), 7),
    ) {
        let mut g = WeightedGraph::with_points(n);
        // a spanning path keeps the graph connected
        for v in 1..2 * n {
            let (a, b) = path[v - 1];
            g.add_edge(v - 1, v, frac(a, b)).unwrap();
        }
        for (u, v, a, b) in extra {
            g.add_edge(u % (2 * n), v % (2 * n), frac(a, b)).unwrap();
        }
        let d = metric_from_graph(&g).unwrap();
        prop_assert!(d.validate().is_ok());
    }

    #[test]
    fn derived_preferences_are_consistent(n in 1usize..7, dim in 1usize..4, seed in any::<u64>()) {
        let (_, d) = euclidean_random(n, dim, seed).unwrap();
        prop_assert!(consistent(&prefs_from_metric(&d), &d));
    }

    #[test]
    fn cost_is_additive(n in 1usize..7, seed in any::<u64>(), p in (1usize..7).prop_flat_map(perm), split in any::<u64>()) {
        let p: Vec<usize> = p.into_iter().filter(|&j| j < n).collect();
        prop_assume!(p.len() == n);
        let (_, d) = euclidean_random(n, 2, seed).unwrap();
        let whole = Matching::from_permutation(&p).unwrap();
        let part = |keep: bool| {
            Matching::new((0..n).map(|a| ((split >> a & 1 == 1) == keep).then_some(p[a])).collect()).unwrap()
        };
        prop_assert_eq!(cost(&whole, &d).unwrap(), cost(&part(true), &d).unwrap() + cost(&part(false), &d).unwrap());
    }

    #[test]
    fn fractional_cost_is_linear(p in bvn_mix(5), seed in any::<u64>()) {
        let (_, d) = euclidean_random(p.n(), 2, seed).unwrap();
        let dec = bvn_decompose(&p).unwrap();
        let mixed: Rational = dec.terms.iter().map(|(w, m)| w * cost(m, &d).unwrap()).sum();
        prop_assert_eq!(fractional_cost(&p, &d).unwrap(), mixed);
    }

    #[test]
    fn bvn_reassembles_exactly(p in bvn_mix(6)) {
        let dec = bvn_decompose(&p).unwrap();
        prop_assert!(dec.terms.len() <= p.n() * p.n());
        prop_assert!(dec.terms.iter().all(|(w, _)| *w > Rational::zero()));
        prop_assert_eq!(dec.reassemble().unwrap(), p);
    }

    #[test]
    fn hall_round_succeeds_within_n_squared(p in bvn_mix(7), seed in any::<u64>()) {
        let n = p.n();
        let m = hall_round(&p).unwrap();
        prop_assert!(m.is_perfect());
        let t = frac(1, (n * n) as i64);
        prop_assert!(m.pairs().all(|(i, j)| *p.get(i, j) >= t));
        let (_, d) = euclidean_random(n, 2, seed).unwrap();
        prop_assert!(cost(&m, &d).unwrap() <= int((n * n) as i64) * fractional_cost(&p, &d).unwrap());
    }

    #[test]
    fn indicator_thinness_is_one(p in (1usize..7).prop_flat_map(perm)) {
        let m = Matching::from_permutation(&p).unwrap();
        prop_assert_eq!(thinness(&FractionalMatching::indicator(&m), &m).unwrap().beta, Extended::Finite(int(1)));
    }

    #[test]
    fn cut_metrics_reproduce_cut_values(p in bvn_mix(4), m in (1usize..=4).prop_flat_map(perm)) {
        let n = p.n();
        prop_assume!(m.len() == n);
        let m = Matching::from_permutation(&m).unwrap();
        for mask in 0u32..(1 << (2 * n)) {
            let cut: Vec<bool> = (0..2 * n).map(|x| mask >> x & 1 == 1).collect();
            let d = Metric::cut(n, &cut).unwrap();
            let (c, w) = cut_values(&p, &m, &cut).unwrap();
            prop_assert_eq!(cost(&m, &d).unwrap(), int(c as i64));
            prop_assert_eq!(fractional_cost(&p, &d).unwrap(), w);
        }
    }

    #[test]
    fn thin_search_result_is_thin(p in bvn_mix(4), num in 1i64..8, den in 1i64..4) {
        let beta = frac(num, den);
        if let Some(m) = thin_search(&p, &beta).unwrap() {
            prop_assert!(thinness(&p, &m).unwrap().beta <= Extended::Finite(beta));
        }
    }

    #[test]
    fn da_is_stable(inst in sized_instance(7), items in (1usize..=7).prop_flat_map(|n| proptest::collection::vec(perm(n), n))) {
        prop_assume!(items.len() == inst.n());
        let pr = ItemPriorities::new(items).unwrap();
        let m = deferred_acceptance(&inst, &pr).unwrap();
        prop_assert!(m.is_perfect());
        prop_assert!(is_stable(&inst, &pr, &m));
    }

    #[test]
    fn sd_follows_the_line_cascade(pi in (1usize..=10).prop_flat_map(perm), sigma_seed in any::<u64>()) {
        let n = pi.len();
        // rotate the identity by a seed-dependent amount for sigma
        let r = (sigma_seed % n as u64) as usize;
        let sigma: Vec<usize> = (0..n).map(|i| (i + r) % n).collect();
        let (inst, _) = line_sd_instance(n, &pi, &sigma).unwrap();
        let m = serial_dictatorship(&inst, &PriorityOrder::new(pi.clone()).unwrap()).unwrap();
        for i in 0..n {
            prop_assert_eq!(m.get(pi[i]), Some(sigma[i]));
        }
    }

    #[test]
    fn repmatch_invariants(inst in sized_instance(8)) {
        let n = inst.n();
        let (state, merges) = rep_match_trace(&inst);
        prop_assert!(merges.len() < n.max(1));
        prop_assert_eq!(state.sets.len(), n - merges.len());
        let mut all: Vec<usize> = state.sets.iter().flatten().copied().collect();
        all.sort_unstable();
        prop_assert_eq!(all, (0..n).collect::<Vec<_>>());
        for (s, &l) in state.sets.iter().zip(&state.levels) {
            prop_assert!(s.len() >= 1 << l);
        }
        // replay the level rule
        let mut levels = vec![0u32; n];
        for mg in &merges {
            let (li, lj) = (levels[mg.into], levels[mg.absorbed]);
            let expect = if li == lj { li + 1 } else { li.max(lj) };
            prop_assert_eq!(mg.level, expect);
            levels.remove(mg.absorbed);
            levels[mg.into] = expect;
        }
        prop_assert!(rep_match(&inst).is_perfect());
    }

    #[test]
    fn boston_matches_are_irrevocable(inst in sized_instance(7), order in (1usize..=7).prop_flat_map(perm)) {
        prop_assume!(order.len() == inst.n());
        let (m, events) = boston_trace(&inst, &PriorityOrder::new(order).unwrap()).unwrap();
        prop_assert!(m.is_perfect());
        for e in events {
            prop_assert_eq!(m.get(e.agent), Some(e.item));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn truncated_rsd_bound(n in 1usize..=5, seed in any::<u64>()) {
        let (inst, d) = euclidean_random(n, 2, seed).unwrap();
        let (_, opt) = min_cost_matching(&d);
        for m in 1..=n {
            let p = exact_rsd_marginals(&inst, m).unwrap();
            let bound = frac(m as i64, (n + 1 - m) as i64) * &opt;
            prop_assert!(fractional_cost(&p, &d).unwrap() <= bound);
        }
    }

    #[test]
    fn oracle_dominates_known_metrics(n in 1usize..=3, seed in any::<u64>(), p in (1usize..=3).prop_flat_map(perm)) {
        prop_assume!(p.len() == n);
        let (inst, d) = euclidean_random(n, 2, seed).unwrap();
        let m = Matching::from_permutation(&p).unwrap();
        let report = adversarial_distortion(&inst, &m).unwrap();
        let (_, opt) = min_cost_matching(&d);
        if let Some(r) = Extended::ratio(&cost(&m, &d).unwrap(), &opt) {
            prop_assert!(r <= report.value);
        }
        if let Extended::Finite(v) = &report.value {
            let (_, wopt) = min_cost_matching(&report.witness_metric);
            prop_assert_eq!(cost(&m, &report.witness_metric).unwrap() / wopt, v.clone());
            prop_assert!(consistent(&inst, &report.witness_metric));
        }
    }
}
