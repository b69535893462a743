//! Exhaustive check of the theorem over small odd orders, plus perturbations
//! of the two listed exceptions.

use std::collections::BTreeMap;

use domcrit_core::catalog::{named_graph, NamedGraph};
use domcrit_core::criticality::{check_facts, check_lemma2, check_lemma3, check_lemma4};
use domcrit_core::enumeration::{ENUMERATION_LIMIT, UNPRUNED_LIMIT};
use domcrit_core::{
    enumerate_graphs, is_k1k_free, is_k_vertex_critical, theorem_check, to_graph6, EnumFilter,
    Graph, Result, TheoremStatus,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::CliError;

pub const STATUSES: [TheoremStatus; 4] = [
    TheoremStatus::HypothesesUnmet,
    TheoremStatus::Confirmed,
    TheoremStatus::ListedException,
    TheoremStatus::Counterexample,
];

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct StatusCounts(pub BTreeMap<&'static str, usize>);

impl StatusCounts {
    fn new() -> Self {
        StatusCounts(STATUSES.iter().map(|s| (s.as_str(), 0)).collect())
    }

    fn add(&mut self, status: TheoremStatus) {
        *self.0.entry(status.as_str()).or_default() += 1;
    }

    pub fn get(&self, status: TheoremStatus) -> usize {
        self.0.get(status.as_str()).copied().unwrap_or(0)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrderSummary {
    pub n: usize,
    pub scanned: usize,
    pub statuses: StatusCounts,
    /// 3-vertex-critical graphs among the scanned ones; each went through the
    /// facts and lemma checks.
    pub three_critical: usize,
    pub facts_failed: usize,
}

#[derive(Clone, Debug, Default)]
pub struct ScanOutcome {
    pub orders: Vec<OrderSummary>,
    pub counterexamples: Vec<String>,
    /// graph6 and reason for each 3-critical graph failing a facts/lemma check.
    pub facts_failures: Vec<(String, String)>,
}

pub fn check_scale(max_n: usize, prune: bool) -> std::result::Result<(), CliError> {
    if max_n < 3 {
        return Err(CliError::Usage(format!("--max-n must be at least 3, got {max_n}")));
    }
    if max_n > ENUMERATION_LIMIT {
        return Err(CliError::Usage(format!(
            "--max-n {max_n} is beyond the supported scale ({ENUMERATION_LIMIT})"
        )));
    }
    if max_n > UNPRUNED_LIMIT && !prune {
        return Err(CliError::Usage(format!(
            "--max-n {max_n} needs --prune (full scans stop at {UNPRUNED_LIMIT})"
        )));
    }
    Ok(())
}

/// Candidate classes for order `n`: every connected class, or with `prune`
/// only those meeting the cheap hypotheses.
pub fn candidates(n: usize, prune: bool) -> Result<Vec<Graph>> {
    let filter = if prune {
        EnumFilter::new(n)
            .biconnected()
            .min_degree(3)
            .k15_free()
            .odd_order_only()
    } else {
        EnumFilter::new(n).connected()
    };
    enumerate_graphs(&filter)
}

struct GraphOutcome {
    status: TheoremStatus,
    three_critical: bool,
    facts_failure: Option<String>,
}

/// Failure reason of the facts and lemma checks, if any.
pub fn facts_failure(g: &Graph) -> Option<String> {
    let checks = [
        ("facts", check_facts(g).map(|r| r.passed())),
        ("lemma2", check_lemma2(g).map(|r| r.passed())),
        ("lemma3", check_lemma3(g).map(|r| r.passed())),
        ("lemma4", check_lemma4(g).map(|r| r.passed())),
    ];
    for (name, result) in checks {
        match result {
            Ok(true) => {}
            Ok(false) => return Some(format!("{name} violated")),
            Err(e) => return Some(format!("{name}: {e}")),
        }
    }
    None
}

fn classify(g: &Graph) -> Result<GraphOutcome> {
    let three_critical = is_k_vertex_critical(g, 3)?.is_k_critical;
    let cheap = g.order() % 2 == 1
        && g.min_degree() >= 3
        && g.is_biconnected()
        && is_k1k_free(g, 5)?.0;
    let status = if three_critical && cheap {
        theorem_check(g)?.status
    } else {
        TheoremStatus::HypothesesUnmet
    };
    let facts_failure = if three_critical { facts_failure(g) } else { None };
    Ok(GraphOutcome {
        status,
        three_critical,
        facts_failure,
    })
}

pub fn scan_order(n: usize, prune: bool, outcome: &mut ScanOutcome) -> Result<()> {
    let graphs = candidates(n, prune)?;
    let results: Vec<GraphOutcome> = graphs.par_iter().map(classify).collect::<Result<_>>()?;
    let mut summary = OrderSummary {
        n,
        scanned: graphs.len(),
        statuses: StatusCounts::new(),
        three_critical: 0,
        facts_failed: 0,
    };
    for (g, r) in graphs.iter().zip(results) {
        summary.statuses.add(r.status);
        if r.status == TheoremStatus::Counterexample {
            outcome.counterexamples.push(to_graph6(g));
        }
        if r.three_critical {
            summary.three_critical += 1;
        }
        if let Some(reason) = r.facts_failure {
            summary.facts_failed += 1;
            outcome.facts_failures.push((to_graph6(g), reason));
        }
    }
    outcome.orders.push(summary);
    Ok(())
}

pub fn scan(max_n: usize, prune: bool) -> Result<ScanOutcome> {
    let mut outcome = ScanOutcome::default();
    for n in (3..=max_n).step_by(2) {
        scan_order(n, prune, &mut outcome)?;
    }
    Ok(outcome)
}

/// Verdicts of the catalog exceptions, which must both be `listed_exception`.
pub fn catalog_verdicts() -> Result<Vec<(NamedGraph, TheoremStatus)>> {
    [NamedGraph::G1, NamedGraph::G2]
        .into_iter()
        .map(|name| Ok((name, theorem_check(&named_graph(name).graph)?.status)))
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PerturbationSummary {
    pub single_toggles: usize,
    pub random_samples: usize,
    pub seed: u64,
    pub statuses: StatusCounts,
    #[serde(skip)]
    pub counterexamples: Vec<String>,
}

fn toggled(g: &Graph, pairs: &[(usize, usize)]) -> Graph {
    pairs.iter().fold(g.clone(), |h, &(u, v)| {
        h.with_edge_toggled(u, v).expect("distinct in-range vertices")
    })
}

/// Every single-edge toggle of G1 and G2, then `samples` seeded random graphs
/// obtained from G1 or G2 by toggling 1 to 3 distinct vertex pairs.
pub fn perturbations(samples: usize, seed: u64) -> Result<PerturbationSummary> {
    let bases: Vec<Graph> = [NamedGraph::G1, NamedGraph::G2]
        .into_iter()
        .map(|name| named_graph(name).graph)
        .collect();
    let n = bases[0].order();
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();

    let mut graphs = Vec::new();
    for base in &bases {
        for &p in &pairs {
            graphs.push(toggled(base, &[p]));
        }
    }
    let single_toggles = graphs.len();

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..samples {
        let base = &bases[rng.gen_range(0..bases.len())];
        let k = rng.gen_range(1..=3);
        let chosen: Vec<(usize, usize)> = rand::seq::index::sample(&mut rng, pairs.len(), k)
            .into_iter()
            .map(|i| pairs[i])
            .collect();
        graphs.push(toggled(base, &chosen));
    }

    let verdicts: Vec<TheoremStatus> = graphs
        .par_iter()
        .map(|g| theorem_check(g).map(|v| v.status))
        .collect::<Result<_>>()?;
    let mut statuses = StatusCounts::new();
    let mut counterexamples = Vec::new();
    for (g, status) in graphs.iter().zip(verdicts) {
        statuses.add(status);
        if status == TheoremStatus::Counterexample {
            counterexamples.push(to_graph6(g));
        }
    }
    Ok(PerturbationSummary {
        single_toggles,
        random_samples: samples,
        seed,
        statuses,
        counterexamples,
    })
}
