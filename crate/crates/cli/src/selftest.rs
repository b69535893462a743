//! Cross-checks between the fast algorithms and their exhaustive oracles.

use domcrit_core::{
    brute_force_matching_size, enumerate_graphs, factor_critical_violator, has_perfect_matching,
    is_factor_critical, maximum_matching, tutte_violator, EnumFilter, Graph, Result,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::random::{random_connected, random_graph};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteResult {
    pub suite: String,
    pub checked: usize,
    pub failed: usize,
    /// graph6 of the first failing graph, if any.
    pub first_failure: Option<String>,
}

impl SuiteResult {
    pub fn passed(&self) -> bool {
        self.failed == 0
    }
}

fn run_suite(name: &str, graphs: &[Graph], check: impl Fn(&Graph) -> bool + Sync) -> SuiteResult {
    let failures: Vec<&Graph> = graphs.par_iter().filter(|g| !check(g)).collect();
    SuiteResult {
        suite: name.to_string(),
        checked: graphs.len(),
        failed: failures.len(),
        first_failure: failures.first().map(|g| domcrit_core::to_graph6(g)),
    }
}

/// Blossom matching is valid and as large as the brute-force optimum.
pub fn matching_agrees(g: &Graph) -> bool {
    let m = maximum_matching(g);
    m.is_valid_in(g) && brute_force_matching_size(g).is_ok_and(|s| s == m.size())
}

/// Factor-criticality by deletion agrees with the absence of a Lemma-1
/// violator, perfect matchings agree with the absence of a Tutte violator, and
/// every certificate re-validates.
pub fn lemma1_agrees(g: &Graph) -> bool {
    let (fc, _) = is_factor_critical(g);
    let Ok(violator) = factor_critical_violator(g) else {
        return false;
    };
    let Ok(tutte) = tutte_violator(g) else {
        return false;
    };
    fc == violator.is_none()
        && has_perfect_matching(g) == tutte.is_none()
        && violator.is_none_or(|c| c.validate(g))
        && tutte.is_none_or(|c| c.validate(g))
}

/// Every isomorphism class on 1..=max_n vertices (connected ones only if asked).
pub fn all_classes(max_n: usize, connected: bool) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        let filter = if connected {
            EnumFilter::new(n).connected()
        } else {
            EnumFilter::new(n)
        };
        out.extend(enumerate_graphs(&filter)?);
    }
    Ok(out)
}

fn random_sample(count: usize, max_n: usize, seed: u64, connected: bool) -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(1..=max_n);
            let p = rng.gen_range(0.1..0.8);
            if connected {
                random_connected(&mut rng, n, p)
            } else {
                random_graph(&mut rng, n, p)
            }
        })
        .collect()
}

pub fn matching_on_classes(max_n: usize) -> Result<SuiteResult> {
    let graphs = all_classes(max_n, false)?;
    Ok(run_suite(&format!("matching/classes n<={max_n}"), &graphs, matching_agrees))
}

pub fn matching_on_random(count: usize, max_n: usize, seed: u64) -> SuiteResult {
    let graphs = random_sample(count, max_n, seed, false);
    run_suite(&format!("matching/random n<={max_n}"), &graphs, matching_agrees)
}

pub fn lemma1_on_classes(max_n: usize) -> Result<SuiteResult> {
    let graphs = all_classes(max_n, true)?;
    Ok(run_suite(&format!("lemma1/connected classes n<={max_n}"), &graphs, lemma1_agrees))
}

pub fn lemma1_on_random(count: usize, max_n: usize, seed: u64) -> SuiteResult {
    let graphs = random_sample(count, max_n, seed, true);
    run_suite(&format!("lemma1/random connected n<={max_n}"), &graphs, lemma1_agrees)
}
