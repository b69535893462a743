//! Vertex domination-criticality, the structural facts and lemmas that hold in
//! 3-vertex-critical graphs, and the classifier for the main theorem.

use serde::Serialize;

use crate::canon::are_isomorphic;
use crate::catalog::{named_graph, NamedGraph};
use crate::domination::{domination_number, gamma_without, DOMINATION_LIMIT};
use crate::error::{Error, Result};
use crate::graph::{bit, Bits, Graph, KSubsets, VertexSet};
use crate::matching::is_factor_critical;

/// Largest order accepted by the cutset scans behind the lemma checkers.
pub const LEMMA_SCAN_LIMIT: usize = 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CriticalityReport {
    pub gamma: usize,
    pub is_k_critical: bool,
    /// Least vertex whose deletion does not lower the domination number.
    pub failing_vertex: Option<usize>,
}

/// Searches each neighbourhood for an independent `k`-set. Returns
/// `(true, None)` when the graph is `K_{1,k}`-free, otherwise `(false,
/// Some((center, leaves)))` for the first centre found.
pub fn is_k1k_free(g: &Graph, k: usize) -> Result<(bool, Option<(usize, VertexSet)>)> {
    if k < 2 {
        return Err(Error::InvalidArgument(format!("K_1,k needs k >= 2, got {k}")));
    }
    fn independent(g: &Graph, candidates: u64, chosen: u64, need: usize) -> Option<u64> {
        if need == 0 {
            return Some(chosen);
        }
        if (candidates.count_ones() as usize) < need {
            return None;
        }
        let v = candidates.trailing_zeros() as usize;
        let rest = candidates & !bit(v);
        independent(g, rest & !g.adj(v), chosen | bit(v), need - 1)
            .or_else(|| independent(g, rest, chosen, need))
    }
    for center in 0..g.order() {
        if g.degree(center) < k {
            continue;
        }
        if let Some(leaves) = independent(g, g.adj(center), 0, k) {
            return Ok((false, Some((center, VertexSet::from_raw(leaves, g.order())))));
        }
    }
    Ok((true, None))
}

pub fn is_k_vertex_critical(g: &Graph, k: usize) -> Result<CriticalityReport> {
    if k == 0 {
        return Err(Error::InvalidArgument("criticality needs k >= 1".into()));
    }
    let gamma = domination_number(g)?.gamma;
    let failing_vertex = (0..g.order()).find(|&v| gamma_without(g, v) >= gamma);
    Ok(CriticalityReport {
        gamma,
        is_k_critical: gamma == k && failing_vertex.is_none(),
        failing_vertex,
    })
}

fn require_three_critical(g: &Graph) -> Result<()> {
    let report = is_k_vertex_critical(g, 3)?;
    if !report.is_k_critical {
        return Err(Error::NotThreeCritical {
            gamma: report.gamma,
            failing_vertex: report.failing_vertex,
        });
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "fact", rename_all = "snake_case")]
pub enum FactViolation {
    /// `G - v` has no dominating pair.
    NoDominatingPair { vertex: usize },
    /// A dominating pair of `G - v` contains a neighbour of `v`.
    PairTouchesVertex { vertex: usize, pair: VertexSet },
    /// One pair dominates both `G - v` and `G - w`.
    SharedPair { v: usize, w: usize, pair: VertexSet },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FactsReport {
    /// Dominating pairs of `G - v`, indexed by `v`.
    pub pairs: Vec<Vec<VertexSet>>,
    pub violations: Vec<FactViolation>,
}

impl FactsReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks the three facts about minimum dominating sets of vertex-deleted
/// subgraphs over the full family of dominating pairs of every `G - v`.
pub fn check_facts(g: &Graph) -> Result<FactsReport> {
    require_three_critical(g)?;
    let n = g.order();
    let mut pairs = Vec::with_capacity(n);
    let mut violations = Vec::new();
    for v in 0..n {
        let family = crate::domination::dominating_pairs(g, v)?;
        if family.is_empty() {
            violations.push(FactViolation::NoDominatingPair { vertex: v });
        }
        for pair in &family {
            if pair.bits() & g.adj(v) != 0 {
                violations.push(FactViolation::PairTouchesVertex { vertex: v, pair: *pair });
            }
        }
        pairs.push(family);
    }
    for v in 0..n {
        for w in v + 1..n {
            for pair in &pairs[v] {
                if pairs[w].binary_search(pair).is_ok() {
                    violations.push(FactViolation::SharedPair { v, w, pair: *pair });
                }
            }
        }
    }
    Ok(FactsReport { pairs, violations })
}

/// How the hypothesis "`D_u` lies inside `S` for each `u` in `S`" is read.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum PairReading {
    /// Some minimum dominating pair of `G - u` lies inside `S`.
    #[default]
    Some,
    /// Every minimum dominating pair of `G - u` lies inside `S`.
    Every,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LemmaViolation {
    pub cutset: VertexSet,
    /// The offending vertex: a degree-1 vertex of `G[S]` for the degree lemma,
    /// a vertex of `G - S` adjacent to all of `S` for the adjacency lemma.
    pub vertex: Option<usize>,
    pub components: usize,
    pub detail: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct LemmaReport {
    /// Cutsets that met the lemma's hypotheses.
    pub cutsets_checked: usize,
    pub violations: Vec<LemmaViolation>,
}

impl LemmaReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

fn check_lemma_bound(g: &Graph) -> Result<()> {
    if g.order() > LEMMA_SCAN_LIMIT {
        return Err(Error::TooLarge {
            operation: "cutset scan",
            limit: LEMMA_SCAN_LIMIT,
            n: g.order(),
        });
    }
    Ok(())
}

/// Every nonempty `S` whose removal leaves a disconnected, nonempty graph,
/// with the component bitsets of `G - S`.
fn cutsets(g: &Graph) -> impl Iterator<Item = (u64, Vec<u64>)> + '_ {
    let all = g.all_vertices();
    (1..g.order().saturating_sub(1)).flat_map(move |k| {
        KSubsets::new(g.order(), k).filter_map(move |s| {
            let comps = g.component_masks(all & !s);
            (comps.len() >= 2).then_some((s, comps))
        })
    })
}

/// In a 3-vertex-critical graph, a cutset `S` with `|S| >= 4` such that every
/// `u` in `S` has a dominating pair of `G - u` inside `S` induces a subgraph
/// without degree-1 vertices.
pub fn check_lemma2(g: &Graph) -> Result<LemmaReport> {
    check_lemma2_with(g, PairReading::default())
}

pub fn check_lemma2_with(g: &Graph, reading: PairReading) -> Result<LemmaReport> {
    check_lemma_bound(g)?;
    require_three_critical(g)?;
    let families: Vec<Vec<u64>> = (0..g.order())
        .map(|v| {
            crate::domination::dominating_pairs(g, v)
                .map(|ps| ps.iter().map(|p| p.bits()).collect())
        })
        .collect::<Result<_>>()?;
    let inside = |s: u64, u: usize| match reading {
        PairReading::Some => families[u].iter().any(|&p| p & !s == 0),
        PairReading::Every => {
            !families[u].is_empty() && families[u].iter().all(|&p| p & !s == 0)
        }
    };
    let mut report = LemmaReport::default();
    for (s, comps) in cutsets(g) {
        if s.count_ones() < 4 || !Bits(s).all(|u| inside(s, u)) {
            continue;
        }
        report.cutsets_checked += 1;
        for v in Bits(s) {
            if (g.adj(v) & s).count_ones() == 1 {
                report.violations.push(LemmaViolation {
                    cutset: VertexSet::from_raw(s, g.order()),
                    vertex: Some(v),
                    components: comps.len(),
                    detail: format!("vertex {v} has degree 1 in G[S]"),
                });
            }
        }
    }
    Ok(report)
}

/// In a 3-vertex-critical graph, if `G - S` has at least four components, or
/// exactly three each with at least two vertices, no vertex of `G - S` is
/// adjacent to every vertex of `S`.
pub fn check_lemma3(g: &Graph) -> Result<LemmaReport> {
    check_lemma_bound(g)?;
    require_three_critical(g)?;
    let mut report = LemmaReport::default();
    for (s, comps) in cutsets(g) {
        let applies = comps.len() >= 4
            || (comps.len() == 3 && comps.iter().all(|c| c.count_ones() >= 2));
        if !applies {
            continue;
        }
        report.cutsets_checked += 1;
        let outside = g.all_vertices() & !s;
        for x in Bits(outside) {
            if g.adj(x) & s == s {
                report.violations.push(LemmaViolation {
                    cutset: VertexSet::from_raw(s, g.order()),
                    vertex: Some(x),
                    components: comps.len(),
                    detail: format!("vertex {x} outside S is adjacent to all of S"),
                });
            }
        }
    }
    Ok(report)
}

/// In a 3-vertex-critical graph a 2-vertex cutset leaves at most three
/// components, and when it leaves three, one of them is a single vertex.
pub fn check_lemma4(g: &Graph) -> Result<LemmaReport> {
    check_lemma_bound(g)?;
    require_three_critical(g)?;
    let all = g.all_vertices();
    let mut report = LemmaReport::default();
    for s in KSubsets::new(g.order(), 2) {
        if s == all {
            continue;
        }
        let comps = g.component_masks(all & !s);
        if comps.len() < 2 {
            continue;
        }
        report.cutsets_checked += 1;
        let cutset = VertexSet::from_raw(s, g.order());
        if comps.len() > 3 {
            report.violations.push(LemmaViolation {
                cutset,
                vertex: None,
                components: comps.len(),
                detail: format!("G - S has {} components", comps.len()),
            });
        } else if comps.len() == 3 && comps.iter().all(|c| c.count_ones() > 1) {
            report.violations.push(LemmaViolation {
                cutset,
                vertex: None,
                components: 3,
                detail: "three components, none a singleton".into(),
            });
        }
    }
    Ok(report)
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Hypotheses {
    pub k15_free: bool,
    pub three_critical: bool,
    pub biconnected: bool,
    pub odd_order: bool,
    pub min_deg_ge_3: bool,
}

impl Hypotheses {
    pub fn all(&self) -> bool {
        self.k15_free && self.three_critical && self.biconnected && self.odd_order && self.min_deg_ge_3
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum TheoremStatus {
    HypothesesUnmet,
    Confirmed,
    ListedException,
    Counterexample,
}

impl TheoremStatus {
    pub fn as_str(&self) -> &'static str {
        match self {
            TheoremStatus::HypothesesUnmet => "hypotheses_unmet",
            TheoremStatus::Confirmed => "confirmed",
            TheoremStatus::ListedException => "listed_exception",
            TheoremStatus::Counterexample => "counterexample",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct TheoremVerdict {
    pub hypotheses: Hypotheses,
    pub gamma: usize,
    pub factor_critical: bool,
    pub status: TheoremStatus,
}

/// Classifies `g` against the theorem: a `K_{1,5}`-free 3-vertex-critical
/// 2-connected graph of odd order with minimum degree at least 3 is
/// factor-critical unless it is one of the two listed exceptions.
pub fn theorem_check(g: &Graph) -> Result<TheoremVerdict> {
    if g.order() > DOMINATION_LIMIT {
        return Err(Error::TooLarge {
            operation: "theorem check",
            limit: DOMINATION_LIMIT,
            n: g.order(),
        });
    }
    let criticality = is_k_vertex_critical(g, 3)?;
    let hypotheses = Hypotheses {
        k15_free: is_k1k_free(g, 5)?.0,
        three_critical: criticality.is_k_critical,
        biconnected: g.is_biconnected(),
        odd_order: g.order() % 2 == 1,
        min_deg_ge_3: g.min_degree() >= 3,
    };
    let factor_critical = is_factor_critical(g).0;
    let status = if !hypotheses.all() {
        TheoremStatus::HypothesesUnmet
    } else if factor_critical {
        TheoremStatus::Confirmed
    } else if is_listed_exception(g)? {
        TheoremStatus::ListedException
    } else {
        TheoremStatus::Counterexample
    };
    Ok(TheoremVerdict {
        hypotheses,
        gamma: criticality.gamma,
        factor_critical,
        status,
    })
}

fn is_listed_exception(g: &Graph) -> Result<bool> {
    if g.order() != 11 {
        return Ok(false);
    }
    for name in [NamedGraph::G1, NamedGraph::G2] {
        if are_isomorphic(g, &named_graph(name).graph)? {
            return Ok(true);
        }
    }
    Ok(false)
}
