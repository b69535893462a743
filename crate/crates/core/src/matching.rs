//! Maximum matchings, perfect-matching and factor-criticality decisions, and
//! Tutte-type certificates.
//!
//! [`maximum_matching`] (Edmonds' blossom algorithm) is the production engine.
//! [`brute_force_matching_size`], [`tutte_violator`] and
//! [`factor_critical_violator`] are exhaustive and share no code with it, so
//! they serve as independent oracles.

use std::collections::VecDeque;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{bit, Bits, Graph, KSubsets, VertexSet};

/// Largest order accepted by the subset scans.
pub const SUBSET_SCAN_LIMIT: usize = 20;

const NONE: usize = usize::MAX;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matching {
    edges: Vec<(usize, usize)>,
    covered: VertexSet,
}

impl Matching {
    fn from_mates(mate: &[usize]) -> Matching {
        let n = mate.len();
        let mut edges = Vec::new();
        let mut covered = 0u64;
        for (u, &m) in mate.iter().enumerate() {
            if m != NONE {
                covered |= bit(u);
                if u < m {
                    edges.push((u, m));
                }
            }
        }
        Matching {
            edges,
            covered: VertexSet::from_raw(covered, n),
        }
    }

    /// Matched pairs `(u, v)` with `u < v`, ordered by `u`.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn covered(&self) -> VertexSet {
        self.covered
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn covers(&self, v: usize) -> bool {
        self.covered.contains(v)
    }

    pub fn is_perfect(&self) -> bool {
        self.covered.len() == self.covered.universe()
    }

    /// Edges pairwise disjoint, present in `g`, and `covered` equal to their endpoints.
    pub fn is_valid_in(&self, g: &Graph) -> bool {
        let mut seen = 0u64;
        for &(u, v) in &self.edges {
            if !g.has_edge(u, v) || seen & (bit(u) | bit(v)) != 0 {
                return false;
            }
            seen |= bit(u) | bit(v);
        }
        seen == self.covered.bits() && self.covered.universe() == g.order()
    }
}

/// Maximum-cardinality matching by augmenting paths with blossom contraction.
pub fn maximum_matching(g: &Graph) -> Matching {
    let n = g.order();
    let mut mate = vec![NONE; n];
    // greedy start
    for u in 0..n {
        if mate[u] == NONE {
            if let Some(v) = Bits(g.adj(u)).find(|&v| mate[v] == NONE) {
                mate[u] = v;
                mate[v] = u;
            }
        }
    }
    let mut blossom = Blossom::new(g);
    for root in 0..n {
        if mate[root] == NONE {
            if let Some(end) = blossom.find_path(root, &mate) {
                blossom.augment(end, &mut mate);
            }
        }
    }
    Matching::from_mates(&mate)
}

struct Blossom<'a> {
    g: &'a Graph,
    parent: Vec<usize>,
    base: Vec<usize>,
    used: Vec<bool>,
    in_blossom: Vec<bool>,
    queue: VecDeque<usize>,
}

impl<'a> Blossom<'a> {
    fn new(g: &'a Graph) -> Self {
        let n = g.order();
        Blossom {
            g,
            parent: vec![NONE; n],
            base: (0..n).collect(),
            used: vec![false; n],
            in_blossom: vec![false; n],
            queue: VecDeque::with_capacity(n),
        }
    }

    fn lca(&self, mut a: usize, mut b: usize, mate: &[usize]) -> usize {
        let mut seen = 0u64;
        loop {
            a = self.base[a];
            seen |= bit(a);
            if mate[a] == NONE {
                break;
            }
            a = self.parent[mate[a]];
        }
        loop {
            b = self.base[b];
            if seen & bit(b) != 0 {
                return b;
            }
            b = self.parent[mate[b]];
        }
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize, mate: &[usize]) {
        while self.base[v] != b {
            self.in_blossom[self.base[v]] = true;
            self.in_blossom[self.base[mate[v]]] = true;
            self.parent[v] = child;
            child = mate[v];
            v = self.parent[mate[v]];
        }
    }

    /// BFS over alternating paths from `root`; returns the free endpoint of an
    /// augmenting path if one exists.
    fn find_path(&mut self, root: usize, mate: &[usize]) -> Option<usize> {
        let n = self.g.order();
        self.used.fill(false);
        self.parent.fill(NONE);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.queue.clear();
        self.used[root] = true;
        self.queue.push_back(root);

        while let Some(v) = self.queue.pop_front() {
            for to in Bits(self.g.adj(v)) {
                if self.base[v] == self.base[to] || mate[v] == to {
                    continue;
                }
                if to == root || (mate[to] != NONE && self.parent[mate[to]] != NONE) {
                    let cur = self.lca(v, to, mate);
                    self.in_blossom.fill(false);
                    self.mark_path(v, cur, to, mate);
                    self.mark_path(to, cur, v, mate);
                    for i in 0..n {
                        if self.in_blossom[self.base[i]] {
                            self.base[i] = cur;
                            if !self.used[i] {
                                self.used[i] = true;
                                self.queue.push_back(i);
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if mate[to] == NONE {
                        return Some(to);
                    }
                    self.used[mate[to]] = true;
                    self.queue.push_back(mate[to]);
                }
            }
        }
        None
    }

    fn augment(&self, mut v: usize, mate: &mut [usize]) {
        while v != NONE {
            let pv = self.parent[v];
            let next = mate[pv];
            mate[v] = pv;
            mate[pv] = v;
            v = next;
        }
    }
}

/// Maximum matching size by exhaustive search: the least unresolved vertex is
/// either left exposed or matched to each of its unresolved neighbours.
pub fn brute_force_matching_size(g: &Graph) -> Result<usize> {
    if g.order() > 12 && g.size() > 24 {
        return Err(Error::TooLarge {
            operation: "brute-force matching",
            limit: 12,
            n: g.order(),
        });
    }
    fn go(g: &Graph, alive: u64, current: usize, best: &mut usize) {
        if current + (alive.count_ones() as usize) / 2 <= *best {
            return;
        }
        if alive == 0 {
            *best = current;
            return;
        }
        let u = alive.trailing_zeros() as usize;
        let rest = alive & !bit(u);
        for v in Bits(g.adj(u) & rest) {
            go(g, rest & !bit(v), current + 1, best);
        }
        go(g, rest, current, best);
    }
    let mut best = 0;
    go(g, g.all_vertices(), 0, &mut best);
    Ok(best)
}

pub fn has_perfect_matching(g: &Graph) -> bool {
    g.order() % 2 == 0 && maximum_matching(g).is_perfect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CertificateKind {
    /// `c_o(G - S) > |S|`: no perfect matching.
    TutteViolator,
    /// `S` nonempty and `c_o(G - S) >= |S|`: not factor-critical.
    Lemma1Violator,
}

/// A vertex set `S` together with the odd component count of `G - S`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub kind: CertificateKind,
    pub set: VertexSet,
    pub odd_components: usize,
}

impl Certificate {
    /// Recomputes `c_o(G - S)` and checks the stored count and the kind's inequality.
    pub fn validate(&self, g: &Graph) -> bool {
        if self.set.universe() != g.order() {
            return false;
        }
        let odd = if self.set.len() == g.order() {
            0
        } else {
            match g.components(&self.set) {
                Ok(p) => p.odd_count,
                Err(_) => return false,
            }
        };
        if odd != self.odd_components {
            return false;
        }
        let s = self.set.len();
        match self.kind {
            CertificateKind::TutteViolator => odd > s,
            CertificateKind::Lemma1Violator => s > 0 && odd >= s,
        }
    }
}

fn check_scan_bound(g: &Graph) -> Result<()> {
    if g.order() > SUBSET_SCAN_LIMIT {
        return Err(Error::TooLarge {
            operation: "subset scan",
            limit: SUBSET_SCAN_LIMIT,
            n: g.order(),
        });
    }
    Ok(())
}

/// First set in (size, bitmask) order with `accept(|S|, c_o(G - S))`.
fn scan(g: &Graph, min_size: usize, accept: impl Fn(usize, usize) -> bool) -> Option<(u64, usize)> {
    let n = g.order();
    let all = g.all_vertices();
    // S = V leaves nothing, so c_o = 0 and neither inequality can hold
    for k in min_size..n {
        for s in KSubsets::new(n, k) {
            let (_, odd) = g.component_counts(all & !s);
            if accept(k, odd) {
                return Some((s, odd));
            }
        }
    }
    None
}

/// A set `S` with `c_o(G - S) > |S|`, minimum `|S|` first and then smallest
/// bitmask; `None` exactly when `g` has a perfect matching.
pub fn tutte_violator(g: &Graph) -> Result<Option<Certificate>> {
    check_scan_bound(g)?;
    Ok(scan(g, 0, |k, odd| odd > k).map(|(s, odd)| Certificate {
        kind: CertificateKind::TutteViolator,
        set: VertexSet::from_raw(s, g.order()),
        odd_components: odd,
    }))
}

/// A nonempty set `S` with `c_o(G - S) >= |S|`, minimum `|S|` first and then
/// smallest bitmask; `None` exactly when `g` is factor-critical.
pub fn factor_critical_violator(g: &Graph) -> Result<Option<Certificate>> {
    check_scan_bound(g)?;
    Ok(scan(g, 1, |k, odd| odd >= k).map(|(s, odd)| Certificate {
        kind: CertificateKind::Lemma1Violator,
        set: VertexSet::from_raw(s, g.order()),
        odd_components: odd,
    }))
}

/// Whether `G - v` has a perfect matching for every `v`. On failure the
/// least such `v` is returned as witness.
pub fn is_factor_critical(g: &Graph) -> (bool, Option<usize>) {
    if g.order() == 1 {
        return (true, None);
    }
    for v in 0..g.order() {
        let h = g.delete_vertex(v).expect("v in range and n >= 2");
        if !has_perfect_matching(&h) {
            return (false, Some(v));
        }
    }
    (true, None)
}
