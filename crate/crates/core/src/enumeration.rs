//! Isomorph-free generation of small graphs by canonical augmentation.
//!
//! Graphs grow one vertex at a time. A child `P + v` is kept only when `v` lies
//! in the automorphism orbit of the child's canonical deletion vertex (the
//! minimum-degree vertex with the largest canonical position) and when no
//! earlier sibling from the same parent is isomorphic to it. Every isomorphism
//! class then arises from exactly one parent class exactly once.

use std::collections::HashSet;

use rayon::prelude::*;

use crate::canon::canonical_labeling;
use crate::criticality::is_k1k_free;
use crate::error::{Error, Result};
use crate::graph::{bit, low_mask, Graph};

/// Largest order the generator accepts at all.
pub const ENUMERATION_LIMIT: usize = 11;
/// Largest order accepted without a pruning profile.
pub const UNPRUNED_LIMIT: usize = 9;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct EnumFilter {
    pub n: usize,
    pub connected: bool,
    pub biconnected: bool,
    pub min_degree: usize,
    pub odd_order_only: bool,
    pub k15_free_only: bool,
}

impl EnumFilter {
    pub fn new(n: usize) -> Self {
        EnumFilter {
            n,
            ..Default::default()
        }
    }

    pub fn connected(mut self) -> Self {
        self.connected = true;
        self
    }

    pub fn biconnected(mut self) -> Self {
        self.biconnected = true;
        self
    }

    pub fn min_degree(mut self, d: usize) -> Self {
        self.min_degree = d;
        self
    }

    pub fn odd_order_only(mut self) -> Self {
        self.odd_order_only = true;
        self
    }

    pub fn k15_free(mut self) -> Self {
        self.k15_free_only = true;
        self
    }

    /// The full predicate on a finished graph.
    pub fn accepts(&self, g: &Graph) -> bool {
        g.order() == self.n
            && (!self.odd_order_only || self.n % 2 == 1)
            && g.min_degree() >= self.min_degree
            && (!self.connected || g.is_connected())
            && (!self.biconnected || g.is_biconnected())
            && (!self.k15_free_only || k15_free(g))
    }

    pub fn validate(&self) -> Result<()> {
        if self.n == 0 || self.n > ENUMERATION_LIMIT {
            return Err(Error::TooLarge {
                operation: "enumeration",
                limit: ENUMERATION_LIMIT,
                n: self.n,
            });
        }
        if self.n > UNPRUNED_LIMIT && self.min_degree < 3 && !self.k15_free_only {
            return Err(Error::UnprunedScan { n: self.n });
        }
        Ok(())
    }

    /// Minimum degree every canonical ancestor of order `order` must have.
    fn degree_floor(&self, order: usize) -> usize {
        self.min_degree.saturating_sub(self.n - order)
    }
}

fn k15_free(g: &Graph) -> bool {
    g.max_degree() < 5 || is_k1k_free(g, 5).map(|(free, _)| free).unwrap_or(false)
}

/// Canonical children of `parent` surviving the pruning for order `order`.
fn children(parent: &Graph, filter: &EnumFilter, last_level: bool) -> Vec<Graph> {
    let m = parent.order();
    let order = m + 1;
    let floor = filter.degree_floor(order);
    let degrees: Vec<usize> = (0..m).map(|v| parent.degree(v)).collect();
    let mut seen: HashSet<Graph> = HashSet::new();
    let mut out = Vec::new();

    for nbrs in 0..=low_mask(m) {
        let d = nbrs.count_ones() as usize;
        if d < floor {
            continue;
        }
        // the new vertex must be a minimum-degree vertex of the child
        if (0..m).any(|v| degrees[v] + usize::from(nbrs & bit(v) != 0) < d) {
            continue;
        }
        let child = parent.with_new_vertex(nbrs);
        if filter.k15_free_only && !k15_free(&child) {
            continue;
        }
        if last_level && !filter.accepts(&child) {
            continue;
        }
        let canon = canonical_labeling(&child).expect("order within canonical bound");
        let deletion = canon
            .labeling
            .iter()
            .rev()
            .copied()
            .find(|&v| child.degree(v) == d)
            .expect("the new vertex has minimum degree");
        if !canon.same_orbit(deletion, m) {
            continue;
        }
        if seen.insert(canon.graph.clone()) {
            out.push(canon.graph);
        }
    }
    out
}

/// All graphs passing `filter`, one per isomorphism class, as canonical forms
/// in ascending order.
pub fn enumerate_graphs(filter: &EnumFilter) -> Result<Vec<Graph>> {
    filter.validate()?;
    if filter.odd_order_only && filter.n % 2 == 0 {
        return Ok(Vec::new());
    }
    let mut level = vec![Graph::empty(1)?];
    for order in 2..=filter.n {
        let last = order == filter.n;
        level = level
            .par_iter()
            .flat_map_iter(|p| children(p, filter, last))
            .collect();
    }
    if filter.n == 1 {
        level.retain(|g| filter.accepts(g));
    }
    level.sort_unstable();
    Ok(level)
}

/// Calls `visit` on each graph of [`enumerate_graphs`] in order and returns the count.
pub fn enumerate(filter: &EnumFilter, mut visit: impl FnMut(&Graph)) -> Result<usize> {
    let graphs = enumerate_graphs(filter)?;
    for g in &graphs {
        visit(g);
    }
    Ok(graphs.len())
}

pub fn count_matching_filter(filter: &EnumFilter) -> Result<usize> {
    Ok(enumerate_graphs(filter)?.len())
}
