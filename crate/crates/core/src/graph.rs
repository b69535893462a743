//! Simple undirected graphs on at most 64 vertices, stored as one neighbourhood
//! bitset per vertex.

use std::fmt;

use serde::ser::{Serialize, SerializeSeq, Serializer};

use crate::error::{Error, Result};

pub const MAX_VERTICES: usize = 64;

/// Mask with the lowest `n` bits set.
#[inline]
pub const fn low_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

#[inline]
pub const fn bit(v: usize) -> u64 {
    1u64 << v
}

/// Iterator over the set positions of a word, lowest first.
#[derive(Clone, Copy, Debug)]
pub struct Bits(pub u64);

impl Iterator for Bits {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let v = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(v)
        }
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let c = self.0.count_ones() as usize;
        (c, Some(c))
    }
}

impl ExactSizeIterator for Bits {}

/// Packs the bits of `word` selected by `keep` into the low positions, preserving order.
#[inline]
pub(crate) fn compress(word: u64, keep: u64) -> u64 {
    let mut out = 0u64;
    let mut pos = 0;
    for v in Bits(keep) {
        if word & bit(v) != 0 {
            out |= bit(pos);
        }
        pos += 1;
    }
    out
}

/// The `k`-element subsets of `0..n` as bitmasks, in increasing numeric order.
#[derive(Clone, Debug)]
pub struct KSubsets {
    next: Option<u64>,
    last: u64,
}

impl KSubsets {
    pub fn new(n: usize, k: usize) -> KSubsets {
        assert!(n <= MAX_VERTICES);
        if k > n {
            return KSubsets { next: None, last: 0 };
        }
        KSubsets {
            next: Some(low_mask(k)),
            last: if k == 0 { 0 } else { low_mask(k) << (n - k) },
        }
    }
}

impl Iterator for KSubsets {
    type Item = u64;

    fn next(&mut self) -> Option<u64> {
        let cur = self.next?;
        self.next = if cur == self.last {
            None
        } else {
            // Gosper's hack
            let c = cur & cur.wrapping_neg();
            let r = cur + c;
            Some((((r ^ cur) >> 2) / c) | r)
        };
        Some(cur)
    }
}

/// A subset of the vertices `0..universe`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet {
    bits: u64,
    universe: u8,
}

impl VertexSet {
    pub fn empty(universe: usize) -> Self {
        assert!(universe <= MAX_VERTICES);
        VertexSet {
            bits: 0,
            universe: universe as u8,
        }
    }

    pub fn full(universe: usize) -> Self {
        assert!(universe <= MAX_VERTICES);
        VertexSet {
            bits: low_mask(universe),
            universe: universe as u8,
        }
    }

    pub fn from_bits(bits: u64, universe: usize) -> Result<Self> {
        if universe > MAX_VERTICES {
            return Err(Error::InvalidOrder(universe));
        }
        if bits & !low_mask(universe) != 0 {
            let vertex = 63 - bits.leading_zeros() as usize;
            return Err(Error::VertexOutOfRange { vertex, n: universe });
        }
        Ok(VertexSet {
            bits,
            universe: universe as u8,
        })
    }

    pub fn from_vertices<I: IntoIterator<Item = usize>>(universe: usize, vertices: I) -> Result<Self> {
        let mut bits = 0u64;
        for v in vertices {
            if v >= universe {
                return Err(Error::VertexOutOfRange { vertex: v, n: universe });
            }
            bits |= bit(v);
        }
        Self::from_bits(bits, universe)
    }

    /// Trusted constructor for internal scans; callers guarantee the range invariant.
    #[inline]
    pub(crate) fn from_raw(bits: u64, universe: usize) -> Self {
        debug_assert_eq!(bits & !low_mask(universe), 0);
        VertexSet {
            bits,
            universe: universe as u8,
        }
    }

    #[inline]
    pub fn bits(&self) -> u64 {
        self.bits
    }

    #[inline]
    pub fn universe(&self) -> usize {
        self.universe as usize
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        v < 64 && self.bits & bit(v) != 0
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.bits & !other.bits == 0
    }

    pub fn complement(&self) -> VertexSet {
        VertexSet {
            bits: !self.bits & low_mask(self.universe()),
            universe: self.universe,
        }
    }

    pub fn iter(&self) -> Bits {
        Bits(self.bits)
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.len()))?;
        for v in self.iter() {
            seq.serialize_element(&v)?;
        }
        seq.end()
    }
}

/// Connected components of a graph after removing a vertex set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentPartition {
    pub parts: Vec<VertexSet>,
    pub odd_count: usize,
}

impl ComponentPartition {
    pub fn count(&self) -> usize {
        self.parts.len()
    }
}

/// Immutable simple undirected graph.
///
/// `adj[v]` is the neighbourhood of `v` as a bitset; the adjacency is symmetric,
/// irreflexive and never has bits at positions `>= n`. Ordering compares the
/// order first and then the adjacency rows lexicographically, which is what the
/// canonical form minimises.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// Builds a graph on `n` vertices from an edge list. Duplicate edges collapse.
    pub fn build(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        if n == 0 || n > MAX_VERTICES {
            return Err(Error::InvalidOrder(n));
        }
        let mut adj = vec![0u64; n];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::VertexOutOfRange { vertex: u.max(v), n });
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u] |= bit(v);
            adj[v] |= bit(u);
        }
        Ok(Graph { n, adj })
    }

    /// Builds a graph from neighbourhood rows, validating every invariant.
    pub fn from_adjacency(adj: Vec<u64>) -> Result<Graph> {
        let n = adj.len();
        if n == 0 || n > MAX_VERTICES {
            return Err(Error::InvalidOrder(n));
        }
        let mask = low_mask(n);
        for (v, &row) in adj.iter().enumerate() {
            if row & !mask != 0 {
                let vertex = 63 - row.leading_zeros() as usize;
                return Err(Error::VertexOutOfRange { vertex, n });
            }
            if row & bit(v) != 0 {
                return Err(Error::SelfLoop(v));
            }
            for u in Bits(row) {
                if adj[u] & bit(v) == 0 {
                    return Err(Error::InvalidArgument(format!(
                        "adjacency not symmetric at ({v}, {u})"
                    )));
                }
            }
        }
        Ok(Graph { n, adj })
    }

    #[inline]
    pub(crate) fn from_rows_unchecked(adj: Vec<u64>) -> Graph {
        debug_assert!(Graph::from_adjacency(adj.clone()).is_ok());
        Graph { n: adj.len(), adj }
    }

    pub fn empty(n: usize) -> Result<Graph> {
        Graph::build(n, &[])
    }

    pub fn complete(n: usize) -> Result<Graph> {
        if n == 0 || n > MAX_VERTICES {
            return Err(Error::InvalidOrder(n));
        }
        let all = low_mask(n);
        Ok(Graph {
            n,
            adj: (0..n).map(|v| all & !bit(v)).collect(),
        })
    }

    pub fn cycle(n: usize) -> Result<Graph> {
        if n < 3 {
            return Err(Error::InvalidOrder(n));
        }
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::build(n, &edges)
    }

    pub fn path(n: usize) -> Result<Graph> {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::build(n, &edges)
    }

    /// Star `K_{1,leaves}` with the hub at vertex 0.
    pub fn star(leaves: usize) -> Result<Graph> {
        let edges: Vec<_> = (1..=leaves).map(|i| (0, i)).collect();
        Graph::build(leaves + 1, &edges)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    /// Neighbourhood of `v` as a raw bitset.
    #[inline]
    pub fn adj(&self, v: usize) -> u64 {
        self.adj[v]
    }

    #[inline]
    pub fn rows(&self) -> &[u64] {
        &self.adj
    }

    /// Closed neighbourhood `N[v]` as a raw bitset.
    #[inline]
    pub fn closed(&self, v: usize) -> u64 {
        self.adj[v] | bit(v)
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet::from_raw(self.adj[v], self.n)
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] & bit(v) != 0
    }

    #[inline]
    pub fn all_vertices(&self) -> u64 {
        low_mask(self.n)
    }

    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    /// Edges `(u, v)` with `u < v`, in row-major order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| Bits(self.adj[u] & !low_mask(u + 1)).map(move |v| (u, v)))
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Copy of the graph with the pair `{u, v}` toggled between edge and non-edge.
    pub fn with_edge_toggled(&self, u: usize, v: usize) -> Result<Graph> {
        if u >= self.n || v >= self.n {
            return Err(Error::VertexOutOfRange {
                vertex: u.max(v),
                n: self.n,
            });
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        let mut adj = self.adj.clone();
        adj[u] ^= bit(v);
        adj[v] ^= bit(u);
        Ok(Graph { n: self.n, adj })
    }

    /// Copy of the graph with one extra vertex adjacent to `neighbors`.
    pub(crate) fn with_new_vertex(&self, neighbors: u64) -> Graph {
        debug_assert!(self.n < MAX_VERTICES);
        debug_assert_eq!(neighbors & !low_mask(self.n), 0);
        let mut adj = Vec::with_capacity(self.n + 1);
        for (v, &row) in self.adj.iter().enumerate() {
            adj.push(if neighbors & bit(v) != 0 {
                row | bit(self.n)
            } else {
                row
            });
        }
        adj.push(neighbors);
        Graph { n: self.n + 1, adj }
    }

    /// `G - v`; vertices above `v` shift down by one.
    pub fn delete_vertex(&self, v: usize) -> Result<Graph> {
        if v >= self.n {
            return Err(Error::VertexOutOfRange { vertex: v, n: self.n });
        }
        if self.n == 1 {
            return Err(Error::DeleteFromSingleton);
        }
        let below = low_mask(v);
        let adj = (0..self.n)
            .filter(|&u| u != v)
            .map(|u| {
                let row = self.adj[u];
                (row & below) | ((row >> 1) & !below)
            })
            .collect();
        Ok(Graph { n: self.n - 1, adj })
    }

    /// `G[S]` with an order-preserving relabelling onto `0..|S|`.
    pub fn induced_subgraph(&self, s: &VertexSet) -> Result<Graph> {
        self.check_universe(s)?;
        if s.is_empty() {
            return Err(Error::EmptyVertexSet);
        }
        let keep = s.bits();
        let adj = s.iter().map(|v| compress(self.adj[v] & keep, keep)).collect();
        Ok(Graph { n: s.len(), adj })
    }

    /// Relabels so that vertex `v` becomes `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.n {
            return Err(Error::InvalidArgument(format!(
                "permutation has length {}, graph has order {}",
                perm.len(),
                self.n
            )));
        }
        let mut seen = 0u64;
        for &p in perm {
            if p >= self.n || seen & bit(p) != 0 {
                return Err(Error::InvalidArgument("not a permutation".into()));
            }
            seen |= bit(p);
        }
        let mut adj = vec![0u64; self.n];
        for (u, v) in self.edges() {
            adj[perm[u]] |= bit(perm[v]);
            adj[perm[v]] |= bit(perm[u]);
        }
        Ok(Graph { n: self.n, adj })
    }

    pub(crate) fn check_universe(&self, s: &VertexSet) -> Result<()> {
        if s.universe() != self.n {
            return Err(Error::UniverseMismatch {
                expected: self.n,
                got: s.universe(),
            });
        }
        Ok(())
    }

    /// Vertices reachable from `start` inside `alive`.
    #[inline]
    pub(crate) fn reach(&self, start: usize, alive: u64) -> u64 {
        let mut seen = bit(start);
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0u64;
            for v in Bits(frontier) {
                next |= self.adj[v];
            }
            next &= alive & !seen;
            seen |= next;
            frontier = next;
        }
        seen
    }

    /// Component bitsets of the subgraph induced by `alive`, ordered by least vertex.
    pub(crate) fn component_masks(&self, alive: u64) -> Vec<u64> {
        let mut rest = alive;
        let mut out = Vec::new();
        while rest != 0 {
            let c = self.reach(rest.trailing_zeros() as usize, alive);
            out.push(c);
            rest &= !c;
        }
        out
    }

    /// `(component count, odd component count)` of the subgraph induced by `alive`.
    #[inline]
    pub(crate) fn component_counts(&self, alive: u64) -> (usize, usize) {
        let mut rest = alive;
        let (mut total, mut odd) = (0, 0);
        while rest != 0 {
            let c = self.reach(rest.trailing_zeros() as usize, alive);
            total += 1;
            odd += (c.count_ones() & 1) as usize;
            rest &= !c;
        }
        (total, odd)
    }

    /// Connected components of `G - removed`.
    pub fn components(&self, removed: &VertexSet) -> Result<ComponentPartition> {
        self.check_universe(removed)?;
        let alive = self.all_vertices() & !removed.bits();
        if alive == 0 {
            return Err(Error::RemovesAllVertices);
        }
        let parts: Vec<VertexSet> = self
            .component_masks(alive)
            .into_iter()
            .map(|c| VertexSet::from_raw(c, self.n))
            .collect();
        let odd_count = parts.iter().filter(|p| p.len() % 2 == 1).count();
        Ok(ComponentPartition { parts, odd_count })
    }

    pub fn is_connected(&self) -> bool {
        self.reach(0, self.all_vertices()) == self.all_vertices()
    }

    /// Connected, at least three vertices, and no cut vertex.
    pub fn is_biconnected(&self) -> bool {
        if self.n < 3 || !self.is_connected() {
            return false;
        }
        let all = self.all_vertices();
        (0..self.n).all(|v| {
            let alive = all & !bit(v);
            self.reach(alive.trailing_zeros() as usize, alive) == alive
        })
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n)?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        write!(f, "])")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vs(n: usize, v: &[usize]) -> VertexSet {
        VertexSet::from_vertices(n, v.iter().copied()).unwrap()
    }

    #[test]
    fn build_small_graphs() {
        let k3 = Graph::build(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert!((0..3).all(|v| k3.degree(v) == 2));
        assert_eq!(k3, Graph::complete(3).unwrap());

        let k1 = Graph::build(1, &[]).unwrap();
        assert_eq!(k1.size(), 0);

        let c4 = Graph::build(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert!((0..4).all(|v| c4.degree(v) == 2));
        assert_eq!(c4, Graph::cycle(4).unwrap());
    }

    #[test]
    fn build_collapses_duplicates() {
        let g = Graph::build(2, &[(0, 1), (1, 0), (0, 1)]).unwrap();
        assert_eq!(g.size(), 1);
    }

    #[test]
    fn build_rejects_bad_input() {
        assert_eq!(Graph::build(0, &[]), Err(Error::InvalidOrder(0)));
        assert_eq!(Graph::build(65, &[]), Err(Error::InvalidOrder(65)));
        assert_eq!(Graph::build(3, &[(1, 1)]), Err(Error::SelfLoop(1)));
        assert!(matches!(
            Graph::build(3, &[(0, 3)]),
            Err(Error::VertexOutOfRange { vertex: 3, n: 3 })
        ));
        assert!(Graph::build(64, &[(0, 63)]).is_ok());
    }

    #[test]
    fn from_adjacency_validates() {
        assert!(Graph::from_adjacency(vec![0b10, 0b01]).is_ok());
        assert!(Graph::from_adjacency(vec![0b10, 0b00]).is_err());
        assert!(Graph::from_adjacency(vec![0b01]).is_err());
        assert!(Graph::from_adjacency(vec![0b100, 0]).is_err());
    }

    #[test]
    fn delete_vertex_reindexes() {
        let k3 = Graph::complete(3).unwrap();
        assert_eq!(k3.delete_vertex(0).unwrap(), Graph::complete(2).unwrap());

        let c4 = Graph::cycle(4).unwrap();
        // 1-2-3 remains, relabelled to 0-1-2
        assert_eq!(c4.delete_vertex(0).unwrap(), Graph::path(3).unwrap());

        assert_eq!(c4.delete_vertex(4), Err(Error::VertexOutOfRange { vertex: 4, n: 4 }));
        assert_eq!(
            Graph::empty(1).unwrap().delete_vertex(0),
            Err(Error::DeleteFromSingleton)
        );
    }

    #[test]
    fn induced_subgraph_cases() {
        let k4 = Graph::complete(4).unwrap();
        assert_eq!(
            k4.induced_subgraph(&vs(4, &[0, 1, 2])).unwrap(),
            Graph::complete(3).unwrap()
        );
        let c4 = Graph::cycle(4).unwrap();
        assert_eq!(
            c4.induced_subgraph(&vs(4, &[0])).unwrap(),
            Graph::empty(1).unwrap()
        );
        assert_eq!(
            c4.induced_subgraph(&VertexSet::empty(4)),
            Err(Error::EmptyVertexSet)
        );
        // 1 and 3 are opposite on the cycle
        assert_eq!(c4.induced_subgraph(&vs(4, &[1, 3])).unwrap().size(), 0);
    }

    #[test]
    fn components_cases() {
        let k4 = Graph::complete(4).unwrap();
        let p = k4.components(&VertexSet::empty(4)).unwrap();
        assert_eq!(p.count(), 1);
        assert_eq!(p.parts[0].len(), 4);
        assert_eq!(p.odd_count, 0);

        let p3 = Graph::path(3).unwrap();
        let p = p3.components(&vs(3, &[1])).unwrap();
        assert_eq!(p.count(), 2);
        assert!(p.parts.iter().all(|c| c.len() == 1));
        assert_eq!(p.odd_count, 2);

        assert_eq!(
            p3.components(&VertexSet::full(3)),
            Err(Error::RemovesAllVertices)
        );
        assert!(matches!(
            p3.components(&VertexSet::empty(4)),
            Err(Error::UniverseMismatch { .. })
        ));
    }

    #[test]
    fn biconnectivity_and_degree() {
        assert!(Graph::cycle(4).unwrap().is_biconnected());
        assert!(!Graph::path(3).unwrap().is_biconnected());
        assert!(!Graph::complete(2).unwrap().is_biconnected());
        assert!(Graph::complete(3).unwrap().is_biconnected());
        assert_eq!(Graph::complete(4).unwrap().min_degree(), 3);
        assert_eq!(Graph::empty(1).unwrap().min_degree(), 0);
        // two triangles sharing a vertex
        let bowtie = Graph::build(5, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]).unwrap();
        assert!(bowtie.is_connected());
        assert!(!bowtie.is_biconnected());
    }

    #[test]
    fn vertex_set_basics() {
        let s = vs(6, &[1, 4]);
        assert_eq!(s.bits(), 0b10010);
        assert_eq!(s.complement().to_vec(), vec![0, 2, 3, 5]);
        assert!(VertexSet::from_bits(1 << 6, 6).is_err());
        assert!(VertexSet::from_vertices(3, [3]).is_err());
        assert_eq!(format!("{s:?}"), "{1, 4}");
    }

    #[test]
    fn k_subsets_ascend() {
        let all: Vec<u64> = KSubsets::new(4, 2).collect();
        assert_eq!(all, vec![0b0011, 0b0101, 0b0110, 0b1001, 0b1010, 0b1100]);
        assert_eq!(KSubsets::new(3, 0).collect::<Vec<_>>(), vec![0]);
        assert_eq!(KSubsets::new(3, 3).collect::<Vec<_>>(), vec![0b111]);
        assert_eq!(KSubsets::new(2, 3).count(), 0);
        assert_eq!(KSubsets::new(10, 4).count(), 210);
        assert_eq!(KSubsets::new(64, 2).count(), 2016);
        assert_eq!(KSubsets::new(64, 64).count(), 1);
    }

    #[test]
    fn compress_packs_in_order() {
        assert_eq!(compress(0b1010_0110, 0b1110_0100), 0b1011);
    }
}
