//! Exact domination number by iterative deepening over closed-neighbourhood
//! covers.

use crate::error::{Error, Result};
use crate::graph::{bit, Bits, Graph, KSubsets, VertexSet};

/// Largest order accepted by the exact solver.
pub const DOMINATION_LIMIT: usize = 32;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DominationResult {
    pub gamma: usize,
    /// Smallest-bitmask dominating set of size `gamma`.
    pub witness: VertexSet,
}

pub fn is_dominating(g: &Graph, s: &VertexSet) -> bool {
    Bits(s.bits()).fold(0u64, |acc, v| acc | g.closed(v)) & g.all_vertices() == g.all_vertices()
}

/// Is there a set of at most `k` vertices from `allowed` whose closed
/// neighbourhoods cover `target`?
///
/// Branches on the least uncovered vertex: one of its closed neighbours must
/// be chosen.
pub(crate) fn can_dominate(g: &Graph, target: u64, allowed: u64, k: usize) -> bool {
    if target == 0 {
        return true;
    }
    if k == 0 {
        return false;
    }
    let mut best_cover = 0;
    for w in Bits(allowed) {
        best_cover = best_cover.max((g.closed(w) & target).count_ones());
    }
    if (best_cover as usize) * k < target.count_ones() as usize {
        return false;
    }
    let u = target.trailing_zeros() as usize;
    for w in Bits(g.closed(u) & allowed) {
        if can_dominate(g, target & !g.closed(w), allowed, k - 1) {
            return true;
        }
    }
    false
}

fn greedy_bound(g: &Graph, target: u64, allowed: u64) -> Option<usize> {
    let mut left = target;
    let mut used = 0;
    while left != 0 {
        let w = Bits(allowed).max_by_key(|&w| ((g.closed(w) & left).count_ones(), std::cmp::Reverse(w)))?;
        if g.closed(w) & left == 0 {
            return None;
        }
        left &= !g.closed(w);
        used += 1;
    }
    Some(used)
}

/// Minimum number of vertices from `allowed` dominating `target`, or `None`
/// when impossible.
pub(crate) fn min_cover(g: &Graph, target: u64, allowed: u64) -> Option<usize> {
    let upper = greedy_bound(g, target, allowed)?;
    (0..upper).find(|&k| can_dominate(g, target, allowed, k)).or(Some(upper))
}

fn check_bound(g: &Graph) -> Result<()> {
    if g.order() > DOMINATION_LIMIT {
        return Err(Error::TooLarge {
            operation: "domination number",
            limit: DOMINATION_LIMIT,
            n: g.order(),
        });
    }
    Ok(())
}

pub fn domination_number(g: &Graph) -> Result<DominationResult> {
    check_bound(g)?;
    let all = g.all_vertices();
    let gamma = min_cover(g, all, all).expect("V dominates itself");

    // Smallest bitmask: fix the members from the top down, each time taking the
    // least vertex that still admits a completion inside the vertices below it.
    let mut chosen = 0u64;
    let mut ceiling = g.order();
    for remaining in (1..=gamma).rev() {
        let pick = (remaining - 1..ceiling)
            .find(|&h| {
                let target = all & !closure(g, chosen | bit(h));
                can_dominate(g, target, (bit(h) - 1) & all, remaining - 1)
            })
            .expect("a witness of size gamma exists");
        chosen |= bit(pick);
        ceiling = pick;
    }
    let witness = VertexSet::from_raw(chosen, g.order());
    debug_assert!(is_dominating(g, &witness));
    Ok(DominationResult { gamma, witness })
}

#[inline]
fn closure(g: &Graph, s: u64) -> u64 {
    Bits(s).fold(0u64, |acc, v| acc | g.closed(v))
}

/// Domination number of `G - v` without building the subgraph.
pub(crate) fn gamma_without(g: &Graph, v: usize) -> usize {
    let rest = g.all_vertices() & !bit(v);
    min_cover(g, rest, rest).unwrap_or(0)
}

/// All 2-sets `{x, y}` avoiding `v` that dominate `G - v`, ascending by bitmask.
pub fn dominating_pairs(g: &Graph, v: usize) -> Result<Vec<VertexSet>> {
    if v >= g.order() {
        return Err(Error::VertexOutOfRange {
            vertex: v,
            n: g.order(),
        });
    }
    let rest = g.all_vertices() & !bit(v);
    let n = g.order();
    Ok(KSubsets::new(n, 2)
        .filter(|&p| p & bit(v) == 0 && closure(g, p) & rest == rest)
        .map(|p| VertexSet::from_raw(p, n))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vs(n: usize, v: &[usize]) -> VertexSet {
        VertexSet::from_vertices(n, v.iter().copied()).unwrap()
    }

    /// Smallest dominating set by scanning every subset in (size, bitmask) order.
    fn naive(g: &Graph) -> (usize, u64) {
        let n = g.order();
        for k in 0..=n {
            for s in KSubsets::new(n, k) {
                if is_dominating(g, &VertexSet::from_raw(s, n)) {
                    return (k, s);
                }
            }
        }
        unreachable!()
    }

    #[test]
    fn is_dominating_cases() {
        let k4 = Graph::complete(4).unwrap();
        assert!(is_dominating(&k4, &vs(4, &[0])));
        let c5 = Graph::cycle(5).unwrap();
        assert!(!is_dominating(&c5, &vs(5, &[0])));
        assert!(is_dominating(&c5, &vs(5, &[0, 2])));
    }

    #[test]
    fn domination_number_cases() {
        for n in 1..=10 {
            assert_eq!(domination_number(&Graph::complete(n).unwrap()).unwrap().gamma, 1);
            assert_eq!(domination_number(&Graph::empty(n).unwrap()).unwrap().gamma, n);
        }
        let c5 = domination_number(&Graph::cycle(5).unwrap()).unwrap();
        assert_eq!(c5.gamma, 2);
        assert_eq!(c5.witness, vs(5, &[0, 2]));
        let c7 = domination_number(&Graph::cycle(7).unwrap()).unwrap();
        assert_eq!(c7.gamma, 3);
        assert!(domination_number(&Graph::empty(33).unwrap()).is_err());
    }

    #[test]
    fn witness_is_smallest_bitmask() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        for _ in 0..400 {
            let n = rng.gen_range(1..=9);
            let p = rng.gen_range(0.05..0.7);
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(p) {
                        edges.push((u, v));
                    }
                }
            }
            let g = Graph::build(n, &edges).unwrap();
            let res = domination_number(&g).unwrap();
            let (gamma, bits) = naive(&g);
            assert_eq!(res.gamma, gamma, "{g:?}");
            assert_eq!(res.witness.bits(), bits, "{g:?}");
        }
    }

    #[test]
    fn gamma_without_matches_subgraph() {
        let c7 = Graph::cycle(7).unwrap();
        for v in 0..7 {
            let h = c7.delete_vertex(v).unwrap();
            assert_eq!(gamma_without(&c7, v), domination_number(&h).unwrap().gamma);
        }
        assert_eq!(gamma_without(&Graph::empty(1).unwrap(), 0), 0);
    }

    #[test]
    fn dominating_pairs_cases() {
        // C5 - 0 is the path 1-2-3-4
        let c5 = Graph::cycle(5).unwrap();
        let pairs = dominating_pairs(&c5, 0).unwrap();
        assert_eq!(
            pairs,
            vec![vs(5, &[1, 3]), vs(5, &[2, 3]), vs(5, &[1, 4]), vs(5, &[2, 4])]
        );
        let k3 = Graph::complete(3).unwrap();
        assert_eq!(dominating_pairs(&k3, 0).unwrap(), vec![vs(3, &[1, 2])]);
        assert!(dominating_pairs(&k3, 3).is_err());
    }
}
