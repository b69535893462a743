//! Seeded random graphs for the oracle suites and perturbation runs.

use domcrit_core::Graph;
use rand::seq::SliceRandom;
use rand::Rng;

/// `G(n, p)`.
pub fn random_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::build(n, &edges).expect("n is at most the caller's bound")
}

/// A random recursive tree overlaid with `G(n, p)` edges, randomly relabelled.
pub fn random_connected<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for v in 1..n {
        edges.push((rng.gen_range(0..v), v));
    }
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    edges.sort_unstable();
    edges.dedup();
    let g = Graph::build(n, &edges).expect("n is at most the caller's bound");
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    g.permuted(&perm).expect("a permutation of 0..n")
}
