//! Canonical labelling by equitable refinement and individualisation.
//!
//! The search tree is the usual one: refine the ordered partition to an
//! equitable one, individualise each vertex of the first smallest non-singleton
//! cell in turn, and recurse. Leaves are discrete partitions; the canonical
//! form is the least relabelled adjacency over all leaves. Automorphisms found
//! when two leaves give the same relabelled graph are used to prune by orbits
//! and to skip subtrees that are images of already explored ones.

use crate::error::{Error, Result};
use crate::graph::{bit, low_mask, Bits, Graph};

/// Largest order accepted by the canonical labelling search.
pub const CANON_LIMIT: usize = 16;

/// Result of a canonical labelling run.
#[derive(Clone, Debug)]
pub struct Canon {
    /// The canonical representative.
    pub graph: Graph,
    /// `labeling[i]` is the input vertex placed at canonical position `i`.
    pub labeling: Vec<usize>,
    /// Generators of the automorphism group, as vertex maps.
    pub generators: Vec<Vec<usize>>,
    /// `orbits[v]` is the least vertex in the automorphism orbit of `v`.
    pub orbits: Vec<usize>,
}

impl Canon {
    pub fn same_orbit(&self, u: usize, v: usize) -> bool {
        self.orbits[u] == self.orbits[v]
    }
}

pub fn canonical_form(g: &Graph) -> Result<Graph> {
    Ok(canonical_labeling(g)?.graph)
}

pub fn are_isomorphic(g: &Graph, h: &Graph) -> Result<bool> {
    check_bound(g)?;
    check_bound(h)?;
    if g.order() != h.order() || g.size() != h.size() {
        return Ok(false);
    }
    Ok(canonical_form(g)? == canonical_form(h)?)
}

fn check_bound(g: &Graph) -> Result<()> {
    if g.order() > CANON_LIMIT {
        return Err(Error::TooLarge {
            operation: "canonical labelling",
            limit: CANON_LIMIT,
            n: g.order(),
        });
    }
    Ok(())
}

pub fn canonical_labeling(g: &Graph) -> Result<Canon> {
    check_bound(g)?;
    let n = g.order();
    let mut search = Search {
        adj: g.rows(),
        n,
        first: None,
        best: None,
        generators: Vec::new(),
    };
    let mut cells = vec![low_mask(n)];
    let queue = cells.clone();
    refine(search.adj, &mut cells, queue);
    let mut path = Vec::with_capacity(n);
    search.explore(cells, &mut path);

    let best = search.best.expect("search visits at least one leaf");
    let orbits = orbit_representatives(n, &search.generators, &[]);
    Ok(Canon {
        graph: Graph::from_rows_unchecked(best.rows),
        labeling: best.lab,
        generators: search.generators,
        orbits,
    })
}

struct Leaf {
    lab: Vec<usize>,
    rows: Vec<u64>,
    path: Vec<usize>,
}

struct Search<'a> {
    adj: &'a [u64],
    n: usize,
    first: Option<Leaf>,
    best: Option<Leaf>,
    generators: Vec<Vec<usize>>,
}

impl Search<'_> {
    /// Returns `Some(depth)` when the search should unwind to the node at `depth`.
    fn explore(&mut self, cells: Vec<u64>, path: &mut Vec<usize>) -> Option<usize> {
        if cells.len() == self.n {
            return self.leaf(&cells, path);
        }
        let depth = path.len();
        let target = cells
            .iter()
            .copied()
            .filter(|c| c.count_ones() > 1)
            .min_by_key(|c| c.count_ones())
            .expect("non-discrete partition has a non-singleton cell");
        let target_idx = cells.iter().position(|&c| c == target).unwrap();

        let mut tried = 0u64;
        for v in Bits(target) {
            if tried != 0 {
                let orbits = orbit_representatives(self.n, &self.generators, path);
                if Bits(tried).any(|u| orbits[u] == orbits[v]) {
                    continue;
                }
            }
            tried |= bit(v);

            let mut child = Vec::with_capacity(cells.len() + 1);
            child.extend_from_slice(&cells[..target_idx]);
            child.push(bit(v));
            child.push(target & !bit(v));
            child.extend_from_slice(&cells[target_idx + 1..]);
            refine(self.adj, &mut child, vec![bit(v)]);

            path.push(v);
            let jump = self.explore(child, path);
            path.pop();
            if let Some(level) = jump {
                if level < depth {
                    return Some(level);
                }
            }
        }
        None
    }

    fn leaf(&mut self, cells: &[u64], path: &[usize]) -> Option<usize> {
        let lab: Vec<usize> = cells.iter().map(|c| c.trailing_zeros() as usize).collect();
        let mut pos = [0usize; 64];
        for (i, &v) in lab.iter().enumerate() {
            pos[v] = i;
        }
        let rows: Vec<u64> = lab
            .iter()
            .map(|&v| Bits(self.adj[v]).fold(0u64, |acc, u| acc | bit(pos[u])))
            .collect();

        let Some(first) = &self.first else {
            let leaf = Leaf {
                lab,
                rows,
                path: path.to_vec(),
            };
            self.best = Some(Leaf {
                lab: leaf.lab.clone(),
                rows: leaf.rows.clone(),
                path: leaf.path.clone(),
            });
            self.first = Some(leaf);
            return None;
        };

        if rows == first.rows {
            let level = common_prefix(&first.path, path);
            let gen = mapping(&first.lab, &lab, self.n);
            self.add_generator(gen);
            return Some(level);
        }
        let best = self.best.as_ref().unwrap();
        match rows.cmp(&best.rows) {
            std::cmp::Ordering::Less => {
                self.best = Some(Leaf {
                    lab,
                    rows,
                    path: path.to_vec(),
                });
                None
            }
            std::cmp::Ordering::Equal => {
                let level = common_prefix(&best.path, path);
                let gen = mapping(&best.lab, &lab, self.n);
                self.add_generator(gen);
                Some(level)
            }
            std::cmp::Ordering::Greater => None,
        }
    }

    fn add_generator(&mut self, gen: Vec<usize>) {
        debug_assert!(is_automorphism(self.adj, &gen));
        if gen.iter().enumerate().any(|(i, &j)| i != j) {
            self.generators.push(gen);
        }
    }
}

fn common_prefix(a: &[usize], b: &[usize]) -> usize {
    a.iter().zip(b).take_while(|(x, y)| x == y).count()
}

/// The vertex map sending `from[i]` to `to[i]`.
fn mapping(from: &[usize], to: &[usize], n: usize) -> Vec<usize> {
    let mut gen = vec![0usize; n];
    for (&a, &b) in from.iter().zip(to) {
        gen[a] = b;
    }
    gen
}

pub(crate) fn is_automorphism(adj: &[u64], perm: &[usize]) -> bool {
    (0..adj.len()).all(|u| {
        let image = Bits(adj[u]).fold(0u64, |acc, v| acc | bit(perm[v]));
        image == adj[perm[u]]
    })
}

/// Orbit representatives of the group generated by those generators fixing
/// every vertex of `fixed`.
fn orbit_representatives(n: usize, generators: &[Vec<usize>], fixed: &[usize]) -> Vec<usize> {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for gen in generators {
        if fixed.iter().any(|&v| gen[v] != v) {
            continue;
        }
        for (v, &w) in gen.iter().enumerate() {
            let (a, b) = (find(&mut parent, v), find(&mut parent, w));
            if a != b {
                let (lo, hi) = if a < b { (a, b) } else { (b, a) };
                parent[hi] = lo;
            }
        }
    }
    (0..n).map(|v| find(&mut parent, v)).collect()
}

/// Refines an ordered partition until it is equitable, splitting by every
/// set in `queue` and by every fragment produced along the way.
fn refine(adj: &[u64], cells: &mut Vec<u64>, queue: Vec<u64>) {
    let mut queue = std::collections::VecDeque::from(queue);
    let n = adj.len();
    let mut counts = [0u32; 64];
    while let Some(splitter) = queue.pop_front() {
        if cells.len() == n {
            return;
        }
        let mut i = 0;
        while i < cells.len() {
            let cell = cells[i];
            if cell.count_ones() == 1 {
                i += 1;
                continue;
            }
            let mut lo = u32::MAX;
            let mut hi = 0;
            for v in Bits(cell) {
                let c = (adj[v] & splitter).count_ones();
                counts[v] = c;
                lo = lo.min(c);
                hi = hi.max(c);
            }
            if lo == hi {
                i += 1;
                continue;
            }
            let mut fragments: Vec<(u32, u64)> = Vec::new();
            for v in Bits(cell) {
                match fragments.iter_mut().find(|(c, _)| *c == counts[v]) {
                    Some((_, m)) => *m |= bit(v),
                    None => fragments.push((counts[v], bit(v))),
                }
            }
            fragments.sort_unstable_by_key(|&(c, _)| c);
            let k = fragments.len();
            cells.splice(i..=i, fragments.iter().map(|&(_, m)| m));
            queue.extend(fragments.iter().map(|&(_, m)| m));
            i += k;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::seq::SliceRandom;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn petersen() -> Graph {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
        }
        Graph::build(10, &edges).unwrap()
    }

    /// Orbits by trying every permutation; the independent check for small orders.
    fn brute_orbits(g: &Graph) -> Vec<usize> {
        fn heap(k: usize, perm: &mut Vec<usize>, g: &Graph, out: &mut Vec<usize>) {
            if k <= 1 {
                if is_automorphism(g.rows(), perm) {
                    for v in 0..perm.len() {
                        out[v] = out[v].min(perm[v]);
                    }
                }
                return;
            }
            for i in 0..k {
                heap(k - 1, perm, g, out);
                if k % 2 == 0 {
                    perm.swap(i, k - 1);
                } else {
                    perm.swap(0, k - 1);
                }
            }
        }
        let n = g.order();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut out: Vec<usize> = (0..n).collect();
        heap(n, &mut perm, g, &mut out);
        out
    }

    #[test]
    fn canonical_form_is_invariant_under_relabelling() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let c4 = Graph::cycle(4).unwrap();
        let mut perm: Vec<usize> = (0..4).collect();
        perm.shuffle(&mut rng);
        let relabelled = c4.permuted(&perm).unwrap();
        assert_eq!(canonical_form(&c4).unwrap(), canonical_form(&relabelled).unwrap());
        assert!(are_isomorphic(&c4, &relabelled).unwrap());

        let k3 = Graph::complete(3).unwrap();
        assert_eq!(canonical_form(&k3).unwrap(), k3);
        assert!(!are_isomorphic(&k3, &Graph::path(3).unwrap()).unwrap());
    }

    #[test]
    fn labeling_reproduces_canonical_graph() {
        let g = petersen();
        let canon = canonical_labeling(&g).unwrap();
        let mut perm = vec![0; g.order()];
        for (i, &v) in canon.labeling.iter().enumerate() {
            perm[v] = i;
        }
        assert_eq!(g.permuted(&perm).unwrap(), canon.graph);
        // vertex-transitive
        assert!(canon.orbits.iter().all(|&o| o == 0));
        for gen in &canon.generators {
            assert!(is_automorphism(g.rows(), gen));
        }
    }

    #[test]
    fn symmetric_graphs_finish_quickly() {
        for n in 1..=CANON_LIMIT {
            let k = Graph::complete(n).unwrap();
            let canon = canonical_labeling(&k).unwrap();
            assert_eq!(canon.graph, k);
            assert!(canon.orbits.iter().all(|&o| o == 0));
            let e = Graph::empty(n).unwrap();
            assert_eq!(canonical_form(&e).unwrap(), e);
        }
    }

    #[test]
    fn rejects_large_graphs() {
        let g = Graph::empty(CANON_LIMIT + 1).unwrap();
        assert!(matches!(canonical_form(&g), Err(Error::TooLarge { .. })));
    }

    #[test]
    fn orbits_match_brute_force() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        use rand::Rng;
        for _ in 0..300 {
            let n = rng.gen_range(1..=7);
            let p: f64 = rng.gen_range(0.1..0.9);
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(p) {
                        edges.push((u, v));
                    }
                }
            }
            let g = Graph::build(n, &edges).unwrap();
            let canon = canonical_labeling(&g).unwrap();
            assert_eq!(canon.orbits, brute_orbits(&g), "{g:?}");
        }
    }

    #[test]
    fn refinement_splits_by_degree() {
        let star = Graph::star(3).unwrap();
        let mut cells = vec![low_mask(4)];
        refine(star.rows(), &mut cells, vec![low_mask(4)]);
        assert_eq!(cells, vec![0b1110, 0b0001]);
    }
}
