//! The four 11-vertex graphs G1-G4 and the 2-vertex-critical family.
//!
//! Vertex order for every 11-vertex graph here: `s1..s4` (0..=3, the 4-cycle),
//! `s5` (4), `c1..c6` (5..=10). `c1` and `c2` see the whole 4-cycle, `s5` sees
//! `c3..c6`, and each of `c3..c6` sees a pair of cycle vertices given by the
//! pattern `H`.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::canon::canonical_form;
use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_VERTICES};

pub const S5: usize = 4;

#[inline]
const fn c(j: usize) -> usize {
    4 + j
}

/// Attachment pairs of `c3..c6` on the cycle `s1 s2 s3 s4`, as indices `0..4`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Case42Skeleton {
    pub h_pattern: [[usize; 2]; 4],
}

impl Case42Skeleton {
    pub fn new(h_pattern: [[usize; 2]; 4]) -> Result<Self> {
        let skeleton = Case42Skeleton { h_pattern };
        skeleton.validate()?;
        Ok(skeleton)
    }

    /// Every `c_j` sees two distinct cycle vertices and every cycle vertex is
    /// seen exactly twice.
    pub fn validate(&self) -> Result<()> {
        let mut seen = [0usize; 4];
        for (j, &[a, b]) in self.h_pattern.iter().enumerate() {
            if a >= 4 || b >= 4 || a == b {
                return Err(Error::InvalidPattern(format!(
                    "c{} attaches to {{{a}, {b}}}",
                    j + 3
                )));
            }
            seen[a] += 1;
            seen[b] += 1;
        }
        if let Some(s) = seen.iter().position(|&d| d != 2) {
            return Err(Error::InvalidPattern(format!(
                "s{} has degree {} in H",
                s + 1,
                seen[s]
            )));
        }
        Ok(())
    }

    /// Whether `H` is a single 8-cycle rather than two 4-cycles.
    pub fn is_eight_cycle(&self) -> bool {
        let p = &self.h_pattern;
        let mut sorted: Vec<[usize; 2]> = p
            .iter()
            .map(|&[a, b]| if a < b { [a, b] } else { [b, a] })
            .collect();
        sorted.sort();
        sorted.dedup();
        sorted.len() == 4
    }

    pub fn all() -> Vec<Case42Skeleton> {
        const PAIRS: [[usize; 2]; 6] = [[0, 1], [0, 2], [0, 3], [1, 2], [1, 3], [2, 3]];
        let mut out = Vec::new();
        for a in PAIRS {
            for b in PAIRS {
                for c in PAIRS {
                    for d in PAIRS {
                        let sk = Case42Skeleton {
                            h_pattern: [a, b, c, d],
                        };
                        if sk.validate().is_ok() {
                            out.push(sk);
                        }
                    }
                }
            }
        }
        out
    }
}

pub fn case42_build(skeleton: &Case42Skeleton) -> Result<Graph> {
    skeleton.validate()?;
    let mut edges = vec![(0, 1), (1, 2), (2, 3), (3, 0)];
    for s in 0..4 {
        edges.push((c(1), s));
        edges.push((c(2), s));
    }
    for j in 3..=6 {
        edges.push((S5, c(j)));
        let [a, b] = skeleton.h_pattern[j - 3];
        edges.push((c(j), a));
        edges.push((c(j), b));
    }
    Graph::build(11, &edges)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum NamedGraph {
    G1,
    G2,
    G3,
    G4,
}

impl NamedGraph {
    pub const ALL: [NamedGraph; 4] = [NamedGraph::G1, NamedGraph::G2, NamedGraph::G3, NamedGraph::G4];

    pub fn skeleton(&self) -> Case42Skeleton {
        let h_pattern = match self {
            NamedGraph::G1 => [[0, 1], [1, 2], [2, 3], [3, 0]],
            NamedGraph::G2 => [[0, 1], [0, 1], [2, 3], [2, 3]],
            NamedGraph::G3 => [[0, 1], [1, 3], [0, 2], [2, 3]],
            NamedGraph::G4 => [[0, 2], [0, 2], [1, 3], [1, 3]],
        };
        Case42Skeleton { h_pattern }
    }
}

impl fmt::Display for NamedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            NamedGraph::G1 => "G1",
            NamedGraph::G2 => "G2",
            NamedGraph::G3 => "G3",
            NamedGraph::G4 => "G4",
        };
        f.write_str(s)
    }
}

impl FromStr for NamedGraph {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_uppercase().as_str() {
            "G1" => Ok(NamedGraph::G1),
            "G2" => Ok(NamedGraph::G2),
            "G3" => Ok(NamedGraph::G3),
            "G4" => Ok(NamedGraph::G4),
            _ => Err(Error::UnknownGraph(s.to_string())),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogGraph {
    pub name: NamedGraph,
    pub graph: Graph,
    /// the distinguished vertex `v_i` of the drawing: `s5` for G1/G2, `c3` for G3/G4.
    pub distinguished: usize,
}

// Drawings: cycle vertices on top at x = 1, 3, 5, 7 with s5 at x = 9,
// the c-vertices at the bottom at x = 0, 2, ..., 10. Each entry lists a bottom
// vertex and the top x-coordinates it is joined to.
const DRAWING_G1: [(usize, &[usize]); 6] = [
    (0, &[1, 3, 5, 7]),
    (2, &[1, 3, 5, 7]),
    (4, &[1, 3, 9]),
    (6, &[3, 5, 9]),
    (8, &[5, 7, 9]),
    (10, &[1, 7, 9]),
];
const DRAWING_G2: [(usize, &[usize]); 6] = [
    (0, &[1, 3, 5, 7]),
    (2, &[1, 3, 5, 7]),
    (4, &[1, 3, 9]),
    (6, &[1, 3, 9]),
    (8, &[5, 7, 9]),
    (10, &[5, 7, 9]),
];
const DRAWING_G3: [(usize, &[usize]); 6] = [
    (0, &[1, 3, 5, 7]),
    (2, &[1, 3, 5, 7]),
    (4, &[1, 3, 9]),
    (6, &[3, 7, 9]),
    (8, &[1, 5, 9]),
    (10, &[5, 7, 9]),
];
const DRAWING_G4: [(usize, &[usize]); 6] = [
    (0, &[1, 3, 5, 7]),
    (2, &[1, 3, 5, 7]),
    (4, &[1, 5, 9]),
    (6, &[3, 7, 9]),
    (8, &[1, 5, 9]),
    (10, &[3, 7, 9]),
];
// top edges drawn in every drawing: three segments and the arc from x = 1 to 7
const DRAWING_TOP: [(usize, usize); 4] = [(1, 3), (3, 5), (5, 7), (1, 7)];

fn from_drawing(bottom: &[(usize, &[usize]); 6]) -> Graph {
    let top = |x: usize| (x - 1) / 2;
    let low = |x: usize| 5 + x / 2;
    let mut edges: Vec<(usize, usize)> = DRAWING_TOP.iter().map(|&(a, b)| (top(a), top(b))).collect();
    for &(x, ends) in bottom {
        edges.extend(ends.iter().map(|&t| (low(x), top(t))));
    }
    Graph::build(11, &edges).expect("drawing transcription is a simple graph")
}

/// The graph as transcribed from its drawing.
pub fn drawn_graph(name: NamedGraph) -> Graph {
    match name {
        NamedGraph::G1 => from_drawing(&DRAWING_G1),
        NamedGraph::G2 => from_drawing(&DRAWING_G2),
        NamedGraph::G3 => from_drawing(&DRAWING_G3),
        NamedGraph::G4 => from_drawing(&DRAWING_G4),
    }
}

pub fn named_graph(name: NamedGraph) -> CatalogGraph {
    let distinguished = match name {
        NamedGraph::G1 | NamedGraph::G2 => S5,
        NamedGraph::G3 | NamedGraph::G4 => c(3),
    };
    CatalogGraph {
        name,
        graph: drawn_graph(name),
        distinguished,
    }
}

pub fn named_graph_by_name(name: &str) -> Result<CatalogGraph> {
    Ok(named_graph(name.parse()?))
}

/// `K_{2m}` minus the perfect matching `{(2i, 2i+1)}`.
pub fn k2n_minus_pm(m: usize) -> Result<Graph> {
    if m == 0 || 2 * m > MAX_VERTICES {
        return Err(Error::InvalidArgument(format!(
            "k2n_minus_pm needs 1 <= m <= 32, got {m}"
        )));
    }
    let n = 2 * m;
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if !(u % 2 == 0 && v == u + 1) {
                edges.push((u, v));
            }
        }
    }
    Graph::build(n, &edges)
}

/// One canonical representative per isomorphism class of Case 4.2 graphs,
/// in canonical order.
pub fn enumerate_case42_candidates() -> Vec<Graph> {
    let classes: BTreeSet<Graph> = Case42Skeleton::all()
        .iter()
        .map(|sk| {
            let g = case42_build(sk).expect("validated pattern");
            canonical_form(&g).expect("order 11 is within the canonical bound")
        })
        .collect();
    classes.into_iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::are_isomorphic;

    #[test]
    fn skeleton_validation() {
        assert!(Case42Skeleton::new([[0, 1], [1, 2], [2, 3], [3, 0]]).is_ok());
        assert!(Case42Skeleton::new([[0, 1], [0, 1], [0, 1], [2, 3]]).is_err());
        assert!(Case42Skeleton::new([[0, 0], [1, 1], [2, 3], [2, 3]]).is_err());
        assert!(Case42Skeleton::new([[0, 4], [1, 2], [2, 3], [3, 0]]).is_err());
        // each c picks one of 6 pairs: 90 choices make H 2-regular
        assert_eq!(Case42Skeleton::all().len(), 90);
    }

    #[test]
    fn h_shapes() {
        assert!(NamedGraph::G1.skeleton().is_eight_cycle());
        assert!(NamedGraph::G3.skeleton().is_eight_cycle());
        assert!(!NamedGraph::G2.skeleton().is_eight_cycle());
        assert!(!NamedGraph::G4.skeleton().is_eight_cycle());
    }

    #[test]
    fn drawings_agree_with_skeletons() {
        for name in NamedGraph::ALL {
            let built = case42_build(&name.skeleton()).unwrap();
            let drawn = drawn_graph(name);
            assert!(are_isomorphic(&built, &drawn).unwrap(), "{name}");
            if name != NamedGraph::G4 {
                assert_eq!(built, drawn, "{name}");
            }
        }
    }

    #[test]
    fn case42_outputs_have_shape() {
        for sk in Case42Skeleton::all() {
            let g = case42_build(&sk).unwrap();
            assert_eq!(g.order(), 11);
            assert_eq!(g.size(), 24);
            assert!(g.min_degree() >= 3);
        }
        let bad = Case42Skeleton {
            h_pattern: [[0, 1], [0, 1], [0, 1], [0, 1]],
        };
        assert!(case42_build(&bad).is_err());
    }

    #[test]
    fn k2n_minus_pm_cases() {
        assert_eq!(k2n_minus_pm(1).unwrap(), Graph::empty(2).unwrap());
        assert!(are_isomorphic(&k2n_minus_pm(2).unwrap(), &Graph::cycle(4).unwrap()).unwrap());
        let oct = k2n_minus_pm(3).unwrap();
        assert_eq!(oct.size(), 12);
        assert!((0..6).all(|v| oct.degree(v) == 4));
        assert!(k2n_minus_pm(0).is_err());
        assert!(k2n_minus_pm(33).is_err());
        assert_eq!(k2n_minus_pm(32).unwrap().order(), 64);
    }

    #[test]
    fn names_parse() {
        assert_eq!("g3".parse::<NamedGraph>().unwrap(), NamedGraph::G3);
        assert!(matches!("G5".parse::<NamedGraph>(), Err(Error::UnknownGraph(_))));
        assert_eq!(named_graph_by_name("G1").unwrap().distinguished, 4);
        assert_eq!(named_graph(NamedGraph::G4).distinguished, 7);
    }
}
