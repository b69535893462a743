//! Exact analysis of small graphs: domination number and vertex
//! domination-criticality, maximum matchings and factor-criticality with
//! Tutte-type certificates, canonical forms, isomorph-free generation, and the
//! named 11-vertex graphs around the `K_{1,5}`-free 3-vertex-critical theorem.

pub mod canon;
pub mod catalog;
pub mod criticality;
pub mod domination;
pub mod enumeration;
pub mod error;
pub mod graph;
pub mod graph6;
pub mod matching;

pub use canon::{are_isomorphic, canonical_form, canonical_labeling, Canon};
pub use catalog::{
    case42_build, enumerate_case42_candidates, k2n_minus_pm, named_graph, CatalogGraph,
    Case42Skeleton, NamedGraph,
};
pub use criticality::{
    check_facts, check_lemma2, check_lemma3, check_lemma4, is_k1k_free, is_k_vertex_critical,
    theorem_check, CriticalityReport, Hypotheses, TheoremStatus, TheoremVerdict,
};
pub use domination::{domination_number, dominating_pairs, is_dominating, DominationResult};
pub use enumeration::{count_matching_filter, enumerate, enumerate_graphs, EnumFilter};
pub use error::{Error, Result};
pub use graph::{ComponentPartition, Graph, VertexSet};
pub use graph6::{from_graph6, to_graph6, Graph6Error};
pub use matching::{
    brute_force_matching_size, factor_critical_violator, has_perfect_matching,
    is_factor_critical, maximum_matching, tutte_violator, Certificate, CertificateKind, Matching,
};
