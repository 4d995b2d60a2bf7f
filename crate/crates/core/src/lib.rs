//! Graph-symmetry toolkit: automorphism groups, canonical forms, and the
//! asymmetric index `ai(G)`, the fewest edge removals plus additions that
//! leave a graph with trivial automorphism group.

pub mod aut;
pub mod clique;
pub mod constructions;
pub mod edit;
pub mod enumerate;
pub mod families;
pub mod graph;
pub mod graph6;
pub mod theorems;

pub use aut::{
    are_isomorphic, automorphism_group, canonical_form, canonical_labeling,
    find_nontrivial_automorphism, is_asymmetric, is_automorphism, transposable_clique_lower_bound,
    transposable_pairs, AutGroup, AutReport, CanonicalForm, Permutation,
};
pub use edit::{
    apply_flips, asymmetric_index, count_nonisomorphic_asymmetrizations, lower_bound,
    witnesses_of_size, AiError, AiResult, FlipSet, Mode, SearchConfig, SearchStats,
};
pub use families::{paper_witness, FamilySpec, Sign, WitnessId};
pub use graph::{EdgePair, Graph, GraphError};
pub use graph6::{from_graph6, parse_edge_list, parse_graph6, to_graph6, to_graph6_string};
pub use theorems::{
    verify, verify_claim, verify_suite, ClaimReport, Evidence, Status, SuiteConfig,
};
