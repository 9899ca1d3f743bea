//! Exact algorithms for hamiltonicity questions on small graphs.
//!
//! The crate provides a bitset graph type capped at 64 vertices, graph6 I/O,
//! an induced-subgraph matcher over a fixed catalog of forbidden patterns,
//! exact toughness/connectivity/independence solvers, Hamilton- and
//! longest-cycle search with machine-checkable certificates, a recognizer
//! for the layered class aleph together with an executable hamiltonicity
//! dichotomy, streaming enumeration of non-isomorphic graphs, and a claim
//! harness that verifies theorem-shaped statements over whole graph
//! universes and hunts for conjecture counterexamples.
//!
//! Every reported finding is re-validated through an independent solver
//! route (bitmask DP for hamiltonicity, subset-permutation scan for pattern
//! matching, full subset scan for toughness) before it reaches a report.

pub mod aleph;
pub mod canon;
pub mod cycles;
pub mod enumeration;
pub mod graph;
pub mod graph6;
pub mod harness;
pub mod invariants;
pub mod patterns;
pub mod rational;
pub mod segments;

pub use aleph::{
    in_aleph, in_aleph_exhaustive, theorem1_dichotomy, validate_aleph_cert, AlephCert,
    AlephCertError, DichotomyError, DichotomyResult, ProofTraceViolation, TerminalKind,
};
pub use canon::{canonical_form, canonical_labeling, CanonError, CanonicalCode};
pub use cycles::{
    hamiltonian_cycle, hamiltonian_cycle_dp, is_dominating, longest_cycle, CertError, CycleCert,
    PathWitness,
};
pub use enumeration::{enumerate_graphs, EnumerationError, GraphEnumerator};
pub use graph::{Graph, VertexSet, MAX_VERTICES};
pub use graph6::{
    from_graph6, read_graph6_stream, to_graph6, Graph6Error, Graph6LineError, Graph6Reader,
    OnBadLine,
};
pub use harness::{
    gallery_check, hunt, verify_claim, Claim, ClaimId, ClaimKind, HarnessError, UniverseSpec,
    Verdict, VerificationReport,
};
pub use invariants::{
    independence_number, independence_number_exhaustive, is_k_connected, is_t_tough, toughness,
    toughness_exhaustive, vertex_connectivity, ToughnessResult,
};
pub use patterns::{
    catalog, contains_induced, contains_induced_exhaustive, is_free, is_free_of, Embedding,
    Pattern, PatternId,
};
pub use rational::Rational;
pub use segments::{segment_decomposition, ElementarySegment, SegmentDecomposition, SegmentError};
