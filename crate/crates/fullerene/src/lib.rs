//! Structural analysis of fullerene graphs — 3-connected cubic planar
//! graphs whose faces are pentagons and hexagons — with a focus on the
//! nanotube family: two pentagonal caps joined by `r` rings of five
//! hexagons (`n = 10r + 20` vertices).
//!
//! The crate is organized around one pipeline:
//!
//! - [`graph`]: combinatorial embeddings as rotation systems, face tracing,
//!   duals, cycle splitting, and fullerene validation.
//! - [`generate`]: the parametric tube generator [`nanotube`], whose vertex
//!   numbering makes cap/ring coordinates pure arithmetic.
//! - [`connectivity`]: cyclic edge cutsets — classification, exhaustive and
//!   structural searches, cyclic edge connectivity, and the six-pentagon
//!   count enclosed by a cap boundary.
//! - [`rings`]: rings of five faces, their attachment profiles, the
//!   inner-face/outer-face/tube-wall trichotomy, pentacap detection, and
//!   the full cap–rings–cap decomposition.
//! - [`hamilton`]: Hamilton cycles built constructively as face-path
//!   boundaries, a ring-contraction recursion, variant enumeration with a
//!   guaranteed family size of `5·2^(r/2+1)` (even `r`) or `5·2^((r+1)/2)`
//!   (odd `r`), plus two independent exhaustive searches used as oracles.
//! - [`matchings`]: perfect matchings split off Hamilton cycles, two
//!   independent exact counters, and the exponential lower bound
//!   `15·2^(n/20)` next to the general floor `⌈3(n+2)/4⌉`.
//! - [`io`]: a line-oriented text format and the binary planar-code format,
//!   both round-tripping byte-identically.
//! - [`report`]: one deterministic, sectioned text report assembling all of
//!   the above.
//!
//! Exhaustive searches are deliberate: they exist to cross-check the
//! structural algorithms on small instances and are guarded by explicit
//! vertex budgets.

pub mod connectivity;
pub mod generate;
pub mod graph;
pub mod hamilton;
pub mod io;
pub mod matchings;
pub mod report;
pub mod rings;

pub use generate::{bottom_center, cycle_vertex, nanotube, nanotube_faces, top_center};
pub use graph::{
    dual_graph, embedding_from_faces, split_at_cycle, CycleSide, CycleSplit, DualGraph,
    DualNeighbor, Edge, EmbeddedGraph, Face, FullereneReport, GraphError,
};
pub use connectivity::{
    classify_cutset, cycle_ins_out, cyclic_edge_connectivity, find_cyclic_5_cutsets,
    find_cyclic_5_cutsets_exhaustive, has_nontrivial_cyclic_5_cutset, is_cyclic_cutset,
    pentagons_within, six_pentagons_inside, Classification, CutsetError, EdgeCutset,
};
pub use hamilton::{
    brute_force_hamilton, brute_force_hamilton_all, brute_force_hamilton_edges, build_hamilton,
    contract_ring, enumerate_hamilton_variants, expand_face_path, face_path_boundary,
    verify_hamilton, FacePath, HamiltonCycle, HamiltonError, HamiltonSearch, TubeParity,
    HAMILTON_SEARCH_BUDGET,
};
pub use io::{
    read_planar_code, read_text_rotation, write_planar_code, write_text_rotation, IoError,
    PLANAR_CODE_HEADER,
};
pub use matchings::{
    count_perfect_matchings, count_perfect_matchings_deletion_contraction, hamilton_lower_bound,
    matching_lower_bound, matchings_from_hamilton, prior_matching_bound, BoundReport, Matching,
    MatchingError, MATCHING_COUNT_BUDGET,
};
pub use report::{
    analyze_graph, cutset_census, decomposition_summary, hamilton_summary, matching_summary,
    ring_summary, write_report, Analysis, AnalysisError, AnalyzeOptions, CutsetCensus,
    DecompositionSummary, HamiltonSummary, MatchingSummary, OracleOutcome, RingSummary,
};
pub use rings::{
    check_ring_dichotomy, face_neighbor_ring, find_face_rings, find_pentacaps,
    nanotube_decomposition, ring_type, DichotomyArm, FaceRing, NanotubeDecomposition, Pentacap,
    RingError, RingSide, RingType,
};
