//! A toolkit for Kochen-Specker (KS) hypergraphs in the MMPH notation.
//!
//! An MMPH is a connected hypergraph with `k` labeled vertices and `l`
//! hyperedges of between 2 and `n` (the rank) vertices, any two hyperedges
//! sharing at most `n−2` vertices. With a coordinatization — an assignment
//! of nonzero integer vectors to vertices making each hyperedge mutually
//! orthogonal — a rank-`n` MMPH describes measurement contexts in an
//! `n`-dimensional Hilbert space. An MMPH is a KS set when no {0,1}
//! assignment gives every hyperedge exactly one 1; such sets are
//! noncolorable witnesses of quantum contextuality.
//!
//! The crate covers the full working cycle:
//!
//! - [`text`]: bit-exact parsing and serialization of the `.mmph` string
//!   notation and `.vec` coordinatization tables;
//! - [`hypergraph`]: the data model and structural validation;
//! - [`canon`]: canonical forms and isomorphism;
//! - [`coord`]: exact-integer orthogonality, coordinatization verification,
//!   and generation of the master MMPH of all orthogonal bases over a ray
//!   set (Bron-Kerbosch clique enumeration);
//! - [`coloring`]: the noncolorability decider, criticality, stripping and
//!   randomized critical-set search, and (k,l) histograms;
//! - [`upscale`]: dimensional upscaling of two coordinatized parents into a
//!   higher dimension, minimizing merged vertex count.
//!
//! Everything is exact integer arithmetic; there is no floating point and
//! no tolerance anywhere. All randomized searches take explicit seeds and
//! produce identical output across runs and thread counts.

pub mod canon;
pub mod coloring;
pub mod coord;
pub mod hypergraph;
pub mod label;
pub mod ray;
pub mod text;
pub mod upscale;

pub use canon::{canonicalize, isomorphic, CanonicalForm};
pub use coloring::{
    check_colorable, check_colorable_with_budget, check_critical, check_critical_with_budget,
    histogram, remove_vertex_and_edges, strip_search, strip_vertex, Coloring, CriticalityReport,
    EdgeRole, Histogram, KsOutcome, KsVerdict, StripBudget, StripFilters, StripOutcome,
};
pub use coord::{
    generate_bases, verify_coordinatization, Coordinatization, GeneratedBases,
    OrthogonalityGraph, VerificationReport,
};
pub use hypergraph::{Hyperedge, Mmph, ValidationReport, Violation};
pub use label::VertexLabel;
pub use ray::Ray;
pub use text::{
    parse_mmph, parse_vector_document, parse_vectors, serialize_mmph, MmphDocument, ParseError,
    ParseErrorKind, VectorTable,
};
pub use upscale::{
    embed_first, embed_second, search_min_vertices, upscale_pipeline, Parent, SearchOutcome,
    UpscaleCandidate, UpscaleParams, UpscalePlan, UpscaleReport,
};
