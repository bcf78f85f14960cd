//! Exact Laplacian spectra of small graphs and the classification of connected
//! graphs with a Laplacian eigenvalue of multiplicity `n - 3`.
//!
//! * [`graph`]: bitset graphs, named families, graph6, canonical forms.
//! * [`structure`]: components, diameter, induced-subgraph search, cographs.
//! * [`spectrum`]: integer characteristic polynomials, exact integer
//!   eigenvalues with multiplicities, complement/join spectrum formulas and a
//!   Jacobi eigensolver used as an independent numeric check.
//! * [`classify`]: maximum-multiplicity membership, the five spectral classes
//!   and the catalog of known members with their predicted spectra.
//! * [`enumerate`]: isomorphism-free enumeration up to order 9 and the
//!   exhaustive verification harness.

pub mod classify;
pub mod enumerate;
pub mod error;
pub mod graph;
pub mod spectrum;
pub mod structure;

pub use classify::{
    catalog, classify, k_max, verify_catalog_spectra, CatalogEntry, CatalogSource, Class, ClassId,
    ClassificationReport, MembershipRule,
};
pub use enumerate::{
    all_graphs, connected_graphs, spectrum_buckets, verify_theorem, EnumerationSummary,
    VerifyOptions,
};
pub use error::{Error, Result};
pub use graph::{
    canonical_form, family, from_graph6, is_isomorphic, to_graph6, CanonicalForm, FamilyId, Graph,
};
pub use spectrum::{
    charpoly, extract_spectrum, laplacian, laplacian_spectrum, numeric_eigenvalues, CharPoly,
    ExactSpectrum, IntMatrix, Poly,
};
