//! Diagrammatic invariants of knots from their checkerboard surfaces.
//!
//! Diagrams live on closed oriented surfaces as 4-valent combinatorial maps.
//! From a checkerboard coloring the crate computes Betti numbers, euler
//! numbers and Gordon–Litherland (Goeritz) forms of both surfaces, the knot
//! signature, the spanning-surface defect bound, Howie's quantity, Greene's
//! definiteness test and a crosscap-number bound; detects alternating and
//! almost alternating diagrams; and lifts an almost alternating diagram to a
//! cellular alternating diagram on the torus. A Seifert-matrix oracle checks
//! the signature and determinant independently.

pub mod alternating;
pub mod corpus;
pub mod diagram;
pub mod error;
pub mod form;
pub mod generate;
pub mod invariants;
pub mod oracle;
pub mod tables;
pub mod verify;

pub use alternating::{
    dealternators, is_alternating, is_nugatory, lift_to_torus, type_b_coloring, AlternationStatus,
    DealternatorReport,
};
pub use diagram::{
    checkerboard_coloring, classify_crossings, faces, gauss_code, genus, parse_pd, writhe, AbType,
    CheckerboardColoring, ClassCounts, Color, CombinatorialMap, Convention, CrossingClass, Dart,
    FaceSet, GaussCode, Pass, Roman,
};
pub use error::{Error, Result};
pub use form::{Inertia, SymmetricIntegerForm};
pub use generate::{generate, Kind};
pub use invariants::{
    betti_checkerboard, crosscap_bound, defect_bound, euler_numbers, goeritz_matrix,
    greene_definiteness, howie_quantity, knot_signature, surface_orientable, Definiteness,
    InvariantReport, SurfacePairInvariants,
};
pub use oracle::{determinant_oracle, seifert_matrix, signature_oracle, SeifertMatrix};
pub use verify::{verify, Suite, VerificationSummary};
