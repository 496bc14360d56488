//! Tension and bitension fields of Lie-algebra homomorphisms between the five
//! 3D unimodular Lie algebras with left-invariant metrics.
//!
//! The crate computes τ(ξ) and τ₂(ξ) at the Lie-algebra level, decides
//! harmonic/biharmonic verdicts on an exact-rational or float path,
//! cross-checks every value through independent trace-formula routes and the
//! closed forms of the classification, sweeps the classification case
//! catalog, and numerically searches for critical loci.

pub mod algebra;
pub mod audit;
pub mod classification;
pub mod closed_forms;
pub mod connection;
pub mod error;
pub mod homomorphism;
pub mod linalg;
pub mod metric;
pub mod params;
pub mod report;
pub mod scalar;
pub mod search;
pub mod tension;

pub use algebra::{catalog, AlgebraId, LieAlgebra};
pub use connection::{LCProduct, MetricLieAlgebra};
pub use error::{Error, Result};
pub use homomorphism::{conjugate, Family, Homomorphism, HypPair, UnitPair};
pub use linalg::{Matrix3, Vector3};
pub use metric::{adjoint_endo, adjoint_map, Metric, MetricFamily, OrthonormalFrame};
pub use params::Params;
pub use scalar::{Rat, Scalar};
pub use classification::{theorem_catalog, verify_case, verify_equivalence, SweepResult, TheoremCase};
pub use search::{minimize, scan_biharmonic_not_harmonic, SearchResult, SearchSpec};
pub use tension::{analyze, tau, tau2, tau2_via_trace, tau_via_trace, test_matrix, Problem, TensionReport, DEFAULT_TOL};
