//! Exact computer algebra for PBW deformations of group extensions of
//! quantum symmetric algebras (quantum Drinfeld orbifold algebras).
//!
//! The crate decides, by three independent methods, whether a parameter map
//! kappa defines such a deformation:
//!
//! * directly, from the four necessary-and-sufficient conditions on kappa;
//! * homologically, from Gerstenhaber brackets on the Koszul cochain complex;
//! * by an exact dimension count in a degree-truncated quotient.
//!
//! It also converts deformations over the trivial group to and from
//! generalized enveloping algebras of color Lie algebras. All coefficients
//! are exact elements of cyclotomic fields; nothing is floating point.

pub mod algebra;
pub mod check;
pub mod group;
pub mod presentation;
pub mod scalar;

pub use algebra::{Algebra, AlgebraElement, FreeWord, Letter, Monomial};
pub use check::{CheckIssue, CheckReport};
pub use group::{check_q_compatibility, quantum_minor_det, validate_group, ActionMatrix, GroupTable};
pub use presentation::{parse_spec, DeformationSpec, KappaMap, QMatrix, SpecError};
pub use scalar::{parse_scalar, CycloScalar, Rational, ScalarError};
