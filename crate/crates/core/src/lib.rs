//! Exact verification of Groebner bases for tangent cones to Richardson
//! varieties in the Lagrangian Grassmannian, at the torus-fixed point
//! `e_beta`.
//!
//! The crate builds the affine patch and the ideal of the tangent cone,
//! proposes the candidate basis of good pairs, and checks it against an
//! independent Buchberger computation. It also implements the counting
//! argument behind the result: special multisets, the bounded RSK
//! correspondence onto notched bitableaux, and standard monomials.

pub mod brsk;
pub mod error;
pub mod grid;
pub mod index;
pub mod patch;
pub mod poly;
pub mod standard;
pub mod verify;

pub use brsk::{brsk, brsk_inverse, top_bot, BitableauRow, NotchedBitableau, Side};
pub use error::{Error, Result};
pub use grid::{BetaGrid, Chain, GridMultiset, GridPoint};
pub use index::{admissible_pairs, enumerate_isotropic, AdmissiblePair, FixedPointIndex};
pub use patch::{ConeIdeal, PatchMatrix};
pub use poly::{Field, FieldSpec, Fp, Monomial, Polynomial, Rational};
pub use standard::StandardMonomial;
pub use verify::{verify_case, CaseSpec, Report, Verdict};
