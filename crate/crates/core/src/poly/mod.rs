//! Exact polynomial arithmetic and the Groebner oracle.

pub mod field;
pub mod groebner;
pub mod linalg;
pub mod monomial;
pub mod polynomial;

pub use field::{Field, FieldSpec, Fp};
pub use groebner::{buchberger, initial_ideal_gens, is_groebner_basis, reduce, s_polynomial};
pub use linalg::rank;
pub use monomial::{minimalize, monomials_of_degree, monomials_outside, Monomial};
pub use num_rational::BigRational as Rational;
pub use polynomial::{parse_polynomial, Polynomial, VariableSet};
