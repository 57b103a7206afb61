//! Exact arithmetic substrate: prime fields, rationals, dense matrices and
//! univariate polynomials.

pub mod field;
pub mod matrix;
pub mod poly;

pub use field::{
    binomial_table, is_prime_u64, rational, reduce_rational_point, Field, FieldKind, FieldScalar,
    Fp, Rationals, MERSENNE_61, SECOND_PRIME,
};
pub use matrix::{DenseMatrix, RankCertificate, Rref};
pub use poly::{interpolate_consecutive, root_multiplicities, roots_in_field, UniPoly};
