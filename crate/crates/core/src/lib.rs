//! Exact computations on du Val curves and Halphen surfaces.
//!
//! * [`exactalg`]: prime fields, rationals, dense elimination, univariate polynomials.
//! * [`picard`]: the intersection lattice of the plane blown up in ten points.
//! * [`cubic`]: the cubic through nine points, chord-tangent class reduction, torsion.
//! * [`linsys`]: interpolation with assigned multiple points and cohomology tables.
//! * [`wahl`]: the Gauss-Wahl map of a du Val curve and its corank.
//! * [`acceptance`]: the end-to-end acceptance checks shared by the CLI and tests.

pub mod acceptance;
pub mod cache;
pub mod cubic;
pub mod error;
pub mod exactalg;
pub mod form;
pub mod linsys;
pub mod picard;
pub mod wahl;

pub use error::{Error, Result};
