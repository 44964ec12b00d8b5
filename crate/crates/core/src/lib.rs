//! Exact-arithmetic commutative algebra for Artinian quotients of polynomial
//! rings.
//!
//! The crate builds finite-dimensional quotient algebras from Gröbner bases
//! over the rationals or a prime field, entirely in exact arithmetic:
//!
//! * [`poly`]: sparse multivariate polynomials, lex and two-block monomial
//!   orders, parsing and canonical rendering;
//! * [`groebner`]: S-polynomials, multivariate division, Buchberger's
//!   algorithm with reduced-basis normalization, ideal membership;
//! * [`quotient`]: standard-monomial bases, socles, maximal-ideal powers,
//!   Gorenstein tests, and nilpotent exp/log;
//! * [`anfamily`]: a two-generated family of Gorenstein local algebras with
//!   relation, socle, derivation, and automorphism verifiers, plus a symbolic
//!   verifier that replays the invariance arguments step by step;
//! * [`htpair`]: complementary-hyperplane functionals and the projective
//!   hypersurface equations their kernels induce.

pub mod anfamily;
pub mod context;
pub mod error;
pub mod groebner;
pub mod htpair;
mod linalg;
pub mod parse;
pub mod poly;
pub mod quotient;
pub mod scalar;

pub use context::{Monomial, Order, VariableContext};
pub use error::{Error, Result};
pub use poly::Polynomial;
pub use scalar::{Field, Scalar};
