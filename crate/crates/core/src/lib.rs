//! Exact integer combinatorics around Fibonacci-type upper Hessenberg matrices.
//!
//! The crate covers four connected pieces:
//!
//! - [`fib`]: extended-index Fibonacci numbers (`f_{-1} = 1`, `f_0 = 0`),
//!   Fibonacci polynomials and binomial coefficients.
//! - [`hessenberg`]: upper Hessenberg matrices with a fixed `-1` subdiagonal,
//!   their determinants by the linear recurrence, principal minors,
//!   characteristic polynomials and cofactors, plus an independent
//!   fraction-free elimination determinant used as an oracle.
//! - [`convolved`]: convolved Fibonacci numbers by three routes (power series,
//!   binomial double sum, principal-minor sums).
//! - [`compositions`]: the triangle `c(n, k)` of compositions of `n` with
//!   exactly `k` parts equal to one, by five routes.
//!
//! [`output`] and [`verify`] back the `convfib` command-line tool.
//!
//! Matrix and polynomial code is generic over any commutative [`Ring`]; the
//! aliases below fix the scalar to [`BigInt`] for everyday use.

pub mod compositions;
pub mod convolved;
pub mod error;
pub mod fib;
pub mod hessenberg;
pub mod output;
pub mod poly;
pub mod scalar;
pub mod verify;

pub use num_bigint::BigInt;

pub use crate::error::{Error, Result};
pub use crate::hessenberg::{DenseMatrix, HessenbergMatrix};
pub use crate::poly::Polynomial;
pub use crate::scalar::{ExactDiv, Ring};

/// Exact integer polynomial; coefficient `i` multiplies `x^i`.
pub type IntPolynomial = Polynomial<BigInt>;
/// Hessenberg matrix with arbitrary-precision integer entries.
pub type IntHessenberg = HessenbergMatrix<BigInt>;
/// Dense square matrix with arbitrary-precision integer entries.
pub type IntMatrix = DenseMatrix<BigInt>;
