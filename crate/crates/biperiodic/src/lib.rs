//! Exact construction and verification of generalized bi-periodic Fibonacci
//! sequences over quaternion and octonion algebras.
//!
//! The scalar sequence alternates two recurrence coefficients by index parity:
//!
//! ```text
//! w(n) = a*w(n-1) + w(n-2)   for even n >= 2
//! w(n) = b*w(n-1) + w(n-2)   for odd  n >= 2
//! ```
//!
//! with arbitrary rational `w(0)`, `w(1)` and nonzero rational `a`, `b`.
//! Packing four (resp. eight) consecutive terms as coefficients of a fixed
//! quaternion (resp. octonion) basis yields hypercomplex sequences whose
//! closed forms — Binet expressions, Catalan/Cassini-type identities, matrix
//! representations, norm values, partial sums, and generating functions —
//! this crate evaluates exactly and checks against the recurrence.
//!
//! Everything is computed over arbitrary-precision rationals ([`Rational`])
//! or over the quadratic extension ring Q\[sqrt(D)\] ([`QuadraticElement`],
//! with D = a²b² + 4ab), so every comparison is exact: no floating point,
//! no tolerances.
//!
//! The crate is `no_std` (it requires `alloc`); IO and serialization live in
//! the companion CLI crate.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod error;
pub mod hypercomplex;
pub mod hyperseq;
pub mod identities;
pub mod quadratic;
pub mod rational;
pub mod report;
pub mod scalar;
pub mod series;

pub use error::Error;
pub use hypercomplex::{Hypercomplex, MulTable, Octonion, Quaternion, Ring};
pub use quadratic::{QuadraticContext, QuadraticElement};
pub use rational::Rational;
pub use report::IdentityReport;
pub use scalar::{Params, SequenceEngine};
