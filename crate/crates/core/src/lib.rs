//! Exact similarity detection for implicit real plane algebraic curves.
//!
//! Two curves `f(x, y) = 0` and `g(x, y) = 0` with rational coefficients are
//! similar when some map `z -> a z + b` (orientation-preserving) or
//! `z -> a conj(z) + b` (orientation-reversing) carries one onto the other.
//! [`decide_similar`] finds every such map exactly.

pub mod error;
pub mod exact;
pub mod poly;

pub use error::{Error, Result};
pub use exact::{GaussianRational, Rational};
pub use poly::{MultiPoly, RealAlgebraicNumber, RealNumber, UniPoly};
pub mod angle;
pub mod classify;
pub mod cli;
pub mod complexrep;
pub mod orientation;
pub mod parse;
pub mod simsystem;
pub mod solver;
