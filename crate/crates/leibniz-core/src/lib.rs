//! Exact rational arithmetic for finite-dimensional Leibniz algebras.
//!
//! The crate builds structure-constant tensors for a classified family of
//! solvable Leibniz algebras over a fixed quasi-filiform nilradical, and
//! provides the machinery to verify the classification's claims: identity
//! checking, characteristic series, centers, derivation spaces,
//! nil-independence, basis-change replay, quotients and nilradical
//! certificates. All arithmetic is exact; the only scalar type is an
//! arbitrary-precision rational.

pub mod derivations;
pub mod error;
pub mod families;
pub mod json;
pub mod linalg;
pub mod poly;
pub mod quotients;
pub mod rational;
pub mod series;
pub mod subspace;
pub mod suite;
pub mod tensor;
pub mod transforms;

pub use error::{Error, Result};
pub use linalg::{LinearMap, Vector};
pub use rational::Rational;
pub use subspace::Subspace;
pub use tensor::{IdentityViolation, Side, StructureTensor};
