//! Exact-arithmetic models of Specht module presentations by Garnir-type
//! relations and of Schur module cokernels on the general linear group side.
//!
//! The crate has three layers:
//!
//! * combinatorics: partitions, tableaux counting, subset enumeration
//!   ([`combinat`]), column tabloids and relation families ([`specht`]);
//! * the exterior algebra of `Q^n` with exact signs and the equivariant
//!   maps built from its Hopf structure ([`exalg`]), plus concrete Schur
//!   module models as cokernels ([`schur`]);
//! * closed-form arithmetic criteria for when a relation family presents
//!   the Specht module ([`criteria`]) and the exact sparse linear algebra
//!   every rank/cokernel computation reduces to ([`exactla`]).
//!
//! All arithmetic is exact (rationals / big integers); ranks of large
//! sparse matrices are computed modulo two independent 62-bit primes and
//! cross-checked, with a fully exact fraction-free path available.

pub mod combinat;
pub mod criteria;
pub mod exactla;
pub mod exalg;
pub mod schur;
pub mod specht;

mod error;

pub use error::Error;

/// Exact rational scalar used throughout the crate.
pub type Rat = num::BigRational;
/// Arbitrary-precision integer used by the arithmetic criteria.
pub type Int = num::BigInt;
