#![no_std]

//! # `pseudosym-core`
//!
//! Exact algebra for monomial curves of 4-generated pseudo-symmetric
//! numerical semigroups: the semigroup and its toric ideal, local standard
//! bases via Mora's normal form, the tangent cone, Hilbert series of
//! monomial ideals, and a Cohen-Macaulay test for the tangent cone.
//!
//! The crate needs only `alloc`; IO, JSON and the command line live in the
//! `pseudosym` crate.

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod cm;
pub mod error;
pub mod hilbert;
pub mod monomial;
pub mod ordering;
pub mod poly;
pub mod semigroup;
pub mod stdbasis;
pub mod text;
pub mod toric;

pub use error::{Error, Result};
pub use monomial::Monomial;
pub use ordering::MonomialOrdering;
pub use poly::{spoly, Coefficient, Polynomial, Term};
pub use semigroup::{NumericalSemigroup, PseudoSymmetricParams};

/// Number of variables of the ambient ring `K[X1, X2, X3, X4]`.
pub const NVARS: usize = 4;
