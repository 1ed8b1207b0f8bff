//! Idempotents of commutative algebraic semigroups, computed combinatorially.
//!
//! A toric monoid is encoded by its character lattice and weight monoid; its
//! idempotents are the faces of the rational polyhedral cone spanned by the
//! weights, ordered by inclusion. The crate provides the exact lattice and
//! cone machinery behind that dictionary, the pipeline from the rational
//! spectrum of a diagonalizable matrix to the idempotents of the closure of
//! its powers, and a brute-force laboratory for finite semigroups.

pub mod cone;
pub mod eigen;
pub mod error;
pub mod finite;
pub mod io;
pub mod lattice;
pub mod lp;
pub mod monoid;
pub mod rational;
pub mod sample;

pub use error::{Error, Result};
