//! Exact arithmetic for knots coloured by metabelian groups `G = C_m ⋉ A`.
//!
//! A knot colouring is encoded by surface data `(M, V)`: an integer Seifert
//! matrix together with a vector of elements of the finite abelian group `A`.
//! This crate validates such data, applies the S-equivalence moves, computes
//! the untying invariants `su`, `cu`, the class `s ∈ A∧A` of the colouring and
//! the Y-obstruction in `∧³A`, and builds the base-knot tables for the
//! metacyclic, rank-two and `A₄` families.
//!
//! Everything is `no_std` with `alloc`; JSON and the command line live in the
//! `gknot` crate.
#![cfg_attr(not(test), no_std)]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod abelian;
pub mod arith;
pub mod classify;
pub mod diagram;
mod error;
pub mod invariants;
pub mod matrix;
pub mod surface;

pub use abelian::{FiniteAbelian, GroupElement, GroupSpec, Wedge2, Wedge3};
pub use error::{Error, Result};
pub use surface::{SurfaceData, ValidationReport};
