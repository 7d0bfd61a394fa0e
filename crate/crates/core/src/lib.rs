//! Exact refined enumeration of alternating sign matrices.
//!
//! The crate counts monotone triangles with a prescribed bottom row, builds
//! the singly-, doubly- and `d`-refined enumeration tables, extends the
//! doubly-refined table to a square matrix, and checks the linear relations,
//! polynomial expansions and closed formulas satisfied by these numbers.
//! All arithmetic is exact.

#![allow(clippy::needless_range_loop)]

pub mod arith;
pub mod cli;
pub mod error;
pub mod poly;
pub mod refined;
pub mod triangle;

#[cfg(test)]
mod testdata;

pub use arith::{Int, Rat};
pub use error::{Error, Result};
