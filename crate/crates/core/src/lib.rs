//! Representation schemes of finitely presented associative algebras over
//! the rationals.
//!
//! The crate emits the generic-matrix ideal cutting out `Rep_A^n`, checks
//! and conjugates rational points, assembles the Hochschild cochain complex
//! with coefficients in `End(k^n)` at a point, reports tangent and Ext
//! dimensions, lifts infinitesimal deformations order by order, and handles
//! cyclic pointed representations (points of the Nori-Hilbert scheme).
//!
//! All arithmetic is exact.

pub mod cohomology;
pub mod error;
pub mod exactla;
pub mod format;
pub mod hilbert;
pub mod ncalg;
pub mod repscheme;

pub use error::{Error, Result};
