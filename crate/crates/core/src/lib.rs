//! Exact-arithmetic constructions of quantum inverse semigroups, Hopf
//! algebroids over commutative bases, and their biretractions.
//!
//! Everything is computed over ℚ. Infinite-dimensional models (Laurent
//! algebroid, quantum torus) are checked on a finite degree window.

pub mod algebra;
pub mod algebroid;
pub mod biretraction;
pub mod error;
pub mod group;
pub mod groupoid;
pub mod linear;
pub mod qisg;
pub mod report;
pub mod semigroup;

pub use error::{Error, Result};
pub use linear::{int, ratio, BasedSpace, Comb, Label, LinMap, Scalar, Subspace, Vector};
