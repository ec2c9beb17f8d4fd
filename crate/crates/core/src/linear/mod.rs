//! Exact rational linear algebra over labeled bases.

mod comb;
mod echelon;
mod map;
mod scalar;
mod space;

pub use comb::{Comb, Vector};
pub use echelon::{quotient, solve, Echelon, Subspace};
pub use map::{tensor_map, LinMap};
pub use scalar::{format_scalar, int, parse_scalar, pow, ratio, Scalar};
pub use space::{tensor, BasedSpace, Label};
