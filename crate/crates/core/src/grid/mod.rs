//! Extended-real-valued functions on finite uniform grids.

mod function;
pub mod io;
mod lattice;
mod norm;
mod pointset;
mod value;

pub use function::{distance_to_set, indicator, linear_minus_on_ball, GridFunction};
pub use lattice::{Axis, Grid, MAX_DIM};
pub use norm::NormKind;
pub use pointset::PointSet;
pub use value::{ExtendedValue, Tag};
