//! Nilpotent orbits of `n x n` matrices: rank conditions for orbit closures,
//! the embedding into the affine Grassmannian by stacked powers, the minor
//! filtration of the coordinate ring, and explicit orbit-closure equations.

pub mod equations;
pub mod filtration;
pub mod lusztig;
pub mod orbits;

pub use equations::{cutout_check, orbit_equation_spaces, CutoutReport, MinorSum};
pub use filtration::{conjecture_check, filtration_dimension, filtration_dimensions, ConjectureReport, Convention};
pub use lusztig::{lusztig_embed, LusztigMatrix};
pub use orbits::{jordan_matrix, orbit_membership, random_orbit_point, NilpotentPoint};
