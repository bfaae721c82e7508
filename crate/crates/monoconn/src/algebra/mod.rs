//! Small algebraic gadgets behind the colouring constructions: finite fields,
//! the affine planes they coordinatise, and Hamilton path decompositions of
//! even complete graphs.

pub mod field;
pub mod hamilton;
pub mod plane;

pub use field::{is_prime_power, FiniteField};
pub use hamilton::hamilton_path_decomposition;
pub use plane::AffinePlane;
