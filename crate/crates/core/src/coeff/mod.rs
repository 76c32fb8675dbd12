//! Exact coefficient arithmetic in `Q[q, q^-1]` and linear algebra over its
//! fraction field.

mod matrix;
mod poly;
mod scalar;

pub use matrix::ScalarMatrix;
pub use poly::{laurent_div_exact, laurent_gcd, laurent_lcm};
pub use scalar::LaurentScalar;
