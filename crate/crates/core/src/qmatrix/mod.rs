//! The level-`(m,n)` quantum matrix bialgebra: PBW normal forms, products,
//! tensor products, comultiplication, counit and the E-maps between levels.

mod level;
mod maps;
mod poly;
mod rewrite;
mod tensor;

pub use level::{ColumnWindow, Gen, Level, Word};
pub use maps::{
    comul, comul_factor, counit, counit_factor, level_project_e, projection_image, substitute,
    GenImage,
};
pub use poly::NCPoly;
pub use tensor::TensorPoly;

pub(crate) use poly::fmt_sum;

/// Normal form of `c * letters` at `level`.
pub fn normalize(
    level: Level,
    letters: &[Gen],
    c: crate::coeff::LaurentScalar,
) -> Result<NCPoly, crate::error::QgrError> {
    NCPoly::normalize(level, letters, c)
}

/// Normalized product of two polynomials at the same level.
pub fn nc_mul(x: &NCPoly, y: &NCPoly) -> Result<NCPoly, crate::error::QgrError> {
    x.nc_mul(y)
}

/// Componentwise product in a tensor product of level algebras.
pub fn tensor_mul(x: &TensorPoly, y: &TensorPoly) -> Result<TensorPoly, crate::error::QgrError> {
    x.tensor_mul(y)
}
