//! Quantum minors, the quantum determinant, the antipode, and the quotient
//! `k_q[SL_{m,n}]` by the central relation `D_full = 1`.

mod antipode;
mod checks;
mod minor;
mod quotient;

pub use antipode::{antipode, antipode_generator, AntipodeConvention};
pub use checks::{hopf_check, hopf_squares_check, phi_project, projection_compose_check};
pub use minor::{quantum_det, quantum_minor, MinorKey};
pub use quotient::{sl_equal, sl_ideal_membership, tensor_in_sl_ideal, tensor_sl_equal, SlElement};

pub(crate) use checks::word_poly;
