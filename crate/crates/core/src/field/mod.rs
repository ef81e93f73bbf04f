//! The function field of the plane in factored form, valuations along
//! curves, and cube classes on rational curves.

mod cube;
mod curve;
mod factored;
mod local;

pub use cube::{CubeClass, RationalSupport};
pub use curve::{gradients_parallel, Curve, Irreducibility, Meet, PlanePoint};
pub use factored::FactoredFn;
pub use local::{is_cube_in_k, is_cube_in_kp, is_cube_in_kx, residue_unit, residue_unit_in_chart};
