//! Exact scalars, small dense linear algebra, quaternions and octonions.

pub mod linalg;
pub mod oct;
pub mod quat;
pub mod rat;
pub mod sphere;

pub use linalg::{linalg_suite, LinalgSummary, MatQ, Subspace, VecQ};
pub use oct::{associator, Oct};
pub use quat::Quat;
pub use rat::{q, Rat};
pub use sphere::{im_sphere_point, sphere_point, sphere_point_n};
