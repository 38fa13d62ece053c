//! Möbius transformations as Vahlen matrices, conformal weights and the
//! covariance of monogenic functions.

mod cayley;
mod covariance;
mod vahlen;

pub use cayley::{cayley, cayley_inverse, cayley_matrix, ck_on_sphere, SphereExtension};
pub use covariance::{
    change_of_variables_residual, change_of_variables_residual_with, image_sphere, kernel_covariance_residual,
    kernel_covariance_residual_with, pullback, pullback_k, Placement, Pullback, COVARIANT_PLACEMENT,
};
pub use vahlen::{parse_generators, ConformalWeight, Generator, VahlenMatrix, POLE_TOLERANCE};
