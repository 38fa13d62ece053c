//! Kernels: Cauchy and Green kernels, the iterated family `G_k`, and the
//! spherical, periodic, plane-wave and complexified variants.

pub mod iterated;

pub use iterated::{
    cauchy_f64, cauchy_kernel, green_f64, green_kernel, iterated_family, iterated_kernel,
    kernel_constants, kernel_from_constants, x_power_poly, KernelFamily,
};
pub mod spherical;

pub use spherical::{
    gamma_operator, spherical_cauchy, spherical_cauchy_euclidean, spherical_dirac, spherical_green, spherical_laplacian, spherical_kernels, SphericalKernel,
};
pub mod periodic;

pub use periodic::{dilation_first_sum, dilation_kernel, periodic_kernel_cot, TruncatedSum, DEFAULT_RADIUS};
pub mod planewave;

pub use planewave::{laplace_planewave_identity, plane_wave, plane_wave_eval, projector_exact, PlaneWave, WaveSign};
pub mod complex;

pub use complex::{complex_kernel_eval, complex_kernel_eval_unnormalized};
