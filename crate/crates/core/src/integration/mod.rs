//! Quadrature rules and the integral formulas built on them.

pub mod density;
pub mod formulas;
pub mod gauss;
pub mod holomorphic;
pub mod montecarlo;
pub mod plemelj;
pub mod rules;
pub mod spherical;

pub use density::BoundaryDensity;
pub use formulas::{
    cauchy_green_k, cauchy_integral, cauchy_integral_off_surface, cauchy_integral_right, cauchy_transform,
    greens_formula, harmonic_surface_mean, mean_value, surface_integral, Measure,
};
pub use spherical::{spherical_cauchy_formula, spherical_green_formula};
pub use plemelj::{hardy_split, plemelj_project, singular_cauchy, singular_cauchy_symmetric};
pub use holomorphic::holomorphic_extension;
pub use montecarlo::{monte_carlo_sphere, MonteCarloEstimate};
pub use gauss::{gauss_legendre, gauss_legendre_on};
pub use rules::{
    ball_rule, cap_boundary_rule, omega, rotated_unit_sphere_rule, sphere_rule, Node, QuadratureRule, Surface,
    DEFAULT_RESOLUTION,
};
